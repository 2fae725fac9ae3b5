// SPDX-License-Identifier: Apache-2.0

//! Naive reference implementations, written straight from the definitions
//! over `BTreeSet`s. Only conversions touch the library.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use bisoft::softset::{Context, SoftSet, Subset};
use bisoft::topology::SoftTopology;

pub type Set = BTreeSet<usize>;
/// One subset of `X` per parameter.
pub type Soft = Vec<Set>;
pub type Family = BTreeSet<Soft>;
pub type Classical = BTreeSet<Set>;

#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub n: usize,
    pub k: usize,
}

impl Shape {
    pub fn of(ctx: &Context) -> Self {
        Shape {
            n: ctx.points(),
            k: ctx.arity(),
        }
    }

    pub fn all(&self) -> Set {
        (0..self.n).collect()
    }

    pub fn null(&self) -> Soft {
        vec![Set::new(); self.k]
    }

    pub fn absolute(&self) -> Soft {
        vec![self.all(); self.k]
    }

    pub fn complement(&self, a: &Soft) -> Soft {
        a.iter().map(|r| self.all().difference(r).copied().collect()).collect()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if x != y {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

pub fn set_of(s: Subset) -> Set {
    s.iter().collect()
}

pub fn soft_of(s: &SoftSet) -> Soft {
    s.rows().map(set_of).collect()
}

pub fn family_of(t: &SoftTopology) -> Family {
    t.members().iter().map(soft_of).collect()
}

pub fn to_soft_set(ctx: &Arc<Context>, a: &Soft) -> SoftSet {
    ctx.soft_set(a.iter().map(|r| Subset::from_indices(r.iter().copied()))).unwrap()
}

pub fn union(a: &Soft, b: &Soft) -> Soft {
    a.iter().zip(b).map(|(x, y)| x.union(y).copied().collect()).collect()
}

pub fn inter(a: &Soft, b: &Soft) -> Soft {
    a.iter().zip(b).map(|(x, y)| x.intersection(y).copied().collect()).collect()
}

pub fn subset(a: &Soft, b: &Soft) -> bool {
    a.iter().zip(b).all(|(x, y)| x.is_subset(y))
}

pub fn is_null(a: &Soft) -> bool {
    a.iter().all(Set::is_empty)
}

/// `x` lies in every row.
pub fn member(x: usize, a: &Soft) -> bool {
    a.iter().all(|r| r.contains(&x))
}

/// `x` lies in no row.
pub fn outside(x: usize, a: &Soft) -> bool {
    a.iter().all(|r| !r.contains(&x))
}

pub fn is_topology(shape: Shape, t: &Family) -> bool {
    t.contains(&shape.null())
        && t.contains(&shape.absolute())
        && t.iter().all(|a| t.iter().all(|b| t.contains(&union(a, b)) && t.contains(&inter(a, b))))
}

pub fn generate(shape: Shape, subbasis: &[Soft]) -> Family {
    let mut t: Family = subbasis.iter().cloned().collect();
    t.insert(shape.null());
    t.insert(shape.absolute());
    loop {
        let mut next = t.clone();
        for a in &t {
            for b in &t {
                next.insert(union(a, b));
                next.insert(inter(a, b));
            }
        }
        if next.len() == t.len() {
            return t;
        }
        t = next;
    }
}

pub fn closure(shape: Shape, t: &Family, a: &Soft) -> Soft {
    t.iter()
        .map(|o| shape.complement(o))
        .filter(|c| subset(a, c))
        .fold(shape.absolute(), |acc, c| inter(&acc, &c))
}

pub fn separates(x: usize, y: usize, f: &Soft) -> bool {
    member(x, f) && !member(y, f)
}

pub fn soft_t0(shape: Shape, t: &Family) -> bool {
    shape
        .pairs()
        .iter()
        .all(|&(x, y)| t.iter().any(|f| separates(x, y, f) || separates(y, x, f)))
}

pub fn soft_t1(shape: Shape, t: &Family) -> bool {
    shape.pairs().iter().all(|&(x, y)| t.iter().any(|f| separates(x, y, f)))
}

pub fn soft_t2(shape: Shape, t: &Family) -> bool {
    pw_t2(shape, t, t)
}

pub fn pw_t0(shape: Shape, a: &Family, b: &Family) -> bool {
    shape
        .pairs()
        .iter()
        .all(|&(x, y)| a.iter().chain(b).any(|f| separates(x, y, f) || separates(y, x, f)))
}

pub fn pw_t0_strict(shape: Shape, a: &Family, b: &Family) -> bool {
    shape
        .pairs()
        .iter()
        .all(|&(x, y)| a.iter().any(|f| separates(x, y, f)) || b.iter().any(|g| separates(y, x, g)))
}

pub fn pw_t1(shape: Shape, a: &Family, b: &Family) -> bool {
    shape
        .pairs()
        .iter()
        .all(|&(x, y)| a.iter().any(|f| separates(x, y, f)) && b.iter().any(|g| separates(y, x, g)))
}

pub fn pw_t2(shape: Shape, a: &Family, b: &Family) -> bool {
    shape.pairs().iter().all(|&(x, y)| {
        a.iter()
            .any(|f| b.iter().any(|g| member(x, f) && member(y, g) && is_null(&inter(f, g))))
    })
}

pub fn strong_t0(shape: Shape, a: &Family, b: &Family) -> bool {
    let sep = |x, y, f: &Soft| member(x, f) && outside(y, f);
    shape
        .pairs()
        .iter()
        .all(|&(x, y)| a.iter().chain(b).any(|f| sep(x, y, f) || sep(y, x, f)))
}

pub fn strong_t1(shape: Shape, a: &Family, b: &Family) -> bool {
    let sep = |x, y, f: &Soft| member(x, f) && outside(y, f);
    shape
        .pairs()
        .iter()
        .all(|&(x, y)| a.iter().any(|f| sep(x, y, f)) && b.iter().any(|g| sep(y, x, g)))
}

pub fn hausdorff_char(shape: Shape, a: &Family, b: &Family) -> bool {
    shape.pairs().iter().all(|&(x, y)| {
        a.iter()
            .any(|f| member(x, f) && outside(y, &closure(shape, b, f)))
    })
}

pub fn point_closure(shape: Shape, a: &Family, b: &Family, x: usize) -> Soft {
    a.iter()
        .filter(|f| member(x, f))
        .fold(shape.absolute(), |acc, f| inter(&acc, &closure(shape, b, f)))
}

pub fn point(shape: Shape, x: usize) -> Soft {
    vec![std::iter::once(x).collect(); shape.k]
}

pub fn slice(t: &Family, e: usize) -> Classical {
    t.iter().map(|f| f[e].clone()).collect()
}

pub fn c_pw_t0(n: usize, p: &Classical, q: &Classical) -> bool {
    (0..n).all(|x| {
        (x + 1..n).all(|y| p.iter().chain(q).any(|u| u.contains(&x) != u.contains(&y)))
    })
}

pub fn c_pw_t1(n: usize, p: &Classical, q: &Classical) -> bool {
    (0..n).all(|x| {
        (0..n).filter(|&y| y != x).all(|y| {
            p.iter().any(|u| u.contains(&x) && !u.contains(&y))
                && q.iter().any(|v| v.contains(&y) && !v.contains(&x))
        })
    })
}

pub fn c_pw_t2(n: usize, p: &Classical, q: &Classical) -> bool {
    (0..n).all(|x| {
        (0..n).filter(|&y| y != x).all(|y| {
            p.iter().any(|u| {
                q.iter()
                    .any(|v| u.contains(&x) && v.contains(&y) && u.is_disjoint(v))
            })
        })
    })
}

pub fn c_interior(p: &Classical, a: &Set) -> Set {
    p.iter()
        .filter(|u| u.is_subset(a))
        .flat_map(|u| u.iter().copied())
        .collect()
}

pub fn c_closure(n: usize, p: &Classical, a: &Set) -> Set {
    let all: Set = (0..n).collect();
    p.iter()
        .map(|u| all.difference(u).copied().collect::<Set>())
        .filter(|c| a.is_subset(c))
        .fold(all.clone(), |acc, c| acc.intersection(&c).copied().collect())
}

pub fn lower(shape: Shape, a: &Family, b: &Family, f: &Soft) -> Soft {
    (0..shape.k)
        .map(|e| {
            let (p, q) = (slice(a, e), slice(b, e));
            c_interior(&p, &f[e])
                .intersection(&c_interior(&q, &f[e]))
                .copied()
                .collect()
        })
        .collect()
}

pub fn upper(shape: Shape, a: &Family, b: &Family, f: &Soft) -> Soft {
    (0..shape.k)
        .map(|e| {
            let (p, q) = (slice(a, e), slice(b, e));
            c_closure(shape.n, &p, &f[e])
                .union(&c_closure(shape.n, &q, &f[e]))
                .copied()
                .collect()
        })
        .collect()
}

/// Topologies on `n` points by testing every family of subsets.
pub fn topologies_by_families(n: usize) -> Vec<Classical> {
    assert!(n <= 4);
    let subsets: Vec<Set> = (0..1u32 << n)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    let all: Set = (0..n).collect();
    let mut out = Vec::new();
    for choice in 0u64..1 << subsets.len() {
        let fam: Classical = subsets
            .iter()
            .enumerate()
            .filter(|(i, _)| choice >> i & 1 == 1)
            .map(|(_, s)| s.clone())
            .collect();
        let ok = fam.contains(&Set::new())
            && fam.contains(&all)
            && fam.iter().all(|a| {
                fam.iter().all(|b| {
                    fam.contains(&a.union(b).copied().collect::<Set>())
                        && fam.contains(&a.intersection(b).copied().collect::<Set>())
                })
            });
        if ok {
            out.push(fam);
        }
    }
    out
}
