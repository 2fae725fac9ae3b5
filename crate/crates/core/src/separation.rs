// SPDX-License-Identifier: Apache-2.0

//! Soft and pairwise soft separation axioms.
//!
//! Membership is soft membership throughout: `x ∈ F` needs `x ∈ F(e)` for
//! every parameter, and `x ∉ F` only needs one parameter that misses `x`.
//! The strong variants replace `y ∉ F` by `y ∈ F^c`, i.e. `y` lies in no
//! row of `F`.
//!
//! The boolean checkers fold each topology into per-point masks once and
//! answer every pair from those. [`AxiomReport`] instead evaluates the
//! definitions pair by pair and can record witnesses.

use serde::Serialize;

use crate::bisoft::BiSoftSpace;
use crate::softset::{full_mask, SoftSet, Subset};
use crate::topology::SoftTopology;

/// How the pairwise soft T0 condition treats the order of a pair.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    /// Every unordered pair is separated by some member of either topology
    /// containing exactly one of the two points.
    #[default]
    Symmetric,
    /// Every ordered pair `(x, y)` has a `𝒯1` member with `x ∈ F`, `y ∉ F`
    /// or a `𝒯2` member with `y ∈ G`, `x ∉ G`.
    Strict,
}

/// `sep[x]`: the points `y` such that some member contains `x` but not `y`.
fn separations(t: &SoftTopology, strong: bool) -> Vec<u64> {
    let n = t.context().points();
    let mut sep = vec![0u64; n];
    for m in t.members() {
        let inside = m.soft_members();
        let outside = if strong {
            m.soft_non_members()
        } else {
            inside.complement(n)
        };
        for x in inside.iter() {
            sep[x] |= outside.bits();
        }
    }
    sep
}

/// `cover[x]`: the points `y` with some `F ∈ a`, `G ∈ b`, `x ∈ F`, `y ∈ G`
/// and `F ∩ G = Φ`.
fn disjoint_cover(a: &SoftTopology, b: &SoftTopology) -> Vec<u64> {
    let n = a.context().points();
    let mut cover = vec![0u64; n];
    let bs: Vec<(&SoftSet, Subset)> = b
        .members()
        .iter()
        .map(|g| (g, g.soft_members()))
        .filter(|(_, s)| !s.is_empty())
        .collect();
    for f in a.members() {
        let inside = f.soft_members();
        if inside.is_empty() {
            continue;
        }
        let reach = bs
            .iter()
            .filter(|(g, _)| f.is_disjoint_from(g))
            .fold(0u64, |acc, (_, s)| acc | s.bits());
        for x in inside.iter() {
            cover[x] |= reach;
        }
    }
    cover
}

/// Every `y ≠ x` is in `rel[x]`.
fn total(rel: &[u64]) -> bool {
    let full = full_mask(rel.len());
    rel.iter()
        .enumerate()
        .all(|(x, &r)| (r | 1 << x) & full == full)
}

fn pairs_unordered(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
}

fn pairs_ordered(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
}

fn has(rel: &[u64], x: usize, y: usize) -> bool {
    rel[x] >> y & 1 == 1
}

pub fn soft_t0(t: &SoftTopology) -> bool {
    let sep = separations(t, false);
    pairs_unordered(sep.len()).all(|(x, y)| has(&sep, x, y) || has(&sep, y, x))
}

pub fn soft_t1(t: &SoftTopology) -> bool {
    total(&separations(t, false))
}

pub fn soft_t2(t: &SoftTopology) -> bool {
    total(&disjoint_cover(t, t))
}

fn t0_with(s: &BiSoftSpace, orientation: Orientation, strong: bool) -> bool {
    let a = separations(s.first(), strong);
    let b = separations(s.second(), strong);
    let n = a.len();
    match orientation {
        Orientation::Symmetric => pairs_unordered(n).all(|(x, y)| {
            has(&a, x, y) || has(&b, x, y) || has(&a, y, x) || has(&b, y, x)
        }),
        Orientation::Strict => pairs_ordered(n).all(|(x, y)| has(&a, x, y) || has(&b, y, x)),
    }
}

fn t1_with(s: &BiSoftSpace, strong: bool) -> bool {
    let a = separations(s.first(), strong);
    let b = separations(s.second(), strong);
    pairs_ordered(a.len()).all(|(x, y)| has(&a, x, y) && has(&b, y, x))
}

/// Pairwise soft T0 under the symmetric reading.
pub fn pairwise_soft_t0(s: &BiSoftSpace) -> bool {
    t0_with(s, Orientation::Symmetric, false)
}

pub fn pairwise_soft_t0_oriented(s: &BiSoftSpace, orientation: Orientation) -> bool {
    t0_with(s, orientation, false)
}

pub fn pairwise_soft_t1(s: &BiSoftSpace) -> bool {
    t1_with(s, false)
}

pub fn pairwise_soft_t2(s: &BiSoftSpace) -> bool {
    total(&disjoint_cover(s.first(), s.second()))
}

pub fn strong_t0(s: &BiSoftSpace) -> bool {
    t0_with(s, Orientation::Symmetric, true)
}

pub fn strong_t1(s: &BiSoftSpace) -> bool {
    t1_with(s, true)
}

/// For every ordered pair `(x, y)` some `F ∈ 𝒯1` has `x ∈ F` and
/// `y ∈ X̃ − cl_𝒯2(F)`.
pub fn hausdorff_char(s: &BiSoftSpace) -> bool {
    let n = s.context().points();
    let mut reach = vec![0u64; n];
    for f in s.first().members() {
        let inside = f.soft_members();
        if inside.is_empty() {
            continue;
        }
        let away = s.second().closure_unchecked(f).soft_non_members();
        for x in inside.iter() {
            reach[x] |= away.bits();
        }
    }
    total(&reach)
}

/// The intersection of `cl_𝒯2(F)` over all `F ∈ 𝒯1` softly containing a
/// point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointClosure {
    pub set: SoftSet,
    /// No `𝒯1` member contains the point, so `set` is `X̃`. Never set for a
    /// valid topology, since `X̃` contains every point.
    pub empty_family: bool,
}

pub fn point_closure_intersection(s: &BiSoftSpace, x: usize) -> PointClosure {
    let ctx = s.context();
    let mut set = ctx.absolute();
    let mut empty_family = true;
    for f in s.first().members().iter().filter(|f| f.contains(x)) {
        empty_family = false;
        set = set.meet(&s.second().closure_unchecked(f));
    }
    PointClosure { set, empty_family }
}

/// Which soft topology of a space a single-topology axiom refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Which {
    First,
    Second,
    Supremum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "axiom", content = "of", rename_all = "kebab-case")]
pub enum Axiom {
    SoftT0(Which),
    SoftT1(Which),
    SoftT2(Which),
    PairwiseT0(Orientation),
    PairwiseT1,
    PairwiseT2,
    StrongT0,
    StrongT1,
    HausdorffChar,
}

impl Axiom {
    pub fn label(&self) -> String {
        let which = |w: &Which| match w {
            Which::First => "T1",
            Which::Second => "T2",
            Which::Supremum => "T1 v T2",
        };
        match self {
            Axiom::SoftT0(w) => format!("soft T0 ({})", which(w)),
            Axiom::SoftT1(w) => format!("soft T1 ({})", which(w)),
            Axiom::SoftT2(w) => format!("soft T2 ({})", which(w)),
            Axiom::PairwiseT0(Orientation::Symmetric) => "pairwise soft T0".into(),
            Axiom::PairwiseT0(Orientation::Strict) => "pairwise soft T0 (strict)".into(),
            Axiom::PairwiseT1 => "pairwise soft T1".into(),
            Axiom::PairwiseT2 => "pairwise soft T2".into(),
            Axiom::StrongT0 => "strong T0".into(),
            Axiom::StrongT1 => "strong T1".into(),
            Axiom::HausdorffChar => "closure characterization".into(),
        }
    }

    fn ordered(&self) -> bool {
        !matches!(
            self,
            Axiom::SoftT0(_) | Axiom::PairwiseT0(Orientation::Symmetric) | Axiom::StrongT0
        )
    }

    /// The fast checker.
    pub fn holds(&self, s: &BiSoftSpace, sup: &SoftTopology) -> bool {
        let pick = |w: &Which| match w {
            Which::First => s.first(),
            Which::Second => s.second(),
            Which::Supremum => sup,
        };
        match self {
            Axiom::SoftT0(w) => soft_t0(pick(w)),
            Axiom::SoftT1(w) => soft_t1(pick(w)),
            Axiom::SoftT2(w) => soft_t2(pick(w)),
            Axiom::PairwiseT0(o) => pairwise_soft_t0_oriented(s, *o),
            Axiom::PairwiseT1 => pairwise_soft_t1(s),
            Axiom::PairwiseT2 => pairwise_soft_t2(s),
            Axiom::StrongT0 => strong_t0(s),
            Axiom::StrongT1 => strong_t1(s),
            Axiom::HausdorffChar => hausdorff_char(s),
        }
    }

    /// Separating soft sets for one pair, read straight off the
    /// definition; `None` when the pair is not separated.
    pub fn pair_witness(
        &self,
        s: &BiSoftSpace,
        sup: &SoftTopology,
        x: usize,
        y: usize,
    ) -> Option<Vec<SoftSet>> {
        let split = |t: &SoftTopology, a: usize, b: usize| {
            t.members()
                .iter()
                .find(|f| f.contains(a) && !f.contains(b))
                .cloned()
        };
        let strong_split = |t: &SoftTopology, a: usize, b: usize| {
            t.members()
                .iter()
                .find(|f| f.contains(a) && f.complement().contains(b))
                .cloned()
        };
        let disjoint = |p: &SoftTopology, q: &SoftTopology| {
            p.members()
                .iter()
                .filter(|f| f.contains(x))
                .find_map(|f| {
                    q.members()
                        .iter()
                        .find(|g| g.contains(y) && f.meet(g).is_null())
                        .map(|g| vec![f.clone(), g.clone()])
                })
        };
        let pick = |w: &Which| match w {
            Which::First => s.first(),
            Which::Second => s.second(),
            Which::Supremum => sup,
        };
        match self {
            Axiom::SoftT0(w) => {
                let t = pick(w);
                split(t, x, y).or_else(|| split(t, y, x)).map(|f| vec![f])
            }
            Axiom::SoftT1(w) => split(pick(w), x, y).map(|f| vec![f]),
            Axiom::SoftT2(w) => disjoint(pick(w), pick(w)),
            Axiom::PairwiseT0(Orientation::Symmetric) => split(s.first(), x, y)
                .or_else(|| split(s.second(), y, x))
                .or_else(|| split(s.first(), y, x))
                .or_else(|| split(s.second(), x, y))
                .map(|f| vec![f]),
            Axiom::PairwiseT0(Orientation::Strict) => split(s.first(), x, y)
                .or_else(|| split(s.second(), y, x))
                .map(|f| vec![f]),
            Axiom::PairwiseT1 => Some(vec![split(s.first(), x, y)?, split(s.second(), y, x)?]),
            Axiom::PairwiseT2 => disjoint(s.first(), s.second()),
            Axiom::StrongT0 => strong_split(s.first(), x, y)
                .or_else(|| strong_split(s.second(), y, x))
                .or_else(|| strong_split(s.first(), y, x))
                .or_else(|| strong_split(s.second(), x, y))
                .map(|f| vec![f]),
            Axiom::StrongT1 => Some(vec![
                strong_split(s.first(), x, y)?,
                strong_split(s.second(), y, x)?,
            ]),
            Axiom::HausdorffChar => s
                .first()
                .members()
                .iter()
                .filter(|f| f.contains(x))
                .find(|f| {
                    s.second()
                        .closure_unchecked(f)
                        .complement()
                        .contains(y)
                })
                .map(|f| vec![f.clone()]),
        }
    }
}

/// A separated pair and the soft sets that separate it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub x: String,
    pub y: String,
    #[serde(skip)]
    pub points: (usize, usize),
    pub sets: Vec<SoftSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    #[serde(flatten)]
    pub axiom: Axiom,
    pub label: String,
    pub holds: bool,
    /// The first pair, in element order, that is not separated.
    pub failing_pair: Option<(String, String)>,
    #[serde(skip)]
    pub failing_points: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub separators: Vec<Separation>,
}

/// Per-parameter classical results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceCheck {
    pub parameter: String,
    pub pw_t0: bool,
    pub pw_t1: bool,
    pub pw_t2: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    pub orientation: Orientation,
    pub record_separators: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
    pub slices: Vec<SliceCheck>,
}

impl AxiomReport {
    pub fn axioms(orientation: Orientation) -> Vec<Axiom> {
        let mut axioms = Vec::new();
        for w in [Which::First, Which::Second, Which::Supremum] {
            axioms.extend([Axiom::SoftT0(w), Axiom::SoftT1(w), Axiom::SoftT2(w)]);
        }
        axioms.push(Axiom::PairwiseT0(Orientation::Symmetric));
        if orientation == Orientation::Strict {
            axioms.push(Axiom::PairwiseT0(Orientation::Strict));
        }
        axioms.extend([
            Axiom::PairwiseT1,
            Axiom::PairwiseT2,
            Axiom::StrongT0,
            Axiom::StrongT1,
            Axiom::HausdorffChar,
        ]);
        axioms
    }

    pub fn build(s: &BiSoftSpace, options: ReportOptions) -> AxiomReport {
        let sup = s.sup();
        let ctx = s.context();
        let n = ctx.points();
        let name = |i: usize| ctx.universe().name(i).to_owned();
        let checks = Self::axioms(options.orientation)
            .into_iter()
            .map(|axiom| {
                let pairs: Vec<(usize, usize)> = if axiom.ordered() {
                    pairs_ordered(n).collect()
                } else {
                    pairs_unordered(n).collect()
                };
                let mut separators = Vec::new();
                let mut failing_points = None;
                for (x, y) in pairs {
                    match axiom.pair_witness(s, &sup, x, y) {
                        Some(sets) if options.record_separators => separators.push(Separation {
                            x: name(x),
                            y: name(y),
                            points: (x, y),
                            sets,
                        }),
                        Some(_) => {}
                        None => {
                            failing_points = Some((x, y));
                            break;
                        }
                    }
                }
                if failing_points.is_some() {
                    separators.clear();
                }
                AxiomCheck {
                    axiom,
                    label: axiom.label(),
                    holds: failing_points.is_none(),
                    failing_pair: failing_points.map(|(x, y)| (name(x), name(y))),
                    failing_points,
                    separators,
                }
            })
            .collect();
        let slices = (0..ctx.arity())
            .map(|e| {
                let b = s.slice(e).expect("parameter index in range");
                SliceCheck {
                    parameter: ctx.parameters().name(e).to_owned(),
                    pw_t0: b.pw_t0(),
                    pw_t1: b.pw_t1(),
                    pw_t2: b.pw_t2(),
                }
            })
            .collect();
        AxiomReport { checks, slices }
    }

    pub fn get(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn holds(&self, axiom: Axiom) -> Option<bool> {
        self.get(axiom).map(|c| c.holds)
    }

    /// Re-checks every recorded witness against the definitions and the
    /// fast checkers. True when all of them agree.
    pub fn reverify(&self, s: &BiSoftSpace) -> bool {
        let sup = s.sup();
        self.checks.iter().all(|c| {
            let fast = c.axiom.holds(s, &sup) == c.holds;
            let failing = c
                .failing_points
                .map_or(true, |(x, y)| c.axiom.pair_witness(s, &sup, x, y).is_none());
            let seps = c.separators.iter().all(|sep| {
                let (x, y) = sep.points;
                separates(c.axiom, s, &sup, x, y, &sep.sets)
            });
            fast && failing && seps
        })
    }
}

/// Checks that `sets` witness the axiom for the pair `(x, y)`.
fn separates(
    axiom: Axiom,
    s: &BiSoftSpace,
    sup: &SoftTopology,
    x: usize,
    y: usize,
    sets: &[SoftSet],
) -> bool {
    let pick = |w: Which| match w {
        Which::First => s.first(),
        Which::Second => s.second(),
        Which::Supremum => sup,
    };
    let splits = |f: &SoftSet, a: usize, b: usize| f.contains(a) && !f.contains(b);
    let strong = |f: &SoftSet, a: usize, b: usize| f.contains(a) && f.complement().contains(b);
    match (axiom, sets) {
        (Axiom::SoftT0(w), [f]) => pick(w).contains(f) && (splits(f, x, y) || splits(f, y, x)),
        (Axiom::SoftT1(w), [f]) => pick(w).contains(f) && splits(f, x, y),
        (Axiom::SoftT2(w), [f, g]) => {
            pick(w).contains(f) && pick(w).contains(g) && f.contains(x) && g.contains(y) && f.meet(g).is_null()
        }
        (Axiom::PairwiseT0(o), [f]) => {
            let (t1, t2) = (s.first().contains(f), s.second().contains(f));
            let strict = (t1 && splits(f, x, y)) || (t2 && splits(f, y, x));
            match o {
                Orientation::Strict => strict,
                Orientation::Symmetric => strict || (t1 && splits(f, y, x)) || (t2 && splits(f, x, y)),
            }
        }
        (Axiom::PairwiseT1, [f, g]) => {
            s.first().contains(f) && s.second().contains(g) && splits(f, x, y) && splits(g, y, x)
        }
        (Axiom::PairwiseT2, [f, g]) => {
            s.first().contains(f)
                && s.second().contains(g)
                && f.contains(x)
                && g.contains(y)
                && f.meet(g).is_null()
        }
        (Axiom::StrongT0, [f]) => {
            let (t1, t2) = (s.first().contains(f), s.second().contains(f));
            (t1 || t2) && (strong(f, x, y) || strong(f, y, x))
        }
        (Axiom::StrongT1, [f, g]) => {
            s.first().contains(f) && s.second().contains(g) && strong(f, x, y) && strong(g, y, x)
        }
        (Axiom::HausdorffChar, [f]) => {
            s.first().contains(f)
                && f.contains(x)
                && s.second().closure_unchecked(f).complement().contains(y)
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::softset::Context;
    use std::sync::Arc;

    fn ss(c: &Arc<Context>, e1: &[&str], e2: &[&str]) -> SoftSet {
        c.soft_set_named([("e1", e1.iter().copied()), ("e2", e2.iter().copied())])
            .unwrap()
    }

    fn topo(c: &Arc<Context>, sets: Vec<SoftSet>) -> SoftTopology {
        SoftTopology::validate(c, [c.null(), c.absolute()].into_iter().chain(sets)).unwrap()
    }

    fn t0a() -> BiSoftSpace {
        let c = Context::from_names(["h1", "h2", "h3", "h4"], ["e1", "e2"]).unwrap();
        let t1 = topo(&c, vec![ss(&c, &["h1", "h3"], &["h3"])]);
        let t2 = topo(
            &c,
            vec![
                ss(&c, &["h3", "h4"], &["h1", "h4"]),
                ss(&c, &["h2"], &["h2"]),
                ss(&c, &["h2", "h3", "h4"], &["h1", "h2", "h4"]),
            ],
        );
        BiSoftSpace::new(t1, t2).unwrap()
    }

    fn discrete_pair(points: usize) -> BiSoftSpace {
        let c = Context::anonymous(points, 1).unwrap();
        BiSoftSpace::new(SoftTopology::discrete(&c), SoftTopology::discrete(&c)).unwrap()
    }

    #[test]
    fn weak_membership_space() {
        let s = t0a();
        assert!(!soft_t0(s.first()));
        assert!(!soft_t0(s.second()));
        assert!(pairwise_soft_t0(&s));
        assert!(!pairwise_soft_t0_oriented(&s, Orientation::Strict));
        assert!(!strong_t0(&s));
        assert!(soft_t0(&s.sup()));
    }

    #[test]
    fn discrete_pair_satisfies_everything() {
        let s = discrete_pair(3);
        assert!(pairwise_soft_t2(&s) && pairwise_soft_t1(&s) && pairwise_soft_t0(&s));
        assert!(strong_t0(&s) && strong_t1(&s) && hausdorff_char(&s));
        assert!(soft_t2(s.first()));
        for x in 0..3 {
            let pc = point_closure_intersection(&s, x);
            assert!(!pc.empty_family);
            assert_eq!(pc.set, s.context().point(x).unwrap());
        }
    }

    #[test]
    fn indiscrete_and_discrete() {
        let c = Context::anonymous(3, 2).unwrap();
        let i = SoftTopology::indiscrete(&c);
        let d = SoftTopology::generate(&c, (0..3).map(|x| c.point(x).unwrap())).unwrap();
        assert!(!soft_t0(&i) && !soft_t1(&i) && !soft_t2(&i));
        let s = BiSoftSpace::new(i, d).unwrap();
        assert!(pairwise_soft_t0(&s));
        assert!(strong_t0(&s));
        assert!(!pairwise_soft_t1(&s));
        let pc = point_closure_intersection(&s.swap(), 0);
        assert_eq!(pc.set, c.absolute());
        let lonely = point_closure_intersection(
            &BiSoftSpace::new(
                topo(&c, vec![c.point(1).unwrap()]),
                SoftTopology::indiscrete(&c),
            )
            .unwrap(),
            0,
        );
        assert!(!lonely.empty_family);
        assert_eq!(lonely.set, c.absolute());
    }

    #[test]
    fn report_matches_fast_checkers_and_reverifies() {
        for s in [t0a(), discrete_pair(2), t0a().swap()] {
            for orientation in [Orientation::Symmetric, Orientation::Strict] {
                let options = ReportOptions {
                    orientation,
                    record_separators: true,
                };
                let r = AxiomReport::build(&s, options);
                assert!(r.reverify(&s));
                let sup = s.sup();
                for c in &r.checks {
                    assert_eq!(c.holds, c.axiom.holds(&s, &sup), "{}", c.label);
                    assert_eq!(c.holds, c.failing_pair.is_none());
                }
            }
        }
    }

    #[test]
    fn report_names_first_failing_pair() {
        let s = t0a();
        let r = AxiomReport::build(&s, ReportOptions::default());
        let t0 = r.get(Axiom::SoftT0(Which::First)).unwrap();
        assert!(!t0.holds);
        assert_eq!(t0.failing_pair, Some(("h1".into(), "h2".into())));
        assert!(t0.separators.is_empty());
        assert_eq!(r.holds(Axiom::PairwiseT0(Orientation::Symmetric)), Some(true));
        assert_eq!(r.holds(Axiom::PairwiseT0(Orientation::Strict)), None);
        assert_eq!(r.slices.len(), 2);
        assert!(r.slices[0].pw_t0);
        assert!(!r.slices[1].pw_t0);
    }

    #[test]
    fn tampered_witness_fails_reverification() {
        let s = t0a();
        let mut r = AxiomReport::build(
            &s,
            ReportOptions {
                record_separators: true,
                ..Default::default()
            },
        );
        let check = r
            .checks
            .iter_mut()
            .find(|c| c.axiom == Axiom::PairwiseT0(Orientation::Symmetric))
            .unwrap();
        check.separators[0].sets = vec![s.context().null()];
        assert!(!r.reverify(&s));
    }
}
