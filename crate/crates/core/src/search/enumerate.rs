// SPDX-License-Identifier: Apache-2.0

//! Exhaustive enumeration of topologies on tiny point sets.
//!
//! A finite topology is the same thing as a preorder on its points (its
//! open sets are exactly the up-sets of the specialization preorder), so
//! the enumeration walks reflexive relations, keeps the transitive ones and
//! reads off their up-sets. Each topology is produced exactly once.
//!
//! Soft topologies over `(X, E)` come from the same list: a soft set is a
//! subset of `X × E`, unions and intersections act coordinatewise, so a
//! soft topology over `(X, E)` is exactly a topology on the `|X|·|E|`
//! points of `X × E`. Bit `e·|X| + x` of a product mask is the pair
//! `(x, e)`, see [`Context::soft_set_from_product_mask`].

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::softset::{Context, Subset};
use crate::topology::{PointTopology, SoftTopology};

/// Largest point set [`enumerate_topologies`] accepts.
pub const MAX_ENUMERATION_POINTS: usize = 4;

/// Every topology on `{0, .., n-1}`, sorted canonically.
pub fn enumerate_topologies(n: usize) -> Result<Vec<PointTopology>> {
    if n > MAX_ENUMERATION_POINTS {
        return Err(Error::SizeOverBound {
            what: "point set",
            size: n,
            max: MAX_ENUMERATION_POINTS,
        });
    }
    let off_diagonal: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for choice in 0u32..1 << off_diagonal.len() {
        // up[x]: points above x, x included
        let mut up: Vec<u64> = (0..n).map(|x| 1 << x).collect();
        for (k, &(x, y)) in off_diagonal.iter().enumerate() {
            if choice >> k & 1 == 1 {
                up[x] |= 1 << y;
            }
        }
        let transitive = (0..n).all(|x| {
            Subset::from_bits(up[x])
                .iter()
                .all(|y| up[y] & !up[x] == 0)
        });
        if !transitive {
            continue;
        }
        let opens = (0..1u64 << n)
            .filter(|&u| Subset::from_bits(u).iter().all(|x| up[x] & !u == 0))
            .map(Subset::from_bits)
            .collect();
        out.push(PointTopology::from_opens_unchecked(n, opens));
    }
    out.sort_unstable();
    Ok(out)
}

/// Every soft topology over `ctx`, in the order of [`enumerate_topologies`]
/// on `X × E`.
pub fn enumerate_soft_topologies(ctx: &Arc<Context>) -> Result<Vec<SoftTopology>> {
    let cells = ctx.points() * ctx.arity();
    if cells > MAX_ENUMERATION_POINTS {
        return Err(Error::SizeOverBound {
            what: "product X×E",
            size: cells,
            max: MAX_ENUMERATION_POINTS,
        });
    }
    Ok(enumerate_topologies(cells)?
        .into_iter()
        .map(|t| {
            let members = t
                .opens()
                .iter()
                .map(|u| ctx.soft_set_from_product_mask(u.bits()))
                .collect();
            SoftTopology::from_members_unchecked(ctx.clone(), members)
        })
        .collect())
}

/// The `(|X|, |E|)` shapes with `|X|·|E| ≤ max_cells`, smallest product
/// first.
pub fn exhaustive_shapes(max_cells: usize) -> Vec<(usize, usize)> {
    let mut shapes: Vec<(usize, usize)> = (1..=max_cells)
        .flat_map(|n| (1..=max_cells / n).map(move |k| (n, k)))
        .collect();
    shapes.sort_by_key(|&(n, k)| (n * k, n));
    shapes
}
