// SPDX-License-Identifier: Apache-2.0

//! Seeded random soft sets, soft topologies and bi-soft spaces.
//!
//! A random soft topology is generated from a random subbasis: its size is
//! uniform in `0..=4` and each member is a uniform random soft set. Every
//! draw comes from a ChaCha8 stream, so results depend only on the seed.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bisoft::BiSoftSpace;
use crate::softset::{full_mask, Context, SoftSet};
use crate::topology::SoftTopology;

pub const MAX_SUBBASIS: usize = 4;

/// The generator for sample `index` of a run seeded with `seed`. Samples use
/// disjoint ChaCha streams, so they can be drawn in any order.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn random_soft_set<R: Rng + ?Sized>(ctx: &Arc<Context>, rng: &mut R) -> SoftSet {
    let mask = full_mask(ctx.points());
    let rows = (0..ctx.arity()).map(|_| rng.gen::<u64>() & mask).collect();
    SoftSet::from_rows_unchecked(ctx.clone(), rows)
}

pub fn random_soft_topology_with<R: Rng + ?Sized>(ctx: &Arc<Context>, rng: &mut R) -> SoftTopology {
    let size = rng.gen_range(0..=MAX_SUBBASIS);
    let subbasis: Vec<SoftSet> = (0..size).map(|_| random_soft_set(ctx, rng)).collect();
    SoftTopology::generate(ctx, subbasis).expect("subbasis shares the context")
}

/// Deterministic in `(ctx, seed)`.
pub fn random_soft_topology(ctx: &Arc<Context>, seed: u64) -> SoftTopology {
    random_soft_topology_with(ctx, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Two independent draws, `𝒯1` first.
pub fn random_bisoft_space_with<R: Rng + ?Sized>(ctx: &Arc<Context>, rng: &mut R) -> BiSoftSpace {
    let first = random_soft_topology_with(ctx, rng);
    let second = random_soft_topology_with(ctx, rng);
    BiSoftSpace::new(first, second).expect("same context")
}

pub fn random_bisoft_space(ctx: &Arc<Context>, seed: u64) -> BiSoftSpace {
    random_bisoft_space_with(ctx, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let ctx = Context::anonymous(3, 2).unwrap();
        assert_eq!(random_soft_topology(&ctx, 7), random_soft_topology(&ctx, 7));
        assert_eq!(random_bisoft_space(&ctx, 9), random_bisoft_space(&ctx, 9));
        let a = sample_rng(1, 5).gen::<u64>();
        assert_eq!(a, sample_rng(1, 5).gen::<u64>());
        assert_ne!(a, sample_rng(1, 6).gen::<u64>());
    }

    #[test]
    fn draws_are_valid_and_sometimes_indiscrete() {
        let ctx = Context::anonymous(3, 2).unwrap();
        let mut indiscrete = 0;
        for seed in 0..1000 {
            let t = random_soft_topology(&ctx, seed);
            assert!(SoftTopology::validate(&ctx, t.members().to_vec()).is_ok());
            if t == SoftTopology::indiscrete(&ctx) {
                indiscrete += 1;
            }
        }
        assert!(indiscrete > 0);
    }

    #[test]
    fn soft_sets_fit_the_universe() {
        let ctx = Context::anonymous(3, 4).unwrap();
        let mut rng = sample_rng(3, 0);
        for _ in 0..100 {
            assert!(random_soft_set(&ctx, &mut rng).rows().all(|r| r.fits(3)));
        }
    }
}
