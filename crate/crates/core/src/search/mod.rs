// SPDX-License-Identifier: Apache-2.0

//! Corpus scans and counterexample search.
//!
//! A scan walks an indexed sequence of candidates in parallel. Aggregation
//! always keeps the violation with the smallest index, so reports do not
//! depend on which worker finishes first.

pub mod claims;
pub mod enumerate;
pub mod random;

use std::sync::Arc;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bisoft::BiSoftSpace;
use crate::error::{Error, Result};
use crate::softset::{Context, SoftSet};
use crate::topology::SoftTopology;

pub use claims::{lookup, registry, Candidate, Claim, Eval, Expect, Outcome, SubspaceTable, Witness};
pub use enumerate::{enumerate_soft_topologies, enumerate_topologies, exhaustive_shapes, MAX_ENUMERATION_POINTS};
pub use random::{random_bisoft_space, random_soft_set, random_soft_topology, sample_rng};

/// Seed of the target soft sets attached to fixed and exhaustive corpora.
const TARGET_SEED: u64 = 0x7a7a_7a7a;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum Mode {
    Exhaustive,
    Random { count: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub max_x: usize,
    pub params: usize,
    pub mode: Mode,
    pub seed: u64,
    /// Vary the shape: `|X|` over `1..=max_x` and `|E|` over `1..=params`.
    /// Otherwise exhaustive mode walks `|X|` in `1..=max_x` at `|E| = params`
    /// and random mode draws at exactly `(max_x, params)`.
    pub vary_shape: bool,
}

impl SearchConfig {
    pub fn exhaustive(max_x: usize, params: usize) -> Self {
        SearchConfig {
            max_x,
            params,
            mode: Mode::Exhaustive,
            seed: 0,
            vary_shape: false,
        }
    }

    pub fn random(max_x: usize, params: usize, count: usize, seed: u64) -> Self {
        SearchConfig {
            max_x,
            params,
            mode: Mode::Random { count },
            seed,
            vary_shape: false,
        }
    }

    pub fn varying(mut self) -> Self {
        self.vary_shape = true;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_x == 0 || self.params == 0 {
            return Err(Error::Config("universe and parameter set must be nonempty".into()));
        }
        if self.max_x > 16 {
            return Err(Error::Config(format!("|X| = {} is above the search limit 16", self.max_x)));
        }
        if self.mode == Mode::Exhaustive && self.max_x * self.params > MAX_ENUMERATION_POINTS {
            return Err(Error::Config(format!(
                "exhaustive mode needs |X|·|E| ≤ {MAX_ENUMERATION_POINTS}, got {}·{}",
                self.max_x, self.params
            )));
        }
        Ok(())
    }

    fn shapes(&self) -> Vec<(usize, usize)> {
        let ks: Vec<usize> = if self.vary_shape {
            (1..=self.params).collect()
        } else {
            vec![self.params]
        };
        match self.mode {
            Mode::Exhaustive => (1..=self.max_x)
                .flat_map(|n| ks.iter().map(move |&k| (n, k)))
                .collect(),
            Mode::Random { .. } if self.vary_shape => (1..=self.max_x)
                .flat_map(|n| ks.iter().map(move |&k| (n, k)))
                .collect(),
            Mode::Random { .. } => vec![(self.max_x, self.params)],
        }
    }
}

/// The spaces a verification run is evaluated on.
#[derive(Debug, Clone)]
pub enum Corpus {
    Spaces(Vec<BiSoftSpace>),
    /// Every pair of soft topologies for every shape with `|X|·|E| ≤ max_cells`.
    Exhaustive { max_cells: usize },
    /// Seeded random spaces.
    Random(SearchConfig),
}

struct Shape {
    ctx: Arc<Context>,
    table: SubspaceTable,
    topologies: Vec<SoftTopology>,
}

impl Shape {
    fn new(n: usize, k: usize, enumerate: bool) -> Result<Self> {
        let ctx = Context::anonymous(n, k)?;
        let topologies = if enumerate {
            enumerate_soft_topologies(&ctx)?
        } else {
            Vec::new()
        };
        Ok(Shape {
            table: SubspaceTable::new(&ctx),
            ctx,
            topologies,
        })
    }

    fn pairs(&self) -> usize {
        self.topologies.len() * self.topologies.len()
    }
}

/// An indexed, randomly accessible candidate sequence.
enum Source {
    Fixed(Vec<BiSoftSpace>),
    Blocks(Vec<Shape>),
    Random {
        shapes: Vec<Shape>,
        count: usize,
        seed: u64,
    },
}

impl Source {
    fn from_corpus(corpus: &Corpus) -> Result<Self> {
        match corpus {
            Corpus::Spaces(spaces) => Ok(Source::Fixed(spaces.clone())),
            Corpus::Exhaustive { max_cells } => {
                if *max_cells > MAX_ENUMERATION_POINTS {
                    return Err(Error::SizeOverBound {
                        what: "product X×E",
                        size: *max_cells,
                        max: MAX_ENUMERATION_POINTS,
                    });
                }
                let shapes = exhaustive_shapes(*max_cells)
                    .into_iter()
                    .map(|(n, k)| Shape::new(n, k, true))
                    .collect::<Result<_>>()?;
                Ok(Source::Blocks(shapes))
            }
            Corpus::Random(config) => Self::from_config(config),
        }
    }

    fn from_config(config: &SearchConfig) -> Result<Self> {
        config.validate()?;
        let enumerate = config.mode == Mode::Exhaustive;
        let shapes = config
            .shapes()
            .into_iter()
            .map(|(n, k)| Shape::new(n, k, enumerate))
            .collect::<Result<Vec<_>>>()?;
        Ok(match config.mode {
            Mode::Exhaustive => Source::Blocks(shapes),
            Mode::Random { count } => Source::Random {
                shapes,
                count,
                seed: config.seed,
            },
        })
    }

    fn len(&self) -> usize {
        match self {
            Source::Fixed(v) => v.len(),
            Source::Blocks(shapes) => shapes.iter().map(Shape::pairs).sum(),
            Source::Random { count, .. } => *count,
        }
    }

    /// The space at `index`, its subspace table, and `extra` random target
    /// soft sets.
    fn get(&self, index: usize, extra: usize) -> (Candidate, Option<&SubspaceTable>) {
        match self {
            Source::Fixed(v) => {
                let space = v[index].clone();
                let targets = seeded_targets(space.context(), index, extra);
                (Candidate::with_targets(space, targets), None)
            }
            Source::Blocks(shapes) => {
                let mut i = index;
                for shape in shapes {
                    let p = shape.pairs();
                    if i < p {
                        let t = shape.topologies.len();
                        let space = BiSoftSpace::new(
                            shape.topologies[i / t].clone(),
                            shape.topologies[i % t].clone(),
                        )
                        .expect("one context per shape");
                        let targets = seeded_targets(&shape.ctx, index, extra);
                        return (Candidate::with_targets(space, targets), Some(&shape.table));
                    }
                    i -= p;
                }
                panic!("candidate index {index} out of range");
            }
            Source::Random { shapes, seed, .. } => {
                let mut rng = sample_rng(*seed, index as u64);
                let shape = &shapes[rng.gen_range(0..shapes.len())];
                let space = random::random_bisoft_space_with(&shape.ctx, &mut rng);
                let targets = (0..extra)
                    .map(|_| random_soft_set(&shape.ctx, &mut rng))
                    .collect();
                (Candidate::with_targets(space, targets), Some(&shape.table))
            }
        }
    }
}

fn seeded_targets(ctx: &Arc<Context>, index: usize, extra: usize) -> Vec<SoftSet> {
    if extra == 0 {
        return Vec::new();
    }
    let mut rng = sample_rng(TARGET_SEED, index as u64);
    (0..extra).map(|_| random_soft_set(ctx, &mut rng)).collect()
}

/// A refutation of a claim, carrying everything needed to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleRecord {
    pub claim: String,
    /// Position of the candidate in the scanned sequence.
    pub index: usize,
    pub candidate: Candidate,
    pub witness: Witness,
}

impl CounterexampleRecord {
    /// Re-evaluates the claim on the stored candidate. True when the claim
    /// is refuted again with the same witness.
    pub fn replay(&self) -> Result<bool> {
        let claim = lookup(&self.claim)?;
        Ok(claim.evaluate_candidate(&self.candidate).witness().as_ref() == Some(&self.witness))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimTally {
    pub claim: &'static str,
    pub expect: Expect,
    pub tested: usize,
    /// Candidates on which the hypothesis applied.
    pub applicable: usize,
    pub violations: usize,
    /// The violation with the smallest index.
    pub first: Option<CounterexampleRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub candidates: usize,
    pub tallies: Vec<ClaimTally>,
}

impl VerificationReport {
    /// No claim expected to hold was violated.
    pub fn is_clean(&self) -> bool {
        self.tallies
            .iter()
            .all(|t| t.expect == Expect::Refuted || t.violations == 0)
    }

    pub fn tally(&self, id: &str) -> Option<&ClaimTally> {
        let claim = lookup(id).ok()?;
        self.tallies.iter().find(|t| t.claim == claim.id)
    }
}

#[derive(Clone)]
struct Acc {
    applicable: Vec<usize>,
    violations: Vec<usize>,
    first: Vec<Option<(usize, Candidate, Witness)>>,
}

impl Acc {
    fn new(k: usize) -> Self {
        Acc {
            applicable: vec![0; k],
            violations: vec![0; k],
            first: vec![None; k],
        }
    }

    fn merge(mut self, other: Acc) -> Acc {
        for i in 0..self.applicable.len() {
            self.applicable[i] += other.applicable[i];
            self.violations[i] += other.violations[i];
            let keep_other = match (&self.first[i], &other.first[i]) {
                (None, Some(_)) => true,
                (Some((a, ..)), Some((b, ..))) => b < a,
                _ => false,
            };
            if keep_other {
                self.first[i] = other.first[i].clone();
            }
        }
        self
    }
}

/// Evaluates `claims` on every candidate of `corpus`. Claims with targets
/// get seeded random target soft sets.
pub fn verify(corpus: &Corpus, claims: &[&'static Claim]) -> Result<VerificationReport> {
    let source = Source::from_corpus(corpus)?;
    let extra = claims.iter().map(|c| c.arity).max().unwrap_or(0);
    let k = claims.len();
    let n = source.len();
    let acc = (0..n)
        .into_par_iter()
        .fold(
            || Acc::new(k),
            |mut acc, index| {
                let (cand, table) = source.get(index, extra);
                let eval = Eval::new(&cand, table);
                for (i, claim) in claims.iter().enumerate() {
                    match claim.evaluate(&eval) {
                        Outcome::Vacuous => {}
                        Outcome::Holds => acc.applicable[i] += 1,
                        Outcome::Violated(w) => {
                            acc.applicable[i] += 1;
                            acc.violations[i] += 1;
                            if acc.first[i].is_none() {
                                acc.first[i] = Some((index, cand.clone(), w));
                            }
                        }
                    }
                }
                acc
            },
        )
        .reduce(|| Acc::new(k), Acc::merge);
    let tallies = claims
        .iter()
        .enumerate()
        .map(|(i, claim)| ClaimTally {
            claim: claim.id,
            expect: claim.expect,
            tested: n,
            applicable: acc.applicable[i],
            violations: acc.violations[i],
            first: acc.first[i].clone().map(|(index, candidate, witness)| CounterexampleRecord {
                claim: claim.id.to_owned(),
                index,
                candidate,
                witness,
            }),
        })
        .collect();
    Ok(VerificationReport {
        candidates: n,
        tallies,
    })
}

/// Every registered claim expected to hold, checked over `corpus`.
pub fn verify_implications(corpus: &Corpus) -> Result<VerificationReport> {
    let claims: Vec<&'static Claim> = registry()
        .iter()
        .filter(|c| c.expect == Expect::Holds)
        .collect();
    verify(corpus, &claims)
}

/// Largest `arity·|X|·|E|` for which exhaustive mode enumerates every tuple
/// of target soft sets.
const MAX_TARGET_BITS: usize = 6;

/// The first candidate, in scan order, that refutes the claim.
pub fn find_counterexample(claim_id: &str, config: &SearchConfig) -> Result<Option<CounterexampleRecord>> {
    let claim = lookup(claim_id)?;
    let source = Source::from_config(config)?;
    if let (Source::Blocks(shapes), true) = (&source, claim.arity > 0) {
        let worst = shapes
            .iter()
            .map(|s| s.ctx.points() * s.ctx.arity())
            .max()
            .unwrap_or(0);
        if worst * claim.arity > MAX_TARGET_BITS {
            return Err(Error::Config(format!(
                "exhaustive search over {} target soft sets needs |X|·|E| ≤ {}",
                claim.arity,
                MAX_TARGET_BITS / claim.arity
            )));
        }
    }
    let found = (0..source.len()).into_par_iter().find_map_first(|index| {
        let (cand, table) = source.get(index, claim.arity);
        match &source {
            Source::Blocks(_) if claim.arity > 0 => {
                let ctx = cand.space.context().clone();
                let bits = ctx.points() * ctx.arity();
                let per = 1u64 << bits;
                (0..per.pow(claim.arity as u32)).find_map(|code| {
                    let targets = (0..claim.arity)
                        .map(|j| ctx.soft_set_from_product_mask(code / per.pow(j as u32) % per))
                        .collect();
                    let cand = Candidate::with_targets(cand.space.clone(), targets);
                    claim
                        .evaluate(&Eval::new(&cand, table))
                        .witness()
                        .map(|w| (cand, w))
                })
            }
            _ => claim
                .evaluate(&Eval::new(&cand, table))
                .witness()
                .map(|w| (cand, w)),
        }
        .map(|(candidate, witness)| CounterexampleRecord {
            claim: claim.id.to_owned(),
            index,
            candidate,
            witness,
        })
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_bounds() {
        assert!(SearchConfig::exhaustive(2, 2).validate().is_ok());
        assert!(matches!(SearchConfig::exhaustive(3, 2).validate(), Err(Error::Config(_))));
        assert!(SearchConfig::random(3, 2, 10, 1).validate().is_ok());
        assert!(SearchConfig::random(0, 2, 10, 1).validate().is_err());
    }

    #[test]
    fn exhaustive_source_size() {
        let source = Source::from_config(&SearchConfig::exhaustive(3, 1)).unwrap();
        assert_eq!(source.len(), 1 + 16 + 29 * 29);
        let (cand, table) = source.get(1 + 16 + 29 * 29 - 1, 0);
        assert_eq!(cand.space.context().points(), 3);
        assert!(table.is_some());
    }

    #[test]
    fn strongest_implication_is_not_refuted_on_small_shapes() {
        let r = find_counterexample("pairwise-t2-implies-pairwise-t1", &SearchConfig::exhaustive(2, 2)).unwrap();
        assert!(r.is_none());
    }

    #[test]
    fn idempotence_counterexample_replays() {
        let r = find_counterexample("lower-idempotence-equality", &SearchConfig::exhaustive(3, 1))
            .unwrap()
            .expect("refuted within three points");
        assert_eq!(r.candidate.space.context().points(), 3);
        assert!(r.replay().unwrap());
    }

    #[test]
    fn random_reports_are_deterministic() {
        let corpus = Corpus::Random(SearchConfig::random(3, 2, 64, 11));
        let a = verify_implications(&corpus).unwrap();
        let b = verify_implications(&corpus).unwrap();
        assert_eq!(a, b);
        assert!(a.is_clean());
    }

    #[test]
    fn exhaustive_rough_pairs_need_small_products() {
        let err = find_counterexample("rough-meet-law", &SearchConfig::exhaustive(2, 2)).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
        assert!(find_counterexample("rough-meet-law", &SearchConfig::exhaustive(3, 1))
            .unwrap()
            .is_none());
    }
}
