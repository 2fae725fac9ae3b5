// SPDX-License-Identifier: Apache-2.0

//! The registry of checkable claims.
//!
//! A claim is evaluated on a [`Candidate`]: a bi-soft space plus, for the
//! rough-approximation claims, one or two target soft sets. Evaluation
//! reports whether the claim's hypothesis applied and, if the claim is
//! refuted, a [`Witness`]. Claims marked [`Expect::Holds`] are theorems on
//! finite spaces; claims marked [`Expect::Refuted`] are converses that fail
//! and ship with a fixture that refutes them.

use std::cell::OnceCell;
use std::sync::Arc;

use indexmap::IndexMap;
use serde::Serialize;

use crate::bisoft::BiSoftSpace;
use crate::error::{Error, Result};
use crate::rough::Approximator;
use crate::separation::{self, Axiom, Orientation, Which};
use crate::softset::{Context, SoftSet, Subset};
use crate::topology::SoftTopology;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Candidate {
    pub space: BiSoftSpace,
    pub targets: Vec<SoftSet>,
}

impl Candidate {
    pub fn new(space: BiSoftSpace) -> Self {
        Candidate {
            space,
            targets: Vec::new(),
        }
    }

    pub fn with_targets(space: BiSoftSpace, targets: Vec<SoftSet>) -> Self {
        Candidate { space, targets }
    }
}

impl Serialize for Candidate {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            universe: &'a [String],
            parameters: &'a [String],
            first: &'a [SoftSet],
            second: &'a [SoftSet],
            #[serde(skip_serializing_if = "<[_]>::is_empty")]
            targets: &'a [SoftSet],
        }
        let ctx = self.space.context();
        View {
            universe: ctx.universe().names(),
            parameters: ctx.parameters().names(),
            first: self.space.first().members(),
            second: self.space.second().members(),
            targets: &self.targets,
        }
        .serialize(serializer)
    }
}

/// What a refutation looks like.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub detail: String,
    #[serde(skip_serializing_if = "IndexMap::is_empty")]
    pub sets: IndexMap<String, SoftSet>,
}

impl Witness {
    fn new(detail: impl Into<String>) -> Self {
        Witness {
            detail: detail.into(),
            sets: IndexMap::new(),
        }
    }

    fn set(mut self, label: &str, s: SoftSet) -> Self {
        self.sets.insert(label.to_owned(), s);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// The hypothesis did not apply.
    Vacuous,
    Holds,
    Violated(Witness),
}

impl Outcome {
    pub fn is_violated(&self) -> bool {
        matches!(self, Outcome::Violated(_))
    }

    pub fn witness(self) -> Option<Witness> {
        match self {
            Outcome::Violated(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expect {
    Holds,
    Refuted,
}

/// Nonempty proper subsets of a universe with their re-homed contexts.
#[derive(Debug, Clone)]
pub struct SubspaceTable {
    ctx: Arc<Context>,
    entries: Vec<(Subset, Arc<Context>)>,
}

impl SubspaceTable {
    pub fn new(ctx: &Arc<Context>) -> Self {
        let n = ctx.points();
        assert!(n <= 16, "subspace table over {n} points");
        let full = Subset::full(n);
        let entries = (1..full.bits())
            .map(Subset::from_bits)
            .map(|y| (y, ctx.restrict_universe(y).expect("nonempty subset")))
            .collect();
        SubspaceTable {
            ctx: ctx.clone(),
            entries,
        }
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn entries(&self) -> &[(Subset, Arc<Context>)] {
        &self.entries
    }
}

/// Lazily computed data shared by the claims evaluated on one candidate.
pub struct Eval<'a> {
    cand: &'a Candidate,
    table: Option<&'a SubspaceTable>,
    sup: OnceCell<SoftTopology>,
    subspaces: OnceCell<Vec<(Subset, BiSoftSpace)>>,
    approx: OnceCell<Approximator>,
}

impl<'a> Eval<'a> {
    pub fn new(cand: &'a Candidate, table: Option<&'a SubspaceTable>) -> Self {
        Eval {
            cand,
            table,
            sup: OnceCell::new(),
            subspaces: OnceCell::new(),
            approx: OnceCell::new(),
        }
    }

    fn s(&self) -> &BiSoftSpace {
        &self.cand.space
    }

    fn ctx(&self) -> &Arc<Context> {
        self.cand.space.context()
    }

    fn sup(&self) -> &SoftTopology {
        self.sup.get_or_init(|| self.s().sup())
    }

    fn subspaces(&self) -> &[(Subset, BiSoftSpace)] {
        self.subspaces.get_or_init(|| {
            let build = |table: &SubspaceTable| {
                table
                    .entries()
                    .iter()
                    .map(|(y, sub)| (*y, self.s().subspace_in(*y, sub)))
                    .collect()
            };
            match self.table {
                Some(t) if Context::same(self.ctx(), t.context()) => build(t),
                _ => build(&SubspaceTable::new(self.ctx())),
            }
        })
    }

    fn approx(&self) -> &Approximator {
        self.approx.get_or_init(|| Approximator::new(self.s()))
    }

    fn target(&self, i: usize) -> &SoftSet {
        &self.cand.targets[i]
    }

    fn name(&self, x: usize) -> &str {
        self.ctx().universe().name(x)
    }

    fn subset_names(&self, y: Subset) -> String {
        y.display(self.ctx().universe()).to_string()
    }

    /// The first unseparated pair, read off the definition.
    fn failure(&self, axiom: Axiom, s: &BiSoftSpace, sup: &SoftTopology) -> String {
        let n = s.context().points();
        let ordered = !matches!(
            axiom,
            Axiom::SoftT0(_) | Axiom::PairwiseT0(Orientation::Symmetric) | Axiom::StrongT0
        );
        let pair = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| if ordered { x != y } else { x < y })
            .find(|&(x, y)| axiom.pair_witness(s, sup, x, y).is_none());
        match pair {
            Some((x, y)) => format!(
                "{} fails at ({}, {})",
                axiom.label(),
                s.context().universe().name(x),
                s.context().universe().name(y)
            ),
            None => format!("{} fails", axiom.label()),
        }
    }

    fn fails(&self, axiom: Axiom) -> String {
        self.failure(axiom, self.s(), self.sup())
    }

    fn holds(&self, axiom: Axiom) -> bool {
        axiom.holds(self.s(), self.sup())
    }
}

pub type CheckFn = fn(&Eval<'_>) -> Outcome;

pub struct Claim {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub expect: Expect,
    /// Number of target soft sets the claim quantifies over.
    pub arity: usize,
    pub statement: &'static str,
    /// Fixture file stem of the shipped refutation, for refuted claims.
    pub fixture: Option<&'static str>,
    check: CheckFn,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("expect", &self.expect)
            .field("arity", &self.arity)
            .finish()
    }
}

impl Claim {
    pub fn evaluate(&self, eval: &Eval<'_>) -> Outcome {
        assert!(eval.cand.targets.len() >= self.arity, "{} needs {} targets", self.id, self.arity);
        (self.check)(eval)
    }

    pub fn evaluate_candidate(&self, cand: &Candidate) -> Outcome {
        self.evaluate(&Eval::new(cand, None))
    }

    pub fn matches(&self, id: &str) -> bool {
        self.id == id || self.aliases.contains(&id)
    }
}

fn imply(hypothesis: bool, violation: impl FnOnce() -> Option<Witness>) -> Outcome {
    if !hypothesis {
        return Outcome::Vacuous;
    }
    match violation() {
        None => Outcome::Holds,
        Some(w) => Outcome::Violated(w),
    }
}

fn when(fails: bool, witness: impl FnOnce() -> Witness) -> Option<Witness> {
    fails.then(witness)
}

const PW_T0: Axiom = Axiom::PairwiseT0(Orientation::Symmetric);

fn component_t0_implies_pairwise_t0(e: &Eval) -> Outcome {
    let hyp = e.holds(Axiom::SoftT0(Which::First)) || e.holds(Axiom::SoftT0(Which::Second));
    imply(hyp, || when(!e.holds(PW_T0), || Witness::new(e.fails(PW_T0))))
}

fn pairwise_t0_implies_sup_t0(e: &Eval) -> Outcome {
    let sup_t0 = Axiom::SoftT0(Which::Supremum);
    imply(e.holds(PW_T0), || {
        when(!e.holds(sup_t0), || Witness::new(e.fails(sup_t0)))
    })
}

fn pairwise_t1_implies_component_t1(e: &Eval) -> Outcome {
    imply(e.holds(Axiom::PairwiseT1), || {
        [Which::First, Which::Second]
            .into_iter()
            .map(Axiom::SoftT1)
            .find(|a| !e.holds(*a))
            .map(|a| Witness::new(e.fails(a)))
    })
}

fn component_t1_implies_pairwise_t1(e: &Eval) -> Outcome {
    let hyp = e.holds(Axiom::SoftT1(Which::First)) && e.holds(Axiom::SoftT1(Which::Second));
    imply(hyp, || {
        when(!e.holds(Axiom::PairwiseT1), || Witness::new(e.fails(Axiom::PairwiseT1)))
    })
}

fn pairwise_t1_implies_sup_t1(e: &Eval) -> Outcome {
    let sup_t1 = Axiom::SoftT1(Which::Supremum);
    imply(e.holds(Axiom::PairwiseT1), || {
        when(!e.holds(sup_t1), || Witness::new(e.fails(sup_t1)))
    })
}

fn pairwise_t2_implies_pairwise_t1(e: &Eval) -> Outcome {
    imply(e.holds(Axiom::PairwiseT2), || {
        when(!e.holds(Axiom::PairwiseT1), || Witness::new(e.fails(Axiom::PairwiseT1)))
    })
}

fn pairwise_t1_implies_pairwise_t0(e: &Eval) -> Outcome {
    imply(e.holds(Axiom::PairwiseT1), || {
        when(!e.holds(PW_T0), || Witness::new(e.fails(PW_T0)))
    })
}

fn pairwise_t2_implies_sup_t2(e: &Eval) -> Outcome {
    let sup_t2 = Axiom::SoftT2(Which::Supremum);
    imply(e.holds(Axiom::PairwiseT2), || {
        when(!e.holds(sup_t2), || Witness::new(e.fails(sup_t2)))
    })
}

/// The first parameter whose slice fails `test`.
fn failing_slice(e: &Eval, test: fn(&crate::bitopology::Bitopology) -> Option<(usize, usize)>) -> Option<Witness> {
    (0..e.ctx().arity()).find_map(|p| {
        let b = e.s().slice(p).expect("index in range");
        test(&b).map(|(x, y)| {
            Witness::new(format!(
                "slice at {} leaves ({}, {}) unseparated",
                e.ctx().parameters().name(p),
                e.name(x),
                e.name(y)
            ))
        })
    })
}

fn pairwise_t2_implies_slice_t2(e: &Eval) -> Outcome {
    imply(e.holds(Axiom::PairwiseT2), || failing_slice(e, |b| b.pw_t2_failure()))
}

fn strong_t0_implies_pairwise_and_slice_t0(e: &Eval) -> Outcome {
    imply(e.holds(Axiom::StrongT0), || {
        when(!e.holds(PW_T0), || Witness::new(e.fails(PW_T0)))
            .or_else(|| failing_slice(e, |b| b.pw_t0_failure()))
    })
}

fn strong_t1_implies_pairwise_and_slice_t1(e: &Eval) -> Outcome {
    imply(e.holds(Axiom::StrongT1), || {
        when(!e.holds(Axiom::PairwiseT1), || Witness::new(e.fails(Axiom::PairwiseT1)))
            .or_else(|| failing_slice(e, |b| b.pw_t1_failure()))
    })
}

fn hereditary(e: &Eval, axiom: Axiom) -> Outcome {
    imply(e.holds(axiom), || {
        e.subspaces().iter().find_map(|(y, sub)| {
            let sub_sup = sub.sup();
            (!axiom.holds(sub, &sub_sup)).then(|| {
                Witness::new(format!(
                    "on the subspace {}: {}",
                    e.subset_names(*y),
                    e.failure(axiom, sub, &sub_sup)
                ))
            })
        })
    })
}

fn hereditary_t0(e: &Eval) -> Outcome {
    hereditary(e, PW_T0)
}

fn hereditary_t1(e: &Eval) -> Outcome {
    hereditary(e, Axiom::PairwiseT1)
}

fn hereditary_t2(e: &Eval) -> Outcome {
    hereditary(e, Axiom::PairwiseT2)
}

fn closure_characterization(e: &Eval) -> Outcome {
    let t2 = e.holds(Axiom::PairwiseT2);
    let ch = separation::hausdorff_char(e.s());
    if t2 == ch {
        Outcome::Holds
    } else {
        Outcome::Violated(Witness::new(format!(
            "pairwise soft T2 is {t2} but the closure characterization is {ch}"
        )))
    }
}

fn pairwise_t2_point_closure(e: &Eval) -> Outcome {
    imply(e.holds(Axiom::PairwiseT2), || {
        (0..e.ctx().points()).find_map(|x| {
            let pc = separation::point_closure_intersection(e.s(), x);
            let point = e.ctx().point(x).expect("in range");
            (pc.set != point || pc.empty_family).then(|| {
                Witness::new(format!("closure intersection at {} is not the point", e.name(x)))
                    .set("intersection", pc.set)
                    .set("point", point)
            })
        })
    })
}

fn pairwise_t2_point_complement_open(e: &Eval) -> Outcome {
    imply(e.holds(Axiom::PairwiseT2), || {
        (0..e.ctx().points()).find_map(|x| {
            let co = e.ctx().point(x).expect("in range").complement();
            let missing: Vec<&str> = [("T1", e.s().first()), ("T2", e.s().second())]
                .into_iter()
                .filter(|(_, t)| !t.contains(&co))
                .map(|(n, _)| n)
                .collect();
            (!missing.is_empty()).then(|| {
                Witness::new(format!(
                    "complement of the point {} is not open in {}",
                    e.name(x),
                    missing.join(" and ")
                ))
                .set("complement", co)
            })
        })
    })
}

fn pairwise_t0_implies_component_t0(e: &Eval) -> Outcome {
    imply(e.holds(PW_T0), || {
        let (a, b) = (Axiom::SoftT0(Which::First), Axiom::SoftT0(Which::Second));
        when(!e.holds(a) && !e.holds(b), || {
            Witness::new(format!("{}; {}", e.fails(a), e.fails(b)))
        })
    })
}

fn sup_t0_implies_pairwise_t0(e: &Eval) -> Outcome {
    imply(e.holds(Axiom::SoftT0(Which::Supremum)), || {
        when(!e.holds(PW_T0), || Witness::new(e.fails(PW_T0)))
    })
}

fn pairwise_t0_implies_slice_t0(e: &Eval) -> Outcome {
    imply(e.holds(PW_T0), || failing_slice(e, |b| b.pw_t0_failure()))
}

fn sup_t1_implies_pairwise_t1(e: &Eval) -> Outcome {
    imply(e.holds(Axiom::SoftT1(Which::Supremum)), || {
        when(!e.holds(Axiom::PairwiseT1), || Witness::new(e.fails(Axiom::PairwiseT1)))
    })
}

fn pairwise_t1_implies_slice_t1(e: &Eval) -> Outcome {
    imply(e.holds(Axiom::PairwiseT1), || failing_slice(e, |b| b.pw_t1_failure()))
}

fn pairwise_t0_implies_pairwise_t1(e: &Eval) -> Outcome {
    imply(e.holds(PW_T0), || {
        when(!e.holds(Axiom::PairwiseT1), || Witness::new(e.fails(Axiom::PairwiseT1)))
    })
}

fn pairwise_t1_implies_pairwise_t2(e: &Eval) -> Outcome {
    imply(e.holds(Axiom::PairwiseT1), || {
        when(!e.holds(Axiom::PairwiseT2), || Witness::new(e.fails(Axiom::PairwiseT2)))
    })
}

fn sup_t2_implies_pairwise_t2(e: &Eval) -> Outcome {
    imply(e.holds(Axiom::SoftT2(Which::Supremum)), || {
        when(!e.holds(Axiom::PairwiseT2), || Witness::new(e.fails(Axiom::PairwiseT2)))
    })
}

fn lower(e: &Eval, a: &SoftSet) -> SoftSet {
    e.approx().lower(a).expect("shared context")
}

fn upper(e: &Eval, a: &SoftSet) -> SoftSet {
    e.approx().upper(a).expect("shared context")
}

fn rough_check(fails: bool, detail: &str, sets: Vec<(&str, SoftSet)>) -> Outcome {
    if fails {
        let w = sets
            .into_iter()
            .fold(Witness::new(detail), |w, (label, s)| w.set(label, s));
        Outcome::Violated(w)
    } else {
        Outcome::Holds
    }
}

fn rough_fixed_points(e: &Eval) -> Outcome {
    let ctx = e.ctx();
    let bad = [ctx.null(), ctx.absolute()]
        .into_iter()
        .find(|f| lower(e, f) != *f || upper(e, f) != *f);
    match bad {
        Some(f) => rough_check(true, "Phi or X is not fixed", vec![("set", f)]),
        None => Outcome::Holds,
    }
}

fn rough_inclusion(e: &Eval) -> Outcome {
    let a = e.target(0);
    let (lo, up) = (lower(e, a), upper(e, a));
    rough_check(
        !(lo.within(a) && a.within(&up)),
        "lower ⊑ a ⊑ upper fails",
        vec![("a", a.clone()), ("lower", lo), ("upper", up)],
    )
}

fn rough_meet_law(e: &Eval) -> Outcome {
    let (a, b) = (e.target(0), e.target(1));
    let left = lower(e, &a.meet(b));
    let right = lower(e, a).meet(&lower(e, b));
    rough_check(
        left != right,
        "lower(a ∩ b) differs from lower(a) ∩ lower(b)",
        vec![("a", a.clone()), ("b", b.clone()), ("left", left), ("right", right)],
    )
}

fn rough_lower_union_containment(e: &Eval) -> Outcome {
    let (a, b) = (e.target(0), e.target(1));
    let left = lower(e, a).join(&lower(e, b));
    let right = lower(e, &a.join(b));
    rough_check(
        !left.within(&right),
        "lower(a) ∪ lower(b) is not inside lower(a ∪ b)",
        vec![("a", a.clone()), ("b", b.clone()), ("left", left), ("right", right)],
    )
}

fn rough_upper_join_law(e: &Eval) -> Outcome {
    let (a, b) = (e.target(0), e.target(1));
    let left = upper(e, &a.join(b));
    let right = upper(e, a).join(&upper(e, b));
    rough_check(
        left != right,
        "upper(a ∪ b) differs from upper(a) ∪ upper(b)",
        vec![("a", a.clone()), ("b", b.clone()), ("left", left), ("right", right)],
    )
}

fn rough_upper_meet_containment(e: &Eval) -> Outcome {
    let (a, b) = (e.target(0), e.target(1));
    let left = upper(e, &a.meet(b));
    let right = upper(e, a).meet(&upper(e, b));
    rough_check(
        !left.within(&right),
        "upper(a ∩ b) is not inside upper(a) ∩ upper(b)",
        vec![("a", a.clone()), ("b", b.clone()), ("left", left), ("right", right)],
    )
}

/// Compares `a` with `a ∪ b`, which always contains it.
fn rough_monotone(e: &Eval) -> Outcome {
    let a = e.target(0);
    let b = a.join(e.target(1));
    let ok = lower(e, a).within(&lower(e, &b)) && upper(e, a).within(&upper(e, &b));
    rough_check(!ok, "approximations are not monotone", vec![("a", a.clone()), ("b", b)])
}

fn rough_duality(e: &Eval) -> Outcome {
    let a = e.target(0);
    let up = upper(e, a);
    let dual = lower(e, &a.complement()).complement();
    rough_check(
        up != dual,
        "upper(a) differs from the complement of lower(a^c)",
        vec![("a", a.clone()), ("upper", up), ("dual", dual)],
    )
}

fn rough_weak_idempotence(e: &Eval) -> Outcome {
    let a = e.target(0);
    let (lo, up) = (lower(e, a), upper(e, a));
    let (lo2, up2) = (lower(e, &lo), upper(e, &up));
    rough_check(
        !(lo2.within(&lo) && up.within(&up2)),
        "iterated approximations are not nested",
        vec![("a", a.clone()), ("lower", lo), ("lower∘lower", lo2), ("upper", up), ("upper∘upper", up2)],
    )
}

fn lower_idempotence_equality(e: &Eval) -> Outcome {
    let a = e.target(0);
    let lo = lower(e, a);
    let lo2 = lower(e, &lo);
    rough_check(
        lo != lo2,
        "lower(lower(a)) differs from lower(a)",
        vec![("a", a.clone()), ("lower", lo), ("lower∘lower", lo2)],
    )
}

fn upper_idempotence_equality(e: &Eval) -> Outcome {
    let a = e.target(0);
    let up = upper(e, a);
    let up2 = upper(e, &up);
    rough_check(
        up != up2,
        "upper(upper(a)) differs from upper(a)",
        vec![("a", a.clone()), ("upper", up), ("upper∘upper", up2)],
    )
}

macro_rules! claim {
    ($id:literal, [$($alias:literal),*], $expect:ident, $arity:literal, $fixture:expr, $check:ident, $statement:literal) => {
        Claim {
            id: $id,
            aliases: &[$($alias),*],
            expect: Expect::$expect,
            arity: $arity,
            statement: $statement,
            fixture: $fixture,
            check: $check,
        }
    };
}

static CLAIMS: &[Claim] = &[
    claim!("component-t0-implies-pairwise-t0", ["prop2"], Holds, 0, None, component_t0_implies_pairwise_t0,
        "soft T0 in either component implies pairwise soft T0"),
    claim!("pairwise-t0-implies-sup-t0", ["prop1"], Holds, 0, None, pairwise_t0_implies_sup_t0,
        "pairwise soft T0 implies the supremum topology is soft T0"),
    claim!("pairwise-t1-implies-component-t1", ["prop4-forward"], Holds, 0, None, pairwise_t1_implies_component_t1,
        "pairwise soft T1 implies both components are soft T1"),
    claim!("component-t1-implies-pairwise-t1", ["prop4-backward"], Holds, 0, None, component_t1_implies_pairwise_t1,
        "both components soft T1 implies pairwise soft T1"),
    claim!("pairwise-t1-implies-sup-t1", ["prop3"], Holds, 0, None, pairwise_t1_implies_sup_t1,
        "pairwise soft T1 implies the supremum topology is soft T1"),
    claim!("pairwise-t2-implies-pairwise-t1", ["prop5-t2-t1"], Holds, 0, None, pairwise_t2_implies_pairwise_t1,
        "pairwise soft T2 implies pairwise soft T1"),
    claim!("pairwise-t1-implies-pairwise-t0", ["prop5-t1-t0"], Holds, 0, None, pairwise_t1_implies_pairwise_t0,
        "pairwise soft T1 implies pairwise soft T0"),
    claim!("pairwise-t2-implies-sup-t2", [], Holds, 0, None, pairwise_t2_implies_sup_t2,
        "pairwise soft T2 implies the supremum topology is soft T2"),
    claim!("pairwise-t2-implies-slice-t2", ["t2-slice-propagation"], Holds, 0, None, pairwise_t2_implies_slice_t2,
        "pairwise soft T2 implies every parameter slice is pairwise T2"),
    claim!("strong-t0-implies-pairwise-and-slice-t0", ["strong-t0"], Holds, 0, None, strong_t0_implies_pairwise_and_slice_t0,
        "strong T0 implies pairwise soft T0 and pairwise T0 on every slice"),
    claim!("strong-t1-implies-pairwise-and-slice-t1", ["strong-t1"], Holds, 0, None, strong_t1_implies_pairwise_and_slice_t1,
        "strong T1 implies pairwise soft T1 and pairwise T1 on every slice"),
    claim!("hereditary-t0", [], Holds, 0, None, hereditary_t0,
        "pairwise soft T0 passes to every subspace"),
    claim!("hereditary-t1", [], Holds, 0, None, hereditary_t1,
        "pairwise soft T1 passes to every subspace"),
    claim!("hereditary-t2", [], Holds, 0, None, hereditary_t2,
        "pairwise soft T2 passes to every subspace"),
    claim!("closure-characterization", ["thm1"], Holds, 0, None, closure_characterization,
        "the closure characterization agrees with pairwise soft T2"),
    claim!("pairwise-t2-point-closure", ["cor1"], Holds, 0, None, pairwise_t2_point_closure,
        "in a pairwise soft T2 space the closures of the open sets around x intersect to (x,E)"),
    claim!("pairwise-t2-point-complement-open", ["cor2"], Holds, 0, None, pairwise_t2_point_complement_open,
        "in a pairwise soft T2 space (x,E)^c is open in both topologies"),
    claim!("pairwise-t0-implies-component-t0", ["components-t0-from-pairwise-t0"], Refuted, 0, Some("t0a"),
        pairwise_t0_implies_component_t0,
        "pairwise soft T0 implies some component is soft T0"),
    claim!("sup-t0-implies-pairwise-t0", ["pairwise-t0-from-sup-t0"], Refuted, 0, Some("t0b"), sup_t0_implies_pairwise_t0,
        "a soft T0 supremum implies pairwise soft T0"),
    claim!("pairwise-t0-implies-slice-t0", ["slice-t0-propagation"], Refuted, 0, Some("t0a"), pairwise_t0_implies_slice_t0,
        "pairwise soft T0 implies every slice is pairwise T0"),
    claim!("sup-t1-implies-pairwise-t1", ["pairwise-t1-from-sup-t1"], Refuted, 0, Some("t1b"), sup_t1_implies_pairwise_t1,
        "a soft T1 supremum implies pairwise soft T1"),
    claim!("pairwise-t1-implies-slice-t1", ["slice-t1-propagation"], Refuted, 0, Some("t1c"), pairwise_t1_implies_slice_t1,
        "pairwise soft T1 implies every slice is pairwise T1"),
    claim!("pairwise-t0-implies-pairwise-t1", ["pairwise-t1-from-t0"], Refuted, 0, Some("t0d"), pairwise_t0_implies_pairwise_t1,
        "pairwise soft T0 implies pairwise soft T1"),
    claim!("pairwise-t1-implies-pairwise-t2", ["pairwise-t2-from-t1"], Refuted, 0, Some("t1a"), pairwise_t1_implies_pairwise_t2,
        "pairwise soft T1 implies pairwise soft T2"),
    claim!("sup-t2-implies-pairwise-t2", ["pairwise-t2-from-sup-t2"], Refuted, 0, Some("t2a"), sup_t2_implies_pairwise_t2,
        "a soft T2 supremum implies pairwise soft T2"),
    claim!("rough-fixed-points", [], Holds, 0, None, rough_fixed_points,
        "Phi and X are fixed by both approximations"),
    claim!("rough-inclusion", [], Holds, 1, None, rough_inclusion,
        "lower(a) ⊑ a ⊑ upper(a)"),
    claim!("rough-meet-law", [], Holds, 2, None, rough_meet_law,
        "lower(a ∩ b) = lower(a) ∩ lower(b)"),
    claim!("rough-lower-union-containment", [], Holds, 2, None, rough_lower_union_containment,
        "lower(a) ∪ lower(b) ⊑ lower(a ∪ b)"),
    claim!("rough-upper-join-law", [], Holds, 2, None, rough_upper_join_law,
        "upper(a ∪ b) = upper(a) ∪ upper(b)"),
    claim!("rough-upper-meet-containment", [], Holds, 2, None, rough_upper_meet_containment,
        "upper(a ∩ b) ⊑ upper(a) ∩ upper(b)"),
    claim!("rough-monotone", [], Holds, 2, None, rough_monotone,
        "a ⊑ b implies lower(a) ⊑ lower(b) and upper(a) ⊑ upper(b)"),
    claim!("rough-duality", [], Holds, 1, None, rough_duality,
        "upper(a) = lower(a^c)^c"),
    claim!("rough-weak-idempotence", [], Holds, 1, None, rough_weak_idempotence,
        "lower(lower(a)) ⊑ lower(a) and upper(a) ⊑ upper(upper(a))"),
    claim!("lower-idempotence-equality", ["rough-item-11-equality"], Refuted, 1, None, lower_idempotence_equality,
        "lower(lower(a)) = lower(a)"),
    claim!("upper-idempotence-equality", ["rough-item-12-equality"], Refuted, 1, None, upper_idempotence_equality,
        "upper(upper(a)) = upper(a)"),
];

pub fn registry() -> &'static [Claim] {
    CLAIMS
}

pub fn lookup(id: &str) -> Result<&'static Claim> {
    CLAIMS
        .iter()
        .find(|c| c.matches(id))
        .ok_or_else(|| Error::UnknownClaim(id.to_owned()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_and_aliases_are_unique() {
        let mut names: Vec<&str> = CLAIMS
            .iter()
            .flat_map(|c| std::iter::once(c.id).chain(c.aliases.iter().copied()))
            .collect();
        let total = names.len();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), total);
    }

    #[test]
    fn lookup_by_alias() {
        assert_eq!(lookup("prop4-forward").unwrap().id, "pairwise-t1-implies-component-t1");
        assert_eq!(lookup("rough-item-11-equality").unwrap().id, "lower-idempotence-equality");
        assert!(matches!(lookup("nope"), Err(Error::UnknownClaim(_))));
    }

    #[test]
    fn refuted_bisoft_claims_name_a_fixture() {
        for c in CLAIMS.iter().filter(|c| c.expect == Expect::Refuted && c.arity == 0) {
            assert!(c.fixture.is_some(), "{}", c.id);
        }
    }

    #[test]
    fn idempotence_instance() {
        let ctx = Context::from_names(["a", "b", "c"], ["e"]).unwrap();
        let ab = ctx.constant(ctx.subset(["a", "b"]).unwrap()).unwrap();
        let b = ctx.constant(ctx.subset(["b"]).unwrap()).unwrap();
        let space = BiSoftSpace::new(
            SoftTopology::generate(&ctx, [ab.clone()]).unwrap(),
            SoftTopology::generate(&ctx, [b]).unwrap(),
        )
        .unwrap();
        let cand = Candidate::with_targets(space, vec![ab]);
        let outcome = lookup("lower-idempotence-equality").unwrap().evaluate_candidate(&cand);
        assert!(outcome.is_violated());
        assert!(!lookup("rough-weak-idempotence").unwrap().evaluate_candidate(&cand).is_violated());
    }
}
