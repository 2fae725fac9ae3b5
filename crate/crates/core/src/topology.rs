// SPDX-License-Identifier: Apache-2.0

//! Soft topologies and classical topologies on finite point sets.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::softset::{full_mask, Context, SoftSet, Subset};

/// Why a family of soft sets fails to be a soft topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingNull,
    MissingAbsolute,
    UnionNotClosed {
        left: SoftSet,
        right: SoftSet,
        result: SoftSet,
    },
    IntersectionNotClosed {
        left: SoftSet,
        right: SoftSet,
        result: SoftSet,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingNull => f.write_str("the null soft set Phi is missing"),
            Violation::MissingAbsolute => f.write_str("the absolute soft set X is missing"),
            Violation::UnionNotClosed {
                left,
                right,
                result,
            } => write!(f, "{left} ∪ {right} = {result} is not a member"),
            Violation::IntersectionNotClosed {
                left,
                right,
                result,
            } => write!(f, "{left} ∩ {right} = {result} is not a member"),
        }
    }
}

/// A soft topology: a duplicate-free family of soft sets containing `Φ` and
/// `X̃`, closed under union and intersection. Members are kept in canonical
/// order, so two topologies are equal exactly when their member sets are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SoftTopology {
    ctx: Arc<Context>,
    members: Vec<SoftSet>,
}

fn canonicalize(members: impl IntoIterator<Item = SoftSet>) -> Vec<SoftSet> {
    let mut members: Vec<SoftSet> = members.into_iter().collect();
    members.sort_unstable();
    members.dedup();
    members
}

impl SoftTopology {
    /// Checks the topology axioms. On the finite lattice of soft sets,
    /// closure under pairwise union already gives closure under arbitrary
    /// unions.
    pub fn validate<I>(ctx: &Arc<Context>, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = SoftSet>,
    {
        let members = canonicalize(members);
        if members.iter().any(|m| !Context::same(m.context(), ctx)) {
            return Err(Error::ContextMismatch);
        }
        let topology = SoftTopology {
            ctx: ctx.clone(),
            members,
        };
        match topology.first_violation() {
            None => Ok(topology),
            Some(v) => Err(Error::InvalidTopology(Box::new(v))),
        }
    }

    fn first_violation(&self) -> Option<Violation> {
        if !self.contains(&self.ctx.null()) {
            return Some(Violation::MissingNull);
        }
        if !self.contains(&self.ctx.absolute()) {
            return Some(Violation::MissingAbsolute);
        }
        for (i, a) in self.members.iter().enumerate() {
            for b in &self.members[i + 1..] {
                let u = a.join(b);
                if !self.contains(&u) {
                    return Some(Violation::UnionNotClosed {
                        left: a.clone(),
                        right: b.clone(),
                        result: u,
                    });
                }
                let n = a.meet(b);
                if !self.contains(&n) {
                    return Some(Violation::IntersectionNotClosed {
                        left: a.clone(),
                        right: b.clone(),
                        result: n,
                    });
                }
            }
        }
        None
    }

    /// The smallest soft topology containing `subbasis`: the closure of
    /// `subbasis ∪ {Φ, X̃}` under pairwise union and intersection.
    pub fn generate<I>(ctx: &Arc<Context>, subbasis: I) -> Result<Self>
    where
        I: IntoIterator<Item = SoftSet>,
    {
        let mut seen: HashSet<SoftSet> = HashSet::new();
        let mut members: Vec<SoftSet> = Vec::new();
        for s in [ctx.null(), ctx.absolute()].into_iter().chain(subbasis) {
            if !Context::same(s.context(), ctx) {
                return Err(Error::ContextMismatch);
            }
            if seen.insert(s.clone()) {
                members.push(s);
            }
        }
        // members[..done] are closed against each other
        let mut done = 0;
        while done < members.len() {
            let next = members[done].clone();
            for i in 0..=done {
                for candidate in [next.join(&members[i]), next.meet(&members[i])] {
                    if seen.insert(candidate.clone()) {
                        members.push(candidate);
                    }
                }
            }
            done += 1;
        }
        Ok(Self::from_members_unchecked(ctx.clone(), members))
    }

    pub(crate) fn from_members_unchecked(ctx: Arc<Context>, members: Vec<SoftSet>) -> Self {
        SoftTopology {
            ctx,
            members: canonicalize(members),
        }
    }

    /// `{Φ, X̃}`
    pub fn indiscrete(ctx: &Arc<Context>) -> Self {
        Self::from_members_unchecked(ctx.clone(), vec![ctx.null(), ctx.absolute()])
    }

    /// Every soft set over the context. Panics when `|X|·|E| > 24`.
    pub fn discrete(ctx: &Arc<Context>) -> Self {
        Self::from_members_unchecked(ctx.clone(), ctx.all_soft_sets().collect())
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn members(&self) -> &[SoftSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &SoftSet) -> bool {
        self.members.binary_search(s).is_ok()
    }

    /// Member-set inclusion.
    pub fn is_coarser_than(&self, other: &SoftTopology) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }

    /// The soft closed sets: complements of the members, canonically ordered.
    pub fn closed_sets(&self) -> Vec<SoftSet> {
        canonicalize(self.members.iter().map(SoftSet::complement))
    }

    /// The intersection of all closed supersets of `a`.
    pub fn closure(&self, a: &SoftSet) -> Result<SoftSet> {
        if !Context::same(a.context(), &self.ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(self.closure_unchecked(a))
    }

    pub(crate) fn closure_unchecked(&self, a: &SoftSet) -> SoftSet {
        self.members
            .iter()
            .map(SoftSet::complement)
            .filter(|c| a.within(c))
            .fold(self.ctx.absolute(), |acc, c| acc.meet(&c))
    }

    /// The soft relative topology on `y`, re-homed onto a context whose
    /// universe is `y`.
    pub fn relative(&self, y: Subset) -> Result<SoftTopology> {
        let sub = self.ctx.restrict_universe(y)?;
        Ok(self.relative_in(y, &sub))
    }

    /// [`SoftTopology::relative`] with a caller-supplied subspace context.
    pub(crate) fn relative_in(&self, y: Subset, sub: &Arc<Context>) -> SoftTopology {
        Self::from_members_unchecked(
            sub.clone(),
            self.members.iter().map(|m| m.rehome(y, sub)).collect(),
        )
    }

    /// The classical topology `{F(e) : F ∈ 𝒯}` on `X` at parameter index `e`.
    pub fn parameterize(&self, e: usize) -> Result<PointTopology> {
        if e >= self.ctx.arity() {
            return Err(Error::UnknownParameter(format!("#{e}")));
        }
        Ok(PointTopology::from_opens_unchecked(
            self.ctx.points(),
            self.members.iter().map(|m| m.get(e)).collect(),
        ))
    }

    pub fn parameterize_named(&self, parameter: &str) -> Result<PointTopology> {
        self.parameterize(self.ctx.parameter(parameter)?)
    }
}

/// A topology on the point set `{0, .., points-1}`, opens in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointTopology {
    points: usize,
    opens: Vec<Subset>,
}

impl PointTopology {
    pub fn new<I: IntoIterator<Item = Subset>>(points: usize, opens: I) -> Result<Self> {
        let t = Self::from_opens_unchecked(points, opens.into_iter().collect());
        let invalid = |reason: String| Error::InvalidPointTopology { points, reason };
        if points > crate::softset::MAX_UNIVERSE {
            return Err(invalid("too many points".into()));
        }
        if let Some(u) = t.opens.iter().find(|u| !u.fits(points)) {
            return Err(invalid(format!("open set {:#x} out of range", u.bits())));
        }
        if !t.is_open(Subset::EMPTY) {
            return Err(invalid("∅ is not open".into()));
        }
        if !t.is_open(Subset::full(points)) {
            return Err(invalid("the full set is not open".into()));
        }
        for (i, &a) in t.opens.iter().enumerate() {
            for &b in &t.opens[i + 1..] {
                if !t.is_open(a.union(b)) || !t.is_open(a.intersection(b)) {
                    return Err(invalid(format!(
                        "opens {:#x} and {:#x} are not closed under ∪/∩",
                        a.bits(),
                        b.bits()
                    )));
                }
            }
        }
        Ok(t)
    }

    pub(crate) fn from_opens_unchecked(points: usize, mut opens: Vec<Subset>) -> Self {
        opens.sort_unstable();
        opens.dedup();
        PointTopology { points, opens }
    }

    pub fn indiscrete(points: usize) -> Self {
        Self::from_opens_unchecked(points, vec![Subset::EMPTY, Subset::full(points)])
    }

    /// Every subset is open. Panics when `points > 20`.
    pub fn discrete(points: usize) -> Self {
        assert!(points <= 20);
        Self::from_opens_unchecked(points, (0..1u64 << points).map(Subset::from_bits).collect())
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens.is_empty()
    }

    pub fn is_open(&self, a: Subset) -> bool {
        self.opens.binary_search(&a).is_ok()
    }

    /// Complements of the opens, canonically ordered.
    pub fn closed_sets(&self) -> Vec<Subset> {
        let mut closed: Vec<Subset> = self.opens.iter().map(|u| u.complement(self.points)).collect();
        closed.sort_unstable();
        closed
    }

    /// The union of all opens inside `a`.
    pub fn interior(&self, a: Subset) -> Subset {
        self.opens
            .iter()
            .filter(|u| u.is_subset_of(a))
            .fold(Subset::EMPTY, |acc, &u| acc.union(u))
    }

    /// The intersection of all closed supersets of `a`.
    pub fn closure(&self, a: Subset) -> Subset {
        let full = Subset::from_bits(full_mask(self.points));
        self.opens
            .iter()
            .map(|u| u.complement(self.points))
            .filter(|c| a.is_subset_of(*c))
            .fold(full, |acc, c| acc.intersection(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx3() -> Arc<Context> {
        Context::from_names(["h1", "h2", "h3"], ["e1", "e2"]).unwrap()
    }

    fn ss(c: &Arc<Context>, e1: &[&str], e2: &[&str]) -> SoftSet {
        c.soft_set_named([("e1", e1.iter().copied()), ("e2", e2.iter().copied())])
            .unwrap()
    }

    fn bisoft1_second(c: &Arc<Context>) -> Vec<SoftSet> {
        vec![
            c.null(),
            c.absolute(),
            ss(c, &["h1"], &["h2"]),
            ss(c, &["h1", "h2"], &["h2"]),
            ss(c, &["h2"], &["h2"]),
            ss(c, &[], &["h2"]),
        ]
    }

    #[test]
    fn indiscrete_is_valid() {
        let c = ctx3();
        let t = SoftTopology::validate(&c, [c.null(), c.absolute()]).unwrap();
        assert_eq!(t, SoftTopology::indiscrete(&c));
        assert_eq!(SoftTopology::generate(&c, []).unwrap(), t);
    }

    #[test]
    fn removing_a_member_breaks_closure() {
        let c = ctx3();
        let mut members = bisoft1_second(&c);
        assert!(SoftTopology::validate(&c, members.clone()).is_ok());
        let g3 = ss(&c, &["h2"], &["h2"]);
        let mut without_g3 = members.clone();
        without_g3.retain(|m| *m != g3);
        assert!(SoftTopology::validate(&c, without_g3).is_ok());
        let g2 = ss(&c, &["h1", "h2"], &["h2"]);
        members.retain(|m| *m != g2);
        match SoftTopology::validate(&c, members) {
            Err(Error::InvalidTopology(v)) => match *v {
                Violation::UnionNotClosed { result, .. } => assert_eq!(result, g2),
                other => panic!("unexpected violation {other}"),
            },
            other => panic!("expected a violation, got {other:?}"),
        }
    }

    #[test]
    fn missing_null_and_absolute_are_reported() {
        let c = ctx3();
        let err = SoftTopology::validate(&c, [c.absolute()]).unwrap_err();
        assert!(matches!(err, Error::InvalidTopology(v) if *v == Violation::MissingNull));
        let err = SoftTopology::validate(&c, [c.null()]).unwrap_err();
        assert!(matches!(err, Error::InvalidTopology(v) if *v == Violation::MissingAbsolute));
    }

    #[test]
    fn discrete_generation_on_two_points() {
        let c = Context::from_names(["a", "b"], ["e"]).unwrap();
        let t = SoftTopology::generate(&c, c.all_soft_sets()).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t, SoftTopology::discrete(&c));
    }

    #[test]
    fn closed_sets_of_constant_topology() {
        let c = ctx3();
        let t = SoftTopology::validate(
            &c,
            [
                c.null(),
                c.absolute(),
                ss(&c, &["h3"], &["h3"]),
                ss(&c, &["h2"], &["h2"]),
                ss(&c, &["h2", "h3"], &["h2", "h3"]),
            ],
        )
        .unwrap();
        let closed = t.closed_sets();
        assert_eq!(closed.len(), t.len());
        let mut expected = vec![
            c.absolute(),
            c.null(),
            ss(&c, &["h1", "h2"], &["h1", "h2"]),
            ss(&c, &["h1", "h3"], &["h1", "h3"]),
            ss(&c, &["h1"], &["h1"]),
        ];
        expected.sort();
        assert_eq!(closed, expected);
        let f1 = ss(&c, &["h1"], &["h1"]);
        assert_eq!(t.closure(&f1).unwrap(), f1);
        assert_eq!(t.closure(&c.absolute()).unwrap(), c.absolute());
    }

    #[test]
    fn closure_in_indiscrete_is_everything() {
        let c = ctx3();
        let t = SoftTopology::indiscrete(&c);
        assert_eq!(t.closure(&ss(&c, &[], &["h2"])).unwrap(), c.absolute());
        assert_eq!(t.closure(&c.null()).unwrap(), c.null());
    }

    #[test]
    fn relative_topology_rehomes_universe() {
        let c = Context::from_names(["h1", "h2", "h3", "h4"], ["e1", "e2"]).unwrap();
        let t = SoftTopology::validate(
            &c,
            [
                c.null(),
                c.absolute(),
                ss(&c, &["h3", "h4"], &["h1", "h4"]),
                ss(&c, &["h2"], &["h2"]),
                ss(&c, &["h2", "h3", "h4"], &["h1", "h2", "h4"]),
            ],
        )
        .unwrap();
        let y = c.subset(["h1", "h2"]).unwrap();
        let r = t.relative(y).unwrap();
        let sub = r.context().clone();
        assert_eq!(sub.universe().names(), ["h1", "h2"]);
        let expected = SoftTopology::validate(
            &sub,
            [
                sub.null(),
                sub.absolute(),
                ss(&sub, &[], &["h1"]),
                ss(&sub, &["h2"], &["h2"]),
                ss(&sub, &["h2"], &["h1", "h2"]),
            ],
        )
        .unwrap();
        assert_eq!(r, expected);
        assert_eq!(t.relative(c.universe().full()).unwrap(), t);
        assert!(matches!(t.relative(Subset::EMPTY), Err(Error::Empty(_))));
    }

    #[test]
    fn parameterize_unknown_parameter() {
        let c = ctx3();
        let t = SoftTopology::indiscrete(&c);
        assert_eq!(t.parameterize(0).unwrap(), PointTopology::indiscrete(3));
        assert!(t.parameterize(2).is_err());
        assert!(t.parameterize_named("e9").is_err());
    }

    #[test]
    fn point_topology_validation() {
        assert!(PointTopology::new(2, [Subset::EMPTY, Subset::full(2)]).is_ok());
        assert!(PointTopology::new(2, [Subset::full(2)]).is_err());
        let bad = PointTopology::new(
            3,
            [
                Subset::EMPTY,
                Subset::full(3),
                Subset::from_indices([0]),
                Subset::from_indices([1]),
            ],
        );
        assert!(bad.is_err());
        assert!(PointTopology::new(2, [Subset::EMPTY, Subset::full(2), Subset::from_bits(8)]).is_err());
    }

    #[test]
    fn interior_and_closure_on_a_chain() {
        // {∅, X, {x2}, {x2,x4}, {x1,x2,x4}} on five points
        let p = PointTopology::new(
            5,
            [
                Subset::EMPTY,
                Subset::full(5),
                Subset::from_indices([1]),
                Subset::from_indices([1, 3]),
                Subset::from_indices([0, 1, 3]),
            ],
        )
        .unwrap();
        let a = Subset::from_indices([1, 3, 4]);
        assert_eq!(p.interior(a), Subset::from_indices([1, 3]));
        assert_eq!(p.interior(Subset::full(5)), Subset::full(5));
        assert_eq!(p.closure(a), Subset::full(5));
        assert_eq!(p.closure(Subset::from_indices([4])), Subset::from_indices([2, 4]));
    }
}
