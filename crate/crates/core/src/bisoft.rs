// SPDX-License-Identifier: Apache-2.0

//! Bi-soft topological spaces: two soft topologies over one context.

use std::sync::Arc;

use crate::bitopology::Bitopology;
use crate::error::{Error, Result};
use crate::softset::{Context, Subset};
use crate::topology::SoftTopology;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiSoftSpace {
    first: SoftTopology,
    second: SoftTopology,
}

impl BiSoftSpace {
    pub fn new(first: SoftTopology, second: SoftTopology) -> Result<Self> {
        if !Context::same(first.context(), second.context()) {
            return Err(Error::ContextMismatch);
        }
        Ok(BiSoftSpace { first, second })
    }

    pub fn context(&self) -> &Arc<Context> {
        self.first.context()
    }

    /// `𝒯1`
    pub fn first(&self) -> &SoftTopology {
        &self.first
    }

    /// `𝒯2`
    pub fn second(&self) -> &SoftTopology {
        &self.second
    }

    pub fn swap(&self) -> BiSoftSpace {
        BiSoftSpace {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }

    /// `𝒯1 ∨ 𝒯2`, the smallest soft topology containing both. Not cached.
    pub fn sup(&self) -> SoftTopology {
        let ctx = self.context();
        SoftTopology::generate(
            ctx,
            self.first.members().iter().chain(self.second.members()).cloned(),
        )
        .expect("both topologies share the context")
    }

    /// The bitopological space `(X, 𝒯1e, 𝒯2e)` at parameter index `e`.
    pub fn slice(&self, e: usize) -> Result<Bitopology> {
        Bitopology::new(self.first.parameterize(e)?, self.second.parameterize(e)?)
    }

    pub fn slice_named(&self, parameter: &str) -> Result<Bitopology> {
        self.slice(self.context().parameter(parameter)?)
    }

    /// `(Y, 𝒯1Y, 𝒯2Y, E)`, re-homed onto the universe `y`.
    pub fn subspace(&self, y: Subset) -> Result<BiSoftSpace> {
        let sub = self.context().restrict_universe(y)?;
        Ok(self.subspace_in(y, &sub))
    }

    pub(crate) fn subspace_in(&self, y: Subset, sub: &Arc<Context>) -> BiSoftSpace {
        BiSoftSpace {
            first: self.first.relative_in(y, sub),
            second: self.second.relative_in(y, sub),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::softset::SoftSet;

    fn ss(c: &Arc<Context>, e1: &[&str], e2: &[&str]) -> SoftSet {
        c.soft_set_named([("e1", e1.iter().copied()), ("e2", e2.iter().copied())])
            .unwrap()
    }

    fn bisoft1() -> BiSoftSpace {
        let c = Context::from_names(["h1", "h2", "h3"], ["e1", "e2"]).unwrap();
        let t1 = SoftTopology::validate(
            &c,
            [
                c.null(),
                c.absolute(),
                ss(&c, &["h1"], &["h1", "h2"]),
                ss(&c, &["h1", "h3"], &["h1", "h2", "h3"]),
            ],
        )
        .unwrap();
        let t2 = SoftTopology::validate(
            &c,
            [
                c.null(),
                c.absolute(),
                ss(&c, &["h1"], &["h2"]),
                ss(&c, &["h1", "h2"], &["h2"]),
                ss(&c, &["h2"], &["h2"]),
                ss(&c, &[], &["h2"]),
            ],
        )
        .unwrap();
        BiSoftSpace::new(t1, t2).unwrap()
    }

    #[test]
    fn sup_contains_both_and_adds_one_union() {
        let s = bisoft1();
        let sup = s.sup();
        assert_eq!(sup.len(), 9);
        assert!(s.first().is_coarser_than(&sup));
        assert!(s.second().is_coarser_than(&sup));
        let c = s.context();
        assert!(sup.contains(&ss(c, &["h1", "h2"], &["h1", "h2"])));
    }

    #[test]
    fn sup_of_equal_topologies_is_itself() {
        let s = bisoft1();
        let same = BiSoftSpace::new(s.first().clone(), s.first().clone()).unwrap();
        assert_eq!(&same.sup(), s.first());
    }

    #[test]
    fn slices_and_swap() {
        let s = bisoft1();
        let b = s.slice_named("e2").unwrap();
        assert_eq!(b.q().len(), 3);
        assert_eq!(s.swap().slice(1).unwrap(), b.swap());
        assert!(s.slice(2).is_err());
    }

    #[test]
    fn subspace_of_whole_universe_is_identity() {
        let s = bisoft1();
        assert_eq!(s.subspace(s.context().universe().full()).unwrap(), s);
        let y = s.context().subset(["h1", "h2"]).unwrap();
        let sub = s.subspace(y).unwrap();
        assert_eq!(sub.context().points(), 2);
        assert!(SoftTopology::validate(sub.context(), sub.first().members().to_vec()).is_ok());
        assert!(SoftTopology::validate(sub.context(), sub.second().members().to_vec()).is_ok());
    }

    #[test]
    fn mismatched_contexts() {
        let a = Context::anonymous(2, 1).unwrap();
        let b = Context::anonymous(3, 1).unwrap();
        assert!(BiSoftSpace::new(SoftTopology::indiscrete(&a), SoftTopology::indiscrete(&b)).is_err());
    }
}
