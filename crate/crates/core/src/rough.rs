// SPDX-License-Identifier: Apache-2.0

//! Rough approximation of a soft set in a bi-soft space, computed one
//! parameter at a time on the two classical slices:
//!
//! ```text
//! lower(e) = int_𝒯1e F(e) ∩ int_𝒯2e F(e)
//! upper(e) =  cl_𝒯1e F(e) ∪  cl_𝒯2e F(e)
//! ```

use serde::Serialize;

use crate::bisoft::BiSoftSpace;
use crate::error::{Error, Result};
use crate::softset::{Context, SoftSet, Subset};
use crate::topology::PointTopology;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoughResult {
    pub lower: SoftSet,
    pub upper: SoftSet,
    pub pos: SoftSet,
    pub neg: SoftSet,
    pub bnd: SoftSet,
    pub definable: bool,
}

/// Holds the slices of a space so repeated queries skip re-parameterizing.
#[derive(Debug, Clone)]
pub struct Approximator {
    space: BiSoftSpace,
    slices: Vec<(PointTopology, PointTopology)>,
}

impl Approximator {
    pub fn new(space: &BiSoftSpace) -> Self {
        let slices = (0..space.context().arity())
            .map(|e| {
                (
                    space.first().parameterize(e).expect("index in range"),
                    space.second().parameterize(e).expect("index in range"),
                )
            })
            .collect();
        Approximator {
            space: space.clone(),
            slices,
        }
    }

    pub fn space(&self) -> &BiSoftSpace {
        &self.space
    }

    fn check(&self, a: &SoftSet) -> Result<()> {
        if Context::same(a.context(), self.space.context()) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn map_rows(&self, a: &SoftSet, f: impl Fn(&PointTopology, &PointTopology, Subset) -> Subset) -> SoftSet {
        let rows = a
            .rows()
            .zip(&self.slices)
            .map(|(row, (p, q))| f(p, q, row).bits())
            .collect();
        SoftSet::from_rows_unchecked(a.context().clone(), rows)
    }

    pub fn lower(&self, a: &SoftSet) -> Result<SoftSet> {
        self.check(a)?;
        Ok(self.map_rows(a, |p, q, r| p.interior(r).intersection(q.interior(r))))
    }

    pub fn upper(&self, a: &SoftSet) -> Result<SoftSet> {
        self.check(a)?;
        Ok(self.map_rows(a, |p, q, r| p.closure(r).union(q.closure(r))))
    }

    pub fn regions(&self, a: &SoftSet) -> Result<RoughResult> {
        let lower = self.lower(a)?;
        let upper = self.upper(a)?;
        Ok(RoughResult {
            pos: lower.clone(),
            neg: upper.complement(),
            bnd: upper.difference(&lower)?,
            definable: lower == upper,
            lower,
            upper,
        })
    }
}

pub fn lower_approx(space: &BiSoftSpace, a: &SoftSet) -> Result<SoftSet> {
    Approximator::new(space).lower(a)
}

pub fn upper_approx(space: &BiSoftSpace, a: &SoftSet) -> Result<SoftSet> {
    Approximator::new(space).upper(a)
}

pub fn rough_regions(space: &BiSoftSpace, a: &SoftSet) -> Result<RoughResult> {
    Approximator::new(space).regions(a)
}
