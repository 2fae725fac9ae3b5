// SPDX-License-Identifier: Apache-2.0

//! Bitopological spaces on finite point sets and their pairwise
//! separation axioms.
//!
//! `pw_t0` quantifies over unordered pairs and accepts either topology in
//! either orientation. `pw_t1` and `pw_t2` quantify over ordered pairs
//! `(x, y)`: for T1 a `P`-open set must contain `x` but not `y` and a
//! `Q`-open set must contain `y` but not `x`.

use crate::error::{Error, Result};
use crate::topology::PointTopology;

/// Two topologies on the same point set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bitopology {
    p: PointTopology,
    q: PointTopology,
}

impl Bitopology {
    pub fn new(p: PointTopology, q: PointTopology) -> Result<Self> {
        if p.points() != q.points() {
            return Err(Error::PointSetMismatch {
                left: p.points(),
                right: q.points(),
            });
        }
        Ok(Bitopology { p, q })
    }

    pub fn p(&self) -> &PointTopology {
        &self.p
    }

    pub fn q(&self) -> &PointTopology {
        &self.q
    }

    pub fn points(&self) -> usize {
        self.p.points()
    }

    pub fn swap(&self) -> Bitopology {
        Bitopology {
            p: self.q.clone(),
            q: self.p.clone(),
        }
    }

    fn ordered_pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.points();
        (0..n).flat_map(move |x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
    }

    fn separates(t: &PointTopology, x: usize, y: usize) -> bool {
        t.opens().iter().any(|u| u.contains(x) && !u.contains(y))
    }

    /// The first unordered pair `x < y` no open set of either topology
    /// separates.
    pub fn pw_t0_failure(&self) -> Option<(usize, usize)> {
        let n = self.points();
        (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| {
                let sep = |t: &PointTopology| Self::separates(t, x, y) || Self::separates(t, y, x);
                !sep(&self.p) && !sep(&self.q)
            })
    }

    pub fn pw_t0(&self) -> bool {
        self.pw_t0_failure().is_none()
    }

    pub fn pw_t1_failure(&self) -> Option<(usize, usize)> {
        self.ordered_pairs()
            .find(|&(x, y)| !(Self::separates(&self.p, x, y) && Self::separates(&self.q, y, x)))
    }

    pub fn pw_t1(&self) -> bool {
        self.pw_t1_failure().is_none()
    }

    pub fn pw_t2_failure(&self) -> Option<(usize, usize)> {
        self.ordered_pairs().find(|&(x, y)| {
            !self.p.opens().iter().filter(|u| u.contains(x)).any(|u| {
                self.q
                    .opens()
                    .iter()
                    .any(|v| v.contains(y) && u.intersection(*v).is_empty())
            })
        })
    }

    pub fn pw_t2(&self) -> bool {
        self.pw_t2_failure().is_none()
    }
}
