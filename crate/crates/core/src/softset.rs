// SPDX-License-Identifier: Apache-2.0

//! Soft sets over a fixed `(universe, parameters)` context.
//!
//! A soft set assigns a subset of the universe `X` to every parameter in
//! `E`. It is stored as one bitmask row per parameter, so a soft set is
//! also a subset of the product `X × E`; [`SoftSet::to_product_mask`] and
//! [`Context::soft_set_from_product_mask`] expose that correspondence.
//!
//! Soft membership is *not* pointwise: `x ∈ (F, E)` holds only when
//! `x ∈ F(e)` for every parameter `e`, and fails as soon as one row misses
//! `x`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::ser::{Serialize, SerializeMap, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest universe a [`Subset`] mask can address.
pub const MAX_UNIVERSE: usize = 64;

pub(crate) type Rows = SmallVec<[u64; 4]>;

fn check_names(kind: &'static str, names: &[String]) -> Result<()> {
    if names.is_empty() {
        return Err(Error::Empty(kind));
    }
    for (i, name) in names.iter().enumerate() {
        if names[..i].contains(name) {
            return Err(Error::DuplicateName {
                kind,
                name: name.clone(),
            });
        }
    }
    Ok(())
}

/// Ordered, duplicate-free element names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    names: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        check_names("element", &names)?;
        if names.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: names.len(),
                max: MAX_UNIVERSE,
            });
        }
        Ok(Self { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_owned()))
    }

    /// The whole universe as a subset.
    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }
}

/// Ordered, duplicate-free parameter names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParameterSet {
    names: Vec<String>,
}

impl ParameterSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        check_names("parameter", &names)?;
        Ok(Self { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownParameter(name.to_owned()))
    }
}

/// A subset of a universe of at most [`MAX_UNIVERSE`] elements, one bit per
/// element index.
///
/// Subsets order canonically: the bitstring read in element order, first
/// element most significant. `∅` is the smallest subset and the full set
/// the largest.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn full(size: usize) -> Self {
        Subset(full_mask(size))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Subset(indices.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn singleton(index: usize) -> Self {
        Subset(1 << index)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_UNIVERSE && self.0 >> index & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Complement relative to a universe of `size` elements.
    pub fn complement(self, size: usize) -> Subset {
        Subset(!self.0 & full_mask(size))
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn fits(self, size: usize) -> bool {
        self.0 & !full_mask(size) == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Packs the bits selected by `keep` into the low bits, preserving order.
    /// Used to re-index a subset onto a subspace universe.
    pub fn compress(self, keep: Subset) -> Subset {
        let mut out = 0u64;
        for (j, i) in keep.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << j;
            }
        }
        Subset(out)
    }

    pub(crate) fn canonical_key(self) -> u64 {
        self.0.reverse_bits()
    }

    pub fn display<'a>(&self, universe: &'a Universe) -> SubsetDisplay<'a> {
        SubsetDisplay {
            subset: *self,
            universe,
        }
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct SubsetDisplay<'a> {
    subset: Subset,
    universe: &'a Universe,
}

impl fmt::Display for SubsetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.subset.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str(self.universe.name(i))?;
        }
        f.write_str("}")
    }
}

pub(crate) fn full_mask(size: usize) -> u64 {
    if size >= 64 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    }
}

/// The `(X, E)` pair every soft set is defined over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Context {
    universe: Universe,
    parameters: ParameterSet,
}

impl Context {
    pub fn new(universe: Universe, parameters: ParameterSet) -> Arc<Self> {
        Arc::new(Self {
            universe,
            parameters,
        })
    }

    pub fn from_names<U, P, S, T>(elements: U, parameters: P) -> Result<Arc<Self>>
    where
        U: IntoIterator<Item = S>,
        P: IntoIterator<Item = T>,
        S: Into<String>,
        T: Into<String>,
    {
        Ok(Self::new(
            Universe::new(elements)?,
            ParameterSet::new(parameters)?,
        ))
    }

    /// A context with elements `x1..xn` and parameters `e1..ek`.
    pub fn anonymous(elements: usize, parameters: usize) -> Result<Arc<Self>> {
        Self::from_names(
            (1..=elements).map(|i| format!("x{i}")),
            (1..=parameters).map(|i| format!("e{i}")),
        )
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn parameters(&self) -> &ParameterSet {
        &self.parameters
    }

    /// `|X|`
    pub fn points(&self) -> usize {
        self.universe.len()
    }

    /// `|E|`
    pub fn arity(&self) -> usize {
        self.parameters.len()
    }

    pub fn element(&self, name: &str) -> Result<usize> {
        self.universe.index_of(name)
    }

    pub fn parameter(&self, name: &str) -> Result<usize> {
        self.parameters.index_of(name)
    }

    /// Resolves element names to a subset.
    pub fn subset<I, S>(&self, names: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        names.into_iter().try_fold(Subset::EMPTY, |acc, n| {
            Ok(acc.union(Subset::singleton(self.element(n.as_ref())?)))
        })
    }

    pub fn check_subset(&self, subset: Subset) -> Result<Subset> {
        if subset.fits(self.points()) {
            Ok(subset)
        } else {
            Err(Error::SubsetOutOfRange {
                mask: subset.bits(),
                size: self.points(),
            })
        }
    }

    pub fn same(a: &Arc<Context>, b: &Arc<Context>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }

    /// `Φ`: empty at every parameter.
    pub fn null(self: &Arc<Self>) -> SoftSet {
        SoftSet::from_rows_unchecked(self.clone(), std::iter::repeat(0).take(self.arity()).collect())
    }

    /// `X̃`: the whole universe at every parameter.
    pub fn absolute(self: &Arc<Self>) -> SoftSet {
        self.constant(self.universe.full())
            .expect("full universe fits its own context")
    }

    /// `(x, E)`: `{x}` at every parameter.
    pub fn point(self: &Arc<Self>, x: usize) -> Result<SoftSet> {
        if x >= self.points() {
            return Err(Error::UnknownElement(format!("#{x}")));
        }
        self.constant(Subset::singleton(x))
    }

    pub fn point_named(self: &Arc<Self>, name: &str) -> Result<SoftSet> {
        self.point(self.element(name)?)
    }

    /// `Ỹ`: `Y` at every parameter.
    pub fn constant(self: &Arc<Self>, y: Subset) -> Result<SoftSet> {
        let y = self.check_subset(y)?;
        Ok(SoftSet::from_rows_unchecked(
            self.clone(),
            std::iter::repeat(y.bits()).take(self.arity()).collect(),
        ))
    }

    /// Builds a soft set from one subset per parameter, in parameter order.
    pub fn soft_set<I: IntoIterator<Item = Subset>>(self: &Arc<Self>, rows: I) -> Result<SoftSet> {
        let rows: Rows = rows
            .into_iter()
            .map(|s| self.check_subset(s).map(Subset::bits))
            .collect::<Result<_>>()?;
        if rows.len() != self.arity() {
            return Err(Error::Fixture(format!(
                "soft set has {} rows, context has {} parameters",
                rows.len(),
                self.arity()
            )));
        }
        Ok(SoftSet::from_rows_unchecked(self.clone(), rows))
    }

    /// Builds a soft set from `(parameter name, element names)` rows.
    /// Parameters that are not mentioned map to `∅`.
    pub fn soft_set_named<'a, I, J>(self: &Arc<Self>, rows: I) -> Result<SoftSet>
    where
        I: IntoIterator<Item = (&'a str, J)>,
        J: IntoIterator<Item = &'a str>,
    {
        let rows = rows
            .into_iter()
            .map(|(p, elems)| Ok((p, self.subset(elems)?)))
            .collect::<Result<Vec<_>>>()?;
        self.extend_parameters(rows)
    }

    /// Extends a soft set defined on `A ⊆ E` to all of `E`, assigning `∅` to
    /// every parameter outside `A`.
    pub fn extend_parameters<'a, I>(self: &Arc<Self>, partial: I) -> Result<SoftSet>
    where
        I: IntoIterator<Item = (&'a str, Subset)>,
    {
        let mut rows: Rows = std::iter::repeat(0).take(self.arity()).collect();
        for (name, subset) in partial {
            let e = self.parameter(name)?;
            rows[e] = self.check_subset(subset)?.bits();
        }
        Ok(SoftSet::from_rows_unchecked(self.clone(), rows))
    }

    /// Reads a subset of `X × E` as a soft set. Bit `e·|X| + x` of `mask` is
    /// the pair `(x, e)`.
    pub fn soft_set_from_product_mask(self: &Arc<Self>, mask: u64) -> SoftSet {
        let n = self.points();
        let row_mask = full_mask(n);
        let rows = (0..self.arity())
            .map(|e| (mask >> (e * n)) & row_mask)
            .collect();
        SoftSet::from_rows_unchecked(self.clone(), rows)
    }

    /// The context over the sub-universe `y`, keeping element order.
    pub fn restrict_universe(&self, y: Subset) -> Result<Arc<Context>> {
        let y = self.check_subset(y)?;
        if y.is_empty() {
            return Err(Error::Empty("subspace"));
        }
        let names = y.iter().map(|i| self.universe.name(i).to_owned());
        Ok(Context::new(Universe::new(names)?, self.parameters.clone()))
    }

    /// Enumerates every soft set over the context. Only sensible for tiny
    /// products; panics if `|X|·|E| > 24`.
    pub fn all_soft_sets(self: &Arc<Self>) -> impl Iterator<Item = SoftSet> + '_ {
        let bits = self.points() * self.arity();
        assert!(bits <= 24, "2^{bits} soft sets is too many to enumerate");
        (0..1u64 << bits).map(move |m| self.soft_set_from_product_mask(m))
    }
}

/// A total map from parameters to subsets of the universe.
///
/// Equality is table equality within one context. Ordering is the
/// canonical order: rows compared in parameter order, each row by
/// [`Subset`]'s canonical order. Comparing soft sets from different
/// contexts through `Ord` is meaningless.
#[derive(Clone)]
pub struct SoftSet {
    ctx: Arc<Context>,
    rows: Rows,
}

impl SoftSet {
    pub(crate) fn from_rows_unchecked(ctx: Arc<Context>, rows: Rows) -> Self {
        debug_assert_eq!(rows.len(), ctx.arity());
        SoftSet { ctx, rows }
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    /// `F(e)` for the parameter at index `e`.
    pub fn get(&self, e: usize) -> Subset {
        Subset(self.rows[e])
    }

    pub fn get_named(&self, parameter: &str) -> Result<Subset> {
        Ok(self.get(self.ctx.parameter(parameter)?))
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = Subset> + '_ {
        self.rows.iter().map(|&r| Subset(r))
    }


    fn check(&self, other: &SoftSet) -> Result<()> {
        if Context::same(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn zip_with(&self, other: &SoftSet, f: impl Fn(u64, u64) -> u64) -> SoftSet {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(&a, &b)| f(a, b))
            .collect();
        SoftSet::from_rows_unchecked(self.ctx.clone(), rows)
    }

    pub(crate) fn join(&self, other: &SoftSet) -> SoftSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub(crate) fn meet(&self, other: &SoftSet) -> SoftSet {
        self.zip_with(other, |a, b| a & b)
    }

    /// `H(e) = F(e) ∪ G(e)`
    pub fn union(&self, other: &SoftSet) -> Result<SoftSet> {
        self.check(other)?;
        Ok(self.join(other))
    }

    /// `H(e) = F(e) ∩ G(e)`
    pub fn intersection(&self, other: &SoftSet) -> Result<SoftSet> {
        self.check(other)?;
        Ok(self.meet(other))
    }

    /// `H(e) = F(e) − G(e)`
    pub fn difference(&self, other: &SoftSet) -> Result<SoftSet> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a & !b))
    }

    /// `F^c(e) = X − F(e)`
    pub fn complement(&self) -> SoftSet {
        let full = full_mask(self.ctx.points());
        let rows = self.rows.iter().map(|&r| !r & full).collect();
        SoftSet::from_rows_unchecked(self.ctx.clone(), rows)
    }

    pub(crate) fn within(&self, other: &SoftSet) -> bool {
        self.rows.iter().zip(&other.rows).all(|(&a, &b)| a & !b == 0)
    }

    /// Soft subset: `F(e) ⊆ G(e)` for every parameter.
    pub fn is_subset_of(&self, other: &SoftSet) -> Result<bool> {
        self.check(other)?;
        Ok(self.within(other))
    }

    pub(crate) fn is_disjoint_from(&self, other: &SoftSet) -> bool {
        self.rows.iter().zip(&other.rows).all(|(&a, &b)| a & b == 0)
    }

    pub fn is_null(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn is_absolute(&self) -> bool {
        let full = full_mask(self.ctx.points());
        self.rows.iter().all(|&r| r == full)
    }

    /// The elements that softly belong to this set, i.e. lie in every row.
    pub fn soft_members(&self) -> Subset {
        Subset(
            self.rows
                .iter()
                .fold(full_mask(self.ctx.points()), |acc, &r| acc & r),
        )
    }

    /// The elements missing from every row: the soft members of the
    /// complement.
    pub fn soft_non_members(&self) -> Subset {
        self.complement().soft_members()
    }

    /// Soft membership `x ∈ (F, E)`: `x ∈ F(e)` for every `e`. Its negation
    /// only needs one parameter where `x` is missing.
    pub fn contains(&self, x: usize) -> bool {
        self.soft_members().contains(x)
    }

    pub fn contains_named(&self, element: &str) -> Result<bool> {
        Ok(self.contains(self.ctx.element(element)?))
    }

    /// `(^Y F)(e) = Y ∩ F(e)`, still over the original universe.
    pub fn restrict(&self, y: Subset) -> SoftSet {
        let y = y.bits() & full_mask(self.ctx.points());
        let rows = self.rows.iter().map(|&r| r & y).collect();
        SoftSet::from_rows_unchecked(self.ctx.clone(), rows)
    }

    /// Restricts to `y` and re-indexes onto `sub`, a context whose universe
    /// is `y`.
    pub(crate) fn rehome(&self, y: Subset, sub: &Arc<Context>) -> SoftSet {
        let rows = self
            .rows
            .iter()
            .map(|&r| Subset(r).compress(y).bits())
            .collect();
        SoftSet::from_rows_unchecked(sub.clone(), rows)
    }

    /// The soft set as a subset of `X × E` (bit `e·|X| + x`), when the
    /// product fits in 64 bits.
    pub fn to_product_mask(&self) -> Option<u64> {
        let n = self.ctx.points();
        if n * self.ctx.arity() > 64 {
            return None;
        }
        Some(
            self.rows
                .iter()
                .enumerate()
                .fold(0, |m, (e, &r)| m | r << (e * n)),
        )
    }
}

impl PartialEq for SoftSet {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && Context::same(&self.ctx, &other.ctx)
    }
}

impl Eq for SoftSet {}

impl Hash for SoftSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
    }
}

impl Ord for SoftSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rows
            .iter()
            .map(|&r| Subset(r))
            .cmp(other.rows.iter().map(|&r| Subset(r)))
    }
}

impl PartialOrd for SoftSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (e, row) in self.rows().enumerate() {
            if e > 0 {
                f.write_str(", ")?;
            }
            write!(
                f,
                "{}: {}",
                self.ctx.parameters.name(e),
                row.display(&self.ctx.universe)
            )?;
        }
        f.write_str(">")
    }
}

/// Serializes as `{parameter: [element, ..]}` in declaration order.
impl Serialize for SoftSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.rows.len()))?;
        for (e, row) in self.rows().enumerate() {
            let names: Vec<&str> = row.iter().map(|i| self.ctx.universe.name(i)).collect();
            map.serialize_entry(self.ctx.parameters.name(e), &names)?;
        }
        map.end()
    }
}

impl fmt::Debug for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SoftSet{self}")
    }
}
