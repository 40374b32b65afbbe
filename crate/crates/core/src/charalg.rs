//! Sparse formal characters: finite integer combinations of symbols `e^κ`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::Weight;

/// Bound on the number of term pairs visited by [`FormalElement::multiply`].
pub const PRODUCT_GUARD: u128 = 100_000_000;

/// An element of the group ring of the weight lattice. Zero coefficients are
/// never stored, so structural equality is exact equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalElement {
    dim: usize,
    terms: BTreeMap<Weight, i64>,
}

impl FormalElement {
    pub fn zero(dim: usize) -> Self {
        FormalElement {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `e^0`.
    pub fn one(dim: usize) -> Self {
        Self::monomial(Weight::zero(dim), 1)
    }

    pub fn monomial(w: Weight, c: i64) -> Self {
        let mut out = Self::zero(w.dim());
        out.add_term(w, c);
        out
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Weight, i64)>) -> Result<Self> {
        let mut out = Self::zero(dim);
        for (w, c) in terms {
            if w.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: w.dim(),
                });
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Terms in lexicographic weight order.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> + '_ {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        debug_assert_eq!(w.dim(), self.dim);
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    fn check_dim(&self, other: &FormalElement) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &FormalElement) -> Result<FormalElement> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FormalElement) -> Result<FormalElement> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> FormalElement {
        if c == 0 {
            return Self::zero(self.dim);
        }
        FormalElement {
            dim: self.dim,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Multiplication by `e^shift`.
    pub fn shift(&self, shift: &Weight) -> FormalElement {
        FormalElement {
            dim: self.dim,
            terms: self.terms.iter().map(|(w, c)| (w + shift, *c)).collect(),
        }
    }

    pub fn multiply(&self, other: &FormalElement) -> Result<FormalElement> {
        self.check_dim(other)?;
        let pairs = self.len() as u128 * other.len() as u128;
        if pairs > PRODUCT_GUARD {
            return Err(Error::guard("product term pairs", pairs, PRODUCT_GUARD));
        }
        let mut out = Self::zero(self.dim);
        for (a, x) in self.iter() {
            for (b, y) in other.iter() {
                out.add_term(a + b, x * y);
            }
        }
        Ok(out)
    }

    /// `self · (1 - e^{-root})`.
    pub fn times_one_minus(&self, root: &Weight) -> FormalElement {
        let mut out = self.clone();
        for (w, c) in self.iter() {
            out.add_term(w - root, -c);
        }
        out
    }

    /// First weight (lexicographically) where the two elements differ.
    pub fn first_difference(&self, other: &FormalElement) -> Option<Weight> {
        let mut keys: Vec<&Weight> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort_unstable();
        keys.into_iter()
            .find(|w| self.coefficient(w) != other.coefficient(w))
            .cloned()
    }
}

/// The polynomial `∏ (1 - e^{-α})` over `roots`, expanded one factor at a
/// time.
pub fn expand_complement_product(roots: &[Weight]) -> Result<FormalElement> {
    let first = roots
        .first()
        .ok_or_else(|| Error::Unsupported("empty root list".into()))?;
    let mut acc = FormalElement::one(first.dim());
    for r in roots {
        if r.dim() != first.dim() {
            return Err(Error::DimensionMismatch {
                expected: first.dim(),
                got: r.dim(),
            });
        }
        let pairs = acc.len() as u128 * 2;
        if pairs > PRODUCT_GUARD {
            return Err(Error::guard("product term pairs", pairs, PRODUCT_GUARD));
        }
        acc = acc.times_one_minus(r);
    }
    Ok(acc)
}

impl fmt::Display for FormalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.iter().enumerate() {
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{sign}{}e^{w}", if c.abs() == 1 { String::new() } else { c.abs().to_string() })?;
        }
        Ok(())
    }
}
