//! Exact weights in the orthogonal e-basis.
//!
//! Every coordinate is a half-integer, so a weight is stored as the vector
//! of doubled coordinates. The derived ordering is lexicographic on the
//! coordinates, which is the canonical iteration order used throughout the
//! crate.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::Q;

pub(crate) type Coords = SmallVec<[i32; 8]>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    twice: Coords,
}

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight {
            twice: smallvec::smallvec![0; dim],
        }
    }

    /// Builds a weight from integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            twice: coords.iter().map(|&c| (2 * c) as i32).collect(),
        }
    }

    /// Builds a weight from doubled coordinates, so `[5, 1]` is `(5/2, 1/2)`.
    pub fn from_twice(twice: &[i32]) -> Self {
        Weight {
            twice: twice.iter().copied().collect(),
        }
    }

    pub(crate) fn from_coords(twice: Coords) -> Self {
        Weight { twice }
    }

    /// Builds a weight from exact rationals. Denominators must divide 2.
    pub fn from_rationals(coords: &[Q]) -> Result<Self> {
        let mut twice = Coords::with_capacity(coords.len());
        for c in coords {
            let d = *c * Q::from_integer(2);
            if !d.is_integer() {
                return Err(Error::NotLattice(format!(
                    "coordinate {c} (denominator must divide 2)"
                )));
            }
            twice.push(*d.numer() as i32);
        }
        Ok(Weight { twice })
    }

    /// Unit vector `e_i` (0-based index).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut w = Weight::zero(dim);
        w.twice[i] = 2;
        w
    }

    pub fn dim(&self) -> usize {
        self.twice.len()
    }

    pub fn coord(&self, i: usize) -> Q {
        Q::new(self.twice[i] as i64, 2)
    }

    pub fn coords(&self) -> Vec<Q> {
        (0..self.dim()).map(|i| self.coord(i)).collect()
    }

    /// Doubled coordinates.
    pub fn twice(&self) -> &[i32] {
        &self.twice
    }

    pub(crate) fn twice_mut(&mut self) -> &mut [i32] {
        &mut self.twice
    }

    pub fn is_zero(&self) -> bool {
        self.twice.iter().all(|&c| c == 0)
    }

    /// True when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.twice.iter().all(|c| c % 2 == 0)
    }

    /// Four times the standard inner product; always an integer.
    pub fn dot4(&self, other: &Weight) -> i64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.twice
            .iter()
            .zip(other.twice.iter())
            .map(|(&a, &b)| a as i64 * b as i64)
            .sum()
    }

    pub fn dot(&self, other: &Weight) -> Q {
        Q::new(self.dot4(other), 4)
    }

    /// Pairing with an arbitrary rational functional.
    pub fn pair(&self, functional: &[Q]) -> Q {
        debug_assert_eq!(functional.len(), self.dim());
        let mut acc = Q::zero();
        for (c, f) in self.twice.iter().zip(functional) {
            if *c != 0 {
                acc += *f * Q::new(*c as i64, 2);
            }
        }
        acc
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight {
            twice: self.twice.iter().map(|&x| (x as i64 * c) as i32).collect(),
        }
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.check_dim(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.check_dim(other)?;
        Ok(self - other)
    }

    pub(crate) fn check_dim(&self, other: &Weight) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(())
    }

    /// Coordinates rendered as lowest-terms rational strings.
    pub fn coord_strings(&self) -> Vec<String> {
        (0..self.dim()).map(|i| format_q(self.coord(i))).collect()
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimension mismatch");
        Weight {
            twice: self
                .twice
                .iter()
                .zip(rhs.twice.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimension mismatch");
        Weight {
            twice: self
                .twice
                .iter()
                .zip(rhs.twice.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            twice: self.twice.iter().map(|a| -a).collect(),
        }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

/// Renders a rational in lowest terms: `3`, `-5/2`.
pub fn format_q(q: Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `3`, `-5/2` or `0.5`-free rational tokens.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coord_strings().join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts `5/2,1/2`, `(5/2, 1/2)` or `[5/2 1/2]`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let coords = body
            .split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(parse_q)
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::Parse(format!("empty weight `{s}`")));
        }
        Weight::from_rationals(&coords)
    }
}
