//! Root systems of the classical series in the orthogonal realization.
//!
//! `A_n` lives in `n + 1` coordinates (trace is not projected out), `B_n`,
//! `C_n`, `D_n` in `n` coordinates. A root system can also be embedded in a
//! larger ambient space at a coordinate offset; this is how subalgebras of
//! an injection are represented, so that their weights share the ambient
//! lattice of the big algebra.

mod weight;
mod weyl;

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::Ratio;
use num_traits::Zero;

pub use weight::{format_q, parse_q, Weight};
pub use weyl::{weyl_order, WeylElement, WEYL_GUARD};

use crate::error::{Error, Result};
use crate::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl Series {
    /// Number of coordinates the series acts on.
    pub fn window(self, rank: usize) -> usize {
        match self {
            Series::A => rank + 1,
            _ => rank,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
        }
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            _ => Err(Error::Parse(format!("unknown series `{s}`"))),
        }
    }
}

/// Parses an algebra token such as `B4`.
pub fn parse_algebra(token: &str) -> Result<(Series, usize)> {
    let token = token.trim();
    let (head, tail) = token.split_at(token.char_indices().nth(1).map_or(token.len(), |(i, _)| i));
    let series: Series = head.parse()?;
    let rank: usize = tail
        .parse()
        .map_err(|_| Error::Parse(format!("invalid algebra `{token}`")))?;
    Ok((series, rank))
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub series: Series,
    pub rank: usize,
    /// Ambient dimension of every weight.
    pub dim: usize,
    /// First ambient coordinate the series acts on.
    pub offset: usize,
    pub positive_roots: Vec<Weight>,
    pub simple_roots: Vec<Weight>,
    pub rho: Weight,
    pub fundamental_weights: Vec<Weight>,
    weyl: OnceLock<Vec<WeylElement>>,
}

/// Convenience wrapper for [`RootSystem::new`].
pub fn build_root_system(series: Series, rank: usize) -> Result<RootSystem> {
    RootSystem::new(series, rank)
}

impl RootSystem {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        Self::embedded(series, rank, series.window(rank), 0)
    }

    /// Root system of `series` acting on coordinates `offset..` of a
    /// `dim`-dimensional space.
    pub fn embedded(series: Series, rank: usize, dim: usize, offset: usize) -> Result<Self> {
        let min = if series == Series::D { 2 } else { 1 };
        if rank < min {
            return Err(Error::Unsupported(format!(
                "{}{rank}: rank must be at least {min}",
                series.letter()
            )));
        }
        let len = series.window(rank);
        if offset + len > dim {
            return Err(Error::Unsupported(format!(
                "{}{rank} does not fit in {dim} coordinates at offset {offset}",
                series.letter()
            )));
        }
        let e = |i: usize| Weight::unit(dim, offset + i);
        let mut positive_roots = Vec::new();
        for i in 0..len {
            for j in i + 1..len {
                positive_roots.push(&e(i) - &e(j));
                if series != Series::A {
                    positive_roots.push(&e(i) + &e(j));
                }
            }
            match series {
                Series::B => positive_roots.push(e(i)),
                Series::C => positive_roots.push(e(i).scale(2)),
                _ => {}
            }
        }

        let n = len;
        let mut simple_roots: Vec<Weight> = (0..n - 1).map(|i| &e(i) - &e(i + 1)).collect();
        match series {
            Series::A => {}
            Series::B => simple_roots.push(e(n - 1)),
            Series::C => simple_roots.push(e(n - 1).scale(2)),
            Series::D => simple_roots.push(&e(n - 2) + &e(n - 1)),
        }

        let prefix = |k: usize| {
            let mut w = Weight::zero(dim);
            for i in 0..k {
                w.twice_mut()[offset + i] = 2;
            }
            w
        };
        let half = |last_sign: i32| {
            let mut w = Weight::zero(dim);
            for i in 0..n {
                w.twice_mut()[offset + i] = 1;
            }
            w.twice_mut()[offset + n - 1] = last_sign;
            w
        };
        let fundamental_weights = match series {
            Series::A | Series::C => (1..=rank).map(prefix).collect(),
            Series::B => (1..rank).map(prefix).chain([half(1)]).collect(),
            Series::D => (1..rank - 1).map(prefix).chain([half(-1), half(1)]).collect(),
        };

        let mut sum = Weight::zero(dim);
        for r in &positive_roots {
            sum = &sum + r;
        }
        let rho = Weight::from_twice(&sum.twice().iter().map(|c| c / 2).collect::<Vec<_>>());

        Ok(RootSystem {
            series,
            rank,
            dim,
            offset,
            positive_roots,
            simple_roots,
            rho,
            fundamental_weights,
            weyl: OnceLock::new(),
        })
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.series.letter(), self.rank)
    }

    /// Coordinate window `offset..offset + window`.
    pub fn window(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.series.window(self.rank)
    }

    pub fn weyl_order(&self) -> u128 {
        weyl_order(self.series, self.rank)
    }

    /// Every Weyl group element exactly once, identity first.
    pub fn weyl_elements(&self) -> Result<&[WeylElement]> {
        if let Some(w) = self.weyl.get() {
            return Ok(w);
        }
        let elements = weyl::enumerate(self.series, self.rank, self.offset)?;
        Ok(self.weyl.get_or_init(|| elements))
    }

    fn check_dim(&self, k: &Weight) -> Result<()> {
        if k.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: k.dim(),
            });
        }
        Ok(())
    }

    /// Membership in the closed dominant chamber.
    pub fn is_dominant(&self, k: &Weight) -> bool {
        debug_assert_eq!(k.dim(), self.dim);
        self.simple_roots.iter().all(|a| k.dot4(a) >= 0)
    }

    /// `2<k, α>/<α, α>` for each simple root, or `None` off the lattice.
    fn labels_of(&self, k: &Weight) -> Option<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|a| {
                let num = 2 * k.dot4(a);
                let den = a.dot4(a);
                (num % den == 0).then_some(num / den)
            })
            .collect()
    }

    pub fn e_to_dynkin(&self, k: &Weight) -> Result<Vec<i64>> {
        self.check_dim(k)?;
        self.labels_of(k).ok_or_else(|| Error::NotLattice(k.to_string()))
    }

    pub fn dynkin_to_e(&self, labels: &[i64]) -> Result<Weight> {
        if labels.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: labels.len(),
            });
        }
        let mut w = Weight::zero(self.dim);
        for (l, f) in labels.iter().zip(&self.fundamental_weights) {
            w = &w + &f.scale(*l);
        }
        Ok(w)
    }

    /// Dominant integral check with a descriptive error.
    pub fn require_dominant_integral(&self, k: &Weight) -> Result<()> {
        let labels = self.e_to_dynkin(k)?;
        if labels.iter().any(|&l| l < 0) {
            return Err(Error::NotDominant(format!("{k} for {}", self.name())));
        }
        Ok(())
    }

    /// Weyl dimension formula.
    pub fn weyl_dim(&self, hw: &Weight) -> Result<u64> {
        self.require_dominant_integral(hw)?;
        let shifted = hw + &self.rho;
        let mut acc: Ratio<i128> = Ratio::from_integer(1);
        for a in &self.positive_roots {
            acc *= Ratio::new(shifted.dot4(a) as i128, self.rho.dot4(a) as i128);
        }
        debug_assert!(acc.is_integer());
        u64::try_from(acc.to_integer())
            .map_err(|_| Error::guard("representation dimension", u128::MAX, u64::MAX))
    }

    /// The unique dominant element of the Weyl orbit of `k`.
    pub fn to_dominant(&self, k: &Weight) -> Weight {
        let mut out = k.clone();
        let win = self.window();
        let slice = &mut out.twice_mut()[win];
        match self.series {
            Series::A => slice.sort_unstable_by(|a, b| b.cmp(a)),
            Series::B | Series::C => {
                for c in slice.iter_mut() {
                    *c = c.abs();
                }
                slice.sort_unstable_by(|a, b| b.cmp(a));
            }
            Series::D => {
                let negatives = slice.iter().filter(|&&c| c < 0).count();
                for c in slice.iter_mut() {
                    *c = c.abs();
                }
                slice.sort_unstable_by(|a, b| b.cmp(a));
                let last = slice.len() - 1;
                if negatives % 2 == 1 && slice[last] != 0 {
                    slice[last] = -slice[last];
                }
            }
        }
        out
    }

    /// For `k` with trivial stabilizer, its dominant conjugate `w·k` and
    /// `ε(w)`; `None` when `k` lies on a wall.
    pub fn regular_dominant(&self, k: &Weight) -> Option<(Weight, i8)> {
        let dominant = self.to_dominant(k);
        if self.simple_roots.iter().any(|a| dominant.dot4(a) <= 0) {
            return None;
        }
        let slice = &k.twice()[self.window()];
        let keys: Vec<i32> = match self.series {
            Series::A => slice.to_vec(),
            _ => slice.iter().map(|c| c.abs()).collect(),
        };
        let mut inversions = 0usize;
        for i in 0..keys.len() {
            for j in i + 1..keys.len() {
                if keys[i] < keys[j] {
                    inversions += 1;
                }
            }
        }
        let flips = match self.series {
            Series::B | Series::C => slice.iter().filter(|&&c| c < 0).count(),
            // Sign changes in the D Weyl group come in pairs.
            _ => 0,
        };
        let sign = if (inversions + flips).is_multiple_of(2) { 1 } else { -1 };
        Some((dominant, sign))
    }

    /// Coefficients of `delta` in the basis of simple roots, or `None` if
    /// `delta` is outside their span.
    pub fn simple_root_coefficients(&self, delta: &Weight) -> Option<Vec<Q>> {
        let coeffs: Vec<Q> = self
            .simple_roots
            .iter()
            .zip(&self.fundamental_weights)
            .map(|(a, w)| Q::new(2 * delta.dot4(w), a.dot4(a)))
            .collect();
        let mut twice = vec![Q::zero(); self.dim];
        for (c, a) in coeffs.iter().zip(&self.simple_roots) {
            for (t, x) in twice.iter_mut().zip(a.twice()) {
                *t += *c * Q::from_integer(*x as i64);
            }
        }
        let back = twice
            .iter()
            .zip(delta.twice())
            .all(|(t, d)| *t == Q::from_integer(*d as i64));
        back.then_some(coeffs)
    }

    /// `a ≥ b` in the dominance order: `a - b` is a nonnegative integer
    /// combination of simple roots.
    pub fn dominates(&self, a: &Weight, b: &Weight) -> bool {
        match self.simple_root_coefficients(&(a - b)) {
            Some(c) => c.iter().all(|x| x.is_integer() && *x >= Q::zero()),
            None => false,
        }
    }

    /// All dominant weights `μ ≤ hw`, found by descending along positive
    /// roots inside the dominant chamber. Sorted lexicographically.
    pub fn dominant_weights_below(&self, hw: &Weight) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut stack = vec![hw.clone()];
        seen.insert(hw.clone());
        while let Some(mu) = stack.pop() {
            for a in &self.positive_roots {
                let nu = &mu - a;
                if self.is_dominant(&nu) && !seen.contains(&nu) {
                    seen.insert(nu.clone());
                    stack.push(nu);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Distinct elements of the Weyl orbit of `k`.
    pub fn orbit(&self, k: &Weight) -> Result<Vec<Weight>> {
        let mut set = HashSet::new();
        for w in self.weyl_elements()? {
            set.insert(w.act(k));
        }
        let mut out: Vec<Weight> = set.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Every weight (without multiplicity) of the irrep with highest weight `hw`.
    pub fn weight_support(&self, hw: &Weight) -> Result<Vec<Weight>> {
        let mut set = BTreeSet::new();
        for mu in self.dominant_weights_below(hw) {
            set.extend(self.orbit(&mu)?);
        }
        Ok(set.into_iter().collect())
    }

    /// Highest weight of the dual representation.
    pub fn dual(&self, hw: &Weight) -> Weight {
        self.to_dominant(&-hw)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
