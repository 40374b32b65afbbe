//! Weyl groups of the classical series as signed permutation groups.

use smallvec::SmallVec;

use super::weight::{Coords, Weight};
use super::Series;
use crate::error::{Error, Result};

/// Enumeration guard on `|W|`.
pub const WEYL_GUARD: u128 = 10_000_000;

/// A signed permutation acting on the coordinate window
/// `offset .. offset + permutation.len()` of an ambient weight.
///
/// `(w·k)[offset + i] = sign_flips[i] * k[offset + permutation[i]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub permutation: SmallVec<[u8; 8]>,
    pub sign_flips: SmallVec<[i8; 8]>,
    pub determinant: i8,
    pub offset: usize,
}

impl WeylElement {
    pub fn identity(len: usize, offset: usize) -> Self {
        WeylElement {
            permutation: (0..len as u8).collect(),
            sign_flips: smallvec::smallvec![1; len],
            determinant: 1,
            offset,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &p)| p as usize == i)
            && self.sign_flips.iter().all(|&s| s == 1)
    }

    /// Checked action; fails if `k` does not contain the window.
    pub fn apply(&self, k: &Weight) -> Result<Weight> {
        let need = self.offset + self.permutation.len();
        if k.dim() < need {
            return Err(Error::DimensionMismatch {
                expected: need,
                got: k.dim(),
            });
        }
        Ok(self.act(k))
    }

    pub(crate) fn act(&self, k: &Weight) -> Weight {
        let src = k.twice();
        let mut out: Coords = src.iter().copied().collect();
        for (i, (&p, &s)) in self.permutation.iter().zip(self.sign_flips.iter()).enumerate() {
            out[self.offset + i] = s as i32 * src[self.offset + p as usize];
        }
        Weight::from_coords(out)
    }

    /// `self ∘ other`, i.e. first `other`, then `self`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.permutation.len(), other.permutation.len());
        assert_eq!(self.offset, other.offset);
        let mut permutation = SmallVec::new();
        let mut sign_flips = SmallVec::new();
        for i in 0..self.permutation.len() {
            let a = self.permutation[i] as usize;
            permutation.push(other.permutation[a]);
            sign_flips.push(self.sign_flips[i] * other.sign_flips[a]);
        }
        WeylElement {
            permutation,
            sign_flips,
            determinant: self.determinant * other.determinant,
            offset: self.offset,
        }
    }
}

/// `|W|` for a classical series, without enumerating.
pub fn weyl_order(series: Series, rank: usize) -> u128 {
    let fact = |n: usize| (1..=n as u128).product::<u128>();
    match series {
        Series::A => fact(rank + 1),
        Series::B | Series::C => (1u128 << rank) * fact(rank),
        Series::D => (1u128 << (rank - 1)) * fact(rank),
    }
}

fn permutations(len: usize) -> Vec<(SmallVec<[u8; 8]>, i8)> {
    fn rec(prefix: &mut SmallVec<[u8; 8]>, used: &mut [bool], out: &mut Vec<(SmallVec<[u8; 8]>, i8)>) {
        if prefix.len() == used.len() {
            let mut inversions = 0;
            for i in 0..prefix.len() {
                for j in i + 1..prefix.len() {
                    if prefix[i] > prefix[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u8);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut SmallVec::new(), &mut vec![false; len], &mut out);
    out
}

/// Enumerates every element of the Weyl group exactly once.
pub(crate) fn enumerate(series: Series, rank: usize, offset: usize) -> Result<Vec<WeylElement>> {
    let order = weyl_order(series, rank);
    if order > WEYL_GUARD {
        return Err(Error::guard("Weyl group order", order, WEYL_GUARD));
    }
    let len = series.window(rank);
    let sign_patterns: Vec<SmallVec<[i8; 8]>> = match series {
        Series::A => vec![smallvec::smallvec![1; len]],
        Series::B | Series::C | Series::D => (0u32..1 << len)
            .filter(|mask| series != Series::D || mask.count_ones() % 2 == 0)
            .map(|mask| (0..len).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect())
            .collect(),
    };
    let mut out = Vec::with_capacity(order as usize);
    for (perm, parity) in permutations(len) {
        for signs in &sign_patterns {
            let flips: i8 = signs.iter().product();
            out.push(WeylElement {
                permutation: perm.clone(),
                sign_flips: signs.clone(),
                determinant: parity * flips,
                offset,
            });
        }
    }
    debug_assert_eq!(out.len() as u128, order);
    Ok(out)
}
