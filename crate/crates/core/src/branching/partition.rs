//! The partition function `K` of the complement roots, and the branching
//! formula `n_μ = Σ_w ε(w) K(w(λ+ρ) - ρ - μ)`.

use std::collections::{BTreeMap, HashMap};

use num_traits::ToPrimitive;

use super::{candidates, BranchingResult, Method};
use crate::error::{Error, Result};
use crate::injection::Injection;
use crate::reps::anomalous_weights;
use crate::rootsys::Weight;

/// Largest `<η, ε>` accepted by the partition function.
pub const KH_LEVEL_GUARD: i64 = 256;
const MEMO_GUARD: u128 = 20_000_000;

/// Memoized counter of expressions `η = Σ k_α α`, `k_α ≥ 0`, over the
/// complement roots.
pub struct PartitionCounter {
    roots: Vec<Weight>,
    level_vector: Weight,
    /// Per suffix of `roots` and per coordinate: whether every remaining
    /// root is `>= 0` there and whether every one is `<= 0`.
    suffix_signs: Vec<Vec<(bool, bool)>>,
    memo: HashMap<(Weight, usize), u64>,
}

impl PartitionCounter {
    pub fn new(inj: &Injection) -> Self {
        let roots = inj.complement_roots.clone();
        let dim = inj.g.dim;
        let mut suffix_signs = vec![vec![(true, true); dim]; roots.len() + 1];
        for i in (0..roots.len()).rev() {
            let next = suffix_signs[i + 1].clone();
            for (c, (&x, &(nn, np))) in roots[i].twice().iter().zip(&next).enumerate() {
                suffix_signs[i][c] = (nn && x >= 0, np && x <= 0);
            }
        }
        PartitionCounter {
            roots,
            level_vector: inj.level_vector.clone(),
            suffix_signs,
            memo: HashMap::new(),
        }
    }

    fn level4(&self, k: &Weight) -> i64 {
        k.dot4(&self.level_vector)
    }

    pub fn count(&mut self, eta: &Weight) -> Result<u64> {
        let level = self.level4(eta);
        if level > 4 * KH_LEVEL_GUARD {
            return Err(Error::guard("partition function level", (level / 4) as u128, KH_LEVEL_GUARD as u128));
        }
        self.rec(eta, 0)
    }

    fn rec(&mut self, eta: &Weight, i: usize) -> Result<u64> {
        if eta.is_zero() {
            return Ok(1);
        }
        if i == self.roots.len() || self.level4(eta) < 0 {
            return Ok(0);
        }
        let signs = &self.suffix_signs[i];
        if eta
            .twice()
            .iter()
            .zip(signs)
            .any(|(&x, &(nn, np))| (nn && x < 0) || (np && x > 0))
        {
            return Ok(0);
        }
        let key = (eta.clone(), i);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        if self.memo.len() as u128 >= MEMO_GUARD {
            return Err(Error::guard("partition function memo entries", self.memo.len() as u128, MEMO_GUARD));
        }
        let root = self.roots[i].clone();
        let mut total = 0u64;
        let mut rest = eta.clone();
        while self.level4(&rest) >= 0 {
            total += self.rec(&rest, i + 1)?;
            rest = &rest - &root;
        }
        self.memo.insert(key, total);
        Ok(total)
    }
}

/// Number of ways to write `xi` as a nonnegative integer combination of
/// complement roots.
pub fn kostant_heckman(inj: &Injection, xi: &Weight) -> Result<u64> {
    PartitionCounter::new(inj).count(xi)
}

/// The same count from the recursion
/// `K(η) = -Σ_{w≠e} ε(w) K(η + wρ - ρ) + Σ_v ε(v) [η = ρ~ - vρ~]`,
/// with `K(η) = 0` whenever `<η, ρ> < 0`.
pub fn kostant_heckman_recursive(inj: &Injection, xi: &Weight) -> Result<i64> {
    let g = &inj.g;
    let sub = &inj.sub;
    let level = inj.grade(xi);
    if level > KH_LEVEL_GUARD.into() {
        return Err(Error::guard(
            "partition function level",
            level.to_integer().to_u128().unwrap_or(u128::MAX),
            KH_LEVEL_GUARD as u128,
        ));
    }
    let shifts: Vec<(Weight, i64)> = g
        .weyl_elements()?
        .iter()
        .filter(|w| !w.is_identity())
        .map(|w| (&w.act(&g.rho) - &g.rho, w.determinant as i64))
        .collect();
    let base: HashMap<Weight, i64> = sub
        .weyl_elements()?
        .iter()
        .map(|v| (&sub.rho - &v.act(&sub.rho), v.determinant as i64))
        .collect();

    fn rec(
        eta: &Weight,
        rho: &Weight,
        shifts: &[(Weight, i64)],
        base: &HashMap<Weight, i64>,
        memo: &mut HashMap<Weight, i64>,
    ) -> i64 {
        if eta.dot4(rho) < 0 {
            return 0;
        }
        if let Some(&v) = memo.get(eta) {
            return v;
        }
        let mut value = base.get(eta).copied().unwrap_or(0);
        for (s, e) in shifts {
            value -= e * rec(&(eta + s), rho, shifts, base, memo);
        }
        memo.insert(eta.clone(), value);
        value
    }
    Ok(rec(xi, &g.rho, &shifts, &base, &mut HashMap::new()))
}

pub fn branch_via_partition(inj: &Injection, lam: &Weight) -> Result<BranchingResult> {
    let psi = anomalous_weights(&inj.g, lam)?;
    let mut counter = PartitionCounter::new(inj);
    let lv = &inj.level_vector;
    let mut components = BTreeMap::new();
    for (level, mu) in candidates(inj, lam)? {
        let mut value: i64 = 0;
        for (p, &s) in &psi.entries {
            let eta = p - &mu;
            if eta.dot4(lv) < 0 {
                continue;
            }
            value += s as i64 * counter.count(&eta)? as i64;
        }
        if value != 0 {
            components.insert(mu.clone(), super::to_count(value, &mu, level)?);
        }
    }
    BranchingResult::new(inj, lam, Method::Partition, components)
}
