//! The factorized recursion
//!
//! `ñ_ν = Ψ^λ(ν) + Σ_γ sign(γ) mult(γ) ñ_{ν+γ}`,
//!
//! evaluated level by level at g~-dominant points. Each positive value
//! found is a multiplicity `n_μ`; its anomalous V-orbit is written back so
//! that deeper levels can read it.

use std::collections::{BTreeMap, HashMap};

use super::{candidates, insert_orbit, psi_at, to_count, BranchingResult, EngineOptions, Method};
use crate::error::{Error, Result};
use crate::injection::{fan_direct, Injection};
use crate::rootsys::Weight;

/// The state of one level once it has been processed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LevelState {
    pub level: i64,
    /// Every nonzero `ñ` on this level: recursion values at dominant
    /// points and the V-orbit points generated from them.
    pub n_tilde: BTreeMap<Weight, i64>,
    /// `n_μ` recorded on this level.
    pub recorded: BTreeMap<Weight, u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    pub levels: Vec<LevelState>,
}

impl Trace {
    pub fn level(&self, level: i64) -> Option<&LevelState> {
        self.levels.iter().find(|l| l.level == level)
    }

    /// `ñ` at `k`, looked up on every level.
    pub fn n_tilde(&self, k: &Weight) -> i64 {
        self.levels.iter().filter_map(|l| l.n_tilde.get(k)).sum()
    }
}

pub fn branch_factorized(inj: &Injection, lam: &Weight, opts: EngineOptions) -> Result<BranchingResult> {
    branch_factorized_traced(inj, lam, opts).map(|(r, _)| r)
}

pub fn branch_factorized_traced(
    inj: &Injection,
    lam: &Weight,
    opts: EngineOptions,
) -> Result<(BranchingResult, Trace)> {
    inj.g.require_dominant_integral(lam)?;
    let fan = fan_direct(inj)?.entries();
    let lv = &inj.level_vector;
    if let Some((g, _)) = fan.iter().find(|(g, _)| g.dot4(lv) <= 0) {
        return Err(Error::Inconsistency(format!("fan weight {g} does not raise the level")));
    }
    let cands = candidates(inj, lam)?;

    // Coordinates no fan weight decreases: lookups from a candidate never
    // go below the smallest candidate value there.
    let floor: Vec<Option<i32>> = (0..inj.g.dim)
        .map(|c| {
            let monotone = fan.iter().all(|(g, _)| g.twice()[c] >= 0);
            (opts.prune_domain && monotone)
                .then(|| cands.iter().map(|(_, k)| k.twice()[c]).min())
                .flatten()
        })
        .collect();
    let keep = |p: &Weight| {
        floor
            .iter()
            .zip(p.twice())
            .all(|(f, x)| f.is_none_or(|f| *x >= f))
    };

    let lam_rho = lam + &inj.g.rho;
    let mut store: HashMap<Weight, i64> = HashMap::new();
    let mut components = BTreeMap::new();
    let mut trace = Trace::default();

    let mut i = 0;
    while i < cands.len() {
        let level = cands[i].0;
        let end = i + cands[i..].iter().take_while(|(l, _)| *l == level).count();
        let mut state = LevelState {
            level,
            ..Default::default()
        };
        let mut found = Vec::new();
        for (_, nu) in &cands[i..end] {
            let mut value = psi_at(inj, &lam_rho, nu);
            for (g, s) in &fan {
                if let Some(x) = store.get(&(nu + g)) {
                    value += s * x;
                }
            }
            if value != 0 {
                found.push((nu.clone(), to_count(value, nu, level)?));
            }
        }
        for (mu, n) in found {
            for (p, v) in insert_orbit(inj, &mut store, &mu, n as i64, keep)? {
                *state.n_tilde.entry(p).or_insert(0) += v;
            }
            state.recorded.insert(mu.clone(), n);
            components.insert(mu, n);
        }
        state.n_tilde.retain(|_, v| *v != 0);
        trace.levels.push(state);
        i = end;
    }
    let result = BranchingResult::new(inj, lam, Method::Fan, components)?;
    Ok((result, trace))
}
