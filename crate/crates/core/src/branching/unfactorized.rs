//! The recursion over the full Weyl group,
//!
//! `ñ_ξ = -Σ_{w≠e} ε(w) ñ_{ξ+ρ-wρ} + Σ_v ε(v) Ψ^λ(ξ + ρ~ - vρ~)`.
//!
//! Shifts `ρ - wρ` with `w ∈ V` stay on the same level, so each value must
//! be written back before the next candidate of that level is visited;
//! the candidate order (depth along `ρ`) makes every lookup already known.

use std::collections::{BTreeMap, HashMap};

use super::{candidates, insert_orbit, psi_at, to_count, BranchingResult, Method};
use crate::error::Result;
use crate::injection::Injection;
use crate::rootsys::Weight;

pub fn branch_unfactorized(inj: &Injection, lam: &Weight) -> Result<BranchingResult> {
    let g = &inj.g;
    let sub = &inj.sub;
    g.require_dominant_integral(lam)?;
    let shifts: Vec<(Weight, i64)> = g
        .weyl_elements()?
        .iter()
        .filter(|w| !w.is_identity())
        .map(|w| (&g.rho - &w.act(&g.rho), w.determinant as i64))
        .collect();
    let sub_shifts: Vec<(Weight, i64)> = sub
        .weyl_elements()?
        .iter()
        .map(|v| (&sub.rho - &v.act(&sub.rho), v.determinant as i64))
        .collect();

    let lam_rho = lam + &g.rho;
    let mut store: HashMap<Weight, i64> = HashMap::new();
    let mut components = BTreeMap::new();
    for (level, xi) in candidates(inj, lam)? {
        let mut value = 0;
        for (s, e) in &shifts {
            if let Some(x) = store.get(&(&xi + s)) {
                value -= e * x;
            }
        }
        for (s, e) in &sub_shifts {
            value += e * psi_at(inj, &lam_rho, &(&xi + s));
        }
        if value != 0 {
            let n = to_count(value, &xi, level)?;
            insert_orbit(inj, &mut store, &xi, n as i64, |_| true)?;
            components.insert(xi, n);
        }
    }
    BranchingResult::new(inj, lam, Method::Weyl, components)
}
