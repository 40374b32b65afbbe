//! Branching by peeling subalgebra characters off the restricted
//! character of `L^λ`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};

use super::{BranchingResult, Method};
use crate::error::{Error, Result};
use crate::injection::Injection;
use crate::reps::freudenthal;
use crate::rootsys::Weight;

pub fn branch_oracle(inj: &Injection, lam: &Weight) -> Result<BranchingResult> {
    let diagram = freudenthal(&inj.g, lam)?;
    let mut remainder: HashMap<Weight, i64> = diagram
        .multiplicities
        .iter()
        .map(|(k, &m)| (k.clone(), m as i64))
        .collect();
    // Any subalgebra diagram lies below its highest weight in this order,
    // so one descending pass meets every highest weight before the rest of
    // its diagram.
    let mut order: Vec<Weight> = diagram.multiplicities.keys().cloned().collect();
    order.sort_by_key(|k| Reverse((inj.charge(k), k.dot4(&inj.sub.rho), k.clone())));

    let mut components = BTreeMap::new();
    for top in order {
        let m = remainder.get(&top).copied().unwrap_or(0);
        if m == 0 {
            continue;
        }
        if m < 0 || !inj.sub.is_dominant(&top) {
            return Err(Error::Inconsistency(format!(
                "peeling reached {top} with remainder {m}, which is not a subalgebra highest weight"
            )));
        }
        for (k, mk) in &freudenthal(&inj.sub, &top)?.multiplicities {
            let r = remainder.entry(k.clone()).or_insert(0);
            *r -= m * *mk as i64;
            if *r < 0 {
                return Err(Error::Inconsistency(format!(
                    "peeling the diagram of {top} leaves {r} at {k}"
                )));
            }
        }
        components.insert(top, m as u64);
    }
    debug_assert!(remainder.values().all(|&r| r == 0));
    BranchingResult::new(inj, lam, Method::Oracle, components)
}
