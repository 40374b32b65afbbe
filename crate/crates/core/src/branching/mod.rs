//! Branching engines for `g ↓ g~ ⊕ u(1)`.
//!
//! All engines return the same [`BranchingResult`]: the highest weights `μ`
//! of the subalgebra irreducibles occurring in `L^λ`, with multiplicities
//! `n_μ`. The fan recursion is the primary engine; the others exist to
//! cross-check it.

mod factorized;
mod oracle;
mod partition;
mod unfactorized;
mod verify;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::injection::Injection;
use crate::rootsys::Weight;
use crate::Q;

pub use factorized::{branch_factorized, branch_factorized_traced, LevelState, Trace};
pub use oracle::branch_oracle;
pub use partition::{branch_via_partition, kostant_heckman, kostant_heckman_recursive, PartitionCounter, KH_LEVEL_GUARD};
pub use unfactorized::branch_unfactorized;
pub use verify::{verify_result, CheckRecord, CheckStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Factorized recursion over the fan.
    Fan,
    /// Unfactorized recursion over the full Weyl group.
    Weyl,
    /// Alternating sum of partition functions.
    Partition,
    /// Character peeling.
    Oracle,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Fan, Method::Weyl, Method::Partition, Method::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Method::Fan => "fan",
            Method::Weyl => "weyl",
            Method::Partition => "partition",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineOptions {
    /// Skip storing anomalous points the fan recursion can never read.
    pub prune_domain: bool,
}

/// One irreducible `(labels, charge)` of the subalgebra with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub weight: Weight,
    pub labels: Vec<i64>,
    pub charge: Q,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingResult {
    pub algebra: String,
    pub subalgebra: String,
    pub source_hw: Weight,
    pub source_labels: Vec<i64>,
    pub dimension: u64,
    pub method: Method,
    /// `μ ↦ n_μ`, positive entries only.
    pub components: BTreeMap<Weight, u64>,
    /// Sorted by charge descending, then labels ascending.
    pub terms: Vec<Term>,
    pub checks: Vec<CheckRecord>,
}

impl BranchingResult {
    pub(crate) fn new(inj: &Injection, lam: &Weight, method: Method, components: BTreeMap<Weight, u64>) -> Result<Self> {
        let mut terms = components
            .iter()
            .map(|(mu, &m)| {
                Ok(Term {
                    weight: mu.clone(),
                    labels: inj.sub_labels(mu)?,
                    charge: inj.charge(mu),
                    multiplicity: m,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        terms.sort_by(|a, b| b.charge.cmp(&a.charge).then_with(|| a.labels.cmp(&b.labels)));
        Ok(BranchingResult {
            algebra: inj.algebra_token(),
            subalgebra: inj.subalgebra_token(),
            source_hw: lam.clone(),
            source_labels: inj.g.e_to_dynkin(lam)?,
            dimension: inj.g.weyl_dim(lam)?,
            method,
            components,
            terms,
            checks: Vec::new(),
        })
    }

    /// Multiplicity of the term with the given labels and charge.
    pub fn multiplicity(&self, labels: &[i64], charge: Q) -> u64 {
        self.terms
            .iter()
            .filter(|t| t.labels == labels && t.charge == charge)
            .map(|t| t.multiplicity)
            .sum()
    }

    /// True when every performed check passed.
    pub fn checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Failed)
    }
}

/// `<λ - κ, ε>`.
pub fn level_of(inj: &Injection, lam: &Weight, k: &Weight) -> Q {
    inj.grade(&(lam - k))
}

/// Integer level, for weights in the root lattice translate of `λ`.
pub(crate) fn int_level(inj: &Injection, lam: &Weight, k: &Weight) -> Result<i64> {
    let q = level_of(inj, lam, k);
    if !q.is_integer() {
        return Err(Error::Inconsistency(format!("non-integral level {q} at {k}")));
    }
    Ok(q.to_integer())
}

/// Runs the selected engine.
pub fn branch(inj: &Injection, lam: &Weight, method: Method) -> Result<BranchingResult> {
    match method {
        Method::Fan => branch_factorized(inj, lam, EngineOptions::default()),
        Method::Weyl => branch_unfactorized(inj, lam),
        Method::Partition => branch_via_partition(inj, lam),
        Method::Oracle => branch_oracle(inj, lam),
    }
}

/// The g~-dominant weights of `L^λ`, the only places `n_μ` can be nonzero,
/// ordered by level, then by depth below `λ` along `ρ`, then
/// lexicographically.
pub(crate) fn candidates(inj: &Injection, lam: &Weight) -> Result<Vec<(i64, Weight)>> {
    let g = &inj.g;
    let mut out = Vec::new();
    for mu in g.dominant_weights_below(lam) {
        for k in g.orbit(&mu)? {
            if inj.sub.is_dominant(&k) {
                out.push((int_level(inj, lam, &k)?, k));
            }
        }
    }
    out.sort_by_key(|(level, k)| (*level, (lam - k).dot4(&g.rho), k.clone()));
    Ok(out)
}

/// `Ψ^λ(ν)`: the sign of `w` when `ν = w(λ + ρ) - ρ`, else zero.
pub(crate) fn psi_at(inj: &Injection, lam_rho: &Weight, nu: &Weight) -> i64 {
    match inj.g.regular_dominant(&(nu + &inj.g.rho)) {
        Some((d, s)) if &d == lam_rho => s as i64,
        _ => 0,
    }
}

pub(crate) fn to_count(value: i64, at: &Weight, level: i64) -> Result<u64> {
    value.to_u64().ok_or_else(|| {
        Error::Inconsistency(format!(
            "negative relative multiplicity {value} at dominant weight {at} on level {level}"
        ))
    })
}

/// Inserts `ε(v)·n` at every `v(μ + ρ~) - ρ~`.
pub(crate) fn insert_orbit(
    inj: &Injection,
    store: &mut HashMap<Weight, i64>,
    mu: &Weight,
    n: i64,
    keep: impl Fn(&Weight) -> bool,
) -> Result<Vec<(Weight, i64)>> {
    let sub = &inj.sub;
    let shifted = mu + &sub.rho;
    let mut inserted = Vec::new();
    for v in sub.weyl_elements()? {
        let p = &v.act(&shifted) - &sub.rho;
        if !keep(&p) {
            continue;
        }
        let value = v.determinant as i64 * n;
        *store.entry(p.clone()).or_insert(0) += value;
        inserted.push((p, value));
    }
    Ok(inserted)
}
