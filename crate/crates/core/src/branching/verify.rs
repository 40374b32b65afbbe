//! Consistency checks on a finished branching.

use std::collections::BTreeMap;

use super::BranchingResult;
use crate::error::Error;
use crate::injection::Injection;
use crate::reps::freudenthal;
use crate::rootsys::Weight;
use crate::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Passed,
    Failed,
    /// Not applicable, or beyond a guard.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: &'static str,
    pub status: CheckStatus,
    /// First counterexample, or the reason for skipping.
    pub detail: Option<String>,
}

impl CheckRecord {
    fn pass(name: &'static str) -> Self {
        CheckRecord {
            name,
            status: CheckStatus::Passed,
            detail: None,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckRecord {
            name,
            status: CheckStatus::Failed,
            detail: Some(detail),
        }
    }

    fn skip(name: &'static str, detail: String) -> Self {
        CheckRecord {
            name,
            status: CheckStatus::Skipped,
            detail: Some(detail),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Passed
    }
}

/// Dimension sum rule, pointwise multiplicities, and reflection symmetry
/// for self-conjugate `λ`.
pub fn verify_result(inj: &Injection, lam: &Weight, r: &BranchingResult) -> Vec<CheckRecord> {
    vec![check_dimension(inj, lam, r), check_pointwise(inj, lam, r), check_symmetry(inj, lam, r)]
}

fn check_dimension(inj: &Injection, lam: &Weight, r: &BranchingResult) -> CheckRecord {
    const NAME: &str = "dimension";
    let total = inj.g.weyl_dim(lam);
    let parts: Result<u64, Error> = r
        .components
        .iter()
        .map(|(mu, m)| inj.sub.weyl_dim(mu).map(|d| d * m))
        .sum();
    match (total, parts) {
        (Ok(t), Ok(p)) if t == p => CheckRecord::pass(NAME),
        (Ok(t), Ok(p)) => CheckRecord::fail(NAME, format!("subalgebra dimensions sum to {p}, expected {t}")),
        (Err(e), _) | (_, Err(e)) => CheckRecord::fail(NAME, e.to_string()),
    }
}

fn check_pointwise(inj: &Injection, lam: &Weight, r: &BranchingResult) -> CheckRecord {
    const NAME: &str = "pointwise";
    let full = match freudenthal(&inj.g, lam) {
        Ok(d) => d,
        Err(e @ Error::Guard { .. }) => return CheckRecord::skip(NAME, e.to_string()),
        Err(e) => return CheckRecord::fail(NAME, e.to_string()),
    };
    let mut assembled: BTreeMap<Weight, u64> = BTreeMap::new();
    for (mu, n) in &r.components {
        match freudenthal(&inj.sub, mu) {
            Ok(d) => {
                for (k, m) in d.multiplicities {
                    *assembled.entry(k).or_insert(0) += m * n;
                }
            }
            Err(e) => return CheckRecord::fail(NAME, e.to_string()),
        }
    }
    let bad = full
        .multiplicities
        .keys()
        .chain(assembled.keys())
        .find(|k| full.multiplicity(k) != assembled.get(*k).copied().unwrap_or(0));
    match bad {
        None => CheckRecord::pass(NAME),
        Some(k) => CheckRecord::fail(
            NAME,
            format!(
                "multiplicity {} at {k}, subalgebra diagrams give {}",
                full.multiplicity(k),
                assembled.get(k).copied().unwrap_or(0)
            ),
        ),
    }
}

fn check_symmetry(inj: &Injection, lam: &Weight, r: &BranchingResult) -> CheckRecord {
    const NAME: &str = "symmetry";
    let dual = inj.g.dual(lam);
    let self_dual = inj.g.e_to_dynkin(&dual).ok() == inj.g.e_to_dynkin(lam).ok();
    if !self_dual {
        return CheckRecord::skip(NAME, "highest weight is not self-conjugate".into());
    }
    let key = |mu: &Weight| -> Option<(Vec<i64>, Q)> { Some((inj.sub_labels(mu).ok()?, inj.charge(mu))) };
    let mut plain: BTreeMap<(Vec<i64>, Q), u64> = BTreeMap::new();
    let mut mirrored: BTreeMap<(Vec<i64>, Q), u64> = BTreeMap::new();
    for (mu, &m) in &r.components {
        let (Some(a), Some(b)) = (key(mu), key(&inj.sub.dual(mu))) else {
            return CheckRecord::fail(NAME, format!("{mu} has no subalgebra labels"));
        };
        *plain.entry(a).or_insert(0) += m;
        *mirrored.entry(b).or_insert(0) += m;
    }
    match plain.iter().find(|(k, m)| mirrored.get(*k) != Some(m)) {
        None => CheckRecord::pass(NAME),
        Some(((labels, q), m)) => CheckRecord::fail(
            NAME,
            format!("{m} x ({labels:?}, {q}) has no mirror image with the same multiplicity"),
        ),
    }
}
