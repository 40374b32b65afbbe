//! Weight diagrams, characters and anomalous weight sets.

use std::collections::{BTreeMap, HashMap};

use crate::charalg::{expand_complement_product, FormalElement};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Largest representation dimension Freudenthal will expand.
pub const DIAGRAM_GUARD: u64 = 1_000_000;

/// The signed set `{w(hw + ρ) - ρ : ε(w)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnomalousSet {
    pub entries: BTreeMap<Weight, i8>,
}

impl AnomalousSet {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sign(&self, k: &Weight) -> i8 {
        self.entries.get(k).copied().unwrap_or(0)
    }

    pub fn to_formal(&self, dim: usize) -> FormalElement {
        FormalElement::from_terms(dim, self.entries.iter().map(|(w, s)| (w.clone(), *s as i64)))
            .expect("anomalous weights share the ambient dimension")
    }
}

pub fn anomalous_weights(rs: &RootSystem, hw: &Weight) -> Result<AnomalousSet> {
    rs.require_dominant_integral(hw)?;
    let shifted = hw + &rs.rho;
    let mut entries = BTreeMap::new();
    for w in rs.weyl_elements()? {
        let k = &w.act(&shifted) - &rs.rho;
        if entries.insert(k, w.determinant).is_some() {
            return Err(Error::Inconsistency(format!(
                "coincident anomalous weights for {hw}"
            )));
        }
    }
    Ok(AnomalousSet { entries })
}

/// Full weight diagram of an irreducible module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDiagram {
    pub highest: Weight,
    pub multiplicities: BTreeMap<Weight, u64>,
}

impl WeightDiagram {
    pub fn multiplicity(&self, k: &Weight) -> u64 {
        self.multiplicities.get(k).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    pub fn to_formal(&self) -> FormalElement {
        FormalElement::from_terms(
            self.highest.dim(),
            self.multiplicities.iter().map(|(w, m)| (w.clone(), *m as i64)),
        )
        .expect("diagram weights share the ambient dimension")
    }
}

/// Multiplicities of the dominant weights of `L^hw`, keyed by weight.
pub fn dominant_multiplicities(rs: &RootSystem, hw: &Weight) -> Result<BTreeMap<Weight, u64>> {
    let dim = rs.weyl_dim(hw)?;
    if dim > DIAGRAM_GUARD {
        return Err(Error::guard("representation dimension", dim, DIAGRAM_GUARD));
    }
    let mut dominant = rs.dominant_weights_below(hw);
    // Higher weights first: every lookup below targets a dominant weight
    // with strictly larger pairing against ρ.
    dominant.sort_by_key(|mu| std::cmp::Reverse((mu.dot4(&rs.rho), mu.clone())));

    let hw_rho = hw + &rs.rho;
    let top = hw_rho.dot4(&hw_rho);
    let mut mult: HashMap<Weight, u64> = HashMap::with_capacity(dominant.len());
    mult.insert(hw.clone(), 1);
    for mu in dominant.iter().skip(1) {
        let mut num: i64 = 0;
        for a in &rs.positive_roots {
            let mut probe = mu + a;
            loop {
                let m = mult.get(&rs.to_dominant(&probe)).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                num += m as i64 * probe.dot4(a);
                probe = &probe + a;
            }
        }
        let mu_rho = mu + &rs.rho;
        let den = top - mu_rho.dot4(&mu_rho);
        let num = 2 * num;
        if den <= 0 || num % den != 0 {
            return Err(Error::Inconsistency(format!(
                "Freudenthal quotient {num}/{den} at {mu} is not a nonnegative integer"
            )));
        }
        let m = num / den;
        if m > 0 {
            mult.insert(mu.clone(), m as u64);
        }
    }
    Ok(dominant
        .into_iter()
        .filter_map(|mu| mult.get(&mu).map(|m| (mu.clone(), *m)))
        .collect())
}

/// Freudenthal's multiplicity recursion on dominant weights, extended to
/// the whole diagram by Weyl symmetry.
pub fn freudenthal(rs: &RootSystem, hw: &Weight) -> Result<WeightDiagram> {
    let dominant = dominant_multiplicities(rs, hw)?;
    let mut multiplicities = BTreeMap::new();
    for (mu, m) in &dominant {
        for k in rs.orbit(mu)? {
            multiplicities.insert(k, *m);
        }
    }
    Ok(WeightDiagram {
        highest: hw.clone(),
        multiplicities,
    })
}

pub fn character(rs: &RootSystem, hw: &Weight) -> Result<FormalElement> {
    Ok(freudenthal(rs, hw)?.to_formal())
}

/// `∏_{α > 0} (1 - e^{-α})`.
pub fn weyl_denominator(rs: &RootSystem) -> Result<FormalElement> {
    if rs.positive_roots.is_empty() {
        return Ok(FormalElement::one(rs.dim));
    }
    expand_complement_product(&rs.positive_roots)
}
