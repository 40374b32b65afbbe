//! The fan: the signed weight multiset read off `∏ (1 - e^{-α})` over the
//! complement roots.

use std::cmp::Reverse;

use num_traits::Zero;

use super::xi::XiSet;
use super::Injection;
use crate::charalg::{expand_complement_product, FormalElement};
use crate::error::{Error, Result};
use crate::reps::freudenthal;
use crate::rootsys::Weight;
use crate::Q;

/// `1 - Σ sign(γ) mult(γ) e^{-γ}` together with its depth in the grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub polynomial: FormalElement,
    /// Largest `<γ, ε>` over the fan weights.
    pub depth: Q,
    level_vector: Weight,
}

impl Fan {
    fn new(polynomial: FormalElement, level_vector: &Weight) -> Self {
        let depth = polynomial
            .iter()
            .map(|(w, _)| (-w).dot(level_vector))
            .max()
            .unwrap_or_else(Q::zero);
        Fan {
            polynomial,
            depth,
            level_vector: level_vector.clone(),
        }
    }

    /// `sign(γ)·mult(γ)`, zero outside the fan.
    pub fn signed(&self, gamma: &Weight) -> i64 {
        if gamma.is_zero() {
            return 0;
        }
        -self.polynomial.coefficient(&-gamma)
    }

    /// Fan weights with their signed multiplicities, by increasing level
    /// and lexicographically descending within a level.
    pub fn entries(&self) -> Vec<(Weight, i64)> {
        let mut out: Vec<(Weight, i64)> = self
            .polynomial
            .iter()
            .filter(|(w, _)| !w.is_zero())
            .map(|(w, c)| (-w, -c))
            .collect();
        out.sort_by_key(|(g, _)| (g.dot4(&self.level_vector), Reverse(g.clone())));
        out
    }

    pub fn len(&self) -> usize {
        self.polynomial.len() - usize::from(self.polynomial.coefficient(&Weight::zero(self.polynomial.dim())) != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `<γ, ε>` of a fan weight.
    pub fn level(&self, gamma: &Weight) -> Q {
        gamma.dot(&self.level_vector)
    }
}

pub fn fan_direct(inj: &Injection) -> Result<Fan> {
    let poly = expand_complement_product(&inj.complement_roots)?;
    Ok(Fan::new(poly, &inj.level_vector))
}

/// The fan as a signed union of g~-weight diagrams `Φ^ξ`, ξ ∈ Ξ.
pub fn assemble_fan(inj: &Injection, xi: &XiSet) -> Result<Fan> {
    let mut poly = FormalElement::one(inj.g.dim);
    for (k, sign) in xi.signed() {
        let diagram = freudenthal(&inj.sub, k)?;
        for (mu, m) in &diagram.multiplicities {
            poly.add_term(-mu, -(sign as i64) * *m as i64);
        }
    }
    Ok(Fan::new(poly, &inj.level_vector))
}

/// [`assemble_fan`], checked against [`fan_direct`].
pub fn fan_via_xi(inj: &Injection, xi: &XiSet) -> Result<Fan> {
    let assembled = assemble_fan(inj, xi)?;
    let direct = fan_direct(inj)?;
    if let Some(bad) = assembled.polynomial.first_difference(&direct.polynomial) {
        return Err(Error::Inconsistency(format!(
            "fan assembled from Ξ differs from the direct product at e^{bad}: {} vs {}",
            assembled.polynomial.coefficient(&bad),
            direct.polynomial.coefficient(&bad)
        )));
    }
    Ok(assembled)
}
