//! Regular maximal injections `g~ ⊕ u(1) ⊂ g` of the classical series.
//!
//! Seven families are supported: the same-series chains
//! `X_{n-1} ⊕ u(1) ⊂ X_n` for `X = A, B, C, D` and the cross-series
//! injections `A_{n-1} ⊕ u(1) ⊂ B_n, C_n, D_n`.

mod fan;
mod tables;
mod xi;

use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::{parse_algebra, RootSystem, Series, Weight};
use crate::Q;

pub use fan::{assemble_fan, fan_direct, fan_via_xi, Fan};
pub use tables::{xi_table_reference, TableRow, TableXi, TABLE_MAX_RANK};
pub use xi::{
    expected_cardinality, omega_set, xi_set_checked, xi_set_closed_form, xi_set_via_omega, OmegaEntry,
    XiEntry, XiSet, OMEGA_ROOT_GUARD,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    AA,
    BB,
    CC,
    DD,
    AB,
    AC,
    AD,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::AA,
        Family::BB,
        Family::CC,
        Family::DD,
        Family::AB,
        Family::AC,
        Family::AD,
    ];

    pub fn ambient(self) -> Series {
        match self {
            Family::AA => Series::A,
            Family::BB | Family::AB => Series::B,
            Family::CC | Family::AC => Series::C,
            Family::DD | Family::AD => Series::D,
        }
    }

    pub fn sub_series(self) -> Series {
        match self {
            Family::AA | Family::AB | Family::AC | Family::AD => Series::A,
            Family::BB => Series::B,
            Family::CC => Series::C,
            Family::DD => Series::D,
        }
    }

    /// Smallest ambient rank for which the family is non-degenerate.
    pub fn min_rank(self) -> usize {
        match self {
            Family::DD | Family::AD => 3,
            _ => 2,
        }
    }

    /// True for the `A_{n-1} ⊂ B_n, C_n, D_n` families.
    pub fn is_cross_series(self) -> bool {
        matches!(self, Family::AB | Family::AC | Family::AD)
    }

    pub fn from_series(ambient: Series, sub: Series) -> Result<Family> {
        Ok(match (ambient, sub) {
            (Series::A, Series::A) => Family::AA,
            (Series::B, Series::B) => Family::BB,
            (Series::C, Series::C) => Family::CC,
            (Series::D, Series::D) => Family::DD,
            (Series::B, Series::A) => Family::AB,
            (Series::C, Series::A) => Family::AC,
            (Series::D, Series::A) => Family::AD,
            _ => {
                return Err(Error::Unsupported(format!(
                    "no regular maximal injection {}xU1 -> {}",
                    sub.letter(),
                    ambient.letter()
                )))
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.sub_series().letter(), self.ambient().letter())
    }
}

#[derive(Clone, Debug)]
pub struct Injection {
    pub family: Family,
    pub n: usize,
    pub g: RootSystem,
    /// Semisimple part of the subalgebra, in the ambient coordinates of `g`.
    pub sub: RootSystem,
    pub complement_roots: Vec<Weight>,
    /// The grading vector `ε`: levels are `<λ - κ, ε>`.
    pub level_vector: Weight,
    /// The u(1) functional; charges are `<κ, charge_vector>`.
    pub charge_vector: Vec<Q>,
}

pub fn build_injection(family: Family, n: usize) -> Result<Injection> {
    Injection::new(family, n)
}

impl Injection {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n < family.min_rank() {
            return Err(Error::Unsupported(format!(
                "{family} needs rank at least {}, got {n}",
                family.min_rank()
            )));
        }
        let g = RootSystem::new(family.ambient(), n)?;
        let dim = g.dim;
        let e = |i: usize| Weight::unit(dim, i);
        let ones = |k: usize| {
            let mut w = Weight::zero(dim);
            for i in 0..k {
                w = &w + &e(i);
            }
            w
        };

        let (sub, complement_roots, level_vector) = match family {
            Family::AA => {
                let sub = RootSystem::embedded(Series::A, n - 1, dim, 0)?;
                let roots = (0..n).map(|j| &e(j) - &e(n)).collect();
                (sub, roots, ones(n))
            }
            Family::BB | Family::CC | Family::DD => {
                let sub = RootSystem::embedded(family.sub_series(), n - 1, dim, 1)?;
                let mut roots: Vec<Weight> = (1..n).map(|j| &e(0) + &e(j)).collect();
                match family {
                    Family::BB => roots.push(e(0)),
                    Family::CC => roots.push(e(0).scale(2)),
                    _ => {}
                }
                roots.extend((1..n).rev().map(|j| &e(0) - &e(j)));
                (sub, roots, e(0))
            }
            Family::AB | Family::AC | Family::AD => {
                let sub = RootSystem::embedded(Series::A, n - 1, dim, 0)?;
                let mut roots = Vec::new();
                match family {
                    Family::AB => roots.extend((0..n).map(e)),
                    Family::AC => roots.extend((0..n).map(|i| e(i).scale(2))),
                    _ => {}
                }
                for j in 0..n {
                    for k in j + 1..n {
                        roots.push(&e(j) + &e(k));
                    }
                }
                (sub, roots, ones(n))
            }
        };

        let charge_vector = match family {
            // Traceless generator diag(1, .., 1, -n) / (n + 1); agrees with
            // the level vector on the root lattice.
            Family::AA => (0..=n)
                .map(|i| if i < n { Q::new(1, n as i64 + 1) } else { Q::new(-(n as i64), n as i64 + 1) })
                .collect(),
            _ => level_vector.coords(),
        };

        let inj = Injection {
            family,
            n,
            g,
            sub,
            complement_roots,
            level_vector,
            charge_vector,
        };
        inj.check_partition()?;
        for a in &inj.complement_roots {
            if a.dot4(&inj.level_vector) <= 0 {
                return Err(Error::Inconsistency(format!(
                    "complement root {a} has nonpositive level pairing"
                )));
            }
        }
        Ok(inj)
    }

    /// Builds from an algebra token (`B4`) and a subalgebra token (`A3xU1`).
    pub fn from_tokens(algebra: &str, subalgebra: &str) -> Result<Self> {
        let (series, n) = parse_algebra(algebra)?;
        let token = subalgebra.trim();
        let upper = token.to_ascii_uppercase();
        let head = upper
            .strip_suffix("XU1")
            .ok_or_else(|| Error::Parse(format!("subalgebra `{token}` must look like A3xU1")))?;
        let (sub_series, sub_rank) = parse_algebra(head)?;
        let family = Family::from_series(series, sub_series)?;
        if sub_rank + 1 != n {
            return Err(Error::Unsupported(format!(
                "{token} is not a maximal regular subalgebra of {algebra}: rank must be {}",
                n.saturating_sub(1)
            )));
        }
        Injection::new(family, n)
    }

    fn check_partition(&self) -> Result<()> {
        let mut union: Vec<Weight> = self
            .complement_roots
            .iter()
            .chain(&self.sub.positive_roots)
            .cloned()
            .collect();
        union.sort();
        let mut expected = self.g.positive_roots.clone();
        expected.sort();
        if union != expected {
            return Err(Error::Inconsistency(format!(
                "complement and subalgebra roots do not partition the roots of {}",
                self.g
            )));
        }
        Ok(())
    }

    pub fn algebra_token(&self) -> String {
        self.g.name()
    }

    pub fn subalgebra_token(&self) -> String {
        format!("{}xU1", self.sub.name())
    }

    pub fn charge(&self, k: &Weight) -> Q {
        k.pair(&self.charge_vector)
    }

    /// `<k, ε>`.
    pub fn grade(&self, k: &Weight) -> Q {
        k.dot(&self.level_vector)
    }

    /// Subalgebra Dynkin labels of `k`.
    pub fn sub_labels(&self, k: &Weight) -> Result<Vec<i64>> {
        self.sub.e_to_dynkin(k)
    }
}
