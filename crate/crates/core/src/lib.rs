//! Exact branching rules for classical simple Lie algebras.
//!
//! Irreducible representations of `A_n`, `B_n`, `C_n` and `D_n` are
//! decomposed into irreducibles of regular maximal reductive subalgebras
//! `g~ ⊕ u(1)`. The primary engine is a level-by-level recursion driven by
//! the *fan* of the injection, the signed weight multiset obtained by
//! expanding the product of `(1 - e^{-α})` over the roots that are not
//! roots of the subalgebra. Three independent engines (an unfactorized
//! Weyl-group recursion, a partition-function formula and a brute-force
//! character peeling oracle) are provided to cross-check it.
//!
//! Everything is exact: weights live on the half-integer lattice and are
//! stored as doubled integers, charges and levels are rationals.

pub mod branching;
pub mod charalg;
pub mod cli;
pub mod error;
pub mod injection;
pub mod reps;
pub mod rootsys;

pub use branching::{
    branch, branch_factorized, branch_oracle, branch_unfactorized, branch_via_partition,
    kostant_heckman, level_of, verify_result, BranchingResult, CheckRecord, EngineOptions,
    Method, Term,
};
pub use charalg::FormalElement;
pub use error::{Error, Result};
pub use injection::{Family, Fan, Injection, XiEntry, XiSet};
pub use reps::{AnomalousSet, WeightDiagram};
pub use rootsys::{RootSystem, Series, Weight, WeylElement};

/// Exact rational used for charges, levels and inner products.
pub type Q = num_rational::Ratio<i64>;
