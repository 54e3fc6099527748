//! Exact push-forward (Gysin) formulas for Hall-Littlewood classes.
//!
//! Classes on flag and Grassmann bundles are modelled as polynomials in the
//! Chern roots `x_1, ..., x_n` and a parameter `t`, push-forwards as
//! symmetrizing operators, and every identity is checked as an exact
//! equality of integer polynomials.
//!
//! Module map:
//! - [`poly`]: sparse integer polynomials in the roots and `t`
//! - [`perm`]: permutations, level-set stabilizers and coset representatives
//! - [`gysin`]: full flag, partial flag, Grassmann and `τ^k` push-forwards
//! - [`hall_littlewood`]: `R_λ`, `P_λ`, `v_λ`, Gaussian polynomials, Schur S and P
//! - [`identities`]: verifiers, instance families and reports
//! - [`cli`]: the command-line front end

pub mod cli;
pub mod error;
pub mod gysin;
pub mod hall_littlewood;
pub mod identities;
pub mod perm;
pub mod poly;
pub mod sequence;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use poly::{ExponentVector, Polynomial};
pub use sequence::IntSequence;
