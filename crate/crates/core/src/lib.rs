//! Exact computations on the strata of matrix pencils `A + λB` with
//! bounded normal rank.
//!
//! All arithmetic is over the Gaussian rationals, so every structural
//! answer (ranks, Kronecker invariants, closure inclusion, membership) is
//! exact. Floating point appears only in Frobenius-distance estimates.

pub mod cli;
pub mod decomp;
pub mod error;
pub mod exactalg;
pub mod invariants;
pub mod pencil;
pub mod strata;

pub use error::{Error, Result};
