//! Rank-one decompositions `Σ u_i(λ)v_i(λ)ᵀ` with a prescribed degree
//! pattern, their explicit construction from a canonical form, random
//! sampling of a component, and the full-rank perturbation step.

mod blocks;
mod sample;
mod term;
mod witness;

pub use blocks::{decompose_Lk, decompose_block};
pub use sample::{alpha, frobenius_bound, perturb_to_full_rank, sample_component, PERTURB_RETRIES};
pub use term::{DegreePatternDecomposition, RankOneTerm};
pub use witness::witness_decomposition;

use crate::error::Result;
use crate::pencil::Pencil;

pub fn reconstruct(d: &DegreePatternDecomposition, m: usize, n: usize) -> Result<Pencil> {
    d.reconstruct(m, n)
}
