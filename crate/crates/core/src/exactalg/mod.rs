//! Exact scalar, polynomial and polynomial-matrix arithmetic.

mod basis;
mod matrix;
mod poly;
mod polymatrix;
mod scalar;

pub use basis::gcd_free_basis;
pub use matrix::Matrix;
pub use poly::{poly_gcd, Poly};
pub use polymatrix::PolyMatrix;
pub use scalar::Scalar;

/// Normal rank of a polynomial matrix.
pub fn exact_rank(m: &PolyMatrix) -> usize {
    m.exact_rank()
}

/// Monic invariant factors of a polynomial matrix.
pub fn smith_form(m: &PolyMatrix) -> Vec<Poly> {
    m.smith_form()
}
