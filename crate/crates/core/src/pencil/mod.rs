//! Matrix pencils `A + λB` and their canonical building blocks.

mod blocks;
mod io;

pub use blocks::{direct_sum, CanonicalBlock, CanonicalForm, FactoredForm};
pub use io::{BlockRecord, FactoredFormFile, PencilFile};

use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Poly, PolyMatrix, Scalar};

/// An m×n pencil `A + λB` with m, n ≥ 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    a: Matrix,
    b: Matrix,
}

impl Pencil {
    pub fn new(a: Matrix, b: Matrix) -> Result<Self> {
        if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
            return Err(Error::DimensionMismatch(format!(
                "A is {}x{} but B is {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        if a.rows() == 0 || a.cols() == 0 {
            return Err(Error::EmptyPencil);
        }
        Ok(Pencil { a, b })
    }

    pub fn zero(m: usize, n: usize) -> Result<Self> {
        Pencil::new(Matrix::zeros(m, n), Matrix::zeros(m, n))
    }

    /// Builds a pencil from entries of degree at most one.
    pub fn from_entries(m: usize, n: usize, entries: &[Poly]) -> Result<Self> {
        if entries.len() != m * n {
            return Err(Error::DimensionMismatch(format!("{} entries for a {m}x{n} pencil", entries.len())));
        }
        let (mut a, mut b) = (Matrix::zeros(m, n), Matrix::zeros(m, n));
        for (k, p) in entries.iter().enumerate() {
            if p.degree().is_some_and(|d| d > 1) {
                return Err(Error::InvalidArgument(format!("entry {p} has degree above one")));
            }
            a[(k / n, k % n)] = p.coeff(0);
            b[(k / n, k % n)] = p.coeff(1);
        }
        Pencil::new(a, b)
    }

    pub fn m(&self) -> usize {
        self.a.rows()
    }

    pub fn n(&self) -> usize {
        self.a.cols()
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn entry(&self, i: usize, j: usize) -> Poly {
        Poly::linear(self.a[(i, j)].clone(), self.b[(i, j)].clone())
    }

    pub fn to_poly_matrix(&self) -> PolyMatrix {
        PolyMatrix::from_pencil(&self.a, &self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn transpose(&self) -> Pencil {
        Pencil { a: self.a.transpose(), b: self.b.transpose() }
    }

    /// `B + λA`.
    pub fn reversal(&self) -> Pencil {
        Pencil { a: self.b.clone(), b: self.a.clone() }
    }

    /// `E·P(λ)·F`, with E and F checked to be invertible.
    pub fn apply_equivalence(&self, e: &Matrix, f: &Matrix) -> Result<Pencil> {
        if e.rows() != self.m() || e.cols() != self.m() || f.rows() != self.n() || f.cols() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "E is {}x{}, F is {}x{}, pencil is {}x{}",
                e.rows(),
                e.cols(),
                f.rows(),
                f.cols(),
                self.m(),
                self.n()
            )));
        }
        if !e.is_invertible() || !f.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(Pencil { a: &(e * &self.a) * f, b: &(e * &self.b) * f })
    }

    /// Frobenius norm of `[A B]` as a float.
    pub fn frobenius_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.m() {
            for j in 0..self.n() {
                acc += self.a[(i, j)].abs_f64().powi(2) + self.b[(i, j)].abs_f64().powi(2);
            }
        }
        acc.sqrt()
    }

    /// Frobenius norm of `self − other`. Panics on a shape mismatch.
    pub fn frobenius_distance(&self, other: &Pencil) -> f64 {
        assert_eq!((self.m(), self.n()), (other.m(), other.n()));
        let mut acc = 0.0;
        for i in 0..self.m() {
            for j in 0..self.n() {
                acc += (&self.a[(i, j)] - &other.a[(i, j)]).abs_f64().powi(2);
                acc += (&self.b[(i, j)] - &other.b[(i, j)]).abs_f64().powi(2);
            }
        }
        acc.sqrt()
    }

    pub(crate) fn scalar_pair(&self, i: usize, j: usize) -> (&Scalar, &Scalar) {
        (&self.a[(i, j)], &self.b[(i, j)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lambda_one() -> Pencil {
        // [[λ,1],[0,0]]
        Pencil::new(Matrix::from_ints(&[&[0, 1], &[0, 0]]), Matrix::from_ints(&[&[1, 0], &[0, 0]])).unwrap()
    }

    #[test]
    fn equivalence_examples() {
        let p = lambda_one();
        assert_eq!(p.apply_equivalence(&Matrix::identity(2), &Matrix::identity(2)).unwrap(), p);
        let two = Matrix::from_ints(&[&[2, 0], &[0, 2]]);
        let q = p.apply_equivalence(&two, &Matrix::identity(2)).unwrap();
        assert_eq!(q.entry(0, 0), Poly::from_ints(&[0, 2]));
        assert_eq!(q.entry(0, 1), Poly::from_ints(&[2]));
        assert!(q.entry(1, 0).is_zero() && q.entry(1, 1).is_zero());
    }

    #[test]
    fn equivalence_errors() {
        let p = lambda_one();
        let sing = Matrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert!(matches!(p.apply_equivalence(&sing, &Matrix::identity(2)), Err(Error::SingularMatrix)));
        assert!(matches!(
            p.apply_equivalence(&Matrix::identity(3), &Matrix::identity(2)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn shape_checks() {
        assert!(matches!(Pencil::zero(0, 2), Err(Error::EmptyPencil)));
        assert!(matches!(Pencil::new(Matrix::zeros(2, 2), Matrix::zeros(2, 3)), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn transpose_and_reversal() {
        let p = lambda_one();
        assert_eq!(p.transpose().transpose(), p);
        assert_eq!(p.reversal().reversal(), p);
        assert_eq!(p.reversal().entry(0, 0), Poly::from_ints(&[1]));
    }
}
