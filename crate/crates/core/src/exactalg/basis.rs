//! Coprime refinement of a finite set of polynomials.

use super::{poly_gcd, Poly};
use crate::error::{Error, Result};

/// Pairwise-coprime, squarefree, monic, nonconstant polynomials such that
/// every input is a constant times a product of powers of them.
///
/// The output is sorted by (degree, text form) so it is deterministic for a
/// given input multiset.
pub fn gcd_free_basis(ps: &[Poly]) -> Result<Vec<Poly>> {
    let mut basis: Vec<Poly> = Vec::new();
    for p in ps {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        basis.extend(p.squarefree_decomposition()?.into_iter().filter(|a| !a.is_constant()));
    }
    // Split any pair with a nontrivial common factor g into g, a/g, b/g.
    // deg a + deg b strictly drops on every split, so this terminates.
    'outer: loop {
        basis.sort_by_key(sort_key);
        basis.dedup();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let g = poly_gcd(&basis[i], &basis[j])?;
                if g.is_constant() {
                    continue;
                }
                let b = basis.swap_remove(j);
                let a = basis.swap_remove(i);
                for piece in [a.exact_div(&g), b.exact_div(&g)].into_iter().flatten() {
                    if !piece.is_constant() {
                        basis.push(piece.monic());
                    }
                }
                basis.push(g);
                continue 'outer;
            }
        }
        return Ok(basis);
    }
}

fn sort_key(p: &Poly) -> (usize, String) {
    (p.degree().unwrap_or(0), p.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_ints(cs)
    }

    #[test]
    fn examples() {
        // [λ²−1, λ−1] → {λ−1, λ+1}
        let b = gcd_free_basis(&[p(&[-1, 0, 1]), p(&[-1, 1])]).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b.contains(&p(&[-1, 1])) && b.contains(&p(&[1, 1])));
        assert_eq!(gcd_free_basis(&[p(&[0, 1])]).unwrap(), vec![p(&[0, 1])]);
        assert_eq!(gcd_free_basis(&[p(&[0, 0, 1]), p(&[0, 0, 0, 1])]).unwrap(), vec![p(&[0, 1])]);
        // λ(λ+1)² alone must still split into λ and λ+1
        assert_eq!(gcd_free_basis(&[p(&[0, 1, 2, 1])]).unwrap(), vec![p(&[0, 1]), p(&[1, 1])]);
    }

    #[test]
    fn rejects_zero() {
        assert!(matches!(gcd_free_basis(&[p(&[1]), Poly::zero()]), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn constants_vanish() {
        assert!(gcd_free_basis(&[p(&[5])]).unwrap().is_empty());
    }
}
