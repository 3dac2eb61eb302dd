//! Kronecker structure of an arbitrary pencil.
//!
//! Minimal indices come from ranks of block-Toeplitz expansions; elementary
//! divisors from the Smith form, grouped into coprime eigenvalue classes so
//! no root isolation is ever needed.

mod lists;
mod structure;

pub use lists::{conjugate_partition, invariant_lists, EigenClass, InvariantLists};
pub use structure::{FiniteClass, KroneckerStructure};

use crate::exactalg::{gcd_free_basis, Matrix, Poly};
use crate::pencil::Pencil;

pub fn normal_rank(p: &Pencil) -> usize {
    p.to_poly_matrix().exact_rank()
}

/// Coefficient matrix of `P(λ)·x(λ) = 0` for `deg x ≤ k`.
///
/// Block rows: `A x_0`, `A x_i + B x_{i−1}` for 1 ≤ i ≤ k, `B x_k`.
fn toeplitz_expansion(p: &Pencil, k: usize) -> Matrix {
    let (m, n) = (p.m(), p.n());
    let mut t = Matrix::zeros((k + 2) * m, (k + 1) * n);
    for blk in 0..=k {
        for i in 0..m {
            for j in 0..n {
                t[(blk * m + i, blk * n + j)] = p.a()[(i, j)].clone();
                t[((blk + 1) * m + i, blk * n + j)] = p.b()[(i, j)].clone();
            }
        }
    }
    t
}

/// Right minimal indices in nondecreasing order.
///
/// With `d_k` the dimension of the degree-≤k polynomial right null space,
/// `d_k − d_{k−1}` counts the indices that are at most k.
pub fn right_minimal_indices(p: &Pencil) -> Vec<usize> {
    right_minimal_indices_with_rank(p, normal_rank(p))
}

fn right_minimal_indices_with_rank(p: &Pencil, nrank: usize) -> Vec<usize> {
    let count = p.n() - nrank;
    let mut indices = Vec::with_capacity(count);
    let (mut d_prev, mut le_prev) = (0usize, 0usize);
    let mut k = 0;
    while indices.len() < count {
        assert!(k <= p.n(), "minimal index search exceeded n={}; rank computation is inconsistent", p.n());
        let d = (k + 1) * p.n() - toeplitz_expansion(p, k).rank();
        let le = d - d_prev;
        assert!(le >= le_prev, "null space dimensions must be convex");
        indices.extend(std::iter::repeat_n(k, le - le_prev));
        d_prev = d;
        le_prev = le;
        k += 1;
    }
    assert_eq!(indices.len(), count, "found more minimal indices than n − nrank");
    indices
}

pub fn left_minimal_indices(p: &Pencil) -> Vec<usize> {
    right_minimal_indices(&p.transpose())
}

/// Finite elementary divisors grouped by coprime class, and the Segre
/// partition at infinity.
pub fn eigenstructure(p: &Pencil) -> (Vec<FiniteClass>, Vec<usize>) {
    let factors: Vec<Poly> = p.to_poly_matrix().smith_form().into_iter().filter(|d| !d.is_constant()).collect();
    let basis = gcd_free_basis(&factors).expect("invariant factors are nonzero");
    let finite = basis
        .into_iter()
        .map(|class| {
            let segre = segre_of(&factors, &class);
            FiniteClass { class, segre }
        })
        .collect();
    let rev: Vec<Poly> = p.reversal().to_poly_matrix().smith_form();
    let infinite = segre_of(&rev, &Poly::lambda());
    (structure::merge_classes(finite), infinite)
}

/// Nonincreasing exponents of `class` across the invariant factors.
fn segre_of(factors: &[Poly], class: &Poly) -> Vec<usize> {
    let mut segre: Vec<usize> =
        factors.iter().filter(|d| !d.is_constant()).map(|d| d.multiplicity(class)).filter(|&e| e > 0).collect();
    segre.sort_unstable_by(|a, b| b.cmp(a));
    segre
}

pub fn kronecker_structure(p: &Pencil) -> KroneckerStructure {
    let nrank = normal_rank(p);
    let right = right_minimal_indices_with_rank(p, nrank);
    let left = right_minimal_indices_with_rank(&p.transpose(), nrank);
    let (finite, infinite) = eigenstructure(p);
    let s = KroneckerStructure { m: p.m(), n: p.n(), nrank, right, left, finite, infinite };
    s.assert_consistent();
    s
}

pub fn epsilon_sum(s: &KroneckerStructure) -> usize {
    s.right.iter().sum()
}

pub fn eta_sum(s: &KroneckerStructure) -> usize {
    s.left.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Scalar;
    use crate::pencil::{CanonicalBlock, CanonicalBlock::*, CanonicalForm};

    fn k_pencil() -> Pencil {
        CanonicalForm::new(vec![RightSingular(2), LeftSingular(3)]).pencil().unwrap()
    }

    fn ktilde() -> Pencil {
        CanonicalForm::new(vec![RightSingular(1), RightSingular(3), LeftSingular(0), LeftSingular(0)]).pencil().unwrap()
    }

    #[test]
    fn normal_rank_examples() {
        assert_eq!(normal_rank(&k_pencil()), 5);
        assert_eq!(normal_rank(&ktilde()), 4);
        assert_eq!(normal_rank(&Pencil::zero(2, 3).unwrap()), 0);
    }

    #[test]
    fn minimal_index_examples() {
        assert_eq!(right_minimal_indices(&RightSingular(2).pencil().unwrap()), vec![2]);
        assert_eq!(right_minimal_indices(&ktilde()), vec![1, 3]);
        let j2 = CanonicalBlock::jordan(2, Scalar::zero()).pencil().unwrap();
        assert!(right_minimal_indices(&j2).is_empty());
        assert_eq!(left_minimal_indices(&LeftSingular(3).pencil().unwrap()), vec![3]);
        assert_eq!(left_minimal_indices(&ktilde()), vec![0, 0]);
        assert!(left_minimal_indices(&RightSingular(2).pencil().unwrap()).is_empty());
    }

    #[test]
    fn eigenstructure_examples() {
        let j2 = CanonicalBlock::jordan(2, Scalar::zero()).pencil().unwrap();
        let (fin, inf) = eigenstructure(&j2);
        assert_eq!(fin, vec![FiniteClass { class: Poly::lambda(), segre: vec![2] }]);
        assert!(inf.is_empty());
        let (fin, inf) = eigenstructure(&InfiniteJordan(2).pencil().unwrap());
        assert!(fin.is_empty());
        assert_eq!(inf, vec![2]);
        let (fin, inf) = eigenstructure(&RightSingular(2).pencil().unwrap());
        assert!(fin.is_empty() && inf.is_empty());
    }

    #[test]
    fn structure_examples() {
        let s = kronecker_structure(&k_pencil());
        assert_eq!((s.nrank, s.right.clone(), s.left.clone()), (5, vec![2], vec![3]));
        assert!(s.finite.is_empty() && s.infinite.is_empty());
        let one_plus = Pencil::from_entries(1, 1, &[Poly::from_ints(&[1, 1])]).unwrap();
        let s = kronecker_structure(&one_plus);
        assert_eq!(s.nrank, 1);
        assert_eq!(s.finite, vec![FiniteClass { class: Poly::from_ints(&[1, 1]), segre: vec![1] }]);
    }

    #[test]
    fn epsilon_eta_examples() {
        let s = kronecker_structure(&ktilde());
        assert_eq!((epsilon_sum(&s), eta_sum(&s)), (4, 0));
        let j = CanonicalBlock::jordan(3, Scalar::from(2)).pencil().unwrap();
        let s = kronecker_structure(&j);
        assert_eq!((epsilon_sum(&s), eta_sum(&s)), (0, 0));
    }
}
