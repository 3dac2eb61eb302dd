use super::term::RankOneTerm;
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar};
use crate::pencil::CanonicalBlock;

fn unit(len: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); len];
    v[i] = Scalar::one();
    v
}

/// `e_i · Row_i(A + λB)`.
fn row_term(a: &Matrix, b: &Matrix, i: usize) -> RankOneTerm {
    RankOneTerm::constant_u(unit(a.rows(), i), a.row(i).to_vec(), b.row(i).to_vec())
}

/// `Col_j(A + λB) · e_jᵀ`, keeping only rows at index ≥ `from_row`.
fn col_term(a: &Matrix, b: &Matrix, j: usize, from_row: usize) -> RankOneTerm {
    let col = |m: &Matrix| -> Vec<Scalar> {
        (0..m.rows()).map(|i| if i >= from_row { m[(i, j)].clone() } else { Scalar::zero() }).collect()
    };
    RankOneTerm::constant_v(col(a), col(b), unit(a.cols(), j))
}

/// `L_k` as `k+1` rank-one terms, the first `j` with constant u and the
/// rest with constant v.
#[allow(non_snake_case)]
pub fn decompose_Lk(k: usize, j: usize) -> Result<Vec<RankOneTerm>> {
    if j > k + 1 {
        return Err(Error::InvalidArgument(format!("j = {j} is outside 0..={} for L_{k}", k + 1)));
    }
    let (a, b) = CanonicalBlock::RightSingular(k).matrices();
    let mut terms = Vec::with_capacity(k + 1);
    if j == 0 {
        terms.extend((0..=k).map(|i| col_term(&a, &b, i, 0)));
    } else if j == k + 1 {
        terms.extend((0..k).map(|i| row_term(&a, &b, i)));
        terms.push(RankOneTerm::zero(k, k + 1));
    } else if j == k {
        terms.extend((0..k - 1).map(|i| row_term(&a, &b, i)));
        terms.push(RankOneTerm::unit_pair(k, k + 1, k - 1, k, false));
        terms.push(RankOneTerm::unit_pair(k, k + 1, k - 1, k - 1, true));
    } else {
        terms.extend((0..j).map(|i| row_term(&a, &b, i)));
        terms.push(RankOneTerm::unit_pair(k, k + 1, j, j, true));
        terms.extend((j + 1..=k).map(|i| col_term(&a, &b, i, 0)));
    }
    debug_assert_eq!(terms.len(), k + 1);
    Ok(terms)
}

/// Splits one canonical block into rank-one terms, `deg0_columns` of them
/// with constant u (listed first) and the rest with constant v.
///
/// Right singular blocks admit only `deg0_columns = ε`, left singular
/// blocks only 0, and a Jordan block of size k any value in `0..=k`.
pub fn decompose_block(b: &CanonicalBlock, deg0_columns: usize) -> Result<Vec<RankOneTerm>> {
    let (a_mat, b_mat) = b.matrices();
    let infeasible =
        |range: String| Err(Error::InvalidArgument(format!("{b} needs deg0_columns {range}, got {deg0_columns}")));
    match *b {
        CanonicalBlock::RightSingular(e) => {
            if deg0_columns != e {
                return infeasible(format!("= {e}"));
            }
            Ok((0..e).map(|i| row_term(&a_mat, &b_mat, i)).collect())
        }
        CanonicalBlock::LeftSingular(e) => {
            if deg0_columns != 0 {
                return infeasible("= 0".into());
            }
            Ok((0..e).map(|j| col_term(&a_mat, &b_mat, j, 0)).collect())
        }
        CanonicalBlock::FiniteJordan { size: k, .. } | CanonicalBlock::InfiniteJordan(k) => {
            if !b.is_valid() {
                return Err(Error::UnrealizableBlock(b.to_string()));
            }
            if deg0_columns > k {
                return infeasible(format!("in 0..={k}"));
            }
            let c = deg0_columns;
            let mut terms: Vec<RankOneTerm> = (0..c).map(|i| row_term(&a_mat, &b_mat, i)).collect();
            terms.extend((c..k).map(|j| col_term(&a_mat, &b_mat, j, c)));
            Ok(terms)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::DegreePatternDecomposition;
    use crate::exactalg::Poly;
    use crate::pencil::Pencil;

    fn block_pencil(b: &CanonicalBlock) -> (Matrix, Matrix) {
        b.matrices()
    }

    fn sum(terms: Vec<RankOneTerm>, a: usize, m: usize, n: usize) -> Option<Pencil> {
        let d = DegreePatternDecomposition::new(a, terms).expect("pattern holds");
        (m > 0 && n > 0).then(|| d.reconstruct(m, n).unwrap())
    }

    #[test]
    fn lk_all_cases_reconstruct() {
        for k in 0..=6 {
            let (a, b) = block_pencil(&CanonicalBlock::RightSingular(k));
            for j in 0..=k + 1 {
                let terms = decompose_Lk(k, j).unwrap();
                assert_eq!(terms.len(), k + 1);
                if let Some(p) = sum(terms, j, k, k + 1) {
                    assert_eq!((p.a(), p.b()), (&a, &b), "k={k}, j={j}");
                }
            }
            assert!(decompose_Lk(k, k + 2).is_err());
        }
    }

    #[test]
    fn l1_case1() {
        let t = decompose_Lk(1, 0).unwrap();
        assert_eq!(t[0].u_poly(), vec![Poly::lambda()]);
        assert_eq!(t[0].v0, vec![Scalar::one(), Scalar::zero()]);
        assert_eq!(t[1].u_poly(), vec![Poly::one()]);
        assert_eq!(t[1].v0, vec![Scalar::zero(), Scalar::one()]);
    }

    #[test]
    fn l2_case2_has_zero_term() {
        let t = decompose_Lk(2, 3).unwrap();
        assert!(t.iter().all(RankOneTerm::is_u_constant));
        assert_eq!(t[2], RankOneTerm::zero(2, 3));
    }

    #[test]
    fn blocks_reconstruct() {
        let blocks = [
            CanonicalBlock::RightSingular(2),
            CanonicalBlock::LeftSingular(1),
            CanonicalBlock::LeftSingular(3),
            CanonicalBlock::jordan(3, Scalar::from(2)),
            CanonicalBlock::jordan(2, Scalar::zero()),
            CanonicalBlock::InfiniteJordan(3),
        ];
        for b in &blocks {
            let (m, n) = b.dims();
            let (a, bm) = block_pencil(b);
            let feasible: Vec<usize> = match b {
                CanonicalBlock::RightSingular(e) => vec![*e],
                CanonicalBlock::LeftSingular(_) => vec![0],
                _ => (0..=m).collect(),
            };
            for c in feasible {
                let terms = decompose_block(b, c).unwrap();
                let p = sum(terms, c, m, n).unwrap();
                assert_eq!((p.a(), p.b()), (&a, &bm), "{b} with {c}");
            }
        }
        assert!(decompose_block(&CanonicalBlock::RightSingular(2), 1).is_err());
        assert!(decompose_block(&CanonicalBlock::LeftSingular(2), 1).is_err());
        assert!(decompose_block(&CanonicalBlock::InfiniteJordan(2), 3).is_err());
    }

    #[test]
    fn jordan_split_shape() {
        let t = decompose_block(&CanonicalBlock::jordan(2, Scalar::zero()), 1).unwrap();
        assert_eq!(t.len(), 2);
        assert!(t[0].is_u_constant() && !t[0].is_v_constant());
        assert!(t[1].is_v_constant());
        let t = decompose_block(&CanonicalBlock::RightSingular(2), 2).unwrap();
        assert!(t.iter().all(|x| x.is_u_constant() && !x.is_v_constant()));
        let t = decompose_block(&CanonicalBlock::LeftSingular(1), 0).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t[0].is_v_constant());
    }
}
