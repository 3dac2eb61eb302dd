use super::blocks::{decompose_Lk, decompose_block};
use super::term::{DegreePatternDecomposition, RankOneTerm};
use crate::error::{Error, Result};
use crate::invariants::KroneckerStructure;
use crate::pencil::{CanonicalBlock, CanonicalForm, FactoredForm};
use crate::strata::{component_member_structure, ComponentId};

/// Terms of a canonical form split by degree pattern: `u_const` holds the
/// terms with constant u, `v_const` those with constant v.
#[derive(Default)]
struct Split {
    u_const: Vec<RankOneTerm>,
    v_const: Vec<RankOneTerm>,
}

impl Split {
    fn push_block(&mut self, terms: Vec<RankOneTerm>, n_u_const: usize, dims: (usize, usize), offset: (usize, usize)) {
        for (i, t) in terms.into_iter().enumerate() {
            let t = t.embed(dims.0, dims.1, offset.0, offset.1);
            if i < n_u_const {
                self.u_const.push(t);
            } else {
                self.v_const.push(t);
            }
        }
    }

    fn finish(mut self, c: &ComponentId) -> Vec<RankOneTerm> {
        assert!(self.u_const.len() <= c.a, "too many constant-u terms for a = {}", c.a);
        assert!(self.v_const.len() <= c.r - c.a, "too many constant-v terms for r − a = {}", c.r - c.a);
        self.u_const.resize(c.a, RankOneTerm::padding(c.m, c.n));
        self.v_const.resize(c.r - c.a, RankOneTerm::padding(c.m, c.n));
        self.u_const.extend(self.v_const);
        self.u_const
    }
}

/// ε ≤ a and η ≤ r − a: right blocks by rows, left blocks by columns, and
/// the first a − ε Jordan rank-one terms with constant u.
fn direct(form: &CanonicalForm, c: &ComponentId, eps: usize) -> Vec<RankOneTerm> {
    let mut split = Split::default();
    let mut budget = c.a - eps;
    for (b, off) in form.blocks.iter().zip(form.offsets()) {
        let n_u = match b {
            CanonicalBlock::RightSingular(e) => *e,
            CanonicalBlock::LeftSingular(_) => 0,
            _ => {
                let take = budget.min(b.dims().0);
                budget -= take;
                take
            }
        };
        let terms = decompose_block(b, n_u).expect("feasible degree split");
        split.push_block(terms, n_u, (c.m, c.n), off);
    }
    split.finish(c)
}

/// ε > a: the largest r − nrank right singular blocks are re-split so that
/// enough of their rows trade a degree-one row for a constant one.
fn convert_right_blocks(form: &CanonicalForm, c: &ComponentId, eps: usize, nrank: usize) -> Vec<RankOneTerm> {
    let mut right: Vec<(usize, usize)> = form
        .blocks
        .iter()
        .enumerate()
        .filter_map(|(i, b)| match b {
            CanonicalBlock::RightSingular(e) => Some((i, *e)),
            _ => None,
        })
        .collect();
    right.sort_by_key(|&(_, e)| e);
    let chosen = c.r - nrank;
    assert!(chosen <= right.len(), "need {chosen} right singular blocks, have {}", right.len());
    let selected: Vec<(usize, usize)> = right[right.len() - chosen..].to_vec();
    let filled: usize = selected.iter().map(|&(_, e)| e).sum();
    assert!(filled >= eps - c.a, "largest {chosen} right blocks fill {filled} rows, fewer than ε − a = {}", eps - c.a);
    let t = eps - filled;

    let mut need = c.a - t;
    let mut j_of = vec![None; form.blocks.len()];
    for &(i, e) in &selected {
        let j = need.min(e + 1);
        need -= j;
        j_of[i] = Some(j);
    }
    assert_eq!(need, 0, "selected right blocks cannot absorb the constant-u quota");

    let mut split = Split::default();
    for ((idx, b), off) in form.blocks.iter().enumerate().zip(form.offsets()) {
        let (terms, n_u) = match (b, j_of[idx]) {
            (CanonicalBlock::RightSingular(k), Some(j)) => (decompose_Lk(*k, j).expect("j in range"), j),
            (CanonicalBlock::RightSingular(k), None) => (decompose_block(b, *k).expect("rows split"), *k),
            _ => (decompose_block(b, 0).expect("column split"), 0),
        };
        split.push_block(terms, n_u, (c.m, c.n), off);
    }
    let out = split.finish(c);
    debug_assert_eq!(out.len(), c.r);
    out
}

/// Index map of the block-diagonal exchange that turns every Jordan block
/// into its transpose: `Jᵀ = P·J·P`. `rows` selects row or column indices.
fn exchange(form: &CanonicalForm, rows: bool) -> Vec<usize> {
    let (m, n) = form.dims();
    let mut perm: Vec<usize> = (0..if rows { m } else { n }).collect();
    for (b, (r0, c0)) in form.blocks.iter().zip(form.offsets()) {
        if let CanonicalBlock::FiniteJordan { size: k, .. } | CanonicalBlock::InfiniteJordan(k) = *b {
            let start = if rows { r0 } else { c0 };
            for i in 0..k {
                perm[start + i] = start + k - 1 - i;
            }
        }
    }
    perm
}

fn permute(v: &[crate::exactalg::Scalar], perm: &[usize]) -> Vec<crate::exactalg::Scalar> {
    perm.iter().map(|&p| v[p].clone()).collect()
}

/// Terms of the bare canonical form (no E, F), ordered constant-u first.
fn canonical_terms(form: &CanonicalForm, c: &ComponentId) -> Vec<RankOneTerm> {
    let s = KroneckerStructure::from_canonical_form(form);
    let (eps, eta) = (s.epsilon(), s.eta());
    if eps <= c.a && eta <= c.r - c.a {
        return direct(form, c, eps);
    }
    if eps > c.a {
        return convert_right_blocks(form, c, eps, s.nrank);
    }
    // η > r − a: decompose the transpose in the dual component. With
    // K' the blockwise-transposed form, Kᵀ = D_n·K'·D_m.
    let transposed = CanonicalForm::new(form.blocks.iter().map(CanonicalBlock::transposed_kind).collect());
    let dual = c.transposed();
    let dm = exchange(form, true);
    let dn = exchange(form, false);
    let mut terms: Vec<RankOneTerm> = canonical_terms(&transposed, &dual)
        .into_iter()
        .map(|t| {
            let t = t.swapped();
            RankOneTerm {
                u0: permute(&t.u0, &dm),
                u1: permute(&t.u1, &dm),
                v0: permute(&t.v0, &dn),
                v1: permute(&t.v1, &dn),
            }
        })
        .collect();
    terms.rotate_right(c.a);
    terms
}

/// A rank-one decomposition of `E·KCF·F` witnessing membership in `C_a^r`.
pub fn witness_decomposition(ff: &FactoredForm, c: &ComponentId) -> Result<DegreePatternDecomposition> {
    if ff.dims() != (c.m, c.n) {
        let (m, n) = ff.dims();
        return Err(Error::DimensionMismatch(format!(
            "canonical form is {m}×{n} but the component is for {}×{} pencils",
            c.m, c.n
        )));
    }
    let target = ff.pencil()?;
    let s = KroneckerStructure::from_canonical_form(&ff.form);
    if let Some(v) = component_member_structure(&s, c).witness {
        return Err(Error::NotMember(v));
    }
    let mut terms = canonical_terms(&ff.form, c);
    if ff.e.is_some() || ff.f.is_some() {
        let e = ff.e_or_identity();
        let ft = ff.f_or_identity().transpose();
        terms = terms.iter().map(|t| t.transform(&e, &ft)).collect();
    }
    let d = DegreePatternDecomposition::new(c.a, terms).expect("witness respects the degree pattern");
    assert_eq!(d.reconstruct(c.m, c.n)?, target, "witness must reconstruct its pencil");
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Matrix, Scalar};
    use crate::strata::generic_form;
    use CanonicalBlock::*;

    fn s(v: i64) -> Scalar {
        Scalar::from(v)
    }

    fn ktilde() -> FactoredForm {
        FactoredForm::new(CanonicalForm::new(vec![
            RightSingular(1),
            RightSingular(3),
            LeftSingular(0),
            LeftSingular(0),
        ]))
    }

    fn unit(i: usize) -> Vec<Scalar> {
        (0..6).map(|k| if k == i { s(1) } else { s(0) }).collect()
    }

    fn zero() -> Vec<Scalar> {
        vec![s(0); 6]
    }

    #[test]
    fn worked_example_matches_display() {
        let d = witness_decomposition(&ktilde(), &ComponentId::new(6, 6, 5, 2).unwrap()).unwrap();
        let row = |xs: [i64; 6]| xs.iter().map(|&x| s(x)).collect::<Vec<_>>();
        let expected = vec![
            RankOneTerm { u0: unit(0), u1: zero(), v0: row([0, 1, 0, 0, 0, 0]), v1: row([1, 0, 0, 0, 0, 0]) },
            RankOneTerm { u0: unit(1), u1: zero(), v0: row([0, 0, 0, 1, 0, 0]), v1: row([0, 0, 1, 0, 0, 0]) },
            RankOneTerm { u0: zero(), u1: unit(2), v0: unit(3), v1: zero() },
            RankOneTerm { u0: row([0, 0, 1, 0, 0, 0]), u1: row([0, 0, 0, 1, 0, 0]), v0: unit(4), v1: zero() },
            RankOneTerm { u0: unit(3), u1: zero(), v0: unit(5), v1: zero() },
        ];
        assert_eq!(d.terms, expected);
    }

    #[test]
    fn non_member_is_rejected() {
        let err = witness_decomposition(&ktilde(), &ComponentId::new(6, 6, 4, 2).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotMember(_)));
    }

    #[test]
    fn generic_forms_decompose_directly() {
        for c in ComponentId::all_for_size(4, 5) {
            let d = witness_decomposition(&FactoredForm::new(generic_form(&c)), &c).unwrap();
            assert_eq!(d.r(), c.r);
        }
    }

    #[test]
    fn transpose_case_and_equivalence() {
        let form = CanonicalForm::new(vec![
            LeftSingular(2),
            CanonicalBlock::jordan(1, s(2)),
            LeftSingular(0),
            RightSingular(0),
            RightSingular(0),
        ]);
        let e = Matrix::from_ints(&[
            &[1, 1, 0, 0, 0],
            &[0, 1, 0, 0, 0],
            &[0, 0, 1, 2, 0],
            &[0, 0, 0, 1, 0],
            &[3, 0, 0, 0, 1],
        ]);
        let f = Matrix::from_ints(&[
            &[1, 0, 0, 0, 0],
            &[2, 1, 0, 0, 0],
            &[0, 0, 1, 0, 0],
            &[0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 1],
        ]);
        let ff = FactoredForm::with_equivalence(form, e, f);
        let q = ff.pencil().unwrap();
        let mut transposed_case = false;
        for a in crate::strata::components_of(&q, 4).unwrap() {
            transposed_case |= 2 > 4 - a;
            let d = witness_decomposition(&ff, &ComponentId::new(5, 5, 4, a).unwrap()).unwrap();
            assert_eq!(d.reconstruct(5, 5).unwrap(), q);
        }
        assert!(transposed_case);
    }

    #[test]
    fn size_mismatch() {
        assert!(witness_decomposition(&ktilde(), &ComponentId::new(5, 6, 4, 2).unwrap()).is_err());
    }
}
