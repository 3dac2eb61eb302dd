use proptest::prelude::*;

use pencil_strata::decomp::{sample_component, DegreePatternDecomposition};
use pencil_strata::exactalg::{gcd_free_basis, poly_gcd, Matrix, Poly, Scalar};
use pencil_strata::invariants::{kronecker_structure, normal_rank, KroneckerStructure};
use pencil_strata::pencil::{CanonicalBlock, CanonicalBlock::*, CanonicalForm, Pencil};
use pencil_strata::strata::{closure_includes_structures, component_member_structure, generic_pencil, ComponentId};

fn block() -> impl Strategy<Value = CanonicalBlock> {
    prop_oneof![
        (0usize..=2).prop_map(RightSingular),
        (0usize..=2).prop_map(LeftSingular),
        (1usize..=2, -1i64..=1).prop_map(|(k, mu)| CanonicalBlock::jordan(k, Scalar::from(mu))),
        (1usize..=2).prop_map(InfiniteJordan),
    ]
}

fn form(max: usize) -> impl Strategy<Value = CanonicalForm> {
    prop::collection::vec(block(), 1..=4).prop_map(CanonicalForm::new).prop_filter("dimensions in range", move |cf| {
        let (m, n) = cf.dims();
        (1..=max).contains(&m) && (1..=max).contains(&n)
    })
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, n * n)
        .prop_map(move |v| {
            let rows = v.chunks(n).map(|r| r.iter().map(|&x| Scalar::from(x)).collect()).collect();
            Matrix::from_rows(rows).unwrap()
        })
        .prop_filter("invertible", Matrix::is_invertible)
}

fn conjugated_form() -> impl Strategy<Value = (CanonicalForm, Pencil)> {
    form(5).prop_flat_map(|cf| {
        let (m, n) = cf.dims();
        (Just(cf), invertible(m), invertible(n)).prop_map(|(cf, e, f)| {
            let p = cf.pencil().unwrap().apply_equivalence(&e, &f).unwrap();
            (cf, p)
        })
    })
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-3i64..=3, 1..=4).prop_map(|cs| Poly::from_ints(&cs)).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn structure_survives_equivalence((cf, p) in conjugated_form()) {
        let s = kronecker_structure(&p);
        prop_assert_eq!(&s, &KroneckerStructure::from_canonical_form(&cf));
        prop_assert_eq!(normal_rank(&p), normal_rank(&p.transpose()));
        prop_assert_eq!(kronecker_structure(&p.transpose()), s.transposed());
    }

    #[test]
    fn basis_is_coprime_and_squarefree(ps in prop::collection::vec(poly(), 1..=4)) {
        let basis = gcd_free_basis(&ps).unwrap();
        for (i, b) in basis.iter().enumerate() {
            prop_assert!(!b.is_constant());
            prop_assert!(poly_gcd(b, &b.derivative()).unwrap().is_constant());
            for c in &basis[i + 1..] {
                prop_assert!(poly_gcd(b, c).unwrap().is_constant());
            }
        }
        for p in &ps {
            let mut rest = p.clone();
            for b in &basis {
                for _ in 0..p.multiplicity(b) {
                    rest = rest.exact_div(b).unwrap();
                }
            }
            prop_assert!(rest.is_constant(), "{} leaves {} after removing the basis", p, rest);
        }
    }

    #[test]
    fn smith_factors_form_a_divisibility_chain((_, p) in conjugated_form()) {
        let d = p.to_poly_matrix().smith_form();
        prop_assert_eq!(d.len(), normal_rank(&p));
        for w in d.windows(2) {
            prop_assert!(w[0].divides(&w[1]));
        }
        for f in &d {
            prop_assert!(f.leading().is_some_and(Scalar::is_one));
        }
    }

    #[test]
    fn pencil_json_round_trip((_, p) in conjugated_form()) {
        let text = p.to_json_value().to_string();
        prop_assert_eq!(Pencil::from_json_str(&text).unwrap(), p);
    }

    #[test]
    fn closure_is_reflexive_and_transitive(a in form(4), b in form(4), c in form(4)) {
        let s: Vec<KroneckerStructure> = [a, b, c].iter().map(KroneckerStructure::from_canonical_form).collect();
        prop_assert!(closure_includes_structures(&s[0], &s[0]).included);
        let same = |x: &KroneckerStructure, y: &KroneckerStructure| (x.m, x.n) == (y.m, y.n);
        if same(&s[0], &s[1]) && same(&s[1], &s[2])
            && closure_includes_structures(&s[0], &s[1]).included
            && closure_includes_structures(&s[1], &s[2]).included
        {
            prop_assert!(closure_includes_structures(&s[0], &s[2]).included);
        }
    }

    #[test]
    fn membership_is_transpose_dual(cf in form(5)) {
        let s = KroneckerStructure::from_canonical_form(&cf);
        let (m, n) = cf.dims();
        for r in s.nrank.max(1)..=m.min(n) {
            for c in ComponentId::all_for(m, n, r) {
                prop_assert_eq!(
                    component_member_structure(&s, &c).included,
                    component_member_structure(&s.transposed(), &c.transposed()).included
                );
            }
        }
    }

    #[test]
    fn generic_pencils_are_members_without_eigenvalues(m in 1usize..=4, n in 1usize..=4, r in 1usize..=4) {
        for c in ComponentId::all_for(m, n, r) {
            let g = kronecker_structure(&generic_pencil(&c));
            prop_assert_eq!(g.nrank, c.r);
            prop_assert!(component_member_structure(&g, &c).included);
            prop_assert!(!g.has_eigenvalues());
        }
    }

    #[test]
    fn sampled_decomposition_json_round_trip(seed in any::<u64>(), idx in 0usize..64) {
        let ids: Vec<ComponentId> = (1..=4).flat_map(|m| (1..=4).flat_map(move |n| ComponentId::all_for_size(m, n))).collect();
        let c = &ids[idx % ids.len()];
        let (_, p, d) = sample_component(c, seed, 4);
        let text = d.to_json_value().to_string();
        let back = DegreePatternDecomposition::from_json_str(&text, c.m, c.n).unwrap();
        prop_assert_eq!(back.reconstruct(c.m, c.n).unwrap(), p);
    }

    #[test]
    fn scalar_text_round_trip(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
        let x = &Scalar::ratio(a, b) + &(&Scalar::ratio(c, d) * &Scalar::i());
        prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }
}
