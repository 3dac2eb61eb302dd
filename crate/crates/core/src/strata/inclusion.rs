use std::fmt;

use serde::Serialize;

use super::component::{generic_form, ComponentId};
use crate::error::{Error, Result};
use crate::exactalg::{gcd_free_basis, Poly};
use crate::invariants::{conjugate_partition, invariant_lists, kronecker_structure, EigenClass, KroneckerStructure};
use crate::pencil::Pencil;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    /// Right minimal index lists.
    #[serde(rename = "i")]
    Right,
    /// Left minimal index lists.
    #[serde(rename = "ii")]
    Left,
    /// Weyr characteristics at one eigenvalue class.
    #[serde(rename = "iii")]
    Eigen,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Right => "(i)",
            Condition::Left => "(ii)",
            Condition::Eigen => "(iii)",
        })
    }
}

/// The first failing majorization prefix. `prefix` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: Condition,
    pub prefix: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<EigenClass>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {} fails at prefix {}", self.condition, self.prefix)?;
        if let Some(c) = &self.class {
            write!(f, " for eigenvalue class {c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionVerdict {
    pub included: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Violation>,
}

impl InclusionVerdict {
    fn from_result(r: std::result::Result<(), Violation>) -> Self {
        match r {
            Ok(()) => InclusionVerdict { included: true, witness: None },
            Err(v) => InclusionVerdict { included: false, witness: Some(v) },
        }
    }
}

/// Tests `big + cb ≽ small + cs` for lists padded with infinitely many
/// zeros, returning the first prefix length at which the partial sums of
/// the left side fall below those of the right side.
fn dominates(big: &[usize], cb: usize, small: &[usize], cs: usize) -> std::result::Result<(), usize> {
    let jmax = big.len().max(small.len()).max(1);
    let (mut sb, mut ss) = (0usize, 0usize);
    for j in 1..=jmax {
        sb += big.get(j - 1).copied().unwrap_or(0) + cb;
        ss += small.get(j - 1).copied().unwrap_or(0) + cs;
        if sb < ss {
            return Err(j);
        }
    }
    if cb >= cs {
        Ok(())
    } else {
        Err(jmax + (sb - ss) / (cs - cb) + 1)
    }
}

fn check_conditions(p: &KroneckerStructure, q: &KroneckerStructure) -> std::result::Result<(), Violation> {
    let lp = invariant_lists(p);
    let lq = invariant_lists(q);
    let fail = |condition, prefix, class| Violation { condition, prefix, class };

    dominates(&lp.r, p.nrank, &lq.r, q.nrank).map_err(|j| fail(Condition::Right, j, None))?;
    dominates(&lp.l, p.nrank, &lq.l, q.nrank).map_err(|j| fail(Condition::Left, j, None))?;

    let all_classes: Vec<Poly> = p.finite.iter().chain(&q.finite).map(|c| c.class.clone()).collect();
    let basis = gcd_free_basis(&all_classes).expect("class polynomials are nonzero");
    let weyr_at = |s: &KroneckerStructure, g: &Poly| -> Vec<usize> {
        s.finite.iter().find(|c| g.divides(&c.class)).map(|c| conjugate_partition(&c.segre)).unwrap_or_default()
    };
    let mut classes: Vec<(EigenClass, Vec<usize>, Vec<usize>)> = basis
        .into_iter()
        .map(|g| {
            let (wp, wq) = (weyr_at(p, &g), weyr_at(q, &g));
            (EigenClass::Finite(g), wp, wq)
        })
        .collect();
    classes.push((
        EigenClass::Infinite,
        lp.weyr_of(&EigenClass::Infinite).to_vec(),
        lq.weyr_of(&EigenClass::Infinite).to_vec(),
    ));
    classes.push((EigenClass::Generic, Vec::new(), Vec::new()));

    for (class, wp, wq) in classes {
        let by_rows = dominates(&wq, lq.r[0], &wp, lp.r[0]);
        let by_cols = dominates(&wq, lq.l[0], &wp, lp.l[0]);
        assert_eq!(by_rows.is_ok(), by_cols.is_ok(), "row and column forms of the eigenvalue condition disagree");
        by_rows.map_err(|j| fail(Condition::Eigen, j, Some(class)))?;
    }
    Ok(())
}

/// Decides `O(Q)‾ ⊆ O(P)‾` from the structures of P and Q.
pub fn closure_includes_structures(p: &KroneckerStructure, q: &KroneckerStructure) -> InclusionVerdict {
    InclusionVerdict::from_result(check_conditions(p, q))
}

/// Decides whether Q lies in the closure of the orbit of P.
pub fn closure_includes(p: &Pencil, q: &Pencil) -> Result<InclusionVerdict> {
    if (p.m(), p.n()) != (q.m(), q.n()) {
        return Err(Error::DimensionMismatch(format!(
            "cannot compare a {}×{} pencil with a {}×{} pencil",
            p.m(),
            p.n(),
            q.m(),
            q.n()
        )));
    }
    Ok(closure_includes_structures(&kronecker_structure(p), &kronecker_structure(q)))
}

pub fn component_member_structure(q: &KroneckerStructure, c: &ComponentId) -> InclusionVerdict {
    let k = KroneckerStructure::from_canonical_form(&generic_form(c));
    closure_includes_structures(&k, q)
}

pub fn component_member(q: &Pencil, c: &ComponentId) -> Result<bool> {
    check_size(q, c)?;
    Ok(component_member_structure(&kronecker_structure(q), c).included)
}

pub(crate) fn check_size(q: &Pencil, c: &ComponentId) -> Result<()> {
    if (q.m(), q.n()) != (c.m, c.n) {
        return Err(Error::DimensionMismatch(format!(
            "pencil is {}×{} but the component is for {}×{} pencils",
            q.m(),
            q.n(),
            c.m,
            c.n
        )));
    }
    Ok(())
}

/// All `a` such that Q lies in `C_a^r`, in increasing order.
pub fn components_of(q: &Pencil, r: usize) -> Result<Vec<usize>> {
    let s = kronecker_structure(q);
    if s.nrank > r {
        return Err(Error::NormalRankExceeds { nrank: s.nrank, r });
    }
    let ids = ComponentId::all_for(q.m(), q.n(), r);
    if ids.is_empty() {
        ComponentId::new(q.m(), q.n(), r, 0)?;
    }
    let found: Vec<usize> = ids.iter().filter(|c| component_member_structure(&s, c).included).map(|c| c.a).collect();
    assert!(!found.is_empty(), "every pencil of normal rank ≤ r lies in some component");
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Scalar;
    use crate::pencil::{CanonicalBlock, CanonicalBlock::*, CanonicalForm};

    fn k() -> Pencil {
        CanonicalForm::new(vec![RightSingular(2), LeftSingular(3)]).pencil().unwrap()
    }

    fn ktilde() -> Pencil {
        CanonicalForm::new(vec![RightSingular(1), RightSingular(3), LeftSingular(0), LeftSingular(0)]).pencil().unwrap()
    }

    #[test]
    fn dominates_tail() {
        assert_eq!(dominates(&[2], 0, &[1, 1], 0), Ok(()));
        assert_eq!(dominates(&[1, 1], 0, &[2], 0), Err(1));
        // big + 0 vs small + 1: diff after jmax=1 is 2, one unit per step
        assert_eq!(dominates(&[3], 0, &[0], 1), Err(4));
        assert_eq!(dominates(&[], 2, &[], 2), Ok(()));
    }

    #[test]
    fn worked_example() {
        let v = closure_includes(&k(), &ktilde()).unwrap();
        assert!(v.included && v.witness.is_none());
        let v = closure_includes(&ktilde(), &k()).unwrap();
        assert!(!v.included);
        let w = v.witness.unwrap();
        assert_eq!((w.condition, w.prefix), (Condition::Right, 3));
    }

    #[test]
    fn membership_examples() {
        assert!(component_member(&ktilde(), &ComponentId::new(6, 6, 5, 2).unwrap()).unwrap());
        assert!(!component_member(&ktilde(), &ComponentId::new(6, 6, 4, 2).unwrap()).unwrap());
        assert_eq!(components_of(&ktilde(), 4).unwrap(), vec![4]);
        assert!(components_of(&ktilde(), 5).unwrap().contains(&2));
        assert!(matches!(components_of(&k(), 4), Err(Error::NormalRankExceeds { .. })));
    }

    #[test]
    fn zero_pencil_in_everything() {
        let z = Pencil::zero(3, 4).unwrap();
        for r in 1..=3 {
            let all: Vec<usize> = ComponentId::all_for(3, 4, r).iter().map(|c| c.a).collect();
            assert_eq!(components_of(&z, r).unwrap(), all);
        }
    }

    #[test]
    fn eigenvalue_condition() {
        // one 2×2 Jordan block against two 1×1 blocks at the same eigenvalue
        let j2 = CanonicalBlock::jordan(2, Scalar::zero()).pencil().unwrap();
        let j11 = CanonicalForm::new(vec![
            CanonicalBlock::jordan(1, Scalar::zero()),
            CanonicalBlock::jordan(1, Scalar::zero()),
        ])
        .pencil()
        .unwrap();
        assert!(closure_includes(&j2, &j11).unwrap().included);
        let v = closure_includes(&j11, &j2).unwrap();
        assert_eq!(v.witness.unwrap().condition, Condition::Eigen);
        let other = CanonicalForm::new(vec![
            CanonicalBlock::jordan(1, Scalar::from(1)),
            CanonicalBlock::jordan(1, Scalar::from(2)),
        ])
        .pencil()
        .unwrap();
        assert!(!closure_includes(&j2, &other).unwrap().included);
    }

    #[test]
    fn mismatch() {
        assert!(closure_includes(&k(), &Pencil::zero(2, 2).unwrap()).is_err());
    }
}
