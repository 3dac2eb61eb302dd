use serde::Serialize;

use crate::exactalg::{Poly, Scalar};
use crate::pencil::{CanonicalBlock, CanonicalForm};

/// A squarefree monic class polynomial together with the Segre partition
/// shared by all of its roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FiniteClass {
    #[serde(serialize_with = "ser_display")]
    pub class: Poly,
    pub segre: Vec<usize>,
}

fn ser_display<S: serde::Serializer>(p: &Poly, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// Complete strict-equivalence invariants of an m×n pencil.
///
/// Finite classes are stored in a canonical shape: roots sharing a Segre
/// partition are merged into one class, and classes are sorted. Two pencils
/// are strictly equivalent iff their structures compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KroneckerStructure {
    #[serde(skip)]
    pub m: usize,
    #[serde(skip)]
    pub n: usize,
    pub nrank: usize,
    pub right: Vec<usize>,
    pub left: Vec<usize>,
    pub finite: Vec<FiniteClass>,
    pub infinite: Vec<usize>,
}

/// Merges classes with identical Segre partitions and sorts the result.
pub(crate) fn merge_classes(classes: Vec<FiniteClass>) -> Vec<FiniteClass> {
    let mut merged: Vec<FiniteClass> = Vec::new();
    for c in classes {
        match merged.iter_mut().find(|m| m.segre == c.segre) {
            Some(m) => m.class = &m.class * &c.class,
            None => merged.push(c),
        }
    }
    merged.sort_by(|x, y| x.segre.cmp(&y.segre).then_with(|| x.class.to_string().cmp(&y.class.to_string())));
    merged
}

impl KroneckerStructure {
    /// Structure read off a known canonical form, without touching the
    /// pencil entries.
    pub fn from_canonical_form(cf: &CanonicalForm) -> Self {
        let (m, n) = cf.dims();
        let mut right = Vec::new();
        let mut left = Vec::new();
        let mut infinite = Vec::new();
        let mut by_mu: Vec<(Scalar, Vec<usize>)> = Vec::new();
        for b in &cf.blocks {
            match b {
                CanonicalBlock::RightSingular(e) => right.push(*e),
                CanonicalBlock::LeftSingular(e) => left.push(*e),
                CanonicalBlock::InfiniteJordan(u) => infinite.push(*u),
                CanonicalBlock::FiniteJordan { size, mu } => match by_mu.iter_mut().find(|(x, _)| x == mu) {
                    Some((_, sizes)) => sizes.push(*size),
                    None => by_mu.push((mu.clone(), vec![*size])),
                },
            }
        }
        right.sort_unstable();
        left.sort_unstable();
        infinite.sort_unstable_by(|a, b| b.cmp(a));
        let finite = by_mu
            .into_iter()
            .map(|(mu, mut segre)| {
                segre.sort_unstable_by(|a, b| b.cmp(a));
                // det(J_k(μ) + λI) = (λ + μ)^k
                FiniteClass { class: Poly::linear(mu, Scalar::one()), segre }
            })
            .collect();
        KroneckerStructure { m, n, nrank: n - cf.count_right(), right, left, finite: merge_classes(finite), infinite }
    }

    pub fn epsilon(&self) -> usize {
        self.right.iter().sum()
    }

    pub fn eta(&self) -> usize {
        self.left.iter().sum()
    }

    /// Total size of the regular part.
    pub fn regular_size(&self) -> usize {
        let fin: usize =
            self.finite.iter().map(|c| c.class.degree().unwrap_or(0) * c.segre.iter().sum::<usize>()).sum();
        fin + self.infinite.iter().sum::<usize>()
    }

    pub fn has_eigenvalues(&self) -> bool {
        !self.finite.is_empty() || !self.infinite.is_empty()
    }

    /// Structure of the transposed pencil.
    pub fn transposed(&self) -> KroneckerStructure {
        KroneckerStructure {
            m: self.n,
            n: self.m,
            nrank: self.nrank,
            right: self.left.clone(),
            left: self.right.clone(),
            finite: self.finite.clone(),
            infinite: self.infinite.clone(),
        }
    }

    /// Panics if the block bookkeeping does not add up; that can only be an
    /// implementation bug.
    pub(crate) fn assert_consistent(&self) {
        assert_eq!(self.right.len(), self.n - self.nrank, "right index count must be n − nrank");
        assert_eq!(self.left.len(), self.m - self.nrank, "left index count must be m − nrank");
        assert_eq!(
            self.epsilon() + self.eta() + self.regular_size(),
            self.nrank,
            "ε + η + regular size must equal the normal rank"
        );
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("structure serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use CanonicalBlock::*;

    #[test]
    fn from_form_merges_equal_segre() {
        let cf = CanonicalForm::new(vec![
            CanonicalBlock::jordan(1, Scalar::from(1)),
            CanonicalBlock::jordan(1, Scalar::from(2)),
            CanonicalBlock::jordan(2, Scalar::from(3)),
            RightSingular(1),
        ]);
        let s = KroneckerStructure::from_canonical_form(&cf);
        assert_eq!(s.nrank, 5);
        assert_eq!(s.finite.len(), 2);
        assert_eq!(s.finite[0].class, Poly::from_ints(&[2, 3, 1]));
        assert_eq!(s.finite[0].segre, vec![1]);
        assert_eq!(s.finite[1].class, Poly::from_ints(&[3, 1]));
        s.assert_consistent();
    }

    #[test]
    fn json_shape() {
        let cf =
            CanonicalForm::new(vec![RightSingular(1), InfiniteJordan(1), CanonicalBlock::jordan(1, Scalar::zero())]);
        let v = KroneckerStructure::from_canonical_form(&cf).to_json_value();
        assert_eq!(
            v.to_string(),
            r#"{"finite":[{"class":"1*l","segre":[1]}],"infinite":[1],"left":[],"nrank":3,"right":[1]}"#
        );
    }
}
