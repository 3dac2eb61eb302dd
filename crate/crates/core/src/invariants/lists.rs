use std::fmt;

use serde::Serialize;

use super::KroneckerStructure;
use crate::exactalg::Poly;

/// An eigenvalue class: all roots of a squarefree polynomial, or ∞.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EigenClass {
    Finite(Poly),
    Infinite,
    /// Any μ that is not an eigenvalue of either pencil under comparison.
    Generic,
}

impl fmt::Display for EigenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenClass::Finite(p) => write!(f, "{p}"),
            EigenClass::Infinite => f.write_str("inf"),
            EigenClass::Generic => f.write_str("generic"),
        }
    }
}

impl Serialize for EigenClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The lists R(Q), L(Q) and the Weyr characteristics per eigenvalue class.
///
/// `r[i]` is the number of right singular blocks of order at least i (so
/// `r[0]` counts all of them); trailing zeros past index 0 are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantLists {
    pub r: Vec<usize>,
    pub l: Vec<usize>,
    pub weyr: Vec<(EigenClass, Vec<usize>)>,
}

impl InvariantLists {
    pub fn weyr_of(&self, class: &EigenClass) -> &[usize] {
        self.weyr.iter().find(|(c, _)| c == class).map_or(&[], |(_, w)| w.as_slice())
    }
}

/// `out[j-1] = #{x ∈ parts : x ≥ j}`.
pub fn conjugate_partition(parts: &[usize]) -> Vec<usize> {
    let max = parts.iter().copied().max().unwrap_or(0);
    (1..=max).map(|j| parts.iter().filter(|&&x| x >= j).count()).collect()
}

fn threshold_counts(indices: &[usize]) -> Vec<usize> {
    let mut out = vec![indices.len()];
    out.extend(conjugate_partition(indices));
    out
}

pub fn invariant_lists(s: &KroneckerStructure) -> InvariantLists {
    let mut weyr: Vec<(EigenClass, Vec<usize>)> =
        s.finite.iter().map(|c| (EigenClass::Finite(c.class.clone()), conjugate_partition(&c.segre))).collect();
    if !s.infinite.is_empty() {
        weyr.push((EigenClass::Infinite, conjugate_partition(&s.infinite)));
    }
    InvariantLists { r: threshold_counts(&s.right), l: threshold_counts(&s.left), weyr }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(conjugate_partition(&[2, 1]), vec![2, 1]);
        assert_eq!(conjugate_partition(&[3]), vec![1, 1, 1]);
        assert!(conjugate_partition(&[]).is_empty());
        // ε-multiset {1,3}: r_0 = 2, (r_1, r_2, r_3) = (2, 1, 1)
        assert_eq!(threshold_counts(&[1, 3]), vec![2, 2, 1, 1]);
        assert_eq!(threshold_counts(&[0, 0]), vec![2]);
    }
}
