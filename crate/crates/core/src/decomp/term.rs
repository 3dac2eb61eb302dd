use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Poly, Scalar};
use crate::pencil::Pencil;

fn zeros(len: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); len]
}

fn unit(len: usize, i: usize) -> Vec<Scalar> {
    let mut v = zeros(len);
    v[i] = Scalar::one();
    v
}

fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `u(λ)v(λ)ᵀ` with `u = u0 + λu1` and `v = v0 + λv1`, at least one of the
/// two constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneTerm {
    pub u0: Vec<Scalar>,
    pub u1: Vec<Scalar>,
    pub v0: Vec<Scalar>,
    pub v1: Vec<Scalar>,
}

impl RankOneTerm {
    pub fn zero(m: usize, n: usize) -> Self {
        RankOneTerm { u0: zeros(m), u1: zeros(m), v0: zeros(n), v1: zeros(n) }
    }

    /// `u · (v0 + λv1)ᵀ` with u constant.
    pub fn constant_u(u: Vec<Scalar>, v0: Vec<Scalar>, v1: Vec<Scalar>) -> Self {
        RankOneTerm { u1: zeros(u.len()), u0: u, v0, v1 }
    }

    /// `(u0 + λu1) · vᵀ` with v constant.
    pub fn constant_v(u0: Vec<Scalar>, u1: Vec<Scalar>, v: Vec<Scalar>) -> Self {
        RankOneTerm { u0, u1, v1: zeros(v.len()), v0: v }
    }

    /// `e_i · e_jᵀ` scaled into the constant or the λ coefficient.
    pub(crate) fn unit_pair(m: usize, n: usize, i: usize, j: usize, lambda_on_u: bool) -> Self {
        if lambda_on_u {
            RankOneTerm::constant_v(zeros(m), unit(m, i), unit(n, j))
        } else {
            RankOneTerm::constant_u(unit(m, i), unit(n, j), zeros(n))
        }
    }

    /// The padding term `0 · e_1ᵀ`.
    pub fn padding(m: usize, n: usize) -> Self {
        RankOneTerm::constant_u(zeros(m), unit(n, 0), zeros(n))
    }

    pub fn m(&self) -> usize {
        self.u0.len()
    }

    pub fn n(&self) -> usize {
        self.v0.len()
    }

    pub fn is_u_constant(&self) -> bool {
        is_zero_vec(&self.u1)
    }

    pub fn is_v_constant(&self) -> bool {
        is_zero_vec(&self.v1)
    }

    pub fn is_valid(&self) -> bool {
        self.u1.len() == self.u0.len()
            && self.v1.len() == self.v0.len()
            && (self.is_u_constant() || self.is_v_constant())
    }

    pub fn u_poly(&self) -> Vec<Poly> {
        self.u0.iter().zip(&self.u1).map(|(c0, c1)| Poly::linear(c0.clone(), c1.clone())).collect()
    }

    pub fn v_poly(&self) -> Vec<Poly> {
        self.v0.iter().zip(&self.v1).map(|(c0, c1)| Poly::linear(c0.clone(), c1.clone())).collect()
    }

    /// Places a block-local term inside an m×n pencil at the given offsets.
    pub(crate) fn embed(&self, m: usize, n: usize, row: usize, col: usize) -> RankOneTerm {
        let place = |v: &[Scalar], len: usize, off: usize| {
            let mut out = zeros(len);
            out[off..off + v.len()].clone_from_slice(v);
            out
        };
        RankOneTerm {
            u0: place(&self.u0, m, row),
            u1: place(&self.u1, m, row),
            v0: place(&self.v0, n, col),
            v1: place(&self.v1, n, col),
        }
    }

    /// The term of `E·(u vᵀ)·F`, that is `u ↦ E·u` and `v ↦ Fᵀ·v`.
    pub(crate) fn transform(&self, e: &Matrix, ft: &Matrix) -> RankOneTerm {
        RankOneTerm {
            u0: e.mul_vec(&self.u0),
            u1: e.mul_vec(&self.u1),
            v0: ft.mul_vec(&self.v0),
            v1: ft.mul_vec(&self.v1),
        }
    }

    /// `v uᵀ`, the term of the transpose.
    pub(crate) fn swapped(self) -> RankOneTerm {
        RankOneTerm { u0: self.v0, u1: self.v1, v0: self.u0, v1: self.u1 }
    }

    fn add_to(&self, a: &mut Matrix, b: &mut Matrix) {
        for (p, (u0, u1)) in self.u0.iter().zip(&self.u1).enumerate() {
            for (q, (v0, v1)) in self.v0.iter().zip(&self.v1).enumerate() {
                if !u0.is_zero() {
                    if !v0.is_zero() {
                        a[(p, q)] += &(u0 * v0);
                    }
                    if !v1.is_zero() {
                        b[(p, q)] += &(u0 * v1);
                    }
                }
                if !u1.is_zero() && !v0.is_zero() {
                    b[(p, q)] += &(u1 * v0);
                }
            }
        }
    }
}

/// `Σ u_i(λ)v_i(λ)ᵀ` with the first `a` terms having constant u and the
/// remaining ones constant v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePatternDecomposition {
    pub a: usize,
    pub terms: Vec<RankOneTerm>,
}

impl DegreePatternDecomposition {
    pub fn new(a: usize, terms: Vec<RankOneTerm>) -> Result<Self> {
        let d = DegreePatternDecomposition { a, terms };
        d.validate()?;
        Ok(d)
    }

    pub fn r(&self) -> usize {
        self.terms.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.a > self.terms.len() {
            return Err(Error::InvalidArgument(format!("a = {} exceeds the {} terms", self.a, self.terms.len())));
        }
        if let Some(first) = self.terms.first() {
            let (m, n) = (first.m(), first.n());
            if let Some(i) = self.terms.iter().position(|t| !t.is_valid() || t.m() != m || t.n() != n) {
                return Err(Error::DimensionMismatch(format!("term {} has inconsistent vector lengths", i + 1)));
            }
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i < self.a && !t.is_u_constant() {
                return Err(Error::InvalidArgument(format!("term {} must have a constant u", i + 1)));
            }
            if i >= self.a && !t.is_v_constant() {
                return Err(Error::InvalidArgument(format!("term {} must have a constant v", i + 1)));
            }
        }
        Ok(())
    }

    pub fn reconstruct(&self, m: usize, n: usize) -> Result<Pencil> {
        if let Some(i) = self.terms.iter().position(|t| t.m() != m || t.n() != n || !t.is_valid()) {
            return Err(Error::DimensionMismatch(format!("term {} does not fit a {m}×{n} pencil", i + 1)));
        }
        let (mut a, mut b) = (Matrix::zeros(m, n), Matrix::zeros(m, n));
        for t in &self.terms {
            t.add_to(&mut a, &mut b);
        }
        Pencil::new(a, b)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let keep = |v: &[Scalar]| (!is_zero_vec(v)).then(|| v.to_vec());
        let file = DecompositionFile {
            a: self.a,
            terms: self
                .terms
                .iter()
                .map(|t| TermFile { u0: Some(t.u0.clone()), u1: keep(&t.u1), v0: Some(t.v0.clone()), v1: keep(&t.v1) })
                .collect(),
        };
        serde_json::to_value(file).expect("decomposition serializes")
    }

    /// Parses the JSON form; absent vectors are zero.
    pub fn from_json_str(s: &str, m: usize, n: usize) -> Result<Self> {
        let file: DecompositionFile = serde_json::from_str(s)?;
        let fill = |v: Option<Vec<Scalar>>, len: usize, what: &str, i: usize| -> Result<Vec<Scalar>> {
            match v {
                None => Ok(zeros(len)),
                Some(v) if v.len() == len => Ok(v),
                Some(v) => Err(Error::Parse(format!("term {}: {what} has length {} instead of {len}", i + 1, v.len()))),
            }
        };
        let terms = file
            .terms
            .into_iter()
            .enumerate()
            .map(|(i, t)| {
                Ok(RankOneTerm {
                    u0: fill(t.u0, m, "u0", i)?,
                    u1: fill(t.u1, m, "u1", i)?,
                    v0: fill(t.v0, n, "v0", i)?,
                    v1: fill(t.v1, n, "v1", i)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        DegreePatternDecomposition::new(file.a, terms)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    u0: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    u1: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v0: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v1: Option<Vec<Scalar>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecompositionFile {
    a: usize,
    terms: Vec<TermFile>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_give_zero_pencil() {
        let d = DegreePatternDecomposition::new(1, vec![RankOneTerm::zero(2, 3), RankOneTerm::zero(2, 3)]).unwrap();
        assert!(d.reconstruct(2, 3).unwrap().is_zero());
        assert!(d.reconstruct(3, 2).is_err());
    }

    #[test]
    fn pattern_is_enforced() {
        let t = RankOneTerm::unit_pair(2, 2, 0, 1, true);
        assert!(DegreePatternDecomposition::new(1, vec![t.clone()]).is_err());
        assert!(DegreePatternDecomposition::new(0, vec![t]).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let d = DegreePatternDecomposition::new(
            1,
            vec![RankOneTerm::unit_pair(2, 3, 1, 2, false), RankOneTerm::unit_pair(2, 3, 0, 0, true)],
        )
        .unwrap();
        let text = d.to_json_value().to_string();
        assert_eq!(DegreePatternDecomposition::from_json_str(&text, 2, 3).unwrap(), d);
        assert!(DegreePatternDecomposition::from_json_str(&text, 3, 3).is_err());
        let sparse = r#"{"a":0,"terms":[{"u1":["1","0"],"v0":["0","0","1"]}]}"#;
        let p = DegreePatternDecomposition::from_json_str(sparse, 2, 3).unwrap().reconstruct(2, 3).unwrap();
        assert_eq!(p.entry(0, 2), Poly::lambda());
    }
}
