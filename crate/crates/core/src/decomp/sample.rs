use num_integer::Roots;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::term::{DegreePatternDecomposition, RankOneTerm};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar};
use crate::invariants::normal_rank;
use crate::pencil::Pencil;
use crate::strata::{ComponentId, ComponentParams};

/// Redraws allowed before giving up on a full-rank perturbation.
pub const PERTURB_RETRIES: usize = 32;

/// Grid resolution of a single perturbation step.
const GRID: i64 = 1000;

impl ComponentParams {
    pub fn decomposition(&self) -> DegreePatternDecomposition {
        let c = &self.component;
        let terms = (0..c.r)
            .map(|i| {
                if i < c.a {
                    RankOneTerm::constant_u(self.u0[i].clone(), self.v0[i].clone(), self.v1[i].clone())
                } else {
                    RankOneTerm::constant_v(self.u0[i].clone(), self.u1[i - c.a].clone(), self.v0[i].clone())
                }
            })
            .collect();
        DegreePatternDecomposition::new(c.a, terms).expect("f_a parameters follow the degree pattern")
    }
}

/// A random point of `f_a` with integer entries in `[−height, height]`.
pub fn sample_component(
    c: &ComponentId,
    seed: u64,
    height: u64,
) -> (ComponentParams, Pencil, DegreePatternDecomposition) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = i64::try_from(height).unwrap_or(i64::MAX);
    let params = ComponentParams::random_integers(c, &mut rng, h);
    let pencil = params.evaluate();
    let d = params.decomposition();
    (params, pencil, d)
}

fn norm2(v: &[Scalar]) -> f64 {
    v.iter().map(|x| x.abs_f64().powi(2)).sum::<f64>().sqrt()
}

/// `α(Q)`: the sum of the 2-norms of every nonconstant-pattern factor.
pub fn alpha(d: &DegreePatternDecomposition) -> f64 {
    d.terms
        .iter()
        .enumerate()
        .map(|(i, t)| norm2(&t.u0) + norm2(&t.v0) + if i < d.a { norm2(&t.v1) } else { norm2(&t.u1) })
        .sum()
}

/// `rε² + ε·α(Q)`, the bound on the Frobenius distance of a perturbation
/// of size ε.
pub fn frobenius_bound(d: &DegreePatternDecomposition, eps: f64) -> f64 {
    d.r() as f64 * eps * eps + eps * alpha(d)
}

fn ceil_sqrt(x: usize) -> usize {
    let s = x.sqrt();
    if s * s < x {
        s + 1
    } else {
        s
    }
}

fn perturb(v: &[Scalar], eps: &BigRational, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    let den = BigRational::from_integer((GRID * ceil_sqrt(v.len().max(1)) as i64).into());
    let step = eps / den;
    v.iter()
        .map(|x| {
            let k = BigRational::from_integer(rng.gen_range(-GRID..=GRID).into());
            x + &Scalar::from(&step * k)
        })
        .collect()
}

/// Moves every constant part `u_{i0}`, `v_{i0}` by at most `eps` in the
/// 2-norm so that both families become linearly independent and the sum
/// reaches normal rank r.
pub fn perturb_to_full_rank(
    d: &DegreePatternDecomposition,
    m: usize,
    n: usize,
    eps: &BigRational,
    seed: u64,
) -> Result<DegreePatternDecomposition> {
    let r = d.r();
    if r > m.min(n) {
        return Err(Error::InvalidArgument(format!("r = {r} exceeds min(m, n) = {}", m.min(n))));
    }
    if !eps.is_positive() {
        return Err(Error::InvalidArgument("eps must be positive".into()));
    }
    d.reconstruct(m, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..PERTURB_RETRIES {
        let terms: Vec<RankOneTerm> = d
            .terms
            .iter()
            .map(|t| RankOneTerm {
                u0: perturb(&t.u0, eps, &mut rng),
                u1: t.u1.clone(),
                v0: perturb(&t.v0, eps, &mut rng),
                v1: t.v1.clone(),
            })
            .collect();
        let u = Matrix::from_columns(m, &terms.iter().map(|t| t.u0.clone()).collect::<Vec<_>>());
        let v = Matrix::from_columns(n, &terms.iter().map(|t| t.v0.clone()).collect::<Vec<_>>());
        if u.rank() != r || v.rank() != r {
            continue;
        }
        let out = DegreePatternDecomposition::new(d.a, terms).expect("perturbation keeps the degree pattern");
        if normal_rank(&out.reconstruct(m, n)?) == r {
            return Ok(out);
        }
    }
    Err(Error::RetryBudgetExhausted(PERTURB_RETRIES))
}
