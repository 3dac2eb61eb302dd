use rand::Rng;
use serde::Serialize;

use super::component::ComponentId;
use crate::exactalg::{Matrix, Scalar};
use crate::pencil::Pencil;

/// A parameter point of the bilinear map `f_a`:
///
/// `Σ_{i≤a} u_{i0}(v_{i0} + λv_{i1})ᵀ + Σ_{i>a} (u_{i0} + λu_{i1})v_{i0}ᵀ`.
///
/// `u1[k]` belongs to term `a+1+k`; `v1[k]` belongs to term `k+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentParams {
    pub component: ComponentId,
    pub u0: Vec<Vec<Scalar>>,
    pub u1: Vec<Vec<Scalar>>,
    pub v0: Vec<Vec<Scalar>>,
    pub v1: Vec<Vec<Scalar>>,
}

impl ComponentParams {
    /// Number of scalar parameters, `m(2r−a) + n(r+a)`.
    pub fn count(c: &ComponentId) -> usize {
        c.m * (2 * c.r - c.a) + c.n * (c.r + c.a)
    }

    /// Parameters drawn entrywise by `draw`, in the order u0, u1, v0, v1.
    pub fn from_fn(c: &ComponentId, mut draw: impl FnMut() -> Scalar) -> Self {
        let mut vecs = |count: usize, len: usize| -> Vec<Vec<Scalar>> {
            (0..count).map(|_| (0..len).map(|_| draw()).collect()).collect()
        };
        let u0 = vecs(c.r, c.m);
        let u1 = vecs(c.r - c.a, c.m);
        let v0 = vecs(c.r, c.n);
        let v1 = vecs(c.a, c.n);
        ComponentParams { component: *c, u0, u1, v0, v1 }
    }

    /// Integer entries uniform in `[−height, height]`.
    pub fn random_integers<R: Rng>(c: &ComponentId, rng: &mut R, height: i64) -> Self {
        ComponentParams::from_fn(c, || Scalar::from(rng.gen_range(-height..=height)))
    }

    /// Entries `p/q` with `|p| ≤ 7`, `1 ≤ q ≤ 4`.
    pub fn random_rationals<R: Rng>(c: &ComponentId, rng: &mut R) -> Self {
        ComponentParams::from_fn(c, || Scalar::ratio(rng.gen_range(-7..=7), rng.gen_range(1..=4)))
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        [&self.u0, &self.u1, &self.v0, &self.v1].into_iter().flatten().flatten().cloned().collect()
    }

    pub fn from_flat(c: &ComponentId, flat: &[Scalar]) -> Self {
        assert_eq!(flat.len(), ComponentParams::count(c), "parameter vector has the wrong length");
        let mut it = flat.iter().cloned();
        ComponentParams::from_fn(c, || it.next().expect("length checked"))
    }

    pub fn evaluate(&self) -> Pencil {
        let c = &self.component;
        let (mut a, mut b) = (Matrix::zeros(c.m, c.n), Matrix::zeros(c.m, c.n));
        for i in 0..c.r {
            add_outer(&mut a, &self.u0[i], &self.v0[i]);
            if i < c.a {
                add_outer(&mut b, &self.u0[i], &self.v1[i]);
            } else {
                add_outer(&mut b, &self.u1[i - c.a], &self.v0[i]);
            }
        }
        Pencil::new(a, b).expect("component sizes are positive")
    }

    /// Jacobian of `f_a` at this point. Rows are the entries of A then of
    /// B in row-major order; columns follow [`flatten`](Self::flatten).
    pub fn jacobian(&self) -> Matrix {
        let c = &self.component;
        let (m, n, r, a) = (c.m, c.n, c.r, c.a);
        let mut jac = Matrix::zeros(2 * m * n, ComponentParams::count(c));
        let row_a = |p: usize, q: usize| p * n + q;
        let row_b = |p: usize, q: usize| m * n + p * n + q;
        let col_u0 = |i: usize, p: usize| i * m + p;
        let col_u1 = |k: usize, p: usize| r * m + k * m + p;
        let col_v0 = |i: usize, q: usize| (2 * r - a) * m + i * n + q;
        let col_v1 = |i: usize, q: usize| (2 * r - a) * m + r * n + i * n + q;
        for i in 0..r {
            for p in 0..m {
                for q in 0..n {
                    jac[(row_a(p, q), col_u0(i, p))] = self.v0[i][q].clone();
                    jac[(row_a(p, q), col_v0(i, q))] = self.u0[i][p].clone();
                    if i < a {
                        jac[(row_b(p, q), col_u0(i, p))] = self.v1[i][q].clone();
                        jac[(row_b(p, q), col_v1(i, q))] = self.u0[i][p].clone();
                    } else {
                        jac[(row_b(p, q), col_u1(i - a, p))] = self.v0[i][q].clone();
                        jac[(row_b(p, q), col_v0(i, q))] = self.u1[i - a][p].clone();
                    }
                }
            }
        }
        jac
    }
}

fn add_outer(target: &mut Matrix, u: &[Scalar], v: &[Scalar]) {
    for (p, up) in u.iter().enumerate() {
        if up.is_zero() {
            continue;
        }
        for (q, vq) in v.iter().enumerate() {
            if !vq.is_zero() {
                target[(p, q)] += &(up * vq);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn entries(p: &Pencil) -> Vec<Scalar> {
        p.a().to_rows().into_iter().chain(p.b().to_rows()).flatten().collect()
    }

    #[test]
    fn jacobian_matches_unit_differences() {
        // f_a is bilinear, so every Jacobian column equals f(x + e_k) − f(x)
        // exactly when the quadratic term vanishes, which holds because no
        // parameter multiplies itself.
        let c = ComponentId::new(3, 4, 2, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = ComponentParams::random_rationals(&c, &mut rng);
        let jac = x.jacobian();
        let base = entries(&x.evaluate());
        let flat = x.flatten();
        for k in 0..flat.len() {
            let mut shifted = flat.clone();
            shifted[k] += &Scalar::one();
            let moved = entries(&ComponentParams::from_flat(&c, &shifted).evaluate());
            for (row, (after, before)) in moved.iter().zip(&base).enumerate() {
                assert_eq!(jac[(row, k)], after - before, "row {row}, column {k}");
            }
        }
    }

    #[test]
    fn count_matches_flatten() {
        let c = ComponentId::new(6, 6, 5, 2).unwrap();
        let x = ComponentParams::from_fn(&c, Scalar::one);
        assert_eq!(x.flatten().len(), ComponentParams::count(&c));
        assert_eq!(ComponentParams::count(&c), 90);
    }
}
