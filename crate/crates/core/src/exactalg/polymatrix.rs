//! Matrices over ℚ(i)[λ]: normal rank and Smith form.

use std::ops::{Index, IndexMut};

use super::{Matrix, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![Poly::zero(); rows * cols] }
    }

    /// Panics if `entries.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        PolyMatrix { rows, cols, entries }
    }

    /// `a + λ·b` for same-shape constant matrices.
    pub fn from_pencil(a: &Matrix, b: &Matrix) -> Self {
        assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
        PolyMatrix::from_fn(a.rows(), a.cols(), |i, j| Poly::linear(a[(i, j)].clone(), b[(i, j)].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Rank over the field of rational functions, by fraction-free
    /// (Bareiss) elimination with full pivoting. Every division below is
    /// exact: the entries at step k are (k+1)-minors of the permuted input.
    #[allow(clippy::needless_range_loop)]
    pub fn exact_rank(&self) -> usize {
        let mut a: Vec<Vec<Poly>> =
            (0..self.rows).map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec()).collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = Poly::one();
        let mut rank = 0;
        for k in 0..rows.min(cols) {
            let Some((pi, pj)) = min_degree_entry(&a, k) else {
                break;
            };
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            let pivot = a[k][k].clone();
            for i in k + 1..rows {
                let aik = std::mem::take(&mut a[i][k]);
                for j in k + 1..cols {
                    let num = &(&pivot * &a[i][j]) - &(&aik * &a[k][j]);
                    a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Monic invariant factors `d_1 | d_2 | … | d_ρ`, ρ the normal rank.
    ///
    /// Elimination with unimodular row/column operations: the pivot is the
    /// lowest-degree entry of the trailing block; remainders that survive
    /// reduction become the next, strictly smaller, pivot.
    #[allow(clippy::needless_range_loop)]
    pub fn smith_form(&self) -> Vec<Poly> {
        let mut a: Vec<Vec<Poly>> =
            (0..self.rows).map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec()).collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut factors = Vec::new();
        for k in 0..rows.min(cols) {
            loop {
                let Some((pi, pj)) = min_degree_entry(&a, k) else {
                    return factors;
                };
                a.swap(k, pi);
                for row in a.iter_mut() {
                    row.swap(k, pj);
                }
                let pivot = a[k][k].monic();
                let scale = a[k][k].leading().and_then(|c| c.inv()).expect("nonzero pivot");
                for x in a[k].iter_mut() {
                    *x = x.scale(&scale);
                }
                let mut clean = true;
                for i in k + 1..rows {
                    if a[i][k].is_zero() {
                        continue;
                    }
                    let (q, r) = a[i][k].div_rem(&pivot).expect("nonzero pivot");
                    for j in k + 1..cols {
                        if !a[k][j].is_zero() {
                            let t = &q * &a[k][j];
                            a[i][j] = &a[i][j] - &t;
                        }
                    }
                    clean &= r.is_zero();
                    a[i][k] = r;
                }
                for j in k + 1..cols {
                    if a[k][j].is_zero() {
                        continue;
                    }
                    let (q, r) = a[k][j].div_rem(&pivot).expect("nonzero pivot");
                    // Column op col_j -= q·col_k; column k is zero below row k
                    // whenever `clean`, otherwise the outer loop repeats.
                    for i in k + 1..rows {
                        if !a[i][k].is_zero() {
                            let t = &q * &a[i][k];
                            a[i][j] = &a[i][j] - &t;
                        }
                    }
                    clean &= r.is_zero();
                    a[k][j] = r;
                }
                if !clean {
                    continue;
                }
                // Pivot must divide the whole trailing block; if not, fold an
                // offending row into row k and go again.
                let offending =
                    (k + 1..rows).find(|&i| (k + 1..cols).any(|j| !pivot.divides(&a[i][j]) && !a[i][j].is_zero()));
                match offending {
                    Some(i) => {
                        for j in k + 1..cols {
                            let s = &a[k][j] + &a[i][j];
                            a[k][j] = s;
                        }
                    }
                    None => {
                        a[k][k] = pivot.clone();
                        factors.push(pivot);
                        break;
                    }
                }
            }
        }
        factors
    }
}

fn coeff_bits(p: &Poly) -> u64 {
    p.coeffs().iter().flat_map(|c| [c.re(), c.im()]).map(|x| x.numer().bits() + x.denom().bits()).sum()
}

/// Lowest-degree nonzero entry of the trailing block, smallest coefficients
/// first among equal degrees, so remainders stay short.
fn min_degree_entry(a: &[Vec<Poly>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, u64), usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, x) in row.iter().enumerate().skip(k) {
            if let Some(d) = x.degree() {
                let key = (d, coeff_bits(x));
                if best.as_ref().is_none_or(|(bk, _, _)| key < *bk) {
                    best = Some((key, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = Poly;
    fn index(&self, (i, j): (usize, usize)) -> &Poly {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Poly {
        &mut self.entries[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(rows: usize, cols: usize, cs: &[&[i64]]) -> PolyMatrix {
        PolyMatrix::new(rows, cols, cs.iter().map(|c| Poly::from_ints(c)).collect())
    }

    #[test]
    fn rank_examples() {
        // [[λ,1],[0,0]] → 1
        assert_eq!(pm(2, 2, &[&[0, 1], &[1], &[], &[]]).exact_rank(), 1);
        assert_eq!(PolyMatrix::zeros(3, 2).exact_rank(), 0);
        // [[λ,1],[1,λ]] → 2
        assert_eq!(pm(2, 2, &[&[0, 1], &[1], &[1], &[0, 1]]).exact_rank(), 2);
    }

    #[test]
    fn smith_examples() {
        // J_2(0)+λI → [1, λ²]
        let j = pm(2, 2, &[&[0, 1], &[1], &[], &[0, 1]]);
        assert_eq!(j.smith_form(), vec![Poly::one(), Poly::from_ints(&[0, 0, 1])]);
        let id = PolyMatrix::from_fn(3, 3, |i, k| if i == k { Poly::one() } else { Poly::zero() });
        assert_eq!(id.smith_form(), vec![Poly::one(); 3]);
        // L_2 → [1, 1]
        let l2 = pm(2, 3, &[&[0, 1], &[1], &[], &[], &[0, 1], &[1]]);
        assert_eq!(l2.smith_form(), vec![Poly::one(); 2]);
        // diag(λ, λ+1) → [1, λ(λ+1)]
        let d = pm(2, 2, &[&[0, 1], &[], &[], &[1, 1]]);
        assert_eq!(d.smith_form(), vec![Poly::one(), Poly::from_ints(&[0, 1, 1])]);
    }
}
