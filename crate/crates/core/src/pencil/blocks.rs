use std::fmt;

use super::Pencil;
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar};

/// One block of a Kronecker canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalBlock {
    /// `L_ε`, ε×(ε+1): λ on the diagonal, 1 on the superdiagonal.
    RightSingular(usize),
    /// `L_ηᵀ`, (η+1)×η.
    LeftSingular(usize),
    /// `J_k(μ) + λI_k`; its determinant is `(λ+μ)^k`.
    FiniteJordan { size: usize, mu: Scalar },
    /// `N_u = I_u + λJ_u(0)`.
    InfiniteJordan(usize),
}

impl CanonicalBlock {
    pub fn jordan(size: usize, mu: Scalar) -> Self {
        CanonicalBlock::FiniteJordan { size, mu }
    }

    /// (rows, cols), possibly with a zero entry for `L_0` / `L_0ᵀ`.
    pub fn dims(&self) -> (usize, usize) {
        match *self {
            CanonicalBlock::RightSingular(e) => (e, e + 1),
            CanonicalBlock::LeftSingular(e) => (e + 1, e),
            CanonicalBlock::FiniteJordan { size, .. } => (size, size),
            CanonicalBlock::InfiniteJordan(u) => (u, u),
        }
    }

    pub fn is_valid(&self) -> bool {
        match *self {
            CanonicalBlock::FiniteJordan { size, .. } => size >= 1,
            CanonicalBlock::InfiniteJordan(u) => u >= 1,
            _ => true,
        }
    }

    pub fn transposed_kind(&self) -> CanonicalBlock {
        match self {
            CanonicalBlock::RightSingular(e) => CanonicalBlock::LeftSingular(*e),
            CanonicalBlock::LeftSingular(e) => CanonicalBlock::RightSingular(*e),
            other => other.clone(),
        }
    }

    /// Coefficient matrices `(A, B)` of the literal block, zero-sized
    /// dimensions included.
    pub fn matrices(&self) -> (Matrix, Matrix) {
        let (r, c) = self.dims();
        let (mut a, mut b) = (Matrix::zeros(r, c), Matrix::zeros(r, c));
        match self {
            CanonicalBlock::RightSingular(e) => {
                for i in 0..*e {
                    b[(i, i)] = Scalar::one();
                    a[(i, i + 1)] = Scalar::one();
                }
            }
            CanonicalBlock::LeftSingular(e) => {
                for i in 0..*e {
                    b[(i, i)] = Scalar::one();
                    a[(i + 1, i)] = Scalar::one();
                }
            }
            CanonicalBlock::FiniteJordan { size, mu } => {
                for i in 0..*size {
                    a[(i, i)] = mu.clone();
                    b[(i, i)] = Scalar::one();
                    if i + 1 < *size {
                        a[(i, i + 1)] = Scalar::one();
                    }
                }
            }
            CanonicalBlock::InfiniteJordan(u) => {
                for i in 0..*u {
                    a[(i, i)] = Scalar::one();
                    if i + 1 < *u {
                        b[(i, i + 1)] = Scalar::one();
                    }
                }
            }
        }
        (a, b)
    }

    /// The block as a stand-alone pencil. `L_0` and `L_0ᵀ` are rejected.
    pub fn pencil(&self) -> Result<Pencil> {
        let (r, c) = self.dims();
        if !self.is_valid() || r == 0 || c == 0 {
            return Err(Error::UnrealizableBlock(self.to_string()));
        }
        let (a, b) = self.matrices();
        Pencil::new(a, b)
    }
}

impl fmt::Display for CanonicalBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalBlock::RightSingular(e) => write!(f, "L{e}"),
            CanonicalBlock::LeftSingular(e) => write!(f, "L{e}^T"),
            CanonicalBlock::FiniteJordan { size, mu } => write!(f, "J{size}({mu})"),
            CanonicalBlock::InfiniteJordan(u) => write!(f, "N{u}"),
        }
    }
}

/// An ordered direct sum of canonical blocks.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CanonicalForm {
    pub blocks: Vec<CanonicalBlock>,
}

impl CanonicalForm {
    pub fn new(blocks: Vec<CanonicalBlock>) -> Self {
        CanonicalForm { blocks }
    }

    pub fn dims(&self) -> (usize, usize) {
        self.blocks.iter().fold((0, 0), |(r, c), b| {
            let (br, bc) = b.dims();
            (r + br, c + bc)
        })
    }

    /// (row offset, col offset) of every block in the assembled pencil.
    pub fn offsets(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.blocks.len());
        let (mut r, mut c) = (0, 0);
        for b in &self.blocks {
            out.push((r, c));
            let (br, bc) = b.dims();
            r += br;
            c += bc;
        }
        out
    }

    /// The block-diagonal pencil. Degenerate blocks only add a zero row or
    /// column.
    pub fn pencil(&self) -> Result<Pencil> {
        if let Some(bad) = self.blocks.iter().find(|b| !b.is_valid()) {
            return Err(Error::UnrealizableBlock(bad.to_string()));
        }
        let (m, n) = self.dims();
        if m == 0 || n == 0 {
            return Err(Error::EmptyPencil);
        }
        let (mut a, mut b) = (Matrix::zeros(m, n), Matrix::zeros(m, n));
        for (block, (r0, c0)) in self.blocks.iter().zip(self.offsets()) {
            let (ba, bb) = block.matrices();
            for i in 0..ba.rows() {
                for j in 0..ba.cols() {
                    a[(r0 + i, c0 + j)] = ba[(i, j)].clone();
                    b[(r0 + i, c0 + j)] = bb[(i, j)].clone();
                }
            }
        }
        Pencil::new(a, b)
    }

    /// Multiset equality of blocks: the canonical form is unique only up to
    /// block order.
    pub fn same_blocks(&self, other: &CanonicalForm) -> bool {
        let key = |cf: &CanonicalForm| {
            let mut v: Vec<String> = cf.blocks.iter().map(ToString::to_string).collect();
            v.sort();
            v
        };
        key(self) == key(other)
    }

    pub fn count_right(&self) -> usize {
        self.blocks.iter().filter(|b| matches!(b, CanonicalBlock::RightSingular(_))).count()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(ToString::to_string).collect();
        write!(f, "diag({})", parts.join(", "))
    }
}

/// A pencil known as `E · KCF · F` with E, F constant and invertible.
/// Missing factors are the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredForm {
    pub form: CanonicalForm,
    pub e: Option<Matrix>,
    pub f: Option<Matrix>,
}

impl FactoredForm {
    pub fn new(form: CanonicalForm) -> Self {
        FactoredForm { form, e: None, f: None }
    }

    pub fn with_equivalence(form: CanonicalForm, e: Matrix, f: Matrix) -> Self {
        FactoredForm { form, e: Some(e), f: Some(f) }
    }

    pub fn dims(&self) -> (usize, usize) {
        self.form.dims()
    }

    pub fn e_or_identity(&self) -> Matrix {
        self.e.clone().unwrap_or_else(|| Matrix::identity(self.dims().0))
    }

    pub fn f_or_identity(&self) -> Matrix {
        self.f.clone().unwrap_or_else(|| Matrix::identity(self.dims().1))
    }

    pub fn pencil(&self) -> Result<Pencil> {
        let p = self.form.pencil()?;
        if self.e.is_none() && self.f.is_none() {
            return Ok(p);
        }
        p.apply_equivalence(&self.e_or_identity(), &self.f_or_identity())
    }
}

/// Block-diagonal sum of pencils.
pub fn direct_sum(parts: &[Pencil]) -> Result<Pencil> {
    let m: usize = parts.iter().map(Pencil::m).sum();
    let n: usize = parts.iter().map(Pencil::n).sum();
    if m == 0 || n == 0 {
        return Err(Error::EmptyPencil);
    }
    let (mut a, mut b) = (Matrix::zeros(m, n), Matrix::zeros(m, n));
    let (mut r0, mut c0) = (0, 0);
    for p in parts {
        for i in 0..p.m() {
            for j in 0..p.n() {
                let (x, y) = p.scalar_pair(i, j);
                a[(r0 + i, c0 + j)] = x.clone();
                b[(r0 + i, c0 + j)] = y.clone();
            }
        }
        r0 += p.m();
        c0 += p.n();
    }
    Pencil::new(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Poly;
    use CanonicalBlock::*;

    fn lam() -> Poly {
        Poly::lambda()
    }

    #[test]
    fn right_singular_two() {
        let p = RightSingular(2).pencil().unwrap();
        assert_eq!((p.m(), p.n()), (2, 3));
        let expect = [[lam(), Poly::one(), Poly::zero()], [Poly::zero(), lam(), Poly::one()]];
        for (i, row) in expect.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                assert_eq!(&p.entry(i, j), e);
            }
        }
    }

    #[test]
    fn jordan_blocks() {
        let p = CanonicalBlock::jordan(1, Scalar::zero()).pencil().unwrap();
        assert_eq!(p.entry(0, 0), lam());
        let n2 = InfiniteJordan(2).pencil().unwrap();
        assert_eq!(n2.entry(0, 0), Poly::one());
        assert_eq!(n2.entry(0, 1), lam());
        assert!(n2.entry(1, 0).is_zero());
        assert_eq!(n2.entry(1, 1), Poly::one());
        // reversal(I_2 + λJ_2(0)) = J_2(0) + λI_2
        assert_eq!(n2.reversal(), CanonicalBlock::jordan(2, Scalar::zero()).pencil().unwrap());
    }

    #[test]
    fn degenerate_blocks() {
        assert!(matches!(RightSingular(0).pencil(), Err(Error::UnrealizableBlock(_))));
        assert!(matches!(LeftSingular(0).pencil(), Err(Error::UnrealizableBlock(_))));
        assert!(matches!(InfiniteJordan(0).pencil(), Err(Error::UnrealizableBlock(_))));
        let cf = CanonicalForm::new(vec![RightSingular(1), LeftSingular(0)]);
        let p = cf.pencil().unwrap();
        assert_eq!((p.m(), p.n()), (2, 2));
        assert!(CanonicalForm::new(vec![RightSingular(0)]).pencil().is_err());
    }

    #[test]
    fn dims_follow_block_kind() {
        for k in 0..7 {
            assert_eq!(RightSingular(k).dims(), (k, k + 1));
            assert_eq!(LeftSingular(k).dims(), (k + 1, k));
        }
    }

    #[test]
    fn transpose_of_right_block() {
        let l2 = RightSingular(2).pencil().unwrap();
        assert_eq!(l2.transpose(), LeftSingular(2).pencil().unwrap());
    }

    #[test]
    fn direct_sum_single_and_pair() {
        let l2 = RightSingular(2).pencil().unwrap();
        assert_eq!(direct_sum(std::slice::from_ref(&l2)).unwrap(), l2);
        let cf = CanonicalForm::new(vec![RightSingular(2), LeftSingular(3)]);
        let lt3 = LeftSingular(3).pencil().unwrap();
        assert_eq!(direct_sum(&[l2, lt3]).unwrap(), cf.pencil().unwrap());
    }

    #[test]
    fn block_multiset_equality() {
        let a = CanonicalForm::new(vec![RightSingular(1), LeftSingular(0)]);
        let b = CanonicalForm::new(vec![LeftSingular(0), RightSingular(1)]);
        assert!(a.same_blocks(&b));
        assert!(!a.same_blocks(&CanonicalForm::new(vec![RightSingular(1)])));
    }
}
