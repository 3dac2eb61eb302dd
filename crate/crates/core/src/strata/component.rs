use serde::Serialize;

use crate::error::{Error, Result};
use crate::pencil::{CanonicalBlock, CanonicalForm, Pencil};

/// Names the component `C_a^r` of m×n pencils with normal rank ≤ r.
///
/// Valid ranges: 1 ≤ r ≤ min(m, n) when m ≠ n, 1 ≤ r ≤ n − 1 when m = n,
/// and 0 ≤ a ≤ r. When r reaches the smaller dimension there are no left
/// (m = r) or right (n = r) singular blocks to share out, so only a = r,
/// respectively a = 0, admits a generic form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ComponentId {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub a: usize,
}

impl ComponentId {
    pub fn new(m: usize, n: usize, r: usize, a: usize) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidComponent { m, n, r, a, reason: reason.to_string() };
        if m == 0 || n == 0 {
            return Err(bad("m and n must be positive"));
        }
        if r == 0 {
            return Err(bad("r must be at least 1"));
        }
        if m == n && r >= n {
            return Err(bad("square pencils need r ≤ n − 1"));
        }
        if r > m.min(n) {
            return Err(bad("r exceeds min(m, n)"));
        }
        if a > r {
            return Err(bad("a exceeds r"));
        }
        if r == m && a != r {
            return Err(bad("with r = m there are no left singular blocks, so a must equal r"));
        }
        if r == n && a != 0 {
            return Err(bad("with r = n there are no right singular blocks, so a must be 0"));
        }
        Ok(ComponentId { m, n, r, a })
    }

    /// Every valid `a` for the given (m, n, r); empty if r itself is invalid.
    pub fn all_for(m: usize, n: usize, r: usize) -> Vec<ComponentId> {
        (0..=r).filter_map(|a| ComponentId::new(m, n, r, a).ok()).collect()
    }

    /// Every valid component with the given sizes.
    pub fn all_for_size(m: usize, n: usize) -> Vec<ComponentId> {
        (1..=m.min(n)).flat_map(|r| ComponentId::all_for(m, n, r)).collect()
    }

    /// `a = α(n−r) + s` with 0 ≤ s < n−r; (0, 0) when n = r (then a = 0).
    pub fn right_division(&self) -> (usize, usize) {
        let d = self.n - self.r;
        self.a.checked_div(d).map_or((0, 0), |q| (q, self.a % d))
    }

    /// `r − a = β(m−r) + t` with 0 ≤ t < m−r; (0, 0) when m = r.
    pub fn left_division(&self) -> (usize, usize) {
        let (d, b) = (self.m - self.r, self.r - self.a);
        b.checked_div(d).map_or((0, 0), |q| (q, b % d))
    }

    pub fn transposed(&self) -> ComponentId {
        ComponentId { m: self.n, n: self.m, r: self.r, a: self.r - self.a }
    }
}

impl std::fmt::Display for ComponentId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(m={}, n={}, r={}, a={})", self.m, self.n, self.r, self.a)
    }
}

/// `diag(L_{α+1}×s, L_α×(n−r−s), L_{β+1}ᵀ×t, L_βᵀ×(m−r−t))`.
pub fn generic_form(c: &ComponentId) -> CanonicalForm {
    let (alpha, s) = c.right_division();
    let (beta, t) = c.left_division();
    let mut blocks = Vec::with_capacity(c.m + c.n - 2 * c.r);
    blocks.extend(std::iter::repeat_n(CanonicalBlock::RightSingular(alpha + 1), s));
    blocks.extend(std::iter::repeat_n(CanonicalBlock::RightSingular(alpha), c.n - c.r - s));
    blocks.extend(std::iter::repeat_n(CanonicalBlock::LeftSingular(beta + 1), t));
    blocks.extend(std::iter::repeat_n(CanonicalBlock::LeftSingular(beta), c.m - c.r - t));
    CanonicalForm::new(blocks)
}

pub fn generic_pencil(c: &ComponentId) -> Pencil {
    generic_form(c).pencil().expect("generic form of a valid component is realizable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use CanonicalBlock::*;

    #[test]
    fn validity() {
        assert!(ComponentId::new(6, 6, 5, 2).is_ok());
        assert!(ComponentId::new(6, 6, 6, 2).is_err());
        assert!(ComponentId::new(2, 3, 3, 0).is_err());
        assert!(ComponentId::new(2, 3, 1, 2).is_err());
        assert!(ComponentId::new(2, 3, 0, 0).is_err());
        assert!(ComponentId::new(2, 3, 2, 2).is_ok());
        assert!(ComponentId::new(2, 3, 2, 1).is_err());
        assert!(ComponentId::new(3, 2, 2, 0).is_ok());
        assert!(ComponentId::new(1, 1, 1, 0).is_err());
    }

    #[test]
    fn generic_examples() {
        let c = ComponentId::new(6, 6, 5, 2).unwrap();
        assert_eq!(generic_form(&c).blocks, vec![RightSingular(2), LeftSingular(3)]);
        let c = ComponentId::new(2, 3, 1, 0).unwrap();
        assert_eq!(generic_form(&c).blocks, vec![RightSingular(0), RightSingular(0), LeftSingular(1)]);
        let c = ComponentId::new(2, 3, 1, 1).unwrap();
        assert_eq!(generic_form(&c).blocks, vec![RightSingular(1), RightSingular(0), LeftSingular(0)]);
    }

    #[test]
    fn generic_dims_match() {
        for m in 1..=6 {
            for n in 1..=6 {
                for c in ComponentId::all_for_size(m, n) {
                    assert_eq!(generic_form(&c).dims(), (m, n), "{c:?}");
                }
            }
        }
    }
}
