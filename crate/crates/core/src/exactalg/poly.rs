//! Dense univariate polynomials over ℚ(i) in the variable λ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::Scalar;
use crate::error::{Error, Result};

/// Coefficients stored lowest degree first. The zero polynomial is the empty
/// list; otherwise the last coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate λ.
    pub fn lambda() -> Self {
        Poly::new(vec![Scalar::zero(), Scalar::one()])
    }

    /// `c0 + λ·c1`.
    pub fn linear(c0: Scalar, c1: Scalar) -> Self {
        Poly::new(vec![c0, c1])
    }

    /// Builds a polynomial from small integer coefficients, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| Scalar::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of λ^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree −∞ of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplies by λ^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * &Scalar::from(k as i64)).collect())
    }

    /// Euclidean division. Errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let Some(sd) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if sd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let inv_lead = divisor.leading().and_then(Scalar::inv).expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &inv_lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] -= &(&c * dc);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Largest `e` with `factor^e | self`. `factor` must be nonconstant and
    /// `self` nonzero.
    pub fn multiplicity(&self, factor: &Poly) -> usize {
        assert!(!self.is_zero() && !factor.is_constant());
        let mut e = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.exact_div(factor) {
            cur = q;
            e += 1;
        }
        e
    }

    /// `p / gcd(p, p')`, made monic. Characteristic zero makes this exact.
    pub fn squarefree_part(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Poly::one());
        }
        let g = poly_gcd(self, &self.derivative())?;
        Ok(self.exact_div(&g).expect("gcd divides").monic())
    }

    /// Yun's decomposition: monic squarefree, pairwise coprime `a_i` with
    /// `self = c·Π a_i^i`. Entry `k` holds `a_{k+1}`; constant entries are
    /// kept so positions stay meaningful.
    pub fn squarefree_decomposition(&self) -> Result<Vec<Poly>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = Vec::new();
        if self.is_constant() {
            return Ok(out);
        }
        let d = self.derivative();
        let g = poly_gcd(self, &d)?;
        let mut b = self.exact_div(&g).expect("gcd divides");
        let mut c = d.exact_div(&g).expect("gcd divides");
        loop {
            let c_minus_db = &c - &b.derivative();
            if c_minus_db.is_zero() {
                out.push(b.monic());
                return Ok(out);
            }
            let a = poly_gcd(&b, &c_minus_db)?;
            b = b.exact_div(&a).expect("gcd divides");
            c = c_minus_db.exact_div(&a).expect("gcd divides");
            out.push(a);
        }
    }
}

/// Monic greatest common divisor. Rejects the pair (0, 0).
pub fn poly_gcd(p: &Poly, q: &Poly) -> Result<Poly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        // Normalizing keeps rational coefficient growth in check.
        b = r.monic();
    }
    Ok(a.monic())
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, Scalar::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Poly::new(coeffs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Poly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Text form with variable letter `l`, highest degree first, e.g.
/// `1*l^2+(-1/2)`. Coefficients that carry a sign or an imaginary part are
/// parenthesized.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let cs = c.to_string();
            if cs.starts_with('-') || cs.contains('i') {
                write!(f, "({cs})")?;
            } else {
                f.write_str(&cs)?;
            }
            match k {
                0 => {}
                1 => f.write_str("*l")?,
                _ => write!(f, "*l^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let (mut depth, mut start) = (0i32, 0usize);
        for (k, ch) in t.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' if depth == 0 && k > start => {
                    terms.push(&t[start..k]);
                    start = k + 1;
                }
                _ => {}
            }
        }
        terms.push(&t[start..]);
        let mut acc = Poly::zero();
        for term in terms {
            acc = acc + parse_term(term)?;
        }
        Ok(acc)
    }
}

fn parse_term(term: &str) -> Result<Poly> {
    let bad = || Error::Parse(format!("invalid polynomial term '{term}'"));
    let (coef, power) = match term.find('l') {
        None => (term, 0usize),
        Some(pos) => {
            let coef = term[..pos].strip_suffix('*').unwrap_or(&term[..pos]);
            let rest = &term[pos + 1..];
            let power = match rest.strip_prefix('^') {
                Some(p) => p.parse().map_err(|_| bad())?,
                None if rest.is_empty() => 1,
                None => return Err(bad()),
            };
            (coef, power)
        }
    };
    let coef = coef.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(coef);
    let c: Scalar = if coef.is_empty() { Scalar::one() } else { coef.parse()? };
    Ok(Poly::constant(c).shift(power))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_ints(cs)
    }

    #[test]
    fn gcd_examples() {
        // (λ²−1, λ−1) → λ−1
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        // (λ, 1) → 1
        assert_eq!(poly_gcd(&p(&[0, 1]), &p(&[1])).unwrap(), Poly::one());
        // (λ²+2λ+1, λ+1) → λ+1
        assert_eq!(poly_gcd(&p(&[1, 2, 1]), &p(&[1, 1])).unwrap(), p(&[1, 1]));
        assert!(matches!(poly_gcd(&Poly::zero(), &Poly::zero()), Err(Error::ZeroPolynomial)));
        assert_eq!(poly_gcd(&Poly::zero(), &p(&[2, 4])).unwrap(), p(&[1, 2]).scale(&Scalar::ratio(1, 2)).monic());
    }

    #[test]
    fn division() {
        let (q, r) = p(&[1, 0, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());
        assert!(p(&[1]).div_rem(&Poly::zero()).is_err());
        assert_eq!(p(&[0, 0, 1]).multiplicity(&p(&[0, 1])), 2);
    }

    #[test]
    fn degree_of_zero_is_none() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[3]).degree(), Some(0));
    }

    #[test]
    fn text_form() {
        let q = p(&[0, 0, 1]) - Poly::constant(Scalar::ratio(1, 2));
        assert_eq!(q.to_string(), "1*l^2+(-1/2)");
        assert_eq!(q.to_string().parse::<Poly>().unwrap(), q);
        let z = Poly::linear(Scalar::i(), Scalar::one());
        assert_eq!(z.to_string(), "1*l+(0+1*i)");
        assert_eq!(z.to_string().parse::<Poly>().unwrap(), z);
        assert_eq!("l^3".parse::<Poly>().unwrap(), p(&[0, 0, 0, 1]));
        assert_eq!(Poly::zero().to_string(), "0");
        assert!("l^x".parse::<Poly>().is_err());
    }

    #[test]
    fn squarefree() {
        // (λ−1)²(λ+2) → (λ−1)(λ+2)
        let f = p(&[-1, 1]) * p(&[-1, 1]) * p(&[2, 1]);
        assert_eq!(f.squarefree_part().unwrap(), p(&[-1, 1]) * p(&[2, 1]));
        assert_eq!(f.squarefree_decomposition().unwrap(), vec![p(&[2, 1]), p(&[-1, 1])]);
        // 3λ³(λ+1) → [λ+1, 1, λ]
        let g = p(&[0, 0, 0, 3]) * p(&[1, 1]);
        assert_eq!(g.squarefree_decomposition().unwrap(), vec![p(&[1, 1]), Poly::one(), p(&[0, 1])]);
    }
}
