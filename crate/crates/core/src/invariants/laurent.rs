//! Integer Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Sparse `sum c_d t^d` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `c t^d`.
    pub fn monomial(c: impl Into<BigInt>, d: i32) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(d, c.into());
        p
    }

    /// The variable `t`.
    pub fn t() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    /// `c_0 + c_1 t + c_2 t^2 + ...`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        let mut p = LaurentPoly::zero();
        for (d, c) in coeffs.iter().enumerate() {
            p.add_term(d as i32, c.clone().into());
        }
        p
    }

    fn add_term(&mut self, d: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(d).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, d: i32) -> BigInt {
        self.terms.get(&d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// A unit of the ring: `+-t^k`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    /// Inverse of a unit `+-t^k`.
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        if !self.is_unit() {
            return None;
        }
        let (&d, c) = self.terms.iter().next()?;
        Some(LaurentPoly::monomial(c.clone(), -d))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i32) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&d, c)| (d + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&d, x)| (d, x * c)).collect(),
        }
    }

    /// `p(1/t)`.
    pub fn invert_variable(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&d, c)| (-d, c.clone())).collect(),
        }
    }

    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.terms
            .iter()
            .map(|(&d, c)| {
                if d >= 0 {
                    c * x.pow(d as u32)
                } else {
                    // Only used at +-1, where negative powers are integers.
                    assert!(x.abs().is_one(), "negative power at non-unit point");
                    c * x.pow((-d) as u32)
                }
            })
            .sum()
    }

    /// Coefficients reduced modulo 2, dropping even ones.
    pub fn mod2(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| c.is_odd())
                .map(|(&d, _)| (d, BigInt::one()))
                .collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (dlo, dhi) = (d.min_degree()?, d.max_degree()?);
        let lead = d.terms[&dhi].clone();
        let mut rem = self.clone();
        let mut q = LaurentPoly::zero();
        let floor = self.min_degree()? - dlo;
        while let Some(rhi) = rem.max_degree() {
            let shift = rhi - dhi;
            if shift < floor {
                return None;
            }
            let (c, r) = rem.terms[&rhi].div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let step = LaurentPoly::monomial(c, shift);
            rem = &rem - &(&step * d);
            q = &q + &step;
        }
        Some(q)
    }

    /// Coefficient vector from `min_degree` upward.
    pub fn dense(&self) -> Vec<BigInt> {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|d| self.coeff(d)).collect(),
            _ => Vec::new(),
        }
    }

    pub fn to_i64_coeffs(&self) -> Option<Vec<i64>> {
        self.dense().iter().map(|c| c.to_i64()).collect()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (&d, c) in &o.terms {
            r.add_term(d, c.clone());
        }
        r
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (&d, c) in &o.terms {
            r.add_term(d, -c.clone());
        }
        r
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&d, c)| (d, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &o.terms {
                r.add_term(a + b, x * y);
            }
        }
        r
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&d, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let show_coeff = !a.is_one() || d == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c)
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, -1, 1]);
        let b = p(&[1, 1]);
        assert_eq!(&a * &b, p(&[1, 0, 0, 1]));
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!((&a + &b).to_string(), "2 + t^2");
        assert_eq!(a.shift(-1).min_degree(), Some(-1));
        assert_eq!(a.eval(-1), BigInt::from(3));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, -1, 1]);
        let b = p(&[2, 0, -3, 1]);
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!((&a * &b).shift(-4).div_exact(&b.shift(2)), Some(a.shift(-6)));
        assert_eq!(p(&[1, 1]).div_exact(&p(&[1, 2])), None);
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])), None);
    }

    #[test]
    fn units() {
        assert!(LaurentPoly::monomial(-1, 5).is_unit());
        assert!(!LaurentPoly::monomial(2, 0).is_unit());
        let u = LaurentPoly::monomial(-1, 3);
        assert_eq!(&u * &u.unit_inverse().unwrap(), LaurentPoly::one());
    }
}
