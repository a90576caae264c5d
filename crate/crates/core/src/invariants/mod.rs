//! Alexander polynomial, Arf invariant, square tests and knot candidates.

mod alexander;
mod freegroup;
mod laurent;

pub use alexander::{alexander, alexander_matrix, determinant};
pub use freegroup::{artin_images, braid_equal, FreeWord};
pub use laurent::LaurentPoly;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("diagram does not describe a knot")]
    NotAKnot,
    #[error("|Delta(-1)| = {0} is even; the diagram is broken")]
    BadDeterminant(BigInt),
    #[error("({0}, {1}) are not coprime integers >= 2")]
    NotCoprime(i64, i64),
    #[error("Alexander coefficient does not fit in 64 bits")]
    Overflow,
}

/// An Alexander polynomial normalized to `c_0 + c_1 t + ...` with `c_0 > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalAlexander {
    coeffs: Vec<i64>,
}

impl CanonicalAlexander {
    pub fn one() -> Self {
        CanonicalAlexander { coeffs: vec![1] }
    }

    /// Removes the unit `+-t^k`; `None` for the zero polynomial.
    pub fn from_poly(p: &LaurentPoly) -> Result<Option<Self>, InvariantError> {
        let Some(lo) = p.min_degree() else {
            return Ok(None);
        };
        let mut q = p.shift(-lo);
        if q.coeff(0).is_negative() {
            q = -&q;
        }
        let coeffs = q.to_i64_coeffs().ok_or(InvariantError::Overflow)?;
        Ok(Some(CanonicalAlexander { coeffs }))
    }

    /// Canonical form of `c_0 + c_1 t + ...`; panics on the zero polynomial.
    pub fn from_coeffs(c: &[i64]) -> Self {
        CanonicalAlexander::from_poly(&LaurentPoly::from_coeffs(c))
            .expect("small coefficients")
            .expect("nonzero polynomial")
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn poly(&self) -> LaurentPoly {
        LaurentPoly::from_coeffs(&self.coeffs)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `Delta(1/t)`, canonicalized.
    pub fn mirror(&self) -> Self {
        CanonicalAlexander::from_poly(&self.poly().invert_variable())
            .expect("same coefficients")
            .expect("nonzero")
    }

    pub fn at_minus_one(&self) -> BigInt {
        self.poly().eval(-1)
    }
}

impl fmt::Display for CanonicalAlexander {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly())
    }
}

impl Serialize for CanonicalAlexander {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CanonicalAlexander", 2)?;
        st.serialize_field("min_deg", &0)?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.end()
    }
}

/// Arf invariant from `|Delta(-1)| mod 8`: `0` for `+-1`, `1` for `+-3`.
pub fn arf(delta: &CanonicalAlexander) -> Result<u8, InvariantError> {
    let v = delta.at_minus_one().abs();
    match v.mod_floor(&BigInt::from(8)).to_u8() {
        Some(1) | Some(7) => Ok(0),
        Some(3) | Some(5) => Ok(1),
        _ => Err(InvariantError::BadDeterminant(v)),
    }
}

/// `n - (2n+1) t + n t^2`, the Alexander polynomial of the twist knot `K_{2n}`.
pub fn twist_alexander(n: i64) -> CanonicalAlexander {
    CanonicalAlexander::from_coeffs(&[n, -(2 * n + 1), n])
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
pub fn torus_alexander(p: i64, q: i64) -> Result<CanonicalAlexander, InvariantError> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(InvariantError::NotCoprime(p, q));
    }
    let tm1 = |k: i64| &LaurentPoly::monomial(1, k as i32) - &LaurentPoly::one();
    let num = &tm1(p * q) * &tm1(1);
    let den = &tm1(p) * &tm1(q);
    let quot = num.div_exact(&den).expect("cyclotomic quotient is exact");
    Ok(CanonicalAlexander::from_poly(&quot)?.expect("nonzero"))
}

/// A root `g` with `delta = g^2`, if one exists with integer coefficients.
///
/// Canonical forms have a positive constant term, so `+-t^k g^2` reduces to
/// exactly `g^2` here.
pub fn perfect_square_root(delta: &CanonicalAlexander) -> Option<LaurentPoly> {
    let c: Vec<BigInt> = delta.coeffs.iter().map(|&x| BigInt::from(x)).collect();
    let d = c.len() - 1;
    if d % 2 != 0 {
        return None;
    }
    let g0 = c[0].sqrt();
    if &g0 * &g0 != c[0] {
        return None;
    }
    let mut g = vec![g0.clone()];
    let two_g0 = &g0 * 2;
    for i in 1..=d / 2 {
        let mut s = c[i].clone();
        for j in 1..i {
            s -= &g[j] * &g[i - j];
        }
        let (q, r) = s.div_rem(&two_g0);
        if !r.is_zero() {
            return None;
        }
        g.push(q);
    }
    let root = LaurentPoly::from_coeffs(&g);
    (&root * &root == delta.poly()).then_some(root)
}

pub fn is_perfect_square(delta: &CanonicalAlexander) -> bool {
    perfect_square_root(delta).is_some()
}

/// Squares over the two-element field are the polynomials in `t^2`.
pub fn is_square_mod2(delta: &CanonicalAlexander) -> bool {
    let r = delta.poly().mod2();
    let Some(lo) = r.min_degree() else {
        return true;
    };
    r.shift(-lo).terms().all(|(d, _)| d % 2 == 0)
}

/// Knot labels matched by Alexander polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum KnotId {
    Unknot,
    /// The twist knot `K_m`.
    Twist(i64),
    /// The `(p, q)`-torus knot, `p < q`.
    Torus(u32, u32),
}

impl fmt::Display for KnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotId::Unknot => write!(f, "Unknot"),
            KnotId::Twist(m) => write!(f, "Twist({m})"),
            KnotId::Torus(p, q) => write!(f, "Torus({p},{q})"),
        }
    }
}

const TWIST_SEARCH: i64 = 64;
const TORUS_SEARCH: u32 = 64;

/// Candidate knots whose Alexander polynomial equals `delta`: twist knots
/// `K_{2n}` and their mirrors `K_{-2n-1}` for `|n| <= 64`, and torus knots
/// with `pq <= 64`. A match is a candidate, not an identification.
pub fn identify(delta: &CanonicalAlexander) -> Vec<KnotId> {
    if delta.is_one() {
        return vec![KnotId::Unknot];
    }
    let mut out = Vec::new();
    for a in 1..=TWIST_SEARCH {
        for n in [a, -a] {
            if twist_alexander(n) == *delta {
                out.push(KnotId::Twist(2 * n));
                out.push(KnotId::Twist(-2 * n - 1));
            }
        }
    }
    for p in 2..=TORUS_SEARCH {
        for q in p + 1..=TORUS_SEARCH / p {
            if p.gcd(&q) == 1 && torus_alexander(p as i64, q as i64).ok().as_ref() == Some(delta) {
                out.push(KnotId::Torus(p, q));
            }
        }
    }
    out
}
