//! Double-double ("extended") floating point.
//!
//! A value is the unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`, which
//! gives roughly 106 bits of mantissa. Only the handful of operations needed
//! for evaluating cosines at exactly reduced angles are provided.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::exact::Rational;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Extended {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Extended {
    pub const ZERO: Extended = Extended { hi: 0.0, lo: 0.0 };
    pub const ONE: Extended = Extended { hi: 1.0, lo: 0.0 };
    pub const PI: Extended = Extended {
        hi: 3.141_592_653_589_793_116e0,
        lo: 1.224_646_799_147_353_207e-16,
    };
    pub const FRAC_PI_2: Extended = Extended {
        hi: 1.570_796_326_794_896_558e0,
        lo: 6.123_233_995_736_766_036e-17,
    };

    pub const fn from_f64(x: f64) -> Self {
        Extended { hi: x, lo: 0.0 }
    }

    /// Exact conversion of any `i64`.
    pub fn from_i64(n: i64) -> Self {
        let hi = n as f64;
        // `hi` is the nearest double; the remainder fits exactly in an i128 and
        // is small enough to be exact as a double.
        let rest = (n as i128 - hi as i128) as f64;
        let (hi, lo) = quick_two_sum(hi, rest);
        Extended { hi, lo }
    }

    pub fn from_rational(q: &Rational) -> Self {
        Extended::from_i64(*q.numer()) / Extended::from_i64(*q.denom())
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self
        }
    }

    pub fn is_negative(self) -> bool {
        self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0)
    }

    pub fn signum(self) -> i32 {
        if self.hi > 0.0 || (self.hi == 0.0 && self.lo > 0.0) {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn floor(self) -> f64 {
        let f = self.hi.floor();
        if f == self.hi {
            // hi is an integer; lo decides which side we are on.
            if self.lo < 0.0 {
                f - 1.0
            } else {
                f
            }
        } else {
            f
        }
    }

    pub fn ceil(self) -> f64 {
        let c = self.hi.ceil();
        if c == self.hi {
            if self.lo > 0.0 {
                c + 1.0
            } else {
                c
            }
        } else {
            c
        }
    }

    pub fn round(self) -> f64 {
        (self + Extended::from_f64(0.5)).floor()
    }

    fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Extended { hi, lo }
    }

    fn div_f64(self, b: f64) -> Self {
        self / Extended::from_f64(b)
    }

    /// Returns `(sin x, cos x)`.
    pub fn sin_cos(self) -> (Extended, Extended) {
        // Reduce by the nearest multiple of pi/2; the callers only pass
        // arguments of moderate size so the reduction error stays at ~1e-31.
        let k = (self / Extended::FRAC_PI_2).round();
        let r = self - Extended::FRAC_PI_2.mul_f64(k);
        let (s, c) = sin_cos_taylor(r);
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn sin(self) -> Extended {
        self.sin_cos().0
    }

    pub fn cos(self) -> Extended {
        self.sin_cos().1
    }
}

/// Taylor series for `|r| <= pi/4 + eps`; 30 terms are far past 2^-106.
fn sin_cos_taylor(r: Extended) -> (Extended, Extended) {
    let r2 = r * r;
    let mut sin = r;
    let mut term = r;
    let mut cos = Extended::ONE;
    let mut cterm = Extended::ONE;
    for i in 1..=16 {
        let a = (2 * i) as f64;
        let b = (2 * i + 1) as f64;
        term = (-(term * r2)).div_f64(a * b);
        sin = sin + term;
        cterm = (-(cterm * r2)).div_f64((a - 1.0) * a);
        cos = cos + cterm;
    }
    (sin, cos)
}

impl Add for Extended {
    type Output = Extended;
    fn add(self, b: Extended) -> Extended {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Extended { hi, lo }
    }
}

impl Sub for Extended {
    type Output = Extended;
    fn sub(self, b: Extended) -> Extended {
        self + (-b)
    }
}

impl Neg for Extended {
    type Output = Extended;
    fn neg(self) -> Extended {
        Extended {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for Extended {
    type Output = Extended;
    fn mul(self, b: Extended) -> Extended {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Extended { hi, lo }
    }
}

impl Div for Extended {
    type Output = Extended;
    fn div(self, b: Extended) -> Extended {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Extended { hi, lo } + Extended::from_f64(q3)
    }
}

impl PartialOrd for Extended {
    fn partial_cmp(&self, other: &Extended) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            o => Some(o),
        }
    }
}

impl From<f64> for Extended {
    fn from(x: f64) -> Self {
        Extended::from_f64(x)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_f64(), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_is_extended() {
        // pi - 355/113 = -2.6676418906242231e-7, needs the low word to land
        // well below f64 resolution.
        let d = Extended::PI - Extended::from_i64(355) / Extended::from_i64(113);
        assert!((d.to_f64() + 2.667_641_890_624_223_1e-7).abs() < 1e-21);
    }

    #[test]
    fn trig_identities_hold_far_below_f64_precision() {
        for i in -40..40 {
            let x = Extended::from_i64(i) / Extended::from_i64(7);
            let (s, c) = x.sin_cos();
            let one = s * s + c * c - Extended::ONE;
            assert!(one.abs().to_f64() < 1e-29, "{i}: {}", one.to_f64());
            assert!((s.to_f64() - (i as f64 / 7.0).sin()).abs() < 1e-15);
        }
    }

    #[test]
    fn sin_of_sixth_pi_is_half_to_extended_precision() {
        let x = Extended::PI / Extended::from_i64(6);
        let err = x.sin() - Extended::from_f64(0.5);
        assert!(err.abs().to_f64() < 1e-30, "{}", err.to_f64());
    }

    #[test]
    fn floor_and_ceil_respect_low_word() {
        let just_below = Extended::from_f64(3.0) - Extended::from_f64(1e-20);
        assert_eq!(just_below.floor(), 2.0);
        assert_eq!(just_below.ceil(), 3.0);
        let just_above = Extended::from_f64(3.0) + Extended::from_f64(1e-20);
        assert_eq!(just_above.floor(), 3.0);
        assert_eq!(just_above.ceil(), 4.0);
    }

    #[test]
    fn from_i64_is_exact_for_large_values() {
        let n = (1i64 << 60) + 1;
        let e = Extended::from_i64(n);
        assert_eq!(e.hi as i128 + e.lo as i128, n as i128);
    }
}
