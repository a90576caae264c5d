//! Exact angles of the form `a*pi + b` with rational `a`, `b`.
//!
//! Phases and crossing times of Lissajous curves live in this set, so
//! membership tests ("is this phase k*pi/n?") can be decided without
//! floating point. Numeric values are produced in double-double precision.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::real::Extended;

pub type Rational = Ratio<i64>;

pub fn rational(n: i64, d: i64) -> Rational {
    Ratio::new(n, d)
}

pub fn int(n: i64) -> Rational {
    Ratio::from_integer(n)
}

/// `pi_part * pi + unit_part`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExactAngle {
    pub pi_part: Rational,
    pub unit_part: Rational,
}

impl ExactAngle {
    pub const ZERO: ExactAngle = ExactAngle {
        pi_part: Ratio::new_raw(0, 1),
        unit_part: Ratio::new_raw(0, 1),
    };

    pub fn new(pi_part: Rational, unit_part: Rational) -> Self {
        ExactAngle { pi_part, unit_part }
    }

    /// `p/q * pi`.
    pub fn pi_frac(p: i64, q: i64) -> Self {
        ExactAngle::new(rational(p, q), Rational::zero())
    }

    pub fn unit(q: Rational) -> Self {
        ExactAngle::new(Rational::zero(), q)
    }

    pub fn pi() -> Self {
        ExactAngle::pi_frac(1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.pi_part.is_zero() && self.unit_part.is_zero()
    }

    /// True when the angle is a pure rational multiple of pi.
    pub fn is_pi_rational(&self) -> bool {
        self.unit_part.is_zero()
    }

    pub fn scale(&self, q: Rational) -> Self {
        ExactAngle::new(self.pi_part * q, self.unit_part * q)
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(int(n))
    }

    pub fn value(&self) -> Extended {
        Extended::from_rational(&self.pi_part) * Extended::PI
            + Extended::from_rational(&self.unit_part)
    }

    pub fn to_f64(&self) -> f64 {
        self.value().to_f64()
    }

    /// `self / pi`, exact when the unit part vanishes.
    pub fn over_pi(&self) -> OverPi {
        if self.unit_part.is_zero() {
            OverPi::Exact(self.pi_part)
        } else {
            OverPi::Approx(
                Extended::from_rational(&self.pi_part)
                    + Extended::from_rational(&self.unit_part) / Extended::PI,
            )
        }
    }

    /// The same angle with the pi part reduced into `[0, 2)`.
    pub fn reduce_turns(&self) -> Self {
        let two = int(2);
        let q = (self.pi_part / two).floor();
        ExactAngle::new(self.pi_part - q * two, self.unit_part)
    }

    /// `(sin, cos)` evaluated after exact reduction of the pi part.
    pub fn sin_cos(&self) -> (Extended, Extended) {
        self.reduce_turns().value().sin_cos()
    }

    pub fn cos(&self) -> Extended {
        self.sin_cos().1
    }

    pub fn sin(&self) -> Extended {
        self.sin_cos().0
    }

    /// Midpoint of two angles.
    pub fn midpoint(&self, other: &ExactAngle) -> ExactAngle {
        (*self + *other).scale(rational(1, 2))
    }
}

/// Result of dividing an angle by pi.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum OverPi {
    Exact(Rational),
    Approx(Extended),
}

impl OverPi {
    pub fn to_f64(self) -> f64 {
        match self {
            OverPi::Exact(q) => *q.numer() as f64 / *q.denom() as f64,
            OverPi::Approx(e) => e.to_f64(),
        }
    }
}

impl Add for ExactAngle {
    type Output = ExactAngle;
    fn add(self, o: ExactAngle) -> ExactAngle {
        ExactAngle::new(self.pi_part + o.pi_part, self.unit_part + o.unit_part)
    }
}

impl Sub for ExactAngle {
    type Output = ExactAngle;
    fn sub(self, o: ExactAngle) -> ExactAngle {
        ExactAngle::new(self.pi_part - o.pi_part, self.unit_part - o.unit_part)
    }
}

impl Neg for ExactAngle {
    type Output = ExactAngle;
    fn neg(self) -> ExactAngle {
        ExactAngle::new(-self.pi_part, -self.unit_part)
    }
}

impl Mul<Rational> for ExactAngle {
    type Output = ExactAngle;
    fn mul(self, q: Rational) -> ExactAngle {
        self.scale(q)
    }
}

impl PartialOrd for ExactAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Equal angles compare equal exactly; otherwise `(a1 - a2)*pi != (b2 - b1)`
/// since pi is irrational, and the sign is read from the extended value.
impl Ord for ExactAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let d = *self - *other;
        if d.unit_part.is_zero() {
            return d.pi_part.cmp(&Rational::zero());
        }
        if d.pi_part.is_zero() {
            return d.unit_part.cmp(&Rational::zero());
        }
        match d.value().signum() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => unreachable!("nonzero a*pi + b evaluated to zero"),
        }
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for ExactAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = !self.unit_part.is_zero();
        let pi = !self.pi_part.is_zero();
        match (unit, pi) {
            (false, false) => write!(f, "0"),
            (true, false) => write!(f, "{}", fmt_rational(&self.unit_part)),
            (_, true) => {
                if unit {
                    write!(f, "{}", fmt_rational(&self.unit_part))?;
                    if self.pi_part.is_negative() {
                        write!(f, "-")?;
                    } else {
                        write!(f, "+")?;
                    }
                } else if self.pi_part.is_negative() {
                    write!(f, "-")?;
                }
                let a = self.pi_part.abs();
                if a.is_one() {
                    write!(f, "pi")
                } else {
                    write!(f, "{}*pi", fmt_rational(&a))
                }
            }
        }
    }
}

impl Serialize for ExactAngle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseAngleError {
    #[error("unexpected character {0:?} at offset {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("exponent notation is not exact; write a fraction instead")]
    Exponent,
    #[error("product of two pi terms is not an angle")]
    NonLinear,
    #[error("division by zero or by a pi term")]
    BadDivision,
    #[error("number out of range")]
    Overflow,
}

/// Parses expressions such as `(19-3*pi)/10`, `pi/5`, `1/2`, `0.3`.
///
/// Grammar: sums and differences of products/quotients of rationals and `pi`
/// with parentheses. Finite decimals are read as exact fractions.
impl FromStr for ExactAngle {
    type Err = ParseAngleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            chars: s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let v = p.expr()?;
        match p.peek() {
            None => Ok(v),
            Some((i, c)) => Err(ParseAngleError::UnexpectedChar(c, i)),
        }
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn expr(&mut self) -> Result<ExactAngle, ParseAngleError> {
        let mut v = self.term()?;
        while let Some((_, c)) = self.peek() {
            match c {
                '+' => {
                    self.bump();
                    v = v + self.term()?;
                }
                '-' => {
                    self.bump();
                    v = v - self.term()?;
                }
                _ => break,
            }
        }
        Ok(v)
    }

    fn term(&mut self) -> Result<ExactAngle, ParseAngleError> {
        let mut v = self.factor()?;
        while let Some((_, c)) = self.peek() {
            match c {
                '*' => {
                    self.bump();
                    let r = self.factor()?;
                    v = if v.pi_part.is_zero() {
                        r.scale(v.unit_part)
                    } else if r.pi_part.is_zero() {
                        v.scale(r.unit_part)
                    } else {
                        return Err(ParseAngleError::NonLinear);
                    };
                }
                '/' => {
                    self.bump();
                    let r = self.factor()?;
                    if !r.pi_part.is_zero() || r.unit_part.is_zero() {
                        return Err(ParseAngleError::BadDivision);
                    }
                    v = v.scale(r.unit_part.recip());
                }
                _ => break,
            }
        }
        Ok(v)
    }

    fn factor(&mut self) -> Result<ExactAngle, ParseAngleError> {
        match self.peek() {
            None => Err(ParseAngleError::UnexpectedEnd),
            Some((_, '-')) => {
                self.bump();
                Ok(-self.factor()?)
            }
            Some((_, '+')) => {
                self.bump();
                self.factor()
            }
            Some((_, '(')) => {
                self.bump();
                let v = self.expr()?;
                match self.bump() {
                    Some((_, ')')) => Ok(v),
                    Some((i, c)) => Err(ParseAngleError::UnexpectedChar(c, i)),
                    None => Err(ParseAngleError::UnexpectedEnd),
                }
            }
            Some((_, 'p')) => {
                self.bump();
                match self.bump() {
                    Some((_, 'i')) => Ok(ExactAngle::pi()),
                    Some((i, c)) => Err(ParseAngleError::UnexpectedChar(c, i)),
                    None => Err(ParseAngleError::UnexpectedEnd),
                }
            }
            Some((_, c)) if c.is_ascii_digit() || c == '.' => self.number(),
            Some((i, c)) => Err(ParseAngleError::UnexpectedChar(c, i)),
        }
    }

    fn number(&mut self) -> Result<ExactAngle, ParseAngleError> {
        let mut numer: i64 = 0;
        let mut denom: i64 = 1;
        let mut seen_point = false;
        let mut digits = 0;
        while let Some((_, c)) = self.peek() {
            if let Some(d) = c.to_digit(10) {
                numer = numer
                    .checked_mul(10)
                    .and_then(|n| n.checked_add(d as i64))
                    .ok_or(ParseAngleError::Overflow)?;
                if seen_point {
                    denom = denom.checked_mul(10).ok_or(ParseAngleError::Overflow)?;
                }
                digits += 1;
            } else if c == '.' && !seen_point {
                seen_point = true;
            } else if c == 'e' || c == 'E' {
                return Err(ParseAngleError::Exponent);
            } else {
                break;
            }
            self.bump();
        }
        if digits == 0 {
            return match self.peek() {
                Some((i, c)) => Err(ParseAngleError::UnexpectedChar(c, i)),
                None => Err(ParseAngleError::UnexpectedEnd),
            };
        }
        let g = numer.gcd(&denom).max(1);
        Ok(ExactAngle::unit(rational(numer / g, denom / g)))
    }
}
