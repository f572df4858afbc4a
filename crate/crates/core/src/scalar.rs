//! Exact scalars: rationals with arbitrary-precision parts, optionally
//! extended by the square root of a fixed square-free integer `d`.
//!
//! A scalar is `p + q·√d` with `p, q ∈ ℚ`. When `q = 0` the scalar is a plain
//! rational and carries no radicand, so it combines freely with scalars of
//! any extension. Two scalars whose radicands differ cannot be combined.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("cannot combine Q(sqrt({0})) with Q(sqrt({1}))")]
    ExtensionMismatch(i64, i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand {0} is not a square-free integer other than 0 and 1")]
    BadRadicand(i64),
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}

/// Element of ℚ or of a quadratic extension ℚ(√d).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    rational: BigRational,
    surd: Option<(BigRational, i64)>,
}

/// Whether `d` is a valid radicand: square-free and not 0 or 1.
pub fn is_square_free(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let d = d.unsigned_abs();
    let mut k = 2u64;
    while k.saturating_mul(k) <= d {
        if d.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

impl ExactScalar {
    pub fn zero() -> Self {
        Self { rational: BigRational::zero(), surd: None }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self { rational: BigRational::from_integer(BigInt::from(n)), surd: None }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self { rational: BigRational::from_integer(n), surd: None }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self { rational: r, surd: None }
    }

    /// `num/den`; panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    /// `p + q·√d`.
    pub fn quadratic(p: BigRational, q: BigRational, d: i64) -> Result<Self, ScalarError> {
        if !is_square_free(d) {
            return Err(ScalarError::BadRadicand(d));
        }
        Ok(Self::normalized(p, q, Some(d)))
    }

    /// `√d` itself.
    pub fn sqrt_of(d: i64) -> Result<Self, ScalarError> {
        Self::quadratic(BigRational::zero(), BigRational::one(), d)
    }

    fn normalized(p: BigRational, q: BigRational, d: Option<i64>) -> Self {
        match d {
            Some(d) if !q.is_zero() => Self { rational: p, surd: Some((q, d)) },
            _ => Self { rational: p, surd: None },
        }
    }

    pub fn is_zero(&self) -> bool {
        self.surd.is_none() && self.rational.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.surd.is_none() && self.rational.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_none()
    }

    /// The rational value, when the surd part vanishes.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self.surd {
            None => Some(&self.rational),
            Some(_) => None,
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> BigRational {
        self.surd.as_ref().map(|(q, _)| q.clone()).unwrap_or_else(BigRational::zero)
    }

    pub fn radicand(&self) -> Option<i64> {
        self.surd.as_ref().map(|(_, d)| *d)
    }

    fn join(&self, other: &Self) -> Result<Option<i64>, ScalarError> {
        match (self.radicand(), other.radicand()) {
            (Some(a), Some(b)) if a != b => Err(ScalarError::ExtensionMismatch(a, b)),
            (Some(a), _) => Ok(Some(a)),
            (None, b) => Ok(b),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.join(other)?;
        Ok(Self::normalized(
            &self.rational + &other.rational,
            self.surd_part() + other.surd_part(),
            d,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.join(other)?;
        Ok(Self::normalized(
            &self.rational - &other.rational,
            self.surd_part() - other.surd_part(),
            d,
        ))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.join(other)?;
        if self.surd.is_none() && other.surd.is_none() {
            return Ok(Self::from_rational(&self.rational * &other.rational));
        }
        let (p1, q1) = (&self.rational, self.surd_part());
        let (p2, q2) = (&other.rational, other.surd_part());
        let dd = BigRational::from_integer(BigInt::from(d.unwrap_or(0)));
        let p = p1 * p2 + &q1 * &q2 * dd;
        let q = p1 * &q2 + &q1 * p2;
        Ok(Self::normalized(p, q, d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        let inv = other.inv()?;
        self.checked_mul(&inv)
    }

    /// Field norm `p² − d·q²` (equals `p²` for rationals).
    pub fn norm(&self) -> BigRational {
        match &self.surd {
            None => &self.rational * &self.rational,
            Some((q, d)) => {
                &self.rational * &self.rational
                    - q * q * BigRational::from_integer(BigInt::from(*d))
            }
        }
    }

    /// Galois conjugate `p − q·√d`.
    pub fn conj(&self) -> Self {
        match &self.surd {
            None => self.clone(),
            Some((q, d)) => Self { rational: self.rational.clone(), surd: Some((-q, *d)) },
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match &self.surd {
            None => Ok(Self::from_rational(self.rational.recip())),
            Some(_) => {
                let n = self.norm();
                let c = self.conj();
                Ok(Self::normalized(
                    &c.rational / &n,
                    c.surd_part() / &n,
                    self.radicand(),
                ))
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact square root when the value is the square of a rational.
    pub fn rational_sqrt(&self) -> Option<Self> {
        let r = self.as_rational()?;
        if r.is_negative() {
            return None;
        }
        let n = r.numer().sqrt();
        let d = r.denom().sqrt();
        if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
            Some(Self::from_rational(BigRational::new(n, d)))
        } else {
            None
        }
    }

    /// Sign of a rational value; `None` for irrational scalars.
    pub fn rational_sign(&self) -> Option<Ordering> {
        self.as_rational().map(|r| r.cmp(&BigRational::zero()))
    }

    /// Approximate real part as `f64`.
    pub fn to_f64(&self) -> f64 {
        let p = ratio_to_f64(&self.rational);
        match &self.surd {
            Some((q, d)) if *d > 0 => p + ratio_to_f64(q) * (*d as f64).sqrt(),
            _ => p,
        }
    }
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    // Scale down huge numerators/denominators together before converting.
    let (n, d) = (r.numer(), r.denom());
    let shift = n.bits().max(d.bits()).saturating_sub(900);
    let n = n >> shift;
    let d = d >> shift;
    match (n.to_f64(), d.to_f64()) {
        (Some(a), Some(b)) if b != 0.0 => a / b,
        _ => f64::NAN,
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for ExactScalar {
    fn from(n: BigInt) -> Self {
        Self::from_bigint(n)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $trait<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            rational: -&self.rational,
            surd: self.surd.as_ref().map(|(q, d)| (-q, *d)),
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

fn fmt_ratio(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.surd {
            None => f.write_str(&fmt_ratio(&self.rational)),
            Some((q, d)) => write!(f, "{} + {}*sqrt({})", fmt_ratio(&self.rational), fmt_ratio(q), d),
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_ratio(s: &str) -> Result<BigRational, ScalarError> {
    let err = || ScalarError::Parse(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| err())?;
    let d = BigInt::from_str(d).map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for ExactScalar {
    type Err = ScalarError;

    /// Accepts `num`, `num/den` and `p/q + p'/q'*sqrt(d)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ScalarError::Parse(s.to_string());
        match s.find("*sqrt(") {
            None => Ok(Self::from_rational(parse_ratio(s)?)),
            Some(pos) => {
                let head = &s[..pos];
                let tail = &s[pos + "*sqrt(".len()..];
                let d: i64 = tail.strip_suffix(')').ok_or_else(err)?.trim().parse().map_err(|_| err())?;
                let split = head.rfind(" + ").ok_or_else(err)?;
                let p = parse_ratio(&head[..split])?;
                let q = parse_ratio(&head[split + 3..])?;
                Self::quadratic(p, q, d)
            }
        }
    }
}

/// Content-normalizes a list of rationals: multiplies by the lcm of
/// denominators, divides by the gcd of numerators. Returns integers.
pub(crate) fn primitive_integers(values: &[BigRational]) -> Vec<BigInt> {
    let lcm = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = values.iter().map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return ints;
    }
    let mut out: Vec<BigInt> = ints.into_iter().map(|v| v / &g).collect();
    if let Some(first) = out.iter().find(|v| !v.is_zero()) {
        if first.sign() == Sign::Minus {
            out.iter_mut().for_each(|v| *v = -v.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_canonical_form() {
        let a = ExactScalar::ratio(6, -4);
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!((&a + &ExactScalar::ratio(3, 2)).to_string(), "0");
    }

    #[test]
    fn imaginary_radicand() {
        let i7 = ExactScalar::sqrt_of(-7).unwrap();
        assert_eq!(&i7 * &i7, ExactScalar::from_integer(-7));
        assert_eq!(i7.to_string().parse::<ExactScalar>().unwrap(), i7);
        assert_eq!(i7.rational_sign(), None);
        assert!(ExactScalar::sqrt_of(-4).is_err() && ExactScalar::sqrt_of(1).is_err());
        assert!(ExactScalar::sqrt_of(-1).is_ok());
    }

    #[test]
    fn quadratic_norm_identity() {
        let a = ExactScalar::quadratic(q(3, 2), q(-5, 7), 7).unwrap();
        let prod = &a * &a.conj();
        assert!(prod.is_rational());
        assert_eq!(prod.as_rational().unwrap(), &a.norm());
        assert_eq!(a.norm(), q(9, 4) - q(25, 49) * q(7, 1));
    }

    #[test]
    fn inverse_in_extension() {
        let a = ExactScalar::quadratic(q(1, 1), q(-2, 1), 7).unwrap();
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
    }

    #[test]
    fn mismatched_extensions_rejected() {
        let a = ExactScalar::sqrt_of(7).unwrap();
        let b = ExactScalar::sqrt_of(3).unwrap();
        assert_eq!(a.checked_add(&b), Err(ScalarError::ExtensionMismatch(7, 3)));
        assert!(ExactScalar::sqrt_of(12).is_err());
    }

    #[test]
    fn surd_cancels_to_rational() {
        let r7 = ExactScalar::sqrt_of(7).unwrap();
        let sq = &r7 * &r7;
        assert!(sq.is_rational());
        assert_eq!(sq, ExactScalar::from_integer(7));
        assert!((&r7 - &r7).is_zero());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-17", "3/5", "1 + -2*sqrt(7)", "-5/3 + 4/9*sqrt(7)"] {
            let v: ExactScalar = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert!("1/0".parse::<ExactScalar>().is_err());
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(ExactScalar::ratio(9, 49).rational_sqrt(), Some(ExactScalar::ratio(3, 7)));
        assert_eq!(ExactScalar::ratio(2, 1).rational_sqrt(), None);
        assert_eq!(ExactScalar::ratio(-4, 1).rational_sqrt(), None);
    }
}
