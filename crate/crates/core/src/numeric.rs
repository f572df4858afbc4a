//! Decimal fixed-point complex arithmetic on big integers.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

use crate::scalar::ExactScalar;

/// A complex number `(re + i·im) / 10^digits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    pub re: BigInt,
    pub im: BigInt,
}

#[derive(Debug, Clone)]
pub struct Fixed {
    digits: u32,
    scale: BigInt,
}

impl Fixed {
    pub fn new(digits: u32) -> Self {
        Self { digits, scale: BigInt::from(10).pow(digits) }
    }

    pub fn zero(&self) -> Complex {
        Complex { re: BigInt::zero(), im: BigInt::zero() }
    }

    pub fn from_scalar(&self, x: &ExactScalar) -> Complex {
        let r = x.rational_part();
        let mut re = r.numer() * &self.scale / r.denom();
        let mut im = BigInt::zero();
        if let Some(d) = x.radicand() {
            let q = x.surd_part();
            let root: BigInt = Roots::sqrt(&(BigInt::from(d.unsigned_abs()) * &self.scale * &self.scale));
            let part = q.numer() * root / q.denom();
            if d > 0 {
                re += part;
            } else {
                im = part;
            }
        }
        Complex { re, im }
    }

    pub fn add(&self, a: &Complex, b: &Complex) -> Complex {
        Complex { re: &a.re + &b.re, im: &a.im + &b.im }
    }

    pub fn sub(&self, a: &Complex, b: &Complex) -> Complex {
        Complex { re: &a.re - &b.re, im: &a.im - &b.im }
    }

    pub fn neg(&self, a: &Complex) -> Complex {
        Complex { re: -&a.re, im: -&a.im }
    }

    pub fn mul(&self, a: &Complex, b: &Complex) -> Complex {
        Complex {
            re: (&a.re * &b.re - &a.im * &b.im) / &self.scale,
            im: (&a.re * &b.im + &a.im * &b.re) / &self.scale,
        }
    }

    pub fn div(&self, a: &Complex, b: &Complex) -> Complex {
        let den = &b.re * &b.re + &b.im * &b.im;
        Complex {
            re: (&a.re * &b.re + &a.im * &b.im) * &self.scale / &den,
            im: (&a.im * &b.re - &a.re * &b.im) * &self.scale / &den,
        }
    }

    /// Scaled modulus.
    pub fn abs(&self, a: &Complex) -> BigInt {
        Roots::sqrt(&(&a.re * &a.re + &a.im * &a.im))
    }

    /// Principal square root.
    pub fn sqrt(&self, a: &Complex) -> Complex {
        let r = self.abs(a);
        let re: BigInt = Roots::sqrt(&((&r + &a.re) * &self.scale / 2));
        let mut im: BigInt = Roots::sqrt(&((&r - &a.re) * &self.scale / 2));
        if a.im.is_negative() {
            im = -im;
        }
        Complex { re, im }
    }

    /// `10^-k` in scaled units.
    pub fn epsilon(&self, k: u32) -> BigInt {
        if k >= self.digits {
            BigInt::one()
        } else {
            BigInt::from(10).pow(self.digits - k)
        }
    }

    /// Decimal rendering with `shown` fractional digits.
    pub fn format(&self, a: &Complex, shown: u32) -> String {
        let part = |x: &BigInt| {
            let cut = BigInt::from(10).pow(self.digits - shown.min(self.digits));
            let v: BigInt = x / cut;
            let s = v.abs().to_string();
            let width = shown as usize + 1;
            let s = format!("{s:0>width$}");
            let (int, frac) = s.split_at(s.len() - shown as usize);
            format!("{}{int}.{frac}", if v.is_negative() { "-" } else { "" })
        };
        if a.im.is_zero() {
            part(&a.re)
        } else {
            let im = part(&a.im);
            match im.strip_prefix('-') {
                Some(m) => format!("{} - {m}i", part(&a.re)),
                None => format!("{} + {im}i", part(&a.re)),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_roots() {
        let f = Fixed::new(40);
        let minus_four = f.from_scalar(&ExactScalar::from_integer(-4));
        let r = f.sqrt(&minus_four);
        assert_eq!(f.format(&r, 5), "0.00000 + 2.00000i");
        let s7 = f.from_scalar(&ExactScalar::sqrt_of(7).unwrap());
        assert_eq!(f.format(&s7, 10), "2.6457513110");
        let back = f.mul(&s7, &s7);
        assert!((&back.re - f.from_scalar(&ExactScalar::from_integer(7)).re).abs() < f.epsilon(35));
    }

    #[test]
    fn division() {
        let f = Fixed::new(30);
        let one = f.from_scalar(&ExactScalar::one());
        let i = Complex { re: BigInt::zero(), im: f.from_scalar(&ExactScalar::one()).re };
        let q = f.div(&one, &i);
        assert_eq!(f.format(&q, 3), "0.000 - 1.000i");
    }
}
