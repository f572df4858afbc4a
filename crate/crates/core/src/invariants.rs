//! Classical invariants of binary quartics, quintics, sextics, octavics
//! and of diagonal ternary cubics.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use thiserror::Error;

use crate::binary::{self, BinaryForm};
use crate::poly::{Monomial, MultiPoly, PolyError};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("{0} vanishes")]
    DivisionByVanishingInvariant(&'static str),
    #[error("expected degree {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("ternary cubic is not of the shape a z1^3 + b z2^3 + c z3^3 + 6d z1 z2 z3")]
    WrongShape,
    #[error("bracket scheme: {0}")]
    BadScheme(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn int(n: i64) -> ExactScalar {
    ExactScalar::from_integer(n)
}

fn big(s: &str) -> ExactScalar {
    ExactScalar::from_bigint(s.parse::<BigInt>().expect("integer literal"))
}

fn factorial(n: u32) -> ExactScalar {
    ExactScalar::from_bigint((1..=n).fold(BigInt::from(1), |acc, k| acc * k))
}

fn binom(n: u32, k: u32) -> ExactScalar {
    ExactScalar::from_bigint(binomial(BigInt::from(n), BigInt::from(k)))
}

fn ratio(num: &ExactScalar, den: &ExactScalar, name: &'static str) -> Result<ExactScalar, InvariantError> {
    if den.is_zero() {
        return Err(InvariantError::DivisionByVanishingInvariant(name));
    }
    Ok(num / den)
}

fn expect_degree(q: &BinaryForm, n: usize) -> Result<(), InvariantError> {
    if q.degree() != n {
        return Err(InvariantError::WrongDegree { expected: n, got: q.degree() });
    }
    Ok(())
}

/// `(Q,Q)^(n) = (n!)² Σ (−1)^i C(n,i) a_i a_{n−i}`.
pub fn transvectant_self(q: &BinaryForm) -> ExactScalar {
    let n = q.degree() as u32;
    let a = q.coeffs();
    let sum = (0..=n).fold(ExactScalar::zero(), |acc, i| {
        let t = &(&binom(n, i) * &a[i as usize]) * &a[(n - i) as usize];
        if i % 2 == 0 {
            &acc + &t
        } else {
            &acc - &t
        }
    });
    &factorial(n).pow(2) * &sum
}

/// Product of binary forms of degrees `n` and `k`.
pub fn form_product(p: &BinaryForm, q: &BinaryForm) -> BinaryForm {
    let (a, b) = (p.monomial_coeffs(), q.monomial_coeffs());
    let mut c = vec![ExactScalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] = &c[i + j] + &(x * y);
        }
    }
    BinaryForm::from_monomial_coeffs(&c)
}

/// Product of symbolic brackets `[i,j]^e` over `letters` letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketScheme {
    letters: usize,
    factors: Vec<(usize, usize, u32)>,
    degree: u32,
    negated: bool,
}

impl BracketScheme {
    /// Parses text like `[1,2]^4[1,3]^2`; letters are 1-based. A factor
    /// written `[j,i]` with `j > i` is stored as `[i,j]` with a sign.
    pub fn parse(text: &str) -> Result<Self, InvariantError> {
        let bad = |msg: &str| InvariantError::BadScheme(msg.to_string());
        let mut factors = Vec::new();
        let mut negated = false;
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('[').ok_or_else(|| bad("expected '['"))?;
            let close = body.find(']').ok_or_else(|| bad("missing ']'"))?;
            let (pair, after) = (&body[..close], &body[close + 1..]);
            let mut it = pair.split(',').map(|s| s.trim().parse::<usize>());
            let (Some(Ok(i)), Some(Ok(j)), None) = (it.next(), it.next(), it.next()) else {
                return Err(bad("bracket needs two letters"));
            };
            let (e, after) = match after.strip_prefix('^') {
                Some(tail) => {
                    let end = tail.find(|c: char| !c.is_ascii_digit()).unwrap_or(tail.len());
                    (tail[..end].parse::<u32>().map_err(|_| bad("bad exponent"))?, &tail[end..])
                }
                None => (1, after),
            };
            if i == 0 || j == 0 || i == j {
                return Err(bad("letters must be distinct and positive"));
            }
            if i > j && e % 2 == 1 {
                negated = !negated;
            }
            factors.push((i.min(j) - 1, i.max(j) - 1, e));
            rest = after.trim_start();
        }
        let letters = factors.iter().map(|&(_, j, _)| j + 1).max().ok_or_else(|| bad("empty scheme"))?;
        let mut totals = vec![0u32; letters];
        for &(i, j, e) in &factors {
            totals[i] += e;
            totals[j] += e;
        }
        let degree = totals[0];
        if totals.iter().any(|&t| t != degree) {
            return Err(bad("scheme is not homogeneous in its letters"));
        }
        Ok(Self { letters, factors, degree, negated })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn letters(&self) -> usize {
        self.letters
    }
}

/// Umbral evaluation. Letter `ν` stands for `(x_ν, y_ν)`, brackets are
/// `x_i y_j − x_j y_i`, and a saturated letter `x^p y^(n−p)` becomes `a_p`.
pub fn bracket_eval(scheme: &BracketScheme, q: &BinaryForm) -> Result<ExactScalar, InvariantError> {
    if q.degree() != scheme.degree as usize {
        return Err(InvariantError::WrongDegree { expected: scheme.degree as usize, got: q.degree() });
    }
    let a = q.coeffs();
    let mut remaining = scheme.factors.clone();
    let mut live: Vec<usize> = Vec::new();
    let mut terms: HashMap<Vec<u32>, ExactScalar> = HashMap::from([(Vec::new(), ExactScalar::one())]);
    let mentions = |rem: &[(usize, usize, u32)], v: usize| rem.iter().any(|&(i, j, _)| i == v || j == v);
    while !remaining.is_empty() {
        let pick = (0..remaining.len())
            .min_by_key(|&idx| {
                let (i, j, _) = remaining[idx];
                let rest: Vec<_> = remaining.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, f)| *f).collect();
                let mut next: Vec<usize> = live.clone();
                for v in [i, j] {
                    if !next.contains(&v) {
                        next.push(v);
                    }
                }
                (next.iter().filter(|&&v| mentions(&rest, v)).count(), idx)
            })
            .expect("nonempty");
        let (i, j, e) = remaining.remove(pick);
        for v in [i, j] {
            if !live.contains(&v) {
                live.push(v);
                terms = terms
                    .into_iter()
                    .map(|(mut k, c)| {
                        k.push(0);
                        (k, c)
                    })
                    .collect();
            }
        }
        let (ii, jj) = (live.iter().position(|&v| v == i).unwrap(), live.iter().position(|&v| v == j).unwrap());
        let weights: Vec<ExactScalar> =
            (0..=e).map(|p| if (e - p) % 2 == 0 { binom(e, p) } else { -&binom(e, p) }).collect();
        let mut next: HashMap<Vec<u32>, ExactScalar> = HashMap::with_capacity(terms.len() * (e as usize + 1));
        for (k, c) in &terms {
            for p in 0..=e {
                let mut key = k.clone();
                key[ii] += p;
                key[jj] += e - p;
                let v = c * &weights[p as usize];
                next.entry(key).and_modify(|x| *x = &*x + &v).or_insert(v);
            }
        }
        terms = next;
        while let Some(pos) = live.iter().position(|&v| !mentions(&remaining, v)) {
            live.remove(pos);
            let mut next: HashMap<Vec<u32>, ExactScalar> = HashMap::with_capacity(terms.len());
            for (mut k, c) in terms {
                let p = k.remove(pos) as usize;
                if a[p].is_zero() || c.is_zero() {
                    continue;
                }
                let v = &c * &a[p];
                next.entry(k).and_modify(|x| *x = &*x + &v).or_insert(v);
            }
            terms = next;
        }
    }
    let value = terms.remove(&Vec::new()).unwrap_or_default();
    Ok(if scheme.negated { -&value } else { value })
}

pub mod schemes {
    pub const SEXTIC_I2: &str = "[1,2]^6";
    pub const SEXTIC_I4: &str = "[1,2]^4[1,3]^2[2,4]^2[3,4]^4";
    pub const SEXTIC_I6: &str = "[1,2]^4[1,6]^2[2,3]^2[3,4]^4[4,5]^2[5,6]^4";
    pub const SEXTIC_I10: &str =
        "[1,2]^2[1,3]^2[1,10]^2[2,3]^4[4,5]^2[4,6]^2[4,10]^2[5,6]^4[7,8]^2[7,9]^2[7,10]^2[8,9]^4";
    /// As printed; letters 4 and 5 reach total exponent 4 only.
    pub const SEXTIC_I15_PRINTED: &str = "[1,2]^2[1,3]^2[1,4][2,3]^4[4,5]^2[4,9][5,6]^2[6,7]^2[6,8]^2[7,8]^4[9,1]\
                                          [9,10]^4[10,11]^2[11,12]^4[12,13]^2[13,14]^2[13,15]^2[14,15]^4";
    pub const SEXTIC_I15: &str = "[1,2]^2[1,3]^2[1,4][2,3]^4[4,5]^4[4,9][5,6]^2[6,7]^2[6,8]^2[7,8]^4[9,1]\
                                  [9,10]^4[10,11]^2[11,12]^4[12,13]^2[13,14]^2[13,15]^2[14,15]^4";
    pub const OCTAVIC_I2: &str = "[1,2]^8";
    pub const OCTAVIC_I3: &str = "[1,2]^4[1,3]^4[2,3]^4";
    pub const OCTAVIC_I4: &str = "[1,2]^4[1,3]^4[2,4]^4[3,4]^4";
    pub const OCTAVIC_I5: &str = "[1,2]^4[2,3]^4[3,4]^4[4,5]^4[1,5]^4";
}

fn eval_scheme(text: &str, q: &BinaryForm) -> ExactScalar {
    bracket_eval(&BracketScheme::parse(text).expect("built-in scheme"), q).expect("degree checked by caller")
}

/// Named tuple of absolute invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantFingerprint {
    pub family: Family,
    pub values: Vec<ExactScalar>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Quartic,
    Quintic,
    Sextic,
    Octavic,
    TernaryCubic,
}

impl Family {
    pub fn names(self) -> &'static [&'static str] {
        match self {
            Family::Quartic => &["J"],
            Family::Quintic => &["J", "K", "L"],
            Family::Sextic | Family::Octavic => &["M", "N", "P", "R", "S", "T", "U", "V"],
            Family::TernaryCubic => &["J"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Quartic => "quartic",
            Family::Quintic => "quintic",
            Family::Sextic => "sextic",
            Family::Octavic => "octavic",
            Family::TernaryCubic => "ternary-cubic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticInvariants {
    pub i2: ExactScalar,
    pub i3: ExactScalar,
    pub delta: ExactScalar,
}

impl QuarticInvariants {
    /// `I2 = a0a4 − 4a1a3 + 3a2²`, `I3` the Hankel determinant.
    pub fn new(q: &BinaryForm) -> Result<Self, InvariantError> {
        expect_degree(q, 4)?;
        let a = q.coeffs();
        let i2 = &(&(&a[0] * &a[4]) - &(&int(4) * &(&a[1] * &a[3]))) + &(&int(3) * &(&a[2] * &a[2]));
        let i3 = crate::linalg::determinant(&vec![
            vec![a[4].clone(), a[3].clone(), a[2].clone()],
            vec![a[3].clone(), a[2].clone(), a[1].clone()],
            vec![a[2].clone(), a[1].clone(), a[0].clone()],
        ]);
        let delta = &i2.pow(3) - &(&int(27) * &i3.pow(2));
        Ok(Self { i2, i3, delta })
    }

    pub fn j(&self) -> Result<ExactScalar, InvariantError> {
        ratio(&self.i2.pow(3), &self.delta, "Delta")
    }

    pub fn k(&self) -> Result<ExactScalar, InvariantError> {
        ratio(&self.i2.pow(3), &(&int(27) * &self.i3.pow(2)), "I3")
    }

    pub fn fingerprint(&self) -> Result<InvariantFingerprint, InvariantError> {
        Ok(InvariantFingerprint { family: Family::Quartic, values: vec![self.j()?] })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryCubicInvariants {
    pub i4: ExactScalar,
    pub i6: ExactScalar,
    pub delta: ExactScalar,
}

impl TernaryCubicInvariants {
    /// Coefficients `(a, b, c, d)` of `a z1³ + b z2³ + c z3³ + 6d z1z2z3`.
    pub fn shape(q: &MultiPoly) -> Result<[ExactScalar; 4], InvariantError> {
        if q.nvars() != 3 || q.homogeneous_degree() != Some(3) {
            return Err(InvariantError::WrongShape);
        }
        let allowed = [[3, 0, 0], [0, 3, 0], [0, 0, 3], [1, 1, 1]].map(|e| Monomial::new(&e));
        if q.terms().any(|(m, _)| !allowed.contains(m)) {
            return Err(InvariantError::WrongShape);
        }
        let [a, b, c, e] = allowed.map(|m| q.coefficient(&m));
        Ok([a, b, c, &e / &int(6)])
    }

    pub fn new(q: &MultiPoly) -> Result<Self, InvariantError> {
        let [a, b, c, d] = Self::shape(q)?;
        let abc = &(&a * &b) * &c;
        let i4 = &(&abc * &d) - &d.pow(4);
        let i6 = &(&abc.pow(2) - &(&int(20) * &(&abc * &d.pow(3)))) - &(&int(8) * &d.pow(6));
        let delta = &i6.pow(2) + &(&int(64) * &i4.pow(3));
        Ok(Self { i4, i6, delta })
    }

    pub fn j(&self) -> Result<ExactScalar, InvariantError> {
        ratio(&self.i4.pow(3), &self.delta, "Delta")
    }

    /// `1/(4096 J) = Δ/(4096 I4³)`.
    pub fn k(&self) -> Result<ExactScalar, InvariantError> {
        ratio(&self.delta, &(&int(4096) * &self.i4.pow(3)), "I4")
    }

    pub fn fingerprint(&self) -> Result<InvariantFingerprint, InvariantError> {
        Ok(InvariantFingerprint { family: Family::TernaryCubic, values: vec![self.j()?] })
    }
}

/// The canonizant, a binary cubic.
pub fn canonizant(q: &BinaryForm) -> Result<BinaryForm, InvariantError> {
    expect_degree(q, 5)?;
    let a = q.coeffs();
    // entry (r, c) is a_{5−r−c} z1 + a_{4−r−c} z2, as a pair of coefficients
    let entry = |r: usize, c: usize| (a[5 - r - c].clone(), a[4 - r - c].clone());
    let lin = |(x, y): (ExactScalar, ExactScalar)| BinaryForm::from_monomial_coeffs(&[y, x]);
    let m: Vec<Vec<BinaryForm>> = (0..3).map(|r| (0..3).map(|c| lin(entry(r, c))).collect()).collect();
    let term = |i: usize, j: usize, k: usize| form_product(&form_product(&m[0][i], &m[1][j]), &m[2][k]);
    let perms = [((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), ((0, 2, 1), -1), ((1, 0, 2), -1), ((2, 1, 0), -1)];
    let mut acc = vec![ExactScalar::zero(); 4];
    for ((i, j, k), s) in perms {
        for (slot, c) in term(i, j, k).monomial_coeffs().into_iter().enumerate() {
            acc[slot] = &acc[slot] + &(&c * &int(s));
        }
    }
    Ok(BinaryForm::from_monomial_coeffs(&acc))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuinticInvariants {
    /// `(Q², Q²)^(10)`.
    pub t10: ExactScalar,
    pub delta: ExactScalar,
    pub i4: ExactScalar,
    pub i8: ExactScalar,
    pub i12: ExactScalar,
}

impl QuinticInvariants {
    pub fn new(q: &BinaryForm) -> Result<Self, InvariantError> {
        expect_degree(q, 5)?;
        let t10 = transvectant_self(&form_product(q, q));
        let delta = if q.is_zero() { ExactScalar::zero() } else { binary::discriminant(q)? };
        let i4 = &t10 / &(&int(7_200_000) * &factorial(10));
        let i8 = &(&i4.pow(2) - &delta) / &int(128);
        let can = canonizant(q)?;
        let can_delta = if can.is_zero() { ExactScalar::zero() } else { binary::discriminant(&can)? };
        let i12 = &int(-27) * &can_delta;
        Ok(Self { t10, delta, i4, i8, i12 })
    }

    pub fn j(&self) -> Result<ExactScalar, InvariantError> {
        ratio(&self.t10.pow(2), &self.delta, "Delta")
    }

    pub fn k(&self) -> Result<ExactScalar, InvariantError> {
        ratio(&self.i12.pow(2), &self.delta.pow(3), "Delta")
    }

    pub fn l(&self) -> Result<ExactScalar, InvariantError> {
        ratio(&(&self.t10 * &self.i12), &self.delta.pow(2), "Delta")
    }

    pub fn fingerprint(&self) -> Result<InvariantFingerprint, InvariantError> {
        Ok(InvariantFingerprint { family: Family::Quintic, values: vec![self.j()?, self.k()?, self.l()?] })
    }

    /// Right-hand side of the degree-18 syzygy divided by 16.
    pub fn i18_squared(&self) -> ExactScalar {
        let (i4, i8, i12) = (&self.i4, &self.i8, &self.i12);
        let terms = [
            (1, &(i4 * &i8.pow(4))),
            (8, &(&i8.pow(3) * i12)),
            (-2, &(&(&i4.pow(2) * &i8.pow(2)) * i12)),
            (-72, &(&(i4 * i8) * &i12.pow(2))),
            (-432, &i12.pow(3)),
            (1, &(&i4.pow(3) * &i12.pow(2))),
        ];
        let sum = terms.iter().fold(ExactScalar::zero(), |acc, (c, t)| &acc + &(&int(*c) * *t));
        &sum / &int(16)
    }
}

/// The degree-18 syzygy's right side is a rational square.
pub fn i18_square_check(q: &BinaryForm) -> Result<bool, InvariantError> {
    Ok(QuinticInvariants::new(q)?.i18_squared().rational_sqrt().is_some())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SexticInvariants {
    pub i2: ExactScalar,
    pub i4: ExactScalar,
    pub i6: ExactScalar,
    pub delta: ExactScalar,
    i10: Option<ExactScalar>,
}

impl SexticInvariants {
    /// `I2, I4, I6` and `Δ`; the bracket `I10` is evaluated on demand.
    pub fn new(q: &BinaryForm) -> Result<Self, InvariantError> {
        expect_degree(q, 6)?;
        Ok(Self {
            i2: eval_scheme(schemes::SEXTIC_I2, q),
            i4: eval_scheme(schemes::SEXTIC_I4, q),
            i6: eval_scheme(schemes::SEXTIC_I6, q),
            delta: if q.is_zero() { ExactScalar::zero() } else { binary::discriminant(q)? },
            i10: None,
        })
    }

    pub fn with_i10(q: &BinaryForm) -> Result<Self, InvariantError> {
        let mut s = Self::new(q)?;
        s.i10 = Some(eval_scheme(schemes::SEXTIC_I10, q));
        Ok(s)
    }

    pub fn i10(&self) -> Option<&ExactScalar> {
        self.i10.as_ref()
    }

    fn i10_or_err(&self) -> &ExactScalar {
        self.i10.as_ref().expect("constructed with with_i10")
    }

    fn h(&self) -> ExactScalar {
        &self.i2.pow(2) - &(&int(2) * &self.i4)
    }

    pub fn j(&self) -> Result<ExactScalar, InvariantError> {
        ratio(&(&ExactScalar::ratio(3, 5) * &self.i2.pow(2)), &self.h(), "I2^2-2I4")
    }

    /// Requires [`SexticInvariants::with_i10`].
    pub fn k(&self) -> Result<ExactScalar, InvariantError> {
        ratio(&(&int(759_375) * &self.i10_or_err().pow(2)), &self.h().pow(5), "I2^2-2I4")
    }

    /// Requires [`SexticInvariants::with_i10`].
    pub fn l(&self) -> Result<ExactScalar, InvariantError> {
        ratio(&(&(&int(675) * &self.i2) * self.i10_or_err()), &self.h().pow(3), "I2^2-2I4")
    }

    /// `M, N, P, R, S, T, U, V`.
    pub fn eight(&self) -> Result<Vec<ExactScalar>, InvariantError> {
        let (i2, i4, i6, d) = (&self.i2, &self.i4, &self.i6, &self.delta);
        if d.is_zero() {
            return Err(InvariantError::DivisionByVanishingInvariant("Delta"));
        }
        let d2 = d.pow(2);
        let d3 = d.pow(3);
        Ok(vec![
            &i2.pow(5) / d,
            &i4.pow(5) / &d2,
            &i6.pow(5) / &d3,
            &(i2 * &i4.pow(2)) / d,
            &(&i2.pow(3) * i4) / d,
            &(i4 * i6) / d,
            &(&i2.pow(2) * i6) / d,
            &(i2 * &i6.pow(3)) / &d2,
        ])
    }

    pub fn fingerprint(&self) -> Result<InvariantFingerprint, InvariantError> {
        Ok(InvariantFingerprint { family: Family::Sextic, values: self.eight()? })
    }
}

/// The degree-15 bracket invariant. Slow; not used elsewhere.
#[cfg(feature = "i15")]
pub fn sextic_i15(q: &BinaryForm) -> Result<ExactScalar, InvariantError> {
    expect_degree(q, 6)?;
    Ok(eval_scheme(schemes::SEXTIC_I15, q))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctavicInvariants {
    pub i2: ExactScalar,
    pub i3: ExactScalar,
    pub i4: ExactScalar,
    pub i5: ExactScalar,
}

impl OctavicInvariants {
    pub fn new(q: &BinaryForm) -> Result<Self, InvariantError> {
        expect_degree(q, 8)?;
        Ok(Self {
            i2: eval_scheme(schemes::OCTAVIC_I2, q),
            i3: eval_scheme(schemes::OCTAVIC_I3, q),
            i4: eval_scheme(schemes::OCTAVIC_I4, q),
            i5: eval_scheme(schemes::OCTAVIC_I5, q),
        })
    }

    pub fn i4_hat(&self) -> ExactScalar {
        &(&int(2) * &self.i4) - &self.i2.pow(2)
    }

    pub fn i8(&self) -> ExactScalar {
        let (i2, i3, i4, i5) = (&self.i2, &self.i3, &self.i4, &self.i5);
        let parts = [
            &int(297) * &i2.pow(4),
            &int(-1188) * &(&i2.pow(2) * i4),
            &int(1188) * &i4.pow(2),
            &int(1536) * &(i3 * i5),
            &int(-1280) * &(i2 * &i3.pow(2)),
        ];
        parts.iter().fold(ExactScalar::zero(), |acc, t| &acc + t)
    }

    pub fn i10(&self) -> ExactScalar {
        let (i2, i3, i5) = (&self.i2, &self.i3, &self.i5);
        let parts = [
            &int(-60) * &(&(i2 * i3) * i5),
            &int(36) * &i5.pow(2),
            &int(25) * &(&i2.pow(2) * &i3.pow(2)),
        ];
        parts.iter().fold(ExactScalar::zero(), |acc, t| &acc + t)
    }

    pub fn i12(&self) -> ExactScalar {
        let h = self.i4_hat();
        let parts = [&int(-512) * &(&self.i2 * &self.i10()), &int(-8) * &(&h * &self.i8()), &int(27) * &h.pow(3)];
        parts.iter().fold(ExactScalar::zero(), |acc, t| &acc + t)
    }

    /// `M, N, P, R, S, T, U, V`.
    pub fn eight(&self) -> Result<Vec<ExactScalar>, InvariantError> {
        let i10 = self.i10();
        if i10.is_zero() {
            return Err(InvariantError::DivisionByVanishingInvariant("I10"));
        }
        let (h, i8, i12) = (self.i4_hat(), self.i8(), self.i12());
        let p2 = |a: u32| big("2").pow(a);
        let p3 = |a: u32| int(3).pow(a);
        let p5 = |a: u32| int(5).pow(a);
        let c = |sign: i64, num: ExactScalar, den: ExactScalar| &(&int(sign) * &num) / &den;
        let d2 = i10.pow(2);
        let d4 = i10.pow(4);
        let d6 = i10.pow(6);
        Ok(vec![
            &(&c(-1, p3(8), &p2(11) * &p5(1)) * &h.pow(5)) / &d2,
            &(&c(1, p3(1), &p2(22) * &p5(12)) * &i8.pow(5)) / &d4,
            &(&c(1, p3(4), &p2(33) * &p5(18)) * &i12.pow(5)) / &d6,
            &(&c(-1, p3(2), &p2(11) * &p5(5)) * &(&h * &i8.pow(2))) / &d2,
            &(&c(-1, p3(5), &p2(11) * &p5(3)) * &(&h.pow(3) * &i8)) / &d2,
            &(&c(1, p3(1), &p2(11) * &p5(6)) * &(&i8 * &i12)) / &d2,
            &(&c(1, p3(4), &p2(11) * &p5(4)) * &(&h.pow(2) * &i12)) / &d2,
            &(&c(-1, p3(4), &p2(22) * &p5(11)) * &(&h * &i12.pow(3))) / &d4,
        ])
    }

    pub fn fingerprint(&self) -> Result<InvariantFingerprint, InvariantError> {
        Ok(InvariantFingerprint { family: Family::Octavic, values: self.eight()? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_form;

    fn form(s: &str) -> BinaryForm {
        BinaryForm::from_form(&parse_form(s, None).unwrap()).unwrap()
    }

    fn r(n: i64, d: i64) -> ExactScalar {
        ExactScalar::ratio(n, d)
    }

    #[test]
    fn transvectants() {
        let fst = form("z1^5 + z2^5");
        assert_eq!(transvectant_self(&form_product(&fst, &fst)), &(&int(57600) * &factorial(10)) * &int(125));
        let ft = form("z1^4z2 + z1^3z2^2 + z2^5");
        assert_eq!(transvectant_self(&form_product(&ft, &ft)), &int(-172800) * &factorial(10));
        assert!(transvectant_self(&form("z1^5 + 3z1^2z2^3 - z2^5")).is_zero());
    }

    #[test]
    fn sextic_i2_from_brackets() {
        let q = form("z1^6 + z2^6");
        let i2 = eval_scheme(schemes::SEXTIC_I2, &q);
        assert_eq!(i2, int(2));
        assert_eq!(i2, &transvectant_self(&q) / &factorial(6).pow(2));
        assert!(eval_scheme(schemes::OCTAVIC_I2, &form("z2^8")).is_zero());
    }

    #[test]
    fn scheme_validation() {
        assert!(BracketScheme::parse("[1,2]^4[1,3]^2").is_err());
        assert!(BracketScheme::parse("[1,1]^2").is_err());
        assert!(BracketScheme::parse(schemes::SEXTIC_I15_PRINTED).is_err());
        let s = BracketScheme::parse(schemes::SEXTIC_I15).unwrap();
        assert_eq!((s.letters(), s.degree()), (15, 6));
    }

    #[test]
    fn quartic_examples() {
        let q0 = QuarticInvariants::new(&form("z1^4 + z2^4")).unwrap();
        assert_eq!((q0.i2.clone(), q0.i3.clone(), q0.delta.clone()), (int(1), int(0), int(1)));
        assert_eq!(q0.j().unwrap(), int(1));
        let assoc = QuarticInvariants::new(&form("-12z1^2z2^2")).unwrap();
        assert_eq!((assoc.i2.clone(), assoc.i3.clone()), (int(12), int(8)));
        assert_eq!(assoc.k().unwrap(), int(1));
        let deg = QuarticInvariants::new(&form("z1^4")).unwrap();
        assert_eq!(deg.j(), Err(InvariantError::DivisionByVanishingInvariant("Delta")));
    }

    #[test]
    fn quartic_delta_matches_resultant_discriminant() {
        for s in ["z1^4 + 3z1^2z2^2 + z2^4", "2z1^4 - z1^3z2 + 5z1z2^3 + 7z2^4", "z1^3z2 + z2^4"] {
            let q = form(s);
            assert_eq!(QuarticInvariants::new(&q).unwrap().delta, binary::discriminant(&q).unwrap(), "{s}");
        }
    }

    #[test]
    fn ternary_cubic_examples() {
        let c6 = parse_form("z1^3 + z2^3 + z3^3 + 6z1z2z3", None).unwrap();
        assert_eq!(TernaryCubicInvariants::new(&c6).unwrap().j().unwrap(), int(0));
        let fermat = parse_form("z1^3 + z2^3 + z3^3", None).unwrap();
        let inv = TernaryCubicInvariants::new(&fermat).unwrap();
        assert_eq!(inv.j().unwrap(), int(0));
        assert!(inv.k().is_err());
        let bad = parse_form("z1^3 + z1^2z2 + z3^3", None).unwrap();
        assert_eq!(TernaryCubicInvariants::new(&bad), Err(InvariantError::WrongShape));
    }

    #[test]
    fn ternary_cubic_family_closed_form() {
        for t in [1i64, 2, 12, -1] {
            let ct = parse_form(&format!("z1^3 + z2^3 + z3^3 + {t}z1z2z3"), None).unwrap();
            let tt = int(t);
            let t3 = tt.pow(3);
            let expected = &(&-&t3 * &(&t3 - &int(216)).pow(3)) / &(&int(110592) * &(&t3 + &int(27)).pow(3));
            let j = TernaryCubicInvariants::new(&ct).unwrap().j().unwrap();
            assert_eq!(j, expected, "t={t}");
            let bold = parse_form(&format!("{t}(z1^3 + z2^3 + z3^3) - 18z1z2z3"), None).unwrap();
            assert_eq!(TernaryCubicInvariants::new(&bold).unwrap().k().unwrap(), j, "t={t}");
        }
    }

    #[test]
    fn quintic_i12_family() {
        for t in [1i64, 2, -3] {
            let q = form(&format!("z1^4z2 + {t}z1^3z2^2 + z2^5"));
            let inv = QuinticInvariants::new(&q).unwrap();
            let tt = int(t);
            let num = &(&(&int(421875) * &tt.pow(10)) - &(&int(17_500_000) * &tt.pow(6))) + &(&int(300_000_000) * &tt.pow(2));
            let expected = -&(&num / &(&int(15625) * &int(10).pow(10)));
            assert_eq!(inv.i12, expected, "t={t}");
            let j = &(&int(5) * &(&int(4_320_000) * &factorial(10)).pow(2)) * &tt.pow(4);
            assert_eq!(inv.j().unwrap(), &j / &(&int(256) - &(&int(27) * &tt.pow(4))));
        }
    }

    #[test]
    fn phi_family_has_vanishing_k_and_l() {
        let j: Vec<ExactScalar> = [1, 2]
            .iter()
            .map(|t| {
                let inv = QuinticInvariants::new(&form(&format!("z1^5 + {t}z1^4z2 + z2^5"))).unwrap();
                assert!(inv.k().unwrap().is_zero() && inv.l().unwrap().is_zero());
                inv.j().unwrap()
            })
            .collect();
        assert_ne!(j[0], j[1]);
    }

    #[test]
    fn i18_examples() {
        assert!(i18_square_check(&form("z1^5 + z2^5")).unwrap());
        assert!(i18_square_check(&form("z1^4z2 + z1^3z2^2 + z2^5")).unwrap());
    }

    #[test]
    fn sextic_vii_table() {
        let q = form("184z1^6 - 192z1^5z2 - 300z1^4z2^2 - 320z1^3z2^3 - 150z1^2z2^4 - 48z1z2^5 + 23z2^6");
        let got = SexticInvariants::new(&q).unwrap().eight().unwrap();
        let expected = vec![
            r(-7, 324),
            r(3125, 36006768),
            r(-343, 34012224),
            r(-25, 2268),
            r(-5, 324),
            r(-5, 324),
            r(-7, 324),
            r(49, 104976),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn sextic_v_invariants_vanish() {
        let q = form("z1(z1^5 + z2^5)");
        assert!(SexticInvariants::new(&q).unwrap().eight().unwrap().iter().all(|v| v.is_zero()));
        let oct = OctavicInvariants::new(&form("28z1^5z2^3 - 3z2^8")).unwrap();
        assert!(oct.eight().unwrap().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn bracket_i10_is_not_a_multiple_of_delta() {
        let samples = [[2, 18, 0, 10, 0, 0, -1], [1, 2, 3, -1, 5, 7, -2], [3, 0, 1, 0, 4, 1, 1], [1, -1, 0, 2, 0, 3, 5]];
        let ratios: Vec<ExactScalar> = samples
            .iter()
            .map(|c| {
                let inv = SexticInvariants::with_i10(&BinaryForm::from_integers(c)).unwrap();
                inv.i10().unwrap() / &inv.delta
            })
            .collect();
        assert_eq!(ratios[0], r(16, 1911));
        assert!(ratios[1..].iter().any(|x| *x != ratios[0]));
        let fermat = SexticInvariants::with_i10(&form("z1^6 + z2^6")).unwrap();
        assert!(fermat.i10().unwrap().is_zero() && fermat.delta == int(1));
    }

    #[test]
    fn octavic_i2_matches_transvectant() {
        let q = form("z1^8 - 3z1^5z2^3 + 2z1z2^7 + 5z2^8");
        let inv = OctavicInvariants::new(&q).unwrap();
        assert_eq!(inv.i2, &transvectant_self(&q) / &factorial(8).pow(2));
        assert!(OctavicInvariants::new(&BinaryForm::from_integers(&[0; 9])).unwrap().i2.is_zero());
    }
}
