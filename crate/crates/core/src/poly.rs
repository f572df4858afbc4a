//! Sparse multivariate polynomials over [`ExactScalar`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::SmallVec;
use thiserror::Error;

use crate::linalg::{self, Matrix};
use crate::scalar::{ExactScalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable lists differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("matrix is {rows}x{cols} but the polynomial has {vars} variables")]
    MatrixShape { rows: usize, cols: usize, vars: usize },
    #[error("singular change of variables")]
    SingularMatrix,
    #[error("expected a form in {expected} variables, got {got}")]
    VariableCount { expected: usize, got: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("zero form")]
    ZeroForm,
}

/// Monomial orders. `Lex` compares exponent vectors left to right, so the
/// first variable is the largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Lex,
    GrLex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrLex => a.degree.cmp(&b.degree).then_with(|| a.exps.cmp(&b.exps)),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 6]>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Self { exps: SmallVec::from_slice(exps), degree: exps.iter().sum() }
    }

    pub fn one(nvars: usize) -> Self {
        Self { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: SmallVec<[u32; 6]> = other.exps.iter().zip(self.exps.iter()).map(|(b, a)| b - a).collect();
        Some(Monomial { degree: other.degree - self.degree, exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u32; 6]> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        Monomial { degree: exps.iter().sum(), exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Appends `extra` zero exponents.
    pub fn extended(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat_n(0, extra));
        Monomial { exps, degree: self.degree }
    }

    /// Exponents restricted to the first `k` variables.
    pub fn truncated(&self, k: usize) -> Monomial {
        Monomial::new(&self.exps[..k])
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        let exps: SmallVec<[u32; 6]> = self.exps.iter().zip(rhs.exps.iter()).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + rhs.degree }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

pub type Vars = Arc<[String]>;

pub fn vars(names: &[&str]) -> Vars {
    names.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
}

/// Sparse polynomial keyed by exponent vectors. Never stores zero
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    order: MonomialOrder,
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl MultiPoly {
    pub fn zero(vars: Vars) -> Self {
        Self { vars, order: MonomialOrder::Lex, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vars, c: ExactScalar) -> Self {
        let mut p = Self::zero(vars);
        let n = p.nvars();
        p.add_term(Monomial::one(n), c);
        p
    }

    pub fn var(vars: Vars, i: usize) -> Self {
        let n = vars.len();
        let mut p = Self::zero(vars);
        p.add_term(Monomial::var(n, i), ExactScalar::one());
        p
    }

    pub fn monomial(vars: Vars, m: Monomial, c: ExactScalar) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(vars: Vars, terms: impl IntoIterator<Item = (Monomial, ExactScalar)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, ExactScalar)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> ExactScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: ExactScalar) {
        debug_assert_eq!(m.nvars(), self.nvars());
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &ExactScalar)> {
        match self.order {
            MonomialOrder::Lex => self.terms.iter().next_back(),
            MonomialOrder::GrLex => self.terms.iter().max_by(|a, b| self.order.cmp(a.0, b.0)),
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.leading_term().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    pub fn homogeneous_part(&self, degree: u32) -> MultiPoly {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == degree).map(|(m, c)| (m.clone(), c.clone()));
        MultiPoly { vars: self.vars.clone(), order: self.order, terms: terms.collect() }
    }

    pub fn scale(&self, c: &ExactScalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone()).with_order(self.order);
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        MultiPoly { vars: self.vars.clone(), order: self.order, terms }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &ExactScalar) -> MultiPoly {
        let terms = self.terms.iter().map(|(k, v)| (k * m, v * c)).collect();
        MultiPoly { vars: self.vars.clone(), order: self.order, terms }
    }

    fn check_compatible(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VariableMismatch(self.vars.to_vec(), other.vars.to_vec()));
        }
        let radicand = |p: &MultiPoly| p.terms.values().find_map(|c| c.radicand());
        if let (Some(a), Some(b)) = (radicand(self), radicand(other)) {
            if a != b {
                return Err(ScalarError::ExtensionMismatch(a, b).into());
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_compatible(other)?;
        let mut out = MultiPoly::zero(self.vars.clone()).with_order(self.order);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1 * m2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(self.vars.clone(), ExactScalar::one()).with_order(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars.clone()).with_order(self.order);
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] -= 1;
            out.add_term(Monomial::new(&exps), c * &ExactScalar::from_integer(e as i64));
        }
        out
    }

    pub fn evaluate(&self, point: &[ExactScalar]) -> ExactScalar {
        assert_eq!(point.len(), self.nvars());
        let mut acc = ExactScalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitutes polynomials (all over a common variable list) for each
    /// variable.
    pub fn compose(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars());
        let target = images[0].vars.clone();
        let mut out = MultiPoly::zero(target.clone()).with_order(self.order);
        let mut power_cache: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![MultiPoly::constant(target.clone(), ExactScalar::one()), p.clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target.clone(), c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                while power_cache[i].len() <= e as usize {
                    let next = power_cache[i].last().unwrap() * &images[i];
                    power_cache[i].push(next);
                }
                if e > 0 {
                    t = &t * &power_cache[i][e as usize];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Appends new trailing variables, keeping the existing exponents.
    pub fn extend_vars(&self, extra: &[&str]) -> MultiPoly {
        let mut names = self.vars.to_vec();
        names.extend(extra.iter().map(|s| s.to_string()));
        let terms = self.terms.iter().map(|(m, c)| (m.extended(extra.len()), c.clone())).collect();
        MultiPoly { vars: names.into(), order: self.order, terms }
    }

    /// Renames variables; the count must match.
    pub fn rename_vars(&self, names: Vars) -> MultiPoly {
        assert_eq!(names.len(), self.nvars());
        MultiPoly { vars: names, order: self.order, terms: self.terms.clone() }
    }

    /// Substitution `z ↦ M·z`: the result is `p(M z)`.
    pub fn linear_change(&self, matrix: &Matrix) -> Result<MultiPoly, PolyError> {
        let n = self.nvars();
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(PolyError::MatrixShape {
                rows: matrix.len(),
                cols: matrix.first().map_or(0, |r| r.len()),
                vars: n,
            });
        }
        if linalg::determinant(matrix).is_zero() {
            return Err(PolyError::SingularMatrix);
        }
        let images: Vec<MultiPoly> = (0..n)
            .map(|i| {
                let mut p = MultiPoly::zero(self.vars.clone());
                for (j, c) in matrix[i].iter().enumerate() {
                    p.add_term(Monomial::var(n, j), c.clone());
                }
                p
            })
            .collect();
        Ok(self.compose(&images))
    }

    /// Coefficients are all rational.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.is_rational())
    }

    pub fn radicand(&self) -> Option<i64> {
        self.terms.values().find_map(|c| c.radicand())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&ExactScalar::from_integer(-1))
    }
}

fn fmt_monomial(vars: &[String], m: &Monomial) -> String {
    let parts: Vec<String> = m
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{}", vars[i], e) })
        .collect();
    parts.join("*")
}

/// Formats a scalar as a coefficient, writing the surd as `r`.
fn fmt_coefficient(c: &ExactScalar) -> String {
    match c.radicand() {
        None => c.to_string(),
        Some(_) => {
            let p = ExactScalar::from_rational(c.rational_part().clone());
            let q = ExactScalar::from_rational(c.surd_part());
            if p.is_zero() {
                format!("({q}*r)")
            } else {
                format!("({p} + {q}*r)")
            }
        }
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in descending monomial order, in the text grammar accepted by
    /// [`crate::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| self.order.cmp(b.0, a.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let mono = fmt_monomial(&self.vars, m);
            let (neg, abs) = match c.rational_sign() {
                Some(Ordering::Less) => (true, -c),
                _ => (false, c.clone()),
            };
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if mono.is_empty() {
                f.write_str(&fmt_coefficient(&abs))?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", fmt_coefficient(&abs), mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &["z1", "z2"]).unwrap()
    }

    fn int(n: i64) -> ExactScalar {
        ExactScalar::from_integer(n)
    }

    #[test]
    fn difference_of_squares() {
        let a = p("z1 + z2");
        let b = p("z1 - z2");
        assert_eq!(&a * &b, p("z1^2 - z2^2"));
    }

    #[test]
    fn additive_and_multiplicative_identity() {
        let f = parse_poly("z1^5 + s*z1^4*z2", &["z1", "z2", "s"]).unwrap();
        let zero = MultiPoly::zero(f.vars().clone());
        let one = MultiPoly::constant(f.vars().clone(), int(1));
        assert_eq!(&f + &zero, f);
        assert_eq!(&f * &one, f);
    }

    #[test]
    fn mismatched_variables_rejected() {
        let a = p("z1");
        let b = parse_poly("x", &["x", "y"]).unwrap();
        assert!(matches!(a.checked_add(&b), Err(PolyError::VariableMismatch(..))));
    }

    #[test]
    fn mismatched_extensions_rejected() {
        let a = p("z1").scale(&ExactScalar::sqrt_of(7).unwrap());
        let b = p("z2").scale(&ExactScalar::sqrt_of(3).unwrap());
        assert!(matches!(a.checked_mul(&b), Err(PolyError::Scalar(_))));
    }

    #[test]
    fn swap_and_identity_changes() {
        let f = p("z1^4*z2^2");
        let swap = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(f.linear_change(&swap).unwrap(), p("z1^2*z2^4"));
        let id = linalg::identity(2);
        assert_eq!(f.linear_change(&id).unwrap(), f);
    }

    #[test]
    fn diagonal_scaling_of_quartic() {
        let q = parse_poly("z1^4 + t*z1^2*z2^2 + z2^4", &["z1", "z2", "t"]).unwrap();
        let lam = ExactScalar::ratio(3, 2);
        let m = vec![
            vec![lam.clone(), int(0), int(0)],
            vec![int(0), lam.clone(), int(0)],
            vec![int(0), int(0), int(1)],
        ];
        let scaled = q.linear_change(&m).unwrap();
        assert_eq!(scaled, q.scale(&lam.pow(4)));
    }

    #[test]
    fn singular_change_rejected() {
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(p("z1").linear_change(&m), Err(PolyError::SingularMatrix));
    }

    #[test]
    fn homogeneity_detection() {
        assert_eq!(p("z1^3 + z1*z2^2").homogeneous_degree(), Some(3));
        assert_eq!(p("z1^3 + z2").homogeneous_degree(), None);
        assert_eq!(p("0").homogeneous_degree(), None);
    }

    #[test]
    fn grlex_leading_term() {
        let f = p("z1^2 + z2^3").with_order(MonomialOrder::GrLex);
        assert_eq!(f.leading_monomial().unwrap(), &Monomial::new(&[0, 3]));
        let g = p("z1^2 + z2^3");
        assert_eq!(g.leading_monomial().unwrap(), &Monomial::new(&[2, 0]));
    }
}
