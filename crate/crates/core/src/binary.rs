//! Binary forms in the binomial convention
//! `Q = Σ C(n,i)·a_i·z1^i·z2^(n−i)`, resultants and discriminants.

use num_bigint::BigInt;
use num_integer::binomial;

use crate::linalg::{self, Matrix};
use crate::poly::{Monomial, MultiPoly, PolyError, Vars};
use crate::scalar::ExactScalar;

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Univariate(pub Vec<ExactScalar>);

impl Univariate {
    pub fn new(mut c: Vec<ExactScalar>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Self(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * &ExactScalar::from_integer(i as i64)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.0.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                Self(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = d.0[dd].inv().expect("nonzero leading coefficient");
        let mut r = self.0.clone();
        let mut q = vec![ExactScalar::zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let c = &r[k] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    let t = &c * dc;
                    r[k - dd + j] = &r[k - dd + j] - &t;
                }
                q[k - dd] = c;
            }
            r.pop();
        }
        (Self::new(q), Self::new(r))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        Self::new(
            (0..len)
                .map(|k| {
                    let x = self.0.get(k).cloned().unwrap_or_default();
                    let y = other.0.get(k).cloned().unwrap_or_default();
                    &x - &y
                })
                .collect(),
        )
    }

    /// Yun's square-free decomposition: `[(factor, multiplicity)]` with
    /// non-constant, pairwise coprime, square-free factors.
    pub fn square_free_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            d = d.div_rem(&a).0.sub(&b.derivative());
            i += 1;
        }
        out
    }
}

/// Sylvester resultant of `p` and `q` taken with formal degrees `n` and `k`
/// (coefficients lowest degree first, padded with zeros as needed).
pub(crate) fn sylvester_resultant(p: &[ExactScalar], n: usize, q: &[ExactScalar], k: usize) -> ExactScalar {
    let size = n + k;
    if size == 0 {
        return ExactScalar::one();
    }
    let coeff = |v: &[ExactScalar], i: usize| v.get(i).cloned().unwrap_or_default();
    let mut m: Matrix = vec![vec![ExactScalar::zero(); size]; size];
    for r in 0..k {
        for j in 0..=n {
            m[r][r + j] = coeff(p, n - j);
        }
    }
    for r in 0..n {
        for j in 0..=k {
            m[k + r][r + j] = coeff(q, k - j);
        }
    }
    linalg::determinant(&m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<ExactScalar>,
}

fn binom(n: usize, k: usize) -> ExactScalar {
    ExactScalar::from_bigint(binomial(BigInt::from(n), BigInt::from(k)))
}

impl BinaryForm {
    /// From the paper-convention coefficients `a_0..a_n`.
    pub fn new(coeffs: Vec<ExactScalar>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        Self { coeffs }
    }

    /// From plain monomial coefficients `c_i` of `z1^i z2^(n−i)`.
    pub fn from_monomial_coeffs(c: &[ExactScalar]) -> Self {
        let n = c.len() - 1;
        Self::new(c.iter().enumerate().map(|(i, v)| v * &binom(n, i).inv().expect("nonzero")).collect())
    }

    pub fn from_integers(c: &[i64]) -> Self {
        Self::from_monomial_coeffs(&c.iter().map(|&v| ExactScalar::from_integer(v)).collect::<Vec<_>>())
    }

    /// Requires a homogeneous form (or zero) in two variables.
    pub fn from_poly(p: &MultiPoly, degree: u32) -> Result<Self, PolyError> {
        if p.nvars() != 2 {
            return Err(PolyError::VariableCount { expected: 2, got: p.nvars() });
        }
        if !p.is_zero() && p.homogeneous_degree() != Some(degree) {
            return Err(PolyError::NotHomogeneous);
        }
        let n = degree as usize;
        let c: Vec<ExactScalar> = (0..=n).map(|i| p.coefficient(&Monomial::new(&[i as u32, (n - i) as u32]))).collect();
        Ok(Self::from_monomial_coeffs(&c))
    }

    pub fn from_form(p: &MultiPoly) -> Result<Self, PolyError> {
        let d = p.homogeneous_degree().ok_or(if p.is_zero() { PolyError::ZeroForm } else { PolyError::NotHomogeneous })?;
        Self::from_poly(p, d)
    }

    pub fn to_poly(&self, vars: Vars) -> MultiPoly {
        let n = self.degree();
        MultiPoly::from_terms(
            vars,
            self.monomial_coeffs().into_iter().enumerate().map(|(i, c)| (Monomial::new(&[i as u32, (n - i) as u32]), c)),
        )
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Paper-convention coefficients `a_0..a_n`.
    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    /// Plain coefficients of `z1^i z2^(n−i)`.
    pub fn monomial_coeffs(&self) -> Vec<ExactScalar> {
        let n = self.degree();
        self.coeffs.iter().enumerate().map(|(i, a)| a * &binom(n, i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Value at `(z1, z2) = (x, y)`.
    pub fn evaluate(&self, x: &ExactScalar, y: &ExactScalar) -> ExactScalar {
        let n = self.degree();
        self.monomial_coeffs()
            .iter()
            .enumerate()
            .fold(ExactScalar::zero(), |acc, (i, c)| &acc + &(&(c * &x.pow(i as u32)) * &y.pow((n - i) as u32)))
    }

    /// `Q(z1, z2 + k·z1)`.
    pub fn shear(&self, k: i64) -> BinaryForm {
        let n = self.degree();
        let c = self.monomial_coeffs();
        let kk = ExactScalar::from_integer(k);
        let mut out = vec![ExactScalar::zero(); n + 1];
        // z1^i (z2 + k z1)^(n-i) = Σ_j C(n-i, j) k^j z1^(i+j) z2^(n-i-j)
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                let t = &(ci * &binom(n - i, j)) * &kk.pow(j as u32);
                out[i + j] = &out[i + j] + &t;
            }
        }
        BinaryForm::from_monomial_coeffs(&out)
    }

    fn dehomogenized(&self) -> Univariate {
        Univariate::new(self.monomial_coeffs())
    }

    /// `∂Q/∂z1`, a form of degree `n − 1`.
    pub fn d_z1(&self) -> BinaryForm {
        let c = self.monomial_coeffs();
        let d: Vec<ExactScalar> = c.iter().enumerate().skip(1).map(|(i, v)| v * &ExactScalar::from_integer(i as i64)).collect();
        BinaryForm::from_monomial_coeffs(&d)
    }

    /// Applies `z ↦ M z` to the form.
    pub fn linear_change(&self, m: &Matrix) -> Result<BinaryForm, PolyError> {
        let v = crate::poly::vars(&["z1", "z2"]);
        let p = self.to_poly(v).linear_change(m)?;
        BinaryForm::from_poly(&p, self.degree() as u32)
    }
}

/// Resultant of two binary forms via the Sylvester determinant of their
/// `z2 = 1` dehomogenizations with formal degrees.
pub fn resultant(p: &BinaryForm, q: &BinaryForm) -> ExactScalar {
    sylvester_resultant(&p.monomial_coeffs(), p.degree(), &q.monomial_coeffs(), q.degree())
}

/// `R(Q, ∂Q/∂z1) / (n^n a_n)`, shearing first when `a_n = 0`.
pub fn discriminant(q: &BinaryForm) -> Result<ExactScalar, PolyError> {
    if q.is_zero() {
        return Err(PolyError::ZeroForm);
    }
    let n = q.degree();
    assert!(n >= 2, "discriminant needs degree at least 2");
    let mut form = q.clone();
    let mut k = 0;
    while form.coeffs[n].is_zero() {
        k += 1;
        form = q.shear(k);
    }
    let r = resultant(&form, &form.d_z1());
    let denom = &ExactScalar::from_integer(n as i64).pow(n as u32) * &form.coeffs[n];
    Ok(&r / &denom)
}

/// Root multiplicities, largest first, counting the root at infinity.
pub fn multiplicity_pattern(q: &BinaryForm) -> Result<Vec<usize>, PolyError> {
    if q.is_zero() {
        return Err(PolyError::ZeroForm);
    }
    let u = q.dehomogenized();
    let mut out: Vec<usize> = Vec::new();
    let at_infinity = q.degree() - u.degree().unwrap_or(0);
    if at_infinity > 0 {
        out.push(at_infinity);
    }
    for (factor, mult) in u.square_free_decomposition() {
        out.extend(std::iter::repeat_n(mult, factor.degree().unwrap_or(0)));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

pub fn is_square_free(q: &BinaryForm) -> bool {
    if q.is_zero() || q.degree() < 2 {
        return !q.is_zero();
    }
    let by_disc = !discriminant(q).map(|d| d.is_zero()).unwrap_or(true);
    debug_assert_eq!(by_disc, multiplicity_pattern(q).map(|p| p.iter().all(|&m| m == 1)).unwrap_or(false));
    by_disc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_form;

    fn form(s: &str) -> BinaryForm {
        BinaryForm::from_form(&parse_form(s, None).unwrap()).unwrap()
    }

    #[test]
    #[allow(clippy::erasing_op, clippy::identity_op)]
    fn resultant_sign_by_hand() {
        // det [[1,0,-1],[2,0,0],[0,2,0]] expanded along the first row
        let oracle = ExactScalar::from_integer(1 * (0 * 0 - 0 * 2) - 0 + (-1) * (2 * 2 - 0 * 0));
        assert_eq!(resultant(&form("z1^2 - z2^2"), &BinaryForm::from_integers(&[0, 2])), oracle);
        assert_eq!(oracle, ExactScalar::from_integer(-4));
    }

    #[test]
    fn resultant_with_itself_vanishes() {
        let p = form("z1^3 - 2z1z2^2 + 5z2^3");
        assert!(resultant(&p, &p).is_zero());
    }

    #[test]
    fn quintic_discriminants() {
        assert_eq!(discriminant(&form("z1^5 + z2^5")).unwrap(), ExactScalar::one());
        assert_eq!(discriminant(&form("z1^4z2 + z2^5")).unwrap(), ExactScalar::ratio(256, 3125));
        assert!(discriminant(&form("z1^4z2^2")).unwrap().is_zero());
    }

    #[test]
    fn binomial_convention_round_trip() {
        let p = parse_form("z1^6 + 18z1^5z2 - 3z1^2z2^4 + z2^6", None).unwrap();
        let b = BinaryForm::from_form(&p).unwrap();
        assert_eq!(b.coeffs()[5], ExactScalar::from_integer(3));
        assert_eq!(b.coeffs()[2], ExactScalar::ratio(-1, 5));
        assert_eq!(b.to_poly(p.vars().clone()), p);
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity_pattern(&form("z1^4z2^2")).unwrap(), vec![4, 2]);
        assert_eq!(multiplicity_pattern(&form("z1^5z2")).unwrap(), vec![5, 1]);
        assert_eq!(multiplicity_pattern(&form("z1^6 + z2^6")).unwrap(), vec![1; 6]);
        assert_eq!(multiplicity_pattern(&form("z1^4(z1^2+z2^2)")).unwrap(), vec![4, 1, 1]);
        assert_eq!(multiplicity_pattern(&form("z1^3z2^3")).unwrap(), vec![3, 3]);
        assert_eq!(multiplicity_pattern(&form("(z1-z2)^2(z1+z2)^3 z2")).unwrap(), vec![3, 2, 1]);
    }

    #[test]
    fn square_freeness() {
        assert!(is_square_free(&form("z1(z1^5 + z2^5)")));
        assert!(!is_square_free(&form("z1^3z2^3")));
        assert!(!is_square_free(&BinaryForm::from_integers(&[0, 0, 0])));
    }
}
