//! Milnor algebras `O_m / J(Q)` of homogeneous forms.

use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::groebner::{self, GroebnerBasis, GroebnerError, IdealPresentation};
use crate::poly::{Monomial, MonomialOrder, MultiPoly};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MilnorError {
    #[error("form must be homogeneous and nonzero")]
    NotHomogeneous,
    #[error("form degree {0} is below 3")]
    DegreeTooSmall(u32),
    #[error("expected 2 or 3 variables, got {0}")]
    VariableCount(usize),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("graded Gorenstein structure check failed: {0}")]
    NonGorensteinDetected(String),
}

/// Largest dimension for which the product table is cached.
const TABLE_LIMIT: usize = 25;

#[derive(Debug)]
pub struct QuotientAlgebra {
    form: MultiPoly,
    basis: GroebnerBasis,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    nil_index: u32,
    socle: usize,
    table: OnceLock<Vec<Vec<AlgebraElement>>>,
}

/// Coordinates over the standard monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    coeffs: Vec<ExactScalar>,
}

impl AlgebraElement {
    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }
}

pub fn milnor(q: &MultiPoly) -> Result<QuotientAlgebra, MilnorError> {
    milnor_with_order(q, MonomialOrder::Lex)
}

pub fn milnor_with_order(q: &MultiPoly, order: MonomialOrder) -> Result<QuotientAlgebra, MilnorError> {
    let m = q.nvars();
    if !(2..=3).contains(&m) {
        return Err(MilnorError::VariableCount(m));
    }
    let n = q.homogeneous_degree().ok_or(MilnorError::NotHomogeneous)?;
    if n < 3 {
        return Err(MilnorError::DegreeTooSmall(n));
    }
    let basis = groebner::buchberger(&IdealPresentation::jacobian(q, order)?);
    let monomials = groebner::standard_monomials(&basis)?.monomials().to_vec();
    let nil_index = m as u32 * (n - 2);
    let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(MilnorError::NonGorensteinDetected(what.into())) };
    check(basis.elements().iter().all(|g| g.is_homogeneous()), "inhomogeneous basis element")?;
    check(monomials.len() > 2, "dimension at most 2")?;
    let top = monomials.iter().map(|b| b.degree()).max().unwrap_or(0);
    check(top == nil_index, "top degree differs from m(n-2)")?;
    let socles: Vec<usize> = (0..monomials.len()).filter(|&i| monomials[i].degree() == top).collect();
    check(socles.len() == 1, "socle is not one-dimensional")?;
    let index = monomials.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    Ok(QuotientAlgebra {
        form: q.clone(),
        basis,
        monomials,
        index,
        nil_index,
        socle: socles[0],
        table: OnceLock::new(),
    })
}

impl QuotientAlgebra {
    pub fn form(&self) -> &MultiPoly {
        &self.form
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    pub fn nil_index(&self) -> u32 {
        self.nil_index
    }

    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn socle_index(&self) -> usize {
        self.socle
    }

    pub fn socle(&self) -> &Monomial {
        &self.monomials[self.socle]
    }

    pub fn nvars(&self) -> usize {
        self.form.nvars()
    }

    pub fn grading(&self) -> Vec<u32> {
        self.monomials.iter().map(|b| b.degree()).collect()
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut coeffs = vec![ExactScalar::zero(); self.dimension()];
        coeffs[i] = ExactScalar::one();
        AlgebraElement { coeffs }
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis_element(0)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement { coeffs: vec![ExactScalar::zero(); self.dimension()] }
    }

    /// Class of a polynomial in the algebra's variables.
    pub fn class_of(&self, p: &MultiPoly) -> AlgebraElement {
        let nf = groebner::normal_form(p, &self.basis).expect("same variables");
        let mut coeffs = vec![ExactScalar::zero(); self.dimension()];
        for (m, c) in nf.terms() {
            coeffs[self.index[m]] = c.clone();
        }
        AlgebraElement { coeffs }
    }

    pub fn class_of_monomial(&self, m: &Monomial) -> AlgebraElement {
        self.class_of(&MultiPoly::monomial(self.form.vars().clone(), m.clone(), ExactScalar::one()))
    }

    pub fn to_poly(&self, a: &AlgebraElement) -> MultiPoly {
        MultiPoly::from_terms(self.form.vars().clone(), self.monomials.iter().cloned().zip(a.coeffs.iter().cloned()))
    }

    fn product_table(&self) -> Option<&Vec<Vec<AlgebraElement>>> {
        if self.dimension() > TABLE_LIMIT {
            return None;
        }
        Some(self.table.get_or_init(|| {
            let d = self.dimension();
            (0..d)
                .map(|i| (0..d).map(|j| self.class_of_monomial(&(&self.monomials[i] * &self.monomials[j]))).collect())
                .collect()
        }))
    }

    /// Class of `b_i · b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> AlgebraElement {
        match self.product_table() {
            Some(t) => t[i][j].clone(),
            None => self.class_of_monomial(&(&self.monomials[i] * &self.monomials[j])),
        }
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut out = self.zero();
        for (i, x) in a.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.coeffs.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                let p = self.basis_product(i, j);
                for (k, c) in p.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    out.coeffs[k] = &out.coeffs[k] + &(&xy * c);
                }
            }
        }
        out
    }

    /// The socle-coefficient functional ω.
    pub fn omega(&self, a: &AlgebraElement) -> ExactScalar {
        a.coeffs[self.socle].clone()
    }

    /// Spanning set of `m^k`: standard monomials of degree at least `k`.
    pub fn power_of_maximal_ideal(&self, k: u32) -> Vec<AlgebraElement> {
        (0..self.dimension()).filter(|&i| self.monomials[i].degree() >= k).map(|i| self.basis_element(i)).collect()
    }

    /// Each standard monomial of degree `j` pairs with one of degree `ν − j`
    /// to a nonzero socle multiple, and the pairing matrix is nondegenerate.
    pub fn gorenstein_pairing_holds(&self) -> bool {
        let d = self.dimension();
        let mut gram = vec![vec![ExactScalar::zero(); d]; d];
        for i in 0..d {
            for j in 0..d {
                gram[i][j] = self.omega(&self.basis_product(i, j));
            }
        }
        let has_partner = (0..d).all(|i| {
            (0..d).any(|j| self.monomials[i].degree() + self.monomials[j].degree() == self.nil_index && !gram[i][j].is_zero())
        });
        has_partner && !crate::linalg::determinant(&gram).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_form;

    fn alg(s: &str) -> QuotientAlgebra {
        milnor(&parse_form(s, None).unwrap()).unwrap()
    }

    #[test]
    fn fermat_quintic() {
        let a = alg("z1^5 + z2^5");
        assert_eq!((a.dimension(), a.nil_index()), (16, 6));
        assert_eq!(a.socle(), &Monomial::new(&[3, 3]));
        assert_eq!(a.power_of_maximal_ideal(1).len(), 15);
        assert_eq!(a.power_of_maximal_ideal(6).len(), 1);
        assert!(a.power_of_maximal_ideal(7).is_empty());
    }

    #[test]
    fn fermat_cubic() {
        let a = alg("z1^3 + z2^3 + z3^3");
        assert_eq!((a.dimension(), a.nil_index()), (8, 3));
        assert_eq!(a.socle(), &Monomial::new(&[1, 1, 1]));
    }

    #[test]
    fn quartic_family_dimension() {
        for t in ["0", "1", "3", "-5/2"] {
            let a = alg(&format!("z1^4 + {t}*z1^2z2^2 + z2^4"));
            assert_eq!((a.dimension(), a.nil_index()), (9, 4));
        }
    }

    #[test]
    fn products() {
        let a = alg("z1^5 + z2^5");
        let x3 = a.class_of_monomial(&Monomial::new(&[3, 0]));
        let y3 = a.class_of_monomial(&Monomial::new(&[0, 3]));
        let soc = a.basis_element(a.socle_index());
        assert_eq!(a.multiply(&x3, &y3), soc);
        let x = a.class_of_monomial(&Monomial::new(&[1, 0]));
        assert!(a.multiply(&x, &soc).is_zero());
        assert_eq!(a.multiply(&x3, &a.one()), x3);
    }

    #[test]
    fn degenerate_inputs() {
        let f = parse_form("z1^4z2^2", None).unwrap();
        assert_eq!(milnor(&f).unwrap_err(), MilnorError::Groebner(GroebnerError::InfiniteQuotient));
        let g = parse_form("z1^2 + z2^2", None).unwrap();
        assert_eq!(milnor(&g).unwrap_err(), MilnorError::DegreeTooSmall(2));
    }

    #[test]
    fn pairing_on_small_algebras() {
        for s in ["z1^4 + 3z1^2z2^2 + z2^4", "z1^5 + z1^4z2 + z1^3z2^2 + z2^5", "z1^3 + z2^3 + z3^3 + 6z1z2z3"] {
            assert!(alg(s).gorenstein_pairing_holds(), "{s}");
        }
    }
}
