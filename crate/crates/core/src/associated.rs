//! Nil-polynomials and associated forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::groebner;
use crate::milnor::{self, MilnorError, QuotientAlgebra};
use crate::poly::{self, Monomial, MultiPoly, Vars};
use crate::scalar::{primitive_integers, ExactScalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssociatedError {
    #[error(transparent)]
    Milnor(#[from] MilnorError),
    #[error("nil-polynomials are computed only up to dimension {limit}, got {dim}")]
    TooLarge { dim: usize, limit: usize },
    #[error("component degree {s} outside 2..={nu}")]
    DegreeOutOfRange { s: u32, nu: u32 },
    #[error("component of degree {s} involves the coordinate of {monomial:?}")]
    DescentViolation { s: u32, monomial: Monomial },
    #[error("functional vanishes on the socle")]
    DegenerateFunctional,
}

pub const NIL_POLYNOMIAL_LIMIT: usize = 16;

/// `w1..wm`.
pub fn w_vars(m: usize) -> Vars {
    (1..=m).map(|i| format!("w{i}")).collect::<Vec<_>>().into()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    Raw,
    PrimitiveInteger,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedForm {
    form: MultiPoly,
    normalization: Normalization,
}

impl AssociatedForm {
    pub fn form(&self) -> &MultiPoly {
        &self.form
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn degree(&self) -> Option<u32> {
        self.form.homogeneous_degree()
    }

    pub fn normalized(&self) -> AssociatedForm {
        AssociatedForm { form: normalize(&self.form), normalization: Normalization::PrimitiveInteger }
    }
}

/// Multi-indices of total degree `d` in `m` parts, lexicographically.
pub(crate) fn compositions(d: u32, m: usize) -> Vec<Vec<u32>> {
    if m == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|a| {
            compositions(d - a, m - 1).into_iter().map(move |mut rest| {
                rest.insert(0, a);
                rest
            })
        })
        .collect()
}

fn multinomial(parts: &[u32]) -> ExactScalar {
    let fact = |n: u32| (1..=n).fold(BigInt::from(1), |acc, k| acc * k);
    let total: u32 = parts.iter().sum();
    let denom = parts.iter().fold(BigInt::from(1), |acc, &p| acc * fact(p));
    ExactScalar::from_bigint(fact(total) / denom)
}

/// `ω((Σ w_j e_j)^ν)` with products taken in the algebra.
pub fn associated_form_exp2_in(a: &QuotientAlgebra) -> AssociatedForm {
    let m = a.nvars();
    let nu = a.nil_index();
    let gens: Vec<_> = (0..m).map(|j| a.class_of_monomial(&Monomial::var(m, j))).collect();
    let mut terms = Vec::new();
    for alpha in compositions(nu, m) {
        let mut e = a.one();
        for (j, &k) in alpha.iter().enumerate() {
            for _ in 0..k {
                e = a.multiply(&e, &gens[j]);
            }
        }
        let c = a.omega(&e);
        if !c.is_zero() {
            terms.push((Monomial::new(&alpha), &multinomial(&alpha) * &c));
        }
    }
    AssociatedForm { form: MultiPoly::from_terms(w_vars(m), terms), normalization: Normalization::Raw }
}

pub fn associated_form_exp2(q: &MultiPoly) -> Result<AssociatedForm, AssociatedError> {
    Ok(associated_form_exp2_in(&milnor::milnor(q)?))
}

/// Normal form of `(w1 z1 + … + wm zm)^ν` with the `w`s as parameters,
/// read off at `zm^ν`, or at the socle monomial when that vanishes.
pub fn associated_form_normalform_in(a: &QuotientAlgebra) -> AssociatedForm {
    let m = a.nvars();
    let nu = a.nil_index();
    let wv = w_vars(m);
    let names: Vec<&str> = wv.iter().map(|s| s.as_str()).collect();
    let ext_vars = a.form().extend_vars(&names).vars().clone();
    let mut lin = MultiPoly::zero(ext_vars.clone());
    for j in 0..m {
        let mut e = vec![0u32; 2 * m];
        e[j] = 1;
        e[m + j] = 1;
        lin.add_term(Monomial::new(&e), ExactScalar::one());
    }
    let nf = groebner::normal_form(&lin.pow(nu), a.groebner_basis()).expect("extended variables");
    let extract = |target: &Monomial| {
        MultiPoly::from_terms(
            wv.clone(),
            nf.terms().filter(|(k, _)| k.truncated(m) == *target).map(|(k, c)| (Monomial::new(&k.exps()[m..]), c.clone())),
        )
    };
    let mut first = vec![0u32; m];
    first[m - 1] = nu;
    let mut form = extract(&Monomial::new(&first));
    if form.is_zero() {
        form = extract(a.socle());
    }
    AssociatedForm { form, normalization: Normalization::Raw }
}

pub fn associated_form_normalform(q: &MultiPoly) -> Result<AssociatedForm, AssociatedError> {
    Ok(associated_form_normalform_in(&milnor::milnor(q)?))
}

/// `c` with `f = c·g`, if any.
pub fn proportional(f: &MultiPoly, g: &MultiPoly) -> Option<ExactScalar> {
    if f.vars() != g.vars() {
        return None;
    }
    let (m, gc) = g.terms().next()?;
    let c = f.coefficient(m).checked_div(gc).ok()?;
    (f.checked_sub(&g.scale(&c)).ok()?.is_zero()).then_some(c)
}

/// Clears denominators, divides by the content and makes the leading
/// coefficient positive. Rational input only; others are returned as is.
pub fn normalize(f: &MultiPoly) -> MultiPoly {
    if !f.is_rational() || f.is_zero() {
        return f.clone();
    }
    let mut terms: Vec<(Monomial, BigRational)> =
        f.terms().map(|(m, c)| (m.clone(), c.as_rational().expect("rational").clone())).collect();
    terms.sort_by(|a, b| f.order().cmp(&b.0, &a.0));
    let values: Vec<BigRational> = terms.iter().map(|(_, c)| c.clone()).collect();
    let ints = primitive_integers(&values);
    MultiPoly::from_terms(
        f.vars().clone(),
        terms.into_iter().zip(ints).map(|((m, _), v)| (m, ExactScalar::from_bigint(v))),
    )
}

#[derive(Debug, Clone)]
pub struct NilPolynomial {
    poly: MultiPoly,
    labels: Vec<Monomial>,
    nil_index: u32,
    nvars: usize,
}

impl NilPolynomial {
    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    /// Standard monomial attached to each coordinate `x_i`.
    pub fn labels(&self) -> &[Monomial] {
        &self.labels
    }

    pub fn nil_index(&self) -> u32 {
        self.nil_index
    }

    /// `P^[s]`, checked to involve only coordinates of degree below
    /// `ν + 2 − s`.
    pub fn homogeneous_component(&self, s: u32) -> Result<MultiPoly, AssociatedError> {
        if s < 2 || s > self.nil_index {
            return Err(AssociatedError::DegreeOutOfRange { s, nu: self.nil_index });
        }
        let part = self.poly.homogeneous_part(s);
        let bound = self.nil_index + 2 - s;
        for (m, _) in part.terms() {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 && self.labels[i].degree() >= bound {
                    return Err(AssociatedError::DescentViolation { s, monomial: self.labels[i].clone() });
                }
            }
        }
        Ok(part)
    }

    /// Sets every coordinate except those of `z1..zm` to zero, renaming
    /// those to `w1..wm`.
    pub fn restrict_to_linear(&self, p: &MultiPoly) -> MultiPoly {
        let m = self.nvars;
        let mut out = MultiPoly::zero(w_vars(m));
        'terms: for (mono, c) in p.terms() {
            let mut e = vec![0u32; m];
            for (i, &k) in mono.exps().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if self.labels[i].degree() != 1 {
                    continue 'terms;
                }
                let j = self.labels[i].exps().iter().position(|&x| x == 1).expect("linear monomial");
                e[j] += k;
            }
            out.add_term(Monomial::new(&e), c.clone());
        }
        out
    }
}

pub fn nil_polynomial(a: &QuotientAlgebra) -> Result<NilPolynomial, AssociatedError> {
    let mut omega = vec![ExactScalar::zero(); a.dimension()];
    omega[a.socle_index()] = ExactScalar::one();
    nil_polynomial_with(a, &omega)
}

/// `Σ_{s=2..ν} ω(u^s)/s!` with `u = Σ x_i b_i` over the non-identity,
/// non-socle standard monomials and `ω` given on the monomial basis.
pub fn nil_polynomial_with(a: &QuotientAlgebra, omega: &[ExactScalar]) -> Result<NilPolynomial, AssociatedError> {
    let dim = a.dimension();
    if dim > NIL_POLYNOMIAL_LIMIT {
        return Err(AssociatedError::TooLarge { dim, limit: NIL_POLYNOMIAL_LIMIT });
    }
    if omega[a.socle_index()].is_zero() {
        return Err(AssociatedError::DegenerateFunctional);
    }
    let coords: Vec<usize> = (1..dim).filter(|&i| i != a.socle_index()).collect();
    let k = coords.len();
    let xv: Vars = (1..=k).map(|i| format!("x{i}")).collect::<Vec<_>>().into();
    let nu = a.nil_index();
    let mut power: Vec<MultiPoly> = vec![MultiPoly::zero(xv.clone()); dim];
    for (slot, &i) in coords.iter().enumerate() {
        power[i] = MultiPoly::var(xv.clone(), slot);
    }
    let eval = |p: &[MultiPoly]| {
        p.iter().zip(omega).fold(MultiPoly::zero(xv.clone()), |acc, (c, w)| if w.is_zero() { acc } else { &acc + &c.scale(w) })
    };
    let mut total = MultiPoly::zero(xv.clone());
    let mut factorial = ExactScalar::one();
    for s in 2..=nu {
        let mut next = vec![MultiPoly::zero(xv.clone()); dim];
        for (b, comp) in power.iter().enumerate() {
            if comp.is_zero() {
                continue;
            }
            for (slot, &i) in coords.iter().enumerate() {
                let prod = a.basis_product(b, i);
                let x = MultiPoly::var(xv.clone(), slot);
                let cx = comp * &x;
                for (t, c) in prod.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        next[t] = &next[t] + &cx.scale(c);
                    }
                }
            }
        }
        power = next;
        factorial = &factorial * &ExactScalar::from_integer(s as i64);
        total = &total + &eval(&power).scale(&factorial.inv().expect("nonzero"));
    }
    Ok(NilPolynomial {
        poly: total,
        labels: coords.iter().map(|&i| a.standard_monomials()[i].clone()).collect(),
        nil_index: nu,
        nvars: a.nvars(),
    })
}

/// Parses a form in `w1..wm`.
pub fn parse_w_form(s: &str, m: usize) -> MultiPoly {
    let wv = w_vars(m);
    crate::parse::parse_poly_in(s, &wv, None).expect("valid form")
}

pub fn z_vars(m: usize) -> Vars {
    let names: Vec<String> = (1..=m).map(|i| format!("z{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    poly::vars(&refs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_form;

    fn q(s: &str) -> MultiPoly {
        parse_form(s, None).unwrap()
    }

    #[test]
    fn quartic_associated_form() {
        for t in [1i64, 3, 5] {
            let f = associated_form_exp2(&q(&format!("z1^4 + {t}z1^2z2^2 + z2^4"))).unwrap();
            let paper = parse_w_form(&format!("{t}w1^4 - 12w1^2w2^2 + {t}w2^4"), 2);
            assert!(proportional(f.form(), &paper).is_some_and(|c| !c.is_zero()), "t={t}");
        }
    }

    #[test]
    fn sextic_v_associated_octavic() {
        let a = milnor::milnor(&q("z1(z1^5 + z2^5)")).unwrap();
        let paper = parse_w_form("28w1^5w2^3 - 3w2^8", 2);
        for f in [associated_form_exp2_in(&a), associated_form_normalform_in(&a)] {
            assert_eq!(f.degree(), Some(8));
            assert!(proportional(f.form(), &paper).is_some());
        }
    }

    #[test]
    fn proportionality() {
        let a = parse_w_form("2w1^2", 2);
        let b = parse_w_form("w1^2", 2);
        assert_eq!(proportional(&a, &b), Some(ExactScalar::from_integer(2)));
        assert_eq!(proportional(&b, &parse_w_form("w2^2", 2)), None);
    }

    #[test]
    fn normalization() {
        let f = parse_w_form("-3/2w1^2 + 9/4w1w2", 2);
        assert_eq!(normalize(&f), parse_w_form("2w1^2 - 3w1w2", 2));
    }

    #[test]
    fn nil_polynomial_of_fermat_quartic() {
        let a = milnor::milnor(&q("z1^4 + z2^4")).unwrap();
        let p = nil_polynomial(&a).unwrap();
        let zero = vec![ExactScalar::zero(); p.poly().nvars()];
        assert!(p.poly().evaluate(&zero).is_zero());
        assert!(p.poly().terms().all(|(m, _)| m.degree() >= 2));
        let top = p.restrict_to_linear(&p.homogeneous_component(4).unwrap());
        assert!(proportional(&top, &parse_w_form("-12w1^2w2^2", 2)).is_some());
    }

    #[test]
    fn quadratic_part_is_nondegenerate_pairing() {
        let a = milnor::milnor(&q("z1^5 + z1^4z2 + z1^3z2^2 + z2^5")).unwrap();
        let p = nil_polynomial(&a).unwrap();
        let p2 = p.homogeneous_component(2).unwrap();
        let k = p2.nvars();
        let mut gram = vec![vec![ExactScalar::zero(); k]; k];
        for (m, c) in p2.terms() {
            let idx: Vec<usize> = (0..k).filter(|&i| m.exps()[i] > 0).collect();
            match idx.as_slice() {
                [i] => gram[*i][*i] = c * &ExactScalar::from_integer(2),
                [i, j] => {
                    gram[*i][*j] = c.clone();
                    gram[*j][*i] = c.clone();
                }
                _ => unreachable!(),
            }
        }
        assert!(!crate::linalg::determinant(&gram).is_zero());
    }

    #[test]
    fn descent_of_top_component() {
        let a = milnor::milnor(&q("z1^5 + z2^5")).unwrap();
        let p = nil_polynomial(&a).unwrap();
        let top = p.homogeneous_component(6).unwrap();
        for (m, _) in top.terms() {
            for (i, &e) in m.exps().iter().enumerate() {
                assert!(e == 0 || p.labels()[i].degree() == 1);
            }
        }
        for s in 2..=6 {
            assert!(p.homogeneous_component(s).is_ok());
        }
        assert!(p.homogeneous_component(7).is_err());
    }

    #[test]
    fn second_functional_gives_same_class() {
        let a = milnor::milnor(&q("z1^5 + 2z1^4z2 - z1^3z2^2 + z2^5")).unwrap();
        let p = nil_polynomial(&a).unwrap();
        let top1 = p.restrict_to_linear(&p.homogeneous_component(6).unwrap());
        assert!(proportional(&top1, associated_form_exp2_in(&a).form()).is_some());
        let degree_five = a.standard_monomials().iter().find(|m| m.degree() == 5).unwrap().clone();
        for extra in [Monomial::new(&[1, 0]), degree_five] {
            let mut omega = vec![ExactScalar::zero(); a.dimension()];
            omega[a.socle_index()] = ExactScalar::one();
            let i = a.standard_monomials().iter().position(|m| *m == extra).unwrap();
            omega[i] = ExactScalar::one();
            let p2 = nil_polynomial_with(&a, &omega).unwrap();
            if extra.degree() > 1 {
                assert_ne!(p.poly(), p2.poly());
            }
            let top2 = p2.restrict_to_linear(&p2.homogeneous_component(6).unwrap());
            assert!(proportional(&top1, &top2).is_some());
        }
    }
}
