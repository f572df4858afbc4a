//! Buchberger's algorithm over ℚ, normal forms and staircases.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::poly::{Monomial, MonomialOrder, MultiPoly, Vars};
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("empty generator list")]
    NoGenerators,
    #[error("generators must share one variable list")]
    VariableMismatch,
    #[error("coefficients must be rational")]
    NotRational,
    #[error("quotient is infinite dimensional")]
    InfiniteQuotient,
    #[error("polynomial variables must extend the basis variables")]
    ParameterMismatch,
}

#[derive(Debug, Clone)]
pub struct IdealPresentation {
    generators: Vec<MultiPoly>,
    vars: Vars,
    order: MonomialOrder,
}

impl IdealPresentation {
    pub fn new(generators: Vec<MultiPoly>, order: MonomialOrder) -> Result<Self, GroebnerError> {
        let vars = generators.first().ok_or(GroebnerError::NoGenerators)?.vars().clone();
        if generators.iter().any(|g| *g.vars() != vars) {
            return Err(GroebnerError::VariableMismatch);
        }
        if !generators.iter().all(|g| g.is_rational()) {
            return Err(GroebnerError::NotRational);
        }
        let generators = generators.into_iter().map(|g| g.with_order(order)).collect();
        Ok(Self { generators, vars, order })
    }

    /// The Jacobian ideal of `f`.
    pub fn jacobian(f: &MultiPoly, order: MonomialOrder) -> Result<Self, GroebnerError> {
        Self::new((0..f.nvars()).map(|i| f.derivative(i)).collect(), order)
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    basis: Vec<MultiPoly>,
    order: MonomialOrder,
    vars: Vars,
}

/// Sort key under which the map's last entry is the leading term.
type Key = (u32, Monomial);

fn key(order: MonomialOrder, m: &Monomial) -> Key {
    match order {
        MonomialOrder::Lex => (0, m.clone()),
        MonomialOrder::GrLex => (m.degree(), m.clone()),
    }
}

/// Division remainder of `p` by `divisors` (each with its leading monomial
/// and coefficient). Divisors may use a prefix of `p`'s variables.
fn reduce(p: &MultiPoly, divisors: &[(Monomial, ExactScalar, &MultiPoly)], order: MonomialOrder) -> MultiPoly {
    let nv = p.nvars();
    let mut work: BTreeMap<Key, ExactScalar> = p.terms().map(|(m, c)| (key(order, m), c.clone())).collect();
    let mut rem = MultiPoly::zero(p.vars().clone()).with_order(order);
    while let Some(((_, lm), lc)) = work.pop_last() {
        let hit = divisors.iter().find_map(|(dm, dc, g)| {
            let dm = dm.extended(nv - dm.nvars());
            dm.quotient_of(&lm).map(|q| (q, dc, *g))
        });
        match hit {
            None => rem.add_term(lm, lc),
            Some((q, dc, g)) => {
                let factor = &lc / dc;
                let extra = nv - g.nvars();
                for (gm, gc) in g.terms() {
                    let m = &gm.extended(extra) * &q;
                    let k = key(order, &m);
                    if m == lm {
                        continue;
                    }
                    let delta = -&(&factor * gc);
                    match work.get_mut(&k) {
                        Some(v) => {
                            let s = &*v + &delta;
                            if s.is_zero() {
                                work.remove(&k);
                            } else {
                                *v = s;
                            }
                        }
                        None => {
                            work.insert(k, delta);
                        }
                    }
                }
            }
        }
    }
    rem
}

fn monic(p: &MultiPoly) -> MultiPoly {
    match p.leading_term() {
        Some((_, c)) => p.scale(&c.inv().expect("nonzero")),
        None => p.clone(),
    }
}

fn lead(p: &MultiPoly) -> (Monomial, ExactScalar) {
    let (m, c) = p.leading_term().expect("nonzero polynomial");
    (m.clone(), c.clone())
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (fm, fc) = lead(f);
    let (gm, gc) = lead(g);
    let l = fm.lcm(&gm);
    let a = f.mul_monomial(&fm.quotient_of(&l).unwrap(), &gc);
    let b = g.mul_monomial(&gm.quotient_of(&l).unwrap(), &fc);
    &a - &b
}

/// Reduced Gröbner basis. Pairs are taken by lowest lcm degree, ties by
/// pair index; coprime leading terms and the chain criterion skip pairs.
pub fn buchberger(ideal: &IdealPresentation) -> GroebnerBasis {
    let order = ideal.order;
    let mut basis: Vec<MultiPoly> = ideal.generators.iter().filter(|g| !g.is_zero()).map(monic).collect();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while !pending.is_empty() {
        let lms: Vec<Monomial> = basis.iter().map(|g| lead(g).0).collect();
        let &(i, j) = pending
            .iter()
            .min_by_key(|&&(i, j)| (lms[i].lcm(&lms[j]).degree(), i, j))
            .expect("nonempty");
        pending.remove(&(i, j));
        if lms[i].is_coprime(&lms[j]) {
            continue;
        }
        let l = lms[i].lcm(&lms[j]);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let divisors: Vec<_> = basis.iter().map(|g| (lead(g).0, lead(g).1, g)).collect();
        let r = reduce(&s, &divisors, order);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(monic(&r));
            for i in 0..k {
                pending.insert((i, k));
            }
        }
    }
    GroebnerBasis { basis: interreduce(basis, order), order, vars: ideal.vars.clone() }
}

fn interreduce(basis: Vec<MultiPoly>, order: MonomialOrder) -> Vec<MultiPoly> {
    let lms: Vec<Monomial> = basis.iter().map(|g| lead(g).0).collect();
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = lms.iter().enumerate().any(|(j, m)| j != i && m.divides(&lms[i]) && (m != &lms[i] || j < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<MultiPoly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<_> =
                minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| (lead(g).0, lead(g).1, g)).collect();
            let (lm, lc) = lead(&minimal[i]);
            let tail = &minimal[i] - &MultiPoly::monomial(minimal[i].vars().clone(), lm.clone(), lc.clone());
            let tail = reduce(&tail, &others, order);
            let mut g = tail;
            g.add_term(lm, lc);
            monic(&g)
        })
        .collect();
    out.sort_by(|a, b| order.cmp(&lead(a).0, &lead(b).0));
    out
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| lead(g).0).collect()
    }

    /// Every S-polynomial reduces to zero and the basis is reduced.
    pub fn is_reduced_groebner(&self) -> bool {
        let divisors: Vec<_> = self.basis.iter().map(|g| (lead(g).0, lead(g).1, g)).collect();
        let lms = self.leading_monomials();
        for (i, g) in self.basis.iter().enumerate() {
            if !lead(g).1.is_one() {
                return false;
            }
            for (m, _) in g.terms() {
                if lms.iter().enumerate().any(|(k, l)| k != i && l.divides(m)) {
                    return false;
                }
            }
        }
        for j in 0..self.basis.len() {
            for i in 0..j {
                let s = s_polynomial(&self.basis[i], &self.basis[j]);
                if !reduce(&s, &divisors, self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Fully reduced remainder of `p`. `p` may carry extra trailing
/// variables (parameters) after the basis variables; they pass through.
pub fn normal_form(p: &MultiPoly, g: &GroebnerBasis) -> Result<MultiPoly, GroebnerError> {
    let k = g.vars.len();
    if p.nvars() < k || p.vars()[..k] != g.vars[..] {
        return Err(GroebnerError::ParameterMismatch);
    }
    let divisors: Vec<_> = g.basis.iter().map(|b| (lead(b).0, lead(b).1, b)).collect();
    Ok(reduce(&p.clone().with_order(g.order), &divisors, g.order).with_order(p.order()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardMonomialBasis {
    monomials: Vec<Monomial>,
}

impl StandardMonomialBasis {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

/// Monomials outside the leading-term ideal, by degree then order.
pub fn standard_monomials(g: &GroebnerBasis) -> Result<StandardMonomialBasis, GroebnerError> {
    let n = g.vars.len();
    let lms = g.leading_monomials();
    let finite = (0..n).all(|i| lms.iter().any(|m| m.exps()[i] > 0 && m.degree() == m.exps()[i]));
    if !finite {
        return Err(GroebnerError::InfiniteQuotient);
    }
    let is_standard = |m: &Monomial| !lms.iter().any(|l| l.divides(m));
    let mut found: BTreeSet<Monomial> = BTreeSet::new();
    let mut frontier = vec![Monomial::one(n)];
    while let Some(m) = frontier.pop() {
        if !is_standard(&m) || !found.insert(m.clone()) {
            continue;
        }
        for i in 0..n {
            frontier.push(&m * &Monomial::var(n, i));
        }
    }
    let mut monomials: Vec<Monomial> = found.into_iter().collect();
    monomials.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| g.order.cmp(a, b)));
    Ok(StandardMonomialBasis { monomials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn jac(s: &str, v: &[&str]) -> GroebnerBasis {
        let f = parse_poly(s, v).unwrap();
        buchberger(&IdealPresentation::jacobian(&f, MonomialOrder::Lex).unwrap())
    }

    #[test]
    fn coordinate_ideal() {
        let v = ["z1", "z2"];
        let gens = vec![parse_poly("z1", &v).unwrap(), parse_poly("z2", &v).unwrap()];
        let g = buchberger(&IdealPresentation::new(gens.clone(), MonomialOrder::Lex).unwrap());
        assert_eq!(g.elements().len(), 2);
        assert!(g.elements().iter().all(|e| gens.contains(e)));
    }

    #[test]
    fn monomial_jacobian() {
        let g = jac("z1^5 + z2^5", &["z1", "z2"]);
        let v = ["z1", "z2"];
        assert_eq!(g.elements(), &[parse_poly("z2^4", &v).unwrap(), parse_poly("z1^4", &v).unwrap()]);
        let sm = standard_monomials(&g).unwrap();
        assert_eq!(sm.len(), 16);
        assert!(sm.monomials().iter().all(|m| m.exps().iter().all(|&e| e <= 3)));
    }

    #[test]
    fn quintic_family_dimension() {
        let g = jac("z1^5 + z1^4z2 + z1^3z2^2 + z2^5", &["z1", "z2"]);
        assert!(g.is_reduced_groebner());
        assert_eq!(standard_monomials(&g).unwrap().len(), 16);
    }

    #[test]
    fn fermat_cubic_staircase() {
        let g = jac("z1^3 + z2^3 + z3^3", &["z1", "z2", "z3"]);
        let sm = standard_monomials(&g).unwrap();
        // brute force: exponents bounded by the pure powers in the basis
        let brute = (0..27)
            .map(|k| [k % 3, (k / 3) % 3, k / 9])
            .filter(|e| e.iter().all(|&x| x < 2))
            .count();
        assert_eq!(sm.len(), brute);
        assert_eq!(sm.len(), 8);
    }

    #[test]
    fn non_isolated_is_infinite() {
        let g = jac("z1^4z2^2", &["z1", "z2"]);
        assert_eq!(standard_monomials(&g), Err(GroebnerError::InfiniteQuotient));
    }

    #[test]
    fn membership_and_fixed_points() {
        let g = jac("z1^5 + z2^5", &["z1", "z2"]);
        let v = ["z1", "z2"];
        let member = parse_poly("(z1^2 + 3z2) z1^4 - 7 z1 z2^4", &v).unwrap();
        assert!(normal_form(&member, &g).unwrap().is_zero());
        let one = parse_poly("1", &v).unwrap();
        assert_eq!(normal_form(&one, &g).unwrap(), one);
        let s = parse_poly("z1^3z2^3", &v).unwrap();
        assert_eq!(normal_form(&s, &g).unwrap(), s);
    }

    #[test]
    fn lex_and_grlex_staircases_agree() {
        let f = parse_poly("z1^6 + 3z1^4z2^2 - 2z1z2^5 + z2^6 + z1^3z2^3", &["z1", "z2"]).unwrap();
        let a = buchberger(&IdealPresentation::jacobian(&f, MonomialOrder::Lex).unwrap());
        let b = buchberger(&IdealPresentation::jacobian(&f, MonomialOrder::GrLex).unwrap());
        assert!(b.is_reduced_groebner());
        assert_eq!(standard_monomials(&a).unwrap().len(), standard_monomials(&b).unwrap().len());
        assert_eq!(standard_monomials(&a).unwrap().len(), 25);
    }

    #[test]
    fn parameters_pass_through() {
        let g = jac("z1^5 + z2^5", &["z1", "z2"]);
        let p = parse_poly("(w1 z1 + w2 z2)^6", &["z1", "z2", "w1", "w2"]).unwrap();
        let nf = normal_form(&p, &g).unwrap();
        let expected = parse_poly("20 w1^3 w2^3 z1^3 z2^3", &["z1", "z2", "w1", "w2"]).unwrap();
        assert_eq!(nf, expected);
        let bad = parse_poly("w1", &["w1", "z2"]).unwrap();
        assert_eq!(normal_form(&bad, &g), Err(GroebnerError::ParameterMismatch));
    }
}
