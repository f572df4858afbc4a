//! Canonical forms of binary sextics: Sylvester's generic form and the seven
//! exceptional sextics, told apart by root multiplicities and absolute
//! invariants.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::binary::{self, BinaryForm};
use crate::invariants::{InvariantError, SexticInvariants};
use crate::linalg::{self, Matrix};
use crate::numeric::{Complex, Fixed};
use crate::poly::PolyError;
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SexticError {
    #[error("expected a binary sextic, got degree {0}")]
    WrongDegree(usize),
    #[error("the zero form has no class")]
    ZeroForm,
    #[error("characteristic polynomial of Q-hat disagrees with the invariant formula")]
    CharPolyMismatch,
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SexticLabel {
    SylvesterGeneric,
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

impl fmt::Display for SexticLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SexticLabel::SylvesterGeneric => "SylvesterGeneric",
            SexticLabel::I => "(i)",
            SexticLabel::II => "(ii)",
            SexticLabel::III => "(iii)",
            SexticLabel::IV => "(iv)",
            SexticLabel::V => "(v)",
            SexticLabel::VI => "(vi)",
            SexticLabel::VII => "(vii)",
        })
    }
}

/// The seven sextics outside Sylvester's canonical form.
pub const EXCEPTIONAL: [(SexticLabel, &str); 7] = [
    (SexticLabel::I, "z1^4z2^2"),
    (SexticLabel::II, "z1^4(z1^2 + z2^2)"),
    (SexticLabel::III, "z1^3z2^3"),
    (SexticLabel::IV, "z1^5z2"),
    (SexticLabel::V, "z1(z1^5 + z2^5)"),
    (SexticLabel::VI, "2z1^6 + 18z1^5z2 + 10z1^3z2^3 - z2^6"),
    (SexticLabel::VII, "184z1^6 - 192z1^5z2 - 300z1^4z2^2 - 320z1^3z2^3 - 150z1^2z2^4 - 48z1z2^5 + 23z2^6"),
];

/// `(M, …, V)` of sextic (vi), regenerated by a unit test.
const VI_FINGERPRINT: [(i64, i64); 8] =
    [(9, 637), (1, 1217307), (-1, 1245699), (1, 637), (3, 637), (-1, 273), (-1, 91), (-1, 10647)];

/// `(M, …, V)` of sextic (vii).
const VII_FINGERPRINT: [(i64, i64); 8] =
    [(-7, 324), (3125, 36006768), (-343, 34012224), (-25, 2268), (-5, 324), (-5, 324), (-7, 324), (49, 104976)];

fn fingerprint_of(table: &[(i64, i64); 8]) -> Vec<ExactScalar> {
    table.iter().map(|&(n, d)| ExactScalar::ratio(n, d)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// Root multiplicities, for `Δ = 0`.
    Pattern(Vec<usize>),
    /// `(M, …, V)`, for `Δ ≠ 0`.
    Fingerprint(Vec<ExactScalar>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SexticClass {
    pub label: SexticLabel,
    pub evidence: Evidence,
}

fn expect_sextic(q: &BinaryForm) -> Result<(), SexticError> {
    match q.degree() {
        6 => Ok(()),
        n => Err(SexticError::WrongDegree(n)),
    }
}

pub fn classify(q: &BinaryForm) -> Result<SexticClass, SexticError> {
    expect_sextic(q)?;
    if q.is_zero() {
        return Err(SexticError::ZeroForm);
    }
    if binary::discriminant(q)?.is_zero() {
        let pattern = binary::multiplicity_pattern(q)?;
        let label = match pattern.as_slice() {
            [4, 2] => SexticLabel::I,
            [4, 1, 1] => SexticLabel::II,
            [3, 3] => SexticLabel::III,
            [5, 1] => SexticLabel::IV,
            _ => SexticLabel::SylvesterGeneric,
        };
        return Ok(SexticClass { label, evidence: Evidence::Pattern(pattern) });
    }
    let values = SexticInvariants::new(q)?.eight()?;
    let label = if values.iter().all(ExactScalar::is_zero) {
        SexticLabel::V
    } else if values == fingerprint_of(&VI_FINGERPRINT) {
        SexticLabel::VI
    } else if values == fingerprint_of(&VII_FINGERPRINT) {
        SexticLabel::VII
    } else {
        SexticLabel::SylvesterGeneric
    };
    Ok(SexticClass { label, evidence: Evidence::Fingerprint(values) })
}

/// `Q̂` on cubics, in the basis `z1³, z1²z2, z1z2², z2³`. Row `k` holds the
/// image of the `k`-th basis cubic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QhatMatrix {
    m: Matrix,
}

pub fn qhat(q: &BinaryForm) -> Result<QhatMatrix, SexticError> {
    expect_sextic(q)?;
    let a = q.coeffs();
    let s = |c: i64, i: usize| &ExactScalar::from_integer(c) * &a[i];
    let m = vec![
        vec![s(-1, 3), s(-3, 2), s(-3, 1), s(-1, 0)],
        vec![s(1, 4), s(3, 3), s(3, 2), s(1, 1)],
        vec![s(-1, 5), s(-3, 4), s(-3, 3), s(-1, 2)],
        vec![s(1, 6), s(3, 5), s(3, 4), s(1, 3)],
    ];
    let out = QhatMatrix { m };
    let inv = SexticInvariants::new(q)?;
    let expected = [
        ExactScalar::one(),
        ExactScalar::zero(),
        &inv.i2 / &ExactScalar::from_integer(2),
        ExactScalar::zero(),
        -&(&(&(&ExactScalar::from_integer(6) * &inv.i4) - &(&ExactScalar::from_integer(3) * &inv.i2.pow(2)))
            / &ExactScalar::from_integer(16)),
    ];
    if out.charpoly() != expected {
        return Err(SexticError::CharPolyMismatch);
    }
    Ok(out)
}

/// Plain coefficients of `z1³, z1²z2, z1z2², z2³` as a cubic form.
pub fn cubic_from_vector(v: &[ExactScalar]) -> BinaryForm {
    let mut c = v.to_vec();
    c.reverse();
    BinaryForm::from_monomial_coeffs(&c)
}

impl QhatMatrix {
    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    /// Coefficients of `det(λ − M)` from `λ⁴` down to `λ⁰`.
    pub fn charpoly(&self) -> [ExactScalar; 5] {
        let n = 4;
        let mut c = vec![ExactScalar::zero(); n + 1];
        c[n] = ExactScalar::one();
        let mut mk = vec![vec![ExactScalar::zero(); n]; n];
        for k in 1..=n {
            let am = linalg::mat_mul(&self.m, &mk);
            for (i, row) in mk.iter_mut().enumerate() {
                row.clone_from(&am[i]);
                row[i] = &row[i] + &c[n - k + 1];
            }
            let amk = linalg::mat_mul(&self.m, &mk);
            let trace = (0..n).fold(ExactScalar::zero(), |acc, i| &acc + &amk[i][i]);
            c[n - k] = -&(&trace / &ExactScalar::from_integer(k as i64));
        }
        let mut out: [ExactScalar; 5] = Default::default();
        for (i, v) in c.into_iter().rev().enumerate() {
            out[i] = v;
        }
        out
    }

    /// `Q̂(Q')` for a cubic coefficient vector.
    pub fn apply(&self, v: &[ExactScalar]) -> Vec<ExactScalar> {
        (0..4).map(|j| (0..4).fold(ExactScalar::zero(), |acc, k| &acc + &(&v[k] * &self.m[k][j]))).collect()
    }

    fn shifted_transpose(&self, lambda: &ExactScalar) -> Matrix {
        (0..4)
            .map(|i| (0..4).map(|j| if i == j { &self.m[j][i] - lambda } else { self.m[j][i].clone() }).collect())
            .collect()
    }
}

/// One root of the characteristic polynomial with its eigencubics.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenBranch {
    pub eigenvalue: String,
    pub exact: Option<ExactScalar>,
    /// Basis of the eigenspace, coefficients of `z1³, z1²z2, z1z2², z2³`.
    pub cubics: Vec<Vec<String>>,
    pub square_free: bool,
}

/// Coefficient combinations `Σ k^i v_i`: if some member of the span is
/// square-free, one of these is.
fn generic_members<T: Clone>(basis: &[Vec<T>], mut lin: impl FnMut(&T, i64) -> T, add: impl Fn(&T, &T) -> T) -> Vec<Vec<T>> {
    if basis.len() <= 1 {
        return basis.to_vec();
    }
    let samples = 8 * (basis.len() as i64 - 1) + 1;
    (1..=samples)
        .map(|k| {
            let mut acc: Vec<T> = basis[0].clone();
            for (i, v) in basis.iter().enumerate().skip(1) {
                let w = k.pow(i as u32);
                acc = acc.iter().zip(v).map(|(a, b)| add(a, &lin(b, w))).collect();
            }
            acc
        })
        .collect()
}

/// Eigenvalues and eigencubics of `Q̂`. Exact when every eigenvalue is
/// rational; otherwise computed with `precision` decimal digits, and a
/// cubic scaled to unit largest coefficient counts as non-square-free when
/// its discriminant is below `10^-(precision/2)`.
pub fn eigencubics_numeric(q: &BinaryForm, precision: u32) -> Result<Vec<EigenBranch>, SexticError> {
    let precision = precision.max(30);
    eigencubics_with_tolerance(q, precision, precision / 2)
}

/// As [`eigencubics_numeric`], with the square-free threshold
/// `10^-tolerance_digits` given explicitly.
pub fn eigencubics_with_tolerance(
    q: &BinaryForm,
    precision: u32,
    tolerance_digits: u32,
) -> Result<Vec<EigenBranch>, SexticError> {
    let precision = precision.max(30);
    let qh = qhat(q)?;
    let cp = qh.charpoly();
    let (p, c) = (&cp[2], &cp[4]);
    let two = ExactScalar::from_integer(2);
    let disc = &p.pow(2) - &(&ExactScalar::from_integer(4) * c);
    let exact = disc.rational_sqrt().and_then(|s| {
        let mus = [&(&-p + &s) / &two, &(&-p - &s) / &two];
        let roots: Option<Vec<ExactScalar>> = mus.iter().map(|m| m.rational_sqrt()).collect();
        roots.map(|r| vec![r[0].clone(), -&r[0], r[1].clone(), -&r[1]])
    });
    if let Some(lambdas) = exact {
        return Ok(lambdas.into_iter().map(|l| exact_branch(&qh, l)).collect());
    }
    let f = Fixed::new(precision + 20);
    let two = f.from_scalar(&two);
    let (pn, dn) = (f.from_scalar(p), f.from_scalar(&disc));
    let s = f.sqrt(&dn);
    let mut branches = Vec::new();
    for mu in [f.div(&f.sub(&s, &pn), &two), f.div(&f.neg(&f.add(&pn, &s)), &two)] {
        let r = f.sqrt(&mu);
        for lambda in [r.clone(), f.neg(&r)] {
            branches.push(numeric_branch(&qh, &f, &lambda, precision, tolerance_digits));
        }
    }
    Ok(branches)
}

fn exact_branch(qh: &QhatMatrix, lambda: ExactScalar) -> EigenBranch {
    let kernel = linalg::nullspace(&qh.shifted_transpose(&lambda), 4);
    let members = generic_members(&kernel, |x, k| x * &ExactScalar::from_integer(k), |a, b| a + b);
    let square_free = members.iter().any(|v| binary::is_square_free(&cubic_from_vector(v)));
    EigenBranch {
        eigenvalue: lambda.to_string(),
        exact: Some(lambda),
        cubics: kernel.iter().map(|v| v.iter().map(ExactScalar::to_string).collect()).collect(),
        square_free,
    }
}

fn numeric_branch(qh: &QhatMatrix, f: &Fixed, lambda: &Complex, precision: u32, tolerance_digits: u32) -> EigenBranch {
    let mut a: Vec<Vec<Complex>> =
        (0..4).map(|i| (0..4).map(|j| f.from_scalar(&qh.m[j][i])).collect()).collect();
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = f.sub(&row[i], lambda);
    }
    let kernel = numeric_kernel(f, a, precision);
    let cmul = |x: &Complex, k: i64| f.mul(x, &f.from_scalar(&ExactScalar::from_integer(k)));
    let members = generic_members(&kernel, cmul, |x, y| f.add(x, y));
    let threshold = f.epsilon(tolerance_digits);
    let square_free = members.iter().any(|v| f.abs(&cubic_discriminant(f, v)) >= threshold);
    EigenBranch {
        eigenvalue: f.format(lambda, 20),
        exact: None,
        cubics: kernel.iter().map(|v| v.iter().map(|x| f.format(x, 20)).collect()).collect(),
        square_free,
    }
}

/// Null space by elimination; pivots below `10^-(precision/2)` times the
/// largest entry count as zero.
fn numeric_kernel(f: &Fixed, mut a: Vec<Vec<Complex>>, precision: u32) -> Vec<Vec<Complex>> {
    let n = 4;
    let largest = a.iter().flatten().map(|x| f.abs(x)).max().unwrap_or_default();
    let tol: BigInt = (&largest * f.epsilon(precision / 2)) / f.epsilon(0);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let best = (row..n).max_by_key(|&r| f.abs(&a[r][col]));
        let Some(best) = best else { break };
        if f.abs(&a[best][col]) <= tol {
            continue;
        }
        a.swap(row, best);
        let piv = a[row][col].clone();
        for x in a[row].iter_mut() {
            *x = f.div(x, &piv);
        }
        for r in 0..n {
            if r != row {
                let factor = a[r][col].clone();
                let sub: Vec<Complex> = a[row].iter().map(|x| f.mul(x, &factor)).collect();
                for (x, s) in a[r].iter_mut().zip(&sub) {
                    *x = f.sub(x, s);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let one = f.from_scalar(&ExactScalar::one());
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![f.zero(); n];
            v[free] = one.clone();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&a[r][free]);
            }
            v
        })
        .collect()
}

fn cubic_discriminant(f: &Fixed, v: &[Complex]) -> Complex {
    let big = v.iter().max_by_key(|x| f.abs(x)).expect("four coefficients").clone();
    let w: Vec<Complex> = v.iter().map(|x| f.div(x, &big)).collect();
    let (a, b, c, d) = (&w[0], &w[1], &w[2], &w[3]);
    let m = |xs: &[&Complex]| xs[1..].iter().fold(xs[0].clone(), |acc, x| f.mul(&acc, x));
    let k = |n: i64, x: Complex| f.mul(&f.from_scalar(&ExactScalar::from_integer(n)), &x);
    let terms = [
        m(&[b, b, c, c]),
        k(-4, m(&[a, c, c, c])),
        k(-4, m(&[b, b, b, d])),
        k(-27, m(&[a, a, d, d])),
        k(18, m(&[a, b, c, d])),
    ];
    terms.iter().fold(f.zero(), |acc, t| f.add(&acc, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_form;

    fn form(s: &str) -> BinaryForm {
        BinaryForm::from_form(&parse_form(s, None).unwrap()).unwrap()
    }

    #[test]
    fn seven_sextics_get_their_labels() {
        for (label, s) in EXCEPTIONAL {
            assert_eq!(classify(&form(s)).unwrap().label, label, "{s}");
        }
    }

    #[test]
    fn vi_fingerprint_regenerates() {
        let q = form(EXCEPTIONAL[5].1);
        assert_eq!(SexticInvariants::new(&q).unwrap().eight().unwrap(), fingerprint_of(&VI_FINGERPRINT));
    }

    #[test]
    fn sqrt7_sextic_is_vii() {
        let p = parse_form("z1^6 + 18z1^5z2 + 40(1 - 2r)z1^3z2^3 + 32(115 - 41r)z2^6", Some(7)).unwrap();
        let class = classify(&BinaryForm::from_form(&p).unwrap()).unwrap();
        assert_eq!(class.label, SexticLabel::VII);
    }

    #[test]
    fn degenerate_patterns() {
        let c = classify(&form("z1^2z2^2(z1 + z2)(z1 - z2)")).unwrap();
        assert_eq!(c.label, SexticLabel::SylvesterGeneric);
        assert_eq!(c.evidence, Evidence::Pattern(vec![2, 2, 1, 1]));
        assert_eq!(classify(&BinaryForm::from_integers(&[0; 7])), Err(SexticError::ZeroForm));
        assert_eq!(classify(&form("z1^5")), Err(SexticError::WrongDegree(5)));
    }

    #[test]
    fn qhat_examples() {
        let zero = qhat(&BinaryForm::from_integers(&[0; 7])).unwrap();
        assert!(zero.matrix().iter().flatten().all(ExactScalar::is_zero));
        let f = qhat(&form("z1^6 + z2^6")).unwrap();
        let cp = f.charpoly();
        let expected = [1, 0, 1, 0, 0].map(ExactScalar::from_integer);
        assert_eq!(cp, expected);
        let m = f.matrix();
        assert_eq!((m[0][3].clone(), m[3][0].clone()), (ExactScalar::from_integer(-1), ExactScalar::one()));
    }

    #[test]
    fn eigencubics_of_z1cube_z2cube() {
        let branches = eigencubics_numeric(&form("z1^3z2^3"), 50).unwrap();
        let mut got: Vec<(ExactScalar, Vec<String>)> =
            branches.iter().map(|b| (b.exact.clone().unwrap(), b.cubics[0].clone())).collect();
        got.sort_by(|a, b| a.0.to_f64().partial_cmp(&b.0.to_f64()).unwrap());
        let unit = |k: usize| (0..4).map(|i| if i == k { "1" } else { "0" }.to_string()).collect::<Vec<_>>();
        assert_eq!(got[0], (ExactScalar::ratio(-3, 20), unit(2)));
        assert_eq!(got[1], (ExactScalar::ratio(-1, 20), unit(0)));
        assert_eq!(got[2], (ExactScalar::ratio(1, 20), unit(3)));
        assert_eq!(got[3], (ExactScalar::ratio(3, 20), unit(1)));
        let qh = qhat(&form("z1^3z2^3")).unwrap();
        let e = |k: usize| (0..4).map(|i| ExactScalar::from_integer((i == k) as i64)).collect::<Vec<_>>();
        assert_eq!(qh.apply(&e(1)), e(1).iter().map(|x| x * &ExactScalar::ratio(3, 20)).collect::<Vec<_>>());
    }

    #[test]
    fn eigencubics_of_degenerate_sextics() {
        let b = eigencubics_numeric(&form("z1^4z2^2"), 50).unwrap();
        assert!(b.iter().all(|x| x.exact == Some(ExactScalar::zero()) && x.cubics == vec![vec!["1", "0", "0", "0"]]));
        let b = eigencubics_numeric(&form("z1^5z2"), 50).unwrap();
        assert!(b.iter().all(|x| x.cubics.len() == 2 && !x.square_free));
    }

    #[test]
    fn eigencubics_of_vii_are_not_square_free() {
        let b = eigencubics_numeric(&form(EXCEPTIONAL[6].1), 50).unwrap();
        assert_eq!(b.len(), 4);
        assert!(b.iter().all(|x| !x.cubics.is_empty() && !x.square_free), "{b:?}");
    }

    #[test]
    fn generic_sextic_has_a_square_free_eigencubic() {
        let q = form("z1^6 + 3z1^5z2 - z1^3z2^3 + 2z1z2^5 + 5z2^6");
        assert_eq!(classify(&q).unwrap().label, SexticLabel::SylvesterGeneric);
        let b = eigencubics_numeric(&q, 50).unwrap();
        assert!(b.iter().any(|x| x.square_free));
    }
}
