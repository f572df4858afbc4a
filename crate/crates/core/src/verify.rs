//! Exact certification of the identities relating invariants of a form to
//! invariants of its associated form, and the equivalence test built on
//! absolute invariants.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::associated::{self, AssociatedError};
use crate::binary::{self, BinaryForm};
use crate::groebner::{self, GroebnerError, IdealPresentation};
use crate::invariants::{
    self, Family, InvariantError, InvariantFingerprint, OctavicInvariants, QuarticInvariants, QuinticInvariants,
    SexticInvariants, TernaryCubicInvariants,
};
use crate::linalg::{self, LinalgError, Matrix};
use crate::milnor::{self, MilnorError};
use crate::parse::{self, ParseError};
use crate::poly::{MonomialOrder, MultiPoly, PolyError};
use crate::scalar::ExactScalar;
use crate::sextic::{self, SexticError, SexticLabel};

pub const DEFAULT_SEED: u64 = 1729;

/// `GERMLAB_SEED` if set and numeric, else `fallback`.
pub fn seed_from_env(fallback: u64) -> u64 {
    std::env::var("GERMLAB_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(fallback)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("degenerate input: discriminant vanishes")]
    DegenerateInput,
    #[error("inconsistent system for the connection constants")]
    InconsistentSystem,
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Associated(#[from] AssociatedError),
    #[error(transparent)]
    Milnor(#[from] MilnorError),
    #[error(transparent)]
    Sextic(#[from] SexticError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

fn int(n: i64) -> ExactScalar {
    ExactScalar::from_integer(n)
}

fn rat(n: i64, d: i64) -> ExactScalar {
    ExactScalar::ratio(n, d)
}

fn fact10() -> ExactScalar {
    int(3_628_800)
}

/// `Σ c · s^i · t^j`.
fn eval2(terms: &[(i64, u32, u32)], s: &ExactScalar, t: &ExactScalar) -> ExactScalar {
    terms.iter().fold(ExactScalar::zero(), |acc, &(c, i, j)| &acc + &(&(&int(c) * &s.pow(i)) * &t.pow(j)))
}

fn eval1(terms: &[(i64, u32)], t: &ExactScalar) -> ExactScalar {
    terms.iter().fold(ExactScalar::zero(), |acc, &(c, j)| &acc + &(&int(c) * &t.pow(j)))
}

/// Named forms and closed-form expressions.
pub mod families {
    use super::*;

    pub fn z2() -> crate::poly::Vars {
        associated::z_vars(2)
    }

    fn binary_from_plain(desc: &[ExactScalar]) -> BinaryForm {
        let mut c = desc.to_vec();
        c.reverse();
        BinaryForm::from_monomial_coeffs(&c)
    }

    pub fn q_t(t: &ExactScalar) -> BinaryForm {
        binary_from_plain(&[int(1), int(0), t.clone(), int(0), int(1)])
    }

    pub fn bold_q_t(t: &ExactScalar) -> BinaryForm {
        binary_from_plain(&[t.clone(), int(0), int(-12), int(0), t.clone()])
    }

    pub fn quartic_j_closed(t: &ExactScalar) -> ExactScalar {
        let t2 = t.pow(2);
        &(&t2 + &int(12)).pow(3) / &(&int(108) * &(&t2 - &int(4)).pow(2))
    }

    pub fn c_t(t: &ExactScalar) -> MultiPoly {
        let v = associated::z_vars(3);
        let m = |e: [u32; 3], c: ExactScalar| (crate::poly::Monomial::new(&e), c);
        MultiPoly::from_terms(v, [m([3, 0, 0], int(1)), m([0, 3, 0], int(1)), m([0, 0, 3], int(1)), m([1, 1, 1], t.clone())])
    }

    pub fn bold_c_t(t: &ExactScalar) -> MultiPoly {
        let v = associated::w_vars(3);
        let m = |e: [u32; 3], c: ExactScalar| (crate::poly::Monomial::new(&e), c);
        MultiPoly::from_terms(v, [m([3, 0, 0], t.clone()), m([0, 3, 0], t.clone()), m([0, 0, 3], t.clone()), m([1, 1, 1], int(-18))])
    }

    pub fn ternary_j_closed(t: &ExactScalar) -> ExactScalar {
        let t3 = t.pow(3);
        &(&-&t3 * &(&t3 - &int(216)).pow(3)) / &(&int(110592) * &(&t3 + &int(27)).pow(3))
    }

    /// `z1⁵ + s z1⁴z2 + t z1³z2² + z2⁵`.
    pub fn f_st(s: &ExactScalar, t: &ExactScalar) -> BinaryForm {
        binary_from_plain(&[int(1), s.clone(), t.clone(), int(0), int(0), int(1)])
    }

    /// `z1⁴z2 + t z1³z2² + z2⁵`.
    pub fn f_t(t: &ExactScalar) -> BinaryForm {
        binary_from_plain(&[int(0), int(1), t.clone(), int(0), int(0), int(1)])
    }

    pub fn phi_t(t: &ExactScalar) -> BinaryForm {
        binary_from_plain(&[int(1), t.clone(), int(0), int(0), int(0), int(1)])
    }

    /// `z1⁵/t + z2⁵/(1−t) + (z1+z2)⁵`.
    pub fn rho_t(t: &ExactScalar) -> BinaryForm {
        let mut c: Vec<ExactScalar> = [1, 5, 10, 10, 5, 1].into_iter().map(int).collect();
        c[0] = &c[0] + &(&int(1) / t);
        c[5] = &c[5] + &(&int(1) / &(&int(1) - t));
        binary_from_plain(&c)
    }

    pub fn bold_f_st(s: &ExactScalar, t: &ExactScalar) -> BinaryForm {
        let rows: [&[(i64, u32, u32)]; 7] = [
            &[(160, 3, 0), (-300, 1, 1), (-27, 0, 4)],
            &[(-1200, 2, 0), (81, 1, 3), (1125, 0, 1)],
            &[(-270, 2, 2), (3750, 1, 0), (675, 0, 3)],
            &[(480, 3, 1), (-1650, 1, 2), (-6250, 0, 0)],
            &[(-480, 4, 0), (2100, 2, 1), (-1125, 0, 2)],
            &[(240, 3, 0), (27, 2, 3), (-825, 1, 1), (-108, 0, 4)],
            &[(-6, 3, 2), (-50, 2, 0), (24, 1, 3), (125, 0, 1)],
        ];
        binary_from_plain(&rows.map(|r| eval2(r, s, t)))
    }

    pub fn bold_f_t(t: &ExactScalar) -> BinaryForm {
        let rows: [&[(i64, u32)]; 7] =
            [&[(27, 4), (-160, 0)], &[(-81, 3)], &[(270, 2)], &[(-480, 1)], &[(480, 0)], &[(-27, 3)], &[(6, 2)]];
        binary_from_plain(&rows.map(|r| eval1(r, t)))
    }

    /// Numerator `D(s,t)` of `Δ(f_{s,t}) = D/3125`.
    pub fn d_st(s: &ExactScalar, t: &ExactScalar) -> ExactScalar {
        eval2(&[(256, 5, 0), (-1600, 3, 1), (-27, 2, 4), (2250, 1, 2), (108, 0, 5), (3125, 0, 0)], s, t)
    }

    /// `125 − 3st²`.
    pub fn n_st(s: &ExactScalar, t: &ExactScalar) -> ExactScalar {
        eval2(&[(125, 0, 0), (-3, 1, 2)], s, t)
    }

    /// `−10^10 · I12(f_{s,t})`.
    pub fn h_st(s: &ExactScalar, t: &ExactScalar) -> ExactScalar {
        eval2(
            &[(19200, 6, 2), (-160000, 4, 3), (-1120, 3, 6), (440000, 2, 4), (3600, 1, 7), (27, 0, 10), (-400000, 0, 5)],
            s,
            t,
        )
    }

    pub fn big_f(s: &ExactScalar, t: &ExactScalar) -> ExactScalar {
        eval2(
            &[
                (163200, 6, 2),
                (14800000, 5, 0),
                (-2100000, 4, 3),
                (5400, 3, 6),
                (-92500000, 3, 1),
                (7425000, 2, 4),
                (-52650, 1, 7),
                (116250000, 1, 2),
                (729, 0, 10),
                (-4556250, 0, 5),
                (312500000, 0, 0),
            ],
            s,
            t,
        )
    }

    /// `421875t¹⁰ − 175·10⁵t⁶ + 3·10⁸t²`.
    pub fn h_t(t: &ExactScalar) -> ExactScalar {
        eval1(&[(421875, 10), (-17_500_000, 6), (300_000_000, 2)], t)
    }

    /// `729t¹⁰ + 5400t⁶ + 163200t²`.
    pub fn g_t(t: &ExactScalar) -> ExactScalar {
        eval1(&[(729, 10), (5400, 6), (163200, 2)], t)
    }

    /// `G` as printed, with constant term `163200`.
    pub fn g_t_printed(t: &ExactScalar) -> ExactScalar {
        eval1(&[(729, 10), (5400, 6), (163200, 0)], t)
    }

    /// `256 − 27t⁴`.
    pub fn e_t(t: &ExactScalar) -> ExactScalar {
        eval1(&[(256, 0), (-27, 4)], t)
    }

    /// `a z1⁶ + b z2⁶ + c(z1+z2)⁶ + d z1z2(−z1−z2)(z1−z2)(z1+2z2)(−2z1−z2)`.
    pub fn sylvester(a: &ExactScalar, b: &ExactScalar, c: &ExactScalar, d: &ExactScalar) -> BinaryForm {
        // d-part expanded: 2z1⁵z2 + 5z1⁴z2² − 5z1²z2⁴ − 2z1z2⁵ (descending z1 powers)
        let dpart = [0, 2, 5, 0, -5, -2, 0];
        let binom6 = [1, 6, 15, 20, 15, 6, 1];
        let desc: Vec<ExactScalar> = (0..7)
            .map(|k| {
                let mut v = &int(binom6[k]) * c;
                if k == 0 {
                    v = &v + a;
                }
                if k == 6 {
                    v = &v + b;
                }
                &v + &(&int(dpart[k]) * d)
            })
            .collect();
        binary_from_plain(&desc)
    }

    pub fn exceptional(label: SexticLabel) -> BinaryForm {
        let text = sextic::EXCEPTIONAL.iter().find(|(l, _)| *l == label).expect("exceptional label").1;
        BinaryForm::from_form(&parse::parse_form(text, None).expect("built-in form")).expect("binary")
    }

    pub fn sqrt7_sextic() -> BinaryForm {
        let p = parse::parse_form("z1^6 + 18z1^5z2 + 40(1 - 2r)z1^3z2^3 + 32(115 - 41r)z2^6", Some(7)).expect("built-in");
        BinaryForm::from_form(&p).expect("binary")
    }
}

/// Seeded random inputs.
pub mod sampling {
    use super::*;

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    pub fn small_rational(rng: &mut ChaCha8Rng) -> ExactScalar {
        rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))
    }

    pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> ExactScalar {
        loop {
            let v = small_rational(rng);
            if !v.is_zero() {
                return v;
            }
        }
    }

    /// Integer binary form of degree `n` with nonzero discriminant.
    pub fn square_free_integer_form(rng: &mut ChaCha8Rng, n: usize) -> BinaryForm {
        loop {
            let c: Vec<i64> = (0..=n).map(|_| rng.gen_range(-9..=9)).collect();
            let q = BinaryForm::from_integers(&c);
            if !q.is_zero() && !binary::discriminant(&q).map(|d| d.is_zero()).unwrap_or(true) {
                return q;
            }
        }
    }

    /// Integer form of degree `n`, possibly degenerate.
    pub fn integer_form(rng: &mut ChaCha8Rng, n: usize) -> BinaryForm {
        let c: Vec<i64> = (0..=n).map(|_| rng.gen_range(-9..=9)).collect();
        BinaryForm::from_integers(&c)
    }

    /// Product of random elementary shears, optionally with a quarter turn.
    pub fn unimodular(rng: &mut ChaCha8Rng) -> Matrix {
        let mut m = linalg::identity(2);
        for _ in 0..3 {
            let k = rng.gen_range(-3..=3);
            let e = if rng.gen_bool(0.5) { [[1, k], [0, 1]] } else { [[1, 0], [k, 1]] };
            m = linalg::mat_mul(&m, &linalg::from_integers(&[&e[0], &e[1]]));
        }
        if rng.gen_bool(0.5) {
            m = linalg::mat_mul(&m, &linalg::from_integers(&[&[0, 1], &[-1, 0]]));
        }
        m
    }

    /// Sylvester-form sextics with random rational `(a,b,c,d)`, square-free,
    /// with `z2⁸ ∉ J(Q)`.
    pub fn sylvester_samples(seed: u64, count: usize) -> Vec<([ExactScalar; 4], BinaryForm)> {
        let mut rng = rng(seed);
        let mut out = Vec::new();
        while out.len() < count {
            let abcd = [(); 4].map(|_| small_rational(&mut rng));
            let q = families::sylvester(&abcd[0], &abcd[1], &abcd[2], &abcd[3]);
            if q.is_zero() || binary::discriminant(&q).map(|d| d.is_zero()).unwrap_or(true) {
                continue;
            }
            if z2_power_in_jacobian(&q, 8) {
                continue;
            }
            out.push((abcd, q));
        }
        out
    }

    fn z2_power_in_jacobian(q: &BinaryForm, k: u32) -> bool {
        let p = q.to_poly(families::z2());
        let g = groebner::buchberger(&IdealPresentation::jacobian(&p, MonomialOrder::Lex).expect("binary"));
        let z2k = MultiPoly::var(families::z2(), 1).pow(k);
        groebner::normal_form(&z2k, &g).map(|r| r.is_zero()).unwrap_or(false)
    }
}

/// Associated form of a binary form, as a binary form in `w1, w2`.
pub fn associated_binary(q: &BinaryForm) -> Result<BinaryForm, VerifyError> {
    let a = associated::associated_form_exp2(&q.to_poly(families::z2()))?;
    Ok(BinaryForm::from_form(a.form())?)
}

/// `a = λ b` for some nonzero `λ`.
pub fn proportional_coeffs(a: &[ExactScalar], b: &[ExactScalar]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(k) = b.iter().position(|x| !x.is_zero()) else { return a.iter().all(ExactScalar::is_zero) };
    if a[k].is_zero() {
        return false;
    }
    let lambda = &a[k] / &b[k];
    a.iter().zip(b).all(|(x, y)| *x == &lambda * y)
}

pub fn proportional_forms(a: &BinaryForm, b: &BinaryForm) -> bool {
    proportional_coeffs(a.coeffs(), b.coeffs())
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Checks a printed formula known to be misprinted; expected to fail.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub defect: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl IdentityReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), checks: Vec::new() }
    }

    /// All checks pass, apart from those of known misprints.
    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass && !c.defect)
    }

    pub fn defects(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.defect)
    }

    /// Every known misprint checked here still fails somewhere.
    pub fn defects_reproduced(&self) -> bool {
        let mut names: Vec<&str> = self.defects().map(|c| defect_family(&c.name)).collect();
        names.sort_unstable();
        names.dedup();
        names.iter().all(|n| self.defects().any(|c| defect_family(&c.name) == *n && !c.pass))
    }

    /// Records a check of a misprinted formula.
    pub fn defect(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(Check { name: name.into(), pass, defect: true, lhs: None, rhs: None });
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(Check { name: name.into(), pass, defect: false, lhs: None, rhs: None });
    }

    pub fn equal(&mut self, name: impl Into<String>, lhs: &ExactScalar, rhs: &ExactScalar) {
        let pass = lhs == rhs;
        let (l, r) = if pass { (None, None) } else { (Some(lhs.to_string()), Some(rhs.to_string())) };
        self.checks.push(Check { name: name.into(), pass, defect: false, lhs: l, rhs: r });
    }

    /// Records an equality whose inputs may have failed to compute.
    pub fn equal_or_err(&mut self, name: impl Into<String>, sides: Result<(ExactScalar, ExactScalar), VerifyError>) {
        match sides {
            Ok((l, r)) => self.equal(name, &l, &r),
            Err(e) => self.checks.push(Check { name: name.into(), pass: false, defect: false, lhs: Some(e.to_string()), rhs: None }),
        }
    }

    pub fn fail_with(&mut self, name: impl Into<String>, err: &VerifyError) {
        self.checks.push(Check { name: name.into(), pass: false, defect: false, lhs: Some(err.to_string()), rhs: None });
    }

    pub fn merge(&mut self, other: IdentityReport) {
        self.checks.extend(other.checks);
    }
}

fn defect_family(name: &str) -> &str {
    name.split_once(',').map_or(name, |(head, _)| head)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Quartic,
    TernaryCubic,
    Structure,
    QuinticFamilies,
    QuinticFinal,
    SexticOctavic,
    Appendix,
    SexticTable,
    Classifier,
    I18,
    Charpoly,
    Properties,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Quartic,
        Suite::TernaryCubic,
        Suite::Structure,
        Suite::QuinticFamilies,
        Suite::QuinticFinal,
        Suite::SexticOctavic,
        Suite::Appendix,
        Suite::SexticTable,
        Suite::Classifier,
        Suite::I18,
        Suite::Charpoly,
        Suite::Properties,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Quartic => "quartic",
            Suite::TernaryCubic => "ternary-cubic",
            Suite::Structure => "structure",
            Suite::QuinticFamilies => "quintic-families",
            Suite::QuinticFinal => "quintic-final",
            Suite::SexticOctavic => "sextic-octavic",
            Suite::Appendix => "appendix",
            Suite::SexticTable => "sextic-table",
            Suite::Classifier => "classifier",
            Suite::I18 => "i18",
            Suite::Charpoly => "charpoly",
            Suite::Properties => "properties",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> IdentityReport {
    match suite {
        Suite::Quartic => quartic_suite(),
        Suite::TernaryCubic => ternary_suite(),
        Suite::Structure => structure_suite(seed),
        Suite::QuinticFamilies => quintic_families_suite(),
        Suite::QuinticFinal => quintic_final_suite(seed),
        Suite::SexticOctavic => sextic_octavic_suite(seed),
        Suite::Appendix => appendix_suite(seed),
        Suite::SexticTable => sextic_table_suite(),
        Suite::Classifier => classifier_suite(seed),
        Suite::I18 => i18_suite(seed),
        Suite::Charpoly => charpoly_suite(seed),
        Suite::Properties => properties_suite(seed),
    }
}

pub const QUARTIC_TS: [i64; 7] = [0, 1, -1, 3, -3, 4, 5];
pub const TERNARY_TS: [i64; 4] = [1, 2, 3, 12];

fn quartic_suite() -> IdentityReport {
    let mut r = IdentityReport::new("quartic");
    for t in QUARTIC_TS.map(int) {
        let q = families::q_t(&t);
        let sides = (|| {
            let bold = associated_binary(&q)?;
            if !proportional_forms(&bold, &families::bold_q_t(&t)) {
                return Err(VerifyError::UnsupportedFamily(format!("associated form {bold:?} off the q_t law")));
            }
            Ok((QuarticInvariants::new(&bold)?.k()?, QuarticInvariants::new(&q)?.j()?))
        })();
        r.equal_or_err(format!("K(bold q_{t}) = J(q_{t})"), sides);
        r.equal_or_err(format!("J(q_{t}) closed form"), QuarticInvariants::new(&q).map_err(Into::into).and_then(|i| Ok((i.j()?, families::quartic_j_closed(&t)))));
    }
    r
}

fn ternary_suite() -> IdentityReport {
    let mut r = IdentityReport::new("ternary-cubic");
    for t in TERNARY_TS.map(int) {
        let c = families::c_t(&t);
        let sides = (|| {
            let bold = associated::associated_form_exp2(&c)?;
            if associated::proportional(bold.form(), &families::bold_c_t(&t)).is_none() {
                return Err(VerifyError::UnsupportedFamily("associated cubic off the c_t law".into()));
            }
            Ok((TernaryCubicInvariants::new(bold.form())?.k()?, TernaryCubicInvariants::new(&c)?.j()?))
        })();
        r.equal_or_err(format!("K(bold c_{t}) = J(c_{t})"), sides);
        r.equal_or_err(
            format!("J(c_{t}) closed form"),
            TernaryCubicInvariants::new(&c).map_err(Into::into).and_then(|i| Ok((i.j()?, families::ternary_j_closed(&t)))),
        );
    }
    r
}

fn structure_suite(seed: u64) -> IdentityReport {
    let mut r = IdentityReport::new("structure");
    let mut forms: Vec<(String, MultiPoly, u32, u32)> = Vec::new();
    for t in QUARTIC_TS.map(int) {
        forms.push((format!("q_{t}"), families::q_t(&t).to_poly(families::z2()), 2, 4));
    }
    for (s, t) in [(0, 0), (1, 1), (-2, 3), (3, -1)] {
        let q = families::f_st(&int(s), &int(t));
        forms.push((format!("f_{{{s},{t}}}"), q.to_poly(families::z2()), 2, 5));
    }
    for t in [0, 1, 2] {
        forms.push((format!("f_{t}"), families::f_t(&int(t)).to_poly(families::z2()), 2, 5));
    }
    for (i, (_, q)) in sampling::sylvester_samples(seed, 3).into_iter().enumerate() {
        forms.push((format!("sylvester sample {i}"), q.to_poly(families::z2()), 2, 6));
    }
    for label in [SexticLabel::V, SexticLabel::VI, SexticLabel::VII] {
        forms.push((format!("sextic {label}"), families::exceptional(label).to_poly(families::z2()), 2, 6));
    }
    for t in TERNARY_TS.map(int) {
        forms.push((format!("c_{t}"), families::c_t(&t), 3, 3));
    }
    for (name, p, m, n) in forms {
        match milnor::milnor(&p) {
            Ok(a) => {
                r.check(format!("{name}: dim = (n-1)^m"), a.dimension() == (n as usize - 1).pow(m));
                r.check(format!("{name}: nil-index = m(n-2)"), a.nil_index() == m * (n - 2));
                let top = a.grading().iter().filter(|&&d| d == a.nil_index()).count();
                r.check(format!("{name}: one-dimensional socle"), top == 1);
            }
            Err(e) => r.fail_with(name, &e.into()),
        }
    }
    r
}

/// Points per variable. The quintic invariants used have degree at most 12
/// in the coefficients, each coefficient of `f_{s,t}`, `f_t` is a single
/// parameter, so 13 points per variable certify those identities.
pub const GRID_POINTS: i64 = 13;

/// `(s, t)` grid of the two-parameter quintic identities.
pub fn quintic_grid() -> Vec<(ExactScalar, ExactScalar)> {
    let h = GRID_POINTS / 2;
    (-h..=h).flat_map(|s| (-h..=h).map(move |t| (int(s), int(t)))).collect()
}

pub fn quintic_t_values() -> Vec<ExactScalar> {
    let h = GRID_POINTS / 2;
    (-h..=h).map(int).collect()
}

fn jkl_of_associated(q: &BinaryForm) -> Result<[ExactScalar; 3], VerifyError> {
    let bold = associated_binary(q)?;
    let inv = SexticInvariants::with_i10(&bold)?;
    Ok([inv.j()?, inv.k()?, inv.l()?])
}

fn quintic_families_suite() -> IdentityReport {
    use families::*;
    let mut r = IdentityReport::new("quintic-families");
    let c57600 = &int(57600) * &fact10();
    for (s, t) in quintic_grid() {
        let tag = format!("(s,t)=({s},{t})");
        let q = f_st(&s, &t);
        let inv = match QuinticInvariants::new(&q) {
            Ok(i) => i,
            Err(e) => {
                r.fail_with(tag, &e.into());
                continue;
            }
        };
        let (d, n, h) = (d_st(&s, &t), n_st(&s, &t), h_st(&s, &t));
        r.equal(format!("transvectant {tag}"), &inv.t10, &(&c57600 * &n));
        r.equal(format!("Delta {tag}"), &inv.delta, &(&d / &int(3125)));
        r.equal(format!("I12 {tag}"), &inv.i12, &-&(&h / &int(10).pow(10)));
        let f = &(&(&int(-27) * &int(10).pow(10)) * &inv.i12)
            + &(&(&(&int(115625) / &(&int(4608) * &fact10())) * &inv.delta) * &inv.t10);
        let f = &f + &(&(&int(5) / &(&int(2) * &(&int(19200) * &fact10()).pow(3))) * &inv.t10.pow(3));
        r.equal(format!("F from I12, Delta, transvectant {tag}"), &f, &big_f(&s, &t));
        if d.is_zero() {
            continue;
        }
        r.equal(format!("J(f) {tag}"), &inv.j().unwrap(), &(&(&(&c57600.pow(2) * &n.pow(2)) * &int(3125)) / &d));
        let k_closed = &h.pow(2) / &(&(&int(3125) * &int(4).pow(10)) * &d.pow(3));
        r.equal(format!("K(f) {tag}"), &inv.k().unwrap(), &k_closed);
        let l_closed = &(&(&(&rat(-225, 4) * &fact10()) * &n) * &h) / &d.pow(2);
        r.equal(format!("L(f) {tag}"), &inv.l().unwrap(), &l_closed);
        let bold = associated_binary(&q);
        r.check(format!("associated sextic proportional to bold f {tag}"), matches!(&bold, Ok(b) if proportional_forms(b, &bold_f_st(&s, &t))));
        let bf = big_f(&s, &t);
        match jkl_of_associated(&q) {
            Ok([j, k, l]) => {
                r.equal(format!("sans-J(bold f) {tag}"), &j, &(&n.pow(2) / &d));
                r.equal(format!("sans-K(bold f) {tag}"), &k, &(&bf.pow(2) / &d.pow(3)));
                r.equal(format!("sans-L(bold f) {tag}"), &l, &(&(&n * &bf) / &d.pow(2)));
            }
            Err(e) => r.fail_with(format!("sans-JKL(bold f) {tag}"), &e),
        }
    }
    for t in quintic_t_values() {
        let tag = format!("t={t}");
        let q = f_t(&t);
        let inv = match QuinticInvariants::new(&q) {
            Ok(i) => i,
            Err(e) => {
                r.fail_with(tag, &e.into());
                continue;
            }
        };
        let (e, ht, g) = (e_t(&t), h_t(&t), g_t(&t));
        r.equal(format!("transvectant {tag}"), &inv.t10, &(&(&int(-172800) * &fact10()) * &t.pow(2)));
        r.equal(format!("Delta {tag}"), &inv.delta, &(&e / &int(3125)));
        r.equal(format!("I12 {tag}"), &inv.i12, &-&(&ht / &(&int(15625) * &int(10).pow(10))));
        let gg = &(&(&int(-27) * &int(10).pow(10)) * &inv.i12)
            + &(&(&(&int(115625) / &(&int(4608) * &fact10())) * &inv.delta) * &inv.t10);
        let gg = &gg + &(&(&int(5) / &(&int(2) * &(&int(19200) * &fact10()).pow(3))) * &inv.t10.pow(3));
        r.equal(format!("G from I12, Delta, transvectant {tag}"), &gg, &g);
        r.defect(format!("printed G from I12, Delta, transvectant, {tag}"), gg == g_t_printed(&t));
        if e.is_zero() {
            continue;
        }
        let j_closed = &(&(&int(5) * &(&int(4_320_000) * &fact10()).pow(2)) * &t.pow(4)) / &e;
        r.equal(format!("J(f) {tag}"), &inv.j().unwrap(), &j_closed);
        let k_closed = &ht.pow(2) / &(&(&int(4).pow(10) * &int(5).pow(17)) * &e.pow(3));
        r.equal(format!("K(f) {tag}"), &inv.k().unwrap(), &k_closed);
        let l_closed = &(&(&(&int(27) * &fact10()) * &t.pow(2)) * &ht) / &(&int(2500) * &e.pow(2));
        r.equal(format!("L(f) {tag}"), &inv.l().unwrap(), &l_closed);
        let bold = associated_binary(&q);
        r.check(format!("associated sextic proportional to bold f {tag}"), matches!(&bold, Ok(b) if proportional_forms(b, &bold_f_t(&t))));
        match jkl_of_associated(&q) {
            Ok([j, k, l]) => {
                r.equal(format!("sans-J(bold f) {tag}"), &j, &(&(&int(9) * &t.pow(4)) / &e));
                r.equal(format!("sans-K(bold f) {tag}"), &k, &(&g.pow(2) / &e.pow(3)));
                r.equal(format!("sans-L(bold f) {tag}"), &l, &(&(&(&int(-3) * &t.pow(2)) * &g) / &e.pow(2)));
            }
            Err(e) => r.fail_with(format!("sans-JKL(bold f) {tag}"), &e),
        }
    }
    r
}

/// The constants `c1…c7` of the quintic connection formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedConstants {
    #[serde(serialize_with = "serialize_scalars")]
    pub c: Vec<ExactScalar>,
    /// `(s, t)` points used in the fit.
    #[serde(serialize_with = "serialize_pairs")]
    pub fit_points: Vec<(ExactScalar, ExactScalar)>,
}

fn serialize_scalars<S: serde::Serializer>(v: &[ExactScalar], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ExactScalar::to_string))
}

fn serialize_pairs<S: serde::Serializer>(v: &[(ExactScalar, ExactScalar)], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(a, b)| [a.to_string(), b.to_string()]))
}

/// Leading coefficients of the connection formulas.
fn k_lead() -> ExactScalar {
    &(&int(2).pow(20) * &int(3).pow(6)) * &int(5).pow(5)
}

fn l_lead() -> ExactScalar {
    &rat(-12, 25) / &fact10()
}

pub fn j_connection() -> ExactScalar {
    &int(1) / &(&int(5) * &(&int(1_440_000) * &fact10()).pow(2))
}

/// Fit points for the constants: 20 points with `Δ ≠ 0`.
pub fn constant_fit_points() -> Vec<(ExactScalar, ExactScalar)> {
    let ss = [rat(-2, 1), rat(-1, 2), rat(1, 3), rat(1, 1), rat(3, 2), rat(2, 1), rat(-1, 1)];
    let ts = [rat(1, 1), rat(-1, 1), rat(1, 2), rat(2, 1)];
    ss.iter()
        .flat_map(|s| ts.iter().map(move |t| (s.clone(), t.clone())))
        .filter(|(s, t)| !families::d_st(s, t).is_zero())
        .take(20)
        .collect()
}

struct ConnectionSample {
    j: ExactScalar,
    k: ExactScalar,
    l: ExactScalar,
    bold: [ExactScalar; 3],
}

fn connection_sample(q: &BinaryForm) -> Result<ConnectionSample, VerifyError> {
    let inv = QuinticInvariants::new(q)?;
    Ok(ConnectionSample { j: inv.j()?, k: inv.k()?, l: inv.l()?, bold: jkl_of_associated(q)? })
}

/// Solves for `c1…c5` and `c6, c7` by exact overdetermined elimination.
pub fn derive_constants() -> Result<DerivedConstants, VerifyError> {
    let points = constant_fit_points();
    let samples: Vec<ConnectionSample> =
        points.iter().map(|(s, t)| connection_sample(&families::f_st(s, t))).collect::<Result<_, _>>()?;
    let rows_k: Matrix = samples.iter().map(|x| vec![x.l.clone(), &x.j * &x.l, x.j.pow(3), x.j.pow(2), x.j.clone()]).collect();
    let rhs_k: Vec<ExactScalar> = samples.iter().map(|x| &x.bold[1] - &(&k_lead() * &x.k)).collect();
    let rows_l: Matrix = samples.iter().map(|x| vec![x.j.pow(2), x.j.clone()]).collect();
    let rhs_l: Vec<ExactScalar> = samples.iter().map(|x| &x.bold[2] - &(&l_lead() * &x.l)).collect();
    let map = |e: LinalgError| match e {
        LinalgError::Inconsistent => VerifyError::InconsistentSystem,
        other => other.into(),
    };
    let mut c = linalg::solve(&rows_k, &rhs_k).map_err(map)?;
    c.extend(linalg::solve(&rows_l, &rhs_l).map_err(map)?);
    Ok(DerivedConstants { c, fit_points: points })
}

/// Predicted `(sans-J, sans-K, sans-L)` of the associated sextic.
pub fn predicted_bold_jkl(c: &[ExactScalar], j: &ExactScalar, k: &ExactScalar, l: &ExactScalar) -> [ExactScalar; 3] {
    let bj = &j_connection() * j;
    let terms = [&k_lead() * k, &c[0] * l, &(&c[1] * j) * l, &c[2] * &j.pow(3), &c[3] * &j.pow(2), &c[4] * j];
    let bk = terms.iter().fold(ExactScalar::zero(), |acc, x| &acc + x);
    let bl = &(&(&l_lead() * l) + &(&c[5] * &j.pow(2))) + &(&c[6] * j);
    [bj, bk, bl]
}

fn check_connection(r: &mut IdentityReport, c: &[ExactScalar], tag: &str, q: &BinaryForm) {
    match connection_sample(q) {
        Ok(x) => {
            let p = predicted_bold_jkl(c, &x.j, &x.k, &x.l);
            for (i, name) in ["J", "K", "L"].iter().enumerate() {
                r.equal(format!("sans-{name}(bold Q) {tag}"), &x.bold[i], &p[i]);
            }
        }
        Err(e) => r.fail_with(tag.to_string(), &e),
    }
}

fn quintic_final_suite(seed: u64) -> IdentityReport {
    let mut r = IdentityReport::new("quintic-final");
    let constants = match derive_constants() {
        Ok(c) => c,
        Err(e) => {
            r.fail_with("derive constants", &e);
            return r;
        }
    };
    r.check("constants are rational", constants.c.iter().all(ExactScalar::is_rational));
    r.check("fit is at least 3x overdetermined", constants.fit_points.len() >= 15);
    for (s, t) in &constants.fit_points {
        check_connection(&mut r, &constants.c, &format!("f_{{{s},{t}}}"), &families::f_st(s, t));
    }
    for t in quintic_t_values() {
        if families::e_t(&t).is_zero() {
            continue;
        }
        check_connection(&mut r, &constants.c, &format!("f_{t}"), &families::f_t(&t));
    }
    let mut rng = sampling::rng(seed);
    for i in 0..25 {
        let q = sampling::square_free_integer_form(&mut rng, 5);
        check_connection(&mut r, &constants.c, &format!("random quintic {i}"), &q);
    }
    r
}

fn eight_closure(r: &mut IdentityReport, tag: &str, q: &BinaryForm) {
    let sides = (|| {
        let bold = associated_binary(q)?;
        let lhs = OctavicInvariants::new(&bold)?.eight()?;
        let rhs = SexticInvariants::new(q)?.eight()?;
        Ok((lhs, rhs))
    })();
    match sides {
        Ok((lhs, rhs)) => {
            for (k, name) in Family::Octavic.names().iter().enumerate() {
                r.equal(format!("bold {name}(bold Q) = {name}(Q), {tag}"), &lhs[k], &rhs[k]);
            }
        }
        Err(e) => r.fail_with(tag.to_string(), &e),
    }
}

fn sextic_octavic_suite(seed: u64) -> IdentityReport {
    let mut r = IdentityReport::new("sextic-octavic");
    for (abcd, q) in sampling::sylvester_samples(seed, 20) {
        let tag = format!("(a,b,c,d)=({},{},{},{})", abcd[0], abcd[1], abcd[2], abcd[3]);
        eight_closure(&mut r, &tag, &q);
    }
    for label in [SexticLabel::V, SexticLabel::VI, SexticLabel::VII] {
        eight_closure(&mut r, &format!("sextic {label}"), &families::exceptional(label));
    }
    r
}

const APPENDIX_SYLVESTER: &str = include_str!("../data/appendix_sylvester.txt");
const APPENDIX_EXCEPTIONAL: &str = include_str!("../data/appendix_exceptional.txt");

fn data_lines(text: &str) -> impl Iterator<Item = (&str, &str)> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .filter_map(|l| l.split_once(" = ").map(|(k, v)| (k.trim(), v.trim())))
}

/// The printed appendix coefficients `c0…c8` as polynomials in `a, b, c, d`.
pub fn appendix_coefficients() -> Vec<MultiPoly> {
    data_lines(APPENDIX_SYLVESTER).map(|(_, v)| parse::parse_poly(v, &["a", "b", "c", "d"]).expect("appendix data")).collect()
}

/// The printed octavics for sextics (v), (vi), (vii).
pub fn appendix_octavics() -> Vec<(SexticLabel, BinaryForm)> {
    let labels = [SexticLabel::V, SexticLabel::VI, SexticLabel::VII];
    data_lines(APPENDIX_EXCEPTIONAL)
        .zip(labels)
        .map(|((_, v), label)| (label, BinaryForm::from_form(&parse::parse_poly(v, &["w1", "w2"]).expect("data")).expect("binary")))
        .collect()
}

/// Associated octavic of sextic (vii), recomputed.
pub fn vii_octavic_corrected() -> BinaryForm {
    let text = "137w1^8 - 376w1^7w2 + 2184w1^6w2^2 + 16688w1^5w2^3 - 49448w1^4w2^4 + 33376w1^3w2^5 + 8736w1^2w2^6 \
                - 3008w1w2^7 + 2192w2^8";
    BinaryForm::from_form(&parse::parse_poly(text, &["w1", "w2"]).expect("literal")).expect("binary")
}

/// `c6` with the `a d⁷` / `b d⁷` transcription slip undone.
pub fn appendix_c6_corrected() -> MultiPoly {
    let c6 = appendix_coefficients().swap_remove(6);
    let fix = parse::parse_poly("4536a d^7 - 4536b d^7", &["a", "b", "c", "d"]).expect("literal");
    &c6 + &fix
}

fn appendix_octavic(coeffs: &[MultiPoly], abcd: &[ExactScalar; 4]) -> BinaryForm {
    let c: Vec<ExactScalar> = coeffs.iter().map(|p| p.evaluate(abcd)).collect();
    BinaryForm::from_monomial_coeffs(&c)
}

fn appendix_suite(seed: u64) -> IdentityReport {
    let mut r = IdentityReport::new("appendix");
    let printed = appendix_coefficients();
    let mut corrected = printed.clone();
    corrected[6] = appendix_c6_corrected();
    for (abcd, q) in sampling::sylvester_samples(seed, 20) {
        let tag = format!("(a,b,c,d)=({},{},{},{})", abcd[0], abcd[1], abcd[2], abcd[3]);
        match associated_binary(&q) {
            Ok(bold) => {
                r.defect(format!("printed c0..c8, {tag}"), proportional_forms(&bold, &appendix_octavic(&printed, &abcd)));
                r.check(
                    format!("c0..c8 with c6 corrected, {tag}"),
                    proportional_forms(&bold, &appendix_octavic(&corrected, &abcd)),
                );
            }
            Err(e) => r.fail_with(tag, &e),
        }
    }
    for (label, oct) in appendix_octavics() {
        match associated_binary(&families::exceptional(label)) {
            Ok(bold) if label == SexticLabel::VII => {
                r.defect(format!("printed octavic for sextic {label}"), proportional_forms(&bold, &oct));
                r.check(format!("corrected octavic for sextic {label}"), proportional_forms(&bold, &vii_octavic_corrected()));
            }
            Ok(bold) => r.check(format!("printed octavic for sextic {label}"), proportional_forms(&bold, &oct)),
            Err(e) => r.fail_with(format!("sextic {label}"), &e),
        }
    }
    r
}

/// `(M, …, V)` of sextic (vii) as printed.
pub fn vii_table() -> Vec<ExactScalar> {
    [(-7, 324), (3125, 36006768), (-343, 34012224), (-25, 2268), (-5, 324), (-5, 324), (-7, 324), (49, 104976)]
        .map(|(n, d)| rat(n, d))
        .to_vec()
}

fn sextic_table_suite() -> IdentityReport {
    let mut r = IdentityReport::new("sextic-table");
    let eight = |q: &BinaryForm| SexticInvariants::new(q).and_then(|i| i.eight());
    match eight(&families::exceptional(SexticLabel::VII)) {
        Ok(v) => {
            for (k, name) in Family::Sextic.names().iter().enumerate() {
                r.equal(format!("{name}(vii) table"), &v[k], &vii_table()[k]);
            }
        }
        Err(e) => r.fail_with("sextic (vii)", &e.into()),
    }
    match eight(&families::sqrt7_sextic()) {
        Ok(v) => {
            for (k, name) in Family::Sextic.names().iter().enumerate() {
                r.equal(format!("{name}(sqrt7 sextic) table"), &v[k], &vii_table()[k]);
            }
        }
        Err(e) => r.fail_with("sqrt7 sextic", &e.into()),
    }
    for (label, m) in [(SexticLabel::V, rat(0, 1)), (SexticLabel::VI, rat(9, 637)), (SexticLabel::VII, rat(-7, 324))] {
        r.equal_or_err(format!("M(sextic {label})"), eight(&families::exceptional(label)).map(|v| (v[0].clone(), m)).map_err(Into::into));
    }
    r
}

/// Working precision and square-free threshold of the eigencubic diagnostic.
pub const EIGEN_PRECISION: u32 = 50;
pub const EIGEN_TOLERANCE_DIGITS: u32 = 30;

fn classifier_suite(seed: u64) -> IdentityReport {
    let mut r = IdentityReport::new("classifier");
    let mut labels = Vec::new();
    for (label, text) in sextic::EXCEPTIONAL {
        let q = families::exceptional(label);
        match sextic::classify(&q) {
            Ok(c) => {
                r.check(format!("{text} -> {label}"), c.label == label);
                labels.push(c.label);
            }
            Err(e) => r.fail_with(text, &e.into()),
        }
        match sextic::eigencubics_with_tolerance(&q, EIGEN_PRECISION, EIGEN_TOLERANCE_DIGITS) {
            Ok(b) => r.check(format!("no square-free eigencubic for {label}"), b.iter().all(|x| !x.square_free)),
            Err(e) => r.fail_with(format!("eigencubics {label}"), &e.into()),
        }
    }
    labels.sort_by_key(|l| l.to_string());
    labels.dedup();
    r.check("seven distinct labels", labels.len() == 7);
    let mut rng = sampling::rng(seed);
    for i in 0..100 {
        let q = sampling::square_free_integer_form(&mut rng, 6);
        let label = sextic::classify(&q).map(|c| c.label);
        r.check(format!("random square-free sextic {i} is SylvesterGeneric"), label == Ok(SexticLabel::SylvesterGeneric));
        if i < 20 {
            let found = sextic::eigencubics_with_tolerance(&q, EIGEN_PRECISION, EIGEN_TOLERANCE_DIGITS).map(|b| b.iter().any(|x| x.square_free));
            r.check(format!("random sextic {i} has a square-free eigencubic"), found == Ok(true));
        }
    }
    r.merge(charpoly_suite(seed.wrapping_add(1)));
    r
}

fn charpoly_suite(seed: u64) -> IdentityReport {
    let mut r = IdentityReport::new("charpoly");
    let mut rng = sampling::rng(seed);
    for i in 0..50 {
        let q = sampling::integer_form(&mut rng, 6);
        r.check(format!("charpoly identity, random sextic {i}"), sextic::qhat(&q).is_ok());
    }
    r
}

fn i18_suite(seed: u64) -> IdentityReport {
    let mut r = IdentityReport::new("i18");
    let named = [("f_{0,0}", families::f_st(&int(0), &int(0))), ("f_1", families::f_t(&int(1)))];
    for (name, q) in named {
        r.check(format!("I18^2 is a square for {name}"), invariants::i18_square_check(&q) == Ok(true));
    }
    let mut rng = sampling::rng(seed);
    for i in 0..25 {
        let q = sampling::square_free_integer_form(&mut rng, 5);
        r.check(format!("I18^2 is a square for random quintic {i}"), invariants::i18_square_check(&q) == Ok(true));
    }
    r
}

fn relative_invariants(q: &BinaryForm) -> Result<Vec<ExactScalar>, VerifyError> {
    Ok(match q.degree() {
        5 => {
            let i = QuinticInvariants::new(q)?;
            vec![i.delta, i.i12, i.t10]
        }
        6 => {
            let i = SexticInvariants::with_i10(q)?;
            vec![i.i2.clone(), i.i4.clone(), i.i6.clone(), i.i10().cloned().unwrap_or_default(), i.delta]
        }
        8 => {
            let i = OctavicInvariants::new(q)?;
            vec![i.i2, i.i3, i.i4, i.i5]
        }
        n => return Err(VerifyError::UnsupportedFamily(format!("degree {n}"))),
    })
}

fn absolute_invariants(q: &BinaryForm) -> Result<Vec<ExactScalar>, VerifyError> {
    Ok(match q.degree() {
        4 => {
            let i = QuarticInvariants::new(q)?;
            vec![i.j()?, i.k()?]
        }
        5 => QuinticInvariants::new(q)?.fingerprint()?.values,
        6 => {
            let i = SexticInvariants::with_i10(q)?;
            let mut v = vec![i.j()?, i.k()?, i.l()?];
            v.extend(i.eight()?);
            v
        }
        8 => OctavicInvariants::new(q)?.eight()?,
        n => return Err(VerifyError::UnsupportedFamily(format!("degree {n}"))),
    })
}

fn properties_suite(seed: u64) -> IdentityReport {
    let mut r = IdentityReport::new("properties");
    let mut rng = sampling::rng(seed);
    let base: Vec<BinaryForm> = [5, 6, 8].into_iter().map(|n| sampling::square_free_integer_form(&mut rng, n)).collect();
    for q in &base {
        let n = q.degree();
        let before = relative_invariants(q);
        let mut ok = before.is_ok();
        for _ in 0..30 {
            let c = sampling::unimodular(&mut rng);
            let after = q.linear_change(&c).map_err(VerifyError::from).and_then(|p| relative_invariants(&p));
            ok &= after.is_ok() && after == before;
        }
        r.check(format!("unimodular equivariance, degree {n}, 30 matrices"), ok);
    }
    for n in [4, 5, 6, 8] {
        let q = sampling::square_free_integer_form(&mut rng, n);
        let lambda = sampling::nonzero_rational(&mut rng);
        let scaled = BinaryForm::new(q.coeffs().iter().map(|c| c * &lambda).collect());
        let (a, b) = (absolute_invariants(&q), absolute_invariants(&scaled));
        r.check(format!("scale invariance of absolute invariants, degree {n}"), a.is_ok() && a == b);
    }
    let ternary = parse::parse_form("2z1^3 - 3z2^3 + 5z3^3 + 6z1z2z3", None).expect("literal");
    let scaled = ternary.scale(&rat(-7, 3));
    let tj = |p: &MultiPoly| TernaryCubicInvariants::new(p).and_then(|i| i.j());
    r.check("scale invariance of ternary J", tj(&ternary).is_ok() && tj(&ternary) == tj(&scaled));
    for (n, count) in [(5, 50), (6, 20)] {
        let mut agree = 0;
        for _ in 0..count {
            let q = sampling::square_free_integer_form(&mut rng, n).to_poly(families::z2());
            let a = associated::associated_form_exp2(&q);
            let b = associated::associated_form_normalform(&q);
            if let (Ok(a), Ok(b)) = (a, b) {
                agree += associated::proportional(a.form(), b.form()).is_some() as usize;
            }
        }
        r.check(format!("exp2 and normal-form routes agree on {count} degree-{n} forms"), agree == count);
    }
    let nf_forms = ["z1^4 + 3z1^2z2^2 + z2^4", "z1^5 + z1^4z2 + z1^3z2^2 + z2^5", "z1^3 + z2^3 + z3^3 + 6z1z2z3"];
    for text in nf_forms {
        let p = parse::parse_form(text, None).expect("literal");
        let g = groebner::buchberger(&IdentityPresentation::jacobian(&p));
        let probe = p.pow(2);
        let once = groebner::normal_form(&probe, &g);
        let twice = once.as_ref().map_err(Clone::clone).and_then(|x| groebner::normal_form(x, &g));
        r.check(format!("normal form idempotent for {text}"), once.is_ok() && once == twice);
    }
    let pairing = [
        ("z1^4 + 3z1^2z2^2 + z2^4", 9),
        ("z1^5 + z1^4z2 + z1^3z2^2 + z2^5", 16),
        ("z1(z1^5 + z2^5)", 25),
        ("z1^3 + z2^3 + z3^3 + 6z1z2z3", 8),
    ];
    for (text, dim) in pairing {
        let p = parse::parse_form(text, None).expect("literal");
        let ok = milnor::milnor(&p).map(|a| a.dimension() == dim && a.gorenstein_pairing_holds());
        r.check(format!("Gorenstein pairing, dim {dim}"), ok == Ok(true));
    }
    r.merge(i18_suite(seed.wrapping_add(2)));
    r
}

struct IdentityPresentation;

impl IdentityPresentation {
    fn jacobian(p: &MultiPoly) -> IdealPresentation {
        IdealPresentation::jacobian(p, MonomialOrder::Lex).expect("form has variables")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equivalent,
    Inequivalent,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub verdict: Verdict,
    pub family: Family,
    pub fingerprints: [Option<InvariantFingerprint>; 2],
}

/// Which supported family a form belongs to.
pub fn family_of(p: &MultiPoly) -> Result<Family, VerifyError> {
    let n = p.homogeneous_degree().ok_or_else(|| VerifyError::UnsupportedFamily("not a form".into()))?;
    match (p.nvars(), n) {
        (2, 4) => Ok(Family::Quartic),
        (2, 5) => Ok(Family::Quintic),
        (2, 6) => Ok(Family::Sextic),
        (2, 8) => Ok(Family::Octavic),
        (3, 3) => Ok(Family::TernaryCubic),
        (m, n) => Err(VerifyError::UnsupportedFamily(format!("degree {n} in {m} variables"))),
    }
}

/// Absolute-invariant fingerprint; requires `Δ ≠ 0`.
pub fn fingerprint(p: &MultiPoly) -> Result<InvariantFingerprint, VerifyError> {
    let family = family_of(p)?;
    if family == Family::TernaryCubic {
        let inv = TernaryCubicInvariants::new(p).map_err(|e| match e {
            InvariantError::WrongShape => VerifyError::UnsupportedFamily("ternary cubic outside the diagonal shape".into()),
            other => other.into(),
        })?;
        if inv.delta.is_zero() {
            return Err(VerifyError::DegenerateInput);
        }
        return Ok(inv.fingerprint()?);
    }
    let q = BinaryForm::from_form(p)?;
    if binary::discriminant(&q)?.is_zero() {
        return Err(VerifyError::DegenerateInput);
    }
    Ok(match family {
        Family::Quartic => QuarticInvariants::new(&q)?.fingerprint()?,
        Family::Quintic => QuinticInvariants::new(&q)?.fingerprint()?,
        Family::Sextic => SexticInvariants::new(&q)?.fingerprint()?,
        _ => return Err(VerifyError::UnsupportedFamily(family.to_string())),
    })
}

/// Decides linear equivalence of two square-free forms of the same family
/// by comparing absolute invariants.
pub fn equivalent(p: &MultiPoly, q: &MultiPoly) -> Result<Equivalence, VerifyError> {
    let (fp, fq) = (family_of(p)?, family_of(q)?);
    if fp != fq {
        return Err(VerifyError::UnsupportedFamily(format!("{fp} versus {fq}")));
    }
    let (a, b) = (fingerprint(p), fingerprint(q));
    let (a, b) = match (a, b) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(VerifyError::Invariant(InvariantError::DivisionByVanishingInvariant(_))), _)
        | (_, Err(VerifyError::Invariant(InvariantError::DivisionByVanishingInvariant(_)))) => {
            return Ok(Equivalence { verdict: Verdict::Indeterminate, family: fp, fingerprints: [None, None] });
        }
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    let verdict = if a.values == b.values { Verdict::Equivalent } else { Verdict::Inequivalent };
    Ok(Equivalence { verdict, family: fp, fingerprints: [Some(a), Some(b)] })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f11_discriminant_point_value() {
        let d = families::d_st(&int(1), &int(1));
        assert_eq!(&d / &int(3125), rat(4112, 3125));
        let inv = QuinticInvariants::new(&families::f_st(&int(1), &int(1))).unwrap();
        assert_eq!(inv.delta, rat(4112, 3125));
    }

    #[test]
    fn f_at_origin_and_g_at_small_t() {
        assert_eq!(families::big_f(&int(0), &int(0)), int(312_500_000));
        assert_eq!(families::g_t(&int(1)), int(729 + 5400 + 163200));
    }

    #[test]
    fn sylvester_expansion() {
        let q = families::sylvester(&int(0), &int(0), &int(0), &int(1));
        let direct = parse::parse_form("z1z2(-z1-z2)(z1-z2)(z1+2z2)(-2z1-z2)", None).unwrap();
        assert_eq!(q, BinaryForm::from_form(&direct).unwrap());
        let q = families::sylvester(&int(1), &int(2), &int(3), &int(0));
        let direct = parse::parse_form("z1^6 + 2z2^6 + 3(z1+z2)^6", None).unwrap();
        assert_eq!(q, BinaryForm::from_form(&direct).unwrap());
    }

    #[test]
    fn rho_pair_has_opposite_l() {
        // u = t² − t is 5/4 and −10; J, K, L are rational on both sides
        let t1 = &(&int(1) + &ExactScalar::sqrt_of(6).unwrap()) / &int(2);
        let t2 = &(&int(1) + &ExactScalar::sqrt_of(-39).unwrap()) / &int(2);
        let a = QuinticInvariants::new(&families::rho_t(&t1)).unwrap();
        let b = QuinticInvariants::new(&families::rho_t(&t2)).unwrap();
        assert_eq!(a.j().unwrap(), b.j().unwrap());
        assert_eq!(a.k().unwrap(), b.k().unwrap());
        assert_eq!(a.l().unwrap(), -&b.l().unwrap());
        assert_eq!(a.l().unwrap(), &int(408_240_000_000) * &rat(100, 729));
        let p = families::rho_t(&t1).to_poly(families::z2());
        let q = families::rho_t(&t2).to_poly(families::z2());
        assert_eq!(equivalent(&p, &q).unwrap().verdict, Verdict::Inequivalent);
    }

    #[test]
    fn appendix_data_parses() {
        assert_eq!(appendix_coefficients().len(), 9);
        assert_eq!(appendix_octavics().len(), 3);
    }

    #[test]
    fn equivalence_basics() {
        let p = parse::parse_form("z1^5 + 2z1^3z2^2 - z2^5", None).unwrap();
        let c = linalg::from_integers(&[&[2, 1], &[1, 1]]);
        let q = p.linear_change(&c).unwrap();
        assert_eq!(equivalent(&p, &q).unwrap().verdict, Verdict::Equivalent);
        let r = parse::parse_form("z1^5 + z2^5", None).unwrap();
        assert_eq!(equivalent(&p, &r).unwrap().verdict, Verdict::Inequivalent);
        let deg = parse::parse_form("z1^3z2^2", None).unwrap();
        assert_eq!(equivalent(&deg, &r).unwrap_err(), VerifyError::DegenerateInput);
        let ternary = parse::parse_form("z1^3 + z2^3 + z3^3 + 6z1z2z3", None).unwrap();
        assert!(matches!(equivalent(&ternary, &r), Err(VerifyError::UnsupportedFamily(_))));
    }
}
