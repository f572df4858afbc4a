//! Command-line front end: argument parsing, dispatch and JSON output.
//!
//! Exit codes: 0 success, 1 unparsable or unsupported input, 2 degenerate
//! input, 3 verification failure.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::associated::{self, AssociatedError};
use crate::binary::{self, BinaryForm};
use crate::groebner::GroebnerError;
use crate::invariants::{
    Family, InvariantError, OctavicInvariants, QuarticInvariants, QuinticInvariants, SexticInvariants,
    TernaryCubicInvariants,
};
use crate::milnor::{self, MilnorError};
use crate::parse::{self, ParseError};
use crate::poly::{MultiPoly, PolyError};
use crate::scalar::{self, ExactScalar};
use crate::sextic::{self, Evidence, SexticError};
use crate::verify::{self, IdentityReport, Suite, VerifyError};

/// Version of the JSON layout written by `verify`.
pub const SCHEMA_VERSION: u32 = 1;

/// Base field: `Q` or `Q(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FieldSpec(Option<i64>);

impl FieldSpec {
    pub fn radicand(self) -> Option<i64> {
        self.0
    }
}

impl FromStr for FieldSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec(None));
        }
        let d = s
            .strip_prefix("Q(")
            .and_then(|r| r.strip_suffix(')'))
            .and_then(|d| d.trim().parse::<i64>().ok())
            .ok_or_else(|| format!("field must be Q or Q(d), got `{s}`"))?;
        if !scalar::is_square_free(d) {
            return Err(format!("{d} is not a square-free radicand"));
        }
        Ok(FieldSpec(Some(d)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Auto,
    Quartic,
    Quintic,
    Sextic,
    Octavic,
    TernaryCubic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Suite name or `all`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteArg {
    All,
    One(Suite),
}

impl FromStr for SuiteArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            Ok(SuiteArg::All)
        } else {
            s.parse().map(SuiteArg::One)
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "germlab", version, about = "Exact invariants of homogeneous singularities from their Milnor algebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Milnor algebra: dimension, nil-index, monomial basis, socle, grading.
    Milnor {
        poly: String,
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
    },
    /// Associated form, normalized.
    AssociatedForm {
        poly: String,
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
    },
    /// Relative and absolute invariants.
    Invariants {
        poly: String,
        #[arg(long, value_enum, default_value_t = FamilyArg::Auto)]
        family: FamilyArg,
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
    },
    /// Canonical-form class of a binary sextic.
    ClassifySextic {
        poly: String,
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
        /// Add the eigencubics of Q-hat.
        #[arg(long)]
        diagnose: bool,
    },
    /// Linear equivalence through absolute invariants.
    Equivalent {
        poly1: String,
        poly2: String,
        /// Base field; give twice to set the fields of the two forms separately.
        #[arg(long, num_args = 1, action = clap::ArgAction::Append)]
        field: Vec<FieldSpec>,
    },
    /// Run an identity suite, or `all`.
    Verify {
        suite: SuiteArg,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("verification failed")]
    Verification,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Degenerate(_) => 2,
            CliError::Verification => 3,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(format!("parse error: {e}"))
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::ZeroForm => CliError::Degenerate(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<MilnorError> for CliError {
    fn from(e: MilnorError) -> Self {
        match e {
            MilnorError::Groebner(GroebnerError::InfiniteQuotient) => {
                CliError::Degenerate("singularity is not isolated (discriminant vanishes)".into())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<AssociatedError> for CliError {
    fn from(e: AssociatedError) -> Self {
        match e {
            AssociatedError::Milnor(m) => m.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::DivisionByVanishingInvariant(_) => CliError::Degenerate(e.to_string()),
            InvariantError::Poly(p) => p.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<SexticError> for CliError {
    fn from(e: SexticError) -> Self {
        match e {
            SexticError::ZeroForm => CliError::Degenerate(e.to_string()),
            SexticError::Invariant(i) => i.into(),
            SexticError::Poly(p) => p.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::DegenerateInput => CliError::Degenerate(e.to_string()),
            VerifyError::Parse(p) => p.into(),
            VerifyError::Invariant(i) => i.into(),
            VerifyError::Milnor(m) => m.into(),
            VerifyError::Associated(a) => a.into(),
            VerifyError::Poly(p) => p.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

/// What a command wrote and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    let mut stderr = String::new();
    match execute(&cli, &mut stderr) {
        Ok(value) => Outcome { code: 0, stdout: render(&value, cli.format), stderr },
        Err((e, value)) => {
            let _ = writeln!(stderr, "error: {e}");
            Outcome { code: e.exit_code(), stdout: value.map(|v| render(&v, cli.format)).unwrap_or_default(), stderr }
        }
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(v).expect("serializable")),
        Format::Text => {
            let mut out = String::new();
            text_lines(v, "", &mut out);
            out
        }
    }
}

fn text_lines(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(m) => {
            let width = m.keys().map(|k| k.len()).max().unwrap_or(0);
            for (k, x) in m {
                match x {
                    Value::Object(_) => {
                        let _ = writeln!(out, "{prefix}{k}:");
                        text_lines(x, &format!("{prefix}  "), out);
                    }
                    _ => {
                        let _ = writeln!(out, "{prefix}{k:<width$}  {}", scalar_text(x));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{prefix}{}", scalar_text(other));
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

type Failure = (CliError, Option<Value>);

fn execute(cli: &Cli, stderr: &mut String) -> Result<Value, Failure> {
    let plain = |e: CliError| (e, None);
    match &cli.command {
        Command::Milnor { poly, field } => milnor_json(&parse_input(poly, *field).map_err(plain)?).map_err(plain),
        Command::AssociatedForm { poly, field } => {
            associated_json(&parse_input(poly, *field).map_err(plain)?).map_err(plain)
        }
        Command::Invariants { poly, family, field } => {
            invariants_json(&parse_input(poly, *field).map_err(plain)?, *family).map_err(plain)
        }
        Command::ClassifySextic { poly, field, diagnose } => {
            classify_json(&parse_input(poly, *field).map_err(plain)?, *diagnose).map_err(plain)
        }
        Command::Equivalent { poly1, poly2, field } => {
            if field.len() > 2 {
                return Err(plain(CliError::Input("--field may be given at most twice".into())));
            }
            let f1 = field.first().copied().unwrap_or_default();
            let f2 = field.get(1).copied().unwrap_or(f1);
            let p = parse_input(poly1, f1).map_err(plain)?;
            let q = parse_input(poly2, f2).map_err(plain)?;
            equivalent_json(&p, &q).map_err(plain)
        }
        Command::Verify { suite, seed } => {
            let seed = seed.unwrap_or_else(|| verify::seed_from_env(verify::DEFAULT_SEED));
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::One(s) => vec![*s],
            };
            let reports: Vec<IdentityReport> = suites.iter().map(|s| verify::run_suite(*s, seed)).collect();
            stderr.push_str(&verify_table(&reports));
            let ok = reports.iter().all(IdentityReport::passed);
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "seed": seed,
                "passed": ok,
                "reports": reports,
            });
            if ok {
                Ok(value)
            } else {
                Err((CliError::Verification, Some(value)))
            }
        }
    }
}

/// Aligned summary, one row per suite.
pub fn verify_table(reports: &[IdentityReport]) -> String {
    let width = reports.iter().map(|r| r.suite.len()).max().unwrap_or(5).max(5);
    let mut out = format!("{:<width$}  {:>6}  {:>6}  {:>7}  result\n", "suite", "checks", "failed", "defects");
    for r in reports {
        let failed = r.failures().count();
        let defects = r.defects().filter(|c| !c.pass).count();
        let verdict = if r.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(out, "{:<width$}  {:>6}  {:>6}  {:>7}  {verdict}", r.suite, r.checks.len(), failed, defects);
        for c in r.failures() {
            let _ = writeln!(out, "    failed: {}", c.name);
        }
    }
    out
}

fn parse_input(text: &str, field: FieldSpec) -> Result<MultiPoly, CliError> {
    let p = parse::parse_form(text, field.radicand())?;
    if !(2..=3).contains(&p.nvars()) {
        return Err(CliError::Input(format!("expected 2 or 3 variables, got {}", p.nvars())));
    }
    if p.is_zero() {
        return Err(CliError::Degenerate("zero form".into()));
    }
    if !p.is_homogeneous() {
        return Err(CliError::Input("polynomial is not homogeneous".into()));
    }
    Ok(p)
}

fn s(x: &ExactScalar) -> Value {
    Value::String(x.to_string())
}

fn monomial_text(p: &MultiPoly, m: &crate::poly::Monomial) -> String {
    MultiPoly::monomial(p.vars().clone(), m.clone(), ExactScalar::one()).to_string()
}

pub fn milnor_json(p: &MultiPoly) -> Result<Value, CliError> {
    let a = milnor::milnor(p)?;
    let basis: Vec<String> = a.standard_monomials().iter().map(|m| monomial_text(p, m)).collect();
    Ok(json!({
        "dimension": a.dimension(),
        "nil_index": a.nil_index(),
        "standard_monomials": basis,
        "socle": monomial_text(p, a.socle()),
        "grading": a.grading(),
    }))
}

pub fn associated_json(p: &MultiPoly) -> Result<Value, CliError> {
    let a = associated::associated_form_exp2(p)?;
    let form = associated::normalize(a.form());
    let mut terms: Vec<_> = form.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    terms.sort_by(|x, y| y.0.exps().cmp(x.0.exps()));
    let coefficients: Vec<Value> =
        terms.iter().map(|(m, c)| json!({ "monomial": monomial_text(&form, m), "coefficient": s(c) })).collect();
    Ok(json!({
        "degree": a.degree(),
        "form": form.to_string(),
        "coefficients": coefficients,
    }))
}

fn detect(p: &MultiPoly, requested: FamilyArg) -> Result<Family, CliError> {
    let found = verify::family_of(p).map_err(CliError::from)?;
    let wanted = match requested {
        FamilyArg::Auto => return Ok(found),
        FamilyArg::Quartic => Family::Quartic,
        FamilyArg::Quintic => Family::Quintic,
        FamilyArg::Sextic => Family::Sextic,
        FamilyArg::Octavic => Family::Octavic,
        FamilyArg::TernaryCubic => Family::TernaryCubic,
    };
    if wanted != found {
        return Err(CliError::Input(format!("form is a {found}, not a {wanted}")));
    }
    Ok(found)
}

/// Inserts `name` unless the value is undefined because a denominator vanishes.
fn put(m: &mut Map<String, Value>, name: &str, v: Result<ExactScalar, InvariantError>) -> Result<(), CliError> {
    match v {
        Ok(x) => {
            m.insert(name.into(), s(&x));
            Ok(())
        }
        Err(InvariantError::DivisionByVanishingInvariant(_)) => Ok(()),
        Err(e) => Err(e.into()),
    }
}

fn put_eight(m: &mut Map<String, Value>, family: Family, v: Result<Vec<ExactScalar>, InvariantError>) -> Result<(), CliError> {
    match v {
        Ok(xs) => {
            for (name, x) in family.names().iter().zip(&xs) {
                m.insert((*name).into(), s(x));
            }
            Ok(())
        }
        Err(InvariantError::DivisionByVanishingInvariant(_)) => Ok(()),
        Err(e) => Err(e.into()),
    }
}

pub fn invariants_json(p: &MultiPoly, family: FamilyArg) -> Result<Value, CliError> {
    let family = detect(p, family)?;
    let mut m = Map::new();
    if family == Family::TernaryCubic {
        let i = TernaryCubicInvariants::new(p)?;
        m.insert("I4".into(), s(&i.i4));
        m.insert("I6".into(), s(&i.i6));
        m.insert("Delta".into(), s(&i.delta));
        put(&mut m, "J", i.j())?;
        put(&mut m, "K", i.k())?;
        return Ok(Value::Object(m));
    }
    let q = BinaryForm::from_form(p)?;
    match family {
        Family::Quartic => {
            let i = QuarticInvariants::new(&q)?;
            m.insert("I2".into(), s(&i.i2));
            m.insert("I3".into(), s(&i.i3));
            m.insert("Delta".into(), s(&i.delta));
            put(&mut m, "J", i.j())?;
            put(&mut m, "K", i.k())?;
        }
        Family::Quintic => {
            let i = QuinticInvariants::new(&q)?;
            for (name, v) in [("T10", &i.t10), ("I4", &i.i4), ("I8", &i.i8), ("I12", &i.i12), ("Delta", &i.delta)] {
                m.insert(name.into(), s(v));
            }
            put(&mut m, "J", i.j())?;
            put(&mut m, "K", i.k())?;
            put(&mut m, "L", i.l())?;
        }
        Family::Sextic => {
            let i = SexticInvariants::with_i10(&q)?;
            for (name, v) in [("I2", &i.i2), ("I4", &i.i4), ("I6", &i.i6)] {
                m.insert(name.into(), s(v));
            }
            if let Some(x) = i.i10() {
                m.insert("I10".into(), s(x));
            }
            m.insert("Delta".into(), s(&i.delta));
            put(&mut m, "sJ", i.j())?;
            put(&mut m, "sK", i.k())?;
            put(&mut m, "sL", i.l())?;
            put_eight(&mut m, Family::Sextic, i.eight())?;
        }
        Family::Octavic => {
            let i = OctavicInvariants::new(&q)?;
            for (name, v) in [("I2", &i.i2), ("I3", &i.i3), ("I4", &i.i4), ("I5", &i.i5)] {
                m.insert(name.into(), s(v));
            }
            put_eight(&mut m, Family::Octavic, i.eight())?;
        }
        Family::TernaryCubic => unreachable!("handled above"),
    }
    Ok(Value::Object(m))
}

pub fn classify_json(p: &MultiPoly, diagnose: bool) -> Result<Value, CliError> {
    let q = BinaryForm::from_form(p)?;
    if q.degree() != 6 {
        return Err(SexticError::WrongDegree(q.degree()).into());
    }
    let class = sextic::classify(&q)?;
    let evidence = match &class.evidence {
        Evidence::Pattern(pattern) => json!({ "pattern": pattern }),
        Evidence::Fingerprint(values) => {
            let m: Map<String, Value> = Family::Sextic.names().iter().zip(values).map(|(n, v)| ((*n).into(), s(v))).collect();
            json!({ "fingerprint": m })
        }
    };
    let mut out = json!({ "label": class.label.to_string(), "evidence": evidence });
    if diagnose {
        let mut branches = sextic::eigencubics_numeric(&q, 50)?;
        let mut seen = Vec::new();
        branches.retain(|b| {
            let fresh = !seen.contains(&b.eigenvalue);
            seen.push(b.eigenvalue.clone());
            fresh
        });
        let report: Vec<Value> = branches
            .iter()
            .map(|b| {
                json!({
                    "eigenvalue": b.exact.as_ref().map_or_else(|| b.eigenvalue.clone(), ExactScalar::to_string),
                    "exact": b.exact.is_some(),
                    "eigencubics": b.cubics,
                    "square_free": b.square_free,
                })
            })
            .collect();
        out["eigencubics"] = Value::Array(report);
        out["square_free_discriminant"] = Value::Bool(binary::is_square_free(&q));
    }
    Ok(out)
}

pub fn equivalent_json(p: &MultiPoly, q: &MultiPoly) -> Result<Value, CliError> {
    let e = verify::equivalent(p, q)?;
    let fingerprints: Vec<Value> = e
        .fingerprints
        .iter()
        .map(|f| match f {
            Some(f) => Value::Object(f.family.names().iter().zip(&f.values).map(|(n, v)| ((*n).into(), s(v))).collect()),
            None => Value::Null,
        })
        .collect();
    Ok(json!({
        "verdict": e.verdict,
        "family": e.family.to_string(),
        "fingerprints": fingerprints,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("germlab").chain(args.iter().copied()))
    }

    #[test]
    fn quartic_invariants_output() {
        let o = run_args(&["invariants", "z1^4+z2^4"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(o.stdout, "{\"I2\":\"1\",\"I3\":\"0\",\"Delta\":\"1\",\"J\":\"1\"}\n");
    }

    #[test]
    fn classify_output() {
        let o = run_args(&["classify-sextic", "z1^3*z2^3"]);
        assert_eq!(o.stdout, "{\"label\":\"(iii)\",\"evidence\":{\"pattern\":[3,3]}}\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["invariants", "z1 + w"]).code, 1);
        assert_eq!(run_args(&["invariants", "z1^4+z2^4", "--bogus"]).code, 1);
        assert_eq!(run_args(&["milnor", "z1^3*z2^2"]).code, 2);
        assert_eq!(run_args(&["equivalent", "z1^5", "z1^5+z2^5"]).code, 2);
        assert_eq!(run_args(&["invariants", "z1^3+z2^3+z3^3+z1^2*z2"]).code, 1);
        assert_eq!(run_args(&["--help"]).code, 0);
    }

    #[test]
    fn field_spec() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap().radicand(), None);
        assert_eq!("Q(7)".parse::<FieldSpec>().unwrap().radicand(), Some(7));
        assert_eq!("Q(-39)".parse::<FieldSpec>().unwrap().radicand(), Some(-39));
        assert!("Q(4)".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn sqrt7_sextic_over_its_field() {
        let poly = "z1^6 + 18z1^5z2 + 40(1 - 2r)z1^3z2^3 + 32(115 - 41r)z2^6";
        let o = run_args(&["classify-sextic", poly, "--field", "Q(7)"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.starts_with("{\"label\":\"(vii)\""));
    }

    #[test]
    fn json_is_stable() {
        let a = run_args(&["milnor", "x^4 + 3x^2y^2 + y^4"]);
        let b = run_args(&["milnor", "x^4 + 3x^2y^2 + y^4"]);
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a.stdout).unwrap();
        assert_eq!(v["dimension"], 9);
        assert_eq!(v["nil_index"], 4);
    }

    #[test]
    fn verify_quartic_suite() {
        let o = run_args(&["verify", "quartic"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stderr.contains("quartic"));
    }
}
