//! Acceptance criteria 1–10. Prints one line per criterion; known misprints
//! in printed formulas are reported as FAIL on their own line and are
//! required to keep failing.

use std::time::{Duration, Instant};

use germlab::verify::{self, run_suite, IdentityReport, Suite, DEFAULT_SEED};

/// Every identity below is exact.
const EXACT_TOLERANCE: u32 = 0;
/// Numeric eigencubic diagnostic: digits of working precision and the
/// square-free threshold `10^-30`.
const EIGEN_PRECISION: u32 = 50;
const EIGEN_TOLERANCE_DIGITS: u32 = 30;

struct Criterion {
    number: u32,
    title: &'static str,
    suites: &'static [Suite],
    limit: Duration,
}

const CRITERIA: [Criterion; 10] = [
    Criterion { number: 1, title: "quartic closure", suites: &[Suite::Quartic], limit: Duration::from_secs(1) },
    Criterion { number: 2, title: "ternary-cubic closure", suites: &[Suite::TernaryCubic], limit: Duration::from_secs(5) },
    Criterion { number: 3, title: "structure constants", suites: &[Suite::Structure], limit: Duration::from_secs(10) },
    Criterion {
        number: 4,
        title: "quintic identity certification",
        suites: &[Suite::QuinticFamilies],
        limit: Duration::from_secs(120),
    },
    Criterion { number: 5, title: "derived constants", suites: &[Suite::QuinticFinal], limit: Duration::from_secs(60) },
    Criterion {
        number: 6,
        title: "sextic-octavic closure",
        suites: &[Suite::SexticOctavic],
        limit: Duration::from_secs(120),
    },
    Criterion { number: 7, title: "appendix oracle", suites: &[Suite::Appendix], limit: Duration::from_secs(60) },
    Criterion { number: 8, title: "sextic (vii) table", suites: &[Suite::SexticTable], limit: Duration::from_secs(30) },
    Criterion { number: 9, title: "classifier", suites: &[Suite::Classifier], limit: Duration::from_secs(120) },
    Criterion { number: 10, title: "property suites", suites: &[Suite::Properties], limit: Duration::from_secs(180) },
];

struct Outcome {
    pass: bool,
    misprints_reproduced: bool,
}

fn evaluate(c: &Criterion, seed: u64) -> Outcome {
    let start = Instant::now();
    let mut report = IdentityReport::new(c.title);
    for s in c.suites {
        report.merge(run_suite(*s, seed));
    }
    let elapsed = start.elapsed();
    let failed: Vec<&str> = report.failures().map(|x| x.name.as_str()).collect();
    let in_time = elapsed <= c.limit;
    let pass = failed.is_empty() && in_time;
    println!(
        "criterion {:>2} {:<32} {}  ({} checks, {:.2?}, limit {:?})",
        c.number,
        c.title,
        if pass { "PASS" } else { "FAIL" },
        report.checks.len(),
        elapsed,
        c.limit
    );
    for name in failed.iter().take(10) {
        println!("             failed: {name}");
    }
    if !in_time {
        println!("             over the time limit");
    }
    let misprinted: Vec<&str> = report.defects().filter(|x| !x.pass).map(|x| x.name.as_str()).collect();
    if !misprinted.is_empty() {
        let total = report.defects().count();
        println!(
            "criterion {:>2} {:<32} FAIL  as printed: {} of {} checks of misprinted formulas disagree (known misprint)",
            c.number,
            format!("{} (printed)", c.title),
            misprinted.len(),
            total
        );
        for name in misprinted.iter().take(3) {
            println!("             {name}");
        }
    }
    Outcome { pass, misprints_reproduced: report.defects_reproduced() }
}

#[test]
fn acceptance_criteria() {
    assert_eq!(EXACT_TOLERANCE, 0);
    assert_eq!(verify::EIGEN_PRECISION, EIGEN_PRECISION);
    assert_eq!(verify::EIGEN_TOLERANCE_DIGITS, EIGEN_TOLERANCE_DIGITS);
    let seed = verify::seed_from_env(DEFAULT_SEED);
    println!("seed {seed}");
    let outcomes: Vec<(u32, Outcome)> = CRITERIA.iter().map(|c| (c.number, evaluate(c, seed))).collect();
    let failing: Vec<u32> = outcomes.iter().filter(|(_, o)| !o.pass).map(|(n, _)| *n).collect();
    let lost: Vec<u32> = outcomes.iter().filter(|(_, o)| !o.misprints_reproduced).map(|(n, _)| *n).collect();
    assert!(failing.is_empty(), "criteria failing: {failing:?}");
    assert!(lost.is_empty(), "misprint checks no longer fail for criteria {lost:?}");
}
