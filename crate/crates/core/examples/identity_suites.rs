// Runs identity suites and prints the summary table. Pass suite names on
// the command line, or `all`.

use germlab::cli::verify_table;
use germlab::verify::{run_suite, seed_from_env, Suite, DEFAULT_SEED};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run_suites(&[Suite::Quartic, Suite::TernaryCubic, Suite::SexticTable])
}

fn run_suites(suites: &[Suite]) -> Result<(), Box<dyn std::error::Error>> {
    let seed = seed_from_env(DEFAULT_SEED);
    let reports: Vec<_> = suites.iter().map(|s| run_suite(*s, seed)).collect();
    print!("{}", verify_table(&reports));
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err("some identities failed".into())
    }
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        return run_example();
    }
    let suites: Vec<Suite> = if args.iter().any(|a| a == "all") {
        Suite::ALL.to_vec()
    } else {
        args.iter().map(|a| a.parse()).collect::<Result<_, _>>()?
    };
    run_suites(&suites)
}
