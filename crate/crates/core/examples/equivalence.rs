// Deciding linear equivalence by absolute invariants.

use germlab::parse::parse_form;
use germlab::verify::{equivalent, families, Verdict};
use germlab::ExactScalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = parse_form("z1^5 - 2z1^3z2^2 + 3z2^5", None)?;
    let c = germlab::linalg::from_integers(&[&[1, 2], &[1, 3]]);
    let q = p.linear_change(&c)?;
    let e = equivalent(&p, &q)?;
    println!("{p}  vs  {q}: {:?}", e.verdict);
    assert_eq!(e.verdict, Verdict::Equivalent);

    // equal J and K, opposite L
    let t1 = &(&ExactScalar::one() + &ExactScalar::sqrt_of(6)?) / &ExactScalar::from_integer(2);
    let t2 = &(&ExactScalar::one() + &ExactScalar::sqrt_of(-39)?) / &ExactScalar::from_integer(2);
    let r1 = families::rho_t(&t1).to_poly(families::z2());
    let r2 = families::rho_t(&t2).to_poly(families::z2());
    let e = equivalent(&r1, &r2)?;
    for f in e.fingerprints.iter().flatten() {
        println!("  (J, K, L) = {:?}", f.values);
    }
    assert_eq!(e.verdict, Verdict::Inequivalent);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
