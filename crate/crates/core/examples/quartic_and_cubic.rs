// The associated form of a quartic or ternary cubic recovers its
// j-invariant.

use germlab::associated::associated_form_exp2;
use germlab::invariants::{QuarticInvariants, TernaryCubicInvariants};
use germlab::verify::{associated_binary, families};
use germlab::ExactScalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for t in [1, 3, 5] {
        let t = ExactScalar::from_integer(t);
        let q = families::q_t(&t);
        let j = QuarticInvariants::new(&q)?.j()?;
        let k = QuarticInvariants::new(&associated_binary(&q)?)?.k()?;
        println!("t = {t}: J(q_t) = {j}, K(associated) = {k}");
        assert_eq!(j, k);
    }
    for t in [1, 2, 12] {
        let t = ExactScalar::from_integer(t);
        let c = families::c_t(&t);
        let j = TernaryCubicInvariants::new(&c)?.j()?;
        let k = TernaryCubicInvariants::new(associated_form_exp2(&c)?.form())?.k()?;
        println!("t = {t}: J(c_t) = {j}, K(associated) = {k}");
        assert_eq!(j, k);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
