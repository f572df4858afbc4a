// Associated forms of a quartic and a ternary cubic, by both routes.

use germlab::associated::{associated_form_exp2, associated_form_normalform, proportional};
use germlab::parse::parse_form;
use germlab::verify::families;
use germlab::ExactScalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = ExactScalar::from_integer(3);
    let q = families::q_t(&t).to_poly(families::z2());
    let a = associated_form_exp2(&q)?;
    let b = associated_form_normalform(&q)?;
    println!("q_3          = {q}");
    println!("associated   = {}", a.form());
    assert!(proportional(a.form(), b.form()).is_some());
    let expected = families::bold_q_t(&t).to_poly(germlab::associated::w_vars(2));
    assert!(proportional(a.form(), &expected).is_some());

    let c = parse_form("z1^3 + z2^3 + z3^3 + 2z1z2z3", None)?;
    let bold = associated_form_exp2(&c)?;
    println!("c_2          = {c}");
    println!("associated   = {}", bold.normalized().form());
    assert!(proportional(bold.form(), &families::bold_c_t(&ExactScalar::from_integer(2))).is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
