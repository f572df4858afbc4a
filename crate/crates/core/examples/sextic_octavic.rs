// A sextic in Sylvester form, its associated octavic, and the eight
// absolute invariants that agree across the two.

use germlab::invariants::{Family, OctavicInvariants, SexticInvariants};
use germlab::verify::{self, associated_binary, families, proportional_forms};
use germlab::ExactScalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let abcd = [2, -1, 3, 1].map(ExactScalar::from_integer);
    let q = families::sylvester(&abcd[0], &abcd[1], &abcd[2], &abcd[3]);
    let bold = associated_binary(&q)?;
    println!("sextic   {:?}", q.monomial_coeffs());
    println!("octavic  {:?}", bold.monomial_coeffs());
    let lhs = OctavicInvariants::new(&bold)?.eight()?;
    let rhs = SexticInvariants::new(&q)?.eight()?;
    for (name, (a, b)) in Family::Sextic.names().iter().zip(lhs.iter().zip(&rhs)) {
        println!("  {name}: {a} = {b}");
        assert_eq!(a, b);
    }
    let mut coeffs = verify::appendix_coefficients();
    coeffs[6] = verify::appendix_c6_corrected();
    let c: Vec<ExactScalar> = coeffs.iter().map(|p| p.evaluate(&abcd)).collect();
    assert!(proportional_forms(&bold, &germlab::BinaryForm::from_monomial_coeffs(&c)));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
