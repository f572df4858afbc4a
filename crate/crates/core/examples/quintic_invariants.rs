// Invariants of binary quintics: transvectant, discriminant, I12, the
// absolute invariants J, K, L and the square of I18.

use germlab::invariants::{i18_square_check, QuinticInvariants};
use germlab::verify::families;
use germlab::ExactScalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (s, t) = (ExactScalar::from_integer(1), ExactScalar::from_integer(1));
    let q = families::f_st(&s, &t);
    let i = QuinticInvariants::new(&q)?;
    println!("f_(1,1): T10 = {}, Delta = {}, I12 = {}", i.t10, i.delta, i.i12);
    println!("         J = {}, K = {}, L = {}", i.j()?, i.k()?, i.l()?);
    assert_eq!(i.delta, ExactScalar::ratio(4112, 3125));
    assert_eq!(i.delta, &families::d_st(&s, &t) / &ExactScalar::from_integer(3125));
    assert!(i18_square_check(&q)?);

    let phi = QuinticInvariants::new(&families::phi_t(&ExactScalar::from_integer(2)))?;
    println!("phi_2:   K = {}, L = {}", phi.k()?, phi.l()?);
    assert!(phi.k()?.is_zero() && phi.l()?.is_zero());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
