// Solves for the constants linking J, K, L of a quintic to the
// invariants of its associated sextic, then tests them on a fresh quintic.

use germlab::invariants::{QuinticInvariants, SexticInvariants};
use germlab::verify::{associated_binary, derive_constants, predicted_bold_jkl, sampling};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let constants = derive_constants()?;
    for (k, c) in constants.c.iter().enumerate() {
        println!("c{} = {c}", k + 1);
    }
    let mut rng = sampling::rng(7);
    let q = sampling::square_free_integer_form(&mut rng, 5);
    let i = QuinticInvariants::new(&q)?;
    let predicted = predicted_bold_jkl(&constants.c, &i.j()?, &i.k()?, &i.l()?);
    let bold = SexticInvariants::with_i10(&associated_binary(&q)?)?;
    let actual = [bold.j()?, bold.k()?, bold.l()?];
    println!("random quintic {:?}", q.coeffs());
    println!("predicted {predicted:?}");
    assert_eq!(predicted.to_vec(), actual.to_vec());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
