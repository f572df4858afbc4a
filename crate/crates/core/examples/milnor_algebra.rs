// Milnor algebra of a binary quintic: monomial basis, grading, socle and
// the Gorenstein pairing.

use germlab::milnor;
use germlab::parse::parse_form;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = parse_form("z1^5 + z1^4*z2 + z1^3*z2^2 + z2^5", None)?;
    let a = milnor::milnor(&f)?;
    println!("form        {f}");
    println!("dimension   {}", a.dimension());
    println!("nil-index   {}", a.nil_index());
    println!("socle       {:?}", a.socle().exps());
    println!("grading     {:?}", a.grading());
    assert_eq!(a.dimension(), 16);
    assert_eq!(a.nil_index(), 6);
    assert!(a.gorenstein_pairing_holds());

    let cubic = parse_form("x^3 + y^3 + z^3 + 6x*y*z", None)?;
    let b = milnor::milnor(&cubic)?;
    println!("ternary cubic: dimension {}, nil-index {}", b.dimension(), b.nil_index());
    assert_eq!((b.dimension(), b.nil_index()), (8, 3));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
