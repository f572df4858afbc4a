// Classifies the seven sextics outside Sylvester's canonical form and a
// generic sextic, with the eigencubics of Q-hat as a diagnostic.

use germlab::sextic::{self, SexticLabel, EXCEPTIONAL};
use germlab::verify::families;
use germlab::BinaryForm;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (label, text) in EXCEPTIONAL {
        let class = sextic::classify(&families::exceptional(label))?;
        println!("{label:<6} {text:<60} -> {}", class.label);
        assert_eq!(class.label, label);
    }
    let sqrt7 = sextic::classify(&families::sqrt7_sextic())?;
    println!("sextic over Q(sqrt 7) -> {}", sqrt7.label);
    assert_eq!(sqrt7.label, SexticLabel::VII);

    let generic = BinaryForm::from_integers(&[1, 2, 0, -3, 1, 0, 5]);
    let class = sextic::classify(&generic)?;
    println!("generic -> {}", class.label);
    for branch in sextic::eigencubics_numeric(&generic, 40)? {
        println!("  lambda = {}  square-free: {}", branch.eigenvalue, branch.square_free);
    }
    assert_eq!(class.label, SexticLabel::SylvesterGeneric);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
