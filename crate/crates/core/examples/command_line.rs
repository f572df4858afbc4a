// Drives the command-line front end in-process.

use germlab::cli;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let commands: [&[&str]; 4] = [
        &["germlab", "invariants", "z1^4+z2^4"],
        &["germlab", "classify-sextic", "z1^3*z2^3"],
        &["germlab", "associated-form", "x^4 + 6x^2y^2 + y^4"],
        &["germlab", "equivalent", "z1^5+z2^5", "z1^5+z1*z2^4"],
    ];
    for args in commands {
        let out = cli::run(args.iter().copied());
        print!("$ {}\n{}", args.join(" "), out.stdout);
        if out.code != 0 {
            return Err(out.stderr.into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
