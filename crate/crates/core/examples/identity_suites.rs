// Run two of the identity suites with a small range and a fixed seed.

use qhurwitz::verify::{run, Criterion, VerifyOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let opts = VerifyOptions {
        n_max: 3,
        d_max: 2,
        seed: 7,
        ..VerifyOptions::default()
    };
    for c in [Criterion::PathEndomorphism, Criterion::Pochhammer] {
        let report = run(c, &opts)?;
        print!("{}", report.render());
        assert!(report.passed());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
