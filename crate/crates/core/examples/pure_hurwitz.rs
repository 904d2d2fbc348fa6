use qhurwitz::hurwitz::{pure_hurwitz, pure_hurwitz_bruteforce};
use qhurwitz::partition::Partition;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = Partition::new(vec![2, 1, 1])?;
    for k in 2..=4 {
        let profiles = vec![t.clone(); k];
        let frobenius = pure_hurwitz(&profiles, 4)?;
        let counted = pure_hurwitz_bruteforce(&profiles, 4)?;
        println!("{k} simple branch points over S_4: {frobenius}");
        assert_eq!(frobenius, counted);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
