// `F^d(μ, ν)` for the Macdonald family, computed through characters and
// cross-checked against path enumeration.

use qhurwitz::family::{FamilyKind, WeightFamily};
use qhurwitz::group_algebra::fd_bruteforce;
use qhurwitz::hurwitz::fd_character;
use qhurwitz::scalar::ratio;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let fam = WeightFamily::new(FamilyKind::Macdonald, vec![ratio(1, 1)]);
    for d in 0..=2 {
        let table = fd_character(3, d, &fam)?;
        println!("d = {d}");
        for (mu, nu, v) in table.cells() {
            println!("  F({mu}, {nu}) = {v}");
        }
        assert!(table.first_difference(&fd_bruteforce(3, d, &fam)?).is_none());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
