// Content-product coefficients `r_λ(N)` and the power-sum expansion of the
// tau function, for the complete-homogeneous family with `N = 1`.

use qhurwitz::family::{FamilyKind, WeightFamily};
use qhurwitz::scalar::ratio;
use qhurwitz::tau::{powersum_to_schur, tau_tables};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let fam = WeightFamily::new(FamilyKind::Complete, vec![ratio(1, 2)]);
    let table = tau_tables(3, 2, 1, &fam)?;
    for (lambda, r) in &table.schur {
        println!("r_{lambda}(1) = {:?}", r.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    let slice = table.powersum_slice(2, 1);
    for ((mu, nu), v) in &slice {
        println!("[z^1] p_{mu} p_{nu}: {v}");
    }
    let back = powersum_to_schur(2, 1, &table.powersum)?;
    for (lambda, v) in &back {
        println!("s_{lambda} coefficient at z^1: {v}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
