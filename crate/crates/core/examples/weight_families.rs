// Weight generating series `G(z) = Σ g_j z^j` for each family, with `c = (1, 1/2)`.

use qhurwitz::family::{FamilyKind, WeightFamily};
use qhurwitz::partition::Partition;
use qhurwitz::scalar::{ratio, Param};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c = vec![ratio(1, 1), ratio(1, 2)];
    for kind in FamilyKind::ALL {
        let fam = WeightFamily::new(kind, c.clone());
        let series = fam.series(3)?;
        println!("{fam}");
        for (j, g) in series.coeffs().iter().enumerate() {
            println!("  g_{j} = {g}");
        }
    }

    let mac = WeightFamily::new(FamilyKind::Macdonald, c).bind(Param::Q, ratio(1, 3))?;
    let lambda = Partition::new(vec![2, 1])?;
    println!("path weight at q = 1/3 for {lambda}: {}", mac.path_weight(&lambda)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
