use qhurwitz::family::{FamilyKind, WeightFamily};
use qhurwitz::hurwitz::{branch_configurations, configuration_weight, hde_all};
use qhurwitz::scalar::ratio;

/// Colour configurations for `n = 3, d = 2` and the resulting `H^(d,e)` tables.
pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let fam = WeightFamily::new(FamilyKind::Macdonald, vec![ratio(1, 1)]);
    for cfg in branch_configurations(3, 2, FamilyKind::Macdonald)? {
        let profiles: Vec<String> = cfg.profiles().map(ToString::to_string).collect();
        println!("[{}] -> {}", profiles.join(" "), configuration_weight(&cfg, &fam)?);
    }
    for table in hde_all(3, 2, &fam)? {
        println!("e = {}", table.e().unwrap_or(0));
        print!("{}", table.to_csv());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
