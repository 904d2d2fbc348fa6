use qhurwitz::partition::{enumerate_partitions, Partition};

/// Walk the partitions of 5 and print the usual statistics.
pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let parts = enumerate_partitions(5)?;
    println!("{:>12} {:>5} {:>6} {:>6} {:>5}", "lambda", "z", "class", "hooks", "dim");
    for p in &parts {
        println!(
            "{:>12} {:>5} {:>6} {:>6} {:>5}",
            p.to_string(),
            p.z(),
            p.class_size(),
            p.hook_product(),
            p.dimension()
        );
    }
    let total: num_bigint::BigInt = parts.iter().map(|p| p.dimension() * p.dimension()).sum();
    assert_eq!(total, 120.into());

    let lambda = Partition::new(vec![3, 1])?;
    println!("contents of {lambda}: {:?}", lambda.contents());
    println!("(u)_{lambda} = {}", lambda.pochhammer());
    println!("conjugate: {}", lambda.conjugate());
    assert!(Partition::new(vec![2, 2])?.dominated_by(&lambda));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
