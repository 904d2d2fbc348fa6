// Jucys-Murphy elements, the class algebra, and transposition paths in S_4.

use qhurwitz::group_algebra::{enumerate_paths, CentralBasis, CentralElement, GroupElement};
use qhurwitz::partition::{enumerate_partitions, Partition};
use qhurwitz::scalar::Scalar;
use std::collections::BTreeMap;

fn show(coeffs: &BTreeMap<Partition, Scalar>) -> String {
    let terms: Vec<String> = coeffs.iter().map(|(k, v)| format!("({v})*{k}")).collect();
    terms.join(" + ")
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 4;
    // J_2 + J_3 + J_4 is the sum of all transpositions.
    let jm_sum = (2..=n).fold(GroupElement::zero(n), |acc, b| acc.add(&GroupElement::jucys_murphy(n, b)));
    let transpositions = GroupElement::class_sum(&Partition::new(vec![2, 1, 1])?)?;
    assert_eq!(jm_sum, transpositions);

    let c2 = CentralElement::class_sum(&Partition::new(vec![2, 1, 1])?);
    let square = c2.multiply(&c2)?;
    println!("C_(2,1,1)^2 = {}", show(square.coeffs()));
    for lambda in enumerate_partitions(n)? {
        println!("  eigenvalue on {lambda}: {}", c2.eigenvalue(&lambda)?);
    }
    let f = square.to_basis(CentralBasis::F)?;
    println!("in idempotents: {}", show(f.coeffs()));

    let paths = enumerate_paths(n, 2)?;
    let identity = Partition::ones(n);
    for ((sig, from, to), count) in paths.counts() {
        if from == &identity {
            println!("  sig {sig}: {from} -> {to}: {count}");
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
