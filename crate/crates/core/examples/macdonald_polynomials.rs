use qhurwitz::partition::{enumerate_partitions, Partition};
use qhurwitz::scalar::{Param, ParamSet, Scalar};
use qhurwitz::symfun::SymmetricAlgebra;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = ParamSet::of(&[Param::Q, Param::T]);
    let alg = SymmetricAlgebra::new(ctx.var(Param::Q)?, ctx.var(Param::T)?, Scalar::one())?;
    for lambda in enumerate_partitions(3)? {
        let p = alg.macdonald_p(&lambda)?;
        println!("P_{lambda}:");
        for (mu, c) in p.coeffs() {
            if !c.is_zero() {
                println!("    m_{mu}: {c}");
            }
        }
        println!("  b_{lambda} = {}", alg.b_lambda(&lambda)?);
    }

    // At q = t the Macdonald polynomials are Schur functions.
    let t = ParamSet::of(&[Param::T]).var(Param::T)?;
    let diag = SymmetricAlgebra::new(t.clone(), t, Scalar::one())?;
    let lambda = Partition::new(vec![2, 1])?;
    assert_eq!(diag.to_p(&diag.macdonald_p(&lambda)?)?, diag.schur(&lambda)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
