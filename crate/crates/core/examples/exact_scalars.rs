// Exact arithmetic in Q(q, t): parsing, field operations, substitution.

use qhurwitz::scalar::{ratio, Param, ParamSet, Scalar};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = ParamSet::of(&[Param::Q, Param::T]);
    let x = Scalar::parse_in("(1 - t)/(1 - q)", ctx)?;
    let y = Scalar::parse_in("(1 - t^2)/(1 - q^2)", ctx)?;

    let ratio_xy = y.checked_div(&x)?;
    println!("g_2 / g_1 = {ratio_xy}");
    assert_eq!(ratio_xy, Scalar::parse_in("(1 + t)/(1 + q)", ctx)?);

    let at_point = ratio_xy.eval(&[(Param::Q, ratio(1, 3)), (Param::T, ratio(2, 5))])?;
    println!("at q = 1/3, t = 2/5: {at_point}");
    assert_eq!(at_point, ratio(21, 20));

    let diagonal = x.substitute(Param::T, &ratio(0, 1))?;
    println!("t = 0: {diagonal}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
