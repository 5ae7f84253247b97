//! The Eulerian equation of a polar Cremona map, checked against the
//! general formula.

use jonquieres::fixtures;
use jonquieres::implicitize::{eulerian_equation, implicitize, JonquieresData};
use jonquieres::poly::{int, Polynomial, VariableSet};

fn main() -> jonquieres::Result<()> {
    let x = VariableSet::indexed("x", 3);
    let g = Polynomial::parse(&x, "x0*x1*x2")?;
    let inverse = fixtures::standard_involution().inverse;
    let lambda = [int(1), int(2), int(3)];
    let e = eulerian_equation(&g, &inverse, &lambda)?;
    println!("Eulerian F = {}", e.f);

    let p = JonquieresData::parse(fixtures::standard_involution(), "x0 + 2*x1 + 3*x2", "x0*x1*x2")?;
    let general = implicitize(&p)?;
    println!(
        "agrees with the general formula: {}",
        general.f.is_scalar_multiple_of(&e.f)
    );
    Ok(())
}
