//! Verify a Cremona pair and print its inversion factors.

use jonquieres::birational::{verify_cremona, RationalMapData};
use jonquieres::poly::VariableSet;

fn main() -> jonquieres::Result<()> {
    let x = VariableSet::indexed("x", 3);
    let y = VariableSet::indexed("y", 3);
    let g = RationalMapData::parse(&x, &y, &["x0^2", "x0*x1", "x1*x2"])?;
    let ginv = RationalMapData::parse(&y, &x, &["y0*y1", "y1^2", "y0*y2"])?;
    let c = verify_cremona(&g, &ginv)?;
    println!("D = {}", c.target_factor);
    println!("C = {}", c.source_factor);
    println!("degree identity holds: {}", c.degree_identity_holds());

    let wrong = RationalMapData::parse(&y, &x, &["y0*y1", "y1^2", "y0*y2 + y1*y2"])?;
    match verify_cremona(&g, &wrong) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
