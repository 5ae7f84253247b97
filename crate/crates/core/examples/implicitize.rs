//! Closed-form implicit equations of the two worked instances.

use jonquieres::fixtures;
use jonquieres::implicitize::{classify_case, implicitize};

fn main() -> jonquieres::Result<()> {
    for (name, p) in [
        ("plane", fixtures::plane_example([1, 2, 3])),
        ("p3", fixtures::p3_example()),
    ] {
        let m = implicitize(&p)?;
        println!("{name}: case {}", classify_case(&p)?.as_str());
        println!("  F = {}", m.f);
        println!("  delta = {}", m.delta);
        if let Some(q) = &m.stripped_gcd {
            println!("  stripped gcd = {q}");
        }
    }
    Ok(())
}
