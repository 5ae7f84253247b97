//! Syzygetic polynomials and their extraneous factors.

use jonquieres::fixtures;
use jonquieres::implicitize::syzygetic_polynomials;

fn main() -> jonquieres::Result<()> {
    for (name, p) in [
        ("plane", fixtures::plane_example([1, 2, 3])),
        ("p3", fixtures::p3_example()),
        ("nzd", fixtures::nzd_plane_example()),
    ] {
        println!("{name}:");
        for s in syzygetic_polynomials(&p)? {
            println!(
                "  conductor {:<6} degree {}  extraneous factor {}",
                s.conductor.to_string(),
                s.polynomial.total_degree().unwrap_or(0),
                s.extraneous_factor
            );
        }
    }
    Ok(())
}
