//! Elimination oracle versus the closed form.

use std::time::Instant;

use jonquieres::fixtures;
use jonquieres::implicitize::{implicitize, oracle_implicitize};

fn main() -> jonquieres::Result<()> {
    for (name, p) in [
        ("identity", fixtures::identity_example()),
        ("plane", fixtures::plane_example([1, 2, 3])),
        ("p3", fixtures::p3_example()),
    ] {
        let t = Instant::now();
        let closed = implicitize(&p)?.f;
        let t_closed = t.elapsed();
        let t = Instant::now();
        let eliminated = oracle_implicitize(&p.parametrization(), p.extended_target())?;
        let t_oracle = t.elapsed();
        println!(
            "{name}: agree {} (closed form {:?}, elimination {:?})",
            eliminated.is_scalar_multiple_of(&closed),
            t_closed,
            t_oracle
        );
    }
    Ok(())
}
