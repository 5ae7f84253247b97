//! Birational downgrading and the downgraded Rees ideal.

use jonquieres::cli::downgrade_membership;
use jonquieres::fixtures;
use jonquieres::rees::downgraded_rees_ideal;

fn main() -> jonquieres::Result<()> {
    let p = fixtures::plane_example([1, 2, 3]);
    let d = downgraded_rees_ideal(&p)?;
    for (j, chain) in d.chains.iter().enumerate() {
        println!("syzygy biform {j}: {}", chain.biform);
        for (k, q) in chain.downgrades.iter().enumerate() {
            println!("  downgrade {k}: {q}");
        }
        if let Some(e) = &chain.extraneous_factor {
            println!("  extraneous factor: {e}");
        }
    }
    println!(
        "contained {}, codim {:?} ({}), divisible {}",
        d.contained, d.codim, d.codimension, d.divisible
    );
    println!("random members: {}", downgrade_membership(&p, 10, 1)?);
    Ok(())
}
