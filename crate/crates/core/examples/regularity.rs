//! Regularity of the base ideal and the bounds relating it to (If, g).

use jonquieres::fixtures;
use jonquieres::syzygies::{format_reg, regularity_bound_checks, regularity_dim1};

fn main() -> jonquieres::Result<()> {
    let p = fixtures::plane_example([1, 2, 3]);
    let r = regularity_dim1(&p.base_ideal(), p.d(), 7)?;
    println!("Reg(R/I) = {}, regular sequence {:?}", format_reg(r.reg), r.alpha);
    for p in [fixtures::plane_example([1, 2, 3]), fixtures::nzd_plane_example()] {
        let data = regularity_bound_checks(&p, 7)?;
        println!("g = {}", p.g());
        for c in data.checks {
            println!(
                "  {:<20} {:<10} {} vs {}",
                c.name,
                c.verdict.to_string(),
                format_reg(c.lhs),
                format_reg(c.rhs)
            );
        }
    }
    Ok(())
}
