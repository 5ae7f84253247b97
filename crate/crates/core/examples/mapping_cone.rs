//! Conductor, content map and the mapping-cone syzygy matrix.

use jonquieres::cli::phi_twist_bound;
use jonquieres::fixtures;
use jonquieres::syzygies::{
    conductor_data, default_syzygy_bound, mapping_cone_matrix, syzygy_matrix, verify_syzygy_generation,
};

fn main() -> jonquieres::Result<()> {
    let p = fixtures::plane_example([1, 2, 3]);
    let i = p.base_ideal();
    let data = conductor_data(&i, p.g())?;
    println!("conductor: {:?} ({})", data.conductors, data.tag.as_str());
    let phi = syzygy_matrix(i.generators(), phi_twist_bound(&p))?;
    let psi = mapping_cone_matrix(i.generators(), &phi, p.f(), p.g(), &data)?;
    for r in 0..psi.nrows() {
        let row: Vec<String> = (0..psi.ncols()).map(|c| psi.entry(r, c).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }
    println!("column twists {:?}", psi.col_twists());
    let j = p.jonquieres_ideal().generators().to_vec();
    let check = verify_syzygy_generation(&j, &psi, default_syzygy_bound(&psi))?;
    for (mu, kernel, span) in &check.degrees {
        println!("  degree {mu}: syzygies {kernel}, spanned {span}");
    }
    let dropped = verify_syzygy_generation(&j, &psi.without_column(3), check.bound)?;
    println!(
        "without the last column: first gap in degree {:?}",
        dropped.first_failure()
    );
    Ok(())
}
