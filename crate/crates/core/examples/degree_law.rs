//! The two degree expressions and the window, over random instances.

use jonquieres::fixtures::{random_instance, standard_involution, Profile};
use jonquieres::implicitize::{degree_report, implicitize};

fn main() -> jonquieres::Result<()> {
    let c = standard_involution();
    for seed in 0..8 {
        let p = random_instance(&c, 1 + (seed % 2) as u32, Profile::Generic, seed)?;
        let r = degree_report(&p, &implicitize(&p)?)?;
        println!(
            "seed {seed}: deg F = {}, via g = {}, via f = {}, window {:?} holds {:?}",
            r.actual,
            r.via_g,
            r.via_f,
            r.window,
            r.window_holds()
        );
    }
    Ok(())
}
