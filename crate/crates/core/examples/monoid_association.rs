//! The associated monoid parametrization and the saturation identities.

use jonquieres::fixtures;
use jonquieres::implicitize::implicitize;
use jonquieres::rees::{monoid_association, saturation_identities};

fn main() -> jonquieres::Result<()> {
    for (name, p) in [
        ("plane", fixtures::plane_example([1, 2, 3])),
        ("p3", fixtures::p3_example()),
    ] {
        let m = monoid_association(&p, &implicitize(&p)?)?;
        println!("{name}: monoid map {:?}", m.parametrization.coords());
        println!(
            "  F vanishes with sign +: {}, with sign -: {}",
            m.positive_sign_vanishes, m.negative_sign_vanishes
        );
        println!(
            "  same equation {}, composition order {:?}",
            m.same_equation,
            m.composition_order()
        );
        let s = saturation_identities(&p, &m.parametrization)?;
        println!(
            "  saturations: forward {} (exponent {:?}), backward {} (exponent {:?}), unsaturated {}",
            s.forward, s.forward_exponent, s.backward, s.backward_exponent, s.unsaturated_forward
        );
    }
    Ok(())
}
