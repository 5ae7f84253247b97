//! Built-in Cremona maps and the worked instances used by the examples,
//! the self-test and the acceptance suite.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::birational::{verify_cremona, RationalMapData, VerifiedCremona};
use crate::error::{Error, Result};
use crate::implicitize::JonquieresData;
use crate::poly::{random_form_with, Polynomial, VariableSet};

/// Seeds tried by [`random_instance`] before giving up.
pub const INSTANCE_RETRIES: u64 = 16;

fn xs(n: usize) -> VariableSet {
    VariableSet::indexed("x", n + 1)
}

fn ys(n: usize) -> VariableSet {
    VariableSet::indexed("y", n + 1)
}

fn cremona(n: usize, forward: &[&str], inverse: &[&str]) -> VerifiedCremona {
    let (x, y) = (xs(n), ys(n));
    let g = RationalMapData::parse(&x, &y, forward).expect("fixture parses");
    let gi = RationalMapData::parse(&y, &x, inverse).expect("fixture parses");
    verify_cremona(&g, &gi).expect("fixture is a Cremona pair")
}

/// `(x1x2 : x0x2 : x0x1)`, its own inverse.
pub fn standard_involution() -> VerifiedCremona {
    cremona(2, &["x1*x2", "x0*x2", "x0*x1"], &["y1*y2", "y0*y2", "y0*y1"])
}

/// `(x0^2 : x0x1 : x1x2)` with inverse `(y0y1 : y1^2 : y0y2)`.
pub fn tangent_quadratic() -> VerifiedCremona {
    cremona(2, &["x0^2", "x0*x1", "x1*x2"], &["y0*y1", "y1^2", "y0*y2"])
}

/// The 4×3 linear matrix whose maximal minors define [`p3_cubic`].
pub fn p3_matrix() -> Vec<Vec<Polynomial>> {
    let x = xs(3);
    [
        ["0", "0", "-x1"],
        ["-x0", "x0 - x1", "x1"],
        ["x0", "0", "0"],
        ["x2", "-x3", "x3"],
    ]
    .iter()
    .map(|row| {
        row.iter()
            .map(|e| Polynomial::parse(&x, e).expect("fixture parses"))
            .collect()
    })
    .collect()
}

/// A cubic determinantal Cremona map of `P^3` with quadratic inverse.
pub fn p3_cubic() -> VerifiedCremona {
    cremona(
        3,
        &[
            "x0^2*x1 - x0*x1^2",
            "x0*x1*x2 - x0*x1*x3 - x1^2*x2",
            "x0*x1*x3",
            "-x0^2*x3",
        ],
        &["-y0*y3", "y0*y2", "-y1*y3 - y2*y3", "-y2^2 - y2*y3"],
    )
}

/// Standard involution with `f = λ0x0 + λ1x1 + λ2x2` and
/// `g = x0^2x1 − x2^3`.
pub fn plane_example(lambda: [i64; 3]) -> JonquieresData {
    let f = format!("{}*x0 + {}*x1 + {}*x2", lambda[0], lambda[1], lambda[2]);
    JonquieresData::parse(standard_involution(), &f, "x0^2*x1 - x2^3").expect("valid instance")
}

/// Standard involution with a cubic avoiding all three base points, so that
/// `g` is a non-zero-divisor modulo the base ideal.
pub fn nzd_plane_example() -> JonquieresData {
    JonquieresData::parse(standard_involution(), "x0 + 2*x1 + 3*x2", "x0^3 + x1^3 + x2^3").expect("valid instance")
}

/// The cubic map of `P^3` with `f = x0 + x2` and `g = x0^3x3`.
pub fn p3_example() -> JonquieresData {
    JonquieresData::parse(p3_cubic(), "x0 + x2", "x0^3*x3").expect("valid instance")
}

/// The identity of `P^2` with `f = x0 + x1 + x2` and `g = x0^2 − x1x2`.
pub fn identity_example() -> JonquieresData {
    JonquieresData::parse(VerifiedCremona::identity(2), "x0 + x1 + x2", "x0^2 - x1*x2").expect("valid instance")
}

/// The Cremona families used by randomized suites.
pub fn families() -> Vec<(&'static str, VerifiedCremona)> {
    vec![
        ("identity2", VerifiedCremona::identity(2)),
        ("identity3", VerifiedCremona::identity(3)),
        ("involution", standard_involution()),
        ("tangent", tangent_quadratic()),
        ("p3_cubic", p3_cubic()),
    ]
}

/// How `g` is drawn in [`random_instance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    /// A dense random form.
    Generic,
    /// A random element of the base ideal.
    Inclusion,
}

/// A random sparse form: `terms` monomials with small nonzero coefficients.
fn sparse_form<R: Rng>(ring: &VariableSet, degree: u32, terms: usize, rng: &mut R) -> Polynomial {
    let dense = random_form_with(ring, degree, rng);
    let all: Vec<_> = dense.terms().collect();
    if all.len() <= terms {
        return dense;
    }
    let mut picked = Polynomial::zero(ring);
    while picked.num_terms() < terms {
        let (m, c) = all[rng.gen_range(0..all.len())];
        if picked.coefficient(m).is_zero() {
            picked = &picked + &Polynomial::monomial(ring, m.clone(), c.clone());
        }
    }
    picked
}

/// A random instance over `cremona` with `deg f = f_degree`, retrying seeds
/// until `f` and `g` are coprime.
pub fn random_instance(
    cremona: &VerifiedCremona,
    f_degree: u32,
    profile: Profile,
    seed: u64,
) -> Result<JonquieresData> {
    let x = cremona.forward.source().clone();
    let d = cremona.forward.degree();
    let terms = 2 * x.len();
    for attempt in 0..INSTANCE_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9).wrapping_add(attempt));
        let f = sparse_form(&x, f_degree, terms, &mut rng);
        let g = match profile {
            Profile::Generic => sparse_form(&x, d + f_degree, terms, &mut rng),
            Profile::Inclusion => cremona.forward.coords().iter().fold(Polynomial::zero(&x), |acc, gi| {
                &acc + &(gi * &sparse_form(&x, f_degree, 2, &mut rng))
            }),
        };
        if g.is_zero() {
            continue;
        }
        if let Ok(p) = JonquieresData::new(cremona.clone(), f, g) {
            return Ok(p);
        }
    }
    Err(Error::Hypothesis(format!(
        "no coprime pair (f, g) found in {INSTANCE_RETRIES} seeds"
    )))
}
