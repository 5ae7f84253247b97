//! Rational maps between projective spaces, verification of Cremona pairs
//! and composition.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{divide_exact, gcd, Polynomial, VariableSet};

/// A rational map `P(source) ⇢ P(target)` given by forms of one degree.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMapData {
    source: VariableSet,
    target: VariableSet,
    coords: Vec<Polynomial>,
    degree: u32,
    gcd_stripped: bool,
}

impl RationalMapData {
    pub fn new(source: &VariableSet, target: &VariableSet, coords: Vec<Polynomial>) -> Result<Self> {
        if coords.len() != target.len() {
            return Err(Error::ImageCountMismatch {
                expected: target.len(),
                found: coords.len(),
            });
        }
        let mut degree = None;
        for c in &coords {
            if !c.ring().same_as(source) {
                return Err(Error::RingMismatch {
                    left: source.to_string(),
                    right: c.ring().to_string(),
                });
            }
            if c.is_zero() {
                continue;
            }
            if !c.is_homogeneous() {
                return Err(Error::NotHomogeneous(format!("coordinate {c}")));
            }
            let d = c.total_degree().expect("nonzero");
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => {
                    return Err(Error::Hypothesis(format!(
                        "coordinates of a rational map must share one degree ({e} vs {d})"
                    )))
                }
                _ => {}
            }
        }
        let Some(degree) = degree else {
            return Err(Error::ZeroArgument("all coordinates vanish".into()));
        };
        let common = coords.iter().fold(Polynomial::zero(source), |acc, c| gcd(&acc, c));
        Ok(RationalMapData {
            source: source.clone(),
            target: target.clone(),
            coords,
            degree,
            gcd_stripped: common.is_constant(),
        })
    }

    /// Parses one coordinate per target variable.
    pub fn parse(source: &VariableSet, target: &VariableSet, coords: &[&str]) -> Result<Self> {
        let coords = coords
            .iter()
            .map(|s| Polynomial::parse(source, s))
            .collect::<Result<Vec<_>>>()?;
        RationalMapData::new(source, target, coords)
    }

    /// `(x0 : ... : xn)` from `source` to `target`.
    pub fn identity(source: &VariableSet, target: &VariableSet) -> Result<Self> {
        let coords = (0..source.len()).map(|i| Polynomial::var(source, i)).collect();
        RationalMapData::new(source, target, coords)
    }

    pub fn source(&self) -> &VariableSet {
        &self.source
    }

    pub fn target(&self) -> &VariableSet {
        &self.target
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_gcd_stripped(&self) -> bool {
        self.gcd_stripped
    }

    /// Divides out the gcd of the coordinates.
    pub fn strip(&self) -> RationalMapData {
        if self.gcd_stripped {
            return self.clone();
        }
        let common = self
            .coords
            .iter()
            .fold(Polynomial::zero(&self.source), |acc, c| gcd(&acc, c));
        let coords = self
            .coords
            .iter()
            .map(|c| divide_exact(c, &common).expect("gcd divides"))
            .collect();
        RationalMapData::new(&self.source, &self.target, coords).expect("stripping keeps the shape")
    }

    /// Pulls back a form on the target: `p ↦ p(coords)`.
    pub fn pull_back(&self, p: &Polynomial) -> Result<Polynomial> {
        p.substitute(&self.coords)
    }

    /// Equality as points of projective space over the function field: all
    /// 2×2 cross products `a_i b_j − a_j b_i` vanish.
    pub fn projectively_equal(&self, other: &RationalMapData) -> bool {
        if self.coords.len() != other.coords.len() || !self.source.same_as(&other.source) {
            return false;
        }
        let n = self.coords.len();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = &self.coords[i] * &other.coords[j];
                let rhs = &self.coords[j] * &other.coords[i];
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The base ideal generated by the coordinates.
    pub fn base_ideal(&self) -> Ideal {
        Ideal::new(&self.source, self.coords.clone()).expect("coordinates share the source ring")
    }
}

/// `G` and `G⁻¹` with inversion factors: `g_i(g′) = y_i·D` and
/// `g′_i(g) = x_i·C`.
#[derive(Debug, Clone)]
pub struct VerifiedCremona {
    pub forward: RationalMapData,
    pub inverse: RationalMapData,
    /// Target inversion factor `D`, a form in the target variables.
    pub target_factor: Polynomial,
    /// Source inversion factor `C`, a form in the source variables.
    pub source_factor: Polynomial,
}

impl VerifiedCremona {
    /// Identity map of `P^n`, with source `x0..xn` and target `y0..yn`.
    pub fn identity(n: usize) -> Self {
        let x = VariableSet::indexed("x", n + 1);
        let y = VariableSet::indexed("y", n + 1);
        let forward = RationalMapData::identity(&x, &y).expect("identity");
        let inverse = RationalMapData::identity(&y, &x).expect("identity");
        verify_cremona(&forward, &inverse).expect("identity is a Cremona map")
    }

    pub fn n(&self) -> usize {
        self.forward.coords.len() - 1
    }

    /// `deg(G)·deg(G⁻¹) = deg(D) + 1 = deg(C) + 1`.
    pub fn degree_identity_holds(&self) -> bool {
        let product = self.forward.degree * self.inverse.degree;
        let dd = self.target_factor.total_degree().unwrap_or(0);
        let dc = self.source_factor.total_degree().unwrap_or(0);
        product == dd + 1 && product == dc + 1
    }
}

fn inversion_factor(forward: &RationalMapData, inverse: &RationalMapData) -> Result<Polynomial> {
    let mut factor: Option<Polynomial> = None;
    for (i, g) in forward.coords.iter().enumerate() {
        let composed = inverse.pull_back(g)?;
        if composed.is_zero() {
            return Err(Error::DegenerateComposition { index: i });
        }
        let yi = Polynomial::var(&inverse.source, i);
        let q = divide_exact(&composed, &yi).map_err(|_| Error::NotMutuallyInverse {
            index: i,
            reason: format!("{} does not divide the composed coordinate", inverse.source.name(i)),
        })?;
        match &factor {
            None => factor = Some(q),
            Some(d) if *d != q => {
                return Err(Error::NotMutuallyInverse {
                    index: i,
                    reason: "quotients differ between coordinates".into(),
                })
            }
            _ => {}
        }
    }
    Ok(factor.expect("at least one coordinate"))
}

/// Checks that `G` and `Ginv` are mutually inverse and extracts `D` and `C`.
///
/// The factors are the exact quotients, so the defining identities hold
/// without rescaling.
pub fn verify_cremona(g: &RationalMapData, ginv: &RationalMapData) -> Result<VerifiedCremona> {
    if !g.target.same_as(&ginv.source) || !g.source.same_as(&ginv.target) {
        return Err(Error::Hypothesis(
            "the inverse must map the target variables back to the source".into(),
        ));
    }
    if g.source.len() != g.target.len() {
        return Err(Error::Hypothesis(
            "a Cremona map needs n+1 coordinates in n+1 variables".into(),
        ));
    }
    if !g.gcd_stripped || !ginv.gcd_stripped {
        return Err(Error::Hypothesis(
            "coordinates must have no proper common factor".into(),
        ));
    }
    let target_factor = inversion_factor(g, ginv)?;
    let source_factor = inversion_factor(ginv, g)?;
    Ok(VerifiedCremona {
        forward: g.clone(),
        inverse: ginv.clone(),
        target_factor,
        source_factor,
    })
}

/// `B ∘ A`: first `a`, then `b`. Coordinates are `b_j(a_0, ..., a_m)`.
pub fn compose(a: &RationalMapData, b: &RationalMapData, strip: bool) -> Result<RationalMapData> {
    if a.target.len() != b.source.len() {
        return Err(Error::ImageCountMismatch {
            expected: b.source.len(),
            found: a.target.len(),
        });
    }
    let coords = b
        .coords
        .iter()
        .map(|c| c.substitute(&a.coords))
        .collect::<Result<Vec<_>>>()?;
    let map = RationalMapData::new(&a.source, &b.target, coords)?;
    Ok(if strip { map.strip() } else { map })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn involution() -> (RationalMapData, RationalMapData) {
        let x = VariableSet::indexed("x", 3);
        let y = VariableSet::indexed("y", 3);
        let g = RationalMapData::parse(&x, &y, &["x1*x2", "x0*x2", "x0*x1"]).unwrap();
        let gi = RationalMapData::parse(&y, &x, &["y1*y2", "y0*y2", "y0*y1"]).unwrap();
        (g, gi)
    }

    #[test]
    fn identity_factors_are_one() {
        let c = VerifiedCremona::identity(3);
        assert_eq!(c.target_factor.to_string(), "1");
        assert_eq!(c.source_factor.to_string(), "1");
        assert!(c.degree_identity_holds());
    }

    #[test]
    fn standard_involution_factors() {
        let (g, gi) = involution();
        let c = verify_cremona(&g, &gi).unwrap();
        assert_eq!(c.target_factor.to_string(), "y0*y1*y2");
        assert_eq!(c.source_factor.to_string(), "x0*x1*x2");
        assert!(c.degree_identity_holds());
        let swapped = verify_cremona(&gi, &g).unwrap();
        assert_eq!(swapped.target_factor.to_string(), "x0*x1*x2");
    }

    #[test]
    fn rejects_non_inverse() {
        let (g, _) = involution();
        let x = VariableSet::indexed("x", 3);
        let y = VariableSet::indexed("y", 3);
        let bad = RationalMapData::parse(&y, &x, &["y1*y2", "y0*y2", "y0^2"]).unwrap();
        assert!(matches!(
            verify_cremona(&g, &bad),
            Err(Error::NotMutuallyInverse { .. })
        ));
        let degenerate = RationalMapData::parse(&y, &x, &["y0", "0", "y2"]).unwrap();
        assert!(matches!(
            verify_cremona(&g, &degenerate),
            Err(Error::DegenerateComposition { index: 0 })
        ));
    }

    #[test]
    fn composition() {
        let (g, _) = involution();
        let x = VariableSet::indexed("x", 3);
        let y = VariableSet::indexed("y", 3);
        let x_to_x = RationalMapData::parse(&x, &x, &["x1*x2", "x0*x2", "x0*x1"]).unwrap();
        let id_y = RationalMapData::identity(&y, &y).unwrap();
        assert_eq!(compose(&g, &id_y, true).unwrap(), g);
        let twice = compose(&x_to_x, &x_to_x, true).unwrap();
        assert_eq!(twice, RationalMapData::identity(&x, &x).unwrap());
        let raw = compose(&x_to_x, &x_to_x, false).unwrap();
        assert_eq!(raw.coords()[0].to_string(), "x0^2*x1*x2");
        assert!(raw.projectively_equal(&twice));
        assert!(!raw.is_gcd_stripped());
    }

    #[test]
    fn base_ideals() {
        let (g, _) = involution();
        assert_eq!(g.base_ideal().dim_and_codim().unwrap(), (1, 2));
        let x = VariableSet::indexed("x", 3);
        let id = RationalMapData::identity(&x, &x).unwrap();
        assert!(id.base_ideal().equals(&Ideal::maximal(&x)).unwrap());
    }
}
