//! Rees ideals, birational downgrading and the associated monoid
//! parametrization.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::birational::{compose, RationalMapData};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, Limits};
use crate::implicitize::{implicitize, oracle_implicitize_limited, ImplicitMonoid, JonquieresData};
use crate::poly::{divide_exact, random_nonzero, Coeff, Monomial, Polynomial, VariableSet};
use crate::report::{is_budget, Verdict};
use crate::syzygies::conductor_data;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReesRole {
    /// Rees ideal of `J = (If, g)`.
    Jonquieres,
    /// Rees ideal of the Cremona base ideal `I`.
    Cremona,
    /// The downgraded ideal `(ℐ, downgrades)`.
    Downgraded,
    /// Rees ideal of the monoid base ideal `K`.
    Monoid,
}

impl ReesRole {
    pub fn as_str(self) -> &'static str {
        match self {
            ReesRole::Jonquieres => "jonquieres_rees",
            ReesRole::Cremona => "cremona_rees",
            ReesRole::Downgraded => "downgraded",
            ReesRole::Monoid => "monoid_rees",
        }
    }
}

/// Bihomogeneous generators in `x ⊔ y`.
#[derive(Debug, Clone)]
pub struct ReesPresentation {
    pub role: ReesRole,
    x: VariableSet,
    y: VariableSet,
    ambient: VariableSet,
    generators: Vec<Polynomial>,
    limits: Limits,
}

impl ReesPresentation {
    pub fn new(
        role: ReesRole,
        x: &VariableSet,
        y: &VariableSet,
        generators: Vec<Polynomial>,
        limits: Limits,
    ) -> Result<Self> {
        let ambient = x.concat(y)?;
        let generators = generators
            .iter()
            .map(|g| g.embed(&ambient))
            .collect::<Result<Vec<_>>>()?;
        Ok(ReesPresentation {
            role,
            x: x.clone(),
            y: y.clone(),
            ambient,
            generators,
            limits,
        })
    }

    pub fn x(&self) -> &VariableSet {
        &self.x
    }

    pub fn y(&self) -> &VariableSet {
        &self.y
    }

    pub fn ambient(&self) -> &VariableSet {
        &self.ambient
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ambient, self.generators.clone())
            .expect("generators live in the ambient ring")
            .with_limits(self.limits)
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.degree_info(Some(&self.x)).homogeneous)
    }

    /// `(deg_x, deg_y)` of each generator.
    pub fn bidegrees(&self) -> Vec<(u32, u32)> {
        self.generators
            .iter()
            .map(|g| bidegree(g, &self.x).unwrap_or((0, 0)))
            .collect()
    }
}

fn bidegree(p: &Polynomial, x: &VariableSet) -> Option<(u32, u32)> {
    p.degree_info(Some(x)).graded.map(|g| (g.x_degree, g.y_degree))
}

/// `ker(k[x, y] → k[x, t], y_i ↦ t·gens_i)`, by eliminating `t`.
pub fn rees_ideal(gens: &[Polynomial], y: &VariableSet, role: ReesRole, limits: Limits) -> Result<ReesPresentation> {
    let Some(first) = gens.first() else {
        return Err(Error::ZeroArgument("no generators".into()));
    };
    if gens.len() != y.len() {
        return Err(Error::ImageCountMismatch {
            expected: y.len(),
            found: gens.len(),
        });
    }
    let x = first.ring().clone();
    let ambient = x.concat(y)?;
    let t = ambient.fresh_name("t");
    let big = VariableSet::new(&[t.as_str()])?.concat(&ambient)?;
    let tv = Polynomial::var(&big, 0);
    let rel = gens
        .iter()
        .enumerate()
        .map(|(i, g)| Ok(&Polynomial::var_named(&big, y.name(i)) - &(&tv * &g.embed(&big)?)))
        .collect::<Result<Vec<_>>>()?;
    let eliminated = Ideal::new(&big, rel)?.with_limits(limits).eliminate(&[t.as_str()])?;
    ReesPresentation::new(role, &x, y, eliminated.generators().to_vec(), limits)
}

/// Whether `q(x; t·gens) = 0`, i.e. `q` lies in the Rees ideal of `gens`.
pub fn in_rees_kernel(q: &Polynomial, y: &VariableSet, gens: &[Polynomial]) -> Result<bool> {
    let Some(first) = gens.first() else {
        return Err(Error::ZeroArgument("no generators".into()));
    };
    let x = first.ring();
    let t = q.ring().fresh_name("t");
    let tx = VariableSet::new(&[t.as_str()])?.concat(x)?;
    let tv = Polynomial::var(&tx, 0);
    let images = q
        .ring()
        .names()
        .iter()
        .map(|name| {
            if let Some(i) = y.index_of(name) {
                Ok(&tv * &gens[i].embed(&tx)?)
            } else if x.index_of(name).is_some() {
                Ok(Polynomial::var_named(&tx, name))
            } else {
                Err(Error::UnknownVariable(name.clone()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(q.substitute(&images)?.is_zero())
}

fn x_positions(ring: &VariableSet, x: &VariableSet) -> Result<Vec<usize>> {
    x.names()
        .iter()
        .map(|n| ring.index_of(n).ok_or_else(|| Error::UnknownVariable(n.clone())))
        .collect()
}

fn framing_with<F>(q: &Polynomial, x: &VariableSet, mut choose: F) -> Result<Vec<Polynomial>>
where
    F: FnMut(&[usize]) -> usize,
{
    let ring = q.ring();
    let pos = x_positions(ring, x)?;
    let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); pos.len()];
    for (m, c) in q.terms() {
        let present: Vec<usize> = (0..pos.len()).filter(|&i| m.exponents()[pos[i]] > 0).collect();
        if present.is_empty() {
            return Err(Error::Hypothesis(format!(
                "a framing needs positive x-degree in every term of {q}"
            )));
        }
        let i = present[choose(&present)];
        let xi = Monomial::variable(ring.len(), pos[i]);
        parts[i].push((m.div(&xi).expect("x_i divides the term"), c.clone()));
    }
    Ok(parts.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect())
}

/// `Q = Σ x_i Q_i`, each term going to its lowest-index `x` variable.
pub fn x_framing(q: &Polynomial, x: &VariableSet) -> Result<Vec<Polynomial>> {
    framing_with(q, x, |_| 0)
}

/// A framing where each term picks one of its `x` variables at random.
pub fn x_framing_random(q: &Polynomial, x: &VariableSet, seed: u64) -> Result<Vec<Polynomial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    framing_with(q, x, |present| rng.gen_range(0..present.len()))
}

fn apply_framing(
    q: &Polynomial,
    h: &[Polynomial],
    x: &VariableSet,
    framing: impl Fn(&Polynomial) -> Result<Vec<Polynomial>>,
) -> Result<Polynomial> {
    if h.len() != x.len() {
        return Err(Error::ImageCountMismatch {
            expected: x.len(),
            found: h.len(),
        });
    }
    let degrees: Vec<Option<u32>> = h.iter().map(Polynomial::total_degree).collect();
    if degrees.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Hypothesis("downgrading forms must share one degree".into()));
    }
    let ring = q.ring();
    let pos = x_positions(ring, x)?;
    let (framed, pure): (Vec<_>, Vec<_>) = q
        .terms()
        .map(|(m, c)| (m.clone(), c.clone()))
        .partition(|(m, _)| pos.iter().any(|&p| m.exponents()[p] > 0));
    let framed = Polynomial::from_terms(ring, framed);
    let mut out = Polynomial::from_terms(ring, pure);
    if framed.is_zero() {
        return Ok(out);
    }
    for (hi, qi) in h.iter().zip(framing(&framed)?) {
        out = &out + &(&hi.embed(ring)? * &qi);
    }
    Ok(out)
}

/// `D_H(Q) = Σ h_i Q_i`; terms free of `x` pass through unchanged.
pub fn downgrade(q: &Polynomial, h: &[Polynomial], x: &VariableSet) -> Result<Polynomial> {
    apply_framing(q, h, x, |p| x_framing(p, x))
}

pub fn downgrade_random(q: &Polynomial, h: &[Polynomial], x: &VariableSet, seed: u64) -> Result<Polynomial> {
    apply_framing(q, h, x, |p| x_framing_random(p, x, seed))
}

/// `D^(0)(Q), ..., D^(ℓ)(Q)` with `ℓ = deg_x Q`; the last one is free of `x`.
pub fn iterated_downgrades(q: &Polynomial, h: &[Polynomial], x: &VariableSet) -> Result<Vec<Polynomial>> {
    let pos = x_positions(q.ring(), x)?;
    let xdeg = |p: &Polynomial| {
        p.terms()
            .map(|(m, _)| pos.iter().map(|&i| u32::from(m.exponents()[i])).sum::<u32>())
            .max()
            .unwrap_or(0)
    };
    let mut out = vec![q.clone()];
    let mut cur = q.clone();
    while xdeg(&cur) > 0 {
        cur = downgrade(&cur, h, x)?;
        out.push(cur.clone());
    }
    Ok(out)
}

/// A member of the ideal: a sum of generators times random bihomogeneous
/// multipliers completing them to a common bidegree.
pub fn random_rees_member(rees: &ReesPresentation, seed: u64) -> Result<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = rees.generators();
    let bideg = rees.bidegrees();
    let k = rng.gen_range(1..=gens.len().min(3));
    let picks: Vec<usize> = (0..k).map(|_| rng.gen_range(0..gens.len())).collect();
    let ax = picks.iter().map(|&i| bideg[i].0).max().unwrap_or(0) + rng.gen_range(0..=1);
    let ay = picks.iter().map(|&i| bideg[i].1).max().unwrap_or(0) + rng.gen_range(0..=1);
    let amb = rees.ambient();
    let xpos = x_positions(amb, rees.x())?;
    let ypos = x_positions(amb, rees.y())?;
    let mut out = Polynomial::zero(amb);
    for &i in &picks {
        let (ex, ey) = (ax - bideg[i].0, ay - bideg[i].1);
        let mut mult = Polynomial::zero(amb);
        for _ in 0..3 {
            let mut exps = vec![0u16; amb.len()];
            for _ in 0..ex {
                exps[xpos[rng.gen_range(0..xpos.len())]] += 1;
            }
            for _ in 0..ey {
                exps[ypos[rng.gen_range(0..ypos.len())]] += 1;
            }
            let c = Coeff::from_integer(random_nonzero(&mut rng).into());
            mult = &mult + &Polynomial::monomial(amb, Monomial::from_exponents(&exps), c);
        }
        out = &out + &(&mult * &gens[i]);
    }
    Ok(out)
}

/// One syzygy biform with its downgrades.
#[derive(Debug, Clone)]
pub struct DowngradeChain {
    pub biform: Polynomial,
    pub downgrades: Vec<Polynomial>,
    /// The fully downgraded element in the extended target ring.
    pub full: Polynomial,
    /// `full / F`, when the division is exact.
    pub extraneous_factor: Option<Polynomial>,
}

/// The downgraded ideal and its checks.
#[derive(Debug, Clone)]
pub struct DowngradedReport {
    pub ideal: ReesPresentation,
    pub chains: Vec<DowngradeChain>,
    /// Every generator lies in the Rees ideal of `J`.
    pub contained: Verdict,
    /// `codim = n + 1`.
    pub codimension: Verdict,
    pub codim: Option<usize>,
    /// Every fully downgraded element is a multiple of `F`.
    pub divisible: Verdict,
}

fn downgrade_chains(p: &JonquieresData, monoid: &ImplicitMonoid) -> Result<Vec<DowngradeChain>> {
    let data = conductor_data(&p.base_ideal(), p.g())?;
    let x = p.source();
    let h = p.cremona().inverse.coords();
    let mut out = Vec::new();
    for (j, c) in data.conductors.iter().enumerate() {
        let content = data.content.column(j);
        let biform = crate::implicitize::syzygy_biform(p, &content, c)?;
        let downgrades = iterated_downgrades(&biform, h, x)?;
        let last = downgrades.last().expect("nonempty");
        let full = last.embed(p.extended_target())?;
        let extraneous_factor = divide_exact(&full, &monoid.f).ok();
        out.push(DowngradeChain {
            biform,
            downgrades,
            full,
            extraneous_factor,
        });
    }
    Ok(out)
}

pub fn downgraded_rees_ideal(p: &JonquieresData) -> Result<DowngradedReport> {
    let monoid = implicitize(p)?;
    let chains = downgrade_chains(p, &monoid)?;
    let cremona_rees = rees_ideal(p.cremona().forward.coords(), p.target(), ReesRole::Cremona, p.limits())?;
    let mut gens: Vec<Polynomial> = cremona_rees
        .generators()
        .iter()
        .map(|g| g.embed(&p.rees_ring()))
        .collect::<Result<_>>()?;
    for ch in &chains {
        for q in &ch.downgrades {
            if !q.is_zero() && !gens.contains(q) {
                gens.push(q.clone());
            }
        }
    }
    let ideal = ReesPresentation::new(ReesRole::Downgraded, p.source(), p.extended_target(), gens, p.limits())?;
    let param = p.parametrization();
    let mut outside = None;
    for (k, q) in ideal.generators().iter().enumerate() {
        if !in_rees_kernel(q, p.extended_target(), &param)? {
            outside = Some(k);
            break;
        }
    }
    let contained = match outside {
        None => Verdict::Holds,
        Some(k) => Verdict::Fails(format!("generator {k} is not in the Rees ideal")),
    };
    let want = p.n() + 1;
    let (codimension, codim) = match ideal.ideal().dim_and_codim() {
        Ok((_, c)) => (Verdict::from_bool(c == want, format!("codim {c} != {want}")), Some(c)),
        Err(e) if is_budget(&e) => (Verdict::Skipped("budget".into()), None),
        Err(e) => return Err(e),
    };
    let divisible = match chains.iter().position(|c| c.extraneous_factor.is_none()) {
        None => Verdict::Holds,
        Some(j) => Verdict::Fails(format!("fully downgraded element {j} is not a multiple of F")),
    };
    Ok(DowngradedReport {
        ideal,
        chains,
        contained,
        codimension,
        codim,
        divisible,
    })
}

/// `(full downgrade, full / F)` for every syzygy biform with nonzero last
/// coordinate.
pub fn extraneous_factors(p: &JonquieresData) -> Result<Vec<(Polynomial, Polynomial)>> {
    let monoid = implicitize(p)?;
    downgrade_chains(p, &monoid)?
        .into_iter()
        .enumerate()
        .map(|(j, c)| match c.extraneous_factor {
            Some(q) => Ok((c.full, q)),
            None => Err(Error::Verification(format!(
                "fully downgraded element {j} is not a multiple of F"
            ))),
        })
        .collect()
}

/// `(h_{δ−1}x_0 : ... : h_{δ−1}x_n : s·h_δ)`.
#[derive(Debug, Clone)]
pub struct MonoidParametrization {
    pub h_delta: Polynomial,
    pub h_delta_minus_1: Polynomial,
    /// `+1` or `−1`: the sign of the last coordinate making `F` vanish.
    pub sign: i8,
    pub map: RationalMapData,
}

impl MonoidParametrization {
    pub fn coords(&self) -> &[Polynomial] {
        self.map.coords()
    }

    /// `K`, the base ideal.
    pub fn base_ideal(&self) -> Ideal {
        self.map.base_ideal()
    }
}

fn monoid_map(p: &JonquieresData, h_top: &Polynomial, h_low: &Polynomial, sign: i8) -> Result<RationalMapData> {
    let x = p.source();
    let mut coords: Vec<Polynomial> = (0..x.len()).map(|i| h_low * &Polynomial::var(x, i)).collect();
    coords.push(if sign > 0 { h_top.clone() } else { -h_top });
    RationalMapData::new(x, p.extended_target(), coords)
}

/// What the monoid association verified.
#[derive(Debug, Clone)]
pub struct MonoidReport {
    pub parametrization: MonoidParametrization,
    /// Whether `F` vanishes on the map with last coordinate `−h_δ`.
    pub negative_sign_vanishes: bool,
    /// Whether `F` vanishes on the map with last coordinate `+h_δ`.
    pub positive_sign_vanishes: bool,
    /// `F(M) = 0` for the chosen sign and the elimination oracle agrees.
    pub same_equation: Verdict,
    /// `M(G(x))` equals the parametrization projectively.
    pub cremona_then_monoid: Verdict,
    /// `G(M(x))`.
    pub monoid_then_cremona: Verdict,
}

impl MonoidReport {
    /// The order in which the composition identity held, if exactly one.
    pub fn composition_order(&self) -> Option<&'static str> {
        match (self.cremona_then_monoid.holds(), self.monoid_then_cremona.holds()) {
            (true, false) => Some("cremona_then_monoid"),
            (false, true) => Some("monoid_then_cremona"),
            _ => None,
        }
    }
}

pub fn monoid_association(p: &JonquieresData, monoid: &ImplicitMonoid) -> Result<MonoidReport> {
    let x = p.source();
    let h_top = monoid.f_delta.relabel(x)?;
    let h_low = monoid.f_delta_minus_1.relabel(x)?;
    let vanishes = |sign: i8| -> Result<bool> {
        let m = monoid_map(p, &h_top, &h_low, sign)?;
        Ok(monoid.f.substitute(m.coords())?.is_zero())
    };
    let negative_sign_vanishes = vanishes(-1)?;
    let positive_sign_vanishes = vanishes(1)?;
    let sign = if positive_sign_vanishes { 1 } else { -1 };
    let map = monoid_map(p, &h_top, &h_low, sign)?;
    let parametrization = MonoidParametrization {
        h_delta: h_top,
        h_delta_minus_1: h_low,
        sign,
        map,
    };
    let same_equation = if !(positive_sign_vanishes || negative_sign_vanishes) {
        Verdict::Fails("F vanishes on neither sign".into())
    } else {
        match oracle_implicitize_limited(parametrization.coords(), p.extended_target(), p.limits()) {
            Ok(o) => Verdict::from_bool(o.is_scalar_multiple_of(&monoid.f), "oracle disagrees"),
            Err(e) if is_budget(&e) => Verdict::Skipped("budget".into()),
            Err(e) => return Err(e),
        }
    };
    let target = p.as_map().strip();
    let cremona_then_monoid = match compose(&p.cremona().forward, &parametrization.map, true) {
        Ok(c) => Verdict::from_bool(c.projectively_equal(&target), "not proportional"),
        Err(e) => Verdict::Fails(e.to_string()),
    };
    let monoid_then_cremona = match compose(&parametrization.map, &p.cremona().forward, true) {
        Ok(c) => Verdict::from_bool(c.projectively_equal(&target), "not proportional"),
        Err(e) => Verdict::Fails(e.to_string()),
    };
    Ok(MonoidReport {
        parametrization,
        negative_sign_vanishes,
        positive_sign_vanishes,
        same_equation,
        cremona_then_monoid,
        monoid_then_cremona,
    })
}

/// Both transported-and-saturated identities, plus the unsaturated control.
#[derive(Debug, Clone)]
pub struct SaturationReport {
    /// `ℐ_F = ℐ_M(G) : C^∞`.
    pub forward: Verdict,
    /// `ℐ_M = ℐ_F(G⁻¹) : D^∞`.
    pub backward: Verdict,
    /// `ℐ_F = ℐ_M(G)` without saturating; expected to fail when `C` is not
    /// a unit.
    pub unsaturated_forward: Verdict,
    pub forward_exponent: Option<usize>,
    pub backward_exponent: Option<usize>,
}

/// Substitutes `x_i ↦ images_i` (forms in `x`) into every generator.
fn transport(rees: &ReesPresentation, images: &[Polynomial]) -> Result<Ideal> {
    let amb = rees.ambient();
    let xpos = x_positions(amb, rees.x())?;
    let mut full: Vec<Polynomial> = (0..amb.len()).map(|k| Polynomial::var(amb, k)).collect();
    for (i, &k) in xpos.iter().enumerate() {
        full[k] = images[i].embed(amb)?;
    }
    let gens = rees
        .generators()
        .iter()
        .map(|g| g.substitute(&full))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(amb, gens)?.with_limits(rees.ideal().limits()))
}

pub fn saturation_identities(p: &JonquieresData, m: &MonoidParametrization) -> Result<SaturationReport> {
    match saturation_identities_inner(p, m) {
        Err(e) if is_budget(&e) => Ok(SaturationReport {
            forward: Verdict::Skipped("budget".into()),
            backward: Verdict::Skipped("budget".into()),
            unsaturated_forward: Verdict::Skipped("budget".into()),
            forward_exponent: None,
            backward_exponent: None,
        }),
        other => other,
    }
}

fn saturation_identities_inner(p: &JonquieresData, m: &MonoidParametrization) -> Result<SaturationReport> {
    let y = p.extended_target();
    let i_f = rees_ideal(&p.parametrization(), y, ReesRole::Jonquieres, p.limits())?;
    let i_m = rees_ideal(m.coords(), y, ReesRole::Monoid, p.limits())?;
    let amb = i_f.ambient().clone();
    let x = p.source();
    let cremona = p.cremona();

    let pushed = transport(&i_m, cremona.forward.coords())?;
    let c = cremona.source_factor.embed(&amb)?;
    let (fwd, kf) = pushed.saturate_element(&c)?;
    let forward = Verdict::from_bool(fwd.equals(&i_f.ideal())?, "ideals differ");
    let unsaturated_forward = Verdict::from_bool(pushed.equals(&i_f.ideal())?, "ideals differ");

    let inverse_in_x = cremona
        .inverse
        .coords()
        .iter()
        .map(|h| h.relabel(x))
        .collect::<Result<Vec<_>>>()?;
    let pulled = transport(&i_f, &inverse_in_x)?;
    let d = cremona.target_factor.relabel(x)?.embed(&amb)?;
    let (bwd, kb) = pulled.saturate_element(&d)?;
    let backward = Verdict::from_bool(bwd.equals(&i_m.ideal())?, "ideals differ");
    Ok(SaturationReport {
        forward,
        backward,
        unsaturated_forward,
        forward_exponent: Some(kf),
        backward_exponent: Some(kb),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birational::VerifiedCremona;
    use crate::fixtures;

    fn ring() -> (VariableSet, VariableSet, VariableSet) {
        let x = VariableSet::indexed("x", 2);
        let y = VariableSet::indexed("y", 2);
        let a = x.concat(&y).unwrap();
        (x, y, a)
    }

    #[test]
    fn koszul_rees_ideal() {
        let (x, y, a) = ring();
        let gens = vec![Polynomial::var(&x, 0), Polynomial::var(&x, 1)];
        let r = rees_ideal(&gens, &y, ReesRole::Cremona, Limits::UNLIMITED).unwrap();
        let want = Polynomial::parse(&a, "x1*y0 - x0*y1").unwrap();
        assert_eq!(r.generators().len(), 1);
        assert!(r.generators()[0].is_scalar_multiple_of(&want));
        assert!(in_rees_kernel(&want, &y, &gens).unwrap());
    }

    #[test]
    fn framing_rules() {
        let (x, _, a) = ring();
        let q = Polynomial::parse(&a, "x0*y0 + x1*y1").unwrap();
        let fr = x_framing(&q, &x).unwrap();
        assert_eq!(fr[0].to_string(), "y0");
        assert_eq!(fr[1].to_string(), "y1");
        let q = Polynomial::parse(&a, "x0*x1*y0").unwrap();
        let fr = x_framing(&q, &x).unwrap();
        assert_eq!(fr[0].to_string(), "x1*y0");
        assert!(fr[1].is_zero());
        assert!(x_framing(&Polynomial::parse(&a, "y0").unwrap(), &x).is_err());
        let q = Polynomial::parse(&a, "x0^2*x1*y0 - 3*x0*x1^2*y1 + x1^3*y0").unwrap();
        for seed in 0..5 {
            let fr = x_framing_random(&q, &x, seed).unwrap();
            let back = (0..2).fold(Polynomial::zero(&a), |acc, i| {
                &acc + &(&Polynomial::var(&a, i) * &fr[i])
            });
            assert_eq!(back, q);
        }
    }

    #[test]
    fn koszul_downgrade_collapses() {
        let (x, y, a) = ring();
        let q = Polynomial::parse(&a, "x1*y0 - x0*y1").unwrap();
        let h = vec![Polynomial::var(&y, 0), Polynomial::var(&y, 1)];
        assert!(downgrade(&q, &h, &x).unwrap().is_zero());
        let swapped = vec![Polynomial::var(&y, 1), Polynomial::var(&y, 0)];
        let d = downgrade(&q, &swapped, &x).unwrap();
        assert_eq!(d, Polynomial::parse(&a, "y0^2 - y1^2").unwrap());
    }

    #[test]
    fn plane_downgraded_ideal() {
        let p = fixtures::plane_example([1, 2, 3]);
        let r = downgraded_rees_ideal(&p).unwrap();
        assert!(r.contained.holds());
        assert!(r.divisible.holds());
        assert_eq!(r.codim, Some(3));
        for c in &r.chains {
            assert_eq!(c.extraneous_factor.as_ref().unwrap().total_degree(), Some(1));
        }
    }

    #[test]
    fn p3_full_downgrade_is_y3_times_f() {
        let p = fixtures::p3_example();
        let ext = extraneous_factors(&p).unwrap();
        assert_eq!(ext.len(), 1);
        let y3 = Polynomial::parse(p.extended_target(), "y3").unwrap();
        assert!(ext[0].1.is_scalar_multiple_of(&y3));
    }

    #[test]
    fn monoid_sign_and_order() {
        let p = fixtures::plane_example([1, 2, 3]);
        let m = implicitize(&p).unwrap();
        let r = monoid_association(&p, &m).unwrap();
        assert!(!r.negative_sign_vanishes);
        assert!(r.positive_sign_vanishes);
        assert!(r.same_equation.holds());
        assert_eq!(r.composition_order(), Some("cremona_then_monoid"));
    }

    #[test]
    fn identity_saturations_are_trivial() {
        let p = JonquieresData::parse(VerifiedCremona::identity(1), "x0 + x1", "x0^2 + x1^2").unwrap();
        let m = implicitize(&p).unwrap();
        let r = monoid_association(&p, &m).unwrap();
        let s = saturation_identities(&p, &r.parametrization).unwrap();
        assert!(s.forward.holds() && s.backward.holds());
        assert!(s.unsaturated_forward.holds());
    }
}
