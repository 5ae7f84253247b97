//! De Jonquières parametrizations `(g_0 f : ... : g_n f : g)` and their
//! implicit equations.
//!
//! With `G⁻¹ = (g′_0 : ... : g′_n)` and target inversion factor `D`, the
//! implicit equation is the monoid
//!
//! ```text
//! F = (g(g′) − y_{n+1}·f(g′)·D) / gcd(g(g′), f(g′)·D)
//! ```
//!
//! which is irreducible because its two components are coprime.

use crate::birational::{RationalMapData, VerifiedCremona};
use crate::error::{Error, Result};
use crate::groebner::{lift, Ideal, Limits};
use crate::poly::{divide_exact, gcd, Coeff, Polynomial, VariableSet};
use crate::syzygies::{conductor_data, ConductorData};

/// A verified Cremona map together with forms `f`, `g`, where
/// `deg g = deg G + deg f` and `gcd(f, g) = 1`.
#[derive(Debug, Clone)]
pub struct JonquieresData {
    cremona: VerifiedCremona,
    f: Polynomial,
    g: Polynomial,
    extended: VariableSet,
    limits: Limits,
}

/// `y_0, ..., y_n` followed by one more variable, named `y{n+1}` when the
/// target is indexed that way and the name is free.
fn extend_target(target: &VariableSet, source: &VariableSet) -> Result<VariableSet> {
    let first = target.name(0);
    let prefix = first.trim_end_matches(|c: char| c.is_ascii_digit());
    let indexed = (0..target.len()).all(|i| target.name(i) == format!("{prefix}{i}"));
    let taken = target.concat(source)?;
    let candidate = format!("{prefix}{}", target.len());
    let name = if indexed && taken.index_of(&candidate).is_none() {
        candidate
    } else {
        taken.fresh_name("w")
    };
    target.concat(&VariableSet::new(&[name])?)
}

impl JonquieresData {
    pub fn new(cremona: VerifiedCremona, f: Polynomial, g: Polynomial) -> Result<Self> {
        let x = cremona.forward.source().clone();
        for (name, p) in [("f", &f), ("g", &g)] {
            if !p.ring().same_as(&x) {
                return Err(Error::RingMismatch {
                    left: x.to_string(),
                    right: p.ring().to_string(),
                });
            }
            if p.is_zero() {
                return Err(Error::ZeroArgument(format!("{name} must be nonzero")));
            }
            if !p.is_homogeneous() {
                return Err(Error::NotHomogeneous(format!("{name} = {p}")));
            }
        }
        let d = cremona.forward.degree();
        let df = f.total_degree().expect("nonzero");
        let dg = g.total_degree().expect("nonzero");
        if df < 1 {
            return Err(Error::Hypothesis("deg f must be at least 1".into()));
        }
        if dg != d + df {
            return Err(Error::Hypothesis(format!(
                "degree relation deg g = deg G + deg f fails: {dg} != {d} + {df}"
            )));
        }
        if !gcd(&f, &g).is_constant() {
            return Err(Error::Hypothesis("f and g must be relatively prime".into()));
        }
        let extended = extend_target(cremona.forward.target(), &x)?;
        Ok(JonquieresData {
            cremona,
            f,
            g,
            extended,
            limits: Limits::UNLIMITED,
        })
    }

    /// Parses `f` and `g` over the source ring of `cremona`.
    pub fn parse(cremona: VerifiedCremona, f: &str, g: &str) -> Result<Self> {
        let x = cremona.forward.source().clone();
        let f = Polynomial::parse(&x, f)?;
        let g = Polynomial::parse(&x, g)?;
        JonquieresData::new(cremona, f, g)
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn cremona(&self) -> &VerifiedCremona {
        &self.cremona
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.cremona.n()
    }

    /// Degree of the Cremona map.
    pub fn d(&self) -> u32 {
        self.cremona.forward.degree()
    }

    pub fn f_degree(&self) -> u32 {
        self.f.total_degree().expect("nonzero")
    }

    pub fn g_degree(&self) -> u32 {
        self.g.total_degree().expect("nonzero")
    }

    pub fn inverse_degree(&self) -> u32 {
        self.cremona.inverse.degree()
    }

    pub fn source(&self) -> &VariableSet {
        self.cremona.forward.source()
    }

    pub fn target(&self) -> &VariableSet {
        self.cremona.forward.target()
    }

    /// `y_0, ..., y_n, y_{n+1}`.
    pub fn extended_target(&self) -> &VariableSet {
        &self.extended
    }

    /// Source and extended target variables, for biforms.
    pub fn rees_ring(&self) -> VariableSet {
        self.source()
            .concat(&self.extended)
            .expect("source and target names are disjoint")
    }

    /// `(g_0 f, ..., g_n f, g)`.
    pub fn parametrization(&self) -> Vec<Polynomial> {
        let mut coords: Vec<Polynomial> = self.cremona.forward.coords().iter().map(|gi| gi * &self.f).collect();
        coords.push(self.g.clone());
        coords
    }

    pub fn as_map(&self) -> RationalMapData {
        RationalMapData::new(self.source(), &self.extended, self.parametrization())
            .expect("parametrization is a rational map")
    }

    /// `I = (g_0, ..., g_n)`.
    pub fn base_ideal(&self) -> Ideal {
        self.cremona.forward.base_ideal().with_limits(self.limits)
    }

    /// `J = (I f, g)`.
    pub fn jonquieres_ideal(&self) -> Ideal {
        Ideal::new(self.source(), self.parametrization())
            .expect("same ring")
            .with_limits(self.limits)
    }

    /// `(g(g′), f(g′))` over the target ring.
    pub fn evaluated(&self) -> Result<(Polynomial, Polynomial)> {
        let inv = &self.cremona.inverse;
        Ok((inv.pull_back(&self.g)?, inv.pull_back(&self.f)?))
    }

    fn last_variable(&self) -> Polynomial {
        Polynomial::var(&self.extended, self.extended.len() - 1)
    }
}

/// `F = F_δ − y_{n+1}·F_{δ−1}` with coprime components.
#[derive(Debug, Clone, PartialEq)]
pub struct ImplicitMonoid {
    pub f: Polynomial,
    pub f_delta: Polynomial,
    pub f_delta_minus_1: Polynomial,
    /// The gcd divided out of the numerator; `None` for closed forms that do
    /// not pass through it.
    pub stripped_gcd: Option<Polynomial>,
    pub delta: u32,
}

impl ImplicitMonoid {
    fn assemble(
        extended: &VariableSet,
        f_delta: Polynomial,
        f_delta_minus_1: Polynomial,
        stripped_gcd: Option<Polynomial>,
    ) -> Result<Self> {
        let last = Polynomial::var(extended, extended.len() - 1);
        let top = f_delta.embed(extended)?;
        let low = f_delta_minus_1.embed(extended)?;
        let f = &top - &(&last * &low);
        // rescale both components so that F is canonical
        let canon = f.canonical();
        let (m, c) = f.leading_term().expect("nonzero monoid");
        let scale: Coeff = canon.coefficient(m) / c;
        let delta = canon.total_degree().expect("nonzero");
        Ok(ImplicitMonoid {
            f: canon,
            f_delta: f_delta.scale(&scale),
            f_delta_minus_1: f_delta_minus_1.scale(&scale),
            stripped_gcd,
            delta,
        })
    }
}

/// The implicit equation in closed form.
pub fn implicitize(p: &JonquieresData) -> Result<ImplicitMonoid> {
    let (g_ev, f_ev) = p.evaluated()?;
    if f_ev.is_zero() {
        return Err(Error::Hypothesis("f(g′) vanishes".into()));
    }
    if g_ev.is_zero() {
        return Err(Error::Hypothesis("g(g′) vanishes".into()));
    }
    let fd = &f_ev * &p.cremona.target_factor;
    let common = gcd(&g_ev, &fd);
    let f_delta = divide_exact(&g_ev, &common)?;
    let f_delta_minus_1 = divide_exact(&fd, &common)?;
    ImplicitMonoid::assemble(&p.extended, f_delta, f_delta_minus_1, Some(common))
}

/// Degree of `F` against its predictions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub actual: u32,
    /// `deg(g)·deg(G⁻¹) − deg(gcd)`.
    pub via_g: i64,
    /// `deg(f)·deg(G⁻¹) + deg(D) + 1 − deg(gcd)`.
    pub via_f: i64,
    /// `deg(g)·deg(G⁻¹)`.
    pub upper_bound: i64,
    /// Whether `gcd(f(g′), g(g′)) = 1`.
    pub evaluated_coprime: bool,
    /// `(deg(f)·deg(G⁻¹) + 1, deg(g)·deg(G⁻¹))`, the window for `deg F`
    /// when the evaluations are coprime.
    pub window: Option<(i64, i64)>,
}

impl DegreeReport {
    pub fn formulas_agree(&self) -> bool {
        self.via_g == self.actual as i64 && self.via_f == self.actual as i64 && self.actual as i64 <= self.upper_bound
    }

    /// `lo ≤ deg F ≤ hi`.
    pub fn window_holds(&self) -> Option<bool> {
        self.window
            .map(|(lo, hi)| lo <= self.actual as i64 && self.actual as i64 <= hi)
    }

    /// `deg F < hi`; fails whenever `gcd(g(g′), D) = 1`, e.g. for the
    /// identity map.
    pub fn strict_upper_holds(&self) -> Option<bool> {
        self.window.map(|(_, hi)| (self.actual as i64) < hi)
    }
}

pub fn predicted_degree(p: &JonquieresData) -> Result<DegreeReport> {
    let monoid = implicitize(p)?;
    degree_report(p, &monoid)
}

pub fn degree_report(p: &JonquieresData, monoid: &ImplicitMonoid) -> Result<DegreeReport> {
    let (g_ev, f_ev) = p.evaluated()?;
    let common = match &monoid.stripped_gcd {
        Some(c) => c.clone(),
        None => gcd(&g_ev, &(&f_ev * &p.cremona.target_factor)),
    };
    let dgcd = common.total_degree().unwrap_or(0) as i64;
    let dinv = p.inverse_degree() as i64;
    let dd = p.cremona.target_factor.total_degree().unwrap_or(0) as i64;
    let df = p.f_degree() as i64;
    let dg = p.g_degree() as i64;
    let evaluated_coprime = gcd(&f_ev, &g_ev).is_constant();
    Ok(DegreeReport {
        actual: monoid.delta,
        via_g: dg * dinv - dgcd,
        via_f: df * dinv + dd + 1 - dgcd,
        upper_bound: dg * dinv,
        evaluated_coprime,
        window: evaluated_coprime.then_some((df * dinv + 1, dg * dinv)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// `g ∈ I`.
    Inclusion,
    /// `I : (g) = I`.
    NonZeroDivisor,
    General,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Inclusion => "inclusion",
            CaseTag::NonZeroDivisor => "non_zero_divisor",
            CaseTag::General => "general",
        }
    }
}

pub fn classify_case(p: &JonquieresData) -> Result<CaseTag> {
    let i = p.base_ideal();
    if i.contains(&p.g)? {
        return Ok(CaseTag::Inclusion);
    }
    if i.colon(&p.g)?.equals(&i)? {
        return Ok(CaseTag::NonZeroDivisor);
    }
    Ok(CaseTag::General)
}

/// Data attached to one minimal generator `c_j` of `I : (g)`.
#[derive(Debug, Clone)]
pub struct SyzygeticPolynomial {
    pub conductor: Polynomial,
    /// `h_{0j}, ..., h_{nj}` with `c_j g = Σ h_{ij} g_i`.
    pub content: Vec<Polynomial>,
    /// `Σ h_{ij} y_i − f c_j y_{n+1}` over source and extended target.
    pub biform: Polynomial,
    /// The biform evaluated at `x ↦ g′`.
    pub polynomial: Polynomial,
    /// `polynomial / F`.
    pub extraneous_factor: Polynomial,
}

/// `Σ h_i y_i − f c y_{n+1}` in the rees ring.
pub(crate) fn syzygy_biform(p: &JonquieresData, content: &[Polynomial], conductor: &Polynomial) -> Result<Polynomial> {
    let ring = p.rees_ring();
    let n = p.n();
    let mut q = Polynomial::zero(&ring);
    for (i, h) in content.iter().enumerate() {
        let yi = Polynomial::var_named(&ring, p.extended.name(i));
        q = &q + &(&h.embed(&ring)? * &yi);
    }
    let last = Polynomial::var_named(&ring, p.extended.name(n + 1));
    let tail = &(&p.f * conductor).embed(&ring)? * &last;
    Ok(&q - &tail)
}

/// Evaluates the source variables of a biform at `g′`, landing in the
/// extended target ring.
pub(crate) fn evaluate_at_inverse(p: &JonquieresData, biform: &Polynomial) -> Result<Polynomial> {
    let ring = biform.ring();
    let images: Vec<Polynomial> = (0..ring.len())
        .map(|k| {
            let name = ring.name(k);
            match p.source().index_of(name) {
                Some(i) => p.cremona.inverse.coords()[i].embed(&p.extended),
                None => Ok(Polynomial::var_named(&p.extended, name)),
            }
        })
        .collect::<Result<_>>()?;
    biform.substitute(&images)
}

pub fn syzygetic_polynomials(p: &JonquieresData) -> Result<Vec<SyzygeticPolynomial>> {
    let monoid = implicitize(p)?;
    let data = conductor_data(&p.base_ideal(), &p.g)?;
    syzygetic_from(p, &monoid, &data)
}

pub(crate) fn syzygetic_from(
    p: &JonquieresData,
    monoid: &ImplicitMonoid,
    data: &ConductorData,
) -> Result<Vec<SyzygeticPolynomial>> {
    let mut out = Vec::new();
    for (j, c) in data.conductors.iter().enumerate() {
        let content = data.content.column(j);
        let biform = syzygy_biform(p, &content, c)?;
        let polynomial = evaluate_at_inverse(p, &biform)?;
        let extraneous_factor = divide_exact(&polynomial, &monoid.f)
            .map_err(|_| Error::Verification(format!("syzygetic polynomial {j} is not a multiple of F")))?;
        out.push(SyzygeticPolynomial {
            conductor: c.clone(),
            content,
            biform,
            polynomial,
            extraneous_factor,
        });
    }
    Ok(out)
}

/// Both sides of the inclusion-case equivalence, evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionReport {
    /// Whether `gcd(f(g′), g(g′)) = 1`; otherwise the equivalence does not
    /// apply.
    pub applicable: bool,
    /// `g ∈ I`.
    pub g_in_ideal: bool,
    /// `deg F = deg(f)·deg(G⁻¹) + 1`.
    pub degree_condition: bool,
    /// For each syzygetic polynomial `P`: `(F) = (P)`.
    pub principal_equal: Vec<bool>,
}

impl InclusionReport {
    /// The biconditional for every syzygetic polynomial (vacuous when not
    /// applicable).
    pub fn holds(&self) -> bool {
        !self.applicable
            || self
                .principal_equal
                .iter()
                .all(|&eq| self.g_in_ideal == (self.degree_condition && eq))
    }
}

pub fn inclusion_case_equivalence(p: &JonquieresData) -> Result<InclusionReport> {
    let (g_ev, f_ev) = p.evaluated()?;
    let applicable = gcd(&f_ev, &g_ev).is_constant();
    let monoid = implicitize(p)?;
    let g_in_ideal = p.base_ideal().contains(&p.g)?;
    let degree_condition = monoid.delta == p.f_degree() * p.inverse_degree() + 1;
    let syz = syzygetic_polynomials(p)?;
    let principal_equal = syz.iter().map(|s| s.extraneous_factor.is_constant()).collect();
    Ok(InclusionReport {
        applicable,
        g_in_ideal,
        degree_condition,
        principal_equal,
    })
}

/// The three conditions of the non-zero-divisor case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NzdReport {
    /// `P = g(g′) − f(g′)·D·y_{n+1}`.
    pub candidate: Polynomial,
    /// `(P) = (F)`.
    pub principal_equal: bool,
    /// `gcd(g(g′), f(g′)·D) = 1`.
    pub coprime: bool,
    /// `deg F = deg(f)·deg(G⁻¹) + deg(D) + 1`.
    pub degree_equal: bool,
    /// `deg F ≤ deg(f)·deg(G⁻¹) + deg(D) + 1`.
    pub degree_bound: bool,
}

impl NzdReport {
    pub fn consistent(&self) -> bool {
        self.principal_equal == self.coprime && self.coprime == self.degree_equal && self.degree_bound
    }
}

pub fn nzd_case(p: &JonquieresData) -> Result<NzdReport> {
    if classify_case(p)? != CaseTag::NonZeroDivisor {
        return Err(Error::Hypothesis("g is not a non-zero-divisor modulo I".into()));
    }
    let (g_ev, f_ev) = p.evaluated()?;
    let fd = &f_ev * &p.cremona.target_factor;
    let last = p.last_variable();
    let candidate = &g_ev.embed(&p.extended)? - &(&fd.embed(&p.extended)? * &last);
    let monoid = implicitize(p)?;
    let bound = p.f_degree() * p.inverse_degree() + p.cremona.target_factor.total_degree().unwrap_or(0) + 1;
    Ok(NzdReport {
        principal_equal: candidate.is_scalar_multiple_of(&monoid.f),
        coprime: gcd(&g_ev, &fd).is_constant(),
        degree_equal: monoid.delta == bound,
        degree_bound: monoid.delta <= bound,
        candidate,
    })
}

/// The Eulerian equation of a polar Cremona map:
/// `F = Σ (y_i − (d+1)·λ_i·y_{n+1})·g′_i`, where `g` has degree `d + 1`,
/// its gradient map is Cremona with inverse `grad_inverse`, and
/// `f = Σ λ_i x_i`.
pub fn eulerian_equation(g: &Polynomial, grad_inverse: &RationalMapData, lambda: &[Coeff]) -> Result<ImplicitMonoid> {
    let x = g.ring().clone();
    let n1 = x.len();
    if lambda.len() != n1 {
        return Err(Error::ImageCountMismatch {
            expected: n1,
            found: lambda.len(),
        });
    }
    let gradient = RationalMapData::new(&x, grad_inverse.source(), (0..n1).map(|i| g.derivative(i)).collect())?;
    let cremona = crate::birational::verify_cremona(&gradient, grad_inverse)
        .map_err(|e| Error::Hypothesis(format!("not homaloidal or wrong inverse of the polar map: {e}")))?;
    let f = Polynomial::from_terms(
        &x,
        (0..n1).map(|i| (crate::poly::Monomial::variable(n1, i), lambda[i].clone())),
    );
    let (g_ev, f_ev) = (grad_inverse.pull_back(g)?, grad_inverse.pull_back(&f)?);
    if f_ev.is_zero() || !gcd(&f_ev, &g_ev).is_constant() {
        return Err(Error::Hypothesis("gcd(f(g′), g(g′)) must be 1".into()));
    }
    let extended = extend_target(cremona.forward.target(), &x)?;
    let d1 = Coeff::from_integer(g.total_degree().expect("nonzero").into());
    let y = grad_inverse.source();
    let mut top = Polynomial::zero(y);
    let mut low = Polynomial::zero(y);
    for (i, gi) in grad_inverse.coords().iter().enumerate() {
        top = &top + &(&Polynomial::var(y, i) * gi);
        low = &low + &gi.scale(&(&d1 * &lambda[i]));
    }
    ImplicitMonoid::assemble(&extended, top, low, None)
}

pub fn verify_inverse_representative(p: &JonquieresData, monoid: &ImplicitMonoid) -> Result<bool> {
    verify_representative_with(p, monoid, p.cremona.inverse.coords())
}

/// The 2×2 minors of `[(f g_i)(h), g(h) ; y_i, y_{n+1}]` reduced modulo `F`,
/// for arbitrary candidate forms `h` in the target variables.
pub fn verify_representative_with(p: &JonquieresData, monoid: &ImplicitMonoid, h: &[Polynomial]) -> Result<bool> {
    let top: Vec<Polynomial> = p
        .parametrization()
        .iter()
        .map(|c| c.substitute(h).and_then(|e| e.embed(&p.extended)))
        .collect::<Result<_>>()?;
    let principal = Ideal::principal(&monoid.f);
    let ys: Vec<Polynomial> = (0..p.extended.len()).map(|i| Polynomial::var(&p.extended, i)).collect();
    for i in 0..ys.len() {
        for j in i + 1..ys.len() {
            let minor = &(&top[i] * &ys[j]) - &(&top[j] * &ys[i]);
            if !principal.contains(&minor)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Canonical generator of the kernel of `k[target] → k[source]`,
/// `y_i ↦ coords_i`, by elimination.
pub fn oracle_implicitize(coords: &[Polynomial], target: &VariableSet) -> Result<Polynomial> {
    oracle_implicitize_limited(coords, target, Limits::UNLIMITED)
}

pub fn oracle_implicitize_limited(coords: &[Polynomial], target: &VariableSet, limits: Limits) -> Result<Polynomial> {
    let Some(first) = coords.first() else {
        return Err(Error::ZeroArgument("no coordinates".into()));
    };
    let source = first.ring().clone();
    if coords.len() != target.len() {
        return Err(Error::ImageCountMismatch {
            expected: target.len(),
            found: coords.len(),
        });
    }
    let ring = source.concat(target)?;
    let gens = coords
        .iter()
        .enumerate()
        .map(|(i, c)| Ok(&Polynomial::var_named(&ring, target.name(i)) - &c.embed(&ring)?))
        .collect::<Result<Vec<_>>>()?;
    let drop: Vec<&str> = source.names().iter().map(String::as_str).collect();
    let kernel = Ideal::new(&ring, gens)?.with_limits(limits).eliminate(&drop)?;
    let gb = kernel.groebner()?;
    match gb.generators.as_slice() {
        [] => Err(Error::NotHypersurface("the image is dense".into())),
        [single] => Ok(single.canonical()),
        many => Err(Error::NotHypersurface(format!("{} generators", many.len()))),
    }
}

/// The same `h` as [`lift`] but returned for the inclusion case, where the
/// content column is a lift of `g` itself.
pub fn inclusion_content(p: &JonquieresData) -> Result<Vec<Polynomial>> {
    lift(&p.g, p.cremona.forward.coords())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poly::int;

    #[test]
    fn identity_monoid_case() {
        let p = JonquieresData::parse(VerifiedCremona::identity(2), "x0 + 2*x1", "x0^2 - x1*x2").unwrap();
        let m = implicitize(&p).unwrap();
        assert_eq!(m.f.to_string(), "y0^2 - y1*y2 - y0*y3 - 2*y1*y3");
        assert_eq!(m.delta, 2);
        let report = predicted_degree(&p).unwrap();
        assert!(report.formulas_agree());
        assert_eq!(report.window_holds(), Some(true));
        assert_eq!(report.strict_upper_holds(), Some(false));
        let oracle = oracle_implicitize(&p.parametrization(), p.extended_target()).unwrap();
        assert!(oracle.is_scalar_multiple_of(&m.f));
        assert!(verify_inverse_representative(&p, &m).unwrap());
    }

    #[test]
    fn hypotheses_are_checked() {
        let c = VerifiedCremona::identity(2);
        assert!(matches!(
            JonquieresData::parse(c.clone(), "x0", "x0*x1"),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            JonquieresData::parse(c, "x0", "x1^3"),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn p3_example() {
        let p = fixtures::p3_example();
        let m = implicitize(&p).unwrap();
        assert_eq!(m.delta, 2);
        assert_eq!(classify_case(&p).unwrap(), CaseTag::Inclusion);
        let syz = syzygetic_polynomials(&p).unwrap();
        assert_eq!(syz.len(), 1);
        let y3 = Polynomial::parse(p.extended_target(), "y3").unwrap();
        assert!(syz[0].extraneous_factor.is_scalar_multiple_of(&y3));
        let report = predicted_degree(&p).unwrap();
        assert_eq!(report.via_g, 2);
        assert!(report.formulas_agree());
        assert!(!report.evaluated_coprime);
        assert!(!inclusion_case_equivalence(&p).unwrap().applicable);
        assert!(verify_inverse_representative(&p, &m).unwrap());
    }

    #[test]
    fn plane_example() {
        let p = fixtures::plane_example([1, 2, 3]);
        let m = implicitize(&p).unwrap();
        assert_eq!(m.delta, 4);
        assert_eq!(classify_case(&p).unwrap(), CaseTag::General);
        let syz = syzygetic_polynomials(&p).unwrap();
        assert_eq!(syz.len(), 2);
        for s in &syz {
            assert_eq!(s.polynomial.total_degree(), Some(5));
            assert_eq!(s.extraneous_factor.total_degree(), Some(1));
        }
        let oracle = oracle_implicitize(&p.parametrization(), p.extended_target()).unwrap();
        assert!(oracle.is_scalar_multiple_of(&m.f));
    }

    #[test]
    fn corrupted_inverse_is_detected() {
        let p = fixtures::p3_example();
        let m = implicitize(&p).unwrap();
        let mut h = p.cremona().inverse.coords().to_vec();
        h[1] = &h[1] + &Polynomial::parse(p.target(), "y1^2").unwrap();
        assert!(!verify_representative_with(&p, &m, &h).unwrap());
    }

    #[test]
    fn eulerian_matches_implicitize() {
        let x = VariableSet::indexed("x", 3);
        let g = Polynomial::parse(&x, "x0*x1*x2").unwrap();
        let inv = fixtures::standard_involution().inverse;
        for lambda in [[1, 2, 3], [1, 0, 0]] {
            let lambda: Vec<Coeff> = lambda.iter().map(|&v| int(v)).collect();
            let e = match eulerian_equation(&g, &inv, &lambda) {
                Ok(e) => e,
                Err(Error::Hypothesis(_)) => continue,
                Err(e) => panic!("{e}"),
            };
            assert_eq!(e.delta, 3);
            let f = Polynomial::from_terms(
                &x,
                (0..3).map(|i| (crate::poly::Monomial::variable(3, i), lambda[i].clone())),
            );
            let p = JonquieresData::new(fixtures::standard_involution(), f, g.clone()).unwrap();
            assert!(implicitize(&p).unwrap().f.is_scalar_multiple_of(&e.f));
        }
    }

    #[test]
    fn nzd_conditions_agree() {
        let p = fixtures::nzd_plane_example();
        assert_eq!(classify_case(&p).unwrap(), CaseTag::NonZeroDivisor);
        let r = nzd_case(&p).unwrap();
        assert!(r.consistent());
    }
}
