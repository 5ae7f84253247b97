use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::poly::{count_monomials, divide_exact, monomials_of_degree, Monomial, Polynomial, VariableSet};

use super::{buchberger_in, GroebnerBasis, Limits, MonomialOrder};

/// Saturation chains stop here and report [`Error::SaturationCap`].
pub const SATURATION_CAP: usize = 32;

/// An ideal given by generators, with a lazily computed degrevlex basis.
pub struct Ideal {
    ring: VariableSet,
    generators: Vec<Polynomial>,
    homogeneous: bool,
    limits: Limits,
    gb: OnceLock<GroebnerBasis>,
}

/// Result of `I : J^∞`, with the exponent at which each chain `I : g_j^k`
/// stabilized.
#[derive(Debug, Clone)]
pub struct Saturation {
    pub ideal: Ideal,
    pub exponents: Vec<usize>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            homogeneous: self.homogeneous,
            limits: self.limits,
            gb,
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.generators.iter()).finish()
    }
}

impl Ideal {
    pub fn new(ring: &VariableSet, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !g.ring().same_as(ring) {
                return Err(Error::RingMismatch {
                    left: ring.to_string(),
                    right: g.ring().to_string(),
                });
            }
        }
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = generators.iter().all(Polynomial::is_homogeneous);
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            homogeneous,
            limits: Limits::UNLIMITED,
            gb: OnceLock::new(),
        })
    }

    pub fn principal(p: &Polynomial) -> Self {
        Ideal::new(p.ring(), vec![p.clone()]).expect("single ring")
    }

    pub fn unit(ring: &VariableSet) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("single ring")
    }

    /// The ideal of all variables.
    pub fn maximal(ring: &VariableSet) -> Self {
        let gens = (0..ring.len()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal::new(ring, gens).expect("single ring")
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    fn derived(&self, generators: Vec<Polynomial>) -> Ideal {
        Ideal::new(&self.ring, generators)
            .expect("derived ideal stays in the ring")
            .with_limits(self.limits)
    }

    pub fn ring(&self) -> &VariableSet {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Reduced degrevlex basis, computed once.
    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = self.groebner_in(&MonomialOrder::DegRevLex)?;
        let _ = self.gb.set(gb);
        Ok(self.gb.get().expect("just set"))
    }

    /// Reduced basis for an arbitrary order (not cached).
    pub fn groebner_in(&self, order: &MonomialOrder) -> Result<GroebnerBasis> {
        if self.generators.is_empty() {
            return Ok(GroebnerBasis {
                ring: self.ring.clone(),
                order: order.clone(),
                generators: Vec::new(),
                reduced: true,
            });
        }
        buchberger_in(&self.ring, &self.generators, order, self.limits)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.groebner()?.contains(p))
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        let gb = self.groebner()?;
        Ok(other.generators.iter().all(|g| gb.contains(g)))
    }

    /// Equality as ideals, by comparing reduced bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.groebner()?.generators == other.groebner()?.generators)
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        Ok(super::normal_form(p, self.groebner()?))
    }

    /// `I + J`.
    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        self.derived(gens)
    }

    /// `I · J`.
    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a * b);
            }
        }
        self.derived(gens)
    }

    /// `I · (f)`.
    pub fn times(&self, f: &Polynomial) -> Ideal {
        self.derived(self.generators.iter().map(|g| g * f).collect())
    }

    /// `I ∩ J` via `t·I + (1 − t)·J ∩ k[x]`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.is_zero() || other.is_zero() {
            return Ok(self.derived(Vec::new()));
        }
        let t_name = self.ring.fresh_name("t");
        let big = VariableSet::new(&[t_name.as_str()])?.concat(&self.ring)?;
        let t = Polynomial::var(&big, 0);
        let one_minus_t = &Polynomial::one(&big) - &t;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(&t * &g.embed(&big)?);
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.embed(&big)?);
        }
        let lifted = Ideal::new(&big, gens)?.with_limits(self.limits);
        lifted.eliminate(&[t_name.as_str()])
    }

    /// `I : (g)`, minimalized.
    pub fn colon(&self, g: &Polynomial) -> Result<Ideal> {
        let raw = self.colon_raw(g)?;
        raw.minimalize()
    }

    /// `I : (g)` generated by a Gröbner basis (no minimalization).
    pub fn colon_raw(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_zero() {
            return Err(Error::ZeroArgument("colon by the zero polynomial".into()));
        }
        if !g.ring().same_as(&self.ring) {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: g.ring().to_string(),
            });
        }
        if g.is_constant() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let meet = self.intersect(&Ideal::principal(g).with_limits(self.limits))?;
        let mut gens = Vec::with_capacity(meet.generators.len());
        for h in &meet.generators {
            gens.push(divide_exact(h, g)?);
        }
        Ok(self.derived(gens))
    }

    /// Drops generators lying in the ideal of the others, scanning by
    /// ascending degree.
    pub fn minimalize(&self) -> Result<Ideal> {
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in &self.generators {
            let c = g.canonical();
            if !c.is_zero() && !gens.contains(&c) {
                gens.push(c);
            }
        }
        gens.sort_by(|a, b| {
            a.total_degree()
                .cmp(&b.total_degree())
                .then_with(|| b.leading_term().map(|t| t.0).cmp(&a.leading_term().map(|t| t.0)))
        });
        if gens.iter().any(Polynomial::is_constant) {
            return Ok(self.derived(vec![Polynomial::one(&self.ring)]));
        }
        let kept = if self.homogeneous {
            // graded Nakayama: a generator is redundant iff it lies in the
            // ideal of the kept generators of no larger degree
            let mut kept: Vec<Polynomial> = Vec::new();
            for g in gens {
                let redundant = !kept.is_empty() && self.derived(kept.clone()).contains(&g)?;
                if !redundant {
                    kept.push(g);
                }
            }
            kept
        } else {
            let mut kept = gens;
            let mut i = 0;
            while i < kept.len() {
                let others: Vec<Polynomial> = kept
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, p)| p.clone())
                    .collect();
                if !others.is_empty() && self.derived(others).contains(&kept[i])? {
                    kept.remove(i);
                } else {
                    i += 1;
                }
            }
            kept
        };
        Ok(self.derived(kept))
    }

    /// `I : (g)^∞` by the chain `I : g^k`; returns the stabilization exponent.
    pub fn saturate_element(&self, g: &Polynomial) -> Result<(Ideal, usize)> {
        if g.is_zero() {
            return Err(Error::ZeroArgument("saturation by the zero polynomial".into()));
        }
        if g.is_constant() {
            return Ok((self.clone(), 0));
        }
        if self.homogeneous && g.num_terms() == 1 {
            return self.saturate_monomial(g);
        }
        self.saturate_chain(g)
    }

    /// `I : (g)^∞` by iterated colons, without the monomial shortcut.
    pub fn saturate_chain(&self, g: &Polynomial) -> Result<(Ideal, usize)> {
        if g.is_zero() {
            return Err(Error::ZeroArgument("saturation by the zero polynomial".into()));
        }
        let mut current = self.clone();
        let cap = self.limits().saturation_cap();
        for k in 0..cap {
            let next = current.colon_raw(g)?;
            if next.equals(&current)? {
                return Ok((current, k));
            }
            current = next;
        }
        Err(Error::SaturationCap(cap))
    }

    /// Homogeneous `I` saturated by a monomial, one variable at a time. Each
    /// variable is moved last in degrevlex so the saturation is read off the
    /// basis by dividing out its powers. The reported exponent `k` satisfies
    /// `I : g^k = I : g^∞`.
    fn saturate_monomial(&self, g: &Polynomial) -> Result<(Ideal, usize)> {
        let (m, _) = g.leading_term().expect("nonzero");
        let exps = m.exponents().to_vec();
        let mut current = self.clone();
        let mut k = 0usize;
        for (j, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (next, kj) = current.saturate_variable(j)?;
            k = k.max(kj.div_ceil(e as usize));
            current = next;
        }
        Ok((current, k))
    }

    fn saturate_variable(&self, j: usize) -> Result<(Ideal, usize)> {
        if self.is_zero() {
            return Ok((self.clone(), 0));
        }
        let n = self.ring.len();
        let mut names: Vec<&str> = (0..n).filter(|&i| i != j).map(|i| self.ring.name(i)).collect();
        names.push(self.ring.name(j));
        let permuted = VariableSet::new(&names)?;
        let gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|p| p.embed(&permuted))
            .collect::<Result<_>>()?;
        let gb = buchberger_in(&permuted, &gens, &MonomialOrder::DegRevLex, self.limits)?;
        let mut k = 0usize;
        let mut out = Vec::with_capacity(gb.generators.len());
        for p in &gb.generators {
            let a = p.terms().map(|(m, _)| m.exponents()[n - 1]).min().unwrap_or(0);
            k = k.max(a as usize);
            let mut shift = vec![0u16; n];
            shift[n - 1] = a;
            let shift = Monomial::from_exponents(&shift);
            let q = Polynomial::from_terms(
                &permuted,
                p.terms()
                    .map(|(m, c)| (m.div(&shift).expect("power divides"), c.clone())),
            );
            out.push(q.embed(&self.ring)?);
        }
        Ok((self.derived(out), k))
    }

    /// `I : J^∞` as the intersection of the element saturations over the
    /// generators of `J`.
    pub fn saturate(&self, j: &Ideal) -> Result<Saturation> {
        if j.is_zero() {
            return Err(Error::ZeroArgument("saturation by the zero ideal".into()));
        }
        let mut exponents = Vec::new();
        let mut result: Option<Ideal> = None;
        for g in &j.generators {
            let (sat, k) = self.saturate_element(g)?;
            exponents.push(k);
            result = Some(match result {
                None => sat,
                Some(acc) => {
                    if acc.contains_ideal(&sat)? {
                        sat
                    } else if sat.contains_ideal(&acc)? {
                        acc
                    } else {
                        acc.intersect(&sat)?
                    }
                }
            });
        }
        let ideal = result.expect("nonempty generator list");
        let reduced = ideal.groebner()?.generators.clone();
        Ok(Saturation {
            ideal: self.derived(reduced),
            exponents,
        })
    }

    /// `I ∩ k[remaining variables]`, as an ideal of the subring.
    pub fn eliminate(&self, drop: &[&str]) -> Result<Ideal> {
        for name in drop {
            if self.ring.index_of(name).is_none() {
                return Err(Error::UnknownVariable(name.to_string()));
            }
        }
        if drop.len() >= self.ring.len() {
            return Err(Error::InvalidVariables(
                "elimination must keep at least one variable".into(),
            ));
        }
        let keep: Vec<&str> = self
            .ring
            .names()
            .iter()
            .map(String::as_str)
            .filter(|n| !drop.contains(n))
            .collect();
        let sub = VariableSet::new(&keep)?;
        if drop.is_empty() {
            return Ok(self.clone());
        }
        let mut order_names: Vec<&str> = drop.to_vec();
        order_names.extend(keep.iter());
        let permuted = VariableSet::new(&order_names)?;
        let gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| g.embed(&permuted))
            .collect::<Result<_>>()?;
        let gb = if gens.is_empty() {
            Vec::new()
        } else {
            buchberger_in(&permuted, &gens, &MonomialOrder::Block(drop.len()), self.limits)?.generators
        };
        let kept: Vec<Polynomial> = gb
            .into_iter()
            .filter(|p| {
                let s = p.support();
                !s[..drop.len()].iter().any(|&u| u)
            })
            .map(|p| p.embed(&sub))
            .collect::<Result<_>>()?;
        Ok(Ideal::new(&sub, kept)?.with_limits(self.limits))
    }

    /// Krull dimension and codimension of `R / I`.
    pub fn dim_and_codim(&self) -> Result<(usize, usize)> {
        let gb = self.groebner()?;
        if gb.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let n = self.ring.len();
        let lms = gb.leading_monomials();
        let supports: Vec<u64> = lms
            .iter()
            .map(|m| {
                m.exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(0u64, |acc, (i, _)| acc | (1 << i))
            })
            .collect();
        assert!(n <= 63, "dimension search supports at most 63 variables");
        // largest subset of variables containing the support of no leading monomial
        let mut best = 0usize;
        for subset in 0u64..(1u64 << n) {
            let size = subset.count_ones() as usize;
            if size <= best {
                continue;
            }
            if supports.iter().all(|&s| s & !subset != 0) {
                best = size;
            }
        }
        Ok((best, n - best))
    }

    /// `dim_k I_mu` for a homogeneous ideal.
    pub fn graded_piece_dim(&self, mu: u32) -> Result<u64> {
        if !self.homogeneous {
            return Err(Error::NotHomogeneous("graded pieces need a homogeneous ideal".into()));
        }
        let total = count_monomials(self.ring.len(), mu);
        let gb = self.groebner()?;
        if gb.is_unit() {
            return Ok(total);
        }
        let lms = gb.leading_monomials();
        let standard = count_standard(&lms, self.ring.len(), mu);
        Ok(total - standard)
    }

    /// Hilbert function of `R / I` at `mu`.
    pub fn quotient_hilbert(&self, mu: u32) -> Result<u64> {
        Ok(count_monomials(self.ring.len(), mu) - self.graded_piece_dim(mu)?)
    }

    /// Same ideal re-expressed in another ring containing its variables.
    pub fn embed(&self, target: &VariableSet) -> Result<Ideal> {
        let gens = self.generators.iter().map(|g| g.embed(target)).collect::<Result<_>>()?;
        Ok(Ideal::new(target, gens)?.with_limits(self.limits))
    }
}

fn count_standard(lms: &[Monomial], nvars: usize, mu: u32) -> u64 {
    monomials_of_degree(nvars, mu)
        .iter()
        .filter(|m| !lms.iter().any(|l| l.divides(m)))
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> VariableSet {
        VariableSet::indexed("x", 3)
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(&ring(), s).unwrap()
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::new(&ring(), gens.iter().map(|s| p(s)).collect()).unwrap()
    }

    #[test]
    fn intersections() {
        let r = ideal(&["x0"]).intersect(&ideal(&["x1"])).unwrap();
        assert!(r.equals(&ideal(&["x0*x1"])).unwrap());
        let i = ideal(&["x0^2 - x1*x2", "x1^3"]);
        assert!(i.intersect(&i).unwrap().equals(&i).unwrap());
        let r = ideal(&["x0", "x1"]).intersect(&ideal(&["x0", "x2"])).unwrap();
        assert!(r.equals(&ideal(&["x0", "x1*x2"])).unwrap());
    }

    #[test]
    fn conductor_of_plane_example() {
        let i = ideal(&["x0*x1", "x0*x2", "x1*x2"]);
        let c = i.colon(&p("x0^2*x1 - x2^3")).unwrap();
        assert_eq!(c.generators(), &[p("x0"), p("x1")]);
    }

    #[test]
    fn colon_edge_cases() {
        let i = ideal(&["x0*x1", "x0*x2", "x1*x2"]);
        let c = i.colon(&p("x0*x1*x2 + x0^2*x1")).unwrap();
        assert!(c.is_unit().unwrap());
        let same = i.colon(&p("5")).unwrap();
        assert!(same.equals(&i).unwrap());
        assert!(matches!(
            i.colon(&Polynomial::zero(&ring())),
            Err(Error::ZeroArgument(_))
        ));
    }

    #[test]
    fn monomial_saturation_matches_chain() {
        let i = ideal(&["x0^3*x1 - x2^4", "x0^2*x1^2", "x1^3*x2"]);
        for g in ["x1", "x0*x1", "x2^2"] {
            let (fast, k) = i.saturate_element(&p(g)).unwrap();
            let (slow, _) = i.saturate_chain(&p(g)).unwrap();
            assert!(fast.equals(&slow).unwrap(), "{g}");
            let mut bounded = i.clone();
            for _ in 0..k {
                bounded = bounded.colon_raw(&p(g)).unwrap();
            }
            assert!(bounded.equals(&slow).unwrap(), "{g}");
        }
    }

    #[test]
    fn saturations() {
        let i = ideal(&["x0^2", "x0*x1"]);
        let s = i.saturate(&ideal(&["x0", "x1"])).unwrap();
        assert!(s.ideal.equals(&ideal(&["x0"])).unwrap());
        let (same, k) = i.saturate_element(&p("7")).unwrap();
        assert!(same.equals(&i).unwrap());
        assert_eq!(k, 0);
        let inv = ideal(&["x0*x1", "x0*x2", "x1*x2"]);
        let s = inv.saturate(&Ideal::maximal(&ring())).unwrap();
        assert!(s.ideal.equals(&inv).unwrap());
        assert_eq!(s.exponents, vec![1, 1, 1]);
    }

    #[test]
    fn veronese_conic_by_elimination() {
        let r = VariableSet::new(&["x0", "x1", "y0", "y1", "y2"]).unwrap();
        let q = |s: &str| Polynomial::parse(&r, s).unwrap();
        let i = Ideal::new(&r, vec![q("y0 - x0^2"), q("y1 - x0*x1"), q("y2 - x1^2")]).unwrap();
        let e = i.eliminate(&["x0", "x1"]).unwrap();
        let y = VariableSet::indexed("y", 3);
        assert_eq!(e.ring(), &y);
        assert_eq!(e.generators().len(), 1);
        assert!(e.generators()[0].is_scalar_multiple_of(&Polynomial::parse(&y, "y0*y2 - y1^2").unwrap()));
        let same = i.eliminate(&[]).unwrap();
        assert!(same.equals(&i).unwrap());
    }

    #[test]
    fn dimensions() {
        assert_eq!(ideal(&["x0", "x1", "x2"]).dim_and_codim().unwrap(), (0, 3));
        assert_eq!(ideal(&["x0*x1", "x0*x2", "x1*x2"]).dim_and_codim().unwrap(), (1, 2));
        assert_eq!(Ideal::new(&ring(), vec![]).unwrap().dim_and_codim().unwrap(), (3, 0));
        assert!(matches!(
            ideal(&["x0", "1 - x0"]).dim_and_codim(),
            Err(Error::UnitIdeal)
        ));
    }

    #[test]
    fn graded_pieces() {
        let i = ideal(&["x0^2"]);
        assert_eq!(i.graded_piece_dim(1).unwrap(), 0);
        assert_eq!(i.graded_piece_dim(2).unwrap(), 1);
        assert_eq!(i.graded_piece_dim(3).unwrap(), 3);
        assert_eq!(Ideal::unit(&ring()).graded_piece_dim(4).unwrap(), 15);
        assert_eq!(ideal(&["x0*x1", "x0*x2", "x1*x2"]).graded_piece_dim(2).unwrap(), 3);
        assert!(ideal(&["x0^2 + x1"]).graded_piece_dim(2).is_err());
    }
}
