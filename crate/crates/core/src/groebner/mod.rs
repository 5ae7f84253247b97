//! Buchberger's algorithm and the ideal operations built on it.
//!
//! Bases are computed over the integers with fraction-free reduction and
//! returned monic over the rationals. Pair bookkeeping follows
//! Gebauer–Möller, which applies the coprime-leading-monomial criterion and
//! the chain criterion; pairs are processed by lcm degree, then sugar.

mod ideal;
mod lift;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{cmp_degrevlex, cmp_lex, Monomial, Polynomial, VariableSet};

pub use ideal::{Ideal, Saturation, SATURATION_CAP};
pub use lift::lift;

/// Monomial order on exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    /// Degrevlex on the first `k` variables, ties broken by degrevlex on the
    /// rest; eliminates the first block.
    Block(usize),
    /// Weighted degree first, ties broken by degrevlex.
    Weighted(Vec<u32>),
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => cmp_degrevlex(a, b),
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::Block(k) => {
                let k = (*k).min(a.len());
                cmp_degrevlex(&a[..k], &b[..k]).then_with(|| cmp_degrevlex(&a[k..], &b[k..]))
            }
            MonomialOrder::Weighted(w) => {
                let wa: u64 = a.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                let wb: u64 = b.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                wa.cmp(&wb).then_with(|| cmp_degrevlex(a, b))
            }
        }
    }

    /// Leading term of `p` under this order.
    pub fn leading_term<'a>(&self, p: &'a Polynomial) -> Option<(&'a Monomial, &'a BigRational)> {
        p.terms()
            .max_by(|(a, _), (b, _)| self.cmp(a.exponents(), b.exponents()))
    }
}

/// Resource limits for a basis computation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of S-pairs reduced per basis computation.
    pub max_pairs: Option<usize>,
    /// Maximum length of a saturation chain; `None` means [`SATURATION_CAP`].
    pub max_saturation: Option<usize>,
}

impl Limits {
    pub const UNLIMITED: Limits = Limits {
        max_pairs: None,
        max_saturation: None,
    };

    pub fn pairs(n: usize) -> Self {
        Limits {
            max_pairs: Some(n),
            max_saturation: None,
        }
    }

    pub fn with_saturation_cap(self, cap: usize) -> Self {
        Limits {
            max_saturation: Some(cap),
            ..self
        }
    }

    pub fn saturation_cap(&self) -> usize {
        self.max_saturation.unwrap_or(SATURATION_CAP)
    }
}

/// A Gröbner basis; when `reduced`, generators are monic, auto-reduced and
/// sorted by ascending leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub ring: VariableSet,
    pub order: MonomialOrder,
    pub generators: Vec<Polynomial>,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| self.order.leading_term(g).expect("nonzero").0.clone())
            .collect()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        reduces_to_zero(p, self)
    }
}

/// Polynomial with integer coefficients, terms sorted ascending in the order.
#[derive(Clone)]
struct IPoly {
    terms: Vec<(Monomial, BigInt)>,
    sugar: u32,
}

impl IPoly {
    fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero").0
    }

    fn lc(&self) -> &BigInt {
        &self.terms.last().expect("nonzero").1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_primitive(&mut self) {
        let mut content = self.terms.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        if self.terms.last().map(|t| t.1.is_negative()).unwrap_or(false) {
            content = -content;
        }
        if !content.is_one() && !content.is_zero() {
            for t in &mut self.terms {
                t.1 = &t.1 / &content;
            }
        }
    }
}

fn to_ipoly(p: &Polynomial, order: &MonomialOrder) -> IPoly {
    let den = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut terms: Vec<(Monomial, BigInt)> = p.terms().map(|(m, c)| (m.clone(), (c * &den).to_integer())).collect();
    terms.sort_by(|a, b| order.cmp(a.0.exponents(), b.0.exponents()));
    let sugar = terms.iter().map(|t| t.0.degree()).max().unwrap_or(0);
    let mut ip = IPoly { terms, sugar };
    ip.make_primitive();
    ip
}

fn to_polynomial(ring: &VariableSet, p: &IPoly, monic: bool) -> Polynomial {
    let lc = p.lc().clone();
    let terms = p.terms.iter().map(|(m, c)| {
        let q = if monic {
            BigRational::new(c.clone(), lc.clone())
        } else {
            BigRational::from_integer(c.clone())
        };
        (m.clone(), q)
    });
    Polynomial::from_terms(ring, terms)
}

/// Bit `i` set when variable `i` (mod 64) occurs.
#[inline]
fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            mask |= 1 << (i % 64);
        }
    }
    mask
}

struct Reducer<'a> {
    order: &'a MonomialOrder,
    basis: Vec<(&'a IPoly, u64, u32)>,
}

impl<'a> Reducer<'a> {
    fn new(order: &'a MonomialOrder, basis: impl IntoIterator<Item = &'a IPoly>) -> Self {
        Reducer {
            order,
            basis: basis
                .into_iter()
                .map(|g| (g, divmask(g.lm()), g.lm().degree()))
                .collect(),
        }
    }

    fn find_divisor(&self, m: &Monomial) -> Option<&'a IPoly> {
        let mask = divmask(m);
        let deg = m.degree();
        self.basis
            .iter()
            .find(|(g, gm, gd)| *gd <= deg && gm & !mask == 0 && g.lm().divides(m))
            .map(|(g, _, _)| *g)
    }

    /// Full fraction-free reduction. Returns `(remainder, multiplier)` with
    /// `multiplier * p ≡ remainder` modulo the basis.
    fn reduce(&self, p: &IPoly, top_only: bool) -> (IPoly, BigRational) {
        let mut work = p.terms.clone();
        let mut rem: Vec<(Monomial, BigInt)> = Vec::new();
        let mut multiplier = BigRational::one();
        let mut sugar = p.sugar;
        let mut steps = 0usize;
        while let Some((m, c)) = work.last() {
            match self.find_divisor(m) {
                Some(g) => {
                    let q = m.div(g.lm()).expect("divisor");
                    let common = c.gcd(g.lc());
                    let mut a = g.lc() / &common;
                    let mut b = c / &common;
                    if a.is_negative() {
                        a = -a;
                        b = -b;
                    }
                    work.pop();
                    let tail = &g.terms[..g.terms.len() - 1];
                    work = merge_scaled(&work, &a, tail, &q, &b, self.order);
                    if !a.is_one() {
                        for t in &mut rem {
                            t.1 *= &a;
                        }
                        multiplier *= BigRational::from_integer(a);
                    }
                    sugar = sugar.max(g.sugar + q.degree());
                    steps += 1;
                    if steps.is_multiple_of(16) {
                        let g = shrink_content(&mut work, &mut rem);
                        multiplier /= BigRational::from_integer(g);
                    }
                }
                None => {
                    if top_only {
                        break;
                    }
                    rem.push(work.pop().expect("nonempty"));
                }
            }
        }
        // `rem` was built in descending order
        rem.reverse();
        let mut terms = work;
        terms.extend(rem);
        terms.sort_by(|a, b| self.order.cmp(a.0.exponents(), b.0.exponents()));
        (IPoly { terms, sugar }, multiplier)
    }
}

/// Divides out the common integer content; returns the divisor (1 if none).
fn shrink_content(work: &mut [(Monomial, BigInt)], rem: &mut [(Monomial, BigInt)]) -> BigInt {
    let g = work
        .iter()
        .chain(rem.iter())
        .fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return BigInt::one();
    }
    for t in work.iter_mut().chain(rem.iter_mut()) {
        t.1 = &t.1 / &g;
    }
    g
}

/// `a * p - b * q * m`, both inputs ascending; output ascending.
fn merge_scaled(
    p: &[(Monomial, BigInt)],
    a: &BigInt,
    q: &[(Monomial, BigInt)],
    m: &Monomial,
    b: &BigInt,
    order: &MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let a_one = a.is_one();
    let mut i = 0;
    let mut j = 0;
    let mut qm: Option<Monomial> = q.first().map(|t| t.0.mul(m));
    while i < p.len() || j < q.len() {
        let ord = match (p.get(i), &qm) {
            (Some(pt), Some(qt)) => order.cmp(pt.0.exponents(), qt.exponents()),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Less => {
                let c = if a_one { p[i].1.clone() } else { &p[i].1 * a };
                out.push((p[i].0.clone(), c));
                i += 1;
            }
            Ordering::Greater => {
                out.push((qm.take().expect("q term"), -(&q[j].1 * b)));
                j += 1;
                qm = q.get(j).map(|t| t.0.mul(m));
            }
            Ordering::Equal => {
                let pc = if a_one { p[i].1.clone() } else { &p[i].1 * a };
                let c = pc - &q[j].1 * b;
                if !c.is_zero() {
                    out.push((p[i].0.clone(), c));
                }
                i += 1;
                j += 1;
                qm = q.get(j).map(|t| t.0.mul(m));
            }
        }
    }
    out
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
    sugar: u32,
}

struct Engine<'a> {
    order: &'a MonomialOrder,
    polys: Vec<IPoly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<'a> Engine<'a> {
    fn make_pair(&self, i: usize, j: usize) -> Pair {
        let (pi, pj) = (&self.polys[i], &self.polys[j]);
        let lcm = pi.lm().lcm(pj.lm());
        let d = lcm.degree();
        let sugar = (pi.sugar + d - pi.lm().degree()).max(pj.sugar + d - pj.lm().degree());
        Pair {
            i,
            j,
            lcm,
            degree: d,
            sugar,
        }
    }

    /// Gebauer–Möller update with the new element `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.polys[h].lm().clone();
        let candidates: Vec<Pair> = self.active.iter().map(|&g| self.make_pair(h, g)).collect();

        // chain criterion among new pairs
        let mut kept: Vec<Pair> = Vec::new();
        for (idx, p) in candidates.iter().enumerate() {
            let coprime = self.polys[p.j].lm().is_coprime(&lm_h);
            let dominated = !coprime
                && candidates[idx + 1..]
                    .iter()
                    .chain(kept.iter())
                    .any(|q| q.lcm.divides(&p.lcm));
            if !dominated {
                kept.push(p.clone());
            }
        }
        // among pairs with equal lcm keep one; drop coprime pairs
        let mut new_pairs: Vec<Pair> = Vec::new();
        for p in kept {
            if self.polys[p.j].lm().is_coprime(&lm_h) {
                continue;
            }
            if new_pairs.iter().any(|q| q.lcm == p.lcm) {
                continue;
            }
            new_pairs.push(p);
        }

        // chain criterion on old pairs
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lm_h.divides(&p.lcm) {
                return true;
            }
            let lcm_ih = polys[p.i].lm().lcm(&lm_h);
            let lcm_jh = polys[p.j].lm().lcm(&lm_h);
            lcm_ih == p.lcm || lcm_jh == p.lcm
        });
        self.pairs.extend(new_pairs);

        self.active.retain(|&g| !lm_h.divides(polys[g].lm()));
        self.active.push(h);
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                pa.degree
                    .cmp(&pb.degree)
                    .then(pa.sugar.cmp(&pb.sugar))
                    .then_with(|| order.cmp(pa.lcm.exponents(), pb.lcm.exponents()))
                    .then((pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .expect("nonempty");
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, pair: &Pair) -> IPoly {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let mf = pair.lcm.div(f.lm()).expect("lcm");
        let mg = pair.lcm.div(g.lm()).expect("lcm");
        let common = f.lc().gcd(g.lc());
        let a = g.lc() / &common;
        let b = f.lc() / &common;
        let ft: Vec<(Monomial, BigInt)> = f.terms[..f.terms.len() - 1]
            .iter()
            .map(|(m, c)| (m.mul(&mf), c.clone()))
            .collect();
        let gt = &g.terms[..g.terms.len() - 1];
        let terms = merge_scaled(&ft, &a, gt, &mg, &b, self.order);
        IPoly {
            terms,
            sugar: pair.sugar,
        }
    }

    fn reduce_by_active(&self, p: &IPoly) -> IPoly {
        let reducer = Reducer::new(self.order, self.active.iter().map(|&i| &self.polys[i]));
        let (mut r, _) = reducer.reduce(p, false);
        r.make_primitive();
        r
    }
}

/// Reduced Gröbner basis of `gens` under `order`.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> GroebnerBasis {
    buchberger_limited(gens, order, Limits::UNLIMITED).expect("unlimited computation")
}

/// As [`buchberger`], failing with [`Error::BudgetExceeded`] past the limits.
pub fn buchberger_limited(gens: &[Polynomial], order: &MonomialOrder, limits: Limits) -> Result<GroebnerBasis> {
    let ring = match gens.first() {
        Some(p) => p.ring().clone(),
        None => {
            return Err(Error::InvalidVariables(
                "cannot infer the ring of an empty generator list".into(),
            ))
        }
    };
    for g in gens {
        if !g.ring().same_as(&ring) {
            return Err(Error::RingMismatch {
                left: ring.to_string(),
                right: g.ring().to_string(),
            });
        }
    }
    buchberger_in(&ring, gens, order, limits)
}

pub(crate) fn buchberger_in(
    ring: &VariableSet,
    gens: &[Polynomial],
    order: &MonomialOrder,
    limits: Limits,
) -> Result<GroebnerBasis> {
    let mut inputs: Vec<IPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_ipoly(g, order))
        .collect();
    if let Some(unit) = inputs.iter().find(|p| p.lm().is_one()) {
        let _ = unit;
        return Ok(GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            generators: vec![Polynomial::one(ring)],
            reduced: true,
        });
    }
    inputs.sort_by(|a, b| {
        a.lm()
            .degree()
            .cmp(&b.lm().degree())
            .then_with(|| order.cmp(a.lm().exponents(), b.lm().exponents()))
    });

    let mut engine = Engine {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for p in inputs {
        let r = engine.reduce_by_active(&p);
        if r.is_zero() {
            continue;
        }
        engine.polys.push(r);
        let h = engine.polys.len() - 1;
        engine.update(h);
    }

    let mut processed = 0usize;
    while let Some(pair) = engine.select_pair() {
        processed += 1;
        if let Some(max) = limits.max_pairs {
            if processed > max {
                return Err(Error::BudgetExceeded(format!(
                    "more than {max} S-pairs in a basis computation over {} variables",
                    ring.len()
                )));
            }
        }
        let s = engine.spoly(&pair);
        if s.is_zero() {
            continue;
        }
        let r = engine.reduce_by_active(&s);
        if r.is_zero() {
            continue;
        }
        let is_unit = r.lm().is_one();
        engine.polys.push(r);
        let h = engine.polys.len() - 1;
        if is_unit {
            engine.active = vec![h];
            engine.pairs.clear();
            break;
        }
        engine.update(h);
    }

    Ok(GroebnerBasis {
        ring: ring.clone(),
        order: order.clone(),
        generators: interreduce(ring, &engine, order),
        reduced: true,
    })
}

fn interreduce(ring: &VariableSet, engine: &Engine<'_>, order: &MonomialOrder) -> Vec<Polynomial> {
    let mut minimal: Vec<&IPoly> = Vec::new();
    let mut cands: Vec<&IPoly> = engine.active.iter().map(|&i| &engine.polys[i]).collect();
    cands.sort_by(|a, b| order.cmp(a.lm().exponents(), b.lm().exponents()));
    for c in cands {
        if minimal.iter().any(|m| m.lm().divides(c.lm())) {
            continue;
        }
        minimal.push(c);
    }
    let mut out: Vec<IPoly> = Vec::with_capacity(minimal.len());
    for (k, p) in minimal.iter().enumerate() {
        let others = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, q)| *q);
        let reducer = Reducer::new(order, others);
        // leading term is irreducible by the others; reduce the tail
        let (mut r, _) = reducer.reduce(p, false);
        r.make_primitive();
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(a.lm().exponents(), b.lm().exponents()));
    out.iter().map(|p| to_polynomial(ring, p, true)).collect()
}

/// The unique remainder of `p` modulo the basis.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    assert!(p.ring().same_as(&gb.ring), "normal form across rings");
    if p.is_zero() {
        return p.clone();
    }
    let basis: Vec<IPoly> = gb.generators.iter().map(|g| to_ipoly(g, &gb.order)).collect();
    let reducer = Reducer::new(&gb.order, basis.iter());
    let den = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut terms: Vec<(Monomial, BigInt)> = p.terms().map(|(m, c)| (m.clone(), (c * &den).to_integer())).collect();
    terms.sort_by(|a, b| gb.order.cmp(a.0.exponents(), b.0.exponents()));
    let ip = IPoly { terms, sugar: 0 };
    let (r, multiplier) = reducer.reduce(&ip, false);
    let scale = (multiplier * BigRational::from_integer(den)).recip();
    Polynomial::from_terms(
        &gb.ring,
        r.terms
            .into_iter()
            .map(|(m, c)| (m, BigRational::from_integer(c) * &scale)),
    )
}

fn reduces_to_zero(p: &Polynomial, gb: &GroebnerBasis) -> bool {
    if p.is_zero() {
        return true;
    }
    let basis: Vec<IPoly> = gb.generators.iter().map(|g| to_ipoly(g, &gb.order)).collect();
    let reducer = Reducer::new(&gb.order, basis.iter());
    let (r, _) = reducer.reduce(&to_ipoly(p, &gb.order), false);
    r.is_zero()
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

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            let gb = buchberger(&[p("x0"), p("x1")], &order);
            assert_eq!(gb.generators, vec![p("x1"), p("x0")]);
        }
    }

    #[test]
    fn linear_triangularization_in_lex() {
        let gb = buchberger(&[p("x0 - x1"), p("x1 - x2")], &MonomialOrder::Lex);
        assert_eq!(gb.generators, vec![p("x1 - x2"), p("x0 - x2")]);
    }

    #[test]
    fn involution_base_ideal_is_a_basis() {
        let gens = [p("x0*x1"), p("x0*x2"), p("x1*x2")];
        let gb = buchberger(&gens, &MonomialOrder::DegRevLex);
        assert_eq!(gb.generators, vec![p("x1*x2"), p("x0*x2"), p("x0*x1")]);
    }

    #[test]
    fn normal_form_basics() {
        let gb = buchberger(&[p("x0*x1"), p("x0*x2"), p("x1*x2")], &MonomialOrder::DegRevLex);
        assert!(normal_form(&p("3*x0^2*x1 - x1*x2^5"), &gb).is_zero());
        assert_eq!(normal_form(&p("1"), &gb), p("1"));
        let r = normal_form(&p("1/2*x0^2 + x0*x1"), &gb);
        assert_eq!(r, p("1/2*x0^2"));
    }

    #[test]
    fn normal_form_is_exact_remainder() {
        let gb = buchberger(&[p("2*x0^2 - 3*x1*x2"), p("x1^2 + x0*x2")], &MonomialOrder::DegRevLex);
        let f = p("5*x0^3 + x1^3 - 7/3*x2^3");
        let r = normal_form(&f, &gb);
        assert_eq!(normal_form(&r, &gb), r);
        assert!(gb.contains(&(&f - &r)));
    }

    #[test]
    fn budget_is_reported() {
        let gens = [
            p("x0^2*x1 - x2^3 + x1"),
            p("x0*x1^2 - x1*x2^2 + x0"),
            p("x0^2 - x1*x2 + x2"),
        ];
        let err = buchberger_limited(&gens, &MonomialOrder::DegRevLex, Limits::pairs(1));
        assert!(matches!(err, Err(Error::BudgetExceeded(_))));
    }
}
