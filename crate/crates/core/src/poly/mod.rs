//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Every [`Polynomial`] carries the [`VariableSet`] it lives in. Arithmetic
//! between polynomials of different rings is a structural error; the checked
//! entry points ([`arith`], [`Polynomial::try_add`], ...) report it, while the
//! operator overloads panic and are meant for code paths where the ring is
//! known to match.

mod gcd;
mod monomial;
mod parse;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub use gcd::{divide_exact, gcd};
pub use monomial::{cmp_degrevlex, cmp_lex, count_monomials, monomials_of_degree, Monomial};
pub use parse::parse_polynomial;

/// Exact rational coefficient.
pub type Coeff = BigRational;

pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Ordered list of distinct variable names.
#[derive(Clone)]
pub struct VariableSet(Arc<[String]>);

impl VariableSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for name in names {
            let name = name.as_ref();
            if !is_identifier(name) {
                return Err(Error::InvalidVariables(format!("`{name}` is not an identifier")));
            }
            if !seen.insert(name) {
                return Err(Error::InvalidVariables(format!("duplicate variable `{name}`")));
            }
        }
        Ok(VariableSet(names.iter().map(|s| s.as_ref().to_string()).collect()))
    }

    /// `prefix0, ..., prefix{count-1}`.
    pub fn indexed(prefix: &str, count: usize) -> Self {
        let names: Vec<String> = (0..count).map(|i| format!("{prefix}{i}")).collect();
        VariableSet(names.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, index: usize) -> &str {
        &self.0[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Disjoint union, `self` first.
    pub fn concat(&self, other: &VariableSet) -> Result<VariableSet> {
        let names: Vec<&str> = self.0.iter().chain(other.0.iter()).map(String::as_str).collect();
        VariableSet::new(&names)
    }

    /// The first `count` variables.
    pub fn prefix(&self, count: usize) -> VariableSet {
        VariableSet(self.0[..count].to_vec().into())
    }

    /// A variable name not present in `self`, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (0..)
            .map(|i| format!("{base}_{i}"))
            .find(|n| self.index_of(n).is_none())
            .expect("unbounded search")
    }

    pub fn same_as(&self, other: &VariableSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl PartialEq for VariableSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for VariableSet {}

impl fmt::Debug for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(", "))
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(" "))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Degrees of a (bi)form under an optional split of the variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GradedDegree {
    pub x_degree: u32,
    pub y_degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeInfo {
    /// Maximum total degree, `None` for the zero polynomial.
    pub total: Option<u32>,
    /// Common bidegree when all terms share it.
    pub graded: Option<GradedDegree>,
    /// Whether every term has the same (bi)degree.
    pub homogeneous: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Sparse polynomial: nonzero coefficients keyed by monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: VariableSet,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(ring: &VariableSet) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &VariableSet) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &VariableSet, c: Coeff) -> Self {
        Self::monomial(ring, Monomial::one(ring.len()), c)
    }

    pub fn var(ring: &VariableSet, index: usize) -> Self {
        Self::monomial(ring, Monomial::variable(ring.len(), index), Coeff::one())
    }

    /// Variable by name; panics if absent.
    pub fn var_named(ring: &VariableSet, name: &str) -> Self {
        let i = ring
            .index_of(name)
            .unwrap_or_else(|| panic!("no variable `{name}` in {ring:?}"));
        Self::var(ring, i)
    }

    pub fn monomial(ring: &VariableSet, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.nvars(), ring.len(), "monomial arity does not match ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from possibly repeated terms.
    pub fn from_terms<I>(ring: &VariableSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.len(), "monomial arity does not match ring");
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &VariableSet, acc: HashMap<Monomial, Coeff>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn parse(ring: &VariableSet, text: &str) -> Result<Self> {
        parse_polynomial(ring, text)
    }

    pub fn ring(&self) -> &VariableSet {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Constant value if the polynomial is a (possibly zero) constant.
    pub fn as_constant(&self) -> Option<Coeff> {
        if self.is_zero() {
            return Some(Coeff::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending degrevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Leading term under degrevlex.
    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree of the polynomial in the variable `index`.
    pub fn degree_in(&self, index: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponents()[index] as u32).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree summary; `split` names the first ("x") block of a bigrading.
    pub fn degree_info(&self, split: Option<&VariableSet>) -> DegreeInfo {
        let total = self.total_degree();
        let mask: Vec<bool> = match split {
            Some(block) => self.ring.names().iter().map(|n| block.index_of(n).is_some()).collect(),
            None => vec![true; self.ring.len()],
        };
        let bideg = |m: &Monomial| {
            let mut g = GradedDegree {
                x_degree: 0,
                y_degree: 0,
            };
            for (e, &is_x) in m.exponents().iter().zip(&mask) {
                if is_x {
                    g.x_degree += *e as u32;
                } else {
                    g.y_degree += *e as u32;
                }
            }
            g
        };
        let mut it = self.terms.keys().map(bideg);
        let (graded, homogeneous) = match it.next() {
            None => (None, true),
            Some(first) => {
                if it.all(|g| g == first) {
                    (Some(first), true)
                } else {
                    (None, false)
                }
            }
        };
        DegreeInfo {
            total,
            graded,
            homogeneous,
        }
    }

    /// Indices of variables that occur in some term.
    pub fn support(&self) -> Vec<bool> {
        let mut used = vec![false; self.ring.len()];
        for m in self.terms.keys() {
            for (u, &e) in used.iter_mut().zip(m.exponents()) {
                *u |= e > 0;
            }
        }
        used
    }

    pub fn homogeneous_component(&self, degree: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m, c);
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m, &-c);
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Ok(Self::from_map(&self.ring, acc))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Replaces variable `i` by `images[i]` and expands.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.len() {
            return Err(Error::ImageCountMismatch {
                expected: self.ring.len(),
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for p in images {
            if !p.ring.same_as(&target) {
                return Err(Error::RingMismatch {
                    left: target.to_string(),
                    right: p.ring.to_string(),
                });
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(&target), p.clone()])
            .collect();
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e];
                if term.is_zero() {
                    break;
                }
            }
            for (tm, tc) in term.terms {
                *acc.entry(tm).or_insert_with(Coeff::zero) += tc;
            }
        }
        Ok(Self::from_map(&target, acc))
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    ///
    /// Fails if a variable that occurs in some term is absent from `target`.
    pub fn embed(&self, target: &VariableSet) -> Result<Polynomial> {
        if self.ring.same_as(target) {
            return Ok(self.clone());
        }
        let used = self.support();
        let mut map: Vec<Option<usize>> = Vec::with_capacity(self.ring.len());
        for (i, name) in self.ring.names().iter().enumerate() {
            let j = target.index_of(name);
            if j.is_none() && used[i] {
                return Err(Error::UnknownVariable(name.clone()));
            }
            map.push(j);
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u16; target.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if let Some(j) = map[i] {
                    exps[j] = e;
                }
            }
            (Monomial::from_exponents(&exps), c.clone())
        });
        Ok(Polynomial {
            ring: target.clone(),
            terms: terms.collect(),
        })
    }

    /// The same polynomial over a ring with as many variables, matching
    /// variables by position.
    pub fn relabel(&self, target: &VariableSet) -> Result<Polynomial> {
        if target.len() != self.ring.len() {
            return Err(Error::ImageCountMismatch {
                expected: self.ring.len(),
                found: target.len(),
            });
        }
        Ok(Polynomial {
            ring: target.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Least common multiple of the coefficient denominators and gcd of the
    /// numerators.
    fn denominator_lcm_and_content(&self) -> (BigInt, BigInt) {
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        (den, num)
    }

    /// Integer-primitive multiple with positive degrevlex-leading coefficient.
    pub fn canonical(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let (den, _) = self.denominator_lcm_and_content();
        let scaled: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), (c * &den).to_integer()))
            .collect();
        let mut content = scaled.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        let lead_negative = scaled.last().map(|(_, c)| c.is_negative()).unwrap_or(false);
        if lead_negative {
            content = -content;
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: scaled
                .into_iter()
                .map(|(m, c)| (m, BigRational::from_integer(c / &content)))
                .collect(),
        }
    }

    /// Scalar multiple with leading coefficient 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// True when `other = c * self` for some nonzero rational `c`.
    pub fn is_scalar_multiple_of(&self, other: &Polynomial) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.ring.same_as(&other.ring) && self.canonical() == other.canonical()
    }

    /// Partial derivative with respect to variable `index`.
    pub fn derivative(&self, index: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[index];
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] -= 1;
            Some((Monomial::from_exponents(&exps), c * int(e as i64)))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Coefficients of the polynomial viewed as univariate in `index`:
    /// entry `k` multiplies `var^k` and no longer involves that variable.
    pub fn coefficients_in(&self, index: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(index).unwrap_or(0) as usize;
        let mut out: Vec<BTreeMap<Monomial, Coeff>> = vec![BTreeMap::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponents()[index] as usize;
            let mut exps = m.exponents().to_vec();
            exps[index] = 0;
            out[e].insert(Monomial::from_exponents(&exps), c.clone());
        }
        out.into_iter()
            .map(|terms| Polynomial {
                ring: self.ring.clone(),
                terms,
            })
            .collect()
    }

    pub(crate) fn terms_map(&self) -> &BTreeMap<Monomial, Coeff> {
        &self.terms
    }
}

fn add_term(terms: &mut BTreeMap<Monomial, Coeff>, m: &Monomial, c: &Coeff) {
    if let Some(existing) = terms.get_mut(m) {
        *existing += c;
        if existing.is_zero() {
            terms.remove(m);
        }
    } else if !c.is_zero() {
        terms.insert(m.clone(), c.clone());
    }
}

/// Checked ring arithmetic.
pub fn arith(p: &Polynomial, q: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    match op {
        ArithOp::Add => p.try_add(q),
        ArithOp::Sub => p.try_sub(q),
        ArithOp::Mul => p.try_mul(q),
    }
}

macro_rules! impl_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs)
                    .expect("ring mismatch in polynomial arithmetic")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

impl_binop!(Add, add, try_add);
impl_binop!(Sub, sub, try_sub);
impl_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Homogeneous form of the given degree whose every monomial gets a nonzero
/// integer coefficient in `[-3, 3]`, deterministic per seed.
pub fn random_form(ring: &VariableSet, degree: u32, seed: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_form_with(ring, degree, &mut rng)
}

pub fn random_form_with<R: Rng>(ring: &VariableSet, degree: u32, rng: &mut R) -> Polynomial {
    let terms = monomials_of_degree(ring.len(), degree)
        .into_iter()
        .map(|m| (m, int(random_nonzero(rng))));
    Polynomial::from_terms(ring, terms)
}

pub(crate) fn random_nonzero<R: Rng>(rng: &mut R) -> i64 {
    let v: i64 = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring3() -> VariableSet {
        VariableSet::indexed("x", 3)
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(&ring3(), s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x0+x1") * &p("x0-x1"), p("x0^2-x1^2"));
    }

    #[test]
    fn zero_absorbs() {
        assert!((&p("x0*x1 + 3") * &Polynomial::zero(&ring3())).is_zero());
    }

    #[test]
    fn monomial_product() {
        assert_eq!(&p("x0*x1") * &p("x0*x2"), p("x0^2*x1*x2"));
    }

    #[test]
    fn ring_mismatch_is_structural_error() {
        let other = VariableSet::indexed("y", 3);
        let q = Polynomial::var(&other, 0);
        assert!(matches!(
            arith(&p("x0"), &q, ArithOp::Add),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn substitute_involution_into_itself() {
        let images = [p("x1*x2"), p("x0*x2"), p("x0*x1")];
        assert_eq!(p("x1*x2").substitute(&images).unwrap(), p("x0^2*x1*x2"));
    }

    #[test]
    fn substitute_identity_and_zero() {
        let q = p("3*x0^2*x2 - 1/2*x1^3 + x0*x1*x2");
        let id: Vec<_> = (0..3).map(|i| Polynomial::var(&ring3(), i)).collect();
        assert_eq!(q.substitute(&id).unwrap(), q);
        let zeros = [Polynomial::zero(&ring3()), Polynomial::zero(&ring3()), p("x2")];
        assert!(p("x0+x1").substitute(&zeros).unwrap().is_zero());
    }

    #[test]
    fn substitute_rejects_wrong_image_count() {
        assert!(matches!(
            p("x0").substitute(&[p("x1")]),
            Err(Error::ImageCountMismatch { expected: 3, found: 1 })
        ));
    }

    #[test]
    fn degree_info_cases() {
        let info = p("x0^2*x1*x2").degree_info(None);
        assert_eq!(info.total, Some(4));
        assert!(info.homogeneous);
        assert!(!p("x0^2 + x1").degree_info(None).homogeneous);

        let xy = VariableSet::new(&["x0", "x1", "x2", "x3", "y0", "y1"]).unwrap();
        let x = VariableSet::indexed("x", 4);
        let q = Polynomial::parse(&xy, "y0*x0^3*x3").unwrap();
        let info = q.degree_info(Some(&x));
        assert_eq!(
            info.graded,
            Some(GradedDegree {
                x_degree: 4,
                y_degree: 1
            })
        );
        assert!(info.homogeneous);
    }

    #[test]
    fn random_form_support_and_determinism() {
        let r = ring3();
        let c = random_form(&r, 0, 1);
        assert!(c.is_constant() && !c.is_zero());
        let l = random_form(&r, 1, 5);
        assert_eq!(l.num_terms(), 3);
        assert_eq!(random_form(&r, 3, 42), random_form(&r, 3, 42));
        let q = random_form(&r, 3, 42);
        assert_eq!(q.num_terms() as u64, count_monomials(3, 3));
        assert!(q
            .terms()
            .all(|(_, c)| c.numer().magnitude() <= &num_bigint::BigUint::from(3u8)));
    }

    #[test]
    fn canonical_normalization() {
        let q = p("-2/3*x0^2 + 4/9*x1^2");
        assert_eq!(q.canonical(), p("3*x0^2 - 2*x1^2"));
        assert!(q.is_scalar_multiple_of(&p("6*x0^2 - 4*x1^2")));
    }

    #[test]
    fn embed_by_name() {
        let big = VariableSet::new(&["t", "x0", "x1", "x2"]).unwrap();
        let q = p("x0*x2 - x1").embed(&big).unwrap();
        assert_eq!(q, Polynomial::parse(&big, "x0*x2 - x1").unwrap());
        let small = VariableSet::indexed("x", 2);
        assert!(p("x2").embed(&small).is_err());
        assert_eq!(p("x0").embed(&small).unwrap(), Polynomial::var(&small, 0));
    }
}
