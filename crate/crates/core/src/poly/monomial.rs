use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent vector indexed by the variables of a ring.
///
/// The derived ordering is graded reverse lexicographic, which is the ambient
/// order used for display and canonical normalization.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub(crate) SmallVec<[u16; 12]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = 1;
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u16) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }
}

/// Graded reverse lexicographic comparison of exponent slices.
#[inline]
pub fn cmp_degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[inline]
pub fn cmp_lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_degrevlex(&self.0, &other.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// All monomials of total degree `degree` in `nvars` variables, in descending
/// degrevlex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut current = vec![0u16; nvars];
    fill(&mut current, 0, degree, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn fill(current: &mut Vec<u16>, index: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if index + 1 == current.len() {
        current[index] = remaining as u16;
        out.push(Monomial::from_exponents(current));
        return;
    }
    for e in 0..=remaining {
        current[index] = e as u16;
        fill(current, index + 1, remaining - e, out);
    }
    current[index] = 0;
}

/// Number of monomials of degree `degree` in `nvars` variables.
pub fn count_monomials(nvars: usize, degree: u32) -> u64 {
    if nvars == 0 {
        return u64::from(degree == 0);
    }
    // binomial(degree + nvars - 1, nvars - 1)
    let n = degree as u64 + nvars as u64 - 1;
    let k = (nvars as u64 - 1).min(degree as u64);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_ties_broken_by_last_variable() {
        let a = Monomial::from_exponents(&[1, 1, 0]);
        let b = Monomial::from_exponents(&[1, 0, 1]);
        let c = Monomial::from_exponents(&[0, 2, 0]);
        assert!(a > b);
        assert!(c > b);
        assert!(a > c);
    }

    #[test]
    fn monomial_enumeration_matches_count() {
        for n in 1..5 {
            for d in 0..6 {
                let ms = monomials_of_degree(n, d);
                assert_eq!(ms.len() as u64, count_monomials(n, d));
                assert!(ms.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }
}
