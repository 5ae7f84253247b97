//! Exact division and multivariate gcd (content/primitive-part recursion with
//! a subresultant remainder sequence in the main variable).

use num_traits::Zero;

use super::{Coeff, Monomial, Polynomial};
use crate::error::{Error, Result};

/// Quotient `p / d`, failing unless the division is exact.
pub fn divide_exact(p: &Polynomial, d: &Polynomial) -> Result<Polynomial> {
    if !p.ring().same_as(d.ring()) {
        return Err(Error::RingMismatch {
            left: p.ring().to_string(),
            right: d.ring().to_string(),
        });
    }
    let Some((lm_d, lc_d)) = d.leading_term() else {
        return Err(Error::ZeroArgument("division by zero".into()));
    };
    let (lm_d, lc_d) = (lm_d.clone(), lc_d.clone());
    let mut rem = p.terms_map().clone();
    let mut quotient = Vec::new();
    while let Some((lm_r, lc_r)) = rem.iter().next_back() {
        let Some(m) = lm_r.div(&lm_d) else {
            return Err(Error::InexactDivision(format!("({p}) / ({d})")));
        };
        let c = lc_r / &lc_d;
        for (t, a) in d.terms() {
            let key = t.mul(&m);
            let delta = a * &c;
            match rem.get_mut(&key) {
                Some(v) => {
                    *v -= delta;
                    if v.is_zero() {
                        rem.remove(&key);
                    }
                }
                None => {
                    rem.insert(key, -delta);
                }
            }
        }
        quotient.push((m, c));
    }
    Ok(Polynomial::from_terms(p.ring(), quotient))
}

/// Canonically normalized greatest common divisor; `gcd(p, 0) = canonical(p)`.
///
/// Panics if the arguments live in different rings.
pub fn gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    assert!(p.ring().same_as(q.ring()), "gcd across different rings");
    if p.is_zero() {
        return q.canonical();
    }
    if q.is_zero() {
        return p.canonical();
    }
    gcd_nonzero(p, q).canonical()
}

fn monomial_content(p: &Polynomial) -> Monomial {
    let mut it = p.terms().map(|(m, _)| m);
    let first = it.next().expect("nonzero").clone();
    it.fold(first, |acc, m| acc.gcd(m))
}

fn gcd_nonzero(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let ring = p.ring();
    let mp = monomial_content(p);
    let mq = monomial_content(q);
    let mono = Polynomial::monomial(ring, mp.gcd(&mq), Coeff::from_integer(1.into()));
    let p = strip_monomial(p, &mp);
    let q = strip_monomial(q, &mq);
    &mono * &gcd_rec(&p, &q)
}

fn strip_monomial(p: &Polynomial, m: &Monomial) -> Polynomial {
    if m.is_one() {
        return p.clone();
    }
    Polynomial::from_terms(
        p.ring(),
        p.terms()
            .map(|(t, c)| (t.div(m).expect("monomial content divides"), c.clone())),
    )
}

/// gcd up to a scalar; both arguments nonzero.
fn gcd_rec(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let ring = p.ring();
    if p.is_constant() || q.is_constant() {
        return Polynomial::one(ring);
    }
    let sp = p.support();
    let sq = q.support();
    let main = (0..ring.len())
        .rev()
        .find(|&i| sp[i] || sq[i])
        .expect("non-constant polynomial has a variable");
    match (sp[main], sq[main]) {
        (true, false) => return gcd_rec(&content_in(p, main), q),
        (false, true) => return gcd_rec(p, &content_in(q, main)),
        _ => {}
    }
    let cp = content_in(p, main);
    let cq = content_in(q, main);
    let pp = divide_exact(p, &cp).expect("content divides");
    let qq = divide_exact(q, &cq).expect("content divides");
    let c = gcd_rec(&cp, &cq);
    let g = subresultant_gcd(&pp, &qq, main);
    &c * &g
}

/// gcd of the coefficients of `p` as a univariate polynomial in `var`.
fn content_in(p: &Polynomial, var: usize) -> Polynomial {
    let mut coeffs: Vec<Polynomial> = p.coefficients_in(var).into_iter().filter(|c| !c.is_zero()).collect();
    coeffs.sort_by_key(|c| c.num_terms());
    let mut acc = coeffs[0].clone();
    for c in &coeffs[1..] {
        if acc.is_constant() {
            break;
        }
        acc = gcd_rec(&acc, c);
    }
    if acc.is_constant() {
        Polynomial::one(p.ring())
    } else {
        acc
    }
}

fn primitive_in(p: &Polynomial, var: usize) -> Polynomial {
    let c = content_in(p, var);
    divide_exact(p, &c).expect("content divides")
}

fn deg_in(p: &Polynomial, var: usize) -> u32 {
    p.degree_in(var).unwrap_or(0)
}

fn lead_coeff_in(p: &Polynomial, var: usize) -> Polynomial {
    p.coefficients_in(var).pop().expect("nonzero polynomial")
}

fn var_power(p: &Polynomial, var: usize, k: u32) -> Monomial {
    let mut exps = vec![0u16; p.ring().len()];
    exps[var] = k as u16;
    Monomial::from_exponents(&exps)
}

/// Pseudo-remainder of `a` by `b` in `var`.
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let db = deg_in(b, var);
    let lcb = lead_coeff_in(b, var);
    let mut r = a.clone();
    let mut e = deg_in(a, var) as i64 - db as i64 + 1;
    let one = Coeff::from_integer(1.into());
    while !r.is_zero() && deg_in(&r, var) >= db {
        let k = deg_in(&r, var);
        let lr = lead_coeff_in(&r, var);
        let shifted = &lr * &b.mul_monomial(&var_power(b, var, k - db), &one);
        r = &(&lcb * &r) - &shifted;
        e -= 1;
    }
    if e > 0 {
        r = &r * &lcb.pow(e as u32);
    }
    r
}

fn subresultant_gcd(p: &Polynomial, q: &Polynomial, var: usize) -> Polynomial {
    let ring = p.ring();
    let (mut a, mut b) = if deg_in(p, var) >= deg_in(q, var) {
        (p.clone(), q.clone())
    } else {
        (q.clone(), p.clone())
    };
    let mut g = Polynomial::one(ring);
    let mut h = Polynomial::one(ring);
    loop {
        let delta = deg_in(&a, var) - deg_in(&b, var);
        let r = pseudo_remainder(&a, &b, var);
        if r.is_zero() {
            return primitive_in(&b, var);
        }
        if deg_in(&r, var) == 0 {
            return Polynomial::one(ring);
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = divide_exact(&r, &divisor).expect("subresultant division is exact");
        g = lead_coeff_in(&a, var);
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => divide_exact(&g.pow(delta), &h.pow(delta - 1)).expect("subresultant division is exact"),
        };
    }
}

#[cfg(test)]
mod tests {
    use super::super::VariableSet;
    use super::*;

    fn ring() -> VariableSet {
        VariableSet::indexed("x", 4)
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(&ring(), s).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&p("x0*x1"), &p("x0*x2")), p("x0"));
        assert_eq!(gcd(&p("x0^2-x1^2"), &p("x0-x1")), p("x0-x1"));
        let q = p("-2*x0*x1 + 4*x2^2");
        assert_eq!(gcd(&q, &Polynomial::zero(&ring())), q.canonical());
        assert_eq!(gcd(&p("x0+x1"), &p("x0-x1")), p("1"));
    }

    #[test]
    fn gcd_of_products_with_shared_factor() {
        let a = p("x0^2 + x1*x2 - x3^2");
        let b = p("x1^3 - 2*x0*x2*x3");
        let r = p("x0*x3 + x1^2 - 3*x2*x3");
        let g = gcd(&(&a * &r), &(&b * &r));
        assert_eq!(g, r.canonical());
    }

    #[test]
    fn divide_exact_examples() {
        assert_eq!(divide_exact(&p("x0^2-x1^2"), &p("x0-x1")).unwrap(), p("x0+x1"));
        let q = p("3*x0*x2 - x1");
        assert_eq!(divide_exact(&q, &p("1")).unwrap(), q);
        let prod = p("x0^3*x3") * p("x0+x2");
        assert_eq!(divide_exact(&prod, &p("x0+x2")).unwrap(), p("x0^3*x3"));
        assert!(matches!(
            divide_exact(&p("x0^2+x1"), &p("x0")),
            Err(Error::InexactDivision(_))
        ));
    }
}
