//! Ideal membership with certificates: Buchberger over the rationals with
//! every basis element tracked as a combination of the input generators.

use crate::error::{Error, Result};
use crate::poly::{Coeff, Polynomial};

struct Tracked {
    poly: Polynomial,
    cofactors: Vec<Polynomial>,
}

fn reduce_tracked(p: &Polynomial, basis: &[Tracked], ngens: usize) -> (Polynomial, Vec<Polynomial>) {
    let ring = p.ring().clone();
    let mut r = p.clone();
    let mut rem = Polynomial::zero(&ring);
    // p = rem + r + sum_k quotient_k * basis_k, tracked through the cofactors
    let mut combo = vec![Polynomial::zero(&ring); ngens];
    while let Some((m, c)) = r.leading_term() {
        let (m, c) = (m.clone(), c.clone());
        let divisor = basis.iter().find(|b| {
            let (lm, _) = b.poly.leading_term().expect("nonzero basis element");
            lm.divides(&m)
        });
        match divisor {
            Some(b) => {
                let (lm, lc) = b.poly.leading_term().expect("nonzero");
                let t = m.div(lm).expect("divides");
                let coef: Coeff = &c / lc;
                r = &r - &b.poly.mul_monomial(&t, &coef);
                for (acc, cof) in combo.iter_mut().zip(&b.cofactors) {
                    if !cof.is_zero() {
                        *acc = &*acc + &cof.mul_monomial(&t, &coef);
                    }
                }
            }
            None => {
                let term = Polynomial::monomial(&ring, m, c);
                r = &r - &term;
                rem = &rem + &term;
            }
        }
    }
    (rem, combo)
}

/// Writes `p = Σ h_i · gens_i`.
///
/// When `p` and all generators are homogeneous, each `h_i` is homogeneous of
/// degree `deg p − deg gens_i` (or zero).
pub fn lift(p: &Polynomial, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let ring = p.ring().clone();
    for g in gens {
        if !g.ring().same_as(&ring) {
            return Err(Error::RingMismatch {
                left: ring.to_string(),
                right: g.ring().to_string(),
            });
        }
    }
    let n = gens.len();
    if p.is_zero() {
        return Ok(vec![Polynomial::zero(&ring); n]);
    }
    let mut basis: Vec<Tracked> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut cofactors = vec![Polynomial::zero(&ring); n];
        cofactors[i] = Polynomial::one(&ring);
        basis.push(Tracked {
            poly: g.clone(),
            cofactors,
        });
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by_key(|&k| {
                let (i, j) = pairs[k];
                let li = basis[i].poly.leading_term().expect("nonzero").0;
                let lj = basis[j].poly.leading_term().expect("nonzero").0;
                (li.lcm(lj).degree(), i, j)
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(best);
        let (li, ci) = basis[i].poly.leading_term().expect("nonzero");
        let (lj, cj) = basis[j].poly.leading_term().expect("nonzero");
        if li.is_coprime(lj) {
            continue;
        }
        let lcm = li.lcm(lj);
        let (ti, tj) = (lcm.div(li).expect("lcm"), lcm.div(lj).expect("lcm"));
        let (ai, aj) = (ci.recip(), cj.recip());
        let s = &basis[i].poly.mul_monomial(&ti, &ai) - &basis[j].poly.mul_monomial(&tj, &aj);
        let s_cof: Vec<Polynomial> = (0..n)
            .map(|k| &basis[i].cofactors[k].mul_monomial(&ti, &ai) - &basis[j].cofactors[k].mul_monomial(&tj, &aj))
            .collect();
        let (r, combo) = reduce_tracked(&s, &basis, n);
        if r.is_zero() {
            continue;
        }
        let cofactors: Vec<Polynomial> = s_cof.iter().zip(&combo).map(|(a, b)| a - b).collect();
        basis.push(Tracked { poly: r, cofactors });
        let new = basis.len() - 1;
        for k in 0..new {
            pairs.push((k, new));
        }
    }

    let (r, combo) = reduce_tracked(p, &basis, n);
    if !r.is_zero() {
        return Err(Error::NotInIdeal);
    }
    let mut h = combo;
    if p.is_homogeneous() && gens.iter().all(Polynomial::is_homogeneous) {
        let dp = p.total_degree().expect("nonzero");
        for (hi, g) in h.iter_mut().zip(gens) {
            *hi = match g.total_degree() {
                Some(dg) if dg <= dp => hi.homogeneous_component(dp - dg),
                _ => Polynomial::zero(&ring),
            };
        }
    }
    let check = h
        .iter()
        .zip(gens)
        .fold(Polynomial::zero(&ring), |acc, (hi, g)| &acc + &(hi * g));
    if &check != p {
        return Err(Error::Verification("lift does not reproduce its input".into()));
    }
    Ok(h)
}
