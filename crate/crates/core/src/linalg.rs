//! Sparse exact linear algebra over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::Coeff;

pub(crate) type SparseVec = BTreeMap<usize, Coeff>;

/// Row echelon form kept incrementally; each stored row has leading entry 1.
#[derive(Debug, Clone, Default)]
pub(crate) struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

fn axpy(v: &mut SparseVec, a: &Coeff, row: &SparseVec) {
    for (&j, c) in row {
        let delta = a * c;
        match v.get_mut(&j) {
            Some(x) => {
                *x -= delta;
                if x.is_zero() {
                    v.remove(&j);
                }
            }
            None => {
                v.insert(j, -delta);
            }
        }
    }
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0usize;
        loop {
            let next = v
                .range(cursor..)
                .find(|(j, _)| self.rows.contains_key(j))
                .map(|(&j, c)| (j, c.clone()));
            let Some((j, c)) = next else { break };
            axpy(&mut v, &c, &self.rows[&j]);
            cursor = j + 1;
        }
        v
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&pivot, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for c in r.values_mut() {
            *c *= &inv;
        }
        self.rows.insert(pivot, r);
        true
    }

    #[cfg(test)]
    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Basis of `{ v : <row, v> = 0 for every stored row }` in `ncols`
    /// coordinates.
    pub fn null_space(&self, ncols: usize) -> Vec<SparseVec> {
        // reduced row echelon form
        let mut rref: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut row = row.clone();
            let mut cursor = p + 1;
            loop {
                let next = row
                    .range(cursor..)
                    .find(|(j, _)| rref.contains_key(j))
                    .map(|(&j, c)| (j, c.clone()));
                let Some((j, c)) = next else { break };
                axpy(&mut row, &c, &rref[&j]);
                cursor = j + 1;
            }
            rref.insert(p, row);
        }
        let mut basis = Vec::new();
        for free in (0..ncols).filter(|j| !rref.contains_key(j)) {
            let mut v = SparseVec::new();
            v.insert(free, Coeff::one());
            for (&p, row) in &rref {
                if let Some(c) = row.get(&free) {
                    v.insert(p, -c.clone());
                }
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(j, c)| (j, int(c))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(sv(&[(0, 1), (1, 2)])));
        assert!(e.insert(sv(&[(1, 1), (2, 1)])));
        assert!(!e.insert(sv(&[(0, 2), (1, 5), (2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(sv(&[(0, 1), (1, 3), (2, 1)])));
        assert!(!e.contains(sv(&[(2, 1)])));
    }

    #[test]
    fn null_space_is_orthogonal_and_complete() {
        let rows = [sv(&[(0, 1), (1, 2), (3, -1)]), sv(&[(1, 1), (2, 3)])];
        let mut e = Echelon::new();
        for r in &rows {
            e.insert(r.clone());
        }
        let ns = e.null_space(4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                let dot: Coeff = r
                    .iter()
                    .map(|(j, c)| c * v.get(j).cloned().unwrap_or_else(Coeff::zero))
                    .sum();
                assert!(dot.is_zero());
            }
        }
    }
}
