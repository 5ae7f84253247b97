//! Conductors, content maps, the mapping-cone syzygy matrix of `(If, g)`,
//! degree-wise syzygy verification and regularity for isolated base points.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{lift, Ideal};
use crate::implicitize::{CaseTag, JonquieresData};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{int, monomials_of_degree, random_nonzero, Coeff, Monomial, Polynomial, VariableSet};
use crate::report::Verdict;

/// Retries when drawing a regular sequence.
pub const REGULAR_SEQUENCE_ATTEMPTS: usize = 16;

/// A polynomial matrix with degree twists; entry `(i, j)` is zero or
/// homogeneous of degree `col_twists[j] − row_twists[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedMatrix {
    ring: VariableSet,
    columns: Vec<Vec<Polynomial>>,
    row_twists: Vec<i64>,
    col_twists: Vec<i64>,
}

impl GradedMatrix {
    pub fn new(ring: &VariableSet, row_twists: Vec<i64>) -> Self {
        GradedMatrix {
            ring: ring.clone(),
            columns: Vec::new(),
            row_twists,
            col_twists: Vec::new(),
        }
    }

    pub fn push_column(&mut self, column: Vec<Polynomial>, twist: i64) -> Result<()> {
        if column.len() != self.row_twists.len() {
            return Err(Error::ImageCountMismatch {
                expected: self.row_twists.len(),
                found: column.len(),
            });
        }
        for (i, e) in column.iter().enumerate() {
            if !e.ring().same_as(&self.ring) {
                return Err(Error::RingMismatch {
                    left: self.ring.to_string(),
                    right: e.ring().to_string(),
                });
            }
            let want = twist - self.row_twists[i];
            let ok = e.is_zero() || (e.is_homogeneous() && e.total_degree() == Some(want as u32));
            if !ok || (!e.is_zero() && want < 0) {
                return Err(Error::NotHomogeneous(format!(
                    "entry ({i}, {}) should have degree {want}: {e}",
                    self.columns.len()
                )));
            }
        }
        self.columns.push(column);
        self.col_twists.push(twist);
        Ok(())
    }

    pub fn ring(&self) -> &VariableSet {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_twists.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.columns[j][i]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        self.columns[j].clone()
    }

    pub fn row_twists(&self) -> &[i64] {
        &self.row_twists
    }

    pub fn col_twists(&self) -> &[i64] {
        &self.col_twists
    }

    pub fn max_col_twist(&self) -> Option<i64> {
        self.col_twists.iter().copied().max()
    }

    pub fn without_column(&self, j: usize) -> GradedMatrix {
        let mut m = self.clone();
        m.columns.remove(j);
        m.col_twists.remove(j);
        m
    }

    /// Indices of columns `v` with `row · v ≠ 0`.
    pub fn non_syzygy_columns(&self, row: &[Polynomial]) -> Vec<usize> {
        (0..self.ncols())
            .filter(|&j| {
                let mut acc = Polynomial::zero(&self.ring);
                for (a, b) in row.iter().zip(&self.columns[j]) {
                    acc = &acc + &(a * b);
                }
                !acc.is_zero()
            })
            .collect()
    }
}

/// Minimal generators `c_j` of `I : (g)` with their content lifts.
#[derive(Debug, Clone)]
pub struct ConductorData {
    pub conductors: Vec<Polynomial>,
    pub degrees: Vec<u32>,
    /// Column `j` holds `h_{0j}, ..., h_{nj}` with `c_j g = Σ h_{ij} g_i`.
    pub content: GradedMatrix,
    pub tag: CaseTag,
}

/// `If : g = (I : g)·f` for coprime `f`, `g`.
pub fn colon_law(i: &Ideal, f: &Polynomial, g: &Polynomial) -> Result<bool> {
    let left = i.times(f).colon(g)?;
    let right = i.colon(g)?.times(f);
    left.equals(&right)
}

pub fn conductor_data(i: &Ideal, g: &Polynomial) -> Result<ConductorData> {
    let gens = i.generators();
    let ring = i.ring();
    let (tag, conductors) = if i.contains(g)? {
        (CaseTag::Inclusion, vec![Polynomial::one(ring)])
    } else {
        let colon = i.colon(g)?;
        if colon.equals(i)? {
            (CaseTag::NonZeroDivisor, gens.to_vec())
        } else {
            (CaseTag::General, colon.generators().to_vec())
        }
    };
    let row_twists = gens.iter().map(|p| p.total_degree().map_or(0, i64::from)).collect();
    let mut content = GradedMatrix::new(ring, row_twists);
    let dg = i64::from(g.total_degree().unwrap_or(0));
    let mut degrees = Vec::new();
    for c in &conductors {
        let dc = c.total_degree().unwrap_or(0);
        degrees.push(dc);
        let column = match gens.iter().position(|gi| gi.is_scalar_multiple_of(c)) {
            // c_j is itself a generator: the content column is g·e_i
            Some(k) => {
                let scale = c.leading_term().expect("nonzero").1 / gens[k].leading_term().expect("nonzero").1;
                let mut col = vec![Polynomial::zero(ring); gens.len()];
                col[k] = g.scale(&scale);
                col
            }
            None => lift(&(c * g), gens)?,
        };
        content.push_column(column, i64::from(dc) + dg)?;
    }
    Ok(ConductorData {
        conductors,
        degrees,
        content,
        tag,
    })
}

/// Coordinates for the space `⊕_i R_{mu − deg(gens_i)}`.
struct SyzygySpace {
    ring: VariableSet,
    index: BTreeMap<(usize, Monomial), usize>,
    cells: Vec<(usize, Monomial)>,
}

impl SyzygySpace {
    fn new(ring: &VariableSet, degrees: &[u32], mu: u32) -> Self {
        let mut index = BTreeMap::new();
        let mut cells = Vec::new();
        for (i, &d) in degrees.iter().enumerate() {
            if d > mu {
                continue;
            }
            for m in monomials_of_degree(ring.len(), mu - d) {
                index.insert((i, m.clone()), cells.len());
                cells.push((i, m));
            }
        }
        SyzygySpace {
            ring: ring.clone(),
            index,
            cells,
        }
    }

    fn flatten(&self, column: &[Polynomial]) -> SparseVec {
        let mut v = SparseVec::new();
        for (i, p) in column.iter().enumerate() {
            for (m, c) in p.terms() {
                let k = self.index[&(i, m.clone())];
                v.insert(k, c.clone());
            }
        }
        v
    }

    fn unflatten(&self, v: &SparseVec, ncomponents: usize) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); ncomponents];
        for (&k, c) in v {
            let (i, m) = &self.cells[k];
            parts[*i].push((m.clone(), c.clone()));
        }
        parts
            .into_iter()
            .map(|t| Polynomial::from_terms(&self.ring, t))
            .collect()
    }

    /// Kernel of `(a_i) ↦ Σ a_i gens_i` in this degree.
    fn kernel(&self, gens: &[Polynomial]) -> Vec<SparseVec> {
        let mut rows: BTreeMap<Monomial, SparseVec> = BTreeMap::new();
        for (k, (i, m)) in self.cells.iter().enumerate() {
            for (gm, gc) in gens[*i].terms() {
                rows.entry(m.mul(gm)).or_default().insert(k, gc.clone());
            }
        }
        let mut e = Echelon::new();
        for row in rows.into_values() {
            e.insert(row);
        }
        e.null_space(self.cells.len())
    }
}

fn homogeneous_degrees(gens: &[Polynomial]) -> Result<Vec<u32>> {
    gens.iter()
        .map(|g| {
            if g.is_zero() {
                Err(Error::ZeroArgument("syzygies of a zero generator".into()))
            } else if !g.is_homogeneous() {
                Err(Error::NotHomogeneous(g.to_string()))
            } else {
                Ok(g.total_degree().expect("nonzero"))
            }
        })
        .collect()
}

/// Multiplies every column of `m` with twist at most `mu` by all monomials
/// completing it to degree `mu`, and returns the span.
fn span_in_degree(m: &GradedMatrix, space: &SyzygySpace, mu: u32) -> Echelon {
    let mut span = Echelon::new();
    for j in 0..m.ncols() {
        let t = m.col_twists[j];
        if t > i64::from(mu) {
            continue;
        }
        for u in monomials_of_degree(m.ring.len(), mu - t as u32) {
            let col: Vec<Polynomial> = m.columns[j].iter().map(|p| p.mul_monomial(&u, &int(1))).collect();
            span.insert(space.flatten(&col));
        }
    }
    span
}

/// Minimal homogeneous syzygies of `gens` with twist at most `max_twist`,
/// found degree by degree.
pub fn syzygy_matrix(gens: &[Polynomial], max_twist: u32) -> Result<GradedMatrix> {
    let Some(first) = gens.first() else {
        return Err(Error::ZeroArgument("no generators".into()));
    };
    let ring = first.ring().clone();
    let degrees = homogeneous_degrees(gens)?;
    let mut m = GradedMatrix::new(&ring, degrees.iter().map(|&d| i64::from(d)).collect());
    let start = degrees.iter().copied().min().unwrap_or(0) + 1;
    for mu in start..=max_twist {
        let space = SyzygySpace::new(&ring, &degrees, mu);
        let mut span = span_in_degree(&m, &space, mu);
        for v in space.kernel(gens) {
            if span.insert(v.clone()) {
                m.push_column(space.unflatten(&v, gens.len()), i64::from(mu))?;
            }
        }
    }
    Ok(m)
}

/// `Ψ = [[φ, c(g)], [0, −f·π]]`.
pub fn mapping_cone_matrix(
    i_gens: &[Polynomial],
    phi: &GradedMatrix,
    f: &Polynomial,
    g: &Polynomial,
    conductor: &ConductorData,
) -> Result<GradedMatrix> {
    if let Some(&j) = phi.non_syzygy_columns(i_gens).first() {
        return Err(Error::Verification(format!("column {j} of φ is not a syzygy")));
    }
    let ring = phi.ring().clone();
    let df = i64::from(f.total_degree().unwrap_or(0));
    let dg = i64::from(g.total_degree().unwrap_or(0));
    let rows = i_gens.len() + 1;
    let mut psi = GradedMatrix::new(&ring, vec![dg; rows]);
    for j in 0..phi.ncols() {
        let mut col = phi.column(j);
        col.push(Polynomial::zero(&ring));
        psi.push_column(col, phi.col_twists[j] + df)?;
    }
    for (j, c) in conductor.conductors.iter().enumerate() {
        let mut col = conductor.content.column(j);
        col.push(-&(f * c));
        psi.push_column(col, i64::from(conductor.degrees[j]) + dg + df)?;
    }
    let j_gens: Vec<Polynomial> = i_gens
        .iter()
        .map(|gi| gi * f)
        .chain(std::iter::once(g.clone()))
        .collect();
    if let Some(&j) = psi.non_syzygy_columns(&j_gens).first() {
        return Err(Error::Verification(format!("column {j} of Ψ is not a syzygy")));
    }
    Ok(psi)
}

/// Per-degree comparison of the span of a matrix with the syzygy space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyCheck {
    /// `(degree, dim of the syzygy space, dim of the span)`.
    pub degrees: Vec<(u32, usize, usize)>,
    pub non_syzygy_columns: Vec<usize>,
    pub bound: u32,
}

impl SyzygyCheck {
    pub fn first_failure(&self) -> Option<u32> {
        self.degrees.iter().find(|(_, k, s)| k != s).map(|(mu, _, _)| *mu)
    }

    pub fn holds(&self) -> bool {
        self.non_syzygy_columns.is_empty() && self.first_failure().is_none()
    }
}

/// Default verification bound: the largest column twist plus two.
pub fn default_syzygy_bound(psi: &GradedMatrix) -> u32 {
    psi.max_col_twist().map_or(0, |t| t.max(0) as u32 + 2)
}

pub fn verify_syzygy_generation(gens: &[Polynomial], psi: &GradedMatrix, degree_bound: u32) -> Result<SyzygyCheck> {
    let degrees = homogeneous_degrees(gens)?;
    let non_syzygy_columns = psi.non_syzygy_columns(gens);
    let start = degrees.iter().copied().min().unwrap_or(0) + 1;
    let mut out = Vec::new();
    for mu in start..=degree_bound {
        let space = SyzygySpace::new(psi.ring(), &degrees, mu);
        let kernel = space.kernel(gens).len();
        let span = span_in_degree(psi, &space, mu).rank();
        out.push((mu, kernel, span));
    }
    Ok(SyzygyCheck {
        degrees: out,
        non_syzygy_columns,
        bound: degree_bound,
    })
}

/// `None` stands for `−∞` (the zero module); `Some(r)` for a finite value.
pub type Reg = Option<i64>;

fn reg_le(a: Reg, b: Reg) -> bool {
    match (a, b) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x <= y,
    }
}

fn reg_add(a: Reg, k: i64) -> Reg {
    a.map(|x| x + k)
}

fn reg_max(a: Reg, b: Reg) -> Reg {
    if reg_le(a, b) {
        b
    } else {
        a
    }
}

pub fn format_reg(r: Reg) -> String {
    r.map_or_else(|| "-inf".to_string(), |x| x.to_string())
}

fn min_degree_outside(gens: &[Polynomial], i: &Ideal) -> Result<Option<u32>> {
    let mut best: Option<u32> = None;
    for p in gens {
        let deg = p.total_degree().unwrap_or(0);
        if best.is_some_and(|b| b <= deg) {
            continue;
        }
        if !i.contains(p)? {
            best = Some(deg);
        }
    }
    Ok(best)
}

/// `Reg(R/I)` from Hilbert functions, for `dim(R/I) ≤ 1`:
/// `max(end(I^sat/I), Reg(R/I^sat))`.
pub fn hilbert_regularity(i: &Ideal) -> Result<Reg> {
    if i.is_unit()? {
        return Ok(None);
    }
    let (dim, _) = i.dim_and_codim()?;
    if dim > 1 {
        return Err(Error::Hypothesis(format!("dim(R/I) = {dim} exceeds 1")));
    }
    let ring = i.ring().clone();
    let sat = i.saturate(&Ideal::maximal(&ring))?;
    let slack: u32 = sat.exponents.iter().map(|&k| k.saturating_sub(1) as u32).sum();
    if sat.ideal.is_unit()? {
        let mut end = None;
        for mu in 0..=slack {
            if i.quotient_hilbert(mu)? > 0 {
                end = Some(i64::from(mu));
            }
        }
        return Ok(end);
    }
    let top = sat
        .ideal
        .generators()
        .iter()
        .filter_map(Polynomial::total_degree)
        .max()
        .unwrap_or(0)
        + slack;
    let mut end = None;
    for mu in 0..=top {
        if i.quotient_hilbert(mu)? > sat.ideal.quotient_hilbert(mu)? {
            end = Some(i64::from(mu));
        }
    }
    let mut t = 0u32;
    while sat.ideal.quotient_hilbert(t)? != sat.ideal.quotient_hilbert(t + 1)? {
        t += 1;
    }
    Ok(reg_max(end, Some(i64::from(t))))
}

/// Data of the two-branch regularity formula for ideals generated by
/// `d`-forms with `dim(R/I) = 1`.
#[derive(Debug, Clone)]
pub struct RegularityReport {
    pub reg: Reg,
    pub sat_ideal: Ideal,
    /// `beg(I^sat/I)`; `None` is `+∞`.
    pub beg_sat: Option<u32>,
    pub alpha: Vec<Polynomial>,
    /// `beg(((α):I)/I)`; `None` is `+∞`.
    pub beg_link: Option<u32>,
    /// Whether `I ⊆ (α):I`.
    pub link_contains_ideal: bool,
    /// `Reg(R/I)` recomputed from Hilbert functions.
    pub hilbert_reg: Reg,
    pub bound_checks: Vec<BoundCheck>,
}

/// One inequality or equality between regularities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub verdict: Verdict,
    pub lhs: Reg,
    pub rhs: Reg,
}

impl BoundCheck {
    fn le(name: &'static str, lhs: Reg, rhs: Reg) -> Self {
        BoundCheck {
            name,
            verdict: Verdict::from_bool(reg_le(lhs, rhs), format!("{} > {}", format_reg(lhs), format_reg(rhs))),
            lhs,
            rhs,
        }
    }

    fn eq(name: &'static str, lhs: Reg, rhs: Reg) -> Self {
        BoundCheck {
            name,
            verdict: Verdict::from_bool(lhs == rhs, format!("{} != {}", format_reg(lhs), format_reg(rhs))),
            lhs,
            rhs,
        }
    }

    fn skipped(name: &'static str, reason: impl Into<String>) -> Self {
        BoundCheck {
            name,
            verdict: Verdict::Skipped(reason.into()),
            lhs: None,
            rhs: None,
        }
    }
}

fn regular_sequence(i: &Ideal, d: u32, len: usize, seed: u64) -> Result<Vec<Polynomial>> {
    let gens: Vec<&Polynomial> = i.generators().iter().filter(|g| g.total_degree() == Some(d)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REGULAR_SEQUENCE_ATTEMPTS {
        let alpha: Vec<Polynomial> = (0..len)
            .map(|_| {
                gens.iter().fold(Polynomial::zero(i.ring()), |acc, g| {
                    &acc + &g.scale(&int(random_nonzero(&mut rng)))
                })
            })
            .collect();
        if alpha.iter().any(Polynomial::is_zero) {
            continue;
        }
        let a = Ideal::new(i.ring(), alpha.clone())?.with_limits(i.limits());
        if !a.is_unit()? && a.dim_and_codim()?.1 == len {
            return Ok(alpha);
        }
    }
    Err(Error::NoRegularSequence(REGULAR_SEQUENCE_ATTEMPTS))
}

/// `Reg(R/I) = max{(n+1)(d−1) − beg(I^sat/I), n(d−1) − beg(((α):I)/I)}`.
pub fn regularity_dim1(i: &Ideal, d: u32, seed: u64) -> Result<RegularityReport> {
    if i.generators()
        .iter()
        .any(|g| g.total_degree() != Some(d) || !g.is_homogeneous())
    {
        return Err(Error::Hypothesis(format!("generators must all be {d}-forms")));
    }
    if i.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    let n1 = i.ring().len();
    if i.generators().len() != n1 {
        return Err(Error::Hypothesis(format!(
            "the regularity formula needs {n1} generators in {n1} variables"
        )));
    }
    let (dim, codim) = i.dim_and_codim()?;
    if dim != 1 {
        return Err(Error::Hypothesis(format!(
            "the regularity formula needs dim(R/I) = 1, found {dim}"
        )));
    }
    let n = i.ring().len() as i64 - 1;
    let sat = i.saturate(&Ideal::maximal(i.ring()))?.ideal;
    let beg_sat = min_degree_outside(sat.generators(), i)?;
    let alpha = regular_sequence(i, d, codim, seed)?;
    let a = Ideal::new(i.ring(), alpha.clone())?.with_limits(i.limits());
    let mut link: Option<Ideal> = None;
    for g in i.generators() {
        let c = a.colon(g)?;
        link = Some(match link {
            None => c,
            Some(acc) => acc.intersect(&c)?.minimalize()?,
        });
    }
    let link = link.expect("proper ideal has generators");
    let beg_link = min_degree_outside(link.generators(), i)?;
    let link_contains_ideal = link.contains_ideal(i)?;
    let d = i64::from(d);
    let first = beg_sat.map(|b| (n + 1) * (d - 1) - i64::from(b));
    let second = beg_link.map(|b| n * (d - 1) - i64::from(b));
    let reg = reg_max(first, second);
    let hilbert_reg = hilbert_regularity(i)?;
    let bound_checks = vec![BoundCheck::eq("formula_matches_hilbert", reg, hilbert_reg)];
    Ok(RegularityReport {
        reg,
        sat_ideal: sat,
        beg_sat,
        alpha,
        beg_link,
        link_contains_ideal,
        hilbert_reg,
        bound_checks,
    })
}

/// The regularities entering [`regularity_bound_checks`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityData {
    pub reg_i: Option<Reg>,
    pub reg_j: Option<Reg>,
    pub reg_conductor: Option<Reg>,
    /// `Reg(R/I) ≤ d + deg(f) − 2`, the minimality predicate of the
    /// mapping cone.
    pub minimal_cone: Option<bool>,
    pub checks: Vec<BoundCheck>,
}

pub fn regularity_bound_checks(p: &JonquieresData, seed: u64) -> Result<RegularityData> {
    let i = p.base_ideal();
    let j = p.jonquieres_ideal();
    let n = p.n() as i64;
    let d = i64::from(p.d());
    let df = i64::from(p.f_degree());
    let dg = i64::from(p.g_degree());
    let dim_i = i.dim_and_codim()?.0;
    let dim_j = j.dim_and_codim()?.0;
    let mut checks = Vec::new();

    if dim_i != 1 {
        let why = format!("dim(R/I) = {dim_i}, the bounds need 1");
        for name in [
            "cremona_bound",
            "jonquieres_bound",
            "jonquieres_equality",
            "conductor_bound",
            "transfer_bound",
            "transfer_equality",
        ] {
            checks.push(BoundCheck::skipped(name, why.clone()));
        }
        return Ok(RegularityData {
            reg_i: None,
            reg_j: None,
            reg_conductor: None,
            minimal_cone: None,
            checks,
        });
    }

    let reg_i = regularity_dim1(&i, p.d(), seed)?.reg;
    checks.push(BoundCheck::le("cremona_bound", reg_i, Some(n * (d - 1) - 1)));
    let minimal_cone = reg_le(reg_i, Some(d + df - 2));

    let colon = i.colon(p.g())?;
    let g_in_i = colon.is_unit()?;
    let reg_c = hilbert_regularity(&colon)?;
    if reg_le(reg_i, Some(dg - 2)) {
        checks.push(BoundCheck::le("conductor_bound", reg_c, reg_i));
    } else {
        checks.push(BoundCheck::skipped(
            "conductor_bound",
            "hypothesis Reg(R/I) <= deg(g) - 2 fails",
        ));
    }

    let reg_j = if dim_j <= 1 {
        Some(hilbert_regularity(&j)?)
    } else {
        None
    };
    let nzd = !g_in_i && colon.equals(&i)?;
    match reg_j {
        None => {
            let why = format!("dim(R/(If,g)) = {dim_j} exceeds 1");
            for name in [
                "jonquieres_bound",
                "jonquieres_equality",
                "transfer_bound",
                "transfer_equality",
            ] {
                checks.push(BoundCheck::skipped(name, why.clone()));
            }
        }
        Some(rj) => {
            let rhs = reg_add(reg_i, df + dg - 1);
            checks.push(BoundCheck::le("jonquieres_bound", rj, rhs));
            if nzd {
                checks.push(BoundCheck::eq("jonquieres_equality", rj, rhs));
            } else {
                checks.push(BoundCheck::skipped(
                    "jonquieres_equality",
                    "g is a zero-divisor modulo I",
                ));
            }
            if g_in_i {
                for name in ["transfer_bound", "transfer_equality"] {
                    checks.push(BoundCheck::skipped(name, "I:g is the unit ideal"));
                }
            } else {
                let cone = reg_add(reg_c, d + 2 * df - 1);
                checks.push(BoundCheck::le("transfer_bound", rj, reg_max(reg_add(reg_i, df), cone)));
                if minimal_cone {
                    checks.push(BoundCheck::eq("transfer_equality", rj, cone));
                } else {
                    checks.push(BoundCheck::skipped("transfer_equality", "minimality predicate fails"));
                }
            }
        }
    }
    Ok(RegularityData {
        reg_i: Some(reg_i),
        reg_j,
        reg_conductor: Some(reg_c),
        minimal_cone: Some(minimal_cone),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn x(n: usize) -> VariableSet {
        VariableSet::indexed("x", n)
    }

    fn ps(ring: &VariableSet, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| Polynomial::parse(ring, t).unwrap()).collect()
    }

    #[test]
    fn koszul_syzygies() {
        let r = x(3);
        let m = syzygy_matrix(&ps(&r, &["x0", "x1", "x2"]), 3).unwrap();
        assert_eq!(m.ncols(), 3);
        assert!(m.col_twists().iter().all(|&t| t == 2));
        let inv = syzygy_matrix(&ps(&r, &["x1*x2", "x0*x2", "x0*x1"]), 5).unwrap();
        assert_eq!(inv.ncols(), 2);
        assert_eq!(inv.col_twists(), &[3, 3]);
    }

    #[test]
    fn plane_conductor_and_cone() {
        let p = fixtures::plane_example([1, 2, 3]);
        let i = p.base_ideal();
        let data = conductor_data(&i, p.g()).unwrap();
        assert_eq!(data.conductors, ps(&x(3), &["x0", "x1"]));
        for j in 0..2 {
            for k in 0..3 {
                let e = data.content.entry(k, j);
                assert!(e.is_zero() || e.total_degree() == Some(2));
            }
        }
        let phi = syzygy_matrix(i.generators(), 5).unwrap();
        let psi = mapping_cone_matrix(i.generators(), &phi, p.f(), p.g(), &data).unwrap();
        assert_eq!(psi.ncols(), 4);
        let j = p.parametrization();
        let bound = default_syzygy_bound(&psi);
        let check = verify_syzygy_generation(&j, &psi, bound).unwrap();
        assert!(check.holds(), "{check:?}");
        let dropped = verify_syzygy_generation(&j, &psi.without_column(3), bound).unwrap();
        assert_eq!(dropped.first_failure(), Some(5));
    }

    #[test]
    fn nzd_content_is_diagonal() {
        let p = fixtures::nzd_plane_example();
        let data = conductor_data(&p.base_ideal(), p.g()).unwrap();
        assert_eq!(data.tag, CaseTag::NonZeroDivisor);
        assert_eq!(data.conductors.len(), 3);
        for k in 0..3 {
            assert_eq!(data.content.entry(k, k), p.g());
        }
    }

    #[test]
    fn involution_regularity() {
        let p = fixtures::plane_example([1, 2, 3]);
        let r = regularity_dim1(&p.base_ideal(), 2, 7).unwrap();
        assert_eq!(r.reg, Some(1));
        assert_eq!(r.beg_sat, None);
        assert_eq!(r.hilbert_reg, Some(1));
        assert!(r.bound_checks.iter().all(|c| c.verdict.holds()));
    }

    #[test]
    fn hilbert_regularity_small_cases() {
        let r = x(3);
        let m = Ideal::maximal(&r);
        assert_eq!(hilbert_regularity(&m).unwrap(), Some(0));
        let sq = Ideal::new(&r, ps(&r, &["x0^2", "x1^2", "x2^2"])).unwrap();
        assert_eq!(hilbert_regularity(&sq).unwrap(), Some(3));
        let point = Ideal::new(&r, ps(&r, &["x0", "x1"])).unwrap();
        assert_eq!(hilbert_regularity(&point).unwrap(), Some(0));
        let fat = Ideal::new(&r, ps(&r, &["x0^2", "x0*x1", "x1^2"])).unwrap();
        assert_eq!(hilbert_regularity(&fat).unwrap(), Some(1));
    }

    #[test]
    fn plane_bound_checks() {
        let p = fixtures::plane_example([1, 2, 3]);
        let data = regularity_bound_checks(&p, 11).unwrap();
        assert_eq!(data.reg_i, Some(Some(1)));
        assert_eq!(data.reg_j, Some(Some(3)));
        for c in &data.checks {
            assert!(!c.verdict.is_failure(), "{c:?}");
        }
        assert_eq!(data.minimal_cone, Some(true));
    }
}
