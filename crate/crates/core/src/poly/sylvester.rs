//! Sylvester matrices and resultants.
//!
//! The default determinant backend expands the Sylvester matrix row by row,
//! memoizing every minor by its column set. Only column sets that can still
//! be completed to a nonzero full expansion are kept, which prunes most of
//! the band structure. A fraction-free Bareiss backend is available behind
//! the same contract.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::{
    exp_at, grlex_cmp, repack, slot_map, shift, union_vars, Acc, Coeff, DistVar, Key, MultiPoly,
    MAX_EXPONENT, MAX_VARS,
};
use crate::error::PolyError;

/// Approximate heap cost of one stored term.
const BYTES_PER_TERM: usize = 40;
/// Approximate cost of one accumulator entry, including hash table overhead.
const BYTES_PER_ACC_ENTRY: usize = 80;

/// Caps that turn runaway computations into a reported outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct ResourceLimits {
    /// Largest number of terms any single polynomial may reach.
    pub max_terms: usize,
    /// Estimated bytes of live intermediate polynomials.
    pub max_memory_bytes: usize,
    /// Wall-clock budget for one determinant, in milliseconds.
    pub max_millis: Option<u64>,
}

impl Default for ResourceLimits {
    fn default() -> Self {
        ResourceLimits { max_terms: 20_000_000, max_memory_bytes: 3 << 30, max_millis: None }
    }
}

impl ResourceLimits {
    pub fn unlimited() -> Self {
        ResourceLimits { max_terms: usize::MAX, max_memory_bytes: usize::MAX, max_millis: None }
    }

    pub fn with_max_terms(self, max_terms: usize) -> Self {
        ResourceLimits { max_terms, ..self }
    }

    pub fn with_time_limit(self, limit: Duration) -> Self {
        ResourceLimits { max_millis: Some(limit.as_millis() as u64), ..self }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExhaustionKind {
    TermCap,
    MemoryBudget,
    TimeLimit,
}

/// Which cap was hit, its value and the amount reached when it was hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exhaustion {
    pub kind: ExhaustionKind,
    pub limit: usize,
    pub reached: usize,
}

impl fmt::Display for Exhaustion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ExhaustionKind::TermCap => {
                write!(f, "term cap {} exceeded ({} terms)", self.limit, self.reached)
            }
            ExhaustionKind::MemoryBudget => write!(
                f,
                "memory budget {} bytes exceeded (~{} bytes)",
                self.limit, self.reached
            ),
            ExhaustionKind::TimeLimit => {
                write!(f, "time limit {} ms exceeded ({} ms)", self.limit, self.reached)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeterminantBackend {
    /// Row-by-row Laplace expansion with memoized minors.
    #[default]
    Minors,
    /// Fraction-free Gaussian elimination with exact division.
    Bareiss,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ResultantOptions {
    pub limits: ResourceLimits,
    pub backend: DeterminantBackend,
}

/// The Sylvester matrix of `f` and `g` with respect to one variable.
///
/// With `m = deg f` and `n = deg g`, the first `n` rows hold the
/// coefficients of `f` from the leading one down, shifted one column per
/// row, and the last `m` rows do the same for `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylMatrix {
    var: DistVar,
    f_degree: usize,
    g_degree: usize,
    f_coeffs: Vec<MultiPoly>,
    g_coeffs: Vec<MultiPoly>,
}

impl SylMatrix {
    pub fn variable(&self) -> DistVar {
        self.var
    }

    pub fn dimension(&self) -> usize {
        self.f_degree + self.g_degree
    }

    pub fn f_degree(&self) -> usize {
        self.f_degree
    }

    pub fn g_degree(&self) -> usize {
        self.g_degree
    }

    /// Index of the coefficient at `(row, col)` in `f_coeffs`/`g_coeffs`, by power.
    fn slot(&self, row: usize, col: usize) -> Option<(bool, usize)> {
        let (is_f, offset, deg) = if row < self.g_degree {
            (true, row, self.f_degree)
        } else {
            (false, row - self.g_degree, self.g_degree)
        };
        if col < offset || col > offset + deg {
            return None;
        }
        Some((is_f, deg - (col - offset)))
    }

    pub fn entry(&self, row: usize, col: usize) -> MultiPoly {
        match self.slot(row, col) {
            Some((true, p)) => self.f_coeffs[p].clone(),
            Some((false, p)) => self.g_coeffs[p].clone(),
            None => MultiPoly::zero(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<MultiPoly>> {
        let n = self.dimension();
        (0..n).map(|r| (0..n).map(|c| self.entry(r, c)).collect()).collect()
    }

    /// Number of nonzero entries.
    pub fn nonzero_entries(&self) -> usize {
        let n = self.dimension();
        (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .filter(|&(r, c)| !self.entry(r, c).is_zero())
            .count()
    }
}

pub fn sylvester_matrix(f: &MultiPoly, g: &MultiPoly, v: DistVar) -> Result<SylMatrix, PolyError> {
    let m = f.degree_in(v) as usize;
    let n = g.degree_in(v) as usize;
    if m == 0 {
        return Err(PolyError::VariableAbsent(v, "first polynomial"));
    }
    if n == 0 {
        return Err(PolyError::VariableAbsent(v, "second polynomial"));
    }
    Ok(SylMatrix { var: v, f_degree: m, g_degree: n, f_coeffs: f.coeffs_in(v), g_coeffs: g.coeffs_in(v) })
}

/// Sylvester resultant with default limits and backend.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, v: DistVar) -> Result<MultiPoly, PolyError> {
    resultant_with(f, g, v, &ResultantOptions::default())
}

/// Determinant of the Sylvester matrix of `f` and `g` in `v`.
///
/// A zero result is returned as the zero polynomial; callers decide whether
/// that is degenerate.
pub fn resultant_with(
    f: &MultiPoly,
    g: &MultiPoly,
    v: DistVar,
    opts: &ResultantOptions,
) -> Result<MultiPoly, PolyError> {
    let syl = sylvester_matrix(f, g, v)?;
    let vars: Vec<DistVar> =
        union_vars(f.vars(), g.vars()).into_iter().filter(|&x| x != v).collect();
    if vars.len() > MAX_VARS {
        return Err(PolyError::TooManyVariables { max: MAX_VARS, found: vars.len() });
    }
    // every term of the determinant picks g_degree entries of f and f_degree of g
    for &x in &vars {
        let bound = f.degree_in(x) as usize * syl.g_degree + g.degree_in(x) as usize * syl.f_degree;
        if bound > MAX_EXPONENT as usize {
            return Err(PolyError::ExponentOverflow(MAX_EXPONENT));
        }
    }
    match opts.backend {
        DeterminantBackend::Minors => minors_determinant(&syl, &vars, &opts.limits),
        DeterminantBackend::Bareiss => bareiss_determinant(&syl.rows(), &opts.limits),
    }
}

type RawPoly = Vec<(Key, Coeff)>;

fn to_space(p: &MultiPoly, vars: &[DistVar]) -> RawPoly {
    let m = slot_map(p.vars(), vars);
    p.raw_terms().iter().map(|(k, c)| (repack(*k, &m), c.clone())).collect()
}

struct Budget<'a> {
    limits: &'a ResourceLimits,
    live_terms: usize,
    start: Instant,
}

impl<'a> Budget<'a> {
    fn new(limits: &'a ResourceLimits) -> Self {
        Budget { limits, live_terms: 0, start: Instant::now() }
    }

    fn check_time(&self) -> Result<(), PolyError> {
        if let Some(ms) = self.limits.max_millis {
            let spent = self.start.elapsed().as_millis() as usize;
            if spent > ms as usize {
                return Err(PolyError::ResourceExhausted(Exhaustion {
                    kind: ExhaustionKind::TimeLimit,
                    limit: ms as usize,
                    reached: spent,
                }));
            }
        }
        Ok(())
    }

    fn check_acc(&self, acc_len: usize) -> Result<(), PolyError> {
        if acc_len > self.limits.max_terms {
            return Err(PolyError::ResourceExhausted(Exhaustion {
                kind: ExhaustionKind::TermCap,
                limit: self.limits.max_terms,
                reached: acc_len,
            }));
        }
        let bytes = self
            .live_terms
            .saturating_mul(BYTES_PER_TERM)
            .saturating_add(acc_len.saturating_mul(BYTES_PER_ACC_ENTRY));
        if bytes > self.limits.max_memory_bytes {
            return Err(PolyError::ResourceExhausted(Exhaustion {
                kind: ExhaustionKind::MemoryBudget,
                limit: self.limits.max_memory_bytes,
                reached: bytes,
            }));
        }
        Ok(())
    }
}

/// Can `rows` be matched to `cols` through nonzero entries?
fn perfect_matching(rows: &[usize], cols: u32, nonzero: &[u32]) -> bool {
    let col_list: Vec<usize> = (0..32).filter(|c| cols >> c & 1 == 1).collect();
    if col_list.len() != rows.len() {
        return false;
    }
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    fn augment(
        r: usize,
        rows: &[usize],
        cols: u32,
        nonzero: &[u32],
        owner: &mut BTreeMap<usize, usize>,
        seen: &mut u32,
    ) -> bool {
        let cand = nonzero[rows[r]] & cols & !*seen;
        for c in 0..32 {
            if cand >> c & 1 == 1 {
                *seen |= 1 << c;
                let free = match owner.get(&c).copied() {
                    None => true,
                    Some(other) => augment(other, rows, cols, nonzero, owner, seen),
                };
                if free {
                    owner.insert(c, r);
                    return true;
                }
            }
        }
        false
    }
    (0..rows.len()).all(|r| {
        let mut seen = 0u32;
        augment(r, rows, cols, nonzero, &mut owner, &mut seen)
    })
}

fn permutation_sign(order: &[usize]) -> bool {
    // true for odd permutations
    let mut odd = false;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if order[i] > order[j] {
                odd = !odd;
            }
        }
    }
    odd
}

fn minors_determinant(
    syl: &SylMatrix,
    vars: &[DistVar],
    limits: &ResourceLimits,
) -> Result<MultiPoly, PolyError> {
    let n = syl.dimension();
    let f_raw: Vec<RawPoly> = syl.f_coeffs.iter().map(|p| to_space(p, vars)).collect();
    let g_raw: Vec<RawPoly> = syl.g_coeffs.iter().map(|p| to_space(p, vars)).collect();
    let grid: Vec<Vec<RawPoly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| match syl.slot(r, c) {
                    Some((true, p)) => f_raw[p].clone(),
                    Some((false, p)) => g_raw[p].clone(),
                    None => Vec::new(),
                })
                .collect()
        })
        .collect();
    // Expand the rows of the polynomial with larger coefficients first; the
    // final levels then multiply large minors by small entries.
    let f_size: usize = f_raw.iter().map(Vec::len).sum();
    let g_size: usize = g_raw.iter().map(Vec::len).sum();
    let f_rows = 0..syl.g_degree;
    let g_rows = syl.g_degree..n;
    let order: Vec<usize> = if g_size > f_size {
        g_rows.chain(f_rows).collect()
    } else {
        f_rows.chain(g_rows).collect()
    };
    expand_minors(&grid, &order, vars, limits)
}

/// Determinant of a square matrix of polynomials by memoized minor expansion.
pub fn determinant(rows: &[Vec<MultiPoly>], limits: &ResourceLimits) -> Result<MultiPoly, PolyError> {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let mut vars: Vec<DistVar> = rows.iter().flatten().flat_map(|p| p.vars().to_vec()).collect();
    vars.sort();
    vars.dedup();
    if vars.len() > MAX_VARS {
        return Err(PolyError::TooManyVariables { max: MAX_VARS, found: vars.len() });
    }
    let grid: Vec<Vec<RawPoly>> =
        rows.iter().map(|r| r.iter().map(|p| to_space(p, &vars)).collect()).collect();
    let order: Vec<usize> = (0..n).collect();
    expand_minors(&grid, &order, &vars, limits)
}

fn expand_minors(
    grid: &[Vec<RawPoly>],
    order: &[usize],
    vars: &[DistVar],
    limits: &ResourceLimits,
) -> Result<MultiPoly, PolyError> {
    let n = grid.len();
    assert!(n <= 32, "at most 32 rows");
    let nonzero: Vec<u32> = (0..n)
        .map(|r| (0..n).filter(|&c| !grid[r][c].is_empty()).fold(0u32, |m, c| m | 1 << c))
        .collect();
    let odd = permutation_sign(order);
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut budget = Budget::new(limits);
    let mut level: FxHashMap<u32, RawPoly> = FxHashMap::default();
    level.insert(0, vec![(0, Coeff::one())]);
    for k in 0..n {
        let row = order[k];
        let rest = &order[k + 1..];
        let mut targets: Vec<u32> = Vec::new();
        for &s in level.keys() {
            let free = nonzero[row] & !s;
            for c in 0..n {
                if free >> c & 1 == 1 {
                    targets.push(s | 1 << c);
                }
            }
        }
        targets.sort_unstable();
        targets.dedup();
        targets.retain(|&t| perfect_matching(rest, full & !t, &nonzero));
        let mut next: FxHashMap<u32, RawPoly> = FxHashMap::default();
        for t in targets {
            let mut acc: FxHashMap<Key, Acc> = FxHashMap::default();
            let mut pos = 0usize;
            for c in 0..n {
                if t >> c & 1 == 0 {
                    continue;
                }
                let here = pos;
                pos += 1;
                let a = &grid[row][c];
                let Some(minor) = level.get(&(t & !(1 << c))) else {
                    continue;
                };
                if a.is_empty() {
                    continue;
                }
                let negate = (k + here) % 2 == 1;
                for (ka, ca) in a {
                    for (km, cm) in minor {
                        acc.entry(ka + km).or_insert_with(Acc::zero).add_product(ca, cm, negate);
                    }
                    budget.check_acc(acc.len())?;
                    budget.check_time()?;
                }
            }
            let raw: RawPoly =
                acc.into_iter().filter_map(|(k, a)| a.into_coeff().map(|c| (k, c))).collect();
            if !raw.is_empty() {
                budget.live_terms += raw.len();
                next.insert(t, raw);
            }
        }
        let dropped: usize = level.values().map(Vec::len).sum();
        budget.live_terms = budget.live_terms.saturating_sub(dropped);
        level = next;
    }
    let det = level.remove(&full).unwrap_or_default();
    let det = if odd { det.into_iter().map(|(k, c)| (k, c.neg())).collect() } else { det };
    Ok(MultiPoly::from_raw(vars.to_vec(), det))
}

/// Exact quotient `p / d` in the polynomial ring; fails if `d` does not divide `p`.
#[cfg(test)]
pub(crate) fn div_exact(p: &MultiPoly, d: &MultiPoly) -> Result<MultiPoly, PolyError> {
    let unlimited = ResourceLimits::unlimited();
    div_exact_within(p, d, &Budget::new(&unlimited))
}

fn div_exact_within(p: &MultiPoly, d: &MultiPoly, budget: &Budget) -> Result<MultiPoly, PolyError> {
    if d.is_zero() {
        return Err(PolyError::ZeroPolynomial("exact quotient"));
    }
    if p.is_zero() {
        return Ok(MultiPoly::zero());
    }
    let vars = union_vars(p.vars(), d.vars());
    if vars.len() > MAX_VARS {
        return Err(PolyError::TooManyVariables { max: MAX_VARS, found: vars.len() });
    }
    let d_raw = to_space(d, &vars);
    let (dk, dc) = d_raw[0].clone();
    // remainder keyed for descending graded-lex iteration
    let mut rem: BTreeMap<std::cmp::Reverse<GrlexKey>, Coeff> = to_space(p, &vars)
        .into_iter()
        .map(|(k, c)| (std::cmp::Reverse(GrlexKey(k)), c))
        .collect();
    let mut quotient: Vec<(Key, Coeff)> = Vec::new();
    while let Some((std::cmp::Reverse(GrlexKey(lk)), lc)) = rem.pop_first() {
        let mut qk = 0u128;
        for s in 0..vars.len() {
            let (a, b) = (exp_at(lk, s), exp_at(dk, s));
            if a < b {
                return Err(PolyError::InexactDivision);
            }
            qk |= ((a - b) as u128) << shift(s);
        }
        let qc = lc.checked_div(&dc).ok_or(PolyError::InexactDivision)?;
        for (k, c) in d_raw.iter().skip(1) {
            let key = std::cmp::Reverse(GrlexKey(k + qk));
            let sub = c.mul(&qc).neg();
            match rem.get_mut(&key) {
                Some(v) => {
                    let s = v.add(&sub);
                    if s.is_zero() {
                        rem.remove(&key);
                    } else {
                        *v = s;
                    }
                }
                None => {
                    rem.insert(key, sub);
                }
            }
        }
        quotient.push((qk, qc));
        if quotient.len().is_multiple_of(1024) {
            budget.check_time()?;
            budget.check_acc(rem.len())?;
        }
    }
    Ok(MultiPoly::from_raw(vars, quotient))
}

#[derive(Clone, Copy, PartialEq, Eq)]
struct GrlexKey(Key);

impl PartialOrd for GrlexKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GrlexKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        grlex_cmp(self.0, other.0)
    }
}

fn bareiss_determinant(
    rows: &[Vec<MultiPoly>],
    limits: &ResourceLimits,
) -> Result<MultiPoly, PolyError> {
    let n = rows.len();
    let mut m: Vec<Vec<MultiPoly>> = rows.to_vec();
    let mut negate = false;
    let mut prev = MultiPoly::one();
    let mut budget = Budget::new(limits);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].try_mul(&m[i][j])?.sub(&m[i][k].try_mul(&m[k][j])?);
                budget.live_terms = m.iter().flatten().map(MultiPoly::term_count).sum();
                budget.check_acc(num.term_count())?;
                budget.check_time()?;
                m[i][j] = div_exact_within(&num, &prev, &budget)?;
            }
            m[i][k] = MultiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Cofactor expansion along the first row. Exponential; for cross-checks only.
#[cfg(test)]
pub(crate) fn cofactor_determinant(rows: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = rows.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut total = MultiPoly::zero();
    for c in 0..n {
        if rows[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = rows[0][c].mul(&cofactor_determinant(&minor));
        total = if c % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn x(i: u32, j: u32) -> MultiPoly {
        MultiPoly::var(DistVar::x(i, j))
    }

    fn c(n: i64) -> MultiPoly {
        MultiPoly::constant(n)
    }

    #[test]
    fn hand_computed_three_by_three() {
        // f = v^2 - x12, g = v - x13: res = x13^2 - x12
        let v = DistVar::x(5, 6);
        let f = &x(5, 6).pow(2) - &x(1, 2);
        let g = &x(5, 6) - &x(1, 3);
        let expected = &x(1, 3).pow(2) - &x(1, 2);
        assert_eq!(resultant(&f, &g, v).unwrap(), expected);
        let bareiss = ResultantOptions { backend: DeterminantBackend::Bareiss, ..Default::default() };
        assert_eq!(resultant_with(&f, &g, v, &bareiss).unwrap(), expected);
    }

    #[test]
    fn matrix_shape_and_rows() {
        let v = DistVar::x(1, 2);
        let f = &(&x(1, 2).pow(2) * &x(3, 4)) + &c(1);
        let g = &(&x(1, 2).pow(3) + &x(1, 2)) + &c(2);
        let syl = sylvester_matrix(&f, &g, v).unwrap();
        assert_eq!(syl.dimension(), 5);
        let rows = syl.rows();
        // first row: a2 a1 a0 0 0
        assert_eq!(rows[0][0], x(3, 4));
        assert!(rows[0][1].is_zero());
        assert_eq!(rows[0][2], c(1));
        assert!(rows[0][3].is_zero());
        // third row is shifted twice
        assert_eq!(rows[2][2], x(3, 4));
        // g rows: b3 b2 b1 b0 0
        assert_eq!(rows[3][0], c(1));
        assert_eq!(rows[3][2], c(1));
        assert_eq!(rows[3][3], c(2));
        assert_eq!(rows[4][4], c(2));
        assert!(sylvester_matrix(&f, &x(3, 4), v).is_err());
    }

    #[test]
    fn resultant_detects_common_root() {
        // (v - a)(v - b) and (v - a)(v + 1): common root a, resultant vanishes
        let v = DistVar::x(1, 2);
        let a = x(3, 4);
        let b = x(5, 6);
        let f = &(&x(1, 2) - &a) * &(&x(1, 2) - &b);
        let g = &(&x(1, 2) - &a) * &(&x(1, 2) + &c(1));
        assert!(resultant(&f, &g, v).unwrap().is_zero());
    }

    #[test]
    fn term_cap_is_reported() {
        let v = DistVar::x(1, 2);
        let mut f = x(1, 2).pow(2);
        let mut g = x(1, 2).pow(2);
        for (i, j) in [(3, 4), (3, 5), (4, 5), (3, 6)] {
            f = &f + &x(i, j);
            g = &g + &(&x(i, j) * &x(1, 2));
        }
        let opts = ResultantOptions {
            limits: ResourceLimits::unlimited().with_max_terms(3),
            ..Default::default()
        };
        match resultant_with(&f, &g, v, &opts) {
            Err(PolyError::ResourceExhausted(e)) => assert_eq!(e.kind, ExhaustionKind::TermCap),
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn exact_division() {
        let p = &(&x(1, 2) + &x(1, 3)) * &(&x(1, 2) - &c(3));
        let q = div_exact(&p, &(&x(1, 2) - &c(3))).unwrap();
        assert_eq!(q, &x(1, 2) + &x(1, 3));
        assert!(div_exact(&x(1, 2), &x(1, 3)).is_err());
    }

    fn arb_univariate_specialization() -> impl Strategy<Value = (MultiPoly, MultiPoly)> {
        // integer coefficients except one symbolic parameter, degrees 1..=3
        let coeffs = |n: usize| prop::collection::vec((-5i64..6, 0u32..2), n);
        (1usize..4, 1usize..4)
            .prop_flat_map(move |(m, n)| (coeffs(m + 1), coeffs(n + 1)))
            .prop_map(|(fc, gc)| {
                let build = |cs: &[(i64, u32)]| {
                    let mut p = MultiPoly::zero();
                    for (i, &(k, sym)) in cs.iter().enumerate() {
                        let mut coeff = MultiPoly::constant(k);
                        if sym == 1 {
                            coeff = &coeff + &x(3, 4);
                        }
                        p = &p + &(&coeff * &x(1, 2).pow(i as u32));
                    }
                    // force the top coefficient to be nonzero
                    &p + &x(1, 2).pow(cs.len() as u32 - 1)
                };
                (build(&fc), build(&gc))
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn backends_agree_with_cofactor_expansion((f, g) in arb_univariate_specialization()) {
            let v = DistVar::x(1, 2);
            prop_assume!(f.degree_in(v) >= 1 && g.degree_in(v) >= 1);
            let syl = sylvester_matrix(&f, &g, v).unwrap();
            prop_assume!(syl.dimension() <= 6);
            let oracle = cofactor_determinant(&syl.rows());
            let minors = resultant(&f, &g, v).unwrap();
            prop_assert_eq!(&minors, &oracle);
            prop_assert_eq!(minors.degree_in(v), 0);
            let bareiss = ResultantOptions { backend: DeterminantBackend::Bareiss, ..Default::default() };
            prop_assert_eq!(resultant_with(&f, &g, v, &bareiss).unwrap(), oracle);
        }
    }

    #[test]
    fn degree_formula_on_generic_homogeneous_inputs() {
        // f, g homogeneous in (v, x13, x14); deg_v f = 2, deg_v g = 1
        let v = DistVar::x(1, 2);
        let f = &(&x(1, 2).pow(2) + &(&x(1, 3) * &x(1, 2))) + &x(1, 4).pow(2);
        let g = &(&x(1, 2) * &x(1, 3)) + &x(1, 4).pow(2);
        let r = resultant(&f, &g, v).unwrap();
        let (hf, hg, df, dg) = (2, 2, 2, 1);
        assert_eq!(r.homogeneous_degree().unwrap(), Some(hf * dg + hg * df - df * dg));
        assert!(r.coefficient(&Monomial::one()).eq(&BigInt::from(0)));
    }
}
