//! Exact sparse multivariate polynomials over the integers in squared-distance
//! variables `x_{i,j}`.
//!
//! Each polynomial carries its own sorted list of variables (at most
//! [`MAX_VARS`]) and stores every monomial as a packed exponent vector in a
//! `u128`, one byte per variable with the smallest variable in the most
//! significant byte. Integer comparison of packed keys is then the
//! lexicographic order, and terms are kept sorted in graded lexicographic
//! order, descending.

mod coeff;
pub mod io;
mod sylvester;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

pub(crate) use coeff::{Acc, Coeff};
pub use sylvester::{
    determinant, resultant, resultant_with, sylvester_matrix, DeterminantBackend, Exhaustion, ExhaustionKind,
    ResourceLimits, ResultantOptions, SylMatrix,
};

use crate::error::PolyError;
use crate::graph::{Edge, VertexId};

/// Maximum number of distinct variables in one polynomial.
pub const MAX_VARS: usize = 16;
/// Largest exponent of a single variable.
pub const MAX_EXPONENT: u32 = 255;

/// The squared distance variable `x_{i,j}`, `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DistVar(Edge);

impl DistVar {
    pub fn new(i: VertexId, j: VertexId) -> Result<Self, crate::error::GraphError> {
        Edge::new(i, j).map(DistVar)
    }

    pub fn of_edge(e: Edge) -> Self {
        DistVar(e)
    }

    /// `x(1, 2)` is `x_{1,2}`. Panics on equal or zero labels.
    pub fn x(i: u32, j: u32) -> Self {
        DistVar(crate::graph::e(i, j))
    }

    pub fn edge(self) -> Edge {
        self.0
    }

    pub fn i(self) -> VertexId {
        self.0.u()
    }

    pub fn j(self) -> VertexId {
        self.0.v()
    }
}

impl fmt::Display for DistVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.0.u(), self.0.v())
    }
}

/// A monomial as an explicit map from variables to positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<DistVar, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn new(powers: impl IntoIterator<Item = (DistVar, u32)>) -> Self {
        let mut m = BTreeMap::new();
        for (v, e) in powers {
            if e > 0 {
                *m.entry(v).or_insert(0) += e;
            }
        }
        Monomial(m)
    }

    pub fn var(v: DistVar) -> Self {
        Monomial::new([(v, 1)])
    }

    pub fn exponent(&self, v: DistVar) -> u32 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn powers(&self) -> impl Iterator<Item = (DistVar, u32)> + '_ {
        self.0.iter().map(|(v, e)| (*v, *e))
    }
}

pub(crate) type Key = u128;

#[inline]
pub(crate) fn shift(slot: usize) -> u32 {
    ((MAX_VARS - 1 - slot) * 8) as u32
}

#[inline]
pub(crate) fn exp_at(key: Key, slot: usize) -> u32 {
    ((key >> shift(slot)) & 0xff) as u32
}

#[inline]
pub(crate) fn key_degree(key: Key) -> u32 {
    // byte-wise horizontal sum
    let lo = key as u64;
    let hi = (key >> 64) as u64;
    byte_sum(lo) + byte_sum(hi)
}

#[inline]
fn byte_sum(x: u64) -> u32 {
    let pairs = (x & 0x00ff_00ff_00ff_00ff) + ((x >> 8) & 0x00ff_00ff_00ff_00ff);
    let quads = (pairs & 0x0000_ffff_0000_ffff) + ((pairs >> 16) & 0x0000_ffff_0000_ffff);
    ((quads & 0xffff_ffff) + (quads >> 32)) as u32
}

#[inline]
pub(crate) fn grlex_cmp(a: Key, b: Key) -> Ordering {
    key_degree(a).cmp(&key_degree(b)).then(a.cmp(&b))
}

/// Maps keys packed against `from` into the slots of the superset space `to`.
pub(crate) fn slot_map(from: &[DistVar], to: &[DistVar]) -> Vec<usize> {
    from.iter()
        .map(|v| to.binary_search(v).expect("target space contains source variables"))
        .collect()
}

#[inline]
pub(crate) fn repack(key: Key, map: &[usize]) -> Key {
    let mut out = 0u128;
    for (slot, &target) in map.iter().enumerate() {
        let e = (key >> shift(slot)) & 0xff;
        out |= e << shift(target);
    }
    out
}

pub(crate) fn union_vars(a: &[DistVar], b: &[DistVar]) -> Vec<DistVar> {
    let mut out: Vec<DistVar> = a.iter().chain(b).copied().collect();
    out.sort();
    out.dedup();
    out
}

/// Exact sparse polynomial with integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<DistVar>,
    terms: Vec<(Key, Coeff)>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.len() > 20 {
            write!(f, "MultiPoly({} terms in {} vars)", self.terms.len(), self.vars.len())
        } else {
            write!(f, "MultiPoly({})", self)
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut first = true;
            if m.total_degree() == 0 || abs != BigInt::from(1) {
                write!(f, "{}", abs)?;
                first = false;
            }
            for (v, e) in m.powers() {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{}", v)?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { vars: Vec::new(), terms: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = Coeff::from_big(c.into());
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { vars: Vec::new(), terms: vec![(0, c)] }
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    /// The polynomial `x_v`.
    pub fn var(v: DistVar) -> Self {
        MultiPoly { vars: vec![v], terms: vec![(1u128 << shift(0), Coeff::one())] }
    }

    /// Builds a polynomial from explicit terms; repeated monomials are summed.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Result<Self, PolyError> {
        let terms: Vec<(Monomial, BigInt)> = terms.into_iter().collect();
        let mut vars: Vec<DistVar> = terms.iter().flat_map(|(m, _)| m.0.keys().copied()).collect();
        vars.sort();
        vars.dedup();
        if vars.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables { max: MAX_VARS, found: vars.len() });
        }
        let mut acc: FxHashMap<Key, Acc> = FxHashMap::default();
        for (m, c) in terms {
            let mut key = 0u128;
            for (v, e) in m.powers() {
                if e > MAX_EXPONENT {
                    return Err(PolyError::ExponentOverflow(MAX_EXPONENT));
                }
                let slot = vars.binary_search(&v).expect("collected above");
                key |= (e as u128) << shift(slot);
            }
            acc.entry(key).or_insert_with(Acc::zero).add_coeff(&Coeff::from_big(c), false);
        }
        Ok(MultiPoly::from_acc(vars, acc))
    }

    pub(crate) fn from_acc(vars: Vec<DistVar>, acc: FxHashMap<Key, Acc>) -> Self {
        let terms = acc.into_iter().filter_map(|(k, a)| a.into_coeff().map(|c| (k, c))).collect();
        MultiPoly::from_raw(vars, terms)
    }

    /// Normalizes raw terms: drops zeros, sorts, and removes unused variables.
    /// Keys must be distinct.
    pub(crate) fn from_raw(vars: Vec<DistVar>, mut terms: Vec<(Key, Coeff)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        let used = terms.iter().fold(0u128, |acc, (k, _)| acc | k);
        let keep: Vec<usize> =
            (0..vars.len()).filter(|&s| (used >> shift(s)) & 0xff != 0).collect();
        let (vars, terms) = if keep.len() == vars.len() {
            (vars, terms)
        } else {
            let new_vars: Vec<DistVar> = keep.iter().map(|&s| vars[s]).collect();
            // slot s of the old space moves to position of s in `keep`; unused slots are empty
            let terms = terms
                .into_iter()
                .map(|(k, c)| {
                    let mut out = 0u128;
                    for (target, &s) in keep.iter().enumerate() {
                        out |= ((k >> shift(s)) & 0xff) << shift(target);
                    }
                    (out, c)
                })
                .collect();
            (new_vars, terms)
        };
        let mut p = MultiPoly { vars, terms };
        p.sort_terms();
        p
    }

    fn sort_terms(&mut self) {
        self.terms.sort_unstable_by(|a, b| grlex_cmp(b.0, a.0));
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Variables that occur in the polynomial, ascending.
    pub fn vars(&self) -> &[DistVar] {
        &self.vars
    }

    pub(crate) fn raw_terms(&self) -> &[(Key, Coeff)] {
        &self.terms
    }

    fn key_to_monomial(&self, key: Key) -> Monomial {
        Monomial(
            self.vars
                .iter()
                .enumerate()
                .filter_map(|(s, v)| {
                    let e = exp_at(key, s);
                    (e > 0).then_some((*v, e))
                })
                .collect(),
        )
    }

    /// Terms in graded lexicographic order, descending.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (self.key_to_monomial(*k), c.to_big()))
    }

    pub fn leading_term(&self) -> Option<(Monomial, BigInt)> {
        self.terms().next()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        let mut key = 0u128;
        for (v, e) in m.powers() {
            match self.vars.binary_search(&v) {
                Ok(s) if e <= MAX_EXPONENT => key |= (e as u128) << shift(s),
                _ => return BigInt::zero(),
            }
        }
        self.terms
            .binary_search_by(|(k, _)| grlex_cmp(key, *k))
            .map(|i| self.terms[i].1.to_big())
            .unwrap_or_else(|_| BigInt::zero())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero();
        }
        let s = Coeff::from_big(s.clone());
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, c)| (*k, c.mul(&s))).collect(),
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.combine(other, true)
    }

    fn combine(&self, other: &MultiPoly, negate_other: bool) -> MultiPoly {
        let vars = union_vars(&self.vars, &other.vars);
        if vars.len() > MAX_VARS {
            panic!("{}", PolyError::TooManyVariables { max: MAX_VARS, found: vars.len() });
        }
        let ma = slot_map(&self.vars, &vars);
        let mb = slot_map(&other.vars, &vars);
        // repacking into a superset space preserves the term order, so a merge suffices
        let a = self.terms.iter().map(|(k, c)| (repack(*k, &ma), c.clone()));
        let b = other
            .terms
            .iter()
            .map(|(k, c)| (repack(*k, &mb), if negate_other { c.neg() } else { c.clone() }));
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = a.peekable();
        let mut b = b.peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match grlex_cmp(x.0, y.0) {
                    Ordering::Greater => out.push(a.next().expect("peeked")),
                    Ordering::Less => out.push(b.next().expect("peeked")),
                    Ordering::Equal => {
                        let (k, c1) = a.next().expect("peeked");
                        let (_, c2) = b.next().expect("peeked");
                        let s = c1.add(&c2);
                        if !s.is_zero() {
                            out.push((k, s));
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().expect("peeked")),
                (None, Some(_)) => out.push(b.next().expect("peeked")),
                (None, None) => break,
            }
        }
        MultiPoly::from_raw(vars, out)
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero());
        }
        let vars = union_vars(&self.vars, &other.vars);
        if vars.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables { max: MAX_VARS, found: vars.len() });
        }
        for v in &vars {
            if self.degree_in(*v) + other.degree_in(*v) > MAX_EXPONENT {
                return Err(PolyError::ExponentOverflow(MAX_EXPONENT));
            }
        }
        let ma = slot_map(&self.vars, &vars);
        let mb = slot_map(&other.vars, &vars);
        let a: Vec<(Key, &Coeff)> = self.terms.iter().map(|(k, c)| (repack(*k, &ma), c)).collect();
        let b: Vec<(Key, &Coeff)> =
            other.terms.iter().map(|(k, c)| (repack(*k, &mb), c)).collect();
        let mut acc: FxHashMap<Key, Acc> = FxHashMap::default();
        acc.reserve(a.len().max(b.len()));
        for (ka, ca) in &a {
            for (kb, cb) in &b {
                acc.entry(ka + kb).or_insert_with(Acc::zero).add_product(ca, cb, false);
            }
        }
        Ok(MultiPoly::from_acc(vars, acc))
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Largest exponent of `v`; 0 when `v` does not occur.
    pub fn degree_in(&self, v: DistVar) -> u32 {
        match self.vars.binary_search(&v) {
            Ok(s) => self.terms.iter().map(|(k, _)| exp_at(*k, s)).max().unwrap_or(0),
            Err(_) => 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|(k, _)| key_degree(*k)).unwrap_or(0)
    }

    /// Common total degree of all terms, or `None` when the terms disagree.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>, PolyError> {
        let first = self.terms.first().ok_or(PolyError::ZeroPolynomial("homogeneous degree"))?;
        let d = key_degree(first.0);
        Ok(self.terms.iter().all(|(k, _)| key_degree(*k) == d).then_some(d))
    }

    /// Coefficients of `v^0, ..., v^d` where `d = degree_in(v)`; each is free of `v`.
    pub fn coeffs_in(&self, v: DistVar) -> Vec<MultiPoly> {
        let slot = match self.vars.binary_search(&v) {
            Ok(s) => s,
            Err(_) => return vec![self.clone()],
        };
        let d = self.degree_in(v) as usize;
        let mask = !(0xffu128 << shift(slot));
        let mut buckets: Vec<Vec<(Key, Coeff)>> = vec![Vec::new(); d + 1];
        for (k, c) in &self.terms {
            buckets[exp_at(*k, slot) as usize].push((k & mask, c.clone()));
        }
        buckets.into_iter().map(|t| MultiPoly::from_raw(self.vars.clone(), t)).collect()
    }

    /// Greatest common divisor of the coefficients, positive.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = c.gcd_with(&g);
            if coeff::big_is_unit(&g) {
                break;
            }
        }
        g
    }

    /// Divides by the integer content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Result<MultiPoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial("primitive part"));
        }
        let mut g = self.content();
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if g == BigInt::from(1) {
            return Ok(self.clone());
        }
        Ok(MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, c)| (*k, c.div_exact(&g))).collect(),
        })
    }

    /// Applies an injective vertex relabeling to every variable.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> MultiPoly {
        let mapped: Vec<DistVar> = self.vars.iter().map(|v| DistVar(v.0.relabel(map))).collect();
        let mut sorted = mapped.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), mapped.len(), "relabeling must be injective on variables");
        let m = slot_map(&mapped, &sorted);
        let terms = self.terms.iter().map(|(k, c)| (repack(*k, &m), c.clone())).collect();
        let mut p = MultiPoly { vars: sorted, terms };
        p.sort_terms();
        p
    }

    /// Substitutes integer values for every variable and returns
    /// `sum_t c_t * x^t * w^(D - deg t)` where `D` is the total degree.
    ///
    /// With `w = 1` this is plain evaluation. Evaluating at `x = N / w`
    /// equals the returned value divided by `w^D`.
    pub fn evaluate_homogenized(
        &self,
        values: &BTreeMap<DistVar, BigInt>,
        w: &BigInt,
    ) -> Result<BigInt, DistVar> {
        if self.terms.is_empty() {
            return Ok(BigInt::zero());
        }
        let mut vals = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            vals.push(values.get(v).ok_or(*v)?.clone());
        }
        let top = self.total_degree();
        let mut maxexp = vec![0u32; self.vars.len()];
        for (k, _) in &self.terms {
            for (s, m) in maxexp.iter_mut().enumerate() {
                *m = (*m).max(exp_at(*k, s));
            }
        }
        let powers: Vec<Vec<BigInt>> = vals
            .iter()
            .zip(&maxexp)
            .map(|(x, &m)| {
                let mut p = Vec::with_capacity(m as usize + 1);
                p.push(BigInt::from(1));
                for i in 1..=m as usize {
                    let next = &p[i - 1] * x;
                    p.push(next);
                }
                p
            })
            .collect();
        let wpow: Vec<BigInt> = {
            let mut p = vec![BigInt::from(1)];
            for i in 1..=top as usize {
                let next = &p[i - 1] * w;
                p.push(next);
            }
            p
        };
        // lexicographic order groups terms by shared exponent prefixes
        let mut order: Vec<(Key, &Coeff)> = self.terms.iter().map(|(k, c)| (*k, c)).collect();
        order.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Ok(eval_trie(&order, 0, self.vars.len(), &powers, &wpow, top))
    }
}

fn eval_trie(
    terms: &[(Key, &Coeff)],
    slot: usize,
    nvars: usize,
    powers: &[Vec<BigInt>],
    wpow: &[BigInt],
    top: u32,
) -> BigInt {
    if slot == nvars {
        debug_assert_eq!(terms.len(), 1);
        let (k, c) = terms[0];
        let pad = (top - key_degree(k)) as usize;
        return match c {
            Coeff::Small(s) => &wpow[pad] * *s,
            Coeff::Big(b) => &wpow[pad] * &**b,
        };
    }
    let mut total = BigInt::zero();
    let mut start = 0;
    while start < terms.len() {
        let e = exp_at(terms[start].0, slot);
        let mut end = start + 1;
        while end < terms.len() && exp_at(terms[end].0, slot) == e {
            end += 1;
        }
        let inner = eval_trie(&terms[start..end], slot + 1, nvars, powers, wpow, top);
        if e == 0 {
            total += inner;
        } else {
            total += inner * &powers[slot][e as usize];
        }
        start = end;
    }
    total
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}
