//! Exact rational point placements and evaluation of distance polynomials.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::VertexId;
use crate::poly::{DistVar, MultiPoly};

/// Default bound on integer coordinates.
pub const COORDINATE_BOUND: i64 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Placement {
    points: BTreeMap<VertexId, (BigRational, BigRational)>,
}

impl Placement {
    /// Rejects coincident points.
    pub fn new(points: BTreeMap<VertexId, (BigRational, BigRational)>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for (v, p) in &points {
            if !seen.insert(p.clone()) {
                return Err(GraphError::Precondition(format!("vertex {v} coincides with another point")));
            }
        }
        Ok(Placement { points })
    }

    pub fn from_integers(points: &[(u32, i64, i64)]) -> Result<Self, GraphError> {
        let int = |x: i64| BigRational::from_integer(BigInt::from(x));
        Self::new(points.iter().map(|&(v, x, y)| (VertexId::new(v).expect("positive label"), (int(x), int(y)))).collect())
    }

    pub fn point(&self, v: VertexId) -> Option<&(BigRational, BigRational)> {
        self.points.get(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.points.keys().copied()
    }

    pub fn squared_distance(&self, a: VertexId, b: VertexId) -> Result<BigRational, GraphError> {
        let pa = self.points.get(&a).ok_or(GraphError::UnknownVertex(a))?;
        let pb = self.points.get(&b).ok_or(GraphError::UnknownVertex(b))?;
        let dx = &pa.0 - &pb.0;
        let dy = &pa.1 - &pb.1;
        Ok(&dx * &dx + &dy * &dy)
    }
}

/// Distinct integer points with coordinates in `[-bound, bound]`, deterministic per seed.
pub fn random_placement_bounded(vertices: &BTreeSet<VertexId>, seed: u64, bound: i64) -> Placement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut used = BTreeSet::new();
    let mut points = BTreeMap::new();
    for &v in vertices {
        let p = loop {
            let p = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
            if used.insert(p) {
                break p;
            }
        };
        let int = |x: i64| BigRational::from_integer(BigInt::from(x));
        points.insert(v, (int(p.0), int(p.1)));
    }
    Placement { points }
}

pub fn random_placement(vertices: &BTreeSet<VertexId>, seed: u64) -> Placement {
    random_placement_bounded(vertices, seed, COORDINATE_BOUND)
}

/// Integer numerators over a common denominator for every variable of `p`.
fn distances(p: &MultiPoly, pl: &Placement) -> Result<(BTreeMap<DistVar, BigInt>, BigInt), GraphError> {
    let mut raw = BTreeMap::new();
    for &v in p.vars() {
        raw.insert(v, pl.squared_distance(v.i(), v.j())?);
    }
    let den = raw.values().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let nums = raw.into_iter().map(|(v, r)| (v, r.numer() * (&den / r.denom()))).collect();
    Ok((nums, den))
}

/// Exact value of `p` with every `x_{i,j}` set to the squared distance of the placed points.
pub fn evaluate_at_placement(p: &MultiPoly, pl: &Placement) -> Result<BigRational, GraphError> {
    let (nums, den) = distances(p, pl)?;
    evaluate_values(p, &nums, &den)
}

fn evaluate_values(p: &MultiPoly, nums: &BTreeMap<DistVar, BigInt>, den: &BigInt) -> Result<BigRational, GraphError> {
    let top = p.total_degree();
    let value = p
        .evaluate_homogenized(nums, den)
        .map_err(|v| GraphError::UnknownVertex(v.i()))?;
    if value.is_zero() {
        return Ok(BigRational::zero());
    }
    Ok(BigRational::new(value, num_traits::pow(den.clone(), top as usize)))
}

/// Outcome of evaluating a polynomial on seeded placements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub seed: u64,
    pub placements: usize,
    pub vanished: usize,
    /// Nonzero after perturbing one squared distance away from a placement.
    pub nontrivial: bool,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.vanished == self.placements && self.nontrivial
    }
}

/// Evaluates `p` on `count` placements of its vertices with seeds `seed..seed+count`,
/// then once more with one squared distance moved off the placement.
pub fn verify_vanishing(p: &MultiPoly, count: usize, seed: u64) -> Result<Verification, GraphError> {
    let vertices: BTreeSet<VertexId> = p.vars().iter().flat_map(|v| [v.i(), v.j()]).collect();
    let mut vanished = 0;
    for k in 0..count as u64 {
        let pl = random_placement(&vertices, seed.wrapping_add(k));
        if evaluate_at_placement(p, &pl)?.is_zero() {
            vanished += 1;
        }
    }
    let nontrivial = match p.vars().first() {
        None => !p.is_zero(),
        Some(&first) => {
            let pl = random_placement(&vertices, seed.wrapping_add(count as u64));
            let (mut nums, den) = distances(p, &pl)?;
            *nums.get_mut(&first).expect("present") += &den;
            !evaluate_values(p, &nums, &den)?.is_zero()
        }
    };
    Ok(Verification { seed, placements: count, vanished, nontrivial })
}
