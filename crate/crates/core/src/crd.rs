//! Combinatorial resultants and the enumeration of combinatorial resultant
//! decompositions (CRDs).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::connectivity::{admissible_pairs, connectivity_class, separating_pairs, two_split, ConnectivityClass};
use crate::error::GraphError;
use crate::graph::{automorphisms, canonical_form, Edge, LabeledGraph, VertexId};
use crate::sparsity::{circuit, circuit_through};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrdKind {
    TwoSplit,
    ThreeConnectedStep,
    Generic,
}

/// A decomposition `(g1, g2, e)` of a circuit: both parts are circuits on
/// fewer vertices and their combinatorial resultant on `e` is the parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Crd {
    pub g1: LabeledGraph,
    pub g2: LabeledGraph,
    #[serde(rename = "e")]
    pub elimination_edge: Edge,
    pub kind: CrdKind,
}

impl Crd {
    /// Orders the parts so that `g1` has at least as many vertices as `g2`,
    /// ties broken by canonical form.
    pub fn new(g1: LabeledGraph, g2: LabeledGraph, e: Edge, kind: CrdKind) -> Crd {
        let key = |g: &LabeledGraph| (std::cmp::Reverse(g.vertex_count()), canonical_form(g).bytes);
        let (g1, g2) = if (key(&g2), &g2) < (key(&g1), &g1) { (g2, g1) } else { (g1, g2) };
        Crd { g1, g2, elimination_edge: e, kind }
    }

    pub fn resultant_graph(&self) -> Result<LabeledGraph, GraphError> {
        combinatorial_resultant(&self.g1, &self.g2, self.elimination_edge)
    }

    /// Checks every CRD invariant against `parent`.
    pub fn validate(&self, parent: &LabeledGraph) -> Result<(), GraphError> {
        if self.resultant_graph()? != *parent {
            return Err(GraphError::Precondition(format!(
                "parts do not reconstruct the parent on {}",
                self.elimination_edge
            )));
        }
        for g in [&self.g1, &self.g2] {
            if !circuit(g) {
                return Err(GraphError::Precondition(format!("part {g} is not a circuit")));
            }
            if g.vertex_count() >= parent.vertex_count() {
                return Err(GraphError::Precondition("part is not smaller than the parent".into()));
            }
        }
        Ok(())
    }
}

/// `(V1 ∪ V2, (E1 ∪ E2) - e)` for a common edge `e`.
pub fn combinatorial_resultant(
    g1: &LabeledGraph,
    g2: &LabeledGraph,
    e: Edge,
) -> Result<LabeledGraph, GraphError> {
    for g in [g1, g2] {
        if !g.has_edge(e) {
            return Err(GraphError::MissingEdge(e));
        }
    }
    g1.union(g2).remove_edge(e)
}

fn require_circuit(g: &LabeledGraph) -> Result<(), GraphError> {
    if g.vertex_count() < 5 {
        return Err(GraphError::TooFewVertices { needed: 5, found: g.vertex_count() });
    }
    if !circuit(g) {
        return Err(GraphError::NotCircuit);
    }
    Ok(())
}

/// Decompositions `(G - v + e, C, e)` of a 3-connected circuit, where `(v, e)`
/// is admissible, `w` is not adjacent to `v` nor on `e`, and `C` is the
/// circuit of `G - w + e` through `e`.
pub fn crd_3connected(g: &LabeledGraph) -> Result<Vec<Crd>, GraphError> {
    require_circuit(g)?;
    if connectivity_class(g)? != ConnectivityClass::ThreeConnected {
        return Err(GraphError::NotThreeConnectedCircuit);
    }
    let mut out = BTreeSet::new();
    for (v, e) in admissible_pairs(g)? {
        let g1 = g.delete_vertex(v)?.add_edge(e)?;
        for &w in g.vertices() {
            if w == v || g.is_adjacent(v, w) || e.contains(w) {
                continue;
            }
            let Some(g2) = circuit_through(&g.delete_vertex(w)?, e) else {
                continue;
            };
            let crd = Crd::new(g1.clone(), g2, e, CrdKind::ThreeConnectedStep);
            if crd.validate(g).is_ok() {
                out.insert(crd);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Brute-force enumeration: a common vertex set `V'` spanning `2|V'| - 4`
/// edges, a bipartition `A ∪ B` of the remaining vertices and a non-edge `e`
/// inside `V'`, kept when `G[V' ∪ A] + e` and `G[V' ∪ B] + e` are circuits.
pub fn crd_naive(g: &LabeledGraph) -> Result<Vec<Crd>, GraphError> {
    require_circuit(g)?;
    let vs: Vec<VertexId> = g.vertices().iter().copied().collect();
    let n = vs.len();
    assert!(n <= 30, "naive enumeration is exponential");
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) - 1 {
        let k = mask.count_ones() as usize;
        if k < 2 || k + 1 >= n {
            continue;
        }
        let common: BTreeSet<VertexId> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
        let g_common = g.induced(&common)?;
        if g_common.edge_count() + 4 != 2 * k {
            continue;
        }
        let rest: Vec<VertexId> = (0..n).filter(|i| mask >> i & 1 == 0).map(|i| vs[i]).collect();
        let r = rest.len();
        // rest[0] always goes to A, so each unordered bipartition is seen once
        for split in 0u32..(1 << (r - 1)) - 1 {
            let a: BTreeSet<VertexId> = std::iter::once(rest[0])
                .chain((1..r).filter(|i| split >> (i - 1) & 1 == 1).map(|i| rest[i]))
                .collect();
            let b: BTreeSet<VertexId> = rest.iter().copied().filter(|v| !a.contains(v)).collect();
            if g.edges().iter().any(|e| {
                (a.contains(&e.u()) && b.contains(&e.v())) || (b.contains(&e.u()) && a.contains(&e.v()))
            }) {
                continue;
            }
            let side_a = g.induced(&common.union(&a).copied().collect())?;
            let side_b = g.induced(&common.union(&b).copied().collect())?;
            for e in g_common.non_edges() {
                let g1 = side_a.add_edge(e)?;
                if !circuit(&g1) {
                    continue;
                }
                let g2 = side_b.add_edge(e)?;
                if !circuit(&g2) {
                    continue;
                }
                let kind = if k == 2 { CrdKind::TwoSplit } else { CrdKind::Generic };
                out.insert(Crd::new(g1, g2, e, kind));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// One decomposition per non-adjacent separating pair and bipartition of its components.
pub fn crd_2splits(g: &LabeledGraph) -> Result<Vec<Crd>, GraphError> {
    require_circuit(g)?;
    if connectivity_class(g)? != ConnectivityClass::TwoConnected {
        return Err(GraphError::NotTwoConnectedCircuit);
    }
    let mut out = Vec::new();
    for p in separating_pairs(g)? {
        if p.adjacent {
            continue;
        }
        for side in p.bipartitions() {
            let (g1, g2, e) = two_split(g, &p, &side)?;
            let crd = Crd::new(g1, g2, e, CrdKind::TwoSplit);
            debug_assert!(crd.validate(g).is_ok());
            out.push(crd);
        }
    }
    Ok(out)
}

/// Isomorphism-invariant key of a decomposition of `parent`: equal keys mean
/// some automorphism of the parent maps one decomposition onto the other.
pub fn crd_class_key(parent: &LabeledGraph, crd: &Crd) -> Vec<u8> {
    let canon = canonical_form(parent);
    let encode = |map: &BTreeMap<VertexId, VertexId>| -> Vec<u32> {
        let part = |g: &LabeledGraph| -> Vec<u32> {
            let mut es: Vec<Edge> = g.edges().iter().map(|e| e.relabel(map)).collect();
            es.sort();
            let mut out = vec![g.vertex_count() as u32];
            out.extend(es.iter().flat_map(|e| [e.u().get(), e.v().get()]));
            out
        };
        let (a, b) = (part(&crd.g1), part(&crd.g2));
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let e = crd.elimination_edge.relabel(map);
        let mut out = vec![e.u().get(), e.v().get()];
        out.extend(a);
        out.push(0);
        out.extend(b);
        out
    };
    let best = automorphisms(parent)
        .iter()
        .map(|aut| {
            let composed: BTreeMap<VertexId, VertexId> =
                aut.iter().map(|(&v, w)| (v, canon.relabel[w])).collect();
            encode(&composed)
        })
        .min()
        .expect("identity automorphism");
    let mut key = canon.bytes;
    key.extend(best.iter().flat_map(|x| x.to_le_bytes()));
    key
}

/// Groups decompositions of `parent` into isomorphism classes, as index lists
/// in order of first appearance.
pub fn isomorphism_classes(parent: &LabeledGraph, crds: &[Crd]) -> Vec<Vec<usize>> {
    let mut groups: Vec<(Vec<u8>, Vec<usize>)> = Vec::new();
    for (i, c) in crds.iter().enumerate() {
        let key = crd_class_key(parent, c);
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(i),
            None => groups.push((key, vec![i])),
        }
    }
    groups.into_iter().map(|(_, m)| m).collect()
}

/// JSON record of a decomposition together with its parent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrdRecord {
    pub parent: LabeledGraph,
    pub g1: LabeledGraph,
    pub g2: LabeledGraph,
    pub e: Edge,
    pub kind: CrdKind,
}

impl CrdRecord {
    pub fn new(parent: &LabeledGraph, crd: &Crd) -> Self {
        CrdRecord {
            parent: parent.clone(),
            g1: crd.g1.clone(),
            g2: crd.g2.clone(),
            e: crd.elimination_edge,
            kind: crd.kind,
        }
    }

    pub fn crd(&self) -> Crd {
        Crd { g1: self.g1.clone(), g2: self.g2.clone(), elimination_edge: self.e, kind: self.kind }
    }
}
