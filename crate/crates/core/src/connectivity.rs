//! Vertex connectivity up to 3, separating pairs, 2-sums and 2-splits.
//!
//! Separating pairs are found by removing every vertex pair and checking
//! connectivity, which is exact and cheap at the sizes handled here.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{Edge, LabeledGraph, VertexId};
use crate::sparsity::circuit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectivityClass {
    Disconnected,
    OneConnected,
    TwoConnected,
    ThreeConnected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatingPair {
    pub u: VertexId,
    pub v: VertexId,
    /// Components of `G - {u, v}`, ordered by smallest label.
    pub components: Vec<BTreeSet<VertexId>>,
    /// Whether `uv` is an edge. Adjacent pairs cannot be split along.
    pub adjacent: bool,
}

impl SeparatingPair {
    pub fn edge(&self) -> Edge {
        Edge::new(self.u, self.v).expect("distinct")
    }

    /// All proper bipartitions of the components, as the index set of the
    /// side containing component 0.
    pub fn bipartitions(&self) -> Vec<BTreeSet<usize>> {
        let k = self.components.len();
        (0u32..1 << (k - 1))
            .map(|mask| {
                let mut side: BTreeSet<usize> = [0].into();
                side.extend((1..k).filter(|i| mask >> (i - 1) & 1 == 1));
                side
            })
            .filter(|side| side.len() < k)
            .collect()
    }
}

pub fn connectivity_class(g: &LabeledGraph) -> Result<ConnectivityClass, GraphError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(GraphError::TooFewVertices { needed: 2, found: n });
    }
    if !g.is_connected() {
        return Ok(ConnectivityClass::Disconnected);
    }
    let cut_vertex = g.vertices().iter().any(|&v| g.components_without(&[v].into()).len() > 1);
    if n == 2 || cut_vertex {
        return Ok(ConnectivityClass::OneConnected);
    }
    if n == 3 || !pairs(g).is_empty() {
        return Ok(ConnectivityClass::TwoConnected);
    }
    Ok(ConnectivityClass::ThreeConnected)
}

fn pairs(g: &LabeledGraph) -> Vec<SeparatingPair> {
    let vs: Vec<VertexId> = g.vertices().iter().copied().collect();
    let mut out = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            let components = g.components_without(&[u, v].into());
            if components.len() >= 2 {
                out.push(SeparatingPair { u, v, components, adjacent: g.is_adjacent(u, v) });
            }
        }
    }
    out
}

/// Every vertex pair whose removal disconnects `g`, in lexicographic order.
pub fn separating_pairs(g: &LabeledGraph) -> Result<Vec<SeparatingPair>, GraphError> {
    if g.vertex_count() < 4 {
        return Err(GraphError::TooFewVertices { needed: 4, found: g.vertex_count() });
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok(pairs(g))
}

fn precondition(msg: impl Into<String>) -> GraphError {
    GraphError::Precondition(msg.into())
}

/// Splits the circuit `g` along the non-adjacent separating pair `p`.
/// `side` lists the component indices that go into the first part.
pub fn two_split(
    g: &LabeledGraph,
    p: &SeparatingPair,
    side: &BTreeSet<usize>,
) -> Result<(LabeledGraph, LabeledGraph, Edge), GraphError> {
    if !circuit(g) {
        return Err(GraphError::NotCircuit);
    }
    let uv = p.edge();
    if g.has_edge(uv) {
        return Err(precondition(format!("separating pair {uv} is an edge")));
    }
    let fresh = pairs(g);
    if !fresh.iter().any(|q| q.u == p.u && q.v == p.v && q.components == p.components) {
        return Err(precondition(format!("{{{}, {}}} is not a separating pair of this graph", p.u, p.v)));
    }
    if side.is_empty() || side.len() >= p.components.len() || side.iter().any(|&i| i >= p.components.len()) {
        return Err(precondition("side must be a proper nonempty subset of the components"));
    }
    let part = |pick: bool| -> Result<LabeledGraph, GraphError> {
        let mut keep: BTreeSet<VertexId> = [p.u, p.v].into();
        for (i, c) in p.components.iter().enumerate() {
            if side.contains(&i) == pick {
                keep.extend(c);
            }
        }
        g.induced(&keep)?.add_edge(uv)
    };
    let (g1, g2) = (part(true)?, part(false)?);
    for h in [&g1, &g2] {
        if !circuit(h) {
            return Err(precondition(format!("2-split side {h} is not a circuit")));
        }
    }
    Ok((g1, g2, uv))
}

/// `(G1 ∪ G2) - e` for graphs meeting exactly in the edge `e`.
pub fn two_sum(g1: &LabeledGraph, g2: &LabeledGraph, e: Edge) -> Result<LabeledGraph, GraphError> {
    for g in [g1, g2] {
        if !g.has_edge(e) {
            return Err(GraphError::MissingEdge(e));
        }
    }
    let common: BTreeSet<VertexId> = g1.vertices().intersection(g2.vertices()).copied().collect();
    if common != [e.u(), e.v()].into() {
        return Err(precondition("the graphs must share exactly the endpoints of e"));
    }
    if g1.edges().intersection(g2.edges()).count() != 1 {
        return Err(precondition("the graphs must share exactly the edge e"));
    }
    g1.union(g2).remove_edge(e)
}

/// Pairs `(v, e)`: `v` of degree 3, `e` a non-edge inside `N(v)` with
/// `G - v + e` a 3-connected circuit.
pub fn admissible_pairs(g: &LabeledGraph) -> Result<Vec<(VertexId, Edge)>, GraphError> {
    if g.vertex_count() < 5 {
        return Err(GraphError::TooFewVertices { needed: 5, found: g.vertex_count() });
    }
    if !circuit(g) || connectivity_class(g)? != ConnectivityClass::ThreeConnected {
        return Err(GraphError::NotThreeConnectedCircuit);
    }
    let mut out = Vec::new();
    for &v in g.vertices() {
        if g.degree(v) != 3 {
            continue;
        }
        let nb: Vec<VertexId> = g.neighbours(v)?.into_iter().collect();
        let rest = g.delete_vertex(v)?;
        for i in 0..3 {
            for j in i + 1..3 {
                let e = Edge::new(nb[i], nb[j])?;
                if rest.has_edge(e) {
                    continue;
                }
                let h = rest.add_edge(e)?;
                if circuit(&h) && connectivity_class(&h)? == ConnectivityClass::ThreeConnected {
                    out.push((v, e));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{e, vid};

    fn double_banana() -> LabeledGraph {
        LabeledGraph::from_pairs(&[
            (1, 2), (1, 3), (1, 5), (2, 3), (3, 5), (2, 4), (2, 6), (4, 5), (4, 6), (5, 6),
        ])
    }

    fn w4() -> LabeledGraph {
        LabeledGraph::from_pairs(&[(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5)])
    }

    #[test]
    fn classes() {
        assert_eq!(connectivity_class(&LabeledGraph::complete(&[1, 2, 3, 4])).unwrap(), ConnectivityClass::ThreeConnected);
        assert_eq!(connectivity_class(&double_banana()).unwrap(), ConnectivityClass::TwoConnected);
        let bowtie = LabeledGraph::from_pairs(&[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]);
        assert_eq!(connectivity_class(&bowtie).unwrap(), ConnectivityClass::OneConnected);
        let split = LabeledGraph::from_pairs(&[(1, 2), (3, 4)]);
        assert_eq!(connectivity_class(&split).unwrap(), ConnectivityClass::Disconnected);
    }

    #[test]
    fn pairs_of_small_circuits() {
        assert!(separating_pairs(&LabeledGraph::complete(&[1, 2, 3, 4])).unwrap().is_empty());
        let db = separating_pairs(&double_banana()).unwrap();
        assert_eq!(db.len(), 1);
        assert_eq!((db[0].u, db[0].v), (vid(2), vid(5)));
        assert!(!db[0].adjacent);
        assert_eq!(db[0].bipartitions(), vec![BTreeSet::from([0])]);
        assert!(matches!(
            separating_pairs(&LabeledGraph::from_pairs(&[(1, 2), (3, 4)])),
            Err(GraphError::Disconnected)
        ));
    }

    #[test]
    fn split_and_sum_double_banana() {
        let g = double_banana();
        let p = &separating_pairs(&g).unwrap()[0];
        let (g1, g2, uv) = two_split(&g, p, &[0].into()).unwrap();
        assert_eq!(uv, e(2, 5));
        assert_eq!(g1, LabeledGraph::complete(&[1, 2, 3, 5]));
        assert_eq!(g2, LabeledGraph::complete(&[2, 4, 5, 6]));
        assert_eq!(two_sum(&g1, &g2, uv).unwrap(), g);
        assert!(two_split(&g, p, &[0, 1].into()).is_err());
        assert!(two_split(&g, p, &BTreeSet::new()).is_err());
    }

    #[test]
    fn two_sum_of_triangles() {
        let t1 = LabeledGraph::complete(&[1, 2, 3]);
        let t2 = LabeledGraph::complete(&[1, 2, 4]);
        let c4 = two_sum(&t1, &t2, e(1, 2)).unwrap();
        assert_eq!(c4, LabeledGraph::from_pairs(&[(1, 3), (2, 3), (1, 4), (2, 4)]));
        assert!(two_sum(&t1, &t1, e(1, 2)).is_err());
        assert!(two_sum(&t1, &t2, e(1, 3)).is_err());
    }

    #[test]
    fn admissible_pairs_of_w4() {
        let pairs = admissible_pairs(&w4()).unwrap();
        for v in [1, 2, 3, 4] {
            assert!(pairs.iter().any(|(w, _)| *w == vid(v)));
        }
        assert!(pairs.contains(&(vid(1), e(2, 4))));
        assert!(matches!(admissible_pairs(&double_banana()), Err(GraphError::NotThreeConnectedCircuit)));
    }
}
