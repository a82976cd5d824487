//! Vertex-labeled undirected simple graphs.
//!
//! Labels are positive integers and are never compacted: every operation
//! returns a new graph that keeps the labels of its input, so that
//! subgraphs produced by decompositions can be traced back to the graph
//! they came from.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub mod canon;
pub mod io;

pub use canon::{automorphisms, canonical_form, isomorphisms, CanonicalForm};

/// A vertex label. Always at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(value: u32) -> Result<Self, GraphError> {
        if value == 0 {
            Err(GraphError::ZeroLabel)
        } else {
            Ok(VertexId(value))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for VertexId {
    type Error = GraphError;
    fn try_from(value: u32) -> Result<Self, Self::Error> {
        VertexId::new(value)
    }
}

impl From<VertexId> for u32 {
    fn from(v: VertexId) -> u32 {
        v.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shorthand for building labels in code that already knows they are nonzero.
///
/// Panics on zero.
pub fn vid(value: u32) -> VertexId {
    VertexId::new(value).expect("vertex labels start at 1")
}

/// An undirected edge stored with its endpoints in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Builds the edge `{a, b}` in either orientation.
    pub fn new(a: VertexId, b: VertexId) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(GraphError::Loop(a)),
        }
    }

    /// Like [`Edge::new`] but insists on `a < b`, as the file formats do.
    pub fn ordered(a: VertexId, b: VertexId) -> Result<Self, GraphError> {
        if a < b {
            Ok(Edge { u: a, v: b })
        } else if a == b {
            Err(GraphError::Loop(a))
        } else {
            Err(GraphError::UnsortedPair(a, b))
        }
    }

    pub fn u(self) -> VertexId {
        self.u
    }

    pub fn v(self) -> VertexId {
        self.v
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn contains(self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }

    /// Image of the edge under a vertex map. Missing endpoints map to themselves.
    pub fn relabel(self, map: &BTreeMap<VertexId, VertexId>) -> Edge {
        let a = map.get(&self.u).copied().unwrap_or(self.u);
        let b = map.get(&self.v).copied().unwrap_or(self.v);
        Edge::new(a, b).expect("relabeling must be injective")
    }
}

/// `e(1, 2)` builds the edge `{1, 2}`. Panics on loops or zero labels.
pub fn e(a: u32, b: u32) -> Edge {
    Edge::new(vid(a), vid(b)).expect("edge endpoints must differ")
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.u.0, self.v.0].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, b] = <[u32; 2]>::deserialize(d)?;
        let a = VertexId::new(a).map_err(serde::de::Error::custom)?;
        let b = VertexId::new(b).map_err(serde::de::Error::custom)?;
        Edge::ordered(a, b).map_err(serde::de::Error::custom)
    }
}

/// An undirected simple graph on an explicit set of labeled vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LabeledGraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<Edge>,
}

impl LabeledGraph {
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self, GraphError> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for edge in edges {
            for w in [edge.u, edge.v] {
                if !vertices.contains(&w) {
                    return Err(GraphError::UnknownVertex(w));
                }
            }
            if !set.insert(edge) {
                return Err(GraphError::DuplicateEdge(edge));
            }
        }
        Ok(LabeledGraph { vertices, edges: set })
    }

    /// The graph spanned by a set of edges: its vertices are the edge endpoints.
    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let edges: Vec<Edge> = edges.into_iter().collect();
        let vertices: BTreeSet<VertexId> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
        LabeledGraph::new(vertices, edges)
    }

    /// Test and fixture helper: graph spanned by `(u, v)` pairs. Panics on bad input.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        LabeledGraph::from_edges(pairs.iter().map(|&(a, b)| e(a, b))).expect("valid edge list")
    }

    /// Complete graph on the given labels.
    pub fn complete(labels: &[u32]) -> Self {
        let vs: Vec<VertexId> = labels.iter().map(|&l| vid(l)).collect();
        let mut edges = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                edges.push(Edge::new(a, b).expect("distinct labels"));
            }
        }
        LabeledGraph::new(vs, edges).expect("complete graph")
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn is_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        Edge::new(a, b).map(|e| self.edges.contains(&e)).unwrap_or(false)
    }

    fn require(&self, v: VertexId) -> Result<(), GraphError> {
        if self.vertices.contains(&v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    pub fn neighbours(&self, v: VertexId) -> Result<BTreeSet<VertexId>, GraphError> {
        self.require(v)?;
        Ok(self
            .edges
            .iter()
            .filter_map(|e| {
                if e.u == v {
                    Some(e.v)
                } else if e.v == v {
                    Some(e.u)
                } else {
                    None
                }
            })
            .collect())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn min_degree(&self) -> usize {
        self.vertices.iter().map(|&v| self.degree(v)).min().unwrap_or(0)
    }

    /// `G - v`: removes `v` and its incident edges.
    pub fn delete_vertex(&self, v: VertexId) -> Result<LabeledGraph, GraphError> {
        self.require(v)?;
        let mut vertices = self.vertices.clone();
        vertices.remove(&v);
        let edges = self.edges.iter().copied().filter(|e| !e.contains(v)).collect();
        Ok(LabeledGraph { vertices, edges })
    }

    /// `G + e` for a non-edge `e` with both endpoints present.
    pub fn add_edge(&self, e: Edge) -> Result<LabeledGraph, GraphError> {
        self.require(e.u)?;
        self.require(e.v)?;
        if self.edges.contains(&e) {
            return Err(GraphError::DuplicateEdge(e));
        }
        let mut out = self.clone();
        out.edges.insert(e);
        Ok(out)
    }

    pub fn remove_edge(&self, e: Edge) -> Result<LabeledGraph, GraphError> {
        if !self.edges.contains(&e) {
            return Err(GraphError::MissingEdge(e));
        }
        let mut out = self.clone();
        out.edges.remove(&e);
        Ok(out)
    }

    /// Subgraph induced by `keep` (which must be a subset of the vertices).
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Result<LabeledGraph, GraphError> {
        for &v in keep {
            self.require(v)?;
        }
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| keep.contains(&e.u) && keep.contains(&e.v))
            .collect();
        Ok(LabeledGraph { vertices: keep.clone(), edges })
    }

    /// Same graph restricted to the endpoints of its edges.
    pub fn edge_span(&self) -> LabeledGraph {
        let vertices = self.edges.iter().flat_map(|e| [e.u, e.v]).collect();
        LabeledGraph { vertices, edges: self.edges.clone() }
    }

    /// Pairs of distinct vertices that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let vs: Vec<VertexId> = self.vertices.iter().copied().collect();
        let mut out = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                let e = Edge { u: a, v: b };
                if !self.edges.contains(&e) {
                    out.push(e);
                }
            }
        }
        out
    }

    /// Applies an injective vertex map. Vertices missing from the map keep their label.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> LabeledGraph {
        let vertices: BTreeSet<VertexId> =
            self.vertices.iter().map(|v| map.get(v).copied().unwrap_or(*v)).collect();
        assert_eq!(vertices.len(), self.vertices.len(), "relabeling must be injective");
        let edges = self.edges.iter().map(|e| e.relabel(map)).collect();
        LabeledGraph { vertices, edges }
    }

    /// Vertex sets of connected components, each sorted, ordered by smallest label.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        self.components_without(&BTreeSet::new())
    }

    /// Components of the graph with `removed` deleted.
    pub fn components_without(&self, removed: &BTreeSet<VertexId>) -> Vec<BTreeSet<VertexId>> {
        let adj = self.adjacency();
        let mut seen: BTreeSet<VertexId> = removed.clone();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(x) = stack.pop() {
                comp.insert(x);
                for &y in &adj[&x] {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn adjacency(&self) -> BTreeMap<VertexId, Vec<VertexId>> {
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for e in &self.edges {
            adj.get_mut(&e.u).expect("endpoint").push(e.v);
            adj.get_mut(&e.v).expect("endpoint").push(e.u);
        }
        adj
    }

    /// Union of vertex and edge sets.
    pub fn union(&self, other: &LabeledGraph) -> LabeledGraph {
        LabeledGraph {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, "]")
    }
}
