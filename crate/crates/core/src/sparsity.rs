//! (2,3)-sparsity via the pebble game: Laman graphs, rigidity circuits and
//! fundamental circuits.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{Edge, LabeledGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SparsityClass {
    /// Independent with fewer than `2n - 3` edges.
    Sparse,
    /// Laman: independent with exactly `2n - 3` edges.
    Tight,
    /// A Laman graph plus one edge that is not itself a circuit.
    LamanPlusOne,
    /// The edges form a circuit on a proper subset of the vertices.
    Circuit,
    /// The edges form a circuit on all the vertices.
    SpanningCircuit,
    Dependent,
    /// Fewer than two vertices.
    Other,
}

impl SparsityClass {
    pub fn is_circuit(self) -> bool {
        matches!(self, SparsityClass::Circuit | SparsityClass::SpanningCircuit)
    }
}

/// Incremental (2,3) pebble game.
pub struct PebbleGame {
    pebbles: Vec<u8>,
    out: Vec<Vec<usize>>,
}

impl PebbleGame {
    pub fn new(n: usize) -> Self {
        PebbleGame { pebbles: vec![2; n], out: vec![Vec::new(); n] }
    }

    /// Moves a pebble to `from` along a reversed path, never touching `a` or `b`.
    fn fetch(&mut self, from: usize, a: usize, b: usize) -> bool {
        let n = self.pebbles.len();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[a] = true;
        seen[b] = true;
        let mut stack = vec![from];
        while let Some(x) = stack.pop() {
            for i in 0..self.out[x].len() {
                let y = self.out[x][i];
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                parent[y] = x;
                if self.pebbles[y] > 0 {
                    self.pebbles[y] -= 1;
                    self.pebbles[from] += 1;
                    let mut cur = y;
                    while cur != from {
                        let p = parent[cur];
                        let pos = self.out[p].iter().position(|&z| z == cur).expect("path edge");
                        self.out[p].swap_remove(pos);
                        self.out[cur].push(p);
                        cur = p;
                    }
                    return true;
                }
                stack.push(y);
            }
        }
        false
    }

    /// Tries to insert the edge `ab`; returns false (leaving no trace) if it
    /// would violate (2,3)-sparsity.
    pub fn insert(&mut self, a: usize, b: usize) -> bool {
        loop {
            if self.pebbles[a] + self.pebbles[b] >= 4 {
                break;
            }
            let got = if self.pebbles[a] < 2 {
                self.fetch(a, a, b)
            } else {
                self.fetch(b, a, b)
            };
            if !got {
                return false;
            }
        }
        self.pebbles[a] -= 1;
        self.out[a].push(b);
        true
    }
}

fn indexed(g: &LabeledGraph) -> BTreeMap<VertexId, usize> {
    g.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect()
}

/// Whether the edge set is independent in the rigidity matroid.
fn independent<'a>(g: &LabeledGraph, edges: impl IntoIterator<Item = &'a Edge>) -> bool {
    let idx = indexed(g);
    let mut game = PebbleGame::new(idx.len());
    edges.into_iter().all(|e| game.insert(idx[&e.u()], idx[&e.v()]))
}

/// Size of a maximal independent subset of the edges.
pub fn rank(g: &LabeledGraph) -> usize {
    let idx = indexed(g);
    let mut game = PebbleGame::new(idx.len());
    g.edges().iter().filter(|e| game.insert(idx[&e.u()], idx[&e.v()])).count()
}

fn need(g: &LabeledGraph, needed: usize) -> Result<(), GraphError> {
    if g.vertex_count() < needed {
        Err(GraphError::TooFewVertices { needed, found: g.vertex_count() })
    } else {
        Ok(())
    }
}

pub fn is_sparse23(g: &LabeledGraph) -> Result<bool, GraphError> {
    need(g, 2)?;
    Ok(independent(g, g.edges()))
}

pub fn is_laman(g: &LabeledGraph) -> Result<bool, GraphError> {
    need(g, 2)?;
    Ok(laman(g))
}

pub(crate) fn laman(g: &LabeledGraph) -> bool {
    g.vertex_count() >= 2 && g.edge_count() + 3 == 2 * g.vertex_count() && independent(g, g.edges())
}

pub fn is_circuit(g: &LabeledGraph) -> Result<bool, GraphError> {
    need(g, 4)?;
    Ok(circuit(g))
}

/// `|E| = 2|V| - 2` and removing any edge leaves a Laman graph.
pub(crate) fn circuit(g: &LabeledGraph) -> bool {
    let n = g.vertex_count();
    if n < 4 || g.edge_count() + 2 != 2 * n {
        return false;
    }
    let edges: Vec<Edge> = g.edges().iter().copied().collect();
    (0..edges.len()).all(|skip| {
        independent(g, edges.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, e)| e))
    })
}

pub fn classify(g: &LabeledGraph) -> SparsityClass {
    let n = g.vertex_count();
    if n < 2 {
        return SparsityClass::Other;
    }
    let m = g.edge_count();
    if independent(g, g.edges()) {
        return if m + 3 == 2 * n { SparsityClass::Tight } else { SparsityClass::Sparse };
    }
    let span = g.edge_span();
    if circuit(&span) {
        return if span.vertex_count() == n {
            SparsityClass::SpanningCircuit
        } else {
            SparsityClass::Circuit
        };
    }
    if m + 2 == 2 * n && rank(g) + 3 == 2 * n {
        return SparsityClass::LamanPlusOne;
    }
    SparsityClass::Dependent
}

/// The unique circuit in `g + e`, given that `g` is independent; `None` when
/// `g + e` is still independent.
pub fn circuit_through(g: &LabeledGraph, e: Edge) -> Option<LabeledGraph> {
    let plus = LabeledGraph::new(g.vertices().iter().copied(), g.edges().iter().copied().chain([e]))
        .ok()?;
    if independent(&plus, plus.edges()) {
        return None;
    }
    let base: Vec<Edge> = g.edges().iter().copied().collect();
    let mut keep = vec![e];
    for (i, &f) in base.iter().enumerate() {
        // f belongs to the circuit iff swapping it for e keeps independence
        let swapped = base.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x).chain([&e]);
        if independent(&plus, swapped) {
            keep.push(f);
        }
    }
    Some(LabeledGraph::from_edges(keep).expect("subset of a simple graph"))
}

/// Some circuit contained in `g`, found by dropping edges while the rest
/// stays dependent; `None` when `g` is independent.
pub fn find_circuit(g: &LabeledGraph) -> Option<LabeledGraph> {
    if independent(g, g.edges()) {
        return None;
    }
    let mut keep: Vec<Edge> = g.edges().iter().copied().collect();
    let mut i = 0;
    while i < keep.len() {
        let rest: Vec<Edge> = keep.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
        if independent(g, rest.iter()) {
            i += 1;
        } else {
            keep = rest;
        }
    }
    Some(LabeledGraph::from_edges(keep).expect("subset of a simple graph"))
}

pub fn fundamental_circuit(g: &LabeledGraph, e: Edge) -> Result<LabeledGraph, GraphError> {
    need(g, 2)?;
    if !laman(g) {
        return Err(GraphError::NotLaman);
    }
    if g.has_edge(e) {
        return Err(GraphError::DuplicateEdge(e));
    }
    for w in [e.u(), e.v()] {
        if !g.has_vertex(w) {
            return Err(GraphError::UnknownVertex(w));
        }
    }
    Ok(circuit_through(g, e).expect("a Laman graph is spanning, so g + e is dependent"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{e, vid};
    use proptest::prelude::*;

    fn double_banana() -> LabeledGraph {
        LabeledGraph::from_pairs(&[
            (1, 2), (1, 3), (1, 5), (2, 3), (3, 5), (2, 4), (2, 6), (4, 5), (4, 6), (5, 6),
        ])
    }

    fn w4() -> LabeledGraph {
        LabeledGraph::from_pairs(&[(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5)])
    }

    #[test]
    fn finds_contained_circuit() {
        let g = double_banana().add_edge(e(1, 4)).unwrap();
        let c = find_circuit(&g).unwrap();
        assert!(circuit(&c));
        assert!(find_circuit(&double_banana().remove_edge(e(1, 2)).unwrap()).is_none());
    }

    #[test]
    fn spec_cases() {
        let k4 = LabeledGraph::complete(&[1, 2, 3, 4]);
        let tri = LabeledGraph::complete(&[1, 2, 3]);
        assert!(!is_sparse23(&k4).unwrap());
        assert!(is_sparse23(&tri).unwrap());
        assert!(!is_sparse23(&double_banana()).unwrap());
        assert!(is_laman(&tri).unwrap());
        assert!(!is_laman(&k4).unwrap());
        assert!(is_laman(&w4().remove_edge(e(1, 2)).unwrap()).unwrap());
        assert!(is_circuit(&k4).unwrap());
        assert!(is_circuit(&double_banana()).unwrap());
        assert!(is_circuit(&w4()).unwrap());
        assert!(is_circuit(&tri).is_err());
        assert!(is_sparse23(&LabeledGraph::new([vid(1)], []).unwrap()).is_err());
    }

    #[test]
    fn classes() {
        assert_eq!(classify(&LabeledGraph::complete(&[1, 2, 3])), SparsityClass::Tight);
        assert_eq!(classify(&LabeledGraph::from_pairs(&[(1, 2), (2, 3)])), SparsityClass::Sparse);
        assert_eq!(classify(&w4()), SparsityClass::SpanningCircuit);
        let k4_plus = LabeledGraph::new(
            (1..=5).map(vid),
            LabeledGraph::complete(&[1, 2, 3, 4]).edges().iter().copied(),
        )
        .unwrap();
        assert_eq!(classify(&k4_plus), SparsityClass::Circuit);
        let pendant = LabeledGraph::complete(&[1, 2, 3, 4]).union(&LabeledGraph::from_pairs(&[(4, 5), (3, 5)]));
        assert_eq!(classify(&pendant), SparsityClass::LamanPlusOne);
        assert_eq!(classify(&LabeledGraph::complete(&[1, 2, 3, 4, 5])), SparsityClass::Dependent);
    }

    #[test]
    fn fundamental_circuit_of_k4_minus_edge() {
        let k4 = LabeledGraph::complete(&[1, 2, 3, 4]);
        let g = k4.remove_edge(e(1, 2)).unwrap();
        assert_eq!(fundamental_circuit(&g, e(1, 2)).unwrap(), k4);
        assert!(matches!(fundamental_circuit(&k4, e(1, 2)), Err(GraphError::NotLaman)));
        assert!(fundamental_circuit(&g, e(1, 3)).is_err());
    }

    #[test]
    fn fundamental_circuit_inside_five_vertices() {
        // triangles 123 and 345 sharing vertex 3, joined by bar 14
        let g = LabeledGraph::from_pairs(&[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (1, 4)]);
        assert!(is_laman(&g).unwrap());
        let c = fundamental_circuit(&g, e(2, 4)).unwrap();
        assert_eq!(c, LabeledGraph::complete(&[1, 2, 3, 4]));
    }

    #[test]
    fn circuits_minus_an_edge_are_laman() {
        for g in [double_banana(), w4(), LabeledGraph::complete(&[1, 2, 3, 4])] {
            for &f in g.edges() {
                assert!(laman(&g.remove_edge(f).unwrap()));
            }
        }
    }

    proptest! {
        #[test]
        fn fundamental_circuit_is_order_independent(seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            // random Laman graph by Henneberg type-1 steps
            let mut g = LabeledGraph::complete(&[1, 2]);
            for v in 3..=7u32 {
                let mut old: Vec<u32> = g.vertices().iter().map(|x| x.get()).collect();
                old.shuffle(&mut rng);
                let (a, b) = (old[0], old[1]);
                g = LabeledGraph::new(g.vertices().iter().copied().chain([vid(v)]), g.edges().iter().copied()).unwrap();
                g = g.add_edge(e(a.min(v), a.max(v))).unwrap().add_edge(e(b.min(v), b.max(v))).unwrap();
            }
            let non_edges = g.non_edges();
            let f = *non_edges.choose(&mut rng).unwrap();
            let c = fundamental_circuit(&g, f).unwrap();
            prop_assert!(circuit(&c));
            prop_assert!(c.has_edge(f));
            for &x in c.edges() {
                prop_assert!(laman(&c.remove_edge(x).unwrap()));
            }
            let mut shuffled: Vec<Edge> = g.edges().iter().copied().collect();
            shuffled.shuffle(&mut rng);
            let idx = indexed(&g);
            let mut game = PebbleGame::new(idx.len());
            for x in &shuffled {
                prop_assert!(game.insert(idx[&x.u()], idx[&x.v()]));
            }
            prop_assert!(!game.insert(idx[&f.u()], idx[&f.v()]));
        }
    }
}
