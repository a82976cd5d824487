//! Bundled example circuits and named elimination strategies.

use std::collections::BTreeSet;

use crate::crd::{crd_naive, Crd};
use crate::error::GraphError;
use crate::graph::{Edge, LabeledGraph, VertexId};

pub fn k4() -> LabeledGraph {
    LabeledGraph::complete(&[1, 2, 3, 4])
}

/// Wheel with hub `n` and rim `1..n` in cyclic order.
pub fn wheel(n: u32) -> LabeledGraph {
    let mut pairs = Vec::new();
    for i in 1..n {
        pairs.push((i, n));
        let j = if i == n - 1 { 1 } else { i + 1 };
        pairs.push((i.min(j), i.max(j)));
    }
    LabeledGraph::from_pairs(&pairs)
}

pub fn w4() -> LabeledGraph {
    wheel(5)
}

pub fn w5() -> LabeledGraph {
    wheel(6)
}

/// Two `K4`s on `{1,2,3,5}` and `{2,4,5,6}` glued along `25`, which is removed.
pub fn double_banana() -> LabeledGraph {
    LabeledGraph::from_pairs(&[(1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (2, 6), (3, 5), (4, 5), (4, 6), (5, 6)])
}

/// Triangular prism plus the diagonal `15`.
pub fn desargues_plus_one() -> LabeledGraph {
    LabeledGraph::from_pairs(&[(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (1, 4), (2, 5), (3, 6), (1, 5)])
}

/// A Laman graph on 7 vertices and the extra edge whose fundamental circuit
/// is [`desargues_plus_one`].
pub fn laman_plus_one() -> (LabeledGraph, Edge) {
    let g = LabeledGraph::from_pairs(&[
        (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (1, 4), (2, 5), (3, 6), (1, 7), (4, 7),
    ]);
    (g, crate::graph::e(1, 5))
}

/// Chain of four `K4`s glued along `29`, `38` and `47`.
pub fn ten_vertex_chain() -> LabeledGraph {
    LabeledGraph::from_pairs(&[
        (1, 2), (1, 9), (1, 10), (2, 10), (9, 10),
        (2, 3), (2, 8), (3, 9), (8, 9),
        (3, 4), (3, 7), (4, 8), (7, 8),
        (4, 5), (4, 6), (5, 6), (5, 7), (6, 7),
    ])
}

/// `W4` with a `K4` glued on a rim edge. Contains the triangle edges `45`, `56`.
pub fn seven_vertex_rim() -> LabeledGraph {
    LabeledGraph::from_pairs(&[
        (1, 2), (1, 3), (1, 5), (1, 6), (2, 3), (2, 4), (3, 4), (4, 5), (4, 7), (5, 6), (5, 7), (6, 7),
    ])
}

/// `W4` with a `K4` glued on a spoke. Contains the triangle edges `45`, `56`.
pub fn seven_vertex_spoke() -> LabeledGraph {
    LabeledGraph::from_pairs(&[
        (1, 2), (1, 3), (1, 4), (1, 6), (2, 3), (2, 5), (3, 5), (4, 5), (4, 7), (5, 6), (5, 7), (6, 7),
    ])
}

/// Double banana with a `K4` glued on an edge next to the hinge. Contains
/// the 4-cycle `4-6-7-5`.
pub fn eight_vertex_adjacent() -> LabeledGraph {
    LabeledGraph::from_pairs(&[
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (3, 7), (4, 5), (4, 6), (4, 8), (5, 7), (6, 7), (6, 8), (7, 8),
    ])
}

/// Double banana with a `K4` glued on an edge away from the hinge. Contains
/// the 4-cycle `4-6-7-5`.
pub fn eight_vertex_opposite() -> LabeledGraph {
    LabeledGraph::from_pairs(&[
        (1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (3, 4), (3, 7), (4, 5), (4, 6), (4, 8), (5, 7), (6, 7), (6, 8), (7, 8),
    ])
}

/// Every bundled circuit with its lookup name.
pub fn named_circuits() -> Vec<(&'static str, LabeledGraph)> {
    vec![
        ("k4", k4()),
        ("w4", w4()),
        ("w5", w5()),
        ("double-banana", double_banana()),
        ("desargues-plus-one", desargues_plus_one()),
        ("rim7", seven_vertex_rim()),
        ("spoke7", seven_vertex_spoke()),
        ("adjacent8", eight_vertex_adjacent()),
        ("opposite8", eight_vertex_opposite()),
        ("chain10", ten_vertex_chain()),
    ]
}

pub fn circuit_by_name(name: &str) -> Option<LabeledGraph> {
    named_circuits().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}

/// Selects the root decomposition whose parts share `common` and eliminate `edge`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootChoice {
    pub common: BTreeSet<VertexId>,
    pub edge: Edge,
}

impl RootChoice {
    pub fn new(common: &[u32], a: u32, b: u32) -> Self {
        RootChoice { common: common.iter().map(|&v| crate::graph::vid(v)).collect(), edge: crate::graph::e(a, b) }
    }

    /// The first matching decomposition found by brute force.
    pub fn find(&self, g: &LabeledGraph) -> Result<Crd, GraphError> {
        crd_naive(g)?
            .into_iter()
            .find(|c| {
                c.elimination_edge == self.edge
                    && c.g1.vertices().intersection(c.g2.vertices()).copied().collect::<BTreeSet<_>>() == self.common
            })
            .ok_or_else(|| GraphError::Precondition(format!("no decomposition shares {:?} on {}", self.common, self.edge)))
    }
}

/// Common triangle `456` with elimination edge `46`, for the 7-vertex circuits.
pub fn common_triangle() -> RootChoice {
    RootChoice::new(&[4, 5, 6], 4, 6)
}

/// Double triangle on the 4-cycle `4-6-7-5` with elimination edge `56`.
pub fn double_triangle() -> RootChoice {
    RootChoice::new(&[4, 5, 6, 7], 5, 6)
}

/// Two `W4`s on the double banana sharing `{2,3,4,5}`, eliminating `34`.
pub fn two_wheels() -> RootChoice {
    RootChoice::new(&[2, 3, 4, 5], 3, 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{connectivity_class, separating_pairs, ConnectivityClass};
    use crate::graph::{e, vid};
    use crate::sparsity::{circuit, fundamental_circuit, is_laman};

    #[test]
    fn all_bundled_graphs_are_circuits() {
        for (name, g) in named_circuits() {
            assert!(circuit(&g), "{name}");
        }
    }

    #[test]
    fn laman_plus_one_contains_desargues() {
        let (g, extra) = laman_plus_one();
        assert!(is_laman(&g).unwrap());
        assert_eq!(fundamental_circuit(&g, extra).unwrap(), desargues_plus_one());
        assert_eq!(connectivity_class(&desargues_plus_one()).unwrap(), ConnectivityClass::ThreeConnected);
    }

    #[test]
    fn separating_pairs_of_bundled_circuits() {
        let pairs = |g: &LabeledGraph| -> Vec<(u32, u32)> {
            separating_pairs(g).unwrap().iter().map(|p| (p.u.get(), p.v.get())).collect()
        };
        assert_eq!(pairs(&ten_vertex_chain()), vec![(2, 9), (3, 8), (4, 7)]);
        assert_eq!(pairs(&double_banana()), vec![(2, 5)]);
        assert_eq!(pairs(&seven_vertex_rim()), vec![(1, 4)]);
        assert_eq!(pairs(&eight_vertex_opposite()).len(), 2);
    }

    #[test]
    fn strategies_exist() {
        for g in [seven_vertex_rim(), seven_vertex_spoke()] {
            let c = common_triangle().find(&g).unwrap();
            assert_eq!((c.g1.vertex_count(), c.g2.vertex_count()), (6, 4));
            assert_eq!(c.g2, LabeledGraph::complete(&[4, 5, 6, 7]));
        }
        for g in [eight_vertex_adjacent(), eight_vertex_opposite()] {
            let c = double_triangle().find(&g).unwrap();
            assert_eq!((c.g1.vertex_count(), c.g2.vertex_count()), (7, 5));
            assert!(c.g2.has_vertex(vid(8)));
        }
        let c = two_wheels().find(&double_banana()).unwrap();
        assert_eq!((c.g1.vertex_count(), c.g2.vertex_count()), (5, 5));
        assert!(c.g1.has_edge(e(3, 4)) && c.g2.has_edge(e(3, 4)));
    }
}
