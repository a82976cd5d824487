//! Canonical labeling by partition refinement and exhaustive search over ties.
//!
//! The canonical form of a graph is the largest upper-triangular adjacency
//! bitstring over all vertex orders reachable by individualizing and
//! refining. All orders that attain it are kept, which also yields the
//! automorphism group. The search is exponential in the worst case and
//! intended for graphs with a dozen or so vertices.

use std::collections::BTreeMap;

use super::{LabeledGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    /// Vertex count (little-endian `u32`) followed by the packed adjacency bits.
    pub bytes: Vec<u8>,
    /// Maps every original label to its canonical label `1..=n`.
    pub relabel: BTreeMap<VertexId, VertexId>,
}

impl CanonicalForm {
    /// The canonical representative, on labels `1..=n`.
    pub fn apply(&self, g: &LabeledGraph) -> LabeledGraph {
        g.relabel(&self.relabel)
    }

    /// Canonical labels back to the original ones.
    pub fn inverse(&self) -> BTreeMap<VertexId, VertexId> {
        self.relabel.iter().map(|(&a, &b)| (b, a)).collect()
    }
}

struct Search {
    adj: Vec<Vec<bool>>,
    best: Option<Vec<u8>>,
    orders: Vec<Vec<usize>>,
}

fn refine(adj: &[Vec<bool>], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = adj.len();
    loop {
        let mut cell_of = vec![0usize; n];
        for (ci, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = ci;
            }
        }
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut sig = vec![0usize; cells.len()];
                    for (w, &a) in adj[v].iter().enumerate() {
                        if a {
                            sig[cell_of[w]] += 1;
                        }
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            while start < keyed.len() {
                let mut end = start + 1;
                while end < keyed.len() && keyed[end].0 == keyed[start].0 {
                    end += 1;
                }
                next.push(keyed[start..end].iter().map(|(_, v)| *v).collect());
                start = end;
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn encode(adj: &[Vec<bool>], order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut bytes = (n as u32).to_le_bytes().to_vec();
    let mut cur = 0u8;
    let mut filled = 0;
    for i in 0..n {
        for j in i + 1..n {
            cur = cur << 1 | adj[order[i]][order[j]] as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(cur);
                cur = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(cur << (8 - filled));
    }
    bytes
}

impl Search {
    fn run(&mut self, cells: Vec<Vec<usize>>) {
        let cells = refine(&self.adj, cells);
        match cells.iter().position(|c| c.len() > 1) {
            None => {
                let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
                let code = encode(&self.adj, &order);
                match &self.best {
                    Some(b) if *b > code => {}
                    Some(b) if *b == code => self.orders.push(order),
                    _ => {
                        self.best = Some(code);
                        self.orders = vec![order];
                    }
                }
            }
            Some(i) => {
                for &v in &cells[i] {
                    let mut next = cells[..i].to_vec();
                    next.push(vec![v]);
                    next.push(cells[i].iter().copied().filter(|&w| w != v).collect());
                    next.extend_from_slice(&cells[i + 1..]);
                    self.run(next);
                }
            }
        }
    }
}

/// Every optimal order, as indices into the sorted vertex list.
fn optimal_orders(g: &LabeledGraph) -> (Vec<VertexId>, Vec<u8>, Vec<Vec<usize>>) {
    let labels: Vec<VertexId> = g.vertices().iter().copied().collect();
    let index: BTreeMap<VertexId, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = labels.len();
    let mut adj = vec![vec![false; n]; n];
    for e in g.edges() {
        let (a, b) = (index[&e.u()], index[&e.v()]);
        adj[a][b] = true;
        adj[b][a] = true;
    }
    if n == 0 {
        return (labels, encode(&adj, &[]), vec![Vec::new()]);
    }
    let mut search = Search { adj, best: None, orders: Vec::new() };
    search.run(vec![(0..n).collect()]);
    (labels, search.best.expect("at least one leaf"), search.orders)
}

fn order_map(labels: &[VertexId], order: &[usize]) -> BTreeMap<VertexId, VertexId> {
    order.iter().enumerate().map(|(pos, &i)| (labels[i], VertexId(pos as u32 + 1))).collect()
}

pub fn canonical_form(g: &LabeledGraph) -> CanonicalForm {
    let (labels, bytes, orders) = optimal_orders(g);
    CanonicalForm { bytes, relabel: order_map(&labels, &orders[0]) }
}

/// All automorphisms of `g`, the identity first.
pub fn automorphisms(g: &LabeledGraph) -> Vec<BTreeMap<VertexId, VertexId>> {
    let (labels, _, orders) = optimal_orders(g);
    let first = order_map(&labels, &orders[0]);
    let mut auts: Vec<BTreeMap<VertexId, VertexId>> = orders
        .iter()
        .map(|o| {
            // v -> canonical label under `first` -> vertex holding that label under `o`
            let back: BTreeMap<VertexId, VertexId> =
                order_map(&labels, o).into_iter().map(|(a, b)| (b, a)).collect();
            first.iter().map(|(&v, c)| (v, back[c])).collect()
        })
        .collect();
    auts.sort_by_key(|m| m.iter().any(|(a, b)| a != b));
    auts
}

/// All isomorphisms from `g` onto `h`; empty when they are not isomorphic.
pub fn isomorphisms(g: &LabeledGraph, h: &LabeledGraph) -> Vec<BTreeMap<VertexId, VertexId>> {
    let cg = canonical_form(g);
    let ch = canonical_form(h);
    if cg.bytes != ch.bytes {
        return Vec::new();
    }
    let to_h = ch.inverse();
    automorphisms(g)
        .into_iter()
        .map(|a| a.iter().map(|(&v, w)| (v, to_h[&cg.relabel[w]])).collect())
        .collect()
}

pub fn are_isomorphic(g: &LabeledGraph, h: &LabeledGraph) -> bool {
    canonical_form(g).bytes == canonical_form(h).bytes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{e, vid};
    use proptest::prelude::*;

    fn wheel(hub: u32, rim: &[u32]) -> LabeledGraph {
        let mut pairs = Vec::new();
        for (i, &r) in rim.iter().enumerate() {
            pairs.push((hub.min(r), hub.max(r)));
            let s = rim[(i + 1) % rim.len()];
            pairs.push((r.min(s), r.max(s)));
        }
        LabeledGraph::from_pairs(&pairs)
    }

    #[test]
    fn relabeled_complete_graphs_agree() {
        let a = canonical_form(&LabeledGraph::complete(&[1, 2, 3, 4]));
        let b = canonical_form(&LabeledGraph::complete(&[5, 7, 8, 9]));
        assert_eq!(a.bytes, b.bytes);
    }

    #[test]
    fn k4_and_four_cycle_differ() {
        let c4 = LabeledGraph::from_pairs(&[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert_ne!(canonical_form(&c4).bytes, canonical_form(&LabeledGraph::complete(&[1, 2, 3, 4])).bytes);
    }

    #[test]
    fn group_orders() {
        assert_eq!(automorphisms(&LabeledGraph::complete(&[1, 2, 3, 4])).len(), 24);
        assert_eq!(automorphisms(&wheel(5, &[1, 2, 3, 4])).len(), 8);
        assert_eq!(automorphisms(&wheel(9, &[1, 2, 3, 4, 5])).len(), 10);
        let path = LabeledGraph::from_pairs(&[(1, 2), (2, 3)]);
        assert_eq!(automorphisms(&path).len(), 2);
    }

    #[test]
    fn automorphisms_preserve_edges() {
        let g = wheel(5, &[1, 2, 3, 4]);
        for a in automorphisms(&g) {
            assert_eq!(g.relabel(&a), g);
        }
        assert!(automorphisms(&g)[0].iter().all(|(a, b)| a == b));
    }

    #[test]
    fn isomorphisms_map_onto_target() {
        let g = wheel(5, &[1, 2, 3, 4]);
        let h = wheel(1, &[10, 20, 30, 40]);
        let isos = isomorphisms(&g, &h);
        assert_eq!(isos.len(), 8);
        for m in isos {
            assert_eq!(g.relabel(&m), h);
        }
        let c5 = LabeledGraph::from_pairs(&[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]);
        assert!(isomorphisms(&g, &c5).is_empty());
    }

    #[test]
    fn canonical_representative_uses_small_labels() {
        let g = LabeledGraph::complete(&[5, 7, 8, 9]).remove_edge(e(5, 9)).unwrap();
        let c = canonical_form(&g);
        let rep = c.apply(&g);
        assert_eq!(rep.vertices().iter().map(|v| v.get()).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert_eq!(canonical_form(&rep).bytes, c.bytes);
        assert_eq!(rep.relabel(&c.inverse()), g);
        assert!(c.relabel.contains_key(&vid(5)));
    }

    fn arb_graph_and_perm() -> impl Strategy<Value = (LabeledGraph, Vec<u32>)> {
        (2usize..9)
            .prop_flat_map(|n| {
                let pairs = n * (n - 1) / 2;
                (Just(n), prop::collection::vec(any::<bool>(), pairs), Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
            })
            .prop_map(|(n, keep, perm)| {
                let mut edges = Vec::new();
                let mut k = 0;
                for a in 1..=n as u32 {
                    for b in a + 1..=n as u32 {
                        if keep[k] {
                            edges.push(e(a, b));
                        }
                        k += 1;
                    }
                }
                (LabeledGraph::new((1..=n as u32).map(vid), edges).unwrap(), perm)
            })
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling((g, perm) in arb_graph_and_perm()) {
            let map: BTreeMap<VertexId, VertexId> =
                perm.iter().enumerate().map(|(i, &p)| (vid(i as u32 + 1), vid(p + 100))).collect();
            let h = g.relabel(&map);
            prop_assert_eq!(canonical_form(&g).bytes, canonical_form(&h).bytes);
            prop_assert_eq!(canonical_form(&g).apply(&g), canonical_form(&h).apply(&h));
        }
    }
}
