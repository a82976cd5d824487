//! Brute-force oracles used only by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rigidity_cr::graph::{Edge, LabeledGraph, VertexId};

/// Edges of `edges` with both endpoints in `subset`.
fn induced_count(edges: &[Edge], subset: &BTreeSet<VertexId>) -> usize {
    edges.iter().filter(|e| subset.contains(&e.u()) && subset.contains(&e.v())).count()
}

fn vertex_subsets(vs: &[VertexId]) -> impl Iterator<Item = BTreeSet<VertexId>> + '_ {
    (0u32..1 << vs.len()).map(move |mask| (0..vs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect())
}

/// Every vertex subset of size `k >= 2` spans at most `2k - 3` of `edges`.
pub fn sparse(vs: &[VertexId], edges: &[Edge]) -> bool {
    vertex_subsets(vs).all(|s| s.len() < 2 || induced_count(edges, &s) + 3 <= 2 * s.len())
}

pub fn is_sparse(g: &LabeledGraph) -> bool {
    let vs: Vec<VertexId> = g.vertices().iter().copied().collect();
    let es: Vec<Edge> = g.edges().iter().copied().collect();
    sparse(&vs, &es)
}

pub fn is_laman(g: &LabeledGraph) -> bool {
    g.edge_count() + 3 == 2 * g.vertex_count() && is_sparse(g)
}

/// `2n - 2` edges on the spanned vertices and every proper vertex subset sparse.
pub fn edges_form_circuit(edges: &[Edge]) -> bool {
    let vs: Vec<VertexId> = edges.iter().flat_map(|e| [e.u(), e.v()]).collect::<BTreeSet<_>>().into_iter().collect();
    if edges.len() + 2 != 2 * vs.len() {
        return false;
    }
    let ok = vertex_subsets(&vs).all(|s| s.len() < 2 || s.len() == vs.len() || induced_count(edges, &s) + 3 <= 2 * s.len());
    ok
}

/// Circuit using every vertex of `g`.
pub fn is_spanning_circuit(g: &LabeledGraph) -> bool {
    let es: Vec<Edge> = g.edges().iter().copied().collect();
    let spanned: BTreeSet<VertexId> = es.iter().flat_map(|e| [e.u(), e.v()]).collect();
    spanned.len() == g.vertex_count() && edges_form_circuit(&es)
}

/// All edge subsets of `g + e` that contain `e` and form a circuit.
pub fn circuits_through(g: &LabeledGraph, e: Edge) -> Vec<LabeledGraph> {
    let rest: Vec<Edge> = g.edges().iter().copied().collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << rest.len() {
        let mut s: Vec<Edge> = (0..rest.len()).filter(|i| mask >> i & 1 == 1).map(|i| rest[i]).collect();
        s.push(e);
        if edges_form_circuit(&s) {
            out.push(LabeledGraph::from_edges(s).unwrap());
        }
    }
    out
}

/// Every graph on `1..=n`.
pub fn all_graphs(n: u32) -> impl Iterator<Item = LabeledGraph> {
    let pairs: Vec<(u32, u32)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| rigidity_cr::graph::e(pairs[i].0, pairs[i].1));
        LabeledGraph::new((1..=n).map(rigidity_cr::graph::vid), edges).unwrap()
    })
}

/// Each edge of `K_n` kept with probability `p`.
pub fn random_graph(n: u32, p: f64, seed: u64) -> LabeledGraph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<Edge> =
        (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).filter(|_| rng.gen_bool(p)).map(|(a, b)| rigidity_cr::graph::e(a, b)).collect();
    LabeledGraph::new((1..=n).map(rigidity_cr::graph::vid), edges).unwrap()
}

/// A random 2-connected circuit on at most `max_n` vertices, glued from
/// `K4`s and wheels by 2-sums along random edges.
pub fn random_two_sum_circuit(seed: u64, max_n: usize) -> LabeledGraph {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rigidity_cr::connectivity::two_sum;
    use rigidity_cr::fixtures::wheel;
    use std::collections::BTreeMap;

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let piece = |rng: &mut rand_chacha::ChaCha8Rng| -> LabeledGraph {
        let n = *[4u32, 4, 5, 6].choose(rng).unwrap();
        if n == 4 { rigidity_cr::fixtures::k4() } else { wheel(n) }
    };
    let mut g = piece(&mut rng);
    let mut next = g.vertex_count() as u32 + 1;
    loop {
        let h = piece(&mut rng);
        if g.vertex_count() + h.vertex_count() - 2 > max_n {
            break;
        }
        let e = *g.edges().iter().collect::<Vec<_>>().choose(&mut rng).copied().unwrap();
        let f = *h.edges().iter().collect::<Vec<_>>().choose(&mut rng).copied().unwrap();
        let flip = rng.gen_bool(0.5);
        let mut map = BTreeMap::new();
        for v in h.vertices() {
            let target = if *v == f.u() {
                if flip { e.v() } else { e.u() }
            } else if *v == f.v() {
                if flip { e.u() } else { e.v() }
            } else {
                next += 1;
                rigidity_cr::graph::vid(next - 1)
            };
            map.insert(*v, target);
        }
        g = two_sum(&g, &h.relabel(&map), e).unwrap();
        if rng.gen_bool(0.2) {
            break;
        }
    }
    g
}
