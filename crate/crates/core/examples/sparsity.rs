//! Classifies a few graphs with the pebble game and extracts the unique
//! circuit of a Laman-plus-one graph.

use rigidity_cr::fixtures;
use rigidity_cr::graph::LabeledGraph;
use rigidity_cr::sparsity::{classify, fundamental_circuit, rank};

fn main() {
    let graphs = [
        ("K4", fixtures::k4()),
        ("K4 minus an edge", LabeledGraph::from_pairs(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])),
        ("double banana", fixtures::double_banana()),
        ("K5", LabeledGraph::complete(&[1, 2, 3, 4, 5])),
    ];
    for (name, g) in &graphs {
        println!("{name:<18} n={} m={} rank={} {:?}", g.vertex_count(), g.edge_count(), rank(g), classify(g));
    }

    let (laman, extra) = fixtures::laman_plus_one();
    let c = fundamental_circuit(&laman, extra).expect("Laman graph and a new edge");
    println!("\nLaman graph {laman}");
    println!("adding {extra} creates the circuit {c} on {} vertices", c.vertex_count());
}
