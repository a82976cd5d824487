//! Truncated CR-trees, their expansion from the store and the predicted
//! cost of each elimination step.

use rigidity_cr::crtree::{enumerate_truncated_trees, expand_tree, strategy_cost, TreeMode};
use rigidity_cr::fixtures;

fn main() {
    let g = fixtures::ten_vertex_chain();
    let mut stream = enumerate_truncated_trees(&g, TreeMode::Auto).unwrap();
    let trees: Vec<_> = stream.by_ref().collect::<Result<_, _>>().unwrap();
    for (i, t) in trees.iter().enumerate() {
        println!("tree {} ({} nodes, {} truncated)\n{}", i + 1, t.node_count(), t.truncated_count(), t.render());
        let full = expand_tree(stream.store(), t).unwrap();
        full.check().unwrap();
        for step in strategy_cost(&full, None).unwrap().nodes {
            println!(
                "  {}v on {}: dimension {:?}, degree bound {:?}",
                step.circuit.vertex_count(),
                step.edge,
                step.dimension,
                step.homogeneous_bound
            );
        }
    }
    let store = stream.store();
    println!("\nstore: {} circuits, {} decompositions", store.cnodes().len(), store.bnodes().len());
}
