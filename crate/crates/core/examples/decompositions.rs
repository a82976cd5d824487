//! Combinatorial resultant decompositions in each enumeration mode, grouped
//! into isomorphism classes.

use rigidity_cr::crd::{crd_2splits, crd_3connected, crd_naive, isomorphism_classes, Crd};
use rigidity_cr::fixtures;
use rigidity_cr::graph::LabeledGraph;

fn show(title: &str, parent: &LabeledGraph, crds: &[Crd]) {
    let classes = isomorphism_classes(parent, crds);
    println!("{title}: {} decompositions, {} classes", crds.len(), classes.len());
    for class in classes {
        let c = &crds[class[0]];
        let common: Vec<u32> = c.g1.vertices().intersection(c.g2.vertices()).map(|v| v.get()).collect();
        println!(
            "  x{:<2} {}v + {}v, common {:?}, eliminate {} ({:?})",
            class.len(),
            c.g1.vertex_count(),
            c.g2.vertex_count(),
            common,
            c.elimination_edge,
            c.kind
        );
        assert_eq!(&c.resultant_graph().unwrap(), parent);
    }
}

fn main() {
    let db = fixtures::double_banana();
    show("double banana, 2-splits", &db, &crd_2splits(&db).unwrap());
    show("double banana, brute force", &db, &crd_naive(&db).unwrap());
    let w5 = fixtures::w5();
    show("W5, 3-connected", &w5, &crd_3connected(&w5).unwrap());
    let g = fixtures::eight_vertex_opposite();
    show("8-vertex circuit, brute force", &g, &crd_naive(&g).unwrap());
}
