//! The Cayley-Menger matrix on four points, the K4 circuit polynomial and
//! its vanishing on random integer placements.

use std::collections::BTreeSet;

use rigidity_cr::elimination::{cm_matrix, evaluate_at_placement, k4_circuit_polynomial, random_placement};
use rigidity_cr::graph::vid;
use rigidity_cr::poly::DistVar;

fn main() {
    let labels: BTreeSet<_> = (1..=4).map(vid).collect();
    let m = cm_matrix(&labels).unwrap();
    for row in m.rows() {
        println!("{}", row.iter().map(|p| format!("{p:>6}")).collect::<Vec<_>>().join(" "));
    }
    let p = k4_circuit_polynomial([vid(1), vid(2), vid(3), vid(4)]).unwrap();
    println!(
        "\n{} terms, homogeneous degree {:?}, degree {} in x12",
        p.term_count(),
        p.homogeneous_degree().unwrap(),
        p.degree_in(DistVar::x(1, 2))
    );
    for seed in 0..3 {
        let pl = random_placement(&labels, seed);
        println!("seed {seed}: value {}", evaluate_at_placement(&p, &pl).unwrap());
    }
}
