//! Separating pairs of a 2-connected circuit, splitting along them and
//! gluing the parts back with a 2-sum.

use rigidity_cr::connectivity::{connectivity_class, separating_pairs, two_split, two_sum};
use rigidity_cr::fixtures;

fn main() {
    let g = fixtures::ten_vertex_chain();
    println!("{g}: {:?}", connectivity_class(&g).unwrap());
    for p in separating_pairs(&g).unwrap() {
        for side in p.bipartitions() {
            let (g1, g2, e) = two_split(&g, &p, &side).unwrap();
            println!("split at {{{},{}}}: {}v {g1}  +  {}v {g2}", p.u, p.v, g1.vertex_count(), g2.vertex_count());
            assert_eq!(two_sum(&g1, &g2, e).unwrap(), g);
        }
    }
}
