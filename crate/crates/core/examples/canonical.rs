//! Canonical forms, automorphism groups and explicit isomorphisms.

use rigidity_cr::fixtures;
use rigidity_cr::graph::{automorphisms, canonical_form, isomorphisms, vid};

fn main() {
    for (name, g) in fixtures::named_circuits() {
        let cf = canonical_form(&g);
        println!("{name:<20} |Aut| = {:<4} canonical {}", automorphisms(&g).len(), cf.apply(&g));
    }

    let g = fixtures::w4();
    let shifted = g.relabel(&g.vertices().iter().map(|&v| (v, vid(v.get() + 10))).collect());
    let isos = isomorphisms(&g, &shifted);
    println!("\n{} isomorphisms from {g} onto {shifted}", isos.len());
    println!("first: {:?}", isos[0].iter().map(|(a, b)| (a.get(), b.get())).collect::<Vec<_>>());
}
