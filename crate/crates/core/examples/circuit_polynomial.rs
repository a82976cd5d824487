//! Circuit polynomial of the double banana along its 2-split, written to
//! a cache directory and read back.

use rigidity_cr::crtree::{strategy_tree, CrStore, TreeMode};
use rigidity_cr::elimination::{circuit_polynomial_with, render_report, PipelineOptions, PolyCache};
use rigidity_cr::fixtures;

fn main() {
    let g = fixtures::double_banana();
    let tree = strategy_tree(&mut CrStore::new(TreeMode::SplitsOnly), &g, None).unwrap();
    print!("{}", tree.render());

    let dir = std::env::temp_dir().join("crtool-example-cache");
    let cache = PolyCache::with_dir(&dir).unwrap();
    let (p, report) = circuit_polynomial_with(&tree, &PipelineOptions::default(), &cache).unwrap();
    print!("{}", render_report(&report));

    let again = PolyCache::with_dir(&dir).unwrap().get(&g).unwrap();
    println!("read back {} terms from {}", again.term_count(), dir.display());
    assert_eq!(again.term_count(), p.term_count());
}
