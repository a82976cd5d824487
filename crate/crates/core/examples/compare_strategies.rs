//! Times the 2-split strategy against the common-triangle strategy on the
//! 7-vertex circuit with a K4 glued on a rim edge.

use rigidity_cr::crtree::{strategy_tree, CrStore, TreeMode};
use rigidity_cr::elimination::{compare_strategies, render_comparison, CompareOptions, Strategy};
use rigidity_cr::fixtures;

fn main() {
    let g = fixtures::seven_vertex_rim();
    let split = strategy_tree(&mut CrStore::new(TreeMode::Auto), &g, None).unwrap();
    let root = fixtures::common_triangle().find(&g).unwrap();
    let triangle = strategy_tree(&mut CrStore::new(TreeMode::Auto), &g, Some(&root)).unwrap();
    let strategies = vec![
        Strategy { name: "2-split".into(), tree: split },
        Strategy { name: "common triangle".into(), tree: triangle },
    ];
    let opts = CompareOptions { repetitions: 3, ..Default::default() };
    let c = compare_strategies(&g, &strategies, &opts).unwrap();
    print!("{}", render_comparison(&c));
}
