//! CR-trees, truncated CR-tree enumeration and the memoized store of unique
//! circuits (C-nodes) and their decompositions (B-nodes).

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::connectivity::{connectivity_class, ConnectivityClass};
use crate::crd::{crd_2splits, crd_3connected, crd_class_key, crd_naive, Crd, CrdKind};
use crate::error::GraphError;
use crate::graph::{canonical_form, Edge, LabeledGraph, VertexId};
use crate::poly::DistVar;
use crate::sparsity::circuit;

type Relabel = BTreeMap<VertexId, VertexId>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeMode {
    /// 2-connected circuits are decomposed by 2-splits only.
    SplitsOnly,
    /// 2-connected circuits use the brute-force enumeration.
    Naive,
    /// 2-splits, falling back to brute force when a circuit has none.
    #[default]
    Auto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CNode {
    /// The canonical representative on labels `1..=n`.
    pub circuit: LabeledGraph,
    /// Labels of the first occurrence mapped to canonical labels.
    pub iso_witness: Relabel,
    pub bnodes: Vec<usize>,
    #[serde(skip)]
    bytes: Vec<u8>,
    #[serde(skip)]
    decomposed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BNode {
    pub parent: usize,
    pub left: usize,
    pub right: usize,
    /// Elimination edge in the parent's canonical labels.
    pub edge: Edge,
    pub kind: CrdKind,
    /// Child canonical labels to parent canonical labels.
    pub left_relabel: Relabel,
    pub right_relabel: Relabel,
    #[serde(skip)]
    class_key: Vec<u8>,
}

/// Every unique circuit met so far and every decomposition computed for them.
#[derive(Clone, Debug, Default)]
pub struct CrStore {
    mode: TreeMode,
    cnodes: Vec<CNode>,
    bnodes: Vec<BNode>,
    index: HashMap<Vec<u8>, usize>,
}

fn invert(m: &Relabel) -> Relabel {
    m.iter().map(|(&a, &b)| (b, a)).collect()
}

fn compose(outer: &Relabel, inner: &Relabel) -> Relabel {
    inner.iter().map(|(&a, b)| (a, outer[b])).collect()
}

impl CrStore {
    pub fn new(mode: TreeMode) -> Self {
        CrStore { mode, ..Default::default() }
    }

    pub fn mode(&self) -> TreeMode {
        self.mode
    }

    pub fn cnodes(&self) -> &[CNode] {
        &self.cnodes
    }

    pub fn bnodes(&self) -> &[BNode] {
        &self.bnodes
    }

    pub fn cnode(&self, i: usize) -> &CNode {
        &self.cnodes[i]
    }

    /// Finds or adds the C-node of `g`; returns it with the map from the
    /// labels of `g` to canonical labels.
    pub fn intern(&mut self, g: &LabeledGraph) -> (usize, Relabel) {
        let cf = canonical_form(g);
        if let Some(&i) = self.index.get(&cf.bytes) {
            return (i, cf.relabel);
        }
        let i = self.cnodes.len();
        self.cnodes.push(CNode {
            circuit: cf.apply(g),
            iso_witness: cf.relabel.clone(),
            bnodes: Vec::new(),
            bytes: cf.bytes.clone(),
            decomposed: false,
        });
        self.index.insert(cf.bytes, i);
        (i, cf.relabel)
    }

    pub fn lookup(&self, g: &LabeledGraph) -> Option<usize> {
        self.index.get(&canonical_form(g).bytes).copied()
    }

    fn crds_for(&self, g: &LabeledGraph) -> Result<Vec<Crd>, GraphError> {
        if g.vertex_count() < 5 {
            return Ok(Vec::new());
        }
        match connectivity_class(g)? {
            ConnectivityClass::ThreeConnected => crd_3connected(g),
            ConnectivityClass::TwoConnected => match self.mode {
                TreeMode::SplitsOnly => crd_2splits(g),
                TreeMode::Naive => crd_naive(g),
                TreeMode::Auto => {
                    let splits = crd_2splits(g)?;
                    if splits.is_empty() {
                        crd_naive(g)
                    } else {
                        Ok(splits)
                    }
                }
            },
            _ => Err(GraphError::NotCircuit),
        }
    }

    /// Adds a decomposition of the C-node `c`, given in canonical labels,
    /// unless an identical one is present. Returns the B-node index.
    pub fn add_bnode(&mut self, c: usize, crd: &Crd) -> usize {
        let parent = self.cnodes[c].circuit.clone();
        let key = crd_class_key(&parent, crd);
        if let Some(&b) = self.cnodes[c].bnodes.iter().find(|&&b| {
            let x = &self.bnodes[b];
            x.edge == crd.elimination_edge
                && self.child_graph(x, true) == crd.g1
                && self.child_graph(x, false) == crd.g2
        }) {
            return b;
        }
        let (left, lmap) = self.intern(&crd.g1);
        let (right, rmap) = self.intern(&crd.g2);
        let b = self.bnodes.len();
        self.bnodes.push(BNode {
            parent: c,
            left,
            right,
            edge: crd.elimination_edge,
            kind: crd.kind,
            left_relabel: invert(&lmap),
            right_relabel: invert(&rmap),
            class_key: key,
        });
        self.cnodes[c].bnodes.push(b);
        b
    }

    fn child_graph(&self, b: &BNode, left: bool) -> LabeledGraph {
        let (c, m) = if left { (b.left, &b.left_relabel) } else { (b.right, &b.right_relabel) };
        self.cnodes[c].circuit.relabel(m)
    }

    /// Computes (once) all decompositions of the C-node `c` for the store's mode.
    pub fn decompose(&mut self, c: usize) -> Result<&[usize], GraphError> {
        if !self.cnodes[c].decomposed {
            let g = self.cnodes[c].circuit.clone();
            let crds = self.crds_for(&g)?;
            for crd in &crds {
                self.add_bnode(c, crd);
            }
            self.cnodes[c].decomposed = true;
            if g.vertex_count() > 4 && self.cnodes[c].bnodes.is_empty() {
                return Err(GraphError::Precondition(format!("no decomposition found for {g}")));
            }
        }
        Ok(&self.cnodes[c].bnodes)
    }

    /// The decomposition used when a node is expanded without an explicit choice.
    pub fn primary_bnode(&self, c: usize) -> Option<usize> {
        self.cnodes[c].bnodes.first().copied()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct CNodeJson<'a> {
            circuit: usize,
            iso_witness: Vec<(u32, u32)>,
            bnodes: &'a [usize],
        }
        #[derive(Serialize)]
        struct BNodeJson {
            parent: usize,
            left: usize,
            right: usize,
            edge: Edge,
            kind: CrdKind,
            left_relabel: Vec<(u32, u32)>,
            right_relabel: Vec<(u32, u32)>,
        }
        let pairs = |m: &Relabel| m.iter().map(|(a, b)| (a.get(), b.get())).collect::<Vec<_>>();
        serde_json::json!({
            "mode": self.mode,
            "circuits": self.cnodes.iter().map(|c| &c.circuit).collect::<Vec<_>>(),
            "cnodes": self.cnodes.iter().enumerate().map(|(i, c)| CNodeJson {
                circuit: i,
                iso_witness: pairs(&c.iso_witness),
                bnodes: &c.bnodes,
            }).collect::<Vec<_>>(),
            "bnodes": self.bnodes.iter().map(|b| BNodeJson {
                parent: b.parent,
                left: b.left,
                right: b.right,
                edge: b.edge,
                kind: b.kind,
                left_relabel: pairs(&b.left_relabel),
                right_relabel: pairs(&b.right_relabel),
            }).collect::<Vec<_>>(),
        })
    }
}

/// A node of a CR-tree, carrying its circuit in the labels of the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub circuit: LabeledGraph,
    pub cnode: usize,
    /// Canonical labels of the C-node to the labels used here.
    pub relabel: Relabel,
    pub truncated: bool,
    pub split: Option<Box<Split>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub bnode: usize,
    pub edge: Edge,
    pub kind: CrdKind,
    pub left: TreeNode,
    pub right: TreeNode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrTree {
    pub root: TreeNode,
}

impl TreeNode {
    fn visit<'a>(&'a self, out: &mut Vec<&'a TreeNode>) {
        if let Some(s) = &self.split {
            s.left.visit(out);
            s.right.visit(out);
        }
        out.push(self);
    }

    pub fn is_leaf(&self) -> bool {
        self.split.is_none()
    }
}

impl CrTree {
    /// All nodes in post-order (children before parents).
    pub fn nodes(&self) -> Vec<&TreeNode> {
        let mut out = Vec::new();
        self.root.visit(&mut out);
        out
    }

    pub fn node_count(&self) -> usize {
        self.nodes().len()
    }

    pub fn truncated_count(&self) -> usize {
        self.nodes().iter().filter(|n| n.truncated).count()
    }

    pub fn is_expanded(&self) -> bool {
        self.truncated_count() == 0
    }

    pub fn depth(&self) -> usize {
        fn d(n: &TreeNode) -> usize {
            n.split.as_ref().map_or(1, |s| 1 + d(&s.left).max(d(&s.right)))
        }
        d(&self.root)
    }

    /// Checks that every node is a circuit, untruncated leaves are `K4`s and
    /// every internal node is the combinatorial resultant of its smaller children.
    pub fn check(&self) -> Result<(), String> {
        for n in self.nodes() {
            if !circuit(&n.circuit) {
                return Err(format!("node {} is not a circuit", n.circuit));
            }
            match &n.split {
                None if !n.truncated && n.circuit.vertex_count() != 4 => {
                    return Err(format!("leaf {} is not a K4", n.circuit));
                }
                None => {}
                Some(s) => {
                    let cr = s.left.circuit.union(&s.right.circuit).remove_edge(s.edge);
                    if cr.as_ref() != Ok(&n.circuit) {
                        return Err(format!("children of {} do not reconstruct it", n.circuit));
                    }
                    for c in [&s.left, &s.right] {
                        if c.circuit.vertex_count() >= n.circuit.vertex_count() {
                            return Err(format!("child {} is not smaller than its parent", c.circuit));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        fn node(n: &TreeNode) -> serde_json::Value {
            serde_json::json!({
                "circuit_index": n.cnode,
                "labels": n.relabel.iter().map(|(a, b)| (a.get(), b.get())).collect::<Vec<_>>(),
                "truncated": n.truncated,
                "crd": n.split.as_ref().map(|s| serde_json::json!({
                    "left": node(&s.left),
                    "right": node(&s.right),
                    "edge": s.edge,
                    "kind": s.kind,
                })),
            })
        }
        node(&self.root)
    }

    /// Indented text rendering, one node per line.
    pub fn render(&self) -> String {
        fn walk(n: &TreeNode, depth: usize, out: &mut String) {
            let mark = if n.truncated { " (truncated)" } else { "" };
            let step = n.split.as_ref().map(|s| format!(" eliminate x{}", s.edge)).unwrap_or_default();
            out.push_str(&format!(
                "{}{}v {}{}{}\n",
                "  ".repeat(depth),
                n.circuit.vertex_count(),
                n.circuit,
                step,
                mark
            ));
            if let Some(s) = &n.split {
                walk(&s.left, depth + 1, out);
                walk(&s.right, depth + 1, out);
            }
        }
        let mut out = String::new();
        walk(&self.root, 0, &mut out);
        out
    }
}

fn node_for(store: &CrStore, c: usize, relabel: Relabel, truncated: bool) -> TreeNode {
    TreeNode { circuit: store.cnodes[c].circuit.relabel(&relabel), cnode: c, relabel, truncated, split: None }
}

fn child_nodes(store: &CrStore, b: usize, relabel: &Relabel) -> (Relabel, Relabel, Edge) {
    let bn = &store.bnodes[b];
    (compose(relabel, &bn.left_relabel), compose(relabel, &bn.right_relabel), bn.edge.relabel(relabel))
}

/// Builds the subtree of C-node `c` using primary decompositions all the way
/// down, decomposing circuits on demand.
fn grow_full(store: &mut CrStore, c: usize, relabel: Relabel, choice: Option<usize>) -> Result<TreeNode, GraphError> {
    let mut node = node_for(store, c, relabel, false);
    if store.cnodes[c].circuit.vertex_count() == 4 {
        return Ok(node);
    }
    let b = match choice {
        Some(b) => b,
        None => store.decompose(c)?[0],
    };
    let (lr, rr, edge) = child_nodes(store, b, &node.relabel);
    let (l, r) = (store.bnodes[b].left, store.bnodes[b].right);
    let left = grow_full(store, l, lr, None)?;
    let right = grow_full(store, r, rr, None)?;
    node.split = Some(Box::new(Split { bnode: b, edge, kind: store.bnodes[b].kind, left, right }));
    Ok(node)
}

/// Replaces every truncated node by the stored subtree of its circuit,
/// following primary decompositions.
pub fn expand_tree(store: &CrStore, tree: &CrTree) -> Result<CrTree, GraphError> {
    fn full(store: &CrStore, n: &TreeNode) -> Result<TreeNode, GraphError> {
        let mut out = TreeNode { truncated: false, split: None, ..n.clone() };
        let b = match &n.split {
            Some(s) => s.bnode,
            None if n.circuit.vertex_count() == 4 => return Ok(out),
            None => store.primary_bnode(n.cnode).ok_or_else(|| {
                GraphError::Precondition(format!("store has no decomposition of {}", n.circuit))
            })?,
        };
        let (lr, rr, edge) = child_nodes(store, b, &n.relabel);
        let bn = &store.bnodes[b];
        let left = full(store, &node_for(store, bn.left, lr, true))?;
        let right = full(store, &node_for(store, bn.right, rr, true))?;
        let (left, right) = match &n.split {
            Some(s) => (full(store, &s.left)?, full(store, &s.right)?),
            None => (left, right),
        };
        out.split = Some(Box::new(Split { bnode: b, edge, kind: bn.kind, left, right }));
        Ok(out)
    }
    Ok(CrTree { root: full(store, &tree.root)? })
}

/// A fully expanded tree for `g`: the root uses `root_crd` when given,
/// every other circuit its primary decomposition.
pub fn strategy_tree(store: &mut CrStore, g: &LabeledGraph, root_crd: Option<&Crd>) -> Result<CrTree, GraphError> {
    if !circuit(g) {
        return Err(GraphError::NotCircuit);
    }
    let (c, to_canon) = store.intern(g);
    let relabel = invert(&to_canon);
    let choice = match root_crd {
        Some(crd) => {
            crd.validate(g)?;
            let canon_crd = Crd {
                g1: crd.g1.relabel(&to_canon),
                g2: crd.g2.relabel(&to_canon),
                elimination_edge: crd.elimination_edge.relabel(&to_canon),
                kind: crd.kind,
            };
            Some(store.add_bnode(c, &canon_crd))
        }
        None => None,
    };
    Ok(CrTree { root: grow_full(store, c, relabel, choice)? })
}

/// Lazy stream of truncated CR-trees of one circuit, one per decomposition
/// of the root. The collection of seen circuits persists across trees.
pub struct TreeStream {
    store: CrStore,
    root: usize,
    root_relabel: Relabel,
    next: usize,
    seen: HashSet<usize>,
    keys: HashSet<Vec<Vec<u8>>>,
}

pub fn enumerate_truncated_trees(g: &LabeledGraph, mode: TreeMode) -> Result<TreeStream, GraphError> {
    if g.vertex_count() < 5 {
        return Err(GraphError::TooFewVertices { needed: 5, found: g.vertex_count() });
    }
    if !circuit(g) {
        return Err(GraphError::NotCircuit);
    }
    let mut store = CrStore::new(mode);
    let (root, to_canon) = store.intern(g);
    store.decompose(root)?;
    Ok(TreeStream {
        store,
        root,
        root_relabel: invert(&to_canon),
        next: 0,
        seen: [root].into(),
        keys: HashSet::new(),
    })
}

impl TreeStream {
    pub fn store(&self) -> &CrStore {
        &self.store
    }

    pub fn into_store(self) -> CrStore {
        self.store
    }

    fn grow(&mut self, c: usize, relabel: Relabel, choice: Option<usize>) -> Result<TreeNode, GraphError> {
        let mut node = node_for(&self.store, c, relabel, false);
        if self.store.cnodes[c].circuit.vertex_count() == 4 {
            return Ok(node);
        }
        let b = match choice {
            Some(b) => b,
            None => self.store.decompose(c)?[0],
        };
        let (lr, rr, edge) = child_nodes(&self.store, b, &node.relabel);
        let (l, r) = (self.store.bnodes[b].left, self.store.bnodes[b].right);
        let left_new = self.seen.insert(l);
        let right_new = self.seen.insert(r);
        let left = if left_new { self.grow(l, lr, None)? } else { node_for(&self.store, l, lr, true) };
        let right = if right_new { self.grow(r, rr, None)? } else { node_for(&self.store, r, rr, true) };
        node.split = Some(Box::new(Split { bnode: b, edge, kind: self.store.bnodes[b].kind, left, right }));
        Ok(node)
    }

    fn key(&self, tree: &CrTree) -> Result<Vec<Vec<u8>>, GraphError> {
        let full = expand_tree(&self.store, tree)?;
        let mut key: Vec<Vec<u8>> = full
            .nodes()
            .iter()
            .filter_map(|n| n.split.as_ref().map(|s| self.store.bnodes[s.bnode].class_key.clone()))
            .collect();
        key.sort();
        Ok(key)
    }
}

impl Iterator for TreeStream {
    type Item = Result<CrTree, GraphError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let roots = &self.store.cnodes[self.root].bnodes;
            if self.next >= roots.len() {
                return None;
            }
            let b = roots[self.next];
            self.next += 1;
            let tree = match self.grow(self.root, self.root_relabel.clone(), Some(b)) {
                Ok(root) => CrTree { root },
                Err(e) => return Some(Err(e)),
            };
            match self.key(&tree) {
                Ok(k) => {
                    if self.keys.insert(k) {
                        return Some(Ok(tree));
                    }
                }
                Err(e) => return Some(Err(e)),
            }
        }
    }
}

/// Homogeneous degree and per-variable degrees of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyStats {
    pub homogeneous_degree: u32,
    pub degrees: BTreeMap<DistVar, u32>,
}

impl PolyStats {
    /// The a priori values for a `K4` circuit polynomial.
    pub fn k4(g: &LabeledGraph) -> Self {
        PolyStats {
            homogeneous_degree: 3,
            degrees: g.edges().iter().map(|&e| (DistVar::of_edge(e), 2)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeCost {
    pub circuit: LabeledGraph,
    pub edge: Edge,
    pub left_degree: Option<u32>,
    pub right_degree: Option<u32>,
    /// Sylvester dimension: sum of the children's degrees in the eliminated variable.
    pub dimension: Option<u32>,
    /// `h_f d_g + h_g d_f - d_f d_g` from the children's values.
    pub homogeneous_bound: Option<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyCost {
    /// Internal nodes in post-order.
    pub nodes: Vec<NodeCost>,
}

impl StrategyCost {
    pub fn root(&self) -> Option<&NodeCost> {
        self.nodes.last()
    }
}

/// Degree bound `h_f d_g + h_g d_f - d_f d_g` for the resultant.
pub fn resultant_degree_bound(h_f: u32, d_f: u32, h_g: u32, d_g: u32) -> u32 {
    h_f * d_g + h_g * d_f - d_f * d_g
}

/// Predicted Sylvester dimensions and homogeneous-degree bounds, bottom-up.
/// `K4` leaves are seeded with degree 3 and degree 2 in each variable;
/// internal nodes use `measured` when it knows their polynomial.
pub fn strategy_cost(
    tree: &CrTree,
    measured: Option<&dyn Fn(&LabeledGraph) -> Option<PolyStats>>,
) -> Result<StrategyCost, GraphError> {
    if !tree.is_expanded() {
        return Err(GraphError::Precondition("strategy cost needs a fully expanded tree".into()));
    }
    fn walk(
        n: &TreeNode,
        measured: Option<&dyn Fn(&LabeledGraph) -> Option<PolyStats>>,
        out: &mut Vec<NodeCost>,
    ) -> Option<PolyStats> {
        let Some(s) = &n.split else {
            return Some(PolyStats::k4(&n.circuit));
        };
        let l = walk(&s.left, measured, out);
        let r = walk(&s.right, measured, out);
        let x = DistVar::of_edge(s.edge);
        let dl = l.as_ref().map(|p| p.degrees.get(&x).copied().unwrap_or(0));
        let dr = r.as_ref().map(|p| p.degrees.get(&x).copied().unwrap_or(0));
        let bound = match (&l, &r, dl, dr) {
            (Some(l), Some(r), Some(a), Some(b)) => {
                Some(resultant_degree_bound(l.homogeneous_degree, a, r.homogeneous_degree, b))
            }
            _ => None,
        };
        out.push(NodeCost {
            circuit: n.circuit.clone(),
            edge: s.edge,
            left_degree: dl,
            right_degree: dr,
            dimension: dl.zip(dr).map(|(a, b)| a + b),
            homogeneous_bound: bound,
        });
        measured.and_then(|f| f(&n.circuit))
    }
    let mut nodes = Vec::new();
    walk(&tree.root, measured, &mut nodes);
    Ok(StrategyCost { nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::e;

    fn double_banana() -> LabeledGraph {
        LabeledGraph::from_pairs(&[
            (1, 2), (1, 3), (1, 5), (2, 3), (3, 5), (2, 4), (2, 6), (4, 5), (4, 6), (5, 6),
        ])
    }

    #[test]
    fn double_banana_split_tree() {
        let mut stream = enumerate_truncated_trees(&double_banana(), TreeMode::SplitsOnly).unwrap();
        let first = stream.next().unwrap().unwrap();
        assert!(stream.next().is_none());
        assert_eq!(first.node_count(), 3);
        assert_eq!(first.truncated_count(), 1);
        let s = first.root.split.as_ref().unwrap();
        assert!(!s.left.truncated && s.right.truncated);
        assert_eq!(s.edge, e(2, 5));
        first.check().unwrap();
        let full = expand_tree(stream.store(), &first).unwrap();
        assert_eq!(full.node_count(), 3);
        assert!(full.is_expanded());
        full.check().unwrap();
        let cost = strategy_cost(&full, None).unwrap();
        let root = cost.root().unwrap();
        assert_eq!((root.dimension, root.homogeneous_bound), (Some(4), Some(8)));
        assert!(strategy_cost(&first, None).is_err());
    }

    #[test]
    fn naive_trees_cover_both_decompositions() {
        let trees: Vec<CrTree> = enumerate_truncated_trees(&double_banana(), TreeMode::Naive)
            .unwrap()
            .collect::<Result<_, _>>()
            .unwrap();
        assert_eq!(trees.len(), 2);
        let sizes: Vec<(usize, usize)> = trees
            .iter()
            .map(|t| {
                let s = t.root.split.as_ref().unwrap();
                (s.left.circuit.vertex_count(), s.right.circuit.vertex_count())
            })
            .collect();
        assert!(sizes.contains(&(4, 4)) && sizes.contains(&(5, 5)));
        for t in &trees {
            t.check().unwrap();
        }
    }

    #[test]
    fn store_has_one_cnode_per_shape() {
        let stream = enumerate_truncated_trees(&double_banana(), TreeMode::Naive).unwrap();
        let store = {
            let mut s = stream;
            while s.next().is_some() {}
            s.into_store()
        };
        let mut keys: Vec<Vec<u8>> = store.cnodes().iter().map(|c| canonical_form(&c.circuit).bytes).collect();
        let n = keys.len();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), n);
        for b in store.bnodes() {
            let parent = &store.cnode(b.parent).circuit;
            let l = store.cnode(b.left).circuit.relabel(&b.left_relabel);
            let r = store.cnode(b.right).circuit.relabel(&b.right_relabel);
            assert_eq!(&l.union(&r).remove_edge(b.edge).unwrap(), parent);
        }
        let json = store.to_json();
        assert_eq!(json["circuits"].as_array().unwrap().len(), n);
    }

    #[test]
    fn small_inputs_rejected() {
        assert!(enumerate_truncated_trees(&LabeledGraph::complete(&[1, 2, 3, 4]), TreeMode::Auto).is_err());
    }
}
