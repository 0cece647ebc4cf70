//! Prints the modular decomposition tree of a small digraph.

use metdim::graph::DiGraph;
use metdim::modwidth::{modular_decomposition, DecompositionNode};

fn show(node: &DecompositionNode, depth: usize) {
    println!("{:indent$}{:?} {:?}", "", node.kind, node.vertices, indent = 2 * depth);
    for c in &node.children {
        show(c, depth + 1);
    }
}

fn main() {
    // {0, 1} and {2, 3} are modules; 4 points at everything
    let arcs = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 2), (4, 0), (4, 1), (4, 2), (4, 3)];
    let g = DiGraph::from_arcs(5, arcs).unwrap();
    let root = modular_decomposition(&g).unwrap();
    show(&root, 0);
    println!("width {}", root.width());
}
