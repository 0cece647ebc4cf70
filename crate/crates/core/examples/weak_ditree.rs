//! Weak metric dimension of a di-tree: sources need not be in the basis.

use metdim::ditree::{metric_basis_ditree, weak_metric_basis_ditree};
use metdim::graph::DiGraph;
use metdim::oracle::min_resolving_set;
use metdim::resolve::Mode;

fn main() {
    // in-star: every leaf is a source, but one leaf may stay unreached in weak mode
    let g = DiGraph::from_arcs(5, [(1, 0), (2, 0), (3, 0), (0, 4)]).unwrap();
    let strong = metric_basis_ditree(&g).unwrap();
    let weak = weak_metric_basis_ditree(&g).unwrap();
    println!("strong {:?}, weak {:?}", strong.vertices, weak.vertices);
    println!(
        "oracle: strong {}, weak {}",
        min_resolving_set(&g, Mode::Strong).unwrap().size,
        min_resolving_set(&g, Mode::Weak).unwrap().size
    );
}
