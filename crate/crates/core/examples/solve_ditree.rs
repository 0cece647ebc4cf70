//! Strong metric basis of a small di-tree, checked against exhaustive search.

use metdim::ditree::metric_basis_ditree;
use metdim::graph::DiGraph;
use metdim::oracle::min_resolving_set;
use metdim::resolve::{is_resolving, Mode};

fn main() {
    // a digon spine 0-1-2 with pendant arcs
    let g = DiGraph::from_arcs(
        6,
        [(0, 1), (1, 0), (1, 2), (2, 1), (3, 0), (2, 4), (2, 5)],
    )
    .unwrap();
    let basis = metric_basis_ditree(&g).unwrap();
    println!("basis: {:?}", basis.vertices);
    println!("resolving: {}", is_resolving(&g, &basis.vertices, Mode::Strong).is_resolved());
    println!("oracle size: {}", min_resolving_set(&g, Mode::Strong).unwrap().size);
}
