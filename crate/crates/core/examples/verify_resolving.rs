//! Checks candidate sets and reports the first collision.

use metdim::graph::DiGraph;
use metdim::resolve::{distance_vectors, is_resolving, Mode};

fn main() {
    let g = DiGraph::from_arcs(4, [(0, 1), (0, 2), (2, 3)]).unwrap();
    for set in [vec![0], vec![0, 1], vec![1, 2]] {
        println!("{set:?} strong: {:?}", is_resolving(&g, &set, Mode::Strong));
        println!("{set:?} weak:   {:?}", is_resolving(&g, &set, Mode::Weak));
    }
    println!("vectors for {{0, 1}}: {:?}", distance_vectors(&g, &[0, 1]));
}
