//! Exhaustive minimum resolving sets for any small digraph.

use metdim::generate::{random_instance, InstanceKind};
use metdim::oracle::min_resolving_set;
use metdim::resolve::Mode;

fn main() {
    let g = random_instance(InstanceKind::Dag { arc_prob: 0.4 }, 10, 5).unwrap();
    for mode in [Mode::Strong, Mode::Weak] {
        let r = min_resolving_set(&g, mode).unwrap();
        println!("{mode:?}: {} {:?} ({} sets tried)", r.size, r.witness.vertices, r.nodes_searched);
    }
}
