//! Modular-width dynamic program on a random dense digraph, both modes.

use metdim::generate::{random_instance, InstanceKind};
use metdim::modwidth::metric_dimension_modwidth;
use metdim::oracle::min_resolving_set;
use metdim::resolve::Mode;

fn main() {
    let g = random_instance(InstanceKind::Digraph { arc_prob: 0.5 }, 8, 11).unwrap();
    for mode in [Mode::Strong, Mode::Weak] {
        let r = metric_dimension_modwidth(&g, mode).unwrap();
        let exact = min_resolving_set(&g, mode).unwrap().size;
        println!(
            "{mode:?}: size {} (oracle {exact}), basis {:?}, width {}, root profiles {}",
            r.size, r.basis.vertices, r.width, r.root_profiles
        );
    }
}
