//! Seeded generators for each instance class, in edge-list form.

use metdim::classify::classify;
use metdim::generate::{random_instance, InstanceKind};

fn main() {
    let kinds = [
        InstanceKind::DiTree { digon_prob: 0.3 },
        InstanceKind::OrientedUnicyclic { cycle_len: 4 },
        InstanceKind::Dag { arc_prob: 0.3 },
        InstanceKind::Digraph { arc_prob: 0.3 },
    ];
    for kind in kinds {
        let g = random_instance(kind, 7, 42).unwrap();
        println!("{kind:?} -> {}", classify(&g));
        print!("{}", g.to_edge_list());
    }
}
