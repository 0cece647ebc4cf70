//! Randomised agreement between the fast solvers and exhaustive search.

use metdim::bench::streaming_verify;
use metdim::ditree::{metric_basis_ditree, weak_metric_basis_ditree};
use metdim::generate::{random_instance, InstanceKind};
use metdim::modwidth::metric_dimension_modwidth;
use metdim::oracle::min_resolving_set;
use metdim::resolve::{is_resolving, Mode};
use metdim::unicyclic::metric_basis_unicyclic;
use proptest::prelude::*;

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Strong), Just(Mode::Weak)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unicyclic_matches_oracle(n in 3usize..12, len in 3usize..9, seed in any::<u64>()) {
        prop_assume!(len <= n);
        let g = random_instance(InstanceKind::OrientedUnicyclic { cycle_len: len }, n, seed).unwrap();
        let b = metric_basis_unicyclic(&g).unwrap();
        prop_assert!(is_resolving(&g, &b.vertices, Mode::Strong).is_resolved());
        prop_assert_eq!(b.len(), min_resolving_set(&g, Mode::Strong).unwrap().size);
    }

    #[test]
    fn modwidth_matches_oracle(n in 2usize..9, p in 0.1f64..0.9, dag in any::<bool>(), m in mode(), seed in any::<u64>()) {
        let kind = if dag { InstanceKind::Dag { arc_prob: p } } else { InstanceKind::Digraph { arc_prob: p } };
        let g = random_instance(kind, n, seed).unwrap();
        prop_assume!(g.is_weakly_connected());
        let r = metric_dimension_modwidth(&g, m).unwrap();
        prop_assert!(is_resolving(&g, &r.basis.vertices, m).is_resolved());
        prop_assert_eq!(r.size, min_resolving_set(&g, m).unwrap().size);
    }

    #[test]
    fn ditree_output_resolves_and_bounds_oracle(n in 1usize..12, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = random_instance(InstanceKind::DiTree { digon_prob: p }, n, seed).unwrap();
        let strong = metric_basis_ditree(&g).unwrap();
        prop_assert!(is_resolving(&g, &strong.vertices, Mode::Strong).is_resolved());
        prop_assert!(strong.len() >= min_resolving_set(&g, Mode::Strong).unwrap().size);
        let weak = weak_metric_basis_ditree(&g).unwrap();
        prop_assert!(is_resolving(&g, &weak.vertices, Mode::Weak).is_resolved());
        prop_assert!(weak.len() >= min_resolving_set(&g, Mode::Weak).unwrap().size);
        prop_assert!(weak.len() + 1 >= strong.len() && weak.len() <= strong.len());
    }

    #[test]
    fn streaming_check_agrees(n in 1usize..10, p in 0.1f64..0.9, mask in any::<u16>(), seed in any::<u64>()) {
        let g = random_instance(InstanceKind::Digraph { arc_prob: p }, n, seed).unwrap();
        let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assert_eq!(streaming_verify(&g, &s), is_resolving(&g, &s, Mode::Strong).is_resolved());
    }
}
