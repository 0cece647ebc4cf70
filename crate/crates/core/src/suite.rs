//! Fixed, seeded instance families used by the equivalence checks.

use crate::generate::{random_instance, InstanceKind};
use crate::graph::DiGraph;

#[derive(Debug, Clone)]
pub struct SuiteInstance {
    pub kind: InstanceKind,
    pub n: usize,
    pub seed: u64,
    pub graph: DiGraph,
}

pub const DIGON_PROBS: [f64; 4] = [0.0, 0.3, 0.7, 1.0];
pub const ARC_PROBS: [f64; 3] = [0.2, 0.5, 0.8];

/// `count` di-trees, `n` cycling through 1..=10 and `digon_prob` through
/// [`DIGON_PROBS`].
pub fn ditree_suite(count: usize) -> impl Iterator<Item = SuiteInstance> {
    (0..count).map(|i| {
        let n = 1 + i % 10;
        let kind = InstanceKind::DiTree {
            digon_prob: DIGON_PROBS[(i / 10) % DIGON_PROBS.len()],
        };
        let seed = i as u64;
        let graph = random_instance(kind, n, seed).expect("valid parameters");
        SuiteInstance { kind, n, seed, graph }
    })
}

/// `count` oriented unicyclic graphs with `n` in 3..=11 and cycle length in
/// 3..=min(8, n).
pub fn unicyclic_suite(count: usize) -> impl Iterator<Item = SuiteInstance> {
    (0..count).map(|i| {
        let n = 3 + i % 9;
        let lens = n.min(8) - 2;
        let cycle_len = 3 + (i / 9) % lens;
        let kind = InstanceKind::OrientedUnicyclic { cycle_len };
        let seed = 1_000_000 + i as u64;
        let graph = random_instance(kind, n, seed).expect("valid parameters");
        SuiteInstance { kind, n, seed, graph }
    })
}

/// `per_prob` weakly connected random digraphs per entry of [`ARC_PROBS`],
/// `n` in 2..=8. Disconnected draws are skipped and the seed advances.
pub fn modwidth_suite(per_prob: usize) -> Vec<SuiteInstance> {
    let mut out = Vec::new();
    for &arc_prob in &ARC_PROBS {
        let kind = InstanceKind::Digraph { arc_prob };
        let mut seed = 2_000_000u64;
        let mut got = 0;
        while got < per_prob {
            seed += 1;
            let n = 2 + (seed as usize % 7);
            let graph = random_instance(kind, n, seed).expect("valid parameters");
            if graph.is_weakly_connected() {
                got += 1;
                out.push(SuiteInstance { kind, n, seed, graph });
            }
        }
    }
    out
}

/// A mix of all four generator kinds, `n` in 1..=9.
pub fn mixed_suite(count: usize) -> impl Iterator<Item = SuiteInstance> {
    (0..count).map(|i| {
        let n = 1 + i % 9;
        let kind = match i % 4 {
            0 => InstanceKind::DiTree { digon_prob: 0.4 },
            1 if n >= 3 => InstanceKind::OrientedUnicyclic { cycle_len: 3 + i % (n - 2) },
            1 | 2 => InstanceKind::Dag { arc_prob: 0.35 },
            _ => InstanceKind::Digraph { arc_prob: 0.3 },
        };
        let seed = 3_000_000 + i as u64;
        let graph = random_instance(kind, n, seed).expect("valid parameters");
        SuiteInstance { kind, n, seed, graph }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, GraphClass};

    #[test]
    fn suites_have_requested_shape() {
        assert!(ditree_suite(400).all(|s| classify(&s.graph) == GraphClass::DiTree));
        assert!(unicyclic_suite(400)
            .all(|s| matches!(classify(&s.graph), GraphClass::OrientedUnicyclic { .. })));
        let m = modwidth_suite(5);
        assert_eq!(m.len(), 15);
        assert!(m.iter().all(|s| s.graph.is_weakly_connected()));
        assert_eq!(mixed_suite(50).count(), 50);
    }
}
