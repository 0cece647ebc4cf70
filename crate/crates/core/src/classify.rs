//! Recognition of the graph classes the specialised solvers accept.

use std::fmt;

use serde::Serialize;

use crate::graph::{DiGraph, Vertex};
use crate::scc::scc;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GraphClass {
    /// Underlying simple graph is a tree.
    DiTree,
    /// Digon-free, underlying graph connected with exactly one cycle.
    /// `cycle` lists the cycle starting at its smallest vertex, stepping first
    /// towards the smaller of its two cycle neighbours.
    OrientedUnicyclic { cycle: Vec<Vertex> },
    /// Weakly connected and acyclic, but not a di-tree.
    Dag,
    Other,
}

impl GraphClass {
    pub fn name(&self) -> &'static str {
        match self {
            GraphClass::DiTree => "DiTree",
            GraphClass::OrientedUnicyclic { .. } => "OrientedUnicyclic",
            GraphClass::Dag => "Dag",
            GraphClass::Other => "Other",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classifies `g`. Weakly disconnected graphs are always `Other`.
pub fn classify(g: &DiGraph) -> GraphClass {
    if !g.is_weakly_connected() {
        return GraphClass::Other;
    }
    let n = g.n();
    let edges = g.underlying_edge_count();
    if edges + 1 == n {
        return GraphClass::DiTree;
    }
    if edges == n && !g.has_digon() {
        return GraphClass::OrientedUnicyclic {
            cycle: unique_cycle(g),
        };
    }
    if scc(g).count() == n {
        return GraphClass::Dag;
    }
    GraphClass::Other
}

/// The cycle of a connected graph whose underlying graph has exactly `n` edges:
/// peel degree-1 vertices, then walk what is left.
fn unique_cycle(g: &DiGraph) -> Vec<Vertex> {
    let n = g.n();
    let nbrs: Vec<Vec<Vertex>> = g.vertices().map(|v| g.underlying_neighbors(v)).collect();
    let mut degree: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<Vertex> = g.vertices().filter(|&v| degree[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for &w in &nbrs[v] {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let start = g.vertices().find(|&v| !removed[v]).expect("no cycle left after peeling");
    let on_cycle = |v: &&Vertex| !removed[**v];
    let first = *nbrs[start].iter().find(on_cycle).expect("cycle vertex without cycle neighbour");
    let mut cycle = vec![start];
    let (mut prev, mut cur) = (start, first);
    while cur != start {
        cycle.push(cur);
        let next = *nbrs[cur]
            .iter()
            .filter(on_cycle)
            .find(|&&w| w != prev)
            .expect("cycle is broken");
        prev = cur;
        cur = next;
    }
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, arcs: &[(usize, usize)]) -> DiGraph {
        DiGraph::from_arcs(n, arcs.iter().copied()).unwrap()
    }

    #[test]
    fn digon_edge_is_ditree() {
        assert_eq!(classify(&g(2, &[(0, 1), (1, 0)])), GraphClass::DiTree);
        assert_eq!(classify(&g(1, &[])), GraphClass::DiTree);
    }

    #[test]
    fn directed_triangle_is_unicyclic() {
        assert_eq!(
            classify(&g(3, &[(0, 1), (1, 2), (2, 0)])),
            GraphClass::OrientedUnicyclic { cycle: vec![0, 1, 2] }
        );
    }

    #[test]
    fn triangle_with_digon_pendant_is_other() {
        let h = g(4, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 2)]);
        assert_eq!(classify(&h), GraphClass::Other);
    }

    #[test]
    fn cycle_witness_with_trees() {
        // cycle 5-2-7-4 with pendants
        let h = g(
            8,
            &[(5, 2), (2, 7), (4, 7), (4, 5), (0, 5), (7, 1), (1, 3), (6, 3)],
        );
        match classify(&h) {
            GraphClass::OrientedUnicyclic { cycle } => assert_eq!(cycle, vec![2, 5, 4, 7]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dag_and_other() {
        // diamond: acyclic, underlying 4-cycle, digon-free -> unicyclic wins
        let d = g(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(matches!(classify(&d), GraphClass::OrientedUnicyclic { .. }));
        // K4 transitive tournament: acyclic, not tree, not unicyclic
        let t = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(classify(&t), GraphClass::Dag);
        // two disjoint arcs
        assert_eq!(classify(&g(4, &[(0, 1), (2, 3)])), GraphClass::Other);
        // bidirected triangle
        let k3 = g(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)]);
        assert_eq!(classify(&k3), GraphClass::Other);
    }
}
