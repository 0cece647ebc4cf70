//! Seeded random instances. The same `(kind, n, seed)` always yields the same graph.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{DiGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InstanceKind {
    /// Uniform labelled tree; each edge is a digon with probability
    /// `digon_prob`, otherwise a uniformly oriented arc.
    DiTree { digon_prob: f64 },
    /// A cycle of `cycle_len` vertices with random trees hanging off it; every
    /// edge singly and uniformly oriented.
    OrientedUnicyclic { cycle_len: usize },
    /// Random topological order, each forward pair an arc with `arc_prob`.
    Dag { arc_prob: f64 },
    /// Every ordered pair independently an arc with `arc_prob`.
    Digraph { arc_prob: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

fn check_prob(p: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenError::InvalidParams(format!("probability {p} not in [0, 1]")))
    }
}

pub fn random_instance(kind: InstanceKind, n: usize, seed: u64) -> Result<DiGraph, GenError> {
    if n == 0 {
        return Err(GenError::InvalidParams("n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs = match kind {
        InstanceKind::DiTree { digon_prob } => {
            check_prob(digon_prob)?;
            let edges = random_tree_edges(&mut rng, n);
            orient(&mut rng, &edges, digon_prob)
        }
        InstanceKind::OrientedUnicyclic { cycle_len } => {
            if cycle_len < 3 || cycle_len > n {
                return Err(GenError::InvalidParams(format!(
                    "cycle_len {cycle_len} must lie in 3..={n}"
                )));
            }
            let edges = unicyclic_edges(&mut rng, n, cycle_len);
            orient(&mut rng, &edges, 0.0)
        }
        InstanceKind::Dag { arc_prob } => {
            check_prob(arc_prob)?;
            let mut order: Vec<Vertex> = (0..n).collect();
            order.shuffle(&mut rng);
            let mut arcs = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(arc_prob) {
                        arcs.push((order[i], order[j]));
                    }
                }
            }
            arcs
        }
        InstanceKind::Digraph { arc_prob } => {
            check_prob(arc_prob)?;
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(arc_prob) {
                        arcs.push((u, v));
                    }
                }
            }
            arcs
        }
    };
    Ok(DiGraph::from_arcs(n, arcs).expect("generator produced an invalid arc set"))
}

/// Edges of a uniform labelled tree on `0..n`, decoded from a random Prüfer sequence.
pub fn random_tree_edges<R: Rng>(rng: &mut R, n: usize) -> Vec<(Vertex, Vertex)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(&code, n)
}

/// Linear-time Prüfer decoding.
pub fn prufer_decode(code: &[Vertex], n: usize) -> Vec<(Vertex, Vertex)> {
    debug_assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap();
    let mut leaf = ptr;
    for &c in code {
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 && c < ptr {
            leaf = c;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

fn unicyclic_edges<R: Rng>(rng: &mut R, n: usize, cycle_len: usize) -> Vec<(Vertex, Vertex)> {
    let mut label: Vec<Vertex> = (0..n).collect();
    label.shuffle(rng);
    let mut edges: Vec<(Vertex, Vertex)> = (0..cycle_len)
        .map(|i| (label[i], label[(i + 1) % cycle_len]))
        .collect();
    // random recursive forest rooted on the cycle
    for i in cycle_len..n {
        let parent = rng.gen_range(0..i);
        edges.push((label[parent], label[i]));
    }
    edges
}

fn orient<R: Rng>(rng: &mut R, edges: &[(Vertex, Vertex)], digon_prob: f64) -> Vec<(Vertex, Vertex)> {
    let mut arcs = Vec::with_capacity(edges.len() * 2);
    for &(u, v) in edges {
        if digon_prob > 0.0 && rng.gen_bool(digon_prob) {
            arcs.push((u, v));
            arcs.push((v, u));
        } else if rng.gen_bool(0.5) {
            arcs.push((u, v));
        } else {
            arcs.push((v, u));
        }
    }
    arcs
}
