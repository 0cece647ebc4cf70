//! Distance vectors and the strong/weak resolving-set predicates.
//!
//! A set `S` is *resolving* when the distance vectors `(dist(s, v))_{s in S}`
//! are pairwise distinct. Strong mode additionally requires every vertex to be
//! reachable from some member of `S`; weak mode tolerates a single vertex whose
//! vector is all-`INF` (two such vertices already collide as a pair).

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::distance::{bfs_distances, DistanceTable, INF};
use crate::graph::{DiGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Strong,
    Weak,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Strong => "strong",
            Mode::Weak => "weak",
        })
    }
}

/// Outcome of a resolving check. Counterexamples are the lexicographically
/// smallest failing pair, or the smallest unreachable vertex when every pair
/// is resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    Resolved,
    Unresolved(Vertex, Vertex),
    Unreachable(Vertex),
}

impl Resolution {
    pub fn is_resolved(&self) -> bool {
        matches!(self, Resolution::Resolved)
    }
}

/// A candidate or confirmed resolving set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Basis {
    /// Sorted, no duplicates.
    pub vertices: Vec<Vertex>,
    pub mode: Mode,
    pub producer: &'static str,
    /// Only ever set by [`verify_basis`].
    pub verified: bool,
}

impl Basis {
    pub fn new(mut vertices: Vec<Vertex>, mode: Mode, producer: &'static str) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Basis {
            vertices,
            mode,
            producer,
            verified: false,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

fn sorted_set(s: &[Vertex]) -> Vec<Vertex> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

/// Vector of distances from each member of `s` (ascending order) to each vertex.
pub fn distance_vectors(g: &DiGraph, s: &[Vertex]) -> Vec<Vec<u32>> {
    let s = sorted_set(s);
    let rows: Vec<Vec<u32>> = s.iter().map(|&x| bfs_distances(g, x)).collect();
    g.vertices()
        .map(|v| rows.iter().map(|r| r[v]).collect())
        .collect()
}

pub fn is_resolving(g: &DiGraph, s: &[Vertex], mode: Mode) -> Resolution {
    classify_vectors(&distance_vectors(g, s), mode)
}

/// Same predicate, reading distances from a precomputed table.
pub fn is_resolving_with(table: &DistanceTable, s: &[Vertex], mode: Mode) -> Resolution {
    let s = sorted_set(s);
    let vectors: Vec<Vec<u32>> = (0..table.n())
        .map(|v| s.iter().map(|&x| table.get(x, v)).collect())
        .collect();
    classify_vectors(&vectors, mode)
}

fn classify_vectors(vectors: &[Vec<u32>], mode: Mode) -> Resolution {
    let mut first_with: HashMap<&[u32], Vertex> = HashMap::with_capacity(vectors.len());
    let mut worst: Option<(Vertex, Vertex)> = None;
    for (v, vec) in vectors.iter().enumerate() {
        match first_with.get(vec.as_slice()) {
            // `u` is the smallest vertex with this vector, `v` the second smallest
            // the first time we collide, so only the first collision per class counts.
            Some(&u) => {
                if worst.is_none_or(|w| (u, v) < w) {
                    worst = Some((u, v));
                }
            }
            None => {
                first_with.insert(vec.as_slice(), v);
            }
        }
    }
    if let Some((u, v)) = worst {
        return Resolution::Unresolved(u, v);
    }
    if mode == Mode::Strong {
        if let Some(v) = vectors.iter().position(|vec| vec.iter().all(|&d| d == INF)) {
            return Resolution::Unreachable(v);
        }
    }
    Resolution::Resolved
}

/// Returns `basis` with `verified` recomputed. The vertex set is left alone.
pub fn verify_basis(g: &DiGraph, basis: &Basis) -> Basis {
    let mut out = basis.clone();
    out.verified = is_resolving(g, &basis.vertices, basis.mode).is_resolved();
    out
}
