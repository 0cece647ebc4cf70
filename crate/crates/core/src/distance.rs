//! Hop distances. `INF` marks "not reachable" and compares above every finite value.

use std::collections::VecDeque;

use crate::graph::{DiGraph, Vertex};

pub const INF: u32 = u32::MAX;

/// Distances from `source` along arc directions.
pub fn bfs_distances(g: &DiGraph, source: Vertex) -> Vec<u32> {
    bfs(g.n(), source, |v| g.out_neighbors(v))
}

/// Distances *to* `target`, i.e. entry `v` is `dist(v, target)`.
pub fn reverse_bfs_distances(g: &DiGraph, target: Vertex) -> Vec<u32> {
    bfs(g.n(), target, |v| g.in_neighbors(v))
}

/// Distance from the nearest of `sources`; `INF` where none reaches.
pub fn multi_source_bfs(g: &DiGraph, sources: &[Vertex]) -> Vec<u32> {
    let mut dist = vec![INF; g.n()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s] != 0 {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    drain(&mut dist, &mut queue, |v| g.out_neighbors(v));
    dist
}

fn bfs<'a, F>(n: usize, source: Vertex, next: F) -> Vec<u32>
where
    F: Fn(Vertex) -> &'a [Vertex],
{
    let mut dist = vec![INF; n];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    drain(&mut dist, &mut queue, next);
    dist
}

fn drain<'a, F>(dist: &mut [u32], queue: &mut VecDeque<Vertex>, next: F)
where
    F: Fn(Vertex) -> &'a [Vertex],
{
    while let Some(v) = queue.pop_front() {
        let d = dist[v] + 1;
        for &w in next(v) {
            if dist[w] == INF {
                dist[w] = d;
                queue.push_back(w);
            }
        }
    }
}

/// Row-major all-pairs table: `get(u, v)` is `dist(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    data: Vec<u32>,
}

impl DistanceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite off-diagonal distance, or 0 when there is none.
    pub fn max_finite(&self) -> u32 {
        self.data.iter().copied().filter(|&d| d != INF).max().unwrap_or(0)
    }
}

/// One BFS per source.
pub fn all_pairs_distances(g: &DiGraph) -> DistanceTable {
    let n = g.n();
    let mut data = Vec::with_capacity(n * n);
    for s in g.vertices() {
        data.extend(bfs_distances(g, s));
    }
    DistanceTable { n, data }
}
