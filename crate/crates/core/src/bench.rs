//! Scaling runs for the linear-time solvers on long, path-like instances.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::distance::{bfs_distances, multi_source_bfs, reverse_bfs_distances, INF};
use crate::ditree::metric_basis_ditree;
use crate::graph::{DiGraph, Vertex};
use crate::unicyclic::metric_basis_unicyclic;

/// Above this size only a sample of distance vectors is checked.
pub const FULL_VERIFY_LIMIT: usize = 100_000;
pub const VERIFY_SAMPLE: usize = 64;

pub const CSV_HEADER: &str = "suite,n,seed,solve_ms,basis_size,verified";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchSuite {
    DiTree,
    Unicyclic,
}

impl BenchSuite {
    pub fn name(self) -> &'static str {
        match self {
            BenchSuite::DiTree => "ditree",
            BenchSuite::Unicyclic => "unicyclic",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error("unknown suite {0:?} (expected ditree or unicyclic)")]
    UnknownSuite(String),
    #[error("solver failed on n = {n}: {msg}")]
    Solver { n: usize, msg: String },
}

impl std::str::FromStr for BenchSuite {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ditree" => Ok(BenchSuite::DiTree),
            "unicyclic" => Ok(BenchSuite::Unicyclic),
            _ => Err(BenchError::UnknownSuite(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub suite: &'static str,
    pub n: usize,
    pub seed: u64,
    pub solve_ms: f64,
    pub basis_size: usize,
    pub verified: bool,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{:.3},{},{}",
            self.suite, self.n, self.seed, self.solve_ms, self.basis_size, self.verified
        )
    }
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        writeln!(out, "{}", r.csv_row()).unwrap();
    }
    out
}

/// Attach vertex `i` to `i - 1` with probability 0.9, else to a uniform
/// earlier vertex in `lo..i`.
fn path_heavy_edges(rng: &mut ChaCha8Rng, lo: usize, n: usize, out: &mut Vec<(Vertex, Vertex)>) {
    for i in lo.max(1)..n {
        let parent = if rng.gen_bool(0.9) { i - 1 } else { rng.gen_range(0..i) };
        out.push((parent, i));
    }
}

fn orient(rng: &mut ChaCha8Rng, edges: &[(Vertex, Vertex)], digon_prob: f64) -> Vec<(Vertex, Vertex)> {
    let mut arcs = Vec::with_capacity(edges.len() * 2);
    for &(u, v) in edges {
        if rng.gen_bool(digon_prob) {
            arcs.extend([(u, v), (v, u)]);
        } else if rng.gen_bool(0.5) {
            arcs.push((u, v));
        } else {
            arcs.push((v, u));
        }
    }
    arcs
}

/// A di-tree whose underlying tree is mostly one long path; 30% of edges are digons.
pub fn path_heavy_ditree(n: usize, seed: u64) -> DiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(n);
    path_heavy_edges(&mut rng, 1, n, &mut edges);
    let arcs = orient(&mut rng, &edges, 0.3);
    DiGraph::from_arcs(n, arcs).expect("generated arcs are simple")
}

/// An oriented unicyclic graph: a cycle on `max(3, n / 100)` vertices with
/// long path-like trees hanging from it.
pub fn path_heavy_unicyclic(n: usize, seed: u64) -> DiGraph {
    let n = n.max(3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = (n / 100).max(3);
    let mut edges: Vec<(Vertex, Vertex)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    path_heavy_edges(&mut rng, len, n, &mut edges);
    let arcs = orient(&mut rng, &edges, 0.0);
    DiGraph::from_arcs(n, arcs).expect("generated arcs are simple")
}

pub fn bench_instance(suite: BenchSuite, n: usize, seed: u64) -> DiGraph {
    match suite {
        BenchSuite::DiTree => path_heavy_ditree(n, seed),
        BenchSuite::Unicyclic => path_heavy_unicyclic(n, seed),
    }
}

/// Checks that every vertex is reached from `basis` and that the distance
/// vectors of `sample` vertices are pairwise distinct. Linear per sampled vertex.
pub fn sampled_verify(g: &DiGraph, basis: &[Vertex], sample: &[Vertex]) -> bool {
    if multi_source_bfs(g, basis).contains(&INF) {
        return false;
    }
    let mut seen = HashSet::with_capacity(sample.len());
    sample.iter().all(|&v| {
        let to_v = reverse_bfs_distances(g, v);
        seen.insert(basis.iter().map(|&b| to_v[b]).collect::<Vec<u32>>())
    })
}

/// Exact strong-resolving check in `O(n)` memory: one BFS per basis vertex
/// folds each distance into a per-vertex fingerprint, and only vertices with
/// equal fingerprints are compared on their actual vectors.
pub fn streaming_verify(g: &DiGraph, basis: &[Vertex]) -> bool {
    let n = g.n();
    let mut fp = vec![(0u64, 0u64); n];
    let mut reached = vec![false; n];
    for &b in basis {
        let d = bfs_distances(g, b);
        for v in 0..n {
            reached[v] |= d[v] != INF;
            let x = d[v] as u64;
            let (h1, h2) = fp[v];
            fp[v] = (
                (h1 ^ x).wrapping_mul(0x9e37_79b9_7f4a_7c15).rotate_left(29),
                (h2.wrapping_add(x)).wrapping_mul(0xc2b2_ae3d_27d4_eb4f).rotate_left(31),
            );
        }
    }
    if reached.contains(&false) {
        return false;
    }
    let mut groups: HashMap<(u64, u64), Vec<Vertex>> = HashMap::with_capacity(n);
    for (v, &h) in fp.iter().enumerate() {
        groups.entry(h).or_default().push(v);
    }
    groups.values().filter(|m| m.len() > 1).all(|members| {
        let mut exact = HashSet::with_capacity(members.len());
        members.iter().all(|&v| {
            let to_v = reverse_bfs_distances(g, v);
            exact.insert(basis.iter().map(|&b| to_v[b]).collect::<Vec<u32>>())
        })
    })
}

/// Runs one cell. Verification is full up to [`FULL_VERIFY_LIMIT`] vertices
/// (or always with `full_verify`), sampled above it.
pub fn run_cell(suite: BenchSuite, n: usize, seed: u64, full_verify: bool) -> Result<BenchRecord, BenchError> {
    let g = bench_instance(suite, n, seed);
    let start = Instant::now();
    let basis = match suite {
        BenchSuite::DiTree => metric_basis_ditree(&g).map_err(|e| e.to_string()),
        BenchSuite::Unicyclic => metric_basis_unicyclic(&g).map_err(|e| e.to_string()),
    }
    .map_err(|msg| BenchError::Solver { n, msg })?;
    let solve_ms = start.elapsed().as_secs_f64() * 1e3;
    let verified = if full_verify || n <= FULL_VERIFY_LIMIT {
        streaming_verify(&g, &basis.vertices)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let sample: HashSet<Vertex> = (0..VERIFY_SAMPLE).map(|_| rng.gen_range(0..n)).collect();
        let mut sample: Vec<Vertex> = sample.into_iter().collect();
        sample.sort_unstable();
        sampled_verify(&g, &basis.vertices, &sample)
    };
    Ok(BenchRecord {
        suite: suite.name(),
        n,
        seed,
        solve_ms,
        basis_size: basis.len(),
        verified,
    })
}

pub fn run_suite(
    suite: BenchSuite,
    sizes: &[usize],
    seed: u64,
    full_verify: bool,
) -> Result<Vec<BenchRecord>, BenchError> {
    sizes.iter().map(|&n| run_cell(suite, n, seed, full_verify)).collect()
}
