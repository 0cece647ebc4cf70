//! Exhaustive minimum resolving set search, the ground truth for every solver.
//!
//! Candidate sizes grow from the number of forced vertices; within a size the
//! subsets are visited in lexicographic order, so the witness is the
//! lexicographically least resolving set of minimum size.

use thiserror::Error;

use crate::distance::{all_pairs_distances, DistanceTable, INF};
use crate::graph::{DiGraph, Vertex};
use crate::resolve::{Basis, Mode};

pub const DEFAULT_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the exhaustive-search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub size: usize,
    pub witness: Basis,
    /// Number of candidate sets tested.
    pub nodes_searched: u64,
}

/// Vertices every resolving set must contain: all sources in strong mode
/// (nothing else reaches them), nothing in weak mode.
pub fn forced_vertices(g: &DiGraph, mode: Mode) -> Vec<Vertex> {
    match mode {
        Mode::Strong => g.sources(),
        Mode::Weak => Vec::new(),
    }
}

pub fn min_resolving_set(g: &DiGraph, mode: Mode) -> Result<OracleResult, OracleError> {
    min_resolving_set_with_cap(g, mode, DEFAULT_CAP)
}

pub fn min_resolving_set_with_cap(
    g: &DiGraph,
    mode: Mode,
    cap: usize,
) -> Result<OracleResult, OracleError> {
    let n = g.n();
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    let checker = Checker::new(all_pairs_distances(g));
    let sources = g.sources();
    let forced = forced_vertices(g, mode);
    let mut is_forced = vec![false; n];
    for &v in &forced {
        is_forced[v] = true;
    }
    let free: Vec<Vertex> = g.vertices().filter(|&v| !is_forced[v]).collect();
    // weak: all sources but at most one must be selected
    let min_k = match mode {
        Mode::Strong => forced.len(),
        Mode::Weak => sources.len().saturating_sub(1),
    };

    let mut nodes = 0u64;
    let mut candidate = Vec::with_capacity(n);
    for k in min_k..=n {
        let extra = k - forced.len();
        let found = for_each_combination(free.len(), extra, |idx| {
            candidate.clear();
            candidate.extend(merge_sorted(&forced, idx.iter().map(|&i| free[i])));
            if mode == Mode::Weak {
                let missing = sources
                    .iter()
                    .filter(|s| candidate.binary_search(s).is_err())
                    .count();
                if missing > 1 {
                    return false;
                }
            }
            nodes += 1;
            checker.resolves(&candidate, mode)
        });
        if found {
            return Ok(OracleResult {
                size: k,
                witness: Basis::new(candidate, mode, "exact"),
                nodes_searched: nodes,
            });
        }
    }
    unreachable!("the full vertex set always resolves")
}

fn merge_sorted(a: &[Vertex], b: impl Iterator<Item = Vertex>) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = a.iter().copied().chain(b).collect();
    out.sort_unstable();
    out
}

/// Calls `f` on every `k`-subset of `0..m` (as sorted index slices) in
/// lexicographic order until it returns `true`.
fn for_each_combination<F>(m: usize, k: usize, mut f: F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    if k > m {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
            if i == 0 {
                return false;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Fast resolving test over a precomputed table. Vectors are packed five bits
/// per coordinate into a `u128` when they fit, otherwise compared as slices.
struct Checker {
    table: DistanceTable,
    packable: bool,
}

const PACK_BITS: u32 = 5;
const PACK_INF: u128 = (1 << PACK_BITS) - 1;

impl Checker {
    fn new(table: DistanceTable) -> Self {
        let packable = u128::from(table.max_finite()) < PACK_INF;
        Checker { table, packable }
    }

    fn resolves(&self, s: &[Vertex], mode: Mode) -> bool {
        let n = self.table.n();
        if self.packable && s.len() as u32 * PACK_BITS <= 128 {
            let all_inf = if s.is_empty() {
                0
            } else {
                u128::MAX >> (128 - s.len() as u32 * PACK_BITS)
            };
            let mut keys: Vec<u128> = (0..n)
                .map(|v| {
                    s.iter().fold(0u128, |acc, &x| {
                        let d = self.table.get(x, v);
                        let code = if d == INF { PACK_INF } else { u128::from(d) };
                        (acc << PACK_BITS) | code
                    })
                })
                .collect();
            if mode == Mode::Strong && keys.contains(&all_inf) {
                return false;
            }
            keys.sort_unstable();
            keys.windows(2).all(|w| w[0] != w[1])
        } else {
            let mut vecs: Vec<Vec<u32>> = (0..n)
                .map(|v| s.iter().map(|&x| self.table.get(x, v)).collect())
                .collect();
            if mode == Mode::Strong && vecs.iter().any(|vec| vec.iter().all(|&d| d == INF)) {
                return false;
            }
            vecs.sort_unstable();
            vecs.windows(2).all(|w| w[0] != w[1])
        }
    }
}
