//! Bottom-up profile DP over a modular decomposition.
//!
//! For every nontrivial factor `H` the table maps a profile `p` to the
//! smallest `W ⊆ V(H)` that resolves `V(H)` (distances taken in the whole
//! graph) and whose `d`-constant vertices are exactly those flagged in `p`.

use std::collections::HashMap;

use thiserror::Error;

use super::decomposition::{modular_decomposition, DecompositionNode};
use crate::distance::{all_pairs_distances, DistanceTable, INF};
use crate::graph::{DiGraph, Vertex};
use crate::resolve::{Basis, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModwidthError {
    #[error("graph has no vertices")]
    Empty,
    #[error("representatives of children {0} and {1} disagree on their distance")]
    RepresentativeMismatch(usize, usize),
    #[error("largest finite distance {0} exceeds the profile capacity of 63")]
    DistanceTooLarge(u32),
}

/// Flags `p_1..p_t, p_inf` packed into a bitmask: bit `d - 1` for finite `d`,
/// bit `t` for infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    pub bits: u64,
    pub t: u32,
}

impl Profile {
    pub fn empty(t: u32) -> Self {
        Profile { bits: 0, t }
    }

    fn bit(&self, d: u32) -> u64 {
        if d == INF {
            1 << self.t
        } else {
            debug_assert!((1..=self.t).contains(&d));
            1 << (d - 1)
        }
    }

    pub fn get(&self, d: u32) -> bool {
        self.bits & self.bit(d) != 0
    }

    pub fn set(&mut self, d: u32) {
        self.bits |= self.bit(d);
    }

    pub fn has_infinite(&self) -> bool {
        self.get(INF)
    }

    /// Flagged distances in increasing order, infinity last.
    pub fn distances(&self) -> Vec<u32> {
        (1..=self.t).chain(std::iter::once(INF)).filter(|&d| self.get(d)).collect()
    }
}

/// Table of one factor: profile → (minimum size, witness).
#[derive(Debug, Clone, Default)]
pub struct DpTable {
    pub entries: HashMap<Profile, (usize, Vec<Vertex>)>,
}

impl DpTable {
    fn offer(&mut self, p: Profile, witness: Vec<Vertex>) {
        match self.entries.get(&p) {
            Some((size, _)) if *size <= witness.len() => {}
            _ => {
                self.entries.insert(p, (witness.len(), witness));
            }
        }
    }

    /// Entries sorted by profile, for deterministic enumeration.
    pub fn sorted(&self) -> Vec<(Profile, usize, &[Vertex])> {
        let mut v: Vec<_> = self.entries.iter().map(|(p, (s, w))| (*p, *s, w.as_slice())).collect();
        v.sort_by_key(|e| (e.1, e.0));
        v
    }
}

#[derive(Debug, Clone)]
pub struct ModwidthResult {
    pub size: usize,
    pub basis: Basis,
    pub width: usize,
    pub root_profiles: usize,
}

/// Distances between the children of `node`, read off representatives.
/// Every pair of representatives is cross-checked against the full modules.
pub fn quotient_distances(
    table: &DistanceTable,
    node: &DecompositionNode,
) -> Result<Vec<Vec<u32>>, ModwidthError> {
    let s = node.children.len();
    let mut d = vec![vec![0u32; s]; s];
    for i in 0..s {
        for j in 0..s {
            if i == j {
                continue;
            }
            let a = &node.children[i].vertices;
            let b = &node.children[j].vertices;
            let rep = table.get(a[0], b[0]);
            for &x in a {
                for &y in b {
                    if table.get(x, y) != rep {
                        return Err(ModwidthError::RepresentativeMismatch(i, j));
                    }
                }
            }
            d[i][j] = rep;
        }
    }
    Ok(d)
}

/// Profile of `w` inside module `x`: `p_d` is set when some vertex of `x`
/// is at distance exactly `d` from every member of `w` (`d >= 1`).
pub fn profile_of(table: &DistanceTable, x: &[Vertex], w: &[Vertex], t: u32) -> Profile {
    let mut p = Profile::empty(t);
    if w.is_empty() {
        return p;
    }
    for &v in x {
        let d = table.get(w[0], v);
        if d != 0 && w.iter().all(|&u| table.get(u, v) == d) {
            p.set(d);
        }
    }
    p
}

/// Conditions (a)-(d) for one selection. `trivial` and `nontrivial` list
/// child indices; `in_i` marks the selected trivial children; `profiles[i]`
/// is the chosen profile of nontrivial child `i`. Returns the induced parent
/// profile when all conditions hold.
pub fn check_conditions(
    d: &[Vec<u32>],
    trivial: &[usize],
    nontrivial: &[usize],
    in_i: &[bool],
    profiles: &[Option<Profile>],
    t: u32,
) -> Option<Profile> {
    let s = d.len();
    let in_z: Vec<bool> = (0..s).map(|i| in_i[i] || profiles[i].is_some()).collect();
    let z: Vec<usize> = (0..s).filter(|&i| in_z[i]).collect();
    let separates = |a: usize, b: usize, skip: &[usize]| {
        z.iter().any(|&k| !skip.contains(&k) && d[k][a] != d[k][b])
    };

    // (a)
    for a in 0..s {
        for b in a + 1..s {
            if !separates(a, b, &[]) {
                return None;
            }
        }
    }
    // (b)
    for &i in nontrivial {
        let p = profiles[i].unwrap();
        for dd in p.distances() {
            for &j in trivial {
                if !in_i[j] && d[i][j] == dd && !separates(i, j, &[i]) {
                    return None;
                }
            }
        }
    }
    // (c)
    for &i in nontrivial {
        for &j in nontrivial {
            if i == j {
                continue;
            }
            let (pi, pj) = (profiles[i].unwrap(), profiles[j].unwrap());
            for d1 in pi.distances() {
                for d2 in pj.distances() {
                    if d[i][j] == d1 && d[j][i] == d2 && !separates(i, j, &[i, j]) {
                        return None;
                    }
                }
            }
        }
    }
    // (d)
    let mut parent = Profile::empty(t);
    for &i in trivial {
        if in_i[i] {
            continue;
        }
        if let Some(&k0) = z.first() {
            let dd = d[k0][i];
            if z.iter().all(|&k| d[k][i] == dd) {
                parent.set(dd);
            }
        }
    }
    for &i in nontrivial {
        let others: Vec<usize> = z.iter().copied().filter(|&k| k != i).collect();
        for dd in profiles[i].unwrap().distances() {
            if others.iter().all(|&k| d[k][i] == dd) {
                parent.set(dd);
            }
        }
    }
    Some(parent)
}

/// Table of `node` from the tables of its nontrivial children
/// (`child_tables[i]` is `None` for singleton children).
pub fn dp_factor(
    table: &DistanceTable,
    node: &DecompositionNode,
    child_tables: &[Option<DpTable>],
    t: u32,
) -> Result<DpTable, ModwidthError> {
    let d = quotient_distances(table, node)?;
    let s = node.children.len();
    let trivial: Vec<usize> = (0..s).filter(|&i| child_tables[i].is_none()).collect();
    let nontrivial: Vec<usize> = (0..s).filter(|&i| child_tables[i].is_some()).collect();
    let options: Vec<Vec<(Profile, usize, &[Vertex])>> = nontrivial
        .iter()
        .map(|&i| child_tables[i].as_ref().unwrap().sorted())
        .collect();

    let mut out = DpTable::default();
    if options.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    let h = trivial.len();
    let mut in_i = vec![false; s];
    let mut profiles: Vec<Option<Profile>> = vec![None; s];
    let mut choice = vec![0usize; nontrivial.len()];
    for mask in 0u64..(1u64 << h) {
        for (bit, &j) in trivial.iter().enumerate() {
            in_i[j] = mask >> bit & 1 == 1;
        }
        choice.iter_mut().for_each(|c| *c = 0);
        loop {
            for (slot, &i) in nontrivial.iter().enumerate() {
                profiles[i] = Some(options[slot][choice[slot]].0);
            }
            if let Some(p) = check_conditions(&d, &trivial, &nontrivial, &in_i, &profiles, t) {
                let mut witness: Vec<Vertex> = trivial
                    .iter()
                    .filter(|&&j| in_i[j])
                    .map(|&j| node.children[j].representative())
                    .collect();
                for (slot, &c) in choice.iter().enumerate() {
                    witness.extend_from_slice(options[slot][c].2);
                }
                witness.sort_unstable();
                out.offer(p, witness);
            }
            // next combination of child profiles
            let mut slot = 0;
            while slot < choice.len() {
                choice[slot] += 1;
                if choice[slot] < options[slot].len() {
                    break;
                }
                choice[slot] = 0;
                slot += 1;
            }
            if slot == choice.len() {
                break;
            }
        }
    }
    Ok(out)
}

fn solve_node(
    table: &DistanceTable,
    node: &DecompositionNode,
    t: u32,
) -> Result<Option<DpTable>, ModwidthError> {
    if node.is_leaf() {
        return Ok(None);
    }
    let child_tables = node
        .children
        .iter()
        .map(|c| solve_node(table, c, t))
        .collect::<Result<Vec<_>, _>>()?;
    dp_factor(table, node, &child_tables, t).map(Some)
}

/// Strong or weak metric dimension with a witness basis.
pub fn metric_dimension_modwidth(g: &DiGraph, mode: Mode) -> Result<ModwidthResult, ModwidthError> {
    let root = modular_decomposition(g).ok_or(ModwidthError::Empty)?;
    let width = root.width();
    if g.n() == 1 {
        let vertices = match mode {
            Mode::Strong => vec![0],
            Mode::Weak => Vec::new(),
        };
        return Ok(ModwidthResult {
            size: vertices.len(),
            basis: Basis::new(vertices, mode, "modwidth"),
            width,
            root_profiles: 0,
        });
    }
    let table = all_pairs_distances(g);
    let max = table.max_finite();
    if max > 63 {
        return Err(ModwidthError::DistanceTooLarge(max));
    }
    let t = max.max(1);
    let dp = solve_node(&table, &root, t)?.expect("root with n >= 2 is not a leaf");
    let best = dp
        .sorted()
        .into_iter()
        .find(|(p, _, _)| mode == Mode::Weak || !p.has_infinite())
        .map(|(_, _, w)| w.to_vec())
        .unwrap_or_else(|| g.vertices().collect());
    Ok(ModwidthResult {
        size: best.len(),
        basis: Basis::new(best, mode, "modwidth"),
        width,
        root_profiles: dp.entries.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::min_resolving_set;
    use crate::resolve::is_resolving;

    fn g(n: usize, arcs: &[(usize, usize)]) -> DiGraph {
        DiGraph::from_arcs(n, arcs.iter().copied()).unwrap()
    }

    fn bidirected_clique(n: usize) -> DiGraph {
        let arcs: Vec<_> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        g(n, &arcs)
    }

    #[test]
    fn profile_examples() {
        let digon = g(2, &[(0, 1), (1, 0)]);
        let t = all_pairs_distances(&digon);
        let p = profile_of(&t, &[0, 1], &[0], 1);
        assert_eq!(p.distances(), vec![1]);
        assert!(profile_of(&t, &[0, 1], &[0, 1], 1).distances().is_empty());

        // 0 -> 1 -> 2, module {0,1,2}, W = {1}: 0 unreachable, 2 at distance 1
        let path = g(3, &[(0, 1), (1, 2)]);
        let t = all_pairs_distances(&path);
        assert_eq!(profile_of(&t, &[0, 1, 2], &[1], 2).distances(), vec![1, INF]);
    }

    #[test]
    fn conditions_on_bidirected_triangle() {
        let k3 = bidirected_clique(3);
        let t = all_pairs_distances(&k3);
        let root = modular_decomposition(&k3).unwrap();
        let d = quotient_distances(&t, &root).unwrap();
        let trivial = [0, 1, 2];
        let none = [None, None, None];
        // the unselected vertex sits at distance 1 from both selected ones
        let p = check_conditions(&d, &trivial, &[], &[true, true, false], &none, 1).unwrap();
        assert_eq!(p.distances(), vec![1]);
        assert!(check_conditions(&d, &trivial, &[], &[true, false, false], &none, 1).is_none());
    }

    #[test]
    fn condition_c_first_disjunct() {
        // two nontrivial children at distance 2 both ways; flags at distance 1
        let d = vec![vec![0, 2], vec![2, 0]];
        let mut p = Profile::empty(2);
        p.set(1);
        let profiles = [Some(p), Some(p)];
        assert!(check_conditions(&d, &[], &[0, 1], &[false, false], &profiles, 2).is_some());
        let d = vec![vec![0, 1], vec![1, 0]];
        assert!(check_conditions(&d, &[], &[0, 1], &[false, false], &profiles, 2).is_none());
    }

    #[test]
    fn digon_factor_table() {
        let digon = g(2, &[(0, 1), (1, 0)]);
        let t = all_pairs_distances(&digon);
        let root = modular_decomposition(&digon).unwrap();
        let tab = dp_factor(&t, &root, &[None, None], 1).unwrap();
        let mut p = Profile::empty(1);
        p.set(1);
        assert_eq!(tab.entries.get(&p).map(|e| e.0), Some(1));
    }

    #[test]
    fn known_dimensions() {
        let cases: Vec<(DiGraph, usize)> = vec![
            (bidirected_clique(3), 2),
            (bidirected_clique(4), 3),
            (g(4, &[(0, 1), (1, 2), (2, 3)]), 1),
            (g(4, &[(0, 1), (0, 2), (0, 3)]), 3),
        ];
        for (h, want) in cases {
            let r = metric_dimension_modwidth(&h, Mode::Strong).unwrap();
            assert_eq!(r.size, want);
            assert!(is_resolving(&h, &r.basis.vertices, Mode::Strong).is_resolved());
        }
        let path = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(metric_dimension_modwidth(&path, Mode::Strong).unwrap().basis.vertices, vec![0]);
    }

    #[test]
    fn single_vertex() {
        let k1 = DiGraph::empty(1);
        assert_eq!(metric_dimension_modwidth(&k1, Mode::Strong).unwrap().size, 1);
        assert_eq!(metric_dimension_modwidth(&k1, Mode::Weak).unwrap().size, 0);
    }

    #[test]
    fn matches_oracle_on_small_random() {
        use crate::generate::{random_instance, InstanceKind};
        for seed in 0..150 {
            let n = 2 + seed as usize % 6;
            let h = random_instance(InstanceKind::Digraph { arc_prob: 0.4 }, n, seed).unwrap();
            for mode in [Mode::Strong, Mode::Weak] {
                let r = metric_dimension_modwidth(&h, mode).unwrap();
                assert_eq!(r.size, min_resolving_set(&h, mode).unwrap().size, "seed {seed} {mode}");
                assert!(is_resolving(&h, &r.basis.vertices, mode).is_resolved());
            }
        }
    }
}
