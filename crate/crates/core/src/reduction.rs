//! The vertex-cover gadget: a DAG built from a planar cubic graph with a
//! rotation system and a perfect matching, plus the two solution maps
//! between vertex covers and resolving sets.

use std::collections::HashMap;

use thiserror::Error;

use crate::distance::all_pairs_distances;
use crate::graph::{DiGraph, Vertex};
use crate::resolve::{is_resolving, Basis, Mode, Resolution};
use crate::scc::scc;

pub const VERTEX_COVER_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {0} does not have degree 3")]
    NotCubic(Vertex),
    #[error("rotation at vertex {0} does not list its neighbours exactly once")]
    BadRotation(Vertex),
    #[error("rotation system traces {faces} faces, a planar embedding needs {expected}")]
    NotPlanar { faces: usize, expected: usize },
    #[error("matching is not a perfect matching of the graph")]
    BadMatching,
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("edge {0}-{1} is not covered")]
    NotACover(Vertex, Vertex),
    #[error("set does not resolve the gadget: {0:?}")]
    NotResolving(Resolution),
    #[error("graph has {n} vertices, above the vertex-cover cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// An undirected cubic graph with a clockwise rotation per vertex and a
/// perfect matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcInstance {
    pub n: usize,
    /// Each edge once, `u < v`.
    pub edges: Vec<(Vertex, Vertex)>,
    pub rotation: Vec<Vec<Vertex>>,
    pub matching: Vec<(Vertex, Vertex)>,
}

fn norm(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

impl VcInstance {
    /// Builds and validates an instance; finds a perfect matching when none is given.
    pub fn new(
        n: usize,
        edges: Vec<(Vertex, Vertex)>,
        rotation: Vec<Vec<Vertex>>,
        matching: Option<Vec<(Vertex, Vertex)>>,
    ) -> Result<Self, ReductionError> {
        let edges: Vec<_> = edges.into_iter().map(|(u, v)| norm(u, v)).collect();
        let mut inst = VcInstance {
            n,
            edges,
            rotation,
            matching: Vec::new(),
        };
        inst.validate_embedding()?;
        inst.matching = match matching {
            Some(m) => m.into_iter().map(|(u, v)| norm(u, v)).collect(),
            None => perfect_matching(n, &inst.edges).ok_or(ReductionError::NoPerfectMatching)?,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn validate(&self) -> Result<(), ReductionError> {
        self.validate_embedding()?;
        let mut covered = vec![0usize; self.n];
        for &(u, v) in &self.matching {
            if !self.edges.contains(&(u, v)) {
                return Err(ReductionError::BadMatching);
            }
            covered[u] += 1;
            covered[v] += 1;
        }
        if covered.iter().any(|&c| c != 1) {
            return Err(ReductionError::BadMatching);
        }
        Ok(())
    }

    /// Cubic, rotation lists consistent, and the rotation traces a planar embedding.
    pub fn validate_embedding(&self) -> Result<(), ReductionError> {
        for v in 0..self.n {
            let nb = self.neighbors(v);
            if nb.len() != 3 {
                return Err(ReductionError::NotCubic(v));
            }
            let mut r = self.rotation.get(v).cloned().unwrap_or_default();
            r.sort_unstable();
            if r != nb {
                return Err(ReductionError::BadRotation(v));
            }
        }
        let faces = self.face_count();
        let expected = self.edges.len() + 2 - self.n;
        if faces != expected {
            return Err(ReductionError::NotPlanar { faces, expected });
        }
        Ok(())
    }

    /// Number of faces traced by the rotation system.
    pub fn face_count(&self) -> usize {
        let pos: HashMap<(Vertex, Vertex), usize> = (0..self.n)
            .flat_map(|v| self.rotation[v].iter().enumerate().map(move |(i, &w)| ((v, w), i)))
            .collect();
        let mut used: HashMap<(Vertex, Vertex), bool> = HashMap::new();
        let mut faces = 0;
        for &(a, b) in &self.edges {
            for start in [(a, b), (b, a)] {
                if used.contains_key(&start) {
                    continue;
                }
                faces += 1;
                let mut dart = start;
                while used.insert(dart, true).is_none() {
                    let (u, v) = dart;
                    let i = pos[&(v, u)];
                    let next = self.rotation[v][(i + 1) % self.rotation[v].len()];
                    dart = (v, next);
                }
            }
        }
        faces
    }

    pub fn is_matched(&self, u: Vertex, v: Vertex) -> bool {
        self.matching.contains(&norm(u, v))
    }

    /// Parses the text format: `n m`, `m` edge lines, a `rotation:` block of
    /// `n` lines, and an optional `matching:` block. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, ReductionError> {
        let lines: Vec<(usize, Vec<&str>)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap().split_whitespace().collect::<Vec<_>>()))
            .filter(|(_, t)| !t.is_empty())
            .collect();
        let num = |line: usize, s: &str| -> Result<usize, ReductionError> {
            s.parse().map_err(|_| ReductionError::Parse {
                line,
                msg: format!("expected a number, found {s:?}"),
            })
        };
        let mut it = lines.iter();
        let (line, head) = it.next().ok_or(ReductionError::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
        if head.len() != 2 {
            return Err(ReductionError::Parse {
                line: *line,
                msg: "expected header `n m`".into(),
            });
        }
        let (n, m) = (num(*line, head[0])?, num(*line, head[1])?);
        let mut edges = Vec::with_capacity(m);
        let mut rotation = Vec::with_capacity(n);
        let mut matching: Option<Vec<(Vertex, Vertex)>> = None;
        let mut section = "edges";
        for (line, toks) in it {
            match toks.as_slice() {
                ["rotation:"] => section = "rotation",
                ["matching:"] => {
                    section = "matching";
                    matching = Some(Vec::new());
                }
                _ => {
                    let ids = toks.iter().map(|t| num(*line, t)).collect::<Result<Vec<_>, _>>()?;
                    if ids.iter().any(|&v| v >= n) {
                        return Err(ReductionError::Parse {
                            line: *line,
                            msg: format!("vertex out of range 0..{n}"),
                        });
                    }
                    match (section, ids.as_slice()) {
                        ("edges", [u, v]) => edges.push((*u, *v)),
                        ("rotation", [_, _, _]) => rotation.push(ids),
                        ("matching", [u, v]) => matching.as_mut().unwrap().push((*u, *v)),
                        _ => {
                            return Err(ReductionError::Parse {
                                line: *line,
                                msg: format!("unexpected line in {section} section"),
                            })
                        }
                    }
                }
            }
        }
        if edges.len() != m {
            return Err(ReductionError::Parse {
                line: 1,
                msg: format!("header promises {m} edges, found {}", edges.len()),
            });
        }
        VcInstance::new(n, edges, rotation, matching)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s.push_str("rotation:\n");
        for r in &self.rotation {
            s.push_str(&format!("{} {} {}\n", r[0], r[1], r[2]));
        }
        s.push_str("matching:\n");
        for &(u, v) in &self.matching {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// Perfect matching by backtracking on the smallest unmatched vertex.
pub fn perfect_matching(n: usize, edges: &[(Vertex, Vertex)]) -> Option<Vec<(Vertex, Vertex)>> {
    fn go(
        n: usize,
        adj: &[Vec<Vertex>],
        mate: &mut [Option<Vertex>],
        out: &mut Vec<(Vertex, Vertex)>,
    ) -> bool {
        let Some(u) = (0..n).find(|&v| mate[v].is_none()) else {
            return true;
        };
        for &v in &adj[u] {
            if mate[v].is_none() {
                mate[u] = Some(v);
                mate[v] = Some(u);
                out.push(norm(u, v));
                if go(n, adj, mate, out) {
                    return true;
                }
                out.pop();
                mate[u] = None;
                mate[v] = None;
            }
        }
        false
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj.iter_mut().for_each(|a| a.sort_unstable());
    let mut mate = vec![None; n];
    let mut out = Vec::new();
    go(n, &adj, &mut mate, &mut out).then(|| {
        out.sort_unstable();
        out
    })
}

/// K_4 and the triangular prism with clockwise rotations of a straight-line
/// drawing.
pub fn builtin_instances() -> Vec<(&'static str, VcInstance)> {
    let k4 = VcInstance::new(
        4,
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        vec![vec![1, 2, 3], vec![2, 0, 3], vec![3, 0, 1], vec![1, 0, 2]],
        Some(vec![(0, 1), (2, 3)]),
    )
    .expect("builtin K4 is valid");
    let prism = VcInstance::new(
        6,
        vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        vec![
            vec![1, 3, 2],
            vec![2, 4, 0],
            vec![0, 5, 1],
            vec![0, 4, 5],
            vec![5, 3, 1],
            vec![3, 4, 2],
        ],
        Some(vec![(0, 3), (1, 4), (2, 5)]),
    )
    .expect("builtin prism is valid");
    vec![("k4", k4), ("prism", prism)]
}

pub fn builtin_instance(name: &str) -> Option<VcInstance> {
    builtin_instances()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, i)| i)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeGadget {
    pub edge: (Vertex, Vertex),
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub du: Vertex,
    pub dv: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingGadget {
    pub edge: (Vertex, Vertex),
    pub f: Vertex,
    pub g: Vertex,
    pub h: Vertex,
    /// Clockwise at `u`: `v, x, y`; at `v`: `u, s, t`.
    pub x: Vertex,
    pub y: Vertex,
    pub s: Vertex,
    pub t: Vertex,
}

/// Vertex naming of the gadget. Original vertices keep their ids; edge
/// gadgets follow in edge order, matching gadgets after them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetMap {
    pub n_original: usize,
    pub edges: Vec<EdgeGadget>,
    pub matched: Vec<MatchingGadget>,
}

impl GadgetMap {
    pub fn edge_gadget(&self, u: Vertex, v: Vertex) -> &EdgeGadget {
        let e = norm(u, v);
        self.edges.iter().find(|g| g.edge == e).expect("edge of the instance")
    }

    pub fn matching_gadget(&self, u: Vertex, v: Vertex) -> Option<&MatchingGadget> {
        let e = norm(u, v);
        self.matched.iter().find(|g| g.edge == e)
    }
}

fn rotated_from(rotation: &[Vertex], first: Vertex) -> [Vertex; 3] {
    let i = rotation.iter().position(|&w| w == first).unwrap();
    [rotation[i], rotation[(i + 1) % 3], rotation[(i + 2) % 3]]
}

pub fn build_gadget(inst: &VcInstance) -> (DiGraph, GadgetMap) {
    let n0 = inst.n;
    let mut next = n0;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let edges: Vec<EdgeGadget> = inst
        .edges
        .iter()
        .map(|&edge| EdgeGadget {
            edge,
            a: fresh(),
            b: fresh(),
            c: fresh(),
            du: fresh(),
            dv: fresh(),
        })
        .collect();
    let matched: Vec<MatchingGadget> = inst
        .matching
        .iter()
        .map(|&(u, v)| {
            let [_, x, y] = rotated_from(&inst.rotation[u], v);
            let [_, s, t] = rotated_from(&inst.rotation[v], u);
            MatchingGadget {
                edge: (u, v),
                f: fresh(),
                g: fresh(),
                h: fresh(),
                x,
                y,
                s,
                t,
            }
        })
        .collect();
    let total = next;
    let map = GadgetMap {
        n_original: n0,
        edges,
        matched,
    };

    let mut arcs = Vec::new();
    for e in &map.edges {
        let (u, v) = e.edge;
        arcs.extend([(e.a, e.b), (e.b, e.c), (e.c, e.du), (e.c, e.dv), (u, e.du), (v, e.dv)]);
    }
    for m in &map.matched {
        let (u, v) = m.edge;
        let c = map.edge_gadget(u, v).c;
        let c_of = |p: Vertex, q: Vertex| map.edge_gadget(p, q).c;
        arcs.extend([
            (m.f, m.g),
            (m.g, c),
            (m.g, m.h),
            (m.h, u),
            (m.h, v),
            (c, c_of(u, m.y)),
            (c, c_of(v, m.s)),
            (m.h, c_of(u, m.x)),
            (m.h, c_of(v, m.t)),
        ]);
    }
    let g = DiGraph::from_arcs(total, arcs).expect("gadget arcs are distinct");
    (g, map)
}

/// Structural facts checked on every gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureReport {
    pub acyclic: bool,
    pub triangle_free: bool,
    pub max_degree: usize,
    pub max_distance: u32,
}

pub fn structure_report(g: &DiGraph) -> StructureReport {
    let acyclic = scc(g).count() == g.n();
    let nbrs: Vec<Vec<Vertex>> = g.vertices().map(|v| g.underlying_neighbors(v)).collect();
    let triangle_free = g.vertices().all(|u| {
        nbrs[u].iter().all(|&v| {
            v < u || nbrs[v].iter().all(|&w| w <= v || nbrs[u].binary_search(&w).is_err())
        })
    });
    let max_degree = g
        .vertices()
        .map(|v| g.in_degree(v) + g.out_degree(v))
        .max()
        .unwrap_or(0);
    let max_distance = all_pairs_distances(g).max_finite();
    StructureReport {
        acyclic,
        triangle_free,
        max_degree,
        max_distance,
    }
}

fn check_cover(inst: &VcInstance, cover: &[Vertex]) -> Result<(), ReductionError> {
    match inst
        .edges
        .iter()
        .find(|(u, v)| !cover.contains(u) && !cover.contains(v))
    {
        Some(&(u, v)) => Err(ReductionError::NotACover(u, v)),
        None => Ok(()),
    }
}

/// `R(C) = C ∪ {a_e} ∪ {f_e}`.
pub fn resolving_from_cover(
    inst: &VcInstance,
    map: &GadgetMap,
    cover: &[Vertex],
) -> Result<Basis, ReductionError> {
    check_cover(inst, cover)?;
    let mut r: Vec<Vertex> = cover.to_vec();
    r.extend(map.edges.iter().map(|e| e.a));
    r.extend(map.matched.iter().map(|m| m.f));
    Ok(Basis::new(r, Mode::Strong, "reduction"))
}

/// `C(R)`: the original vertices in `R`, plus endpoints of edges whose
/// gadgets hold more members of `R` than the forced ones.
pub fn cover_from_resolving(
    g: &DiGraph,
    map: &GadgetMap,
    r: &[Vertex],
) -> Result<Vec<Vertex>, ReductionError> {
    let res = is_resolving(g, r, Mode::Strong);
    if !res.is_resolved() {
        return Err(ReductionError::NotResolving(res));
    }
    let mut in_r = vec![false; g.n()];
    for &v in r {
        in_r[v] = true;
    }
    let mut in_c = vec![false; map.n_original];
    for v in 0..map.n_original {
        in_c[v] = in_r[v];
    }
    let add = |in_c: &mut Vec<bool>, (u, v): (Vertex, Vertex), how_many: usize| {
        if how_many >= 2 {
            in_c[u] = true;
            in_c[v] = true;
        } else if how_many == 1 && !in_c[u] && !in_c[v] {
            in_c[u] = true;
        }
    };
    for e in &map.edges {
        let mut set = vec![e.a, e.b, e.c, e.du, e.dv];
        let (thresh_one, thresh_both) = match map.matching_gadget(e.edge.0, e.edge.1) {
            Some(m) => {
                set.extend([m.f, m.g, m.h]);
                (3, 4)
            }
            None => (2, 3),
        };
        let count = set.iter().filter(|&&x| in_r[x]).count();
        let k = if count >= thresh_both {
            2
        } else if count >= thresh_one {
            1
        } else {
            0
        };
        add(&mut in_c, e.edge, k);
    }
    Ok((0..map.n_original).filter(|&v| in_c[v]).collect())
}

/// Minimum vertex cover by enumeration over increasing sizes.
pub fn brute_force_vertex_cover(
    n: usize,
    edges: &[(Vertex, Vertex)],
) -> Result<Vec<Vertex>, ReductionError> {
    if n > VERTEX_COVER_CAP {
        return Err(ReductionError::CapExceeded {
            n,
            cap: VERTEX_COVER_CAP,
        });
    }
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let covers = |m: u32| edges.iter().all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1);
    let best = masks.into_iter().find(|&m| covers(m)).unwrap();
    Ok((0..n).filter(|&v| best >> v & 1 == 1).collect())
}

/// For each edge, the check that `V ∖ {a_e, b_e}` fails to resolve (and
/// likewise `V ∖ {f_e, g_e}` per matching edge). Every entry must be
/// unresolved for the lower bound `MD ≥ |E| + |M|` to hold.
pub fn forced_pairs(g: &DiGraph, map: &GadgetMap) -> Vec<((Vertex, Vertex), Resolution)> {
    let pairs = map
        .edges
        .iter()
        .map(|e| (e.a, e.b))
        .chain(map.matched.iter().map(|m| (m.f, m.g)));
    pairs
        .map(|(p, q)| {
            let rest: Vec<Vertex> = g.vertices().filter(|&v| v != p && v != q).collect();
            ((p, q), is_resolving(g, &rest, Mode::Strong))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_valid() {
        for (_, inst) in builtin_instances() {
            inst.validate().unwrap();
            assert_eq!(inst.face_count(), inst.edges.len() + 2 - inst.n);
        }
        assert_eq!(builtin_instance("prism").unwrap().matching.len(), 3);
    }

    #[test]
    fn non_planar_rotation_rejected() {
        let mut k4 = builtin_instance("k4").unwrap();
        k4.rotation[0] = vec![1, 3, 2];
        assert!(matches!(k4.validate(), Err(ReductionError::NotPlanar { .. })));
    }

    #[test]
    fn gadget_counts() {
        let k4 = builtin_instance("k4").unwrap();
        let (g, _) = build_gadget(&k4);
        assert_eq!((g.n(), g.arc_count()), (40, 54));
        let (g, _) = build_gadget(&builtin_instance("prism").unwrap());
        assert_eq!((g.n(), g.arc_count()), (60, 6 * 9 + 9 * 3));
    }

    #[test]
    fn gadget_structure() {
        for (_, inst) in builtin_instances() {
            let (g, _) = build_gadget(&inst);
            let r = structure_report(&g);
            assert!(r.acyclic && r.triangle_free);
            assert!(r.max_degree <= 6);
            assert!(r.max_distance <= 4);
        }
    }

    #[test]
    fn vertex_covers() {
        let k4 = builtin_instance("k4").unwrap();
        assert_eq!(brute_force_vertex_cover(4, &k4.edges).unwrap().len(), 3);
        let p = builtin_instance("prism").unwrap();
        assert_eq!(brute_force_vertex_cover(6, &p.edges).unwrap().len(), 4);
        let c4 = [(0, 1), (1, 2), (2, 3), (0, 3)];
        assert_eq!(brute_force_vertex_cover(4, &c4).unwrap().len(), 2);
        assert!(brute_force_vertex_cover(21, &[]).is_err());
    }

    #[test]
    fn round_trip_k4() {
        let k4 = builtin_instance("k4").unwrap();
        let (g, map) = build_gadget(&k4);
        let r = resolving_from_cover(&k4, &map, &[0, 1, 2]).unwrap();
        assert_eq!(r.len(), 11);
        assert!(is_resolving(&g, &r.vertices, Mode::Strong).is_resolved());
        let c = cover_from_resolving(&g, &map, &r.vertices).unwrap();
        assert!(c.len() <= 3);
        check_cover(&k4, &c).unwrap();
        assert_eq!(
            resolving_from_cover(&k4, &map, &[0, 1]),
            Err(ReductionError::NotACover(2, 3))
        );
    }

    #[test]
    fn extra_member_keeps_cover() {
        let k4 = builtin_instance("k4").unwrap();
        let (g, map) = build_gadget(&k4);
        let mut r = resolving_from_cover(&k4, &map, &[0, 1, 2]).unwrap().vertices;
        r.push(map.edges[5].b);
        let c = cover_from_resolving(&g, &map, &r).unwrap();
        check_cover(&k4, &c).unwrap();
        assert!(c.len() <= r.len() - 6 - 2);
    }

    #[test]
    fn forced_pairs_hold() {
        let k4 = builtin_instance("k4").unwrap();
        let (g, map) = build_gadget(&k4);
        let checks = forced_pairs(&g, &map);
        assert_eq!(checks.len(), 8);
        assert!(checks.iter().all(|(_, r)| !r.is_resolved()));
    }

    #[test]
    fn text_round_trip() {
        let p = builtin_instance("prism").unwrap();
        assert_eq!(VcInstance::parse(&p.to_text()).unwrap(), p);
        let mut no_matching = p.to_text();
        no_matching.truncate(no_matching.find("matching:").unwrap());
        let q = VcInstance::parse(&no_matching).unwrap();
        q.validate().unwrap();
        assert!(matches!(
            VcInstance::parse("4 1\n0 1\n"),
            Err(ReductionError::NotCubic(0))
        ));
        assert!(matches!(
            VcInstance::parse("4 x\n"),
            Err(ReductionError::Parse { line: 1, .. })
        ));
    }
}
