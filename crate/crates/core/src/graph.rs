//! Simple digraph on dense vertex ids, plus the edge-list and DOT text formats.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

/// Vertices are dense indices `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate arc {u} -> {v}")]
    DuplicateArc { line: usize, u: usize, v: usize },
    #[error("expected {expected} arcs, found {found}")]
    ArcCount { expected: usize, found: usize },
}

/// A digraph without self-loops or parallel arcs. Digons are two opposite arcs.
///
/// Out- and in-adjacency lists are kept sorted, so iteration order is
/// deterministic and `has_arc` can binary search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
    arc_count: usize,
}

impl DiGraph {
    /// Graph with `n` vertices and no arcs.
    pub fn empty(n: usize) -> Self {
        DiGraph {
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            arc_count: 0,
        }
    }

    /// Builds a graph from an arc list. Errors carry the 1-based position of
    /// the offending arc in `arcs` as `line`.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = DiGraph::empty(n);
        let mut seen = HashSet::new();
        for (idx, (u, v)) in arcs.into_iter().enumerate() {
            g.push_arc(idx + 1, u, v, &mut seen)?;
        }
        g.sort_adjacency();
        Ok(g)
    }

    fn push_arc(
        &mut self,
        line: usize,
        u: Vertex,
        v: Vertex,
        seen: &mut HashSet<(Vertex, Vertex)>,
    ) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { line, vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        if !seen.insert((u, v)) {
            return Err(GraphError::DuplicateArc { line, u, v });
        }
        self.out_adj[u].push(v);
        self.in_adj[v].push(u);
        self.arc_count += 1;
        Ok(())
    }

    fn sort_adjacency(&mut self) {
        for list in self.out_adj.iter_mut().chain(self.in_adj.iter_mut()) {
            list.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.out_adj.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_adj[v].len()
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    /// All arcs in `(tail, head)` lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    /// Vertices with in-degree zero, ascending.
    pub fn sources(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.in_degree(v) == 0).collect()
    }

    pub fn has_digon(&self) -> bool {
        self.arcs().any(|(u, v)| u < v && self.has_arc(v, u))
    }

    /// Neighbours in the underlying simple graph (digons collapsed), ascending.
    pub fn underlying_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.out_adj[v]
            .iter()
            .chain(self.in_adj[v].iter())
            .copied()
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of edges in the underlying simple graph.
    pub fn underlying_edge_count(&self) -> usize {
        self.arcs()
            .filter(|&(u, v)| u < v || !self.has_arc(v, u))
            .count()
    }

    /// Weak connectivity. The empty graph counts as disconnected.
    pub fn is_weakly_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.out_adj[v].iter().chain(self.in_adj[v].iter()) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[Vertex]) -> DiGraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = DiGraph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.out_adj[v] {
                if index[w] != usize::MAX {
                    g.out_adj[i].push(index[w]);
                    g.in_adj[index[w]].push(i);
                    g.arc_count += 1;
                }
            }
        }
        g.sort_adjacency();
        g
    }

    /// Parses the edge-list format: `#` comment lines, a header `n m`, then
    /// exactly `m` arc lines `u v`.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(GraphError::Malformed {
            line: 1,
            msg: "missing header `n m`".into(),
        })?;
        let [n, m] = parse_pair(hline, header)?;

        let mut g = DiGraph::empty(n);
        let mut seen = HashSet::with_capacity(m);
        let mut found = 0;
        for (line, l) in lines {
            if found == m {
                return Err(GraphError::Malformed {
                    line,
                    msg: format!("more than {m} arc lines"),
                });
            }
            let [u, v] = parse_pair(line, l)?;
            g.push_arc(line, u, v, &mut seen)?;
            found += 1;
        }
        if found != m {
            return Err(GraphError::ArcCount { expected: m, found });
        }
        g.sort_adjacency();
        Ok(g)
    }

    /// Serializes to the edge-list format, arcs in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::with_capacity(16 + 12 * self.arc_count);
        let _ = writeln!(s, "{} {}", self.n(), self.arc_count);
        for (u, v) in self.arcs() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    /// DOT export: every vertex declared, arcs as directed edges.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph G {\n");
        for v in self.vertices() {
            let _ = writeln!(s, "  {v};");
        }
        for (u, v) in self.arcs() {
            let _ = writeln!(s, "  {u} -> {v};");
        }
        s.push_str("}\n");
        s
    }

    /// Reads back the DOT subset written by [`DiGraph::to_dot`]: numeric vertex
    /// statements and `u -> v` edge statements.
    pub fn from_dot(text: &str) -> Result<Self, GraphError> {
        let mut n = 0;
        let mut arcs = Vec::new();
        let mut lines_of = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = raw.trim().trim_end_matches(';').trim();
            if l.is_empty() || l.starts_with("//") || l.starts_with("digraph") || l == "}" {
                continue;
            }
            let parse = |tok: &str| {
                tok.trim().parse::<usize>().map_err(|_| GraphError::Malformed {
                    line,
                    msg: format!("expected vertex id, got `{}`", tok.trim()),
                })
            };
            if let Some((a, b)) = l.split_once("->") {
                let (u, v) = (parse(a)?, parse(b)?);
                n = n.max(u + 1).max(v + 1);
                arcs.push((u, v));
                lines_of.push(line);
            } else {
                n = n.max(parse(l)? + 1);
            }
        }
        let mut g = DiGraph::empty(n);
        let mut seen = HashSet::new();
        for ((u, v), line) in arcs.into_iter().zip(lines_of) {
            g.push_arc(line, u, v, &mut seen)?;
        }
        g.sort_adjacency();
        Ok(g)
    }
}

fn parse_pair(line: usize, l: &str) -> Result<[usize; 2], GraphError> {
    let toks: Vec<&str> = l.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(GraphError::Malformed {
            line,
            msg: format!("expected two integers, got `{l}`"),
        });
    }
    let mut out = [0; 2];
    for (slot, tok) in out.iter_mut().zip(&toks) {
        *slot = tok.parse().map_err(|_| GraphError::Malformed {
            line,
            msg: format!("`{tok}` is not a non-negative integer"),
        })?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = DiGraph::from_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parses_digon() {
        let g = DiGraph::from_edge_list("2 2\n0 1\n1 0").unwrap();
        assert!(g.has_arc(0, 1) && g.has_arc(1, 0));
        assert!(g.has_digon());
        assert_eq!(g.underlying_edge_count(), 1);
    }

    #[test]
    fn comments_are_skipped() {
        let g = DiGraph::from_edge_list("# hi\n3 1\n# mid\n2 0\n").unwrap();
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(2, 0)]);
    }

    #[test]
    fn duplicate_arc_reports_line() {
        let err = DiGraph::from_edge_list("2 2\n0 1\n0 1").unwrap_err();
        assert_eq!(err, GraphError::DuplicateArc { line: 3, u: 0, v: 1 });
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            DiGraph::from_edge_list("2 1\n0 2"),
            Err(GraphError::VertexOutOfRange { line: 2, vertex: 2, n: 2 })
        ));
        assert!(matches!(
            DiGraph::from_edge_list("2 1\n1 1"),
            Err(GraphError::SelfLoop { line: 2, vertex: 1 })
        ));
        assert!(matches!(
            DiGraph::from_edge_list("x 1\n0 1"),
            Err(GraphError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            DiGraph::from_edge_list("3 2\n0 1"),
            Err(GraphError::ArcCount { expected: 2, found: 1 })
        ));
        assert!(matches!(
            DiGraph::from_edge_list("3 1\n0 1\n1 2"),
            Err(GraphError::Malformed { line: 3, .. })
        ));
        assert!(DiGraph::from_edge_list("").is_err());
    }

    #[test]
    fn edge_list_and_dot_round_trip() {
        let g = DiGraph::from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 1)]).unwrap();
        assert_eq!(DiGraph::from_edge_list(&g.to_edge_list()).unwrap(), g);
        assert_eq!(DiGraph::from_dot(&g.to_dot()).unwrap(), g);
        // isolated vertices survive the DOT round trip
        let h = DiGraph::from_arcs(5, [(0, 1)]).unwrap();
        assert_eq!(DiGraph::from_dot(&h.to_dot()).unwrap(), h);
    }

    #[test]
    fn adjacency_is_consistent() {
        let g = DiGraph::from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 1), (0, 3)]).unwrap();
        let from_in: usize = g.vertices().map(|v| g.in_degree(v)).sum();
        assert_eq!(from_in, g.arc_count());
        for (u, v) in g.arcs() {
            assert!(g.in_neighbors(v).contains(&u));
        }
    }

    #[test]
    fn induced_subgraph() {
        let g = DiGraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let h = g.induced(&[1, 2, 3]);
        assert_eq!(h.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
