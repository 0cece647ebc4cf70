//! Naive polynomial-time modular decomposition.
//!
//! Each level is split as a parallel node (weak components), a series node
//! (components of the non-digon graph), an order node (a chain of modules
//! joined by one-way arcs) or a prime node (maximal strong modules via
//! pairwise module closure).

use serde::Serialize;

use crate::graph::{DiGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NodeKind {
    Leaf,
    Parallel,
    Series,
    Order,
    Prime,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionNode {
    /// Sorted.
    pub vertices: Vec<Vertex>,
    pub kind: NodeKind,
    pub children: Vec<DecompositionNode>,
    /// Arcs of the quotient, as child indices.
    pub quotient_arcs: Vec<(usize, usize)>,
}

impl DecompositionNode {
    pub fn is_leaf(&self) -> bool {
        self.kind == NodeKind::Leaf
    }

    /// Largest number of children at any node (0 for a single leaf).
    pub fn width(&self) -> usize {
        self.children
            .iter()
            .map(DecompositionNode::width)
            .fold(self.children.len(), usize::max)
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(DecompositionNode::node_count).sum::<usize>()
    }

    /// Representative of the module: its smallest vertex.
    pub fn representative(&self) -> Vertex {
        self.vertices[0]
    }
}

/// How `v` relates to `x`: (arc v→x, arc x→v).
fn relation(g: &DiGraph, v: Vertex, x: Vertex) -> (bool, bool) {
    (g.has_arc(v, x), g.has_arc(x, v))
}

/// Every vertex outside `set` (within `universe`) sees all of `set` alike.
pub fn is_module(g: &DiGraph, universe: &[Vertex], set: &[Vertex]) -> bool {
    if set.is_empty() {
        return true;
    }
    let mut inside = vec![false; g.n()];
    for &x in set {
        inside[x] = true;
    }
    universe.iter().filter(|&&v| !inside[v]).all(|&v| {
        let r = relation(g, v, set[0]);
        set.iter().all(|&x| relation(g, v, x) == r)
    })
}

/// Smallest module of `G[universe]` containing `seed`.
pub fn minimal_module(g: &DiGraph, universe: &[Vertex], seed: &[Vertex]) -> Vec<Vertex> {
    let mut inside = vec![false; g.n()];
    let mut set: Vec<Vertex> = Vec::new();
    for &x in seed {
        if !inside[x] {
            inside[x] = true;
            set.push(x);
        }
    }
    loop {
        let splitter = universe.iter().copied().find(|&v| {
            !inside[v] && {
                let r = relation(g, v, set[0]);
                set.iter().any(|&x| relation(g, v, x) != r)
            }
        });
        match splitter {
            Some(v) => {
                inside[v] = true;
                set.push(v);
            }
            None => break,
        }
    }
    set.sort_unstable();
    set
}

/// Connected components of the graph on `vs` with edges given by `adj`.
fn components<F>(vs: &[Vertex], n: usize, adj: F) -> Vec<Vec<Vertex>>
where
    F: Fn(Vertex, Vertex) -> bool,
{
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for &s in vs {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in vs {
                if !seen[w] && adj(u, w) {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Strongly connected components of the digraph on `vs` with arcs `adj`,
/// in topological order of the condensation.
fn strong_components<F>(vs: &[Vertex], n: usize, adj: F) -> Vec<Vec<Vertex>>
where
    F: Fn(Vertex, Vertex) -> bool,
{
    // forward and backward reachability sets peel one component at a time
    let mut done = vec![false; n];
    let mut rest: Vec<Vertex> = vs.to_vec();
    let mut comps: Vec<Vec<Vertex>> = Vec::new();
    let reach = |from: Vertex, rest: &[Vertex], forward: bool| -> Vec<bool> {
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut stack = vec![from];
        while let Some(u) = stack.pop() {
            for &w in rest {
                let e = if forward { adj(u, w) } else { adj(w, u) };
                if !seen[w] && e {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    };
    while let Some(&start) = rest.first() {
        // walk back to a vertex whose component has no incoming arcs from the rest
        let mut root = start;
        loop {
            let back = reach(root, &rest, false);
            let fwd = reach(root, &rest, true);
            match rest.iter().copied().find(|&w| back[w] && !fwd[w]) {
                Some(w) => root = w,
                None => break,
            }
        }
        let back = reach(root, &rest, false);
        let fwd = reach(root, &rest, true);
        let comp: Vec<Vertex> = rest.iter().copied().filter(|&w| back[w] && fwd[w]).collect();
        for &w in &comp {
            done[w] = true;
        }
        rest.retain(|&w| !done[w]);
        comps.push(comp);
    }
    comps
}

fn split(g: &DiGraph, vs: &[Vertex]) -> (NodeKind, Vec<Vec<Vertex>>) {
    let n = g.n();
    let weak = components(vs, n, |u, w| g.has_arc(u, w) || g.has_arc(w, u));
    if weak.len() > 1 {
        return (NodeKind::Parallel, weak);
    }
    let co = components(vs, n, |u, w| !(g.has_arc(u, w) && g.has_arc(w, u)));
    if co.len() > 1 {
        return (NodeKind::Series, co);
    }
    // u can be placed strictly before w only when u→w is one-way
    let before = |u: Vertex, w: Vertex| g.has_arc(u, w) && !g.has_arc(w, u);
    let chain = strong_components(vs, n, |u, w| !before(u, w));
    if chain.len() > 1 {
        let mut chain = chain;
        chain.reverse();
        return (NodeKind::Order, chain);
    }
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    let mut assigned = vec![false; n];
    for &a in vs {
        if assigned[a] {
            continue;
        }
        let mut class = vec![a];
        assigned[a] = true;
        for &b in vs {
            if !assigned[b] && minimal_module(g, vs, &[a, b]).len() < vs.len() {
                assigned[b] = true;
                class.push(b);
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    (NodeKind::Prime, classes)
}

fn build(g: &DiGraph, vs: Vec<Vertex>) -> DecompositionNode {
    if vs.len() == 1 {
        return DecompositionNode {
            vertices: vs,
            kind: NodeKind::Leaf,
            children: Vec::new(),
            quotient_arcs: Vec::new(),
        };
    }
    let (kind, parts) = split(g, &vs);
    let children: Vec<DecompositionNode> = parts.into_iter().map(|p| build(g, p)).collect();
    let mut quotient_arcs = Vec::new();
    for (i, a) in children.iter().enumerate() {
        for (j, b) in children.iter().enumerate() {
            if i != j && g.has_arc(a.representative(), b.representative()) {
                quotient_arcs.push((i, j));
            }
        }
    }
    DecompositionNode {
        vertices: vs,
        kind,
        children,
        quotient_arcs,
    }
}

/// Decomposition tree of `g`. Returns `None` for the empty graph.
pub fn modular_decomposition(g: &DiGraph) -> Option<DecompositionNode> {
    if g.n() == 0 {
        return None;
    }
    Some(build(g, g.vertices().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, arcs: &[(usize, usize)]) -> DiGraph {
        DiGraph::from_arcs(n, arcs.iter().copied()).unwrap()
    }

    fn bidirected_clique(n: usize) -> DiGraph {
        let arcs: Vec<_> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        g(n, &arcs)
    }

    fn assert_valid(h: &DiGraph, node: &DecompositionNode) {
        let mut union: Vec<Vertex> = node.children.iter().flat_map(|c| c.vertices.clone()).collect();
        union.sort_unstable();
        if !node.is_leaf() {
            assert_eq!(union, node.vertices);
            assert!(node.children.len() >= 2);
        }
        for c in &node.children {
            assert!(is_module(h, &node.vertices, &c.vertices));
            assert!(is_module(h, &h.vertices().collect::<Vec<_>>(), &c.vertices));
            assert_valid(h, c);
        }
    }

    #[test]
    fn single_vertex_is_leaf() {
        let d = modular_decomposition(&DiGraph::empty(1)).unwrap();
        assert!(d.is_leaf());
        assert_eq!(d.width(), 0);
        assert!(modular_decomposition(&DiGraph::empty(0)).is_none());
    }

    #[test]
    fn bidirected_triangle_is_one_series_node() {
        let h = bidirected_clique(3);
        let d = modular_decomposition(&h).unwrap();
        assert_eq!(d.kind, NodeKind::Series);
        assert_eq!(d.children.len(), 3);
        assert_eq!(d.width(), 3);
        assert_eq!(d.quotient_arcs.len(), 6);
    }

    #[test]
    fn two_digons() {
        let h = g(4, &[(0, 1), (1, 0), (2, 3), (3, 2)]);
        let d = modular_decomposition(&h).unwrap();
        assert_eq!(d.kind, NodeKind::Parallel);
        assert_eq!(d.children.len(), 2);
        assert!(d.children.iter().all(|c| c.kind == NodeKind::Series && c.children.len() == 2));
        assert_valid(&h, &d);
    }

    #[test]
    fn transitive_tournament_is_order() {
        let h = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let d = modular_decomposition(&h).unwrap();
        assert_eq!(d.kind, NodeKind::Order);
        let firsts: Vec<Vertex> = d.children.iter().map(|c| c.representative()).collect();
        assert_eq!(firsts, vec![0, 1, 2]);
    }

    #[test]
    fn directed_path_is_prime() {
        let h = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let d = modular_decomposition(&h).unwrap();
        assert_eq!(d.kind, NodeKind::Prime);
        assert_eq!(d.width(), 4);
    }

    #[test]
    fn nested_modules() {
        // x -> {a, b} where a <-> b, plus b-side sink y fed by both
        let h = g(4, &[(0, 1), (0, 2), (1, 2), (2, 1), (1, 3), (2, 3)]);
        let d = modular_decomposition(&h).unwrap();
        assert_valid(&h, &d);
        assert_eq!(d.width(), 3);
    }

    #[test]
    fn minimal_module_closure() {
        let h = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let all: Vec<Vertex> = h.vertices().collect();
        assert_eq!(minimal_module(&h, &all, &[0, 1]), all);
        let k = bidirected_clique(4);
        assert_eq!(minimal_module(&k, &all, &[0, 1]), vec![0, 1]);
    }

    #[test]
    fn random_decompositions_are_valid() {
        use crate::generate::{random_instance, InstanceKind};
        for seed in 0..200 {
            let n = 1 + seed as usize % 9;
            let h = random_instance(InstanceKind::Digraph { arc_prob: 0.4 }, n, seed).unwrap();
            let d = modular_decomposition(&h).unwrap();
            assert_valid(&h, &d);
            assert!(d.node_count() <= 2 * n);
        }
    }
}
