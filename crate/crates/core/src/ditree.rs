//! Linear-time metric basis for di-trees (digraphs whose underlying simple
//! graph is a tree), and the weak variant obtained by trying to drop a source.
//!
//! Inside a strongly connected component of a di-tree every arc belongs to a
//! digon, so the component's underlying graph `C` is itself a tree whose edges
//! are exactly the digons. All per-component work reads `C` straight off the
//! digraph: a vertex's `C`-neighbours are its out-neighbours in the same
//! component.

use thiserror::Error;

use crate::classify::{classify, GraphClass};
use crate::graph::{DiGraph, Vertex};
use crate::resolve::{is_resolving, Basis, Mode};
use crate::scc::{scc, SccPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiTreeError {
    #[error("input is not a di-tree (classified as {0})")]
    WrongClass(String),
    #[error("component {0} is not a path")]
    NotAPath(usize),
}

/// A path-shaped strongly connected component entered by exactly one external
/// arc at one endpoint and left only from the other endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Escalator {
    /// `path[0]` is the entry endpoint, `path[k-1]` the exit endpoint.
    pub path: Vec<Vertex>,
    /// Tail of the unique external in-arc.
    pub apex: Vertex,
    /// External out-neighbours of the exit endpoint.
    pub exits: Vec<Vertex>,
}

impl Escalator {
    pub fn entry(&self) -> Vertex {
        self.path[0]
    }

    pub fn exit(&self) -> Vertex {
        *self.path.last().unwrap()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    TrivialScc,
    EscalatorEndpoint,
}

/// Out-neighbours of `apex` that only `apex` (plus, for an escalator entry,
/// its escalator neighbour) points to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostInTwinClass {
    pub apex: Vertex,
    /// Ascending by vertex id.
    pub members: Vec<(Vertex, TwinKind)>,
}

/// A pendant path of `C` hanging off an anchor (a dummy or a branch vertex)
/// with an external out-arc somewhere before its endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialLeg {
    /// Anchor first, endpoint last.
    pub path: Vec<Vertex>,
    /// First external out-arc found along the path.
    pub witness_arc: (Vertex, Vertex),
}

impl SpecialLeg {
    pub fn anchor(&self) -> Vertex {
        self.path[0]
    }

    pub fn endpoint(&self) -> Vertex {
        *self.path.last().unwrap()
    }
}

/// One strongly connected component viewed as the tree `C`, with its dummy
/// set (vertices receiving an arc from outside the component).
#[derive(Debug, Clone)]
pub struct ComponentContext<'g> {
    g: &'g DiGraph,
    scc: &'g SccPartition,
    pub component: usize,
    /// Ascending.
    pub dummies: Vec<Vertex>,
}

impl<'g> ComponentContext<'g> {
    pub fn vertices(&self) -> &[Vertex] {
        self.scc.members(self.component)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.scc.component_of(v) == self.component
    }

    pub fn tree_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.g
            .out_neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| self.contains(w))
    }

    pub fn tree_degree(&self, v: Vertex) -> usize {
        self.tree_neighbors(v).count()
    }

    pub fn is_dummy(&self, v: Vertex) -> bool {
        self.dummies.binary_search(&v).is_ok()
    }

    /// First arc leaving the component from `v`, if any.
    pub fn external_out(&self, v: Vertex) -> Option<(Vertex, Vertex)> {
        self.g
            .out_neighbors(v)
            .iter()
            .find(|&&w| !self.contains(w))
            .map(|&w| (v, w))
    }

    pub fn is_path(&self) -> bool {
        self.vertices().iter().all(|&v| self.tree_degree(v) <= 2)
    }

    /// The two degree-1 vertices of a path component, smaller id first.
    fn path_endpoints(&self) -> Option<(Vertex, Vertex)> {
        let mut ends = self.vertices().iter().copied().filter(|&v| self.tree_degree(v) == 1);
        let x = ends.next()?;
        let y = ends.next()?;
        Some((x, y))
    }

    /// Walks from `anchor` through `first` while the current vertex has tree
    /// degree 2 and `keep_going` allows it. Returns the visited vertices
    /// (excluding the anchor).
    fn walk<F>(&self, anchor: Vertex, first: Vertex, keep_going: F) -> Vec<Vertex>
    where
        F: Fn(Vertex) -> bool,
    {
        let mut out = vec![first];
        let (mut prev, mut cur) = (anchor, first);
        while self.tree_degree(cur) == 2 && keep_going(cur) {
            let next = self.tree_neighbors(cur).find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
            out.push(cur);
        }
        out
    }
}

/// Escalators among the nontrivial components of a di-tree.
pub fn detect_escalators(g: &DiGraph, scc: &SccPartition) -> Vec<Escalator> {
    let mut out = Vec::new();
    for c in 0..scc.count() {
        if scc.is_trivial(c) {
            continue;
        }
        let ctx = ComponentContext {
            g,
            scc,
            component: c,
            dummies: Vec::new(),
        };
        if !ctx.is_path() {
            continue;
        }
        let mut entering = ctx.vertices().iter().flat_map(|&v| {
            g.in_neighbors(v)
                .iter()
                .filter(move |&&u| !scc.same(u, v))
                .map(move |&u| (u, v))
        });
        let Some((apex, entry)) = entering.next() else {
            continue;
        };
        if entering.next().is_some() || ctx.tree_degree(entry) != 1 {
            continue;
        }
        let first = ctx.tree_neighbors(entry).next().unwrap();
        let mut path = vec![entry];
        path.extend(ctx.walk(entry, first, |_| true));
        let exit = *path.last().unwrap();
        let leaves_early = path[..path.len() - 1]
            .iter()
            .any(|&v| ctx.external_out(v).is_some());
        if leaves_early {
            continue;
        }
        let exits = g
            .out_neighbors(exit)
            .iter()
            .copied()
            .filter(|&z| !scc.same(z, exit))
            .collect();
        out.push(Escalator { path, apex, exits });
    }
    out
}

/// Maximal almost-in-twin classes, one per apex, singletons included.
pub fn almost_in_twin_classes(
    g: &DiGraph,
    scc: &SccPartition,
    escalators: &[Escalator],
) -> Vec<AlmostInTwinClass> {
    let mut by_apex: Vec<(Vertex, Vertex, TwinKind)> = Vec::new();
    for v in g.vertices() {
        if scc.is_trivial(scc.component_of(v)) && g.in_degree(v) == 1 {
            let x = g.in_neighbors(v)[0];
            if !g.has_arc(v, x) {
                by_apex.push((x, v, TwinKind::TrivialScc));
            }
        }
    }
    for e in escalators {
        by_apex.push((e.apex, e.entry(), TwinKind::EscalatorEndpoint));
    }
    by_apex.sort_unstable_by_key(|&(x, v, _)| (x, v));

    let mut classes: Vec<AlmostInTwinClass> = Vec::new();
    for (x, v, kind) in by_apex {
        match classes.last_mut() {
            Some(cls) if cls.apex == x => cls.members.push((v, kind)),
            _ => classes.push(AlmostInTwinClass {
                apex: x,
                members: vec![(v, kind)],
            }),
        }
    }
    classes
}

pub fn component_context<'g>(
    g: &'g DiGraph,
    scc: &'g SccPartition,
    component: usize,
) -> ComponentContext<'g> {
    let dummies = scc
        .members(component)
        .iter()
        .copied()
        .filter(|&v| g.in_neighbors(v).iter().any(|&u| !scc.same(u, v)))
        .collect();
    ComponentContext {
        g,
        scc,
        component,
        dummies,
    }
}

/// All special legs of the component; several may share an anchor.
pub fn detect_special_legs(ctx: &ComponentContext<'_>) -> Vec<SpecialLeg> {
    let mut legs = Vec::new();
    for &v in ctx.vertices() {
        if !(ctx.is_dummy(v) || ctx.tree_degree(v) >= 3) {
            continue;
        }
        for first in ctx.tree_neighbors(v) {
            let rest = ctx.walk(v, first, |u| !ctx.is_dummy(u));
            let end = *rest.last().unwrap();
            let interior_ok = rest[..rest.len() - 1]
                .iter()
                .all(|&u| !ctx.is_dummy(u) && ctx.tree_degree(u) == 2);
            if ctx.tree_degree(end) != 1 || ctx.is_dummy(end) || !interior_ok {
                continue;
            }
            let mut path = Vec::with_capacity(rest.len() + 1);
            path.push(v);
            path.extend(rest);
            let witness = path[..path.len() - 1]
                .iter()
                .find_map(|&u| ctx.external_out(u));
            if let Some(witness_arc) = witness {
                legs.push(SpecialLeg { path, witness_arc });
            }
        }
    }
    legs
}

/// The forced additions for a path-shaped component, keyed on its dummies
/// and external out-arcs. `x` denotes the smaller-id endpoint.
pub fn solve_path_component(ctx: &ComponentContext<'_>) -> Result<Vec<Vertex>, DiTreeError> {
    if !ctx.is_path() {
        return Err(DiTreeError::NotAPath(ctx.component));
    }
    let (x, y) = ctx.path_endpoints().ok_or(DiTreeError::NotAPath(ctx.component))?;
    if ctx.dummies.is_empty() {
        let leaving: Vec<Vertex> = ctx
            .vertices()
            .iter()
            .copied()
            .filter(|&v| ctx.external_out(v).is_some())
            .collect();
        return Ok(match leaving.as_slice() {
            [] => vec![x],
            [only] if *only == x => vec![y],
            [only] if *only == y => vec![x],
            _ => vec![x, y],
        });
    }
    if let [w] = ctx.dummies.as_slice() {
        if *w != x && *w != y && ctx.external_out(*w).is_none() {
            return Ok(vec![x]);
        }
    }
    Ok(Vec::new())
}

/// Classic leg rule on the rest of `C`: at every branch vertex with `k >= 2`
/// legs free of basis and dummy vertices, take the endpoints of all but the
/// largest-endpoint leg.
pub fn solve_component_legs(ctx: &ComponentContext<'_>, in_basis: &[bool]) -> Vec<Vertex> {
    let mut add = Vec::new();
    for &v in ctx.vertices() {
        if ctx.tree_degree(v) < 3 {
            continue;
        }
        let mut free_ends: Vec<Vertex> = Vec::new();
        for first in ctx.tree_neighbors(v) {
            let leg = ctx.walk(v, first, |_| true);
            let end = *leg.last().unwrap();
            if ctx.tree_degree(end) != 1 {
                continue;
            }
            if leg.iter().all(|&u| !in_basis[u] && !ctx.is_dummy(u)) {
                free_ends.push(end);
            }
        }
        if free_ends.len() >= 2 {
            free_ends.sort_unstable();
            free_ends.pop();
            add.extend(free_ends);
        }
    }
    add
}

fn require_ditree(g: &DiGraph) -> Result<(), DiTreeError> {
    match classify(g) {
        GraphClass::DiTree => Ok(()),
        other => Err(DiTreeError::WrongClass(other.name().to_string())),
    }
}

/// Metric basis of a di-tree. Steps run in this order: sources, almost-in-twin
/// classes (largest member left out), then per nontrivial component the path
/// cases, special-leg endpoints and the remaining-leg rule.
pub fn metric_basis_ditree(g: &DiGraph) -> Result<Basis, DiTreeError> {
    require_ditree(g)?;
    Ok(Basis::new(ditree_basis_unchecked(g), Mode::Strong, "ditree"))
}

pub(crate) fn ditree_basis_unchecked(g: &DiGraph) -> Vec<Vertex> {
    let n = g.n();
    let parts = scc(g);
    let mut in_basis = vec![false; n];
    for s in g.sources() {
        in_basis[s] = true;
    }

    let escalators = detect_escalators(g, &parts);
    for class in almost_in_twin_classes(g, &parts, &escalators) {
        let k = class.members.len();
        for &(v, _) in &class.members[..k - 1] {
            in_basis[v] = true;
        }
    }

    for c in 0..parts.count() {
        if parts.is_trivial(c) {
            continue;
        }
        let ctx = component_context(g, &parts, c);
        if ctx.is_path() {
            for v in solve_path_component(&ctx).expect("checked is_path") {
                in_basis[v] = true;
            }
        }
        for leg in detect_special_legs(&ctx) {
            in_basis[leg.endpoint()] = true;
        }
        for v in solve_component_legs(&ctx, &in_basis) {
            in_basis[v] = true;
        }
    }

    g.vertices().filter(|&v| in_basis[v]).collect()
}

/// Weak metric basis: the strong basis with the first droppable source
/// (ascending id) removed, if any.
pub fn weak_metric_basis_ditree(g: &DiGraph) -> Result<Basis, DiTreeError> {
    require_ditree(g)?;
    let strong = ditree_basis_unchecked(g);
    for s in g.sources() {
        let without: Vec<Vertex> = strong.iter().copied().filter(|&v| v != s).collect();
        if is_resolving(g, &without, Mode::Weak).is_resolved() {
            return Ok(Basis::new(without, Mode::Weak, "ditree-weak"));
        }
    }
    Ok(Basis::new(strong, Mode::Weak, "ditree-weak"))
}
