//! Metric basis for orientations of unicyclic graphs: sources, a handful of
//! cycle-shape special cases, then in-twin resolution with priorities.
//!
//! Cycle positions are taken modulo the cycle length `N`; `c(i)` is the
//! vertex at position `i` of the traversal fixed by [`cycle_context`].

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::classify::{classify, GraphClass};
use crate::graph::{DiGraph, Vertex};
use crate::resolve::{Basis, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnicyclicError {
    #[error("input is not an oriented unicyclic graph (classified as {0})")]
    WrongClass(String),
}

/// The unique cycle plus per-vertex flags.
#[derive(Debug, Clone)]
pub struct CycleContext {
    pub cycle: Vec<Vertex>,
    /// Position on the cycle, if any.
    pub position: Vec<Option<usize>>,
    /// Per cycle position: both cycle arcs leave `c(i)`.
    pub cycle_source: Vec<bool>,
    /// Per cycle position: both cycle arcs enter `c(i)`.
    pub cycle_sink: Vec<bool>,
    /// Per cycle position: some in-neighbour lies off the cycle.
    pub external_in: Vec<bool>,
    /// Per vertex: index into `twin_classes`.
    pub twin_class: Vec<Option<usize>>,
    /// In-twin classes of size at least 2, members ascending.
    pub twin_classes: Vec<Vec<Vertex>>,
}

impl CycleContext {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    fn wrap(&self, i: isize) -> usize {
        i.rem_euclid(self.len() as isize) as usize
    }

    /// Vertex at cyclic position `i`.
    pub fn c(&self, i: isize) -> Vertex {
        self.cycle[self.wrap(i)]
    }

    pub fn on_cycle(&self, v: Vertex) -> bool {
        self.position[v].is_some()
    }

    pub fn is_twin(&self, v: Vertex) -> bool {
        self.twin_class[v].is_some()
    }

    pub fn twin_class_size(&self, v: Vertex) -> usize {
        self.twin_class[v].map_or(1, |t| self.twin_classes[t].len())
    }

    /// Cycle positions of cycle-sources, ascending.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.cycle_source[i]).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.cycle_sink[i]).collect()
    }

    /// Position `i` has an external in-arc or is an in-twin.
    fn dirty(&self, i: isize) -> bool {
        let i = self.wrap(i);
        self.external_in[i] || self.is_twin(self.cycle[i])
    }

    /// Number of steps from position `from` in direction `dir` to the first
    /// cycle-sink.
    fn steps_to_sink(&self, from: usize, dir: isize) -> Option<usize> {
        (1..self.len()).find(|&j| self.cycle_sink[self.wrap(from as isize + dir * j as isize)])
    }
}

pub fn cycle_context(g: &DiGraph) -> Result<CycleContext, UnicyclicError> {
    let cycle = match classify(g) {
        GraphClass::OrientedUnicyclic { cycle } => cycle,
        other => return Err(UnicyclicError::WrongClass(other.name().to_string())),
    };
    Ok(context_for_cycle(g, cycle))
}

fn context_for_cycle(g: &DiGraph, cycle: Vec<Vertex>) -> CycleContext {
    let n = g.n();
    let len = cycle.len();
    let mut position = vec![None; n];
    for (i, &v) in cycle.iter().enumerate() {
        position[v] = Some(i);
    }
    let mut cycle_source = vec![false; len];
    let mut cycle_sink = vec![false; len];
    let mut external_in = vec![false; len];
    for i in 0..len {
        let (prev, v, next) = (cycle[(i + len - 1) % len], cycle[i], cycle[(i + 1) % len]);
        let out_prev = g.has_arc(v, prev);
        let out_next = g.has_arc(v, next);
        cycle_source[i] = out_prev && out_next;
        cycle_sink[i] = !out_prev && !out_next;
        external_in[i] = g.in_neighbors(v).iter().any(|&u| position[u].is_none());
    }

    let mut by_in: HashMap<&[Vertex], Vec<Vertex>> = HashMap::new();
    for v in g.vertices() {
        let ins = g.in_neighbors(v);
        if !ins.is_empty() {
            by_in.entry(ins).or_default().push(v);
        }
    }
    let mut twin_classes: Vec<Vec<Vertex>> = by_in.into_values().filter(|c| c.len() >= 2).collect();
    twin_classes.sort_unstable();
    let mut twin_class = vec![None; n];
    for (t, class) in twin_classes.iter().enumerate() {
        for &v in class {
            twin_class[v] = Some(t);
        }
    }

    CycleContext {
        cycle,
        position,
        cycle_source,
        cycle_sink,
        external_in,
        twin_class,
        twin_classes,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PathKind {
    Fixable,
    Unfixable,
}

/// A directed path of length `k - 2` leaving the near sink of a balanced
/// two-source cycle, all of whose vertices have in-degree 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcerningPath {
    /// Near sink first.
    pub vertices: Vec<Vertex>,
    pub kind: PathKind,
}

/// Per-vertex concerning-path labels, computed in linear time.
#[derive(Debug, Clone)]
pub struct ConcerningLabels {
    /// Cycle position of the sink the paths leave from.
    pub near_sink: usize,
    /// Required path length (number of arcs).
    pub length: usize,
    /// `None` for vertices on no concerning path (and for the near sink).
    pub label: Vec<Option<PathKind>>,
    pub fixable_paths: usize,
    pub unfixable_paths: usize,
}

/// Position `i` of the first source when the cycle has exactly two cycle
/// sources at `i` and `i + 2`, sinks at `i + 1` and `i + 1 + k` with
/// `N = 2k`, `k > 2`, and nothing but the two sources is an in-twin or has an
/// external in-arc.
fn two_source_shape(ctx: &CycleContext) -> Option<usize> {
    let len = ctx.len();
    let sources = ctx.sources();
    if len % 2 != 0 || len / 2 <= 2 || sources.len() != 2 {
        return None;
    }
    let k = (len / 2) as isize;
    let (a, b) = (sources[0], sources[1]);
    let i = if ctx.wrap(a as isize + 2) == b {
        a
    } else if ctx.wrap(b as isize + 2) == a {
        b
    } else {
        return None;
    };
    let ii = i as isize;
    if !ctx.cycle_sink[ctx.wrap(ii + 1)] || !ctx.cycle_sink[ctx.wrap(ii + 1 + k)] {
        return None;
    }
    let clean = (0..len as isize)
        .filter(|&j| j != ii && ctx.wrap(j) != ctx.wrap(ii + 2))
        .all(|j| !ctx.dirty(j));
    clean.then_some(i)
}

/// Labels every vertex lying on a concerning path, or `None` when the cycle
/// does not have the two-source shape.
pub fn concerning_labels(g: &DiGraph, ctx: &CycleContext) -> Option<ConcerningLabels> {
    let i = two_source_shape(ctx)?;
    let near = ctx.wrap(i as isize + 1);
    let root = ctx.cycle[near];
    let length = ctx.len() / 2 - 2;
    let n = g.n();

    // BFS tree of in-degree-1 out-neighbours, depth <= length
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        if depth[v] == length {
            continue;
        }
        for &w in g.out_neighbors(v) {
            if !ctx.on_cycle(w) && g.in_degree(w) == 1 {
                parent[w] = v;
                depth[w] = depth[v] + 1;
                order.push(w);
            }
        }
    }

    // vertices with an endpoint at full depth below them
    let mut concerning = vec![false; n];
    for &v in order.iter().rev() {
        if depth[v] == length {
            concerning[v] = true;
        }
        if concerning[v] && v != root {
            concerning[parent[v]] = true;
        }
    }
    if !concerning[root] {
        return Some(ConcerningLabels {
            near_sink: near,
            length,
            label: vec![None; n],
            fixable_paths: 0,
            unfixable_paths: 0,
        });
    }

    // a twin class "escapes" when some member is on no concerning path
    let escapes: Vec<bool> = ctx
        .twin_classes
        .iter()
        .map(|class| class.iter().any(|&v| !concerning[v] || v == root))
        .collect();
    let bad = |v: Vertex| ctx.twin_class[v].is_some_and(|t| escapes[t]);

    // fixable path: some vertex on it is bad
    let mut anc_bad = vec![false; n];
    for &v in &order {
        if concerning[v] {
            let above = v != root && anc_bad[parent[v]];
            anc_bad[v] = above || (v != root && bad(v));
        }
    }
    let mut sub_fixable = vec![false; n];
    let (mut fixable_paths, mut unfixable_paths) = (0, 0);
    for &v in order.iter().rev() {
        if !concerning[v] {
            continue;
        }
        if depth[v] == length {
            sub_fixable[v] = anc_bad[v];
            if anc_bad[v] {
                fixable_paths += 1;
            } else {
                unfixable_paths += 1;
            }
        }
        if sub_fixable[v] && v != root {
            sub_fixable[parent[v]] = true;
        }
    }
    let label = (0..n)
        .map(|v| {
            (concerning[v] && v != root).then(|| {
                if sub_fixable[v] {
                    PathKind::Fixable
                } else {
                    PathKind::Unfixable
                }
            })
        })
        .collect();
    Some(ConcerningLabels {
        near_sink: near,
        length,
        label,
        fixable_paths,
        unfixable_paths,
    })
}

/// All concerning paths, listed explicitly. Output size can be quadratic;
/// the solver itself only needs [`concerning_labels`].
pub fn detect_concerning_paths(g: &DiGraph, ctx: &CycleContext) -> Vec<ConcerningPath> {
    let Some(labels) = concerning_labels(g, ctx) else {
        return Vec::new();
    };
    let root = ctx.cycle[labels.near_sink];
    let mut out = Vec::new();
    let mut stack = vec![vec![root]];
    while let Some(path) = stack.pop() {
        let v = *path.last().unwrap();
        if path.len() == labels.length + 1 {
            // the endpoint's label is Fixable exactly when its own path is
            let kind = labels.label[v].expect("endpoint is labelled");
            out.push(ConcerningPath {
                vertices: path,
                kind,
            });
            continue;
        }
        for &w in g.out_neighbors(v).iter().rev() {
            if labels.label[w].is_some() {
                let mut next = path.clone();
                next.push(w);
                stack.push(next);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpecialCase {
    /// No cycle-sink, nothing enters the cycle, no cycle in-twin.
    SinklessClean,
    /// No cycle-sink, a single external in-arc whose tail has a private
    /// out-neighbour.
    SinklessSingleEntry,
    /// One cycle-source whose cycle neighbour is the sink.
    AdjacentSink,
    /// One cycle-source, sink on the short side with a private pendant on
    /// its predecessor, clean long side.
    LongSide,
    /// One cycle-source, sink opposite it, private pendants on both sides.
    Balanced,
    /// Two cycle-sources two apart with only unfixable concerning paths.
    TwoSources,
}

impl SpecialCase {
    pub fn number(self) -> u8 {
        match self {
            SpecialCase::SinklessClean => 1,
            SpecialCase::SinklessSingleEntry => 2,
            SpecialCase::AdjacentSink => 3,
            SpecialCase::LongSide => 4,
            SpecialCase::Balanced => 5,
            SpecialCase::TwoSources => 6,
        }
    }
}

impl fmt::Display for SpecialCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.number())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpecialCaseHit {
    pub case: SpecialCase,
    pub vertex: Vertex,
}

/// Some out-neighbour of `u` has `u` as its only in-neighbour.
fn has_private_out(g: &DiGraph, u: Vertex) -> bool {
    g.out_neighbors(u).iter().any(|&v| g.in_degree(v) == 1)
}

/// Same, restricted to out-neighbours off the cycle.
fn has_private_pendant(g: &DiGraph, ctx: &CycleContext, u: Vertex) -> bool {
    g.out_neighbors(u)
        .iter()
        .any(|&v| !ctx.on_cycle(v) && g.in_degree(v) == 1)
}

/// The (at most one) special-case addition.
pub fn apply_special_cases(
    g: &DiGraph,
    ctx: &CycleContext,
    labels: Option<&ConcerningLabels>,
) -> Option<SpecialCaseHit> {
    let len = ctx.len() as isize;
    let sources = ctx.sources();
    let hit = |case, vertex| Some(SpecialCaseHit { case, vertex });

    if sources.is_empty() {
        let entries: Vec<(Vertex, usize)> = (0..ctx.len())
            .flat_map(|i| {
                g.in_neighbors(ctx.cycle[i])
                    .iter()
                    .filter(|&&u| !ctx.on_cycle(u))
                    .map(move |&u| (u, i))
            })
            .collect();
        let any_twin = ctx.cycle.iter().any(|&v| ctx.is_twin(v));
        if entries.is_empty() && !any_twin {
            let first = *ctx.cycle.iter().min().unwrap();
            return hit(SpecialCase::SinklessClean, first);
        }
        if let [(u, i)] = entries.as_slice() {
            let rest_clean = (0..len)
                .filter(|&j| j != *i as isize)
                .all(|j| !ctx.dirty(j));
            if rest_clean && has_private_out(g, *u) {
                return hit(SpecialCase::SinklessSingleEntry, ctx.cycle[*i]);
            }
        }
        return None;
    }

    if let [i] = sources.as_slice() {
        let i = *i as isize;
        let rest_clean = |skip: &[isize]| {
            (0..len)
                .filter(|j| !skip.iter().any(|&s| ctx.wrap(s) == ctx.wrap(*j)))
                .all(|j| !ctx.dirty(j))
        };
        let k_plus = ctx.steps_to_sink(i as usize, 1).unwrap() as isize;
        if (k_plus == 1 || k_plus == len - 1) && rest_clean(&[i]) {
            let v = ctx.c(i - 1).min(ctx.c(i + 1));
            return hit(SpecialCase::AdjacentSink, v);
        }

        let balanced = || {
            if len % 2 != 0 || k_plus != len / 2 || k_plus <= 1 {
                return None;
            }
            let k = k_plus;
            let pendants = has_private_pendant(g, ctx, ctx.c(i + k - 1))
                && has_private_pendant(g, ctx, ctx.c(i + k + 1));
            let no_in = (0..len).filter(|&j| ctx.wrap(j) != ctx.wrap(i)).all(|j| !ctx.external_in[ctx.wrap(j)]);
            let twins_ok = (0..len)
                .filter(|&j| ![i, i - 1, i + 1].iter().any(|&s| ctx.wrap(s) == ctx.wrap(j)))
                .all(|j| !ctx.is_twin(ctx.c(j)));
            let small = ctx.twin_class_size(ctx.c(i - 1)) < 3 && ctx.twin_class_size(ctx.c(i + 1)) < 3;
            (pendants && no_in && twins_ok && small).then_some(ctx.c(i + k))
        };
        let long_side = || {
            let mut best: Option<Vertex> = None;
            for dir in [1isize, -1] {
                let k = ctx.steps_to_sink(i as usize, dir).unwrap() as isize;
                if k <= 1 || len < 2 * k {
                    continue;
                }
                if !has_private_pendant(g, ctx, ctx.c(i + dir * (k - 1))) {
                    continue;
                }
                let long = len - k;
                let no_in = (1..=long).all(|j| !ctx.external_in[ctx.wrap(i - dir * j)]);
                let no_twin = (2..long).all(|j| !ctx.is_twin(ctx.c(i - dir * j)));
                if no_in && no_twin {
                    let v = ctx.c(i - dir);
                    best = Some(best.map_or(v, |b| b.min(v)));
                }
            }
            best
        };
        if let Some(v) = balanced() {
            return hit(SpecialCase::Balanced, v);
        }
        if let Some(v) = long_side() {
            return hit(SpecialCase::LongSide, v);
        }
        return None;
    }

    if let Some(labels) = labels {
        if labels.unfixable_paths >= 1 && labels.fixable_paths == 0 {
            return hit(SpecialCase::TwoSources, ctx.cycle[labels.near_sink]);
        }
    }
    None
}

/// Twin-class selections on top of `in_basis`: each class ends with at least
/// `|I| - 1` members selected, preferring cycle vertices, then unfixable-path
/// vertices, then fixable-path vertices, then the rest, smallest id first.
pub fn resolve_in_twins_prioritized(
    ctx: &CycleContext,
    labels: Option<&ConcerningLabels>,
    in_basis: &[bool],
) -> Vec<Vertex> {
    let priority = |v: Vertex| -> u8 {
        if ctx.on_cycle(v) {
            return 0;
        }
        match labels.and_then(|l| l.label[v]) {
            Some(PathKind::Unfixable) => 1,
            Some(PathKind::Fixable) => 2,
            None => 3,
        }
    };
    let mut add = Vec::new();
    for class in &ctx.twin_classes {
        let already = class.iter().filter(|&&v| in_basis[v]).count();
        let need = (class.len() - 1).saturating_sub(already);
        let mut free: Vec<Vertex> = class.iter().copied().filter(|&v| !in_basis[v]).collect();
        free.sort_by_key(|&v| (priority(v), v));
        add.extend(free.into_iter().take(need));
    }
    add
}

/// Metric basis of an oriented unicyclic graph.
pub fn metric_basis_unicyclic(g: &DiGraph) -> Result<Basis, UnicyclicError> {
    Ok(unicyclic_with_trace(g)?.0)
}

/// Same as [`metric_basis_unicyclic`], also reporting which special case fired.
pub fn unicyclic_with_trace(
    g: &DiGraph,
) -> Result<(Basis, Option<SpecialCaseHit>), UnicyclicError> {
    let ctx = cycle_context(g)?;
    let mut in_basis = vec![false; g.n()];
    for s in g.sources() {
        in_basis[s] = true;
    }
    let labels = concerning_labels(g, &ctx);
    let special = apply_special_cases(g, &ctx, labels.as_ref());
    if let Some(h) = special {
        in_basis[h.vertex] = true;
    }
    for v in resolve_in_twins_prioritized(&ctx, labels.as_ref(), &in_basis) {
        in_basis[v] = true;
    }
    let vertices = g.vertices().filter(|&v| in_basis[v]).collect();
    Ok((Basis::new(vertices, Mode::Strong, "unicyclic"), special))
}
