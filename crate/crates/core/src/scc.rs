use crate::graph::{DiGraph, Vertex};

/// Strongly connected components, numbered in topological order of the
/// condensation (arcs between components only go from lower to higher id).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccPartition {
    comp: Vec<usize>,
    members: Vec<Vec<Vertex>>,
}

impl SccPartition {
    pub fn component_of(&self, v: Vertex) -> usize {
        self.comp[v]
    }

    pub fn count(&self) -> usize {
        self.members.len()
    }

    /// Members of component `c`, ascending.
    pub fn members(&self, c: usize) -> &[Vertex] {
        &self.members[c]
    }

    pub fn components(&self) -> impl Iterator<Item = &[Vertex]> {
        self.members.iter().map(Vec::as_slice)
    }

    pub fn is_trivial(&self, c: usize) -> bool {
        self.members[c].len() == 1
    }

    pub fn same(&self, u: Vertex, v: Vertex) -> bool {
        self.comp[u] == self.comp[v]
    }
}

/// Iterative Tarjan; safe on million-vertex paths.
pub fn scc(g: &DiGraph) -> SccPartition {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![UNSEEN; n];
    let mut found: Vec<Vec<Vertex>> = Vec::new();
    let mut next_index = 0;
    // (vertex, position in its out-list)
    let mut call: Vec<(Vertex, usize)> = Vec::new();

    for root in g.vertices() {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let outs = g.out_neighbors(v);
            if *pos < outs.len() {
                let w = outs[*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut members = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    members.push(w);
                    if w == v {
                        break;
                    }
                }
                members.sort_unstable();
                found.push(members);
            }
        }
    }

    // Tarjan emits components in reverse topological order.
    found.reverse();
    for (c, members) in found.iter().enumerate() {
        for &v in members {
            comp[v] = c;
        }
    }
    SccPartition { comp, members: found }
}
