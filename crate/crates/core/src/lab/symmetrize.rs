//! Zykov symmetrization with a replayable trace.
//!
//! Replacing a vertex `u` by a clone of a non-neighbor `v` changes the
//! number of `K_r` by `c(v) - c(u)`, where `c(x)` counts the `K_r` through
//! `x`. The procedure alternates two moves:
//!
//! 1. if some non-adjacent pair has `c(u) < c(v)`, replace `u` by a clone of `v`;
//! 2. otherwise, if non-adjacency is not transitive, take the first
//!    intransitive triple `u ≁ v ≁ w`, `u ~ w` (by `v`, then `u < w`) and
//!    replace the whole twin class of `u` by clones of `v`.
//!
//! Move 1 strictly increases the clique count. Move 2 keeps it fixed (all
//! non-adjacent counts agree) and merges the twin class of `u` into that of
//! `v`, so (clique count, minus the number of twin classes) increases
//! lexicographically and the loop ends in a complete multipartite graph.

use serde::Serialize;

use crate::counting::{count_cliques, count_cliques_through_vertex, CopyCount};
use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetrizationStep {
    /// Vertex whose neighborhood is copied.
    pub kept: usize,
    /// Vertex whose neighborhood is overwritten.
    pub replaced: usize,
    /// `N(K_r)` after the step.
    pub cliques_after: CopyCount,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetrizationTrace {
    pub r: usize,
    #[serde(serialize_with = "crate::lab::serialize_graph")]
    pub start: Graph,
    #[serde(serialize_with = "crate::lab::serialize_graph")]
    pub end: Graph,
    pub start_cliques: CopyCount,
    pub steps: Vec<SymmetrizationStep>,
    pub step_cap: usize,
}

impl SymmetrizationTrace {
    pub fn end_cliques(&self) -> CopyCount {
        self.steps.last().map_or(self.start_cliques, |s| s.cliques_after)
    }

    /// Re-applies every step to `start` and checks the recorded counts.
    pub fn replay(&self) -> Result<bool> {
        let mut g = self.start.clone();
        for step in &self.steps {
            clone_onto(&mut g, step.kept, step.replaced);
            if count_cliques(self.r, &g)? != step.cliques_after {
                return Ok(false);
            }
        }
        Ok(g == self.end)
    }
}

/// Gives `replaced` the neighborhood of `kept` (the two end up non-adjacent).
fn clone_onto(g: &mut Graph, kept: usize, replaced: usize) {
    for x in members(g.neighbors(replaced)) {
        g.remove_edge(replaced, x);
    }
    for x in members(g.neighbors(kept)) {
        if x != replaced {
            g.add_edge(replaced, x);
        }
    }
}

fn per_vertex(g: &Graph, r: usize) -> Result<Vec<CopyCount>> {
    (0..g.n()).map(|v| count_cliques_through_vertex(r, g, v)).collect()
}

/// Move 1: `v` has the largest count among vertices with a poorer
/// non-neighbor, `u` is its poorest non-neighbor; lowest indices on ties.
fn richer_pair(g: &Graph, counts: &[CopyCount]) -> Option<(usize, usize)> {
    let all = g.vertices();
    let mut best: Option<(usize, usize)> = None;
    for v in 0..g.n() {
        let non = all & !g.neighbors(v) & !bit(v);
        let Some(u) = members(non)
            .filter(|&u| counts[u] < counts[v])
            .min_by_key(|&u| (counts[u], u))
        else {
            continue;
        };
        if best.is_none_or(|(bv, _)| counts[v] > counts[bv]) {
            best = Some((v, u));
        }
    }
    best
}

/// Move 2: first `(v, u, w)` with `u ≁ v ≁ w`, `u ~ w`, `u < w`.
fn intransitive_triple(g: &Graph) -> Option<(usize, usize)> {
    let all = g.vertices();
    for v in 0..g.n() {
        let non = all & !g.neighbors(v) & !bit(v);
        for u in members(non) {
            if g.neighbors(u) & non & !crate::graph::low_mask(u + 1) != 0 {
                return Some((v, u));
            }
        }
    }
    None
}

fn twin_class(g: &Graph, u: usize) -> VertexSet {
    let all = g.vertices();
    members(all & !g.neighbors(u))
        .filter(|&x| g.neighbors(x) == g.neighbors(u))
        .fold(0, |acc, x| acc | bit(x))
}

/// Symmetrizes `g` with respect to `K_r` until it is complete multipartite.
pub fn symmetrize(g: &Graph, r: usize) -> Result<SymmetrizationTrace> {
    let n = g.n();
    let step_cap = 10 * n * n;
    let start_cliques = count_cliques(r, g)?;
    let mut cur = g.clone();
    let mut steps = Vec::new();
    let mut cliques = start_cliques;

    loop {
        let counts = per_vertex(&cur, r)?;
        let moves: Vec<(usize, usize)> = if let Some((v, u)) = richer_pair(&cur, &counts) {
            vec![(v, u)]
        } else if let Some((v, u)) = intransitive_triple(&cur) {
            members(twin_class(&cur, u)).map(|x| (v, x)).collect()
        } else {
            break;
        };
        for (kept, replaced) in moves {
            if steps.len() == step_cap {
                return Err(Error::NonTermination { cap: step_cap });
            }
            clone_onto(&mut cur, kept, replaced);
            let after = count_cliques(r, &cur)?;
            debug_assert!(after >= cliques, "symmetrization lost cliques");
            cliques = after;
            steps.push(SymmetrizationStep {
                kept,
                replaced,
                cliques_after: after,
            });
        }
    }

    Ok(SymmetrizationTrace {
        r,
        start: g.clone(),
        end: cur,
        start_cliques,
        steps,
        step_cap,
    })
}
