//! Edit distance to the Turán graph: the fewest edge additions and removals
//! turning `g` into a balanced complete `p`-partite graph on its vertex set.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, Graph, VertexSet};
use crate::rational::{serialize_rational, Rational};

/// Largest graph the exhaustive partition sweep accepts.
pub const DISTANCE_LIMIT: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub parts: usize,
    pub distance: usize,
    /// Classes of the optimal partition, numbered by first vertex.
    pub best_partition: Vec<Vec<usize>>,
    /// `assignment[v]` is the class of `v`.
    pub assignment: Vec<usize>,
    /// `distance / n^2`.
    #[serde(serialize_with = "serialize_rational")]
    pub normalized: Rational,
}

struct Sweep<'a> {
    g: &'a Graph,
    parts: usize,
    small: usize,
    /// classes allowed to reach `small + 1`
    big: usize,
    global: &'a AtomicUsize,
}

#[derive(Clone)]
struct State {
    assignment: Vec<usize>,
    classes: Vec<VertexSet>,
    cost: usize,
}

impl Sweep<'_> {
    fn cost_of(&self, v: usize, class: VertexSet) -> usize {
        let prev = low_mask(v);
        let adj = self.g.neighbors(v);
        ((adj & prev & class).count_ones() + (prev & !class & !adj).count_ones()) as usize
    }

    /// Classes `v` may join, in increasing order.
    fn choices(&self, st: &State) -> Vec<usize> {
        let n = self.g.n();
        let v = st.assignment.len();
        let remaining = n - v - 1;
        let bigs = st
            .classes
            .iter()
            .filter(|c| c.count_ones() as usize > self.small)
            .count();
        let mut out = Vec::new();
        let open = st.classes.len() + usize::from(st.classes.len() < self.parts);
        for c in 0..open {
            let size = st.classes.get(c).map_or(0, |m| m.count_ones() as usize) + 1;
            if size > self.small + 1 || (size == self.small + 1 && bigs >= self.big) {
                continue;
            }
            let used = st.classes.len().max(c + 1);
            let need: usize = (0..used)
                .map(|i| {
                    let s = if i == c {
                        size
                    } else {
                        st.classes[i].count_ones() as usize
                    };
                    self.small.saturating_sub(s)
                })
                .sum::<usize>()
                + (self.parts.min(n) - used.min(self.parts.min(n))) * self.small;
            if need <= remaining {
                out.push(c);
            }
        }
        out
    }

    fn place(&self, st: &mut State, v: usize, c: usize) {
        if c == st.classes.len() {
            st.classes.push(0);
        }
        st.cost += self.cost_of(v, st.classes[c]);
        st.classes[c] |= bit(v);
        st.assignment.push(c);
    }

    fn dfs(&self, st: &mut State, best: &mut Option<(usize, Vec<usize>)>) {
        if best.as_ref().is_some_and(|(b, _)| st.cost >= *b) || st.cost > self.global.load(Ordering::Relaxed) {
            return;
        }
        let v = st.assignment.len();
        if v == self.g.n() {
            self.global.fetch_min(st.cost, Ordering::Relaxed);
            *best = Some((st.cost, st.assignment.clone()));
            return;
        }
        for c in self.choices(st) {
            let mut next = st.clone();
            self.place(&mut next, v, c);
            self.dfs(&mut next, best);
        }
    }

    fn prefixes(&self, st: State, depth: usize, out: &mut Vec<State>) {
        let v = st.assignment.len();
        if v == depth {
            out.push(st);
            return;
        }
        for c in self.choices(&st) {
            let mut next = st.clone();
            self.place(&mut next, v, c);
            self.prefixes(next, depth, out);
        }
    }
}

/// Minimum `|E(g) △ E(T)|` over balanced `parts`-partitions of `V(g)`, `T`
/// the complete multipartite graph on the partition. Ties go to the
/// lexicographically least class assignment.
pub fn turan_edit_distance(g: &Graph, parts: usize) -> Result<StabilityReport> {
    let n = g.n();
    if parts == 0 {
        return Err(Error::InvalidArgument("parts must be positive".into()));
    }
    if n > DISTANCE_LIMIT {
        return Err(Error::TooLarge(format!(
            "edit distance sweep supports at most {DISTANCE_LIMIT} vertices, got {n}"
        )));
    }
    let global = AtomicUsize::new(usize::MAX);
    let sweep = Sweep {
        g,
        parts,
        small: n / parts,
        big: n % parts,
        global: &global,
    };
    let start = State {
        assignment: Vec::new(),
        classes: Vec::new(),
        cost: 0,
    };
    let mut prefixes = Vec::new();
    sweep.prefixes(start, n.min(4), &mut prefixes);
    let (distance, assignment) = prefixes
        .into_par_iter()
        .filter_map(|mut st| {
            let mut best = None;
            sweep.dfs(&mut st, &mut best);
            best
        })
        .min()
        .expect("a balanced partition always exists");

    let classes = assignment.iter().max().map_or(0, |m| m + 1);
    let mut best_partition = vec![Vec::new(); classes];
    for (v, &c) in assignment.iter().enumerate() {
        best_partition[c].push(v);
    }
    let normalized = if n == 0 {
        Rational::from_integer(0)
    } else {
        Rational::new(distance as i128, (n * n) as i128)
    };
    Ok(StabilityReport {
        parts,
        distance,
        best_partition,
        assignment,
        normalized,
    })
}

/// Largest edit distance to the Turán graph per edge count.
pub fn distance_profile<I>(graphs: I, parts: usize) -> Result<BTreeMap<usize, usize>>
where
    I: IntoIterator<Item = Graph>,
{
    let mut profile = BTreeMap::new();
    for g in graphs {
        let d = turan_edit_distance(&g, parts)?.distance;
        let slot = profile.entry(g.edge_count()).or_insert(0);
        *slot = (*slot).max(d);
    }
    Ok(profile)
}

/// Largest distance among graphs with at least `min_edges` edges.
pub fn max_distance_from(profile: &BTreeMap<usize, usize>, min_edges: usize) -> Option<usize> {
    profile.range(min_edges..).map(|(_, &d)| d).max()
}
