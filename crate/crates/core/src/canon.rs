//! Canonical labelling for isomorphism dedup.
//!
//! Ordered-partition refinement seeded by degree, then an individualisation
//! search whose leaves are compared by their relabelled adjacency rows; the
//! lexicographically largest row sequence wins. Vertices that are twins
//! (same neighborhood apart from each other) are interchangeable, so only
//! one twin per cell is individualised.

use crate::graph::{bit, Graph, VertexSet, MAX_VERTICES};
use crate::graph6::graph_to_graph6;

/// Refines `cells` in place to the coarsest equitable ordered partition.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().fold(0, |acc, &v| acc | bit(v))).collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(g.n());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let key = masks.iter().map(|&m| (g.neighbors(v) & m).count_ones()).collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let split = next.len() > cells.len();
        *cells = next;
        if !split {
            return;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    twins: Vec<VertexSet>,
    best: Option<(Vec<VertexSet>, Vec<usize>)>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let rows = self.g.permuted(&order).rows().to_vec();
        let better = match &self.best {
            None => true,
            Some((best, _)) => rows > *best,
        };
        if better {
            self.best = Some((rows, order));
        }
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let mut tried: VertexSet = 0;
        for &v in &cells[t] {
            if self.twins[v] & tried != 0 {
                continue;
            }
            tried |= bit(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(vec![v]);
            child.push(cells[t].iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.g, &mut child);
            self.descend(child);
        }
    }
}

fn twin_sets(g: &Graph) -> Vec<VertexSet> {
    (0..g.n())
        .map(|v| {
            (0..g.n())
                .filter(|&u| u != v && g.neighbors(u) & !bit(v) == g.neighbors(v) & !bit(u))
                .fold(0, |acc, u| acc | bit(u))
        })
        .collect()
}

/// Canonical order: new vertex `i` is old vertex `order[i]`.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    if g.n() <= 1 {
        return (0..g.n()).collect();
    }
    let mut by_degree: Vec<usize> = (0..g.n()).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in by_degree {
        match cells.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    refine(g, &mut cells);
    let mut search = Search {
        g,
        twins: twin_sets(g),
        best: None,
    };
    search.descend(cells);
    search.best.expect("at least one leaf").1
}

/// Canonical form: isomorphic graphs map to equal graphs.
pub fn canonical_form(g: &Graph) -> Graph {
    g.permuted(&canonical_order(g))
}

pub fn canonical_graph6(g: &Graph) -> String {
    graph_to_graph6(&canonical_form(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Position of each old vertex in the canonical order.
pub fn canonical_positions(order: &[usize]) -> [usize; MAX_VERTICES] {
    let mut pos = [0usize; MAX_VERTICES];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}
