//! Chromatic number and homomorphism existence.

use crate::counting::{clique_number, connected_order};
use crate::graph::{bit, members, Graph, VertexSet};

/// Exact chromatic number. Returns 0 for the graph on no vertices.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let lower = clique_number(g);
    let upper = dsatur_greedy(g);
    (lower..upper).find(|&k| is_colorable(g, k)).unwrap_or(upper)
}

/// Number of colors used by greedy DSatur.
fn dsatur_greedy(g: &Graph) -> usize {
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut uncolored = g.vertices();
    while uncolored != 0 {
        let v = pick_saturated(g, uncolored, &classes);
        match classes.iter().position(|&c| c & g.neighbors(v) == 0) {
            Some(c) => classes[c] |= bit(v),
            None => classes.push(bit(v)),
        }
        uncolored &= !bit(v);
    }
    classes.len()
}

/// Uncolored vertex maximising (saturation, uncolored degree), lowest index on ties.
fn pick_saturated(g: &Graph, uncolored: VertexSet, classes: &[VertexSet]) -> usize {
    members(uncolored)
        .max_by_key(|&v| {
            let sat = classes.iter().filter(|&&c| c & g.neighbors(v) != 0).count();
            let deg = (g.neighbors(v) & uncolored).count_ones();
            (sat, deg, std::cmp::Reverse(v))
        })
        .expect("nonempty")
}

/// Whether `g` has a proper coloring with at most `k` colors.
pub fn is_colorable(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, k: usize, uncolored: VertexSet, classes: &mut Vec<VertexSet>) -> bool {
        if uncolored == 0 {
            return true;
        }
        let v = pick_saturated(g, uncolored, classes);
        let rest = uncolored & !bit(v);
        for c in 0..classes.len() {
            if classes[c] & g.neighbors(v) == 0 {
                classes[c] |= bit(v);
                if go(g, k, rest, classes) {
                    return true;
                }
                classes[c] &= !bit(v);
            }
        }
        // opening a fresh class is symmetric among all unused colors
        if classes.len() < k {
            classes.push(bit(v));
            if go(g, k, rest, classes) {
                return true;
            }
            classes.pop();
        }
        false
    }
    if g.n() == 0 {
        return true;
    }
    go(g, k, g.vertices(), &mut Vec::with_capacity(k))
}

/// Whether there is an edge-preserving map `V(f) -> V(h)`.
pub fn exists_homomorphism(f: &Graph, h: &Graph) -> bool {
    if f.n() == 0 {
        return true;
    }
    if h.n() == 0 {
        return false;
    }
    if f.edge_count() == 0 {
        return true;
    }
    if h.edge_count() == 0 {
        return false;
    }
    let order = connected_order(f, None);
    let mut pos = vec![0usize; f.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| members(f.neighbors(v)).map(|u| pos[u]).filter(|&j| j < i).collect())
        .collect();

    fn go(h: &Graph, back: &[Vec<usize>], i: usize, images: &mut [usize]) -> bool {
        if i == back.len() {
            return true;
        }
        let cand = back[i]
            .iter()
            .fold(h.vertices(), |acc, &j| acc & h.neighbors(images[j]));
        members(cand).any(|x| {
            images[i] = x;
            go(h, back, i + 1, images)
        })
    }
    let mut images = vec![0; f.n()];
    go(h, &back, 0, &mut images)
}
