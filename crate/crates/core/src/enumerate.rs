//! Isomorph-free generation of F-free graphs by canonical augmentation.
//!
//! Level `m` holds one canonical representative per isomorphism class of
//! `m`-vertex F-free graphs. A child of a level-`m` parent `P` is `P` plus a
//! new vertex `v` with any neighborhood. It is kept when no copy of F uses
//! `v` and `v` agrees with the canonical deletion vertex `w` (the maximum
//! degree vertex placed last by the canonical order), in the sense that
//! deleting either leaves a graph isomorphic to `P`. Every class then has a
//! single generating parent, so dedup is only needed among one parent's
//! children.

use std::collections::{HashSet, VecDeque};
use std::io::BufRead;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_order, canonical_positions};
use crate::counting::contains_copy_through;
use crate::error::{Error, Result};
use crate::graph::{members, Graph, VertexSet};
use crate::graph6::graph_from_graph6;

/// Largest `n` handled by the built-in generator.
pub const ENUMERATION_LIMIT: usize = 12;

const CHUNK: usize = 64;

fn children(parent: &Graph, f: &Graph) -> Vec<Graph> {
    let m = parent.n();
    let mut seen: HashSet<Vec<VertexSet>> = HashSet::new();
    let mut out = Vec::new();
    for s in 0..(1u64 << m) {
        let d = s.count_ones() as usize;
        // the new vertex must have maximum degree in the child
        if members(s).any(|u| parent.degree(u) + 1 > d) || members(parent.vertices() & !s).any(|u| parent.degree(u) > d)
        {
            continue;
        }
        let child = parent.with_vertex(s).expect("n <= ENUMERATION_LIMIT");
        if contains_copy_through(f, &child, m) {
            continue;
        }
        let order = canonical_order(&child);
        let pos = canonical_positions(&order);
        let w = (0..=m)
            .filter(|&x| child.degree(x) == d)
            .max_by_key(|&x| pos[x])
            .expect("new vertex has maximum degree");
        if w != m && canonical_form(&child.without_vertex(w)) != *parent {
            continue;
        }
        let canon = child.permuted(&order);
        if seen.insert(canon.rows().to_vec()) {
            out.push(canon);
        }
    }
    out
}

fn expand(parents: &[Graph], f: &Graph) -> Vec<Graph> {
    parents
        .par_iter()
        .map(|p| children(p, f))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Stream of canonical representatives of `n`-vertex F-free graphs.
pub struct FreeGraphs {
    f: Graph,
    parents: Vec<Graph>,
    next_parent: usize,
    buffer: VecDeque<Graph>,
}

impl Iterator for FreeGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.buffer.is_empty() && self.next_parent < self.parents.len() {
            let end = (self.next_parent + CHUNK).min(self.parents.len());
            let batch = expand(&self.parents[self.next_parent..end], &self.f);
            self.buffer.extend(batch);
            self.next_parent = end;
        }
        self.buffer.pop_front()
    }
}

/// One representative per isomorphism class of `n`-vertex graphs with no
/// copy of `f`, in canonical labelling. Output order is deterministic.
pub fn enumerate_free_graphs(n: usize, f: &Graph) -> Result<FreeGraphs> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge(format!(
            "built-in enumeration is limited to n <= {ENUMERATION_LIMIT}"
        )));
    }
    if f.n() == 0 {
        return Err(Error::InvalidArgument("forbidden graph must have a vertex".into()));
    }
    let empty = Graph::empty(0)?;
    if n == 0 {
        return Ok(FreeGraphs {
            f: f.clone(),
            parents: vec![],
            next_parent: 0,
            buffer: VecDeque::from([empty]),
        });
    }
    let mut level = vec![empty];
    for _ in 1..n {
        level = expand(&level, f);
    }
    Ok(FreeGraphs {
        f: f.clone(),
        parents: level,
        next_parent: 0,
        buffer: VecDeque::new(),
    })
}

/// All graphs on `n` vertices up to isomorphism.
pub fn enumerate_graphs(n: usize) -> Result<FreeGraphs> {
    // a forbidden graph larger than every level never matches
    enumerate_free_graphs(n, &Graph::empty(n + 1)?)
}

/// Passes through the F-free graphs of a graph6 line stream, in order.
/// Blank lines are skipped; line numbers in errors are 1-based.
pub fn filter_graph6_stream<'a, R: BufRead + 'a>(source: R, f: &'a Graph) -> impl Iterator<Item = Result<Graph>> + 'a {
    source.lines().enumerate().filter_map(move |(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(Error::from(e))),
        };
        if line.trim().is_empty() {
            return None;
        }
        match graph_from_graph6(line.trim()) {
            Ok(g) if crate::counting::contains_copy(f, &g) => None,
            Ok(g) => Some(Ok(g)),
            Err(Error::MalformedGraph6 { reason, .. }) => Some(Err(Error::MalformedGraph6 {
                line: Some(i + 1),
                reason,
            })),
            Err(e) => Some(Err(e)),
        }
    })
}

/// Whether the stream yields pairwise non-isomorphic graphs; used by tests
/// and by callers that want to audit third-party streams.
pub fn pairwise_non_isomorphic<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> bool {
    let mut seen = HashSet::new();
    graphs.into_iter().all(|g| seen.insert(canonical_form(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::graph_to_graph6;

    /// Brute force: every labelled graph on `n` vertices, filtered, deduped
    /// by trying all vertex permutations.
    fn brute_force_classes(n: usize, f: &Graph) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let perms = permutations(n);
        let mut keys: HashSet<Vec<VertexSet>> = HashSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if crate::counting::contains_copy(f, &g) {
                continue;
            }
            let key = perms.iter().map(|p| g.permuted(p).rows().to_vec()).min().unwrap();
            keys.insert(key);
        }
        keys.len()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = vec![];
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn triangle_free_counts_match_brute_force() {
        let k3 = Graph::complete(3).unwrap();
        let oracle: Vec<usize> = (1..=5).map(|n| brute_force_classes(n, &k3)).collect();
        assert_eq!(oracle, vec![1, 2, 3, 7, 14]);
        for n in 1..=5 {
            let got: Vec<Graph> = enumerate_free_graphs(n, &k3).unwrap().collect();
            assert_eq!(got.len(), oracle[n - 1], "n={n}");
            assert!(pairwise_non_isomorphic(&got));
        }
    }

    #[test]
    fn other_forbidden_graphs_match_brute_force() {
        let c4 = Graph::cycle(4).unwrap();
        let p3 = Graph::path(3).unwrap();
        let k4 = Graph::complete(4).unwrap();
        for f in [c4, p3, k4] {
            for n in 1..=6 {
                let got = enumerate_free_graphs(n, &f).unwrap().count();
                assert_eq!(got, brute_force_classes(n, &f), "n={n} f={f:?}");
            }
        }
    }

    #[test]
    fn all_graph_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| enumerate_graphs(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn edge_forbidden_leaves_only_empty() {
        let k2 = Graph::complete(2).unwrap();
        for n in 0..=8 {
            let got: Vec<Graph> = enumerate_free_graphs(n, &k2).unwrap().collect();
            assert_eq!(got, vec![Graph::empty(n).unwrap()]);
        }
        assert_eq!(
            enumerate_free_graphs(3, &Graph::complete(1).unwrap()).unwrap().count(),
            0
        );
        assert!(enumerate_free_graphs(13, &k2).is_err());
    }

    #[test]
    fn stream_filter() {
        let k3 = Graph::complete(3).unwrap();
        let all: Vec<String> = enumerate_graphs(4).unwrap().map(|g| graph_to_graph6(&g)).collect();
        let text = all.join("\n");
        let kept: Vec<Graph> = filter_graph6_stream(text.as_bytes(), &k3)
            .collect::<Result<_>>()
            .unwrap();
        assert_eq!(kept.len(), 7);

        assert_eq!(filter_graph6_stream("".as_bytes(), &k3).count(), 0);

        let k4 = Graph::complete(4).unwrap();
        let k4_g6 = graph_to_graph6(&k4);
        let kept: Vec<_> = filter_graph6_stream(format!("{k4_g6}\nC?\n").as_bytes(), &k4).collect();
        assert_eq!(kept.len(), 1);

        let bad: Vec<_> = filter_graph6_stream("A_\n\nA\n".as_bytes(), &k3).collect();
        assert_eq!(
            bad[1],
            Err(Error::MalformedGraph6 {
                line: Some(3),
                reason: "expected 1 data bytes for n=2, found 0".into()
            })
        );
    }
}
