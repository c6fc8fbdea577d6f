//! Exact generalized Turán numbers `ex(n, H, F)` by exhaustive search.

use std::collections::HashSet;

use serde::Serialize;

use crate::canon::{canonical_form, canonical_graph6};
use crate::coloring::exists_homomorphism;
use crate::counting::{count_copies, CopyCount};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::graph_to_graph6;

/// Witnesses kept per record.
pub const WITNESS_CAP: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalRecord {
    pub n: usize,
    /// Canonical graph6 of H.
    pub h_g6: String,
    /// Canonical graph6 of F.
    pub f_g6: String,
    pub value: CopyCount,
    /// Canonical graph6 of extremal graphs, pairwise non-isomorphic.
    pub witnesses: Vec<String>,
    /// True when more than [`WITNESS_CAP`] extremal graphs exist.
    pub truncated: bool,
    /// True iff the value comes from a complete enumeration.
    pub exhaustive: bool,
}

impl ExtremalRecord {
    pub fn key(&self) -> (usize, String, String) {
        (self.n, self.h_g6.clone(), self.f_g6.clone())
    }
}

/// Running maximum with capped, deduped witnesses.
struct Best {
    value: Option<CopyCount>,
    witnesses: Vec<Graph>,
    seen: HashSet<Graph>,
    truncated: bool,
}

impl Best {
    fn new() -> Self {
        Best {
            value: None,
            witnesses: vec![],
            seen: HashSet::new(),
            truncated: false,
        }
    }

    fn offer(&mut self, g: Graph, count: CopyCount) {
        match self.value {
            Some(v) if count < v => return,
            Some(v) if count == v => {}
            _ => {
                self.value = Some(count);
                self.witnesses.clear();
                self.seen.clear();
                self.truncated = false;
            }
        }
        let canon = canonical_form(&g);
        if self.seen.contains(&canon) {
            return;
        }
        if self.witnesses.len() == WITNESS_CAP {
            self.truncated = true;
            return;
        }
        self.seen.insert(canon.clone());
        self.witnesses.push(canon);
    }

    fn finish(self, n: usize, h: &Graph, f: &Graph, exhaustive: bool) -> ExtremalRecord {
        ExtremalRecord {
            n,
            h_g6: canonical_graph6(h),
            f_g6: canonical_graph6(f),
            value: self.value.unwrap_or(0),
            witnesses: self.witnesses.iter().map(graph_to_graph6).collect(),
            truncated: self.truncated,
            exhaustive,
        }
    }
}

/// `ex(n, h, f)` by enumerating every n-vertex F-free graph.
pub fn generalized_turan(n: usize, h: &Graph, f: &Graph) -> Result<ExtremalRecord> {
    let mut best = Best::new();
    for g in crate::enumerate::enumerate_free_graphs(n, f)? {
        let c = count_copies(h, &g)?;
        best.offer(g, c);
    }
    Ok(best.finish(n, h, f, true))
}

/// `ex(n, h, f)` over an externally produced graph6 stream. Every record is
/// re-checked for F-freeness; `complete` states whether the source is known
/// to cover all isomorphism classes, and becomes the record's `exhaustive`.
pub fn generalized_turan_from_stream<R: std::io::BufRead>(
    n: usize,
    h: &Graph,
    f: &Graph,
    source: R,
    complete: bool,
) -> Result<ExtremalRecord> {
    let mut best = Best::new();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let g = crate::graph6::graph_from_graph6(line.trim()).map_err(|e| match e {
            Error::MalformedGraph6 { reason, .. } => Error::MalformedGraph6 {
                line: Some(i + 1),
                reason,
            },
            other => other,
        })?;
        if g.n() != n {
            return Err(Error::StreamMismatch {
                line: i + 1,
                expected: n,
                found: g.n(),
            });
        }
        if crate::counting::contains_copy(f, &g) {
            continue;
        }
        let c = count_copies(h, &g)?;
        best.offer(g, c);
    }
    Ok(best.finish(n, h, f, complete))
}

/// Whether `ex(n, h, f) = o(n^{|V(h)|})`: exactly when `f` maps
/// homomorphically into `h`, i.e. `f` sits inside a blow-up of `h`.
pub fn is_degenerate_pair(h: &Graph, f: &Graph) -> Result<bool> {
    if h.n() == 0 || f.n() == 0 {
        return Err(Error::InvalidArgument("patterns must be nonempty".into()));
    }
    Ok(exists_homomorphism(f, h))
}
