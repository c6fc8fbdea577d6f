//! Iterated deletion of a vertex lying in the fewest copies.
//!
//! Starting from `g`, repeat at most `ceil(alpha n)` times: if every vertex
//! of the current graph lies in more than `(1 - alpha) q n'^{r-1} / (r-1)!`
//! copies (`n'` the current order), stop; otherwise delete a vertex of
//! minimum count. Either the run stops early with a high-minimum-degree
//! subgraph, or after all deletions the remainder is checked for density.

use serde::Serialize;

use crate::counting::{count_cliques, count_copies, count_copies_through_vertex, CopyCount};
use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph, VertexSet};
use crate::lab::density::clique_density_limit;
use crate::rational::{checked_mul, factorial, pow_i128, serialize_opt_rational, serialize_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DeletionOutcome {
    /// Every remaining vertex is above the threshold.
    AllAboveThreshold,
    /// After all deletions, `N(h, current) > q n'^r / r!`.
    DenseSubgraph,
    HypothesisNotMet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionStep {
    /// Index in the original graph.
    pub deleted: usize,
    pub copies: CopyCount,
    pub order_before: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub threshold: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeletionTrace {
    #[serde(serialize_with = "serialize_rational")]
    pub alpha: Rational,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub beta: Option<Rational>,
    #[serde(serialize_with = "serialize_rational")]
    pub q: Rational,
    pub r: usize,
    pub max_steps: usize,
    pub steps: Vec<DeletionStep>,
    pub outcome: DeletionOutcome,
    /// Original indices of the surviving vertices.
    pub remaining: Vec<usize>,
    #[serde(serialize_with = "crate::lab::serialize_graph")]
    pub subgraph: Graph,
    pub final_copies: CopyCount,
    /// `N(h, g) > (1 - beta) q n^r / r!`, when `beta` was given.
    pub hypothesis_holds: Option<bool>,
}

impl DeletionTrace {
    /// `(1 - alpha) q n'^{r-1} / (r-1)!`.
    pub fn threshold_at(&self, order: usize) -> Result<Rational> {
        vertex_threshold(self.alpha, self.q, self.r, order)
    }
}

fn vertex_threshold(alpha: Rational, q: Rational, r: usize, order: usize) -> Result<Rational> {
    let scale = Rational::new(pow_i128(order as i128, r - 1)?, factorial(r - 1)?);
    checked_mul(checked_mul(Rational::from_integer(1) - alpha, q)?, scale)
}

fn density_cut(q: Rational, r: usize, order: usize) -> Result<Rational> {
    checked_mul(q, Rational::new(pow_i128(order as i128, r)?, factorial(r)?))
}

fn check_unit(name: &str, x: Rational) -> Result<()> {
    if x <= Rational::from_integer(0) || x >= Rational::from_integer(1) {
        return Err(Error::InvalidArgument(format!("{name} must lie in (0, 1)")));
    }
    Ok(())
}

/// Deletion for `h = K_r` inside `K_k`-free graphs; `q` defaults to the
/// limit density `r! C(k-1, r) / (k-1)^r`.
pub fn greedy_min_copy_deletion(
    g: &Graph,
    r: usize,
    k: usize,
    alpha: Rational,
    q: Option<Rational>,
    beta: Option<Rational>,
) -> Result<DeletionTrace> {
    if r == 0 || k <= r {
        return Err(Error::InvalidArgument(format!("need 1 <= r < k, got r={r}, k={k}")));
    }
    let q = match q {
        Some(q) => q,
        None => clique_density_limit(r, k)?,
    };
    greedy_min_copy_deletion_for(g, &Graph::complete(r)?, alpha, q, beta)
}

/// Deletion for an arbitrary pattern `h`, with `r = |V(h)|` in the
/// thresholds and a caller-supplied `q`.
pub fn greedy_min_copy_deletion_for(
    g: &Graph,
    h: &Graph,
    alpha: Rational,
    q: Rational,
    beta: Option<Rational>,
) -> Result<DeletionTrace> {
    check_unit("alpha", alpha)?;
    if let Some(b) = beta {
        check_unit("beta", b)?;
    }
    let r = h.n();
    if r == 0 {
        return Err(Error::InvalidArgument("pattern must have a vertex".into()));
    }
    let n = g.n();
    let max_steps = (alpha * Rational::from_integer(n as i128)).ceil().to_integer() as usize;
    let copies = |g: &Graph| {
        if h.is_complete() {
            count_cliques(r, g)
        } else {
            count_copies(h, g)
        }
    };

    let hypothesis_holds = match beta {
        Some(b) => {
            let cut = checked_mul(Rational::from_integer(1) - b, density_cut(q, r, n)?)?;
            Some(Rational::from_integer(i128::from(copies(g)?)) > cut)
        }
        None => None,
    };

    let mut alive: VertexSet = g.vertices();
    let mut steps = Vec::new();
    let mut outcome = None;
    while steps.len() < max_steps {
        let cur = g.induced(alive);
        let order = cur.n();
        let threshold = vertex_threshold(alpha, q, r, order)?;
        let counts: Vec<CopyCount> = (0..order)
            .map(|v| count_copies_through_vertex(h, &cur, v))
            .collect::<Result<_>>()?;
        if counts
            .iter()
            .all(|&c| Rational::from_integer(i128::from(c)) > threshold)
        {
            outcome = Some(DeletionOutcome::AllAboveThreshold);
            break;
        }
        let (local, &min) = counts
            .iter()
            .enumerate()
            .min_by_key(|&(i, c)| (*c, i))
            .expect("non-empty graph");
        let deleted = members(alive).nth(local).expect("vertex in range");
        steps.push(DeletionStep {
            deleted,
            copies: min,
            order_before: order,
            threshold,
        });
        alive &= !bit(deleted);
    }

    let subgraph = g.induced(alive);
    let final_copies = copies(&subgraph)?;
    let outcome = match outcome {
        Some(o) => o,
        None if Rational::from_integer(i128::from(final_copies)) > density_cut(q, r, subgraph.n())? => {
            DeletionOutcome::DenseSubgraph
        }
        None => DeletionOutcome::HypothesisNotMet,
    };
    Ok(DeletionTrace {
        alpha,
        beta,
        q,
        r,
        max_steps,
        steps,
        outcome,
        remaining: members(alive).collect(),
        subgraph,
        final_copies,
        hypothesis_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::turan_graph;

    #[test]
    fn turan_graph_stops_immediately() {
        let t = greedy_min_copy_deletion(&turan_graph(9, 3).unwrap(), 3, 4, Rational::new(1, 10), None, None).unwrap();
        assert_eq!(t.outcome, DeletionOutcome::AllAboveThreshold);
        assert!(t.steps.is_empty());
        assert_eq!(t.threshold_at(9).unwrap(), Rational::new(81, 10));
        assert_eq!(t.final_copies, 27);
    }

    #[test]
    fn empty_graph() {
        let t = greedy_min_copy_deletion(&Graph::empty(10).unwrap(), 2, 3, Rational::new(1, 10), None, None).unwrap();
        assert_eq!(t.outcome, DeletionOutcome::HypothesisNotMet);
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.steps[0].deleted, 0);
    }

    #[test]
    fn isolated_vertices_go_first() {
        let g = Graph::from_edges(10, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let t = greedy_min_copy_deletion(&g, 2, 5, Rational::new(1, 2), None, Some(Rational::new(1, 2))).unwrap();
        assert_eq!(t.max_steps, 5);
        assert_eq!(
            t.steps.iter().map(|s| s.deleted).collect::<Vec<_>>(),
            vec![4, 5, 6, 7, 8]
        );
        assert!(t.steps.iter().all(|s| s.copies == 0));
        assert_eq!(t.remaining, vec![0, 1, 2, 3, 9]);
        // q = 3/4, 5 vertices: 6 > (3/4) 25 / 2 is false
        assert_eq!(t.outcome, DeletionOutcome::HypothesisNotMet);
        assert_eq!(t.hypothesis_holds, Some(false));
    }

    #[test]
    fn general_pattern() {
        let c4 = Graph::cycle(4).unwrap();
        let t = greedy_min_copy_deletion_for(
            &turan_graph(8, 2).unwrap(),
            &c4,
            Rational::new(1, 4),
            Rational::new(3, 8),
            None,
        )
        .unwrap();
        // each vertex lies in 3 * C(4, 2) = 18 four-cycles; threshold (3/4)(3/8) 512 / 6 = 24
        assert_eq!(t.steps.len(), 2);
        assert!(t.steps.iter().all(|s| s.order_before <= 8));
    }

    #[test]
    fn rejects_bad_parameters() {
        let g = Graph::empty(3).unwrap();
        assert!(greedy_min_copy_deletion(&g, 2, 2, Rational::new(1, 2), None, None).is_err());
        assert!(greedy_min_copy_deletion(&g, 2, 3, Rational::from_integer(1), None, None).is_err());
    }
}
