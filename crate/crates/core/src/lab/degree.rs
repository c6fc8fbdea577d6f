//! Minimum-degree consequence of having many cliques through a vertex in a
//! `K_k`-free graph: if `g[N(x)]` spans at least
//! `(1 - alpha) r C(k-1, r) (k-1)^{-r} n^{r-1}` copies of `K_{r-1}`, then
//! `d(x) >= (1 - alpha)^{1/(r-1)} (k-2)/(k-1) n - (k-3)`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::counting::{contains_clique, count_cliques_within};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{binomial_i128, checked_mul, pow_i128, serialize_rational, Rational};

/// Absolute error of an inexact [`degree_lower_bound`] is below `2^-ERROR_BITS`.
pub const ERROR_BITS: u32 = 30;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBound {
    #[serde(serialize_with = "serialize_rational")]
    pub value: Rational,
    /// `false`: `value` was rounded down from an irrational root.
    pub exact: bool,
}

/// `Some(y)` with `y^e == x`, for `x >= 0`.
fn exact_root(x: i128, e: u32) -> Option<i128> {
    let y = BigInt::from(x).nth_root(e);
    (y.pow(e) == BigInt::from(x)).then(|| y.to_i128()).flatten()
}

fn check_params(k: usize, r: usize, alpha: Rational) -> Result<()> {
    if r < 2 || k <= r {
        return Err(Error::InvalidArgument(format!("need 2 <= r < k, got r={r}, k={k}")));
    }
    if alpha < Rational::zero() || alpha >= Rational::one() {
        return Err(Error::InvalidArgument("alpha must lie in [0, 1)".into()));
    }
    Ok(())
}

/// `(1 - alpha)^{1/(r-1)} (k-2)/(k-1) n - (k-3)`, exact when the root is
/// rational and otherwise rounded down with error below `2^-30`.
pub fn degree_lower_bound(n: usize, k: usize, r: usize, alpha: Rational) -> Result<DegreeBound> {
    check_params(k, r, alpha)?;
    let base = Rational::one() - alpha;
    let e = (r - 1) as u32;
    let scale = Rational::new(((k - 2) * n) as i128, (k - 1) as i128);
    let shift = Rational::from_integer((k - 3) as i128);

    if let (Some(a), Some(b)) = (exact_root(*base.numer(), e), exact_root(*base.denom(), e)) {
        let value = checked_mul(Rational::new(a, b), scale)? - shift;
        return Ok(DegreeBound { value, exact: true });
    }
    // root * 2^s rounded down; the scale is at most n, so s = 31 + bits(n)
    // leaves a total error below 2^-30 (the floor loses < 2 units of 2^-s).
    let s = ERROR_BITS + 1 + usize::BITS - n.leading_zeros();
    let shifted = (BigInt::from(*base.numer()) << (s * e) as usize) / BigInt::from(*base.denom());
    let root = shifted
        .nth_root(e)
        .to_i128()
        .ok_or(Error::Overflow("degree bound root"))?;
    let denom = 1i128
        .checked_shl(s)
        .filter(|d| *d > 0)
        .ok_or(Error::Overflow("degree bound root"))?;
    let value = checked_mul(Rational::new(root, denom), scale)? - shift;
    Ok(DegreeBound { value, exact: false })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub x: usize,
    pub n: usize,
    pub degree: usize,
    /// `N(K_{r-1}, g[N(x)])`.
    pub neighborhood_cliques: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub hypothesis_threshold: Rational,
    pub hypothesis: bool,
    pub bound: DegreeBound,
    /// `d(x) >= bound`, checked only when the hypothesis holds.
    pub conclusion_holds: Option<bool>,
}

/// Checks the degree consequence at vertex `x` of the `K_k`-free graph `g`.
pub fn check_degree_lemma(g: &Graph, x: usize, k: usize, r: usize, alpha: Rational) -> Result<DegreeCheck> {
    check_params(k, r, alpha)?;
    let n = g.n();
    if x >= n {
        return Err(Error::InvalidArgument(format!(
            "vertex {x} out of range for {n} vertices"
        )));
    }
    if contains_clique(k, g, g.vertices()) {
        return Err(Error::NotKkFree { k });
    }
    let neighborhood_cliques = count_cliques_within(r - 1, g, g.neighbors(x));
    let coeff = Rational::new(
        (r as i128)
            .checked_mul(binomial_i128(k - 1, r)?)
            .ok_or(Error::Overflow("degree threshold"))?,
        pow_i128((k - 1) as i128, r)?,
    );
    let hypothesis_threshold = checked_mul(
        checked_mul(Rational::one() - alpha, coeff)?,
        Rational::from_integer(pow_i128(n as i128, r - 1)?),
    )?;
    let hypothesis = Rational::from_integer(i128::from(neighborhood_cliques)) >= hypothesis_threshold;
    let bound = degree_lower_bound(n, k, r, alpha)?;
    let degree = g.degree(x);
    Ok(DegreeCheck {
        x,
        n,
        degree,
        neighborhood_cliques,
        hypothesis_threshold,
        hypothesis,
        conclusion_holds: hypothesis.then(|| Rational::from_integer(degree as i128) >= bound.value),
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::turan_graph;

    #[test]
    fn bound_examples() {
        let b = degree_lower_bound(100, 3, 2, Rational::zero()).unwrap();
        assert_eq!(
            b,
            DegreeBound {
                value: Rational::from_integer(50),
                exact: true
            }
        );
        let b = degree_lower_bound(100, 4, 3, Rational::zero()).unwrap();
        assert_eq!(b.value, Rational::new(197, 3));
        for (n, k, alpha) in [(10, 3, Rational::new(1, 4)), (37, 5, Rational::new(2, 7))] {
            let b = degree_lower_bound(n, k, 2, alpha).unwrap();
            let expect = (Rational::one() - alpha) * Rational::new(((k - 2) * n) as i128, (k - 1) as i128)
                - Rational::from_integer((k - 3) as i128);
            assert_eq!(b.value, expect);
            assert!(b.exact);
        }
        // perfect square root: sqrt(1 - 5/9) = 2/3
        let b = degree_lower_bound(12, 4, 3, Rational::new(5, 9)).unwrap();
        assert!(b.exact);
        assert_eq!(
            b.value,
            Rational::new(2, 3) * Rational::from_integer(8) - Rational::from_integer(1)
        );
    }

    #[test]
    fn rounded_root_is_below_and_close() {
        let b = degree_lower_bound(100, 4, 3, Rational::new(1, 2)).unwrap();
        assert!(!b.exact);
        let truth = 0.5f64.sqrt() * 2.0 / 3.0 * 100.0 - 1.0;
        let got = *b.value.numer() as f64 / *b.value.denom() as f64;
        assert!(got <= truth + 1e-12);
        assert!(truth - got < 1e-8);
        // exact comparison: (value + 1) * 3 / 200 squared stays below 1/2
        let root = (b.value + Rational::one()) * Rational::new(3, 200);
        assert!(root * root < Rational::new(1, 2));
        let bumped = root + Rational::new(1, 1i128 << 30) * Rational::new(3, 200);
        assert!(bumped * bumped > Rational::new(1, 2));
    }

    #[test]
    fn lemma_examples() {
        let g = turan_graph(10, 2).unwrap();
        let c = check_degree_lemma(&g, 3, 3, 2, Rational::zero()).unwrap();
        assert_eq!(c.hypothesis_threshold, Rational::from_integer(5));
        assert!(c.hypothesis);
        assert_eq!(c.conclusion_holds, Some(true));

        let g = turan_graph(12, 3).unwrap();
        let c = check_degree_lemma(&g, 0, 4, 3, Rational::zero()).unwrap();
        assert_eq!(c.neighborhood_cliques, 16);
        assert_eq!(c.hypothesis_threshold, Rational::from_integer(16));
        assert_eq!(c.bound.value, Rational::from_integer(7));
        assert_eq!(c.conclusion_holds, Some(true));

        let err = check_degree_lemma(&Graph::complete(4).unwrap(), 0, 3, 2, Rational::zero()).unwrap_err();
        assert_eq!(err.name(), "NotKkFree");
    }
}
