//! Density ratios `ex(n, H, F) / C(n, |V(H)|)` and brackets on their limit.

use serde::Serialize;

use crate::catalog::ExtremalSource;
use crate::coloring::chromatic_number;
use crate::counting::{count_automorphisms, CopyCount};
use crate::error::{Error, Result};
use crate::graph::{members, Graph, VertexSet};
use crate::rational::{binomial_i128, factorial, pow_i128, serialize_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioViolation {
    pub n: usize,
    pub next_n: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub ratio: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub next_ratio: Rational,
}

/// Consecutive table entries whose ratio increases. `table` is sorted by
/// `n`; entries with `n < h_size` have no ratio and are skipped.
pub fn check_ratio_monotone(table: &[(usize, CopyCount)], h_size: usize) -> Result<Vec<RatioViolation>> {
    let ratios: Vec<(usize, Rational)> = table
        .iter()
        .filter(|(n, _)| *n >= h_size)
        .map(|&(n, v)| Ok((n, Rational::new(i128::from(v), binomial_i128(n, h_size)?))))
        .collect::<Result<_>>()?;
    Ok(ratios
        .windows(2)
        .filter(|w| w[0].1 < w[1].1)
        .map(|w| RatioViolation {
            n: w[0].0,
            next_n: w[1].0,
            ratio: w[0].1,
            next_ratio: w[1].1,
        })
        .collect())
}

/// Interval known to contain `lim ex(n, H, F) / C(n, |V(H)|)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityBracket {
    #[serde(serialize_with = "serialize_rational")]
    pub lower: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub upper: Rational,
    /// `None`: the lower bound is the limiting density of balanced blow-ups.
    pub lower_n: Option<usize>,
    pub upper_n: usize,
}

impl DensityBracket {
    pub fn contains(&self, x: &Rational) -> bool {
        self.lower <= *x && *x <= self.upper
    }
}

/// Number of proper colorings of `h` with `colors` labelled colors.
fn proper_colorings(h: &Graph, colors: usize) -> Result<i128> {
    let hn = h.n();
    if hn > 20 {
        return Err(Error::TooLarge(format!("coloring count for a {hn}-vertex pattern")));
    }
    let states = 1usize << hn;
    let independent: Vec<bool> = (0..states)
        .map(|s| members(s as VertexSet).all(|v| h.neighbors(v) & s as VertexSet == 0))
        .collect();
    let mut dp = vec![0i128; states];
    dp[0] = 1;
    for _ in 0..colors {
        let mut next = vec![0i128; states];
        for placed in 0..states {
            if dp[placed] == 0 {
                continue;
            }
            let rest = (states - 1) & !placed;
            let mut b = rest;
            loop {
                if independent[b] {
                    next[placed | b] = next[placed | b]
                        .checked_add(dp[placed])
                        .ok_or(Error::Overflow("coloring count"))?;
                }
                if b == 0 {
                    break;
                }
                b = (b - 1) & rest;
            }
        }
        dp = next;
    }
    Ok(dp[states - 1])
}

/// `lim_n N(h, T_parts(n)) / C(n, |V(h)|) = |V(h)|! P(h, parts) / (parts^{|V(h)|} |Aut(h)|)`,
/// with `P` the number of proper colorings. For `h = K_r` this is
/// `r! C(parts, r) / parts^r`.
pub fn blow_up_limit_density(h: &Graph, parts: usize) -> Result<Rational> {
    let hn = h.n();
    let num = factorial(hn)?
        .checked_mul(proper_colorings(h, parts)?)
        .ok_or(Error::Overflow("blow-up density"))?;
    let den = pow_i128(parts as i128, hn)?
        .checked_mul(i128::from(count_automorphisms(h)))
        .ok_or(Error::Overflow("blow-up density"))?;
    Ok(Rational::new(num, den))
}

/// `r! C(k-1, r) / (k-1)^r`, the limit density of `K_r` in `K_k`-free graphs.
pub fn clique_density_limit(r: usize, k: usize) -> Result<Rational> {
    if r == 0 || k <= r {
        return Err(Error::InvalidArgument(format!("need 1 <= r < k, got r={r}, k={k}")));
    }
    let num = factorial(r)?
        .checked_mul(binomial_i128(k - 1, r)?)
        .ok_or(Error::Overflow("clique density"))?;
    Ok(Rational::new(num, pow_i128((k - 1) as i128, r)?))
}

/// Bracket on the limiting density of `h` in F-free graphs.
///
/// The upper end is `ex(max_n, h, f) / C(max_n, |V(h)|)`, which bounds the
/// limit because the ratio is non-increasing in `n`. The lower end is the
/// limiting density of `h` in Turán graphs with `chi(f) - 1` classes, which
/// contain no copy of `f`.
pub fn density_bracket(h: &Graph, f: &Graph, max_n: usize, source: &mut dyn ExtremalSource) -> Result<DensityBracket> {
    let chi_h = chromatic_number(h);
    let chi_f = chromatic_number(f);
    if chi_h >= chi_f {
        return Err(Error::DegeneratePair { chi_h, chi_f });
    }
    if max_n < h.n() {
        return Err(Error::InvalidArgument(format!(
            "max_n = {max_n} is smaller than the pattern ({} vertices)",
            h.n()
        )));
    }
    let ex = source.exact(max_n, h, f)?.ok_or(Error::MissingValue { n: max_n })?;
    let upper = Rational::new(i128::from(ex), binomial_i128(max_n, h.n())?);
    let lower = blow_up_limit_density(h, chi_f - 1)?;
    Ok(DensityBracket {
        lower,
        upper,
        lower_n: None,
        upper_n: max_n,
    })
}
