//! The averaging argument behind supersaturation: every copy of `h` lies in
//! `C(n-|h|, m-|h|)` of the `m`-subsets, so an excess of `h`-copies forces
//! many "heavy" `m`-subsets, each of which must contain `f`.

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::ExtremalSource;
use crate::coloring::chromatic_number;
use crate::counting::{
    count_automorphisms, count_cliques_within, count_copies, count_copies_in_multipartite, CopyCount,
};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph, PartSizes, VertexSet};
use crate::lab::density::DensityBracket;
use crate::rational::{
    binomial, binomial_i128, checked_add, checked_mul, factorial, floor_to_i128, pow_i128, serialize_rational, Rational,
};

/// Largest number of `m`-subsets a census will sweep.
pub const CENSUS_BUDGET: u128 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub m: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub threshold: Rational,
    pub subsets: u128,
    /// Subsets `S` with `N(h, g[S]) > threshold`.
    pub heavy: u128,
    /// `sum_S N(h, g[S])`.
    pub copy_sum: u128,
    /// `C(n - |h|, m - |h|)`.
    pub coefficient: u128,
    pub h_copies: CopyCount,
    /// `copy_sum == coefficient * h_copies`.
    pub identity_holds: bool,
}

#[derive(Clone, Copy)]
enum Mode {
    Clique(usize),
    Generic,
}

#[derive(Clone, Copy, Default)]
struct Tally {
    subsets: u128,
    heavy: u128,
    copy_sum: u128,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            subsets: self.subsets + o.subsets,
            heavy: self.heavy + o.heavy,
            copy_sum: self.copy_sum + o.copy_sum,
        }
    }
}

struct Sweep<'a> {
    g: &'a Graph,
    h: &'a Graph,
    m: usize,
    mode: Mode,
    /// heavy iff count > cut
    cut: i128,
}

impl Sweep<'_> {
    /// Copies of `h` gained by adding `v` to `set` (clique mode only).
    fn gain(&self, r: usize, set: VertexSet, v: usize) -> u64 {
        count_cliques_within(r - 1, self.g, self.g.neighbors(v) & set)
    }

    fn record(&self, t: &mut Tally, count: u64) {
        t.subsets += 1;
        t.copy_sum += u128::from(count);
        if i128::from(count) > self.cut {
            t.heavy += 1;
        }
    }

    fn leaf(&self, set: VertexSet, count: u64, t: &mut Tally) -> Result<()> {
        let count = match self.mode {
            Mode::Clique(_) => count,
            Mode::Generic => count_copies(self.h, &self.g.induced(set))?,
        };
        self.record(t, count);
        Ok(())
    }

    fn dfs(&self, set: VertexSet, size: usize, next: usize, count: u64, t: &mut Tally) -> Result<()> {
        if size == self.m {
            return self.leaf(set, count, t);
        }
        let n = self.g.n();
        let last = n - (self.m - size);
        if size + 1 == self.m {
            if let Mode::Clique(r) = self.mode {
                for v in next..=last {
                    self.record(t, count + self.gain(r, set, v));
                }
                return Ok(());
            }
        }
        for v in next..=last {
            let c = match self.mode {
                Mode::Clique(r) => count + self.gain(r, set, v),
                Mode::Generic => 0,
            };
            self.dfs(set | bit(v), size + 1, v + 1, c, t)?;
        }
        Ok(())
    }
}

/// Sweeps every `m`-subset of `g`, counting copies of `h` in each.
pub fn heavy_subset_census(g: &Graph, h: &Graph, m: usize, threshold: Rational) -> Result<Census> {
    let n = g.n();
    let hn = h.n();
    if hn == 0 || hn > m || m > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= |V(h)| <= m <= |V(g)|, got |V(h)| = {hn}, m = {m}, |V(g)| = {n}"
        )));
    }
    let subsets = binomial(n as u64, m as u64).ok_or(Error::Overflow("subset count"))?;
    if subsets > CENSUS_BUDGET {
        return Err(Error::TooLarge(format!(
            "{subsets} subsets of size {m} exceed the census budget"
        )));
    }
    let mode = if h.is_complete() {
        Mode::Clique(hn)
    } else {
        Mode::Generic
    };
    let sweep = Sweep {
        g,
        h,
        m,
        mode,
        cut: floor_to_i128(&threshold),
    };
    let tally = (0..=n - m)
        .into_par_iter()
        .map(|v| {
            let mut t = Tally::default();
            let c = match mode {
                Mode::Clique(1) => 1,
                _ => 0,
            };
            sweep.dfs(bit(v), 1, v + 1, c, &mut t).map(|_| t)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    debug_assert_eq!(tally.subsets, subsets);
    let coefficient = binomial((n - hn) as u64, (m - hn) as u64).ok_or(Error::Overflow("coefficient"))?;
    let h_copies = count_copies(h, g)?;
    Ok(Census {
        m,
        threshold,
        subsets: tally.subsets,
        heavy: tally.heavy,
        copy_sum: tally.copy_sum,
        coefficient,
        h_copies,
        identity_holds: coefficient.checked_mul(u128::from(h_copies)) == Some(tally.copy_sum),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HostValueSource {
    /// `N(K_r, T_{k-1}(n))`, the exact value for cliques.
    CliqueFormula,
    /// Exact value from the extremal source.
    Exact,
    /// `ex(n', h, f) / C(n', |h|) * C(n, |h|)` for the largest known `n' < n`;
    /// an upper bound because the ratio is non-increasing.
    RatioBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct SupersaturationReport {
    pub n: usize,
    pub m: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub q: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub c: Rational,
    /// `ex(n, h, f)`, or an upper bound on it (see `host_value_source`).
    pub host_ex: CopyCount,
    pub host_value_source: HostValueSource,
    pub h_copies: CopyCount,
    /// `N(h, g) > ex(n, h, f) + c n^{|h|}`.
    pub hypothesis: bool,
    pub applicable: bool,
    pub census: Census,
    /// `ceil(heavy / C(n - |f|, m - |f|))`; heavy sets exceed `ex(m, h, f)`.
    pub f_copy_lower_bound: u128,
    pub true_f_copies: CopyCount,
    pub bound_holds: bool,
    /// `N(h, g) >= (q + c) C(n, |h|)`, the form the averaging step needs.
    pub averaging_premise: bool,
    /// `c |Aut h| / (2 |h|!) C(n, m)`, the heavy count the averaging guarantees.
    #[serde(serialize_with = "serialize_rational")]
    pub heavy_floor: Rational,
    /// Checked only when `averaging_premise` holds.
    pub heavy_floor_holds: Option<bool>,
}

fn host_value(n: usize, h: &Graph, f: &Graph, source: &mut dyn ExtremalSource) -> Result<(CopyCount, HostValueSource)> {
    if h.is_complete() && f.is_complete() && h.n() < f.n() {
        let parts = PartSizes::balanced(n, f.n() - 1)?;
        return Ok((count_copies_in_multipartite(h, &parts)?, HostValueSource::CliqueFormula));
    }
    if let Some(v) = source.exact(n, h, f)? {
        return Ok((v, HostValueSource::Exact));
    }
    for small in (h.n()..n).rev() {
        if let Some(v) = source.exact(small, h, f)? {
            let ratio = Rational::new(i128::from(v), binomial_i128(small, h.n())?);
            let bound = checked_mul(ratio, Rational::from_integer(binomial_i128(n, h.n())?))?;
            let bound = u64::try_from(floor_to_i128(&bound)).map_err(|_| Error::Overflow("host bound"))?;
            return Ok((bound, HostValueSource::RatioBound));
        }
    }
    Err(Error::MissingValue { n })
}

/// Runs the averaging argument on a concrete host graph.
///
/// `m` is the smallest size in `[max(|h|, |f|), n]` whose known
/// `ex(m, h, f)` is at most `(q + c/2) C(m, |h|)`, with `q = bracket.upper`.
pub fn supersaturation_check(
    g: &Graph,
    h: &Graph,
    f: &Graph,
    c: Rational,
    bracket: &DensityBracket,
    source: &mut dyn ExtremalSource,
) -> Result<SupersaturationReport> {
    let chi_h = chromatic_number(h);
    let chi_f = chromatic_number(f);
    if chi_h >= chi_f {
        return Err(Error::DegeneratePair { chi_h, chi_f });
    }
    if c <= Rational::from_integer(0) {
        return Err(Error::InvalidArgument("c must be positive".into()));
    }
    let n = g.n();
    let hn = h.n();
    let fn_ = f.n();
    let q = bracket.upper;
    let slack = checked_add(q, c / 2)?;

    let mut chosen = None;
    for m in hn.max(fn_)..=n {
        let Some(ex) = source.exact(m, h, f)? else { continue };
        let cap = checked_mul(slack, Rational::from_integer(binomial_i128(m, hn)?))?;
        if Rational::from_integer(i128::from(ex)) <= cap {
            chosen = Some((m, cap));
            break;
        }
    }
    let (m, threshold) = chosen.ok_or(Error::NoValidM)?;

    let (host_ex, host_value_source) = host_value(n, h, f, source)?;
    let h_copies = count_copies(h, g)?;
    let excess = checked_mul(c, Rational::from_integer(pow_i128(n as i128, hn)?))?;
    let hypothesis = Rational::from_integer(i128::from(h_copies))
        > checked_add(Rational::from_integer(i128::from(host_ex)), excess)?;

    let census = heavy_subset_census(g, h, m, threshold)?;
    let per_f = binomial((n - fn_) as u64, (m - fn_) as u64).ok_or(Error::Overflow("coefficient"))?;
    let f_copy_lower_bound = census.heavy.div_ceil(per_f);
    let true_f_copies = count_copies(f, g)?;

    let premise_cut = checked_mul(checked_add(q, c)?, Rational::from_integer(binomial_i128(n, hn)?))?;
    let averaging_premise = Rational::from_integer(i128::from(h_copies)) >= premise_cut;
    let aut = Rational::from_integer(i128::from(count_automorphisms(h)));
    let heavy_floor = checked_mul(
        checked_mul(c, aut)? / Rational::from_integer(2 * factorial(hn)?),
        Rational::from_integer(binomial_i128(n, m)?),
    )?;
    let heavy_floor_holds = averaging_premise
        .then(|| i128::try_from(census.heavy).is_ok_and(|heavy| Rational::from_integer(heavy) >= heavy_floor));

    Ok(SupersaturationReport {
        n,
        m,
        q,
        c,
        host_ex,
        host_value_source,
        h_copies,
        hypothesis,
        applicable: hypothesis,
        f_copy_lower_bound,
        true_f_copies,
        bound_holds: f_copy_lower_bound <= u128::from(true_f_copies),
        census,
        averaging_premise,
        heavy_floor,
        heavy_floor_holds,
    })
}
