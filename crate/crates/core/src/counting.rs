//! Copy counting: `N(H, G)` as injective homomorphisms over `|Aut(H)|`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, members, Graph, PartSizes, VertexSet};
use crate::rational::binomial;

/// Exact count of copies (unlabelled, not necessarily induced subgraphs).
pub type CopyCount = u64;

/// Hosts at least this large split the first pattern vertex across workers.
const PARALLEL_HOST: usize = 24;

/// Pattern vertex order: start at the highest-degree vertex, then repeatedly
/// take the unplaced vertex with most placed neighbors, breaking ties by
/// degree and then by index. Restarts on a new component.
pub(crate) fn connected_order(h: &Graph, start: Option<usize>) -> Vec<usize> {
    let n = h.n();
    let mut order = Vec::with_capacity(n);
    let mut placed: VertexSet = 0;
    if let Some(s) = start {
        order.push(s);
        placed |= bit(s);
    }
    while order.len() < n {
        let next = members(h.vertices() & !placed)
            .max_by_key(|&v| {
                (
                    (h.neighbors(v) & placed).count_ones(),
                    h.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        order.push(next);
        placed |= bit(next);
    }
    order
}

/// Backtracking enumerator of injective homomorphisms pattern -> host.
struct Embedder<'a> {
    host: &'a Graph,
    /// For each position, the earlier positions adjacent to it.
    back: Vec<Vec<usize>>,
    /// For each position, host vertices of sufficient degree.
    feasible: Vec<VertexSet>,
}

impl<'a> Embedder<'a> {
    fn new(pattern: &Graph, host: &'a Graph, order: &[usize]) -> Self {
        let mut pos = vec![0usize; pattern.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                members(pattern.neighbors(v))
                    .map(|u| pos[u])
                    .filter(|&j| j < i)
                    .collect()
            })
            .collect();
        let feasible = order
            .iter()
            .map(|&v| {
                let d = pattern.degree(v);
                (0..host.n())
                    .filter(|&x| host.degree(x) >= d)
                    .fold(0, |acc, x| acc | bit(x))
            })
            .collect();
        Embedder { host, back, feasible }
    }

    fn len(&self) -> usize {
        self.back.len()
    }

    #[inline]
    fn candidates(&self, pos: usize, images: &[usize], used: VertexSet) -> VertexSet {
        self.back[pos].iter().fold(self.feasible[pos] & !used, |acc, &j| {
            acc & self.host.neighbors(images[j])
        })
    }

    fn count_from(&self, pos: usize, images: &mut [usize], used: VertexSet) -> Option<u128> {
        let cand = self.candidates(pos, images, used);
        if pos + 1 == self.len() {
            return Some(u128::from(cand.count_ones()));
        }
        let mut total: u128 = 0;
        for x in members(cand) {
            images[pos] = x;
            total = total.checked_add(self.count_from(pos + 1, images, used | bit(x))?)?;
        }
        Some(total)
    }

    fn exists_from(&self, pos: usize, images: &mut [usize], used: VertexSet) -> bool {
        if pos == self.len() {
            return true;
        }
        let cand = self.candidates(pos, images, used);
        if pos + 1 == self.len() {
            return cand != 0;
        }
        members(cand).any(|x| {
            images[pos] = x;
            self.exists_from(pos + 1, images, used | bit(x))
        })
    }

    /// Injective homomorphisms with position 0 restricted to `first`.
    fn count_rooted(&self, first: VertexSet) -> Option<u128> {
        if self.len() == 0 {
            return Some(1);
        }
        let roots = self.feasible[0] & first;
        if self.len() == 1 {
            return Some(u128::from(roots.count_ones()));
        }
        let one = |x: usize| {
            let mut images = vec![0; self.len()];
            images[0] = x;
            self.count_from(1, &mut images, bit(x))
        };
        if self.host.n() >= PARALLEL_HOST {
            let per_root: Vec<Option<u128>> = members(roots).collect::<Vec<_>>().into_par_iter().map(one).collect();
            per_root.into_iter().try_fold(0u128, |acc, c| acc.checked_add(c?))
        } else {
            members(roots).try_fold(0u128, |acc, x| acc.checked_add(one(x)?))
        }
    }

    fn exists_rooted(&self, first: VertexSet) -> bool {
        if self.len() == 0 {
            return true;
        }
        let mut images = vec![0; self.len()];
        members(self.feasible[0] & first).any(|x| {
            images[0] = x;
            self.exists_from(1, &mut images, bit(x))
        })
    }
}

/// Number of injective homomorphisms `h -> g`.
pub fn count_injective_homomorphisms(h: &Graph, g: &Graph) -> Result<u128> {
    if h.n() > g.n() {
        return Ok(0);
    }
    let order = connected_order(h, None);
    Embedder::new(h, g, &order)
        .count_rooted(g.vertices())
        .ok_or(Error::Overflow("injective homomorphism count"))
}

/// `|Aut(h)|`.
pub fn count_automorphisms(h: &Graph) -> CopyCount {
    let c = count_injective_homomorphisms(h, h).expect("automorphism group order fits in u128");
    u64::try_from(c).expect("automorphism group order fits in u64")
}

fn to_copies(labelled: u128, h: &Graph) -> Result<CopyCount> {
    let aut = u128::from(count_automorphisms(h));
    debug_assert_eq!(labelled % aut, 0);
    u64::try_from(labelled / aut).map_err(|_| Error::Overflow("copy count"))
}

/// `N(h, g)`.
pub fn count_copies(h: &Graph, g: &Graph) -> Result<CopyCount> {
    if h.is_complete() && h.n() >= 1 {
        return count_cliques(h.n(), g);
    }
    to_copies(count_injective_homomorphisms(h, g)?, h)
}

/// Copies of `h` in `g` whose vertex set contains `v`.
///
/// Sums, over pattern vertices `i`, the embeddings sending `i` to `v`; each
/// copy through `v` is then counted exactly `|Aut(h)|` times.
pub fn count_copies_through_vertex(h: &Graph, g: &Graph, v: usize) -> Result<CopyCount> {
    if v >= g.n() {
        return Err(Error::InvalidArgument(format!(
            "vertex {v} is not in a {}-vertex graph",
            g.n()
        )));
    }
    if h.n() > g.n() {
        return Ok(0);
    }
    if h.is_complete() && h.n() >= 1 {
        return count_cliques_through_vertex(h.n(), g, v);
    }
    let mut labelled: u128 = 0;
    for i in 0..h.n() {
        let order = connected_order(h, Some(i));
        let c = Embedder::new(h, g, &order)
            .count_rooted(bit(v))
            .ok_or(Error::Overflow("rooted embedding count"))?;
        labelled = labelled
            .checked_add(c)
            .ok_or(Error::Overflow("rooted embedding count"))?;
    }
    to_copies(labelled, h)
}

/// Whether `g` has a subgraph isomorphic to `f`.
pub fn contains_copy(f: &Graph, g: &Graph) -> bool {
    if f.n() > g.n() {
        return false;
    }
    if f.is_complete() && f.n() >= 1 {
        return contains_clique(f.n(), g, g.vertices());
    }
    let order = connected_order(f, None);
    Embedder::new(f, g, &order).exists_rooted(g.vertices())
}

/// Whether some copy of `f` in `g` uses vertex `v`.
pub fn contains_copy_through(f: &Graph, g: &Graph, v: usize) -> bool {
    if f.n() > g.n() {
        return false;
    }
    if f.is_complete() && f.n() >= 1 {
        return f.n() == 1 || contains_clique(f.n() - 1, g, g.neighbors(v));
    }
    (0..f.n()).any(|i| {
        let order = connected_order(f, Some(i));
        Embedder::new(f, g, &order).exists_rooted(bit(v))
    })
}

fn cliques_in(r: usize, g: &Graph, cand: VertexSet) -> u64 {
    match r {
        0 => 1,
        1 => u64::from(cand.count_ones()),
        2 => members(cand)
            .map(|v| u64::from((g.neighbors(v) & cand & !low_mask(v + 1)).count_ones()))
            .sum(),
        _ => members(cand)
            .map(|v| cliques_in(r - 1, g, cand & g.neighbors(v) & !low_mask(v + 1)))
            .sum(),
    }
}

/// `N(K_r, g[cand])`. At most `C(64, 32) < 2^63`, so no overflow is possible.
pub fn count_cliques_within(r: usize, g: &Graph, cand: VertexSet) -> CopyCount {
    cliques_in(r, g, cand & g.vertices())
}

/// `N(K_r, g)` by recursive neighborhood intersection.
pub fn count_cliques(r: usize, g: &Graph) -> Result<CopyCount> {
    if r == 0 {
        return Err(Error::InvalidArgument("clique order must be positive".into()));
    }
    Ok(count_cliques_within(r, g, g.vertices()))
}

/// `N(K_r, g)` restricted to cliques through `v`: `N(K_{r-1}, g[N(v)])`.
pub fn count_cliques_through_vertex(r: usize, g: &Graph, v: usize) -> Result<CopyCount> {
    if r == 0 {
        return Err(Error::InvalidArgument("clique order must be positive".into()));
    }
    Ok(count_cliques_within(r - 1, g, g.neighbors(v)))
}

/// Whether `g[cand]` contains `K_r`.
pub fn contains_clique(r: usize, g: &Graph, cand: VertexSet) -> bool {
    fn go(r: usize, g: &Graph, cand: VertexSet) -> bool {
        if r == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < r {
            return false;
        }
        if r == 1 {
            return true;
        }
        members(cand).any(|v| go(r - 1, g, cand & g.neighbors(v) & !low_mask(v + 1)))
    }
    go(r, g, cand & g.vertices())
}

/// Largest clique size.
pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, mut cand: VertexSet, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            expand(g, size + 1, cand & g.neighbors(v), best);
        }
    }
    let mut best = 0;
    expand(g, 0, g.vertices(), &mut best);
    best
}

/// `N(h, K(p))` for the complete multipartite graph `K(p)`, without building it.
///
/// Counts injective homomorphisms by a dynamic program over classes: the
/// state is the set of pattern vertices already placed, and each class takes
/// an independent set `B` of the remaining ones in `(size)_{|B|}` ways.
pub fn count_copies_in_multipartite(h: &Graph, p: &PartSizes) -> Result<CopyCount> {
    let hn = h.n();
    if hn > 16 {
        if p.total() <= crate::graph::MAX_VERTICES {
            return count_copies(h, &crate::graph::complete_multipartite(p)?);
        }
        return Err(Error::TooLarge(format!(
            "closed-form counting of a {hn}-vertex pattern"
        )));
    }
    let overflow = || Error::Overflow("multipartite copy count");
    let states = 1usize << hn;
    let full = states - 1;
    let independent: Vec<bool> = (0..states)
        .map(|s| members(s as VertexSet).all(|v| h.neighbors(v) & s as VertexSet == 0))
        .collect();

    let mut dp = vec![0u128; states];
    dp[0] = 1;
    for &size in p.sizes() {
        let falling: Vec<u128> = (0..=hn)
            .scan(1u128, |acc, b| {
                let cur = *acc;
                *acc = acc.saturating_mul(size.saturating_sub(b) as u128);
                Some(cur)
            })
            .collect();
        let mut next = dp.clone();
        for placed in 0..states {
            if dp[placed] == 0 {
                continue;
            }
            let rest = full & !placed;
            // nonempty submasks of rest
            let mut b = rest;
            while b != 0 {
                let k = b.count_ones() as usize;
                if independent[b] && k <= size {
                    let add = dp[placed].checked_mul(falling[k]).ok_or_else(overflow)?;
                    next[placed | b] = next[placed | b].checked_add(add).ok_or_else(overflow)?;
                }
                b = (b - 1) & rest;
            }
        }
        dp = next;
    }
    to_copies(dp[full], h)
}

/// `C(k-1, r) * ceil(n / (k-1))^r`.
pub fn zykov_clique_bound(n: usize, r: usize, k: usize) -> Result<CopyCount> {
    if r == 0 || k <= r {
        return Err(Error::InvalidArgument(format!("need 1 <= r < k, got r={r}, k={k}")));
    }
    let parts = (k - 1) as u64;
    let ceil = (n as u64).div_ceil(parts);
    let power = (0..r).try_fold(1u128, |acc, _| acc.checked_mul(u128::from(ceil)));
    binomial(parts, r as u64)
        .zip(power)
        .and_then(|(b, p)| b.checked_mul(p))
        .and_then(|v| u64::try_from(v).ok())
        .ok_or(Error::Overflow("Zykov bound"))
}
