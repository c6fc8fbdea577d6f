//! Simple undirected graphs on at most 64 vertices.
//!
//! Every vertex owns one `u64` neighbor row, so neighborhood intersection,
//! degree and induced-set edge counts are single word operations.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// Bitset of vertex indices.
pub type VertexSet = u64;

#[inline]
pub const fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn low_mask(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a [`VertexSet`], lowest first.
#[derive(Clone, Copy)]
pub struct Members(VertexSet);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

#[inline]
pub fn members(set: VertexSet) -> Members {
    Members(set)
}

/// Simple undirected graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(format!(
                "{n} vertices exceeds the {MAX_VERTICES}-vertex limit"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            edges: 0,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) is not valid on {n} vertices"
                )));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, checking symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !all != 0 || row & bit(v) != 0 {
                return Err(Error::InvalidArgument(format!("row {v} is out of range")));
            }
            for u in members(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::InvalidArgument(format!("rows are not symmetric at ({v}, {u})")));
                }
            }
        }
        g.edges = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        g.adj = rows;
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        g.edges = n * n.saturating_sub(1) / 2;
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument("a cycle needs at least 3 vertices".into()));
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("static construction")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        low_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Adds `uv`; returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n && u != v, "invalid edge ({u}, {v})");
        if self.has_edge(u, v) {
            return false;
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        self.edges += 1;
        true
    }

    /// Removes `uv`; returns false if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return false;
        }
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        self.edges -= 1;
        true
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| members(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Number of edges with both ends in `set`.
    #[inline]
    pub fn edges_within(&self, set: VertexSet) -> usize {
        members(set)
            .map(|v| (self.adj[v] & set).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Subgraph induced by `set`, relabelled in increasing index order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let set = set & self.vertices();
        let verts: Vec<usize> = members(set).collect();
        let mut pos = [0usize; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let adj: Vec<VertexSet> = verts
            .iter()
            .map(|&v| members(self.adj[v] & set).fold(0, |acc, u| acc | bit(pos[u])))
            .collect();
        let edges = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph {
            n: verts.len(),
            adj,
            edges,
        }
    }

    /// Graph with vertex `v` removed (later vertices shift down by one).
    pub fn without_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertices() & !bit(v))
    }

    /// Adds vertex `n` adjacent to exactly `neighborhood`.
    pub fn with_vertex(&self, neighborhood: VertexSet) -> Result<Graph> {
        if self.n >= MAX_VERTICES {
            return Err(Error::TooLarge("cannot add a 65th vertex".into()));
        }
        let neighborhood = neighborhood & self.vertices();
        let v = self.n;
        let mut adj = self.adj.clone();
        for u in members(neighborhood) {
            adj[u] |= bit(v);
        }
        adj.push(neighborhood);
        Ok(Graph {
            n: v + 1,
            adj,
            edges: self.edges + neighborhood.count_ones() as usize,
        })
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.n);
        let mut inv = [0usize; MAX_VERTICES];
        for (i, &v) in order.iter().enumerate() {
            inv[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| members(self.adj[v]).fold(0, |acc, u| acc | bit(inv[u])))
            .collect();
        Graph {
            n: self.n,
            adj,
            edges: self.edges,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.edges == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let next = members(frontier).fold(0, |acc, v| acc | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == self.vertices()
    }

    /// True when non-adjacency is an equivalence relation, i.e. the graph
    /// is complete multipartite (the edgeless and complete graphs included).
    pub fn is_complete_multipartite(&self) -> bool {
        let all = self.vertices();
        (0..self.n).all(|v| {
            let class = all & !self.adj[v];
            members(class).all(|u| all & !self.adj[u] == class)
        })
    }

    /// Classes of a complete multipartite graph in order of smallest member.
    pub fn multipartite_classes(&self) -> Option<Vec<Vec<usize>>> {
        if !self.is_complete_multipartite() {
            return None;
        }
        let all = self.vertices();
        let mut left = all;
        let mut classes = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let class = all & !self.adj[v];
            classes.push(members(class).collect());
            left &= !class;
        }
        Some(classes)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Class sizes of a complete multipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PartSizes(Vec<usize>);

impl PartSizes {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::InvalidArgument("class sizes must be positive".into()));
        }
        Ok(PartSizes(sizes))
    }

    /// Partition of `n` into `parts` classes differing by at most one,
    /// larger classes first. Empty classes (when `parts > n`) are dropped.
    pub fn balanced(n: usize, parts: usize) -> Result<Self> {
        if parts == 0 {
            return Err(Error::InvalidArgument("need at least one class".into()));
        }
        let (q, rem) = (n / parts, n % parts);
        let sizes = (0..parts)
            .map(|i| q + usize::from(i < rem))
            .filter(|&s| s > 0)
            .collect();
        Ok(PartSizes(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Complete multipartite graph; vertices numbered class by class.
pub fn complete_multipartite(parts: &PartSizes) -> Result<Graph> {
    let n = parts.total();
    let mut g = Graph::empty(n)?;
    let all = low_mask(n);
    let mut start = 0;
    for &size in parts.sizes() {
        let class = low_mask(start + size) & !low_mask(start);
        for v in start..start + size {
            g.adj[v] = all & !class;
        }
        start += size;
    }
    g.edges = g.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
    Ok(g)
}

/// The Turán graph on `n` vertices with `parts` classes.
pub fn turan_graph(n: usize, parts: usize) -> Result<Graph> {
    complete_multipartite(&PartSizes::balanced(n, parts)?)
}

/// Blow-up `g[t]`: vertex `(v, i)` becomes index `v * t + i`.
pub fn blow_up(g: &Graph, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidArgument("blow-up factor must be positive".into()));
    }
    let n = g
        .n()
        .checked_mul(t)
        .filter(|&n| n <= MAX_VERTICES)
        .ok_or_else(|| Error::TooLarge(format!("blow-up of {} vertices by {t}", g.n())))?;
    let block = low_mask(t);
    let rows = (0..n)
        .map(|x| members(g.neighbors(x / t)).fold(0, |acc, u| acc | (block << (u * t))))
        .collect();
    let edges = g.edge_count() * t * t;
    Ok(Graph { n, adj: rows, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_small_cases() {
        let g = turan_graph(4, 2).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g, Graph::cycle(4).unwrap().permuted(&[0, 2, 1, 3]));

        let g = turan_graph(5, 3).unwrap();
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.multipartite_classes().unwrap(), vec![vec![0, 1], vec![2, 3], vec![4]]);

        assert_eq!(turan_graph(3, 5).unwrap(), Graph::complete(3).unwrap());
        assert!(turan_graph(3, 0).is_err());
        assert!(turan_graph(65, 2).is_err());
    }

    #[test]
    fn mantel_edge_counts() {
        for n in 0..=64 {
            assert_eq!(turan_graph(n, 2).unwrap().edge_count(), n * n / 4, "n={n}");
        }
    }

    #[test]
    fn multipartite_constructions() {
        let p = |v: Vec<usize>| PartSizes::new(v).unwrap();
        assert_eq!(
            complete_multipartite(&p(vec![1, 1, 1])).unwrap(),
            Graph::complete(3).unwrap()
        );
        assert_eq!(complete_multipartite(&p(vec![3, 2])).unwrap().edge_count(), 6);
        assert!(PartSizes::new(vec![2, 0]).is_err());
        assert_eq!(PartSizes::balanced(7, 3).unwrap().sizes(), &[3, 2, 2]);
    }

    #[test]
    fn blow_ups() {
        let k2 = Graph::complete(2).unwrap();
        let c4 = blow_up(&k2, 2).unwrap();
        assert_eq!(c4, turan_graph(4, 2).unwrap());

        let p = Graph::petersen();
        assert_eq!(blow_up(&p, 1).unwrap(), p);

        let k3 = blow_up(&Graph::complete(3).unwrap(), 2).unwrap();
        assert_eq!(k3.edge_count(), 12);
        assert_eq!(k3, turan_graph(6, 3).unwrap());

        assert!(blow_up(&p, 7).is_err());
    }

    #[test]
    fn vertex_surgery() {
        let c5 = Graph::cycle(5).unwrap();
        let p4 = c5.without_vertex(4);
        assert_eq!(p4, Graph::path(4).unwrap());
        let back = p4.with_vertex(bit(0) | bit(3)).unwrap();
        assert_eq!(back, c5);
        assert_eq!(c5.edges_within(0b00111), 2);
        assert!(!c5.is_complete_multipartite());
        assert!(Graph::empty(4).unwrap().is_complete_multipartite());
    }

    #[test]
    fn rows_are_validated() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        let g = Graph::from_rows(vec![0b10, 0b01]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }
}
