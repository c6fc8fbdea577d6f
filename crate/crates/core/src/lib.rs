//! Exact small-scale computation for generalized Turán problems.
//!
//! Graphs are bitset-backed and capped at 64 vertices. On top of copy
//! counting and isomorph-free enumeration sit the extremal search
//! (`ex(n, H, F)`), a persistent catalog, and executable versions of the
//! classical procedures in [`lab`].

pub mod canon;
pub mod catalog;
pub mod coloring;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod lab;
pub mod rational;

pub use catalog::{Catalog, Computing, ExtremalSource};
pub use coloring::{chromatic_number, exists_homomorphism};
pub use counting::{
    count_automorphisms, count_cliques, count_copies, count_copies_in_multipartite, count_copies_through_vertex,
    zykov_clique_bound, CopyCount,
};
pub use enumerate::{enumerate_free_graphs, filter_graph6_stream};
pub use error::{Error, Result};
pub use extremal::{generalized_turan, is_degenerate_pair, ExtremalRecord};
pub use graph::{blow_up, complete_multipartite, turan_graph, Graph, PartSizes};
pub use graph6::{graph_from_graph6, graph_to_graph6};
pub use rational::{parse_rational, Rational};
