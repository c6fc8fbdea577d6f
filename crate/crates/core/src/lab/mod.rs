//! Executable procedures around generalized Turán problems: symmetrization,
//! density ratios and brackets, the supersaturation averaging machinery,
//! min-copy deletion, degree bounds and edit distance to Turán graphs.

pub mod degree;
pub mod deletion;
pub mod density;
pub mod stability;
pub mod supersat;
pub mod symmetrize;

pub use degree::{check_degree_lemma, degree_lower_bound, DegreeBound, DegreeCheck};
pub use deletion::{
    greedy_min_copy_deletion, greedy_min_copy_deletion_for, DeletionOutcome, DeletionStep, DeletionTrace,
};
pub use density::{
    blow_up_limit_density, check_ratio_monotone, clique_density_limit, density_bracket, DensityBracket, RatioViolation,
};
pub use stability::{distance_profile, max_distance_from, turan_edit_distance, StabilityReport};
pub use supersat::{heavy_subset_census, supersaturation_check, Census, HostValueSource, SupersaturationReport};
pub use symmetrize::{symmetrize, SymmetrizationTrace};

use serde::Serializer;

use crate::graph::Graph;

pub(crate) fn serialize_graph<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::graph6::graph_to_graph6(g))
}
