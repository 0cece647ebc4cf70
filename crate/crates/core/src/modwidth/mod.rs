//! Metric dimension parameterized by modular width: a naive modular
//! decomposition followed by a bottom-up dynamic program over factor profiles.

pub mod decomposition;
pub mod dp;

pub use decomposition::{is_module, minimal_module, modular_decomposition, DecompositionNode, NodeKind};
pub use dp::{
    check_conditions, dp_factor, metric_dimension_modwidth, profile_of, quotient_distances,
    DpTable, ModwidthError, ModwidthResult, Profile,
};
