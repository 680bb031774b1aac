//! Exact decision procedures: cliques, diameter, vertex connectivity,
//! maximum subgraph density and chromatic number.
//!
//! Every checker is a pure function of its input graph. The exponential
//! searches also come in a `*_within` form taking a [`Budget`]; they
//! return [`CheckError::Interrupted`] once it expires.

use thiserror::Error;

mod clique;
mod coloring;
mod connectivity;
mod density;
mod diameter;
pub(crate) mod flow;
mod verdict;

pub use clique::{
    clique_number, clique_number_within, contains_kr, contains_kr_within, count_kr, count_kr_within, MaxClique,
};
pub use coloring::{chromatic_number, chromatic_number_within, Coloring, DEFAULT_CHROMATIC_CAP};
pub use connectivity::{
    is_k_connected, is_k_connected_within, min_vertex_separator, vertex_connectivity, vertex_connectivity_within,
};
pub use density::{max_subgraph_density, DensityMeasure};
pub use diameter::{diameter, diameter_at_most, eccentricity, far_pair, Diameter};
pub use verdict::{verify_clique, verify_coloring, verify_separator, Budget, PropertyVerdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has {n} vertices; at least {min} are required")]
    TooFewVertices { n: usize, min: usize },
    #[error("exact search is capped at {cap} vertices but the graph has {n}; use the clique number as a lower bound instead")]
    TooLarge { n: usize, cap: usize },
    #[error("time budget exhausted")]
    Interrupted,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
