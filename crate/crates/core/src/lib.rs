//! Random edge augmentation of dense graphs.
//!
//! Start from a graph `H` whose minimum degree is at least `d·n`, add `m`
//! random non-edges, and ask when monotone properties appear: a fixed
//! clique, small diameter, `k`-connectivity. The crate provides
//!
//! * [`graph`]: the immutable graph type, density parameter, vertex sets
//!   and the edge-list file format;
//! * [`generators`]: extremal base graphs and seeded random models;
//! * [`augment`]: the uniform-`m` and Bernoulli-`p` edge addition models;
//! * [`checkers`]: exact decision procedures for the studied properties;
//! * [`partition`]: partition of a graph of minimum degree `k` into
//!   highly connected parts;
//! * [`regularity`]: exhaustive ε-regularity and tuple-counting checks;
//! * [`harness`]: reproducible Monte Carlo sweeps and threshold presets.

mod bits;
mod sample;

pub mod augment;
pub mod checkers;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod partition;
pub mod regularity;
pub mod seed;

pub use graph::{DensityParam, Graph, GraphError, VertexSet};
pub use seed::SeedSpec;
