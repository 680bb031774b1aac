//! Reproducible Monte Carlo sweeps over the number of added edges, with
//! Wilson intervals, isotonic threshold estimates and preset experiments
//! for each threshold statement.

mod config;
mod lower_bound;
mod presets;
mod stats;
mod sweep;

use thiserror::Error;

use crate::augment::AugmentError;
use crate::checkers::CheckError;
use crate::generators::GeneratorError;

pub use config::{Model, Property, SweepConfig};
pub use lower_bound::{deterministic_lower_bound_check, spot_check_lower_bound, SpotCheckReport};
pub use presets::{preset_names, theorem_preset, Preset, PresetParams, Reference};
pub use stats::{
    estimate_threshold, isotonic_increasing, monotonicity_flags, wilson_interval, ThresholdEstimate, Z_95,
};
pub use sweep::{run_sweep, trial_seed, GridPoint, Provenance, Sweep, SweepResult, TrialOutcome, BASE_GRAPH_TAG};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid config: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("the isotonic curve does not cross 1/2 ({0}); widen the grid")]
    NoCrossing(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("invalid preset parameters: {0}")]
    InvalidPresetParams(String),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Augment(#[from] AugmentError),
    #[error(transparent)]
    Check(#[from] CheckError),
}
