use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::HarnessError;
use crate::checkers::{
    chromatic_number_within, clique_number_within, contains_kr_within, diameter_at_most, is_k_connected_within, Budget,
    CheckError, DEFAULT_CHROMATIC_CAP,
};
use crate::generators::GeneratorSpec;
use crate::graph::Graph;
use crate::SeedSpec;

/// Random edge model: `m` uniform non-edges, or each non-edge with probability `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    Uniform,
    Bernoulli,
}

/// Monotone increasing graph property evaluated on each trial graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Property {
    ContainsClique { r: usize },
    DiameterAtMost { max: usize },
    KConnected { k: usize },
    Connected,
    ChromaticAtLeast { c: usize },
}

impl Property {
    pub fn check(&self, g: &Graph) -> Result<bool, CheckError> {
        self.check_within(g, &Budget::unlimited())
    }

    pub fn check_within(&self, g: &Graph, budget: &Budget) -> Result<bool, CheckError> {
        Ok(match self {
            Property::ContainsClique { r } => contains_kr_within(g, *r, budget)?.holds,
            Property::DiameterAtMost { max } => diameter_at_most(g, *max)?.holds,
            Property::KConnected { k } => is_k_connected_within(g, *k, budget)?.holds,
            Property::Connected => is_k_connected_within(g, 1, budget)?.holds,
            Property::ChromaticAtLeast { c } => {
                clique_number_within(g, budget)?.size >= *c
                    || chromatic_number_within(g, DEFAULT_CHROMATIC_CAP, budget)?.chromatic_number >= *c
            }
        })
    }

    pub fn label(&self) -> String {
        match self {
            Property::ContainsClique { r } => format!("contains K_{r}"),
            Property::DiameterAtMost { max } => format!("diam <= {max}"),
            Property::KConnected { k } => format!("{k}-connected"),
            Property::Connected => "connected".into(),
            Property::ChromaticAtLeast { c } => format!("chi >= {c}"),
        }
    }
}

fn default_trials() -> usize {
    200
}

/// Declarative description of one Monte Carlo sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub generator: GeneratorSpec,
    pub model: Model,
    /// Values of `m` (uniform model, non-negative integers) or `p`.
    pub grid: Vec<f64>,
    #[serde(default = "default_trials")]
    pub trials: usize,
    pub property: Property,
    pub master_seed: SeedSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
    /// Per-trial wall-clock limit; trials that exceed it are reported as
    /// indeterminate and left out of the estimates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trial_timeout_ms: Option<u64>,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |msg: String| Err(HarnessError::Config(msg));
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        if self.grid.is_empty() {
            return bad("grid is empty".into());
        }
        if let Some(w) = self
            .grid
            .windows(2)
            .find(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less))
        {
            return bad(format!("grid must be strictly increasing ({} then {})", w[0], w[1]));
        }
        for &x in &self.grid {
            let ok = match self.model {
                Model::Uniform => x >= 0.0 && x.fract() == 0.0 && x <= u32::MAX as f64,
                Model::Bernoulli => (0.0..=1.0).contains(&x),
            };
            if !ok {
                return bad(match self.model {
                    Model::Uniform => format!("uniform grid values must be non-negative integers, got {x}"),
                    Model::Bernoulli => format!("bernoulli grid values must lie in [0, 1], got {x}"),
                });
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        let config: SweepConfig = serde_json::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// SHA-256 of the compact JSON form, hex encoded.
    pub fn hash(&self) -> String {
        let canonical = serde_json::to_string(self).expect("config serializes");
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }
}
