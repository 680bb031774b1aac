use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::config::{Model, SweepConfig};
use super::stats::{estimate_threshold, monotonicity_flags, wilson_interval, ThresholdEstimate, Z_95};
use super::HarnessError;
use crate::augment::{AugmentError, AugmentResult, Augmenter};
use crate::checkers::{Budget, CheckError};
use crate::graph::Graph;
use crate::SeedSpec;

/// Child tag of the master seed that seeds the base graph.
pub const BASE_GRAPH_TAG: u64 = u64::MAX;

/// Seed of trial `trial` at grid point `grid_index`.
pub fn trial_seed(master: SeedSpec, grid_index: usize, trial: usize) -> SeedSpec {
    master.child(grid_index as u64).child(trial as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TrialOutcome {
    Success,
    Failure,
    /// `m` exceeds the number of non-edges of the base graph; counted as a failure.
    Infeasible,
    /// Timed out; excluded from the estimates.
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridPoint {
    pub value: f64,
    /// Trials with a definite outcome (indeterminate ones excluded).
    pub trials: usize,
    pub successes: usize,
    pub p_hat: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub infeasible: usize,
    pub indeterminate: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub config_hash: String,
    pub master_seed: SeedSpec,
    pub base_graph_seed: SeedSpec,
    pub trial_seed_rule: &'static str,
    pub base_vertices: usize,
    pub base_edges: usize,
    pub base_non_edges: usize,
    pub crate_version: &'static str,
    pub wall_clock_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub model: Model,
    pub property: String,
    pub points: Vec<GridPoint>,
    /// Grid indices `i` whose interval lies entirely above that of `i + 1`.
    pub monotonicity_flags: Vec<usize>,
    pub provenance: Provenance,
}

impl SweepResult {
    /// CSV with header `m,trials,successes,p_hat,ci_lo,ci_hi`. Contains
    /// nothing time-dependent, so reruns of one config are byte-identical.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,trials,successes,p_hat,ci_lo,ci_hi\n");
        for p in &self.points {
            match self.model {
                Model::Uniform => write!(out, "{}", p.value as u64),
                Model::Bernoulli => write!(out, "{:.6}", p.value),
            }
            .expect("writing to a string");
            writeln!(
                out,
                ",{},{},{:.6},{:.6},{:.6}",
                p.trials, p.successes, p.p_hat, p.ci_lo, p.ci_hi
            )
            .expect("writing to a string");
        }
        out
    }

    pub fn sidecar_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serializes")
    }

    /// Writes the CSV to `path` and the JSON sidecar next to it with a
    /// `.json` extension. Returns the sidecar path.
    pub fn write(&self, path: &Path) -> Result<PathBuf, HarnessError> {
        let io = |p: &Path, e: std::io::Error| HarnessError::Io(format!("{}: {e}", p.display()));
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
        }
        std::fs::write(path, self.to_csv()).map_err(|e| io(path, e))?;
        let sidecar = path.with_extension("json");
        std::fs::write(&sidecar, self.sidecar_json()).map_err(|e| io(&sidecar, e))?;
        Ok(sidecar)
    }

    pub fn threshold(&self) -> Result<ThresholdEstimate, HarnessError> {
        let grid: Vec<f64> = self.points.iter().map(|p| p.value).collect();
        let p_hat: Vec<f64> = self.points.iter().map(|p| p.p_hat).collect();
        let weights: Vec<f64> = self.points.iter().map(|p| p.trials as f64).collect();
        estimate_threshold(&grid, &p_hat, &weights)
    }
}

/// A validated config with its base graph built, ready to run or to
/// replay individual trials.
#[derive(Debug, Clone)]
pub struct Sweep {
    config: SweepConfig,
    base: Graph,
}

impl Sweep {
    pub fn new(config: SweepConfig) -> Result<Self, HarnessError> {
        config.validate()?;
        let base = config.generator.build(config.master_seed.child(BASE_GRAPH_TAG))?;
        Ok(Sweep { config, base })
    }

    pub fn config(&self) -> &SweepConfig {
        &self.config
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// Regenerates the random graph of one trial exactly as the sweep does.
    pub fn trial_graph(&self, grid_index: usize, trial: usize) -> Result<AugmentResult, HarnessError> {
        self.draw(&Augmenter::new(&self.base), grid_index, trial)
    }

    fn draw(&self, aug: &Augmenter, grid_index: usize, trial: usize) -> Result<AugmentResult, HarnessError> {
        let value = *self
            .config
            .grid
            .get(grid_index)
            .ok_or_else(|| HarnessError::Config(format!("grid index {grid_index} out of range")))?;
        let seed = trial_seed(self.config.master_seed, grid_index, trial);
        Ok(match self.config.model {
            Model::Uniform => aug.uniform(value as usize, seed)?,
            Model::Bernoulli => aug.bernoulli(value, seed)?,
        })
    }

    fn run_trial(&self, aug: &Augmenter, grid_index: usize, trial: usize) -> Result<TrialOutcome, HarnessError> {
        let graph = match self.draw(aug, grid_index, trial) {
            Ok(r) => r.graph,
            Err(HarnessError::Augment(AugmentError::TooManyEdges { .. })) => return Ok(TrialOutcome::Infeasible),
            Err(e) => return Err(e),
        };
        let budget = self
            .config
            .trial_timeout_ms
            .map_or_else(Budget::unlimited, |ms| Budget::with_timeout(Duration::from_millis(ms)));
        match self.config.property.check_within(&graph, &budget) {
            Ok(true) => Ok(TrialOutcome::Success),
            Ok(false) => Ok(TrialOutcome::Failure),
            Err(CheckError::Interrupted) => Ok(TrialOutcome::Indeterminate),
            Err(e) => Err(e.into()),
        }
    }

    /// Outcomes of every trial, indexed `[grid_index][trial]`.
    pub fn outcomes(&self) -> Result<Vec<Vec<TrialOutcome>>, HarnessError> {
        let aug = Augmenter::new(&self.base);
        let trials = self.config.trials;
        let flat: Vec<TrialOutcome> = (0..self.config.grid.len() * trials)
            .into_par_iter()
            .map(|idx| self.run_trial(&aug, idx / trials, idx % trials))
            .collect::<Result<_, _>>()?;
        Ok(flat.chunks(trials).map(<[TrialOutcome]>::to_vec).collect())
    }

    pub fn run(&self) -> Result<SweepResult, HarnessError> {
        let start = Instant::now();
        let outcomes = self.outcomes()?;
        let points: Vec<GridPoint> = self
            .config
            .grid
            .iter()
            .zip(&outcomes)
            .map(|(&value, row)| {
                let count = |o: TrialOutcome| row.iter().filter(|&&x| x == o).count();
                let indeterminate = count(TrialOutcome::Indeterminate);
                let successes = count(TrialOutcome::Success);
                let trials = row.len() - indeterminate;
                let (ci_lo, ci_hi) = wilson_interval(successes, trials, Z_95);
                GridPoint {
                    value,
                    trials,
                    successes,
                    p_hat: if trials == 0 {
                        0.0
                    } else {
                        successes as f64 / trials as f64
                    },
                    ci_lo,
                    ci_hi,
                    infeasible: count(TrialOutcome::Infeasible),
                    indeterminate,
                }
            })
            .collect();
        let intervals: Vec<(f64, f64)> = points.iter().map(|p| (p.ci_lo, p.ci_hi)).collect();
        Ok(SweepResult {
            model: self.config.model,
            property: self.config.property.label(),
            monotonicity_flags: monotonicity_flags(&intervals),
            points,
            provenance: Provenance {
                config_hash: self.config.hash(),
                master_seed: self.config.master_seed,
                base_graph_seed: self.config.master_seed.child(BASE_GRAPH_TAG),
                trial_seed_rule: "master.child(grid_index).child(trial_index)",
                base_vertices: self.base.n(),
                base_edges: self.base.edge_count(),
                base_non_edges: self.base.non_edge_count(),
                crate_version: env!("CARGO_PKG_VERSION"),
                wall_clock_ms: start.elapsed().as_millis(),
            },
        })
    }
}

/// Builds the base graph, runs every trial and aggregates per grid point.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepResult, HarnessError> {
    Sweep::new(config.clone())?.run()
}
