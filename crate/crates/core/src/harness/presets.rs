use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::config::{Model, Property, SweepConfig};
use super::sweep::BASE_GRAPH_TAG;
use super::HarnessError;
use crate::generators::GeneratorSpec;
use crate::graph::DensityParam;
use crate::SeedSpec;

const GRID_POINTS: usize = 12;

#[derive(Debug, Clone, Deserialize)]
struct Calibration {
    slack: f64,
    #[allow(dead_code)]
    meaning: String,
    calibration_seed: u64,
    calibration: String,
}

fn calibrations() -> BTreeMap<String, Calibration> {
    serde_json::from_str(include_str!("../../presets.json")).expect("bundled presets.json is valid")
}

fn calibration(key: &str) -> Calibration {
    calibrations()
        .remove(key)
        .expect("every preset has a calibration entry")
}

pub fn preset_names() -> &'static [&'static str] {
    &["thm2", "thm3", "thm4a", "thm4b", "thm5", "thm6"]
}

/// Parameters of a preset; which of `d`, `r`, `r0`, `k` are needed
/// depends on the preset.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresetParams {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<DensityParam>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r0: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

/// Reference values of `m` from the threshold statement at this `n`, with
/// the asymptotic slack terms replaced by the calibrated constant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reference {
    pub lower: f64,
    pub upper: f64,
    pub lower_formula: String,
    pub upper_formula: String,
    /// The upper formula is far from tight at this scale and only bounds
    /// the crossing from above.
    pub upper_is_cap: bool,
    pub slack: f64,
    pub calibration_seed: u64,
    pub calibration: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Preset {
    pub name: String,
    pub params: PresetParams,
    pub config: SweepConfig,
    pub reference: Reference,
}

fn invalid(msg: impl Into<String>) -> HarnessError {
    HarnessError::InvalidPresetParams(msg.into())
}

fn need<T: Copy>(value: Option<T>, name: &str, preset: &str) -> Result<T, HarnessError> {
    value.ok_or_else(|| invalid(format!("{preset} needs parameter `{name}`")))
}

fn ratio_to_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// 12 geometric points over `[max(lower/4, 1), 4·upper]`, clipped to
/// `max_m`, rounded and deduplicated. When `lower/4` rounds to 0 the grid
/// also starts at `m = 0`.
pub(crate) fn geometric_grid(lower: f64, upper: f64, max_m: usize) -> Vec<f64> {
    let hi = (4.0 * upper).min(max_m as f64).max(1.0);
    let lo = (lower / 4.0).max(1.0).min(hi);
    let ratio = (hi / lo).powf(1.0 / (GRID_POINTS - 1) as f64);
    let mut grid: Vec<f64> = (0..GRID_POINTS)
        .map(|i| (lo * ratio.powi(i as i32)).round().min(max_m as f64))
        .collect();
    grid.dedup();
    if (lower / 4.0).round() == 0.0 && grid[0] > 0.0 {
        grid.insert(0, 0.0);
    }
    grid
}

/// Builds the sweep for a named threshold statement. The grid brackets
/// the reference values and is clipped to the non-edge count of the base
/// graph drawn from `master_seed`, exactly as the sweep will draw it.
pub fn theorem_preset(
    name: &str,
    params: &PresetParams,
    master_seed: SeedSpec,
    trials: usize,
) -> Result<Preset, HarnessError> {
    let n = params.n;
    if n < 4 {
        return Err(invalid(format!("n = {n} is too small")));
    }
    let ln_n = (n as f64).ln();
    let (generator, property, reference) = match name {
        "thm2" => {
            let r = need(params.r, "r", name)?;
            let r0 = need(params.r0, "r0", name)?;
            let d = need(params.d.as_ref(), "d", name)?;
            if !(r > r0 && r0 >= 2) {
                return Err(invalid(format!("need r > r0 >= 2, got r = {r}, r0 = {r0}")));
            }
            let (lo, hi) = (
                Ratio::new(r0 as i64 - 2, r0 as i64 - 1),
                Ratio::new(r0 as i64 - 1, r0 as i64),
            );
            if !(d.value() > lo && d.value() <= hi) {
                return Err(invalid(format!("d = {d} must lie in ({lo}, {hi}] for r0 = {r0}")));
            }
            let cal = calibration("thm2");
            let exponent = 2.0 - 2.0 / ((r.div_ceil(r0) - 1) as f64);
            let scale = (n as f64).powf(exponent);
            let note = if r <= 2 * r0 {
                "r <= 2 r0: any growing number of edges suffices, so the scale is constant".to_string()
            } else {
                format!("scale n^{exponent:.4}")
            };
            (
                GeneratorSpec::Turan { n, r0 },
                Property::ContainsClique { r },
                Reference {
                    lower: scale / cal.slack,
                    upper: scale * cal.slack,
                    lower_formula: "n^(2 - 2/(ceil(r/r0) - 1)) / slack".into(),
                    upper_formula: "slack * n^(2 - 2/(ceil(r/r0) - 1))".into(),
                    upper_is_cap: false,
                    slack: cal.slack,
                    calibration_seed: cal.calibration_seed,
                    calibration: cal.calibration,
                    note,
                },
            )
        }
        "thm3" => {
            let d = need(params.d.as_ref(), "d", name)?;
            let cal = calibration("thm3");
            (
                GeneratorSpec::BlockedGnp { n, d: *d, seed: None },
                Property::DiameterAtMost { max: 5 },
                Reference {
                    lower: 1.0,
                    upper: cal.slack,
                    lower_formula: "1".into(),
                    upper_formula: "slack (constant standing in for a growing m)".into(),
                    upper_is_cap: false,
                    slack: cal.slack,
                    calibration_seed: cal.calibration_seed,
                    calibration: cal.calibration,
                    note: "a single edge between the two dense blocks already gives diameter at most 5".into(),
                },
            )
        }
        "thm4a" | "thm4b" => {
            let d = need(params.d.as_ref(), "d", name)?;
            let df = d.as_f64();
            if df >= 0.5 {
                return Err(invalid(format!("{name} needs d < 1/2, got {d}")));
            }
            let cal = calibration("thm4");
            let (max, note) = if name == "thm4a" {
                (3, "diameter at most 3")
            } else {
                (4, "diameter at most 4, the complement of diameter at least 5")
            };
            (
                GeneratorSpec::BlockedGnp { n, d: *d, seed: None },
                Property::DiameterAtMost { max },
                Reference {
                    lower: (ln_n / (-2.0 * (1.0 - 2.0 * df).ln()) - cal.slack).max(0.0),
                    upper: (1.0 - df) / (df * df) * ln_n + cal.slack,
                    lower_formula: "ln n / (-2 ln(1 - 2d)) - slack".into(),
                    upper_formula: "(1 - d)/d^2 ln n + slack".into(),
                    upper_is_cap: false,
                    slack: cal.slack,
                    calibration_seed: cal.calibration_seed,
                    calibration: cal.calibration,
                    note: note.into(),
                },
            )
        }
        "thm5" => {
            let d = params
                .d
                .unwrap_or(DensityParam::from_ratio(1, 2).expect("1/2 is a valid density"));
            let df = d.as_f64();
            if df > 0.5 {
                return Err(invalid(format!("thm5 needs d <= 1/2, got {d}")));
            }
            let cal = calibration("thm5");
            let nf = n as f64;
            (
                GeneratorSpec::TwoCliques { n },
                Property::DiameterAtMost { max: 2 },
                Reference {
                    lower: (0.5 * nf * ln_n - cal.slack * nf).max(0.0),
                    upper: (1.0 - df) / df * nf * ln_n + cal.slack * nf,
                    lower_formula: "n ln n / 2 - slack n".into(),
                    upper_formula: "(1 - d)/d n ln n + slack n".into(),
                    upper_is_cap: false,
                    slack: cal.slack,
                    calibration_seed: cal.calibration_seed,
                    calibration: cal.calibration,
                    note: format!("upper formula at d = {d}"),
                },
            )
        }
        "thm6" => {
            let d = need(params.d.as_ref(), "d", name)?;
            let k = need(params.k, "k", name)?;
            let df = d.as_f64();
            if df >= 0.5 {
                return Err(invalid(format!("thm6 needs d < 1/2, got {d}")));
            }
            if k == 0 {
                return Err(invalid("thm6 needs k >= 1"));
            }
            let clique_size = d.min_degree_for(n) + 1;
            let t = n / clique_size;
            if t < 2 {
                return Err(invalid(format!(
                    "only {t} clique(s) of size {clique_size} fit in n = {n}"
                )));
            }
            let cal = calibration("thm6");
            (
                GeneratorSpec::DisjointCliques { n, clique_size },
                Property::KConnected { k },
                Reference {
                    lower: k as f64 / 2.0 * t as f64,
                    upper: ratio_to_f64(Ratio::from_integer(640 * k as i64) / (d.value() * d.value())),
                    lower_formula: "(k/2) floor(n/(dn + 1))".into(),
                    upper_formula: "640 k / d^2".into(),
                    upper_is_cap: true,
                    slack: cal.slack,
                    calibration_seed: cal.calibration_seed,
                    calibration: cal.calibration,
                    note: format!("{t} cliques of size at least {clique_size}; the upper formula exceeds the crossing by orders of magnitude"),
                },
            )
        }
        other => return Err(HarnessError::UnknownPreset(other.to_string())),
    };

    let base = generator.build(master_seed.child(BASE_GRAPH_TAG))?;
    if let (Some(d), true) = (
        params.d.as_ref(),
        matches!(name, "thm2" | "thm3" | "thm4a" | "thm4b" | "thm6"),
    ) {
        if !base.is_dense(d) {
            return Err(invalid(format!("base graph has minimum degree below {d}·n")));
        }
    }
    let max_m = base.non_edge_count();
    if max_m == 0 {
        return Err(invalid("base graph is complete"));
    }
    let config = SweepConfig {
        generator,
        model: Model::Uniform,
        grid: geometric_grid(reference.lower, reference.upper, max_m),
        trials,
        property,
        master_seed,
        output_path: None,
        trial_timeout_ms: None,
    };
    config.validate()?;
    Ok(Preset {
        name: name.to_string(),
        params: params.clone(),
        config,
        reference,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Option<DensityParam> {
        Some(s.parse().unwrap())
    }

    fn preset(name: &str, params: PresetParams) -> Result<Preset, HarnessError> {
        theorem_preset(name, &params, SeedSpec::from_seed(1), 10)
    }

    #[test]
    fn thm6_reference_values() {
        let p = preset(
            "thm6",
            PresetParams {
                n: 60,
                d: d("0.2"),
                k: Some(4),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(p.reference.lower, 8.0);
        assert_eq!(p.reference.upper, 64000.0);
        assert!(p.reference.upper_is_cap);
        assert_eq!(
            p.config.generator,
            GeneratorSpec::DisjointCliques { n: 60, clique_size: 13 }
        );
        let max_m = p
            .config
            .generator
            .build(SeedSpec::from_seed(0))
            .unwrap()
            .non_edge_count();
        assert_eq!(*p.config.grid.last().unwrap(), max_m as f64);
        assert_eq!(p.config.grid[0], 2.0);
    }

    #[test]
    fn thm2_exponent_and_hypotheses() {
        let params = PresetParams {
            n: 120,
            d: d("1/2"),
            r: Some(5),
            r0: Some(2),
            k: None,
        };
        let p = preset("thm2", params.clone()).unwrap();
        let s = p.reference.slack;
        assert!((p.reference.upper - 120.0 * s).abs() < 1e-9);
        assert!((p.reference.lower - 120.0 / s).abs() < 1e-9);
        assert_eq!(p.config.property, Property::ContainsClique { r: 5 });

        let bad = PresetParams {
            d: d("0.6"),
            ..params.clone()
        };
        assert!(matches!(preset("thm2", bad), Err(HarnessError::InvalidPresetParams(_))));
        let bad = PresetParams {
            r: Some(2),
            ..params.clone()
        };
        assert!(matches!(preset("thm2", bad), Err(HarnessError::InvalidPresetParams(_))));
        let bad = PresetParams {
            r0: Some(3),
            d: d("0.6"),
            ..params
        };
        assert!(preset("thm2", bad).is_ok());
    }

    #[test]
    fn thm4_upper_reference() {
        let p = preset(
            "thm4a",
            PresetParams {
                n: 1000,
                d: d("0.25"),
                ..Default::default()
            },
        )
        .unwrap();
        let slack = p.reference.slack;
        assert!((p.reference.upper - slack - 82.89).abs() < 0.01);
        assert!(preset(
            "thm4b",
            PresetParams {
                n: 100,
                d: d("0.5"),
                ..Default::default()
            }
        )
        .is_err());
    }

    #[test]
    fn thm5_reference_and_grid() {
        let p = preset(
            "thm5",
            PresetParams {
                n: 200,
                ..Default::default()
            },
        )
        .unwrap();
        assert!((p.reference.lower - 129.83).abs() < 0.01);
        assert!((p.reference.upper - 1459.66).abs() < 0.01);
        let g = &p.config.grid;
        assert!(g.len() >= 10);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!(g[0] <= p.reference.lower && *g.last().unwrap() >= p.reference.upper);
    }

    #[test]
    fn unknown_and_missing() {
        assert!(matches!(
            preset(
                "thm9",
                PresetParams {
                    n: 10,
                    ..Default::default()
                }
            ),
            Err(HarnessError::UnknownPreset(_))
        ));
        assert!(matches!(
            preset(
                "thm6",
                PresetParams {
                    n: 60,
                    d: d("0.2"),
                    ..Default::default()
                }
            ),
            Err(HarnessError::InvalidPresetParams(_))
        ));
    }

    #[test]
    fn geometric_grid_properties() {
        let g = geometric_grid(8.0, 100.0, 1000);
        assert_eq!(g.len(), 12);
        assert_eq!(g[0], 2.0);
        assert_eq!(g[11], 400.0);
        let g = geometric_grid(0.0, 2.0, 5);
        assert_eq!(g, vec![0.0, 1.0, 2.0, 3.0, 4.0, 5.0]);
        assert_eq!(geometric_grid(1.0, 30.0, 1000)[0], 0.0);
    }

    #[test]
    fn calibrations_cover_all_presets() {
        let cal = calibrations();
        for key in ["thm2", "thm3", "thm4", "thm5", "thm6"] {
            assert!(cal.contains_key(key));
        }
    }
}
