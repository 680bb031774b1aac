//! Reruns the pilot sweeps behind the constants in `presets.json`.
//!
//! `cargo run --release -p dense-augment --example calibrate`

use std::time::Instant;

use dense_augment::harness::{theorem_preset, PresetParams, Sweep};
use dense_augment::SeedSpec;

const CALIBRATION_SEED: u64 = 20261015;

fn run(name: &str, params: PresetParams) {
    let start = Instant::now();
    let preset = theorem_preset(name, &params, SeedSpec::from_seed(CALIBRATION_SEED), 200).expect("valid preset");
    let result = Sweep::new(preset.config).and_then(|s| s.run()).expect("sweep runs");
    println!(
        "{name} {} reference [{:.2}, {:.2}]",
        serde_json::to_string(&params).expect("params serialize"),
        preset.reference.lower,
        preset.reference.upper
    );
    for p in &result.points {
        println!("  m = {:>6}  p_hat = {:.3}", p.value, p.p_hat);
    }
    match result.threshold() {
        Ok(t) => println!("  m_half = {:.1} in [{}, {}]", t.m_half, t.bracket.0, t.bracket.1),
        Err(e) => println!("  {e}"),
    }
    println!("  {:.1?}", start.elapsed());
}

fn main() {
    let d = |s: &str| Some(s.parse().expect("valid density"));
    run(
        "thm2",
        PresetParams {
            n: 120,
            d: d("1/2"),
            r: Some(5),
            r0: Some(2),
            k: None,
        },
    );
    run(
        "thm3",
        PresetParams {
            n: 150,
            d: d("0.15"),
            ..Default::default()
        },
    );
    run(
        "thm4a",
        PresetParams {
            n: 200,
            d: d("1/4"),
            ..Default::default()
        },
    );
    run(
        "thm4b",
        PresetParams {
            n: 200,
            d: d("1/4"),
            ..Default::default()
        },
    );
    run(
        "thm5",
        PresetParams {
            n: 200,
            ..Default::default()
        },
    );
    run(
        "thm6",
        PresetParams {
            n: 60,
            d: d("1/5"),
            k: Some(4),
            ..Default::default()
        },
    );
}
