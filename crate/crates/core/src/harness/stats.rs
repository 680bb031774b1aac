use serde::Serialize;

use super::HarnessError;

/// Two-sided 95% normal quantile.
pub const Z_95: f64 = 1.959_963_984_540_054;

/// Wilson score interval for `successes` out of `trials` at quantile `z`.
/// With no trials the interval is the whole of `[0, 1]`.
pub fn wilson_interval(successes: usize, trials: usize, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    let lo = if successes == 0 { 0.0 } else { (center - half).max(0.0) };
    let hi = if successes == trials {
        1.0
    } else {
        (center + half).min(1.0)
    };
    (lo, hi)
}

/// Weighted least-squares non-decreasing fit (pool adjacent violators).
pub fn isotonic_increasing(values: &[f64], weights: &[f64]) -> Vec<f64> {
    assert_eq!(values.len(), weights.len());
    // blocks of (weighted mean, total weight, length)
    let mut blocks: Vec<(f64, f64, usize)> = Vec::with_capacity(values.len());
    for (&v, &w) in values.iter().zip(weights) {
        blocks.push((v, w, 1));
        while blocks.len() > 1 {
            let (m2, w2, l2) = blocks[blocks.len() - 1];
            let (m1, w1, l1) = blocks[blocks.len() - 2];
            if m1 <= m2 {
                break;
            }
            blocks.pop();
            let w = w1 + w2;
            let m = if w > 0.0 {
                (m1 * w1 + m2 * w2) / w
            } else {
                (m1 + m2) / 2.0
            };
            *blocks.last_mut().expect("two blocks present") = (m, w, l1 + l2);
        }
    }
    blocks
        .into_iter()
        .flat_map(|(m, _, len)| std::iter::repeat_n(m, len))
        .collect()
}

/// Where the isotonic probability curve crosses one half.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdEstimate {
    pub m_half: f64,
    /// Largest grid value below one half and smallest at or above it.
    pub bracket: (f64, f64),
    pub isotonic: Vec<f64>,
}

/// Fits a non-decreasing curve to `p_hat` (weighted by `weights`) over
/// `grid` and interpolates linearly where it reaches 1/2.
pub fn estimate_threshold(grid: &[f64], p_hat: &[f64], weights: &[f64]) -> Result<ThresholdEstimate, HarnessError> {
    if grid.len() != p_hat.len() || grid.len() != weights.len() || grid.is_empty() {
        return Err(HarnessError::Config(
            "grid, estimates and weights must have equal non-zero length".into(),
        ));
    }
    let fit = isotonic_increasing(p_hat, weights);
    let above = fit.iter().position(|&p| p >= 0.5);
    match above {
        Some(j) if j > 0 => {
            let i = j - 1;
            let (x0, x1, y0, y1) = (grid[i], grid[j], fit[i], fit[j]);
            let m_half = x0 + (0.5 - y0) / (y1 - y0) * (x1 - x0);
            Ok(ThresholdEstimate {
                m_half,
                bracket: (x0, x1),
                isotonic: fit,
            })
        }
        Some(_) => Err(HarnessError::NoCrossing(format!(
            "curve is already {:.3} at the first grid point {}; extend the grid downwards",
            fit[0], grid[0]
        ))),
        None => Err(HarnessError::NoCrossing(format!(
            "curve stays below 1/2 (max {:.3}); extend the grid upwards",
            fit.last().copied().unwrap_or(0.0)
        ))),
    }
}

/// Indices `i` where the intervals at `i` and `i + 1` are disjoint and the
/// later one lies lower: a decrease larger than sampling noise explains.
pub fn monotonicity_flags(intervals: &[(f64, f64)]) -> Vec<usize> {
    intervals
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1].1 < w[0].0)
        .map(|(i, _)| i)
        .collect()
}
