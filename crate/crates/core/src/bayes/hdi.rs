use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Highest density interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hdi {
    pub low: f64,
    pub high: f64,
    pub mass: f64,
}

impl Hdi {
    pub fn contains(&self, v: f64) -> bool {
        self.low <= v && v <= self.high
    }

    pub fn width(&self) -> f64 {
        self.high - self.low
    }
}

/// Number of sorted samples an interval of `mass` must contain.
pub fn window_len(n: usize, mass: f64) -> usize {
    ((mass * n as f64 - 1e-9).ceil() as usize).clamp(1, n)
}

/// Narrowest interval spanning `ceil(mass * n)` consecutive sorted samples.
///
/// Ties go to the lowest interval.
pub fn hdi(samples: &[f64], mass: f64) -> Result<Hdi> {
    if !(mass > 0.0 && mass < 1.0) {
        return Err(Error::Config(format!("hdi mass must lie in (0, 1), got {mass}")));
    }
    if samples.is_empty() || samples.iter().any(|s| s.is_nan()) {
        return Err(Error::Degenerate("hdi needs non-empty, non-NaN samples".into()));
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let k = window_len(sorted.len(), mass);
    let mut best = 0;
    let mut best_width = f64::INFINITY;
    for i in 0..=sorted.len() - k {
        let width = sorted[i + k - 1] - sorted[i];
        if width < best_width {
            best_width = width;
            best = i;
        }
    }
    Ok(Hdi {
        low: sorted[best],
        high: sorted[best + k - 1],
        mass,
    })
}
