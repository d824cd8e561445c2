//! Convergence diagnostics for multi-chain MCMC output.
//!
//! R-hat and effective sample size follow the split-chain formulation: each
//! chain is cut in half so that within-chain drift shows up as between-chain
//! disagreement.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub mean: f64,
    pub sd: f64,
    pub mcse: f64,
    pub rhat: f64,
    pub ess: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceCriteria {
    pub max_mcse: f64,
    pub max_rhat: f64,
    pub min_ess: f64,
}

impl Default for ConvergenceCriteria {
    fn default() -> Self {
        ConvergenceCriteria {
            max_mcse: 0.02,
            max_rhat: 1.01,
            min_ess: 400.0,
        }
    }
}

impl Diagnostics {
    pub fn passes(&self, c: &ConvergenceCriteria) -> bool {
        self.mcse < c.max_mcse && self.rhat < c.max_rhat && self.ess >= c.min_ess
    }
}

fn split(chains: &[Vec<f64>]) -> Vec<&[f64]> {
    let mut out = Vec::with_capacity(chains.len() * 2);
    for c in chains {
        let half = c.len() / 2;
        out.push(&c[..half]);
        out.push(&c[c.len() - half..]);
    }
    out
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

fn variance(xs: &[f64]) -> f64 {
    let m = mean(xs);
    xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (xs.len() as f64 - 1.0)
}

/// (mean within-chain variance, pooled variance estimate) over equal-length chains.
fn variance_components(chains: &[&[f64]]) -> (f64, f64) {
    let n = chains[0].len() as f64;
    let means: Vec<f64> = chains.iter().map(|c| mean(c)).collect();
    let w = chains.iter().map(|c| variance(c)).sum::<f64>() / chains.len() as f64;
    let b = if chains.len() > 1 { n * variance(&means) } else { 0.0 };
    (w, (n - 1.0) / n * w + b / n)
}

/// Split-chain potential scale reduction factor; NaN for constant chains.
pub fn split_rhat(chains: &[Vec<f64>]) -> f64 {
    let halves = split(chains);
    if halves.is_empty() || halves[0].len() < 2 {
        return f64::NAN;
    }
    let (w, var_plus) = variance_components(&halves);
    if !(w > 0.0) {
        return f64::NAN;
    }
    (var_plus / w).sqrt()
}

fn autocovariance(xs: &[f64], m: f64, lag: usize) -> f64 {
    let n = xs.len();
    let mut s = 0.0;
    for t in 0..n - lag {
        s += (xs[t] - m) * (xs[t + lag] - m);
    }
    s / n as f64
}

/// Multi-chain effective sample size with Geyer's initial monotone sequence;
/// 0 for constant chains.
pub fn ess(chains: &[Vec<f64>]) -> f64 {
    let halves = split(chains);
    if halves.is_empty() || halves[0].len() < 4 {
        return 0.0;
    }
    let n = halves[0].len();
    let total = (n * halves.len()) as f64;
    let (w, var_plus) = variance_components(&halves);
    if !(w > 0.0) {
        return 0.0;
    }
    let means: Vec<f64> = halves.iter().map(|c| mean(c)).collect();
    let rho = |lag: usize| -> f64 {
        if lag == 0 {
            return 1.0;
        }
        let acov = halves
            .iter()
            .zip(&means)
            .map(|(c, &m)| autocovariance(c, m, lag))
            .sum::<f64>()
            / halves.len() as f64;
        1.0 - (w - acov) / var_plus
    };
    let mut tau = -1.0;
    let mut previous_pair = f64::INFINITY;
    let mut lag = 0;
    while lag + 1 < n {
        let mut pair = rho(lag) + rho(lag + 1);
        if pair <= 0.0 {
            break;
        }
        pair = pair.min(previous_pair);
        tau += 2.0 * pair;
        previous_pair = pair;
        lag += 2;
    }
    let tau = tau.max(1.0 / total.log10());
    total / tau
}

pub fn diagnose(chains: &[Vec<f64>]) -> Diagnostics {
    let all: Vec<f64> = chains.iter().flatten().copied().collect();
    let mean = if all.is_empty() { f64::NAN } else { mean(&all) };
    let sd = if all.len() > 1 { variance(&all).sqrt() } else { 0.0 };
    let ess = ess(chains);
    let mcse = if ess > 0.0 { sd / ess.sqrt() } else { f64::NAN };
    Diagnostics {
        mean,
        sd,
        mcse,
        rhat: split_rhat(chains),
        ess,
    }
}
