use serde::{Deserialize, Serialize};

use super::observations::{DormancyGroup, ObservationSet};
use super::ModelKind;

pub const SIGMA_LOW: f64 = 0.001;
pub const SIGMA_HIGH: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Priors {
    pub slope_sd: f64,
    pub intercept_sd: f64,
    pub dormancy_sd: f64,
}

impl Default for Priors {
    fn default() -> Self {
        Priors {
            slope_sd: 10.0,
            intercept_sd: 10.0,
            dormancy_sd: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Structure {
    Slope,
    Grouped,
}

/// Log posterior over an unconstrained parameter vector.
///
/// Slope models use `(alpha, beta[, u])`, grouped models use
/// `(beta, delta_dormant, delta_non_dormant[, u])`, where
/// `sigma = 0.001 + 9.999 * logistic(u)`.
#[derive(Debug, Clone)]
pub struct Model {
    kind: ModelKind,
    structure: Structure,
    x: Vec<f64>,
    dormant: Vec<bool>,
    y: Vec<f64>,
    /// `sum ln(y!)` for the Poisson likelihood.
    log_factorials: f64,
    priors: Priors,
}

fn normal_logpdf(x: f64, sd: f64) -> f64 {
    -0.5 * (x / sd).powi(2) - sd.ln() - 0.5 * (2.0 * std::f64::consts::PI).ln()
}

fn log_factorial(k: f64) -> f64 {
    (1..=(k as u64)).map(|i| (i as f64).ln()).sum()
}

/// `ln logistic(u)`, stable for large `|u|`.
fn ln_logistic(u: f64) -> f64 {
    if u >= 0.0 {
        -(-u).exp().ln_1p()
    } else {
        u - u.exp().ln_1p()
    }
}

pub fn sigma_of(u: f64) -> f64 {
    SIGMA_LOW + (SIGMA_HIGH - SIGMA_LOW) * ln_logistic(u).exp()
}

pub fn sigma_to_u(sigma: f64) -> f64 {
    let s = ((sigma - SIGMA_LOW) / (SIGMA_HIGH - SIGMA_LOW)).clamp(1e-12, 1.0 - 1e-12);
    (s / (1.0 - s)).ln()
}

impl Model {
    pub fn new(obs: &ObservationSet, priors: Priors) -> Self {
        let structure = if obs.groups.is_some() {
            Structure::Grouped
        } else {
            Structure::Slope
        };
        let dormant = obs
            .groups
            .as_ref()
            .map(|g| g.iter().map(|&g| g == DormancyGroup::Dormant).collect())
            .unwrap_or_default();
        let y = obs.response();
        let log_factorials = match obs.kind {
            ModelKind::Poisson => y.iter().map(|&k| log_factorial(k)).sum(),
            ModelKind::Gaussian => 0.0,
        };
        Model {
            kind: obs.kind,
            structure,
            x: obs.design(),
            dormant,
            y,
            log_factorials,
            priors,
        }
    }

    pub fn dim(&self) -> usize {
        let base = match self.structure {
            Structure::Slope => 2,
            Structure::Grouped => 3,
        };
        base + usize::from(self.kind == ModelKind::Gaussian)
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn is_grouped(&self) -> bool {
        self.structure == Structure::Grouped
    }

    /// Names of the reported parameters, in `constrained` order.
    pub fn parameter_names(&self) -> Vec<&'static str> {
        let mut names = match self.structure {
            Structure::Slope => vec!["alpha", "beta"],
            Structure::Grouped => vec!["beta", "delta_dormant", "delta_non_dormant"],
        };
        if self.kind == ModelKind::Gaussian {
            names.push("sigma");
        }
        names
    }

    /// Map an unconstrained vector to reported parameter values.
    pub fn constrained(&self, theta: &[f64]) -> Vec<f64> {
        let mut out = theta.to_vec();
        if self.kind == ModelKind::Gaussian {
            let last = out.len() - 1;
            out[last] = sigma_of(theta[last]);
        }
        out
    }

    fn linear_predictor(&self, theta: &[f64], i: usize) -> f64 {
        match self.structure {
            Structure::Slope => theta[1] + theta[0] * self.x[i],
            Structure::Grouped => theta[0] + if self.dormant[i] { theta[1] } else { theta[2] },
        }
    }

    pub fn predictor_values(&self, theta: &[f64]) -> Vec<f64> {
        (0..self.y.len()).map(|i| self.linear_predictor(theta, i)).collect()
    }

    /// Outcome on the model scale: `ln y` for Gaussian, counts for Poisson.
    pub fn response(&self) -> &[f64] {
        &self.y
    }

    pub fn log_prior(&self, theta: &[f64]) -> f64 {
        let p = &self.priors;
        let mut lp = match self.structure {
            Structure::Slope => {
                normal_logpdf(theta[0], p.slope_sd) + normal_logpdf(theta[1], p.intercept_sd)
            }
            Structure::Grouped => {
                normal_logpdf(theta[0], p.intercept_sd)
                    + normal_logpdf(theta[1], p.dormancy_sd)
                    + normal_logpdf(theta[2], p.dormancy_sd)
            }
        };
        if self.kind == ModelKind::Gaussian {
            let u = theta[self.dim() - 1];
            // Uniform density on sigma times the Jacobian of the logistic map.
            lp += ln_logistic(u) + ln_logistic(-u);
        }
        lp
    }

    pub fn log_likelihood(&self, theta: &[f64]) -> f64 {
        match self.kind {
            ModelKind::Gaussian => {
                let sigma = sigma_of(theta[self.dim() - 1]);
                let n = self.y.len() as f64;
                let ss: f64 = (0..self.y.len())
                    .map(|i| (self.y[i] - self.linear_predictor(theta, i)).powi(2))
                    .sum();
                -0.5 * ss / (sigma * sigma) - n * sigma.ln() - 0.5 * n * (2.0 * std::f64::consts::PI).ln()
            }
            ModelKind::Poisson => {
                let mut ll = -self.log_factorials;
                for i in 0..self.y.len() {
                    let eta = self.linear_predictor(theta, i);
                    ll += self.y[i] * eta - eta.exp();
                }
                ll
            }
        }
    }

    /// Unnormalised log posterior; `-inf` where it is not finite.
    pub fn log_density(&self, theta: &[f64]) -> f64 {
        let lp = self.log_prior(theta) + self.log_likelihood(theta);
        if lp.is_finite() {
            lp
        } else {
            f64::NEG_INFINITY
        }
    }

    /// A data-driven starting point for optimisation.
    pub fn initial_point(&self) -> Vec<f64> {
        let n = self.y.len().max(1) as f64;
        let mean_y = self.y.iter().sum::<f64>() / n;
        let centre = match self.kind {
            ModelKind::Gaussian => mean_y,
            ModelKind::Poisson => (mean_y + 0.5).ln(),
        };
        let mut theta = match self.structure {
            Structure::Slope => vec![0.0, centre],
            Structure::Grouped => vec![centre, 0.0, 0.0],
        };
        if self.kind == ModelKind::Gaussian {
            let var = self.y.iter().map(|y| (y - mean_y).powi(2)).sum::<f64>() / n;
            theta.push(sigma_to_u(var.sqrt().clamp(0.01, 5.0)));
        }
        theta
    }
}
