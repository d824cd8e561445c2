use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal, Poisson};
use serde::{Deserialize, Serialize};

use super::model::{Model, Priors};
use super::observations::{mean_sd, ObservationSet};
use super::posterior::Posterior;
use super::ModelKind;
use crate::error::{Error, Result};

/// Observed summary statistics against their posterior predictive intervals.
///
/// Statistics are taken on the model's outcome scale: `ln y` for the
/// Gaussian model and raw counts for the Poisson model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PredictiveCheck {
    pub observed_mean: f64,
    pub observed_sd: f64,
    /// Central interval of replicate means.
    pub mean_interval: (f64, f64),
    /// Central interval of replicate standard deviations.
    pub sd_interval: (f64, f64),
    /// Average of the replicate means.
    pub predictive_mean: f64,
    pub replicates: usize,
    pub covered: bool,
}

fn central(mut xs: Vec<f64>, mass: f64) -> (f64, f64) {
    xs.sort_by(f64::total_cmp);
    let n = xs.len();
    let tail = (1.0 - mass) / 2.0;
    let lo = ((tail * n as f64).floor() as usize).min(n - 1);
    let hi = (((1.0 - tail) * n as f64).ceil() as usize).clamp(1, n) - 1;
    (xs[lo], xs[hi])
}

/// Simulate one replicate data set per retained draw (evenly thinned to at
/// most `replicates`) and compare the observed mean and sd to the central
/// `mass` intervals of the replicate statistics.
pub fn posterior_predictive_check(
    posterior: &Posterior,
    obs: &ObservationSet,
    replicates: usize,
    mass: f64,
    seed: u64,
) -> Result<PredictiveCheck> {
    if replicates == 0 || obs.is_empty() {
        return Err(Error::Precondition("predictive check needs data and replicates".into()));
    }
    let model = Model::new(obs, Priors::default());
    let y = model.response();
    let (observed_mean, observed_sd) = mean_sd(y);
    let total = posterior.n_chains() * posterior.n_draws();
    if total == 0 {
        return Err(Error::Degenerate("posterior has no draws".into()));
    }
    let stride = total.div_ceil(replicates).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut means = Vec::new();
    let mut sds = Vec::new();
    let mut rep = vec![0.0; y.len()];
    for k in (0..total).step_by(stride) {
        let (chain, draw) = (k / posterior.n_draws(), k % posterior.n_draws());
        let theta = posterior.draw(chain, draw);
        let eta = model.predictor_values(&theta);
        for (r, &e) in rep.iter_mut().zip(&eta) {
            *r = match obs.kind {
                ModelKind::Gaussian => {
                    let sigma = theta[theta.len() - 1];
                    Normal::new(e, sigma).map_err(|err| Error::Degenerate(err.to_string()))?.sample(&mut rng)
                }
                ModelKind::Poisson => {
                    let rate = e.exp();
                    if rate > 0.0 && rate.is_finite() {
                        Poisson::new(rate).map_err(|err| Error::Degenerate(err.to_string()))?.sample(&mut rng)
                    } else {
                        0.0
                    }
                }
            };
        }
        let (m, s) = mean_sd(&rep);
        means.push(m);
        sds.push(s);
    }
    let predictive_mean = means.iter().sum::<f64>() / means.len() as f64;
    let replicates = means.len();
    let mean_interval = central(means, mass);
    let sd_interval = central(sds, mass);
    let inside = |v: f64, (lo, hi): (f64, f64)| lo <= v && v <= hi;
    Ok(PredictiveCheck {
        observed_mean,
        observed_sd,
        mean_interval,
        sd_interval,
        predictive_mean,
        replicates,
        covered: inside(observed_mean, mean_interval) && inside(observed_sd, sd_interval),
    })
}
