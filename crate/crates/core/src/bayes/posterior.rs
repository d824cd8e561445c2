use std::io::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::diagnostics::{diagnose, ConvergenceCriteria, Diagnostics};
use super::hdi::{hdi, Hdi};
use super::model::{Model, Priors};
use super::observations::ObservationSet;
use super::sampler::{derive_seed, find_mode, run_chain};
use super::ModelKind;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelConfig {
    pub chains: usize,
    pub draws: usize,
    pub warmup: usize,
    pub seed: u64,
    pub hdi_mass: f64,
    pub priors: Priors,
    pub criteria: ConvergenceCriteria,
    /// Reseeded attempts after the first, each with doubled warmup.
    pub retries: usize,
}

impl Default for ModelConfig {
    fn default() -> Self {
        ModelConfig {
            chains: 4,
            draws: 3000,
            warmup: 1000,
            seed: 0,
            hdi_mass: 0.95,
            priors: Priors::default(),
            criteria: ConvergenceCriteria::default(),
            retries: 2,
        }
    }
}

impl ModelConfig {
    pub fn validate(&self) -> Result<()> {
        if self.chains < 2 {
            return Err(Error::Config("chains must be at least 2".into()));
        }
        if self.draws < 100 {
            return Err(Error::Config("draws must be at least 100".into()));
        }
        if !(self.hdi_mass > 0.0 && self.hdi_mass < 1.0) {
            return Err(Error::Config("hdi_mass must lie in (0, 1)".into()));
        }
        let p = &self.priors;
        if !(p.slope_sd > 0.0 && p.intercept_sd > 0.0 && p.dormancy_sd > 0.0) {
            return Err(Error::Config("prior scales must be positive".into()));
        }
        Ok(())
    }
}

/// Name of the derived dormant-minus-non-dormant parameter.
pub const CONTRAST: &str = "contrast";

/// Samples indexed `[parameter][chain][draw]`, with per-parameter diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Posterior {
    pub kind: ModelKind,
    pub parameters: Vec<String>,
    /// Leading entries of `parameters` that are model parameters; the rest are derived.
    pub n_model_parameters: usize,
    pub samples: Vec<Vec<Vec<f64>>>,
    pub diagnostics: Vec<Diagnostics>,
    pub converged: bool,
    /// Attempts used, counting the first.
    pub attempts: usize,
    pub acceptance: Vec<f64>,
}

impl Posterior {
    /// Assemble a posterior from `[parameter][chain][draw]` samples.
    pub fn from_samples(
        kind: ModelKind,
        parameters: Vec<String>,
        n_model_parameters: usize,
        samples: Vec<Vec<Vec<f64>>>,
        criteria: &ConvergenceCriteria,
    ) -> Self {
        let diagnostics: Vec<Diagnostics> = samples.iter().map(|c| diagnose(c)).collect();
        let converged = diagnostics[..n_model_parameters]
            .iter()
            .all(|d| d.passes(criteria));
        Posterior {
            kind,
            parameters,
            n_model_parameters,
            samples,
            diagnostics,
            converged,
            attempts: 1,
            acceptance: vec![],
        }
    }

    fn index(&self, name: &str) -> Result<usize> {
        self.parameters
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::MissingFit(format!("parameter {name}")))
    }

    pub fn chains(&self, name: &str) -> Result<&[Vec<f64>]> {
        Ok(&self.samples[self.index(name)?])
    }

    /// All draws of one parameter, chain after chain.
    pub fn flat(&self, name: &str) -> Result<Vec<f64>> {
        Ok(self.chains(name)?.iter().flatten().copied().collect())
    }

    pub fn diagnostics_of(&self, name: &str) -> Result<Diagnostics> {
        Ok(self.diagnostics[self.index(name)?])
    }

    pub fn hdi(&self, name: &str, mass: f64) -> Result<Hdi> {
        hdi(&self.flat(name)?, mass)
    }

    pub fn mean(&self, name: &str) -> Result<f64> {
        Ok(self.diagnostics_of(name)?.mean)
    }

    /// Largest MCSE over model parameters; NaN if any is undefined.
    pub fn mcse_max(&self) -> f64 {
        self.diagnostics[..self.n_model_parameters]
            .iter()
            .map(|d| d.mcse)
            .fold(f64::NEG_INFINITY, |a, b| if a.is_nan() || b.is_nan() { f64::NAN } else { a.max(b) })
    }

    /// Largest R-hat over model parameters; NaN if any is undefined.
    pub fn rhat_max(&self) -> f64 {
        self.diagnostics[..self.n_model_parameters]
            .iter()
            .map(|d| d.rhat)
            .fold(f64::NEG_INFINITY, |a, b| if a.is_nan() || b.is_nan() { f64::NAN } else { a.max(b) })
    }

    pub fn n_chains(&self) -> usize {
        self.samples.first().map_or(0, Vec::len)
    }

    pub fn n_draws(&self) -> usize {
        self.samples
            .first()
            .and_then(|c| c.first())
            .map_or(0, Vec::len)
    }

    /// Parameter vector (model parameters only) of one draw.
    pub fn draw(&self, chain: usize, draw: usize) -> Vec<f64> {
        self.samples[..self.n_model_parameters]
            .iter()
            .map(|p| p[chain][draw])
            .collect()
    }

    /// Long-format CSV: `chain,draw,parameter,value`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(POSTERIOR_CSV_HEADER)?;
        for (p, name) in self.parameters.iter().enumerate() {
            for (c, chain) in self.samples[p].iter().enumerate() {
                for (d, v) in chain.iter().enumerate() {
                    w.write_record([c.to_string(), d.to_string(), name.clone(), v.to_string()])?;
                }
            }
        }
        w.flush().map_err(|e| Error::io("posterior csv", e))?;
        Ok(())
    }
}

pub const POSTERIOR_CSV_HEADER: [&str; 4] = ["chain", "draw", "parameter", "value"];

/// Read a posterior CSV into `(parameter, [chain][draw])`, in first-seen order.
pub fn read_posterior_csv<R: std::io::Read>(input: R) -> Result<Vec<(String, Vec<Vec<f64>>)>> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
    if header != POSTERIOR_CSV_HEADER {
        return Err(Error::Config(format!("unexpected posterior header {header:?}")));
    }
    let mut out: Vec<(String, Vec<Vec<f64>>)> = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let bad = || Error::Config(format!("bad posterior row {:?}", rec.iter().collect::<Vec<_>>()));
        let chain: usize = rec[0].parse().map_err(|_| bad())?;
        let value: f64 = rec[3].parse().map_err(|_| bad())?;
        let name = &rec[2];
        let pos = match out.iter().position(|(n, _)| n == name) {
            Some(p) => p,
            None => {
                out.push((name.to_owned(), Vec::new()));
                out.len() - 1
            }
        };
        let chains = &mut out[pos].1;
        while chains.len() <= chain {
            chains.push(Vec::new());
        }
        chains[chain].push(value);
    }
    Ok(out)
}

fn sample_once(model: &Model, obs: &ObservationSet, config: &ModelConfig, attempt: usize) -> Posterior {
    let (mode, cov) = find_mode(model);
    let warmup = config.warmup << attempt;
    let kind = obs.kind.as_str();
    let attempt_label = attempt.to_string();
    let outputs: Vec<_> = (0..config.chains)
        .into_par_iter()
        .map(|chain| {
            let seed = derive_seed(
                config.seed,
                &[
                    obs.predictor.as_str(),
                    obs.quality.as_str(),
                    kind,
                    &attempt_label,
                    &chain.to_string(),
                ],
            );
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            run_chain(model, &mode, &cov, warmup, config.draws, &mut rng)
        })
        .collect();

    let mut names: Vec<String> = model.parameter_names().into_iter().map(String::from).collect();
    let n_model = names.len();
    let mut samples = vec![vec![Vec::with_capacity(config.draws); config.chains]; n_model];
    for (c, out) in outputs.iter().enumerate() {
        for theta in &out.draws {
            for (p, v) in model.constrained(theta).into_iter().enumerate() {
                samples[p][c].push(v);
            }
        }
    }
    if model.is_grouped() {
        let contrast = samples[1]
            .iter()
            .zip(&samples[2])
            .map(|(d, n)| d.iter().zip(n).map(|(a, b)| a - b).collect())
            .collect();
        samples.push(contrast);
        names.push(CONTRAST.into());
    }
    let mut post = Posterior::from_samples(obs.kind, names, n_model, samples, &config.criteria);
    post.attempts = attempt + 1;
    post.acceptance = outputs.iter().map(|o| o.acceptance).collect();
    post
}

/// Sample the posterior of `obs`, retrying with fresh seeds and doubled
/// warmup until the diagnostics pass or the retry budget is spent.
pub fn fit(obs: &ObservationSet, config: &ModelConfig) -> Result<Posterior> {
    config.validate()?;
    if obs.is_empty() {
        return Err(Error::InsufficientData {
            included: 0,
            required: 1,
        });
    }
    let model = Model::new(obs, config.priors);
    let mut post = sample_once(&model, obs, config, 0);
    for attempt in 1..=config.retries {
        if post.converged {
            break;
        }
        log::debug!(
            "{} on {} ({}) not converged, retry {attempt}",
            obs.predictor.as_str(),
            obs.quality,
            obs.kind.as_str()
        );
        post = sample_once(&model, obs, config, attempt);
    }
    Ok(post)
}

pub fn fit_gaussian(obs: &ObservationSet, config: &ModelConfig) -> Result<Posterior> {
    if obs.kind != ModelKind::Gaussian {
        return Err(Error::Precondition("observation set was prepared for the Poisson model".into()));
    }
    fit(obs, config)
}

pub fn fit_poisson(obs: &ObservationSet, config: &ModelConfig) -> Result<Posterior> {
    if obs.kind != ModelKind::Poisson {
        return Err(Error::Precondition("observation set was prepared for the Gaussian model".into()));
    }
    fit(obs, config)
}
