//! Single-predictor Bayesian regression of quality on sustainability.
//!
//! Metric-scale outcomes use a Gaussian model on `ln y` with a standardised
//! predictor; count outcomes use a Poisson model with a log link and `ln x` as
//! predictor. The dormancy flag enters either model as two group effects
//! instead of a slope. Posteriors are sampled with an adaptive Metropolis
//! scheme and summarised by highest density intervals; an interval excluding
//! zero is evidence of an effect.

mod analysis;
mod decision;
mod diagnostics;
mod hdi;
pub mod model;
mod observations;
mod posterior;
mod ppc;
pub mod sampler;

use serde::{Deserialize, Serialize};

pub use analysis::{
    all_cells, analyze, attempt_counts, model_for, planned_fits, read_results_csv, run_fit,
    write_results_csv, AnalysisConfig, Effect, FitOutcome, FitSpec, ResultRow, Status,
    RESULTS_CSV_HEADER,
};
pub use decision::{
    decide_impact, effect_gaussian, effect_poisson, ten_percent_of, Direction, GaussianEffect,
    ImpactDecision, QualityImpact, FLIP_SET,
};
pub use diagnostics::{diagnose, ess, split_rhat, ConvergenceCriteria, Diagnostics};
pub use hdi::{hdi, window_len, Hdi};
pub use model::Priors;
pub use observations::{
    mean_sd, prepare_observations, select_rows, standardize, DormancyGroup, ObservationSet,
    Selection, Transform, POISSON_EXCLUDED,
};
pub use posterior::{
    fit, fit_gaussian, fit_poisson, read_posterior_csv, ModelConfig, Posterior, CONTRAST,
    POSTERIOR_CSV_HEADER,
};
pub use ppc::{posterior_predictive_check, PredictiveCheck};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Gaussian,
    Poisson,
}

impl ModelKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ModelKind::Gaussian => "gaussian",
            ModelKind::Poisson => "poisson",
        }
    }
}

impl std::str::FromStr for ModelKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "gaussian" => Ok(ModelKind::Gaussian),
            "poisson" => Ok(ModelKind::Poisson),
            other => Err(crate::Error::Config(format!("unknown model `{other}`"))),
        }
    }
}
