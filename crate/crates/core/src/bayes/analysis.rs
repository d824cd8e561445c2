//! The full grid of single-predictor fits and its results table.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::decision::{decide_impact, effect_gaussian, effect_poisson, ten_percent_of, ImpactDecision};
use super::observations::{
    prepare_observations, select_rows, ObservationSet, Transform, POISSON_EXCLUDED,
};
use super::posterior::{fit, ModelConfig, Posterior, CONTRAST};
use super::ppc::{posterior_predictive_check, PredictiveCheck};
use super::sampler::derive_seed;
use super::ModelKind;
use crate::error::{Error, Result};
use crate::metrics::{MetricId, SustainabilityVector};
use crate::quality::{QualityId, QualityProfile};

/// The model family used for an outcome.
pub fn model_for(quality: QualityId) -> ModelKind {
    if quality.is_count() {
        ModelKind::Poisson
    } else {
        ModelKind::Gaussian
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FitSpec {
    pub quality: QualityId,
    pub predictor: MetricId,
    pub kind: ModelKind,
}

impl FitSpec {
    /// Stable identifier, also used for posterior file names.
    pub fn id(&self) -> String {
        format!("{}__{}__{}", self.quality, self.predictor.as_str(), self.kind.as_str())
    }

    pub fn is_defined(&self) -> bool {
        !(self.kind == ModelKind::Poisson && POISSON_EXCLUDED.contains(&self.predictor))
    }
}

/// Every (quality, predictor) cell in column-major order, defined or not.
pub fn all_cells() -> Vec<FitSpec> {
    QualityId::ALL
        .iter()
        .flat_map(|&quality| {
            MetricId::ALL.iter().map(move |&predictor| FitSpec {
                quality,
                predictor,
                kind: model_for(quality),
            })
        })
        .collect()
}

/// The fits an analysis attempts.
pub fn planned_fits() -> Vec<FitSpec> {
    all_cells().into_iter().filter(FitSpec::is_defined).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    NoEvidence,
    Increase,
    Decrease,
    NotComputed,
    InsufficientData,
    Degenerate,
    NonConverged,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::NoEvidence => "no_evidence",
            Status::Increase => "increase",
            Status::Decrease => "decrease",
            Status::NotComputed => "not_computed",
            Status::InsufficientData => "insufficient_data",
            Status::Degenerate => "degenerate",
            Status::NonConverged => "non_converged",
        }
    }

    pub fn is_decision(self) -> bool {
        matches!(self, Status::NoEvidence | Status::Increase | Status::Decrease)
    }
}

impl std::str::FromStr for Status {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Status::NoEvidence,
            Status::Increase,
            Status::Decrease,
            Status::NotComputed,
            Status::InsufficientData,
            Status::Degenerate,
            Status::NonConverged,
        ]
        .into_iter()
        .find(|d| d.as_str() == s)
        .ok_or_else(|| Error::Config(format!("unknown direction `{s}`")))
    }
}

/// One row of the results table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub quality_id: String,
    /// Predictor id; dormancy rows carry a `:dormant`, `:non-dormant` or `:contrast` suffix.
    pub sust_id: String,
    pub model: String,
    pub n_projects: Option<usize>,
    pub n_excluded: Option<usize>,
    pub hdi_low: Option<f64>,
    pub hdi_high: Option<f64>,
    pub direction: Status,
    pub quality_impact: Option<String>,
    pub mcse_max: Option<f64>,
    pub rhat_max: Option<f64>,
    pub converged: bool,
}

pub const RESULTS_CSV_HEADER: [&str; 12] = [
    "quality_id",
    "sust_id",
    "model",
    "n_projects",
    "n_excluded",
    "hdi_low",
    "hdi_high",
    "direction",
    "quality_impact",
    "mcse_max",
    "rhat_max",
    "converged",
];

/// Reported parameter and row label suffix for each row of a fit.
fn row_parameters(predictor: MetricId) -> Vec<(&'static str, Option<&'static str>)> {
    if predictor == MetricId::Sta6 {
        vec![
            ("delta_dormant", Some("dormant")),
            ("delta_non_dormant", Some("non-dormant")),
            (CONTRAST, Some("contrast")),
        ]
    } else {
        vec![("alpha", None)]
    }
}

fn sust_label(predictor: MetricId, suffix: Option<&str>) -> String {
    match suffix {
        Some(s) => format!("{}:{s}", predictor.as_str()),
        None => predictor.as_str().to_owned(),
    }
}

/// Effect size of one reported parameter in outcome terms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum Effect {
    /// Percent change per one-SD predictor increase.
    Gaussian { low_pct: f64, high_pct: f64, predictor_sd: f64 },
    /// Outcome units per 10% predictor increase, and that 10% in native units.
    Poisson { low: f64, high: f64, ten_percent: f64 },
}

/// Everything produced for one planned fit.
#[derive(Debug, Clone)]
pub struct FitOutcome {
    pub spec: FitSpec,
    pub rows: Vec<ResultRow>,
    pub decisions: Vec<(String, ImpactDecision)>,
    pub effects: Vec<(String, Effect)>,
    pub check: Option<PredictiveCheck>,
    pub posterior: Option<Posterior>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisConfig {
    pub model: ModelConfig,
    pub min_observations: usize,
    /// Replicate data sets drawn for each predictive check.
    pub ppc_replicates: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            model: ModelConfig::default(),
            min_observations: 10,
            ppc_replicates: 1000,
        }
    }
}

fn blank_rows(spec: &FitSpec, status: Status, n: Option<(usize, usize)>) -> Vec<ResultRow> {
    row_parameters(spec.predictor)
        .into_iter()
        .map(|(_, suffix)| ResultRow {
            quality_id: spec.quality.as_str().into(),
            sust_id: sust_label(spec.predictor, suffix),
            model: spec.kind.as_str().into(),
            n_projects: n.map(|n| n.0),
            n_excluded: n.map(|n| n.1),
            hdi_low: None,
            hdi_high: None,
            direction: status,
            quality_impact: None,
            mcse_max: None,
            rhat_max: None,
            converged: false,
        })
        .collect()
}

fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}

fn effect_of(obs: &ObservationSet, decision: &ImpactDecision) -> Effect {
    match (obs.kind, obs.transform) {
        (ModelKind::Gaussian, Transform::Standardized { sd, .. }) => {
            let e = effect_gaussian(&decision.hdi, sd);
            Effect::Gaussian {
                low_pct: e.low_pct,
                high_pct: e.high_pct,
                predictor_sd: e.predictor_sd,
            }
        }
        (ModelKind::Gaussian, _) => {
            let e = effect_gaussian(&decision.hdi, f64::NAN);
            Effect::Gaussian {
                low_pct: e.low_pct,
                high_pct: e.high_pct,
                predictor_sd: e.predictor_sd,
            }
        }
        (ModelKind::Poisson, _) => {
            let (low, high) = effect_poisson(&decision.hdi);
            let mean = obs.pairs.iter().map(|p| p.0).sum::<f64>() / obs.len() as f64;
            Effect::Poisson {
                low,
                high,
                ten_percent: ten_percent_of(mean),
            }
        }
    }
}

/// Prepare, fit and decide one cell.
pub fn run_fit(
    spec: FitSpec,
    metrics: &[SustainabilityVector],
    quality: &[QualityProfile],
    config: &AnalysisConfig,
) -> FitOutcome {
    let mut outcome = FitOutcome {
        spec,
        rows: vec![],
        decisions: vec![],
        effects: vec![],
        check: None,
        posterior: None,
    };
    if !spec.is_defined() {
        outcome.rows = blank_rows(&spec, Status::NotComputed, None);
        return outcome;
    }
    let sel = select_rows(metrics, quality, spec.predictor, spec.quality, spec.kind);
    let counts = Some((sel.pairs.len(), sel.n_excluded));
    let obs = match prepare_observations(
        metrics,
        quality,
        spec.predictor,
        spec.quality,
        spec.kind,
        config.min_observations,
    ) {
        Ok(obs) => obs,
        Err(Error::InsufficientData { .. }) => {
            outcome.rows = blank_rows(&spec, Status::InsufficientData, counts);
            return outcome;
        }
        Err(e) => {
            log::info!("{}: {e}", spec.id());
            outcome.rows = blank_rows(&spec, Status::Degenerate, counts);
            return outcome;
        }
    };
    let post = match fit(&obs, &config.model) {
        Ok(p) => p,
        Err(e) => {
            log::warn!("{}: {e}", spec.id());
            outcome.rows = blank_rows(&spec, Status::Degenerate, counts);
            return outcome;
        }
    };
    let mcse = finite(post.mcse_max());
    let rhat = finite(post.rhat_max());
    for (param, suffix) in row_parameters(spec.predictor) {
        let hdi = post.hdi(param, config.model.hdi_mass).ok();
        let label = sust_label(spec.predictor, suffix);
        let (status, impact) = match hdi {
            Some(h) if post.converged => {
                let d = decide_impact(h, spec.predictor, spec.quality);
                outcome.effects.push((label.clone(), effect_of(&obs, &d)));
                outcome.decisions.push((label.clone(), d));
                let status = match d.direction {
                    super::Direction::NoEvidence => Status::NoEvidence,
                    super::Direction::Increase => Status::Increase,
                    super::Direction::Decrease => Status::Decrease,
                };
                (status, Some(d.quality_impact.as_str().to_owned()))
            }
            Some(_) => (Status::NonConverged, None),
            None => (Status::Degenerate, None),
        };
        outcome.rows.push(ResultRow {
            quality_id: spec.quality.as_str().into(),
            sust_id: label,
            model: spec.kind.as_str().into(),
            n_projects: Some(obs.len()),
            n_excluded: Some(obs.n_excluded),
            hdi_low: hdi.map(|h| h.low),
            hdi_high: hdi.map(|h| h.high),
            direction: status,
            quality_impact: impact,
            mcse_max: mcse,
            rhat_max: rhat,
            converged: post.converged,
        });
    }
    if post.converged {
        let seed = derive_seed(config.model.seed, &[&spec.id(), "ppc"]);
        outcome.check = posterior_predictive_check(
            &post,
            &obs,
            config.ppc_replicates,
            config.model.hdi_mass,
            seed,
        )
        .ok();
    }
    outcome.posterior = Some(post);
    outcome
}

/// Run every cell of the grid, in parallel, returning outcomes in grid order.
pub fn analyze(
    metrics: &[SustainabilityVector],
    quality: &[QualityProfile],
    config: &AnalysisConfig,
) -> Result<Vec<FitOutcome>> {
    config.model.validate()?;
    Ok(all_cells()
        .into_par_iter()
        .map(|spec| run_fit(spec, metrics, quality, config))
        .collect())
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

pub fn write_results_csv<W: Write>(out: W, rows: &[ResultRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(RESULTS_CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.quality_id.clone(),
            r.sust_id.clone(),
            r.model.clone(),
            opt(&r.n_projects),
            opt(&r.n_excluded),
            opt(&r.hdi_low),
            opt(&r.hdi_high),
            r.direction.as_str().to_owned(),
            r.quality_impact.clone().unwrap_or_default(),
            opt(&r.mcse_max),
            opt(&r.rhat_max),
            r.converged.to_string(),
        ])?;
    }
    w.flush().map_err(|e| Error::io("results csv", e))?;
    Ok(())
}

pub fn read_results_csv<R: std::io::Read>(input: R) -> Result<Vec<ResultRow>> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
    if header != RESULTS_CSV_HEADER {
        return Err(Error::Config(format!("unexpected results header {header:?}")));
    }
    fn parse<T: std::str::FromStr>(s: &str) -> Result<Option<T>> {
        if s.is_empty() {
            return Ok(None);
        }
        s.parse()
            .map(Some)
            .map_err(|_| Error::Config(format!("bad results value `{s}`")))
    }
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        out.push(ResultRow {
            quality_id: rec[0].to_owned(),
            sust_id: rec[1].to_owned(),
            model: rec[2].to_owned(),
            n_projects: parse(&rec[3])?,
            n_excluded: parse(&rec[4])?,
            hdi_low: parse(&rec[5])?,
            hdi_high: parse(&rec[6])?,
            direction: rec[7].parse()?,
            quality_impact: (!rec[8].is_empty()).then(|| rec[8].to_owned()),
            mcse_max: parse(&rec[9])?,
            rhat_max: parse(&rec[10])?,
            converged: parse(&rec[11])?.unwrap_or(false),
        });
    }
    Ok(out)
}

/// Attempted (Gaussian, Poisson) fit counts in a results table.
pub fn attempt_counts(rows: &[ResultRow]) -> (usize, usize) {
    let mut seen = std::collections::BTreeSet::new();
    for r in rows.iter().filter(|r| r.direction != Status::NotComputed) {
        let base = r.sust_id.split(':').next().unwrap_or_default();
        seen.insert((r.quality_id.clone(), base.to_owned(), r.model.clone()));
    }
    let gaussian = seen.iter().filter(|s| s.2 == "gaussian").count();
    (gaussian, seen.len() - gaussian)
}
