use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::bayes::{AnalysisConfig, ConvergenceCriteria, ModelConfig, Priors};
use crate::error::{Error, Result};
use crate::metrics::MetricsConfig;
use crate::quality::{QualityConfig, SizeUnit};

/// Every tunable of a run, as one flat TOML table.
///
/// Unknown keys are rejected. Omitted keys take their defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub corpus: PathBuf,
    pub out: PathBuf,
    pub seed: u64,
    pub jobs: usize,

    pub window_weeks: u32,
    pub activity_window_days: u32,
    pub turnover_lookback_months: u32,
    pub dormancy_window_months: u32,
    pub dormancy_freq_weeks: u32,
    pub dormancy_threshold: f64,
    pub as_of_year: i32,
    pub doc_extensions: Vec<String>,

    pub complex_cc_min: u32,
    pub complex_cc_max: u32,
    pub very_complex_cc: u32,
    pub very_large_file_sloc: u64,
    pub very_large_function_sloc: u64,
    pub duplication_block: usize,
    pub defect_labels: Vec<String>,
    pub size_unit: SizeUnit,
    pub test_markers: Vec<String>,
    /// Extra language rule files, added to the built-in set.
    pub language_rules: Vec<PathBuf>,

    pub chains: usize,
    pub draws: usize,
    pub warmup: usize,
    pub retries: usize,
    pub hdi_mass: f64,
    pub slope_prior_sd: f64,
    pub intercept_prior_sd: f64,
    pub dormancy_prior_sd: f64,
    pub max_mcse: f64,
    pub max_rhat: f64,
    pub min_ess: f64,
    pub min_observations: usize,
    pub ppc_replicates: usize,
    pub export_posteriors: bool,

    /// Invert displayed impacts of the decrease-is-better metrics in the matrix.
    pub flip_sign_convention: bool,
    /// Fit ids (`QUALITY__SUST__model`, optionally `:parameter`) to export plot data for.
    pub plot_fits: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let m = MetricsConfig::default();
        let q = QualityConfig::default();
        let a = AnalysisConfig::default();
        RunConfig {
            corpus: PathBuf::from("corpus"),
            out: PathBuf::from("out"),
            seed: 0,
            jobs: 1,
            window_weeks: m.window_weeks,
            activity_window_days: m.activity_window_days,
            turnover_lookback_months: m.turnover_lookback_months,
            dormancy_window_months: m.dormancy_window_months,
            dormancy_freq_weeks: m.dormancy_freq_weeks,
            dormancy_threshold: m.dormancy_threshold,
            as_of_year: m.as_of_year,
            doc_extensions: m.doc_extensions,
            complex_cc_min: q.complex_cc_min,
            complex_cc_max: q.complex_cc_max,
            very_complex_cc: q.very_complex_cc,
            very_large_file_sloc: q.very_large_file_sloc,
            very_large_function_sloc: q.very_large_function_sloc,
            duplication_block: q.duplication_block,
            defect_labels: q.defect_labels,
            size_unit: q.size_unit,
            test_markers: q.test_markers,
            language_rules: vec![],
            chains: a.model.chains,
            draws: a.model.draws,
            warmup: a.model.warmup,
            retries: a.model.retries,
            hdi_mass: a.model.hdi_mass,
            slope_prior_sd: a.model.priors.slope_sd,
            intercept_prior_sd: a.model.priors.intercept_sd,
            dormancy_prior_sd: a.model.priors.dormancy_sd,
            max_mcse: a.model.criteria.max_mcse,
            max_rhat: a.model.criteria.max_rhat,
            min_ess: a.model.criteria.min_ess,
            min_observations: a.min_observations,
            ppc_replicates: a.ppc_replicates,
            export_posteriors: true,
            flip_sign_convention: false,
            plot_fits: vec![],
        }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.message().to_owned()))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    pub fn metrics(&self) -> MetricsConfig {
        MetricsConfig {
            window_weeks: self.window_weeks,
            activity_window_days: self.activity_window_days,
            turnover_lookback_months: self.turnover_lookback_months,
            dormancy_window_months: self.dormancy_window_months,
            dormancy_freq_weeks: self.dormancy_freq_weeks,
            dormancy_threshold: self.dormancy_threshold,
            as_of_year: self.as_of_year,
            doc_extensions: self.doc_extensions.clone(),
        }
    }

    pub fn quality(&self) -> QualityConfig {
        QualityConfig {
            complex_cc_min: self.complex_cc_min,
            complex_cc_max: self.complex_cc_max,
            very_complex_cc: self.very_complex_cc,
            very_large_file_sloc: self.very_large_file_sloc,
            very_large_function_sloc: self.very_large_function_sloc,
            duplication_block: self.duplication_block,
            defect_labels: self.defect_labels.clone(),
            size_unit: self.size_unit,
            test_markers: self.test_markers.clone(),
        }
    }

    pub fn analysis(&self) -> AnalysisConfig {
        AnalysisConfig {
            model: ModelConfig {
                chains: self.chains,
                draws: self.draws,
                warmup: self.warmup,
                seed: self.seed,
                hdi_mass: self.hdi_mass,
                priors: Priors {
                    slope_sd: self.slope_prior_sd,
                    intercept_sd: self.intercept_prior_sd,
                    dormancy_sd: self.dormancy_prior_sd,
                },
                criteria: ConvergenceCriteria {
                    max_mcse: self.max_mcse,
                    max_rhat: self.max_rhat,
                    min_ess: self.min_ess,
                },
                retries: self.retries,
            },
            min_observations: self.min_observations,
            ppc_replicates: self.ppc_replicates,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.jobs == 0 {
            return Err(Error::Config("jobs must be at least 1".into()));
        }
        if self.min_observations < 2 {
            return Err(Error::Config("min_observations must be at least 2".into()));
        }
        if self.ppc_replicates == 0 {
            return Err(Error::Config("ppc_replicates must be at least 1".into()));
        }
        self.metrics().validate()?;
        self.quality().validate()?;
        self.analysis().model.validate()
    }
}
