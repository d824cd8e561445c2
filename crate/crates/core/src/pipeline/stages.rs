use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use super::config::RunConfig;
use super::matrix::render_matrix;
use super::plot::{histogram, write_plot_csv, PlotData, PLOT_BINS};
use crate::bayes::{
    analyze, attempt_counts, read_posterior_csv, read_results_csv, write_results_csv, Diagnostics,
    Effect, FitOutcome, PredictiveCheck, ResultRow, CONTRAST,
};
use crate::error::{Error, Result};
use crate::ingest::{assemble_dataset, ProjectDataset};
use crate::metrics::{compute_vector, read_metrics_csv, write_metrics_csv};
use crate::quality::{profile_project, read_quality_csv, scan_tree, write_quality_csv, RuleSet};

pub const INGEST_DIR: &str = "ingest";
pub const METRICS_CSV: &str = "metrics.csv";
pub const QUALITY_CSV: &str = "quality.csv";
pub const RESULTS_CSV: &str = "results.csv";
pub const POSTERIOR_DIR: &str = "posteriors";
pub const ANALYSIS_SUMMARY: &str = "analysis.json";
pub const MATRIX_TXT: &str = "matrix.txt";
pub const MATRIX_JSON: &str = "matrix.json";
pub const PLOT_DIR: &str = "plots";

/// Source tree and optional coverage report inside a project directory.
pub const SOURCE_DIR: &str = "source";
pub const COVERAGE_REPORT: &str = "coverage.csv";

/// Outcome of one stage: projects (or fits) processed and isolated failures.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StageReport {
    pub stage: String,
    pub processed: Vec<String>,
    pub failures: Vec<(String, String)>,
    pub outputs: Vec<PathBuf>,
}

impl StageReport {
    fn new(stage: &str) -> Self {
        StageReport {
            stage: stage.to_owned(),
            ..Default::default()
        }
    }

    pub fn failed(&self) -> bool {
        !self.failures.is_empty()
    }
}

fn pool(config: &RunConfig) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))
}

fn create_dir(path: &Path) -> Result<()> {
    fs::create_dir_all(path).map_err(|e| Error::io(path, e))
}

/// Remove the files with `extension` directly inside `dir`.
fn clear_dir(dir: &Path, extension: &str) -> Result<()> {
    if !dir.exists() {
        return create_dir(dir);
    }
    for entry in fs::read_dir(dir).map_err(|e| Error::io(dir, e))? {
        let path = entry.map_err(|e| Error::io(dir, e))?.path();
        if path.extension().is_some_and(|e| e == extension) {
            fs::remove_file(&path).map_err(|e| Error::io(&path, e))?;
        }
    }
    Ok(())
}

fn write_file(path: &Path, write: impl FnOnce(&mut BufWriter<File>) -> Result<()>) -> Result<()> {
    if let Some(parent) = path.parent() {
        create_dir(parent)?;
    }
    let f = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(f);
    write(&mut w)?;
    w.flush().map_err(|e| Error::io(path, e))
}

fn open(path: &Path) -> Result<BufReader<File>> {
    match File::open(path) {
        Ok(f) => Ok(BufReader::new(f)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Err(Error::MissingFile(path.to_path_buf())),
        Err(e) => Err(Error::io(path, e)),
    }
}

/// Project directories directly under `corpus`, sorted by name. Hidden
/// directories are ignored.
pub fn discover_projects(corpus: &Path) -> Result<Vec<(String, PathBuf)>> {
    let entries = fs::read_dir(corpus).map_err(|e| Error::io(corpus, e))?;
    let mut out = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(corpus, e))?;
        let name = entry.file_name().to_string_lossy().into_owned();
        if entry.path().is_dir() && !name.starts_with('.') {
            out.push((name, entry.path()));
        }
    }
    out.sort();
    if out.is_empty() {
        return Err(Error::EmptyCorpus(corpus.to_path_buf()));
    }
    Ok(out)
}

/// Load every project and write one dataset JSON per project.
pub fn stage_ingest(config: &RunConfig) -> Result<StageReport> {
    let projects = discover_projects(&config.corpus)?;
    let dir = config.out.join(INGEST_DIR);
    clear_dir(&dir, "json")?;
    let loaded: Vec<(String, Result<ProjectDataset>)> = pool(config)?.install(|| {
        projects
            .par_iter()
            .map(|(name, path)| (name.clone(), assemble_dataset(path)))
            .collect()
    });
    let mut report = StageReport::new("ingest");
    for (name, result) in loaded {
        match result {
            Ok(dataset) => {
                let path = dir.join(format!("{name}.json"));
                write_file(&path, |w| {
                    serde_json::to_writer(&mut *w, &dataset)?;
                    writeln!(w).map_err(|e| Error::io(&path, e))
                })?;
                report.processed.push(name);
                report.outputs.push(path);
            }
            Err(e) => {
                log::warn!("ingest {name}: {e}");
                report.failures.push((name, e.to_string()));
            }
        }
    }
    Ok(report)
}

/// Datasets written by the ingest stage, sorted by project directory name.
pub fn load_ingested(out: &Path) -> Result<Vec<(String, Result<ProjectDataset>)>> {
    let dir = out.join(INGEST_DIR);
    let mut files: Vec<PathBuf> = fs::read_dir(&dir)
        .map_err(|e| Error::io(&dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();
    Ok(files
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            let dataset = open(&p).and_then(|r| serde_json::from_reader(r).map_err(Error::from));
            (name, dataset)
        })
        .collect())
}

pub fn stage_metrics(config: &RunConfig) -> Result<StageReport> {
    let metrics_config = config.metrics();
    metrics_config.validate()?;
    let mut report = StageReport::new("metrics");
    let mut vectors = Vec::new();
    let loaded = load_ingested(&config.out)?;
    let computed: Vec<_> = pool(config)?.install(|| {
        loaded
            .into_par_iter()
            .map(|(name, d)| (name, d.map(|d| compute_vector(&d, &metrics_config))))
            .collect()
    });
    for (name, v) in computed {
        match v {
            Ok(v) => {
                vectors.push(v);
                report.processed.push(name);
            }
            Err(e) => report.failures.push((name, e.to_string())),
        }
    }
    let path = config.out.join(METRICS_CSV);
    write_file(&path, |w| write_metrics_csv(w, &vectors))?;
    report.outputs.push(path);
    Ok(report)
}

pub fn stage_quality(config: &RunConfig) -> Result<StageReport> {
    let quality_config = config.quality();
    quality_config.validate()?;
    let rules = RuleSet::builtin_with(&config.language_rules)?;
    let mut report = StageReport::new("quality");
    let loaded = load_ingested(&config.out)?;
    let profiled: Vec<_> = pool(config)?.install(|| {
        loaded
            .into_par_iter()
            .map(|(name, d)| {
                let result = d.and_then(|d| {
                    let project_dir = config.corpus.join(&name);
                    let (files, scan) = scan_tree(&project_dir.join(SOURCE_DIR), &rules);
                    if scan.unreadable > 0 {
                        log::warn!("{name}: {} unreadable source file(s) skipped", scan.unreadable);
                    }
                    let coverage = project_dir.join(COVERAGE_REPORT);
                    profile_project(
                        &d.project_id,
                        &files,
                        &d.issues,
                        &d.repo,
                        coverage.is_file().then_some(coverage.as_path()),
                        &quality_config,
                    )
                });
                (name, result)
            })
            .collect()
    });
    let mut profiles = Vec::new();
    for (name, p) in profiled {
        match p {
            Ok(p) => {
                profiles.push(p);
                report.processed.push(name);
            }
            Err(e) => {
                log::warn!("quality {name}: {e}");
                report.failures.push((name, e.to_string()));
            }
        }
    }
    let path = config.out.join(QUALITY_CSV);
    write_file(&path, |w| write_quality_csv(w, &profiles))?;
    report.outputs.push(path);
    Ok(report)
}

#[derive(Debug, Serialize)]
struct ParameterSummary {
    name: String,
    #[serde(flatten)]
    diagnostics: Diagnostics,
}

#[derive(Debug, Serialize)]
struct FitSummary {
    fit_id: String,
    attempts: usize,
    converged: bool,
    acceptance: Vec<f64>,
    parameters: Vec<ParameterSummary>,
    effects: Vec<(String, Effect)>,
    predictive_check: Option<PredictiveCheck>,
}

#[derive(Debug, Serialize)]
struct AnalysisSummary {
    gaussian_attempted: usize,
    poisson_attempted: usize,
    fits: Vec<FitSummary>,
}

fn summarize(outcomes: &[FitOutcome], rows: &[ResultRow]) -> AnalysisSummary {
    let (gaussian_attempted, poisson_attempted) = attempt_counts(rows);
    let fits = outcomes
        .iter()
        .filter_map(|o| {
            let post = o.posterior.as_ref()?;
            Some(FitSummary {
                fit_id: o.spec.id(),
                attempts: post.attempts,
                converged: post.converged,
                acceptance: post.acceptance.clone(),
                parameters: post
                    .parameters
                    .iter()
                    .zip(&post.diagnostics)
                    .map(|(n, d)| ParameterSummary {
                        name: n.clone(),
                        diagnostics: *d,
                    })
                    .collect(),
                effects: o.effects.clone(),
                predictive_check: o.check,
            })
        })
        .collect();
    AnalysisSummary {
        gaussian_attempted,
        poisson_attempted,
        fits,
    }
}

pub fn stage_analyze(config: &RunConfig) -> Result<StageReport> {
    let metrics = read_metrics_csv(open(&config.out.join(METRICS_CSV))?)?;
    let quality = read_quality_csv(open(&config.out.join(QUALITY_CSV))?)?;
    let analysis_config = config.analysis();
    let outcomes = pool(config)?.install(|| analyze(&metrics, &quality, &analysis_config))?;
    let rows: Vec<ResultRow> = outcomes.iter().flat_map(|o| o.rows.iter().cloned()).collect();

    let mut report = StageReport::new("analyze");
    let path = config.out.join(RESULTS_CSV);
    write_file(&path, |w| write_results_csv(w, &rows))?;
    report.outputs.push(path);

    let posterior_dir = config.out.join(POSTERIOR_DIR);
    clear_dir(&posterior_dir, "csv")?;
    if config.export_posteriors {
        for o in &outcomes {
            if let Some(post) = &o.posterior {
                let path = posterior_dir.join(format!("{}.csv", o.spec.id()));
                write_file(&path, |w| post.write_csv(w))?;
            }
        }
    }

    let summary = summarize(&outcomes, &rows);
    let path = config.out.join(ANALYSIS_SUMMARY);
    write_file(&path, |w| {
        serde_json::to_writer_pretty(&mut *w, &summary)?;
        writeln!(w).map_err(|e| Error::io(ANALYSIS_SUMMARY, e))
    })?;
    report.outputs.push(path);
    report.processed = outcomes
        .iter()
        .filter(|o| o.posterior.is_some())
        .map(|o| o.spec.id())
        .collect();
    Ok(report)
}

/// Plot data for one parameter of an exported posterior.
///
/// `fit` is a fit id, optionally suffixed with `:parameter`; the default
/// parameter is `alpha`, or the contrast for dormancy fits.
pub fn export_posterior_plotdata(out: &Path, fit: &str, mass: f64) -> Result<PlotData> {
    let (fit_id, parameter) = match fit.split_once(':') {
        Some((f, p)) => (f, Some(p)),
        None => (fit, None),
    };
    let path = out.join(POSTERIOR_DIR).join(format!("{fit_id}.csv"));
    let reader = open(&path).map_err(|_| Error::MissingFit(fit_id.to_owned()))?;
    let params = read_posterior_csv(reader)?;
    let wanted = parameter.unwrap_or_else(|| {
        if params.iter().any(|(n, _)| n == CONTRAST) {
            CONTRAST
        } else {
            "alpha"
        }
    });
    let (_, chains) = params
        .into_iter()
        .find(|(n, _)| n == wanted)
        .ok_or_else(|| Error::MissingFit(format!("{fit_id}:{wanted}")))?;
    let samples: Vec<f64> = chains.into_iter().flatten().collect();
    histogram(&samples, PLOT_BINS, mass)
}

pub fn stage_report(config: &RunConfig) -> Result<StageReport> {
    let rows = read_results_csv(open(&config.out.join(RESULTS_CSV))?)?;
    let matrix = render_matrix(&rows, config.flip_sign_convention);
    let mut report = StageReport::new("report");
    let path = config.out.join(MATRIX_TXT);
    write_file(&path, |w| {
        w.write_all(matrix.to_text().as_bytes())
            .map_err(|e| Error::io(MATRIX_TXT, e))
    })?;
    report.outputs.push(path);
    let path = config.out.join(MATRIX_JSON);
    write_file(&path, |w| {
        serde_json::to_writer_pretty(&mut *w, &matrix)?;
        writeln!(w).map_err(|e| Error::io(MATRIX_JSON, e))
    })?;
    report.outputs.push(path);
    for fit in &config.plot_fits {
        let data = export_posterior_plotdata(&config.out, fit, config.hdi_mass)?;
        let path = config
            .out
            .join(PLOT_DIR)
            .join(format!("{}.csv", fit.replace(':', "__")));
        write_file(&path, |w| write_plot_csv(w, &data))?;
        report.outputs.push(path);
        report.processed.push(fit.clone());
    }
    Ok(report)
}

/// Reports of every stage of a full run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReportBundle {
    pub stages: Vec<StageReport>,
}

impl ReportBundle {
    /// True if any project or fit failed in any stage.
    pub fn failed(&self) -> bool {
        self.stages.iter().any(StageReport::failed)
    }
}

/// Run ingest, metrics, quality, analyze and report in order.
pub fn run_pipeline(config: &RunConfig) -> Result<ReportBundle> {
    config.validate()?;
    let mut bundle = ReportBundle::default();
    for stage in [stage_ingest, stage_metrics, stage_quality, stage_analyze, stage_report] {
        bundle.stages.push(stage(config)?);
    }
    Ok(bundle)
}
