use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use sustainq::pipeline::{self, ReportBundle, RunConfig, StageReport};

/// Mine project repositories, compute sustainability and quality metrics, and
/// estimate how the former affect the latter.
#[derive(Debug, Parser)]
#[command(name = "sustainq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Load each project's exports into `OUT/ingest/`.
    Ingest(Common),
    /// Compute sustainability metrics into `OUT/metrics.csv`.
    Metrics(Common),
    /// Compute code quality metrics into `OUT/quality.csv`.
    Quality(Common),
    /// Fit every model and write `OUT/results.csv`.
    Analyze(Common),
    /// Render the impact matrix and requested plot data.
    Report {
        #[command(flatten)]
        common: Common,
        /// Fit id (`QUALITY__SUST__model[:parameter]`) to export plot data for; repeatable.
        #[arg(long = "plot", value_name = "FIT")]
        plots: Vec<String>,
    },
    /// Run all stages in order.
    Run(Common),
}

#[derive(Debug, Args)]
struct Common {
    /// Directory holding one subdirectory per project.
    #[arg(long, value_name = "DIR")]
    corpus: Option<PathBuf>,
    /// Output directory.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// TOML file of run settings.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    #[arg(long, value_name = "N")]
    seed: Option<u64>,
    /// Worker threads.
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
}

impl Common {
    fn resolve(&self) -> Result<RunConfig> {
        let mut config = match &self.config {
            Some(path) => RunConfig::from_file(path)?,
            None => RunConfig::default(),
        };
        if let Some(c) = &self.corpus {
            config.corpus = c.clone();
        }
        if let Some(o) = &self.out {
            config.out = o.clone();
        }
        if let Some(s) = self.seed {
            config.seed = s;
        }
        if let Some(j) = self.jobs {
            config.jobs = j;
        }
        config.validate()?;
        Ok(config)
    }
}

fn print_stage(report: &StageReport) {
    println!("{}: {} processed, {} failed", report.stage, report.processed.len(), report.failures.len());
    for (name, reason) in &report.failures {
        eprintln!("  {name}: {reason}");
    }
    for path in &report.outputs {
        log::info!("wrote {}", path.display());
    }
}

fn run(cli: Cli) -> Result<bool> {
    let stage = match &cli.command {
        Command::Ingest(c) => pipeline::stage_ingest(&c.resolve()?),
        Command::Metrics(c) => pipeline::stage_metrics(&c.resolve()?),
        Command::Quality(c) => pipeline::stage_quality(&c.resolve()?),
        Command::Analyze(c) => pipeline::stage_analyze(&c.resolve()?),
        Command::Report { common, plots } => {
            let mut config = common.resolve()?;
            config.plot_fits.extend(plots.iter().cloned());
            pipeline::stage_report(&config)
        }
        Command::Run(c) => {
            let config = c.resolve()?;
            let bundle: ReportBundle = pipeline::run_pipeline(&config)
                .with_context(|| format!("pipeline over {}", config.corpus.display()))?;
            bundle.stages.iter().for_each(print_stage);
            return Ok(!bundle.failed());
        }
    }?;
    print_stage(&stage);
    Ok(!stage.failed())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
