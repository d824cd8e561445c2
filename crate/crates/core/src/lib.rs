//! Repository mining, community sustainability metrics, code quality metrics,
//! and single-predictor Bayesian impact analysis.
//!
//! The crate is organised as a chain of stages:
//!
//! * [`ingest`] turns commit history and tracker exports into a [`ProjectDataset`].
//! * [`metrics`] computes the sixteen sustainability metrics over a dataset.
//! * [`quality`] computes defect density and the seven code quality sub-metrics.
//! * [`bayes`] fits Gaussian and Poisson regressions and applies the HDI decision rule.
//! * [`pipeline`] wires the stages together over a corpus and renders the impact matrix.

pub mod bayes;
pub mod error;
pub mod ingest;
pub mod metrics;
pub mod pipeline;
pub mod quality;
pub mod time;

pub use error::{Error, Result};
pub use ingest::{assemble_dataset, ProjectDataset};
pub use metrics::{compute_vector, MetricId, SustainabilityVector};
pub use quality::{QualityId, QualityProfile};
