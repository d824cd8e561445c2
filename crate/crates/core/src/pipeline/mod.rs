//! End-to-end orchestration over a corpus of project directories.
//!
//! Each stage reads the previous stage's files from the output directory, so
//! any stage can be rerun on its own:
//!
//! | stage   | reads                          | writes                                  |
//! |---------|--------------------------------|-----------------------------------------|
//! | ingest  | `corpus/<project>/`            | `ingest/<project>.json`                 |
//! | metrics | `ingest/`                      | `metrics.csv`                           |
//! | quality | `ingest/`, `corpus/*/source/`  | `quality.csv`                           |
//! | analyze | `metrics.csv`, `quality.csv`   | `results.csv`, `posteriors/`, `analysis.json` |
//! | report  | `results.csv`, `posteriors/`   | `matrix.txt`, `matrix.json`, `plots/`   |
//!
//! A project that fails to load or profile is left out and reported; the
//! other projects proceed.

mod config;
mod matrix;
mod plot;
mod stages;

pub use config::RunConfig;
pub use matrix::{
    matrix_row_ids, render_matrix, ImpactMatrix, MatrixCell, MatrixColumn, MatrixRow, DEGRADES,
    IMPROVES, NOT_COMPUTED, NO_EVIDENCE,
};
pub use plot::{histogram, write_plot_csv, PlotData, PLOT_BINS, PLOT_CSV_HEADER};
pub use stages::*;
