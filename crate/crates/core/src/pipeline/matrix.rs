use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bayes::{ResultRow, Status, FLIP_SET};
use crate::metrics::MetricId;
use crate::quality::QualityId;

pub const NO_EVIDENCE: &str = "✗";
pub const IMPROVES: &str = "+";
pub const DEGRADES: &str = "−";
pub const NOT_COMPUTED: &str = "NA";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixCell {
    /// Empty when the table has no decision for this cell.
    pub symbol: String,
    pub n_projects: Option<usize>,
    pub direction: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRow {
    pub sust_id: String,
    pub cells: Vec<MatrixCell>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixColumn {
    pub quality_id: String,
    /// Most common per-cell project count; other counts are printed in the cell.
    pub default_n: Option<usize>,
}

/// Impact of each sustainability metric (rows) on each quality metric (columns).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImpactMatrix {
    pub columns: Vec<MatrixColumn>,
    pub rows: Vec<MatrixRow>,
    /// Cells rendered blank: missing from the table or without a decision.
    pub blank_cells: usize,
}

/// Row labels: every predictor, with dormancy split into its two groups.
pub fn matrix_row_ids() -> Vec<String> {
    MetricId::ALL
        .iter()
        .flat_map(|&m| {
            if m == MetricId::Sta6 {
                vec!["STA-6:dormant".to_owned(), "STA-6:non-dormant".to_owned()]
            } else {
                vec![m.as_str().to_owned()]
            }
        })
        .collect()
}

fn symbol(row: &ResultRow, flip: bool) -> Option<&'static str> {
    match row.direction {
        Status::NotComputed => Some(NOT_COMPUTED),
        Status::NoEvidence => Some(NO_EVIDENCE),
        Status::Increase | Status::Decrease => {
            let base = row.sust_id.split(':').next().unwrap_or_default();
            let flipped = flip && FLIP_SET.iter().any(|m| m.as_str() == base);
            match (row.quality_impact.as_deref(), flipped) {
                (Some("improves"), false) | (Some("degrades"), true) => Some(IMPROVES),
                (Some("degrades"), false) | (Some("improves"), true) => Some(DEGRADES),
                _ => None,
            }
        }
        _ => None,
    }
}

pub fn render_matrix(rows: &[ResultRow], flip: bool) -> ImpactMatrix {
    let index: BTreeMap<(&str, &str), &ResultRow> = rows
        .iter()
        .map(|r| ((r.sust_id.as_str(), r.quality_id.as_str()), r))
        .collect();
    let row_ids = matrix_row_ids();
    let mut blank_cells = 0;
    let mut columns = Vec::new();
    let mut grid: Vec<Vec<MatrixCell>> = vec![Vec::new(); row_ids.len()];
    for q in QualityId::ALL {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, sust) in row_ids.iter().enumerate() {
            let cell = match index.get(&(sust.as_str(), q.as_str())) {
                Some(r) => {
                    let sym = symbol(r, flip);
                    if sym.is_some() && r.direction != Status::NotComputed {
                        if let Some(n) = r.n_projects {
                            *counts.entry(n).or_insert(0) += 1;
                        }
                    }
                    MatrixCell {
                        symbol: sym.unwrap_or_default().to_owned(),
                        n_projects: r.n_projects,
                        direction: Some(r.direction.as_str().to_owned()),
                    }
                }
                None => MatrixCell {
                    symbol: String::new(),
                    n_projects: None,
                    direction: None,
                },
            };
            if cell.symbol.is_empty() {
                blank_cells += 1;
            }
            grid[i].push(cell);
        }
        let default_n = counts
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then(a.0.cmp(b.0)))
            .map(|(&n, _)| n);
        columns.push(MatrixColumn {
            quality_id: q.as_str().to_owned(),
            default_n,
        });
    }
    ImpactMatrix {
        columns,
        rows: row_ids
            .into_iter()
            .zip(grid)
            .map(|(sust_id, cells)| MatrixRow { sust_id, cells })
            .collect(),
        blank_cells,
    }
}

impl ImpactMatrix {
    pub fn cell(&self, sust_id: &str, quality_id: &str) -> Option<&MatrixCell> {
        let r = self.rows.iter().find(|r| r.sust_id == sust_id)?;
        let c = self.columns.iter().position(|c| c.quality_id == quality_id)?;
        r.cells.get(c)
    }

    /// Text shown for a cell: the symbol, plus the project count when it
    /// differs from the column default.
    pub fn cell_text(&self, row: usize, col: usize) -> String {
        let cell = &self.rows[row].cells[col];
        if cell.symbol.is_empty() || cell.symbol == NOT_COMPUTED {
            return cell.symbol.clone();
        }
        match (cell.n_projects, self.columns[col].default_n) {
            (Some(n), Some(d)) if n != d => format!("{} ({n})", cell.symbol),
            _ => cell.symbol.clone(),
        }
    }

    /// Fixed-width text table with a legend.
    pub fn to_text(&self) -> String {
        let headers: Vec<String> = std::iter::once("Metric".to_owned())
            .chain(self.columns.iter().map(|c| match c.default_n {
                Some(n) => format!("{} ({n})", c.quality_id),
                None => c.quality_id.clone(),
            }))
            .collect();
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                std::iter::once(r.sust_id.clone())
                    .chain((0..self.columns.len()).map(|j| self.cell_text(i, j)))
                    .collect()
            })
            .collect();
        let width = |j: usize| {
            body.iter()
                .map(|r| r[j].chars().count())
                .chain([headers[j].chars().count()])
                .max()
                .unwrap_or(0)
        };
        let widths: Vec<usize> = (0..headers.len()).map(width).collect();
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            padded.join("  ").trim_end().to_owned()
        };
        let mut out = String::new();
        out.push_str(&line(&headers));
        out.push('\n');
        out.push_str(&widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("  "));
        out.push('\n');
        for r in &body {
            out.push_str(&line(r));
            out.push('\n');
        }
        out.push_str(&format!(
            "\n{NO_EVIDENCE} no evidence of impact   {IMPROVES} improves quality   {DEGRADES} degrades quality   {NOT_COMPUTED} not computed\n"
        ));
        if self.blank_cells > 0 {
            out.push_str(&format!("{} cell(s) without a decision left blank\n", self.blank_cells));
        }
        out
    }
}
