use std::path::Path;

use serde::{Deserialize, Serialize};

use super::scan::FileProfile;
use crate::error::{Error, Result};

/// Where an SWQ-2.1 value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverageSource {
    Report,
    Proxy,
    None,
}

impl CoverageSource {
    pub fn as_str(self) -> &'static str {
        match self {
            CoverageSource::Report => "report",
            CoverageSource::Proxy => "proxy",
            CoverageSource::None => "none",
        }
    }
}

impl std::str::FromStr for CoverageSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "report" => Ok(CoverageSource::Report),
            "proxy" => Ok(CoverageSource::Proxy),
            "none" => Ok(CoverageSource::None),
            other => Err(Error::Config(format!("unknown coverage source `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CoverageTotals {
    pub instrumented: u64,
    pub covered: u64,
}

impl CoverageTotals {
    pub fn percent(&self) -> Option<f64> {
        (self.instrumented > 0).then(|| 100.0 * self.covered as f64 / self.instrumented as f64)
    }
}

/// Parse `path,instrumented_lines,covered_lines` rows.
///
/// A first row whose numeric columns do not parse is treated as a header.
/// Blank lines and `#` comments are ignored. Covered counts above the
/// instrumented count are malformed.
pub fn parse_coverage_report(text: &str, origin: &Path) -> Result<CoverageTotals> {
    let mut totals = CoverageTotals::default();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let malformed = |line: usize, message: String| Error::Malformed {
        what: "coverage report".into(),
        path: origin.to_path_buf(),
        message: format!("row {line}: {message}"),
    };
    for (i, rec) in reader.records().enumerate() {
        let rec = rec?;
        if rec.iter().all(str::is_empty) {
            continue;
        }
        if rec.len() != 3 {
            return Err(malformed(i + 1, format!("expected 3 columns, found {}", rec.len())));
        }
        let parsed = (rec[1].parse::<u64>(), rec[2].parse::<u64>());
        let (inst, cov) = match parsed {
            (Ok(a), Ok(b)) => (a, b),
            _ if i == 0 => continue,
            _ => return Err(malformed(i + 1, "non-numeric line counts".into())),
        };
        if cov > inst {
            return Err(malformed(i + 1, format!("covered {cov} exceeds instrumented {inst}")));
        }
        totals.instrumented += inst;
        totals.covered += cov;
    }
    Ok(totals)
}

/// Default path tokens that mark a file as test code.
pub const DEFAULT_TEST_MARKERS: [&str; 4] = ["test", "tests", "spec", "specs"];

/// True if any alphanumeric token of `path` (split on every other
/// character, compared case-insensitively) is one of `markers`.
pub fn is_test_path(path: &str, markers: &[String]) -> bool {
    path.split(|c: char| !c.is_ascii_alphanumeric())
        .filter(|t| !t.is_empty())
        .any(|t| markers.iter().any(|m| m.eq_ignore_ascii_case(t)))
}

/// Test-file SLOC as a percentage of all SLOC; `None` for an empty tree.
pub fn coverage_proxy(files: &[FileProfile], markers: &[String]) -> Option<f64> {
    let total: u64 = files.iter().map(|f| f.sloc).sum();
    let test: u64 = files
        .iter()
        .filter(|f| is_test_path(&f.path, markers))
        .map(|f| f.sloc)
        .sum();
    (total > 0).then(|| 100.0 * test as f64 / total as f64)
}

/// SWQ-2.1: the external report when it has instrumented lines, else the
/// static proxy.
pub fn coverage_metric(
    files: &[FileProfile],
    report: Option<&Path>,
    markers: &[String],
) -> Result<(Option<f64>, CoverageSource)> {
    if let Some(path) = report {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        if let Some(p) = parse_coverage_report(&text, path)?.percent() {
            return Ok((Some(p), CoverageSource::Report));
        }
    }
    match coverage_proxy(files, markers) {
        Some(p) => Ok((Some(p), CoverageSource::Proxy)),
        None => Ok((None, CoverageSource::None)),
    }
}
