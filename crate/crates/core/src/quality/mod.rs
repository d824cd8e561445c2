//! Code quality metrics from a source tree and an issue tracker export.
//!
//! Source files are analysed lexically: each language is described by a
//! [`LanguageRules`] data file, and the analyzer finds function spans, counts
//! decision points, and normalises code lines for duplicate detection.

mod coverage;
mod duplication;
pub mod functions;
pub mod lexer;
pub mod rules;
mod scan;

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

pub use coverage::{
    coverage_metric, coverage_proxy, is_test_path, parse_coverage_report, CoverageSource,
    CoverageTotals, DEFAULT_TEST_MARKERS,
};
pub use duplication::{duplicated_lines, duplication_pct};
pub use functions::{cyclomatic, FunctionSpan};
pub use rules::{FunctionStyle, LanguageRules, RuleSet};
pub use scan::{profile_source, scan_tree, FileProfile, ScanReport};

use crate::error::{Error, Result};
use crate::ingest::{Issue, RepoInfo};

/// The eight software quality metrics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum QualityId {
    #[serde(rename = "SWQ-1")]
    Swq1,
    #[serde(rename = "SWQ-2.1")]
    Swq2_1,
    #[serde(rename = "SWQ-2.2")]
    Swq2_2,
    #[serde(rename = "SWQ-2.3")]
    Swq2_3,
    #[serde(rename = "SWQ-2.4")]
    Swq2_4,
    #[serde(rename = "SWQ-2.5")]
    Swq2_5,
    #[serde(rename = "SWQ-2.6")]
    Swq2_6,
    #[serde(rename = "SWQ-2.7")]
    Swq2_7,
}

impl QualityId {
    pub const ALL: [QualityId; 8] = [
        QualityId::Swq1,
        QualityId::Swq2_1,
        QualityId::Swq2_2,
        QualityId::Swq2_3,
        QualityId::Swq2_4,
        QualityId::Swq2_5,
        QualityId::Swq2_6,
        QualityId::Swq2_7,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            QualityId::Swq1 => "SWQ-1",
            QualityId::Swq2_1 => "SWQ-2.1",
            QualityId::Swq2_2 => "SWQ-2.2",
            QualityId::Swq2_3 => "SWQ-2.3",
            QualityId::Swq2_4 => "SWQ-2.4",
            QualityId::Swq2_5 => "SWQ-2.5",
            QualityId::Swq2_6 => "SWQ-2.6",
            QualityId::Swq2_7 => "SWQ-2.7",
        }
    }

    /// Column name in the quality CSV.
    pub fn column(self) -> &'static str {
        match self {
            QualityId::Swq1 => "swq1",
            QualityId::Swq2_1 => "swq2_1",
            QualityId::Swq2_2 => "swq2_2",
            QualityId::Swq2_3 => "swq2_3",
            QualityId::Swq2_4 => "swq2_4",
            QualityId::Swq2_5 => "swq2_5",
            QualityId::Swq2_6 => "swq2_6",
            QualityId::Swq2_7 => "swq2_7",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            QualityId::Swq1 => "Defect density",
            QualityId::Swq2_1 => "Test coverage",
            QualityId::Swq2_2 => "Complex functions (McCabe 11-25)",
            QualityId::Swq2_3 => "Very complex functions (McCabe > 50)",
            QualityId::Swq2_4 => "Very large files",
            QualityId::Swq2_5 => "Very large functions",
            QualityId::Swq2_6 => "Code duplication",
            QualityId::Swq2_7 => "Most complex function LOC",
        }
    }

    /// Only test coverage improves as it grows.
    pub fn higher_is_better(self) -> bool {
        self == QualityId::Swq2_1
    }

    /// Non-negative integer valued, and therefore eligible for the Poisson model.
    pub fn is_count(self) -> bool {
        matches!(
            self,
            QualityId::Swq2_2 | QualityId::Swq2_3 | QualityId::Swq2_4 | QualityId::Swq2_5 | QualityId::Swq2_7
        )
    }
}

impl std::fmt::Display for QualityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for QualityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        QualityId::ALL
            .into_iter()
            .find(|q| q.as_str() == s || q.column() == s)
            .ok_or_else(|| Error::Config(format!("unknown quality metric `{s}`")))
    }
}

/// Denominator for defect density.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SizeUnit {
    /// Repository size in kilobytes.
    #[default]
    Kb,
    /// Thousands of source lines.
    Kloc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QualityConfig {
    pub complex_cc_min: u32,
    pub complex_cc_max: u32,
    /// Strict lower bound for very complex functions.
    pub very_complex_cc: u32,
    /// Strict lower bound for very large files.
    pub very_large_file_sloc: u64,
    /// Strict lower bound for very large functions.
    pub very_large_function_sloc: u64,
    pub duplication_block: usize,
    pub defect_labels: Vec<String>,
    pub size_unit: SizeUnit,
    pub test_markers: Vec<String>,
}

impl Default for QualityConfig {
    fn default() -> Self {
        QualityConfig {
            complex_cc_min: 11,
            complex_cc_max: 25,
            very_complex_cc: 50,
            very_large_file_sloc: 1000,
            very_large_function_sloc: 100,
            duplication_block: 6,
            defect_labels: ["bug", "defect", "type: bug", "kind/bug"].map(String::from).to_vec(),
            size_unit: SizeUnit::Kb,
            test_markers: DEFAULT_TEST_MARKERS.map(String::from).to_vec(),
        }
    }
}

impl QualityConfig {
    pub fn validate(&self) -> Result<()> {
        if self.complex_cc_min > self.complex_cc_max {
            return Err(Error::Config("complex_cc_min exceeds complex_cc_max".into()));
        }
        if self.very_complex_cc < self.complex_cc_max {
            return Err(Error::Config("very_complex_cc overlaps the complex band".into()));
        }
        if self.duplication_block == 0 {
            return Err(Error::Config("duplication_block must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QualityProfile {
    pub project_id: String,
    pub swq1: Option<f64>,
    pub swq2_1: Option<f64>,
    pub swq2_2: u64,
    pub swq2_3: u64,
    pub swq2_4: u64,
    pub swq2_5: u64,
    pub swq2_6: Option<f64>,
    pub swq2_7: u64,
    pub coverage_source: CoverageSource,
}

impl QualityProfile {
    pub fn get(&self, id: QualityId) -> Option<f64> {
        match id {
            QualityId::Swq1 => self.swq1,
            QualityId::Swq2_1 => self.swq2_1,
            QualityId::Swq2_2 => Some(self.swq2_2 as f64),
            QualityId::Swq2_3 => Some(self.swq2_3 as f64),
            QualityId::Swq2_4 => Some(self.swq2_4 as f64),
            QualityId::Swq2_5 => Some(self.swq2_5 as f64),
            QualityId::Swq2_6 => self.swq2_6,
            QualityId::Swq2_7 => Some(self.swq2_7 as f64),
        }
    }
}

/// The structural part of a profile: SWQ-2.2 to 2.5 and SWQ-2.7.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StructuralCounts {
    pub swq2_2: u64,
    pub swq2_3: u64,
    pub swq2_4: u64,
    pub swq2_5: u64,
    pub swq2_7: u64,
}

pub fn quality_profile(files: &[FileProfile], config: &QualityConfig) -> StructuralCounts {
    let functions = || files.iter().flat_map(|f| f.functions.iter());
    let count = |pred: &dyn Fn(&FunctionSpan) -> bool| functions().filter(|s| pred(s)).count() as u64;
    let most_complex = functions().max_by(|a, b| {
        a.cyclomatic
            .cmp(&b.cyclomatic)
            .then(a.sloc.cmp(&b.sloc))
            .then(b.path.cmp(&a.path))
            .then(b.start_line.cmp(&a.start_line))
    });
    StructuralCounts {
        swq2_2: count(&|s| (config.complex_cc_min..=config.complex_cc_max).contains(&s.cyclomatic)),
        swq2_3: count(&|s| s.cyclomatic > config.very_complex_cc),
        swq2_4: files.iter().filter(|f| f.sloc > config.very_large_file_sloc).count() as u64,
        swq2_5: count(&|s| s.sloc > config.very_large_function_sloc),
        swq2_7: most_complex.map_or(0, |s| s.sloc),
    }
}

/// Issues carrying at least one label from `labels`, compared case-insensitively.
pub fn defect_count(issues: &[Issue], labels: &[String]) -> u64 {
    let wanted: BTreeSet<String> = labels.iter().map(|l| l.trim().to_lowercase()).collect();
    issues
        .iter()
        .filter(|i| i.labels.iter().any(|l| wanted.contains(&l.trim().to_lowercase())))
        .count() as u64
}

/// SWQ-1: defect-labelled issues per KB of repository.
pub fn defect_density(issues: &[Issue], repo: &RepoInfo, labels: &[String]) -> Result<f64> {
    if !(repo.size_kb > 0.0) {
        return Err(Error::Precondition(format!(
            "repository size must be positive, got {} KB",
            repo.size_kb
        )));
    }
    Ok(defect_count(issues, labels) as f64 / repo.size_kb)
}

/// Defect-labelled issues per thousand source lines; `None` for an empty tree.
pub fn defect_density_kloc(issues: &[Issue], total_sloc: u64, labels: &[String]) -> Option<f64> {
    (total_sloc > 0).then(|| defect_count(issues, labels) as f64 * 1000.0 / total_sloc as f64)
}

/// All eight quality metrics for one project.
pub fn profile_project(
    project_id: &str,
    files: &[FileProfile],
    issues: &[Issue],
    repo: &RepoInfo,
    coverage_report: Option<&Path>,
    config: &QualityConfig,
) -> Result<QualityProfile> {
    let s = quality_profile(files, config);
    let swq1 = match config.size_unit {
        SizeUnit::Kb => Some(defect_density(issues, repo, &config.defect_labels)?),
        SizeUnit::Kloc => defect_density_kloc(
            issues,
            files.iter().map(|f| f.sloc).sum(),
            &config.defect_labels,
        ),
    };
    let (swq2_1, coverage_source) = coverage_metric(files, coverage_report, &config.test_markers)?;
    Ok(QualityProfile {
        project_id: project_id.to_owned(),
        swq1,
        swq2_1,
        swq2_2: s.swq2_2,
        swq2_3: s.swq2_3,
        swq2_4: s.swq2_4,
        swq2_5: s.swq2_5,
        swq2_6: duplication_pct(files, config.duplication_block),
        swq2_7: s.swq2_7,
        coverage_source,
    })
}

pub const QUALITY_CSV_HEADER: [&str; 10] = [
    "project_id",
    "swq1",
    "swq2_1",
    "swq2_2",
    "swq2_3",
    "swq2_4",
    "swq2_5",
    "swq2_6",
    "swq2_7",
    "coverage_source",
];

fn render(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Write one row per project; not-computed values are empty.
pub fn write_quality_csv<W: Write>(out: W, profiles: &[QualityProfile]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(QUALITY_CSV_HEADER)?;
    for p in profiles {
        w.write_record([
            p.project_id.clone(),
            render(p.swq1),
            render(p.swq2_1),
            p.swq2_2.to_string(),
            p.swq2_3.to_string(),
            p.swq2_4.to_string(),
            p.swq2_5.to_string(),
            render(p.swq2_6),
            p.swq2_7.to_string(),
            p.coverage_source.as_str().to_owned(),
        ])?;
    }
    w.flush().map_err(|e| Error::io("quality csv", e))?;
    Ok(())
}

pub fn read_quality_csv<R: std::io::Read>(input: R) -> Result<Vec<QualityProfile>> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
    if header != QUALITY_CSV_HEADER {
        return Err(Error::Config(format!("unexpected quality header {header:?}")));
    }
    let real = |s: &str| -> Result<Option<f64>> {
        if s.is_empty() {
            return Ok(None);
        }
        s.parse()
            .map(Some)
            .map_err(|_| Error::Config(format!("bad quality value `{s}`")))
    };
    let count = |s: &str| -> Result<u64> {
        s.parse()
            .map_err(|_| Error::Config(format!("bad quality count `{s}`")))
    };
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        out.push(QualityProfile {
            project_id: rec[0].to_owned(),
            swq1: real(&rec[1])?,
            swq2_1: real(&rec[2])?,
            swq2_2: count(&rec[3])?,
            swq2_3: count(&rec[4])?,
            swq2_4: count(&rec[5])?,
            swq2_5: count(&rec[6])?,
            swq2_6: real(&rec[7])?,
            swq2_7: count(&rec[8])?,
            coverage_source: rec[9].parse()?,
        });
    }
    Ok(out)
}

/// Per-language SLOC totals, handy for reporting.
pub fn sloc_by_language(files: &[FileProfile]) -> BTreeMap<String, u64> {
    let mut out = BTreeMap::new();
    for f in files {
        *out.entry(f.language.clone()).or_insert(0) += f.sloc;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::TrackerSource;

    fn span(path: &str, sloc: u64, cc: u32) -> FunctionSpan {
        FunctionSpan {
            path: path.into(),
            start_line: 1,
            end_line: sloc as usize,
            sloc,
            cyclomatic: cc,
        }
    }

    fn file(path: &str, sloc: u64, functions: Vec<FunctionSpan>) -> FileProfile {
        FileProfile {
            path: path.into(),
            language: "c-family".into(),
            sloc,
            functions,
            normalized_lines: vec![],
        }
    }

    #[test]
    fn complexity_bands() {
        let c = QualityConfig::default();
        let files = [file(
            "a.c",
            10,
            [10, 11, 25, 26, 50, 51].iter().map(|&cc| span("a.c", 5, cc)).collect(),
        )];
        let s = quality_profile(&files, &c);
        assert_eq!((s.swq2_2, s.swq2_3), (2, 1));
    }

    #[test]
    fn single_function_cc12() {
        let s = quality_profile(&[file("a.c", 3, vec![span("a.c", 3, 12)])], &QualityConfig::default());
        assert_eq!((s.swq2_2, s.swq2_3), (1, 0));
    }

    #[test]
    fn file_size_threshold_is_strict() {
        let c = QualityConfig::default();
        assert_eq!(quality_profile(&[file("a.c", 1000, vec![])], &c).swq2_4, 0);
        assert_eq!(quality_profile(&[file("a.c", 1001, vec![])], &c).swq2_4, 1);
    }

    #[test]
    fn most_complex_tie_breaks() {
        let c = QualityConfig::default();
        let files = [
            file("b.c", 50, vec![span("b.c", 20, 9)]),
            file("a.c", 50, vec![span("a.c", 12, 9), span("a.c", 30, 4)]),
        ];
        assert_eq!(quality_profile(&files, &c).swq2_7, 20);
        let files = [
            file("b.c", 50, vec![span("b.c", 20, 9)]),
            file("a.c", 50, vec![span("a.c", 20, 9)]),
        ];
        assert_eq!(quality_profile(&files, &c).swq2_7, 20);
        assert_eq!(quality_profile(&[], &c), StructuralCounts::default());
    }

    fn issue(labels: &[&str]) -> Issue {
        Issue {
            id: "1".into(),
            created_at: 0,
            labels: labels.iter().map(|s| s.to_string()).collect(),
            author: crate::ingest::ContributorId::new("u"),
            source: TrackerSource::Github,
            comments: vec![],
        }
    }

    fn repo(size_kb: f64) -> RepoInfo {
        RepoInfo {
            project_id: "p".into(),
            stars: 0,
            watchers: 0,
            forks: 0,
            size_kb,
            inception_year: 2020,
        }
    }

    #[test]
    fn defect_ratio() {
        let labels = QualityConfig::default().defect_labels;
        let issues: Vec<Issue> = (0..10).map(|_| issue(&["Bug"])).chain([issue(&["feature"])]).collect();
        assert_eq!(defect_density(&issues, &repo(500.0), &labels).unwrap(), 0.02);
        assert_eq!(defect_density(&[issue(&["docs"])], &repo(500.0), &labels).unwrap(), 0.0);
        assert!(defect_density(&issues, &repo(0.0), &labels).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let p = QualityProfile {
            project_id: "p".into(),
            swq1: Some(0.02),
            swq2_1: None,
            swq2_2: 1,
            swq2_3: 0,
            swq2_4: 2,
            swq2_5: 0,
            swq2_6: Some(12.5),
            swq2_7: 40,
            coverage_source: CoverageSource::None,
        };
        let mut buf = Vec::new();
        write_quality_csv(&mut buf, std::slice::from_ref(&p)).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("project_id,swq1,swq2_1,swq2_2,swq2_3,swq2_4,swq2_5,swq2_6,swq2_7,coverage_source\n"));
        assert_eq!(read_quality_csv(&buf[..]).unwrap(), vec![p]);
    }
}
