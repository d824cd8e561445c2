//! The sixteen community sustainability metrics.
//!
//! Every metric is a pure function of an immutable [`ProjectDataset`].
//! [`compute_vector`] evaluates all of them over the dataset clipped to its
//! `end`, recording metrics whose preconditions fail as absent rather than
//! aborting.

mod activity;
mod community;
mod truck_factor;

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ingest::ProjectDataset;
use crate::time::{TimeWindow, DAY, MONTH, WEEK};
use crate::{Error, Result};

pub use activity::{
    attrition, commit_split, dormancy, growth, non_maintainer_activity, positive_drops,
    positive_rises, pr_efficiency, retention, turnover, yearly_active_contributors,
    DormancyWindow,
};
pub use community::{age, comm_frequency, community_size, popularity, response_time};
pub use truck_factor::{
    authorship, coverage, degree_of_authorship, truck_factor, FileAuthorship, TruckFactor,
    DOA_ABSOLUTE_MIN, DOA_NORMALIZED_MIN,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MetricId {
    #[serde(rename = "COM-1")]
    Com1,
    #[serde(rename = "COM-2")]
    Com2,
    #[serde(rename = "POP-1")]
    Pop1,
    #[serde(rename = "STA-1")]
    Sta1,
    #[serde(rename = "STA-2")]
    Sta2,
    #[serde(rename = "STA-3")]
    Sta3,
    #[serde(rename = "STA-4")]
    Sta4,
    #[serde(rename = "STA-5")]
    Sta5,
    #[serde(rename = "STA-6")]
    Sta6,
    #[serde(rename = "STA-7")]
    Sta7,
    #[serde(rename = "STA-8")]
    Sta8,
    #[serde(rename = "STA-9")]
    Sta9,
    #[serde(rename = "TEC-1")]
    Tec1,
    #[serde(rename = "TEC-2")]
    Tec2,
    #[serde(rename = "TEC-3")]
    Tec3,
    #[serde(rename = "TEC-4")]
    Tec4,
}

impl MetricId {
    pub const ALL: [MetricId; 16] = [
        MetricId::Com1,
        MetricId::Com2,
        MetricId::Pop1,
        MetricId::Sta1,
        MetricId::Sta2,
        MetricId::Sta3,
        MetricId::Sta4,
        MetricId::Sta5,
        MetricId::Sta6,
        MetricId::Sta7,
        MetricId::Sta8,
        MetricId::Sta9,
        MetricId::Tec1,
        MetricId::Tec2,
        MetricId::Tec3,
        MetricId::Tec4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MetricId::Com1 => "COM-1",
            MetricId::Com2 => "COM-2",
            MetricId::Pop1 => "POP-1",
            MetricId::Sta1 => "STA-1",
            MetricId::Sta2 => "STA-2",
            MetricId::Sta3 => "STA-3",
            MetricId::Sta4 => "STA-4",
            MetricId::Sta5 => "STA-5",
            MetricId::Sta6 => "STA-6",
            MetricId::Sta7 => "STA-7",
            MetricId::Sta8 => "STA-8",
            MetricId::Sta9 => "STA-9",
            MetricId::Tec1 => "TEC-1",
            MetricId::Tec2 => "TEC-2",
            MetricId::Tec3 => "TEC-3",
            MetricId::Tec4 => "TEC-4",
        }
    }

    pub fn unit(self) -> Unit {
        match self {
            MetricId::Com1 | MetricId::Tec2 => Unit::Seconds,
            MetricId::Sta1 => Unit::Years,
            MetricId::Sta6 => Unit::Flag,
            _ => Unit::Count,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MetricId::Com1 => "Response",
            MetricId::Com2 => "Freq. of com",
            MetricId::Pop1 => "Popularity",
            MetricId::Sta1 => "Age",
            MetricId::Sta2 => "Attrition",
            MetricId::Sta3 => "Forks",
            MetricId::Sta4 => "Growth",
            MetricId::Sta5 => "Knowledge",
            MetricId::Sta6 => "Dormant",
            MetricId::Sta7 => "Retention",
            MetricId::Sta8 => "Size",
            MetricId::Sta9 => "Turnover",
            MetricId::Tec1 => "Dev. activity",
            MetricId::Tec2 => "Efficiency",
            MetricId::Tec3 => "Non-code",
            MetricId::Tec4 => "Overall dev.",
        }
    }
}

impl fmt::Display for MetricId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MetricId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MetricId::ALL
            .into_iter()
            .find(|m| m.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Config(format!("unknown sustainability metric `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    Seconds,
    Count,
    Years,
    Flag,
    Ratio,
}

impl Unit {
    pub fn as_str(self) -> &'static str {
        match self {
            Unit::Seconds => "seconds",
            Unit::Count => "count",
            Unit::Years => "years",
            Unit::Flag => "flag",
            Unit::Ratio => "ratio",
        }
    }

    fn is_integral(self) -> bool {
        matches!(self, Unit::Count | Unit::Years | Unit::Flag)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricValue {
    pub id: MetricId,
    pub value: f64,
    pub unit: Unit,
}

impl MetricValue {
    fn new(id: MetricId, value: f64) -> Self {
        MetricValue {
            id,
            value,
            unit: id.unit(),
        }
    }

    /// Text form used in the metrics CSV: integers for integral units.
    pub fn render(&self) -> String {
        if self.unit.is_integral() {
            format!("{}", self.value as i64)
        } else {
            format!("{}", self.value)
        }
    }
}

/// Metric values for one project; a metric is computed iff it has a value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SustainabilityVector {
    pub project_id: String,
    pub values: BTreeMap<MetricId, MetricValue>,
}

impl SustainabilityVector {
    pub fn get(&self, id: MetricId) -> Option<f64> {
        self.values.get(&id).map(|v| v.value)
    }

    pub fn completeness(&self) -> impl Iterator<Item = MetricId> + '_ {
        self.values.keys().copied()
    }

    pub fn set(&mut self, id: MetricId, value: Option<f64>) {
        if let Some(v) = value {
            self.values.insert(id, MetricValue::new(id, v));
        }
    }
}

/// Tunables for the windowed metrics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsConfig {
    /// Attrition and growth window length.
    pub window_weeks: u32,
    /// Snapshot length for the retention activity rule.
    pub activity_window_days: u32,
    pub turnover_lookback_months: u32,
    pub dormancy_window_months: u32,
    pub dormancy_freq_weeks: u32,
    pub dormancy_threshold: f64,
    pub as_of_year: i32,
    pub doc_extensions: Vec<String>,
}

impl Default for MetricsConfig {
    fn default() -> Self {
        MetricsConfig {
            window_weeks: 12,
            activity_window_days: 90,
            turnover_lookback_months: 6,
            dormancy_window_months: 12,
            dormancy_freq_weeks: 4,
            dormancy_threshold: 1.0,
            as_of_year: 2023,
            doc_extensions: vec!["txt".into(), "md".into()],
        }
    }
}

impl MetricsConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("window_weeks", self.window_weeks),
            ("activity_window_days", self.activity_window_days),
            ("turnover_lookback_months", self.turnover_lookback_months),
            ("dormancy_window_months", self.dormancy_window_months),
            ("dormancy_freq_weeks", self.dormancy_freq_weeks),
        ];
        for (key, v) in positive {
            if v == 0 {
                return Err(Error::Config(format!("{key} must be at least 1")));
            }
        }
        if !(self.dormancy_threshold >= 0.0) {
            return Err(Error::Config("dormancy_threshold must be non-negative".into()));
        }
        if self.doc_extensions.is_empty() {
            return Err(Error::Config("doc_extensions must not be empty".into()));
        }
        Ok(())
    }

    pub fn dormancy_window(&self) -> DormancyWindow {
        DormancyWindow {
            lookback: i64::from(self.dormancy_window_months) * MONTH,
            freq: i64::from(self.dormancy_freq_weeks) * WEEK,
            threshold: self.dormancy_threshold,
        }
    }
}

impl ProjectDataset {
    /// The dataset restricted to activity at or before `end`.
    ///
    /// Resolutions after `end` are treated as not yet happened, so such a PR
    /// is open and unmerged in the clipped view.
    pub fn clipped(&self) -> ProjectDataset {
        let end = self.end;
        let mut out = self.clone();
        out.commits.retain(|c| c.timestamp <= end);
        out.issues.retain(|i| i.created_at <= end);
        for issue in &mut out.issues {
            issue.comments.retain(|c| c.timestamp <= end);
        }
        out.prs.retain(|p| p.created_at <= end);
        for pr in &mut out.prs {
            if pr.resolved_at.is_some_and(|t| t > end) {
                pr.resolved_at = None;
                pr.merged = false;
                pr.merger = None;
            }
        }
        out
    }
}

/// All sixteen metrics over `dataset` clipped to its `end`.
pub fn compute_vector(dataset: &ProjectDataset, config: &MetricsConfig) -> SustainabilityVector {
    let d = dataset.clipped();
    let mut v = SustainabilityVector {
        project_id: d.project_id.clone(),
        values: BTreeMap::new(),
    };
    let window = TimeWindow::covering(d.start, d.end, i64::from(config.window_weeks) * WEEK);

    v.set(MetricId::Com1, response_time(&d.issues));
    v.set(MetricId::Com2, Some(comm_frequency(&d.issues) as f64));
    let (pop, forks) = popularity(&d.repo);
    v.set(MetricId::Pop1, Some(pop as f64));
    match age(&d.repo, config.as_of_year) {
        Ok(a) => v.set(MetricId::Sta1, Some(f64::from(a))),
        Err(e) => log::warn!("{}: STA-1 not computed: {e}", d.project_id),
    }
    v.set(
        MetricId::Sta2,
        Some(window.map_or(0, |w| attrition(&d.commits, &w)) as f64),
    );
    v.set(MetricId::Sta3, Some(forks as f64));
    v.set(
        MetricId::Sta4,
        Some(window.map_or(0, |w| growth(&d.prs, &w)) as f64),
    );
    v.set(
        MetricId::Sta5,
        truck_factor(&d.commits).map(|tf| f64::from(tf.value)),
    );
    let dormant = dormancy(&d.commits, d.end, &config.dormancy_window());
    v.set(MetricId::Sta6, Some(if dormant { 1.0 } else { 0.0 }));
    if !d.commits.is_empty() {
        let snapshot = i64::from(config.activity_window_days) * DAY;
        v.set(
            MetricId::Sta7,
            Some(retention(&d.commits, d.start, d.end, snapshot) as f64),
        );
    }
    v.set(MetricId::Sta8, Some(community_size(&d) as f64));
    let lookback = i64::from(config.turnover_lookback_months) * MONTH;
    v.set(
        MetricId::Sta9,
        Some(turnover(&d.commits, d.end, lookback) as f64),
    );
    v.set(
        MetricId::Tec1,
        Some(non_maintainer_activity(&d.commits, &d.prs) as f64),
    );
    v.set(MetricId::Tec2, pr_efficiency(&d.prs));
    let (docs, code) = commit_split(&d.commits, &config.doc_extensions);
    v.set(MetricId::Tec3, Some(docs as f64));
    v.set(MetricId::Tec4, Some(code as f64));
    v
}

/// Header of the metrics CSV.
pub const METRICS_CSV_HEADER: [&str; 5] = ["project_id", "metric_id", "value", "unit", "computed"];

/// Write one row per (project, metric); absent metrics have an empty value.
pub fn write_metrics_csv<W: Write>(out: W, vectors: &[SustainabilityVector]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(METRICS_CSV_HEADER)?;
    for v in vectors {
        for id in MetricId::ALL {
            match v.values.get(&id) {
                Some(mv) => w.write_record([
                    v.project_id.as_str(),
                    id.as_str(),
                    &mv.render(),
                    mv.unit.as_str(),
                    "true",
                ])?,
                None => w.write_record([
                    v.project_id.as_str(),
                    id.as_str(),
                    "",
                    id.unit().as_str(),
                    "false",
                ])?,
            }
        }
    }
    w.flush().map_err(|e| Error::io("metrics csv", e))?;
    Ok(())
}

/// Parse a metrics CSV back into vectors, in first-seen project order.
pub fn read_metrics_csv<R: std::io::Read>(input: R) -> Result<Vec<SustainabilityVector>> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
    if header != METRICS_CSV_HEADER {
        return Err(Error::Config(format!("unexpected metrics header {header:?}")));
    }
    let mut out: Vec<SustainabilityVector> = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let project = &rec[0];
        let id: MetricId = rec[1].parse()?;
        if out.last().is_none_or(|v| v.project_id != project) {
            out.push(SustainabilityVector {
                project_id: project.to_owned(),
                values: BTreeMap::new(),
            });
        }
        if &rec[4] == "true" {
            let value: f64 = rec[2]
                .parse()
                .map_err(|_| Error::Config(format!("bad metric value `{}`", &rec[2])))?;
            out.last_mut()
                .expect("pushed above")
                .set(id, Some(value));
        }
    }
    Ok(out)
}
