use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{
    load_commits, load_prs, load_repo, load_tracker_data, parse_git_log, LoadReport,
    ProjectDataset, TrackerSource,
};
use crate::{Error, Result};

/// Files every project directory must provide.
pub const DATASET_FILES: [&str; 4] = ["commits.jsonl", "issues.jsonl", "prs.jsonl", "repo.json"];

/// Raw history dump accepted in place of `commits.jsonl`.
pub const HISTORY_DUMP: &str = "history.log";

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestReport {
    pub commits: LoadReport,
    pub issues: LoadReport,
    pub prs: LoadReport,
}

pub fn assemble_dataset(project_dir: &Path) -> Result<ProjectDataset> {
    assemble_dataset_with_report(project_dir).map(|(d, _)| d)
}

/// Load the four export files of `project_dir` into a dataset.
///
/// If `commits.jsonl` is absent but a `history.log` git dump is present, the
/// dump is parsed instead.
pub fn assemble_dataset_with_report(project_dir: &Path) -> Result<(ProjectDataset, IngestReport)> {
    let commits_path = project_dir.join(DATASET_FILES[0]);
    let history_path = project_dir.join(HISTORY_DUMP);
    let commits = if !commits_path.exists() && history_path.exists() {
        let f = File::open(&history_path).map_err(|e| Error::io(&history_path, e))?;
        parse_git_log(BufReader::new(f))
    } else {
        load_commits(&commits_path)?
    };
    let issues = load_tracker_data(&project_dir.join(DATASET_FILES[1]), TrackerSource::Github)?;
    let prs = load_prs(&project_dir.join(DATASET_FILES[2]))?;
    let repo = load_repo(&project_dir.join(DATASET_FILES[3]))?;

    let stamps = commits
        .records
        .iter()
        .map(|c| c.timestamp)
        .chain(issues.records.iter().flat_map(|i| {
            std::iter::once(i.created_at).chain(i.comments.iter().map(|c| c.timestamp))
        }))
        .chain(
            prs.records
                .iter()
                .flat_map(|p| std::iter::once(p.created_at).chain(p.resolved_at)),
        );
    let (start, end) = stamps.fold(None, |acc: Option<(i64, i64)>, t| match acc {
        None => Some((t, t)),
        Some((lo, hi)) => Some((lo.min(t), hi.max(t))),
    })
    .ok_or_else(|| Error::Malformed {
        what: "project",
        path: project_dir.to_path_buf(),
        message: "no timestamped activity".into(),
    })?;

    let report = IngestReport {
        commits: commits.report,
        issues: issues.report,
        prs: prs.report,
    };
    let dataset = ProjectDataset {
        project_id: repo.project_id.clone(),
        commits: commits.records,
        issues: issues.records,
        prs: prs.records,
        repo,
        start,
        end,
    };
    Ok((dataset, report))
}
