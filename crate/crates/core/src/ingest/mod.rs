//! Normalised per-project repository data.
//!
//! Commits come from a git history dump or a `commits.jsonl` export; issues,
//! pull requests and repository facts come from pre-fetched tracker exports.
//! Loaders never drop a record silently: every skipped line is counted in a
//! [`LoadReport`].

mod dataset;
mod git_log;
mod records;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::time::Timestamp;

pub use dataset::{assemble_dataset, assemble_dataset_with_report, IngestReport, DATASET_FILES};
pub use git_log::{parse_git_log, GIT_LOG_FORMAT};
pub use records::{load_commits, load_prs, load_repo, load_tracker_data};

/// Raw contributor identifier: `name <email>` for commits, a handle for
/// tracker records. Identifiers are never merged across record kinds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ContributorId(pub String);

impl ContributorId {
    /// Placeholder merger for PRs flagged merged without a recorded merger.
    pub const UNKNOWN: &'static str = "<unknown>";

    pub fn new(id: impl Into<String>) -> Self {
        ContributorId(id.into())
    }

    pub fn unknown() -> Self {
        ContributorId(Self::UNKNOWN.to_owned())
    }

    pub fn is_unknown(&self) -> bool {
        self.0 == Self::UNKNOWN
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ContributorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChangeKind {
    Added,
    Modified,
    Deleted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileChange {
    pub path: String,
    pub kind: ChangeKind,
}

impl FileChange {
    pub fn new(path: impl Into<String>, kind: ChangeKind) -> Self {
        FileChange {
            path: path.into(),
            kind,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Commit {
    pub sha: String,
    pub author: ContributorId,
    pub timestamp: Timestamp,
    pub files: Vec<FileChange>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comment {
    pub author: ContributorId,
    #[serde(rename = "created_at")]
    pub timestamp: Timestamp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TrackerSource {
    Github,
    Jira,
}

impl std::str::FromStr for TrackerSource {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "github" => Ok(TrackerSource::Github),
            "jira" => Ok(TrackerSource::Jira),
            _ => Err(crate::Error::UnknownSource(s.to_owned())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Issue {
    pub id: String,
    pub created_at: Timestamp,
    /// Lower-cased at load.
    pub labels: Vec<String>,
    pub author: ContributorId,
    pub source: TrackerSource,
    /// Ascending by timestamp.
    pub comments: Vec<Comment>,
}

impl Issue {
    /// Comments stamped before the issue itself, typically tracker migration noise.
    pub fn premature_comments(&self) -> impl Iterator<Item = &Comment> {
        self.comments
            .iter()
            .filter(move |c| c.timestamp < self.created_at)
    }

    /// Delay until the first comment that does not predate the issue.
    pub fn first_response_delay(&self) -> Option<i64> {
        self.comments
            .iter()
            .find(|c| c.timestamp >= self.created_at)
            .map(|c| c.timestamp - self.created_at)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PullRequest {
    pub id: String,
    pub author: ContributorId,
    pub created_at: Timestamp,
    pub resolved_at: Option<Timestamp>,
    pub merged: bool,
    pub merger: Option<ContributorId>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepoInfo {
    pub project_id: String,
    pub stars: u64,
    pub watchers: u64,
    pub forks: u64,
    pub size_kb: f64,
    pub inception_year: i32,
}

/// Everything mined for one project. Immutable once assembled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectDataset {
    pub project_id: String,
    pub commits: Vec<Commit>,
    pub issues: Vec<Issue>,
    pub prs: Vec<PullRequest>,
    pub repo: RepoInfo,
    /// Earliest activity timestamp.
    pub start: Timestamp,
    /// Latest activity timestamp over commits, issues, comments and PRs.
    pub end: Timestamp,
}

impl ProjectDataset {
    pub fn comments(&self) -> impl Iterator<Item = &Comment> {
        self.issues.iter().flat_map(|i| i.comments.iter())
    }
}

/// Per-loader bookkeeping. `skipped == read - loaded` always holds.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoadReport {
    pub read: usize,
    pub loaded: usize,
    pub skipped: usize,
    /// Records kept after a field was corrected or nulled.
    pub repaired: usize,
    /// Nested comments dropped for missing fields.
    pub dropped_comments: usize,
}

impl LoadReport {
    pub(crate) fn skip(&mut self, what: &str, line: usize, why: impl fmt::Display) {
        self.read += 1;
        self.skipped += 1;
        log::warn!("skipping {what} at line {line}: {why}");
    }

    pub(crate) fn keep(&mut self) {
        self.read += 1;
        self.loaded += 1;
    }
}

/// Records plus the bookkeeping of the load that produced them.
#[derive(Debug, Clone)]
pub struct Loaded<T> {
    pub records: Vec<T>,
    pub report: LoadReport,
}
