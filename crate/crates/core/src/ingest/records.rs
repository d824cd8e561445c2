//! Line-delimited JSON loaders for the per-project export files.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use serde::Deserialize;

use super::{
    ChangeKind, Comment, Commit, ContributorId, FileChange, Issue, LoadReport, Loaded,
    PullRequest, RepoInfo, TrackerSource,
};
use crate::time::Timestamp;
use crate::{Error, Result};

/// Timestamps may be given as epoch seconds or as RFC 3339 text.
#[derive(Deserialize)]
#[serde(untagged)]
enum Stamp {
    Secs(i64),
    Text(String),
}

impl Stamp {
    fn resolve(self) -> std::result::Result<Timestamp, String> {
        let t = match self {
            Stamp::Secs(t) => t,
            Stamp::Text(s) => chrono::DateTime::parse_from_rfc3339(s.trim())
                .map_err(|e| format!("bad timestamp `{s}`: {e}"))?
                .timestamp(),
        };
        if t > 0 {
            Ok(t)
        } else {
            Err(format!("non-positive timestamp {t}"))
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Id {
    Num(i64),
    Text(String),
}

impl Id {
    fn into_string(self) -> String {
        match self {
            Id::Num(n) => n.to_string(),
            Id::Text(s) => s,
        }
    }
}

#[derive(Deserialize)]
struct RawFile {
    path: String,
    kind: ChangeKind,
}

#[derive(Deserialize)]
struct RawCommit {
    sha: Option<String>,
    author: Option<String>,
    timestamp: Option<Stamp>,
    #[serde(default)]
    files: Vec<RawFile>,
}

#[derive(Deserialize)]
struct RawComment {
    author: Option<String>,
    created_at: Option<Stamp>,
}

#[derive(Deserialize)]
struct RawIssue {
    id: Option<Id>,
    created_at: Option<Stamp>,
    #[serde(default)]
    labels: Vec<String>,
    author: Option<String>,
    source: Option<String>,
    #[serde(default)]
    comments: Vec<RawComment>,
}

#[derive(Deserialize)]
struct RawPr {
    id: Option<Id>,
    author: Option<String>,
    created_at: Option<Stamp>,
    resolved_at: Option<Stamp>,
    #[serde(default)]
    merged: bool,
    merger: Option<String>,
}

fn open(path: &Path) -> Result<BufReader<File>> {
    match File::open(path) {
        Ok(f) => Ok(BufReader::new(f)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            Err(Error::MissingFile(path.to_path_buf()))
        }
        Err(e) => Err(Error::io(path, e)),
    }
}

/// Drive `convert` over every non-blank line, tallying skips.
fn load_lines<R, T>(
    path: &Path,
    what: &'static str,
    mut convert: impl FnMut(R, &mut LoadReport) -> std::result::Result<Option<T>, String>,
) -> Result<Loaded<T>>
where
    R: for<'de> Deserialize<'de>,
{
    let reader = open(path)?;
    let mut report = LoadReport::default();
    let mut records = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let outcome = serde_json::from_str::<R>(&line)
            .map_err(|e| e.to_string())
            .and_then(|raw| convert(raw, &mut report));
        match outcome {
            Ok(Some(rec)) => {
                report.keep();
                records.push(rec);
            }
            Ok(None) => report.skip(what, idx + 1, "rejected"),
            Err(why) => report.skip(what, idx + 1, why),
        }
    }
    Ok(Loaded { records, report })
}

fn required<T>(v: Option<T>, field: &str) -> std::result::Result<T, String> {
    v.ok_or_else(|| format!("missing {field}"))
}

/// Load `commits.jsonl`. Duplicate shas after the first are skipped.
pub fn load_commits(path: &Path) -> Result<Loaded<Commit>> {
    let mut seen = HashSet::new();
    let mut loaded = load_lines(path, "commit", |raw: RawCommit, _| {
        let sha = required(raw.sha, "sha")?;
        if sha.is_empty() {
            return Err("empty sha".into());
        }
        if !seen.insert(sha.clone()) {
            return Err(format!("duplicate sha {sha}"));
        }
        Ok(Some(Commit {
            sha,
            author: ContributorId::new(required(raw.author, "author")?),
            timestamp: required(raw.timestamp, "timestamp")?.resolve()?,
            files: raw
                .files
                .into_iter()
                .map(|f| FileChange::new(f.path, f.kind))
                .collect(),
        }))
    })?;
    loaded.records.sort_by_key(|c| c.timestamp);
    Ok(loaded)
}

/// Load an issue export. `source` is the default for records without a
/// `source` field; an unrecognised tag anywhere is a hard error.
pub fn load_tracker_data(path: &Path, source: TrackerSource) -> Result<Loaded<Issue>> {
    let mut bad_source = None;
    let mut loaded = load_lines(path, "issue", |raw: RawIssue, report| {
        let source = match raw.source.as_deref() {
            None => source,
            Some(tag) => match tag.parse() {
                Ok(s) => s,
                Err(e) => {
                    bad_source.get_or_insert(e);
                    return Err(format!("unknown source `{tag}`"));
                }
            },
        };
        let created_at = required(raw.created_at, "created_at")?.resolve()?;
        let mut comments = Vec::with_capacity(raw.comments.len());
        for c in raw.comments {
            match (c.author, c.created_at.map(Stamp::resolve)) {
                (Some(author), Some(Ok(t))) => comments.push(Comment {
                    author: ContributorId::new(author),
                    timestamp: t,
                }),
                _ => report.dropped_comments += 1,
            }
        }
        comments.sort_by_key(|c| c.timestamp);
        let mut labels: Vec<String> = raw.labels.iter().map(|l| l.to_lowercase()).collect();
        labels.dedup();
        Ok(Some(Issue {
            id: required(raw.id, "id")?.into_string(),
            created_at,
            labels,
            author: ContributorId::new(required(raw.author, "author")?),
            source,
            comments,
        }))
    })?;
    if let Some(e) = bad_source {
        return Err(e);
    }
    loaded.records.sort_by_key(|i| i.created_at);
    Ok(loaded)
}

/// Load `prs.jsonl`.
///
/// A resolution time before creation is nulled, a merged PR without a merger
/// gets the [`ContributorId::UNKNOWN`] sentinel, and a merger on an unmerged
/// PR is dropped. Each such fix counts as a repair, not a skip.
pub fn load_prs(path: &Path) -> Result<Loaded<PullRequest>> {
    let mut loaded = load_lines(path, "pull request", |raw: RawPr, report| {
        let created_at = required(raw.created_at, "created_at")?.resolve()?;
        let mut repaired = false;
        let resolved_at = match raw.resolved_at.map(Stamp::resolve).transpose()? {
            Some(t) if t < created_at => {
                repaired = true;
                None
            }
            other => other,
        };
        let merger = match (raw.merged, raw.merger) {
            (true, Some(m)) => Some(ContributorId::new(m)),
            (true, None) => {
                repaired = true;
                Some(ContributorId::unknown())
            }
            (false, Some(_)) => {
                repaired = true;
                None
            }
            (false, None) => None,
        };
        if repaired {
            report.repaired += 1;
        }
        Ok(Some(PullRequest {
            id: required(raw.id, "id")?.into_string(),
            author: ContributorId::new(required(raw.author, "author")?),
            created_at,
            resolved_at,
            merged: raw.merged,
            merger,
        }))
    })?;
    loaded.records.sort_by_key(|p| p.created_at);
    Ok(loaded)
}

pub fn load_repo(path: &Path) -> Result<RepoInfo> {
    let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::MissingFile(path.to_path_buf()),
        _ => Error::io(path, e),
    })?;
    let repo: RepoInfo = serde_json::from_str(&text).map_err(|e| Error::Malformed {
        what: "repository info",
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    if !(repo.size_kb > 0.0) {
        return Err(Error::Malformed {
            what: "repository info",
            path: path.to_path_buf(),
            message: format!("size_kb must be positive, got {}", repo.size_kb),
        });
    }
    Ok(repo)
}
