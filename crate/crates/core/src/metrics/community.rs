use std::collections::BTreeSet;

use crate::ingest::{Issue, ProjectDataset, RepoInfo};
use crate::{Error, Result};

/// COM-1: mean delay to the first non-premature comment, in seconds.
///
/// Issues without such a comment are left out of both sums; `None` when no
/// issue qualifies.
pub fn response_time(issues: &[Issue]) -> Option<f64> {
    let (sum, n) = issues
        .iter()
        .filter_map(Issue::first_response_delay)
        .fold((0i128, 0u64), |(s, n), d| (s + i128::from(d), n + 1));
    (n > 0).then(|| sum as f64 / n as f64)
}

/// COM-2: all issue comments plus all issues.
pub fn comm_frequency(issues: &[Issue]) -> u64 {
    issues
        .iter()
        .map(|i| 1 + i.comments.len() as u64)
        .sum()
}

/// POP-1 (forks + stars + watchers) and STA-3 (forks).
pub fn popularity(repo: &RepoInfo) -> (u64, u64) {
    (repo.forks + repo.stars + repo.watchers, repo.forks)
}

/// STA-1: whole years between inception and `as_of_year`.
pub fn age(repo: &RepoInfo, as_of_year: i32) -> Result<u32> {
    if as_of_year < repo.inception_year {
        return Err(Error::Precondition(format!(
            "as_of_year {as_of_year} precedes inception year {}",
            repo.inception_year
        )));
    }
    Ok((as_of_year - repo.inception_year) as u32)
}

/// STA-8: distinct raw identifiers across commits, PRs, issues and comments.
pub fn community_size(dataset: &ProjectDataset) -> u64 {
    let ids: BTreeSet<&str> = dataset
        .commits
        .iter()
        .map(|c| c.author.as_str())
        .chain(dataset.prs.iter().map(|p| p.author.as_str()))
        .chain(dataset.issues.iter().map(|i| i.author.as_str()))
        .chain(dataset.comments().map(|c| c.author.as_str()))
        .collect();
    ids.len() as u64
}
