use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::ingest::{Commit, PullRequest};
use crate::time::{TimeWindow, Timestamp, YEAR};

/// Sum of strict drops between consecutive counts.
pub fn positive_drops(counts: &[u64]) -> u64 {
    counts
        .windows(2)
        .map(|w| w[0].saturating_sub(w[1]))
        .sum()
}

/// Sum of strict rises between consecutive counts.
pub fn positive_rises(counts: &[u64]) -> u64 {
    counts
        .windows(2)
        .map(|w| w[1].saturating_sub(w[0]))
        .sum()
}

/// STA-2: cumulative decrease of per-window commit counts.
pub fn attrition(commits: &[Commit], window: &TimeWindow) -> u64 {
    positive_drops(&window.histogram(commits.iter().map(|c| c.timestamp)))
}

/// STA-4: cumulative increase of per-window PR submissions.
pub fn growth(prs: &[PullRequest], window: &TimeWindow) -> u64 {
    positive_rises(&window.histogram(prs.iter().map(|p| p.created_at)))
}

/// Trailing window used by the dormancy rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DormancyWindow {
    /// Seconds before `end` that are inspected.
    pub lookback: i64,
    /// Length of each averaging window.
    pub freq: i64,
    /// Dormant iff the average per-window commit count is below this.
    pub threshold: f64,
}

impl DormancyWindow {
    /// Windows tiling `(end - lookback, end]`.
    pub fn tiling(&self, end: Timestamp) -> TimeWindow {
        TimeWindow::with_len(end + 1 - self.lookback, end + 1, self.freq)
            .expect("lookback and freq are positive")
    }

    pub fn average(&self, commits: &[Commit], end: Timestamp) -> f64 {
        let counts = self.tiling(end).histogram(commits.iter().map(|c| c.timestamp));
        counts.iter().sum::<u64>() as f64 / counts.len() as f64
    }
}

/// STA-6: `true` when the project is dormant at `end`.
pub fn dormancy(commits: &[Commit], end: Timestamp, window: &DormancyWindow) -> bool {
    window.average(commits, end) < window.threshold
}

/// Distinct contributors active per year of `[start, end]`.
///
/// The span is cut into `snapshot`-second snapshots; a contributor is active
/// in a snapshot iff they authored a commit in it, and active in every year
/// that snapshot overlaps.
pub fn yearly_active_contributors(
    commits: &[Commit],
    start: Timestamp,
    end: Timestamp,
    snapshot: i64,
) -> Vec<u64> {
    let Some(years) = TimeWindow::covering(start, end, YEAR) else {
        return Vec::new();
    };
    let snapshots = TimeWindow::covering(start, end, snapshot).expect("same span");
    let mut active: Vec<HashSet<&str>> = vec![HashSet::new(); years.count()];
    for c in commits {
        let Some(k) = snapshots.index_of(c.timestamp) else {
            continue;
        };
        let (lo, hi) = snapshots.bounds(k);
        let first = years.index_of(lo).expect("snapshot inside span");
        let last = years.index_of(hi - 1).expect("snapshot inside span");
        for year in &mut active[first..=last] {
            year.insert(c.author.as_str());
        }
    }
    active.iter().map(|s| s.len() as u64).collect()
}

/// STA-7: cumulative year-over-year increase in active contributors.
pub fn retention(commits: &[Commit], start: Timestamp, end: Timestamp, snapshot: i64) -> u64 {
    positive_rises(&yearly_active_contributors(commits, start, end, snapshot))
}

/// STA-9: commit authors whose latest commit is older than `end - lookback`.
pub fn turnover(commits: &[Commit], end: Timestamp, lookback: i64) -> u64 {
    let mut last: BTreeMap<&str, Timestamp> = BTreeMap::new();
    for c in commits.iter().filter(|c| c.timestamp <= end) {
        let t = last.entry(c.author.as_str()).or_insert(c.timestamp);
        *t = (*t).max(c.timestamp);
    }
    let cutoff = end - lookback;
    last.values().filter(|&&t| t < cutoff).count() as u64
}

/// TEC-1: commit authors who never merged a PR.
pub fn non_maintainer_activity(commits: &[Commit], prs: &[PullRequest]) -> u64 {
    let mergers: BTreeSet<&str> = prs
        .iter()
        .filter_map(|p| p.merger.as_ref())
        .map(|m| m.as_str())
        .collect();
    commits
        .iter()
        .map(|c| c.author.as_str())
        .collect::<BTreeSet<_>>()
        .difference(&mergers)
        .count() as u64
}

/// TEC-2: mean seconds from PR creation to merge or close, over resolved PRs.
pub fn pr_efficiency(prs: &[PullRequest]) -> Option<f64> {
    let (sum, n) = prs
        .iter()
        .filter_map(|p| p.resolved_at.map(|r| r - p.created_at))
        .fold((0i128, 0u64), |(s, n), d| (s + i128::from(d), n + 1));
    (n > 0).then(|| sum as f64 / n as f64)
}

fn is_doc(path: &str, doc_extensions: &[String]) -> bool {
    let name = path.rsplit('/').next().unwrap_or(path);
    match name.rsplit_once('.') {
        Some((stem, ext)) if !stem.is_empty() => doc_extensions
            .iter()
            .any(|d| d.trim_start_matches('.').eq_ignore_ascii_case(ext)),
        _ => false,
    }
}

/// TEC-3 and TEC-4: commits touching a documentation file, and commits
/// touching only non-documentation files. File-less commits count in neither.
pub fn commit_split(commits: &[Commit], doc_extensions: &[String]) -> (u64, u64) {
    let mut docs = 0;
    let mut code = 0;
    for c in commits.iter().filter(|c| !c.files.is_empty()) {
        if c.files.iter().any(|f| is_doc(&f.path, doc_extensions)) {
            docs += 1;
        } else {
            code += 1;
        }
    }
    (docs, code)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::{ChangeKind, ContributorId, FileChange};
    use crate::time::{DAY, MONTH, WEEK};

    fn commit(author: &str, t: Timestamp, files: &[&str]) -> Commit {
        Commit {
            sha: format!("{author}-{t}"),
            author: ContributorId::new(author),
            timestamp: t,
            files: files
                .iter()
                .map(|p| FileChange::new(*p, ChangeKind::Modified))
                .collect(),
        }
    }

    fn pr(created: Timestamp, resolved: Option<Timestamp>, merger: Option<&str>) -> PullRequest {
        PullRequest {
            id: created.to_string(),
            author: ContributorId::new("dev"),
            created_at: created,
            resolved_at: resolved,
            merged: merger.is_some(),
            merger: merger.map(ContributorId::new),
        }
    }

    #[test]
    fn drops_and_rises() {
        assert_eq!(positive_drops(&[10, 7, 8, 5]), 6);
        assert_eq!(positive_drops(&[1, 2, 3]), 0);
        assert_eq!(positive_drops(&[4]), 0);
        assert_eq!(positive_rises(&[2, 5, 4, 6]), 5);
        assert_eq!(positive_rises(&[6, 4, 1]), 0);
        assert_eq!(positive_rises(&[2, 3, 3, 5]), 3);
    }

    #[test]
    fn attrition_over_windows() {
        let w = TimeWindow::with_len(0, 40, 10).unwrap();
        let mut commits = Vec::new();
        for (k, n) in [10, 7, 8, 5].into_iter().enumerate() {
            for i in 0..n {
                commits.push(commit("a", k as i64 * 10 + (i % 10) as i64, &[]));
            }
        }
        assert_eq!(attrition(&commits, &w), 6);
    }

    #[test]
    fn growth_over_windows() {
        let w = TimeWindow::with_len(0, 40, 10).unwrap();
        let mut prs = Vec::new();
        for (k, n) in [2, 5, 4, 6].into_iter().enumerate() {
            for i in 0..n {
                prs.push(pr(k as i64 * 10 + i, None, None));
            }
        }
        assert_eq!(growth(&prs, &w), 5);
    }

    fn dormancy_window() -> DormancyWindow {
        DormancyWindow {
            lookback: 12 * MONTH,
            freq: 4 * WEEK,
            threshold: 1.0,
        }
    }

    #[test]
    fn dormancy_thresholds() {
        let w = dormancy_window();
        let end = 100 * YEAR;
        assert_eq!(w.tiling(end).count(), 13);
        let old = vec![commit("a", end - 2 * YEAR, &[])];
        assert!(dormancy(&old, end, &w));

        let step = 12 * MONTH / 24;
        let even: Vec<_> = (0..24).map(|k| commit("a", end - k * step, &[])).collect();
        assert!((w.average(&even, end) - 24.0 / 13.0).abs() < 1e-12);
        assert!(!dormancy(&even, end, &w));

        let exact: Vec<_> = (0..13).map(|k| commit("a", end - k * 4 * WEEK, &[])).collect();
        assert_eq!(w.average(&exact, end), 1.0);
        assert!(!dormancy(&exact, end, &w));
    }

    #[test]
    fn retention_counts_yearly_increases() {
        // Yearly active sets of size 2, 3, 3, 5.
        let mut commits = Vec::new();
        let sizes = [2, 3, 3, 5];
        for (y, n) in sizes.iter().enumerate() {
            for k in 0..*n {
                commits.push(commit(&format!("dev{k}"), y as i64 * YEAR + 180 * DAY, &[]));
            }
        }
        let end = 3 * YEAR + 200 * DAY;
        assert_eq!(yearly_active_contributors(&commits, 0, end, 90 * DAY), vec![2, 3, 3, 5]);
        assert_eq!(retention(&commits, 0, end, 90 * DAY), 3);
    }

    #[test]
    fn straddling_snapshot_counts_in_both_years() {
        // Snapshot [360d, 450d) overlaps year 0 and year 1.
        let commits = vec![commit("a", 10 * DAY, &[]), commit("b", 370 * DAY, &[])];
        let end = 400 * DAY;
        assert_eq!(yearly_active_contributors(&commits, 0, end, 90 * DAY), vec![2, 1]);
        assert_eq!(retention(&commits, 0, end, 90 * DAY), 0);
    }

    #[test]
    fn retention_needs_two_years() {
        let commits = vec![commit("a", 0, &[]), commit("b", 100 * DAY, &[])];
        assert_eq!(retention(&commits, 0, 100 * DAY, 90 * DAY), 0);
    }

    #[test]
    fn turnover_counts_inactive_authors() {
        let end = 10 * YEAR;
        let commits = vec![
            commit("recent", end - 30 * DAY, &[]),
            commit("gone", end - 200 * DAY, &[]),
        ];
        assert_eq!(turnover(&commits, end, 6 * MONTH), 1);
        assert_eq!(turnover(&commits[..1], end, 6 * MONTH), 0);
    }

    #[test]
    fn non_maintainers() {
        let commits = vec![commit("a", 1, &[]), commit("b", 2, &[]), commit("c", 3, &[])];
        assert_eq!(non_maintainer_activity(&commits, &[pr(1, Some(2), Some("b"))]), 2);
        assert_eq!(non_maintainer_activity(&commits, &[]), 3);
    }

    #[test]
    fn efficiency_means_resolved_prs() {
        let prs = [pr(0, Some(DAY), None), pr(10, Some(10 + 3 * DAY), Some("m")), pr(5, None, None)];
        assert_eq!(pr_efficiency(&prs), Some(172_800.0));
        assert_eq!(pr_efficiency(&[pr(7, Some(7), None)]), Some(0.0));
        assert_eq!(pr_efficiency(&prs[2..]), None);
    }

    #[test]
    fn doc_and_code_split() {
        let exts = vec!["txt".to_string(), "md".to_string()];
        assert_eq!(commit_split(&[commit("a", 1, &["README.md"])], &exts), (1, 0));
        assert_eq!(commit_split(&[commit("a", 1, &["main.c", "README.md"])], &exts), (1, 0));
        assert_eq!(commit_split(&[commit("a", 1, &["src/main.c"])], &exts), (0, 1));
        assert_eq!(commit_split(&[commit("a", 1, &[])], &exts), (0, 0));
        assert_eq!(commit_split(&[commit("a", 1, &["NOTES.TXT"])], &exts), (1, 0));
        assert_eq!(commit_split(&[commit("a", 1, &["docs/.md"])], &exts), (0, 1));
    }
}
