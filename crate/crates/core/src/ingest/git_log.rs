use std::collections::HashSet;
use std::io::BufRead;

use super::{ChangeKind, Commit, ContributorId, FileChange, LoadReport, Loaded};

/// `git log` arguments producing the history dump this parser reads:
///
/// ```text
/// git log --name-status --format='commit %H%nauthor %an <%ae>%ndate %at'
/// ```
pub const GIT_LOG_FORMAT: &str = "commit %H%nauthor %an <%ae>%ndate %at";

#[derive(Default)]
struct Entry {
    line: usize,
    sha: String,
    author: Option<String>,
    date: Option<i64>,
    files: Vec<FileChange>,
    error: Option<String>,
}

impl Entry {
    fn fail(&mut self, why: String) {
        self.error.get_or_insert(why);
    }

    fn status_line(&mut self, line: &str) {
        let mut parts = line.split('\t');
        let status = parts.next().unwrap_or_default();
        let paths: Vec<&str> = parts.collect();
        let code = status.chars().next();
        match (code, paths.as_slice()) {
            (Some('A'), [p]) => self.files.push(FileChange::new(*p, ChangeKind::Added)),
            (Some('M' | 'T'), [p]) => self.files.push(FileChange::new(*p, ChangeKind::Modified)),
            (Some('D'), [p]) => self.files.push(FileChange::new(*p, ChangeKind::Deleted)),
            (Some('R'), [from, to]) => {
                self.files.push(FileChange::new(*from, ChangeKind::Deleted));
                self.files.push(FileChange::new(*to, ChangeKind::Added));
            }
            (Some('C'), [_, to]) => self.files.push(FileChange::new(*to, ChangeKind::Added)),
            _ => self.fail(format!("bad name-status line `{line}`")),
        }
    }
}

/// Parse a history dump produced with [`GIT_LOG_FORMAT`] and `--name-status`.
///
/// Output is ascending by author timestamp; entries with equal timestamps keep
/// their input order. Malformed entries and duplicate shas are skipped and
/// counted in the report.
pub fn parse_git_log(raw: impl BufRead) -> Loaded<Commit> {
    let mut report = LoadReport::default();
    let mut commits = Vec::new();
    let mut seen = HashSet::new();
    let mut current: Option<Entry> = None;
    let mut stray = false;

    let mut finish = |entry: Entry, report: &mut LoadReport, commits: &mut Vec<Commit>| {
        let result = match (&entry.error, &entry.author, entry.date) {
            (Some(e), _, _) => Err(e.clone()),
            (_, None, _) => Err("missing author".into()),
            (_, _, None) => Err("missing date".into()),
            _ if entry.sha.is_empty() => Err("empty sha".into()),
            _ if seen.contains(&entry.sha) => Err(format!("duplicate sha {}", entry.sha)),
            (None, Some(author), Some(date)) => Ok(Commit {
                sha: entry.sha.clone(),
                author: ContributorId::new(author.clone()),
                timestamp: date,
                files: entry.files,
            }),
        };
        match result {
            Ok(c) => {
                seen.insert(c.sha.clone());
                report.keep();
                commits.push(c);
            }
            Err(why) => report.skip("commit", entry.line, why),
        }
    };

    for (idx, line) in raw.lines().enumerate() {
        let lineno = idx + 1;
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                if let Some(entry) = current.as_mut() {
                    entry.fail(format!("unreadable line: {e}"));
                }
                continue;
            }
        };
        let line = line.trim_end_matches('\r');
        if let Some(sha) = line.strip_prefix("commit ") {
            if let Some(done) = current.take() {
                finish(done, &mut report, &mut commits);
            }
            current = Some(Entry {
                line: lineno,
                sha: sha.trim().to_owned(),
                ..Entry::default()
            });
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let Some(entry) = current.as_mut() else {
            if !stray {
                report.skip("commit", lineno, "text before first commit header");
                stray = true;
            }
            continue;
        };
        if let Some(author) = line.strip_prefix("author ") {
            entry.author = Some(author.trim().to_owned());
        } else if let Some(date) = line.strip_prefix("date ") {
            match date.trim().parse::<i64>() {
                Ok(t) if t > 0 => entry.date = Some(t),
                _ => entry.fail(format!("bad date `{date}`")),
            }
        } else {
            entry.status_line(line);
        }
    }
    if let Some(done) = current.take() {
        finish(done, &mut report, &mut commits);
    }

    commits.sort_by_key(|c| c.timestamp);
    Loaded {
        records: commits,
        report,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Loaded<Commit> {
        parse_git_log(s.as_bytes())
    }

    #[test]
    fn empty_stream_is_empty() {
        let out = parse("");
        assert!(out.records.is_empty());
        assert_eq!(out.report, LoadReport::default());
    }

    #[test]
    fn sorts_ascending() {
        let raw = "commit bbb\nauthor B <b@x>\ndate 2000\n\nM\ta.c\n\n\
                   commit aaa\nauthor A <a@x>\ndate 1000\n\nA\tb.c\n";
        let out = parse(raw);
        let shas: Vec<_> = out.records.iter().map(|c| c.sha.as_str()).collect();
        assert_eq!(shas, ["aaa", "bbb"]);
        assert_eq!(out.records[0].author.as_str(), "A <a@x>");
    }

    #[test]
    fn renames_split_into_delete_and_add() {
        let out = parse("commit r\nauthor A <a@x>\ndate 5\n\nR090\told.c\tnew.c\n");
        assert_eq!(
            out.records[0].files,
            vec![
                FileChange::new("old.c", ChangeKind::Deleted),
                FileChange::new("new.c", ChangeKind::Added)
            ]
        );
    }

    #[test]
    fn malformed_entries_are_counted() {
        let raw = "commit a\nauthor A <a@x>\ndate nope\n\n\
                   commit b\ndate 10\n\n\
                   commit c\nauthor C <c@x>\ndate 11\n\nX\tweird\n\n\
                   commit d\nauthor D <d@x>\ndate 12\n\n\
                   commit d\nauthor D <d@x>\ndate 13\n";
        let out = parse(raw);
        assert_eq!(out.records.len(), 1);
        assert_eq!(out.report.read, 5);
        assert_eq!(out.report.skipped, 4);
        assert_eq!(out.report.read - out.report.loaded, out.report.skipped);
    }

    #[test]
    fn merge_commit_without_files_is_kept() {
        let out = parse("commit m\nauthor A <a@x>\ndate 5\n");
        assert_eq!(out.records.len(), 1);
        assert!(out.records[0].files.is_empty());
    }
}
