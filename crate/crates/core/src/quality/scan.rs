use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

use super::functions::{find_functions, FunctionSpan};
use super::lexer::lex;
use super::rules::{LanguageRules, RuleSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileProfile {
    /// Relative to the scanned root, `/`-separated.
    pub path: String,
    pub language: String,
    /// Non-blank, non-comment lines.
    pub sloc: u64,
    pub functions: Vec<FunctionSpan>,
    /// Trimmed, whitespace-collapsed code lines in file order.
    pub normalized_lines: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub recognized: usize,
    pub unrecognized: usize,
    pub unreadable: usize,
}

pub fn profile_source(path: &str, text: &str, rules: &LanguageRules) -> FileProfile {
    let lexed = lex(text, rules);
    let functions = find_functions(&lexed, rules, path);
    let normalized_lines: Vec<String> = lexed
        .lines
        .into_iter()
        .filter(|l| l.has_code())
        .map(|l| l.code)
        .collect();
    FileProfile {
        path: path.to_owned(),
        language: rules.name.clone(),
        sloc: normalized_lines.len() as u64,
        functions,
        normalized_lines,
    }
}

/// Profile every recognised source file under `root`, sorted by path.
///
/// Hidden directories (such as `.git`) are not entered. A missing root yields
/// no profiles.
pub fn scan_tree(root: &Path, rules: &RuleSet) -> (Vec<FileProfile>, ScanReport) {
    let mut report = ScanReport::default();
    let mut candidates = Vec::new();
    let walker = WalkDir::new(root)
        .sort_by_file_name()
        .into_iter()
        .filter_entry(|e| e.depth() == 0 || !e.file_name().to_string_lossy().starts_with('.'));
    for entry in walker {
        let entry = match entry {
            Ok(e) => e,
            Err(e) => {
                if e.depth() > 0 {
                    log::warn!("unreadable entry under {}: {e}", root.display());
                    report.unreadable += 1;
                }
                continue;
            }
        };
        if !entry.file_type().is_file() {
            continue;
        }
        match rules.for_path(entry.path()) {
            Some(lang) => candidates.push((entry.into_path(), lang)),
            None => report.unrecognized += 1,
        }
    }

    let results: Vec<Option<FileProfile>> = candidates
        .par_iter()
        .map(|(path, lang)| {
            let bytes = match std::fs::read(path) {
                Ok(b) => b,
                Err(e) => {
                    log::warn!("skipping unreadable {}: {e}", path.display());
                    return None;
                }
            };
            let text = String::from_utf8_lossy(&bytes);
            let rel = path
                .strip_prefix(root)
                .unwrap_or(path)
                .components()
                .map(|c| c.as_os_str().to_string_lossy())
                .collect::<Vec<_>>()
                .join("/");
            Some(profile_source(&rel, &text, lang))
        })
        .collect();

    let mut profiles = Vec::with_capacity(results.len());
    for r in results {
        match r {
            Some(p) => {
                report.recognized += 1;
                profiles.push(p);
            }
            None => report.unreadable += 1,
        }
    }
    profiles.sort_by(|a, b| a.path.cmp(&b.path));
    (profiles, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    #[test]
    fn empty_directory() {
        let dir = tempfile::tempdir().unwrap();
        let (files, report) = scan_tree(dir.path(), &RuleSet::builtin());
        assert!(files.is_empty());
        assert_eq!(report, ScanReport::default());
    }

    #[test]
    fn sloc_excludes_comments_and_blanks() {
        let dir = tempfile::tempdir().unwrap();
        fs::create_dir_all(dir.path().join("src")).unwrap();
        fs::write(
            dir.path().join("src/a.c"),
            "// header\nint a;\n\n/* note */\nint b;\nint c;\n",
        )
        .unwrap();
        fs::write(dir.path().join("notes.txt"), "hello\n").unwrap();
        fs::create_dir_all(dir.path().join(".git")).unwrap();
        fs::write(dir.path().join(".git/x.c"), "int z;\n").unwrap();
        let (files, report) = scan_tree(dir.path(), &RuleSet::builtin());
        assert_eq!(files.len(), 1);
        assert_eq!(files[0].path, "src/a.c");
        assert_eq!(files[0].sloc, 3);
        assert_eq!(report.unrecognized, 1);
    }
}
