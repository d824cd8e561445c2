//! Truck factor via degree-of-authorship (DOA).
//!
//! DOA(d, f) = 3.293 + 1.098 * FA + 0.164 * DL - 0.321 * ln(1 + AC), where FA
//! marks the file's first author, DL counts d's changes to f and AC counts
//! everyone else's. Authors of a file are the contributors whose DOA is at
//! least 75% of the file's maximum and at least 3.293 in absolute terms.
//! Top authors are then removed greedily until fewer than half of the
//! authored files keep an author.

use std::collections::{BTreeMap, BTreeSet};

use crate::ingest::{ChangeKind, Commit, ContributorId};

pub const DOA_NORMALIZED_MIN: f64 = 0.75;
pub const DOA_ABSOLUTE_MIN: f64 = 3.293;
const COVERAGE_LIMIT: f64 = 0.5;

pub fn degree_of_authorship(first_author: bool, own_changes: u64, other_changes: u64) -> f64 {
    3.293 + 1.098 * f64::from(u8::from(first_author)) + 0.164 * own_changes as f64
        - 0.321 * (1.0 + other_changes as f64).ln()
}

#[derive(Debug, Default)]
struct FileHistory {
    first_author: Option<ContributorId>,
    changes: BTreeMap<ContributorId, u64>,
}

/// Authors of every live file, keyed by path. Files without any author are
/// omitted.
pub type FileAuthorship = BTreeMap<String, BTreeSet<ContributorId>>;

/// Replay `commits` and derive per-file authors.
///
/// A file's history starts at the first change that touches it and is reset
/// when the file is deleted; files deleted at the end are not live.
pub fn authorship(commits: &[Commit]) -> FileAuthorship {
    let mut files: BTreeMap<&str, FileHistory> = BTreeMap::new();
    for c in commits {
        for change in &c.files {
            if change.kind == ChangeKind::Deleted {
                files.remove(change.path.as_str());
                continue;
            }
            let h = files.entry(change.path.as_str()).or_default();
            h.first_author.get_or_insert_with(|| c.author.clone());
            *h.changes.entry(c.author.clone()).or_insert(0) += 1;
        }
    }

    let mut out = FileAuthorship::new();
    for (path, h) in files {
        let total: u64 = h.changes.values().sum();
        let doa: Vec<(&ContributorId, f64)> = h
            .changes
            .iter()
            .map(|(who, &own)| {
                let first = h.first_author.as_ref() == Some(who);
                (who, degree_of_authorship(first, own, total - own))
            })
            .collect();
        let max = doa.iter().map(|(_, d)| *d).fold(f64::NEG_INFINITY, f64::max);
        let authors: BTreeSet<ContributorId> = doa
            .into_iter()
            .filter(|&(_, d)| d >= DOA_ABSOLUTE_MIN && d / max >= DOA_NORMALIZED_MIN)
            .map(|(who, _)| who.clone())
            .collect();
        if !authors.is_empty() {
            out.insert(path.to_owned(), authors);
        }
    }
    out
}

/// Fraction of authored files that keep an author once `removed` leave.
pub fn coverage(authorship: &FileAuthorship, removed: &BTreeSet<ContributorId>) -> f64 {
    if authorship.is_empty() {
        return 0.0;
    }
    let covered = authorship
        .values()
        .filter(|authors| authors.iter().any(|a| !removed.contains(a)))
        .count();
    covered as f64 / authorship.len() as f64
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruckFactor {
    pub value: u32,
    /// Authors in removal order; `value` of them were removed.
    pub ranking: Vec<ContributorId>,
    pub authorship: FileAuthorship,
}

impl TruckFactor {
    pub fn removed(&self) -> &[ContributorId] {
        &self.ranking[..self.value as usize]
    }
}

/// STA-5. `None` when no file has an author.
pub fn truck_factor(commits: &[Commit]) -> Option<TruckFactor> {
    let authorship = authorship(commits);
    if authorship.is_empty() {
        return None;
    }
    let mut authored: BTreeMap<&ContributorId, u64> = BTreeMap::new();
    for authors in authorship.values() {
        for a in authors {
            *authored.entry(a).or_insert(0) += 1;
        }
    }
    let mut ranking: Vec<(&ContributorId, u64)> = authored.into_iter().collect();
    ranking.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    let ranking: Vec<ContributorId> = ranking.into_iter().map(|(c, _)| c.clone()).collect();

    let mut removed = BTreeSet::new();
    let mut value = 0u32;
    for who in &ranking {
        if coverage(&authorship, &removed) < COVERAGE_LIMIT {
            break;
        }
        removed.insert(who.clone());
        value += 1;
    }
    Some(TruckFactor {
        value,
        ranking,
        authorship,
    })
}
