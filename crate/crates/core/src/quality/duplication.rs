//! Duplicated-line detection over normalised code lines.
//!
//! A line is duplicated iff it lies in a run of at least `block` consecutive
//! lines of one file whose content occurs at two or more positions anywhere
//! in the tree. Any such run contains a repeated window of exactly `block`
//! lines, so hashing every `block`-line window is sufficient.

use std::collections::HashMap;

use super::scan::FileProfile;

/// (duplicated lines, total normalised lines).
pub fn duplicated_lines(files: &[FileProfile], block: usize) -> (u64, u64) {
    let total: u64 = files.iter().map(|f| f.normalized_lines.len() as u64).sum();
    if block == 0 {
        return (0, total);
    }
    let mut seen: HashMap<&[String], u32> = HashMap::new();
    for f in files {
        for w in f.normalized_lines.windows(block) {
            *seen.entry(w).or_insert(0) += 1;
        }
    }
    let mut dup = 0u64;
    for f in files {
        let n = f.normalized_lines.len();
        let mut marked = vec![false; n];
        for (start, w) in f.normalized_lines.windows(block).enumerate() {
            if seen[w] >= 2 {
                marked[start..start + block].iter_mut().for_each(|m| *m = true);
            }
        }
        dup += marked.iter().filter(|&&m| m).count() as u64;
    }
    (dup, total)
}

/// Percentage of duplicated lines; `None` when the tree has no code lines.
pub fn duplication_pct(files: &[FileProfile], block: usize) -> Option<f64> {
    let (dup, total) = duplicated_lines(files, block);
    (total > 0).then(|| 100.0 * dup as f64 / total as f64)
}
