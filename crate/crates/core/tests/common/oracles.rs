//! Independent reference implementations and frozen fixture values.

use std::collections::{BTreeMap, BTreeSet};

use sustainq::ingest::{ChangeKind, Commit};
use sustainq::metrics::MetricId;
use sustainq::quality::FileProfile;

/// (metric, expected value) as produced by an independent script when the corpus was generated.
pub fn expected_metrics(name: &str) -> Vec<(MetricId, Option<f64>)> {
    use MetricId::*;
    let v: [Option<f64>; 16] = match name {
        "alpha" => [
            Some(10841.714285714286),
            Some(33.0),
            Some(144.0),
            Some(4.0),
            Some(11.0),
            Some(9.0),
            Some(4.0),
            Some(1.0),
            Some(0.0),
            Some(0.0),
            Some(9.0),
            Some(2.0),
            Some(3.0),
            Some(444573.85714285716),
            Some(2.0),
            Some(47.0),
        ],
        "beta" => [
            Some(1339200.0),
            Some(5.0),
            Some(4.0),
            Some(5.0),
            Some(5.0),
            Some(0.0),
            Some(2.0),
            Some(2.0),
            Some(1.0),
            Some(0.0),
            Some(4.0),
            Some(2.0),
            Some(1.0),
            Some(86400.0),
            Some(2.0),
            Some(18.0),
        ],
        "gamma" => [
            Some(2050.0),
            Some(7.0),
            Some(57.0),
            Some(3.0),
            Some(5.0),
            Some(11.0),
            Some(0.0),
            Some(2.0),
            Some(0.0),
            Some(0.0),
            Some(5.0),
            Some(0.0),
            Some(2.0),
            Some(201600.0),
            Some(3.0),
            Some(12.0),
        ],
        _ => unreachable!(),
    };
    let ids = [Com1, Com2, Pop1, Sta1, Sta2, Sta3, Sta4, Sta5, Sta6, Sta7, Sta8, Sta9, Tec1, Tec2, Tec3, Tec4];
    ids.into_iter().zip(v).collect()
}

/// Authorship and greedy removal written directly from the definitions.
pub fn truck_factor_oracle(commits: &[Commit]) -> Option<u32> {
    let mut first: BTreeMap<String, String> = BTreeMap::new();
    let mut changes: BTreeMap<String, BTreeMap<String, u64>> = BTreeMap::new();
    for c in commits {
        for f in &c.files {
            if f.kind == ChangeKind::Deleted {
                first.remove(&f.path);
                changes.remove(&f.path);
            } else {
                first.entry(f.path.clone()).or_insert_with(|| c.author.0.clone());
                *changes
                    .entry(f.path.clone())
                    .or_default()
                    .entry(c.author.0.clone())
                    .or_default() += 1;
            }
        }
    }
    let mut authors: Vec<BTreeSet<String>> = Vec::new();
    for (path, per) in &changes {
        let total: u64 = per.values().sum();
        let doa: Vec<(String, f64)> = per
            .iter()
            .map(|(who, &n)| {
                let fa = if first[path] == *who { 1.0 } else { 0.0 };
                let d = 3.293 + 1.098 * fa + 0.164 * n as f64 - 0.321 * ((total - n) as f64 + 1.0).ln();
                (who.clone(), d)
            })
            .collect();
        let max = doa.iter().map(|x| x.1).fold(f64::MIN, f64::max);
        let set: BTreeSet<String> = doa
            .into_iter()
            .filter(|(_, d)| *d >= 3.293 && d / max >= 0.75)
            .map(|(w, _)| w)
            .collect();
        if !set.is_empty() {
            authors.push(set);
        }
    }
    if authors.is_empty() {
        return None;
    }
    let mut count: BTreeMap<&String, usize> = BTreeMap::new();
    authors.iter().flatten().for_each(|a| *count.entry(a).or_default() += 1);
    let mut rank: Vec<_> = count.into_iter().collect();
    rank.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(b.0)));
    let mut gone = BTreeSet::new();
    let mut tf = 0;
    for (who, _) in rank {
        let alive = authors.iter().filter(|s| s.iter().any(|a| !gone.contains(a))).count();
        if (alive as f64) < 0.5 * authors.len() as f64 {
            break;
        }
        gone.insert(who.clone());
        tf += 1;
    }
    Some(tf)
}

/// Every pair of positions compared line by line.
pub fn duplication_oracle(files: &[FileProfile], block: usize) -> u64 {
    let lines: Vec<(usize, usize)> = files
        .iter()
        .enumerate()
        .flat_map(|(f, p)| (0..p.normalized_lines.len()).map(move |i| (f, i)))
        .collect();
    let window = |f: usize, i: usize| -> Option<&[String]> { files[f].normalized_lines.get(i..i + block) };
    let mut marked = BTreeSet::new();
    for (a, &(fa, ia)) in lines.iter().enumerate() {
        let Some(wa) = window(fa, ia) else { continue };
        for &(fb, ib) in &lines[a + 1..] {
            if window(fb, ib) == Some(wa) {
                for k in 0..block {
                    marked.insert((fa, ia + k));
                    marked.insert((fb, ib + k));
                }
            }
        }
    }
    marked.len() as u64
}

/// Every window of every admissible length, narrowest first, lowest on ties.
pub fn exhaustive_hdi(samples: &[f64], mass: f64) -> (f64, f64) {
    let mut s = samples.to_vec();
    s.sort_by(f64::total_cmp);
    let n = s.len();
    let mut best: Option<(f64, f64)> = None;
    for i in 0..n {
        for j in i..n {
            if ((j - i + 1) as f64) < mass * n as f64 - 1e-9 {
                continue;
            }
            let better = match best {
                None => true,
                Some((lo, hi)) => s[j] - s[i] < hi - lo,
            };
            if better {
                best = Some((s[i], s[j]));
            }
        }
    }
    best.unwrap()
}

/// Hand-counted quality values of the fixture source trees, in column order
/// SWQ-1, SWQ-2.1 to SWQ-2.7.
pub fn expected_quality(name: &str) -> (Option<f64>, Option<f64>, [u64; 4], Option<f64>, u64) {
    match name {
        "alpha" => (Some(5.0 / 2048.0), Some(55.0), [2, 1, 1, 2], Some(100.0 * 16.0 / 2370.0), 156),
        "beta" => (Some(1.0 / 64.0), Some(0.0), [0, 0, 0, 0], Some(0.0), 5),
        "gamma" => (Some(3.0 / 500.0), Some(40.0), [0, 0, 0, 0], Some(0.0), 9),
        _ => unreachable!(),
    }
}
