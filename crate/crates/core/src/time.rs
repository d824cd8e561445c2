//! Calendar-agnostic time arithmetic and window tiling.
//!
//! All timestamps are UTC seconds. Weeks, months and years are fixed-length
//! so that windowing never depends on a calendar or time zone.

use serde::{Deserialize, Serialize};

/// UTC seconds since the epoch.
pub type Timestamp = i64;

pub const DAY: i64 = 86_400;
pub const WEEK: i64 = 7 * DAY;
pub const MONTH: i64 = 30 * DAY;
pub const YEAR: i64 = 365 * DAY;

/// A tiling of `[init, end)` into consecutive windows of `len` seconds.
///
/// The last window is truncated at `end` when the span is not a multiple of
/// the window length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimeWindow {
    pub init: Timestamp,
    pub end: Timestamp,
    pub len: i64,
}

impl TimeWindow {
    /// Windows of `freq_weeks` weeks over `[init, end)`.
    pub fn weekly(init: Timestamp, end: Timestamp, freq_weeks: u32) -> Option<Self> {
        if freq_weeks == 0 {
            return None;
        }
        Self::with_len(init, end, i64::from(freq_weeks) * WEEK)
    }

    pub fn with_len(init: Timestamp, end: Timestamp, len: i64) -> Option<Self> {
        (init < end && len > 0).then_some(TimeWindow { init, end, len })
    }

    /// Windows covering the closed activity span `[first, last]`.
    pub fn covering(first: Timestamp, last: Timestamp, len: i64) -> Option<Self> {
        Self::with_len(first, last + 1, len)
    }

    pub fn count(&self) -> usize {
        ((self.end - self.init + self.len - 1) / self.len) as usize
    }

    /// Half-open bounds of window `k`.
    pub fn bounds(&self, k: usize) -> (Timestamp, Timestamp) {
        let lo = self.init + k as i64 * self.len;
        (lo, (lo + self.len).min(self.end))
    }

    pub fn iter(&self) -> impl Iterator<Item = (Timestamp, Timestamp)> + '_ {
        (0..self.count()).map(move |k| self.bounds(k))
    }

    /// Index of the window containing `t`, if any.
    pub fn index_of(&self, t: Timestamp) -> Option<usize> {
        (t >= self.init && t < self.end).then(|| ((t - self.init) / self.len) as usize)
    }

    /// Number of timestamps falling in each window; out-of-range ones are ignored.
    pub fn histogram(&self, stamps: impl IntoIterator<Item = Timestamp>) -> Vec<u64> {
        let mut counts = vec![0u64; self.count()];
        for t in stamps {
            if let Some(k) = self.index_of(t) {
                counts[k] += 1;
            }
        }
        counts
    }
}
