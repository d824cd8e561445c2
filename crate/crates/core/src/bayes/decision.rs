use serde::{Deserialize, Serialize};

use super::hdi::Hdi;
use crate::metrics::MetricId;
use crate::quality::QualityId;

/// Sustainability metrics for which a decrease, rather than an increase, is
/// the natural reading of the reported effect.
pub const FLIP_SET: [MetricId; 4] = [MetricId::Sta2, MetricId::Sta5, MetricId::Sta9, MetricId::Tec2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    NoEvidence,
    Increase,
    Decrease,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::NoEvidence => "no_evidence",
            Direction::Increase => "increase",
            Direction::Decrease => "decrease",
        }
    }

    pub fn from_hdi(hdi: &Hdi) -> Self {
        if hdi.contains(0.0) {
            Direction::NoEvidence
        } else if hdi.low > 0.0 {
            Direction::Increase
        } else {
            Direction::Decrease
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QualityImpact {
    None,
    Improves,
    Degrades,
}

impl QualityImpact {
    pub fn as_str(self) -> &'static str {
        match self {
            QualityImpact::None => "none",
            QualityImpact::Improves => "improves",
            QualityImpact::Degrades => "degrades",
        }
    }

    pub fn inverted(self) -> Self {
        match self {
            QualityImpact::None => QualityImpact::None,
            QualityImpact::Improves => QualityImpact::Degrades,
            QualityImpact::Degrades => QualityImpact::Improves,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImpactDecision {
    pub hdi: Hdi,
    pub direction: Direction,
    pub quality_impact: QualityImpact,
    pub quality_higher_is_better: bool,
    pub in_flip_set: bool,
}

impl ImpactDecision {
    /// The impact as displayed: inverted for flip-set metrics when `flip` is on.
    pub fn displayed_impact(&self, flip: bool) -> QualityImpact {
        if flip && self.in_flip_set {
            self.quality_impact.inverted()
        } else {
            self.quality_impact
        }
    }
}

/// Apply the HDI decision rule and the quality polarity table.
pub fn decide_impact(hdi: Hdi, predictor: MetricId, quality: QualityId) -> ImpactDecision {
    let direction = Direction::from_hdi(&hdi);
    let higher_is_better = quality.higher_is_better();
    let quality_impact = match (direction, higher_is_better) {
        (Direction::NoEvidence, _) => QualityImpact::None,
        (Direction::Increase, true) | (Direction::Decrease, false) => QualityImpact::Improves,
        (Direction::Increase, false) | (Direction::Decrease, true) => QualityImpact::Degrades,
    };
    ImpactDecision {
        hdi,
        direction,
        quality_impact,
        quality_higher_is_better: higher_is_better,
        in_flip_set: FLIP_SET.contains(&predictor),
    }
}

/// Percent change in the outcome per one-standard-deviation predictor increase.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianEffect {
    pub low_pct: f64,
    pub high_pct: f64,
    /// One standard deviation of the predictor, in its native units.
    pub predictor_sd: f64,
}

pub fn effect_gaussian(hdi: &Hdi, predictor_sd: f64) -> GaussianEffect {
    GaussianEffect {
        low_pct: hdi.low.exp_m1() * 100.0,
        high_pct: hdi.high.exp_m1() * 100.0,
        predictor_sd,
    }
}

/// Outcome-unit change per 10% predictor increase.
pub fn effect_poisson(hdi: &Hdi) -> (f64, f64) {
    (hdi.low / 10.0, hdi.high / 10.0)
}

/// A 10% increase of the predictor at its sample mean, in native units.
pub fn ten_percent_of(predictor_mean: f64) -> f64 {
    predictor_mean / 10.0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(low: f64, high: f64) -> Hdi {
        Hdi { low, high, mass: 0.95 }
    }

    #[test]
    fn polarity_table() {
        let d = decide_impact(h(-0.16, 0.29), MetricId::Com1, QualityId::Swq1);
        assert_eq!((d.direction, d.quality_impact), (Direction::NoEvidence, QualityImpact::None));
        let d = decide_impact(h(0.13, 0.23), MetricId::Com1, QualityId::Swq2_3);
        assert_eq!((d.direction, d.quality_impact), (Direction::Increase, QualityImpact::Degrades));
        let d = decide_impact(h(-0.5, -0.1), MetricId::Com1, QualityId::Swq2_1);
        assert_eq!((d.direction, d.quality_impact), (Direction::Decrease, QualityImpact::Degrades));
        let d = decide_impact(h(0.1, 0.5), MetricId::Com1, QualityId::Swq2_1);
        assert_eq!(d.quality_impact, QualityImpact::Improves);
    }

    #[test]
    fn zero_on_the_boundary_is_no_evidence() {
        assert_eq!(Direction::from_hdi(&h(0.0, 0.4)), Direction::NoEvidence);
        assert_eq!(Direction::from_hdi(&h(-0.4, 0.0)), Direction::NoEvidence);
    }

    #[test]
    fn flip_only_when_requested() {
        let d = decide_impact(h(0.1, 0.2), MetricId::Sta2, QualityId::Swq1);
        assert!(d.in_flip_set);
        assert_eq!(d.displayed_impact(false), QualityImpact::Degrades);
        assert_eq!(d.displayed_impact(true), QualityImpact::Improves);
        let d = decide_impact(h(0.1, 0.2), MetricId::Com1, QualityId::Swq1);
        assert_eq!(d.displayed_impact(true), QualityImpact::Degrades);
    }

    #[test]
    fn effect_sizes() {
        let e = effect_gaussian(&h(0.0, 0.0), 3.0);
        assert_eq!((e.low_pct, e.high_pct), (0.0, 0.0));
        assert_eq!(effect_poisson(&h(0.0, 0.0)), (0.0, 0.0));
    }
}
