use serde::{Deserialize, Serialize};

use super::ModelKind;
use crate::error::{Error, Result};
use crate::metrics::{MetricId, SustainabilityVector};
use crate::quality::{QualityId, QualityProfile};

/// Predictors discarded for the Poisson model: too many zero and negative values
/// for a log transform.
pub const POISSON_EXCLUDED: [MetricId; 3] = [MetricId::Sta4, MetricId::Sta7, MetricId::Tec1];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DormancyGroup {
    Dormant,
    NonDormant,
}

impl DormancyGroup {
    pub fn from_flag(flag: f64) -> Self {
        if flag > 0.5 {
            DormancyGroup::Dormant
        } else {
            DormancyGroup::NonDormant
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DormancyGroup::Dormant => "dormant",
            DormancyGroup::NonDormant => "non-dormant",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Transform {
    /// Predictor standardised with this mean and sample standard deviation.
    Standardized { mean: f64, sd: f64 },
    /// Predictor enters as a group indicator.
    Grouped,
    /// Predictor enters as `ln x`, outcome untransformed.
    None,
}

/// Sample mean and `n - 1` standard deviation.
pub fn mean_sd(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = xs.iter().map(|x| (x - mean).powi(2)).sum();
    (mean, (ss / (n - 1.0)).sqrt())
}

/// Rescale to mean 0 and sample standard deviation 1.
pub fn standardize(xs: &[f64]) -> Result<(Vec<f64>, f64, f64)> {
    if xs.len() < 2 {
        return Err(Error::Degenerate(format!(
            "standardisation needs at least 2 values, got {}",
            xs.len()
        )));
    }
    let (mean, sd) = mean_sd(xs);
    if !(sd > 0.0) || !sd.is_finite() {
        return Err(Error::Degenerate("predictor has zero variance".into()));
    }
    Ok((xs.iter().map(|x| (x - mean) / sd).collect(), mean, sd))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObservationSet {
    pub predictor: MetricId,
    pub quality: QualityId,
    pub kind: ModelKind,
    pub project_ids: Vec<String>,
    /// Raw (predictor, outcome) values of the included projects.
    pub pairs: Vec<(f64, f64)>,
    pub n_excluded: usize,
    pub transform: Transform,
    pub groups: Option<Vec<DormancyGroup>>,
}

impl ObservationSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Predictor values as the model sees them.
    pub fn design(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .map(|&(x, _)| match self.transform {
                Transform::Standardized { mean, sd } => (x - mean) / sd,
                Transform::Grouped => x,
                Transform::None => x.ln(),
            })
            .collect()
    }

    /// Outcome values as the model sees them.
    pub fn response(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .map(|&(_, y)| match self.kind {
                ModelKind::Gaussian => y.ln(),
                ModelKind::Poisson => y,
            })
            .collect()
    }
}

/// Joined rows surviving the exclusion rules, before any size or variance check.
#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    pub project_ids: Vec<String>,
    pub pairs: Vec<(f64, f64)>,
    pub n_excluded: usize,
}

pub fn select_rows(
    metrics: &[SustainabilityVector],
    quality: &[QualityProfile],
    predictor: MetricId,
    quality_id: QualityId,
    kind: ModelKind,
) -> Selection {
    let grouped = predictor == MetricId::Sta6;
    let mut project_ids = Vec::new();
    let mut pairs = Vec::new();
    let mut n_excluded = 0;
    for q in quality {
        let x = metrics
            .iter()
            .find(|v| v.project_id == q.project_id)
            .and_then(|v| v.get(predictor));
        let y = q.get(quality_id);
        match (x, y) {
            (Some(x), Some(y)) if x.is_finite() && y.is_finite() => {
                let keep = match kind {
                    ModelKind::Gaussian => y > 0.0,
                    ModelKind::Poisson => (grouped || x > 0.0) && y >= 0.0 && y.fract() == 0.0,
                };
                if keep {
                    project_ids.push(q.project_id.clone());
                    pairs.push((x, y));
                } else {
                    n_excluded += 1;
                }
            }
            _ => n_excluded += 1,
        }
    }
    n_excluded += metrics
        .iter()
        .filter(|v| !quality.iter().any(|q| q.project_id == v.project_id))
        .count();
    Selection {
        project_ids,
        pairs,
        n_excluded,
    }
}

/// Join sustainability and quality tables on project id and apply the
/// model-specific exclusion rules.
///
/// Projects missing either value are excluded. Gaussian sets drop outcomes
/// `<= 0`; Poisson sets drop predictors `<= 0` (except the dormancy flag) and
/// outcomes that are negative or fractional.
pub fn prepare_observations(
    metrics: &[SustainabilityVector],
    quality: &[QualityProfile],
    predictor: MetricId,
    quality_id: QualityId,
    kind: ModelKind,
    min_observations: usize,
) -> Result<ObservationSet> {
    if kind == ModelKind::Poisson && POISSON_EXCLUDED.contains(&predictor) {
        return Err(Error::UnsupportedPredictor(predictor.as_str().into()));
    }
    let grouped = predictor == MetricId::Sta6;
    let Selection {
        project_ids,
        pairs,
        n_excluded,
    } = select_rows(metrics, quality, predictor, quality_id, kind);
    if pairs.len() < min_observations {
        return Err(Error::InsufficientData {
            included: pairs.len(),
            required: min_observations,
        });
    }
    let (transform, groups) = if grouped {
        let groups = pairs.iter().map(|&(x, _)| DormancyGroup::from_flag(x)).collect();
        (Transform::Grouped, Some(groups))
    } else if kind == ModelKind::Gaussian {
        let xs: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let (_, mean, sd) = standardize(&xs)?;
        (Transform::Standardized { mean, sd }, None)
    } else {
        (Transform::None, None)
    };
    Ok(ObservationSet {
        predictor,
        quality: quality_id,
        kind,
        project_ids,
        pairs,
        n_excluded,
        transform,
        groups,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quality::CoverageSource;

    #[test]
    fn standardize_symmetric() {
        let (z, m, s) = standardize(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(z, vec![-1.0, 0.0, 1.0]);
        assert_eq!((m, s), (2.0, 1.0));
        assert!(standardize(&[4.0, 4.0, 4.0]).is_err());
    }

    fn tables(rows: &[(f64, f64)]) -> (Vec<SustainabilityVector>, Vec<QualityProfile>) {
        let mut m = Vec::new();
        let mut q = Vec::new();
        for (i, &(x, y)) in rows.iter().enumerate() {
            let id = format!("p{i}");
            let mut v = SustainabilityVector {
                project_id: id.clone(),
                values: Default::default(),
            };
            v.set(MetricId::Com1, Some(x));
            v.set(MetricId::Sta6, Some(if i % 2 == 0 { 1.0 } else { 0.0 }));
            m.push(v);
            q.push(QualityProfile {
                project_id: id,
                swq1: Some(y),
                swq2_1: None,
                swq2_2: y as u64,
                swq2_3: 0,
                swq2_4: 0,
                swq2_5: 0,
                swq2_6: None,
                swq2_7: 0,
                coverage_source: CoverageSource::None,
            });
        }
        (m, q)
    }

    #[test]
    fn zero_outcomes_are_excluded() {
        let rows: Vec<(f64, f64)> = (0..13)
            .map(|i| (i as f64 + 1.0, if i < 3 { 0.0 } else { i as f64 }))
            .collect();
        let (m, q) = tables(&rows);
        let obs =
            prepare_observations(&m, &q, MetricId::Com1, QualityId::Swq1, ModelKind::Gaussian, 10)
                .unwrap();
        assert_eq!((obs.len(), obs.n_excluded), (10, 3));
        let z = obs.design();
        let (mean, sd) = mean_sd(&z);
        assert!(mean.abs() < 1e-12 && (sd - 1.0).abs() < 1e-12);
    }

    #[test]
    fn poisson_rejections() {
        let rows: Vec<(f64, f64)> = (0..12).map(|i| (i as f64, 2.0)).collect();
        let (m, q) = tables(&rows);
        for p in POISSON_EXCLUDED {
            assert!(matches!(
                prepare_observations(&m, &q, p, QualityId::Swq2_2, ModelKind::Poisson, 10),
                Err(Error::UnsupportedPredictor(_))
            ));
        }
        let obs =
            prepare_observations(&m, &q, MetricId::Com1, QualityId::Swq2_2, ModelKind::Poisson, 10)
                .unwrap();
        assert_eq!((obs.len(), obs.n_excluded), (11, 1));
        let obs =
            prepare_observations(&m, &q, MetricId::Sta6, QualityId::Swq2_2, ModelKind::Poisson, 10)
                .unwrap();
        assert_eq!(obs.len(), 12);
        assert_eq!(obs.groups.as_ref().unwrap()[0], DormancyGroup::Dormant);
    }

    #[test]
    fn too_few_rows() {
        let (m, q) = tables(&[(1.0, 1.0), (2.0, 2.0)]);
        assert!(matches!(
            prepare_observations(&m, &q, MetricId::Com1, QualityId::Swq1, ModelKind::Gaussian, 10),
            Err(Error::InsufficientData { included: 2, required: 10 })
        ));
    }
}
