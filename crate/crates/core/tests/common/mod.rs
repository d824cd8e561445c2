#![allow(dead_code)]

pub mod oracles;

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson, StandardNormal};

use sustainq::bayes::{prepare_observations, standardize, ModelConfig, ModelKind, ObservationSet};
use sustainq::metrics::{MetricId, SustainabilityVector};
use sustainq::quality::{CoverageSource, QualityId, QualityProfile};

pub fn vector(id: &str, values: &[(MetricId, f64)]) -> SustainabilityVector {
    let mut v = SustainabilityVector {
        project_id: id.into(),
        values: BTreeMap::new(),
    };
    for &(m, x) in values {
        v.set(m, Some(x));
    }
    v
}

pub fn profile(id: &str) -> QualityProfile {
    QualityProfile {
        project_id: id.into(),
        swq1: None,
        swq2_1: None,
        swq2_2: 0,
        swq2_3: 0,
        swq2_4: 0,
        swq2_5: 0,
        swq2_6: None,
        swq2_7: 0,
        coverage_source: CoverageSource::None,
    }
}

/// `ln y = beta + alpha * z + sigma * eps` with `z` the standardised predictor.
pub fn gaussian_data(
    seed: u64,
    n: usize,
    alpha: f64,
    beta: f64,
    sigma: f64,
) -> (Vec<SustainabilityVector>, Vec<QualityProfile>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs: Vec<f64> = (0..n).map(|_| rng.random_range(10.0..1000.0)).collect();
    let (z, _, _) = standardize(&xs).unwrap();
    let mut metrics = Vec::new();
    let mut quality = Vec::new();
    for (i, (&x, &zi)) in xs.iter().zip(&z).enumerate() {
        let id = format!("p{i:03}");
        let eps: f64 = StandardNormal.sample(&mut rng);
        metrics.push(vector(&id, &[(MetricId::Com1, x)]));
        let mut q = profile(&id);
        q.swq1 = Some((beta + alpha * zi + sigma * eps).exp());
        quality.push(q);
    }
    (metrics, quality)
}

/// `y ~ Poisson(exp(beta + alpha * ln x))`.
pub fn poisson_data(
    seed: u64,
    n: usize,
    alpha: f64,
    beta: f64,
) -> (Vec<SustainabilityVector>, Vec<QualityProfile>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut metrics = Vec::new();
    let mut quality = Vec::new();
    for i in 0..n {
        let id = format!("p{i:03}");
        let x: f64 = rng.random_range(1.0..20.0);
        let rate = (beta + alpha * x.ln()).exp();
        let y: f64 = Poisson::new(rate).unwrap().sample(&mut rng);
        metrics.push(vector(&id, &[(MetricId::Sta8, x)]));
        let mut q = profile(&id);
        q.swq2_2 = y as u64;
        quality.push(q);
    }
    (metrics, quality)
}

pub fn gaussian_set(seed: u64, n: usize, alpha: f64, beta: f64, sigma: f64) -> ObservationSet {
    let (m, q) = gaussian_data(seed, n, alpha, beta, sigma);
    prepare_observations(&m, &q, MetricId::Com1, QualityId::Swq1, ModelKind::Gaussian, 10).unwrap()
}

pub fn poisson_set(seed: u64, n: usize, alpha: f64, beta: f64) -> ObservationSet {
    let (m, q) = poisson_data(seed, n, alpha, beta);
    prepare_observations(&m, &q, MetricId::Sta8, QualityId::Swq2_2, ModelKind::Poisson, 10).unwrap()
}

pub fn config(seed: u64) -> ModelConfig {
    ModelConfig {
        seed,
        ..ModelConfig::default()
    }
}
