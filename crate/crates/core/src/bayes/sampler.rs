//! Adaptive Metropolis sampling.
//!
//! Each chain starts from an overdispersed draw around the posterior mode.
//! During warmup a random-walk proposal adapts its scale toward a target
//! acceptance rate and periodically re-estimates its covariance from the
//! chain's own history. After warmup the chain alternates, at random, between
//! the tuned random walk and an independence proposal: a multivariate
//! Student-t fitted to the warmup draws. Both kernels leave the posterior
//! invariant, so their mixture does too, and the independence moves let the
//! chain decorrelate quickly on the near-Gaussian posteriors of small
//! regression models.

use nalgebra::{Cholesky, DMatrix, DVector, Dyn};
use rand::Rng;
use rand_distr::{ChiSquared, Distribution, StandardNormal};

use super::model::Model;

const T_DOF: f64 = 6.0;
const INDEPENDENCE_INFLATION: f64 = 1.2;
const OVERDISPERSION: f64 = 2.0;

/// FNV-1a over a base seed and a sequence of labels.
pub fn derive_seed(base: u64, parts: &[&str]) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h = OFFSET;
    let mut feed = |bytes: &[u8]| {
        for &b in bytes {
            h ^= u64::from(b);
            h = h.wrapping_mul(PRIME);
        }
    };
    feed(&base.to_le_bytes());
    for p in parts {
        feed(p.as_bytes());
        feed(&[0xff]);
    }
    h
}

fn gradient(f: &dyn Fn(&[f64]) -> f64, x: &[f64]) -> DVector<f64> {
    let mut g = DVector::zeros(x.len());
    let mut probe = x.to_vec();
    for i in 0..x.len() {
        let h = 1e-5 * x[i].abs().max(1.0);
        probe[i] = x[i] + h;
        let up = f(&probe);
        probe[i] = x[i] - h;
        let down = f(&probe);
        probe[i] = x[i];
        g[i] = (up - down) / (2.0 * h);
    }
    g
}

fn hessian(f: &dyn Fn(&[f64]) -> f64, x: &[f64]) -> DMatrix<f64> {
    let d = x.len();
    let mut h = DMatrix::zeros(d, d);
    let mut probe = x.to_vec();
    for j in 0..d {
        let step = 1e-4 * x[j].abs().max(1.0);
        probe[j] = x[j] + step;
        let up = gradient(f, &probe);
        probe[j] = x[j] - step;
        let down = gradient(f, &probe);
        probe[j] = x[j];
        h.set_column(j, &((up - down) / (2.0 * step)));
    }
    (&h + h.transpose()) * 0.5
}

/// Posterior mode and the inverse negative Hessian there.
///
/// Damped Newton iterations from the model's initial point. The returned
/// covariance falls back to the identity where the curvature is not
/// positive definite.
pub fn find_mode(model: &Model) -> (Vec<f64>, DMatrix<f64>) {
    let f = |t: &[f64]| model.log_density(t);
    let d = model.dim();
    let mut x = model.initial_point();
    let mut fx = f(&x);
    let mut damping = 1e-3;
    for _ in 0..500 {
        let g = gradient(&f, &x);
        if g.amax() < 1e-8 {
            break;
        }
        let neg_h = -hessian(&f, &x);
        let mut improved = false;
        while damping < 1e12 {
            let scale = neg_h.diagonal().abs().max().max(1.0);
            let a = &neg_h + DMatrix::identity(d, d) * (damping * scale);
            if let Some(chol) = Cholesky::new(a) {
                let step = chol.solve(&g);
                let candidate: Vec<f64> = x.iter().zip(step.iter()).map(|(a, b)| a + b).collect();
                let fc = f(&candidate);
                if fc > fx {
                    let small = step.amax() < 1e-10;
                    x = candidate;
                    fx = fc;
                    damping = (damping * 0.1).max(1e-12);
                    improved = !small;
                    break;
                }
            }
            damping *= 10.0;
        }
        if !improved {
            break;
        }
    }
    let neg_h = -hessian(&f, &x);
    let cov = Cholesky::new(neg_h)
        .map(|c| c.inverse())
        .filter(|c| c.iter().all(|v| v.is_finite()))
        .unwrap_or_else(|| DMatrix::identity(d, d));
    (x, cov)
}

fn cholesky_or_diag(cov: &DMatrix<f64>) -> Cholesky<f64, Dyn> {
    let d = cov.nrows();
    if let Some(c) = Cholesky::new(cov.clone()) {
        return c;
    }
    let diag = DMatrix::from_diagonal(&cov.diagonal().map(|v| if v > 0.0 && v.is_finite() { v } else { 1.0 }));
    Cholesky::new(diag).unwrap_or_else(|| Cholesky::new(DMatrix::identity(d, d)).expect("identity"))
}

fn standard_normal_vec<R: Rng>(rng: &mut R, d: usize) -> DVector<f64> {
    DVector::from_fn(d, |_, _| StandardNormal.sample(rng))
}

fn sample_cov(draws: &[Vec<f64>]) -> Option<(DVector<f64>, DMatrix<f64>)> {
    let d = draws.first()?.len();
    if draws.len() < 2 * d + 2 {
        return None;
    }
    let n = draws.len() as f64;
    let mut mean = DVector::zeros(d);
    for t in draws {
        mean += DVector::from_column_slice(t);
    }
    mean /= n;
    let mut cov = DMatrix::zeros(d, d);
    for t in draws {
        let c = DVector::from_column_slice(t) - &mean;
        cov += &c * c.transpose();
    }
    cov /= n - 1.0;
    Some((mean, cov))
}

struct Independence {
    mean: DVector<f64>,
    chol: Cholesky<f64, Dyn>,
    chi: ChiSquared<f64>,
}

impl Independence {
    fn new(mean: DVector<f64>, cov: &DMatrix<f64>) -> Self {
        let scaled = cov * (INDEPENDENCE_INFLATION * INDEPENDENCE_INFLATION);
        Independence {
            mean,
            chol: cholesky_or_diag(&scaled),
            chi: ChiSquared::new(T_DOF).expect("positive dof"),
        }
    }

    fn draw<R: Rng>(&self, rng: &mut R) -> Vec<f64> {
        let z = standard_normal_vec(rng, self.mean.len());
        let w: f64 = self.chi.sample(rng);
        let x = &self.mean + self.chol.l() * z * (T_DOF / w).sqrt();
        x.iter().copied().collect()
    }

    fn log_density(&self, x: &[f64]) -> f64 {
        let diff = DVector::from_column_slice(x) - &self.mean;
        let y = self
            .chol
            .l()
            .solve_lower_triangular(&diff)
            .unwrap_or_else(|| diff.clone());
        let q = y.norm_squared();
        -0.5 * (T_DOF + x.len() as f64) * (q / T_DOF).ln_1p()
    }
}

pub struct ChainOutput {
    /// Post-warmup draws in the unconstrained space.
    pub draws: Vec<Vec<f64>>,
    pub acceptance: f64,
}

/// Run one chain: overdispersed start, adaptive warmup, mixture sampling.
pub fn run_chain<R: Rng>(
    model: &Model,
    mode: &[f64],
    mode_cov: &DMatrix<f64>,
    warmup: usize,
    draws: usize,
    rng: &mut R,
) -> ChainOutput {
    let d = model.dim();
    let f = |t: &[f64]| model.log_density(t);
    let target = if d == 1 { 0.44 } else { 0.234 };

    let mut chol = cholesky_or_diag(mode_cov);
    let mut x = mode.to_vec();
    for _ in 0..100 {
        let z = standard_normal_vec(rng, d);
        let step = chol.l() * z * OVERDISPERSION;
        let candidate: Vec<f64> = mode.iter().zip(step.iter()).map(|(a, b)| a + b).collect();
        if f(&candidate).is_finite() {
            x = candidate;
            break;
        }
    }
    let mut fx = f(&x);

    let mut log_scale = (2.38 / (d as f64).sqrt()).ln();
    let mut history: Vec<Vec<f64>> = Vec::with_capacity(warmup);
    let checkpoints = [warmup / 4, warmup / 2, 3 * warmup / 4];
    let mut window_start = 0;

    let rw_step = |x: &[f64], chol: &Cholesky<f64, Dyn>, scale: f64, rng: &mut R| -> Vec<f64> {
        let z = standard_normal_vec(rng, d);
        let step = chol.l() * z * scale;
        x.iter().zip(step.iter()).map(|(a, b)| a + b).collect()
    };

    for t in 0..warmup {
        let candidate = rw_step(&x, &chol, log_scale.exp(), rng);
        let fc = f(&candidate);
        let accept_prob = if fc.is_finite() { (fc - fx).exp().min(1.0) } else { 0.0 };
        if rng.random::<f64>() < accept_prob {
            x = candidate;
            fx = fc;
        }
        log_scale = (log_scale + (accept_prob - target) / ((t + 1) as f64).powf(0.6)).clamp(-12.0, 4.0);
        history.push(x.clone());
        if checkpoints.contains(&(t + 1)) {
            if let Some((_, cov)) = sample_cov(&history[window_start..]) {
                if let Some(c) = Cholesky::new(cov + DMatrix::identity(d, d) * 1e-12) {
                    chol = c;
                }
            }
            window_start = t + 1;
        }
    }

    let independence = sample_cov(&history[warmup / 2..])
        .map(|(mean, cov)| Independence::new(mean, &cov))
        .unwrap_or_else(|| Independence::new(DVector::from_column_slice(mode), mode_cov));
    let mut fq = independence.log_density(&x);
    let scale = log_scale.exp();

    let mut out = Vec::with_capacity(draws);
    let mut accepted = 0usize;
    for _ in 0..draws {
        if rng.random::<bool>() {
            let candidate = rw_step(&x, &chol, scale, rng);
            let fc = f(&candidate);
            if fc.is_finite() && rng.random::<f64>().ln() < fc - fx {
                fq = independence.log_density(&candidate);
                x = candidate;
                fx = fc;
                accepted += 1;
            }
        } else {
            let candidate = independence.draw(rng);
            let fc = f(&candidate);
            let qc = independence.log_density(&candidate);
            if fc.is_finite() && rng.random::<f64>().ln() < (fc - fx) + (fq - qc) {
                x = candidate;
                fx = fc;
                fq = qc;
                accepted += 1;
            }
        }
        out.push(x.clone());
    }
    ChainOutput {
        draws: out,
        acceptance: if draws == 0 { 0.0 } else { accepted as f64 / draws as f64 },
    }
}
