//! Monte Carlo estimators with deterministic parallel substreams.
//!
//! Sampling is chunked: substream i derives its own generator from
//! (seed, i), chunks are assigned statically and merged in index order, so a
//! result depends only on (seed, samples, chunk) and never on the number of
//! worker threads.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{ChiSquared, Distribution, Gamma, StandardNormal};
use rayon::prelude::*;

use crate::gamma_tv::GammaProductSpec;
use crate::{Error, Result};

/// Sampling budget and reproducibility contract for an MC run.
#[derive(Debug, Clone, Copy)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
    /// Samples per deterministic substream.
    pub chunk: u64,
}

impl McConfig {
    pub fn new(samples: u64, seed: u64) -> Self {
        McConfig {
            samples,
            seed,
            chunk: 65_536,
        }
    }
}

/// Point estimate with its standard error.
#[derive(Debug, Clone, Copy)]
pub struct McResult {
    pub estimate: f64,
    pub std_error: f64,
    pub samples_used: u64,
}

/// A distribution that can fill a point of fixed dimension.
pub trait PointSampler: Sync {
    fn dim(&self) -> usize;
    fn sample_into(&self, rng: &mut ChaCha8Rng, out: &mut [f64]);
}

/// Log-density evaluable at a point.
pub trait LogDensity: Sync {
    fn log_pdf(&self, x: &[f64]) -> f64;
}

/// splitmix64 step, used to derive independent substream seeds.
fn mix_seed(seed: u64, stream: u64) -> u64 {
    let mut z = seed
        .wrapping_add(0x9e37_79b9_7f4a_7c15_u64.wrapping_mul(stream.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix_seed(seed, stream))
}

struct ChunkPlan {
    index: u64,
    count: u64,
}

fn chunks(cfg: &McConfig) -> Vec<ChunkPlan> {
    let chunk = cfg.chunk.max(1);
    let mut out = Vec::new();
    let mut done = 0;
    let mut index = 0;
    while done < cfg.samples {
        let count = chunk.min(cfg.samples - done);
        out.push(ChunkPlan { index, count });
        done += count;
        index += 1;
    }
    out
}

/// TVD estimator from the sign of the density ratio at samples of both laws:
/// estimate = P{f1(X) >= f2(X)} - P{f1(Y) >= f2(Y)} with X ~ f1, Y ~ f2.
pub fn mc_tv(
    sampler1: &dyn PointSampler,
    sampler2: &dyn PointSampler,
    log_pdf1: &dyn LogDensity,
    log_pdf2: &dyn LogDensity,
    cfg: &McConfig,
) -> Result<McResult> {
    if sampler1.dim() != sampler2.dim() {
        return Err(Error::Config(format!(
            "samplers disagree on dimension: {} vs {}",
            sampler1.dim(),
            sampler2.dim()
        )));
    }
    let dim = sampler1.dim();
    let hit =
        |point: &[f64], idx: u64| -> Result<bool> {
            let l1 = log_pdf1.log_pdf(point);
            let l2 = log_pdf2.log_pdf(point);
            if l1.is_nan() || l2.is_nan() || (l1 == f64::INFINITY) || (l2 == f64::INFINITY) {
                return Err(Error::NonFiniteLogDensity {
                    index: idx,
                    value: if l1.is_finite() { l2 } else { l1 },
                });
            }
            Ok(l1 >= l2)
        };

    // Two independent sample streams; stream ids are disjoint odd/even.
    let plan = chunks(cfg);
    let per_chunk: Vec<Result<(u64, u64)>> = plan
        .par_iter()
        .map(|c| {
            let mut rng1 = substream(cfg.seed, 2 * c.index);
            let mut rng2 = substream(cfg.seed, 2 * c.index + 1);
            let mut buf = vec![0.0; dim];
            let mut hits1 = 0u64;
            let mut hits2 = 0u64;
            for k in 0..c.count {
                let idx = c.index * cfg.chunk + k;
                sampler1.sample_into(&mut rng1, &mut buf);
                if hit(&buf, idx)? {
                    hits1 += 1;
                }
                sampler2.sample_into(&mut rng2, &mut buf);
                if hit(&buf, idx)? {
                    hits2 += 1;
                }
            }
            Ok((hits1, hits2))
        })
        .collect();

    let mut hits1 = 0u64;
    let mut hits2 = 0u64;
    for r in per_chunk {
        let (h1, h2) = r?;
        hits1 += h1;
        hits2 += h2;
    }
    let n = cfg.samples as f64;
    let p1 = hits1 as f64 / n;
    let p2 = hits2 as f64 / n;
    let var = p1 * (1.0 - p1) / n + p2 * (1.0 - p2) / n;
    Ok(McResult {
        estimate: p1 - p2,
        std_error: var.sqrt(),
        samples_used: cfg.samples,
    })
}

/// KL estimator: sample mean of log f1 - log f2 under sampler1.
pub fn mc_kl(
    sampler1: &dyn PointSampler,
    log_pdf1: &dyn LogDensity,
    log_pdf2: &dyn LogDensity,
    cfg: &McConfig,
) -> Result<McResult> {
    let dim = sampler1.dim();
    let plan = chunks(cfg);
    let per_chunk: Vec<Result<(f64, f64)>> = plan
        .par_iter()
        .map(|c| {
            let mut rng = substream(cfg.seed, c.index);
            let mut buf = vec![0.0; dim];
            let mut sum = 0.0;
            let mut sumsq = 0.0;
            for k in 0..c.count {
                sampler1.sample_into(&mut rng, &mut buf);
                let v = log_pdf1.log_pdf(&buf) - log_pdf2.log_pdf(&buf);
                if !v.is_finite() {
                    return Err(Error::NonFiniteLogDensity {
                        index: c.index * cfg.chunk + k,
                        value: v,
                    });
                }
                sum += v;
                sumsq += v * v;
            }
            Ok((sum, sumsq))
        })
        .collect();

    let mut sum = 0.0;
    let mut sumsq = 0.0;
    for r in per_chunk {
        let (s, s2) = r?;
        sum += s;
        sumsq += s2;
    }
    let n = cfg.samples as f64;
    let mean = sum / n;
    let var = (sumsq / n - mean * mean).max(0.0);
    Ok(McResult {
        estimate: mean,
        std_error: (var / n).sqrt(),
        samples_used: cfg.samples,
    })
}

/// Centered multivariate Student-t with identity scale matrix: a standard
/// Gaussian vector divided by sqrt(chi^2_nu / nu).
pub struct StudentSampler {
    pub nu: f64,
    pub n: usize,
}

impl PointSampler for StudentSampler {
    fn dim(&self) -> usize {
        self.n
    }
    fn sample_into(&self, rng: &mut ChaCha8Rng, out: &mut [f64]) {
        sample_student(self.nu, rng, out);
    }
}

/// Centered normal with diagonal covariance diag(d).
pub struct DiagNormalSampler {
    pub d: Vec<f64>,
}

impl PointSampler for DiagNormalSampler {
    fn dim(&self) -> usize {
        self.d.len()
    }
    fn sample_into(&self, rng: &mut ChaCha8Rng, out: &mut [f64]) {
        sample_diag_normal(&self.d, rng, out);
    }
}

/// Product of independent Gamma(alpha_i, rate lambda_i) components.
pub struct GammaProductSampler {
    shapes: Vec<f64>,
    rates: Vec<f64>,
}

impl GammaProductSampler {
    /// First law of a spec: components Gamma(alpha_i, lambda_i).
    pub fn first(spec: &GammaProductSpec) -> Self {
        GammaProductSampler {
            shapes: spec.alpha.clone(),
            rates: spec.lambda.clone(),
        }
    }
    /// Second law of a spec: components Gamma(beta_i, mu_i).
    pub fn second(spec: &GammaProductSpec) -> Self {
        GammaProductSampler {
            shapes: spec.beta.clone(),
            rates: spec.mu.clone(),
        }
    }
}

impl PointSampler for GammaProductSampler {
    fn dim(&self) -> usize {
        self.shapes.len()
    }
    fn sample_into(&self, rng: &mut ChaCha8Rng, out: &mut [f64]) {
        for ((o, &shape), &rate) in out.iter_mut().zip(&self.shapes).zip(&self.rates) {
            let g = Gamma::new(shape, 1.0 / rate).expect("validated spec");
            *o = g.sample(rng);
        }
    }
}

/// Draw one multivariate Student-t point (Sigma = I).
pub fn sample_student(nu: f64, rng: &mut ChaCha8Rng, out: &mut [f64]) {
    let chi = ChiSquared::new(nu).expect("nu > 0");
    let scale = (nu / chi.sample(rng)).sqrt();
    for o in out.iter_mut() {
        let z: f64 = rng.sample(StandardNormal);
        *o = z * scale;
    }
}

/// Draw one diagonal-covariance normal point.
pub fn sample_diag_normal(d: &[f64], rng: &mut ChaCha8Rng, out: &mut [f64]) {
    for (o, &di) in out.iter_mut().zip(d) {
        let z: f64 = rng.sample(StandardNormal);
        *o = z * di.sqrt();
    }
}

/// Draw one point from the first law of a Gamma product spec.
pub fn sample_gamma_product(spec: &GammaProductSpec, rng: &mut ChaCha8Rng, out: &mut [f64]) {
    GammaProductSampler::first(spec).sample_into(rng, out);
}
