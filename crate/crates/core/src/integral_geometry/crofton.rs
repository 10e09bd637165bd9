use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::curve::count_with_normal;
use super::{normalized_length, CurveError, ProjectiveCurve};

/// Monte-Carlo estimate of the normalized length of a curve.
#[derive(Debug, Clone, PartialEq)]
pub struct CroftonEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: usize,
    /// Normalized length of the polyline itself.
    pub exact_length: f64,
    /// Hyperplanes redrawn because they passed through a vertex.
    pub resamples: u64,
}

impl CroftonEstimate {
    /// `|mean - exact_length| <= k * std_error`.
    pub fn consistent_within(&self, k: f64) -> bool {
        (self.mean - self.exact_length).abs() <= k * self.std_error
    }
}

/// An estimate together with the individual intersection counts.
#[derive(Debug, Clone, PartialEq)]
pub struct CroftonRun {
    pub estimate: CroftonEstimate,
    pub counts: Vec<u32>,
}

fn random_normal(rng: &mut ChaCha8Rng, dim: usize, out: &mut [f64]) {
    loop {
        let mut norm2 = 0.0;
        for x in out.iter_mut().take(dim) {
            *x = rng.sample(StandardNormal);
            norm2 += *x * *x;
        }
        if norm2 > 1e-300 {
            let inv = 1.0 / libm::sqrt(norm2);
            out.iter_mut().for_each(|x| *x *= inv);
            return;
        }
    }
}

/// Draws `n_samples` hyperplanes with normals uniform on `S^n` and records
/// how often each meets the curve. Deterministic in `seed`.
pub fn crofton_counts(
    curve: &ProjectiveCurve,
    n_samples: usize,
    seed: u64,
) -> Result<CroftonRun, CurveError> {
    if n_samples < 100 {
        return Err(CurveError::TooFewSamples(n_samples));
    }
    let dim = curve.dimension() + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut normal = alloc::vec![0.0; dim];
    let mut counts = Vec::with_capacity(n_samples);
    let mut resamples = 0u64;
    let (mut sum, mut sum_sq) = (0u128, 0u128);
    while counts.len() < n_samples {
        random_normal(&mut rng, dim, &mut normal);
        match count_with_normal(curve, &normal) {
            Ok(c) => {
                counts.push(c as u32);
                sum += c as u128;
                sum_sq += (c as u128) * (c as u128);
            }
            Err(CurveError::DegenerateIncidence(_)) => resamples += 1,
            Err(e) => return Err(e),
        }
    }
    let n = n_samples as f64;
    let mean = sum as f64 / n;
    // integer sums keep the variance exactly zero for constant counts
    let centered = sum_sq as f64 - (sum as f64) * (sum as f64) / n;
    let variance = (centered / (n - 1.0)).max(0.0);
    Ok(CroftonRun {
        estimate: CroftonEstimate {
            mean,
            std_error: libm::sqrt(variance / n),
            samples: n_samples,
            exact_length: normalized_length(curve),
            resamples,
        },
        counts,
    })
}

pub fn crofton_length(
    curve: &ProjectiveCurve,
    n_samples: usize,
    seed: u64,
) -> Result<CroftonEstimate, CurveError> {
    crofton_counts(curve, n_samples, seed).map(|run| run.estimate)
}

/// Both sides of `2 pi Area >= length` for the boundary of a degree-`d`
/// holomorphic disk, where `2 pi Area = d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiiCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub pass: bool,
}

pub fn verify_projective_rii(
    boundary: &ProjectiveCurve,
    degree: i64,
    tol: f64,
) -> Result<RiiCheck, CurveError> {
    if degree <= 0 {
        return Err(CurveError::NonPositiveDegree);
    }
    let lhs = degree as f64;
    let rhs = normalized_length(boundary);
    Ok(RiiCheck {
        lhs,
        rhs,
        pass: lhs >= rhs - tol,
    })
}
