//! Polyline samplings of a few real algebraic curves.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{CurveError, ProjectiveCurve};

/// The projective line `{x_2 = ... = x_n = 0}`: half a great circle, closed
/// up by the antipodal identification.
pub fn line(n: usize, samples: usize) -> Result<ProjectiveCurve, CurveError> {
    let pts = (0..samples)
        .map(|j| {
            let th = PI * j as f64 / samples as f64;
            let mut p = alloc::vec![0.0; n + 1];
            p[0] = libm::cos(th);
            if n >= 1 {
                p[1] = libm::sin(th);
            }
            p
        })
        .collect();
    ProjectiveCurve::new(n, pts, true)
}

/// Open arc of the line covering the angular range `[0, fraction * pi]`.
pub fn line_segment(
    n: usize,
    fraction: f64,
    samples: usize,
) -> Result<ProjectiveCurve, CurveError> {
    let pts = (0..=samples)
        .map(|j| {
            let th = fraction * PI * j as f64 / samples as f64;
            let mut p = alloc::vec![0.0; n + 1];
            p[0] = libm::cos(th);
            p[1] = libm::sin(th);
            p
        })
        .collect();
    ProjectiveCurve::new(n, pts, false)
}

/// Real locus of `x^2 + y^2 = t z^2` in `RP^2`.
pub fn conic_family(t: f64, samples: usize) -> Result<ProjectiveCurve, CurveError> {
    let s = libm::sqrt(t);
    let pts = (0..samples)
        .map(|j| {
            let th = 2.0 * PI * j as f64 / samples as f64;
            alloc::vec![s * libm::cos(th), s * libm::sin(th), 1.0]
        })
        .collect();
    ProjectiveCurve::from_unnormalized(2, pts, true)
}

/// Real locus of `x^2 + y^2 = z^2` in `RP^2`.
pub fn conic(samples: usize) -> Result<ProjectiveCurve, CurveError> {
    conic_family(1.0, samples)
}

/// The nodal cubic `y^2 z = x^2 (x + z)`, parametrized by
/// `[a : b] -> [(a^2 - b^2) b : a (a^2 - b^2) : b^3]`.
pub fn nodal_cubic(samples: usize) -> Result<ProjectiveCurve, CurveError> {
    let pts: Vec<Vec<f64>> = (0..samples)
        .map(|j| {
            let phi = PI * (j as f64 + 0.5) / samples as f64;
            let (a, b) = (libm::cos(phi), libm::sin(phi));
            let q = a * a - b * b;
            alloc::vec![q * b, a * q, b * b * b]
        })
        .collect();
    ProjectiveCurve::from_unnormalized(2, pts, true)
}
