use alloc::vec::Vec;
use core::f64::consts::PI;

use super::GeometryError;

/// Polyline on the flat cylinder `[0, modulus] x S^1`, given by points
/// `(s, theta)` with `theta` unwrapped so that segments are straight in the
/// universal cover.
#[derive(Debug, Clone, PartialEq)]
pub struct CylinderPolyline {
    pub modulus: f64,
    pub points: Vec<(f64, f64)>,
}

impl CylinderPolyline {
    pub fn new(modulus: f64, points: Vec<(f64, f64)>) -> Result<Self, GeometryError> {
        if !(modulus > 0.0 && modulus.is_finite()) {
            return Err(GeometryError::NonPositiveLength(modulus));
        }
        for (i, &(s, theta)) in points.iter().enumerate() {
            if !(s >= 0.0 && s <= modulus && theta.is_finite()) {
                return Err(GeometryError::OutsideCylinder(i));
            }
        }
        Ok(CylinderPolyline { modulus, points })
    }
}

/// Sub-cylinder `[a, b] x S^1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubCylinder {
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TameReport {
    pub tame: bool,
    /// Largest `length / (2pi max(Mod, 1))` over the probed sub-cylinders,
    /// i.e. the smallest `k` for which the probes pass.
    pub worst_ratio: f64,
    pub worst: Option<SubCylinder>,
}

/// Length of the part of the polyline inside `[a, b] x S^1` for the
/// standard metric `ds^2 + dtheta^2`.
pub fn length_within(geo: &CylinderPolyline, a: f64, b: f64) -> f64 {
    let mut total = 0.0;
    for w in geo.points.windows(2) {
        let (s0, t0) = w[0];
        let (s1, t1) = w[1];
        let len = libm::hypot(s1 - s0, t1 - t0);
        if s0 == s1 {
            if s0 >= a && s0 <= b {
                total += len;
            }
            continue;
        }
        let (lam_a, lam_b) = ((a - s0) / (s1 - s0), (b - s0) / (s1 - s0));
        let lo = lam_a.min(lam_b).max(0.0);
        let hi = lam_a.max(lam_b).min(1.0);
        if hi > lo {
            total += (hi - lo) * len;
        }
    }
    total
}

/// Checks `l(gamma cap I') <= 2 pi k max(Mod I', 1)` over all sub-cylinders
/// whose ends lie on a grid of `probes + 1` evenly spaced heights.
pub fn is_k_tame(
    geo: &CylinderPolyline,
    k: f64,
    probes: usize,
) -> Result<TameReport, GeometryError> {
    if probes == 0 {
        return Err(GeometryError::EmptyGrid);
    }
    let grid: Vec<f64> = (0..=probes)
        .map(|i| geo.modulus * i as f64 / probes as f64)
        .collect();
    let mut report = TameReport {
        tame: true,
        worst_ratio: 0.0,
        worst: None,
    };
    for (i, &a) in grid.iter().enumerate() {
        for &b in &grid[i + 1..] {
            let ratio = length_within(geo, a, b) / (2.0 * PI * (b - a).max(1.0));
            if ratio > report.worst_ratio {
                report.worst_ratio = ratio;
                report.worst = Some(SubCylinder { a, b });
            }
        }
    }
    report.tame = report.worst_ratio <= k;
    Ok(report)
}
