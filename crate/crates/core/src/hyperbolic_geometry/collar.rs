use core::f64::consts::PI;

use super::GeometryError;

fn check_length(l: f64) -> Result<(), GeometryError> {
    if l > 0.0 && l.is_finite() {
        Ok(())
    } else {
        Err(GeometryError::NonPositiveLength(l))
    }
}

/// Width `asinh(1 / sinh(l / 2))` of the standard collar around a closed
/// geodesic of length `l`.
pub fn collar_width(l: f64) -> Result<f64, GeometryError> {
    check_length(l)?;
    Ok(libm::asinh(1.0 / libm::sinh(0.5 * l)))
}

/// A collar `[-w, w] x S^1` with metric `drho^2 + (l cosh(rho) / 2pi)^2 dtheta^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollarData {
    pub length: f64,
    pub width: f64,
}

impl CollarData {
    pub fn new(length: f64) -> Result<Self, GeometryError> {
        Ok(CollarData {
            length,
            width: collar_width(length)?,
        })
    }

    pub fn interval(&self) -> (f64, f64) {
        (-self.width, self.width)
    }

    pub fn h_theta(&self, rho: f64) -> f64 {
        self.length * libm::cosh(rho) / (2.0 * PI)
    }

    /// Injectivity radius at signed distance `rho` from the core geodesic.
    pub fn injrad_at(&self, rho: f64) -> Result<f64, GeometryError> {
        injrad_in_collar(self.length, self.width - rho.abs())
    }
}

/// Injectivity radius at distance `d` from the collar boundary:
/// `sinh(InjRad) = cosh(l/2) cosh(d) - sinh(d)`.
pub fn injrad_in_collar(l: f64, d: f64) -> Result<f64, GeometryError> {
    let width = collar_width(l)?;
    let slack = 1e-12 * width.max(1.0);
    if !(d >= -slack && d <= width + slack) {
        return Err(GeometryError::DistanceOutOfRange { d, width });
    }
    let d = d.clamp(0.0, width);
    Ok(libm::asinh(
        libm::cosh(0.5 * l) * libm::cosh(d) - libm::sinh(d),
    ))
}

/// `h_theta(rho) / InjRad(rho)` inside the collar of a geodesic of length `l`.
pub fn injrad_ratio(l: f64, rho: f64) -> Result<f64, GeometryError> {
    let collar = CollarData::new(l)?;
    Ok(collar.h_theta(rho) / collar.injrad_at(rho)?)
}

/// `b e^{w} / 2pi = b (1/sinh b + sqrt(1/sinh^2 b + 1)) / 2pi` with `b = l/2`.
/// It bounds the ratio only up to a `1 + o(1)` factor deep in the collar, so
/// it is reported next to the empirical maximum rather than compared to it.
pub fn proof_ratio_bound(l: f64) -> f64 {
    let b = 0.5 * l;
    let s = libm::sinh(b);
    b * (1.0 / s + libm::sqrt(1.0 / (s * s) + 1.0)) / (2.0 * PI)
}

/// Extremes of `h_theta / InjRad` over a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioScan {
    pub min_ratio: f64,
    pub max_ratio: f64,
    /// `(l, rho)` where the minimum is attained.
    pub argmin: (f64, f64),
    pub argmax: (f64, f64),
    /// Largest value of [`proof_ratio_bound`] over the length grid.
    pub proof_bound: f64,
}

/// Scans the ratio over `lengths x fractions`, where a fraction `s` in
/// `[-1, 1]` stands for `rho = s * w(l)`.
pub fn injrad_ratio_scan(lengths: &[f64], fractions: &[f64]) -> Result<RatioScan, GeometryError> {
    if lengths.is_empty() || fractions.is_empty() {
        return Err(GeometryError::EmptyGrid);
    }
    let mut scan = RatioScan {
        min_ratio: f64::INFINITY,
        max_ratio: f64::NEG_INFINITY,
        argmin: (0.0, 0.0),
        argmax: (0.0, 0.0),
        proof_bound: f64::NEG_INFINITY,
    };
    for &l in lengths {
        let collar = CollarData::new(l)?;
        scan.proof_bound = scan.proof_bound.max(proof_ratio_bound(l));
        for &s in fractions {
            if !(-1.0..=1.0).contains(&s) {
                return Err(GeometryError::DistanceOutOfRange {
                    d: s * collar.width,
                    width: collar.width,
                });
            }
            let rho = s * collar.width;
            let ratio = collar.h_theta(rho) / collar.injrad_at(rho)?;
            if ratio < scan.min_ratio {
                scan.min_ratio = ratio;
                scan.argmin = (l, rho);
            }
            if ratio > scan.max_ratio {
                scan.max_ratio = ratio;
                scan.argmax = (l, rho);
            }
        }
    }
    Ok(scan)
}
