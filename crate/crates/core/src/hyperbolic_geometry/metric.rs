use core::f64::consts::PI;

use super::{collar_width, GeometryError};
use crate::quadrature::integrate_adaptive;

/// Rotationally symmetric metric `drho^2 + h_theta(rho)^2 dtheta^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MetricProfile {
    /// `h = 1`: the flat cylinder.
    Cylinder,
    /// `h = rho`: polar coordinates on the plane.
    Euclidean,
    /// `h = sin(rho)`.
    Spherical,
    /// `h = sinh(rho)`.
    Hyperbolic,
    /// `h = l cosh(rho) / 2pi` on `[-w(l), w(l)]`.
    Collar { length: f64 },
}

impl MetricProfile {
    pub fn h_theta(&self, rho: f64) -> f64 {
        match *self {
            MetricProfile::Cylinder => 1.0,
            MetricProfile::Euclidean => rho,
            MetricProfile::Spherical => libm::sin(rho),
            MetricProfile::Hyperbolic => libm::sinh(rho),
            MetricProfile::Collar { length } => length * libm::cosh(rho) / (2.0 * PI),
        }
    }

    /// Checks that `[a, b]` lies where `h_theta > 0`.
    pub fn check_interval(&self, a: f64, b: f64) -> Result<(), GeometryError> {
        let bad = || GeometryError::OutsideProfile { a, b };
        if !(a.is_finite() && b.is_finite()) || a > b {
            return Err(bad());
        }
        match *self {
            MetricProfile::Cylinder => Ok(()),
            MetricProfile::Euclidean | MetricProfile::Hyperbolic if a > 0.0 => Ok(()),
            MetricProfile::Spherical if a > 0.0 && b < PI => Ok(()),
            MetricProfile::Collar { length } => {
                let w = collar_width(length)?;
                let slack = 1e-12 * w.max(1.0);
                if a >= -w - slack && b <= w + slack {
                    Ok(())
                } else {
                    Err(bad())
                }
            }
            _ => Err(bad()),
        }
    }
}

/// Conformal modulus `int_a^b drho / h_theta` of the annulus `[a, b] x S^1`.
pub fn modulus(profile: MetricProfile, a: f64, b: f64) -> Result<f64, GeometryError> {
    profile.check_interval(a, b)?;
    if a == b {
        return Ok(0.0);
    }
    let f = |rho: f64| 1.0 / profile.h_theta(rho);
    let scale = (b - a) * f(a).max(f(b)).max(f(0.5 * (a + b))).max(1.0);
    integrate_adaptive(f, a, b, 1e-13 * scale).map_err(|e| GeometryError::Quadrature(e.estimate))
}

/// Sign of the curvature of the model disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curvature {
    Negative,
    Flat,
    Positive,
}

impl TryFrom<i32> for Curvature {
    type Error = GeometryError;

    fn try_from(k: i32) -> Result<Self, Self::Error> {
        match k {
            -1 => Ok(Curvature::Negative),
            0 => Ok(Curvature::Flat),
            1 => Ok(Curvature::Positive),
            other => Err(GeometryError::Curvature(other)),
        }
    }
}

const SERIES_CUTOFF: f64 = 1e-4;

/// Regular part `1/h(rho) - 1/rho` of the conformal-radius integrand.
fn regular_part(k: Curvature, rho: f64) -> f64 {
    let rho3 = rho * rho * rho;
    match k {
        Curvature::Flat => 0.0,
        Curvature::Positive if rho < SERIES_CUTOFF => rho / 6.0 + 7.0 * rho3 / 360.0,
        Curvature::Positive => 1.0 / libm::sin(rho) - 1.0 / rho,
        Curvature::Negative if rho < SERIES_CUTOFF => -rho / 6.0 + 7.0 * rho3 / 360.0,
        Curvature::Negative => 1.0 / libm::sinh(rho) - 1.0 / rho,
    }
}

/// Conformal radius `exp(f(r))` of the geodesic disk of radius `r` in the
/// model of curvature `k`, where `f(r) = log r + int_0^r (1/h - 1/rho)`.
pub fn conformal_radius(k: Curvature, r: f64) -> Result<f64, GeometryError> {
    if !(r > 0.0 && r.is_finite()) || (k == Curvature::Positive && r >= PI) {
        return Err(GeometryError::RadiusOutOfDomain(r));
    }
    let integral = match k {
        Curvature::Flat => 0.0,
        _ => integrate_adaptive(|rho| regular_part(k, rho), 0.0, r, 1e-14)
            .map_err(|e| GeometryError::Quadrature(e.estimate))?,
    };
    Ok(r * libm::exp(integral))
}

/// Smallest observed `r_conf / r` over `samples` radii evenly spread on
/// `(0, kappa]`.
pub fn fit_conformal_constant(
    k: Curvature,
    kappa: f64,
    samples: usize,
) -> Result<f64, GeometryError> {
    if samples == 0 {
        return Err(GeometryError::EmptyGrid);
    }
    let mut c = f64::INFINITY;
    for i in 1..=samples {
        let r = kappa * i as f64 / samples as f64;
        c = c.min(conformal_radius(k, r)? / r);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_profile_modulus_is_the_length() {
        assert!((modulus(MetricProfile::Cylinder, 0.0, 3.0).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn polar_profiles_reject_the_origin() {
        assert!(modulus(MetricProfile::Euclidean, 0.0, 1.0).is_err());
        assert!(modulus(MetricProfile::Spherical, 0.5, 3.5).is_err());
        assert!(modulus(MetricProfile::Collar { length: 1.0 }, -5.0, 0.0).is_err());
    }

    #[test]
    fn series_and_direct_evaluation_agree_at_the_cutoff() {
        for k in [Curvature::Positive, Curvature::Negative] {
            let below = regular_part(k, SERIES_CUTOFF * (1.0 - 1e-9));
            let above = regular_part(k, SERIES_CUTOFF);
            assert!((below - above).abs() < 1e-11, "{k:?}");
        }
    }

    #[test]
    fn flat_conformal_radius_is_identity() {
        assert_eq!(conformal_radius(Curvature::Flat, 0.5).unwrap(), 0.5);
        assert!(conformal_radius(Curvature::Positive, PI).is_err());
        assert!(Curvature::try_from(2).is_err());
    }
}
