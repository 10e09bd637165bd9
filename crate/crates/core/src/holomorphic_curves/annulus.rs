use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::HolomorphicError;
use crate::hypograph::{Component, ComponentKind, Domain1D, HypographError, PiecewiseScalarField};
use crate::quadrature::GaussLegendre;

/// `r^6 - 1 + r^4 / a^2`, the defining polynomial divided by `a^2`, with
/// `r^6 - 1` evaluated without cancellation.
fn scaled_equation(a: f64, r: f64) -> f64 {
    libm::expm1(6.0 * libm::log(r)) + r * r * r * r / (a * a)
}

/// Unique root in `(0, 1)` of `a^2 r^6 + r^4 - a^2`: bisection down to a
/// bracket of width `1e-14`, then one Newton step.
pub fn solve_inner_radius(a: f64) -> Result<f64, HolomorphicError> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(HolomorphicError::NonPositiveParameter(a));
    }
    let f = |r: f64| scaled_equation(a, r);
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-14 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let r = 0.5 * (lo + hi);
    let (r3, r5) = (r * r * r, r * r * r * r * r);
    let slope = 6.0 * r5 + 4.0 * r3 / (a * a);
    let polished = r - f(r) / slope;
    Ok(
        if polished > 0.0 && polished < 1.0 && f(polished).abs() <= f(r).abs() {
            polished
        } else {
            r
        },
    )
}

/// `u(z) = (c_1 z, c_2 z, c_3 / z^2)` on `r_inner <= |z| <= 1`; the family
/// proper has `c_1 = c_2 = c_3 = a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnulusMap {
    pub a: f64,
    pub r_inner: f64,
    pub coeffs: [f64; 3],
}

impl AnnulusMap {
    pub fn new(a: f64) -> Result<Self, HolomorphicError> {
        Ok(AnnulusMap {
            a,
            r_inner: solve_inner_radius(a)?,
            coeffs: [a, a, a],
        })
    }

    /// Same domain as the family member for `a`, first coefficient shifted by `eps`.
    pub fn perturbed(a: f64, eps: f64) -> Result<Self, HolomorphicError> {
        let mut m = Self::new(a)?;
        m.coeffs[0] += eps;
        Ok(m)
    }

    pub fn eval(&self, z: Complex64) -> [Complex64; 3] {
        let [c1, c2, c3] = self.coeffs;
        [z * c1, z * c2, Complex64::new(c3, 0.0) / (z * z)]
    }

    /// Complex derivative `u'(z)`.
    pub fn derivative(&self, z: Complex64) -> [Complex64; 3] {
        let [c1, c2, c3] = self.coeffs;
        [
            Complex64::new(c1, 0.0),
            Complex64::new(c2, 0.0),
            Complex64::new(-2.0 * c3, 0.0) / (z * z * z),
        ]
    }

    /// Real partial derivatives `(du/dx, du/dy)` in `R^6` ordered as
    /// `(Re u1, Im u1, Re u2, Im u2, Re u3, Im u3)`, from the real formulas.
    pub fn real_partials(&self, x: f64, y: f64) -> ([f64; 6], [f64; 6]) {
        let [c1, c2, c3] = self.coeffs;
        let r2 = x * x + y * y;
        let r6 = r2 * r2 * r2;
        // Re u3 = c3 (x^2 - y^2) / r^4, Im u3 = -2 c3 x y / r^4
        let p = c3 * (6.0 * x * y * y - 2.0 * x * x * x) / r6;
        let q = c3 * (2.0 * y * y * y - 6.0 * x * x * y) / r6;
        ([c1, 0.0, c2, 0.0, p, -q], [0.0, c1, 0.0, c2, q, p])
    }

    /// `|u'(z)|` for `|z| = rho`; it does not depend on the argument of `z`.
    pub fn speed(&self, rho: f64) -> f64 {
        let [c1, c2, c3] = self.coeffs;
        let r3 = rho * rho * rho;
        libm::sqrt(c1 * c1 + c2 * c2 + 4.0 * c3 * c3 / (r3 * r3))
    }

    /// `|du/dx|^2`, the area density of a holomorphic map.
    pub fn energy_density(&self, x: f64, y: f64) -> f64 {
        let (dx, _) = self.real_partials(x, y);
        dx.iter().map(|v| v * v).sum()
    }

    /// Residual of the defining equation divided by `a^2`.
    pub fn equation_residual(&self) -> f64 {
        scaled_equation(self.a, self.r_inner).abs()
    }

    /// `a^2 r^6 + r^4 - a^2` as written.
    pub fn absolute_residual(&self) -> f64 {
        self.a * self.a * self.equation_residual()
    }

    /// Conformal modulus `ln(1 / r_inner)` of the domain annulus.
    pub fn modulus(&self) -> f64 {
        -libm::log(self.r_inner)
    }
}

/// `H(z) = (|z1|^2 - |z3|^2, |z2|^2 - |z3|^2, Im(z1 z2 z3))`.
pub fn hamiltonian(w: &[Complex64; 3]) -> [f64; 3] {
    let n3 = w[2].norm_sqr();
    [
        w[0].norm_sqr() - n3,
        w[1].norm_sqr() - n3,
        (w[0] * w[1] * w[2]).im,
    ]
}

/// A level set `H^{-1}(c)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LagrangianFiber {
    pub c: [f64; 3],
}

impl LagrangianFiber {
    pub fn residual(&self, w: &[Complex64; 3]) -> f64 {
        let h = hamiltonian(w);
        (0..3).map(|i| (h[i] - self.c[i]).abs()).fold(0.0, f64::max)
    }

    /// Each component of `H - c` divided by the size of the terms it is
    /// built from (at least 1): `|z1|^2 + |z3|^2`, `|z2|^2 + |z3|^2` and
    /// `|z1 z2 z3|`. Roundoff in `H` grows with those terms, so this stays
    /// near machine precision for large maps where `residual` cannot.
    pub fn relative_residual(&self, w: &[Complex64; 3]) -> f64 {
        let h = hamiltonian(w);
        let n = [w[0].norm_sqr(), w[1].norm_sqr(), w[2].norm_sqr()];
        let scale = [n[0] + n[2], n[1] + n[2], libm::sqrt(n[0] * n[1] * n[2])];
        (0..3)
            .map(|i| (h[i] - self.c[i]).abs() / scale[i].max(1.0))
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Outer,
    Inner,
}

impl Boundary {
    /// The outer circle lies on `L_0 = H^{-1}(0,0,0)`, the inner one on
    /// `L_1 = H^{-1}(-1,-1,0)`.
    pub fn fiber(self) -> LagrangianFiber {
        match self {
            Boundary::Outer => LagrangianFiber { c: [0.0, 0.0, 0.0] },
            Boundary::Inner => LagrangianFiber {
                c: [-1.0, -1.0, 0.0],
            },
        }
    }

    pub fn radius(self, m: &AnnulusMap) -> f64 {
        match self {
            Boundary::Outer => 1.0,
            Boundary::Inner => m.r_inner,
        }
    }
}

fn max_on_boundary(
    m: &AnnulusMap,
    which: Boundary,
    samples: usize,
    f: impl Fn(&[Complex64; 3]) -> f64,
) -> f64 {
    let r = which.radius(m);
    (0..samples.max(1))
        .map(|j| {
            f(&m.eval(Complex64::from_polar(
                r,
                2.0 * PI * j as f64 / samples.max(1) as f64,
            )))
        })
        .fold(0.0, f64::max)
}

/// Largest distance from `H(u(z))` to the boundary's fiber value over
/// `samples` equally spaced points of the boundary circle.
pub fn fiber_residual(m: &AnnulusMap, which: Boundary, samples: usize) -> f64 {
    let fiber = which.fiber();
    max_on_boundary(m, which, samples, |w| fiber.residual(w))
}

/// As `fiber_residual`, with `LagrangianFiber::relative_residual`.
pub fn relative_fiber_residual(m: &AnnulusMap, which: Boundary, samples: usize) -> f64 {
    let fiber = which.fiber();
    max_on_boundary(m, which, samples, |w| fiber.relative_residual(w))
}

/// Cauchy-Riemann defect `|du/dy - J du/dx|` at `(x, y)`.
pub fn cauchy_riemann_residual(m: &AnnulusMap, x: f64, y: f64) -> f64 {
    let (dx, dy) = m.real_partials(x, y);
    (0..3)
        .map(|k| {
            (dx[2 * k] - dy[2 * k + 1])
                .abs()
                .max((dy[2 * k] + dx[2 * k + 1]).abs())
        })
        .fold(0.0, f64::max)
}

const ANGULAR_NODES: usize = 256;

/// Area with `order`-point Gauss-Legendre panels in `s = ln|z|` and the
/// default angular resolution.
pub fn area(m: &AnnulusMap, order: usize) -> f64 {
    area_with(m, order, ANGULAR_NODES)
}

/// `int |du/dx|^2 dx dy` over the annulus, written as
/// `int int |du/dx|^2 e^{2s} ds dtheta` on `[ln r, 0] x [0, 2pi)`.
///
/// The radial direction uses composite Gauss-Legendre panels of width at
/// most 1/2 in `s`, so the integrand stays resolved when `r -> 0`; the
/// angular direction uses the trapezoid rule.
pub fn area_with(m: &AnnulusMap, radial_order: usize, angular: usize) -> f64 {
    let rule = GaussLegendre::new(radial_order.max(1));
    let s0 = libm::log(m.r_inner);
    let panels = libm::ceil(-s0 / 0.5).max(1.0) as usize;
    let dtheta = 2.0 * PI / angular as f64;
    let angles: Vec<(f64, f64)> = (0..angular)
        .map(|j| {
            let th = dtheta * j as f64;
            (libm::cos(th), libm::sin(th))
        })
        .collect();
    let mut total = 0.0;
    for p in 0..panels {
        let a = s0 + (-s0) * p as f64 / panels as f64;
        let b = s0 + (-s0) * (p + 1) as f64 / panels as f64;
        for (s, w) in rule.points(a, b) {
            let rho = libm::exp(s);
            let ring: f64 = angles
                .iter()
                .map(|&(c, sn)| m.energy_density(rho * c, rho * sn))
                .sum();
            total += w * rho * rho * ring * dtheta;
        }
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryLengths {
    pub outer: f64,
    pub inner: f64,
}

impl BoundaryLengths {
    pub fn total(&self) -> f64 {
        self.outer + self.inner
    }
}

fn circle_length(m: &AnnulusMap, r: f64, samples: usize) -> f64 {
    let dtheta = 2.0 * PI / samples as f64;
    (0..samples)
        .map(|j| {
            let z = Complex64::from_polar(r, dtheta * j as f64);
            let d = m.derivative(z);
            libm::sqrt(d.iter().map(|c| c.norm_sqr()).sum::<f64>()) * r * dtheta
        })
        .sum()
}

/// Lengths of the images of the two boundary circles (trapezoid rule in
/// the angle, exact here because the speed does not depend on it).
pub fn boundary_length(m: &AnnulusMap) -> BoundaryLengths {
    BoundaryLengths {
        outer: circle_length(m, 1.0, ANGULAR_NODES),
        inner: circle_length(m, m.r_inner, ANGULAR_NODES),
    }
}

/// `ln |u'|` sampled along both boundary circles, as a field on two circle
/// components (outer first) of lengths `2 pi` and `2 pi r_inner`.
pub fn boundary_log_density(
    m: &AnnulusMap,
    samples: usize,
) -> Result<PiecewiseScalarField<f64>, HypographError> {
    let samples = samples.max(1);
    let mut components = Vec::new();
    let mut breakpoints = Vec::new();
    for which in [Boundary::Outer, Boundary::Inner] {
        let r = which.radius(m);
        let length = 2.0 * PI * r;
        let pts: Vec<(f64, f64)> = (0..samples)
            .map(|j| {
                let th = 2.0 * PI * j as f64 / samples as f64;
                (r * th, libm::log(m.speed(r)))
            })
            .collect();
        components.push(Component {
            kind: ComponentKind::Circle,
            length,
        });
        breakpoints.push(pts);
    }
    let xi = breakpoints
        .iter()
        .flatten()
        .map(|p| p.1)
        .fold(f64::INFINITY, f64::min);
    PiecewiseScalarField::new(Domain1D::new(components)?, breakpoints, xi)
}
