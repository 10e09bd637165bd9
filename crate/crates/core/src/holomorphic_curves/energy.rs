use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{AnnulusMap, HolomorphicError};

/// Energy density sampled at cell centers of a flat `rows x cols` grid with
/// cell sizes `dr` (first coordinate) and `dtheta` (second coordinate).
/// Row-major values.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyDensityField {
    pub rows: usize,
    pub cols: usize,
    pub dr: f64,
    pub dtheta: f64,
    pub values: Vec<f64>,
}

impl EnergyDensityField {
    pub fn new(
        rows: usize,
        cols: usize,
        dr: f64,
        dtheta: f64,
        values: Vec<f64>,
    ) -> Result<Self, HolomorphicError> {
        let expected = rows * cols;
        let ok = rows > 0
            && cols > 0
            && dr > 0.0
            && dtheta > 0.0
            && dr.is_finite()
            && dtheta.is_finite()
            && values.len() == expected
            && values.iter().all(|v| v.is_finite() && *v >= 0.0);
        if !ok {
            return Err(HolomorphicError::BadGrid { expected });
        }
        Ok(EnergyDensityField {
            rows,
            cols,
            dr,
            dtheta,
            values,
        })
    }

    pub fn uniform(
        rows: usize,
        cols: usize,
        dr: f64,
        dtheta: f64,
        density: f64,
    ) -> Result<Self, HolomorphicError> {
        Self::new(rows, cols, dr, dtheta, alloc::vec![density; rows * cols])
    }

    /// Pull-back of the map's energy density to the flat cylinder
    /// `[ln r_inner, 0] x S^1` through `z = e^{s + i theta}`; the density
    /// there is `|u'(z)|^2 |z|^2`.
    pub fn from_annulus(
        m: &AnnulusMap,
        rows: usize,
        cols: usize,
    ) -> Result<Self, HolomorphicError> {
        if rows == 0 || cols == 0 {
            return Err(HolomorphicError::BadGrid {
                expected: rows * cols,
            });
        }
        let s0 = libm::log(m.r_inner);
        let dr = -s0 / rows as f64;
        let dtheta = 2.0 * PI / cols as f64;
        let mut values = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            let s = s0 + (i as f64 + 0.5) * dr;
            let rho = libm::exp(s);
            for j in 0..cols {
                let th = (j as f64 + 0.5) * dtheta;
                values.push(m.energy_density(rho * libm::cos(th), rho * libm::sin(th)) * rho * rho);
            }
        }
        Self::new(rows, cols, dr, dtheta, values)
    }

    /// True when the second coordinate closes up into a circle.
    pub fn periodic(&self) -> bool {
        (self.cols as f64 * self.dtheta - 2.0 * PI).abs() < 1e-9
    }

    pub fn cell_area(&self) -> f64 {
        self.dr * self.dtheta
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.cols + j]
    }

    pub fn total(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.cell_area()
    }

    fn row_mass(&self, i: usize) -> f64 {
        self.values[i * self.cols..(i + 1) * self.cols]
            .iter()
            .sum::<f64>()
            * self.cell_area()
    }

    /// Mass of the flat disk of radius `r` around the center of cell `(ci, cj)`.
    fn disk_mass(&self, ci: usize, cj: usize, r: f64) -> f64 {
        let periodic = self.periodic();
        let span_i = libm::ceil(r / self.dr) as i64 + 1;
        let span_j = (libm::ceil(r / self.dtheta) as i64 + 1).min(self.cols as i64);
        let mut mass = 0.0;
        for di in -span_i..=span_i {
            let i = ci as i64 + di;
            if i < 0 || i >= self.rows as i64 {
                continue;
            }
            let y = di as f64 * self.dr;
            for dj in -span_j..=span_j {
                let j = if periodic {
                    if 2 * dj.abs() > self.cols as i64 || (2 * dj == self.cols as i64) {
                        continue;
                    }
                    (cj as i64 + dj).rem_euclid(self.cols as i64)
                } else {
                    let j = cj as i64 + dj;
                    if j < 0 || j >= self.cols as i64 {
                        continue;
                    }
                    j
                };
                let x = dj as f64 * self.dtheta;
                if x * x + y * y <= r * r {
                    mass += self.value(i as usize, j as usize);
                }
            }
        }
        mass * self.cell_area()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThickThinConfig {
    pub delta1: f64,
    pub delta2: f64,
    /// Threshold on the gradient ratio beyond which a disk counts as a violation.
    pub c1: f64,
    pub c2: f64,
}

impl Default for ThickThinConfig {
    fn default() -> Self {
        ThickThinConfig {
            delta1: 0.1,
            delta2: 0.05,
            c1: 1.0,
            c2: 1.0,
        }
    }
}

/// Decay fit on one sub-cylinder `[start, end]` (first coordinate).
#[derive(Debug, Clone, PartialEq)]
pub struct CylinderDecay {
    pub start: f64,
    pub end: f64,
    pub modulus: f64,
    pub mass: f64,
    pub points: usize,
    /// Least-squares `c_3` in `mu(C(t,t)) ~ e^{-c_3 t} mu(I)`.
    pub decay_exponent: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThickThinCheckReport {
    pub empirical_c1: f64,
    pub gradient_violations: usize,
    pub disks_tested: usize,
    pub cylinders: Vec<CylinderDecay>,
    pub config: ThickThinConfig,
}

const DISK_RADII_CELLS: [f64; 5] = [4.0, 6.0, 8.0, 12.0, 16.0];

/// Samples disks of radius 4 to 16 cells at `disk_samples` spread-out
/// centers and `cylinder_splits` nested sub-cylinders, and reports the
/// empirical gradient ratio `density(center) r^2 / mu(U)` over disks with
/// `mu(U) < delta1`, plus decay exponents over sub-cylinders with
/// `mu < delta2` and `Mod > 2 c2`.
pub fn check_thick_thin(
    field: &EnergyDensityField,
    config: ThickThinConfig,
    disk_samples: usize,
    cylinder_splits: usize,
) -> Result<ThickThinCheckReport, HolomorphicError> {
    let positive = |x: f64| x > 0.0 && x.is_finite();
    if !(positive(config.delta1)
        && positive(config.delta2)
        && positive(config.c1)
        && positive(config.c2))
    {
        return Err(HolomorphicError::BadConfig);
    }
    let cell = field.dr.max(field.dtheta);
    let height = field.rows as f64 * field.dr;
    let width = field.cols as f64 * field.dtheta;
    let periodic = field.periodic();
    let fits = |ci: usize, cj: usize, r: f64| {
        let s = (ci as f64 + 0.5) * field.dr;
        let th = (cj as f64 + 0.5) * field.dtheta;
        let radial = s - r >= 0.0 && s + r <= height;
        let angular = if periodic {
            2.0 * r < width
        } else {
            th - r >= 0.0 && th + r <= width
        };
        radial && angular
    };

    let mut any_fit = false;
    let mut empirical_c1: f64 = 0.0;
    let mut violations = 0;
    let mut tested = 0;
    for k in 0..disk_samples {
        // rows evenly spaced, columns by golden-ratio rotation
        let u = (k as f64 + 0.5) / disk_samples as f64;
        let v = (k as f64 * 0.618_033_988_749_894_9 + 0.5) % 1.0;
        let ci = ((u * field.rows as f64) as usize).min(field.rows - 1);
        let cj = ((v * field.cols as f64) as usize).min(field.cols - 1);
        for &cells in &DISK_RADII_CELLS {
            let r = cells * cell;
            if !fits(ci, cj, r) {
                continue;
            }
            any_fit = true;
            let mass = field.disk_mass(ci, cj, r);
            if mass >= config.delta1 {
                continue;
            }
            tested += 1;
            let ratio = if mass > 0.0 {
                field.value(ci, cj) * r * r / mass
            } else {
                0.0
            };
            empirical_c1 = empirical_c1.max(ratio);
            if ratio > config.c1 {
                violations += 1;
            }
        }
    }
    if !any_fit && !(0..field.rows).any(|ci| (0..field.cols).any(|cj| fits(ci, cj, 4.0 * cell))) {
        return Err(HolomorphicError::GridTooCoarse);
    }

    let row_mass: Vec<f64> = (0..field.rows).map(|i| field.row_mass(i)).collect();
    let mass_of = |a: usize, b: usize| row_mass[a..b].iter().sum::<f64>();
    let mut cylinders = Vec::new();
    let step = field.rows / (2 * (cylinder_splits + 1));
    for k in 0..cylinder_splits {
        let (a, b) = (k * step, field.rows - k * step);
        if b <= a {
            break;
        }
        let modulus = (b - a) as f64 * field.dr;
        let mass = mass_of(a, b);
        if !(modulus > 2.0 * config.c2 && mass < config.delta2 && mass > 0.0) {
            continue;
        }
        let mut pts = Vec::new();
        let mut q = 1;
        while 2 * q < b - a {
            let t = q as f64 * field.dr;
            if t > config.c2 {
                let inner = mass_of(a + q, b - q);
                if inner > 0.0 {
                    pts.push((t, libm::log(inner / mass)));
                }
            }
            q += 1;
        }
        if pts.len() < 2 {
            continue;
        }
        let n = pts.len() as f64;
        let mt = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mt) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mt) * (p.0 - mt)).sum();
        cylinders.push(CylinderDecay {
            start: a as f64 * field.dr,
            end: b as f64 * field.dr,
            modulus,
            mass,
            points: pts.len(),
            decay_exponent: -sxy / sxx,
        });
    }

    Ok(ThickThinCheckReport {
        empirical_c1,
        gradient_violations: violations,
        disks_tested: tested,
        cylinders,
        config,
    })
}
