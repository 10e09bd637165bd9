use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{CurveError, INCIDENCE_TOLERANCE};

const UNIT_TOLERANCE: f64 = 1e-12;

/// Polyline in `RP^n` stored as sign-aligned unit vectors of `R^{n+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveCurve {
    n: usize,
    /// Row-major, `n + 1` coordinates per vertex, consecutive rows have
    /// positive inner product.
    coords: Vec<f64>,
    closed: bool,
    /// Sign of the first vertex as seen from the last one (closed curves).
    closing_sign: f64,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn angle_between(a: &[f64], b: &[f64]) -> f64 {
    // atan2(|a x b|, a.b) stays accurate for nearly parallel vectors
    let c = dot(a, b);
    let mut cross2 = 0.0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let m = a[i] * b[j] - a[j] * b[i];
            cross2 += m * m;
        }
    }
    libm::atan2(libm::sqrt(cross2), c)
}

impl ProjectiveCurve {
    /// Validates and sign-aligns `points` (each of length `n + 1`).
    pub fn new(n: usize, points: Vec<Vec<f64>>, closed: bool) -> Result<Self, CurveError> {
        if n == 0 {
            return Err(CurveError::Dimension);
        }
        if points.len() < 2 {
            return Err(CurveError::TooShort);
        }
        let dim = n + 1;
        let mut coords: Vec<f64> = Vec::with_capacity(points.len() * dim);
        for (index, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(CurveError::Arity {
                    index,
                    found: p.len(),
                    expected: dim,
                });
            }
            let norm2 = dot(p, p);
            if !norm2.is_finite() || (libm::sqrt(norm2) - 1.0).abs() > UNIT_TOLERANCE {
                return Err(CurveError::NotUnit(index));
            }
            let sign = if index == 0 {
                1.0
            } else {
                let prev = &coords[(index - 1) * dim..index * dim];
                let d = dot(prev, p);
                if d == 0.0 {
                    return Err(CurveError::Ambiguous(index - 1, index));
                }
                d.signum()
            };
            coords.extend(p.iter().map(|x| sign * x));
        }
        let mut closing_sign = 1.0;
        if closed {
            let m = points.len();
            let d = dot(&coords[(m - 1) * dim..], &coords[..dim]);
            if d == 0.0 {
                return Err(CurveError::Ambiguous(m - 1, 0));
            }
            closing_sign = d.signum();
        }
        Ok(ProjectiveCurve {
            n,
            coords,
            closed,
            closing_sign,
        })
    }

    /// Normalizes each point before validation.
    pub fn from_unnormalized(
        n: usize,
        points: Vec<Vec<f64>>,
        closed: bool,
    ) -> Result<Self, CurveError> {
        let normalized = points
            .into_iter()
            .map(|p| {
                let norm = libm::sqrt(dot(&p, &p));
                p.into_iter().map(|x| x / norm).collect()
            })
            .collect();
        Self::new(n, normalized, closed)
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.coords.len() / (self.n + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Sign-aligned representative of vertex `i`.
    pub fn point(&self, i: usize) -> &[f64] {
        let dim = self.n + 1;
        &self.coords[i * dim..(i + 1) * dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.n + 1)
    }

    /// Applies a linear map given as a row-major `(n+1) x (n+1)` matrix.
    pub fn transformed(&self, matrix: &[f64]) -> Result<Self, CurveError> {
        let dim = self.n + 1;
        let pts = self
            .points()
            .map(|p| {
                (0..dim)
                    .map(|r| dot(&matrix[r * dim..(r + 1) * dim], p))
                    .collect()
            })
            .collect();
        Self::from_unnormalized(self.n, pts, self.closed)
    }
}

/// Hyperplane through the origin of `R^{n+1}`, given by its unit normal.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    normal: Vec<f64>,
}

impl Hyperplane {
    pub fn new(normal: Vec<f64>) -> Result<Self, CurveError> {
        let norm2 = dot(&normal, &normal);
        if normal.is_empty()
            || !norm2.is_finite()
            || (libm::sqrt(norm2) - 1.0).abs() > UNIT_TOLERANCE
        {
            return Err(CurveError::BadNormal);
        }
        Ok(Hyperplane { normal })
    }

    pub fn normal(&self) -> &[f64] {
        &self.normal
    }
}

/// Sign changes of `<p, normal>` along the aligned polyline, including the
/// closing segment of closed curves.
pub(crate) fn count_with_normal(
    curve: &ProjectiveCurve,
    normal: &[f64],
) -> Result<usize, CurveError> {
    let mut first = 0.0;
    let mut prev = 0.0;
    let mut count = 0;
    for (i, p) in curve.points().enumerate() {
        let s = dot(p, normal);
        if s.abs() < INCIDENCE_TOLERANCE {
            return Err(CurveError::DegenerateIncidence(i));
        }
        if i == 0 {
            first = s;
        } else if (s > 0.0) != (prev > 0.0) {
            count += 1;
        }
        prev = s;
    }
    if curve.closed && (prev > 0.0) != (curve.closing_sign * first > 0.0) {
        count += 1;
    }
    Ok(count)
}

/// Number of points where the polyline meets `h`.
pub fn count_intersections(curve: &ProjectiveCurve, h: &Hyperplane) -> Result<usize, CurveError> {
    if h.normal.len() != curve.n + 1 {
        return Err(CurveError::NormalArity {
            found: h.normal.len(),
            expected: curve.n + 1,
        });
    }
    count_with_normal(curve, &h.normal)
}

/// Spherical length of the aligned polyline divided by `pi`, so that a
/// projective line has length 1.
pub fn normalized_length(curve: &ProjectiveCurve) -> f64 {
    let pts: Vec<&[f64]> = curve.points().collect();
    let mut total: f64 = pts.windows(2).map(|w| angle_between(w[0], w[1])).sum();
    if curve.closed {
        let last = pts[pts.len() - 1];
        let first: Vec<f64> = pts[0].iter().map(|x| curve.closing_sign * x).collect();
        total += angle_between(last, &first);
    }
    total / PI
}
