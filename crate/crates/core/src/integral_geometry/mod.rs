//! Curves in real projective space and Cauchy-Crofton length estimation.
//!
//! A curve is a polyline of unit representatives in `R^{n+1}`. Consecutive
//! representatives are sign-aligned at construction, so the number of
//! intersections with a hyperplane is the number of sign changes of
//! `<p_i, normal>` along the lifted polyline.

mod crofton;
mod curve;
pub mod generators;

pub use crofton::{
    crofton_counts, crofton_length, verify_projective_rii, CroftonEstimate, CroftonRun, RiiCheck,
};
pub use curve::{count_intersections, normalized_length, Hyperplane, ProjectiveCurve};

/// Vertices closer than this to a hyperplane count as incident.
pub const INCIDENCE_TOLERANCE: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CurveError {
    #[error("ambient dimension must be at least 1")]
    Dimension,
    #[error("point {index} has {found} coordinates, expected {expected}")]
    Arity {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("point {0} is not a finite unit vector")]
    NotUnit(usize),
    #[error("points {0} and {1} are orthogonal, the segment between them is ambiguous")]
    Ambiguous(usize, usize),
    #[error("a curve needs at least two points")]
    TooShort,
    #[error("normal vector is not a finite unit vector")]
    BadNormal,
    #[error("hyperplane dimension {found} does not match the curve ({expected})")]
    NormalArity { found: usize, expected: usize },
    #[error("vertex {0} lies on the hyperplane")]
    DegenerateIncidence(usize),
    #[error("at least 100 samples are required, got {0}")]
    TooFewSamples(usize),
    #[error("degree must be positive")]
    NonPositiveDegree,
}
