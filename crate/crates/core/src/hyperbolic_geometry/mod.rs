//! Collar geometry, conformal invariants of rotationally symmetric metrics,
//! tameness of geodesics on flat cylinders and minimum-spanning bridge chains.

mod bridges;
mod collar;
mod metric;
mod tame;

pub use bridges::{
    admissible_chain, minimum_spanning_tree, tree_path, BridgeGraph, Chain, Edge, ExchangeCheck,
};
pub use collar::{
    collar_width, injrad_in_collar, injrad_ratio, injrad_ratio_scan, proof_ratio_bound, CollarData,
    RatioScan,
};
pub use metric::{conformal_radius, fit_conformal_constant, modulus, Curvature, MetricProfile};
pub use tame::{is_k_tame, length_within, CylinderPolyline, SubCylinder, TameReport};

/// Errors raised by the hyperbolic and conformal calculators.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("geodesic length must be positive and finite, got {0}")]
    NonPositiveLength(f64),
    #[error("distance {d} lies outside the collar range [0, {width}]")]
    DistanceOutOfRange { d: f64, width: f64 },
    #[error("interval [{a}, {b}] leaves the domain of the metric profile")]
    OutsideProfile { a: f64, b: f64 },
    #[error("radius {0} is outside the domain of the curvature model")]
    RadiusOutOfDomain(f64),
    #[error("curvature must be -1, 0 or 1, got {0}")]
    Curvature(i32),
    #[error("quadrature did not converge (estimate {0})")]
    Quadrature(f64),
    #[error("empty grid")]
    EmptyGrid,
    #[error("polyline point {0} leaves the cylinder")]
    OutsideCylinder(usize),
    #[error("length matrix must be {n}x{n}, got {len} entries")]
    MatrixShape { n: usize, len: usize },
    #[error("bridge length at ({i}, {j}) must be positive and symmetric")]
    InvalidLength { i: usize, j: usize },
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("query vertices must be distinct")]
    SameVertex,
    #[error("bridge graph is disconnected")]
    Disconnected,
}
