//! Hypographs of piecewise-linear functions on compact 1-manifolds: level
//! segments, their tree-like order, the partition into tree classes, the
//! thickened hypograph, thin necks and the counting bounds built on them.
//!
//! Everything is generic over [`Scalar`](crate::scalar::Scalar): with
//! [`Rational`](crate::scalar::Rational) the combinatorics is exact, with
//! `f64` exponential thresholds become available.

mod bounds;
mod disks;
mod field;
mod forest;
mod levels;
mod segment;
mod thick;
mod thicken;
mod threshold;
mod tree;

pub use bounds::{count_local_maxima, verify_cardinality_bounds, BoundCheck, BoundsReport};
pub use disks::{
    dense_disk_assignment, discretize_thick_part, DenseDisk, DiscretizationLevel,
    DiscretizedSegment, DiskAssignment, DiskSegment,
};
pub use field::{Component, ComponentKind, Domain1D, PiecewiseScalarField, RadiusProfile};
pub use forest::{stable_forest_reduce, Forest};
pub use levels::{Interval, LevelSet};
pub use segment::{
    compare_segments, e_segment, level_slice, segment_distance, Arc, ESegment, SegmentOrder,
};
pub use thick::{
    thick_thin_partition, HypographPartition, Status, StatusRun, ThickPiece, ThinNeck,
};
pub use thicken::{thickened_hypograph, ComponentConditions, Fill, Thickening};
pub use threshold::{PartitionParams, Threshold};
pub use tree::{tree_partition, LevelInterval, TreeClass, TreePartition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HypographError {
    #[error("domain has no components")]
    EmptyDomain,
    #[error("component {0} has nonpositive or non-finite length")]
    NonPositiveLength(usize),
    #[error("expected breakpoints for {expected} components, found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("component {0} has no breakpoints")]
    EmptyComponent(usize),
    #[error("breakpoint {index} of component {component} is not strictly after its predecessor")]
    NotIncreasing { component: usize, index: usize },
    #[error("breakpoint {index} of component {component} lies outside the component")]
    PositionOutOfRange { component: usize, index: usize },
    #[error("interval component {0} needs breakpoints at both ends")]
    IntervalEnds(usize),
    #[error("breakpoint {index} of component {component} is below the base level")]
    BelowBase { component: usize, index: usize },
    #[error("breakpoint {index} of component {component} is not finite")]
    NonFinite { component: usize, index: usize },
    #[error("no component {0}")]
    NoComponent(usize),
    #[error("position outside component")]
    OutsideComponent,
    #[error("point is not in the hypograph")]
    NotInHypograph,
    #[error("segments come from different fields")]
    MixedFields,
    #[error("radius profile value {index} of component {component} is not positive")]
    NonPositiveRadius { component: usize, index: usize },
    #[error("radius profile of component {component} is steeper than 1 after breakpoint {index}")]
    RadiusNotLipschitz { component: usize, index: usize },
    #[error("exact mode needs piecewise-constant thresholds")]
    ExactNeedsStaircase,
    #[error("threshold is not positive and non-increasing")]
    BadThreshold,
    #[error("invalid partition parameters: {0}")]
    BadParams(&'static str),
    #[error("filling level on component {0} is unbounded")]
    UnboundedFill(usize),
    #[error("segment {0} is shorter than 8 e^-t")]
    SegmentTooShort(usize),
    #[error("segment {0} has no point of the base hypograph away from its ends")]
    NoDensePoint(usize),
    #[error("forest parent pointers contain a cycle through node {0}")]
    Cycle(usize),
    #[error("forest node {0} out of range")]
    NodeOutOfRange(usize),
    #[error("total measure and delta1 must be positive")]
    NonPositiveMeasure,
}
