//! The annulus family `z -> (a z, a z, a / z^2)` on `r_a <= |z| <= 1`, whose
//! area stays `2 pi` while its boundary length grows linearly in `a`, plus
//! numeric checks of thick-thin behaviour for sampled energy densities.

mod annulus;
mod energy;

pub use annulus::{
    area, area_with, boundary_length, boundary_log_density, cauchy_riemann_residual,
    fiber_residual, hamiltonian, relative_fiber_residual, solve_inner_radius, AnnulusMap, Boundary,
    BoundaryLengths, LagrangianFiber,
};
pub use energy::{
    check_thick_thin, CylinderDecay, EnergyDensityField, ThickThinCheckReport, ThickThinConfig,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HolomorphicError {
    #[error("parameter a must be positive and finite, got {0}")]
    NonPositiveParameter(f64),
    #[error("grid needs positive dimensions and {expected} finite nonnegative values")]
    BadGrid { expected: usize },
    #[error("grid too coarse: no disk of radius 4 cells fits")]
    GridTooCoarse,
    #[error("thick-thin parameters must be positive")]
    BadConfig,
}
