//! Geometry kernels for reverse isoperimetric estimates of holomorphic
//! curves: hypograph partitions of boundary data, Crofton length estimates
//! in real projective space, an explicit annulus family, and hyperbolic
//! collar and conformal formulas.

#![no_std]

extern crate alloc;

pub mod holomorphic_curves;
pub mod hyperbolic_geometry;
pub mod hypograph;
pub mod integral_geometry;
pub mod quadrature;
pub mod scalar;
