//! Regularized Casimir energies per unit plate area for quantum fields
//! between parallel flat surfaces.
//!
//! The mode sum over eigenfrequencies is rewritten as a contour integral of
//! the logarithm of the continued eigencondition K(z) = G(iz); after
//! subtracting the divergent growth factor, the finite separation-dependent
//! energy is a rapidly convergent semi-infinite integral over a reflection
//! kernel:
//!
//!   e(mu) = (alpha g / (4 pi^2)) int_mu^inf z sqrt(z^2 - mu^2)
//!            ln(1 + R(z) e^{-sigma z}) dz,
//!
//! with e(mu) = E l^3 / (hbar c L^2) dimensionless. Two independent oracles
//! guard the pipeline: a partial-fraction sum over computed roots checks the
//! underlying Mittag-Leffler identity, and a termwise Bessel-function series
//! checks the quadrature for constant-reflection models.
//!
//! The crate is `no_std` (with `alloc`); IO, the CLI, and file formats live
//! in the companion `casimir-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod math;

pub mod bessel;
pub mod energy;
pub mod models;
pub mod quadrature;
pub mod roots;
pub mod spectral;

pub use energy::{
    casimir_coefficient, massless_closed_form, series_coefficient, EnergyCoefficient, EnergyError,
};
pub use models::{BoundaryModel, ModelError, ModelKind, CATALOG_NAMES};
pub use quadrature::{integrate_kernel, QuadratureSpec, ToleranceNotMet};
pub use roots::{find_roots, RootList};

pub use math::{sinc, sinhc};
