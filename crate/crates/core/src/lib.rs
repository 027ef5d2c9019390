//! Phase-space quantum kinetics toolbox.
//!
//! The crate provides a periodic spectral substrate ([`grid`]), wave-function
//! and density-operator factories ([`states`]), Wigner transforms and velocity
//! moments ([`wigner`]), split-step evolution for the Schrödinger, von Neumann
//! and Wigner equations plus classical free transport ([`dynamics`]),
//! velocity-average / Sobolev-norm sweep harnesses ([`averaging`]), a
//! pure-state detector built on the log-Hessian characterization of rank-one
//! Wigner transforms ([`purity`]), and Madelung / quantum-hydrodynamics
//! residual diagnostics ([`qhd`]).

pub mod averaging;
pub mod dynamics;
pub mod error;
pub mod grid;
pub mod purity;
pub mod qhd;
pub mod report;
pub mod states;
pub mod wigner;

pub use error::{LabError, Result};
