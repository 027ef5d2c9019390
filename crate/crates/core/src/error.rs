//! Error taxonomy shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("invalid grid axis: {0}")]
    BadAxis(String),

    #[error("axis {0} not present in field")]
    AxisMissing(String),

    #[error("empty axis subset for quadrature")]
    EmptyQuadrature,

    #[error("non-finite samples encountered in {0}")]
    NonFinite(String),

    #[error("invalid physical parameters: {0}")]
    BadParams(String),

    #[error("state factory precondition violated: {0}")]
    Margin(String),

    #[error("state validation failed: {0}")]
    BadState(String),

    #[error("grid cannot hold {requested} orthonormal modes with boundary decay; max feasible is {feasible}")]
    BasisTooLarge { requested: usize, feasible: usize },

    #[error("box overflow: |x ± hbar*y/2| leaves the x-box; need x-box length >= {needed:.6} (have {have:.6})")]
    BoxOverflow { needed: f64, have: f64 },

    #[error("velocity tail mass {measured:.3e} exceeds {limit:.3e}; increase v_max beyond {vmax:.6}")]
    TailMass { measured: f64, limit: f64, vmax: f64 },

    #[error("grid duality violated: {0}")]
    DualityMismatch(String),

    #[error("invalid evolution configuration: {0}")]
    BadEvolutionConfig(String),

    #[error("numerical failure at step {step}: {what}")]
    NumericalFailure { step: usize, what: String },

    #[error("field is not real: max |Im| = {residue:.3e} exceeds {limit:.3e} x magnitude")]
    ImaginaryResidue { residue: f64, limit: f64 },

    #[error("sobolev exponent s = {0} rejected (s >= 0 required)")]
    NegativeExponent(f64),

    #[error("mask too small: support fraction {0:.4} below {1:.4}")]
    MaskTooSmall(f64, f64),

    #[error("sweep requires at least {need} hbar values, got {got}")]
    SweepTooShort { need: usize, got: usize },

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, LabError>;
