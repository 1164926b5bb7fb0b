//! Error taxonomy shared by the library modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    /// A point lies outside the domain required by the operation
    /// (e.g. outside the unit ball for Bergman-side geometry).
    #[error("domain error: {0}")]
    Domain(String),

    /// An invalid numeric/structural parameter.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Quadrature refinement disagreement exceeded the declared gate.
    #[error("quadrature did not converge: {context} (refinement disagreement {disagreement:.3e} > gate {gate:.3e})")]
    QuadratureNonconvergence {
        context: String,
        disagreement: f64,
        gate: f64,
    },

    /// Finite-difference recursion disagreement exceeded 10x the requested tolerance.
    #[error("polarization instability: Richardson disagreement {disagreement:.3e} exceeds 10x tolerance {tolerance:.3e}")]
    Instability { disagreement: f64, tolerance: f64 },

    /// A partition-of-unity denominator vanished inside the covered region.
    #[error("coverage error: {0}")]
    Coverage(String),

    /// Operator shapes/spaces do not match.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Unknown symbol or experiment identifier.
    #[error("unknown id: {0}")]
    UnknownId(String),
}

pub type Result<V> = std::result::Result<V, CoreError>;
