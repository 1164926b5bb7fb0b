//! Numerical operator calculus on the Fock space `F^p_t(C^n)` and the Bergman
//! space `L^p_a(B_n)` at truncated (desk) scale.
//!
//! The library models analytic functions by their coefficient vectors in the
//! orthonormal monomial basis up to a total degree `N`, and operators by dense
//! complex matrices acting on coefficient space. On top of that it provides:
//!
//! * reproducing kernels, normalized kernel vectors, and weighted quadrature
//!   exact on monomial pairs ([`fock`], [`bergman`], [`quad`]);
//! * Weyl translation unitaries and Mobius covariance unitaries with their
//!   group/covariance laws as testable matrix identities;
//! * Toeplitz compressions, rank-one kernel tensors, Berezin transforms,
//!   operator-norm protocols, and weak-localization scans ([`operators`]);
//! * Euclidean and hyperbolic lattice machinery: separated sets, greedy
//!   conflict-graph partitions, smooth bumps, partitions of unity ([`geometry`]);
//! * discretized integral representations of operators by rank-one kernel
//!   tensors and the Toeplitz synthesis pipeline for compact operators
//!   ([`represent`]).
//!
//! Everything is generic over the real scalar through [`scalar::Real`]
//! (instantiated at `f32` or `f64`); concrete `f64` aliases live at the crate
//! root.

pub mod bergman;
pub mod error;
pub mod fock;
pub mod geometry;
pub mod linalg;
pub mod multiindex;
pub mod operators;
pub mod quad;
pub mod report;
pub mod represent;
pub mod scalar;
pub mod symbols;

pub use error::CoreError;
pub use scalar::Real;

/// Library version embedded in every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Which space a vector/operator lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Fock,
    Bergman,
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Space::Fock => write!(f, "fock"),
            Space::Bergman => write!(f, "bergman"),
        }
    }
}

// Concrete double-precision aliases.
pub type Point64 = geometry::Point<f64>;
pub type Lattice64 = geometry::Lattice<f64>;
pub type OperatorMatrix64 = linalg::OperatorMatrix<f64>;
pub type FockParams64 = fock::FockParams<f64>;
pub type BergmanParams64 = bergman::BergmanParams<f64>;
// pub type SymbolFn64 = symbols::SymbolFn<f64>;
