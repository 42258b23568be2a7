//! Generalized angles and polar coordinates in homogeneously weighted
//! real vector spaces.
//!
//! A *homogeneous weight* on ℝ² is a continuous nonnegative functional
//! `‖·‖` with `‖r·v‖ = |r|·‖v‖`; no triangle inequality is assumed. On
//! top of such weights this crate builds:
//!
//! - the spade product `⟨x|y⟩♠ = ¼‖x‖‖y‖(‖x̂+ŷ‖² − ‖x̂−ŷ‖²)` and the
//!   Thy angle `arccos(⟨x|y⟩♠ / ‖x‖‖y‖)` ([`angle`]),
//! - numerical verification of the angle-space axioms An1–An11 with
//!   machine-readable witnesses ([`axioms`]),
//! - polar coordinates in 2-D normed planes via monotone inversion of
//!   `t ↦ ∠(x, y + t·x)` ([`polar`]),
//! - the convex-hull gauge (Minkowski functional of the hull of the unit
//!   ball) and the generalized Thy angle it induces ([`convexify`]),
//! - concave-corner detection and the Cauchy–Schwarz–Bunjakowsky
//!   counterexamples such corners force ([`corners`]),
//! - Euclidean-plane projection lemmas used as independent test oracles
//!   ([`plane_geometry`]).
//!
//! The `angle-space` binary exposes everything as CLI subcommands that
//! emit CSV/JSON for scripting.

pub mod angle;
pub mod axioms;
pub mod cli;
pub mod convexify;
pub mod corners;
mod error;
pub mod plane_geometry;
pub mod polar;
pub mod sampling;
pub mod tol;
mod vec2;
pub mod weights;

pub use angle::AngleResult;
pub use error::Error;
pub use vec2::Vec2;
pub use weights::Weight;

/// Crate result alias.
pub type Result<T> = std::result::Result<T, Error>;
