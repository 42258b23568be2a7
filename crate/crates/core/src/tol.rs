//! Numeric tolerances shared across the crate.
//!
//! The weights themselves are exact-homogeneous constructions; these
//! constants only absorb double-precision arithmetic error.

/// Absolute threshold below which a weight value counts as zero
/// (zero-set membership).
pub const ZERO_TOL: f64 = 1e-12;

/// Relative tolerance for identities that hold exactly in real
/// arithmetic (homogeneity, norm products).
pub const REL_TOL: f64 = 1e-9;

/// Relative slack on the Cauchy–Schwarz–Bunjakowsky bound: ratios within
/// `1 + CSB_TOL` are clamped, anything beyond is a genuine violation.
pub const CSB_TOL: f64 = 1e-9;

/// Target accuracy of inverted angles (bisection output).
pub const ANGLE_TOL: f64 = 1e-10;

/// Per-grid-step threshold for "strictly decreasing" checks of Θ.
pub const STRICT_TOL: f64 = 1e-12;

/// Sphere-membership tolerance for concave-corner verification.
pub const CORNER_TOL: f64 = 1e-9;

/// Relative tolerance for comparisons against sampled convex hulls.
pub const HULL_TOL: f64 = 1e-3;

/// Allowed gap between Θ(∓10⁶) and its limits {π, 0}.
pub const ENDPOINT_TOL: f64 = 1e-4;

/// Absolute angle tolerance used by the axiom checkers. arccos amplifies
/// ulp-level errors in its argument to ~1e-8 near ±1, so axiom equalities
/// cannot be asserted tighter than this.
pub const AXIOM_TOL: f64 = 1e-7;
