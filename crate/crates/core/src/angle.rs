//! The spade product, the Thy angle, the Euclidean-angle oracle, and the
//! auxiliary maps `h₊`, `h₋`, `Θ`.
//!
//! For unit vectors `x̂ = x/‖x‖`, `ŷ = y/‖y‖` the spade product is
//!
//! ```text
//! ⟨x|y⟩♠ = ¼·‖x‖·‖y‖·(‖x̂+ŷ‖² − ‖x̂−ŷ‖²)
//! ```
//!
//! and the Thy angle is `arccos(⟨x|y⟩♠ / (‖x‖·‖y‖))` whenever the ratio
//! lies in `[-1, 1]`. For seminorms it always does (CSB inequality); for
//! weights with a non-convex unit ball it can exceed the bound, which is
//! reported as a [`AngleResult::Violation`] rather than an error — such
//! violations are meaningful results, not failures.

use serde::Serialize;

use crate::error::Error;
use crate::tol::{CSB_TOL, ZERO_TOL};
use crate::vec2::Vec2;
use crate::weights::Weight;
use crate::Result;

/// Outcome of an angle computation: an angle in `[0, π]`, or the CSB
/// violation that prevented one.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum AngleResult {
    /// Angle in radians, in `[0, π]`.
    Angle(f64),
    /// `|product| > bound·(1 + CSB_TOL)`: the cosine ratio left `[-1, 1]`
    /// by more than rounding can explain.
    Violation { product: f64, bound: f64 },
}

impl AngleResult {
    pub fn angle(&self) -> Option<f64> {
        match self {
            AngleResult::Angle(a) => Some(*a),
            AngleResult::Violation { .. } => None,
        }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, AngleResult::Violation { .. })
    }

    /// Unwrap the angle, mapping a violation to [`Error::InternalInconsistency`].
    /// For use where the weight is known to be a (semi)norm.
    pub fn expect_angle(&self) -> Result<f64> {
        match self {
            AngleResult::Angle(a) => Ok(*a),
            AngleResult::Violation { product, bound } => Err(Error::InternalInconsistency(
                format!("unexpected CSB violation: |{product}| > {bound}"),
            )),
        }
    }
}

/// `⟨x|y⟩♠`. Total: 0 when `‖x‖·‖y‖ = 0`.
pub fn spade_product(w: &Weight, x: Vec2, y: Vec2) -> f64 {
    let nx = w.eval(x);
    let ny = w.eval(y);
    if nx <= ZERO_TOL || ny <= ZERO_TOL {
        return 0.0;
    }
    let (hp2, hm2) = normalized_sq_terms(w, x, nx, y, ny);
    0.25 * nx * ny * (hp2 - hm2)
}

/// Squared weights of `x̂ + ŷ` and `x̂ − ŷ`.
fn normalized_sq_terms(w: &Weight, x: Vec2, nx: f64, y: Vec2, ny: f64) -> (f64, f64) {
    let xh = x.scale(1.0 / nx);
    let yh = y.scale(1.0 / ny);
    let hp = w.eval(xh + yh);
    let hm = w.eval(xh - yh);
    (hp * hp, hm * hm)
}

/// The Thy angle `arccos(⟨x|y⟩♠ / (‖x‖·‖y‖))`.
///
/// The cosine ratio is computed directly from the normalized vectors, so
/// the `‖x‖·‖y‖` factors never enter numerically. Ratios within a
/// rounding envelope of ±1 are snapped to exact endpoints: at working
/// precision such a ratio is indistinguishable from the exact value, and
/// `arccos` would otherwise turn an ulp of noise into ~1e-8 of angle.
pub fn thy_angle(w: &Weight, x: Vec2, y: Vec2) -> Result<AngleResult> {
    let nx = w.eval(x);
    let ny = w.eval(y);
    if nx <= ZERO_TOL || ny <= ZERO_TOL {
        return Err(Error::ZeroSetVector);
    }
    let (hp2, hm2) = normalized_sq_terms(w, x, nx, y, ny);
    let ratio = 0.25 * (hp2 - hm2);
    Ok(angle_from_ratio(ratio, hp2, hm2, nx * ny))
}

/// Shared ratio → angle step, including the endpoint envelope and the
/// CSB violation report.
pub(crate) fn angle_from_ratio(ratio: f64, hp2: f64, hm2: f64, bound: f64) -> AngleResult {
    // Forward rounding bound on the computed ratio: the weight
    // evaluations and the ¼(h₊² − h₋²) combination accumulate a few
    // dozen roundings at the magnitude of the h² terms.
    let envelope = 64.0 * f64::EPSILON * 0.25 * (hp2.abs() + hm2.abs() + 2.0);
    let allow = CSB_TOL.max(envelope);
    if ratio > 1.0 + allow || ratio < -1.0 - allow {
        return AngleResult::Violation { product: ratio * bound, bound };
    }
    if ratio >= 1.0 - envelope {
        return AngleResult::Angle(0.0);
    }
    if ratio <= -1.0 + envelope {
        return AngleResult::Angle(std::f64::consts::PI);
    }
    AngleResult::Angle(ratio.clamp(-1.0, 1.0).acos())
}

/// The Euclidean angle `arccos(⟨x|y⟩ / (|x|·|y|))` with the standard dot
/// product. Independent of the weight machinery; used as an oracle.
pub fn euclid_angle(x: Vec2, y: Vec2) -> Result<f64> {
    let nx = x.norm2();
    let ny = y.norm2();
    if nx == 0.0 || ny == 0.0 {
        return Err(Error::ZeroVector);
    }
    let ratio = x.dot(y) / (nx * ny);
    Ok(ratio.clamp(-1.0, 1.0).acos())
}

/// `h₊(t) = ‖x̂ + sign(y + t·x)‖`. In `[0, 2]` for seminorms; for general
/// weights the raw value is returned.
pub fn h_plus(w: &Weight, x: Vec2, y: Vec2, t: f64) -> Result<f64> {
    let xh = w.sign(x)?;
    let zh = w.sign(y + x.scale(t))?;
    Ok(w.eval(xh + zh))
}

/// `h₋(t) = ‖x̂ − sign(y + t·x)‖`.
pub fn h_minus(w: &Weight, x: Vec2, y: Vec2, t: f64) -> Result<f64> {
    let xh = w.sign(x)?;
    let zh = w.sign(y + x.scale(t))?;
    Ok(w.eval(xh - zh))
}

/// `Θ(t) = ∠(x, y + t·x) = arccos(¼(h₊(t)² − h₋(t)²))`.
pub fn theta(w: &Weight, x: Vec2, y: Vec2, t: f64) -> Result<AngleResult> {
    thy_angle(w, x, y + x.scale(t))
}
