//! Polar coordinates in a 2-D normed plane.
//!
//! For a norm, `Θ(t) = ∠(x, y + t·x)` is a decreasing homeomorphism
//! `ℝ → (0, π)`, so every target angle has a unique preimage. That
//! inversion turns `(‖v‖, signed angle to b₁)` into coordinates: encode
//! reads the angle off directly, decode finds the direction whose angle
//! matches by bracketed bisection on `t`.

use serde::{Deserialize, Serialize};

use crate::angle::thy_angle;
use crate::error::Error;
use crate::tol::ZERO_TOL;
use crate::vec2::Vec2;
use crate::weights::Weight;
use crate::Result;

/// Polar representation: the weight of the vector and its signed angle
/// to the first basis vector, in `(−π, π]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolarCoord {
    pub rho: f64,
    pub alpha: f64,
}

const MAX_BRACKET_DOUBLINGS: u32 = 80;
const MAX_BISECTIONS: u32 = 200;
/// Exact-axis tie tolerance for `alpha ∈ {0, π}` in decode.
const AXIS_ALPHA_TOL: f64 = 1e-12;

/// Solve `∠(x, y + t·x) = alpha_target` for `t`, `alpha_target ∈ (0, π)`.
///
/// Bracket expansion doubles `[−2ᵏ, 2ᵏ]` until the target is straddled
/// (Θ is decreasing), then bisection narrows the bracket to relative
/// width 1e-14. [`Error::NotBracketed`] signals that Θ never attains the
/// target, i.e. the weight is not a norm on this span.
pub fn theta_inverse(w: &Weight, x: Vec2, y: Vec2, alpha_target: f64) -> Result<f64> {
    if !(alpha_target > 0.0 && alpha_target < std::f64::consts::PI) {
        return Err(Error::InvalidInput(format!(
            "target angle {alpha_target} outside (0, π)"
        )));
    }
    let theta_at = |t: f64| -> Result<f64> {
        thy_angle(w, x, y + x.scale(t))?.expect_angle()
    };

    let mut lo = -1.0f64;
    let mut hi = 1.0f64;
    let mut theta_lo = theta_at(lo)?;
    let mut theta_hi = theta_at(hi)?;
    let mut doublings = 0;
    while theta_lo < alpha_target {
        lo *= 2.0;
        theta_lo = theta_at(lo)?;
        doublings += 1;
        if doublings > MAX_BRACKET_DOUBLINGS {
            return Err(Error::NotBracketed(format!(
                "Θ({lo}) = {theta_lo} never reaches {alpha_target}"
            )));
        }
    }
    doublings = 0;
    while theta_hi > alpha_target {
        hi *= 2.0;
        theta_hi = theta_at(hi)?;
        doublings += 1;
        if doublings > MAX_BRACKET_DOUBLINGS {
            return Err(Error::NotBracketed(format!(
                "Θ({hi}) = {theta_hi} never reaches {alpha_target}"
            )));
        }
    }

    for _ in 0..MAX_BISECTIONS {
        if hi - lo < 1e-14 * lo.abs().max(hi.abs()).max(1.0) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let theta_mid = theta_at(mid)?;
        // Θ must stay monotone inside the bracket.
        assert!(
            theta_mid <= theta_lo + 1e-9 && theta_mid >= theta_hi - 1e-9,
            "Θ not decreasing on [{lo}, {hi}]: {theta_lo} → {theta_mid} → {theta_hi}"
        );
        if theta_mid > alpha_target {
            lo = mid;
            theta_lo = theta_mid;
        } else {
            hi = mid;
            theta_hi = theta_mid;
        }
    }

    let t = 0.5 * (lo + hi);
    // A jump over the target (seminorm with a zero-set ray in the span)
    // converges to the jump location without attaining the angle.
    if (theta_at(t)? - alpha_target).abs() > 1e-6 {
        return Err(Error::NotBracketed(format!(
            "Θ jumps over {alpha_target} near t = {t}"
        )));
    }
    Ok(t)
}

/// Express `v` in polar coordinates w.r.t. the basis `{b1, b2}`:
/// `rho = ‖v‖`, `alpha = ±∠(v, b1)` signed by the `b2`-coordinate of `v`.
pub fn polar_encode(w: &Weight, b1: Vec2, b2: Vec2, v: Vec2) -> Result<PolarCoord> {
    let det = b1.cross(b2);
    if det == 0.0 {
        return Err(Error::InvalidInput("basis vectors are linearly dependent".into()));
    }
    if v.norm2() == 0.0 {
        return Err(Error::ZeroVector);
    }
    let rho = w.eval(v);
    if rho <= ZERO_TOL {
        return Err(Error::ZeroSetVector);
    }
    let r2 = b1.cross(v) / det;
    let angle = thy_angle(w, v, b1)?.expect_angle()?;
    // r2 = 0 puts v on the b1 axis, where the angle is already 0 or π.
    let alpha = if r2 < 0.0 { -angle } else { angle };
    Ok(PolarCoord { rho, alpha })
}

/// Reconstruct the vector with weight `rho` and signed angle `alpha`.
///
/// Every `v` with positive `b2`-coordinate is a positive multiple of
/// `sign(b2 + t·b1)`; `t` comes from [`theta_inverse`]. Negative angles
/// run the same construction with `−b2`.
pub fn polar_decode(w: &Weight, b1: Vec2, b2: Vec2, p: PolarCoord) -> Result<Vec2> {
    if !(p.rho > 0.0) {
        return Err(Error::InvalidInput(format!("rho must be > 0, got {}", p.rho)));
    }
    if !(p.alpha > -std::f64::consts::PI && p.alpha <= std::f64::consts::PI + AXIS_ALPHA_TOL) {
        return Err(Error::InvalidInput(format!("alpha {} outside (−π, π]", p.alpha)));
    }
    if b1.cross(b2) == 0.0 {
        return Err(Error::InvalidInput("basis vectors are linearly dependent".into()));
    }

    if p.alpha.abs() <= AXIS_ALPHA_TOL {
        return Ok(w.sign(b1)?.scale(p.rho));
    }
    if (p.alpha.abs() - std::f64::consts::PI).abs() <= AXIS_ALPHA_TOL {
        return Ok(w.sign(b1)?.scale(-p.rho));
    }
    if p.alpha > 0.0 {
        let t = theta_inverse(w, b1, b2, p.alpha)?;
        Ok(w.sign(b2 + b1.scale(t))?.scale(p.rho))
    } else {
        let t = theta_inverse(w, b1, -b2, -p.alpha)?;
        Ok(w.sign(-b2 + b1.scale(t))?.scale(p.rho))
    }
}
