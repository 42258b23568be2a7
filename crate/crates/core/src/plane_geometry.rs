//! Euclidean-plane projection facts, implemented as independently
//! testable oracles.
//!
//! Setting: the plane with the two parallel guide lines `y = x − 1` and
//! `y = x + 1`. A third line `L` (avoiding the origin, not parallel to
//! the guides) meets them at `S` and `T`. There is a unique point
//! `P_hor` on `L` such that `(0,0), (x_hor+1, y_hor), S` are collinear
//! and `(0,0), (x_hor−1, y_hor), T` are collinear. The second fact
//! concerns central projections onto a line `y = m·x + 1` and the
//! x-intercept of a diagonal of the projected parallelogram, which is
//! always 1.
//!
//! These exist to machine-check geometry used by the monotonicity
//! argument behind Θ, not for the main API; the CLI exposes them via the
//! hidden `prove-lemmas` subcommand.

use serde::Serialize;

use crate::error::Error;
use crate::vec2::Vec2;
use crate::Result;

/// A straight line, slope/intercept or vertical.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Line {
    Slanted { m: f64, b: f64 },
    Vertical { a: f64 },
}

/// Intersection of `y = m·x + b` with the lower guide `y = x − 1`.
pub fn gs_intersection(m: f64, b: f64) -> Vec2 {
    let x = (b + 1.0) / (1.0 - m);
    Vec2::new(x, x - 1.0)
}

/// Intersection of `y = m·x + b` with the upper guide `y = x + 1`.
pub fn gt_intersection(m: f64, b: f64) -> Vec2 {
    let x = (b - 1.0) / (1.0 - m);
    Vec2::new(x, x + 1.0)
}

fn check_line(m_l: f64, b_l: f64) -> Result<()> {
    if b_l == 0.0 {
        return Err(Error::InvalidLine("line passes through the origin (b = 0)".into()));
    }
    if m_l == 1.0 {
        return Err(Error::InvalidLine("line parallel to the guides (m = 1)".into()));
    }
    if !(m_l.is_finite() && b_l.is_finite()) {
        return Err(Error::InvalidLine("non-finite line parameters".into()));
    }
    Ok(())
}

/// The unique point on `y = m_L·x + b_L` whose ±1 horizontal shifts are
/// radially aligned with `S` and `T`.
pub fn phor(m_l: f64, b_l: f64) -> Result<Vec2> {
    check_line(m_l, b_l)?;
    let denom = b_l * (m_l - 1.0);
    Ok(Vec2::new((m_l - b_l * b_l) / denom, (m_l * m_l - b_l * b_l) / denom))
}

/// Same point computed from the guide intersection `T` instead of the
/// slope-intercept form. Redundant route kept for cross-validation.
pub fn phor_from_gt(m_l: f64, b_l: f64) -> Result<Vec2> {
    check_line(m_l, b_l)?;
    let xt = gt_intersection(m_l, b_l).x1;
    let x = (xt * (b_l + 1.0) + 1.0) / b_l;
    Ok(Vec2::new(x, m_l * x + b_l))
}

/// Same point computed from the guide intersection `S`.
pub fn phor_from_gs(m_l: f64, b_l: f64) -> Result<Vec2> {
    check_line(m_l, b_l)?;
    let xs = gs_intersection(m_l, b_l).x1;
    let x = (xs * (b_l - 1.0) + 1.0) / b_l;
    Ok(Vec2::new(x, m_l * x + b_l))
}

/// `P_hor` for a vertical line `x = a_L`: `(a_L, a_L − 1/a_L)`.
pub fn phor_vertical(a_l: f64) -> Result<Vec2> {
    if a_l == 0.0 || !a_l.is_finite() {
        return Err(Error::InvalidLine("vertical line through the origin".into()));
    }
    Ok(Vec2::new(a_l, a_l - 1.0 / a_l))
}

/// Residuals of the two collinearity conditions at a candidate point:
/// normalized cross products (misalignment sines) of `(x±1, y)` against
/// `S`, `T`. Both vanish exactly at `P_hor`.
pub fn phor_residuals(m_l: f64, b_l: f64, p: Vec2) -> (f64, f64) {
    let s = gs_intersection(m_l, b_l);
    let t = gt_intersection(m_l, b_l);
    let shifted_plus = Vec2::new(p.x1 + 1.0, p.x2);
    let shifted_minus = Vec2::new(p.x1 - 1.0, p.x2);
    (
        shifted_plus.cross(s) / (shifted_plus.norm2() * s.norm2()),
        shifted_minus.cross(t) / (shifted_minus.norm2() * t.norm2()),
    )
}

/// Central projections of `(x̂∓1, ŷ)` onto the line `y = m·x + 1`, and
/// the x-intercept `ν` of the segment joining `T̄` and `−S̄`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Projections {
    pub s_bar: Vec2,
    pub t_bar: Vec2,
    pub nu: f64,
}

/// Requires `(x̂, ŷ)` on `y = m·x + 1` with `ŷ ≠ 0` and `m ∉ {−1, 1}`.
/// `ν` is computed from the projected points, not from a closed form —
/// that it equals 1 is the claim under test.
pub fn projections_and_nu(m: f64, x_hat: f64, y_hat: f64) -> Result<Projections> {
    if m == 1.0 || m == -1.0 {
        return Err(Error::InvalidInput("slope must avoid ±1".into()));
    }
    if y_hat == 0.0 {
        return Err(Error::InvalidInput("point on the x-axis has no projection".into()));
    }
    if (y_hat - (m * x_hat + 1.0)).abs() > 1e-9 * y_hat.abs().max(1.0) {
        return Err(Error::InvalidInput(format!(
            "({x_hat}, {y_hat}) does not lie on y = {m}·x + 1"
        )));
    }
    let s_bar = Vec2::new(x_hat - 1.0, y_hat).scale(1.0 / (1.0 + m));
    let t_bar = Vec2::new(x_hat + 1.0, y_hat).scale(1.0 / (1.0 - m));
    let nu = x_intercept(t_bar, -s_bar)?;
    Ok(Projections { s_bar, t_bar, nu })
}

fn x_intercept(p: Vec2, q: Vec2) -> Result<f64> {
    if p.x1 == q.x1 {
        return Ok(p.x1);
    }
    if p.x2 == q.x2 {
        return Err(Error::InvalidInput("segment parallel to the x-axis".into()));
    }
    Ok(p.x1 - p.x2 * (q.x1 - p.x1) / (q.x2 - p.x2))
}

/// Closed membership in `{x+1 ≥ y ≥ x−1}`.
pub fn in_set1(p: Vec2) -> bool {
    p.x1 + 1.0 >= p.x2 && p.x2 >= p.x1 - 1.0
}

/// Closed membership in `{−x+1 ≥ y ≥ −x−1}`.
pub fn in_set2(p: Vec2) -> bool {
    -p.x1 + 1.0 >= p.x2 && p.x2 >= -p.x1 - 1.0
}
