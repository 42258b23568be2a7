//! Concave corners of unit spheres and the CSB violations they force.
//!
//! A sphere point `ŷ` is a concave corner when the sphere contains two
//! straight segments leaving `sign(ŷ)` with slopes `m₋ < m₊` in the
//! `(sign(x̄), sign(ŷ))` frame: for all `δ ∈ [0, ε]`
//!
//! ```text
//! ‖ δ·sign(x̄) + (1 + δ·m₊)·sign(ŷ) ‖ = 1 = ‖ −δ·sign(x̄) + (1 − δ·m₋)·sign(ŷ) ‖.
//! ```
//!
//! The spade product of those two unit vectors expands to
//! `P♠(δ) = 1 + δ·(m₊ − m₋) + ¼·δ²·K`, which exceeds 1 for small
//! positive δ — a Cauchy–Schwarz–Bunjakowsky violation with explicit
//! witnesses.

use serde::Serialize;

use crate::angle::spade_product;
use crate::error::Error;
use crate::tol::{CORNER_TOL, CSB_TOL, REL_TOL};
use crate::vec2::Vec2;
use crate::weights::Weight;
use crate::Result;

/// A claimed concave corner: direction, transversal, validity range and
/// the two one-sided sphere slopes.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CornerSpec {
    pub y_hat: Vec2,
    pub x_bar: Vec2,
    pub eps: f64,
    pub m_minus: f64,
    pub m_plus: f64,
}

impl CornerSpec {
    /// The canonical concave corner of the polygon-r weight (r < 1):
    /// `ŷ = (0, r)`, `x̄ = (1, 0)`, `ε = 1`, `m∓ = ∓(1/r − 1)`.
    pub fn polygon(r: f64) -> CornerSpec {
        CornerSpec {
            y_hat: Vec2::new(0.0, r),
            x_bar: Vec2::new(1.0, 0.0),
            eps: 1.0,
            m_minus: 1.0 - 1.0 / r,
            m_plus: 1.0 / r - 1.0,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.m_minus < self.m_plus) {
            return Err(Error::InvalidInput(format!(
                "corner slopes must satisfy m- < m+, got {} ≥ {}",
                self.m_minus, self.m_plus
            )));
        }
        if !(self.eps > 0.0) {
            return Err(Error::InvalidInput("corner range eps must be > 0".into()));
        }
        Ok(())
    }

    /// The two Definition vectors at offset `delta`:
    /// `u = δ·sign(x̄) + (1+δ·m₊)·sign(ŷ)` and
    /// `v = −δ·sign(x̄) + (1−δ·m₋)·sign(ŷ)`.
    pub fn side_vectors(&self, w: &Weight, delta: f64) -> Result<(Vec2, Vec2)> {
        let sx = w.sign(self.x_bar)?;
        let sy = w.sign(self.y_hat)?;
        let u = sx.scale(delta) + sy.scale(1.0 + delta * self.m_plus);
        let v = sx.scale(-delta) + sy.scale(1.0 - delta * self.m_minus);
        Ok((u, v))
    }
}

/// Check the two sphere equalities on `grid_n` equally spaced δ in
/// `[0, eps]`.
pub fn verify_concave_corner(w: &Weight, spec: &CornerSpec, grid_n: usize) -> Result<bool> {
    spec.validate()?;
    let steps = grid_n.max(2);
    for k in 0..steps {
        let delta = spec.eps * k as f64 / (steps - 1) as f64;
        let (u, v) = spec.side_vectors(w, delta)?;
        if (w.eval(u) - 1.0).abs() > CORNER_TOL || (w.eval(v) - 1.0).abs() > CORNER_TOL {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The constant `K = (m₊ − m₋)² − ‖2·sign(x̄) + (m₊ + m₋)·sign(ŷ)‖²` of
/// the quadratic expansion.
pub fn quadratic_coefficient(w: &Weight, spec: &CornerSpec) -> Result<f64> {
    let sx = w.sign(spec.x_bar)?;
    let sy = w.sign(spec.y_hat)?;
    let gap = spec.m_plus - spec.m_minus;
    let cross = w.eval(sx.scale(2.0) + sy.scale(spec.m_plus + spec.m_minus));
    Ok(gap * gap - cross * cross)
}

/// `P♠(δ)` by both routes: the closed quadratic form and the direct
/// spade product of the two Definition vectors.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SpadeQuadratic {
    pub closed: f64,
    pub direct: f64,
}

/// Evaluate `P♠(δ)` and cross-validate the two routes; they disagree
/// exactly when the spec does not describe a corner of `w`.
pub fn spade_quadratic_p(w: &Weight, spec: &CornerSpec, delta: f64) -> Result<SpadeQuadratic> {
    spec.validate()?;
    if !(0.0..=spec.eps).contains(&delta) {
        return Err(Error::InvalidInput(format!(
            "delta {delta} outside [0, {}]",
            spec.eps
        )));
    }
    let k = quadratic_coefficient(w, spec)?;
    let gap = spec.m_plus - spec.m_minus;
    let closed = 1.0 + delta * gap + 0.25 * delta * delta * k;
    let (u, v) = spec.side_vectors(w, delta)?;
    let direct = spade_product(w, u, v);
    if (closed - direct).abs() > REL_TOL * closed.abs().max(1.0) {
        return Err(Error::InternalInconsistency(format!(
            "P♠({delta}) routes disagree: closed {closed} vs direct {direct}"
        )));
    }
    Ok(SpadeQuadratic { closed, direct })
}

/// A pair of unit vectors violating the CSB inequality.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CsbWitness {
    pub u: Vec2,
    pub v: Vec2,
    pub product: f64,
}

/// Produce the CSB-violation witness of a concave corner.
///
/// The canonical offset is `δ̂ = min(ε, (m₊−m₋)/max(|K|, 1)) / 10`: well
/// inside the rising branch of `P♠` whatever the sign of `K`. If the
/// witness there does not violate the bound, a grid over `(0, ε]` is
/// searched; if nothing violates, the spec was not a corner and
/// [`Error::NoViolationFound`] is returned.
pub fn csb_witness_from_corner(w: &Weight, spec: &CornerSpec) -> Result<CsbWitness> {
    spec.validate()?;
    let k = quadratic_coefficient(w, spec)?;
    let gap = spec.m_plus - spec.m_minus;
    let delta_hat = spec.eps.min(gap / k.abs().max(1.0)) / 10.0;

    let mut candidates = vec![delta_hat];
    candidates.extend((1..=100).map(|i| spec.eps * i as f64 / 100.0));

    for delta in candidates {
        let (u0, v0) = spec.side_vectors(w, delta)?;
        let (Ok(u), Ok(v)) = (w.sign(u0), w.sign(v0)) else { continue };
        let product = spade_product(w, u, v);
        let bound = w.eval(u) * w.eval(v);
        if product.abs() > bound * (1.0 + CSB_TOL) {
            return Ok(CsbWitness { u, v, product });
        }
    }
    Err(Error::NoViolationFound)
}

/// Heuristic corner search: sweep sphere directions, compare one-sided
/// sphere slopes, and keep candidates that `verify_concave_corner`
/// confirms. The search space of the Definition's `ε, m±` is unbounded;
/// this sweep is a practical choice, not a decision procedure.
pub fn detect_corners(w: &Weight, n_scan: usize) -> Vec<CornerSpec> {
    let mut found: Vec<CornerSpec> = Vec::new();
    for k in 0..n_scan {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / n_scan as f64;
        let y_dir = Vec2::from_angle(theta);
        let x_dir = Vec2::from_angle(theta + std::f64::consts::FRAC_PI_2);
        if w.in_zero_set(y_dir) || w.in_zero_set(x_dir) {
            continue;
        }
        let Some((m_minus, m_plus)) = one_sided_slopes(w, y_dir, x_dir, 1e-5) else {
            continue;
        };
        if m_plus - m_minus <= 1e-4 {
            continue; // smooth point or convex corner
        }
        let mut spec = None;
        for eps in [1.0, 0.5, 0.25, 0.1, 0.05, 0.01] {
            // Re-estimate the slopes from well inside the candidate
            // segment; on a straight segment this is far more accurate
            // than the small-δ probe.
            let Some((m_lo, m_hi)) = one_sided_slopes(w, y_dir, x_dir, 0.4 * eps) else {
                continue;
            };
            let cand = CornerSpec {
                y_hat: y_dir,
                x_bar: x_dir,
                eps,
                m_minus: m_lo,
                m_plus: m_hi,
            };
            if matches!(verify_concave_corner(w, &cand, 33), Ok(true)) {
                spec = Some(cand);
                break;
            }
        }
        let Some(spec) = spec else { continue };
        let dup = found.iter().any(|s| {
            s.y_hat.cross(spec.y_hat).abs() <= 1e-9 && s.y_hat.dot(spec.y_hat) > 0.0
        });
        if !dup {
            found.push(spec);
        }
    }
    found
}

/// Slopes `(m₋, m₊)` of the sphere on both sides of `sign(y_dir)`, from
/// the radial corrections that return `±δ·sign(x̄) + ρ·sign(ŷ)` to the
/// sphere.
fn one_sided_slopes(w: &Weight, y_dir: Vec2, x_dir: Vec2, delta: f64) -> Option<(f64, f64)> {
    let sy = w.sign(y_dir).ok()?;
    let sx = w.sign(x_dir).ok()?;
    let rho_plus = radial_root(w, sx.scale(delta), sy)?;
    let rho_minus = radial_root(w, sx.scale(-delta), sy)?;
    Some(((1.0 - rho_minus) / delta, (rho_plus - 1.0) / delta))
}

/// ρ with `‖offset + ρ·sy‖ = 1`, by bisection on `[0, 4]`.
fn radial_root(w: &Weight, offset: Vec2, sy: Vec2) -> Option<f64> {
    let g = |rho: f64| w.eval(offset + sy.scale(rho)) - 1.0;
    let (mut lo, mut hi) = (0.0f64, 4.0f64);
    if g(lo) >= 0.0 || g(hi) <= 0.0 {
        return None;
    }
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygon_half_canonical_corner_verifies() {
        let w = Weight::Polygon(0.5);
        let spec = CornerSpec::polygon(0.5);
        assert_eq!(spec.m_minus, -1.0);
        assert_eq!(spec.m_plus, 1.0);
        assert!(verify_concave_corner(&w, &spec, 101).unwrap());
    }

    #[test]
    fn polygon_family_corners_verify() {
        for r in [0.25, 0.5, 0.75, 0.9] {
            let w = Weight::Polygon(r);
            let spec = CornerSpec::polygon(r);
            assert!(verify_concave_corner(&w, &spec, 101).unwrap(), "r = {r}");
        }
    }

    #[test]
    fn l1_has_no_concave_corner() {
        let w = Weight::Holder(1.0);
        let spec = CornerSpec {
            y_hat: Vec2::new(0.0, 1.0),
            x_bar: Vec2::new(1.0, 0.0),
            eps: 0.5,
            m_minus: -1.0,
            m_plus: 1.0,
        };
        assert!(!verify_concave_corner(&w, &spec, 51).unwrap());
    }

    #[test]
    fn quadratic_k_vanishes_for_polygon_half() {
        // m₊+m₋ = 0 and ‖2·sign(x̄)‖ = 2, so K = 4 − 4 = 0.
        let w = Weight::Polygon(0.5);
        let k = quadratic_coefficient(&w, &CornerSpec::polygon(0.5)).unwrap();
        assert!(k.abs() < 1e-12, "K = {k}");
    }

    #[test]
    fn spade_quadratic_routes_agree() {
        let w = Weight::Polygon(0.5);
        let spec = CornerSpec::polygon(0.5);
        let p = spade_quadratic_p(&w, &spec, 0.1).unwrap();
        assert!((p.closed - 1.2).abs() < 1e-12);
        assert!((p.direct - 1.2).abs() < 1e-12);
        // δ = 0: both vectors are sign(ŷ), product 1.
        let p0 = spade_quadratic_p(&w, &spec, 0.0).unwrap();
        assert!((p0.direct - 1.0).abs() < 1e-12);
    }

    #[test]
    fn spade_quadratic_monotone_onset() {
        // P♠ > 1 for small positive δ, for every verified polygon corner.
        for r in [0.5, 0.75] {
            let w = Weight::Polygon(r);
            let spec = CornerSpec::polygon(r);
            for i in 1..=20 {
                let delta = 0.01 * i as f64;
                let p = spade_quadratic_p(&w, &spec, delta).unwrap();
                assert!(p.direct > 1.0, "r = {r}, δ = {delta}: {p:?}");
            }
        }
    }

    #[test]
    fn spade_quadratic_rejects_fake_corner() {
        // Asymmetric slopes: ‖u‖ ≠ ‖v‖ for the ℓ¹ norm, so the closed
        // form (which needs both on the sphere) diverges from the direct
        // product. A mirror-symmetric fake spec would not be caught:
        // the ‖u‖ = ‖v‖ cancellation keeps the routes equal.
        let w = Weight::Holder(1.0);
        let spec = CornerSpec {
            y_hat: Vec2::new(0.0, 1.0),
            x_bar: Vec2::new(1.0, 0.0),
            eps: 1.0,
            m_minus: -0.5,
            m_plus: 1.0,
        };
        assert!(matches!(
            spade_quadratic_p(&w, &spec, 0.5),
            Err(Error::InternalInconsistency(_))
        ));
    }

    #[test]
    fn witness_for_polygon_half() {
        let w = Weight::Polygon(0.5);
        let witness = csb_witness_from_corner(&w, &CornerSpec::polygon(0.5)).unwrap();
        assert!((witness.u - Vec2::new(0.1, 0.55)).norm2() < 1e-12);
        assert!((witness.v - Vec2::new(-0.1, 0.55)).norm2() < 1e-12);
        assert!((witness.product - 1.2).abs() < 1e-9);
        assert!((w.eval(witness.u) - 1.0).abs() < CORNER_TOL);
        assert!((w.eval(witness.v) - 1.0).abs() < CORNER_TOL);
        // The witnesses sit on the sphere segment (0, ½)–(1, 1) and its
        // mirror: x2 = ½ + ½·x1.
        assert!((witness.u.x2 - (0.5 + 0.5 * witness.u.x1)).abs() < 1e-12);
        assert!((witness.v.x2 - (0.5 - 0.5 * witness.v.x1)).abs() < 1e-12);
    }

    #[test]
    fn witness_fails_for_norm() {
        let w = Weight::Holder(1.0);
        let spec = CornerSpec {
            y_hat: Vec2::new(0.0, 1.0),
            x_bar: Vec2::new(1.0, 0.0),
            eps: 0.5,
            m_minus: -0.5,
            m_plus: 0.5,
        };
        assert_eq!(csb_witness_from_corner(&w, &spec), Err(Error::NoViolationFound));
    }

    #[test]
    fn invalid_slope_order_rejected() {
        let w = Weight::Polygon(0.5);
        let mut spec = CornerSpec::polygon(0.5);
        std::mem::swap(&mut spec.m_minus, &mut spec.m_plus);
        assert!(matches!(
            verify_concave_corner(&w, &spec, 11),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn detection_finds_polygon_corners() {
        let w = Weight::Polygon(0.5);
        let specs = detect_corners(&w, 256);
        assert_eq!(specs.len(), 2, "{specs:?}");
        for spec in &specs {
            assert!(spec.y_hat.x1.abs() < 0.05 * spec.y_hat.x2.abs(), "{spec:?}");
            assert!(verify_concave_corner(&w, spec, 33).unwrap());
            assert!(csb_witness_from_corner(&w, spec).is_ok());
        }
    }

    #[test]
    fn detection_finds_nothing_on_norms() {
        for w in [Weight::Holder(1.0), Weight::Holder(2.0), Weight::Polygon(1.5)] {
            assert!(detect_corners(&w, 128).is_empty(), "{w}");
        }
    }
}
