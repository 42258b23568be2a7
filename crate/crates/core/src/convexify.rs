//! Convexification of unit balls: sphere sampling, the 2-D convex hull,
//! its Minkowski functional (gauge), normability, and the generalized
//! Thy angle computed through the hull gauge.
//!
//! For a weight `‖·‖` with unit ball `B`, the gauge of `conv(B)` is the
//! largest seminorm below `‖·‖`. The weight is *normable* when that
//! gauge is a genuine norm: hull bounded, origin strictly interior.

use std::sync::Arc;

use crate::angle::{angle_from_ratio, AngleResult};
use crate::error::Error;
use crate::tol::ZERO_TOL;
use crate::vec2::Vec2;
use crate::weights::{polygon_vertices, ray_boundary_scale, Weight};
use crate::Result;

/// Default number of sphere samples for hull construction.
pub const DEFAULT_SPHERE_SAMPLES: usize = 1024;

/// Discretization of a unit sphere: one point per direction outside the
/// zero-set, plus the directions along which the ball is unbounded.
#[derive(Clone, Debug)]
pub struct SphereSample {
    pub points: Vec<Vec2>,
    /// Euclidean-unit directions with `‖u‖ = 0` (unbounded rays of `B`).
    pub unbounded: Vec<Vec2>,
}

/// Weight threshold (on a Euclidean-unit direction) below which the
/// sphere point lies beyond 10⁷ and the direction is treated as an
/// unbounded ray. `cos`/`sin` of an axis angle leave ~1e-16 of dust, so
/// an exact zero-set test would miss rays the sample cannot represent.
const UNBOUNDED_EVAL_TOL: f64 = 1e-7;

/// Sample `sign(u(θ_k))` at the `n` directions `θ_k = 2πk/n`.
///
/// Zero-set directions are recorded as unbounded rays instead of points.
/// Multiples of 4 hit the coordinate axes exactly, which matters for
/// weights whose zero-set is an axis.
pub fn sample_sphere(w: &Weight, n: usize) -> SphereSample {
    let mut points = Vec::with_capacity(n);
    let mut unbounded = Vec::new();
    for k in 0..n {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        let u = Vec2::from_angle(theta);
        if w.eval(u) <= UNBOUNDED_EVAL_TOL {
            unbounded.push(u);
            continue;
        }
        match w.sign(u) {
            Ok(p) => points.push(p),
            Err(_) => unbounded.push(u),
        }
    }
    SphereSample { points, unbounded }
}

/// Convex polygonal region, possibly unbounded along recorded line
/// directions.
#[derive(Clone, Debug)]
pub struct HullPolygon {
    /// Counterclockwise convex vertex cycle. Empty iff `full_plane`.
    pub vertices: Vec<Vec2>,
    /// Unit directions (one per ± pair) along which the region extends
    /// to infinity. The region is `conv(vertices) ⊕ span(lines)`.
    pub lines: Vec<Vec2>,
    /// The region is all of ℝ² (two or more independent unbounded lines).
    pub full_plane: bool,
}

impl HullPolygon {
    /// Exact winding test: origin strictly inside the vertex cycle.
    pub fn origin_strictly_interior(&self) -> bool {
        if self.full_plane {
            return true;
        }
        let n = self.vertices.len();
        if n < 3 {
            return false;
        }
        (0..n).all(|i| self.vertices[i].cross(self.vertices[(i + 1) % n]) > 0.0)
    }

    /// The gauge is a norm iff the region is bounded with the origin
    /// strictly interior.
    pub fn is_norm(&self) -> bool {
        !self.full_plane && self.lines.is_empty() && self.origin_strictly_interior()
    }

    /// Minkowski functional `inf { r > 0 | v/r ∈ region }`.
    ///
    /// Exact ray–edge intersection for bounded hulls; a closed strip
    /// formula when one unbounded line is present (the gauge is 0 along
    /// the line itself); identically 0 on the full plane.
    pub fn gauge(&self, v: Vec2) -> Result<f64> {
        if v.x1 == 0.0 && v.x2 == 0.0 {
            return Ok(0.0);
        }
        if self.full_plane {
            return Ok(0.0);
        }
        if let Some(d) = self.lines.first() {
            // Region = conv(vertices) ⊕ span(d): a symmetric strip. Its
            // gauge only sees the component across the strip.
            let normal = Vec2::new(-d.x2, d.x1);
            let half_width = self
                .vertices
                .iter()
                .map(|p| normal.dot(*p).abs())
                .fold(0.0f64, f64::max);
            if half_width <= 0.0 {
                return Err(Error::UnboundedDirection);
            }
            return Ok(normal.dot(v).abs() / half_width);
        }
        match ray_boundary_scale(&self.vertices, v) {
            Some(s) => Ok(1.0 / s),
            None => Err(Error::UnboundedDirection),
        }
    }

    /// Total gauge for use as a weight evaluator: unbounded directions
    /// evaluate to 0 (seminorm semantics), unreachable rays to 0.
    pub fn gauge_or_zero(&self, v: Vec2) -> f64 {
        self.gauge(v).unwrap_or(0.0)
    }
}

/// Minimal convex polygon containing `points`, vertices counterclockwise,
/// collinear boundary points dropped.
pub fn convex_hull(points: &[Vec2]) -> Result<HullPolygon> {
    let mut pts: Vec<Vec2> = points.to_vec();
    pts.sort_by(|a, b| (a.x1, a.x2).partial_cmp(&(b.x1, b.x2)).unwrap());
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::DegenerateInput(format!(
            "hull needs at least 3 distinct points, got {}",
            pts.len()
        )));
    }

    // Monotone chain; strict turns only, so collinear points vanish.
    let mut lower: Vec<Vec2> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 {
            let (a, b) = (lower[lower.len() - 2], lower[lower.len() - 1]);
            if (b - a).cross(p - a) <= 0.0 {
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(p);
    }
    let mut upper: Vec<Vec2> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 {
            let (a, b) = (upper[upper.len() - 2], upper[upper.len() - 1]);
            if (b - a).cross(p - a) <= 0.0 {
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::DegenerateInput("all points collinear".into()));
    }
    Ok(HullPolygon { vertices: lower, lines: Vec::new(), full_plane: false })
}

/// Minkowski functional of a hull at `v`.
pub fn minkowski_functional(h: &HullPolygon, v: Vec2) -> Result<f64> {
    h.gauge(v)
}

/// Build `conv(B)` for a weight.
///
/// Polygon and custom-sphere weights contribute their exact sphere
/// vertices (no discretization error); other weights are sampled at `n`
/// directions. Zero-set directions become unbounded lines of the hull.
pub fn hull_of_weight(w: &Weight, n: usize) -> Result<HullPolygon> {
    match w {
        Weight::Polygon(r) => convex_hull(&polygon_vertices(*r)),
        Weight::CustomSphere(poly) => convex_hull(&poly.vertices),
        Weight::HullGauge(h) => Ok(h.as_ref().clone()),
        _ => {
            let sample = sample_sphere(w, n.max(4));
            let lines = collapse_to_lines(&sample.unbounded);
            if lines.len() >= 2 {
                return Ok(HullPolygon { vertices: Vec::new(), lines, full_plane: true });
            }
            if !lines.is_empty() {
                // Strip: the vertices only supply the cross-line width,
                // so a collinear support set is acceptable here.
                if sample.points.is_empty() {
                    return Err(Error::DegenerateInput("no bounded sphere points".into()));
                }
                let vertices = match convex_hull(&sample.points) {
                    Ok(h) => h.vertices,
                    Err(_) => sample.points,
                };
                return Ok(HullPolygon { vertices, lines, full_plane: false });
            }
            convex_hull(&sample.points)
        }
    }
}

/// Collapse antipodal unbounded rays into line directions, shaking off
/// the ~1e-16 dust `cos`/`sin` leave on axis directions.
fn collapse_to_lines(dirs: &[Vec2]) -> Vec<Vec2> {
    let mut lines: Vec<Vec2> = Vec::new();
    for &d in dirs {
        let mut canon = if d.x1 < 0.0 || (d.x1 == 0.0 && d.x2 < 0.0) { -d } else { d };
        if canon.x1.abs() <= 1e-9 * canon.x2.abs() {
            canon = Vec2::new(0.0, canon.x2.signum());
        } else if canon.x2.abs() <= 1e-9 * canon.x1.abs() {
            canon = Vec2::new(canon.x1.signum(), 0.0);
        }
        if !lines
            .iter()
            .any(|l| l.cross(canon).abs() <= 1e-9 && l.dot(canon) > 0.0)
        {
            lines.push(canon);
        }
    }
    lines
}

/// The gauge of `conv(B)` as a weight (the largest seminorm ≤ `‖·‖`).
pub fn conv_weight(w: &Weight, n: usize) -> Result<Weight> {
    Ok(Weight::HullGauge(Arc::new(hull_of_weight(w, n)?)))
}

/// True iff the hull gauge is a genuine norm.
pub fn is_normable(w: &Weight, n: usize) -> bool {
    hull_of_weight(w, n).map(|h| h.is_norm()).unwrap_or(false)
}

/// Generalized Thy angle through a prebuilt hull: all weights in the
/// arccos argument are hull gauges, so the angle is defined for every
/// normable weight and every nonzero pair.
pub fn generalized_thy_angle_with(hull: &HullPolygon, x: Vec2, y: Vec2) -> Result<AngleResult> {
    if !hull.is_norm() {
        return Err(Error::NotNormable);
    }
    if x.norm2() == 0.0 || y.norm2() == 0.0 {
        return Err(Error::ZeroVector);
    }
    let nx = hull.gauge(x)?;
    let ny = hull.gauge(y)?;
    if nx <= ZERO_TOL || ny <= ZERO_TOL {
        return Err(Error::ZeroSetVector);
    }
    let xh = x.scale(1.0 / nx);
    let yh = y.scale(1.0 / ny);
    let hp = hull.gauge(xh + yh)?;
    let hm = hull.gauge(xh - yh)?;
    let (hp2, hm2) = (hp * hp, hm * hm);
    let ratio = 0.25 * (hp2 - hm2);
    Ok(angle_from_ratio(ratio, hp2, hm2, nx * ny))
}

/// Generalized Thy angle of `x`, `y` under `w`, building the hull with
/// `n` sphere samples. Equals the plain Thy angle when `w` is already a
/// norm, and the Euclidean angle for the ℓ² weight.
pub fn generalized_thy_angle(w: &Weight, x: Vec2, y: Vec2, n: usize) -> Result<AngleResult> {
    let hull = hull_of_weight(w, n)?;
    generalized_thy_angle_with(&hull, x, y)
}
