//! Homogeneous weights on the real plane.
//!
//! A weight is a continuous map `‖·‖: ℝ² → [0, ∞)` with
//! `‖r·v‖ = |r|·‖v‖`. Norms and seminorms are weights; so are
//! functionals whose unit ball is not convex (polygon weights with a
//! dented sphere, the hyperbola weight). The zero-set `Z = {‖v‖ = 0}`
//! is `{0}` exactly for positive-definite weights.

use std::fmt;
use std::sync::Arc;

use crate::convexify::HullPolygon;
use crate::error::Error;
use crate::tol::{REL_TOL, ZERO_TOL};
use crate::vec2::Vec2;
use crate::Result;

/// Evaluator type for user-supplied weights.
pub type WeightFn = Arc<dyn Fn(Vec2) -> f64 + Send + Sync>;

/// A homogeneous weight on ℝ².
#[derive(Clone)]
pub enum Weight {
    /// `(|x1|^p + |x2|^p)^(1/p)`; a norm iff `p ≥ 1`. `p = ∞` is the
    /// max norm.
    Holder(f64),
    /// Unit sphere fixed as the hexagon through `(0,±r)` and `(±1,±1)`,
    /// extended by homogeneity. The ball is convex iff `r ≥ 1`.
    Polygon(f64),
    /// `‖(x1,x2)‖ = |x1|`; zero-set is the x2-axis.
    AxisSeminorm,
    /// Unit sphere `{|x1|·|x2| = 1}`, i.e. `‖v‖ = √|x1·x2|`; zero-set is
    /// both axes. Not a seminorm, but satisfies the CSB inequality.
    Hyperbola,
    /// Weight defined by a polyline of unit-sphere points, extended by
    /// homogeneity. Must be star-shaped about the origin.
    CustomSphere(Arc<SpherePolyline>),
    /// Gauge of a convex hull polygon (possibly with unbounded
    /// directions). Produced by convexification.
    HullGauge(Arc<HullPolygon>),
    /// Opaque user evaluator. Trusted to be homogeneous and nonnegative;
    /// see [`validate_homogeneity`].
    CustomFn(WeightFn),
}

/// Structural claims about a weight. Metadata only: derived from the
/// construction, never from evaluation, and always checkable by the
/// samplers in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claims {
    pub is_hw: bool,
    pub is_seminorm: bool,
    pub is_norm: bool,
}

impl Weight {
    /// Parse a weight-spec string: `lp:<p>`, `polygon:<r>`, `axis`,
    /// `hyperbola`, `sphere-file:<path>`.
    pub fn parse(spec: &str) -> Result<Weight> {
        let spec = spec.trim();
        if let Some(p) = spec.strip_prefix("lp:") {
            let p = parse_extent(p)?;
            if p <= 0.0 {
                return Err(Error::Parse(format!("lp exponent must be > 0, got {p}")));
            }
            return Ok(Weight::Holder(p));
        }
        if let Some(r) = spec.strip_prefix("polygon:") {
            let r: f64 = r
                .parse()
                .map_err(|_| Error::Parse(format!("bad polygon parameter {r:?}")))?;
            if !(r > 0.0 && r.is_finite()) {
                return Err(Error::Parse(format!("polygon parameter must be > 0, got {r}")));
            }
            return Ok(Weight::Polygon(r));
        }
        if let Some(path) = spec.strip_prefix("sphere-file:") {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
            let points = parse_sphere_csv(&text)?;
            return Ok(Weight::CustomSphere(Arc::new(SpherePolyline::new(points)?)));
        }
        match spec {
            "axis" => Ok(Weight::AxisSeminorm),
            "hyperbola" => Ok(Weight::Hyperbola),
            other => Err(Error::Parse(format!(
                "unknown weight spec {other:?} (expected lp:<p>, polygon:<r>, axis, hyperbola, sphere-file:<path>)"
            ))),
        }
    }

    /// Evaluate the weight. Total: returns a nonnegative finite value for
    /// finite input.
    pub fn eval(&self, v: Vec2) -> f64 {
        match self {
            Weight::Holder(p) => holder_eval(*p, v),
            Weight::Polygon(r) => {
                let verts = polygon_vertices(*r);
                polyline_gauge(&verts, v)
            }
            Weight::AxisSeminorm => v.x1.abs(),
            Weight::Hyperbola => (v.x1 * v.x2).abs().sqrt(),
            Weight::CustomSphere(poly) => polyline_gauge(&poly.vertices, v),
            Weight::HullGauge(hull) => hull.gauge_or_zero(v),
            Weight::CustomFn(f) => f(v),
        }
    }

    /// Zero-set membership: `‖v‖ ≤ ZERO_TOL`.
    pub fn in_zero_set(&self, v: Vec2) -> bool {
        self.eval(v) <= ZERO_TOL
    }

    /// Projection onto the unit sphere, `sign(v) = v / ‖v‖`.
    pub fn sign(&self, v: Vec2) -> Result<Vec2> {
        let n = self.eval(v);
        if n <= ZERO_TOL {
            return Err(Error::ZeroSetVector);
        }
        Ok(v.scale(1.0 / n))
    }

    /// Construction-derived structural claims.
    pub fn claims(&self) -> Claims {
        let (is_seminorm, is_norm) = match self {
            Weight::Holder(p) => (*p >= 1.0, *p >= 1.0),
            Weight::Polygon(r) => (*r >= 1.0, *r >= 1.0),
            Weight::AxisSeminorm => (true, false),
            Weight::Hyperbola => (false, false),
            Weight::CustomSphere(poly) => {
                let convex = poly.is_convex();
                (convex, convex)
            }
            Weight::HullGauge(hull) => (true, hull.is_norm()),
            Weight::CustomFn(_) => (false, false),
        };
        Claims { is_hw: true, is_seminorm, is_norm }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Holder(p) if p.is_infinite() => write!(f, "lp:inf"),
            Weight::Holder(p) => write!(f, "lp:{p}"),
            Weight::Polygon(r) => write!(f, "polygon:{r}"),
            Weight::AxisSeminorm => write!(f, "axis"),
            Weight::Hyperbola => write!(f, "hyperbola"),
            Weight::CustomSphere(poly) => write!(f, "sphere[{} pts]", poly.vertices.len()),
            Weight::HullGauge(hull) => write!(f, "hull[{} verts]", hull.vertices.len()),
            Weight::CustomFn(_) => write!(f, "custom-fn"),
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight({self})")
    }
}

fn parse_extent(s: &str) -> Result<f64> {
    match s.trim().to_ascii_lowercase().as_str() {
        "inf" | "infinity" | "∞" => Ok(f64::INFINITY),
        t => t
            .parse()
            .map_err(|_| Error::Parse(format!("bad lp exponent {s:?}"))),
    }
}

fn holder_eval(p: f64, v: Vec2) -> f64 {
    let a = v.x1.abs();
    let b = v.x2.abs();
    if p.is_infinite() {
        return a.max(b);
    }
    if p == 1.0 {
        return a + b;
    }
    if p == 2.0 {
        return a.hypot(b);
    }
    let m = a.max(b);
    if m == 0.0 {
        return 0.0;
    }
    // Scale out the magnitude so powf never over/underflows.
    m * ((a / m).powf(p) + (b / m).powf(p)).powf(1.0 / p)
}

/// The six sphere vertices of the polygon weight, in the fixed order
/// `(0,r), (1,1), (1,-1), (0,-r), (-1,-1), (-1,1)`.
pub fn polygon_vertices(r: f64) -> [Vec2; 6] {
    [
        Vec2::new(0.0, r),
        Vec2::new(1.0, 1.0),
        Vec2::new(1.0, -1.0),
        Vec2::new(0.0, -r),
        Vec2::new(-1.0, -1.0),
        Vec2::new(-1.0, 1.0),
    ]
}

/// Scale `s > 0` such that `s·v` lies on the closed polyline through
/// `vertices` (consecutive points joined, last joined to first).
/// `None` if no edge is crossed (direction outside the polyline's
/// angular coverage, or `v = 0`).
pub(crate) fn ray_boundary_scale(vertices: &[Vec2], v: Vec2) -> Option<f64> {
    if vertices.len() < 2 || (v.x1 == 0.0 && v.x2 == 0.0) {
        return None;
    }
    let mut best: Option<f64> = None;
    let n = vertices.len();
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let d = b - a;
        let denom = v.cross(d);
        if denom == 0.0 {
            // Edge parallel to the ray; a crossing at a shared vertex is
            // picked up by the adjacent edge.
            continue;
        }
        let s = a.cross(d) / denom;
        let u = a.cross(v) / denom;
        if s > 0.0 && (-1e-12..=1.0 + 1e-12).contains(&u) {
            best = Some(best.map_or(s, |t: f64| t.max(s)));
        }
    }
    best
}

/// Gauge of a polyline star-shaped about the origin: `‖v‖ = 1/s` where
/// `s·v` is the ray's crossing of the polyline.
pub(crate) fn polyline_gauge(vertices: &[Vec2], v: Vec2) -> f64 {
    match ray_boundary_scale(vertices, v) {
        Some(s) => 1.0 / s,
        None => 0.0,
    }
}

/// A closed sphere polyline defining a weight by homogeneous extension.
///
/// Construction symmetrizes the input (a weight satisfies `‖-v‖ = ‖v‖`,
/// so the sphere must be centrally symmetric), orders points by polar
/// angle, and rejects input that is not star-shaped about the origin:
/// two different radii on one ray are inconsistent.
pub struct SpherePolyline {
    /// Vertices in strictly increasing polar-angle order.
    pub vertices: Vec<Vec2>,
}

impl SpherePolyline {
    pub fn new(points: Vec<Vec2>) -> Result<Self> {
        let mut pts: Vec<Vec2> = Vec::with_capacity(points.len() * 2);
        for p in points {
            if !p.is_finite() {
                return Err(Error::InvalidInput("sphere point is not finite".into()));
            }
            if p.norm2() == 0.0 {
                return Err(Error::InvalidInput("sphere point at the origin".into()));
            }
            pts.push(p);
            pts.push(-p);
        }
        pts.sort_by(|a, b| {
            let ta = a.x2.atan2(a.x1);
            let tb = b.x2.atan2(b.x1);
            ta.partial_cmp(&tb).unwrap()
        });
        // Collapse points sharing a ray; reject if their radii disagree.
        let mut vertices: Vec<Vec2> = Vec::with_capacity(pts.len());
        for p in pts {
            if let Some(&last) = vertices.last() {
                if same_ray(last, p) {
                    let (ra, rb) = (last.norm2(), p.norm2());
                    if (ra - rb).abs() > REL_TOL * ra.max(rb) {
                        return Err(Error::InvalidInput(
                            "sphere polyline is not star-shaped: two radii on one ray".into(),
                        ));
                    }
                    continue;
                }
            }
            vertices.push(p);
        }
        // Wraparound duplicate (first and last on the same ray).
        if vertices.len() >= 2 && same_ray(vertices[0], *vertices.last().unwrap()) {
            let (ra, rb) = (vertices[0].norm2(), vertices.last().unwrap().norm2());
            if (ra - rb).abs() > REL_TOL * ra.max(rb) {
                return Err(Error::InvalidInput(
                    "sphere polyline is not star-shaped: two radii on one ray".into(),
                ));
            }
            vertices.pop();
        }
        if vertices.len() < 4 {
            return Err(Error::InvalidInput(
                "sphere polyline needs at least two independent directions".into(),
            ));
        }
        Ok(SpherePolyline { vertices })
    }

    /// True iff the sphere polygon is convex (which makes the extended
    /// weight a norm).
    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        let mut orient = 0.0f64;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let c = self.vertices[(i + 2) % n];
            let cr = (b - a).cross(c - b);
            if cr != 0.0 {
                if orient == 0.0 {
                    orient = cr;
                } else if orient * cr < 0.0 {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for SpherePolyline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpherePolyline[{} pts]", self.vertices.len())
    }
}

fn same_ray(a: Vec2, b: Vec2) -> bool {
    a.cross(b).abs() <= 1e-12 * a.norm2() * b.norm2() && a.dot(b) > 0.0
}

fn parse_sphere_csv(text: &str) -> Result<Vec<Vec2>> {
    let mut points = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        // Tolerate a header row.
        if lineno == 0 && line.chars().any(|c| c.is_alphabetic()) {
            continue;
        }
        let mut it = line.split(',');
        let (x1, x2) = (it.next(), it.next());
        let parse = |s: Option<&str>| -> Result<f64> {
            s.ok_or_else(|| Error::Parse(format!("line {}: expected x1,x2", lineno + 1)))?
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad number", lineno + 1)))
        };
        points.push(Vec2::new(parse(x1)?, parse(x2)?));
    }
    Ok(points)
}

/// Sampling check that a weight is absolutely homogeneous and
/// nonnegative. Run by the CLI on user-supplied weights before use;
/// built-ins are homogeneous by construction.
pub fn validate_homogeneity(w: &Weight, seed: u64, n: usize) -> Result<()> {
    use rand::Rng;
    let mut rng = crate::sampling::rng(seed);
    for _ in 0..n {
        let v = Vec2::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        let r: f64 = rng.gen_range(-100.0..100.0);
        let base = w.eval(v);
        if !base.is_finite() || base < 0.0 {
            return Err(Error::InvalidInput(format!(
                "weight produced invalid value {base} at {v}"
            )));
        }
        let scaled = w.eval(v.scale(r));
        let expect = r.abs() * base;
        if (scaled - expect).abs() > REL_TOL * expect.max(1e-300) + ZERO_TOL {
            return Err(Error::InvalidInput(format!(
                "homogeneity violated: ‖{r}·{v}‖ = {scaled}, expected {expect}"
            )));
        }
    }
    Ok(())
}
