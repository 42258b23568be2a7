//! Command-line front end: every computation as a subcommand emitting
//! CSV or JSON for scripting.
//!
//! Exit codes: 0 success, 1 usage or computation error, 2 when the
//! result contains a genuine CSB violation (so scripts can scan weight
//! families for them).

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use crate::angle::{spade_product, theta, thy_angle, AngleResult};
use crate::axioms;
use crate::convexify::{self, generalized_thy_angle_with, hull_of_weight};
use crate::corners::{self, CornerSpec, CsbWitness, SpadeQuadratic};
use crate::error::Error;
use crate::plane_geometry as plane;
use crate::polar::{polar_decode, polar_encode, PolarCoord};
use crate::sampling::sample_rng;
use crate::vec2::Vec2;
use crate::weights::{validate_homogeneity, Weight};
use crate::Result;
use rand::Rng;

const EXIT_OK: i32 = 0;
const EXIT_ERROR: i32 = 1;
const EXIT_CSB_VIOLATION: i32 = 2;

#[derive(Parser)]
#[command(
    name = "angle-space",
    about = "Angles, polar coordinates and unit-ball geometry for weighted planes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Significant digits in emitted numbers.
    #[arg(long, global = true, default_value_t = 6)]
    precision: u32,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct WeightArg {
    /// Weight spec: lp:<p>, polygon:<r>, axis, hyperbola, sphere-file:<path>.
    #[arg(long)]
    weight: String,
}

#[derive(Subcommand)]
enum Command {
    /// Angle between two vectors (Thy angle, or the hull-gauge
    /// generalization with --generalized).
    Angle {
        #[command(flatten)]
        weight: WeightArg,
        /// First vector, as "x1,x2".
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true)]
        x: Vec2,
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true)]
        y: Vec2,
        /// Compute through the gauge of conv(B) instead.
        #[arg(long)]
        generalized: bool,
        /// Sphere samples for hull construction.
        #[arg(long, default_value_t = convexify::DEFAULT_SPHERE_SAMPLES)]
        n: usize,
    },
    /// Θ(t) = angle(x, y + t·x) sampled over a t-range, as CSV.
    ThetaCurve {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true)]
        x: Vec2,
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true)]
        y: Vec2,
        #[arg(long, allow_hyphen_values = true, default_value_t = -8.0)]
        t_min: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 8.0)]
        t_max: f64,
        #[arg(long, default_value_t = 321)]
        steps: usize,
    },
    /// Verify the angle-space axioms An1–An11; JSON report with
    /// witnesses for failures.
    Axioms {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, env = "ANGLE_SPACE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        n: u64,
        /// Pair for the An11 homeomorphism check.
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true, default_value = "1,0")]
        x: Vec2,
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true, default_value = "0,1")]
        y: Vec2,
        /// Check the generalized (hull-gauge) angle instead.
        #[arg(long)]
        generalized: bool,
    },
    /// Scan random pairs for CSB violations |⟨x|y⟩♠| > ‖x‖·‖y‖.
    CsbScan {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, env = "ANGLE_SPACE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        n: u64,
        /// Extra corner-direction hints "x1,x2" (auto-detected corners
        /// are always included).
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true)]
        hint: Vec<Vec2>,
    },
    /// Unit-sphere polyline as CSV (exact vertices for polygon weights).
    Sphere {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, default_value_t = 256)]
        n: usize,
    },
    /// Polar-coordinate encode/decode.
    Polar {
        #[command(subcommand)]
        op: PolarOp,
    },
    /// Hull of the unit ball as CSV vertices.
    Convexify {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, default_value_t = convexify::DEFAULT_SPHERE_SAMPLES)]
        n: usize,
    },
    /// Verify a concave-corner spec and emit its CSB witness.
    Corner {
        #[command(flatten)]
        weight: WeightArg,
        /// Auto-detect corners instead of checking an explicit spec.
        #[arg(long)]
        detect: bool,
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true, required_unless_present = "detect")]
        y_hat: Option<Vec2>,
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true, required_unless_present = "detect")]
        x_bar: Option<Vec2>,
        #[arg(long, default_value_t = 1.0)]
        eps: f64,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "detect")]
        m_minus: Option<f64>,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "detect")]
        m_plus: Option<f64>,
        #[arg(long, default_value_t = 101)]
        grid_n: usize,
    },
    /// Run the plane-geometry proof oracles.
    #[command(hide = true)]
    ProveLemmas {
        #[arg(long, env = "ANGLE_SPACE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum PolarOp {
    Encode {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true, default_value = "1,0")]
        b1: Vec2,
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true, default_value = "0,1")]
        b2: Vec2,
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true)]
        v: Vec2,
    },
    Decode {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true, default_value = "1,0")]
        b1: Vec2,
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true, default_value = "0,1")]
        b2: Vec2,
        #[arg(long)]
        rho: f64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
    },
}

fn parse_vec2(s: &str) -> std::result::Result<Vec2, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected \"x1,x2\", got {s:?}"));
    }
    let x1 = parts[0].trim().parse().map_err(|_| format!("bad number {:?}", parts[0]))?;
    let x2 = parts[1].trim().parse().map_err(|_| format!("bad number {:?}", parts[1]))?;
    Ok(Vec2::new(x1, x2))
}

fn load_weight(spec: &str) -> Result<Weight> {
    let w = Weight::parse(spec)?;
    // User-supplied spheres get a homogeneity spot-check before use.
    if matches!(w, Weight::CustomSphere(_)) {
        validate_homogeneity(&w, 0, 200)?;
    }
    Ok(w)
}

/// Entry point used by the binary. Returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap help/version output goes to stdout with success.
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok((output, code)) => {
            let output = apply_precision(output, cli.precision);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, output) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return EXIT_ERROR;
                    }
                }
                None => {
                    let mut stdout = std::io::stdout().lock();
                    let _ = stdout.write_all(output.as_bytes());
                }
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

enum Output {
    Json(Value),
    Csv(String),
}

fn dispatch(cmd: &Command) -> Result<(Output, i32)> {
    match cmd {
        Command::Angle { weight, x, y, generalized, n } => cmd_angle(&weight.weight, *x, *y, *generalized, *n),
        Command::ThetaCurve { weight, x, y, t_min, t_max, steps } => {
            cmd_theta_curve(&weight.weight, *x, *y, *t_min, *t_max, *steps)
        }
        Command::Axioms { weight, seed, n, x, y, generalized } => {
            cmd_axioms(&weight.weight, *seed, *n, *x, *y, *generalized)
        }
        Command::CsbScan { weight, seed, n, hint } => cmd_csb_scan(&weight.weight, *seed, *n, hint),
        Command::Sphere { weight, n } => cmd_sphere(&weight.weight, *n),
        Command::Polar { op } => match op {
            PolarOp::Encode { weight, b1, b2, v } => cmd_polar_encode(&weight.weight, *b1, *b2, *v),
            PolarOp::Decode { weight, b1, b2, rho, alpha } => {
                cmd_polar_decode(&weight.weight, *b1, *b2, *rho, *alpha)
            }
        },
        Command::Convexify { weight, n } => cmd_convexify(&weight.weight, *n),
        Command::Corner { weight, detect, y_hat, x_bar, eps, m_minus, m_plus, grid_n } => {
            let spec = if *detect {
                None
            } else {
                Some(CornerSpec {
                    y_hat: y_hat.unwrap(),
                    x_bar: x_bar.unwrap(),
                    eps: *eps,
                    m_minus: m_minus.unwrap(),
                    m_plus: m_plus.unwrap(),
                })
            };
            cmd_corner(&weight.weight, spec, *grid_n)
        }
        Command::ProveLemmas { seed, n } => cmd_prove_lemmas(*seed, *n),
    }
    .map(|(out, code)| (out, code))
}

#[derive(Serialize)]
struct AngleOutput {
    weight: String,
    x: Vec2,
    y: Vec2,
    generalized: bool,
    angle_rad: Option<f64>,
    angle_deg: Option<f64>,
    product: f64,
    bound: f64,
    csb_ok: bool,
}

fn cmd_angle(spec: &str, x: Vec2, y: Vec2, generalized: bool, n: usize) -> Result<(Output, i32)> {
    let w = load_weight(spec)?;
    let result = if generalized {
        let hull = hull_of_weight(&w, n)?;
        generalized_thy_angle_with(&hull, x, y)?
    } else {
        thy_angle(&w, x, y)?
    };
    let bound = w.eval(x) * w.eval(y);
    let (angle_rad, product, csb_ok) = match result {
        AngleResult::Angle(a) => {
            let product = if generalized { a.cos() * bound } else { spade_product(&w, x, y) };
            (Some(a), product, true)
        }
        AngleResult::Violation { product, bound: _ } => (None, product, false),
    };
    let out = AngleOutput {
        weight: w.to_string(),
        x,
        y,
        generalized,
        angle_rad,
        angle_deg: angle_rad.map(f64::to_degrees),
        product,
        bound,
        csb_ok,
    };
    let code = if csb_ok { EXIT_OK } else { EXIT_CSB_VIOLATION };
    Ok((Output::Json(serde_json::to_value(out).unwrap()), code))
}

fn cmd_theta_curve(
    spec: &str,
    x: Vec2,
    y: Vec2,
    t_min: f64,
    t_max: f64,
    steps: usize,
) -> Result<(Output, i32)> {
    let w = load_weight(spec)?;
    if !(t_max > t_min) || steps < 2 {
        return Err(Error::InvalidInput("need t_max > t_min and steps ≥ 2".into()));
    }
    let mut csv = String::from("t,theta_rad\n");
    let mut values: Vec<Option<f64>> = Vec::with_capacity(steps);
    for k in 0..steps {
        let t = t_min + (t_max - t_min) * k as f64 / (steps - 1) as f64;
        let v = theta(&w, x, y, t).ok().and_then(|r| r.angle());
        match v {
            Some(a) => csv.push_str(&format!("{t},{a}\n")),
            None => csv.push_str(&format!("{t},nan\n")),
        }
        values.push(v);
    }
    let mut monotone = true;
    for pair in values.windows(2) {
        if let (Some(a), Some(b)) = (pair[0], pair[1]) {
            if b >= a - crate::tol::STRICT_TOL {
                monotone = false;
            }
        }
    }
    if values.iter().any(Option::is_none) {
        eprintln!("warning: Θ undefined at some grid points (zero-set hit or CSB violation)");
    }
    if !monotone {
        eprintln!("warning: Θ is not strictly decreasing on this grid");
    }
    Ok((Output::Csv(csv), EXIT_OK))
}

fn cmd_axioms(spec: &str, seed: u64, n: u64, x: Vec2, y: Vec2, generalized: bool) -> Result<(Output, i32)> {
    let w = load_weight(spec)?;
    let hull = if generalized { Some(hull_of_weight(&w, convexify::DEFAULT_SPHERE_SAMPLES)?) } else { None };
    let angle_fn = |a: Vec2, b: Vec2| -> Result<AngleResult> {
        match &hull {
            Some(h) => generalized_thy_angle_with(h, a, b),
            None => thy_angle(&w, a, b),
        }
    };
    let report = axioms::full_report(&w, &angle_fn, seed, n, x, y, &axioms::default_theta_grid());
    Ok((Output::Json(serde_json::to_value(report).unwrap()), EXIT_OK))
}

fn cmd_csb_scan(spec: &str, seed: u64, n: u64, extra_hints: &[Vec2]) -> Result<(Output, i32)> {
    let w = load_weight(spec)?;
    let mut hints: Vec<Vec2> = corners::detect_corners(&w, 256)
        .into_iter()
        .map(|s| s.y_hat)
        .collect();
    hints.extend_from_slice(extra_hints);
    let scan = axioms::csb_scan(&w, seed, n, &hints);
    let code = if scan.violations.is_empty() { EXIT_OK } else { EXIT_CSB_VIOLATION };
    Ok((Output::Json(serde_json::to_value(scan).unwrap()), code))
}

fn cmd_sphere(spec: &str, n: usize) -> Result<(Output, i32)> {
    let w = load_weight(spec)?;
    let (points, unbounded) = sphere_polyline(&w, n);
    let mut csv = String::from("x1,x2\n");
    for p in points {
        csv.push_str(&format!("{},{}\n", p.x1, p.x2));
    }
    if !unbounded.is_empty() {
        eprintln!("warning: {} direction(s) are unbounded (zero-set rays), omitted from the polyline", unbounded.len());
    }
    Ok((Output::Csv(csv), EXIT_OK))
}

/// Sphere polyline for output: weights defined by an exact polyline
/// contribute their true vertices; uniform directions fill up to `n`
/// points, all sorted by polar angle.
fn sphere_polyline(w: &Weight, n: usize) -> (Vec<Vec2>, Vec<Vec2>) {
    let exact: Option<Vec<Vec2>> = match w {
        Weight::Polygon(r) => Some(crate::weights::polygon_vertices(*r).to_vec()),
        Weight::CustomSphere(p) => Some(p.vertices.clone()),
        Weight::HullGauge(h) if h.lines.is_empty() && !h.full_plane => Some(h.vertices.clone()),
        _ => None,
    };
    match exact {
        Some(mut verts) => {
            let missing = n.saturating_sub(verts.len());
            for k in 0..missing {
                // Offset keeps fill directions away from the vertices.
                let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.37) / missing.max(1) as f64;
                if let Ok(s) = w.sign(Vec2::from_angle(theta)) {
                    verts.push(s);
                }
            }
            verts.sort_by(|a, b| {
                a.x2.atan2(a.x1).partial_cmp(&b.x2.atan2(b.x1)).unwrap()
            });
            verts.dedup_by(|a, b| (*a - *b).norm2() < 1e-12);
            (verts, Vec::new())
        }
        None => {
            let s = convexify::sample_sphere(w, n);
            (s.points, s.unbounded)
        }
    }
}

fn cmd_polar_encode(spec: &str, b1: Vec2, b2: Vec2, v: Vec2) -> Result<(Output, i32)> {
    let w = load_weight(spec)?;
    let p = polar_encode(&w, b1, b2, v)?;
    Ok((Output::Json(serde_json::to_value(p).unwrap()), EXIT_OK))
}

#[derive(Serialize)]
struct DecodeOutput {
    x1: f64,
    x2: f64,
}

fn cmd_polar_decode(spec: &str, b1: Vec2, b2: Vec2, rho: f64, alpha: f64) -> Result<(Output, i32)> {
    let w = load_weight(spec)?;
    let v = polar_decode(&w, b1, b2, PolarCoord { rho, alpha })?;
    Ok((
        Output::Json(serde_json::to_value(DecodeOutput { x1: v.x1, x2: v.x2 }).unwrap()),
        EXIT_OK,
    ))
}

fn cmd_convexify(spec: &str, n: usize) -> Result<(Output, i32)> {
    let w = load_weight(spec)?;
    let hull = hull_of_weight(&w, n)?;
    let mut csv = String::from("x1,x2\n");
    for p in &hull.vertices {
        csv.push_str(&format!("{},{}\n", p.x1, p.x2));
    }
    if hull.full_plane {
        eprintln!("warning: conv(B) is the whole plane; no vertices to emit");
    } else if !hull.lines.is_empty() {
        eprintln!("warning: hull is unbounded along {} line direction(s)", hull.lines.len());
    }
    Ok((Output::Csv(csv), EXIT_OK))
}

#[derive(Serialize)]
struct CornerCheck {
    spec: CornerSpec,
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expansion_at_delta: Option<SpadeQuadratic>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<CsbWitness>,
}

#[derive(Serialize)]
struct CornerOutput {
    weight: String,
    corners: Vec<CornerCheck>,
}

fn cmd_corner(spec: &str, corner: Option<CornerSpec>, grid_n: usize) -> Result<(Output, i32)> {
    let w = load_weight(spec)?;
    let specs: Vec<CornerSpec> = match corner {
        Some(s) => vec![s],
        None => corners::detect_corners(&w, 256),
    };
    let mut checks = Vec::new();
    let mut any_witness = false;
    for s in specs {
        let verified = corners::verify_concave_corner(&w, &s, grid_n)?;
        let k = corners::quadratic_coefficient(&w, &s).ok();
        let expansion = if verified {
            corners::spade_quadratic_p(&w, &s, (s.eps / 10.0).min(0.1)).ok()
        } else {
            None
        };
        let witness = if verified { corners::csb_witness_from_corner(&w, &s).ok() } else { None };
        any_witness |= witness.is_some();
        checks.push(CornerCheck { spec: s, verified, k, expansion_at_delta: expansion, witness });
    }
    let out = CornerOutput { weight: w.to_string(), corners: checks };
    let code = if any_witness { EXIT_CSB_VIOLATION } else { EXIT_OK };
    Ok((Output::Json(serde_json::to_value(out).unwrap()), code))
}

#[derive(Serialize)]
struct LemmaOutput {
    seed: u64,
    samples: u64,
    phor_max_residual: f64,
    phor_routes_max_gap: f64,
    phor_vertical_max_residual: f64,
    nu_max_deviation: f64,
    side_rule_ok: bool,
    set_containment_ok: bool,
    linf_h_plus_max_deviation: f64,
    linf_h_minus_max_deviation: f64,
    pass: bool,
}

fn cmd_prove_lemmas(seed: u64, n: u64) -> Result<(Output, i32)> {
    let mut phor_max_residual = 0.0f64;
    let mut phor_routes_max_gap = 0.0f64;
    let mut phor_vertical_max_residual = 0.0f64;
    let mut nu_max_deviation = 0.0f64;
    let mut side_rule_ok = true;

    for i in 0..n {
        let mut rng = sample_rng(seed, i);
        // Slanted-line samples with sane conditioning.
        let m = loop {
            let m: f64 = rng.gen_range(-4.0..4.0);
            if (m - 1.0).abs() > 0.1 {
                break m;
            }
        };
        let b = loop {
            let b: f64 = rng.gen_range(-5.0..5.0);
            if b.abs() > 0.25 {
                break b;
            }
        };
        let p = plane::phor(m, b)?;
        let (r1, r2) = plane::phor_residuals(m, b, p);
        phor_max_residual = phor_max_residual.max(r1.abs()).max(r2.abs());
        let p2 = plane::phor_from_gt(m, b)?;
        let p3 = plane::phor_from_gs(m, b)?;
        let scale = p.norm2().max(1.0);
        phor_routes_max_gap = phor_routes_max_gap
            .max((p - p2).norm2() / scale)
            .max((p - p3).norm2() / scale);

        // Vertical lines.
        let a = loop {
            let a: f64 = rng.gen_range(-5.0..5.0);
            if a.abs() > 0.25 {
                break a;
            }
        };
        let pv = plane::phor_vertical(a)?;
        let s = Vec2::new(a, a - 1.0);
        let t = Vec2::new(a, a + 1.0);
        let res_s = Vec2::new(pv.x1 + 1.0, pv.x2).cross(s)
            / (Vec2::new(pv.x1 + 1.0, pv.x2).norm2() * s.norm2());
        let res_t = Vec2::new(pv.x1 - 1.0, pv.x2).cross(t)
            / (Vec2::new(pv.x1 - 1.0, pv.x2).norm2() * t.norm2());
        phor_vertical_max_residual = phor_vertical_max_residual.max(res_s.abs()).max(res_t.abs());

        // Projection lemma.
        let pm = loop {
            let pm: f64 = rng.gen_range(-3.0..3.0);
            if (pm.abs() - 1.0).abs() > 0.05 {
                break pm;
            }
        };
        let x_hat = loop {
            let x: f64 = rng.gen_range(-5.0..5.0);
            if (pm * x + 1.0).abs() > 1e-3 {
                break x;
            }
        };
        let proj = plane::projections_and_nu(pm, x_hat, pm * x_hat + 1.0)?;
        nu_max_deviation = nu_max_deviation.max((proj.nu - 1.0).abs());
        let same_side = proj.s_bar.x2 * proj.t_bar.x2 > 0.0;
        side_rule_ok &= same_side == ((1.0 - pm) * (1.0 + pm) > 0.0);
    }

    // Sphere containment in Set1 ∪ Set2 for seminorms with normalized
    // axis unit vectors.
    let mut set_containment_ok = true;
    for w in [Weight::Holder(1.0), Weight::Holder(2.0), Weight::Holder(5.0), Weight::Holder(f64::INFINITY)] {
        for k in 0..1024 {
            let dir = Vec2::from_angle(2.0 * std::f64::consts::PI * k as f64 / 1024.0);
            let s = w.sign(dir)?;
            set_containment_ok &= plane::in_set1(s) || plane::in_set2(s);
        }
    }

    // Constancy intervals of h± for the max norm.
    let w = Weight::Holder(f64::INFINITY);
    let x = Vec2::new(1.0, 0.0);
    let y = Vec2::new(0.0, 1.0);
    let mut hp_dev = 0.0f64;
    let mut hm_dev = 0.0f64;
    for k in 0..=100 {
        let t = -1.0 + k as f64 / 100.0;
        hp_dev = hp_dev.max((crate::angle::h_plus(&w, x, y, t)? - 1.0).abs());
        hm_dev = hm_dev.max((crate::angle::h_minus(&w, x, y, t + 1.0)? - 1.0).abs());
    }

    let pass = phor_max_residual < 1e-12
        && phor_routes_max_gap < 1e-9
        && phor_vertical_max_residual < 1e-12
        && nu_max_deviation < 1e-12
        && side_rule_ok
        && set_containment_ok
        && hp_dev < 1e-12
        && hm_dev < 1e-12;
    let out = LemmaOutput {
        seed,
        samples: n,
        phor_max_residual,
        phor_routes_max_gap,
        phor_vertical_max_residual,
        nu_max_deviation,
        side_rule_ok,
        set_containment_ok,
        linf_h_plus_max_deviation: hp_dev,
        linf_h_minus_max_deviation: hm_dev,
        pass,
    };
    Ok((Output::Json(serde_json::to_value(out).unwrap()), if pass { EXIT_OK } else { EXIT_ERROR }))
}

/// Round every number in the output to `digits` significant digits
/// (17+ leaves values untouched).
fn apply_precision(out: Output, digits: u32) -> String {
    match out {
        Output::Json(mut v) => {
            if digits < 17 {
                round_value(&mut v, digits);
            }
            let mut s = serde_json::to_string(&v).unwrap();
            s.push('\n');
            s
        }
        Output::Csv(s) => {
            if digits >= 17 {
                return s;
            }
            let mut rounded = String::with_capacity(s.len());
            for line in s.lines() {
                let cells: Vec<String> = line
                    .split(',')
                    .map(|c| match c.parse::<f64>() {
                        Ok(x) => fmt_sig(x, digits),
                        Err(_) => c.to_string(),
                    })
                    .collect();
                rounded.push_str(&cells.join(","));
                rounded.push('\n');
            }
            rounded
        }
    }
}

fn round_value(v: &mut Value, digits: u32) {
    match v {
        Value::Number(n) => {
            if let Some(x) = n.as_f64() {
                if n.is_f64() {
                    if let Some(r) = serde_json::Number::from_f64(round_sig(x, digits)) {
                        *v = Value::Number(r);
                    }
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(|i| round_value(i, digits)),
        Value::Object(map) => map.values_mut().for_each(|i| round_value(i, digits)),
        _ => {}
    }
}

fn round_sig(x: f64, digits: u32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor();
    let factor = 10f64.powi(digits as i32 - 1 - magnitude as i32);
    (x * factor).round() / factor
}

fn fmt_sig(x: f64, digits: u32) -> String {
    format!("{}", round_sig(x, digits))
}
