//! Acceptance suite: the library's external contract, one test per
//! criterion. Each prints a `[acceptance] criterion N PASS` line (visible
//! with `--nocapture`); a failing assertion names its criterion.
//!
//! Run with:
//!
//! ```text
//! cargo test -p angle-space --test acceptance -- --nocapture
//! ```

use std::f64::consts::{FRAC_PI_2, PI};

use angle_space::angle::{euclid_angle, h_minus, h_plus, theta, thy_angle};
use angle_space::axioms::{self, AxiomId, AxiomStatus};
use angle_space::convexify::{generalized_thy_angle_with, hull_of_weight};
use angle_space::corners::{self, CornerSpec};
use angle_space::plane_geometry as plane;
use angle_space::polar::{polar_decode, polar_encode};
use angle_space::sampling::{sample_rng, VectorSampler};
use angle_space::{AngleResult, Vec2, Weight};
use rand::Rng;

const E1: Vec2 = Vec2::new(1.0, 0.0);
const E2: Vec2 = Vec2::new(0.0, 1.0);

fn pass(n: u32, what: &str) {
    println!("[acceptance] criterion {n} PASS: {what}");
}

fn thy_fn(w: &Weight) -> impl Fn(Vec2, Vec2) -> angle_space::Result<AngleResult> + '_ {
    move |x, y| thy_angle(w, x, y)
}

/// Criterion 1: ℓ¹ regression values.
#[test]
fn criterion_1_l1_regression() {
    let w = Weight::Holder(1.0);

    let right = thy_angle(&w, E1, E2).unwrap().angle().unwrap();
    assert_eq!(right, FRAC_PI_2, "criterion 1: angle(e1, e2) must be exactly π/2");

    let diag = thy_angle(&w, E1, Vec2::new(1.0, 1.0)).unwrap().angle().unwrap();
    assert!(
        (diag - 0.75f64.acos()).abs() < 1e-12,
        "criterion 1: angle(e1, (1,1)) = {diag}, want arccos(3/4)"
    );
    let degrees = (diag.to_degrees() * 100.0).round() / 100.0;
    assert_eq!(degrees, 41.41, "criterion 1: prints as 41.41°");

    pass(1, "ℓ¹ angles π/2 and arccos(3/4) ≈ 41.41°");
}

/// Criterion 2: the ℓ¹ additivity counterexamples with the classic
/// witnesses.
#[test]
fn criterion_2_l1_additivity_counterexamples() {
    let w = Weight::Holder(1.0);
    let report = axioms::check_additivity(&w, &thy_fn(&w), 2, 2000);

    let an8 = report.entry(AxiomId::An8).unwrap();
    assert_eq!(an8.status, AxiomStatus::Fail, "criterion 2: An8 must fail for ℓ¹");
    let w8 = an8.witness.as_ref().unwrap();
    assert_eq!((w8.x, w8.y), (E1, E2), "criterion 2: witness must be the axis pair");
    let gap = w8.measured - w8.expected;
    assert!(
        (gap - (2.0 * 0.75f64.acos() - FRAC_PI_2)).abs() < 1e-12,
        "criterion 2: gap must equal 2·arccos(3/4) − π/2"
    );
    assert!(gap.abs() > 0.1, "criterion 2: |gap| = {} must exceed 0.1 rad", gap.abs());

    let an9 = report.entry(AxiomId::An9).unwrap();
    assert_eq!(an9.status, AxiomStatus::Fail, "criterion 2: An9 must fail for ℓ¹");
    let w9 = an9.witness.as_ref().unwrap();
    assert!(
        w9.measured < PI - 0.1,
        "criterion 2: triangle angle sum {} must fall short of π",
        w9.measured
    );

    assert_eq!(
        report.entry(AxiomId::An10).unwrap().status,
        AxiomStatus::Fail,
        "criterion 2: An10 must fail for ℓ¹"
    );

    pass(2, "ℓ¹ breaks An8 (gap 2·arccos(3/4) − π/2), An9 (sum < π), An10");
}

/// Criterion 3: Θ strictly decreasing with the right limits, across the
/// Hölder family, 100 random independent pairs each.
#[test]
fn criterion_3_theta_monotone_homeomorphism() {
    let grid = axioms::default_theta_grid();
    for p in [1.0, 1.5, 2.0, 3.0, f64::INFINITY] {
        let w = Weight::Holder(p);
        let sampler = VectorSampler::new(&w, 33);
        for i in 0..100 {
            let (x, y) = sampler.pair(i);
            let mut prev: Option<f64> = None;
            for &t in &grid {
                let v = theta(&w, x, y, t)
                    .unwrap_or_else(|e| panic!("criterion 3: Θ undefined (p={p}, t={t}): {e}"))
                    .angle()
                    .unwrap();
                if let Some(prev) = prev {
                    assert!(
                        v <= prev + 1e-12,
                        "criterion 3: Θ increased (p={p}, pair {i}, t={t}): {prev} → {v}"
                    );
                }
                prev = Some(v);
            }
            let at_lo = theta(&w, x, y, -1e6).unwrap().angle().unwrap();
            let at_hi = theta(&w, x, y, 1e6).unwrap().angle().unwrap();
            assert!(
                (at_lo - PI).abs() < 1e-4,
                "criterion 3: Θ(−10⁶) = {at_lo} too far from π (p={p})"
            );
            assert!(at_hi < 1e-4, "criterion 3: Θ(10⁶) = {at_hi} too far from 0 (p={p})");
        }
    }
    pass(3, "Θ decreasing on the grid with limits π and 0 for lp:{1, 1.5, 2, 3, ∞}");
}

/// Criterion 4: polar roundtrip at relative 1e-6.
#[test]
fn criterion_4_polar_roundtrip() {
    for p in [1.0, 2.0, 3.0] {
        let w = Weight::Holder(p);
        let sampler = VectorSampler::new(&w, 44);
        for i in 0..1000 {
            let v = sampler.vector(i);
            let coords = polar_encode(&w, E1, E2, v)
                .unwrap_or_else(|e| panic!("criterion 4: encode failed (p={p}, v={v}): {e}"));
            let back = polar_decode(&w, E1, E2, coords)
                .unwrap_or_else(|e| panic!("criterion 4: decode failed (p={p}, v={v}): {e}"));
            assert!(
                (back - v).norm2() <= 1e-6 * v.norm2(),
                "criterion 4: roundtrip drift (p={p}): {v} → {back}"
            );
        }
    }
    pass(4, "decode(encode(v)) within 1e-6 relative for lp:{1, 2, 3}, 10³ vectors each");
}

/// Criterion 5: CSB dichotomy — clean for norms, violated with the
/// quantified witness at the polygon corner.
#[test]
fn criterion_5_csb_dichotomy() {
    for p in [1.0, 1.5, 2.0, 3.0, f64::INFINITY] {
        let scan = axioms::csb_scan_auto(&Weight::Holder(p), 5, 10_000);
        assert!(
            scan.violations.is_empty(),
            "criterion 5: lp:{p} must satisfy CSB, found {:?}",
            scan.violations.first()
        );
    }

    let w = Weight::Polygon(0.5);
    let spec = CornerSpec::polygon(0.5);
    let k = corners::quadratic_coefficient(&w, &spec).unwrap();
    assert!(k.abs() < 1e-12, "criterion 5: K = {k}, want 0");
    let expansion = corners::spade_quadratic_p(&w, &spec, 0.1).unwrap();
    assert!(
        (expansion.closed - 1.2).abs() < 1e-12,
        "criterion 5: P♠(0.1) = 1 + 2·0.1 = 1.2, got {}",
        expansion.closed
    );
    let witness = corners::csb_witness_from_corner(&w, &spec).unwrap();
    assert!(
        (witness.product - 1.2).abs() < 1e-9,
        "criterion 5: witness product {} must be 1.2 ± 1e-9",
        witness.product
    );
    assert!(witness.product > 1.0, "criterion 5: witness product must exceed the bound");
    for v in [witness.u, witness.v] {
        assert!(
            (w.eval(v) - 1.0).abs() < 1e-9,
            "criterion 5: witness vectors must be unit, ‖{v}‖ = {}",
            w.eval(v)
        );
    }

    pass(5, "CSB clean on lp:p ≥ 1 (10⁴ samples); polygon:0.5 witness product 1.2 (K = 0, δ = 0.1)");
}

/// Criterion 6: convexification — exact square hull, generalized angle
/// values.
#[test]
fn criterion_6_convexification() {
    let w = Weight::Polygon(0.5);
    let hull = hull_of_weight(&w, 64).unwrap();
    assert_eq!(hull.vertices.len(), 4, "criterion 6: hull must be the square");
    for v in &hull.vertices {
        assert_eq!(v.x1.abs(), 1.0, "criterion 6: vertex {v} must be (±1, ±1)");
        assert_eq!(v.x2.abs(), 1.0, "criterion 6: vertex {v} must be (±1, ±1)");
    }

    let right = generalized_thy_angle_with(&hull, E1, E2).unwrap().angle().unwrap();
    assert!(
        (right - FRAC_PI_2).abs() < 1e-12,
        "criterion 6: generalized angle(e1, e2) = {right}, want π/2"
    );

    let l1 = Weight::Holder(1.0);
    let l1_hull = hull_of_weight(&l1, 1024).unwrap();
    let sampler = VectorSampler::new(&l1, 66);
    for i in 0..1000 {
        let (x, y) = sampler.pair(i);
        let plain = thy_angle(&l1, x, y).unwrap().angle().unwrap();
        let gen = generalized_thy_angle_with(&l1_hull, x, y).unwrap().angle().unwrap();
        assert!(
            (plain - gen).abs() <= 1e-9,
            "criterion 6: generalized must equal plain Thy for ℓ¹ at ({x}, {y}): {plain} vs {gen}"
        );
    }

    pass(6, "hull(polygon:0.5) = square; generalized angle π/2; ℓ¹ generalized ≡ plain (10³ pairs)");
}

/// Criterion 7: inner-product agreement for the Euclidean weight.
#[test]
fn criterion_7_ip_agreement() {
    let w = Weight::Holder(2.0);
    let sampler = VectorSampler::new(&w, 77);
    let mut worst = 0.0f64;
    for i in 0..10_000 {
        let (x, y) = sampler.pair(i);
        let thy = thy_angle(&w, x, y).unwrap().angle().unwrap();
        let euc = euclid_angle(x, y).unwrap();
        worst = worst.max((thy - euc).abs());
        assert!(
            (thy - euc).abs() < 1e-10,
            "criterion 7: Thy {thy} vs Euclid {euc} at ({x}, {y})"
        );
    }
    pass(7, &format!("lp:2 Thy ≡ Euclid on 10⁴ pairs (worst gap {worst:.2e})"));
}

/// Criterion 8: plane-geometry oracles and the max-norm constancy
/// intervals.
#[test]
fn criterion_8_proof_lemma_oracles() {
    // Picture-2 point, exact.
    assert_eq!(plane::phor(-1.0, 5.0).unwrap(), Vec2::new(2.6, 2.4), "criterion 8: P_hor");

    let mut max_residual = 0.0f64;
    let mut max_nu_dev = 0.0f64;
    for i in 0..10_000u64 {
        let mut rng = sample_rng(88, i);
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
        let p = plane::phor(m, b).unwrap();
        let (r1, r2) = plane::phor_residuals(m, b, p);
        max_residual = max_residual.max(r1.abs()).max(r2.abs());

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
        let proj = plane::projections_and_nu(pm, x_hat, pm * x_hat + 1.0).unwrap();
        max_nu_dev = max_nu_dev.max((proj.nu - 1.0).abs());
    }
    assert!(max_residual < 1e-12, "criterion 8: collinearity residual {max_residual}");
    assert!(max_nu_dev < 1e-12, "criterion 8: ν deviation {max_nu_dev}");

    let w = Weight::Holder(f64::INFINITY);
    for k in 0..=100 {
        let t = -1.0 + k as f64 / 100.0;
        let hp = h_plus(&w, E1, E2, t).unwrap();
        assert!((hp - 1.0).abs() < 1e-12, "criterion 8: h₊({t}) = {hp}, want 1");
        let hm = h_minus(&w, E1, E2, t + 1.0).unwrap();
        assert!((hm - 1.0).abs() < 1e-12, "criterion 8: h₋({}) = {hm}, want 1", t + 1.0);
    }

    pass(8, &format!(
        "P_hor exact; residuals ≤ {max_residual:.1e}; ν − 1 ≤ {max_nu_dev:.1e}; ℓ∞ h± constancy"
    ));
}

/// Criterion 9: the degenerate examples behave as documented.
#[test]
fn criterion_9_degenerate_examples() {
    // Axis seminorm: Θ jumps at t = −1 and An11 fails.
    let axis = Weight::AxisSeminorm;
    let x = E1;
    let y = Vec2::new(1.0, 1.0);
    let before = theta(&axis, x, y, -1.5).unwrap().angle().unwrap();
    let after = theta(&axis, x, y, 0.0).unwrap().angle().unwrap();
    assert_eq!(before, PI, "criterion 9: Θ(t < −1) must be π");
    assert_eq!(after, 0.0, "criterion 9: Θ(t > −1) must be 0");
    let outcome = axioms::check_an11(
        &|a, b| thy_angle(&axis, a, b),
        x,
        y,
        &axioms::default_theta_grid(),
    );
    assert_eq!(outcome.status, AxiomStatus::Fail, "criterion 9: An11 must fail for the axis seminorm");
    assert!(
        outcome.plateau_violations > 0 || outcome.undefined_points > 0,
        "criterion 9: the jump must be visible as plateaus or a zero-set hit"
    );

    // Hyperbola weight: every angle is 0, π/2 or π.
    let hyp = Weight::Hyperbola;
    let sampler = VectorSampler::new(&hyp, 99);
    for i in 0..1000 {
        let (a, b) = sampler.pair(i);
        let angle = thy_angle(&hyp, a, b).unwrap().angle().unwrap();
        let dist = [0.0, FRAC_PI_2, PI]
            .iter()
            .map(|v| (angle - v).abs())
            .fold(f64::INFINITY, f64::min);
        assert!(
            dist <= 1e-9,
            "criterion 9: hyperbola angle {angle} at ({a}, {b}) is {dist:.2e} from {{0, π/2, π}}"
        );
    }

    pass(9, "axis seminorm An11 jump at t = −1; hyperbola angles in {0, π/2, π}");
}
