//! Numerical verification of the angle-space axioms An1–An11 for a
//! weight plus angle function, with machine-readable reports.
//!
//! An1–An5 are the defining conditions of an angle space; An6–An11 are
//! desirable extras, so the report marks An1–An5 as `required` and the
//! rest as optional. Every failed entry carries a witness that
//! reproduces the violation when re-run through the angle function.
//!
//! Reports are deterministic given `(weight, seed, n)`: sample `i` draws
//! from an RNG stream derived from `(seed, i)`, so scans can be
//! parallelized without changing results.

use serde::Serialize;

use crate::angle::{spade_product, thy_angle, AngleResult};
use crate::corners;
use crate::sampling::{sample_rng, VectorSampler};
use crate::tol::{AXIOM_TOL, ENDPOINT_TOL, STRICT_TOL};
use crate::vec2::Vec2;
use crate::weights::Weight;
use crate::Result;
use rand::Rng;

/// Angle function under test. `thy_angle` and the generalized variant
/// both fit; the checkers only need the `(x, y) → AngleResult` shape.
pub type AngleFn<'a> = dyn Fn(Vec2, Vec2) -> Result<AngleResult> + 'a;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AxiomId {
    An1,
    An2,
    An3,
    An4,
    An5,
    An6,
    An7,
    An8,
    An9,
    An10,
    An11,
}

impl AxiomId {
    /// An1–An5 define an angle space; the rest are optional extras.
    pub fn required(self) -> bool {
        matches!(self, AxiomId::An1 | AxiomId::An2 | AxiomId::An3 | AxiomId::An4 | AxiomId::An5)
    }
}

impl std::fmt::Display for AxiomId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// Inputs and measured values reproducing a failure.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub x: Vec2,
    pub y: Vec2,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    pub measured: f64,
    pub expected: f64,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomEntry {
    pub id: AxiomId,
    pub status: AxiomStatus,
    pub samples: u64,
    pub required: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub weight: String,
    pub seed: u64,
    pub axioms: Vec<AxiomEntry>,
}

impl AxiomReport {
    pub fn entry(&self, id: AxiomId) -> Option<&AxiomEntry> {
        self.axioms.iter().find(|e| e.id == id)
    }

    pub fn all_pass(&self) -> bool {
        self.axioms.iter().all(|e| e.status == AxiomStatus::Pass)
    }
}

/// Per-axiom accumulator.
struct Tally {
    id: AxiomId,
    samples: u64,
    witness: Option<Witness>,
}

impl Tally {
    fn new(id: AxiomId) -> Self {
        Tally { id, samples: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.samples += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn entry(self) -> AxiomEntry {
        let status = if self.samples == 0 {
            AxiomStatus::NotApplicable
        } else if self.witness.is_some() {
            AxiomStatus::Fail
        } else {
            AxiomStatus::Pass
        };
        AxiomEntry {
            id: self.id,
            status,
            samples: self.samples,
            required: self.id.required(),
            witness: self.witness,
        }
    }
}

/// Canonical pairs tried before the random stream, so the classic
/// counterexamples always appear as witnesses.
fn canonical_pairs() -> [(Vec2, Vec2); 3] {
    [
        (Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)),
        (Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0)),
        (Vec2::new(1.0, 2.0), Vec2::new(-3.0, 1.0)),
    ]
}

fn nth_pair(w: &Weight, sampler: &VectorSampler, i: u64) -> Option<(Vec2, Vec2)> {
    let canon = canonical_pairs();
    if (i as usize) < canon.len() {
        let (x, y) = canon[i as usize];
        if !w.in_zero_set(x) && !w.in_zero_set(y) {
            return Some((x, y));
        }
        return None; // canonical pair unusable for this weight
    }
    Some(sampler.pair(i))
}

fn angle_of(angle: &AngleFn, x: Vec2, y: Vec2) -> Option<f64> {
    angle(x, y).ok().and_then(|r| r.angle())
}

/// Check An1–An7 on `n` sampled pairs.
///
/// An1 (continuity) is verified heuristically: the angle drift under a
/// relative perturbation of `x` must shrink with the perturbation. Two
/// scales (1e-4 and 1e-6) are probed; a drift at the fine scale that
/// neither halves the coarse drift nor stays below an absolute floor
/// marks a discontinuity. Continuity is analytic and not finitely
/// checkable; this is a documented heuristic.
pub fn check_basic(w: &Weight, angle: &AngleFn, seed: u64, n: u64) -> AxiomReport {
    let sampler = VectorSampler::new(w, seed);
    let mut t1 = Tally::new(AxiomId::An1);
    let mut t2 = Tally::new(AxiomId::An2);
    let mut t3 = Tally::new(AxiomId::An3);
    let mut t4 = Tally::new(AxiomId::An4);
    let mut t5 = Tally::new(AxiomId::An5);
    let mut t6 = Tally::new(AxiomId::An6);
    let mut t7 = Tally::new(AxiomId::An7);

    for i in 0..n {
        let Some((x, y)) = nth_pair(w, &sampler, i) else { continue };
        let mut rng = sample_rng(seed ^ 0xA5A5_5A5A, i);

        if let Some(a) = angle_of(angle, x, x) {
            t2.record(a.abs() <= AXIOM_TOL, || Witness {
                x,
                y: x,
                t: None,
                measured: a,
                expected: 0.0,
                detail: "angle(x, x) must be 0".into(),
            });
        }
        if let Some(a) = angle_of(angle, -x, x) {
            t3.record((a - std::f64::consts::PI).abs() <= AXIOM_TOL, || Witness {
                x: -x,
                y: x,
                t: None,
                measured: a,
                expected: std::f64::consts::PI,
                detail: "angle(-x, x) must be π".into(),
            });
        }
        if let (Some(ab), Some(ba)) = (angle_of(angle, x, y), angle_of(angle, y, x)) {
            t4.record((ab - ba).abs() <= AXIOM_TOL, || Witness {
                x,
                y,
                t: None,
                measured: ab - ba,
                expected: 0.0,
                detail: "angle must be symmetric".into(),
            });
        }
        let (r, s): (f64, f64) = (rng.gen_range(0.01..100.0), rng.gen_range(0.01..100.0));
        if let (Some(a), Some(b)) = (angle_of(angle, x, y), angle_of(angle, x.scale(r), y.scale(s)))
        {
            t5.record((a - b).abs() <= AXIOM_TOL, || Witness {
                x,
                y,
                t: None,
                measured: b,
                expected: a,
                detail: format!("positive scaling ({r}, {s}) must not change the angle"),
            });
        }
        if let (Some(a), Some(b)) = (angle_of(angle, x, y), angle_of(angle, -x, -y)) {
            t6.record((a - b).abs() <= AXIOM_TOL, || Witness {
                x,
                y,
                t: None,
                measured: b,
                expected: a,
                detail: "angle(-x, -y) must equal angle(x, y)".into(),
            });
        }
        if let (Some(a), Some(b)) = (angle_of(angle, x, y), angle_of(angle, -x, y)) {
            t7.record((a + b - std::f64::consts::PI).abs() <= AXIOM_TOL, || Witness {
                x,
                y,
                t: None,
                measured: a + b,
                expected: std::f64::consts::PI,
                detail: "angle(x, y) + angle(-x, y) must be π".into(),
            });
        }

        // An1 continuity probe.
        let dir = Vec2::from_angle(rng.gen_range(0.0..std::f64::consts::TAU));
        let scale = x.norm2();
        let coarse = x + dir.scale(1e-4 * scale);
        let fine = x + dir.scale(1e-6 * scale);
        if let (Some(a0), Some(ac), Some(af)) = (
            angle_of(angle, x, y),
            angle_of(angle, coarse, y),
            angle_of(angle, fine, y),
        ) {
            let drift_c = (ac - a0).abs();
            let drift_f = (af - a0).abs();
            let ok = drift_f <= (0.5 * drift_c).max(1e-4);
            t1.record(ok, || Witness {
                x,
                y,
                t: None,
                measured: drift_f,
                expected: 0.5 * drift_c,
                detail: "angle drift does not shrink with the perturbation".into(),
            });
        }
    }

    AxiomReport {
        weight: w.to_string(),
        seed,
        axioms: vec![
            t1.entry(),
            t2.entry(),
            t3.entry(),
            t4.entry(),
            t5.entry(),
            t6.entry(),
            t7.entry(),
        ],
    }
}

/// Check the additivity axioms An8–An10 on `n` sampled pairs.
pub fn check_additivity(w: &Weight, angle: &AngleFn, seed: u64, n: u64) -> AxiomReport {
    let sampler = VectorSampler::new(w, seed);
    let mut t8 = Tally::new(AxiomId::An8);
    let mut t9 = Tally::new(AxiomId::An9);
    let mut t10 = Tally::new(AxiomId::An10);

    for i in 0..n {
        let Some((x, y)) = nth_pair(w, &sampler, i) else { continue };

        if !w.in_zero_set(x + y) {
            if let (Some(a), Some(b), Some(c)) = (
                angle_of(angle, x, x + y),
                angle_of(angle, x + y, y),
                angle_of(angle, x, y),
            ) {
                t8.record((a + b - c).abs() <= AXIOM_TOL, || Witness {
                    x,
                    y,
                    t: None,
                    measured: a + b,
                    expected: c,
                    detail: "angle(x, x+y) + angle(x+y, y) must equal angle(x, y)".into(),
                });
            }
        }
        if !w.in_zero_set(x - y) {
            if let (Some(a), Some(b), Some(c)) = (
                angle_of(angle, x, y),
                angle_of(angle, -x, y - x),
                angle_of(angle, -y, x - y),
            ) {
                t9.record((a + b + c - std::f64::consts::PI).abs() <= AXIOM_TOL, || Witness {
                    x,
                    y,
                    t: None,
                    measured: a + b + c,
                    expected: std::f64::consts::PI,
                    detail: "triangle angle sum must be π".into(),
                });
            }
            if let (Some(a), Some(b), Some(c)) = (
                angle_of(angle, y, y - x),
                angle_of(angle, x, x - y),
                angle_of(angle, -x, y),
            ) {
                t10.record((a + b - c).abs() <= AXIOM_TOL, || Witness {
                    x,
                    y,
                    t: None,
                    measured: a + b,
                    expected: c,
                    detail: "angle(y, y-x) + angle(x, x-y) must equal angle(-x, y)".into(),
                });
            }
        }
    }

    AxiomReport {
        weight: w.to_string(),
        seed,
        axioms: vec![t8.entry(), t9.entry(), t10.entry()],
    }
}

/// Outcome of the An11 grid check for one pair.
#[derive(Clone, Debug, Serialize)]
pub struct An11Outcome {
    pub status: AxiomStatus,
    /// Adjacent grid steps where Θ increased beyond tolerance.
    pub monotone_violations: u64,
    /// Plateaus longer than one grid step.
    pub plateau_violations: u64,
    /// `(|Θ(t_min) − π|, |Θ(t_max) − 0|)`.
    pub endpoint_gap: (f64, f64),
    /// Grid points where `y + t·x` fell into the zero-set or the angle
    /// was undefined.
    pub undefined_points: u64,
    pub samples: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl An11Outcome {
    pub fn entry(&self) -> AxiomEntry {
        AxiomEntry {
            id: AxiomId::An11,
            status: self.status,
            samples: self.samples,
            required: false,
            witness: self.witness.clone(),
        }
    }
}

/// The symmetric evaluation grid: a dense linear core in `[-8, 8]` plus
/// log-spaced wings out to `±10⁶`.
pub fn default_theta_grid() -> Vec<f64> {
    let mut grid = Vec::with_capacity(561);
    let wing: Vec<f64> = {
        let steps = 120;
        let q = (1e6f64 / 8.0).powf(1.0 / steps as f64);
        (1..=steps).map(|j| 8.0 * q.powi(j)).collect()
    };
    for t in wing.iter().rev() {
        grid.push(-t);
    }
    for k in 0..=320 {
        grid.push(-8.0 + 0.05 * k as f64);
    }
    grid.extend(wing.iter());
    grid
}

/// Verify An11 for the pair `(x, y)`: Θ strictly decreasing along the
/// grid, endpoints within tolerance of π and 0.
///
/// A single flat adjacent pair is within `STRICT_TOL`; two consecutive
/// flat pairs count as a plateau and fail the axiom.
pub fn check_an11(angle: &AngleFn, x: Vec2, y: Vec2, grid: &[f64]) -> An11Outcome {
    let mut values: Vec<Option<f64>> = Vec::with_capacity(grid.len());
    let mut undefined = 0u64;
    let mut witness: Option<Witness> = None;
    for &t in grid {
        let v = angle(x, y + x.scale(t)).ok().and_then(|r| r.angle());
        if v.is_none() {
            undefined += 1;
            if witness.is_none() {
                witness = Some(Witness {
                    x,
                    y,
                    t: Some(t),
                    measured: f64::NAN,
                    expected: f64::NAN,
                    detail: "Θ undefined (zero-set hit or CSB violation)".into(),
                });
            }
        }
        values.push(v);
    }

    let mut monotone_violations = 0u64;
    let mut plateau_violations = 0u64;
    let mut flat_run = 0u64;
    for pair in values.windows(2) {
        let (Some(a), Some(b)) = (pair[0], pair[1]) else {
            flat_run = 0;
            continue;
        };
        if b > a + STRICT_TOL {
            monotone_violations += 1;
            if witness.is_none() {
                witness = Some(Witness {
                    x,
                    y,
                    t: None,
                    measured: b - a,
                    expected: 0.0,
                    detail: "Θ increased between adjacent grid points".into(),
                });
            }
        }
        if (a - b).abs() <= STRICT_TOL {
            flat_run += 1;
            if flat_run >= 2 {
                plateau_violations += 1;
                if witness.is_none() {
                    witness = Some(Witness {
                        x,
                        y,
                        t: None,
                        measured: a,
                        expected: f64::NAN,
                        detail: "Θ has a plateau longer than one grid step".into(),
                    });
                }
            }
        } else {
            flat_run = 0;
        }
    }

    let first = values.iter().flatten().next().copied();
    let last = values.iter().rev().flatten().next().copied();
    let endpoint_gap = (
        first.map_or(f64::INFINITY, |v| (v - std::f64::consts::PI).abs()),
        last.map_or(f64::INFINITY, |v| v.abs()),
    );

    let pass = undefined == 0
        && monotone_violations == 0
        && plateau_violations == 0
        && endpoint_gap.0 < ENDPOINT_TOL
        && endpoint_gap.1 < ENDPOINT_TOL;
    An11Outcome {
        status: if pass { AxiomStatus::Pass } else { AxiomStatus::Fail },
        monotone_violations,
        plateau_violations,
        endpoint_gap,
        undefined_points: undefined,
        samples: grid.len() as u64,
        witness,
    }
}

/// All eleven axioms in one report: An1–An7 and An8–An10 over `n`
/// sampled pairs, An11 on the grid for the pair `(x, y)`.
pub fn full_report(
    w: &Weight,
    angle: &AngleFn,
    seed: u64,
    n: u64,
    x: Vec2,
    y: Vec2,
    grid: &[f64],
) -> AxiomReport {
    let basic = check_basic(w, angle, seed, n);
    let additivity = check_additivity(w, angle, seed, n);
    let an11 = check_an11(angle, x, y, grid);
    let mut axioms = basic.axioms;
    axioms.extend(additivity.axioms);
    axioms.push(an11.entry());
    AxiomReport { weight: w.to_string(), seed, axioms }
}

/// One CSB violation found by [`csb_scan`].
#[derive(Clone, Debug, Serialize)]
pub struct CsbViolation {
    pub x: Vec2,
    pub y: Vec2,
    pub product: f64,
    pub bound: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CsbScan {
    pub weight: String,
    pub seed: u64,
    pub samples: u64,
    pub violations: Vec<CsbViolation>,
}

/// Scan `n` sampled pairs for `|⟨x|y⟩♠| > ‖x‖·‖y‖`.
///
/// Corner-directed pairs are mixed in around `hints` (30% of samples),
/// because violations of polygon-type weights live in small
/// neighborhoods of the concave corner direction.
pub fn csb_scan(w: &Weight, seed: u64, n: u64, hints: &[Vec2]) -> CsbScan {
    let sampler = VectorSampler::new(w, seed);
    let mut violations = Vec::new();
    for i in 0..n {
        let mut rng = sample_rng(seed ^ 0xC5B5_CA17, i);
        let (x, y) = if !hints.is_empty() && i % 10 < 3 {
            let hint = hints[rng.gen_range(0..hints.len())];
            let h = hint.scale(1.0 / hint.norm2());
            let u = Vec2::new(-h.x2, h.x1);
            let d1: f64 = rng.gen_range(0.0..0.4);
            let d2: f64 = rng.gen_range(0.0..0.4);
            (h + u.scale(d1), h - u.scale(d2))
        } else {
            sampler.pair(i)
        };
        if w.in_zero_set(x) || w.in_zero_set(y) {
            continue;
        }
        if let Ok(AngleResult::Violation { product, bound }) = thy_angle(w, x, y) {
            violations.push(CsbViolation { x, y, product, bound });
        } else {
            // Consistency: the raw product must respect the bound too.
            let product = spade_product(w, x, y);
            let bound = w.eval(x) * w.eval(y);
            if product.abs() > bound * (1.0 + 1e-6) {
                violations.push(CsbViolation { x, y, product, bound });
            }
        }
    }
    CsbScan { weight: w.to_string(), seed, samples: n, violations }
}

/// [`csb_scan`] with corner hints auto-detected from the weight's sphere.
pub fn csb_scan_auto(w: &Weight, seed: u64, n: u64) -> CsbScan {
    let hints: Vec<Vec2> = corners::detect_corners(w, 256)
        .into_iter()
        .map(|spec| spec.y_hat)
        .collect();
    csb_scan(w, seed, n, &hints)
}
