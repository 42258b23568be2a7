//! C ABI for the angle-space library.
//!
//! Weights are opaque handles created from the same spec strings the CLI
//! accepts (`lp:2`, `polygon:0.5`, `axis`, `hyperbola`,
//! `sphere-file:<path>`). Every function returns an
//! [`AngleSpaceStatus`]; results come back through out-pointers.
//! Structured results (axiom reports, CSB scans) are returned as JSON
//! strings that must be released with [`angle_space_string_free`].
//!
//! The C header is generated into `include/angle_space.h` at build time.

use std::ffi::{c_char, CStr, CString};

use angle_space::angle;
use angle_space::axioms;
use angle_space::convexify;
use angle_space::polar::{self, PolarCoord};
use angle_space::{AngleResult, Error, Vec2, Weight};

/// Status codes returned by every FFI call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AngleSpaceStatus {
    Ok = 0,
    NullPointer = 1,
    ParseError = 2,
    ZeroSetVector = 3,
    ZeroVector = 4,
    /// The spade product exceeds the CSB bound; the angle is undefined
    /// but the product/bound outputs are valid.
    CsbViolation = 5,
    NotBracketed = 6,
    NotNormable = 7,
    DegenerateInput = 8,
    UnboundedDirection = 9,
    NoViolationFound = 10,
    InvalidInput = 11,
    InternalError = 12,
}

fn status_of(err: &Error) -> AngleSpaceStatus {
    match err {
        Error::ZeroSetVector => AngleSpaceStatus::ZeroSetVector,
        Error::ZeroVector => AngleSpaceStatus::ZeroVector,
        Error::DegenerateInput(_) => AngleSpaceStatus::DegenerateInput,
        Error::UnboundedDirection => AngleSpaceStatus::UnboundedDirection,
        Error::NotBracketed(_) => AngleSpaceStatus::NotBracketed,
        Error::NotNormable => AngleSpaceStatus::NotNormable,
        Error::InvalidLine(_) | Error::InvalidInput(_) => AngleSpaceStatus::InvalidInput,
        Error::NoViolationFound => AngleSpaceStatus::NoViolationFound,
        Error::InternalInconsistency(_) => AngleSpaceStatus::InternalError,
        Error::Parse(_) => AngleSpaceStatus::ParseError,
    }
}

/// Opaque weight handle.
pub struct AngleSpaceWeight {
    inner: Weight,
}

/// ABI version of this header/library pair.
#[no_mangle]
pub extern "C" fn angle_space_abi_version() -> u32 {
    1
}

/// Parse a weight-spec string into a new handle.
///
/// On success writes the handle to `out` and returns `Ok`; the handle
/// must be released with [`angle_space_weight_free`].
///
/// # Safety
/// `spec` must be a valid NUL-terminated string; `out` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn angle_space_weight_parse(
    spec: *const c_char,
    out: *mut *mut AngleSpaceWeight,
) -> AngleSpaceStatus {
    if spec.is_null() || out.is_null() {
        return AngleSpaceStatus::NullPointer;
    }
    let Ok(spec) = CStr::from_ptr(spec).to_str() else {
        return AngleSpaceStatus::ParseError;
    };
    match Weight::parse(spec) {
        Ok(w) => {
            *out = Box::into_raw(Box::new(AngleSpaceWeight { inner: w }));
            AngleSpaceStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Release a weight handle. NULL is a no-op.
///
/// # Safety
/// `w` must be a handle from [`angle_space_weight_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn angle_space_weight_free(w: *mut AngleSpaceWeight) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

unsafe fn weight_ref<'a>(w: *const AngleSpaceWeight) -> Option<&'a Weight> {
    w.as_ref().map(|h| &h.inner)
}

/// Evaluate `‖(x1, x2)‖`.
///
/// # Safety
/// `w` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn angle_space_weight_eval(
    w: *const AngleSpaceWeight,
    x1: f64,
    x2: f64,
    out: *mut f64,
) -> AngleSpaceStatus {
    let (Some(w), false) = (weight_ref(w), out.is_null()) else {
        return AngleSpaceStatus::NullPointer;
    };
    *out = w.eval(Vec2::new(x1, x2));
    AngleSpaceStatus::Ok
}

/// Zero-set membership of `(x1, x2)`.
///
/// # Safety
/// `w` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn angle_space_weight_in_zero_set(
    w: *const AngleSpaceWeight,
    x1: f64,
    x2: f64,
    out: *mut bool,
) -> AngleSpaceStatus {
    let (Some(w), false) = (weight_ref(w), out.is_null()) else {
        return AngleSpaceStatus::NullPointer;
    };
    *out = w.in_zero_set(Vec2::new(x1, x2));
    AngleSpaceStatus::Ok
}

/// Unit-sphere projection `v/‖v‖`.
///
/// # Safety
/// `w` must be a live handle; `out_x1`, `out_x2` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn angle_space_weight_sign(
    w: *const AngleSpaceWeight,
    x1: f64,
    x2: f64,
    out_x1: *mut f64,
    out_x2: *mut f64,
) -> AngleSpaceStatus {
    let (Some(w), false) = (weight_ref(w), out_x1.is_null() || out_x2.is_null()) else {
        return AngleSpaceStatus::NullPointer;
    };
    match w.sign(Vec2::new(x1, x2)) {
        Ok(s) => {
            *out_x1 = s.x1;
            *out_x2 = s.x2;
            AngleSpaceStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// The spade product `⟨x|y⟩♠`.
///
/// # Safety
/// `w` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn angle_space_spade_product(
    w: *const AngleSpaceWeight,
    x1: f64,
    x2: f64,
    y1: f64,
    y2: f64,
    out: *mut f64,
) -> AngleSpaceStatus {
    let (Some(w), false) = (weight_ref(w), out.is_null()) else {
        return AngleSpaceStatus::NullPointer;
    };
    *out = angle::spade_product(w, Vec2::new(x1, x2), Vec2::new(y1, y2));
    AngleSpaceStatus::Ok
}

/// The Thy angle of `(x, y)` in radians.
///
/// On `Ok`, `out_angle` holds the angle and `out_product`/`out_bound`
/// the spade product and `‖x‖·‖y‖`. On `CsbViolation`, the angle is NaN
/// and product/bound describe the violation. Any out-pointer may be NULL
/// to skip that value.
///
/// # Safety
/// `w` must be a live handle; non-NULL out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn angle_space_thy_angle(
    w: *const AngleSpaceWeight,
    x1: f64,
    x2: f64,
    y1: f64,
    y2: f64,
    out_angle: *mut f64,
    out_product: *mut f64,
    out_bound: *mut f64,
) -> AngleSpaceStatus {
    let Some(w) = weight_ref(w) else {
        return AngleSpaceStatus::NullPointer;
    };
    let x = Vec2::new(x1, x2);
    let y = Vec2::new(y1, y2);
    let write = |p: *mut f64, v: f64| {
        if !p.is_null() {
            *p = v;
        }
    };
    match angle::thy_angle(w, x, y) {
        Ok(AngleResult::Angle(a)) => {
            write(out_angle, a);
            write(out_product, angle::spade_product(w, x, y));
            write(out_bound, w.eval(x) * w.eval(y));
            AngleSpaceStatus::Ok
        }
        Ok(AngleResult::Violation { product, bound }) => {
            write(out_angle, f64::NAN);
            write(out_product, product);
            write(out_bound, bound);
            AngleSpaceStatus::CsbViolation
        }
        Err(e) => status_of(&e),
    }
}

/// The Euclidean angle (standard dot product), weight-independent.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn angle_space_euclid_angle(
    x1: f64,
    x2: f64,
    y1: f64,
    y2: f64,
    out: *mut f64,
) -> AngleSpaceStatus {
    if out.is_null() {
        return AngleSpaceStatus::NullPointer;
    }
    match angle::euclid_angle(Vec2::new(x1, x2), Vec2::new(y1, y2)) {
        Ok(a) => {
            *out = a;
            AngleSpaceStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// `Θ(t) = ∠(x, y + t·x)`.
///
/// # Safety
/// `w` must be a live handle; `out_angle` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn angle_space_theta(
    w: *const AngleSpaceWeight,
    x1: f64,
    x2: f64,
    y1: f64,
    y2: f64,
    t: f64,
    out_angle: *mut f64,
) -> AngleSpaceStatus {
    let (Some(w), false) = (weight_ref(w), out_angle.is_null()) else {
        return AngleSpaceStatus::NullPointer;
    };
    match angle::theta(w, Vec2::new(x1, x2), Vec2::new(y1, y2), t) {
        Ok(AngleResult::Angle(a)) => {
            *out_angle = a;
            AngleSpaceStatus::Ok
        }
        Ok(AngleResult::Violation { .. }) => {
            *out_angle = f64::NAN;
            AngleSpaceStatus::CsbViolation
        }
        Err(e) => status_of(&e),
    }
}

/// Solve `Θ(t) = alpha` for `t`, `alpha ∈ (0, π)`; requires a norm.
///
/// # Safety
/// `w` must be a live handle; `out_t` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn angle_space_theta_inverse(
    w: *const AngleSpaceWeight,
    x1: f64,
    x2: f64,
    y1: f64,
    y2: f64,
    alpha: f64,
    out_t: *mut f64,
) -> AngleSpaceStatus {
    let (Some(w), false) = (weight_ref(w), out_t.is_null()) else {
        return AngleSpaceStatus::NullPointer;
    };
    match polar::theta_inverse(w, Vec2::new(x1, x2), Vec2::new(y1, y2), alpha) {
        Ok(t) => {
            *out_t = t;
            AngleSpaceStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Polar coordinates of `v` in the basis `(b1, b2)`.
///
/// # Safety
/// `w` must be a live handle; `out_rho`, `out_alpha` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn angle_space_polar_encode(
    w: *const AngleSpaceWeight,
    b1_x1: f64,
    b1_x2: f64,
    b2_x1: f64,
    b2_x2: f64,
    v_x1: f64,
    v_x2: f64,
    out_rho: *mut f64,
    out_alpha: *mut f64,
) -> AngleSpaceStatus {
    let (Some(w), false) = (weight_ref(w), out_rho.is_null() || out_alpha.is_null()) else {
        return AngleSpaceStatus::NullPointer;
    };
    match polar::polar_encode(
        w,
        Vec2::new(b1_x1, b1_x2),
        Vec2::new(b2_x1, b2_x2),
        Vec2::new(v_x1, v_x2),
    ) {
        Ok(p) => {
            *out_rho = p.rho;
            *out_alpha = p.alpha;
            AngleSpaceStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Vector with weight `rho` and signed angle `alpha` in the basis
/// `(b1, b2)`.
///
/// # Safety
/// `w` must be a live handle; `out_x1`, `out_x2` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn angle_space_polar_decode(
    w: *const AngleSpaceWeight,
    b1_x1: f64,
    b1_x2: f64,
    b2_x1: f64,
    b2_x2: f64,
    rho: f64,
    alpha: f64,
    out_x1: *mut f64,
    out_x2: *mut f64,
) -> AngleSpaceStatus {
    let (Some(w), false) = (weight_ref(w), out_x1.is_null() || out_x2.is_null()) else {
        return AngleSpaceStatus::NullPointer;
    };
    match polar::polar_decode(
        w,
        Vec2::new(b1_x1, b1_x2),
        Vec2::new(b2_x1, b2_x2),
        PolarCoord { rho, alpha },
    ) {
        Ok(v) => {
            *out_x1 = v.x1;
            *out_x2 = v.x2;
            AngleSpaceStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// The generalized Thy angle through the gauge of `conv(B)`, built from
/// `hull_samples` sphere samples (0 picks the default).
///
/// # Safety
/// `w` must be a live handle; `out_angle` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn angle_space_generalized_thy_angle(
    w: *const AngleSpaceWeight,
    hull_samples: u32,
    x1: f64,
    x2: f64,
    y1: f64,
    y2: f64,
    out_angle: *mut f64,
) -> AngleSpaceStatus {
    let (Some(w), false) = (weight_ref(w), out_angle.is_null()) else {
        return AngleSpaceStatus::NullPointer;
    };
    let n = if hull_samples == 0 {
        convexify::DEFAULT_SPHERE_SAMPLES
    } else {
        hull_samples as usize
    };
    match convexify::generalized_thy_angle(w, Vec2::new(x1, x2), Vec2::new(y1, y2), n) {
        Ok(AngleResult::Angle(a)) => {
            *out_angle = a;
            AngleSpaceStatus::Ok
        }
        Ok(AngleResult::Violation { .. }) => {
            *out_angle = f64::NAN;
            AngleSpaceStatus::CsbViolation
        }
        Err(e) => status_of(&e),
    }
}

fn json_out(out: *mut *mut c_char, value: serde_json::Value) -> AngleSpaceStatus {
    let text = value.to_string();
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            AngleSpaceStatus::Ok
        }
        Err(_) => AngleSpaceStatus::InternalError,
    }
}

/// Full An1–An11 report as a JSON string (same schema as the CLI).
/// The string must be released with [`angle_space_string_free`].
///
/// # Safety
/// `w` must be a live handle; `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn angle_space_axioms_report_json(
    w: *const AngleSpaceWeight,
    seed: u64,
    samples: u64,
    out_json: *mut *mut c_char,
) -> AngleSpaceStatus {
    let (Some(w), false) = (weight_ref(w), out_json.is_null()) else {
        return AngleSpaceStatus::NullPointer;
    };
    let angle_fn = |a: Vec2, b: Vec2| angle::thy_angle(w, a, b);
    let report = axioms::full_report(
        w,
        &angle_fn,
        seed,
        samples,
        Vec2::new(1.0, 0.0),
        Vec2::new(0.0, 1.0),
        &axioms::default_theta_grid(),
    );
    json_out(out_json, serde_json::to_value(report).unwrap_or_default())
}

/// CSB scan with auto-detected corner hints, as a JSON string.
/// The string must be released with [`angle_space_string_free`].
///
/// # Safety
/// `w` must be a live handle; `out_json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn angle_space_csb_scan_json(
    w: *const AngleSpaceWeight,
    seed: u64,
    samples: u64,
    out_json: *mut *mut c_char,
) -> AngleSpaceStatus {
    let (Some(w), false) = (weight_ref(w), out_json.is_null()) else {
        return AngleSpaceStatus::NullPointer;
    };
    let scan = axioms::csb_scan_auto(w, seed, samples);
    json_out(out_json, serde_json::to_value(scan).unwrap_or_default())
}

/// Release a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must originate from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn angle_space_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
