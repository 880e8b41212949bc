//! C ABI for the elcomplex library.
//!
//! Conventions: constructors return a status code and write an opaque handle
//! through an out pointer; every handle has a matching `_free`; value types
//! (`ElcxComplex`, `ElcxReport`) are plain `repr(C)` structs passed by
//! value or through out pointers. Null pointers are reported as
//! [`ElcxStatus::NullPointer`], never dereferenced.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use elcomplex::algebra::{AlgebraParams, ElComplex};
use elcomplex::calculus::{cr_apply, TestFunction};
use elcomplex::error::Error;
use elcomplex::quadrature::{QuadratureSpec, StarDomain};
use elcomplex::verify::{self, CheckKind, Scenario};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElcxStatus {
    Ok = 0,
    NullPointer = 1,
    EllipticityViolation = 2,
    DivisionByZero = 3,
    PoleEvaluation = 4,
    PoleOutsideDomain = 5,
    NotStarShaped = 6,
    NotHolomorphic = 7,
    InvalidArgument = 8,
    ParseError = 9,
}

fn status_of(e: &Error) -> ElcxStatus {
    match e {
        Error::EllipticityViolation { .. } => ElcxStatus::EllipticityViolation,
        Error::DivisionByZero => ElcxStatus::DivisionByZero,
        Error::PoleEvaluation { .. } => ElcxStatus::PoleEvaluation,
        Error::PoleOutsideDomain => ElcxStatus::PoleOutsideDomain,
        Error::NotStarShaped => ElcxStatus::NotStarShaped,
        Error::NotHolomorphic { .. } => ElcxStatus::NotHolomorphic,
        _ => ElcxStatus::InvalidArgument,
    }
}

/// An element `x + iy` of the algebra.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElcxComplex {
    pub re: f64,
    pub im: f64,
}

impl From<ElComplex> for ElcxComplex {
    fn from(z: ElComplex) -> Self {
        ElcxComplex { re: z.re, im: z.im }
    }
}

impl From<ElcxComplex> for ElComplex {
    fn from(z: ElcxComplex) -> Self {
        ElComplex::new(z.re, z.im)
    }
}

/// Value and both partial derivatives of a function at a point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElcxJet {
    pub value: ElcxComplex,
    pub dx: ElcxComplex,
    pub dy: ElcxComplex,
}

/// Outcome of one verification check. `abs_error` and `tolerance` are in
/// the Euclidean norm; `passed` is `abs_error <= tolerance`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElcxReport {
    pub computed: ElcxComplex,
    pub reference: ElcxComplex,
    pub abs_error: f64,
    pub tolerance: f64,
    pub n_theta: u32,
    pub n_r: u32,
    pub passed: bool,
}

impl From<&verify::VerificationReport> for ElcxReport {
    fn from(r: &verify::VerificationReport) -> Self {
        ElcxReport {
            computed: r.computed.into(),
            reference: r.reference.into(),
            abs_error: r.abs_error,
            tolerance: r.tolerance,
            n_theta: r.n_theta as u32,
            n_r: r.n_r as u32,
            passed: r.passed,
        }
    }
}

/// Built-in domain shapes for the check entry points, always centered at
/// the origin.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElcxDomainKind {
    /// Euclidean disk of the given radius.
    Disk = 0,
    /// Tilde-norm disk (the region bounded by the parameter ellipse).
    Ellipse = 1,
}

/// Opaque validated parameter pair with its cached derived constants.
pub struct ElcxParams(AlgebraParams);

/// Opaque test function from the built-in catalog.
pub struct ElcxFunction(TestFunction);

unsafe fn params_ref<'a>(p: *const ElcxParams) -> Option<&'a AlgebraParams> {
    unsafe { p.as_ref().map(|p| &p.0) }
}

unsafe fn function_ref<'a>(f: *const ElcxFunction) -> Option<&'a TestFunction> {
    unsafe { f.as_ref().map(|f| &f.0) }
}

fn domain_for(kind: ElcxDomainKind, radius: f64, p: &AlgebraParams) -> StarDomain {
    match kind {
        ElcxDomainKind::Disk => StarDomain::disk(ElComplex::ZERO, radius),
        ElcxDomainKind::Ellipse => StarDomain::alg_ellipse_disk(ElComplex::ZERO, radius, p),
    }
}

fn spec_for(n_theta: u32, n_r: u32) -> Result<QuadratureSpec, Error> {
    QuadratureSpec::new(n_theta as usize, n_r as usize)
}

/// Validates `(alpha, beta)` and writes a new handle through `out`.
/// The handle must be released with [`elcx_params_free`].
///
/// # Safety
/// `out` must be a valid pointer to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn elcx_params_new(
    alpha: f64,
    beta: f64,
    out: *mut *mut ElcxParams,
) -> ElcxStatus {
    if out.is_null() {
        return ElcxStatus::NullPointer;
    }
    match AlgebraParams::new(alpha, beta) {
        Ok(p) => {
            unsafe { *out = Box::into_raw(Box::new(ElcxParams(p))) };
            ElcxStatus::Ok
        }
        Err(e) => {
            unsafe { *out = ptr::null_mut() };
            status_of(&e)
        }
    }
}

/// Releases a handle from [`elcx_params_new`]. Null is a no-op.
///
/// # Safety
/// `p` must be null or a pointer previously returned by `elcx_params_new`
/// that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn elcx_params_free(p: *mut ElcxParams) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// # Safety
/// `p` must be null or a live handle. Returns NaN on null.
#[no_mangle]
pub unsafe extern "C" fn elcx_params_alpha(p: *const ElcxParams) -> f64 {
    unsafe { params_ref(p) }.map_or(f64::NAN, |p| p.alpha())
}

/// # Safety
/// `p` must be null or a live handle. Returns NaN on null.
#[no_mangle]
pub unsafe extern "C" fn elcx_params_beta(p: *const ElcxParams) -> f64 {
    unsafe { params_ref(p) }.map_or(f64::NAN, |p| p.beta())
}

/// `4*alpha - beta^2`, guaranteed positive for a live handle.
///
/// # Safety
/// `p` must be null or a live handle. Returns NaN on null.
#[no_mangle]
pub unsafe extern "C" fn elcx_params_discriminant(p: *const ElcxParams) -> f64 {
    unsafe { params_ref(p) }.map_or(f64::NAN, |p| p.discriminant())
}

/// The algebra square root of -1, `(beta + 2i)/sqrt(4*alpha - beta^2)`.
///
/// # Safety
/// `p` must be null or a live handle. Returns NaN components on null.
#[no_mangle]
pub unsafe extern "C" fn elcx_params_i_hat(p: *const ElcxParams) -> ElcxComplex {
    unsafe { params_ref(p) }.map_or(
        ElcxComplex {
            re: f64::NAN,
            im: f64::NAN,
        },
        |p| p.i_hat().into(),
    )
}

/// Lower norm-equivalence constant: `k1 * ||z||_(a,b) <= ||z||_(1,0)`.
///
/// # Safety
/// `p` must be null or a live handle. Returns NaN on null.
#[no_mangle]
pub unsafe extern "C" fn elcx_params_k1(p: *const ElcxParams) -> f64 {
    unsafe { params_ref(p) }.map_or(f64::NAN, |p| p.k1())
}

/// Upper norm-equivalence constant: `||z||_(1,0) <= k2 * ||z||_(a,b)`.
///
/// # Safety
/// `p` must be null or a live handle. Returns NaN on null.
#[no_mangle]
pub unsafe extern "C" fn elcx_params_k2(p: *const ElcxParams) -> f64 {
    unsafe { params_ref(p) }.map_or(f64::NAN, |p| p.k2())
}

/// Product in the algebra.
///
/// # Safety
/// `p` must be null or a live handle. Returns NaN components on null.
#[no_mangle]
pub unsafe extern "C" fn elcx_mul(
    p: *const ElcxParams,
    a: ElcxComplex,
    b: ElcxComplex,
) -> ElcxComplex {
    match unsafe { params_ref(p) } {
        Some(p) => ElComplex::from(a).mul(b.into(), p).into(),
        None => ElcxComplex {
            re: f64::NAN,
            im: f64::NAN,
        },
    }
}

/// Multiplicative inverse; fails on the zero element.
///
/// # Safety
/// `p` must be null or a live handle; `out` must be valid writable memory.
#[no_mangle]
pub unsafe extern "C" fn elcx_inv(
    p: *const ElcxParams,
    a: ElcxComplex,
    out: *mut ElcxComplex,
) -> ElcxStatus {
    let Some(p) = (unsafe { params_ref(p) }) else {
        return ElcxStatus::NullPointer;
    };
    if out.is_null() {
        return ElcxStatus::NullPointer;
    }
    match ElComplex::from(a).inv(p) {
        Ok(v) => {
            unsafe { *out = v.into() };
            ElcxStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Conjugation `x + iy -> x - iy` (parameter free).
#[no_mangle]
pub extern "C" fn elcx_conj(a: ElcxComplex) -> ElcxComplex {
    ElComplex::from(a).conj().into()
}

/// The tilde map `x + iy -> y - ix` (parameter free).
#[no_mangle]
pub extern "C" fn elcx_tilde(a: ElcxComplex) -> ElcxComplex {
    ElComplex::from(a).tilde().into()
}

/// The multiplicative norm `sqrt(x^2 - beta*x*y + alpha*y^2)`.
///
/// # Safety
/// `p` must be null or a live handle. Returns NaN on null.
#[no_mangle]
pub unsafe extern "C" fn elcx_norm(p: *const ElcxParams, a: ElcxComplex) -> f64 {
    unsafe { params_ref(p) }.map_or(f64::NAN, |p| ElComplex::from(a).norm(p))
}

/// The real inner product associated with the norm.
///
/// # Safety
/// `p` must be null or a live handle. Returns NaN on null.
#[no_mangle]
pub unsafe extern "C" fn elcx_inner(p: *const ElcxParams, a: ElcxComplex, b: ElcxComplex) -> f64 {
    unsafe { params_ref(p) }.map_or(f64::NAN, |p| ElComplex::from(a).inner(b.into(), p))
}

/// Parses a test-function descriptor, e.g. `{"kind":"tilde_power","n":3}`,
/// and writes a handle through `out`. Release with [`elcx_function_free`].
///
/// # Safety
/// `json` must be a valid nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn elcx_function_parse(
    json: *const c_char,
    out: *mut *mut ElcxFunction,
) -> ElcxStatus {
    if json.is_null() || out.is_null() {
        return ElcxStatus::NullPointer;
    }
    let Ok(text) = unsafe { CStr::from_ptr(json) }.to_str() else {
        return ElcxStatus::ParseError;
    };
    match serde_json::from_str::<TestFunction>(text) {
        Ok(f) => {
            unsafe { *out = Box::into_raw(Box::new(ElcxFunction(f))) };
            ElcxStatus::Ok
        }
        Err(_) => {
            unsafe { *out = ptr::null_mut() };
            ElcxStatus::ParseError
        }
    }
}

/// Releases a handle from [`elcx_function_parse`]. Null is a no-op.
///
/// # Safety
/// `f` must be null or a pointer previously returned by
/// `elcx_function_parse` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn elcx_function_free(f: *mut ElcxFunction) {
    if !f.is_null() {
        drop(unsafe { Box::from_raw(f) });
    }
}

/// Evaluates the function's exact jet (value and both partials) at a point.
///
/// # Safety
/// `f` and `p` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn elcx_function_eval_jet(
    f: *const ElcxFunction,
    p: *const ElcxParams,
    at: ElcxComplex,
    out: *mut ElcxJet,
) -> ElcxStatus {
    let (Some(f), Some(p)) = (unsafe { function_ref(f) }, unsafe { params_ref(p) }) else {
        return ElcxStatus::NullPointer;
    };
    if out.is_null() {
        return ElcxStatus::NullPointer;
    }
    match f.eval_jet(at.into(), p) {
        Ok(j) => {
            unsafe {
                *out = ElcxJet {
                    value: j.value.into(),
                    dx: j.dx.into(),
                    dy: j.dy.into(),
                }
            };
            ElcxStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Applies the generalized Cauchy-Riemann operator to the function at a
/// point; zero (to roundoff) iff the function is holomorphic there.
///
/// # Safety
/// `f` and `p` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn elcx_function_dbar(
    f: *const ElcxFunction,
    p: *const ElcxParams,
    at: ElcxComplex,
    out: *mut ElcxComplex,
) -> ElcxStatus {
    let mut jet = ElcxJet {
        value: ElcxComplex { re: 0.0, im: 0.0 },
        dx: ElcxComplex { re: 0.0, im: 0.0 },
        dy: ElcxComplex { re: 0.0, im: 0.0 },
    };
    let status = unsafe { elcx_function_eval_jet(f, p, at, &mut jet) };
    if status != ElcxStatus::Ok {
        return status;
    }
    if out.is_null() {
        return ElcxStatus::NullPointer;
    }
    let p = unsafe { params_ref(p) }.expect("checked by eval_jet");
    let j = elcomplex::calculus::Jet {
        value: jet.value.into(),
        dx: jet.dx.into(),
        dy: jet.dy.into(),
    };
    unsafe { *out = cr_apply(&j, p).into() };
    ElcxStatus::Ok
}

fn write_report(out: *mut ElcxReport, r: Result<verify::VerificationReport, Error>) -> ElcxStatus {
    if out.is_null() {
        return ElcxStatus::NullPointer;
    }
    match r {
        Ok(report) => {
            unsafe { *out = (&report).into() };
            ElcxStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Kernel winding integral over a circle of radius `eps` against the
/// analytic constant `2*pi*i_hat`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn elcx_check_winding(
    p: *const ElcxParams,
    eps: f64,
    n_theta: u32,
    out: *mut ElcxReport,
) -> ElcxStatus {
    let Some(p) = (unsafe { params_ref(p) }) else {
        return ElcxStatus::NullPointer;
    };
    if eps <= 0.0 || !eps.is_finite() {
        return ElcxStatus::InvalidArgument;
    }
    let spec = match spec_for(n_theta, 4) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    write_report(out, Ok(verify::check_winding(p, eps, spec)))
}

/// Green-Gauss identity for `f` on a domain of the given kind and radius.
///
/// # Safety
/// `p` and `f` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn elcx_check_green_gauss(
    p: *const ElcxParams,
    f: *const ElcxFunction,
    domain: ElcxDomainKind,
    radius: f64,
    n_theta: u32,
    n_r: u32,
    out: *mut ElcxReport,
) -> ElcxStatus {
    let (Some(p), Some(f)) = (unsafe { params_ref(p) }, unsafe { function_ref(f) }) else {
        return ElcxStatus::NullPointer;
    };
    if radius <= 0.0 || !radius.is_finite() {
        return ElcxStatus::InvalidArgument;
    }
    let spec = match spec_for(n_theta, n_r) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    let d = domain_for(domain, radius, p);
    write_report(out, Ok(verify::check_green_gauss(f, &d, p, spec)))
}

/// Schmidt inequality for the reciprocal-distance integral about `pole`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn elcx_check_schmidt(
    p: *const ElcxParams,
    domain: ElcxDomainKind,
    radius: f64,
    pole: ElcxComplex,
    n_theta: u32,
    n_r: u32,
    out: *mut ElcxReport,
) -> ElcxStatus {
    let Some(p) = (unsafe { params_ref(p) }) else {
        return ElcxStatus::NullPointer;
    };
    if radius <= 0.0 || !radius.is_finite() {
        return ElcxStatus::InvalidArgument;
    }
    let spec = match spec_for(n_theta, n_r) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    let d = domain_for(domain, radius, p);
    write_report(out, verify::check_schmidt(&d, pole.into(), spec))
}

/// One-term representation formula for a holomorphic `f`; holomorphy is
/// verified by sampling and reported as [`ElcxStatus::NotHolomorphic`].
///
/// # Safety
/// `p` and `f` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn elcx_cauchy(
    p: *const ElcxParams,
    f: *const ElcxFunction,
    domain: ElcxDomainKind,
    radius: f64,
    zeta: ElcxComplex,
    n_theta: u32,
    out: *mut ElcxReport,
) -> ElcxStatus {
    let (Some(p), Some(f)) = (unsafe { params_ref(p) }, unsafe { function_ref(f) }) else {
        return ElcxStatus::NullPointer;
    };
    if radius <= 0.0 || !radius.is_finite() {
        return ElcxStatus::InvalidArgument;
    }
    let spec = match spec_for(n_theta, 4) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    let curve = domain_for(domain, radius, p).boundary();
    write_report(out, verify::cauchy(f, &curve, zeta.into(), p, spec))
}

/// Two-term representation formula for a continuously differentiable `f`.
///
/// # Safety
/// `p` and `f` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn elcx_cauchy_pompeiu(
    p: *const ElcxParams,
    f: *const ElcxFunction,
    domain: ElcxDomainKind,
    radius: f64,
    zeta: ElcxComplex,
    n_theta: u32,
    n_r: u32,
    out: *mut ElcxReport,
) -> ElcxStatus {
    let (Some(p), Some(f)) = (unsafe { params_ref(p) }, unsafe { function_ref(f) }) else {
        return ElcxStatus::NullPointer;
    };
    if radius <= 0.0 || !radius.is_finite() {
        return ElcxStatus::InvalidArgument;
    }
    let spec = match spec_for(n_theta, n_r) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    let d = domain_for(domain, radius, p);
    write_report(out, verify::cauchy_pompeiu(f, &d, zeta.into(), p, spec))
}

/// Boundary defect of the vanishing limit at a single radius `eps`.
///
/// # Safety
/// `p` and `f` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn elcx_check_vanishing_limit(
    p: *const ElcxParams,
    f: *const ElcxFunction,
    zeta: ElcxComplex,
    eps: f64,
    n_theta: u32,
    out: *mut ElcxReport,
) -> ElcxStatus {
    let (Some(p), Some(f)) = (unsafe { params_ref(p) }, unsafe { function_ref(f) }) else {
        return ElcxStatus::NullPointer;
    };
    if eps <= 0.0 || !eps.is_finite() {
        return ElcxStatus::InvalidArgument;
    }
    let spec = match spec_for(n_theta, 4) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    match verify::check_vanishing_limit(f, zeta.into(), p, &[eps], spec) {
        Ok(mut reports) => write_report(out, Ok(reports.remove(0))),
        Err(e) => status_of(&e),
    }
}

/// Runs the full default verification battery and returns the reports as a
/// newline-delimited JSON string. Free the string with
/// [`elcx_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn elcx_verify_battery_json(
    p: *const ElcxParams,
    n_theta: u32,
    n_r: u32,
    out: *mut *mut c_char,
) -> ElcxStatus {
    let Some(p) = (unsafe { params_ref(p) }) else {
        return ElcxStatus::NullPointer;
    };
    if out.is_null() {
        return ElcxStatus::NullPointer;
    }
    let spec = match spec_for(n_theta, n_r) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    let scenario = Scenario::default();
    let mut text = String::new();
    for kind in CheckKind::ALL {
        match verify::run_check(kind, p, &scenario, spec) {
            Ok(reports) => {
                for r in reports {
                    text.push_str(&serde_json::to_string(&r).expect("report serializes"));
                    text.push('\n');
                }
            }
            Err(e) => return status_of(&e),
        }
    }
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            ElcxStatus::Ok
        }
        Err(_) => ElcxStatus::InvalidArgument,
    }
}

/// Frees a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string returned by this library that has not been
/// freed.
#[no_mangle]
pub unsafe extern "C" fn elcx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn elcx_status_message(status: ElcxStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        ElcxStatus::Ok => b"ok\0",
        ElcxStatus::NullPointer => b"null pointer argument\0",
        ElcxStatus::EllipticityViolation => {
            b"ellipticity violation: 4*alpha - beta^2 must be positive\0"
        }
        ElcxStatus::DivisionByZero => b"division by zero in the algebra\0",
        ElcxStatus::PoleEvaluation => b"test function evaluated at its pole\0",
        ElcxStatus::PoleOutsideDomain => b"pole lies outside or on the boundary of the domain\0",
        ElcxStatus::NotStarShaped => b"domain is not star-shaped about the requested point\0",
        ElcxStatus::NotHolomorphic => b"function failed the sampled holomorphy check\0",
        ElcxStatus::InvalidArgument => b"invalid argument\0",
        ElcxStatus::ParseError => b"malformed descriptor\0",
    };
    msg.as_ptr().cast()
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn elcx_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
