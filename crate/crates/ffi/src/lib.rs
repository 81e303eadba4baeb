//! C ABI for the unifour library.
//!
//! Conventions:
//! - every fallible call returns a [`UnifourStatus`] and writes its result
//!   through out-pointers;
//! - sampled functions cross the boundary as opaque `UnifourGridFunction`
//!   handles, created by `unifour_grid_new` or returned by transform calls,
//!   and released with `unifour_grid_free`;
//! - callables are C function pointers `double (*)(double, void *ctx)`;
//! - the header `include/unifour.h` is generated by cbindgen at build time.

use std::ffi::{c_char, c_void};
use std::panic::{catch_unwind, AssertUnwindSafe};

use unifour::oracle::{self, FdConfig, OracleError};
use unifour::oscillator::{self, CandidateExponent, Eigenpair, OscError};
use unifour::quad::QuadError;
use unifour::specfun::{self, KummerParams, SpecFunError};
use unifour::transforms::{self, TransformError};
use unifour::{GridFunction, Parity, QuadratureConfig, TransformKind};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnifourStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DomainError = 3,
    PoleError = 4,
    NoConvergence = 5,
    TailNotDecayed = 6,
    BoundaryViolation = 7,
    GridTooCoarse = 8,
    GridTooSmall = 9,
    ParityMismatch = 10,
    ClosedFormMismatch = 11,
    SingularityTooStrong = 12,
    InternalError = 13,
}

/// Parity tag of a sampled function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnifourParity {
    Even = 0,
    Odd = 1,
    None = 2,
}

/// Transform selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnifourTransformKind {
    Sine = 0,
    Cosine = 1,
}

/// Quadrature settings (see `unifour_quadrature_config_default`).
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct UnifourQuadratureConfig {
    pub truncation_radius: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

/// Admissibility flags of a candidate exponent.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct UnifourAdmissibility {
    pub parseval_ok: bool,
    pub moment_ok: bool,
    pub derivative_conditions_ok: bool,
    pub parity_ok: bool,
    pub accepted: bool,
}

/// Opaque handle to a sampled function.
pub struct UnifourGridFunction(GridFunction);

/// Real-valued callback: `f(x, ctx)`.
pub type UnifourRealFn = Option<unsafe extern "C" fn(f64, *mut c_void) -> f64>;

impl From<UnifourParity> for Parity {
    fn from(p: UnifourParity) -> Self {
        match p {
            UnifourParity::Even => Parity::Even,
            UnifourParity::Odd => Parity::Odd,
            UnifourParity::None => Parity::None,
        }
    }
}

impl From<Parity> for UnifourParity {
    fn from(p: Parity) -> Self {
        match p {
            Parity::Even => UnifourParity::Even,
            Parity::Odd => UnifourParity::Odd,
            Parity::None => UnifourParity::None,
        }
    }
}

impl From<UnifourTransformKind> for TransformKind {
    fn from(k: UnifourTransformKind) -> Self {
        match k {
            UnifourTransformKind::Sine => TransformKind::Sine,
            UnifourTransformKind::Cosine => TransformKind::Cosine,
        }
    }
}

fn status_of_specfun(e: &SpecFunError) -> UnifourStatus {
    match e {
        SpecFunError::Pole { .. } => UnifourStatus::PoleError,
        SpecFunError::NoConvergence { .. } => UnifourStatus::NoConvergence,
        SpecFunError::Domain { .. } => UnifourStatus::DomainError,
    }
}

fn status_of_quad(e: &QuadError) -> UnifourStatus {
    match e {
        QuadError::TailNotDecayed { .. } => UnifourStatus::TailNotDecayed,
        QuadError::SingularityTooStrong { .. } => UnifourStatus::SingularityTooStrong,
        QuadError::NoConvergence { .. } => UnifourStatus::NoConvergence,
        QuadError::InvalidConfig => UnifourStatus::InvalidArgument,
    }
}

fn status_of_transform(e: &TransformError) -> UnifourStatus {
    match e {
        TransformError::TailNotDecayed { .. } => UnifourStatus::TailNotDecayed,
        TransformError::BoundaryViolation { .. } => UnifourStatus::BoundaryViolation,
        TransformError::GridTooCoarse { .. } => UnifourStatus::GridTooCoarse,
        TransformError::Domain { .. } => UnifourStatus::DomainError,
        TransformError::Quadrature(q) => status_of_quad(q),
    }
}

fn status_of_osc(e: &OscError) -> UnifourStatus {
    match e {
        OscError::Domain { .. } => UnifourStatus::DomainError,
        OscError::GridTooCoarse { .. } => UnifourStatus::GridTooCoarse,
        OscError::GridTooSmall { .. } => UnifourStatus::GridTooSmall,
        OscError::GridNotSymmetric => UnifourStatus::InvalidArgument,
        OscError::ParityMismatch { .. } => UnifourStatus::ParityMismatch,
        OscError::ClosedFormMismatch { .. } => UnifourStatus::ClosedFormMismatch,
        OscError::Quadrature(q) => status_of_quad(q),
        OscError::SpecFun(s) => status_of_specfun(s),
    }
}

fn status_of_oracle(e: &OracleError) -> UnifourStatus {
    match e {
        OracleError::InvalidConfig { .. } => UnifourStatus::InvalidArgument,
        OracleError::ConvergenceFailure { .. } => UnifourStatus::NoConvergence,
        OracleError::TailNotDecayed { .. } => UnifourStatus::TailNotDecayed,
        OracleError::SingularityTooStrong { .. } => UnifourStatus::SingularityTooStrong,
    }
}

fn config_from(cfg: *const UnifourQuadratureConfig) -> QuadratureConfig {
    if cfg.is_null() {
        QuadratureConfig::default()
    } else {
        let c = unsafe { &*cfg };
        QuadratureConfig {
            truncation_radius: c.truncation_radius,
            rel_tol: c.rel_tol,
            max_subdivisions: c.max_subdivisions,
        }
    }
}

/// Run a closure at the FFI boundary; panics become `InternalError`.
fn guarded<F: FnOnce() -> UnifourStatus>(f: F) -> UnifourStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => UnifourStatus::InternalError,
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> UnifourStatus {
    if out.is_null() {
        return UnifourStatus::NullPointer;
    }
    unsafe { out.write(value) };
    UnifourStatus::Ok
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn unifour_status_message(status: UnifourStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        UnifourStatus::Ok => b"ok\0",
        UnifourStatus::NullPointer => b"null pointer argument\0",
        UnifourStatus::InvalidArgument => b"invalid argument\0",
        UnifourStatus::DomainError => b"argument outside the supported domain\0",
        UnifourStatus::PoleError => b"gamma pole at a non-positive integer\0",
        UnifourStatus::NoConvergence => b"iteration or series did not converge\0",
        UnifourStatus::TailNotDecayed => b"integrand tail not decayed at the truncation radius\0",
        UnifourStatus::BoundaryViolation => b"parity/boundary condition violated\0",
        UnifourStatus::GridTooCoarse => b"grid too coarse for the requested operation\0",
        UnifourStatus::GridTooSmall => b"grid does not contain the function support\0",
        UnifourStatus::ParityMismatch => b"forbidden parity extension\0",
        UnifourStatus::ClosedFormMismatch => b"numeric inversion deviates from the closed form\0",
        UnifourStatus::SingularityTooStrong => b"origin singularity is not integrable\0",
        UnifourStatus::InternalError => b"internal error\0",
    };
    s.as_ptr() as *const c_char
}

/// Default quadrature settings (truncation 12, rel_tol 1e-9, 2000 panels).
#[no_mangle]
pub extern "C" fn unifour_quadrature_config_default() -> UnifourQuadratureConfig {
    let cfg = QuadratureConfig::default();
    UnifourQuadratureConfig {
        truncation_radius: cfg.truncation_radius,
        rel_tol: cfg.rel_tol,
        max_subdivisions: cfg.max_subdivisions,
    }
}

// ---------------------------------------------------------------------------
// Special functions
// ---------------------------------------------------------------------------

/// Γ(z). Fails with `POLE_ERROR` at non-positive integers.
/// # Safety
/// `out`, when non-null, must be valid for one f64 write.
#[no_mangle]
pub unsafe extern "C" fn unifour_gamma(z: f64, out: *mut f64) -> UnifourStatus {
    guarded(|| match specfun::gamma(z) {
        Ok(v) => unsafe { write_out(out, v) },
        Err(e) => status_of_specfun(&e),
    })
}

/// Kummer ₁F₁(a1, b1, z) by series summation.
/// # Safety
/// `out`, when non-null, must be valid for one f64 write.
#[no_mangle]
pub unsafe extern "C" fn unifour_kummer_series(
    a1: f64,
    b1: f64,
    z: f64,
    max_terms: usize,
    out: *mut f64,
) -> UnifourStatus {
    guarded(|| {
        let p = match KummerParams::new(a1, b1, z) {
            Ok(p) => p,
            Err(e) => return status_of_specfun(&e),
        };
        match specfun::kummer_series(p, max_terms) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => status_of_specfun(&e),
        }
    })
}

/// Two-term large-z asymptotic estimate of ₁F₁ on the positive real axis.
/// # Safety
/// `out`, when non-null, must be valid for one f64 write.
#[no_mangle]
pub unsafe extern "C" fn unifour_kummer_asymptotic(
    a1: f64,
    b1: f64,
    z: f64,
    out: *mut f64,
) -> UnifourStatus {
    guarded(|| {
        let p = match KummerParams::new(a1, b1, z) {
            Ok(p) => p,
            Err(e) => return status_of_specfun(&e),
        };
        match specfun::kummer_asymptotic(p) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => status_of_specfun(&e),
        }
    })
}

/// Hermite polynomial H_n(x).
/// # Safety
/// `out`, when non-null, must be valid for one f64 write.
#[no_mangle]
pub unsafe extern "C" fn unifour_hermite(n: u32, x: f64, out: *mut f64) -> UnifourStatus {
    guarded(|| unsafe { write_out(out, specfun::hermite(n as usize, x)) })
}

/// Generalized Laguerre polynomial L_n^{(alpha)}(x), x >= 0.
/// # Safety
/// `out`, when non-null, must be valid for one f64 write.
#[no_mangle]
pub unsafe extern "C" fn unifour_laguerre(
    n: u32,
    alpha: f64,
    x: f64,
    out: *mut f64,
) -> UnifourStatus {
    guarded(|| match specfun::laguerre(n as usize, alpha, x) {
        Ok(v) => unsafe { write_out(out, v) },
        Err(e) => status_of_specfun(&e),
    })
}

// ---------------------------------------------------------------------------
// Grid functions
// ---------------------------------------------------------------------------

/// Create a sampled function from parallel arrays. The handle must be
/// released with `unifour_grid_free`.
/// # Safety
/// `grid` and `values`, when non-null, must each reference `len` readable f64s; `out`, when non-null, must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn unifour_grid_new(
    grid: *const f64,
    values: *const f64,
    len: usize,
    parity: UnifourParity,
    out: *mut *mut UnifourGridFunction,
) -> UnifourStatus {
    guarded(|| {
        if grid.is_null() || values.is_null() || out.is_null() {
            return UnifourStatus::NullPointer;
        }
        let g = unsafe { std::slice::from_raw_parts(grid, len) }.to_vec();
        let v = unsafe { std::slice::from_raw_parts(values, len) }.to_vec();
        match GridFunction::new(g, v, parity.into()) {
            Ok(gf) => unsafe {
                write_out(out, Box::into_raw(Box::new(UnifourGridFunction(gf))))
            },
            Err(_) => UnifourStatus::InvalidArgument,
        }
    })
}

/// Release a grid-function handle. NULL is a no-op.
/// # Safety
/// `handle` must be null or a pointer obtained from this library that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn unifour_grid_free(handle: *mut UnifourGridFunction) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Number of samples held by the handle (0 for NULL).
/// # Safety
/// `handle` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn unifour_grid_len(handle: *const UnifourGridFunction) -> usize {
    if handle.is_null() {
        0
    } else {
        unsafe { &*handle }.0.len()
    }
}

/// Parity tag of the handle.
/// # Safety
/// `handle` must be null or a live handle from this library; `out`, when non-null, must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn unifour_grid_parity(
    handle: *const UnifourGridFunction,
    out: *mut UnifourParity,
) -> UnifourStatus {
    guarded(|| {
        if handle.is_null() {
            return UnifourStatus::NullPointer;
        }
        unsafe { write_out(out, (&*handle).0.parity().into()) }
    })
}

/// Copy up to `len` grid points and values into caller buffers (either
/// pointer may be NULL to skip that side).
/// # Safety
/// `handle` must be null or a live handle from this library; non-null `grid_out`/`values_out` must be valid for `len` f64 writes.
#[no_mangle]
pub unsafe extern "C" fn unifour_grid_copy(
    handle: *const UnifourGridFunction,
    grid_out: *mut f64,
    values_out: *mut f64,
    len: usize,
) -> UnifourStatus {
    guarded(|| {
        if handle.is_null() {
            return UnifourStatus::NullPointer;
        }
        let gf = &unsafe { &*handle }.0;
        let n = gf.len().min(len);
        if !grid_out.is_null() {
            unsafe { std::ptr::copy_nonoverlapping(gf.grid().as_ptr(), grid_out, n) };
        }
        if !values_out.is_null() {
            unsafe { std::ptr::copy_nonoverlapping(gf.values().as_ptr(), values_out, n) };
        }
        UnifourStatus::Ok
    })
}

/// Cubic interpolation of the samples at `x` (0 outside the span).
/// # Safety
/// `handle` must be null or a live handle from this library; `out`, when non-null, must be valid for one f64 write.
#[no_mangle]
pub unsafe extern "C" fn unifour_grid_eval(
    handle: *const UnifourGridFunction,
    x: f64,
    out: *mut f64,
) -> UnifourStatus {
    guarded(|| {
        if handle.is_null() {
            return UnifourStatus::NullPointer;
        }
        unsafe { write_out(out, (&*handle).0.eval(x)) }
    })
}

// ---------------------------------------------------------------------------
// Transforms
// ---------------------------------------------------------------------------

struct CallbackFn {
    f: unsafe extern "C" fn(f64, *mut c_void) -> f64,
    ctx: *mut c_void,
}

impl CallbackFn {
    fn call(&self, x: f64) -> f64 {
        unsafe { (self.f)(x, self.ctx) }
    }
}

/// Forward sine/cosine transform of a callback evaluated on `k_grid`.
/// On success `*out` holds a new grid-function handle.
/// # Safety
/// A non-null `f` must be safe to call with any finite argument and `ctx`; `k_grid`, when non-null, must reference `k_len` readable f64s; `out`, when non-null, must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn unifour_forward_transform(
    f: UnifourRealFn,
    ctx: *mut c_void,
    parity: UnifourParity,
    kind: UnifourTransformKind,
    k_grid: *const f64,
    k_len: usize,
    cfg: *const UnifourQuadratureConfig,
    out: *mut *mut UnifourGridFunction,
) -> UnifourStatus {
    guarded(|| {
        let Some(f) = f else {
            return UnifourStatus::NullPointer;
        };
        if k_grid.is_null() || out.is_null() {
            return UnifourStatus::NullPointer;
        }
        let cb = CallbackFn { f, ctx };
        let ks = unsafe { std::slice::from_raw_parts(k_grid, k_len) };
        match transforms::forward_transform(
            |z| cb.call(z),
            parity.into(),
            kind.into(),
            ks,
            &config_from(cfg),
        ) {
            Ok(gf) => unsafe {
                write_out(out, Box::into_raw(Box::new(UnifourGridFunction(gf))))
            },
            Err(e) => status_of_transform(&e),
        }
    })
}

/// Forward transform of sampled data.
/// # Safety
/// `f` must be null or a live handle from this library; `k_grid`, when non-null, must reference `k_len` readable f64s; `out`, when non-null, must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn unifour_forward_transform_grid(
    f: *const UnifourGridFunction,
    kind: UnifourTransformKind,
    k_grid: *const f64,
    k_len: usize,
    cfg: *const UnifourQuadratureConfig,
    out: *mut *mut UnifourGridFunction,
) -> UnifourStatus {
    guarded(|| {
        if f.is_null() || k_grid.is_null() || out.is_null() {
            return UnifourStatus::NullPointer;
        }
        let ks = unsafe { std::slice::from_raw_parts(k_grid, k_len) };
        match transforms::forward_transform_grid(
            &unsafe { &*f }.0,
            kind.into(),
            ks,
            &config_from(cfg),
        ) {
            Ok(gf) => unsafe {
                write_out(out, Box::into_raw(Box::new(UnifourGridFunction(gf))))
            },
            Err(e) => status_of_transform(&e),
        }
    })
}

/// Inverse transform of sampled transform values.
/// # Safety
/// `transform` must be null or a live handle from this library; `zeta_grid`, when non-null, must reference `zeta_len` readable f64s; `out`, when non-null, must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn unifour_inverse_transform_grid(
    transform: *const UnifourGridFunction,
    kind: UnifourTransformKind,
    zeta_grid: *const f64,
    zeta_len: usize,
    cfg: *const UnifourQuadratureConfig,
    out: *mut *mut UnifourGridFunction,
) -> UnifourStatus {
    guarded(|| {
        if transform.is_null() || zeta_grid.is_null() || out.is_null() {
            return UnifourStatus::NullPointer;
        }
        let zs = unsafe { std::slice::from_raw_parts(zeta_grid, zeta_len) };
        match transforms::inverse_transform_grid(
            &unsafe { &*transform }.0,
            kind.into(),
            zs,
            &config_from(cfg),
        ) {
            Ok(gf) => unsafe {
                write_out(out, Box::into_raw(Box::new(UnifourGridFunction(gf))))
            },
            Err(e) => status_of_transform(&e),
        }
    })
}

/// |∫f² - ∫F²| for a sampled transform pair.
/// # Safety
/// `f` and `transform` must be null or live handles from this library; `out`, when non-null, must be valid for one f64 write.
#[no_mangle]
pub unsafe extern "C" fn unifour_parseval_gap(
    f: *const UnifourGridFunction,
    transform: *const UnifourGridFunction,
    cfg: *const UnifourQuadratureConfig,
    out: *mut f64,
) -> UnifourStatus {
    guarded(|| {
        if f.is_null() || transform.is_null() {
            return UnifourStatus::NullPointer;
        }
        match transforms::parseval_gap(
            &unsafe { &*f }.0,
            &unsafe { &*transform }.0,
            &config_from(cfg),
        ) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => status_of_transform(&e),
        }
    })
}

/// ∫ ζ^order f(ζ) dζ of sampled data.
/// # Safety
/// `f` must be null or a live handle from this library; `out`, when non-null, must be valid for one f64 write.
#[no_mangle]
pub unsafe extern "C" fn unifour_weighted_moment(
    f: *const UnifourGridFunction,
    order: usize,
    cfg: *const UnifourQuadratureConfig,
    out: *mut f64,
) -> UnifourStatus {
    guarded(|| {
        if f.is_null() {
            return UnifourStatus::NullPointer;
        }
        match transforms::weighted_moment(&unsafe { &*f }.0, order, &config_from(cfg)) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => status_of_transform(&e),
        }
    })
}

/// Moment/derivative identity gap at the origin for a sampled pair.
/// # Safety
/// `f` and `transform` must be null or live handles from this library; `out`, when non-null, must be valid for one f64 write.
#[no_mangle]
pub unsafe extern "C" fn unifour_moment_derivative_gap(
    f: *const UnifourGridFunction,
    transform: *const UnifourGridFunction,
    kind: UnifourTransformKind,
    n: usize,
    out: *mut f64,
) -> UnifourStatus {
    guarded(|| {
        if f.is_null() || transform.is_null() {
            return UnifourStatus::NullPointer;
        }
        match transforms::moment_derivative_gap(
            &unsafe { &*f }.0,
            &unsafe { &*transform }.0,
            kind.into(),
            n,
        ) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => status_of_transform(&e),
        }
    })
}

// ---------------------------------------------------------------------------
// Oscillator
// ---------------------------------------------------------------------------

/// Φ(k) = k^a e^{-k²/4} for k > 0.
/// # Safety
/// `out`, when non-null, must be valid for one f64 write.
#[no_mangle]
pub unsafe extern "C" fn unifour_phi_transform(
    a: f64,
    kind: UnifourTransformKind,
    k: f64,
    out: *mut f64,
) -> UnifourStatus {
    guarded(|| {
        let c = CandidateExponent::new(a, kind.into());
        match oscillator::phi_transform(&c, k) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => status_of_osc(&e),
        }
    })
}

/// Max residual of the transformed first-order equation on `k_grid`.
/// # Safety
/// `k_grid`, when non-null, must reference `k_len` readable f64s; `out`, when non-null, must be valid for one f64 write.
#[no_mangle]
pub unsafe extern "C" fn unifour_transformed_ode_residual(
    a: f64,
    kind: UnifourTransformKind,
    epsilon: f64,
    k_grid: *const f64,
    k_len: usize,
    out: *mut f64,
) -> UnifourStatus {
    guarded(|| {
        if k_grid.is_null() {
            return UnifourStatus::NullPointer;
        }
        let ks = unsafe { std::slice::from_raw_parts(k_grid, k_len) };
        let c = CandidateExponent::new(a, kind.into());
        match oscillator::transformed_ode_residual(&c, epsilon, ks) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => status_of_osc(&e),
        }
    })
}

/// Admissibility flags of a candidate exponent.
/// # Safety
/// `out`, when non-null, must be valid for one struct write.
#[no_mangle]
pub unsafe extern "C" fn unifour_classify_exponent(
    a: f64,
    kind: UnifourTransformKind,
    out: *mut UnifourAdmissibility,
) -> UnifourStatus {
    guarded(|| {
        let adm = oscillator::classify_exponent(&CandidateExponent::new(a, kind.into()));
        unsafe {
            write_out(
                out,
                UnifourAdmissibility {
                    parseval_ok: adm.parseval_ok,
                    moment_ok: adm.moment_ok,
                    derivative_conditions_ok: adm.derivative_conditions_ok,
                    parity_ok: adm.parity_ok,
                    accepted: adm.accepted,
                },
            )
        }
    })
}

/// Numeric inversion of a candidate transform on `zeta_grid`; on success
/// `*out` holds a new grid-function handle with the quadrature values.
/// # Safety
/// `zeta_grid`, when non-null, must reference `zeta_len` readable f64s; `out`, when non-null, must be valid for one pointer write.
#[no_mangle]
pub unsafe extern "C" fn unifour_invert_candidate(
    a: f64,
    kind: UnifourTransformKind,
    zeta_grid: *const f64,
    zeta_len: usize,
    cfg: *const UnifourQuadratureConfig,
    out: *mut *mut UnifourGridFunction,
) -> UnifourStatus {
    guarded(|| {
        if zeta_grid.is_null() || out.is_null() {
            return UnifourStatus::NullPointer;
        }
        let zs = unsafe { std::slice::from_raw_parts(zeta_grid, zeta_len) };
        let c = CandidateExponent::new(a, kind.into());
        match oscillator::invert_candidate(&c, zs, &config_from(cfg)) {
            Ok(inv) => unsafe {
                write_out(
                    out,
                    Box::into_raw(Box::new(UnifourGridFunction(inv.numeric))),
                )
            },
            Err(e) => status_of_osc(&e),
        }
    })
}

/// Growth diagnostic of a rejected candidate; writes whether |e^{ζ²/2} φ|
/// increases across the probe points.
/// # Safety
/// `zeta_probe`, when non-null, must reference `probe_len` readable f64s; `out_growing`, when non-null, must be valid for one bool write.
#[no_mangle]
pub unsafe extern "C" fn unifour_growth_diagnostic(
    a: f64,
    kind: UnifourTransformKind,
    zeta_probe: *const f64,
    probe_len: usize,
    cfg: *const UnifourQuadratureConfig,
    out_growing: *mut bool,
) -> UnifourStatus {
    guarded(|| {
        if zeta_probe.is_null() {
            return UnifourStatus::NullPointer;
        }
        let zs = unsafe { std::slice::from_raw_parts(zeta_probe, probe_len) };
        let c = CandidateExponent::new(a, kind.into());
        match oscillator::growth_diagnostic(&c, zs, &config_from(cfg)) {
            Ok(g) => unsafe { write_out(out_growing, g.growing) },
            Err(e) => status_of_osc(&e),
        }
    })
}

/// The n-th normalized eigenfunction sampled on a symmetric grid; writes
/// ε_n and a new handle holding ψ_n.
/// # Safety
/// `x_grid`, when non-null, must reference `x_len` readable f64s; non-null `epsilon_out`/`psi_out` must be valid for one write each.
#[no_mangle]
pub unsafe extern "C" fn unifour_eigenpair(
    n: u32,
    x_grid: *const f64,
    x_len: usize,
    epsilon_out: *mut f64,
    psi_out: *mut *mut UnifourGridFunction,
) -> UnifourStatus {
    guarded(|| {
        if x_grid.is_null() || psi_out.is_null() {
            return UnifourStatus::NullPointer;
        }
        let xs = unsafe { std::slice::from_raw_parts(x_grid, x_len) };
        match oscillator::eigenpair(n as usize, xs) {
            Ok(p) => {
                if !epsilon_out.is_null() {
                    unsafe { epsilon_out.write(p.epsilon) };
                }
                unsafe {
                    write_out(psi_out, Box::into_raw(Box::new(UnifourGridFunction(p.psi))))
                }
            }
            Err(e) => status_of_osc(&e),
        }
    })
}

/// Normalized Schrödinger residual of sampled eigenfunction data at a given
/// eigenvalue.
/// # Safety
/// `psi` must be null or a live handle from this library; `out`, when non-null, must be valid for one f64 write.
#[no_mangle]
pub unsafe extern "C" fn unifour_schrodinger_residual(
    psi: *const UnifourGridFunction,
    n: u32,
    epsilon: f64,
    out: *mut f64,
) -> UnifourStatus {
    guarded(|| {
        if psi.is_null() {
            return UnifourStatus::NullPointer;
        }
        let pair = Eigenpair {
            n: n as usize,
            epsilon,
            psi: unsafe { &*psi }.0.clone(),
            norm: 1.0,
        };
        match oscillator::schrodinger_residual(&pair) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => status_of_osc(&e),
        }
    })
}

/// ε_n = n + 1/2 for n = 0..=n_max, written into `out[0..=n_max]`.
/// # Safety
/// `out`, when non-null, must be valid for `n_max + 1` f64 writes.
#[no_mangle]
pub unsafe extern "C" fn unifour_spectrum(n_max: u32, out: *mut f64) -> UnifourStatus {
    guarded(|| {
        if out.is_null() {
            return UnifourStatus::NullPointer;
        }
        let s = oscillator::spectrum(n_max as usize);
        unsafe { std::ptr::copy_nonoverlapping(s.as_ptr(), out, s.len()) };
        UnifourStatus::Ok
    })
}

// ---------------------------------------------------------------------------
// Oracle
// ---------------------------------------------------------------------------

/// Lowest `n_states` finite-difference eigenvalues, written into
/// `out[0..n_states]`.
/// # Safety
/// `out`, when non-null, must be valid for `n_states` f64 writes.
#[no_mangle]
pub unsafe extern "C" fn unifour_fd_eigenvalues(
    half_width: f64,
    points: usize,
    n_states: usize,
    out: *mut f64,
) -> UnifourStatus {
    guarded(|| {
        if out.is_null() {
            return UnifourStatus::NullPointer;
        }
        let cfg = match FdConfig::new(half_width, points, n_states) {
            Ok(c) => c,
            Err(e) => return status_of_oracle(&e),
        };
        match oracle::fd_eigensolve(&cfg) {
            Ok(pairs) => {
                for (i, p) in pairs.iter().enumerate() {
                    unsafe { out.add(i).write(p.epsilon) };
                }
                UnifourStatus::Ok
            }
            Err(e) => status_of_oracle(&e),
        }
    })
}

/// One finite-difference eigenvector: writes the eigenvalue and a handle to
/// the sampled eigenfunction.
/// # Safety
/// Non-null `epsilon_out`/`psi_out` must be valid for one write each.
#[no_mangle]
pub unsafe extern "C" fn unifour_fd_eigenvector(
    half_width: f64,
    points: usize,
    state: usize,
    epsilon_out: *mut f64,
    psi_out: *mut *mut UnifourGridFunction,
) -> UnifourStatus {
    guarded(|| {
        if psi_out.is_null() {
            return UnifourStatus::NullPointer;
        }
        let cfg = match FdConfig::new(half_width, points, state + 1) {
            Ok(c) => c,
            Err(e) => return status_of_oracle(&e),
        };
        match oracle::fd_eigensolve(&cfg) {
            Ok(mut pairs) => {
                let p = pairs.swap_remove(state);
                if !epsilon_out.is_null() {
                    unsafe { epsilon_out.write(p.epsilon) };
                }
                unsafe {
                    write_out(psi_out, Box::into_raw(Box::new(UnifourGridFunction(p.psi))))
                }
            }
            Err(e) => status_of_oracle(&e),
        }
    })
}

/// Reference estimate of ∫₀^∞ f via Richardson-refined midpoint panels.
/// # Safety
/// A non-null `f` must be safe to call with any finite argument and `ctx`; `out`, when non-null, must be valid for one f64 write.
#[no_mangle]
pub unsafe extern "C" fn unifour_reference_quadrature(
    f: UnifourRealFn,
    ctx: *mut c_void,
    cfg: *const UnifourQuadratureConfig,
    out: *mut f64,
) -> UnifourStatus {
    guarded(|| {
        let Some(f) = f else {
            return UnifourStatus::NullPointer;
        };
        let cb = CallbackFn { f, ctx };
        match oracle::reference_quadrature(|x| cb.call(x), &config_from(cfg)) {
            Ok(v) => unsafe { write_out(out, v) },
            Err(e) => status_of_oracle(&e),
        }
    })
}
