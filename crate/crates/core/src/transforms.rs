//! Numerical Fourier sine/cosine transforms on `[0, ∞)` and the identities
//! they satisfy: Parseval's formulas, moment/derivative relations at the
//! origin, the second-derivative property, and the scaling property of the
//! exponential transform.
//!
//! Inputs are either callables or sampled [`GridFunction`]s (interpolated
//! cubically). The transform of an odd function is a sine transform, of an
//! even function a cosine transform; a declared parity that conflicts with
//! the requested kind is a [`TransformError::BoundaryViolation`]. Inputs
//! with no declared parity (e.g. `e^{-ζ}`) are transformable as long as they
//! are absolutely integrable — the boundary conditions at the origin matter
//! for inversion, not for the forward integral.

use crate::fd::{self, GridTooCoarse};
use crate::grid::{GridError, GridFunction, Parity};
use crate::quad::{self, QuadError, QuadratureConfig};
use std::f64::consts::PI;
use std::fmt;

/// Selector between the Fourier sine and cosine transforms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    Sine,
    Cosine,
}

impl TransformKind {
    pub fn kernel(self, t: f64) -> f64 {
        match self {
            Self::Sine => t.sin(),
            Self::Cosine => t.cos(),
        }
    }

    /// Parity class the kind is built for: sine for odd, cosine for even.
    pub fn natural_parity(self) -> Parity {
        match self {
            Self::Sine => Parity::Odd,
            Self::Cosine => Parity::Even,
        }
    }

    /// A declared parity that contradicts the kind.
    pub fn conflicts_with(self, parity: Parity) -> bool {
        matches!(
            (self, parity),
            (Self::Sine, Parity::Even) | (Self::Cosine, Parity::Odd)
        )
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Sine => write!(f, "sine"),
            Self::Cosine => write!(f, "cosine"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TransformError {
    /// Integrand tail past the truncation radius exceeds the error budget.
    TailNotDecayed { estimate: f64, budget: f64 },
    /// Declared parity contradicts the transform kind's boundary condition.
    BoundaryViolation { detail: String },
    /// Grid cannot support the requested finite-difference order.
    GridTooCoarse { needed: usize, available: usize },
    /// Bad argument (non-monotone grid, zero scale factor, …).
    Domain { what: String },
    /// Quadrature failed for a reason other than the tail check.
    Quadrature(QuadError),
}

impl fmt::Display for TransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TailNotDecayed { estimate, budget } => write!(
                f,
                "tail beyond truncation radius is {estimate:.3e} (budget {budget:.3e})"
            ),
            Self::BoundaryViolation { detail } => write!(f, "boundary violation: {detail}"),
            Self::GridTooCoarse { needed, available } => write!(
                f,
                "grid too coarse: need {needed} points, have {available}"
            ),
            Self::Domain { what } => write!(f, "domain error: {what}"),
            Self::Quadrature(e) => write!(f, "quadrature failure: {e}"),
        }
    }
}

impl std::error::Error for TransformError {}

impl From<QuadError> for TransformError {
    fn from(e: QuadError) -> Self {
        match e {
            QuadError::TailNotDecayed { estimate, budget } => {
                Self::TailNotDecayed { estimate, budget }
            }
            other => Self::Quadrature(other),
        }
    }
}

impl From<GridTooCoarse> for TransformError {
    fn from(e: GridTooCoarse) -> Self {
        Self::GridTooCoarse {
            needed: e.needed,
            available: e.available,
        }
    }
}

impl From<GridError> for TransformError {
    fn from(e: GridError) -> Self {
        Self::Domain {
            what: e.to_string(),
        }
    }
}

fn norm_const() -> f64 {
    (2.0 / PI).sqrt()
}

/// One transform value: √(2/π) ∫_lo^hi f(ζ) ker(kζ) dζ with the oscillation
/// width cap and the decayed-tail check.
fn transform_point<F: Fn(f64) -> f64>(
    f: &F,
    kind: TransformKind,
    k: f64,
    lo: f64,
    hi: f64,
    cfg: &QuadratureConfig,
) -> Result<f64, TransformError> {
    let width = if k.abs() > 1e-12 {
        Some(PI / (4.0 * k.abs()))
    } else {
        None
    };
    let breaks = quad::uniform_breaks(lo, hi, width);
    let integrand = |z: f64| f(z) * kind.kernel(k * z);
    let v = quad::integrate_decaying(&integrand, &breaks, cfg.rel_tol, cfg.max_subdivisions)?;
    Ok(norm_const() * v)
}

fn transform_core<F: Fn(f64) -> f64>(
    f: &F,
    kind: TransformKind,
    out_grid: &[f64],
    lo: f64,
    hi: f64,
    cfg: &QuadratureConfig,
) -> Result<GridFunction, TransformError> {
    cfg.validate()?;
    let mut values = Vec::with_capacity(out_grid.len());
    for &k in out_grid {
        if k < 0.0 {
            return Err(TransformError::Domain {
                what: format!("transform evaluated at negative point {k}"),
            });
        }
        values.push(transform_point(f, kind, k, lo, hi, cfg)?);
    }
    Ok(GridFunction::new(
        out_grid.to_vec(),
        values,
        kind.natural_parity(),
    )?)
}

/// Forward transform Φ(k) = √(2/π) ∫₀^∞ f(ζ) {sin, cos}(kζ) dζ of a
/// callable with declared parity.
pub fn forward_transform<F: Fn(f64) -> f64>(
    f: F,
    parity: Parity,
    kind: TransformKind,
    k_grid: &[f64],
    cfg: &QuadratureConfig,
) -> Result<GridFunction, TransformError> {
    if kind.conflicts_with(parity) {
        return Err(TransformError::BoundaryViolation {
            detail: format!("{parity} function with {kind} transform"),
        });
    }
    transform_core(&f, kind, k_grid, 0.0, cfg.truncation_radius, cfg)
}

/// Forward transform of a sampled function; the integral runs over the
/// sample span and the samples' parity tag is checked against the kind.
pub fn forward_transform_grid(
    f: &GridFunction,
    kind: TransformKind,
    k_grid: &[f64],
    cfg: &QuadratureConfig,
) -> Result<GridFunction, TransformError> {
    check_sampled_boundary(f, kind)?;
    let interp = f.interpolant();
    transform_core(
        &interp,
        kind,
        k_grid,
        f.first_point().max(0.0),
        f.last_point(),
        cfg,
    )
}

/// Inverse transform φ(ζ) = √(2/π) ∫₀^∞ Φ(k) {sin, cos}(kζ) dk; same
/// integral as the forward direction with the roles of ζ and k exchanged.
pub fn inverse_transform<F: Fn(f64) -> f64>(
    transform: F,
    parity: Parity,
    kind: TransformKind,
    zeta_grid: &[f64],
    cfg: &QuadratureConfig,
) -> Result<GridFunction, TransformError> {
    forward_transform(transform, parity, kind, zeta_grid, cfg)
}

/// Inverse transform of sampled transform values.
pub fn inverse_transform_grid(
    transform: &GridFunction,
    kind: TransformKind,
    zeta_grid: &[f64],
    cfg: &QuadratureConfig,
) -> Result<GridFunction, TransformError> {
    forward_transform_grid(transform, kind, zeta_grid, cfg)
}

/// Parity/boundary screening for sampled inputs.
///
/// Beyond the tag/kind conflict, a sampled odd function must vanish at the
/// origin and a sampled even function must have a flat origin; both are
/// checked by finite differences when the grid reaches ζ = 0.
fn check_sampled_boundary(f: &GridFunction, kind: TransformKind) -> Result<(), TransformError> {
    if kind.conflicts_with(f.parity()) {
        return Err(TransformError::BoundaryViolation {
            detail: format!("{} function with {kind} transform", f.parity()),
        });
    }
    if f.first_point().abs() > 1e-12 {
        return Ok(()); // grid does not reach the origin; nothing to check
    }
    let scale = f.max_abs().max(1.0);
    match (kind, f.parity()) {
        (TransformKind::Sine, Parity::Odd) => {
            let v0 = f.values()[0];
            if v0.abs() > 1e-6 * scale {
                return Err(TransformError::BoundaryViolation {
                    detail: format!("sine transform input has f(0) = {v0:.3e}"),
                });
            }
        }
        (TransformKind::Cosine, Parity::Even)
            // The slope estimate is only meaningful on a reasonably fine
            // grid near the origin.
            if f.len() >= 4 && f.grid()[1] - f.grid()[0] <= 0.05 => {
                if let Ok(d) = fd::one_sided_derivative(f.grid(), f.values(), 1) {
                    if d.abs() > 1e-2 * scale {
                        return Err(TransformError::BoundaryViolation {
                            detail: format!("cosine transform input has f'(0) = {d:.3e}"),
                        });
                    }
                }
            }
        _ => {}
    }
    Ok(())
}

/// |∫₀^∞ f² dζ - ∫₀^∞ F² dk| for a transform pair.
pub fn parseval_gap(
    f: &GridFunction,
    transform: &GridFunction,
    cfg: &QuadratureConfig,
) -> Result<f64, TransformError> {
    let lhs = squared_norm(f, cfg)?;
    let rhs = squared_norm(transform, cfg)?;
    Ok((lhs - rhs).abs())
}

fn squared_norm(g: &GridFunction, cfg: &QuadratureConfig) -> Result<f64, TransformError> {
    let interp = g.interpolant();
    let breaks = quad::uniform_breaks(g.first_point().max(0.0), g.last_point(), Some(1.0));
    let sq = |x: f64| {
        let v = interp(x);
        v * v
    };
    let integral = quad::integrate_breakpoints(&sq, &breaks, cfg.rel_tol, cfg.max_subdivisions)?;
    Ok(integral.value)
}

/// ∫₀^∞ ζ^order f(ζ) dζ of a sampled function.
pub fn weighted_moment(
    f: &GridFunction,
    order: usize,
    cfg: &QuadratureConfig,
) -> Result<f64, TransformError> {
    let interp = f.interpolant();
    weighted_moment_over(&interp, order, f.first_point().max(0.0), f.last_point(), cfg)
}

/// ∫₀^∞ ζ^order f(ζ) dζ of a callable, truncated at the configured radius.
pub fn weighted_moment_fn<F: Fn(f64) -> f64>(
    f: F,
    order: usize,
    cfg: &QuadratureConfig,
) -> Result<f64, TransformError> {
    weighted_moment_over(&f, order, 0.0, cfg.truncation_radius, cfg)
}

fn weighted_moment_over<F: Fn(f64) -> f64>(
    f: &F,
    order: usize,
    lo: f64,
    hi: f64,
    cfg: &QuadratureConfig,
) -> Result<f64, TransformError> {
    cfg.validate()?;
    let integrand = |z: f64| z.powi(order as i32) * f(z);
    let breaks = quad::uniform_breaks(lo, hi, Some(1.0));
    Ok(quad::integrate_decaying(
        &integrand,
        &breaks,
        cfg.rel_tol,
        cfg.max_subdivisions,
    )?)
}

/// Gap in the moment/derivative relation at the origin.
///
/// For a cosine pair this is |d^{2n}F/dk^{2n}(0) - (-1)ⁿ √(2/π) ∫ ζ^{2n} f|,
/// for a sine pair the (2n+1)-order analogue. The returned value also folds
/// in the dual vanishing identity (the odd-order cosine / even-order sine
/// derivative at the origin, which must be 0): the reported gap is the
/// larger of the two.
///
/// Derivatives are one-sided finite differences on the transform's grid,
/// which must start at k = 0; accuracy order is the derivative order + 2.
pub fn moment_derivative_gap(
    f: &GridFunction,
    transform: &GridFunction,
    kind: TransformKind,
    n: usize,
) -> Result<f64, TransformError> {
    if transform.first_point().abs() > 1e-12 {
        return Err(TransformError::Domain {
            what: "transform grid must start at k = 0 for origin derivatives".into(),
        });
    }
    let (m_identity, m_vanishing) = match kind {
        TransformKind::Cosine => (2 * n, 2 * n + 1),
        TransformKind::Sine => (2 * n + 1, 2 * n),
    };
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };

    let deriv = fd::one_sided_derivative(transform.grid(), transform.values(), m_identity)?;
    let moment = weighted_moment(f, m_identity, &QuadratureConfig::default())?;
    let identity_gap = (deriv - sign * norm_const() * moment).abs();

    let vanishing =
        fd::one_sided_derivative(transform.grid(), transform.values(), m_vanishing)?.abs();

    Ok(identity_gap.max(vanishing))
}

/// max over `k_grid` of |F{f''}(k) + k² F{f}(k)|, the second-derivative
/// property of the unilateral transforms. `d2f` is the analytic second
/// derivative of `f`.
pub fn second_derivative_identity_gap<F, G>(
    f: F,
    d2f: G,
    kind: TransformKind,
    k_grid: &[f64],
    cfg: &QuadratureConfig,
) -> Result<f64, TransformError>
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    let tf = forward_transform(&f, kind.natural_parity(), kind, k_grid, cfg)?;
    let td2f = forward_transform(&d2f, kind.natural_parity(), kind, k_grid, cfg)?;
    let gap = k_grid
        .iter()
        .enumerate()
        .map(|(i, &k)| (td2f.values()[i] + k * k * tf.values()[i]).abs())
        .fold(0.0f64, f64::max);
    Ok(gap)
}

/// [`second_derivative_identity_gap`] with f'' formed by parity-reflected
/// central differences (step 5e-3), for callers without an analytic second
/// derivative.
pub fn second_derivative_identity_gap_numeric<F>(
    f: F,
    kind: TransformKind,
    k_grid: &[f64],
    cfg: &QuadratureConfig,
) -> Result<f64, TransformError>
where
    F: Fn(f64) -> f64 + Copy,
{
    let sign = match kind {
        TransformKind::Cosine => 1.0,
        TransformKind::Sine => -1.0,
    };
    let ext = move |t: f64| if t >= 0.0 { f(t) } else { sign * f(-t) };
    let h = 5e-3;
    let d2f = move |z: f64| {
        (-ext(z - 2.0 * h) + 16.0 * ext(z - h) - 30.0 * f(z) + 16.0 * ext(z + h)
            - ext(z + 2.0 * h))
            / (12.0 * h * h)
    };
    second_derivative_identity_gap(f, d2f, kind, k_grid, cfg)
}

/// Gap in the exponential-transform scaling property F{f(cx)} = F(κ/c)/|c|
/// for a real even callable (whose exponential transform reduces to the
/// cosine transform and stays real).
pub fn scaling_property_gap<F: Fn(f64) -> f64>(
    f: F,
    c: f64,
    kappa: f64,
    cfg: &QuadratureConfig,
) -> Result<f64, TransformError> {
    if c == 0.0 || !c.is_finite() {
        return Err(TransformError::Domain {
            what: format!("scale factor must be nonzero and finite, got {c}"),
        });
    }
    let ac = c.abs();
    // f(cζ) decays |c| times slower for |c| < 1; stretch the truncation.
    let scaled_cfg = QuadratureConfig {
        truncation_radius: cfg.truncation_radius / ac.min(1.0),
        ..*cfg
    };
    let scaled = |z: f64| f(ac * z);
    let lhs = transform_point(
        &scaled,
        TransformKind::Cosine,
        kappa.abs(),
        0.0,
        scaled_cfg.truncation_radius,
        &scaled_cfg,
    )?;
    let rhs = transform_point(
        &f,
        TransformKind::Cosine,
        (kappa / c).abs(),
        0.0,
        cfg.truncation_radius,
        cfg,
    )? / ac;
    Ok((lhs - rhs).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::linspace;

    const SQRT_PI: f64 = 1.772_453_850_905_515_9;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn wide_cfg() -> QuadratureConfig {
        QuadratureConfig {
            truncation_radius: 45.0,
            ..cfg()
        }
    }

    #[test]
    fn sine_transform_of_exponential() {
        // F_s{e^{-ζ}}(k) = √(2/π) k/(1+k²); value at k=1 derived in
        // tests/derived_values.rs with the reference integrator.
        let out = forward_transform(
            |z: f64| (-z).exp(),
            Parity::None,
            TransformKind::Sine,
            &[1.0],
            &wide_cfg(),
        )
        .unwrap();
        let expect = 0.398_942_280_401_432_7;
        assert!((out.values()[0] - expect).abs() < 1e-9, "{}", out.values()[0]);
    }

    #[test]
    fn cosine_transform_of_gaussian_at_zero() {
        let out = forward_transform(
            |z: f64| (-z * z).exp(),
            Parity::Even,
            TransformKind::Cosine,
            &[0.0],
            &cfg(),
        )
        .unwrap();
        let expect = 1.0 / 2.0f64.sqrt();
        assert!((out.values()[0] - expect).abs() < 1e-9, "{}", out.values()[0]);
    }

    #[test]
    fn sine_transform_vanishes_at_zero() {
        let out = forward_transform(
            |z: f64| z * (-z * z).exp(),
            Parity::Odd,
            TransformKind::Sine,
            &[0.0],
            &cfg(),
        )
        .unwrap();
        assert_eq!(out.values()[0], 0.0);
    }

    #[test]
    fn parity_conflicts_are_boundary_violations() {
        let err = forward_transform(
            |z: f64| (-z * z).exp(),
            Parity::Even,
            TransformKind::Sine,
            &[1.0],
            &cfg(),
        )
        .unwrap_err();
        assert!(matches!(err, TransformError::BoundaryViolation { .. }));

        let err = forward_transform(
            |z: f64| z * (-z * z).exp(),
            Parity::Odd,
            TransformKind::Cosine,
            &[1.0],
            &cfg(),
        )
        .unwrap_err();
        assert!(matches!(err, TransformError::BoundaryViolation { .. }));
    }

    #[test]
    fn sampled_even_with_slope_at_origin_is_rejected() {
        let gf = GridFunction::sample(
            |z: f64| (-z).exp(),
            linspace(0.0, 12.0, 1201),
            Parity::Even, // mis-tagged on purpose
        )
        .unwrap();
        let err = forward_transform_grid(&gf, TransformKind::Cosine, &[1.0], &cfg()).unwrap_err();
        assert!(matches!(err, TransformError::BoundaryViolation { .. }), "{err}");
    }

    #[test]
    fn inverse_recovers_gaussian_at_origin() {
        // F_c of e^{-ζ²} is e^{-k²/4}/√2; inverting at ζ=0 gives 1.
        let out = inverse_transform(
            |k: f64| (-k * k / 4.0).exp() / 2.0f64.sqrt(),
            Parity::Even,
            TransformKind::Cosine,
            &[0.0],
            &cfg(),
        )
        .unwrap();
        assert!((out.values()[0] - 1.0).abs() < 1e-9, "{}", out.values()[0]);
    }

    #[test]
    fn inverse_of_zero_is_zero() {
        let out = inverse_transform(
            |_| 0.0,
            Parity::None,
            TransformKind::Cosine,
            &linspace(0.0, 4.0, 9),
            &cfg(),
        )
        .unwrap();
        assert!(out.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn roundtrip_through_sampled_transform() {
        let k_grid = linspace(0.0, 12.0, 241);
        let fwd = forward_transform(
            |z: f64| (-z * z).exp(),
            Parity::Even,
            TransformKind::Cosine,
            &k_grid,
            &cfg(),
        )
        .unwrap();
        let back = inverse_transform_grid(&fwd, TransformKind::Cosine, &[1.0], &cfg()).unwrap();
        let expect = (-1.0f64).exp();
        assert!(
            (back.values()[0] - expect).abs() < 1e-6,
            "{} vs {expect}",
            back.values()[0]
        );
    }

    #[test]
    fn parseval_for_gaussian_pair() {
        let zeta = linspace(0.0, 12.0, 601);
        let k = linspace(0.0, 12.0, 601);
        let f = GridFunction::sample(|z: f64| (-z * z).exp(), zeta, Parity::Even).unwrap();
        let tf =
            GridFunction::sample(|k: f64| (-k * k / 4.0).exp() / 2.0f64.sqrt(), k, Parity::Even)
                .unwrap();
        let gap = parseval_gap(&f, &tf, &cfg()).unwrap();
        assert!(gap < 1e-6, "gap {gap}");
    }

    #[test]
    fn parseval_zero_function() {
        let zeta = linspace(0.0, 12.0, 101);
        let f = GridFunction::sample(|_| 0.0, zeta.clone(), Parity::None).unwrap();
        let tf = GridFunction::sample(|_| 0.0, zeta, Parity::None).unwrap();
        assert_eq!(parseval_gap(&f, &tf, &cfg()).unwrap(), 0.0);
    }

    #[test]
    fn moments_of_gaussian_family() {
        let m = weighted_moment_fn(|z: f64| z * (-z * z).exp(), 1, &cfg()).unwrap();
        assert!((m - SQRT_PI / 4.0).abs() < 1e-9, "{m}");
        let m = weighted_moment_fn(|z: f64| (-z * z).exp(), 0, &cfg()).unwrap();
        assert!((m - SQRT_PI / 2.0).abs() < 1e-9, "{m}");
        let m = weighted_moment_fn(|_| 0.0, 3, &cfg()).unwrap();
        assert_eq!(m, 0.0);
    }

    #[test]
    fn moment_of_sampled_function() {
        let f = GridFunction::sample(
            |z: f64| z * (-z * z).exp(),
            linspace(0.0, 10.0, 2001),
            Parity::Odd,
        )
        .unwrap();
        let m = weighted_moment(&f, 1, &cfg()).unwrap();
        assert!((m - SQRT_PI / 4.0).abs() < 1e-7, "{m}");
    }

    #[test]
    fn tail_not_decayed_for_growing_moment() {
        let err = weighted_moment_fn(|z: f64| z.exp(), 0, &cfg()).unwrap_err();
        assert!(matches!(err, TransformError::TailNotDecayed { .. }));
    }

    fn transform_samples(kind: TransformKind, f: impl Fn(f64) -> f64) -> GridFunction {
        let k_grid = linspace(0.0, 0.3, 16);
        let tight = QuadratureConfig {
            rel_tol: 5e-13,
            ..cfg()
        };
        let parity = kind.natural_parity();
        forward_transform(f, parity, kind, &k_grid, &tight).unwrap()
    }

    #[test]
    fn moment_derivative_identity_cosine_n0() {
        let f = GridFunction::sample(
            |z: f64| (-z * z).exp(),
            linspace(0.0, 12.0, 2401),
            Parity::Even,
        )
        .unwrap();
        let tf = transform_samples(TransformKind::Cosine, |z: f64| (-z * z).exp());
        let gap = moment_derivative_gap(&f, &tf, TransformKind::Cosine, 0).unwrap();
        assert!(gap < 1e-5, "gap {gap}");
    }

    #[test]
    fn moment_derivative_identity_sine_n0() {
        let f = GridFunction::sample(
            |z: f64| z * (-z * z).exp(),
            linspace(0.0, 12.0, 2401),
            Parity::Odd,
        )
        .unwrap();
        let tf = transform_samples(TransformKind::Sine, |z: f64| z * (-z * z).exp());
        let gap = moment_derivative_gap(&f, &tf, TransformKind::Sine, 0).unwrap();
        assert!(gap < 1e-4, "gap {gap}");
    }

    #[test]
    fn vanishing_derivative_of_sine_transform() {
        // Even-order derivative of a sine-kind transform at 0; for n=0 the
        // vanishing side is F_s(0) itself, which the quadrature yields as an
        // exactly zero integrand.
        let tf = transform_samples(TransformKind::Sine, |z: f64| z * (-z * z).exp());
        assert!(tf.values()[0].abs() <= 1e-6, "{}", tf.values()[0]);
    }

    #[test]
    fn grid_too_coarse_for_high_derivative() {
        let f = GridFunction::sample(
            |z: f64| (-z * z).exp(),
            linspace(0.0, 12.0, 1201),
            Parity::Even,
        )
        .unwrap();
        let tf = GridFunction::sample(
            |k: f64| (-k * k / 4.0).exp() / 2.0f64.sqrt(),
            linspace(0.0, 0.1, 4),
            Parity::Even,
        )
        .unwrap();
        let err = moment_derivative_gap(&f, &tf, TransformKind::Cosine, 1).unwrap_err();
        assert!(matches!(err, TransformError::GridTooCoarse { .. }), "{err}");
    }

    #[test]
    fn second_derivative_property_gaussian() {
        let k_grid = linspace(0.0, 8.0, 33);
        let f = |z: f64| (-z * z).exp();
        let d2f = |z: f64| (4.0 * z * z - 2.0) * (-z * z).exp();
        let gap =
            second_derivative_identity_gap(f, d2f, TransformKind::Cosine, &k_grid, &cfg()).unwrap();
        assert!(gap < 1e-6, "gap {gap}");
    }

    #[test]
    fn second_derivative_property_sine() {
        let k_grid = linspace(0.0, 8.0, 33);
        let f = |z: f64| z * (-z * z).exp();
        let d2f = |z: f64| (4.0 * z * z * z - 6.0 * z) * (-z * z).exp();
        let gap =
            second_derivative_identity_gap(f, d2f, TransformKind::Sine, &k_grid, &cfg()).unwrap();
        assert!(gap < 1e-6, "gap {gap}");
    }

    #[test]
    fn second_derivative_property_without_analytic_derivative() {
        let k_grid = linspace(0.0, 6.0, 25);
        let gap = second_derivative_identity_gap_numeric(
            |z: f64| (-z * z).exp(),
            TransformKind::Cosine,
            &k_grid,
            &cfg(),
        )
        .unwrap();
        assert!(gap < 1e-5, "cosine gap {gap}");
        let gap = second_derivative_identity_gap_numeric(
            |z: f64| z * (-z * z).exp(),
            TransformKind::Sine,
            &k_grid,
            &cfg(),
        )
        .unwrap();
        assert!(gap < 1e-5, "sine gap {gap}");
    }

    #[test]
    fn second_derivative_property_zero_function() {
        let gap = second_derivative_identity_gap(
            |_| 0.0,
            |_| 0.0,
            TransformKind::Cosine,
            &linspace(0.0, 8.0, 17),
            &cfg(),
        )
        .unwrap();
        assert_eq!(gap, 0.0);
    }

    #[test]
    fn scaling_property_of_gaussian() {
        let f = |x: f64| (-x * x).exp();
        let gap = scaling_property_gap(f, 2.0, 1.0, &cfg()).unwrap();
        assert!(gap < 1e-6, "gap {gap}");
        let gap = scaling_property_gap(f, 1.0, 0.7, &cfg()).unwrap();
        assert!(gap < 1e-12, "identity scaling gap {gap}");
        let gap = scaling_property_gap(f, -1.0, 0.7, &cfg()).unwrap();
        assert!(gap < 1e-6, "even reflection gap {gap}");
    }

    #[test]
    fn scaling_rejects_zero_factor() {
        let err = scaling_property_gap(|x: f64| (-x * x).exp(), 0.0, 1.0, &cfg()).unwrap_err();
        assert!(matches!(err, TransformError::Domain { .. }));
    }
}
