//! Adaptive quadrature for the semi-infinite integrals behind the transforms.
//!
//! The scheme is panel-based: a 15-point Gauss–Kronrod rule per panel with
//! adaptive bisection of the worst panel until the summed error estimate
//! meets the requested relative tolerance. Semi-infinite integrals are
//! truncated at [`QuadratureConfig::truncation_radius`] and the discarded
//! tail is estimated from the decay of the last panels; a tail that does not
//! decay below the error budget is reported as [`QuadError::TailNotDecayed`].
//!
//! Oscillatory integrands (`sin kζ`, `cos kζ` kernels) are kept accurate by
//! capping the initial panel width at a quarter period, `π/(4k)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt;

/// Truncation and tolerance settings for the semi-infinite integrals.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureConfig {
    /// Upper limit substituted for ∞; the tail beyond it must be negligible.
    pub truncation_radius: f64,
    /// Relative error target per integral.
    pub rel_tol: f64,
    /// Cap on the number of adaptive panels.
    pub max_subdivisions: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            truncation_radius: 12.0,
            rel_tol: 1e-9,
            max_subdivisions: 2000,
        }
    }
}

impl QuadratureConfig {
    // Negated comparisons so NaN fields are rejected too.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<(), QuadError> {
        if !(self.truncation_radius > 0.0)
            || !(self.rel_tol > 0.0 && self.rel_tol < 1.0)
            || self.max_subdivisions == 0
        {
            return Err(QuadError::InvalidConfig);
        }
        Ok(())
    }
}

/// Failure modes of the adaptive integrator.
#[derive(Debug, Clone, PartialEq)]
pub enum QuadError {
    /// The integrand tail beyond the truncation radius exceeds the budget.
    TailNotDecayed { estimate: f64, budget: f64 },
    /// Integrable-singularity power at the origin is at or below -1.
    SingularityTooStrong { power: f64 },
    /// The panel budget was exhausted before reaching the tolerance.
    NoConvergence { error_estimate: f64, subdivisions: usize },
    /// Config violates its invariants (tolerance or radius out of range).
    InvalidConfig,
}

impl fmt::Display for QuadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TailNotDecayed { estimate, budget } => write!(
                f,
                "integrand tail beyond the truncation radius is {estimate:.3e}, budget {budget:.3e}"
            ),
            Self::SingularityTooStrong { power } => {
                write!(f, "origin singularity k^{power:.3} is not integrable")
            }
            Self::NoConvergence {
                error_estimate,
                subdivisions,
            } => write!(
                f,
                "no convergence after {subdivisions} panels (error estimate {error_estimate:.3e})"
            ),
            Self::InvalidConfig => write!(f, "quadrature config violates its invariants"),
        }
    }
}

impl std::error::Error for QuadError {}

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 values).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_7,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One Gauss–Kronrod evaluation over `[a, b]`.
///
/// Returns `(integral, error_estimate, integral_of_abs)`.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let f_center = f(center);
    let mut kronrod = f_center * WGK[7];
    let mut gauss = f_center * WG[3];
    let mut res_abs = kronrod.abs();

    let mut fv = [0.0f64; 15];
    fv[7] = f_center;

    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv[j] = f1;
        fv[14 - j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = kronrod * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }

    let value = kronrod * half;
    res_abs *= half.abs();
    res_asc *= half.abs();

    // QUADPACK error rescaling: sharpen the raw |K15 - G7| difference and
    // floor it at the roundoff level of the panel.
    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }

    (value, err, res_abs)
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    res_abs: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
    }
}

/// Result of an adaptive integration: value plus diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct Integral {
    pub value: f64,
    pub error_estimate: f64,
    pub abs_integral: f64,
}

/// Adaptive integration over the panels delimited by `breaks`.
///
/// `breaks` must be strictly increasing with at least two entries. Panels are
/// bisected worst-first until the summed error estimate falls below
/// `rel_tol`-relative (with a roundoff floor) or `max_subdivisions` panels
/// exist.
pub fn integrate_breakpoints<F: Fn(f64) -> f64>(
    f: &F,
    breaks: &[f64],
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<Integral, QuadError> {
    assert!(breaks.len() >= 2, "need at least one panel");

    let mut heap = BinaryHeap::with_capacity(breaks.len() + 16);
    let mut value = 0.0;
    let mut error = 0.0;
    let mut res_abs = 0.0;

    for w in breaks.windows(2) {
        let (v, e, r) = gk15(f, w[0], w[1]);
        value += v;
        error += e;
        res_abs += r;
        heap.push(Panel {
            a: w[0],
            b: w[1],
            value: v,
            error: e,
            res_abs: r,
        });
    }

    // The error floor is absolute, 1e-13 of the integrand mass: below it
    // the estimate is dominated by roundoff (and, for interpolated inputs,
    // by knot kinks), not by anything further panel splitting can fix.
    let converged = |value: f64, error: f64, res_abs: f64| {
        error <= (rel_tol * value.abs()).max(1e-13 * res_abs)
    };

    // Roundoff-plateau detection: when 64 further splits improve the error
    // estimate by under 2% and the estimate already sits at the noise level
    // of the integrand mass, refinement cannot help and the estimate is
    // accepted.
    let mut plateau_mark = f64::INFINITY;
    let mut splits_since_mark = 0usize;

    while !converged(value, error, res_abs) {
        if heap.len() >= max_subdivisions {
            return Err(QuadError::NoConvergence {
                error_estimate: error,
                subdivisions: heap.len(),
            });
        }
        splits_since_mark += 1;
        if splits_since_mark == 64 {
            if error > 0.98 * plateau_mark && error <= 1e-8 * res_abs.max(f64::MIN_POSITIVE) {
                break;
            }
            plateau_mark = error;
            splits_since_mark = 0;
        }
        let worst = heap.pop().expect("heap cannot be empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Panel is at floating-point resolution; accept its estimate.
            heap.push(worst);
            break;
        }
        let (v1, e1, r1) = gk15(f, worst.a, mid);
        let (v2, e2, r2) = gk15(f, mid, worst.b);
        value += v1 + v2 - worst.value;
        error += e1 + e2 - worst.error;
        res_abs += r1 + r2 - worst.res_abs;
        heap.push(Panel {
            a: worst.a,
            b: mid,
            value: v1,
            error: e1,
            res_abs: r1,
        });
        heap.push(Panel {
            a: mid,
            b: worst.b,
            value: v2,
            error: e2,
            res_abs: r2,
        });
    }

    // Re-sum in interval order so the result does not depend on heap
    // internals (keeps identical inputs bit-identical).
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.sort_by(|p, q| p.a.partial_cmp(&q.a).unwrap_or(Ordering::Equal));
    let value = panels.iter().map(|p| p.value).sum();
    let error = panels.iter().map(|p| p.error).sum();
    let res_abs = panels.iter().map(|p| p.res_abs).sum();

    Ok(Integral {
        value,
        error_estimate: error,
        abs_integral: res_abs,
    })
}

/// Uniform breakpoints over `[a, b]` with panel width at most `max_width`.
pub fn uniform_breaks(a: f64, b: f64, max_width: Option<f64>) -> Vec<f64> {
    let span = b - a;
    let n = match max_width {
        Some(w) if w > 0.0 && w < span => (span / w).ceil() as usize,
        _ => 1,
    };
    let mut breaks = Vec::with_capacity(n + 1);
    for i in 0..=n {
        breaks.push(a + span * (i as f64) / (n as f64));
    }
    breaks
}

/// Geometric breakpoints from `origin_scale` up to `knee`, then uniform
/// panels to `b`. Used for integrands with an integrable singularity at the
/// left end.
pub fn graded_breaks(origin_scale: f64, knee: f64, b: f64, max_width: Option<f64>) -> Vec<f64> {
    let mut breaks = vec![0.0];
    let mut t = origin_scale;
    while t < knee && t < b {
        breaks.push(t);
        t *= 4.0;
    }
    let start = *breaks.last().unwrap();
    breaks.extend(uniform_breaks(start, b, max_width).into_iter().skip(1));
    breaks
}

/// Integral of `f` over `[lo, hi]` where `f` is expected to have decayed to
/// a negligible level at `hi`.
///
/// The discarded tail beyond `hi` is estimated by comparing the |f| content
/// of the last two panels and extrapolating geometrically; a tail estimate
/// above the `rel_tol` budget (or a non-decreasing tail) fails with
/// [`QuadError::TailNotDecayed`].
pub fn integrate_decaying<F: Fn(f64) -> f64>(
    f: &F,
    breaks: &[f64],
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<f64, QuadError> {
    let integral = integrate_breakpoints(f, breaks, rel_tol, max_subdivisions)?;

    let hi = *breaks.last().unwrap();
    let lo = breaks[0];
    let w = ((hi - lo) / 8.0).min(1.0);
    let (_, _, last) = gk15(&|x| f(x).abs(), hi - w, hi);
    let (_, _, prev) = gk15(&|x| f(x).abs(), hi - 2.0 * w, hi - w);

    let budget = rel_tol * integral.value.abs().max(integral.abs_integral);
    let tail = if last < prev {
        // geometric extrapolation: sum of last * r^j with r = last/prev
        last * last / (prev - last)
    } else {
        // Non-decreasing panel mass: either genuine growth (huge `last`,
        // caught by the budget) or a roundoff/noise plateau (tiny `last`).
        8.0 * last
    };
    if tail > budget {
        return Err(QuadError::TailNotDecayed {
            estimate: tail,
            budget,
        });
    }

    Ok(integral.value)
}

/// ∫₀^∞ f, truncated at the configured radius, with the tail check of
/// [`integrate_decaying`]. `max_width` caps the initial panel width (pass
/// `π/(4k)` for kernels oscillating at frequency `k`).
pub fn half_line<F: Fn(f64) -> f64>(
    f: &F,
    cfg: &QuadratureConfig,
    max_width: Option<f64>,
) -> Result<f64, QuadError> {
    cfg.validate()?;
    let breaks = uniform_breaks(0.0, cfg.truncation_radius, max_width);
    integrate_decaying(f, &breaks, cfg.rel_tol, cfg.max_subdivisions)
}
