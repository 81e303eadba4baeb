//! Independent brute-force validation of the transform method.
//!
//! [`fd_eigensolve`] discretizes -½ψ'' + ½x²ψ = εψ with second-order central
//! differences and Dirichlet walls at ±L, then extracts the lowest states by
//! bisection on Sturm sequences (eigenvalues) and inverse iteration
//! (eigenvectors). [`reference_quadrature`] is a Richardson-refined
//! composite-midpoint integrator on `[0, ∞)`; it shares no code with the
//! Gauss–Kronrod engine the transforms use, so the two can legitimately
//! cross-check each other.

use crate::grid::{GridFunction, Parity};
use crate::oscillator::Eigenpair;
use crate::quad::QuadratureConfig;
use std::fmt;

/// Finite-difference discretization parameters.
#[derive(Debug, Clone, Copy)]
pub struct FdConfig {
    /// Domain half-width L; walls at ±L.
    pub half_width: f64,
    /// Number of interior grid points.
    pub points: usize,
    /// Number of lowest states to extract.
    pub n_states: usize,
}

impl FdConfig {
    pub const DEFAULT_HALF_WIDTH: f64 = 12.0;
    pub const DEFAULT_POINTS: usize = 4000;

    pub fn new(half_width: f64, points: usize, n_states: usize) -> Result<Self, OracleError> {
        let cfg = Self {
            half_width,
            points,
            n_states,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Default discretization (L = 12, N = 4000) for a given state count.
    pub fn with_states(n_states: usize) -> Result<Self, OracleError> {
        Self::new(Self::DEFAULT_HALF_WIDTH, Self::DEFAULT_POINTS, n_states)
    }

    // Negated comparison so a NaN half-width is rejected too.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<(), OracleError> {
        if self.points < 100 {
            return Err(OracleError::InvalidConfig {
                what: format!("need at least 100 grid points, got {}", self.points),
            });
        }
        if !(self.half_width >= 6.0) {
            return Err(OracleError::InvalidConfig {
                what: format!("half-width must be at least 6, got {}", self.half_width),
            });
        }
        if self.n_states == 0 || self.n_states > self.points / 10 {
            return Err(OracleError::InvalidConfig {
                what: format!(
                    "state count must be in 1..={}, got {}",
                    self.points / 10,
                    self.n_states
                ),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OracleError {
    InvalidConfig { what: String },
    ConvergenceFailure { what: String },
    TailNotDecayed { estimate: f64, budget: f64 },
    SingularityTooStrong { power: f64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidConfig { what } => write!(f, "invalid config: {what}"),
            Self::ConvergenceFailure { what } => write!(f, "convergence failure: {what}"),
            Self::TailNotDecayed { estimate, budget } => write!(
                f,
                "tail beyond truncation radius is {estimate:.3e} (budget {budget:.3e})"
            ),
            Self::SingularityTooStrong { power } => {
                write!(f, "origin singularity x^{power:.3} is not integrable")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below
/// `lambda`, from the signs of the LDLᵀ pivots (Sturm sequence).
fn sturm_count(diag: &[f64], off: f64, lambda: f64) -> usize {
    let guard = 1e-300;
    let mut count = 0;
    let mut q = diag[0] - lambda;
    if q < 0.0 {
        count += 1;
    }
    for &d in &diag[1..] {
        let q_safe = if q.abs() < guard {
            if q >= 0.0 {
                guard
            } else {
                -guard
            }
        } else {
            q
        };
        q = (d - lambda) - off * off / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Solve (T - σI) x = b for symmetric tridiagonal T with constant
/// off-diagonal, by Gaussian elimination with partial pivoting (one level of
/// fill-in). `b` is overwritten with the solution.
fn solve_shifted_tridiag(diag: &[f64], off: f64, sigma: f64, b: &mut [f64]) {
    let n = diag.len();
    let mut d: Vec<f64> = diag.iter().map(|&x| x - sigma).collect();
    let mut u1 = vec![off; n];
    u1[n - 1] = 0.0;
    let mut u2 = vec![0.0f64; n];

    // sub[i] is the current (i, i-1) entry of the remaining system.
    let mut sub = vec![off; n];
    sub[0] = 0.0;

    for i in 0..n - 1 {
        if sub[i + 1].abs() > d[i].abs() {
            // Pivot: swap rows i and i+1.
            let (ri_d, ri_u1, ri_u2) = (sub[i + 1], d[i + 1], u1[i + 1]);
            let (rj_d, rj_u1, rj_u2) = (d[i], u1[i], u2[i]);
            d[i] = ri_d;
            u1[i] = ri_u1;
            u2[i] = ri_u2;
            b.swap(i, i + 1);
            // Eliminate the (former) row i, now sitting in row i+1.
            let m = rj_d / d[i];
            d[i + 1] = rj_u1 - m * u1[i];
            u1[i + 1] = rj_u2 - m * u2[i];
            b[i + 1] -= m * b[i];
        } else {
            let pivot = if d[i] == 0.0 { 1e-300 } else { d[i] };
            let m = sub[i + 1] / pivot;
            d[i + 1] -= m * u1[i];
            u1[i + 1] -= m * u2[i];
            b[i + 1] -= m * b[i];
        }
    }

    for i in (0..n).rev() {
        let mut acc = b[i];
        if i + 1 < n {
            acc -= u1[i] * b[i + 1];
        }
        if i + 2 < n {
            acc -= u2[i] * b[i + 2];
        }
        let pivot = if d[i] == 0.0 { 1e-300 } else { d[i] };
        b[i] = acc / pivot;
    }
}

/// Lowest `n_states` eigenpairs of the discretized oscillator Hamiltonian,
/// eigenvalues ascending, eigenvectors normalized to ∫ψ² ≈ Σψ²h = 1 and
/// positive on the outermost lobe.
pub fn fd_eigensolve(cfg: &FdConfig) -> Result<Vec<Eigenpair>, OracleError> {
    cfg.validate()?;
    let n = cfg.points;
    let h = 2.0 * cfg.half_width / (n as f64 + 1.0);
    let grid: Vec<f64> = (0..n)
        .map(|i| -cfg.half_width + h * (i as f64 + 1.0))
        .collect();
    let inv_h2 = 1.0 / (h * h);
    let diag: Vec<f64> = grid.iter().map(|&x| inv_h2 + 0.5 * x * x).collect();
    let off = -0.5 * inv_h2;

    // Gershgorin bounds.
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for (i, &d) in diag.iter().enumerate() {
        let r = if i == 0 || i == n - 1 {
            off.abs()
        } else {
            2.0 * off.abs()
        };
        lo = lo.min(d - r);
        hi = hi.max(d + r);
    }

    let mut pairs = Vec::with_capacity(cfg.n_states);
    for k in 0..cfg.n_states {
        // Bisection on the Sturm count.
        let (mut a, mut b) = (lo, hi);
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if (b - a) <= 4.0 * f64::EPSILON * mid.abs().max(1.0) {
                break;
            }
            if sturm_count(&diag, off, mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        let lambda = 0.5 * (a + b);

        // Inverse iteration at the converged shift; a generic start vector
        // (no parity, no periodicity) keeps the projection on the target
        // eigenvector nonzero.
        let mut v: Vec<f64> = (0..n)
            .map(|i| (0.7 * (i as f64 + 1.0)).sin() + 0.1)
            .collect();
        normalize_l2(&mut v);
        let cap = 10 * n;
        let mut iterations = 0;
        loop {
            let mut w = v.clone();
            solve_shifted_tridiag(&diag, off, lambda, &mut w);
            normalize_l2(&mut w);
            // Direction convergence, up to overall sign.
            let dot: f64 = w.iter().zip(&v).map(|(a, b)| a * b).sum();
            let delta: f64 = w
                .iter()
                .zip(&v)
                .map(|(a, b)| (a - dot.signum() * b).abs())
                .fold(0.0, f64::max);
            v = w;
            iterations += 1;
            if delta < 1e-12 {
                break;
            }
            if iterations >= cap {
                return Err(OracleError::ConvergenceFailure {
                    what: format!("inverse iteration for state {k} hit the {cap}-step cap"),
                });
            }
        }

        // Continuum normalization Σψ²h = 1 and the shared sign convention.
        let sum_sq: f64 = v.iter().map(|x| x * x).sum();
        let scale = 1.0 / (sum_sq * h).sqrt();
        for x in &mut v {
            *x *= scale;
        }
        let sup = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if let Some(last) = v.iter().rev().find(|x| x.abs() > 1e-2 * sup) {
            if *last < 0.0 {
                for x in &mut v {
                    *x = -*x;
                }
            }
        }

        let parity = measured_parity(&v);
        let psi = GridFunction::new(grid.clone(), v, parity).map_err(|e| {
            OracleError::ConvergenceFailure {
                what: format!("eigenvector assembly failed: {e}"),
            }
        })?;
        pairs.push(Eigenpair {
            n: k,
            epsilon: lambda,
            psi,
            norm: 1.0,
        });
    }
    Ok(pairs)
}

fn normalize_l2(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

fn measured_parity(v: &[f64]) -> Parity {
    let n = v.len();
    let (mut even_dev, mut odd_dev) = (0.0f64, 0.0f64);
    for i in 0..n {
        even_dev = even_dev.max((v[i] - v[n - 1 - i]).abs());
        odd_dev = odd_dev.max((v[i] + v[n - 1 - i]).abs());
    }
    let sup = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if even_dev < 1e-6 * sup {
        Parity::Even
    } else if odd_dev < 1e-6 * sup {
        Parity::Odd
    } else {
        Parity::None
    }
}

/// Composite-midpoint value of `f` over `[a, b]` with `n` panels.
fn midpoint_sum<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut acc = 0.0;
    for i in 0..n {
        acc += f(a + h * (i as f64 + 0.5));
    }
    acc * h
}

/// Midpoint rule with Richardson extrapolation (doubled resolution per
/// level) until the diagonal increment is below `rel_tol`.
fn midpoint_romberg<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel_tol: f64) -> (f64, f64) {
    const MAX_DEPTH: usize = 14;
    let mut table: Vec<Vec<f64>> = Vec::with_capacity(MAX_DEPTH);
    let mut best = midpoint_sum(f, a, b, 1);
    table.push(vec![best]);
    let mut err = best.abs();
    for level in 1..MAX_DEPTH {
        let m = midpoint_sum(f, a, b, 1 << level);
        let mut row = vec![m];
        for j in 1..=level {
            let pow = 4.0f64.powi(j as i32);
            let extrap = (pow * row[j - 1] - table[level - 1][j - 1]) / (pow - 1.0);
            row.push(extrap);
        }
        let prev = *table[level - 1].last().unwrap();
        best = *row.last().unwrap();
        err = (best - prev).abs();
        table.push(row);
        if err <= rel_tol * best.abs().max(f64::MIN_POSITIVE) + 1e-305 {
            break;
        }
    }
    (best, err)
}

/// Reference estimate of ∫₀^∞ f, the independent oracle behind the derived
/// values in the test suites.
///
/// The integrand may carry an integrable power singularity at 0 down to
/// x^{-1/2} (removed by the u² substitution on [0, 1]); powers at or below
/// x^{-1} are rejected. Identical inputs give bit-identical outputs.
pub fn reference_quadrature<F: Fn(f64) -> f64>(
    integrand: F,
    cfg: &QuadratureConfig,
) -> Result<f64, OracleError> {
    cfg.validate().map_err(|e| OracleError::InvalidConfig {
        what: e.to_string(),
    })?;
    let radius = cfg.truncation_radius;

    // Estimate the power behaviour at the origin from two probes.
    let (t1, t2) = (1e-6, 1e-8);
    let (f1, f2) = (integrand(t1), integrand(t2));
    let power = if f1 != 0.0 && f2 != 0.0 && (f1 > 0.0) == (f2 > 0.0) {
        ((f1 / f2).abs()).ln() / (t1 / t2).ln()
    } else {
        0.0
    };
    if power <= -0.999 {
        return Err(OracleError::SingularityTooStrong { power });
    }

    let mut total = 0.0;
    if power < -0.05 {
        // ∫₀^1 f(x) dx = ∫₀^1 2u f(u²) du; geometric panels resolve the
        // remaining derivative singularity at u = 0.
        let g = |u: f64| 2.0 * u * integrand(u * u);
        let mut edges = vec![0.0, (2.0f64).powi(-40)];
        while *edges.last().unwrap() < 1.0 {
            let next = (edges.last().unwrap() * 4.0).min(1.0);
            edges.push(next);
        }
        for w in edges.windows(2) {
            let (v, _) = midpoint_romberg(&g, w[0], w[1], cfg.rel_tol);
            total += v;
        }
        for w in panel_edges(1.0, radius).windows(2) {
            let (v, _) = midpoint_romberg(&integrand, w[0], w[1], cfg.rel_tol);
            total += v;
        }
    } else {
        for w in panel_edges(0.0, radius).windows(2) {
            let (v, _) = midpoint_romberg(&integrand, w[0], w[1], cfg.rel_tol);
            total += v;
        }
    }

    // Tail decay check from the |f| content of the last two unit panels.
    let w = (radius / 8.0).min(1.0);
    let absf = |x: f64| integrand(x).abs();
    let last = midpoint_sum(&absf, radius - w, radius, 64);
    let prev = midpoint_sum(&absf, radius - 2.0 * w, radius - w, 64);
    let budget = cfg.rel_tol * total.abs().max(1e-300);
    let tail = if last < prev {
        last * last / (prev - last)
    } else {
        8.0 * last
    };
    if tail > budget {
        return Err(OracleError::TailNotDecayed {
            estimate: tail,
            budget,
        });
    }

    Ok(total)
}

fn panel_edges(lo: f64, hi: f64) -> Vec<f64> {
    let n = ((hi - lo).ceil() as usize).max(1);
    let mut edges = Vec::with_capacity(n + 1);
    for i in 0..=n {
        edges.push(lo + (hi - lo) * i as f64 / n as f64);
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_PI: f64 = 1.772_453_850_905_515_9;

    #[test]
    fn config_invariants() {
        assert!(FdConfig::new(12.0, 4000, 9).is_ok());
        assert!(FdConfig::new(12.0, 50, 2).is_err());
        assert!(FdConfig::new(4.0, 4000, 2).is_err());
        assert!(FdConfig::new(12.0, 4000, 500).is_err());
        assert!(FdConfig::new(12.0, 4000, 0).is_err());
    }

    #[test]
    fn spectrum_at_defaults() {
        let pairs = fd_eigensolve(&FdConfig::with_states(4).unwrap()).unwrap();
        for (n, p) in pairs.iter().enumerate() {
            let expect = n as f64 + 0.5;
            assert!(
                (p.epsilon - expect).abs() <= 1e-4,
                "state {n}: {} vs {expect}",
                p.epsilon
            );
        }
    }

    #[test]
    fn eigenvector_parities_alternate() {
        let pairs = fd_eigensolve(&FdConfig::with_states(4).unwrap()).unwrap();
        let expect = [Parity::Even, Parity::Odd, Parity::Even, Parity::Odd];
        for (p, e) in pairs.iter().zip(expect) {
            assert_eq!(p.psi.parity(), e, "state {}", p.n);
        }
    }

    #[test]
    fn coarse_grid_is_looser() {
        let pairs = fd_eigensolve(&FdConfig::new(12.0, 200, 1).unwrap()).unwrap();
        assert!(
            (pairs[0].epsilon - 0.5).abs() <= 1e-2,
            "{}",
            pairs[0].epsilon
        );
    }

    #[test]
    fn discretization_error_is_second_order() {
        let e1 = fd_eigensolve(&FdConfig::new(12.0, 1000, 1).unwrap()).unwrap()[0].epsilon;
        let e2 = fd_eigensolve(&FdConfig::new(12.0, 2000, 1).unwrap()).unwrap()[0].epsilon;
        let ratio = (e1 - 0.5).abs() / (e2 - 0.5).abs();
        assert!(
            (3.2..=4.8).contains(&ratio),
            "error ratio {ratio} (errors {:.3e}, {:.3e})",
            e1 - 0.5,
            e2 - 0.5
        );
    }

    #[test]
    fn reference_quadrature_gaussian() {
        let cfg = QuadratureConfig::default();
        let v = reference_quadrature(|k: f64| (-k * k / 4.0).exp(), &cfg).unwrap();
        assert!((v - SQRT_PI).abs() < 1e-9 * SQRT_PI, "got {v}");
    }

    #[test]
    fn reference_quadrature_zero() {
        let cfg = QuadratureConfig::default();
        assert_eq!(reference_quadrature(|_| 0.0, &cfg).unwrap(), 0.0);
    }

    #[test]
    fn reference_quadrature_rejects_growth() {
        let cfg = QuadratureConfig::default();
        let err = reference_quadrature(|k: f64| k.exp(), &cfg).unwrap_err();
        assert!(matches!(err, OracleError::TailNotDecayed { .. }), "{err}");
    }

    #[test]
    fn reference_quadrature_integrable_singularity() {
        // ∫₀^∞ k^{-1/2} e^{-k} dk = Γ(1/2) = √π
        let cfg = QuadratureConfig {
            truncation_radius: 40.0,
            ..QuadratureConfig::default()
        };
        let v = reference_quadrature(|k: f64| k.powf(-0.5) * (-k).exp(), &cfg).unwrap();
        assert!((v - SQRT_PI).abs() < 1e-8 * SQRT_PI, "got {v}");
    }

    #[test]
    fn reference_quadrature_rejects_strong_singularity() {
        let cfg = QuadratureConfig::default();
        let err = reference_quadrature(|k: f64| k.powf(-1.2) * (-k).exp(), &cfg).unwrap_err();
        assert!(matches!(err, OracleError::SingularityTooStrong { .. }), "{err}");
    }

    #[test]
    fn reference_quadrature_is_deterministic() {
        let cfg = QuadratureConfig::default();
        let f = |k: f64| (-k * k / 4.0).exp() * (2.0 * k).cos();
        let a = reference_quadrature(f, &cfg).unwrap();
        let b = reference_quadrature(f, &cfg).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }
}
