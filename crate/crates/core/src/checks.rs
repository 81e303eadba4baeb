//! Named verification suites behind `unifour verify`.
//!
//! Each check corresponds to one invariant of the owning module; the same
//! helpers back the acceptance tests. All randomness is seeded, so repeated
//! runs produce identical reports.

use crate::grid::{linspace, GridFunction, Parity};
use crate::oracle::{self, FdConfig};
use crate::oscillator::{
    self, CandidateExponent, Extension, OscError, DEFAULT_GROWTH_PROBE,
};
use crate::quad::QuadratureConfig;
use crate::report::Check;
use crate::specfun::hermite;
use crate::testfns::TestFunction;
use crate::transforms::{self, TransformKind};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SuiteResult = Result<Vec<Check>, Box<dyn std::error::Error>>;

const SEED: u64 = 0x5eed_0809;

/// Transform-identity suite: roundtrips, Parseval, boundary duality,
/// linearity, moment/derivative identities, the second-derivative property
/// and the scaling property, all on the Gaussian test family.
pub fn transforms_suite() -> SuiteResult {
    let cfg = QuadratureConfig::default();
    let mut checks = Vec::new();

    let family = [
        TestFunction::Gauss,
        TestFunction::XGauss,
        TestFunction::X3Gauss,
    ];

    // Roundtrip: inverse(forward(f)) recovers f on ζ ∈ [0, 6].
    let k_grid = linspace(0.0, 12.0, 481);
    let zeta_grid = linspace(0.0, 6.0, 121);
    for f in family {
        let kind = kind_for(f);
        let fwd = transforms::forward_transform(|z| f.eval(z), f.parity(), kind, &k_grid, &cfg)?;
        let back = transforms::inverse_transform_grid(&fwd, kind, &zeta_grid, &cfg)?;
        let gap = zeta_grid
            .iter()
            .zip(back.values())
            .map(|(&z, &v)| (v - f.eval(z)).abs())
            .fold(0.0f64, f64::max);
        checks.push(Check::gap(format!("transforms/roundtrip_{f}"), gap, 1e-6));
    }

    // Parseval's formulas on the same family.
    let zeta_fine = linspace(0.0, 12.0, 1201);
    for f in family {
        let kind = kind_for(f);
        let samples = GridFunction::sample(|z| f.eval(z), zeta_fine.clone(), f.parity())?;
        let fwd = transforms::forward_transform(|z| f.eval(z), f.parity(), kind, &k_grid, &cfg)?;
        let gap = transforms::parseval_gap(&samples, &fwd, &cfg)?;
        checks.push(Check::gap(format!("transforms/parseval_{f}"), gap, 1e-6));
    }

    // Boundary-condition duality at the origin.
    let sine0 = transforms::forward_transform(
        |z| TestFunction::XGauss.eval(z),
        Parity::Odd,
        TransformKind::Sine,
        &[0.0],
        &cfg,
    )?;
    checks.push(Check::gap(
        "transforms/sine_vanishes_at_origin",
        sine0.values()[0].abs(),
        1e-12,
    ));
    let cos_near0 = transforms::forward_transform(
        |z| TestFunction::Gauss.eval(z),
        Parity::Even,
        TransformKind::Cosine,
        &linspace(0.0, 0.15, 16),
        &tight(&cfg),
    )?;
    let dcos = crate::fd::one_sided_derivative(cos_near0.grid(), cos_near0.values(), 1)?;
    checks.push(Check::gap(
        "transforms/cosine_derivative_vanishes_at_origin",
        dcos.abs(),
        1e-6,
    ));

    // Linearity of the forward transform for seeded random coefficients.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut linearity_gap = 0.0f64;
    let probe = [0.4, 1.3, 2.9];
    for _ in 0..4 {
        let alpha: f64 = rng.random_range(-2.0..2.0);
        let beta: f64 = rng.random_range(-2.0..2.0);
        let combo = |z: f64| alpha * (-z * z).exp() + beta * (-2.0 * z * z).exp();
        let lhs =
            transforms::forward_transform(combo, Parity::Even, TransformKind::Cosine, &probe, &cfg)?;
        let fa = transforms::forward_transform(
            |z: f64| (-z * z).exp(),
            Parity::Even,
            TransformKind::Cosine,
            &probe,
            &cfg,
        )?;
        let fb = transforms::forward_transform(
            |z: f64| (-2.0 * z * z).exp(),
            Parity::Even,
            TransformKind::Cosine,
            &probe,
            &cfg,
        )?;
        for i in 0..probe.len() {
            let rhs = alpha * fa.values()[i] + beta * fb.values()[i];
            linearity_gap = linearity_gap.max((lhs.values()[i] - rhs).abs());
        }
    }
    checks.push(Check::gap("transforms/linearity", linearity_gap, 1e-8));

    // Moment/derivative identities at the origin, n ∈ {0, 1}.
    let origin_grid = linspace(0.0, 0.3, 16);
    for (f, kind) in [
        (TestFunction::Gauss, TransformKind::Cosine),
        (TestFunction::XGauss, TransformKind::Sine),
    ] {
        let samples = GridFunction::sample(|z| f.eval(z), zeta_fine.clone(), f.parity())?;
        let fwd = transforms::forward_transform(
            |z| f.eval(z),
            f.parity(),
            kind,
            &origin_grid,
            &tight(&cfg),
        )?;
        for n in 0..=1usize {
            let gap = transforms::moment_derivative_gap(&samples, &fwd, kind, n)?;
            checks.push(Check::gap(
                format!("transforms/moment_derivative_{f}_n{n}"),
                gap,
                1e-4,
            ));
        }
    }

    // Second-derivative property F{f''} = -k² F{f}.
    let k_prop = linspace(0.0, 8.0, 33);
    for f in family {
        let kind = kind_for(f);
        let gap = transforms::second_derivative_identity_gap(
            |z| f.eval(z),
            |z| f.second_derivative(z),
            kind,
            &k_prop,
            &cfg,
        )?;
        checks.push(Check::gap(
            format!("transforms/second_derivative_{f}"),
            gap,
            1e-6,
        ));
    }

    // Scaling property of the exponential transform.
    let gap = transforms::scaling_property_gap(|x| (-x * x).exp(), 2.0, 1.0, &cfg)?;
    checks.push(Check::gap("transforms/scaling_property", gap, 1e-6));

    Ok(checks)
}

fn kind_for(f: TestFunction) -> TransformKind {
    match f.parity() {
        Parity::Odd => TransformKind::Sine,
        _ => TransformKind::Cosine,
    }
}

fn tight(cfg: &QuadratureConfig) -> QuadratureConfig {
    QuadratureConfig {
        rel_tol: 5e-13,
        ..*cfg
    }
}

/// Oscillator suite: the exact-ODE property, the quantization scan, branch
/// invariance, growth diagnostics, inversion closed forms, orthonormality
/// and nondegeneracy.
pub fn oscillator_suite() -> SuiteResult {
    let cfg = QuadratureConfig::default();
    let mut checks = Vec::new();

    // Exact-solution property: the residual vanishes for every real a when
    // ε = a + 1/2 — quantization is not in the ODE.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let k_grid = linspace(0.5, 1.5, 41);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let a: f64 = rng.random_range(-0.4..10.0);
        let kind = if rng.random_range(0..2) == 0 {
            TransformKind::Cosine
        } else {
            TransformKind::Sine
        };
        let c = CandidateExponent::new(a, kind);
        worst = worst.max(oscillator::transformed_ode_residual(&c, a + 0.5, &k_grid)?);
    }
    checks.push(Check::gap("oscillator/exact_ode_residual", worst, 1e-12));

    // Quantization scan: the admissibility filter accepts exactly the
    // nonnegative integers of matching parity.
    for (kind, expect) in [
        (TransformKind::Cosine, vec![0, 2, 4]),
        (TransformKind::Sine, vec![1, 3]),
    ] {
        let rows = oscillator::scan_exponents(-0.45, 4.05, 0.05, kind, &cfg)?;
        let accepted: Vec<i64> = rows
            .iter()
            .filter(|r| r.admissibility.accepted)
            .map(|r| r.a.round() as i64)
            .collect();
        let growth_consistent = rows
            .iter()
            .all(|r| r.growth.is_none_or(|g| g == !r.admissibility.accepted));
        checks.push(Check::flag(
            format!("oscillator/quantization_scan_{kind}"),
            accepted == expect && growth_consistent,
        ));
    }

    // Branch invariance: |Φ| and the Parseval integral are blind to the
    // branch index.
    let mut branch_gap = 0.0f64;
    for &a in &[1.0 / 3.0, 0.5, 2.0] {
        let reference = CandidateExponent::new(a, TransformKind::Cosine);
        for m in -2..=2 {
            let c = CandidateExponent::with_branch(a, TransformKind::Cosine, m);
            let phase = oscillator::branch_phase(&c);
            branch_gap = branch_gap.max((phase.norm() - 1.0).abs());
            for &k in &[0.3, 1.0, 2.7] {
                let lhs = oscillator::phi_transform(&c, k)?;
                let rhs = oscillator::phi_transform(&reference, k)?;
                branch_gap = branch_gap.max((lhs.abs() - rhs.abs()).abs());
            }
        }
    }
    checks.push(Check::gap("oscillator/branch_invariance", branch_gap, 1e-14));

    // Growth diagnostic: true on non-quantized candidates, false on the
    // accepted integers.
    let mut ok = true;
    for (a, kind) in [
        (0.3, TransformKind::Cosine),
        (0.5, TransformKind::Cosine),
        (1.5, TransformKind::Cosine),
        (2.5, TransformKind::Sine),
    ] {
        let g = oscillator::growth_diagnostic(
            &CandidateExponent::new(a, kind),
            &DEFAULT_GROWTH_PROBE,
            &cfg,
        )?;
        ok &= g.growing;
    }
    for n in 0..=8usize {
        let kind = if n % 2 == 0 {
            TransformKind::Cosine
        } else {
            TransformKind::Sine
        };
        let g = oscillator::growth_diagnostic(
            &CandidateExponent::new(n as f64, kind),
            &DEFAULT_GROWTH_PROBE,
            &cfg,
        )?;
        ok &= !g.growing;
    }
    checks.push(Check::flag("oscillator/growth_diagnostic", ok));

    // Inversion: quadrature matches e^{-ζ²} H_n(ζ) up to one constant.
    checks.push(Check::gap(
        "oscillator/inversion_closed_form",
        inversion_hermite_gap(8, &cfg)?,
        1e-5,
    ));

    // Transform-pair consistency: re-transforming the inversion recovers
    // k^n e^{-k²/4} up to one constant.
    let mut pair_gap = 0.0f64;
    for n in 0..=3usize {
        pair_gap = pair_gap.max(transform_pair_gap(n, &cfg)?);
    }
    checks.push(Check::gap(
        "oscillator/transform_pair_consistency",
        pair_gap,
        1e-5,
    ));

    // Orthonormality of the assembled eigenpairs.
    checks.push(Check::gap(
        "oscillator/orthonormality",
        orthonormality_gap(8)?,
        1e-6,
    ));

    // Nondegeneracy: the forbidden extension is rejected for every n.
    checks.push(Check::flag(
        "oscillator/nondegeneracy_parity",
        forbidden_extensions_all_rejected(8, &cfg)?,
    ));

    Ok(checks)
}

/// Max sup-norm-relative deviation between the numeric inversion of
/// k^n e^{-k²/4} and e^{-ζ²} H_n(ζ), fitted with one constant, for n up to
/// `n_max`.
pub fn inversion_hermite_gap(n_max: usize, cfg: &QuadratureConfig) -> Result<f64, OscError> {
    let zeta = linspace(0.0, 6.0, 121);
    let mut worst = 0.0f64;
    for n in 0..=n_max {
        let kind = if n % 2 == 0 {
            TransformKind::Cosine
        } else {
            TransformKind::Sine
        };
        let inv = oscillator::invert_candidate(&CandidateExponent::new(n as f64, kind), &zeta, cfg)?;
        let numeric = inv.numeric;
        let target: Vec<f64> = zeta
            .iter()
            .map(|&z| (-z * z).exp() * hermite(n, z))
            .collect();
        let anchor = target
            .iter()
            .position(|v| v.abs() > 1e-9)
            .expect("hermite shape is not identically zero");
        let scale = numeric.values()[anchor] / target[anchor];
        let sup = numeric.max_abs();
        for (v, t) in numeric.values().iter().zip(&target) {
            worst = worst.max((v - t * scale).abs() / sup);
        }
    }
    Ok(worst)
}

/// Sup-norm-relative gap between forward(invert(k^n e^{-k²/4})) and the
/// original transform shape on k ∈ [0.2, 6].
fn transform_pair_gap(n: usize, cfg: &QuadratureConfig) -> Result<f64, OscError> {
    let kind = if n.is_multiple_of(2) {
        TransformKind::Cosine
    } else {
        TransformKind::Sine
    };
    let zeta = linspace(0.0, 8.0, 801);
    let inv = oscillator::invert_candidate(&CandidateExponent::new(n as f64, kind), &zeta, cfg)?;
    let k_grid = linspace(0.2, 6.0, 59);
    let fwd = transforms::forward_transform_grid(&inv.numeric, kind, &k_grid, cfg)
        .map_err(|e| OscError::Domain {
            what: format!("re-transform failed: {e}"),
        })?;
    let target: Vec<f64> = k_grid
        .iter()
        .map(|&k| k.powi(n as i32) * (-k * k / 4.0).exp())
        .collect();
    let anchor = target
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
        .map(|(i, _)| i)
        .unwrap();
    let scale = fwd.values()[anchor] / target[anchor];
    let sup = fwd.max_abs();
    let mut worst = 0.0f64;
    for (v, t) in fwd.values().iter().zip(&target) {
        worst = worst.max((v - t * scale).abs() / sup);
    }
    Ok(worst)
}

/// Max |⟨ψ_m, ψ_n⟩ - δ_mn| over m, n ≤ n_max on the default grid.
pub fn orthonormality_gap(n_max: usize) -> Result<f64, OscError> {
    let grid = oscillator::default_full_line_grid();
    let pairs: Vec<_> = (0..=n_max)
        .map(|n| oscillator::eigenpair(n, &grid))
        .collect::<Result<_, _>>()?;
    let mut worst = 0.0f64;
    for m in 0..=n_max {
        for n in m..=n_max {
            let ip = oscillator::inner_product(&pairs[m], &pairs[n])?;
            let expect = if m == n { 1.0 } else { 0.0 };
            worst = worst.max((ip - expect).abs());
        }
    }
    Ok(worst)
}

/// True when for every n ≤ n_max the natural extension succeeds and the
/// forbidden one raises [`OscError::ParityMismatch`].
pub fn forbidden_extensions_all_rejected(
    n_max: usize,
    cfg: &QuadratureConfig,
) -> Result<bool, OscError> {
    let zeta = linspace(0.0, 8.0, 1601);
    for n in 0..=n_max {
        let kind = if n % 2 == 0 {
            TransformKind::Cosine
        } else {
            TransformKind::Sine
        };
        let inv = oscillator::invert_candidate(&CandidateExponent::new(n as f64, kind), &zeta, cfg)?;
        let allowed = oscillator::natural_extension(n);
        let forbidden = match allowed {
            Extension::Symmetric => Extension::Antisymmetric,
            Extension::Antisymmetric => Extension::Symmetric,
        };
        if oscillator::parity_extend(&inv.numeric, n, allowed).is_err() {
            return Ok(false);
        }
        match oscillator::parity_extend(&inv.numeric, n, forbidden) {
            Err(OscError::ParityMismatch { .. }) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Oracle suite: finite-difference spectrum against ε_n = n + 1/2, the
/// second-order error scaling, eigenvector agreement with the method, and
/// determinism of the reference quadrature.
pub fn oracle_suite() -> SuiteResult {
    let mut checks = Vec::new();

    let pairs = oracle::fd_eigensolve(&FdConfig::with_states(9)?)?;
    let spectrum_gap = pairs
        .iter()
        .enumerate()
        .map(|(n, p)| (p.epsilon - (n as f64 + 0.5)).abs())
        .fold(0.0f64, f64::max);
    checks.push(Check::gap("oracle/fd_spectrum_agreement", spectrum_gap, 1e-3));

    let e1 = oracle::fd_eigensolve(&FdConfig::new(12.0, 1000, 1)?)?[0].epsilon;
    let e2 = oracle::fd_eigensolve(&FdConfig::new(12.0, 2000, 1)?)?[0].epsilon;
    let ratio = (e1 - 0.5).abs() / (e2 - 0.5).abs();
    checks.push(Check::gap(
        "oracle/fd_error_scaling_second_order",
        (ratio - 4.0).abs(),
        0.8,
    ));

    checks.push(Check::gap(
        "oracle/fd_eigenvector_agreement",
        eigenvector_agreement_gap(&pairs, 6)?,
        1e-3,
    ));

    let cfg = QuadratureConfig::default();
    let f = |k: f64| (-k * k / 4.0).exp() * (2.0 * k).cos();
    let a = oracle::reference_quadrature(f, &cfg)?;
    let b = oracle::reference_quadrature(f, &cfg)?;
    checks.push(Check::flag(
        "oracle/reference_quadrature_deterministic",
        a.to_bits() == b.to_bits(),
    ));

    Ok(checks)
}

/// Max-norm distance between FD eigenvectors and the method's eigenpairs on
/// the FD grid, after sign alignment.
pub fn eigenvector_agreement_gap(
    fd_pairs: &[oscillator::Eigenpair],
    n_max: usize,
) -> Result<f64, Box<dyn std::error::Error>> {
    let mut worst = 0.0f64;
    for pair in fd_pairs.iter().take(n_max + 1) {
        let analytic = oscillator::eigenpair(pair.n, pair.psi.grid())?;
        let dot: f64 = analytic
            .psi
            .values()
            .iter()
            .zip(pair.psi.values())
            .map(|(a, b)| a * b)
            .sum();
        let sign = if dot < 0.0 { -1.0 } else { 1.0 };
        for (a, b) in analytic.psi.values().iter().zip(pair.psi.values()) {
            worst = worst.max((a - sign * b).abs());
        }
    }
    Ok(worst)
}

/// All suites concatenated, in module order.
pub fn all_suites() -> SuiteResult {
    let mut checks = transforms_suite()?;
    checks.extend(oscillator_suite()?);
    checks.extend(oracle_suite()?);
    Ok(checks)
}
