//! Property tests for the invariants that hold over whole parameter ranges.

use proptest::prelude::*;
use unifour::oscillator::{self, CandidateExponent};
use unifour::specfun::{gamma, hermite, kummer_series, KummerParams};
use unifour::transforms::TransformKind;

proptest! {
    // Γ(z+1) = z Γ(z) across (0, 30).
    #[test]
    fn gamma_recurrence(z in 1e-3f64..30.0) {
        let lhs = gamma(z + 1.0).unwrap();
        let rhs = z * gamma(z).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs(), "z={z}: {lhs} vs {rhs}");
    }

    // H_n(-x) = (-1)^n H_n(x).
    #[test]
    fn hermite_parity(n in 0usize..=20, x in -6.0f64..6.0) {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let lhs = hermite(n, -x);
        let rhs = sign * hermite(n, x);
        prop_assert!((lhs - rhs).abs() <= 1e-10 * rhs.abs().max(1.0));
    }

    // Terminating Kummer parameters give a polynomial of degree ñ: its
    // (ñ+1)-th finite difference on an arithmetic grid vanishes.
    #[test]
    fn kummer_truncates_to_polynomial(n in 0usize..=6, b1 in 0.3f64..3.0, z0 in -2.0f64..2.0) {
        let h = 0.37;
        let mut vals: Vec<f64> = (0..=(n + 1))
            .map(|j| {
                let p = KummerParams::new(-(n as f64), b1, z0 + h * j as f64).unwrap();
                kummer_series(p, 500).unwrap()
            })
            .collect();
        let scale = vals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for _ in 0..=n {
            vals = vals.windows(2).map(|w| w[1] - w[0]).collect();
        }
        prop_assert!(vals[0].abs() <= 1e-10 * scale, "residual {:.3e}", vals[0]);
    }

    // Φ(k) = k^a e^{-k²/4} satisfies the transformed ODE at ε = a + 1/2 for
    // every real a; admissibility is a separate question.
    #[test]
    fn ode_solution_for_any_exponent(a in -0.4f64..10.0) {
        let c = CandidateExponent::new(a, TransformKind::Cosine);
        let k_grid: Vec<f64> = (1..=40).map(|i| 0.5 + 0.025 * i as f64).collect();
        let r = oscillator::transformed_ode_residual(&c, a + 0.5, &k_grid).unwrap();
        prop_assert!(r <= 1e-12, "a={a}: residual {r:.3e}");
    }

    // |Φ| is branch-independent.
    #[test]
    fn branch_modulus_invariance(a in -0.45f64..6.0, m in -2i32..=2, k in 0.01f64..8.0) {
        let principal = CandidateExponent::new(a, TransformKind::Cosine);
        let branched = CandidateExponent::with_branch(a, TransformKind::Cosine, m);
        let lhs = oscillator::phi_transform(&branched, k).unwrap().abs();
        let rhs = oscillator::phi_transform(&principal, k).unwrap().abs();
        prop_assert!((lhs - rhs).abs() <= 1e-14 * rhs.max(1e-300));
        let phase = oscillator::branch_phase(&branched);
        prop_assert!((phase.norm() - 1.0).abs() <= 1e-12);
    }

    // The admissibility verdict matches its defining predicate.
    #[test]
    fn classification_matches_predicate(j in -20i64..=140, kind_sel in 0u8..2) {
        let a = j as f64 * 0.05;
        let kind = if kind_sel == 0 { TransformKind::Cosine } else { TransformKind::Sine };
        let adm = oscillator::classify_exponent(&CandidateExponent::new(a, kind));
        let nonneg_int = (a - a.round()).abs() < 1e-9 && a.round() >= 0.0;
        let parity = nonneg_int && match kind {
            TransformKind::Cosine => (a.round() as i64) % 2 == 0,
            TransformKind::Sine => (a.round() as i64) % 2 == 1,
        };
        prop_assert_eq!(adm.accepted, a > -0.5 && nonneg_int && parity);
        prop_assert_eq!(adm.accepted, adm.reasons.is_empty());
    }
}
