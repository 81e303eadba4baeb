//! Kummer's confluent hypergeometric function ₁F₁(a₁, b₁, z): defining
//! series and the two-term large-|z| asymptotic form on the positive real
//! axis.

use super::gamma_fn::{gamma, reciprocal_gamma};
use super::SpecFunError;
use std::f64::consts::PI;

/// Parameters (a₁, b₁) and argument z of ₁F₁.
///
/// b₁ must not be zero or a negative integer (the series coefficients
/// divide by b₁ + j).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerParams {
    pub a1: f64,
    pub b1: f64,
    pub z: f64,
}

impl KummerParams {
    pub fn new(a1: f64, b1: f64, z: f64) -> Result<Self, SpecFunError> {
        let p = Self { a1, b1, z };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), SpecFunError> {
        if self.b1 <= 0.0 && self.b1 == self.b1.floor() {
            return Err(SpecFunError::Domain {
                what: "kummer b1 must not be zero or a negative integer",
            });
        }
        Ok(())
    }

    /// The series terminates into a polynomial iff a₁ ∈ {0, -1, -2, …}.
    pub fn terminates(&self) -> bool {
        self.a1 <= 0.0 && self.a1 == self.a1.floor()
    }
}

/// ₁F₁ by direct summation of the defining series.
///
/// Terminating parameters (a₁ a non-positive integer) give the exact finite
/// sum through j = -a₁. Otherwise terms are added until one falls below
/// 1e-15 of the partial sum; exceeding `max_terms` first is reported as
/// [`SpecFunError::NoConvergence`].
pub fn kummer_series(p: KummerParams, max_terms: usize) -> Result<f64, SpecFunError> {
    p.validate()?;

    if p.terminates() {
        let n = (-p.a1) as usize;
        let mut sum = 1.0;
        let mut term = 1.0;
        for j in 0..n {
            let jf = j as f64;
            term *= (p.a1 + jf) / (p.b1 + jf) * p.z / (jf + 1.0);
            sum += term;
        }
        return Ok(sum);
    }

    let mut sum = 1.0;
    let mut term = 1.0;
    for j in 0..max_terms {
        let jf = j as f64;
        term *= (p.a1 + jf) / (p.b1 + jf) * p.z / (jf + 1.0);
        sum += term;
        if term.abs() < 1e-15 * sum.abs().max(f64::MIN_POSITIVE) {
            return Ok(sum);
        }
    }
    Err(SpecFunError::NoConvergence { terms: max_terms })
}

/// Two-term large-z estimate of ₁F₁ on the positive real axis:
///
/// Γ(b₁) [ cos(πa₁) z^{-a₁} / Γ(b₁-a₁) + e^z z^{a₁-b₁} / Γ(a₁) ]
///
/// (the real part of the complex form, which is all the method needs for
/// z = ζ² ≥ 0). The 1/Γ factors vanish exactly at the gamma poles, which is
/// what removes the e^z growth for terminating parameters. The two-term
/// form is only meaningful for large arguments, z ≳ 25.
pub fn kummer_asymptotic(p: KummerParams) -> Result<f64, SpecFunError> {
    p.validate()?;
    if p.z <= 0.0 {
        return Err(SpecFunError::Domain {
            what: "kummer asymptotic form is evaluated only for z > 0",
        });
    }
    let lead = gamma(p.b1)?;
    let algebraic = (PI * p.a1).cos() * p.z.powf(-p.a1) * reciprocal_gamma(p.b1 - p.a1);
    let exponential = p.z.exp() * p.z.powf(p.a1 - p.b1) * reciprocal_gamma(p.a1);
    Ok(lead * (algebraic + exponential))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_argument_is_one() {
        let p = KummerParams::new(3.0, 0.5, 0.0).unwrap();
        assert_eq!(kummer_series(p, 500).unwrap(), 1.0);
    }

    #[test]
    fn terminating_linear_case() {
        // ₁F₁(-1, 1/2, z) = 1 - 2z
        let p = KummerParams::new(-1.0, 0.5, 1.0).unwrap();
        assert_eq!(kummer_series(p, 500).unwrap(), -1.0);
    }

    #[test]
    fn exponential_case() {
        // ₁F₁(1, 1, z) = e^z
        let p = KummerParams::new(1.0, 1.0, 2.0).unwrap();
        let v = kummer_series(p, 500).unwrap();
        assert!((v - 2.0f64.exp()).abs() < 1e-13 * v, "got {v}");
    }

    #[test]
    fn invalid_b1_rejected() {
        assert!(KummerParams::new(1.0, 0.0, 1.0).is_err());
        assert!(KummerParams::new(1.0, -2.0, 1.0).is_err());
        assert!(KummerParams::new(1.0, -2.5, 1.0).is_ok());
    }

    #[test]
    fn no_convergence_when_budget_too_small() {
        let p = KummerParams::new(1.0, 1.0, 50.0).unwrap();
        assert!(matches!(
            kummer_series(p, 10),
            Err(SpecFunError::NoConvergence { terms: 10 })
        ));
    }

    #[test]
    fn terminating_series_is_polynomial() {
        // (ñ+1)-th finite differences of a degree-ñ polynomial vanish.
        let n = 4usize;
        let h = 0.5;
        let vals: Vec<f64> = (0..=(n + 1))
            .map(|j| {
                let z = 0.3 + h * j as f64;
                kummer_series(KummerParams::new(-(n as f64), 0.5, z).unwrap(), 500).unwrap()
            })
            .collect();
        let mut diff = vals;
        for _ in 0..=n {
            diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
        }
        assert!(diff[0].abs() < 1e-10, "residual difference {:.3e}", diff[0]);
    }

    #[test]
    fn asymptotic_exact_exponential() {
        let p = KummerParams::new(1.0, 1.0, 30.0).unwrap();
        let v = kummer_asymptotic(p).unwrap();
        let expect = 30.0f64.exp();
        assert!((v - expect).abs() < 1e-10 * expect, "got {v:e}");
    }

    #[test]
    fn asymptotic_of_terminating_polynomial() {
        // Leading z² behaviour of ₁F₁(-2, 1/2, z); within 15% of the exact
        // polynomial at z = 40.
        let p = KummerParams::new(-2.0, 0.5, 40.0).unwrap();
        let asym = kummer_asymptotic(p).unwrap();
        let exact = kummer_series(p, 500).unwrap();
        assert!((asym / exact - 1.0).abs() < 0.15, "{asym} vs {exact}");
    }

    #[test]
    fn asymptotic_matches_series_generic() {
        let p = KummerParams::new(0.25, 0.5, 30.0).unwrap();
        let asym = kummer_asymptotic(p).unwrap();
        let series = kummer_series(p, 2000).unwrap();
        assert!((asym / series - 1.0).abs() < 0.01, "{asym} vs {series}");
    }

    #[test]
    fn asymptotic_rejects_nonpositive_z() {
        let p = KummerParams::new(0.25, 0.5, -3.0).unwrap();
        assert!(matches!(
            kummer_asymptotic(p),
            Err(SpecFunError::Domain { .. })
        ));
    }
}
