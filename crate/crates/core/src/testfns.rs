//! The built-in test family used by the CLI and the verification suites:
//! `exp`, `gauss`, `x_gauss`, `x3_gauss`.

use crate::grid::Parity;
use std::fmt;

/// Named test function on the half-line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestFunction {
    /// e^{-ζ} (no definite parity as a full-line function).
    Exp,
    /// e^{-ζ²} (even).
    Gauss,
    /// ζ e^{-ζ²} (odd).
    XGauss,
    /// ζ³ e^{-ζ²} (odd).
    X3Gauss,
}

impl TestFunction {
    pub const ALL: [TestFunction; 4] = [Self::Exp, Self::Gauss, Self::XGauss, Self::X3Gauss];

    pub fn parse(tag: &str) -> Option<Self> {
        match tag {
            "exp" => Some(Self::Exp),
            "gauss" => Some(Self::Gauss),
            "x_gauss" => Some(Self::XGauss),
            "x3_gauss" => Some(Self::X3Gauss),
            _ => None,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Self::Exp => "exp",
            Self::Gauss => "gauss",
            Self::XGauss => "x_gauss",
            Self::X3Gauss => "x3_gauss",
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            Self::Exp => Parity::None,
            Self::Gauss => Parity::Even,
            Self::XGauss | Self::X3Gauss => Parity::Odd,
        }
    }

    pub fn eval(self, z: f64) -> f64 {
        match self {
            Self::Exp => (-z).exp(),
            Self::Gauss => (-z * z).exp(),
            Self::XGauss => z * (-z * z).exp(),
            Self::X3Gauss => z * z * z * (-z * z).exp(),
        }
    }

    /// Analytic second derivative, for the derivative-property checks.
    pub fn second_derivative(self, z: f64) -> f64 {
        let g = (-z * z).exp();
        match self {
            Self::Exp => (-z).exp(),
            Self::Gauss => (4.0 * z * z - 2.0) * g,
            Self::XGauss => (4.0 * z * z * z - 6.0 * z) * g,
            Self::X3Gauss => (4.0 * z.powi(5) - 14.0 * z.powi(3) + 6.0 * z) * g,
        }
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}
