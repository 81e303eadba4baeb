//! Special functions behind the closed-form solutions: gamma, Kummer's
//! confluent hypergeometric function ₁F₁, Hermite and generalized Laguerre
//! polynomials.
//!
//! Everything is real-valued on the domains the method actually visits;
//! complex arguments and Kummer's second solution are out of scope.

mod gamma_fn;
mod kummer;
mod poly;

pub use gamma_fn::{gamma, reciprocal_gamma};
pub use kummer::{kummer_asymptotic, kummer_series, KummerParams};
pub use poly::{hermite, laguerre};

use std::fmt;

/// Errors from special-function evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum SpecFunError {
    /// Gamma evaluated at a non-positive integer.
    Pole { z: f64 },
    /// Series did not meet its stopping criterion within the term budget.
    NoConvergence { terms: usize },
    /// Argument outside the supported domain.
    Domain { what: &'static str },
}

impl fmt::Display for SpecFunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Pole { z } => write!(f, "gamma has a simple pole at z = {z}"),
            Self::NoConvergence { terms } => {
                write!(f, "series not converged after {terms} terms")
            }
            Self::Domain { what } => write!(f, "domain error: {what}"),
        }
    }
}

impl std::error::Error for SpecFunError {}
