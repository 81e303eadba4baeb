//! Unilateral Fourier (sine/cosine) transform method for the one-dimensional
//! quantum harmonic oscillator.
//!
//! The library is organized around the stages of the method:
//!
//! - [`specfun`]: gamma, Kummer's confluent hypergeometric function, Hermite
//!   and generalized Laguerre polynomials.
//! - [`transforms`]: numerical sine/cosine transforms on `[0, ∞)` and the
//!   identities they satisfy (Parseval, moments, derivative properties,
//!   scaling).
//! - [`oscillator`]: the transformed first-order eigenvalue equation, its
//!   closed-form solution, the admissibility analysis that quantizes the
//!   spectrum, inversion back to Hermite eigenfunctions, and residual checks
//!   against the original Schrödinger equation.
//! - [`oracle`]: an independent finite-difference eigensolver and a
//!   Richardson-refined midpoint quadrature used for cross-validation.
//! - [`checks`]: the named verification suites behind `unifour verify`.
//!
//! The `unifour` binary exposes the pipeline as `solve`, `scan`, `verify`,
//! `transform` and `oracle` subcommands.
//!
//! ```
//! use unifour::oscillator::{self, CandidateExponent};
//! use unifour::{QuadratureConfig, TransformKind};
//!
//! // Every real exponent solves the transformed first-order equation...
//! let candidate = CandidateExponent::new(0.37, TransformKind::Cosine);
//! let residual = oscillator::transformed_ode_residual(
//!     &candidate,
//!     candidate.epsilon(),
//!     &[0.5, 1.0, 1.5],
//! )
//! .unwrap();
//! assert!(residual < 1e-12);
//!
//! // ...but only integers of the right parity survive admissibility,
//! let verdict = oscillator::classify_exponent(&candidate);
//! assert!(!verdict.accepted && !verdict.derivative_conditions_ok);
//!
//! // and the rejected ones are visibly non-normalizable.
//! let growth = oscillator::growth_diagnostic(
//!     &candidate,
//!     &oscillator::DEFAULT_GROWTH_PROBE,
//!     &QuadratureConfig::default(),
//! )
//! .unwrap();
//! assert!(growth.growing);
//! ```

pub mod checks;
pub mod fd;
pub mod grid;
pub mod oracle;
pub mod oscillator;
pub mod quad;
pub mod report;
pub mod specfun;
pub mod testfns;
pub mod transforms;

pub use grid::{GridFunction, Parity};
pub use quad::{QuadratureConfig, QuadError};
pub use transforms::TransformKind;
