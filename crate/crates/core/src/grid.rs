//! Sampled real functions on a finite monotone grid.

use std::fmt;

/// Parity tag carried by a [`GridFunction`].
///
/// `Odd`/`Even` declare how the function extends through the origin; `None`
/// makes no claim (e.g. `e^{-ζ}` on the half-line).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    None,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Even => write!(f, "even"),
            Self::Odd => write!(f, "odd"),
            Self::None => write!(f, "none"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GridError {
    LengthMismatch { grid: usize, values: usize },
    TooShort { len: usize },
    NotStrictlyIncreasing { index: usize },
    NonFiniteValue { index: usize },
    OddParityNonzeroOrigin { value: f64 },
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LengthMismatch { grid, values } => {
                write!(f, "grid has {grid} points but {values} values")
            }
            Self::TooShort { len } => write!(f, "grid needs at least 1 point, got {len}"),
            Self::NotStrictlyIncreasing { index } => {
                write!(f, "grid is not strictly increasing at index {index}")
            }
            Self::NonFiniteValue { index } => write!(f, "non-finite value at index {index}"),
            Self::OddParityNonzeroOrigin { value } => {
                write!(f, "odd-parity function has value {value} at the origin")
            }
        }
    }
}

impl std::error::Error for GridError {}

/// A real function sampled on a strictly increasing grid, with a parity tag.
///
/// Evaluation between samples uses local cubic (4-point Lagrange)
/// interpolation; outside the grid the function is treated as decayed to 0.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: Vec<f64>,
    values: Vec<f64>,
    parity: Parity,
}

impl GridFunction {
    pub fn new(grid: Vec<f64>, values: Vec<f64>, parity: Parity) -> Result<Self, GridError> {
        if grid.len() != values.len() {
            return Err(GridError::LengthMismatch {
                grid: grid.len(),
                values: values.len(),
            });
        }
        if grid.is_empty() {
            return Err(GridError::TooShort { len: 0 });
        }
        for i in 0..grid.len() {
            if !grid[i].is_finite() || (i > 0 && grid[i] <= grid[i - 1]) {
                return Err(GridError::NotStrictlyIncreasing { index: i });
            }
            if !values[i].is_finite() {
                return Err(GridError::NonFiniteValue { index: i });
            }
        }
        if parity == Parity::Odd {
            if let Some(i) = grid.iter().position(|&x| x == 0.0) {
                let scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                if values[i].abs() > 1e-12 * scale.max(1.0) {
                    return Err(GridError::OddParityNonzeroOrigin { value: values[i] });
                }
            }
        }
        Ok(Self {
            grid,
            values,
            parity,
        })
    }

    /// Sample a callable on a grid.
    pub fn sample<F: Fn(f64) -> f64>(
        f: F,
        grid: Vec<f64>,
        parity: Parity,
    ) -> Result<Self, GridError> {
        let values = grid.iter().map(|&x| f(x)).collect();
        Self::new(grid, values, parity)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    pub fn first_point(&self) -> f64 {
        self.grid[0]
    }

    pub fn last_point(&self) -> f64 {
        *self.grid.last().unwrap()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Local cubic interpolation at `x`; 0 outside the grid span.
    pub fn eval(&self, x: f64) -> f64 {
        let n = self.grid.len();
        if x < self.grid[0] || x > self.grid[n - 1] {
            return 0.0;
        }
        if n == 1 {
            return self.values[0];
        }
        // index of the first grid point > x
        let hi = self.grid.partition_point(|&g| g <= x);
        let i = hi.saturating_sub(1).min(n - 2);
        // 4-point stencil centered on the bracketing interval, clamped at
        // the ends (falls back to the available points when n < 4).
        let start = i.saturating_sub(1).min(n.saturating_sub(4.min(n)));
        let count = 4.min(n);
        let xs = &self.grid[start..start + count];
        let vs = &self.values[start..start + count];
        lagrange(xs, vs, x)
    }

    /// Closure view of the interpolant.
    pub fn interpolant(&self) -> impl Fn(f64) -> f64 + '_ {
        move |x| self.eval(x)
    }

    /// Largest spacing between consecutive grid points.
    pub fn max_spacing(&self) -> f64 {
        self.grid
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(0.0f64, f64::max)
    }
}

fn lagrange(xs: &[f64], vs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for j in 0..xs.len() {
        let mut term = vs[j];
        for k in 0..xs.len() {
            if k != j {
                term *= (x - xs[k]) / (xs[j] - xs[k]);
            }
        }
        acc += term;
    }
    acc
}

/// Uniform grid helper, `n` points from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    (0..n)
        .map(|i| a + (b - a) * (i as f64) / ((n - 1) as f64))
        .collect()
}
