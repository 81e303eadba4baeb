//! Finite-difference weights on arbitrary stencils (Fornberg's algorithm).
//!
//! Used for one-sided derivatives of transforms at the origin and for the
//! central-difference residuals of the eigenvalue equations.

use std::fmt;

/// Grid does not carry enough points for the requested derivative order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridTooCoarse {
    pub needed: usize,
    pub available: usize,
}

impl fmt::Display for GridTooCoarse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "finite difference needs {} grid points, only {} available",
            self.needed, self.available
        )
    }
}

impl std::error::Error for GridTooCoarse {}

/// Weights `w` such that `Σ w_i f(xs_i) ≈ f^(m)(x0)`.
///
/// Exact for polynomials of degree `xs.len() - 1`, so `xs.len()` points give
/// accuracy order `xs.len() - m` on smooth functions.
pub fn fd_weights(x0: f64, xs: &[f64], m: usize) -> Vec<f64> {
    let n = xs.len();
    assert!(n > m, "stencil must have more points than derivative order");

    // Fornberg (1988), generation of all orders 0..=m at once.
    let mut c = vec![vec![0.0f64; m + 1]; n];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = xs[0] - x0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = xs[i] - x0;
        for j in 0..i {
            let c3 = xs[i] - xs[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * ((k as f64) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - (k as f64) * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[m]).collect()
}

/// One-sided m-th derivative at the first grid point, accuracy order `m + 2`
/// (stencil of `2m + 2` points).
pub fn one_sided_derivative(
    grid: &[f64],
    values: &[f64],
    m: usize,
) -> Result<f64, GridTooCoarse> {
    let npts = if m == 0 { 1 } else { 2 * m + 2 };
    if grid.len() < npts || values.len() < npts {
        return Err(GridTooCoarse {
            needed: npts,
            available: grid.len().min(values.len()),
        });
    }
    if m == 0 {
        return Ok(values[0]);
    }
    let w = fd_weights(grid[0], &grid[..npts], m);
    Ok(w.iter().zip(values).map(|(wi, vi)| wi * vi).sum())
}

/// First and second derivatives at interior point `i` from its two
/// neighbours (works on non-uniform grids).
pub fn central_derivatives(grid: &[f64], values: &[f64], i: usize) -> (f64, f64) {
    let xs = &grid[i - 1..=i + 1];
    let vs = &values[i - 1..=i + 1];
    let w1 = fd_weights(grid[i], xs, 1);
    let w2 = fd_weights(grid[i], xs, 2);
    let d1 = w1.iter().zip(vs).map(|(w, v)| w * v).sum();
    let d2 = w2.iter().zip(vs).map(|(w, v)| w * v).sum();
    (d1, d2)
}
