//! Gamma function via the Lanczos approximation (g = 607/128, 15 terms,
//! Godfrey's coefficient set) with reflection for the left half-line.

use super::SpecFunError;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_189e-5,
    4.652_362_892_704_858e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_125e-4,
    -0.210_264_441_724_104_88e-3,
    0.217_439_618_115_212_64e-3,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_274e-5,
    -0.261_908_384_015_814_09e-4,
    0.368_991_826_595_316_23e-5,
];

/// Γ(z) for real z away from the poles at z = 0, -1, -2, …
///
/// Relative error is at the 1e-14 level over `[-20, 40]` away from poles.
pub fn gamma(z: f64) -> Result<f64, SpecFunError> {
    if !z.is_finite() {
        return Err(SpecFunError::Domain {
            what: "gamma of a non-finite argument",
        });
    }
    if z <= 0.0 && z == z.floor() {
        return Err(SpecFunError::Pole { z });
    }
    Ok(gamma_unchecked(z))
}

/// 1/Γ(z), exactly 0 at the poles.
///
/// This is the convention the asymptotic form of ₁F₁ needs: the e^z term
/// carries a 1/Γ(a₁) factor that must vanish when a₁ is a non-positive
/// integer.
pub fn reciprocal_gamma(z: f64) -> f64 {
    if z <= 0.0 && z == z.floor() {
        0.0
    } else {
        1.0 / gamma_unchecked(z)
    }
}

fn gamma_unchecked(z: f64) -> f64 {
    if z < 0.5 {
        // Reflection: Γ(z) Γ(1-z) = π / sin(πz)
        PI / (sin_pi(z) * gamma_unchecked(1.0 - z))
    } else {
        let x = z - 1.0;
        let mut acc = LANCZOS[0];
        for (k, c) in LANCZOS.iter().enumerate().skip(1) {
            acc += c / (x + k as f64);
        }
        let t = x + LANCZOS_G + 0.5;
        (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
    }
}

/// sin(πx) with argument reduction, accurate near integers where the naive
/// product πx loses the zero.
fn sin_pi(x: f64) -> f64 {
    let r = x.round();
    let f = x - r;
    let s = (PI * f).sin();
    if (r as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}
