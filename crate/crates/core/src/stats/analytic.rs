//! Real constants in the second-moment asymptotic, evaluated from series.

use std::f64::consts::PI;

/// Summation cut-off for the Euler–Maclaurin evaluations below. The first
/// omitted correction is of order `N^{-6}`, far below `f64` resolution.
const EM_TERMS: u32 = 1000;

/// Euler's constant `γ = H_N − ln N − 1/(2N) + 1/(12N²) − 1/(120N⁴) + O(N^{-6})`.
pub fn euler_gamma() -> f64 {
    let n = f64::from(EM_TERMS);
    // sum smallest terms first
    let harmonic: f64 = (1..=EM_TERMS).rev().map(|k| 1.0 / f64::from(k)).sum();
    harmonic - n.ln() - 1.0 / (2.0 * n) + 1.0 / (12.0 * n * n) - 1.0 / (120.0 * n.powi(4))
}

/// `ζ'(2)/ζ(2) = −(6/π²) Σ_{n≥2} ln n / n²`.
///
/// The tail `Σ_{n≥N} f(n)` of `f(x) = ln x / x²` is replaced by
/// `∫_N^∞ f + f(N)/2 − f'(N)/12 + f'''(N)/720`.
pub fn zeta2_log_derivative() -> f64 {
    let n = f64::from(EM_TERMS);
    let f = |x: f64| x.ln() / (x * x);
    let head: f64 = (2..EM_TERMS).rev().map(|k| f(f64::from(k))).sum();
    let ln = n.ln();
    let integral = (ln + 1.0) / n;
    let d1 = (1.0 - 2.0 * ln) / n.powi(3);
    let d3 = (26.0 - 24.0 * ln) / n.powi(5);
    let series = head + integral + f(n) / 2.0 - d1 / 12.0 + d3 / 720.0;
    -series * 6.0 / (PI * PI)
}

/// `(24/π²) Q² (ln 2Q − ζ'(2)/ζ(2) − 17/8 + 2γ)`, the main term of `Σ ν²`.
pub fn second_moment_prediction(order: u64) -> f64 {
    let q = order as f64;
    let bracket = (2.0 * q).ln() - zeta2_log_derivative() - 17.0 / 8.0 + 2.0 * euler_gamma();
    24.0 / (PI * PI) * q * q * bracket
}
