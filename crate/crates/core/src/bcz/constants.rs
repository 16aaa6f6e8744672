//! Exact constants of the index distribution.
//!
//! The autocorrelation constant is
//! `A(h) = 2 Σ_{m,n ≥ 1} m n area(T^h T_m ∩ T_n) = 2 Σ_{m,n ≥ 1} area(T^h T_m* ∩ T_n*)`,
//! the second form following from `T_m = T_m* \ T_{m+1}*`. Only finitely many
//! starred entries are irregular: past a cutoff `M` every row (and column) is
//! either all of `T_m*` or empty, which a geometric certificate establishes at
//! run time before the tails are summed in closed form.

use rayon::prelude::*;

use super::push::{push_forward, PolygonSet};
use super::regions::{region_polygon, region_star_polygon, star_area_tail};
use super::BczError;
use crate::geometry::{ratio, Rational};

/// Default block size `4h + 2` for the finite part of `A(h)`.
pub fn default_cutoff(h: u64) -> u64 {
    4 * h + 2
}

/// `T^h T_m*` for each `m` in `ms`, computed in parallel.
fn forward_star_images(h: u64, ms: &[u64]) -> Result<Vec<PolygonSet>, BczError> {
    let h = i64::try_from(h).map_err(|_| BczError::StepCountTooLarge(h))?;
    ms.par_iter()
        .map(|&m| push_forward(&PolygonSet::single(region_star_polygon(m)), h))
        .collect()
}

/// `M × M` matrix whose `(m−1, n−1)` entry is `area(T^h T_m* ∩ T_n*)`.
pub fn intersection_area_table(h: u64, size: u64) -> Result<Vec<Vec<Rational>>, BczError> {
    if h == 0 {
        return Err(BczError::ZeroSteps);
    }
    let ms: Vec<u64> = (1..=size).collect();
    let images = forward_star_images(h, &ms)?;
    let stars: Vec<_> = ms.iter().map(|&n| region_star_polygon(n)).collect();
    Ok(images
        .par_iter()
        .map(|img| stars.iter().map(|s| img.area_within(s)).collect())
        .collect())
}

/// How a set sits relative to a region: inside it, disjoint from it, or straddling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Disjoint,
    Straddles,
}

fn classify(overlap: &Rational, whole: &Rational) -> Containment {
    if overlap.is_zero() {
        Containment::Disjoint
    } else if overlap == whole {
        Containment::Inside
    } else {
        Containment::Straddles
    }
}

/// Result of [`autocorrelation_constant`] with the pieces that make it up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutocorrelationConstant {
    pub h: u64,
    pub cutoff: u64,
    /// `A(h)` itself.
    pub value: Rational,
    /// `Σ_{m,n ≤ M} area(T^h T_m* ∩ T_n*)`.
    pub block_sum: Rational,
    /// Rows `m > M`: number of columns `n ≤ M` with `T^h T_{M+1}* ⊆ T_n*`.
    pub full_tail_rows: u64,
    /// Columns `n > M`: number of rows `m ≤ M` with `T_{M+1}* ⊆ T^h T_m*`.
    pub full_tail_columns: u64,
}

/// Exact `A(h)` with cutoff `M = 4h + 2`.
pub fn autocorrelation_constant(h: u64) -> Result<AutocorrelationConstant, BczError> {
    autocorrelation_constant_with_cutoff(h, default_cutoff(h))
}

/// Exact `A(h)`, summing the block `m, n ≤ M` geometrically and the tails in
/// closed form after certifying their shape.
///
/// The certificate: `T^h T_{M+1}*` lies inside or outside each `T_n*`
/// (`n ≤ M + 1`), and `T_{M+1}*` lies inside or outside each `T^h T_m*`
/// (`m ≤ M`), with no overlap in the corner `m, n > M`. Because the starred
/// regions are nested, every entry of the tail rows and columns is then
/// `area(T_k*)` or `0`, and `Σ_{k > M} area(T_k*) = 2/(M+1)`.
pub fn autocorrelation_constant_with_cutoff(
    h: u64,
    cutoff: u64,
) -> Result<AutocorrelationConstant, BczError> {
    if h == 0 {
        return Err(BczError::ZeroSteps);
    }
    if cutoff < 2 {
        return Err(BczError::CutoffTooSmall(cutoff));
    }
    let big_m = cutoff;
    let ms: Vec<u64> = (1..=big_m + 1).collect();
    let images = forward_star_images(h, &ms)?;
    let stars: Vec<_> = ms.iter().map(|&n| region_star_polygon(n)).collect();

    let block_sum: Rational = images[..big_m as usize]
        .par_iter()
        .map(|img| {
            stars[..big_m as usize]
                .iter()
                .map(|s| img.area_within(s))
                .sum::<Rational>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum();

    let certificate_failure = |reason: String| BczError::TailCertificate { h, cutoff, reason };

    // tail rows m > M
    let edge_image = &images[big_m as usize];
    let edge_area = edge_image.area();
    let mut full_tail_rows = 0;
    for (n, star) in stars.iter().enumerate() {
        let n = n as u64 + 1;
        match classify(&edge_image.area_within(star), &edge_area) {
            Containment::Inside if n <= big_m => full_tail_rows += 1,
            Containment::Disjoint => {}
            other => {
                return Err(certificate_failure(format!(
                    "T^h T_{}* vs T_{}*: {:?}",
                    big_m + 1,
                    n,
                    other
                )))
            }
        }
    }

    // tail columns n > M
    let edge_star = &stars[big_m as usize];
    let edge_star_area = edge_star.area();
    let mut full_tail_columns = 0;
    for (m, img) in images[..big_m as usize].iter().enumerate() {
        match classify(&img.area_within(edge_star), &edge_star_area) {
            Containment::Inside => full_tail_columns += 1,
            Containment::Disjoint => {}
            Containment::Straddles => {
                return Err(certificate_failure(format!(
                    "T_{}* straddles T^h T_{}*",
                    big_m + 1,
                    m + 1
                )))
            }
        }
    }

    let tail = star_area_tail(big_m + 1);
    let half = &block_sum + &(Rational::from((full_tail_rows + full_tail_columns) as i64) * &tail);
    Ok(AutocorrelationConstant {
        h,
        cutoff,
        value: ratio(2, 1) * half,
        block_sum,
        full_tail_rows,
        full_tail_columns,
    })
}

/// `B_1 = Σ_k k area(T_k) = 3/2` exactly: the first `cutoff` terms from the
/// region polygons plus the telescoped tail `Σ_{k > K} 4/((k+1)(k+2)) = 4/(K+2)`.
pub fn b_one_exact(cutoff: u64) -> Rational {
    assert!(cutoff >= 1);
    let head: Rational = (1..=cutoff)
        .map(|k| Rational::from(k as i64) * region_polygon(k).area())
        .sum();
    head + ratio(4, cutoff as i64 + 2)
}

/// `B_α = Σ_k k^α area(T_k)` to floating point, with its truncation data.
#[derive(Clone, Debug, PartialEq)]
pub struct BAlpha {
    pub alpha: f64,
    /// Number of terms summed directly.
    pub cutoff: u64,
    /// `Σ_{k ≤ K} k^α area(T_k)`.
    pub partial_sum: f64,
    /// Midpoint-rule estimate of `Σ_{k > K} k^α area(T_k)`.
    pub tail_estimate: f64,
    /// `Σ_{k > K} 4 k^{α−3} ≤ 4 K^{α−2}/(2−α)`, bounding the omitted tail itself.
    pub tail_bound: f64,
}

impl BAlpha {
    pub fn value(&self) -> f64 {
        self.partial_sum + self.tail_estimate
    }
}

/// Largest number of terms [`b_alpha`] sums directly.
pub const B_ALPHA_MAX_CUTOFF: u64 = 10_000;

fn omitted_tail_bound(alpha: f64, cutoff: u64) -> f64 {
    4.0 * (cutoff as f64).powf(alpha - 2.0) / (2.0 - alpha)
}

/// `∫_X^∞ 4 x^{α−1} / ((x+1)(x+2)) dx` for `X > 2`, from the expansion
/// `1/((x+1)(x+2)) = Σ_{j ≥ 1} (−1)^j (1 − 2^j) x^{−j−1}`.
fn tail_integral(alpha: f64, x: f64) -> f64 {
    let mut acc = 0.0;
    for j in 1..=60 {
        let c = if j % 2 == 0 { 1.0 } else { -1.0 } * (1.0 - 2f64.powi(j));
        let term = c * x.powf(alpha - 1.0 - j as f64) / (j as f64 + 1.0 - alpha);
        acc += term;
        if term.abs() < 1e-18 * acc.abs() {
            break;
        }
    }
    4.0 * acc
}

/// `area(T_k)`: `1/6` for `k = 1`, else `area(T_k*) − area(T_{k+1}*) = 4/(k(k+1)(k+2))`.
fn region_area(k: u64) -> f64 {
    if k == 1 {
        return 1.0 / 6.0;
    }
    let k = k as f64;
    4.0 / (k * (k + 1.0) * (k + 2.0))
}

/// `B_α` for `0 < α < 2`.
///
/// Sums `k^α area(T_k)` with the closed-form areas up to the first `K` for which
/// `Σ_{k > K} 4 k^{α−3} < tol`, capped at [`B_ALPHA_MAX_CUTOFF`], and adds a
/// midpoint-rule estimate of the remaining tail.
pub fn b_alpha(alpha: f64, tol: f64) -> Result<BAlpha, BczError> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(BczError::AlphaOutOfRange(alpha));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(BczError::BadTolerance(tol));
    }
    let needed = (4.0 / ((2.0 - alpha) * tol))
        .powf(1.0 / (2.0 - alpha))
        .ceil();
    let cutoff = if needed.is_finite() && needed < B_ALPHA_MAX_CUTOFF as f64 {
        (needed as u64).max(8)
    } else {
        B_ALPHA_MAX_CUTOFF
    };
    let mut terms: Vec<f64> = (1..=cutoff)
        .into_par_iter()
        .map(|k| (k as f64).powf(alpha) * region_area(k))
        .collect();
    // smallest first
    terms.reverse();
    let partial_sum = terms.iter().sum();
    Ok(BAlpha {
        alpha,
        cutoff,
        partial_sum,
        tail_estimate: tail_integral(alpha, cutoff as f64 + 0.5),
        tail_bound: omitted_tail_bound(alpha, cutoff),
    })
}
