//! Sums and counts over one period of `F_Q`.

use super::engine::{fold_indices, IndexSample, Interval, Workers};
use super::record::{second_moment_record, StatRecord};
use super::StatsError;
use crate::farey::{totient_summatory, Fraction};

fn sum_over<F>(
    order: u64,
    range: Interval,
    h: u64,
    workers: Workers,
    term: F,
) -> Result<u128, StatsError>
where
    F: Fn(IndexSample) -> u128 + Sync,
{
    fold_indices(
        order,
        range,
        h,
        workers,
        || 0u128,
        |acc, s| *acc += term(s),
        |a, b| a + b,
    )
}

/// `Σ_i ν_Q(γ_i)`, which is `3N(Q) − 1`.
pub fn sum_index(order: u64, workers: Workers) -> Result<u128, StatsError> {
    sum_over(order, Interval::full(), 0, workers, |s| u128::from(s.index))
}

/// `hist[k] = #{γ_i ∈ range : ν_Q(γ_i) = k}`.
pub fn index_histogram(
    order: u64,
    range: Interval,
    workers: Workers,
) -> Result<Vec<u64>, StatsError> {
    fold_indices(
        order,
        range,
        0,
        workers,
        Vec::new,
        |hist: &mut Vec<u64>, s| {
            let k = s.index as usize;
            if hist.len() <= k {
                hist.resize(k + 1, 0);
            }
            hist[k] += 1;
        },
        |mut a, b| {
            if a.len() < b.len() {
                a.resize(b.len(), 0);
            }
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    )
}

/// Value of `Σ ν^α`: exact for integer exponents.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Moment {
    Exact(u128),
    Real(f64),
}

impl Moment {
    pub fn to_f64(self) -> f64 {
        match self {
            Moment::Exact(v) => v as f64,
            Moment::Real(v) => v,
        }
    }
}

/// `T_α(Q) = Σ_i ν_Q(γ_i)^α`, computed from the index histogram.
pub fn sum_index_power(order: u64, alpha: f64, workers: Workers) -> Result<Moment, StatsError> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(StatsError::BadExponent(alpha));
    }
    let hist = index_histogram(order, Interval::full(), workers)?;
    if alpha.fract() == 0.0 && alpha <= f64::from(u32::MAX) {
        let p = alpha as u32;
        let mut acc = 0u128;
        for (k, &c) in hist.iter().enumerate() {
            let term = (k as u128)
                .checked_pow(p)
                .and_then(|v| v.checked_mul(u128::from(c)))
                .ok_or(StatsError::Overflow("Σ ν^α"))?;
            acc = acc.checked_add(term).ok_or(StatsError::Overflow("Σ ν^α"))?;
        }
        return Ok(Moment::Exact(acc));
    }
    let total = hist
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(k, &c)| c as f64 * (k as f64).powf(alpha))
        .sum();
    Ok(Moment::Real(total))
}

/// `Σ_i ν_Q(γ_i)²`.
pub fn sum_index_squared(order: u64, workers: Workers) -> Result<u128, StatsError> {
    sum_over(order, Interval::full(), 0, workers, |s| {
        u128::from(s.index) * u128::from(s.index)
    })
}

/// `Σ ν²` paired with `(24/π²) Q² (ln 2Q − ζ'(2)/ζ(2) − 17/8 + 2γ)`.
pub fn sum_index_squared_asymptotic(
    order: u64,
    workers: Workers,
) -> Result<StatRecord, StatsError> {
    second_moment_record(order, workers)
}

fn check_steps(h: u64) -> Result<(), StatsError> {
    if h == 0 {
        return Err(StatsError::ZeroParameter("h"));
    }
    Ok(())
}

/// `S_h(Q) = Σ_i ν_Q(γ_i) ν_Q(γ_{i+h})`.
pub fn autocorr_sum(order: u64, h: u64, workers: Workers) -> Result<u128, StatsError> {
    autocorr_sum_over(order, h, Interval::full(), workers)
}

/// `S_{h,t}(Q)`: the terms of `S_h(Q)` with `γ_i ≤ t`.
pub fn autocorr_sum_interval(
    order: u64,
    h: u64,
    t: Fraction,
    workers: Workers,
) -> Result<u128, StatsError> {
    autocorr_sum_over(order, h, Interval::up_to(t)?, workers)
}

/// The terms of `S_h(Q)` with `γ_i` in `range`.
pub fn autocorr_sum_over(
    order: u64,
    h: u64,
    range: Interval,
    workers: Workers,
) -> Result<u128, StatsError> {
    check_steps(h)?;
    sum_over(order, range, h, workers, |s| {
        u128::from(s.index) * u128::from(s.ahead)
    })
}

/// `Σ_{γ_i ≤ t} ν_Q(γ_i)`.
pub fn partial_index_sum(order: u64, t: Fraction, workers: Workers) -> Result<u128, StatsError> {
    sum_over(order, Interval::up_to(t)?, 0, workers, |s| {
        u128::from(s.index)
    })
}

/// `(L(Q,k,t), U(Q,k,t))`: counts of `γ_i ≤ t` with `ν_Q(γ_i) = k` equal to
/// `⌊(2Q+1)/q_i⌋ − 1` and to `⌊(2Q+1)/q_i⌋` respectively.
pub fn lu_counts(
    order: u64,
    k: u64,
    t: Fraction,
    workers: Workers,
) -> Result<(u64, u64), StatsError> {
    if k == 0 {
        return Err(StatsError::ZeroParameter("k"));
    }
    let top = 2 * order + 1;
    fold_indices(
        order,
        Interval::up_to(t)?,
        0,
        workers,
        || (0u64, 0u64),
        |acc, s| {
            if s.index == k {
                let m = top / s.den;
                if m - 1 == k {
                    acc.0 += 1;
                } else if m == k {
                    acc.1 += 1;
                }
            }
        },
        |a, b| (a.0 + b.0, a.1 + b.1),
    )
}

/// Enumerated count against a closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub order: u64,
    pub lhs: i128,
    pub rhs: i128,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `#{γ_i : ν_Q(γ_i) = ⌊m/q_i⌋ − 1}`.
fn count_lower(order: u64, m: u64, workers: Workers) -> Result<i128, StatsError> {
    let c = sum_over(order, Interval::full(), 0, workers, |s| {
        u128::from(s.index + 1 == m / s.den)
    })?;
    Ok(c as i128)
}

fn n(order: u64) -> Result<i128, StatsError> {
    Ok(i128::from(totient_summatory(order)?))
}

/// `#{γ_i : ν_Q(γ_i) = ⌊(2Q+1)/q_i⌋ − 1}` against `Q(2Q+1) − N(2Q) − 2N(Q) + 1`.
///
/// This is the commonly quoted form of the count. It does not hold: the
/// enumerated side exceeds it by `(2Q+1) − φ(2Q+1)` (see
/// [`lower_count_identity`] and [`shifted_count_identity`]).
pub fn hall_shiu_identity(order: u64, workers: Workers) -> Result<IdentityCheck, StatsError> {
    let q = i128::from(order);
    Ok(IdentityCheck {
        order,
        lhs: count_lower(order, 2 * order + 1, workers)?,
        rhs: q * (2 * q + 1) - n(2 * order)? - 2 * n(order)? + 1,
    })
}

/// `#{γ_i : ν_Q(γ_i) = ⌊(2Q+1)/q_i⌋ − 1}` against `(Q+1)(2Q+1) − N(2Q+1) − 2N(Q) + 1`.
pub fn lower_count_identity(order: u64, workers: Workers) -> Result<IdentityCheck, StatsError> {
    let q = i128::from(order);
    Ok(IdentityCheck {
        order,
        lhs: count_lower(order, 2 * order + 1, workers)?,
        rhs: (q + 1) * (2 * q + 1) - n(2 * order + 1)? - 2 * n(order)? + 1,
    })
}

/// `#{γ_i : ν_Q(γ_i) = ⌊2Q/q_i⌋ − 1}` against `Q(2Q+1) − N(2Q) − 2N(Q) + 1`.
pub fn shifted_count_identity(order: u64, workers: Workers) -> Result<IdentityCheck, StatsError> {
    let q = i128::from(order);
    Ok(IdentityCheck {
        order,
        lhs: count_lower(order, 2 * order, workers)?,
        rhs: q * (2 * q + 1) - n(2 * order)? - 2 * n(order)? + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: u64, d: u64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    const W: Workers = Workers::single();

    #[test]
    fn index_sums() {
        assert_eq!(sum_index(2, W).unwrap(), 5);
        assert_eq!(sum_index(3, W).unwrap(), 11);
        assert_eq!(sum_index(100, W).unwrap(), 9131);
    }

    #[test]
    fn powers() {
        assert_eq!(sum_index_power(3, 2.0, W).unwrap(), Moment::Exact(47));
        assert_eq!(sum_index_power(3, 1.0, W).unwrap(), Moment::Exact(11));
        assert_eq!(sum_index_squared(2, W).unwrap(), 17);
        let Moment::Real(half) = sum_index_power(3, 0.5, W).unwrap() else {
            panic!("expected a real moment")
        };
        assert!((half - (2.0 + 3f64.sqrt() + 6f64.sqrt())).abs() < 1e-12);
        assert!(sum_index_power(3, 0.0, W).is_err());
    }

    #[test]
    fn autocorrelation_examples() {
        assert_eq!(autocorr_sum(3, 1, W).unwrap(), 18);
        assert_eq!(autocorr_sum(3, 4, W).unwrap(), 47);
        assert_eq!(autocorr_sum_interval(3, 1, f(1, 2), W).unwrap(), 6);
        assert_eq!(autocorr_sum_interval(3, 1, f(1, 1), W).unwrap(), 18);
        assert!(autocorr_sum(3, 0, W).is_err());
    }

    #[test]
    fn partial_sums() {
        assert_eq!(partial_index_sum(3, f(1, 2), W).unwrap(), 4);
        assert_eq!(partial_index_sum(3, Fraction::zero(), W).unwrap(), 0);
        assert_eq!(partial_index_sum(3, Fraction::one(), W).unwrap(), 11);
    }

    #[test]
    fn lower_upper() {
        assert_eq!(lu_counts(3, 1, Fraction::one(), W).unwrap(), (2, 0));
        for q in 1..=60 {
            assert_eq!(lu_counts(q, 1, Fraction::one(), W).unwrap().1, 0);
        }
    }

    #[test]
    fn count_identities() {
        for q in 1..=80 {
            assert!(lower_count_identity(q, W).unwrap().holds(), "Q={q}");
            assert!(shifted_count_identity(q, W).unwrap().holds(), "Q={q}");
        }
        let c = hall_shiu_identity(1, W).unwrap();
        assert_eq!((c.lhs, c.rhs), (1, 0));
    }
}
