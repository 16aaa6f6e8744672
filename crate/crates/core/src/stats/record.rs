//! Exact statistics paired with their limiting predictions.

use std::fmt;

use super::analytic::second_moment_prediction;
use super::engine::Workers;
use super::sums::{
    autocorr_sum_interval, lu_counts, partial_index_sum, sum_index_power, sum_index_squared, Moment,
};
use super::StatsError;
use crate::bcz::{b_alpha, lower_frequency, upper_frequency, BczError};
use crate::farey::{totient_summatory, Fraction};
use crate::geometry::Rational;

/// Which statistic a record holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StatKind {
    /// `S_{h,t}(Q)` against `t A(h) N(Q)`.
    Autocorrelation,
    /// `T_α(Q)` against `2 N(Q) B_α`.
    Moment,
    /// `Σ ν²` against its `Q² log Q` asymptotic.
    SecondMoment,
    /// `Σ_{γ_i ≤ t} ν` against `3 N(Q) t`.
    PartialSum,
    /// `L(Q,k,t)` against `t l_k N(Q)`.
    Lower,
    /// `U(Q,k,t)` against `t u_k N(Q)`.
    Upper,
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StatKind::Autocorrelation => "S_h",
            StatKind::Moment => "moment",
            StatKind::SecondMoment => "second_moment",
            StatKind::PartialSum => "partial",
            StatKind::Lower => "L",
            StatKind::Upper => "U",
        })
    }
}

/// Statistic parameters, printed as `name=value` pairs joined by `;`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Parameter {
    None,
    Steps { h: u64, t: Fraction },
    Alpha(f64),
    Region { k: u64, t: Fraction },
    Cut(Fraction),
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::None => f.write_str("-"),
            Parameter::Steps { h, t } => write!(f, "h={h};t={t}"),
            Parameter::Alpha(a) => write!(f, "alpha={a}"),
            Parameter::Region { k, t } => write!(f, "k={k};t={t}"),
            Parameter::Cut(t) => write!(f, "t={t}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExactValue {
    Integer(u128),
    /// Non-integer moments, accumulated in `f64`.
    Real(f64),
}

impl ExactValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            ExactValue::Integer(v) => *v as f64,
            ExactValue::Real(v) => *v,
        }
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Integer(v) => write!(f, "{v}"),
            ExactValue::Real(v) => f.write_str(&format_real(*v)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Prediction {
    Rational(Rational),
    Real(f64),
}

impl Prediction {
    pub fn to_f64(&self) -> f64 {
        match self {
            Prediction::Rational(r) => r.to_f64(),
            Prediction::Real(v) => *v,
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Prediction::Rational(r) => r.is_zero(),
            Prediction::Real(v) => *v == 0.0,
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prediction::Rational(r) => f.write_str(&r.to_ratio_string()),
            Prediction::Real(v) => f.write_str(&format_real(*v)),
        }
    }
}

/// A real number to 15 significant digits.
pub fn format_real(v: f64) -> String {
    format!("{v:.14e}")
}

/// One exact statistic at order `Q` with its prediction.
#[derive(Clone, Debug, PartialEq)]
pub struct StatRecord {
    pub kind: StatKind,
    pub order: u64,
    pub parameter: Parameter,
    pub exact: ExactValue,
    pub prediction: Prediction,
    /// Order of the error term in the asymptotic, e.g. `Q log^2 Q`.
    pub error_form: &'static str,
}

impl StatRecord {
    /// `exact / prediction`, or `None` when the prediction is zero. Integer
    /// values over rational predictions are divided exactly before rounding.
    pub fn ratio(&self) -> Option<f64> {
        if self.prediction.is_zero() {
            return None;
        }
        Some(match (&self.exact, &self.prediction) {
            (ExactValue::Integer(v), Prediction::Rational(p)) => {
                (Rational::from_integer(*v) / p).to_f64()
            }
            (e, p) => e.to_f64() / p.to_f64(),
        })
    }

    /// `|ratio − 1|`.
    pub fn deviation(&self) -> Option<f64> {
        self.ratio().map(|r| (r - 1.0).abs())
    }
}

fn frac(t: Fraction) -> Rational {
    Rational::new(t.num(), t.den())
}

fn n_of(order: u64) -> Result<Rational, StatsError> {
    Ok(Rational::from_integer(totient_summatory(order)?))
}

/// `S_{h,t}(Q)` against `t A(h) N(Q)`, with `A(h)` supplied by the caller.
pub fn autocorrelation_record(
    order: u64,
    h: u64,
    t: Fraction,
    a_h: &Rational,
    workers: Workers,
) -> Result<StatRecord, StatsError> {
    let exact = autocorr_sum_interval(order, h, t, workers)?;
    Ok(StatRecord {
        kind: StatKind::Autocorrelation,
        order,
        parameter: Parameter::Steps { h, t },
        exact: ExactValue::Integer(exact),
        prediction: Prediction::Rational(frac(t) * a_h * n_of(order)?),
        error_form: if t == Fraction::one() {
            "Q log^2 Q"
        } else {
            "Q^(3/2+eps)"
        },
    })
}

/// `T_α(Q)` against `2 N(Q) B_α`. For `α = 1` the prediction uses `B_1 = 3/2`
/// exactly; otherwise `B_α` is evaluated to within `tol`.
pub fn moment_record(
    order: u64,
    alpha: f64,
    tol: f64,
    workers: Workers,
) -> Result<StatRecord, StatsError> {
    if alpha == 1.0 {
        return moment_record_with_constant(order, alpha, 1.5, workers);
    }
    let b = b_alpha(alpha, tol)?;
    moment_record_with_constant(order, alpha, b.value(), workers)
}

/// [`moment_record`] with `B_α` supplied, so one evaluation can serve many orders.
pub fn moment_record_with_constant(
    order: u64,
    alpha: f64,
    b: f64,
    workers: Workers,
) -> Result<StatRecord, StatsError> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(BczError::AlphaOutOfRange(alpha).into());
    }
    let exact = match sum_index_power(order, alpha, workers)? {
        Moment::Exact(v) => ExactValue::Integer(v),
        Moment::Real(v) => ExactValue::Real(v),
    };
    let n = n_of(order)?;
    let prediction = if alpha == 1.0 {
        Prediction::Rational(Rational::from_integer(3) * n)
    } else {
        Prediction::Real(2.0 * n.to_f64() * b)
    };
    let error_form = if alpha < 1.0 {
        "Q log Q"
    } else if alpha == 1.0 {
        "Q log^2 Q"
    } else {
        "Q^alpha log Q"
    };
    Ok(StatRecord {
        kind: StatKind::Moment,
        order,
        parameter: Parameter::Alpha(alpha),
        exact,
        prediction,
        error_form,
    })
}

/// `Σ ν²` against `(24/π²) Q² (ln 2Q − ζ'(2)/ζ(2) − 17/8 + 2γ)`.
pub fn second_moment_record(order: u64, workers: Workers) -> Result<StatRecord, StatsError> {
    if order < 2 {
        return Err(StatsError::OrderTooSmall(order));
    }
    Ok(StatRecord {
        kind: StatKind::SecondMoment,
        order,
        parameter: Parameter::None,
        exact: ExactValue::Integer(sum_index_squared(order, workers)?),
        prediction: Prediction::Real(second_moment_prediction(order)),
        error_form: "Q log^2 Q",
    })
}

/// `Σ_{γ_i ≤ t} ν` against `3 N(Q) t`.
pub fn partial_sum_record(
    order: u64,
    t: Fraction,
    workers: Workers,
) -> Result<StatRecord, StatsError> {
    Ok(StatRecord {
        kind: StatKind::PartialSum,
        order,
        parameter: Parameter::Cut(t),
        exact: ExactValue::Integer(partial_index_sum(order, t, workers)?),
        prediction: Prediction::Rational(Rational::from_integer(3) * n_of(order)? * frac(t)),
        error_form: "Q^(3/2+eps)",
    })
}

/// `L(Q,k,t)` and `U(Q,k,t)` against `t l_k N(Q)` and `t u_k N(Q)`.
pub fn lower_upper_records(
    order: u64,
    k: u64,
    t: Fraction,
    workers: Workers,
) -> Result<[StatRecord; 2], StatsError> {
    let (l, u) = lu_counts(order, k, t, workers)?;
    let scale = frac(t) * n_of(order)?;
    let error_form = if t == Fraction::one() {
        "k + Q log Q / k"
    } else {
        "Q^(3/2+eps) / k"
    };
    let record = |kind, value: u64, density: Rational| StatRecord {
        kind,
        order,
        parameter: Parameter::Region { k, t },
        exact: ExactValue::Integer(u128::from(value)),
        prediction: Prediction::Rational(density * &scale),
        error_form,
    };
    Ok([
        record(StatKind::Lower, l, lower_frequency(k)),
        record(StatKind::Upper, u, upper_frequency(k)),
    ])
}
