//! Exact index statistics of `F_Q` and their limiting predictions.
//!
//! Every sum runs over one period `γ_1, …, γ_N` of the extended sequence, so
//! `ν_Q(γ_{i+h})` wraps around with period `N(Q)`. Enumeration is exact
//! integer arithmetic; floating point enters only in predictions involving
//! irrational constants and in non-integer moments.

mod analytic;
mod engine;
mod lattice;
mod record;
mod sums;

pub use analytic::{euler_gamma, second_moment_prediction, zeta2_log_derivative};
pub use engine::{fold_indices, IndexSample, Interval, Workers};
pub use lattice::visible_points_count;
pub use record::{
    autocorrelation_record, format_real, lower_upper_records, moment_record,
    moment_record_with_constant, partial_sum_record, second_moment_record, ExactValue, Parameter,
    Prediction, StatKind, StatRecord,
};
pub use sums::{
    autocorr_sum, autocorr_sum_interval, autocorr_sum_over, hall_shiu_identity, index_histogram,
    lower_count_identity, lu_counts, partial_index_sum, shifted_count_identity, sum_index,
    sum_index_power, sum_index_squared, sum_index_squared_asymptotic, IdentityCheck, Moment,
};

use thiserror::Error;

use crate::bcz::BczError;
use crate::farey::{FareyError, Fraction};

#[derive(Debug, Clone, Error)]
pub enum StatsError {
    #[error(transparent)]
    Farey(#[from] FareyError),
    #[error(transparent)]
    Bcz(#[from] BczError),
    #[error("({0}, {1}] is not a subinterval of [0, 1]")]
    BadInterval(Fraction, Fraction),
    #[error("exponent {0} must be positive and finite")]
    BadExponent(f64),
    #[error("{0} must be at least 1")]
    ZeroParameter(&'static str),
    #[error("order {0} is too small for this statistic")]
    OrderTooSmall(u64),
    #[error("integer overflow while accumulating {0}")]
    Overflow(&'static str),
    #[error("could not start worker threads: {0}")]
    ThreadPool(String),
}
