//! Streaming Farey sequences and the index `ν_Q`.
//!
//! `F_Q` is taken as the increasing list `1/Q = γ_1 < … < γ_N = 1` of reduced
//! fractions in `(0, 1]` with denominator at most `Q`, extended past `1` by
//! `γ_{i+N} = γ_i + 1`; its predecessor `γ_0` is `0/1`. Consecutive elements
//! satisfy `a' q - a q' = 1` and `q + q' > Q`, and the next denominator is a
//! function of the previous two, which is what makes O(1) stepping possible.
//!
//! Machine words are `u64` with `u128` for every product, so orders up to
//! [`MAX_ORDER`] are exact.

mod seek;
mod sieve;
mod walker;

pub use seek::{neighbor_numerators, seek};
pub use sieve::{totient_summatory, totients};
pub use walker::{DenominatorWalker, FareyWalker};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

/// Largest supported order. Keeps `2Q + 1` and every `k * q` below `2^63`.
pub const MAX_ORDER: u64 = 1 << 61;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FareyError {
    #[error("Farey order must be at least 1")]
    ZeroOrder,
    #[error("Farey order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(u64),
    #[error("fraction {0} is not reduced or has a zero denominator")]
    BadFraction(String),
    #[error("fraction {0} lies outside [0, 1]")]
    OutOfUnitInterval(Fraction),
    #[error("denominators {q} and {q2} are not coprime")]
    NotCoprime { q: u64, q2: u64 },
    #[error("denominators ({q}, {q2}) are not a consecutive pair of order {order}")]
    NotConsecutive { q: u64, q2: u64, order: u64 },
}

pub(crate) fn check_order(order: u64) -> Result<(), FareyError> {
    match order {
        0 => Err(FareyError::ZeroOrder),
        q if q > MAX_ORDER => Err(FareyError::OrderTooLarge(q)),
        _ => Ok(()),
    }
}

/// A reduced nonnegative fraction `num/den`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u64,
    den: u64,
}

impl Fraction {
    /// Reduced fraction; rejects zero denominators and non-reduced input.
    pub fn new(num: u64, den: u64) -> Result<Self, FareyError> {
        if den == 0 || num.gcd(&den) != 1 {
            return Err(FareyError::BadFraction(format!("{num}/{den}")));
        }
        Ok(Fraction { num, den })
    }

    /// Reduces `num/den` first.
    pub fn reduced(num: u64, den: u64) -> Result<Self, FareyError> {
        if den == 0 {
            return Err(FareyError::BadFraction(format!("{num}/{den}")));
        }
        let g = num.gcd(&den);
        Ok(Fraction {
            num: num / g,
            den: den / g,
        })
    }

    pub(crate) const fn raw(num: u64, den: u64) -> Self {
        Fraction { num, den }
    }

    pub const fn zero() -> Self {
        Fraction { num: 0, den: 1 }
    }

    pub const fn one() -> Self {
        Fraction { num: 1, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn in_unit_interval(&self) -> bool {
        self.num <= self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (u128::from(self.num) * u128::from(other.den))
            .cmp(&(u128::from(other.num) * u128::from(self.den)))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = FareyError;

    /// Parses `"p/q"` or an integer `"p"`, reducing as needed.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FareyError::BadFraction(s.to_string());
        let s = s.trim();
        let (n, d) = s.split_once('/').unwrap_or((s, "1"));
        let n: u64 = n.trim().parse().map_err(|_| bad())?;
        let d: u64 = d.trim().parse().map_err(|_| bad())?;
        Fraction::reduced(n, d)
    }
}
