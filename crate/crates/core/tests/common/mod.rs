//! Shared test support: a brute-force Farey oracle and the published area tables.

#![allow(dead_code)]

use farey_index::geometry::{ratio, Rational};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `F_Q ∩ (0, 1]` built by sorting every reduced fraction, with indices taken
/// from neighbours, `ν_i = (q_{i−1} + q_{i+1}) / q_i`, cyclically.
pub struct BruteFarey {
    pub order: u64,
    pub fracs: Vec<(u64, u64)>,
    pub index: Vec<u64>,
}

impl BruteFarey {
    pub fn new(order: u64) -> Self {
        let mut fracs = Vec::new();
        for q in 1..=order {
            for a in 1..=q {
                if gcd(a, q) == 1 {
                    fracs.push((a, q));
                }
            }
        }
        fracs.sort_by(|x, y| (x.0 * y.1).cmp(&(y.0 * x.1)));
        let n = fracs.len();
        let index = (0..n)
            .map(|i| {
                let prev = fracs[(i + n - 1) % n].1;
                let next = fracs[(i + 1) % n].1;
                let q = fracs[i].1;
                assert_eq!((prev + next) % q, 0);
                (prev + next) / q
            })
            .collect();
        BruteFarey {
            order,
            fracs,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.fracs.len()
    }

    fn at_most(&self, i: usize, t: (u64, u64)) -> bool {
        self.fracs[i].0 * t.1 <= t.0 * self.fracs[i].1
    }

    fn above(&self, i: usize, lo: (u64, u64)) -> bool {
        self.fracs[i].0 * lo.1 > lo.0 * self.fracs[i].1
    }

    /// `Σ_{lo < γ_i ≤ hi} ν_i ν_{i+h}`.
    pub fn autocorr_between(&self, h: usize, lo: (u64, u64), hi: (u64, u64)) -> u128 {
        let n = self.len();
        (0..n)
            .filter(|&i| self.above(i, lo) && self.at_most(i, hi))
            .map(|i| u128::from(self.index[i]) * u128::from(self.index[(i + h) % n]))
            .sum()
    }

    pub fn autocorr(&self, h: usize, t: (u64, u64)) -> u128 {
        self.autocorr_between(h, (0, 1), t)
    }

    pub fn partial(&self, t: (u64, u64)) -> u128 {
        (0..self.len())
            .filter(|&i| self.at_most(i, t))
            .map(|i| u128::from(self.index[i]))
            .sum()
    }

    /// `(L, U)` restricted to `γ_i ≤ t`.
    pub fn lower_upper(&self, k: u64, t: (u64, u64)) -> (u64, u64) {
        let top = 2 * self.order + 1;
        let mut l = 0;
        let mut u = 0;
        for i in (0..self.len()).filter(|&i| self.at_most(i, t)) {
            let q = self.fracs[i].1;
            if self.index[i] == k && top / q == k + 1 {
                l += 1;
            }
            if self.index[i] == k && top / q == k {
                u += 1;
            }
        }
        (l, u)
    }
}

/// `2/(m(m+1))`, the area of `T_m*`.
pub fn star(m: i64) -> Rational {
    ratio(2, m * (m + 1))
}

/// `area(T T_m* ∩ T_n*)` for `m, n ≤ 4`.
pub fn table_one() -> Vec<Vec<Rational>> {
    let r = |a, b| ratio(a, b);
    vec![
        vec![r(1, 2), r(1, 3), r(1, 6), r(1, 10)],
        vec![r(1, 3), r(1, 6), r(1, 30), r(1, 210)],
        vec![r(1, 6), r(1, 30), r(0, 1), r(0, 1)],
        vec![r(1, 10), r(1, 210), r(0, 1), r(0, 1)],
    ]
}

/// Entry `(m, n)` of the first table for `max(m, n) ≥ 5`.
pub fn table_one_family(m: i64, n: i64) -> Rational {
    match (m, n) {
        (1, n) => star(n),
        (m, 1) => star(m),
        _ => ratio(0, 1),
    }
}

/// `area(T² T_m* ∩ T_n*)` for `m, n ≤ 8`.
pub fn table_two() -> Vec<Vec<Rational>> {
    let r = |a, b| ratio(a, b);
    let z = || ratio(0, 1);
    vec![
        vec![
            r(1, 2),
            r(1, 3),
            r(1, 6),
            r(1, 10),
            r(1, 15),
            r(1, 21),
            r(1, 28),
            r(1, 36),
        ],
        vec![
            r(1, 3),
            r(23, 84),
            r(31, 210),
            r(2, 21),
            r(1, 15),
            r(1, 21),
            r(1, 28),
            r(1, 36),
        ],
        vec![
            r(1, 6),
            r(31, 210),
            r(1, 10),
            r(13, 210),
            r(1, 30),
            r(1, 70),
            r(1, 220),
            r(1, 1170),
        ],
        vec![
            r(1, 10),
            r(2, 21),
            r(13, 210),
            r(1, 42),
            r(1, 231),
            z(),
            z(),
            z(),
        ],
        vec![r(1, 15), r(1, 15), r(1, 30), r(1, 231), z(), z(), z(), z()],
        vec![r(1, 21), r(1, 21), r(1, 70), z(), z(), z(), z(), z()],
        vec![r(1, 28), r(1, 28), r(1, 220), z(), z(), z(), z(), z()],
        vec![r(1, 36), r(1, 36), r(1, 1170), z(), z(), z(), z(), z()],
    ]
}

/// Entry `(m, n)` of the second table for `max(m, n) ≥ 9`.
pub fn table_two_family(m: i64, n: i64) -> Rational {
    match (m, n) {
        (1 | 2, n) => star(n),
        (m, 1 | 2) => star(m),
        _ => ratio(0, 1),
    }
}

/// Sampled indices for the infinite rows and columns.
pub const FAMILY_SAMPLES: [i64; 5] = [5, 10, 20, 50, 100];
