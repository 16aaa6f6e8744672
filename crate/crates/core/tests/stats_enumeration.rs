mod common;

use common::BruteFarey;
use farey_index::bcz::{
    autocorrelation_constant, b_alpha, farey_triangle, lower_frequency, region_polygon,
    upper_frequency,
};
use farey_index::farey::{totient_summatory, totients, Fraction};
use farey_index::stats::{
    autocorr_sum, autocorr_sum_interval, autocorr_sum_over, hall_shiu_identity, index_histogram,
    lower_count_identity, lu_counts, partial_index_sum, shifted_count_identity, sum_index,
    sum_index_power, sum_index_squared, visible_points_count, Interval, Moment, Workers,
};

const ONE: Workers = Workers::single();

fn f(n: u64, d: u64) -> Fraction {
    Fraction::reduced(n, d).unwrap()
}

const CUTS: [(u64, u64); 8] = [
    (0, 1),
    (1, 7),
    (1, 4),
    (1, 3),
    (1, 2),
    (3, 5),
    (5, 6),
    (1, 1),
];

#[test]
fn walker_sums_equal_brute_force() {
    for q in 1..=40u64 {
        let b = BruteFarey::new(q);
        for h in [1u64, 2, 3, 5, 8] {
            assert_eq!(
                autocorr_sum(q, h, ONE).unwrap(),
                b.autocorr(h as usize, (1, 1)),
                "Q={q} h={h}"
            );
            for &(n, d) in &CUTS[1..] {
                assert_eq!(
                    autocorr_sum_interval(q, h, f(n, d), ONE).unwrap(),
                    b.autocorr(h as usize, (n, d)),
                    "Q={q} h={h} t={n}/{d}"
                );
            }
        }
        for &(n, d) in &CUTS {
            assert_eq!(
                partial_index_sum(q, f(n, d), ONE).unwrap(),
                b.partial((n, d)),
                "Q={q}"
            );
        }
        for k in 1..=12 {
            for &(n, d) in &CUTS[1..] {
                assert_eq!(
                    lu_counts(q, k, f(n, d), ONE).unwrap(),
                    b.lower_upper(k, (n, d)),
                    "Q={q} k={k}"
                );
            }
        }
    }
}

#[test]
fn results_do_not_depend_on_worker_count() {
    for q in [1u64, 13, 97, 400] {
        for w in [2, 4, 7] {
            let many = Workers::new(w);
            assert_eq!(sum_index(q, many).unwrap(), sum_index(q, ONE).unwrap());
            assert_eq!(
                autocorr_sum(q, 3, many).unwrap(),
                autocorr_sum(q, 3, ONE).unwrap()
            );
            assert_eq!(
                autocorr_sum_interval(q, 2, f(2, 5), many).unwrap(),
                autocorr_sum_interval(q, 2, f(2, 5), ONE).unwrap()
            );
            assert_eq!(
                index_histogram(q, Interval::full(), many).unwrap(),
                index_histogram(q, Interval::full(), ONE).unwrap()
            );
            assert_eq!(
                lu_counts(q, 2, Fraction::one(), many).unwrap(),
                lu_counts(q, 2, Fraction::one(), ONE).unwrap()
            );
        }
    }
}

#[test]
fn index_sum_is_three_n_minus_one() {
    for q in 1..=300 {
        let n = u128::from(totient_summatory(q).unwrap());
        assert_eq!(sum_index(q, ONE).unwrap(), 3 * n - 1, "Q={q}");
    }
}

#[test]
fn lower_count_closed_forms() {
    let phi = totients(401);
    for q in 1..=200u64 {
        assert!(lower_count_identity(q, ONE).unwrap().holds(), "Q={q}");
        assert!(shifted_count_identity(q, ONE).unwrap().holds(), "Q={q}");
        // the quoted form is short by the multiples-sharing part of 2Q + 1
        let c = hall_shiu_identity(q, ONE).unwrap();
        let m = 2 * q + 1;
        assert_eq!(c.lhs - c.rhs, i128::from(m - phi[m as usize]), "Q={q}");
    }
}

#[test]
fn lag_of_one_period_gives_squares() {
    for q in 1..=50 {
        let n = totient_summatory(q).unwrap();
        assert_eq!(
            autocorr_sum(q, n, ONE).unwrap(),
            sum_index_squared(q, ONE).unwrap(),
            "Q={q}"
        );
    }
}

#[test]
fn subinterval_sums_add_up() {
    let cuts = [f(0, 1), f(1, 5), f(2, 7), f(1, 2), f(5, 7), f(1, 1)];
    for q in 1..=100 {
        for h in [1, 4] {
            for (i, &t1) in cuts.iter().enumerate() {
                for &t2 in &cuts[i..] {
                    let head = autocorr_sum_interval(q, h, t1, ONE).unwrap();
                    let middle =
                        autocorr_sum_over(q, h, Interval::new(t1, t2).unwrap(), ONE).unwrap();
                    assert_eq!(head + middle, autocorr_sum_interval(q, h, t2, ONE).unwrap());
                }
            }
        }
    }
}

#[test]
fn lower_and_upper_partition_a_subset() {
    for q in 1..=100 {
        let hist = index_histogram(q, Interval::full(), ONE).unwrap();
        for k in 1..=20u64 {
            let (l, u) = lu_counts(q, k, Fraction::one(), ONE).unwrap();
            let total = hist.get(k as usize).copied().unwrap_or(0);
            assert!(l + u <= total, "Q={q} k={k}");
        }
        assert_eq!(lu_counts(q, 1, Fraction::one(), ONE).unwrap().1, 0);
    }
}

#[test]
fn integer_moments_are_exact() {
    for q in 1..=60 {
        let b = BruteFarey::new(q);
        let squares: u128 = b.index.iter().map(|&v| u128::from(v * v)).sum();
        let cubes: u128 = b.index.iter().map(|&v| u128::from(v * v * v)).sum();
        assert_eq!(
            sum_index_power(q, 1.0, ONE).unwrap(),
            Moment::Exact(sum_index(q, ONE).unwrap())
        );
        assert_eq!(
            sum_index_power(q, 2.0, ONE).unwrap(),
            Moment::Exact(squares)
        );
        assert_eq!(sum_index_power(q, 3.0, ONE).unwrap(), Moment::Exact(cubes));
        let half: f64 = b.index.iter().map(|&v| (v as f64).sqrt()).sum();
        let Moment::Real(got) = sum_index_power(q, 0.5, ONE).unwrap() else {
            panic!()
        };
        assert!((got - half).abs() <= 1e-9 * half);
    }
}

/// `B_α` from the closed-form region areas, summed directly far out.
fn b_alpha_series(alpha: f64) -> f64 {
    let k_max = 2_000_000u64;
    let head: f64 = (2..=k_max)
        .rev()
        .map(|k| {
            let k = k as f64;
            k.powf(alpha) * 4.0 / (k * (k + 1.0) * (k + 2.0))
        })
        .sum();
    // Σ_{k > K} 4 k^{α−3} ≈ ∫_{K+1/2}^∞ 4 x^{α−3} dx
    let tail = 4.0 * (k_max as f64 + 0.5).powf(alpha - 2.0) / (2.0 - alpha);
    1.0 / 6.0 + head + tail
}

#[test]
fn b_alpha_agrees_with_direct_series() {
    for alpha in [0.25, 0.5, 1.0, 1.25, 1.5] {
        let b = b_alpha(alpha, 1e-7).unwrap();
        let oracle = b_alpha_series(alpha);
        assert!(
            (b.value() - oracle).abs() < 1e-6,
            "alpha={alpha}: {} vs {oracle}",
            b.value()
        );
    }
}

#[test]
fn visible_points_have_density_six_over_pi_squared() {
    let density = 6.0 / std::f64::consts::PI.powi(2);
    for k in 1..=3u64 {
        let region = region_polygon(k);
        let area = region.area().to_f64();
        let mut last = f64::INFINITY;
        for q in [100u64, 400, 1600] {
            let count = visible_points_count(&region, q) as f64;
            let dev = (count / (density * area * (q * q) as f64) - 1.0).abs();
            assert!(dev < last.max(0.02), "k={k} Q={q} dev={dev}");
            last = dev;
        }
        assert!(last < 0.01, "k={k} final deviation {last}");
    }
    assert_eq!(
        visible_points_count(&farey_triangle(), 300),
        totient_summatory(300).unwrap()
    );
}

/// Deviations `|S_h(Q)/(A(h)N(Q)) − 1|` along a doubling sequence of orders.
fn deviations(h: u64, orders: &[u64]) -> Vec<f64> {
    let a = autocorrelation_constant(h).unwrap().value.to_f64();
    orders
        .iter()
        .map(|&q| {
            let s = autocorr_sum(q, h, Workers::new(4)).unwrap() as f64;
            let n = totient_summatory(q).unwrap() as f64;
            (s / (a * n) - 1.0).abs()
        })
        .collect()
}

const ORDERS: [u64; 4] = [500, 1000, 2000, 4000];

#[test]
fn deviation_stays_inside_log_squared_envelope() {
    for h in [1, 2] {
        for (q, dev) in ORDERS.iter().zip(deviations(h, &ORDERS)) {
            let q = *q as f64;
            let n = totient_summatory(q as u64).unwrap() as f64;
            assert!(
                dev <= 0.01 * q * q.ln().powi(2) / n,
                "h={h} Q={q} dev={dev}"
            );
        }
    }
}

#[test]
fn deviation_decreases_along_doubling_orders() {
    // each step may grow by at most a factor 1.5
    for h in [1, 2] {
        let devs = deviations(h, &ORDERS);
        for i in 1..devs.len() {
            assert!(
                devs[i] <= 1.5 * devs[i - 1],
                "h={h}: |ratio − 1| went from {:.3e} at Q={} to {:.3e} at Q={}",
                devs[i - 1],
                ORDERS[i - 1],
                devs[i],
                ORDERS[i]
            );
        }
    }
}

#[test]
fn lower_upper_densities_at_moderate_order() {
    let q = 1000;
    let n = totient_summatory(q).unwrap() as f64;
    let (l, _) = lu_counts(q, 2, Fraction::one(), ONE).unwrap();
    assert!((l as f64 / (lower_frequency(2).to_f64() * n) - 1.0).abs() < 0.05);
    let (_, u) = lu_counts(q, 3, Fraction::one(), ONE).unwrap();
    assert!((u as f64 / (upper_frequency(3).to_f64() * n) - 1.0).abs() < 0.05);
}
