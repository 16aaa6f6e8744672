//! The intersection-area tables for one and two steps as published, used to
//! flag regressions in `tables`.

use farey_index::geometry::{ratio, Rational};

fn star(m: u64) -> Rational {
    ratio(2, (m * (m + 1)) as i64)
}

const ONE_STEP: [[(i64, i64); 4]; 4] = [
    [(1, 2), (1, 3), (1, 6), (1, 10)],
    [(1, 3), (1, 6), (1, 30), (1, 210)],
    [(1, 6), (1, 30), (0, 1), (0, 1)],
    [(1, 10), (1, 210), (0, 1), (0, 1)],
];

const TWO_STEPS: [[(i64, i64); 8]; 8] = [
    [
        (1, 2),
        (1, 3),
        (1, 6),
        (1, 10),
        (1, 15),
        (1, 21),
        (1, 28),
        (1, 36),
    ],
    [
        (1, 3),
        (23, 84),
        (31, 210),
        (2, 21),
        (1, 15),
        (1, 21),
        (1, 28),
        (1, 36),
    ],
    [
        (1, 6),
        (31, 210),
        (1, 10),
        (13, 210),
        (1, 30),
        (1, 70),
        (1, 220),
        (1, 1170),
    ],
    [
        (1, 10),
        (2, 21),
        (13, 210),
        (1, 42),
        (1, 231),
        (0, 1),
        (0, 1),
        (0, 1),
    ],
    [
        (1, 15),
        (1, 15),
        (1, 30),
        (1, 231),
        (0, 1),
        (0, 1),
        (0, 1),
        (0, 1),
    ],
    [
        (1, 21),
        (1, 21),
        (1, 70),
        (0, 1),
        (0, 1),
        (0, 1),
        (0, 1),
        (0, 1),
    ],
    [
        (1, 28),
        (1, 28),
        (1, 220),
        (0, 1),
        (0, 1),
        (0, 1),
        (0, 1),
        (0, 1),
    ],
    [
        (1, 36),
        (1, 36),
        (1, 1170),
        (0, 1),
        (0, 1),
        (0, 1),
        (0, 1),
        (0, 1),
    ],
];

/// Published `area(T^h T_m* ∩ T_n*)`, if known for this `h`.
pub fn entry(h: u64, m: u64, n: u64) -> Option<Rational> {
    let (block, full_rows): (usize, u64) = match h {
        1 => (4, 1),
        2 => (8, 2),
        _ => return None,
    };
    let (i, j) = (m as usize - 1, n as usize - 1);
    if i < block && j < block {
        let (p, q) = if h == 1 {
            ONE_STEP[i][j]
        } else {
            TWO_STEPS[i][j]
        };
        return Some(ratio(p, q));
    }
    // outside the block only the first rows and columns are nonzero
    Some(if m <= full_rows {
        star(n)
    } else if n <= full_rows {
        star(m)
    } else {
        Rational::zero()
    })
}
