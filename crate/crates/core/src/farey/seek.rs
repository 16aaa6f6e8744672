use num_integer::Integer;

use super::{check_order, FareyError, FareyWalker, Fraction};

/// Numerators of the consecutive pair with denominators `(q, q2)`.
///
/// Returns the `a ∈ [1, q]` and `a2` with `a2·q − a·q2 = 1`, found from the
/// inverse of `q2` modulo `q`. For `q ≥ 2` also `a2 ∈ [1, q2]`. For `q = 1`
/// (then `q2 = Q`) the pair is `1/1, (Q+1)/Q` from the extension, so
/// `a2 = Q + 1`.
pub fn neighbor_numerators(q: u64, q2: u64, order: u64) -> Result<(u64, u64), FareyError> {
    check_order(order)?;
    let in_range = (1..=order).contains(&q) && (1..=order).contains(&q2);
    if !in_range || q + q2 <= order {
        return Err(FareyError::NotConsecutive { q, q2, order });
    }
    if q.gcd(&q2) != 1 {
        return Err(FareyError::NotCoprime { q, q2 });
    }
    let a = if q == 1 {
        1
    } else {
        let ext = i128::from(q2 % q).extended_gcd(&i128::from(q));
        let inv = ext.x.rem_euclid(i128::from(q)) as u64;
        q - inv
    };
    let a2 = ((1 + u128::from(a) * u128::from(q2)) / u128::from(q)) as u64;
    Ok((a, a2))
}

/// Walker on the pair `prev ≤ t < curr` of consecutive elements of
/// `{0/1} ∪ F_Q` (extended past 1), found by Stern–Brocot descent with batched
/// steps, `O(log Q)` iterations.
///
/// When `t` itself has denominator `≤ Q` it becomes `prev`, so walking forward
/// from the result visits exactly `F_Q ∩ (t, 1]` before passing 1.
pub fn seek(order: u64, t: Fraction) -> Result<FareyWalker, FareyError> {
    check_order(order)?;
    if !t.in_unit_interval() {
        return Err(FareyError::OutOfUnitInterval(t));
    }
    let (p, q) = (u128::from(t.num()), u128::from(t.den()));
    let big_q = u128::from(order);
    // left <= t < right, left = a/b, right = c/d; right starts at 1/0.
    let (mut a, mut b, mut c, mut d) = (0u128, 1u128, 1u128, 0u128);
    loop {
        if b + d > big_q {
            break;
        }
        let (mn, md) = (a + c, b + d);
        if mn * q <= p * md {
            // mediant <= t: move left boundary right, left += k * right
            let num = p * b - q * a;
            let den = q * c - p * d; // > 0 since right > t
            let mut k = num / den;
            if let Some(room) = (big_q - b).checked_div(d) {
                k = k.min(room);
            }
            a += k * c;
            b += k * d;
        } else {
            // mediant > t: move right boundary left, right += k * left
            let gap = p * b - q * a; // >= 0
            let mut k = (big_q - d) / b;
            if let Some(room) = (q * c - p * d - 1).checked_div(gap) {
                k = k.min(room);
            }
            c += k * a;
            d += k * b;
        }
    }
    Ok(FareyWalker::from_pair_unchecked(
        order,
        Fraction::raw(a as u64, b as u64),
        Fraction::raw(c as u64, d as u64),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: u64, d: u64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    #[test]
    fn neighbor_examples() {
        assert_eq!(neighbor_numerators(2, 1, 2).unwrap(), (1, 1));
        assert_eq!(neighbor_numerators(5, 4, 5).unwrap(), (1, 1));
        assert_eq!(neighbor_numerators(3, 2, 4).unwrap(), (1, 1));
        assert_eq!(neighbor_numerators(1, 7, 7).unwrap(), (1, 8));
        assert_eq!(neighbor_numerators(4, 3, 5).unwrap(), (1, 1));
        // 3/5, 2/3 in F_7
        assert_eq!(neighbor_numerators(5, 3, 7).unwrap(), (3, 2));
    }

    #[test]
    fn neighbor_rejects() {
        assert!(matches!(
            neighbor_numerators(4, 2, 5),
            Err(FareyError::NotCoprime { .. })
        ));
        assert!(matches!(
            neighbor_numerators(2, 3, 5),
            Err(FareyError::NotConsecutive { .. })
        ));
        assert!(matches!(
            neighbor_numerators(6, 1, 5),
            Err(FareyError::NotConsecutive { .. })
        ));
    }

    #[test]
    fn seek_examples() {
        let w = seek(5, Fraction::zero()).unwrap();
        assert_eq!((w.prev(), w.curr()), (f(0, 1), f(1, 5)));
        let w = seek(5, f(1, 2)).unwrap();
        assert_eq!((w.prev(), w.curr()), (f(1, 2), f(3, 5)));
        let w = seek(3, f(3, 5)).unwrap();
        assert_eq!((w.prev(), w.curr()), (f(1, 2), f(2, 3)));
        let w = seek(4, Fraction::one()).unwrap();
        assert_eq!((w.prev(), w.curr()), (f(1, 1), f(5, 4)));
        assert!(seek(4, f(3, 2)).is_err());
    }
}
