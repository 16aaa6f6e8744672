//! The Farey triangle and its decomposition into the regions `T_k`.

use crate::geometry::{ratio, ConvexPolygon, Point2, Rational};

fn pt(xn: u64, xd: u64, yn: u64, yd: u64) -> Point2 {
    Point2::frac(xn as i64, xd as i64, yn as i64, yd as i64)
}

/// `T = {(x, y) ∈ [0,1]² : x + y > 1}` as the closed triangle `(0,1), (1,0), (1,1)`.
pub fn farey_triangle() -> ConvexPolygon {
    ConvexPolygon::triangle(pt(0, 1, 1, 1), pt(1, 1, 0, 1), pt(1, 1, 1, 1))
}

/// Closure of `T_k = {(x, y) ∈ T : ⌊(1+x)/y⌋ = k}`.
///
/// `T_1` is the triangle `(0,1), (1,1), (1/3, 2/3)`; for `k ≥ 2` it is the
/// quadrilateral bounded by the lines `y = (1+x)/k`, `y = (1+x)/(k+1)`, `x = 1`
/// and `x + y = 1`.
pub fn region_polygon(k: u64) -> ConvexPolygon {
    assert!(k >= 1, "region index starts at 1");
    if k == 1 {
        return ConvexPolygon::triangle(pt(0, 1, 1, 1), pt(1, 1, 1, 1), pt(1, 3, 2, 3));
    }
    ConvexPolygon::new(vec![
        pt(k - 1, k + 1, 2, k + 1),
        pt(k, k + 2, 2, k + 2),
        pt(1, 1, 2, k + 1),
        pt(1, 1, 2, k),
    ])
    .expect("region quadrilateral is convex")
}

/// Closure of `T_k* = T_k ∪ T_{k+1} ∪ …`, i.e. `{(x, y) ∈ T : y ≤ (1+x)/k}`.
pub fn region_star_polygon(k: u64) -> ConvexPolygon {
    assert!(k >= 1, "region index starts at 1");
    if k == 1 {
        return farey_triangle();
    }
    ConvexPolygon::triangle(pt(k - 1, k + 1, 2, k + 1), pt(1, 1, 0, 1), pt(1, 1, 2, k))
}

/// The upper and lower triangles `(T'_k, T''_k)` splitting `T_k` along `y = 2/(k+1)`.
///
/// `T'_1` is empty (and `T''_1 = T_1`).
pub fn upper_lower_triangles(k: u64) -> (ConvexPolygon, ConvexPolygon) {
    assert!(k >= 1, "region index starts at 1");
    let left = pt(k - 1, k + 1, 2, k + 1);
    let right = pt(1, 1, 2, k + 1);
    let upper = if k == 1 {
        ConvexPolygon::empty()
    } else {
        ConvexPolygon::triangle(pt(1, 1, 2, k), left.clone(), right.clone())
    };
    let lower = ConvexPolygon::triangle(pt(k, k + 2, 2, k + 2), left, right);
    (upper, lower)
}

/// `l_k = 4(1/(k+1)² − 1/(k+1) + 1/(k+2))`.
pub fn lower_frequency(k: u64) -> Rational {
    assert!(k >= 1);
    let k = k as i64;
    ratio(4, 1) * (ratio(1, (k + 1) * (k + 1)) - ratio(1, k + 1) + ratio(1, k + 2))
}

/// `u_1 = 0`, `u_k = 4(1/k − 1/(k+1) − 1/(k+1)²)` for `k ≥ 2`.
pub fn upper_frequency(k: u64) -> Rational {
    assert!(k >= 1);
    if k == 1 {
        return Rational::zero();
    }
    let k = k as i64;
    ratio(4, 1) * (ratio(1, k) - ratio(1, k + 1) - ratio(1, (k + 1) * (k + 1)))
}

/// `Σ_{m ≥ k} area(T_m*)` for `k ≥ 2`, which telescopes to `2/k` because
/// `area(T_m*) = 2/(m(m+1))`.
pub fn star_area_tail(k: u64) -> Rational {
    assert!(k >= 2, "tail of starred areas defined from k = 2");
    ratio(2, k as i64)
}

/// Half-plane description `y ≤ (1+x)/k` as `(a, b, c)` in `a x + b y ≤ c`.
pub(crate) fn below_line(k: u64) -> (Rational, Rational, Rational) {
    (ratio(-1, 1), Rational::from(k as i64), ratio(1, 1))
}

/// Half-plane description `y ≥ (1+x)/k` as `(a, b, c)` in `a x + b y ≤ c`.
pub(crate) fn above_line(k: u64) -> (Rational, Rational, Rational) {
    (ratio(1, 1), Rational::from(-(k as i64)), ratio(-1, 1))
}
