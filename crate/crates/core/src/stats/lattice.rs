//! Counting visible lattice points in dilated polygons.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::geometry::{ConvexPolygon, Rational};

/// Edge `a x + b y ≤ c` with integer coefficients, `(a, b)` the outward normal.
struct Edge {
    a: i128,
    b: i128,
    c: i128,
    /// Whether boundary points on this edge are counted.
    closed: bool,
}

fn to_i128(v: &BigInt) -> i128 {
    v.to_i128()
        .expect("polygon coordinates too large for lattice counting")
}

fn edges(p: &ConvexPolygon, scale: u64) -> Vec<Edge> {
    let vs = p.vertices();
    let s = Rational::from_integer(scale);
    (0..vs.len())
        .map(|i| {
            let (u, v) = (&vs[i], &vs[(i + 1) % vs.len()]);
            let a = &v.y - &u.y;
            let b = &u.x - &v.x;
            let c = (&a * &u.x + &b * &u.y) * &s;
            let l = a.denom().lcm(b.denom()).lcm(c.denom());
            let scaled = |r: &Rational| to_i128(&(r.numer() * (&l / r.denom())));
            let (a, b, c) = (scaled(&a), scaled(&b), scaled(&c));
            Edge {
                a,
                b,
                c,
                closed: a > 0 || (a == 0 && b > 0),
            }
        })
        .collect()
}

fn ceil(r: &Rational) -> BigInt {
    -(-r.clone()).floor()
}

/// Number of `(a, b) ∈ Z²` with `gcd(a, b) = 1` in `scale · p`.
///
/// Points on edges facing right (or straight up) are counted and the others
/// are not, so counts add up exactly over polygons tiling a region. With this
/// convention the unit square at scale `n` gives the pairs in `[1, n]²`, and
/// the Farey triangle at scale `Q` gives the `N(Q)` pairs `q, q' ≤ Q` with
/// `q + q' > Q`.
pub fn visible_points_count(p: &ConvexPolygon, scale: u64) -> u64 {
    if p.is_empty() || scale == 0 {
        return 0;
    }
    let s = Rational::from_integer(scale);
    let xs = p.vertices().iter().map(|v| &v.x * &s);
    let ys = p.vertices().iter().map(|v| &v.y * &s);
    let bound = |it: &mut dyn Iterator<Item = Rational>| {
        let vals: Vec<Rational> = it.collect();
        let lo = vals
            .iter()
            .cloned()
            .reduce(Rational::min)
            .expect("nonempty");
        let hi = vals.into_iter().reduce(Rational::max).expect("nonempty");
        (to_i128(&ceil(&lo)), to_i128(&hi.floor()))
    };
    let (x0, x1) = bound(&mut xs.into_iter());
    let (y0, y1) = bound(&mut ys.into_iter());
    let es = edges(p, scale);
    let mut count = 0u64;
    for x in x0..=x1 {
        for y in y0..=y1 {
            let inside = es.iter().all(|e| {
                let v = e.a * x + e.b * y;
                v < e.c || (v == e.c && e.closed)
            });
            if inside && x.abs().gcd(&y.abs()) == 1 {
                count += 1;
            }
        }
    }
    count
}
