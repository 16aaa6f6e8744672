use farey_index::geometry::{
    apply_map, clip_convex, polygon_area, ratio, ConvexPolygon, Point2, Rational, UnimodularMap,
};
use proptest::prelude::*;

type P = (i64, i64);

fn turn(o: P, a: P, b: P) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Monotone-chain hull, counter-clockwise, collinear points dropped.
fn hull(mut pts: Vec<P>) -> Vec<P> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<P> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<P> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn twice_area(h: &[P]) -> i64 {
    if h.len() < 3 {
        return 0;
    }
    (0..h.len())
        .map(|i| {
            let (a, b) = (h[i], h[(i + 1) % h.len()]);
            a.0 * b.1 - a.1 * b.0
        })
        .sum()
}

fn polygon(h: &[P]) -> ConvexPolygon {
    let vs = h.iter().map(|&(x, y)| Point2::frac(x, 1, y, 1)).collect();
    ConvexPolygon::new(vs).unwrap()
}

fn points() -> impl Strategy<Value = Vec<P>> {
    prop::collection::vec((-8i64..=8, -8i64..=8), 3..9)
}

fn map() -> impl Strategy<Value = UnimodularMap> {
    ((-4i64..=4), (-4i64..=4), (-4i64..=4), (-4i64..=4))
        .prop_filter_map("unimodular", |(a, b, c, d)| {
            UnimodularMap::new(a, b, c, d).ok()
        })
}

/// Area of a union of axis-aligned rectangles by coordinate compression.
fn union_area(rects: &[(i64, i64, i64, i64)]) -> i64 {
    let mut xs: Vec<i64> = rects.iter().flat_map(|r| [r.0, r.2]).collect();
    let mut ys: Vec<i64> = rects.iter().flat_map(|r| [r.1, r.3]).collect();
    xs.sort();
    xs.dedup();
    ys.sort();
    ys.dedup();
    let mut total = 0;
    for xw in xs.windows(2) {
        for yw in ys.windows(2) {
            let covered = rects
                .iter()
                .any(|r| r.0 <= xw[0] && xw[1] <= r.2 && r.1 <= yw[0] && yw[1] <= r.3);
            if covered {
                total += (xw[1] - xw[0]) * (yw[1] - yw[0]);
            }
        }
    }
    total
}

proptest! {
    #[test]
    fn area_matches_integer_shoelace(pts in points()) {
        let h = hull(pts);
        prop_assume!(twice_area(&h) > 0);
        let p = polygon(&h);
        prop_assert_eq!(polygon_area(&p), ratio(twice_area(&h), 2));
    }

    #[test]
    fn clip_is_bounded_and_symmetric(a in points(), b in points()) {
        let (ha, hb) = (hull(a), hull(b));
        prop_assume!(twice_area(&ha) > 0 && twice_area(&hb) > 0);
        let (p, q) = (polygon(&ha), polygon(&hb));
        let pq = clip_convex(&p, &q);
        let qp = clip_convex(&q, &p);
        prop_assert!(pq.area() <= p.area().min(q.area()));
        prop_assert_eq!(pq.area(), qp.area());
        prop_assert_eq!(pq, qp);
    }

    #[test]
    fn clip_membership_is_conjunction(
        a in points(),
        b in points(),
        probes in prop::collection::vec((-40i64..=40, -40i64..=40), 20),
    ) {
        let (ha, hb) = (hull(a), hull(b));
        prop_assume!(twice_area(&ha) > 0 && twice_area(&hb) > 0);
        let (p, q) = (polygon(&ha), polygon(&hb));
        let pq = clip_convex(&p, &q);
        for (x, y) in probes {
            let pt = Point2::frac(x, 5, y, 5);
            let both = p.contains(&pt) && q.contains(&pt);
            // degenerate overlaps (segments, points) normalize to empty
            if pq.is_empty() {
                prop_assert!(!both || p.clip(&q).area().is_zero());
            } else {
                prop_assert_eq!(pq.contains(&pt), both, "point {:?}", pt);
            }
        }
    }

    #[test]
    fn unimodular_maps_preserve_area(pts in points(), m in map(), tx in -5i64..5, ty in -5i64..5) {
        let h = hull(pts);
        prop_assume!(twice_area(&h) > 0);
        let p = polygon(&h);
        let image = apply_map(&p, &m, &Point2::frac(tx, 3, ty, 7)).unwrap();
        prop_assert_eq!(image.area(), p.area());
    }

    #[test]
    fn inclusion_exclusion_on_rectangles(
        a in (-6i64..6, -6i64..6, 1i64..6, 1i64..6),
        b in (-6i64..6, -6i64..6, 1i64..6, 1i64..6),
    ) {
        let ra = (a.0, a.1, a.0 + a.2, a.1 + a.3);
        let rb = (b.0, b.1, b.0 + b.2, b.1 + b.3);
        let rect = |r: (i64, i64, i64, i64)| {
            ConvexPolygon::rectangle(Rational::from(r.0), Rational::from(r.1), Rational::from(r.2), Rational::from(r.3))
        };
        let (p, q) = (rect(ra), rect(rb));
        let union = Rational::from(union_area(&[ra, rb]));
        prop_assert_eq!(p.area() + q.area(), clip_convex(&p, &q).area() + union);
    }
}

#[test]
fn degenerate_overlap_is_empty() {
    let p = ConvexPolygon::rectangle(
        Rational::from(0),
        Rational::from(0),
        Rational::from(1),
        Rational::from(1),
    );
    let q = ConvexPolygon::rectangle(
        Rational::from(1),
        Rational::from(0),
        Rational::from(2),
        Rational::from(1),
    );
    assert!(clip_convex(&p, &q).is_empty());
}
