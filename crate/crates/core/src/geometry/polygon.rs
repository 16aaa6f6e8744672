//! Convex polygons with exact rational vertices.
//!
//! A polygon is stored in canonical form: counterclockwise, no repeated or
//! collinear vertices, rotated to start at its lexicographically smallest vertex.
//! Anything with zero area (segments, points) collapses to the empty polygon, so
//! two polygons describing the same closed set compare equal.

use std::fmt;

use super::{GeometryError, Rational};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    /// Point with coordinates `xn/xd`, `yn/yd`.
    pub fn frac(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point2::new(Rational::new(xn, xd), Rational::new(yn, yd))
    }

    pub fn origin() -> Self {
        Point2::new(Rational::zero(), Rational::zero())
    }

    /// Mirror across the diagonal `x = y`.
    pub fn swapped(&self) -> Self {
        Point2::new(self.y.clone(), self.x.clone())
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `(b - a) x (c - a)`; positive when `a, b, c` turn left.
pub fn cross(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    let abx = &b.x - &a.x;
    let aby = &b.y - &a.y;
    let acx = &c.x - &a.x;
    let acy = &c.y - &a.y;
    abx * acy - aby * acx
}

/// Integer linear map `(x, y) -> (a x + b y, c x + d y)` with determinant `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl UnimodularMap {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, GeometryError> {
        let det = i128::from(a) * i128::from(d) - i128::from(b) * i128::from(c);
        if det.abs() != 1 {
            return Err(GeometryError::NotUnimodular { det });
        }
        Ok(UnimodularMap { a, b, c, d })
    }

    pub fn identity() -> Self {
        UnimodularMap {
            a: 1,
            b: 0,
            c: 0,
            d: 1,
        }
    }

    /// `(x, y) -> (y, x)`.
    pub fn swap() -> Self {
        UnimodularMap {
            a: 0,
            b: 1,
            c: 1,
            d: 0,
        }
    }

    /// The branch `(x, y) -> (y, k y - x)` of the Farey triangle map on region `k`.
    pub fn farey_branch(k: u64) -> Self {
        let k = i64::try_from(k).expect("region index fits in i64");
        UnimodularMap {
            a: 0,
            b: 1,
            c: -1,
            d: k,
        }
    }

    pub fn coefficients(&self) -> (i64, i64, i64, i64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn determinant(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        UnimodularMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    pub fn apply(&self, p: &Point2) -> Point2 {
        let (a, b, c, d) = (
            Rational::from(self.a),
            Rational::from(self.b),
            Rational::from(self.c),
            Rational::from(self.d),
        );
        Point2::new(&a * &p.x + &b * &p.y, &c * &p.x + &d * &p.y)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl fmt::Debug for ConvexPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.vertices.iter()).finish()
    }
}

impl ConvexPolygon {
    pub fn empty() -> Self {
        ConvexPolygon {
            vertices: Vec::new(),
        }
    }

    /// Builds a polygon from vertices listed in either cyclic orientation.
    ///
    /// Duplicate and collinear vertices are dropped; a result with zero area is
    /// the empty polygon. Fails if the vertex cycle is not convex.
    pub fn new(vertices: Vec<Point2>) -> Result<Self, GeometryError> {
        let poly = Self::normalized(vertices);
        let n = poly.vertices.len();
        for i in 0..n {
            let (a, b, c) = (
                &poly.vertices[i],
                &poly.vertices[(i + 1) % n],
                &poly.vertices[(i + 2) % n],
            );
            if cross(a, b, c).is_negative() {
                return Err(GeometryError::NotConvex);
            }
        }
        Ok(poly)
    }

    /// Triangle through three points; degenerate input gives the empty polygon.
    pub fn triangle(a: Point2, b: Point2, c: Point2) -> Self {
        Self::normalized(vec![a, b, c])
    }

    /// Axis-aligned rectangle `[x0, x1] x [y0, y1]`.
    pub fn rectangle(x0: Rational, y0: Rational, x1: Rational, y1: Rational) -> Self {
        Self::normalized(vec![
            Point2::new(x0.clone(), y0.clone()),
            Point2::new(x1.clone(), y0),
            Point2::new(x1, y1.clone()),
            Point2::new(x0, y1),
        ])
    }

    pub fn unit_square() -> Self {
        Self::rectangle(
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::one(),
        )
    }

    /// Canonical form of a vertex cycle that is already known to be convex
    /// (up to orientation and redundant vertices).
    fn normalized(mut vertices: Vec<Point2>) -> Self {
        vertices.dedup();
        while vertices.len() > 1 && vertices.first() == vertices.last() {
            vertices.pop();
        }
        if vertices.len() < 3 {
            return Self::empty();
        }
        let twice_area = shoelace(&vertices);
        if twice_area.is_zero() {
            return Self::empty();
        }
        if twice_area.is_negative() {
            vertices.reverse();
        }
        // Collinear (and backtracking) vertices contribute nothing to a convex hull
        // boundary; strip until stable.
        loop {
            let n = vertices.len();
            if n < 3 {
                return Self::empty();
            }
            let drop = (0..n).find(|&i| {
                let prev = &vertices[(i + n - 1) % n];
                let next = &vertices[(i + 1) % n];
                cross(prev, &vertices[i], next).is_zero()
            });
            match drop {
                Some(i) => {
                    vertices.remove(i);
                }
                None => break,
            }
        }
        let start = (0..vertices.len())
            .min_by(|&i, &j| vertices[i].cmp(&vertices[j]))
            .unwrap_or(0);
        vertices.rotate_left(start);
        ConvexPolygon { vertices }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn area(&self) -> Rational {
        polygon_area(self)
    }

    /// Closed point-membership test.
    pub fn contains(&self, p: &Point2) -> bool {
        let n = self.vertices.len();
        n >= 3
            && (0..n)
                .all(|i| !cross(&self.vertices[i], &self.vertices[(i + 1) % n], p).is_negative())
    }

    /// Smallest `y` over the vertices; `None` for the empty polygon.
    pub fn min_y(&self) -> Option<&Rational> {
        self.vertices.iter().map(|p| &p.y).min()
    }

    /// Mirror image across `x = y`.
    pub fn swapped(&self) -> Self {
        Self::normalized(self.vertices.iter().map(Point2::swapped).collect())
    }

    pub fn clip(&self, other: &ConvexPolygon) -> ConvexPolygon {
        clip_convex(self, other)
    }

    pub fn half_plane(&self, a: &Rational, b: &Rational, c: &Rational) -> ConvexPolygon {
        half_plane_clip(self, a, b, c, true)
    }
}

fn shoelace(vertices: &[Point2]) -> Rational {
    let n = vertices.len();
    (0..n)
        .map(|i| {
            let p = &vertices[i];
            let q = &vertices[(i + 1) % n];
            &p.x * &q.y - &q.x * &p.y
        })
        .sum()
}

/// Exact area; empty and degenerate polygons have area zero.
pub fn polygon_area(p: &ConvexPolygon) -> Rational {
    if p.vertices.len() < 3 {
        return Rational::zero();
    }
    shoelace(&p.vertices) / Rational::from(2)
}

/// Clips `p` to the half plane `a x + b y <= c`.
///
/// `closed = false` asks for the open half plane `a x + b y < c`. Polygons are
/// closed sets whose zero-area leftovers are discarded, so both variants return
/// the same polygon (the closure of the open intersection).
pub fn half_plane_clip(
    p: &ConvexPolygon,
    a: &Rational,
    b: &Rational,
    c: &Rational,
    closed: bool,
) -> ConvexPolygon {
    let _ = closed;
    assert!(
        !(a.is_zero() && b.is_zero()),
        "half plane needs a nonzero normal"
    );
    let n = p.vertices.len();
    if n == 0 {
        return ConvexPolygon::empty();
    }
    // slack >= 0 means inside
    let slack: Vec<Rational> = p
        .vertices
        .iter()
        .map(|v| c - (a * &v.x + b * &v.y))
        .collect();
    if slack.iter().all(|s| !s.is_negative()) {
        return p.clone();
    }
    if slack.iter().all(|s| !s.is_positive()) {
        return ConvexPolygon::empty();
    }
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let j = (i + 1) % n;
        let (si, sj) = (&slack[i], &slack[j]);
        if !si.is_negative() {
            out.push(p.vertices[i].clone());
        }
        if (si.is_positive() && sj.is_negative()) || (si.is_negative() && sj.is_positive()) {
            let t = si / &(si - sj);
            let (u, v) = (&p.vertices[i], &p.vertices[j]);
            out.push(Point2::new(
                &u.x + &t * &(&v.x - &u.x),
                &u.y + &t * &(&v.y - &u.y),
            ));
        }
    }
    ConvexPolygon::normalized(out)
}

/// Intersection of two convex polygons (Sutherland–Hodgman against each edge of `q`).
pub fn clip_convex(p: &ConvexPolygon, q: &ConvexPolygon) -> ConvexPolygon {
    if p.is_empty() || q.is_empty() {
        return ConvexPolygon::empty();
    }
    let n = q.vertices.len();
    let mut out = p.clone();
    for i in 0..n {
        let (u, v) = (&q.vertices[i], &q.vertices[(i + 1) % n]);
        // left of u->v:  dy*x - dx*y <= dy*u.x - dx*u.y
        let dx = &v.x - &u.x;
        let dy = &v.y - &u.y;
        let c = &dy * &u.x - &dx * &u.y;
        out = half_plane_clip(&out, &dy, &(-&dx), &c, true);
        if out.is_empty() {
            break;
        }
    }
    out
}

/// Image of `p` under `x -> m x + translation`.
pub fn apply_map(
    p: &ConvexPolygon,
    m: &UnimodularMap,
    translation: &Point2,
) -> Result<ConvexPolygon, GeometryError> {
    let det = m.determinant();
    if det.abs() != 1 {
        return Err(GeometryError::NotUnimodular { det: det.into() });
    }
    Ok(ConvexPolygon::normalized(
        p.vertices
            .iter()
            .map(|v| {
                let w = m.apply(v);
                Point2::new(w.x + &translation.x, w.y + &translation.y)
            })
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ratio;

    fn tri(
        a: (i64, i64, i64, i64),
        b: (i64, i64, i64, i64),
        c: (i64, i64, i64, i64),
    ) -> ConvexPolygon {
        ConvexPolygon::triangle(
            Point2::frac(a.0, a.1, a.2, a.3),
            Point2::frac(b.0, b.1, b.2, b.3),
            Point2::frac(c.0, c.1, c.2, c.3),
        )
    }

    fn first_region() -> ConvexPolygon {
        tri((0, 1, 1, 1), (1, 1, 1, 1), (1, 3, 2, 3))
    }

    #[test]
    fn areas() {
        assert_eq!(
            polygon_area(&tri((0, 1, 0, 1), (1, 1, 0, 1), (0, 1, 1, 1))),
            ratio(1, 2)
        );
        assert_eq!(polygon_area(&ConvexPolygon::empty()), Rational::zero());
        assert_eq!(polygon_area(&first_region()), ratio(1, 6));
    }

    #[test]
    fn canonical_form_is_orientation_and_rotation_free() {
        let a = Point2::frac(0, 1, 0, 1);
        let b = Point2::frac(1, 1, 0, 1);
        let c = Point2::frac(1, 1, 1, 1);
        let d = Point2::frac(1, 2, 0, 1);
        let p = ConvexPolygon::new(vec![c.clone(), b.clone(), d, a.clone()]).unwrap();
        let q = ConvexPolygon::new(vec![a, b, c]).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.vertices().len(), 3);
    }

    #[test]
    fn degenerate_is_empty() {
        let p = tri((0, 1, 0, 1), (1, 1, 1, 1), (2, 1, 2, 1));
        assert!(p.is_empty());
    }

    #[test]
    fn rejects_non_convex() {
        let v = vec![
            Point2::frac(0, 1, 0, 1),
            Point2::frac(2, 1, 0, 1),
            Point2::frac(1, 1, 1, 2),
            Point2::frac(2, 1, 2, 1),
            Point2::frac(0, 1, 2, 1),
        ];
        assert_eq!(ConvexPolygon::new(v), Err(GeometryError::NotConvex));
    }

    #[test]
    fn clip_examples() {
        let t1 = first_region();
        assert_eq!(clip_convex(&t1, &t1), t1);
        let sq = ConvexPolygon::unit_square();
        let shifted =
            apply_map(&sq, &UnimodularMap::identity(), &Point2::frac(2, 1, 0, 1)).unwrap();
        assert!(clip_convex(&sq, &shifted).is_empty());
        // touching along an edge is measure zero
        let touching =
            apply_map(&sq, &UnimodularMap::identity(), &Point2::frac(1, 1, 0, 1)).unwrap();
        assert!(clip_convex(&sq, &touching).is_empty());
    }

    #[test]
    fn half_plane_examples() {
        let sq = ConvexPolygon::unit_square();
        let left = half_plane_clip(&sq, &ratio(1, 1), &Rational::zero(), &ratio(1, 2), true);
        assert_eq!(left.area(), ratio(1, 2));
        let all = half_plane_clip(&sq, &ratio(1, 1), &ratio(1, 1), &ratio(5, 1), false);
        assert_eq!(all, sq);
        // Farey triangle minus its first region: x - 2y >= -1, i.e. -x + 2y <= 1
        let farey = tri((0, 1, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1));
        let rest = half_plane_clip(&farey, &ratio(-1, 1), &ratio(2, 1), &ratio(1, 1), true);
        assert_eq!(rest.area(), ratio(1, 3));
    }

    #[test]
    fn maps() {
        let t1 = first_region();
        assert_eq!(
            apply_map(&t1, &UnimodularMap::identity(), &Point2::origin()).unwrap(),
            t1
        );
        let mirrored = apply_map(&t1, &UnimodularMap::swap(), &Point2::origin()).unwrap();
        assert_eq!(mirrored, t1.swapped());
        assert_eq!(mirrored.area(), ratio(1, 6));
        assert!(UnimodularMap::new(2, 0, 0, 1).is_err());
        let m = UnimodularMap::new(0, 1, -1, 2).unwrap();
        let image = apply_map(&t1, &m, &Point2::origin()).unwrap();
        assert_eq!(image.area(), t1.area());
    }

    #[test]
    fn contains_is_closed() {
        let sq = ConvexPolygon::unit_square();
        assert!(sq.contains(&Point2::frac(1, 1, 1, 2)));
        assert!(sq.contains(&Point2::frac(1, 3, 1, 3)));
        assert!(!sq.contains(&Point2::frac(3, 2, 1, 2)));
        assert!(!ConvexPolygon::empty().contains(&Point2::origin()));
    }
}
