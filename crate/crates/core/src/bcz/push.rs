//! Push-forward of polygon sets under `T^h`.
//!
//! `T` is linear on each `T_k`, so the image of a convex piece is the union of
//! the images of its intersections with the `T_k`. A piece bounded away from
//! `y = 0` meets only the finitely many `T_k` with `k` between the floors of
//! `(1+x)/y` at its vertices. The one exception is a piece having the corner
//! `(1, 0)`: it meets every `T_k` with `k` large. Such a piece must contain a
//! whole wedge `T_K*`, whose image is its mirror `S T_K*` (each `T_k` is
//! mapped onto `S T_k`), and the rest of the piece is again finite.

use std::iter::FromIterator;

use num_traits::ToPrimitive;

use super::regions::{above_line, below_line, region_star_polygon};
use super::BczError;
use crate::geometry::{apply_map, clip_convex, ConvexPolygon, Point2, Rational, UnimodularMap};

/// Cap on the wedge index searched for when a piece reaches the corner `(1, 0)`.
const MAX_WEDGE_INDEX: u64 = 1 << 24;

/// A finite union of convex polygons with pairwise disjoint interiors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolygonSet {
    pieces: Vec<ConvexPolygon>,
}

impl PolygonSet {
    pub fn new() -> Self {
        PolygonSet { pieces: Vec::new() }
    }

    pub fn single(p: ConvexPolygon) -> Self {
        let mut s = PolygonSet::new();
        s.push(p);
        s
    }

    /// Adds a piece; empty polygons are dropped.
    pub fn push(&mut self, p: ConvexPolygon) {
        if !p.is_empty() {
            self.pieces.push(p);
        }
    }

    pub fn pieces(&self) -> &[ConvexPolygon] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn area(&self) -> Rational {
        self.pieces.iter().map(ConvexPolygon::area).sum()
    }

    pub fn intersect(&self, q: &ConvexPolygon) -> PolygonSet {
        self.pieces.iter().map(|p| clip_convex(p, q)).collect()
    }

    /// `area(self ∩ q)`.
    pub fn area_within(&self, q: &ConvexPolygon) -> Rational {
        self.pieces.iter().map(|p| clip_convex(p, q).area()).sum()
    }

    /// `area(self ∩ other)`.
    pub fn overlap_area(&self, other: &PolygonSet) -> Rational {
        other.pieces.iter().map(|q| self.area_within(q)).sum()
    }

    /// Area of the symmetric difference; zero iff the sets agree up to measure zero.
    pub fn symmetric_difference_area(&self, other: &PolygonSet) -> Rational {
        let common = self.overlap_area(other);
        self.area() + other.area() - common.clone() - common
    }

    /// Sum of pairwise overlap areas; zero when the pieces are interior-disjoint.
    pub fn self_overlap_area(&self) -> Rational {
        let mut acc = Rational::zero();
        for (i, p) in self.pieces.iter().enumerate() {
            for q in &self.pieces[i + 1..] {
                acc += clip_convex(p, q).area();
            }
        }
        acc
    }

    /// Mirror image across `x = y`.
    pub fn swapped(&self) -> PolygonSet {
        self.pieces.iter().map(ConvexPolygon::swapped).collect()
    }
}

impl FromIterator<ConvexPolygon> for PolygonSet {
    fn from_iter<I: IntoIterator<Item = ConvexPolygon>>(iter: I) -> Self {
        let mut s = PolygonSet::new();
        for p in iter {
            s.push(p);
        }
        s
    }
}

impl From<ConvexPolygon> for PolygonSet {
    fn from(p: ConvexPolygon) -> Self {
        PolygonSet::single(p)
    }
}

/// `T^h(s)`; negative `h` uses `T^{-1} = S T S`.
pub fn push_forward(s: &PolygonSet, h: i64) -> Result<PolygonSet, BczError> {
    if h < 0 {
        let mirrored = push_forward(&s.swapped(), -h)?;
        return Ok(mirrored.swapped());
    }
    let mut cur = s.clone();
    for _ in 0..h {
        let mut next = PolygonSet::new();
        for piece in &cur.pieces {
            step_piece(piece, &mut next)?;
        }
        cur = next;
    }
    Ok(cur)
}

fn ratio_floor(p: &Point2) -> u64 {
    ((Rational::one() + &p.x) / &p.y)
        .floor()
        .to_u64()
        .expect("region index fits in u64")
}

/// Portion of `piece` in the closed strip `(1+x)/(k+1) ≤ y ≤ (1+x)/k`.
fn strip(piece: &ConvexPolygon, k: u64) -> ConvexPolygon {
    let (a, b, c) = below_line(k);
    let p = piece.half_plane(&a, &b, &c);
    let (a, b, c) = above_line(k + 1);
    p.half_plane(&a, &b, &c)
}

fn check_inside(p: &ConvexPolygon) -> Result<(), BczError> {
    let one = Rational::one();
    for v in p.vertices() {
        if v.x > one || v.y > one || &v.x + &v.y < one {
            return Err(BczError::EscapedTriangle(Box::new(v.clone())));
        }
    }
    Ok(())
}

fn step_piece(piece: &ConvexPolygon, out: &mut PolygonSet) -> Result<(), BczError> {
    if piece.is_empty() {
        return Ok(());
    }
    check_inside(piece)?;
    let finite: Vec<&Point2> = piece
        .vertices()
        .iter()
        .filter(|v| v.y.is_positive())
        .collect();
    let k_lo = finite
        .iter()
        .map(|v| ratio_floor(v))
        .min()
        .unwrap_or(1)
        .max(1);
    let k_hi_finite = finite.iter().map(|v| ratio_floor(v)).max().unwrap_or(1);
    let touches_corner = finite.len() < piece.vertices().len();

    let k_hi = if touches_corner {
        let wedge = find_wedge(piece, k_hi_finite + 1)?;
        let image = region_star_polygon(wedge).swapped();
        check_inside(&image)?;
        out.push(image);
        wedge - 1
    } else {
        k_hi_finite
    };

    for k in k_lo..=k_hi {
        let part = strip(piece, k);
        if part.is_empty() {
            continue;
        }
        let image = apply_map(&part, &UnimodularMap::farey_branch(k), &Point2::origin())
            .expect("branch maps are unimodular");
        check_inside(&image)?;
        out.push(image);
    }
    Ok(())
}

/// Smallest `K ≥ start` (searching by doubling) with `T_K* ⊆ piece`.
fn find_wedge(piece: &ConvexPolygon, start: u64) -> Result<u64, BczError> {
    let mut k = start.max(2);
    while k <= MAX_WEDGE_INDEX {
        let wedge = region_star_polygon(k);
        if wedge.vertices().iter().all(|v| piece.contains(v)) {
            return Ok(k);
        }
        k *= 2;
    }
    Err(BczError::UnboundedPiece(Box::new(piece.clone())))
}
