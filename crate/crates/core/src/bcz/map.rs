//! Pointwise action of the map and its orbits.

use num_traits::ToPrimitive;

use super::BczError;
use crate::geometry::{Point2, Rational};

/// Region index `k` of a point of the Farey triangle, `k = ⌊(1+x)/y⌋ ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegionIndex(u64);

impl RegionIndex {
    pub fn new(k: u64) -> Option<Self> {
        (k >= 1).then_some(RegionIndex(k))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// Open-at-the-bottom membership used for points: `0 < x ≤ 1`, `0 < y ≤ 1`, `x + y > 1`.
pub fn in_farey_triangle(p: &Point2) -> bool {
    let one = Rational::one();
    p.x.is_positive() && p.y.is_positive() && p.x <= one && p.y <= one && &p.x + &p.y > one
}

/// `κ_1(x, y) = ⌊(1+x)/y⌋`.
pub fn region_of(p: &Point2) -> Result<RegionIndex, BczError> {
    if !in_farey_triangle(p) {
        return Err(BczError::OutsideTriangle(Box::new(p.clone())));
    }
    let k = ((Rational::one() + &p.x) / &p.y).floor();
    let k = k
        .to_u64()
        .ok_or_else(|| BczError::OutsideTriangle(Box::new(p.clone())))?;
    Ok(RegionIndex(k))
}

/// One application of `T(x, y) = (y, k y − x)` together with the region `k` of `(x, y)`.
pub fn bcz_apply(p: &Point2) -> Result<(Point2, RegionIndex), BczError> {
    let k = region_of(p)?;
    let image = Point2::new(p.y.clone(), Rational::from(k.0 as i64) * &p.y - &p.x);
    Ok((image, k))
}

/// `T^{-1} = S T S` on points.
pub fn bcz_apply_inverse(p: &Point2) -> Result<Point2, BczError> {
    let (q, _) = bcz_apply(&p.swapped())?;
    Ok(q.swapped())
}

/// The sequences `L_0, L_1, …` and `κ_1, κ_2, …` along an orbit, with
/// `T^i(x, y) = (L_i, L_{i+1})` and `L_{i+1} = κ_i L_i − L_{i−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitState {
    pub ls: Vec<Rational>,
    pub kappas: Vec<u64>,
}

/// `r` steps of the orbit of `p`.
pub fn orbit(p: &Point2, r: usize) -> Result<OrbitState, BczError> {
    if !in_farey_triangle(p) {
        return Err(BczError::OutsideTriangle(Box::new(p.clone())));
    }
    let mut ls = vec![p.x.clone(), p.y.clone()];
    let mut kappas = Vec::with_capacity(r);
    let mut cur = p.clone();
    for _ in 0..r {
        let (next, k) = bcz_apply(&cur)?;
        kappas.push(k.get());
        ls.push(next.y.clone());
        cur = next;
    }
    Ok(OrbitState { ls, kappas })
}
