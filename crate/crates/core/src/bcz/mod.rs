//! The Farey triangle map `T(x, y) = (y, ⌊(1+x)/y⌋ y − x)`.
//!
//! On consecutive Farey denominators scaled by `1/Q` the map is the shift
//! `(q_{i−1}, q_i)/Q ↦ (q_i, q_{i+1})/Q`, so the region index along an orbit is
//! the Farey index sequence. Areas of regions and of their images under `T^h`
//! give the limiting constants of the index statistics.

mod constants;
mod map;
mod push;
mod regions;

pub use constants::{
    autocorrelation_constant, autocorrelation_constant_with_cutoff, b_alpha, b_one_exact,
    default_cutoff, intersection_area_table, AutocorrelationConstant, BAlpha, Containment,
    B_ALPHA_MAX_CUTOFF,
};
pub use map::{
    bcz_apply, bcz_apply_inverse, in_farey_triangle, orbit, region_of, OrbitState, RegionIndex,
};
pub use push::{push_forward, PolygonSet};
pub use regions::{
    farey_triangle, lower_frequency, region_polygon, region_star_polygon, star_area_tail,
    upper_frequency, upper_lower_triangles,
};

use thiserror::Error;

use crate::geometry::{ConvexPolygon, Point2};

#[derive(Debug, Clone, Error)]
pub enum BczError {
    #[error("point {0:?} is not in the Farey triangle")]
    OutsideTriangle(Box<Point2>),
    #[error("polygon vertex {0:?} left the Farey triangle during push-forward")]
    EscapedTriangle(Box<Point2>),
    #[error("piece {0:?} reaches (1, 0) without containing a full wedge T_K*")]
    UnboundedPiece(Box<ConvexPolygon>),
    #[error("step count {0} is too large")]
    StepCountTooLarge(u64),
    #[error("the number of steps h must be at least 1")]
    ZeroSteps,
    #[error("cutoff {0} is too small; need at least 2")]
    CutoffTooSmall(u64),
    #[error("tail certificate failed for h = {h} at cutoff {cutoff}: {reason}")]
    TailCertificate { h: u64, cutoff: u64, reason: String },
    #[error("alpha = {0} is outside (0, 2)")]
    AlphaOutOfRange(f64),
    #[error("tolerance {0} must be positive")]
    BadTolerance(f64),
}
