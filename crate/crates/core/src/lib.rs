//! Farey-fraction index statistics and the exact geometry of the Farey triangle map.
//!
//! The crate is organised bottom-up:
//!
//! - [`geometry`]: exact rationals and convex polygons.
//! - [`farey`]: streaming Farey sequences, seeking, and the index `ν_Q`.
//! - [`bcz`]: the area-preserving map `T(x, y) = (y, ⌊(1+x)/y⌋ y - x)` on the
//!   Farey triangle, its regions, polygon push-forward, and the exact constants
//!   `A(h)`, `B_α`, `l_k`, `u_k`.
//! - [`stats`]: exact large-`Q` enumeration of index sums, moments, correlations
//!   and counts, paired with their limiting predictions.

pub mod bcz;
pub mod farey;
pub mod geometry;
pub mod stats;

pub use geometry::{ConvexPolygon, Point2, Rational, UnimodularMap};
