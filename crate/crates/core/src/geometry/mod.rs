//! Exact rational arithmetic and convex-polygon primitives.
//!
//! Everything here is computed without rounding: coordinates are [`Rational`]s,
//! clipping is Sutherland–Hodgman against exact half planes, and areas come from
//! the shoelace formula.

mod polygon;
mod rational;

pub use polygon::{
    apply_map, clip_convex, cross, half_plane_clip, polygon_area, ConvexPolygon, Point2,
    UnimodularMap,
};
pub use rational::{ratio, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("linear map has determinant {det}, expected +1 or -1")]
    NotUnimodular { det: i128 },
    #[error("vertex cycle is not convex")]
    NotConvex,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}
