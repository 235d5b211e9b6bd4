//! Exact-arithmetic toolkit for rational polygons in the plane: Ehrhart
//! quasi-polynomials and quasi-period collapse, affine unimodular
//! classification, polar duality, and generators for the explicit polygon
//! families used throughout.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in the crate.

pub mod classify;
pub mod duality;
pub mod ehrhart;
pub mod error;
pub mod families;
pub mod geometry;
pub mod rational;
pub mod textfmt;
pub mod unimodular;

pub use error::{Error, Result};
pub use geometry::{
    convex_hull, ConvexPolygon, IntegerHull, LatticeCounts, LatticeSegmentInfo, RationalPoint,
};
pub use rational::{Int, Rational};
pub use unimodular::{are_equivalent, canonical_form, CanonicalForm, UnimodularMap};
