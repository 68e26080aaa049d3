//! Trigonometry on the unit "sphere" of three-dimensional Minkowski space.
//!
//! The set of Minkowski-unit vectors of ℝ³ under the form
//! `⟨⟨x, y⟩⟩ = −x₁y₁ + x₂y₂ + x₃y₃` has three components: the hyperbolic
//! plane `H²` (the sheet through `e₁`), its antipodal copy `−H²`, and the
//! one-sheeted de Sitter surface `S¹,¹`. This crate provides
//!
//! * [`mink`]: the Minkowski product, causal classification of vectors and
//!   planes, and Lorentz-orthogonal bases;
//! * [`lorentz`]: Lorentz matrices (checks, boosts, random elements);
//! * [`surface`]: membership, the generalized de Sitter distance, tangent
//!   vectors, geodesic segments and angles;
//! * [`triangle`]: the triangle taxonomy (hyperbolic, spatiolateral,
//!   chronosceles, ...), degeneracy, contractibility and the triangle
//!   inequality;
//! * [`polar`]: polar triangles, their existence and the predicted type of
//!   the polar triangle;
//! * [`trig`]: laws of cosines for sides and angles, laws of sines and the
//!   angle/side sum theorems, evaluated as residuals;
//! * [`sampling`]: seeded generators for every triangle family and an
//!   arc-length oracle.
//!
//! The crate is `no_std` (it needs `alloc` for batch sampling only).
//! Every tolerance-sensitive operation takes a [`Tolerances`] record.

#![no_std]
#![forbid(unsafe_code)]
#![deny(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
mod math;
mod tolerance;

pub mod lorentz;
pub mod mink;
pub mod polar;
pub mod sampling;
pub mod surface;
pub mod triangle;
pub mod trig;

pub use error::GeometryError;
pub use lorentz::Mat3;
pub use mink::{CausalClass, MVec3, PlaneClass};
pub use polar::{NoPolarReason, Polar, PolarPattern, PolarPrediction};
pub use surface::{Component, ExtDistance, SegmentKind, SurfacePoint};
pub use tolerance::Tolerances;
pub use triangle::{
    Family, ProperKind, Side, SideReport, Triangle, TriangleClass, TriangleClassification, Vertex,
};
pub use trig::{TrigFamily, TrigReport, TriangleMeasurements};

/// Commonly used items.
pub mod prelude {
    #[doc(no_inline)]
    pub use crate::{
        Component, ExtDistance, Family, GeometryError, MVec3, ProperKind, SurfacePoint,
        Tolerances, Triangle,
    };
}
