//! Trigonometry of the nine two-dimensional Cayley–Klein geometries.
//!
//! Every geometry is fixed by two real labels (κ₁, κ₂): κ₁ is the curvature
//! of the plane, κ₂ its signature.  The sphere, the euclidean and hyperbolic
//! planes, and the six homogeneous (1+1)-dimensional spacetimes are the nine
//! sign patterns of the pair.  All formulas here are written once, in terms of
//! the κ-labelled cosine, sine and tangent, and stay exact at zero labels.
//!
//! The [`group`] module gives an independent matrix realisation of the motion
//! group, against which everything else can be checked.

pub mod bestiarium;
pub mod error;
pub mod group;
pub mod kinematics;
pub mod labeled;
pub mod loops;
pub mod orthogonal;
pub mod sampling;
pub mod solver;
pub mod tables;
pub mod triangle;

pub use error::{CkError, Result};
pub use group::{Geometry, GroupElement, Point};
pub use triangle::{Excesses, SignedView, Triangle, TriangleRecord};
