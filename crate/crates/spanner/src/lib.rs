//! Euclidean t-spanner toolkit.
//!
//! A *t-spanner* of a finite point set `P` is a geometric graph on `P` in
//! which every pair of points is connected by a path at most `t` times
//! longer than the straight segment between them. This crate provides the
//! pieces needed to study low-weight spanners end to end:
//!
//! - [`scalar`] / [`point`] / [`graph`] / [`predicates`]: exact rational
//!   coordinates and decision predicates (no floating-point rounding in any
//!   yes/no geometric decision).
//! - [`metrics`]: shortest paths, dilation, and the t-spanner check.
//! - [`builders`]: the Euclidean MST and the classic path-greedy spanner.
//! - [`shortcut`]: single-triangle shortcut analysis (benefit, cost,
//!   efficiency) plus numerical verifiers for the geometric facts the
//!   hardness construction rests on.
//! - [`reduction`]: generators that compile an instance of PARTITION into a
//!   point set whose low-weight spanners encode the partition answer, with
//!   forward verification and budget accounting.
//! - [`solver`]: exact minimum-weight spanner search (branch and bound and
//!   an exhaustive oracle), the decision procedure, plane-restricted
//!   variants, and minimum dilation under a weight budget.
//! - [`io`] / [`render`]: JSON wire formats and deterministic SVG output.

pub mod builders;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod point;
pub mod predicates;
pub mod reduction;
pub mod render;
pub mod scalar;
pub mod shortcut;
pub mod solver;
pub mod sweeps;

pub use graph::GeometricGraph;
pub use point::Point2;
pub use scalar::Scalar;

/// Default relative tolerance for comparisons involving square roots.
pub const REL_TOL: f64 = 1e-9;

// Book chapters double as doc-tests so the guide can never drift from the
// API it describes.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/dilation.md")]
    mod dilation {}
    #[doc = include_str!("../../../book/src/builders.md")]
    mod builders {}
    #[doc = include_str!("../../../book/src/shortcuts.md")]
    mod shortcuts {}
    #[doc = include_str!("../../../book/src/hardness.md")]
    mod hardness {}
    #[doc = include_str!("../../../book/src/solver.md")]
    mod solver {}
}
