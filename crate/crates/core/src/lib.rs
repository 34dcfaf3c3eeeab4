//! Minimal bending energy curves built from rectangular elastica.
//!
//! The crate has three layers:
//!
//! - [`elastica`]: the model curve `E(t) = (sin t, ξ(t))` with
//!   `ξ' = sin²t / √(1 + sin²t)`, its turning angle, energy and chord geometry.
//! - [`geometry`]: unit tangents, plane similarities, piecewise curves made of
//!   line segments and transformed elastica arcs, and the normal form of a
//!   tangent pair.
//! - [`scurve`] and [`spline`]: the optimal s-curve between two unit tangents,
//!   and admissible interpolants through a point sequence whose pieces are
//!   optimal s-curves.
//!
//! Bending energy is `¼∫κ² ds` throughout.
//!
//! ## no_std support
//!
//! The crate builds without `std` (it still needs `alloc`). Disable default
//! features and enable `libm` for the float functions:
//!
//! ```toml
//! elastic-core = { version = "0.1", default-features = false, features = ["libm"] }
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(missing_debug_implementations)]
// `!(x > 0.0)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("elastic-core requires either the `std` or `libm` feature");

extern crate alloc;

mod error;
mod quad;
mod roots;
mod tol;
mod vec2;

pub mod elastica;
pub mod geometry;
pub mod scurve;
pub mod spline;

pub use error::Error;
pub use geometry::{
    canonicalize, feasible, CanonicalConfig, CurveSegment, ElasticaArc, PiecewiseCurve,
    Similarity, UnitTangent,
};
pub use quad::integrate;
pub use scurve::{solve, CaseTag, SolverResult};
pub use spline::{fit, FitOptions, SplineFit, SplineProblem};
pub use tol::{Tolerances, TOL};
pub use vec2::Vec2;
