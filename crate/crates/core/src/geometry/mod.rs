//! Planar curve algebra: unit tangents, similarities, piecewise curves made of
//! line segments and transformed elastica arcs, and the normal form of a
//! tangent pair.

mod canonical;
mod curve;
mod similarity;
mod tangent;

pub use canonical::{canonicalize, feasible, CanonicalConfig};
pub use curve::{sign_changes, CurveSample, CurveSegment, ElasticaArc, LineSegment, PiecewiseCurve};
pub use similarity::Similarity;
pub use tangent::UnitTangent;
