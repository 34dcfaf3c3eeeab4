use alloc::vec::Vec;

use crate::spline::SegmentReport;

/// Errors raised by the elastica, geometry, solver and fitter routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(&'static str),
    /// No s-curve connects the tangent pair; carries its normal form.
    #[error("no s-curve connects the tangent pair (alpha = {alpha}, beta = {beta})")]
    Infeasible { alpha: f64, beta: f64 },
    /// A spline problem has no feasible set of tangent directions.
    #[error("no feasible tangent directions found ({} segments infeasible)", report.iter().filter(|s| !s.feasible).count())]
    Fit { report: Vec<SegmentReport> },
    /// A numerical construction failed a self-check.
    #[error("internal consistency error: {0}")]
    Internal(&'static str),
}
