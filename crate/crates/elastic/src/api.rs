//! Request and response bodies shared by the command line tool and the HTTP
//! service, and the error record both report.

use elastic_core::spline::SegmentReport;
use elastic_core::{fit, solve, CaseTag, Error, FitOptions, SolverResult, SplineFit, SplineProblem, UnitTangent, Vec2};
use serde::{Deserialize, Serialize};

/// Default number of polyline samples returned per solved segment.
pub const DEFAULT_SAMPLES: usize = 128;
pub const MAX_SAMPLES: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScurveRequest {
    pub u: UnitTangent,
    pub v: UnitTangent,
}

/// A spline problem with optional fit options under `opts`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplineRequest {
    #[serde(flatten)]
    pub problem: SplineProblem,
    #[serde(default)]
    pub opts: FitOptions,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScurveResponse {
    #[serde(flatten)]
    pub result: SolverResult,
    pub polyline: Vec<Vec2>,
}

/// Per-segment view of a fit, re-solved from the fitted node tangents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SegmentDetail {
    pub index: usize,
    pub case_tag: CaseTag,
    pub energy: f64,
    pub gamma_star: Option<f64>,
    pub alpha: f64,
    pub beta: f64,
    pub polyline: Vec<Vec2>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplineResponse {
    #[serde(flatten)]
    pub fit: SplineFit,
    pub segments: Vec<SegmentDetail>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorCode {
    Infeasible,
    BadRequest,
    Internal,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ErrorDetails {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Vec<SegmentReport>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApiError {
    pub code: ErrorCode,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<ErrorDetails>,
}

impl ApiError {
    pub fn bad_request(message: impl Into<String>) -> Self {
        ApiError { code: ErrorCode::BadRequest, message: message.into(), details: None }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        ApiError { code: ErrorCode::Internal, message: message.into(), details: None }
    }

    /// Process exit status for the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self.code {
            ErrorCode::BadRequest => 1,
            ErrorCode::Infeasible => 2,
            ErrorCode::Internal => 3,
        }
    }
}

impl std::fmt::Display for ApiError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for ApiError {}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        match e {
            Error::Domain(_) => ApiError::bad_request(message),
            Error::Infeasible { alpha, beta } => ApiError {
                code: ErrorCode::Infeasible,
                message,
                details: Some(ErrorDetails { alpha: Some(alpha), beta: Some(beta), report: None }),
            },
            Error::Fit { report } => ApiError {
                code: ErrorCode::Infeasible,
                message,
                details: Some(ErrorDetails { report: Some(report), ..Default::default() }),
            },
            Error::Internal(_) => ApiError::internal(message),
        }
    }
}

impl From<serde_json::Error> for ApiError {
    fn from(e: serde_json::Error) -> Self {
        ApiError::bad_request(format!("malformed JSON: {e}"))
    }
}

pub fn parse<'a, T: Deserialize<'a>>(body: &'a [u8]) -> Result<T, ApiError> {
    Ok(serde_json::from_slice(body)?)
}

pub fn check_samples(samples: usize) -> Result<usize, ApiError> {
    if (2..=MAX_SAMPLES).contains(&samples) {
        Ok(samples)
    } else {
        Err(ApiError::bad_request(format!("samples must lie in 2..={MAX_SAMPLES}")))
    }
}

pub fn run_scurve(req: &ScurveRequest, samples: usize) -> Result<ScurveResponse, ApiError> {
    let samples = check_samples(samples)?;
    let result = solve(&req.u, &req.v)?;
    let polyline = result.curve.sample(samples)?;
    Ok(ScurveResponse { result, polyline })
}

/// The tangents at the ends of segment `k` under the fitted angles.
fn segment_tangents(problem: &SplineProblem, angles: &[f64], k: usize) -> (UnitTangent, UnitTangent) {
    let j = (k + 1) % problem.points.len();
    (
        UnitTangent::from_angle(problem.points[k], angles[k]),
        UnitTangent::from_angle(problem.points[j], angles[j]),
    )
}

pub fn run_spline(req: &SplineRequest, samples: usize) -> Result<SplineResponse, ApiError> {
    let samples = check_samples(samples)?;
    let fit = fit(&req.problem, &req.opts)?;
    let segments = (0..req.problem.segment_count())
        .map(|k| {
            let (u, v) = segment_tangents(&req.problem, &fit.angles, k);
            let r = solve(&u, &v)?;
            Ok(SegmentDetail {
                index: k,
                case_tag: r.case_tag,
                energy: r.energy,
                gamma_star: r.gamma_star,
                alpha: r.alpha,
                beta: r.beta,
                polyline: r.curve.sample(samples)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(SplineResponse { fit, segments })
}
