//! Local HTTP JSON service over the solver and fitter.

use std::net::{Ipv4Addr, SocketAddr};

use axum::body::Bytes;
use axum::extract::rejection::{BytesRejection, QueryRejection};
use axum::extract::{DefaultBodyLimit, Query};
use axum::http::{header, HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::{Deserialize, Serialize};
use tower_http::cors::{AllowOrigin, CorsLayer};

use crate::api::{self, ApiError, ErrorCode, ScurveRequest, SplineRequest, DEFAULT_SAMPLES};
use crate::json;
use crate::render::{parse_curve, render_svg, RenderStyle};
use crate::table::gamma_table;

pub const DEFAULT_PORT: u16 = 8787;
pub const BODY_LIMIT: usize = 1 << 20;

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = match self.code {
            ErrorCode::BadRequest => StatusCode::BAD_REQUEST,
            ErrorCode::Infeasible => StatusCode::UNPROCESSABLE_ENTITY,
            ErrorCode::Internal => StatusCode::INTERNAL_SERVER_ERROR,
        };
        (status, json_body(&self)).into_response()
    }
}

/// JSON response written with the 17-digit formatter.
fn json_body<T: Serialize>(value: &T) -> Response {
    match json::to_vec(value) {
        Ok(body) => ([(header::CONTENT_TYPE, "application/json")], body).into_response(),
        Err(e) => (StatusCode::INTERNAL_SERVER_ERROR, e.to_string()).into_response(),
    }
}

/// Keeps the rejection status, such as 413 for an oversized body.
fn body_bytes(body: Result<Bytes, BytesRejection>) -> Result<Bytes, (StatusCode, ApiError)> {
    body.map_err(|e| (e.status(), ApiError::bad_request(e.body_text())))
}

fn query<T>(q: Result<Query<T>, QueryRejection>) -> Result<T, ApiError> {
    q.map(|Query(t)| t).map_err(|e| ApiError::bad_request(e.body_text()))
}

async fn blocking<T, F>(f: F) -> Result<T, ApiError>
where
    F: FnOnce() -> Result<T, ApiError> + Send + 'static,
    T: Send + 'static,
{
    tokio::task::spawn_blocking(f).await.map_err(|e| ApiError::internal(e.to_string()))?
}

#[derive(Debug, Deserialize)]
struct SamplesQuery {
    #[serde(default = "default_samples")]
    samples: usize,
}

fn default_samples() -> usize {
    DEFAULT_SAMPLES
}

#[derive(Debug, Serialize)]
struct Health {
    status: &'static str,
    d: f64,
}

async fn health() -> Response {
    json_body(&Health { status: "ok", d: elastic_core::elastica::d() })
}

async fn scurve(q: Result<Query<SamplesQuery>, QueryRejection>, body: Result<Bytes, BytesRejection>) -> Response {
    let body = match body_bytes(body) {
        Ok(b) => b,
        Err((status, e)) => return (status, json_body(&e)).into_response(),
    };
    let run = async {
        let samples = query(q)?.samples;
        let req: ScurveRequest = api::parse(&body)?;
        blocking(move || api::run_scurve(&req, samples)).await
    };
    match run.await {
        Ok(res) => json_body(&res),
        Err(e) => e.into_response(),
    }
}

async fn spline(q: Result<Query<SamplesQuery>, QueryRejection>, body: Result<Bytes, BytesRejection>) -> Response {
    let body = match body_bytes(body) {
        Ok(b) => b,
        Err((status, e)) => return (status, json_body(&e)).into_response(),
    };
    let run = async {
        let samples = query(q)?.samples;
        let req: SplineRequest = api::parse(&body)?;
        blocking(move || api::run_spline(&req, samples)).await
    };
    match run.await {
        Ok(res) => json_body(&res),
        Err(e) => e.into_response(),
    }
}

#[derive(Debug, Deserialize)]
struct TableQuery {
    alpha: f64,
    beta: f64,
    #[serde(default = "default_rows")]
    n: usize,
}

fn default_rows() -> usize {
    64
}

async fn table(q: Result<Query<TableQuery>, QueryRejection>) -> Response {
    let run = || -> Result<_, ApiError> {
        let q = query(q)?;
        if q.n > api::MAX_SAMPLES {
            return Err(ApiError::bad_request("too many rows"));
        }
        Ok(gamma_table(q.alpha, q.beta, q.n)?)
    };
    match run() {
        Ok(rows) => json_body(&rows),
        Err(e) => e.into_response(),
    }
}

async fn render(q: Result<Query<RenderStyle>, QueryRejection>, body: Result<Bytes, BytesRejection>) -> Response {
    let body = match body_bytes(body) {
        Ok(b) => b,
        Err((status, e)) => return (status, json_body(&e)).into_response(),
    };
    let run = || -> Result<String, ApiError> {
        let style = query(q)?;
        let curve = parse_curve(&body)?;
        Ok(render_svg(&curve, &style)?)
    };
    match run() {
        Ok(svg) => ([(header::CONTENT_TYPE, "image/svg+xml")], svg).into_response(),
        Err(e) => e.into_response(),
    }
}

/// Origins served by a browser on this machine, any port.
fn is_local_origin(origin: &HeaderValue) -> bool {
    let Ok(s) = origin.to_str() else { return false };
    let Some(rest) = s.strip_prefix("http://").or_else(|| s.strip_prefix("https://")) else {
        return false;
    };
    let host = rest.rsplit_once(':').map_or(rest, |(h, port)| {
        if !port.is_empty() && port.bytes().all(|b| b.is_ascii_digit()) {
            h
        } else {
            rest
        }
    });
    matches!(host, "localhost" | "127.0.0.1" | "[::1]")
}

pub fn router() -> Router {
    let cors = CorsLayer::new()
        .allow_origin(AllowOrigin::predicate(|o, _| is_local_origin(o)))
        .allow_methods([axum::http::Method::GET, axum::http::Method::POST])
        .allow_headers([header::CONTENT_TYPE]);
    Router::new()
        .route("/api/health", get(health))
        .route("/api/scurve", post(scurve))
        .route("/api/spline", post(spline))
        .route("/api/table", get(table))
        .route("/api/render", post(render))
        .layer(DefaultBodyLimit::max(BODY_LIMIT))
        .layer(cors)
}

/// Serves on `127.0.0.1:port` until the process ends.
pub async fn serve(port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(SocketAddr::from((Ipv4Addr::LOCALHOST, port))).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router()).await
}
