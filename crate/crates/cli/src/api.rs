//! HTTP JSON API over one in-memory session.

use std::sync::{Arc, Mutex};

use axum::extract::{Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use serde_json::json;

use lambda_lab::ice_quiver::VertexId;

use crate::fixture::Fixture;
use crate::session::{Action, Session, SessionError};

pub type Shared = Arc<Mutex<Session>>;

pub struct ApiError {
    status: StatusCode,
    code: &'static str,
    detail: String,
}

impl ApiError {
    fn bad(code: &'static str, detail: impl Into<String>) -> Self {
        ApiError { status: StatusCode::BAD_REQUEST, code, detail: detail.into() }
    }
}

impl From<SessionError> for ApiError {
    fn from(e: SessionError) -> Self {
        let status = if e.is_not_found() { StatusCode::NOT_FOUND } else { StatusCode::BAD_REQUEST };
        ApiError { status, code: e.code(), detail: e.to_string() }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({"error": self.code, "detail": self.detail}))).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

pub fn router(session: Session) -> Router {
    let shared: Shared = Arc::new(Mutex::new(session));
    Router::new()
        .route("/api/state", get(state))
        .route("/api/build", post(build))
        .route("/api/mutate", post(mutate))
        .route("/api/undo", post(undo))
        .route("/api/reset", post(reset))
        .route("/api/invariants", get(invariants))
        .route("/api/quiver.dot", get(dot))
        .route("/api/export", get(export))
        .fallback(not_found)
        .with_state(shared)
}

fn apply(s: &Shared, action: Action) -> ApiResult<crate::session::StateDoc> {
    let mut session = s.lock().expect("session lock");
    Ok(Json(session.apply(action)?))
}

async fn state(State(s): State<Shared>) -> Json<crate::session::StateDoc> {
    Json(s.lock().expect("session lock").state())
}

#[derive(Deserialize)]
struct BuildBody {
    fixture: FixtureInput,
}

/// A fixture as a JSON object or as a descriptor string such as `"linear:4"`.
#[derive(Deserialize)]
#[serde(untagged)]
enum FixtureInput {
    Text(String),
    Doc(Fixture),
}

async fn build(State(s): State<Shared>, Json(body): Json<BuildBody>) -> ApiResult<crate::session::StateDoc> {
    let fixture = match body.fixture {
        FixtureInput::Doc(f) => f,
        FixtureInput::Text(t) => t.parse().map_err(|e: crate::fixture::FixtureError| ApiError::bad("BadFixture", e.to_string()))?,
    };
    apply(&s, Action::Build { fixture })
}

#[derive(Deserialize)]
struct MutateBody {
    vertex: VertexInput,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum VertexInput {
    Text(String),
    Id(VertexId),
}

impl VertexInput {
    fn resolve(self) -> Result<VertexId, ApiError> {
        match self {
            VertexInput::Id(v) => Ok(v),
            VertexInput::Text(t) => VertexId::parse(&t).ok_or_else(|| ApiError::bad("BadVertex", format!("cannot parse vertex `{t}`"))),
        }
    }
}

async fn mutate(State(s): State<Shared>, Json(body): Json<MutateBody>) -> ApiResult<crate::session::StateDoc> {
    let vertex = body.vertex.resolve()?;
    apply(&s, Action::Mutate { vertex })
}

async fn undo(State(s): State<Shared>) -> ApiResult<crate::session::StateDoc> {
    apply(&s, Action::Undo)
}

async fn reset(State(s): State<Shared>) -> ApiResult<crate::session::StateDoc> {
    apply(&s, Action::Reset)
}

#[derive(Deserialize)]
struct InvariantQuery {
    u: Option<String>,
    v: Option<String>,
    u_depth: Option<usize>,
    v_depth: Option<usize>,
}

async fn invariants(State(s): State<Shared>, Query(q): Query<InvariantQuery>) -> ApiResult<crate::session::Invariants> {
    let parse = |name: &str, x: Option<String>| -> Result<VertexId, ApiError> {
        let x = x.ok_or_else(|| ApiError::bad("MissingParameter", format!("`{name}` is required")))?;
        VertexInput::Text(x).resolve()
    };
    let (u, v) = (parse("u", q.u)?, parse("v", q.v)?);
    let session = s.lock().expect("session lock");
    Ok(Json(session.invariants(&u, &v, q.u_depth, q.v_depth)?))
}

async fn dot(State(s): State<Shared>) -> impl IntoResponse {
    let body = s.lock().expect("session lock").quiver().to_dot();
    ([(header::CONTENT_TYPE, "text/vnd.graphviz")], body)
}

#[derive(Deserialize)]
struct ExportQuery {
    format: String,
}

async fn export(State(s): State<Shared>, Query(q): Query<ExportQuery>) -> Result<Response, ApiError> {
    let session = s.lock().expect("session lock");
    Ok(match q.format.as_str() {
        "dot" => ([(header::CONTENT_TYPE, "text/vnd.graphviz")], session.quiver().to_dot()).into_response(),
        "json" => Json(session.quiver().to_doc()).into_response(),
        "matrix" => Json(session.matrices()).into_response(),
        other => return Err(ApiError::bad("BadFormat", format!("unknown format `{other}`"))),
    })
}

async fn not_found() -> ApiError {
    ApiError { status: StatusCode::NOT_FOUND, code: "NotFound", detail: "no such endpoint".into() }
}
