use axum::body::{to_bytes, Body};
use axum::http::{Request, StatusCode};
use axum::Router;
use serde_json::{json, Value};
use tower::ServiceExt;

use lambda_lab_cli::api::router;
use lambda_lab_cli::fixture::Fixture;
use lambda_lab_cli::session::Session;

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, String) {
    let req = Request::builder().method(method).uri(uri).header("content-type", "application/json");
    let req = match body {
        Some(b) => req.body(Body::from(b.to_string())).unwrap(),
        None => req.body(Body::empty()).unwrap(),
    };
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = to_bytes(resp.into_body(), 1 << 24).await.unwrap();
    (status, String::from_utf8(bytes.to_vec()).unwrap())
}

async fn json_call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let (s, text) = call(app, method, uri, body).await;
    (s, serde_json::from_str(&text).unwrap_or(Value::Null))
}

fn uf_app() -> Router {
    router(Session::new(Fixture::Uf).unwrap())
}

#[tokio::test]
async fn mutate_twice_returns_to_the_initial_board() {
    let app = uf_app();
    let (s, start) = json_call(&app, "GET", "/api/state", None).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(start["version"], 0);
    let (_, once) = json_call(&app, "POST", "/api/mutate", Some(json!({"vertex": 1}))).await;
    assert_eq!(once["version"], 1);
    assert_eq!(once["vertices"][0]["g"], json!([-1, 1]));
    assert_eq!(once["vertices"][0]["color"], "red");
    assert_ne!(once["hash"], start["hash"]);
    let (s, inv) = json_call(&app, "GET", "/api/invariants?u=1&v=1&v_depth=0", None).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(inv["f_invariant"], 2);
    assert_eq!(inv["d_invariant"], 1);
    let (_, twice) = json_call(&app, "POST", "/api/mutate", Some(json!({"vertex": "1"}))).await;
    assert_eq!(twice["hash"], start["hash"]);
    assert_eq!(twice["depth"], 2);
}

#[tokio::test]
async fn undo_reset_and_versions() {
    let app = uf_app();
    let (_, start) = json_call(&app, "GET", "/api/state", None).await;
    json_call(&app, "POST", "/api/mutate", Some(json!({"vertex": 1}))).await;
    let (s, undone) = json_call(&app, "POST", "/api/undo", None).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(undone["vertices"], start["vertices"]);
    assert_eq!(undone["version"], 2);
    let (s, err) = json_call(&app, "POST", "/api/undo", None).await;
    assert_eq!(s, StatusCode::BAD_REQUEST);
    assert_eq!(err["error"], "EmptyUndoStack");
    let (_, reset) = json_call(&app, "POST", "/api/reset", None).await;
    assert_eq!(reset["version"], 3);
    assert_eq!(reset["hash"], start["hash"]);
}

#[tokio::test]
async fn error_payloads() {
    let app = uf_app();
    let (s, err) = json_call(&app, "POST", "/api/mutate", Some(json!({"vertex": 2}))).await;
    assert_eq!(s, StatusCode::BAD_REQUEST);
    assert_eq!(err["error"], "IllegalVertex");
    assert!(err["detail"].as_str().unwrap().contains("frozen"));
    let (s, err) = json_call(&app, "POST", "/api/mutate", Some(json!({"vertex": 9}))).await;
    assert_eq!(s, StatusCode::NOT_FOUND);
    assert_eq!(err["error"], "UnknownVertex");
    let (s, err) = json_call(&app, "GET", "/api/invariants?u=1", None).await;
    assert_eq!(s, StatusCode::BAD_REQUEST);
    assert_eq!(err["error"], "MissingParameter");
    let (s, err) = json_call(&app, "GET", "/api/nowhere", None).await;
    assert_eq!(s, StatusCode::NOT_FOUND);
    assert_eq!(err["error"], "NotFound");
    let (s, err) = json_call(&app, "POST", "/api/build", Some(json!({"fixture": "linear:x"}))).await;
    assert_eq!(s, StatusCode::BAD_REQUEST);
    assert_eq!(err["error"], "BadFixture");
}

#[tokio::test]
async fn build_interval_and_export() {
    let app = uf_app();
    let fixture = json!({"kind": "interval", "type": "A3", "word": [1, 2, 3, 2, 1, 2], "a": -2, "b": 6});
    let (s, st) = json_call(&app, "POST", "/api/build", Some(json!({"fixture": fixture}))).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(st["vertices"].as_array().unwrap().len(), 9);
    assert_eq!(st["version"], 1);
    assert_eq!(st["vertices"][0]["place"], json!({"row": 2, "column": -2}));
    let (s, dot) = call(&app, "GET", "/api/quiver.dot", None).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(dot.matches("shape=box").count(), 3);
    assert_eq!(dot.matches("->").count(), 14);
    let (_, m) = json_call(&app, "GET", "/api/export?format=matrix", None).await;
    for key in ["bhat", "btilde", "lambda", "d"] {
        assert!(!m[key].is_null(), "{key}");
    }
    let (_, doc) = json_call(&app, "GET", "/api/export?format=json", None).await;
    let (s, again) = json_call(&app, "POST", "/api/build", Some(json!({"fixture": {"kind": "quiver", "quiver": doc}}))).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(again["quiver"], st["quiver"]);
    let (s, _) = json_call(&app, "GET", "/api/export?format=png", None).await;
    assert_eq!(s, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn invariants_in_the_current_seed() {
    let app = router(Session::new("linear:4".parse().unwrap()).unwrap());
    json_call(&app, "POST", "/api/mutate", Some(json!({"vertex": 3}))).await;
    let (s, inv) = json_call(&app, "GET", "/api/invariants?u=3&v=2", None).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(inv["f_invariant"], 0);
    assert_eq!(inv["tropical_uv"].as_i64().unwrap(), inv["lambda"].as_i64().unwrap());
    let (s, _) = json_call(&app, "GET", "/api/invariants?u=3&v=2&u_depth=5", None).await;
    assert_eq!(s, StatusCode::NOT_FOUND);
}
