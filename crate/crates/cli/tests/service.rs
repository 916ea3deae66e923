use std::sync::Arc;

use axum::body::Body;
use axum::http::{Method, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use modwythoff::service::{router_with, AppState};
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(app: &Router, method: Method, uri: &str, body: Option<&str>) -> (StatusCode, Value) {
    let mut req = Request::builder().method(method).uri(uri);
    if body.is_some() {
        req = req.header("content-type", "application/json");
    }
    let req = req
        .body(body.map_or_else(Body::empty, |b| Body::from(b.to_owned())))
        .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = serde_json::from_slice(&bytes).unwrap_or(Value::Null);
    (status, value)
}

fn app() -> Router {
    router_with(Arc::new(AppState::default()))
}

#[tokio::test]
async fn session_flow_human_wins() {
    let app = app();
    let (status, created) = call(
        &app,
        Method::POST,
        "/session",
        Some(r#"{"m":2,"x":3,"y":3,"human_first":true}"#),
    )
    .await;
    assert_eq!(status, StatusCode::CREATED);
    assert_eq!(created["status"], "ongoing");
    assert_eq!(created["position"], json!({"x": 3, "y": 3}));
    let id = created["session_id"].as_str().unwrap().to_owned();

    let (status, body) = call(
        &app,
        Method::POST,
        &format!("/session/{id}/move"),
        Some(r#"{"kind":"TypeI-pile1","k1":5,"k2":0}"#),
    )
    .await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(body["rule"], "exceeds_pile");

    let (status, body) = call(
        &app,
        Method::POST,
        &format!("/session/{id}/move"),
        Some(r#"{"kind":"TypeII","k1":1,"k2":2}"#),
    )
    .await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(body["rule"], "congruence");

    let (status, body) = call(
        &app,
        Method::POST,
        &format!("/session/{id}/move"),
        Some(r#"{"kind":"TypeII","k1":3,"k2":3}"#),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(
        body,
        json!({
            "engine_reply": null,
            "position": {"x": 0, "y": 0},
            "status": "engine_lost",
            "classification": "P",
        })
    );

    let (status, body) = call(&app, Method::GET, &format!("/session/{id}"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["status"], "engine_lost");
    assert_eq!(body["history"].as_array().unwrap().len(), 1);
    assert_eq!(body["history"][0]["move"], json!({"kind": "TypeII", "k1": 3, "k2": 3}));

    let (status, body) = call(
        &app,
        Method::POST,
        &format!("/session/{id}/move"),
        Some(r#"{"kind":"TypeI-pile1","k1":1,"k2":0}"#),
    )
    .await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(body["rule"], "game_over");
}

#[tokio::test]
async fn engine_reply_lands_on_p() {
    let app = app();
    let (_, created) = call(
        &app,
        Method::POST,
        "/session",
        Some(r#"{"m":5,"x":10,"y":12,"human_first":true}"#),
    )
    .await;
    let id = created["session_id"].as_str().unwrap();
    let (status, body) = call(
        &app,
        Method::POST,
        &format!("/session/{id}/move"),
        Some(r#"{"kind":"TypeI-pile2","k1":0,"k2":1}"#),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert!(body["engine_reply"].is_object());
    assert_eq!(body["classification"], "P");
    assert_eq!(body["status"], "ongoing");
}

#[tokio::test]
async fn malformed_and_unknown() {
    let app = app();
    for bad in [
        "not json",
        r#"{"m":2,"x":3}"#,
        r#"{"m":0,"x":3,"y":3,"human_first":true}"#,
        r#"{"m":2,"x":-1,"y":3,"human_first":true}"#,
        r#"{"m":2,"x":3,"y":3,"human_first":true,"extra":1}"#,
    ] {
        let (status, _) = call(&app, Method::POST, "/session", Some(bad)).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{bad}");
    }
    let (status, _) = call(&app, Method::GET, "/session/nope", None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    let (status, _) = call(
        &app,
        Method::POST,
        "/session/nope/move",
        Some(r#"{"kind":"TypeII","k1":1,"k2":1}"#),
    )
    .await;
    assert_eq!(status, StatusCode::NOT_FOUND);

    let (_, created) = call(
        &app,
        Method::POST,
        "/session",
        Some(r#"{"m":2,"x":3,"y":3,"human_first":true}"#),
    )
    .await;
    let id = created["session_id"].as_str().unwrap();
    let (status, _) = call(
        &app,
        Method::POST,
        &format!("/session/{id}/move"),
        Some(r#"{"kind":"TypeIII","k1":1,"k2":1}"#),
    )
    .await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn classify_and_ppositions_routes() {
    let app = app();
    let (status, body) = call(&app, Method::GET, "/classify?m=5&x=4&y=7", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body, json!({"label": "P", "winning_move": null}));

    let (_, body) = call(&app, Method::GET, "/classify?m=3&x=2&y=2", None).await;
    assert_eq!(
        body,
        json!({"label": "N", "winning_move": {"kind": "TypeI-pile2", "k1": 0, "k2": 1}})
    );

    let (status, body) = call(&app, Method::GET, "/ppositions?m=4", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["count"], 5);
    assert_eq!(body["positions"][4], json!({"x": 5, "y": 3}));

    for m in 1..=50u64 {
        let (_, body) = call(&app, Method::GET, &format!("/ppositions?m={m}"), None).await;
        let a = modwythoff_core::beatty::a_of_m(m).unwrap();
        assert_eq!(body["count"], 2 * a + 1);
        assert_eq!(body["positions"].as_array().unwrap().len() as u64, 2 * a + 1);
    }

    for uri in ["/classify?m=0&x=1&y=1", "/classify?m=2&x=1", "/ppositions?m=abc", "/ppositions?m=0"] {
        let (status, _) = call(&app, Method::GET, uri, None).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{uri}");
    }
}

#[tokio::test]
async fn identical_requests_give_identical_transcripts() {
    async fn transcript() -> Vec<Value> {
        let app = app();
        let mut log = Vec::new();
        let (_, created) = call(
            &app,
            Method::POST,
            "/session",
            Some(r#"{"m":3,"x":9,"y":14,"human_first":true}"#),
        )
        .await;
        let id = created["session_id"].as_str().unwrap().to_owned();
        log.push(created);
        for mv in [
            r#"{"kind":"TypeI-pile1","k1":1,"k2":0}"#,
            r#"{"kind":"TypeI-pile2","k1":0,"k2":1}"#,
            r#"{"kind":"TypeII","k1":1,"k2":1}"#,
        ] {
            log.push(call(&app, Method::POST, &format!("/session/{id}/move"), Some(mv)).await.1);
        }
        log.push(call(&app, Method::GET, &format!("/session/{id}"), None).await.1);
        log
    }
    assert_eq!(transcript().await, transcript().await);
}
