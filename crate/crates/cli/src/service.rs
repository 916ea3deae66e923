//! HTTP JSON API.
//!
//! | route | body / query | response |
//! |---|---|---|
//! | `POST /session` | `{m, x, y, human_first}` | `{session_id, position, status}` |
//! | `GET /session/{id}` | | full [`SessionState`] |
//! | `POST /session/{id}/move` | `{kind, k1, k2}` | `{engine_reply, position, status, classification}` |
//! | `GET /classify?m=&x=&y=` | | `{label, winning_move}` |
//! | `GET /ppositions?m=` | | `{count, positions}` |
//!
//! Errors are `{"error": ..}` with 400 (malformed input), 404 (unknown
//! session) or 422 (illegal move, with a `rule` field).

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use modwythoff_core::modular::classify;
use modwythoff_core::{GameParams, Label, Move, Position};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::output::{ClassifyOutput, PPositionsOutput};
use crate::session::{SessionError, SessionState, Status};

#[derive(Default)]
pub struct AppState {
    sessions: Mutex<HashMap<String, Arc<Mutex<SessionState>>>>,
    next_id: AtomicU64,
}

impl AppState {
    fn insert(&self, make: impl FnOnce(String) -> SessionState) -> SessionState {
        let n = self.next_id.fetch_add(1, Ordering::Relaxed) + 1;
        let id = format!("{n:016x}");
        let state = make(id.clone());
        self.sessions
            .lock()
            .unwrap()
            .insert(id, Arc::new(Mutex::new(state.clone())));
        state
    }

    fn get(&self, id: &str) -> Result<Arc<Mutex<SessionState>>, ApiError> {
        self.sessions
            .lock()
            .unwrap()
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::NotFound(id.to_owned()))
    }
}

#[derive(Debug)]
pub enum ApiError {
    BadRequest(String),
    NotFound(String),
    Unprocessable { message: String, rule: &'static str },
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        match self {
            ApiError::BadRequest(msg) => {
                (StatusCode::BAD_REQUEST, Json(json!({ "error": msg }))).into_response()
            }
            ApiError::NotFound(id) => (
                StatusCode::NOT_FOUND,
                Json(json!({ "error": format!("unknown session {id}") })),
            )
                .into_response(),
            ApiError::Unprocessable { message, rule } => (
                StatusCode::UNPROCESSABLE_ENTITY,
                Json(json!({ "error": message, "rule": rule })),
            )
                .into_response(),
        }
    }
}

fn parse_body<T: DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::BadRequest(format!("malformed body: {e}")))
}

fn params(m: u64) -> Result<GameParams, ApiError> {
    GameParams::new(m).map_err(|e| ApiError::BadRequest(e.to_string()))
}

fn position(x: u64, y: u64) -> Result<Position, ApiError> {
    Position::new(x, y).map_err(|e| ApiError::BadRequest(e.to_string()))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NewSession {
    pub m: u64,
    pub x: u64,
    pub y: u64,
    pub human_first: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NewSessionResponse {
    pub session_id: String,
    pub position: Position,
    pub status: Status,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MoveResponse {
    pub engine_reply: Option<Move>,
    pub position: Position,
    pub status: Status,
    /// Label of the current position for the player about to move.
    pub classification: Label,
}

#[derive(Debug, Deserialize)]
pub struct ClassifyQuery {
    pub m: u64,
    pub x: u64,
    pub y: u64,
}

#[derive(Debug, Deserialize)]
pub struct PPositionsQuery {
    pub m: u64,
}

async fn create_session(
    State(app): State<Arc<AppState>>,
    body: Bytes,
) -> Result<(StatusCode, Json<NewSessionResponse>), ApiError> {
    let req: NewSession = parse_body(&body)?;
    let params = params(req.m)?;
    let start = position(req.x, req.y)?;
    let state = app.insert(|id| SessionState::new(id, params, start, req.human_first));
    Ok((
        StatusCode::CREATED,
        Json(NewSessionResponse {
            session_id: state.session_id,
            position: state.current,
            status: state.status,
        }),
    ))
}

async fn get_session(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
) -> Result<Json<SessionState>, ApiError> {
    let session = app.get(&id)?;
    let state = session.lock().unwrap().clone();
    Ok(Json(state))
}

async fn play_move(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<MoveResponse>, ApiError> {
    let session = app.get(&id)?;
    let mv: Move = parse_body(&body)?;
    let mut state = session.lock().unwrap();
    let engine_reply = state.human_move(mv).map_err(|e| match e {
        SessionError::GameOver => ApiError::Unprocessable {
            message: e.to_string(),
            rule: "game_over",
        },
        SessionError::Illegal(why) => ApiError::Unprocessable {
            message: e.to_string(),
            rule: why.rule(),
        },
    })?;
    Ok(Json(MoveResponse {
        engine_reply,
        position: state.current,
        status: state.status,
        classification: classify(state.current, state.params()),
    }))
}

async fn classify_route(Query(q): Query<ClassifyQuery>) -> Result<Json<ClassifyOutput>, ApiError> {
    Ok(Json(ClassifyOutput::compute(position(q.x, q.y)?, params(q.m)?)))
}

async fn ppositions_route(
    Query(q): Query<PPositionsQuery>,
) -> Result<Json<PPositionsOutput>, ApiError> {
    PPositionsOutput::compute(params(q.m)?)
        .map(Json)
        .map_err(|e| ApiError::BadRequest(e.to_string()))
}

pub fn router() -> Router {
    router_with(Arc::new(AppState::default()))
}

pub fn router_with(state: Arc<AppState>) -> Router {
    Router::new()
        .route("/session", post(create_session))
        .route("/session/{id}", get(get_session))
        .route("/session/{id}/move", post(play_move))
        .route("/classify", get(classify_route))
        .route("/ppositions", get(ppositions_route))
        .with_state(state)
}

/// Binds and serves until the process is stopped.
pub async fn serve(bind: &str, port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind((bind, port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router()).await
}
