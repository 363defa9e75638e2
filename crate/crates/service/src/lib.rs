//! HTTP sessions for playing Ungar games against the engine.
//!
//! The human moves through `POST /session/{id}/move`; the engine answers in
//! the same request. Sessions live in memory and expire after a period of
//! inactivity.

pub mod board;

use std::collections::HashMap;
use std::net::SocketAddr;
use std::sync::{Arc, Mutex, RwLock};
use std::time::{Duration, Instant};

use axum::extract::{Path, State};
use axum::http::{header, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Serialize;
use serde_json::{json, Map, Value};
use tower_http::cors::{Any, CorsLayer};

use board::{Board, ParamError};

pub const DEFAULT_TTL: Duration = Duration::from_secs(3600);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ongoing,
    HumanWon,
    EngineWon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Player {
    Human,
    Engine,
}

#[derive(Clone, Debug, Serialize)]
struct Ply {
    by: Player,
    #[serde(rename = "move")]
    mv: Value,
}

struct Session {
    family: String,
    params: Value,
    engine_first: bool,
    board: Board,
    history: Vec<Ply>,
    status: Status,
    touched: Instant,
}

impl Session {
    /// The player to move at a terminal position has lost.
    fn settle(&mut self, to_move: Player) {
        if self.board.is_terminal() {
            self.status = match to_move {
                Player::Human => Status::EngineWon,
                Player::Engine => Status::HumanWon,
            };
        }
    }

    fn engine_turn(&mut self) -> Option<Value> {
        let mv = self.board.engine_reply()?;
        self.history.push(Ply {
            by: Player::Engine,
            mv: mv.clone(),
        });
        self.settle(Player::Human);
        Some(mv)
    }

    fn view(&mut self, id: &str) -> Value {
        json!({
            "id": id,
            "family": self.family,
            "params": self.params,
            "engine_first": self.engine_first,
            "state": self.board.state(),
            "legal_moves": self.legal_moves(),
            "status": self.status,
            "history": self.history,
        })
    }

    fn legal_moves(&mut self) -> Vec<Value> {
        if self.status == Status::Ongoing {
            self.board.legal_moves()
        } else {
            Vec::new()
        }
    }
}

type Shared = Arc<Mutex<Session>>;

#[derive(Clone)]
pub struct AppState {
    sessions: Arc<RwLock<HashMap<String, Shared>>>,
    ttl: Duration,
}

impl Default for AppState {
    fn default() -> Self {
        Self::with_ttl(DEFAULT_TTL)
    }
}

impl AppState {
    pub fn with_ttl(ttl: Duration) -> Self {
        AppState {
            sessions: Arc::default(),
            ttl,
        }
    }

    pub fn session_count(&self) -> usize {
        self.sessions.read().expect("session table").len()
    }

    /// Drops sessions idle for longer than the TTL.
    pub fn evict_expired(&self) {
        let now = Instant::now();
        self.sessions
            .write()
            .expect("session table")
            .retain(|_, s| match s.try_lock() {
                Ok(s) => now.duration_since(s.touched) <= self.ttl,
                // Busy sessions are in use right now.
                Err(_) => true,
            });
    }

    fn get(&self, id: &str) -> Result<Shared, ApiError> {
        self.evict_expired();
        self.sessions
            .read()
            .expect("session table")
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, format!("no session `{id}`")))
    }
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    body: Value,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        ApiError {
            status,
            body: json!({ "error": message.into() }),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}

impl From<ParamError> for ApiError {
    fn from(e: ParamError) -> Self {
        match e {
            ParamError::Invalid(m) => ApiError::new(StatusCode::BAD_REQUEST, m),
            ParamError::TooLarge(m) => ApiError::new(StatusCode::PAYLOAD_TOO_LARGE, m),
        }
    }
}

pub fn router(state: AppState) -> Router {
    let cors = CorsLayer::new()
        .allow_origin(Any)
        .allow_methods([Method::GET, Method::POST])
        .allow_headers([header::CONTENT_TYPE]);
    Router::new()
        .route("/session", post(create_session))
        .route("/session/{id}", get(show_session))
        .route("/session/{id}/move", post(make_move))
        .route("/session/{id}/hint", get(hint))
        .layer(cors)
        .with_state(state)
}

/// Serves until the process is interrupted.
pub async fn serve(addr: SocketAddr) -> std::io::Result<()> {
    let state = AppState::default();
    let sweeper = state.clone();
    tokio::spawn(async move {
        let mut tick = tokio::time::interval(Duration::from_secs(60));
        loop {
            tick.tick().await;
            sweeper.evict_expired();
        }
    });
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(state))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}

fn object(body: Value) -> Result<Map<String, Value>, ApiError> {
    match body {
        Value::Object(m) => Ok(m),
        _ => Err(ApiError::new(StatusCode::BAD_REQUEST, "body must be a JSON object")),
    }
}

async fn create_session(State(app): State<AppState>, Json(body): Json<Value>) -> Result<Json<Value>, ApiError> {
    let mut body = object(body)?;
    let family = match body.remove("family") {
        Some(Value::String(f)) => f,
        _ => return Err(ApiError::new(StatusCode::BAD_REQUEST, "`family` must be a string")),
    };
    let engine_first = match body.remove("engine_first") {
        None | Some(Value::Null) => false,
        Some(Value::Bool(b)) => b,
        Some(_) => {
            return Err(ApiError::new(
                StatusCode::BAD_REQUEST,
                "`engine_first` must be a boolean",
            ))
        }
    };
    let want_hint = matches!(body.remove("hint"), Some(Value::Bool(true)));
    // Parameters may be nested under `params` or given inline.
    let params = body.remove("params").unwrap_or(Value::Object(body));

    let board = Board::create(&family, &params)?;
    let mut session = Session {
        family,
        params,
        engine_first,
        board,
        history: Vec::new(),
        status: Status::Ongoing,
        touched: Instant::now(),
    };
    let engine_reply = if engine_first {
        session.settle(Player::Engine);
        if session.status == Status::Ongoing {
            session.engine_turn()
        } else {
            None
        }
    } else {
        session.settle(Player::Human);
        None
    };

    let id = uuid::Uuid::new_v4().simple().to_string();
    let mut out = json!({
        "id": id,
        "state": session.board.state(),
        "legal_moves": session.legal_moves(),
        "status": session.status,
    });
    if let Some(r) = engine_reply {
        out["engine_reply"] = r;
    }
    if want_hint {
        out["hint"] = json!(hint_moves(&mut session));
    }
    app.evict_expired();
    app.sessions
        .write()
        .expect("session table")
        .insert(id, Arc::new(Mutex::new(session)));
    Ok(Json(out))
}

fn hint_moves(s: &mut Session) -> Vec<Value> {
    if s.status == Status::Ongoing {
        s.board.winning_moves()
    } else {
        Vec::new()
    }
}

async fn show_session(State(app): State<AppState>, Path(id): Path<String>) -> Result<Json<Value>, ApiError> {
    let shared = app.get(&id)?;
    let mut s = shared.lock().expect("session");
    s.touched = Instant::now();
    Ok(Json(s.view(&id)))
}

async fn hint(State(app): State<AppState>, Path(id): Path<String>) -> Result<Json<Value>, ApiError> {
    let shared = app.get(&id)?;
    let mut s = shared.lock().expect("session");
    s.touched = Instant::now();
    Ok(Json(json!({ "winning_moves": hint_moves(&mut s) })))
}

async fn make_move(
    State(app): State<AppState>,
    Path(id): Path<String>,
    Json(body): Json<Value>,
) -> Result<Json<Value>, ApiError> {
    let shared = app.get(&id)?;
    let mut s = shared.lock().expect("session");
    s.touched = Instant::now();
    if s.status != Status::Ongoing {
        return Err(ApiError::new(StatusCode::CONFLICT, "the game is finished"));
    }
    let mv = object(body)?.remove("move").unwrap_or(Value::Null);
    let played = match s.board.apply(&mv) {
        Ok(m) => m,
        Err(_) => {
            let legal = s.board.legal_moves();
            return Err(ApiError {
                status: StatusCode::UNPROCESSABLE_ENTITY,
                body: json!({ "error": "illegal move", "legal_moves": legal }),
            });
        }
    };
    s.history.push(Ply {
        by: Player::Human,
        mv: played,
    });
    s.settle(Player::Engine);
    let engine_reply = if s.status == Status::Ongoing {
        s.engine_turn()
    } else {
        None
    };
    let mut out = json!({
        "state": s.board.state(),
        "legal_moves": s.legal_moves(),
        "status": s.status,
    });
    if let Some(r) = engine_reply {
        out["engine_reply"] = r;
    }
    Ok(Json(out))
}
