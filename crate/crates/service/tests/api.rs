use std::time::Duration;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;
use ungar_service::{router, AppState};

async fn call(app: &axum::Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let req = Request::builder().method(method).uri(uri);
    let req = match body {
        Some(b) => req
            .header("content-type", "application/json")
            .body(Body::from(b.to_string()))
            .unwrap(),
        None => req.body(Body::empty()).unwrap(),
    };
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let v = if bytes.is_empty() {
        Value::Null
    } else {
        serde_json::from_slice(&bytes).unwrap()
    };
    (status, v)
}

fn app() -> axum::Router {
    router(AppState::default())
}

#[tokio::test]
async fn square_has_one_move_and_engine_wins() {
    let app = app();
    let (st, v) = call(
        &app,
        "POST",
        "/session",
        Some(json!({ "family": "skew", "lam": [2, 2] })),
    )
    .await;
    assert_eq!(st, StatusCode::OK);
    assert_eq!(v["state"], json!({ "lam": [2, 2], "mu": [] }));
    assert_eq!(v["legal_moves"], json!([{ "remove": [[2, 2]] }]));
    assert_eq!(v["status"], "ongoing");
    let id = v["id"].as_str().unwrap().to_string();

    // Play out every line by always taking the first legal move; (2,2) is
    // an Eeta win for the responder, so the engine must win.
    let mut legal = v["legal_moves"].clone();
    loop {
        let mv = legal[0].clone();
        let (st, r) = call(
            &app,
            "POST",
            &format!("/session/{id}/move"),
            Some(json!({ "move": mv })),
        )
        .await;
        assert_eq!(st, StatusCode::OK);
        if r["status"] != "ongoing" {
            assert_eq!(r["status"], "engine_won");
            break;
        }
        legal = r["legal_moves"].clone();
    }
    let (st, _) = call(
        &app,
        "POST",
        &format!("/session/{id}/move"),
        Some(json!({ "move": legal[0] })),
    )
    .await;
    assert_eq!(st, StatusCode::CONFLICT);
}

#[tokio::test]
async fn engine_wins_every_line_on_the_square() {
    // Exhaustive over the human's choices: replay each prefix in a new session.
    let app = app();
    let mut stack: Vec<Vec<Value>> = vec![vec![]];
    let mut finished = 0;
    while let Some(line) = stack.pop() {
        let (_, v) = call(
            &app,
            "POST",
            "/session",
            Some(json!({ "family": "skew", "params": { "lam": [2, 2] } })),
        )
        .await;
        let id = v["id"].as_str().unwrap().to_string();
        let mut last = v;
        for mv in &line {
            let (st, r) = call(
                &app,
                "POST",
                &format!("/session/{id}/move"),
                Some(json!({ "move": mv })),
            )
            .await;
            assert_eq!(st, StatusCode::OK);
            last = r;
        }
        if last["status"] != "ongoing" {
            assert_eq!(last["status"], "engine_won", "{line:?}");
            finished += 1;
            continue;
        }
        for mv in last["legal_moves"].as_array().unwrap() {
            let mut next = line.clone();
            next.push(mv.clone());
            stack.push(next);
        }
    }
    assert!(finished >= 1);
}

#[tokio::test]
async fn tamari_start_and_hint() {
    let app = app();
    let (st, v) = call(
        &app,
        "POST",
        "/session",
        Some(json!({ "family": "tamari", "n": 3, "hint": true })),
    )
    .await;
    assert_eq!(st, StatusCode::OK);
    assert_eq!(v["state"], json!([3, 2, 1]));
    assert_eq!(v["hint"], json!([{ "to": [1, 2, 3] }, { "to": [2, 3, 1] }]));
    let id = v["id"].as_str().unwrap();
    let (st, h) = call(&app, "GET", &format!("/session/{id}/hint"), None).await;
    assert_eq!(st, StatusCode::OK);
    assert_eq!(h["winning_moves"], v["hint"]);
    let legal: Vec<Value> = v["legal_moves"].as_array().unwrap().clone();
    assert!(legal.contains(&json!({ "to": [1, 3, 2] })));
}

#[tokio::test]
async fn empty_shape_is_lost_by_the_first_mover() {
    let app = app();
    let (st, v) = call(&app, "POST", "/session", Some(json!({ "family": "skew", "lam": [] }))).await;
    assert_eq!(st, StatusCode::OK);
    assert_eq!(v["status"], "engine_won");
    assert_eq!(v["legal_moves"], json!([]));
    let (_, v) = call(
        &app,
        "POST",
        "/session",
        Some(json!({ "family": "skew", "lam": [], "engine_first": true })),
    )
    .await;
    assert_eq!(v["status"], "human_won");
}

#[tokio::test]
async fn single_box_is_won_by_the_human() {
    let app = app();
    let (_, v) = call(&app, "POST", "/session", Some(json!({ "family": "skew", "lam": [1] }))).await;
    let id = v["id"].as_str().unwrap();
    let (_, h) = call(&app, "GET", &format!("/session/{id}/hint"), None).await;
    assert_eq!(h["winning_moves"], json!([{ "remove": [[1, 1]] }]));
    let (st, r) = call(
        &app,
        "POST",
        &format!("/session/{id}/move"),
        Some(json!({ "move": { "remove": [[1, 1]] } })),
    )
    .await;
    assert_eq!(st, StatusCode::OK);
    assert_eq!(r["status"], "human_won");
    assert!(r.get("engine_reply").is_none());
    let (_, full) = call(&app, "GET", &format!("/session/{id}"), None).await;
    assert_eq!(full["history"].as_array().unwrap().len(), 1);
    assert_eq!(full["state"], json!({ "lam": [], "mu": [] }));
}

#[tokio::test]
async fn engine_first_replies_immediately() {
    let app = app();
    let (_, v) = call(
        &app,
        "POST",
        "/session",
        Some(json!({ "family": "tamari", "n": 3, "engine_first": true })),
    )
    .await;
    assert_eq!(v["engine_reply"], json!({ "to": [1, 2, 3] }));
    assert_eq!(v["status"], "engine_won");
}

#[tokio::test]
async fn errors_have_the_documented_codes() {
    let app = app();
    let (st, _) = call(
        &app,
        "POST",
        "/session",
        Some(json!({ "family": "skew", "lam": [1, 2] })),
    )
    .await;
    assert_eq!(st, StatusCode::BAD_REQUEST);
    let (st, _) = call(&app, "POST", "/session", Some(json!({ "family": "nim" }))).await;
    assert_eq!(st, StatusCode::BAD_REQUEST);
    let (st, _) = call(&app, "POST", "/session", Some(json!({ "family": "weak", "n": 30 }))).await;
    assert_eq!(st, StatusCode::PAYLOAD_TOO_LARGE);
    let (st, _) = call(&app, "GET", "/session/nope", None).await;
    assert_eq!(st, StatusCode::NOT_FOUND);
    let (st, _) = call(&app, "POST", "/session/nope/move", Some(json!({ "move": {} }))).await;
    assert_eq!(st, StatusCode::NOT_FOUND);

    let (_, v) = call(
        &app,
        "POST",
        "/session",
        Some(json!({ "family": "skew", "lam": [2, 1] })),
    )
    .await;
    let id = v["id"].as_str().unwrap();
    for bad in [json!({ "remove": [] }), json!({ "remove": [[1, 1]] }), json!("up")] {
        let (st, e) = call(
            &app,
            "POST",
            &format!("/session/{id}/move"),
            Some(json!({ "move": bad })),
        )
        .await;
        assert_eq!(st, StatusCode::UNPROCESSABLE_ENTITY);
        assert_eq!(e["legal_moves"], v["legal_moves"]);
    }
}

#[tokio::test]
async fn lattice_family_plays_on_an_uploaded_lattice() {
    let app = app();
    let diamond = json!({ "n": 4, "covers": [[0, 1], [0, 2], [1, 3], [2, 3]] });
    let (st, v) = call(
        &app,
        "POST",
        "/session",
        Some(json!({ "family": "lattice", "params": diamond })),
    )
    .await;
    assert_eq!(st, StatusCode::OK);
    assert_eq!(v["state"], json!(3));
    assert_eq!(v["legal_moves"], json!([{ "to": 0 }, { "to": 1 }, { "to": 2 }]));
    let bad = json!({ "n": 3, "covers": [[0, 1], [0, 2]] });
    let (st, _) = call(
        &app,
        "POST",
        "/session",
        Some(json!({ "family": "lattice", "params": bad })),
    )
    .await;
    assert_eq!(st, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn idle_sessions_expire() {
    let state = AppState::with_ttl(Duration::from_millis(20));
    let app = router(state.clone());
    let (_, v) = call(&app, "POST", "/session", Some(json!({ "family": "tamari", "n": 2 }))).await;
    let id = v["id"].as_str().unwrap();
    assert_eq!(state.session_count(), 1);
    tokio::time::sleep(Duration::from_millis(40)).await;
    let (st, _) = call(&app, "GET", &format!("/session/{id}"), None).await;
    assert_eq!(st, StatusCode::NOT_FOUND);
    assert_eq!(state.session_count(), 0);
}

#[tokio::test]
async fn cors_preflight_is_answered() {
    let app = app();
    let req = Request::builder()
        .method("OPTIONS")
        .uri("/session")
        .header("origin", "http://localhost:5173")
        .header("access-control-request-method", "POST")
        .body(Body::empty())
        .unwrap();
    let resp = app.oneshot(req).await.unwrap();
    assert_eq!(resp.headers()["access-control-allow-origin"], "*");
}
