use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ungar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ungar")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn counts() {
    let o = ungar(&["count", "--family", "tamari", "--n", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "4\n");
    assert_eq!(
        stdout(&ungar(&["count", "--family", "rectangle", "--a", "2", "--b", "2"])),
        "4\n"
    );
    assert_eq!(stdout(&ungar(&["count", "--family", "weak", "--n", "5"])), "29\n");
    let v: serde_json::Value =
        serde_json::from_slice(&ungar(&["count", "--family", "typea", "--n", "5", "--json"]).stdout).unwrap();
    assert_eq!(v["count"], "24");
    assert_eq!(v["schema"], 1);
}

#[test]
fn quick_verification_passes() {
    let o = ungar(&["verify", "--suite", "all", "--quick"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with(", 0 failed\n"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["count", "--family", "weak"][..],
        &["count", "--family", "nonsense", "--n", "3"],
        &["verify", "--suite", "nope"],
        &["frobnicate"],
        &["compile-formula", "--formula", "x|y|z", "--assign", "x=1,y=1,z=0"],
        &["solve-lattice", "/nonexistent/lattice.json"],
    ] {
        assert_eq!(ungar(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn series_is_exact_and_stable() {
    let a = ungar(&["series", "--which", "tamari", "--order", "12"]);
    let v: Vec<String> = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v[..6], ["1", "1", "2", "4", "9", "20"]);
    assert_eq!(v.len(), 12);
    let b = ungar(&["series", "--which", "tamari", "--order", "12"]);
    assert_eq!(a.stdout, b.stdout);
    let t: Vec<String> =
        serde_json::from_slice(&ungar(&["series", "--which", "typea", "--order", "5"]).stdout).unwrap();
    assert_eq!(t, ["1", "2", "4", "10", "24"]);
}

#[test]
fn compile_emits_a_solvable_lattice() {
    let dir = std::env::temp_dir().join(format!("ungar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lattice.json");
    let p = path.to_str().unwrap();
    let o = ungar(&[
        "compile-formula",
        "--formula",
        "(x|y)",
        "--assign",
        "x=1,y=0",
        "--emit",
        p,
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("agrees      yes"));
    let v: serde_json::Value = serde_json::from_slice(&ungar(&["solve-lattice", p, "--json"]).stdout).unwrap();
    assert_eq!(v["n"], 10);
    assert_eq!(v["top_label"], "Eeta");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn conjecture_reports() {
    let v: serde_json::Value =
        serde_json::from_slice(&ungar(&["conjecture", "--which", "yf", "--max-rank", "6", "--json"]).stdout).unwrap();
    assert_eq!(
        v[0],
        serde_json::json!({ "n": 2, "computed": 2, "predicted": 2, "match": true })
    );
    let v: serde_json::Value =
        serde_json::from_slice(&ungar(&["conjecture", "--which", "ss", "--n", "8", "--json"]).stdout).unwrap();
    assert_eq!(v["match"], true);
    assert_eq!(v["computed"], 56);
}

fn play(args: &[&str], input: &str) -> String {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ungar"))
        .arg("play")
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn play_single_box() {
    assert!(play(&["skew", "--lam", "1"], "1,1\n").ends_with("You win.\n"));
}

#[test]
fn play_square_engine_responds_and_wins() {
    let out = play(&["skew", "--lam", "2,2"], "\n(1,1)\n2,2\n2,1\n");
    assert!(out.contains("illegal move; legal: (2,2)"));
    assert!(out.ends_with("The engine wins.\n"));
}

#[test]
fn play_skew_with_inner_shape() {
    // (2,1)/(1): the two boxes are incomparable, taking both wins.
    let out = play(&["skew", "--lam", "2,1", "--mu", "1"], "hint\n1,2 2,1\n");
    assert!(out.contains("winning: (1,2) (2,1)"), "{out}");
    assert!(out.ends_with("You win.\n"));
}
