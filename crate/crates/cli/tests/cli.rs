use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hypermatch"))
        .args(args)
        .env_remove("HYPERMATCH_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    // commands that fail early may exit before reading stdin
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = run(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str], stdin: &str) -> Value {
    serde_json::from_str(&ok(args, stdin)).unwrap()
}

const G: &str = "3 5 3\n0 1 2\n0 1 3\n0 2 4\n";

#[test]
fn poly_of_g() {
    let v = json(&["poly", "-"], G);
    assert_eq!(v["poly"], serde_json::json!([[5, "1"], [2, "-3"]]));
    assert_eq!(v["counts"], serde_json::json!(["1", "3"]));
}

#[test]
fn lambda_of_star_brackets_cube_root_of_three() {
    let star = ok(&["make", "cactus-h", "--k", "3", "--m", "3", "--t", "0"], "");
    let v = json(&["lambda", "--eps", "1e-12", "-"], &star);
    assert_eq!(v["y_lo"], "3");
    assert_eq!(v["y_hi"], "3");
    let approx = v["lambda_approx"].as_f64().unwrap();
    assert!((approx - 3f64.powf(1.0 / 3.0)).abs() < 1e-12);
}

#[test]
fn make_round_trips() {
    use hypermatch::constructions::*;
    let cases = [
        (vec!["make", "star", "--k", "4", "--m", "3"], k_star(4, 3)),
        (vec!["make", "cycle", "--k", "3", "--l", "4"], k_cycle(3, 4)),
        (vec!["make", "cactus-l", "--k", "3", "--m", "4", "--t", "1"], extremal_l(3, 4, 1)),
        (vec!["make", "complete-plus-star", "--k", "3", "--n", "5", "--p", "2"], complete_plus_star(5, 2, 3)),
    ];
    for (args, want) in cases {
        let text = ok(&args, "");
        assert_eq!(hypermatch::hgraph::text::parse(&text).unwrap(), want.unwrap(), "{args:?}");
    }
}

#[test]
fn shift_and_compare() {
    let shifted = ok(&["shift", "--u", "3", "--v", "4", "-"], G);
    assert_eq!(shifted, "3 5 3\n0 1 2\n0 1 3\n0 2 3\n");
    let dir = std::env::temp_dir().join(format!("hypermatch-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("a.hg"), dir.join("b.hg"));
    std::fs::write(&a, G).unwrap();
    std::fs::write(&b, &shifted).unwrap();
    let v = json(&["compare", a.to_str().unwrap(), b.to_str().unwrap()], "");
    assert_eq!(v["ordering"], "EQ_CERTIFIED");
    let part = ok(&["make", "star", "--k", "3", "--m", "1"], "");
    std::fs::write(dir.join("p.hg"), part).unwrap();
    let spec = format!("{}:0@4", dir.join("p.hg").display());
    let joined = ok(&["join", a.to_str().unwrap(), "--part", &spec], "");
    assert!(joined.starts_with("3 7 4\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn edge_move() {
    let moved = ok(&["move", "--u", "0", "--edge", "1:3", "-"], "3 6 2\n0 1 2\n3 4 5\n");
    assert_eq!(moved, "3 6 2\n0 1 2\n0 4 5\n");
}

#[test]
fn walktree_and_rho() {
    let v = json(&["walktree", "--order", "4,3,2,1,0", "-"], G);
    let walks = v["walks"].as_array().unwrap();
    assert_eq!(walks[0]["vertices"], serde_json::json!([0]));
    assert!(v["tree"].as_str().unwrap().starts_with(&format!("3 {} ", walks.len())));
    let tree = ok(&["walktree", "--tree-only", "-"], G);
    let r = json(&["rho", "-"], &tree);
    let l = json(&["lambda", "-"], G)["lambda_approx"].as_f64().unwrap();
    assert!((r["rho_approx"].as_f64().unwrap() - l).abs() < 1e-8);
}

#[test]
fn census_lines() {
    let out = ok(&["census", "--k", "3", "--m", "3", "--t", "1"], "");
    assert_eq!(out.lines().count(), 3);
    for l in out.lines() {
        let v: Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["t"], 1);
    }
}

#[test]
fn verify_main_cactus() {
    let v = json(&["verify", "--theorem", "main-cactus", "--k", "3", "--m", "4", "--t", "1"], "");
    assert_eq!(v["status"], "CONFIRMED");
    assert_eq!(v["theorem"], "main-cactus");
}

#[test]
fn verify_is_deterministic_across_jobs() {
    let args = ["verify", "--theorem", "ordering", "--samples", "30", "--max-m", "4", "--seed", "11"];
    let one = ok(&[&args[..], &["--jobs", "1"]].concat(), "");
    let four = ok(&[&args[..], &["--jobs", "4"]].concat(), "");
    assert_eq!(one, four);
    assert_eq!(one.lines().count(), 4);
}

#[test]
fn seed_from_environment() {
    let args = ["verify", "--theorem", "star-join", "--samples", "5"];
    let out = Command::new(env!("CARGO_BIN_EXE_hypermatch")).args(args).env("HYPERMATCH_SEED", "77").output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["params"]["seed"], 77);
    let v = json(&[&args[..], &["--seed", "78"]].concat(), "");
    assert_eq!(v["params"]["seed"], 78);
}

#[test]
fn exit_codes() {
    let out = run(&["shift", "--u", "9", "--v", "0", "-"], G);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "VertexOutOfRange");

    let out = run(&["poly", "-"], "3 3 1\n0 1\n");
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "NonUniformEdge");

    let out = run(&["lambda", "-"], "3 3 0\n");
    assert_eq!(serde_json::from_slice::<Value>(&out.stdout).unwrap()["error"], "NoEdges");

    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(run(&["make", "cactus-h", "--k", "3"], "").status.code(), Some(2));
    assert_eq!(run(&["lambda", "--eps", "2", "-"], G).status.code(), Some(2));
    assert_eq!(run(&["walktree", "--order", "a,b", "-"], G).status.code(), Some(2));
}
