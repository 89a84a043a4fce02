use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgecontract")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON output")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("edgecontract-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn orbifold_value() {
    let o = run(&["hurwitz", "--r", "2", "--g", "0", "--mu", "3,1", "--oracle", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["calH"], "9/2");
    assert_eq!(v["H"], "3/2");
    for k in ["jpt", "factorization", "hgraph"] {
        assert_eq!(v["checks"][k]["agrees"], true, "{k}");
    }
}

#[test]
fn off_support_is_zero() {
    let o = run(&["hurwitz", "--r", "2", "--g", "0", "--mu", "3,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["calH"], "0");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["hurwitz", "--r", "2"][..],
        &["frobnicate"],
        &["hurwitz", "--r", "2", "--g", "0", "--mu", "3,1", "--bogus"],
        &["mirror", "verify", "--r", "1", "--N", "99"],
        &["tqft", "eval", "--algebra", "nope", "--graph", "x", "--vectors", "[]"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert!(String::from_utf8(run(&["frobnicate"]).stderr).unwrap().contains("Usage"));
}

#[test]
fn canonical_json_round_trips_byte_for_byte() {
    // three edges between two vertices, embedded on the torus, darts scrambled
    let raw = r#"{"vertices":[[5,1,3],[4,0,2]],"edges":[[1,4],[5,2],[3,0]]}"#;
    let first = run(&["graph", "canon", "--graph", scratch("theta.json", raw).to_str().unwrap()]);
    assert_eq!(first.status.code(), Some(0));
    let text = stdout(&first);
    let again = run(&["graph", "canon", "--graph", scratch("canon.json", &text).to_str().unwrap()]);
    assert_eq!(stdout(&again), text);
    let ty = json(&run(&["graph", "type", "--graph", scratch("canon2.json", &text).to_str().unwrap()]));
    assert_eq!((ty["g"].as_u64(), ty["n"].as_u64(), ty["faces"].as_u64()), (Some(1), Some(2), Some(1)));
}

#[test]
fn random_graphs_reload_and_canonicalize() {
    for seed in 0..5 {
        let o = run(&["graph", "random", "--edges", "4", "--seed", &seed.to_string()]);
        let p = scratch(&format!("r{seed}.json"), &stdout(&o));
        let first = stdout(&run(&["graph", "canon", "--graph", p.to_str().unwrap()]));
        let q = scratch(&format!("c{seed}.json"), &first);
        assert_eq!(stdout(&run(&["graph", "canon", "--graph", q.to_str().unwrap()])), first);
    }
    let det = |s: &str| stdout(&run(&["graph", "random", "--edges", "5", "--seed", s]));
    assert_eq!(det("7"), det("7"));
}

#[test]
fn tqft_eval_on_a_torus() {
    let g = scratch("torus.json", r#"{"vertices":[[0,1,2,3]],"edges":[[0,2],[1,3]]}"#);
    let o = run(&["tqft", "eval", "--algebra", "center:S3", "--graph", g.to_str().unwrap(), "--vectors", r#"[["1","0","0"]]"#]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["value"], "3");
    assert_eq!(v["type"]["g"], 1);
    let o = run(&["tqft", "verify", "--max-edges", "3", "--algebra", "dual-numbers", "--trials", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["passed"], true);
}

#[test]
fn mirror_and_hgraph_commands() {
    let o = run(&["mirror", "verify", "--r", "1,2", "--N", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["reports"].as_array().unwrap().len(), 4);
    let s = json(&run(&["mirror", "spectral", "--r", "2", "--N", "6"]));
    assert_eq!(s["y_of_x"]["coeffs"], serde_json::json!([[2, "1"], [4, "2"], [6, "6"]]));
    let h = json(&run(&["hgraph", "count", "--r", "2", "--g", "0", "--mu", "3,1"]));
    assert_eq!(h["total"], "9/2");
    let weights: Vec<&str> = h["classes"].as_array().unwrap().iter().map(|c| c["weight"].as_str().unwrap()).collect();
    // one class on the bigon, two on the loop with a pendant edge
    assert_eq!(weights, ["3/2", "3/2", "3/2"]);
}

#[test]
fn table_rows_are_ordered() {
    let o = run(&["hurwitz", "table", "--r", "1", "--g", "0..1", "--d-max", "3", "--format", "csv"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "r,g,n,mu,calH,H");
    assert_eq!(rows[1], "1,0,1,1,1,1");
    assert!(rows.iter().any(|r| r.starts_with("1,1,")));
    let keys: Vec<(i64, usize)> = rows[1..]
        .iter()
        .map(|r| {
            let f: Vec<&str> = r.split(',').collect();
            (f[1].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect();
    assert!(keys.windows(2).all(|w| w[0] <= w[1]));
}
