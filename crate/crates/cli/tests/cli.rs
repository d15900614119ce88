//! End-to-end checks of the command-line surface: subcommand outputs, file
//! formats, exit codes, and determinism across worker counts.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_superdom"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

fn tmp_file(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("superdom-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, content).expect("tmp file writes");
    path
}

#[test]
fn construct_and_compute_round_trip() {
    let out = run(&["construct", "complete", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "C~");

    let k4 = tmp_file("k4.g6", "C~\n");
    let out = run(&["compute", "gamma_sp", k4.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(json["name"], "gamma_sp");
    assert_eq!(json["value"], 3);
    assert_eq!(json["witness"]["dom_set"].as_array().unwrap().len(), 3);
}

#[test]
fn compute_reads_edge_lists_and_stdin_format() {
    let p4 = tmp_file("p4.el", "0 1\n1 2\n2 3\n");
    let out = run(&["compute", "gamma_sp", p4.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(json["value"], 2);
}

#[test]
fn compute_alpha_k_requires_k() {
    let k4 = tmp_file("k4b.g6", "C~\n");
    let out = run(&["compute", "alpha_k", k4.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["compute", "alpha_k", "--k", "3", k4.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(json["value"], 3);
    assert_eq!(json["k"], 3);
}

#[test]
fn malformed_input_is_a_usage_error() {
    let bad = tmp_file("bad.g6", "!!\n");
    let out = run(&["compute", "gamma", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let missing = run(&["compute", "gamma", "/nonexistent/file.g6"]);
    assert_eq!(missing.status.code(), Some(2));
    let unknown = run(&["compute", "nonsense", bad.to_str().unwrap()]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let out = run(&["enumerate", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 8);

    let out = run(&["enumerate", "4", "--filter", "connected"]);
    assert_eq!(stdout(&out).lines().count(), 38);

    let out = run(&["enumerate", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn product_join_matches_bipartite() {
    let n2 = tmp_file("n2.g6", "A?\n");
    let n3 = tmp_file("n3.g6", "B?\n");
    let out = run(&[
        "product",
        "join",
        n2.to_str().unwrap(),
        n3.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    let expect = run(&["construct", "complete_bipartite", "2", "3"]);
    assert_eq!(json["graph6"], stdout(&expect).trim());
    assert_eq!(json["offsets"], serde_json::json!([0, 2]));
}

#[test]
fn product_lex_uniform() {
    let k2 = tmp_file("k2.g6", "A_\n");
    let p3 = tmp_file("p3lex.g6", "Bo\n"); // 0-1, 1-2
    let out = run(&["product", "lex", k2.to_str().unwrap(), p3.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(json["g_order"], 2);
    assert_eq!(json["h_orders"], serde_json::json!([3, 3]));
}

#[test]
fn bounds_report_includes_exact() {
    let c4 = tmp_file("c4.g6", "Cr\n"); // 4-cycle 0-1-2-3-0 relabelled
    let p3 = tmp_file("p3b.g6", "Bo\n");
    let out = run(&["bounds", c4.to_str().unwrap(), p3.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(json["n"], 4);
    assert_eq!(json["n_prime"], 3);
    assert_eq!(json["gamma_sp_exact"], 10);
    let entries = json["applicable"].as_array().unwrap();
    assert!(entries.iter().any(|e| e["theorem"] == "thm11"));

    let out = run(&[
        "bounds",
        c4.to_str().unwrap(),
        p3.to_str().unwrap(),
        "--op",
        "join",
    ]);
    assert!(out.status.success());
}

#[test]
fn family_f_construct_recognize_round_trip() {
    let out = run(&[
        "family-f",
        "construct",
        "--cliques",
        "2,2",
        "--empties",
        "1,2",
    ]);
    assert!(out.status.success());
    let g6 = stdout(&out).trim().to_string();
    let file = tmp_file("fig1.g6", &format!("{g6}\n"));
    let out = run(&["family-f", "recognize", file.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(json["member"], true);
    assert_eq!(json["k"], 2);
    assert_eq!(json["k_prime"], 2);

    // a path is not a member
    let p4 = tmp_file("p4f.g6", "Ch\n");
    let out = run(&["family-f", "recognize", p4.to_str().unwrap()]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(json["member"], false);

    // degenerate shape is rejected
    let out = run(&["family-f", "construct", "--cliques", "3", "--empties", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reduce_alpha_trace() {
    let p3 = tmp_file("p3r.g6", "Bo\n");
    let out = run(&["reduce-alpha", p3.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(json["alpha"], 2);
    assert_eq!(json["t"], 4);
    assert_eq!(json["product_order"], 24);
    assert_eq!(json["gamma_sp_product"], 16);
}

#[test]
fn verify_passes_and_unknown_id_fails() {
    let out = run(&["verify", "thm1", "--max-n", "4"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(json["theorem_id"], "thm1");
    assert_eq!(json["failed"], 0);

    let out = run(&["verify", "thm99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_accepts_graph6_file_corpus() {
    let enumerated = run(&["enumerate", "4", "--filter", "connected"]);
    let file = tmp_file("n4conn.g6", &stdout(&enumerated));
    let out = run(&["verify", "gallai", "--corpus", file.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(json["instances"], 38);
    assert_eq!(json["failed"], 0);

    // pair sweeps refuse a single-graph corpus
    let out = run(&["verify", "thm10", "--corpus", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn list_theorems_has_all_ids() {
    let out = run(&["list-theorems"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 24);
    for id in [
        "eq2-chain",
        "thm7-familyF",
        "cor-nphard-reduction",
        "lemma-important",
        "thm23",
    ] {
        assert!(text.contains(id), "missing {id}");
    }
}

#[test]
fn campaign_reports_and_exit_code() {
    let out = run(&[
        "campaign",
        "--only",
        "thm1,gallai",
        "--max-n",
        "3",
        "--no-timing",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(json.as_array().unwrap().len(), 2);

    let csv = run(&[
        "campaign", "--only", "thm1", "--max-n", "3", "--format", "csv",
    ]);
    assert!(stdout(&csv).starts_with("theorem_id,corpus,instances,failures,elapsed_ms"));

    let md = run(&[
        "campaign", "--only", "gallai", "--max-n", "3", "--format", "markdown",
    ]);
    assert!(stdout(&md).contains("| gallai |"));
}

#[test]
fn campaign_deterministic_across_worker_counts() {
    let run_with = |workers: &str| -> String {
        let out = bin()
            .args(["campaign", "--max-n", "3", "--no-timing"])
            .env("SUPERDOM_WORKERS", workers)
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        stdout(&out)
    };
    let one = run_with("1");
    let eight = run_with("8");
    assert_eq!(one, eight);
    assert!(one.contains("\"max_n\": 3"));
}
