use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn nbc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nbc")).args(args).output().expect("binary runs")
}

fn nbc_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_nbc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

const PRISM: &str = "E{Sw";
const K4: &str = "C~";

#[test]
fn solve_prism_and_k4() {
    let out = nbc(&["solve", PRISM]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["status"], "found");
    assert_eq!(r["verified"], true);
    assert_eq!(r["coloring"].as_array().unwrap().len(), 6);

    let out = nbc(&["solve", K4]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["status"], "none");
    assert_eq!(r["reversed_confirms"], true);
    assert_eq!(r["precheck"]["result"], "fail");
}

#[test]
fn solve_reads_stdin_lines() {
    let out = nbc_stdin(&["solve", "-"], &format!("{PRISM}\n\n{K4}\n"));
    assert_eq!(out.status.code(), Some(0));
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["status"], "found");
    assert_eq!(rows[1]["status"], "none");
}

#[test]
fn solve_budget_is_reported() {
    // G(9,1) needs more than one assignment.
    let g6 = json(&nbc(&["family", "petersen", "9", "1"]))["graph6"].as_str().unwrap().to_string();
    let out = nbc(&["solve", &g6, "--budget", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "budget");
}

#[test]
fn bad_input_exits_2() {
    let out = nbc(&["solve", "not graph6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid graph6"));
    assert_eq!(nbc(&["family", "petersen", "4", "1"]).status.code(), Some(2));
    assert_eq!(nbc(&["family", "pappus", "6", "1"]).status.code(), Some(2));
    assert_eq!(nbc(&["cubic", "analyze", "C]"]).status.code(), Some(2));
}

#[test]
fn family_writes_verifiable_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("coloring.json");
    let out = nbc(&["family", "pappus", "6", "1", "3", "--coloring", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["label"], "P(6,1,3)");
    assert_eq!(r["n"], 18);
    assert_eq!(r["coloring_verifies"], true);

    let g6 = r["graph6"].as_str().unwrap();
    let out = nbc(&["verify", g6, path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["balanced"], true);
    assert_eq!(v["stats"]["vertex_class_sizes"], serde_json::json!([6, 6, 6]));
}

#[test]
fn family_without_explicit_coloring() {
    let out = nbc(&["family", "mobius", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["predicted_balanced"], false);
    assert!(r["coloring"].is_null());
}

#[test]
fn verify_rejects_unbalanced_and_malformed() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "[0,0,0,0,0,0]").unwrap();
    let out = nbc(&["verify", PRISM, bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["balanced"], false);

    std::fs::write(&bad, "[0,1,2,0,1,2]").unwrap();
    assert_eq!(nbc(&["verify", PRISM, bad.to_str().unwrap()]).status.code(), Some(0));

    std::fs::write(&bad, "[0,1,5]").unwrap();
    assert_eq!(nbc(&["verify", PRISM, bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&bad, "[0,1,2]").unwrap();
    assert_eq!(nbc(&["verify", PRISM, bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn scan_rows_agree() {
    let out = nbc(&["scan", "petersen", "--range", "5..=12"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json_lines(&out);
    assert_eq!(rows.len(), (5..=12).map(|m| (m - 1) / 2).sum::<usize>());
    assert!(rows.iter().all(|r| r["agree"] == true));
    let solvable: Vec<&str> = rows
        .iter()
        .filter(|r| r["solvable"] == true)
        .map(|r| r["label"].as_str().unwrap())
        .collect();
    assert_eq!(solvable, ["G(6,1)", "G(6,2)", "G(9,1)", "G(9,2)", "G(9,4)", "G(12,1)", "G(12,2)", "G(12,4)", "G(12,5)"]);

    let rows = json_lines(&nbc(&["scan", "mobius", "--range", "4-12"]));
    assert_eq!(rows.len(), 5);
    let rows = json_lines(&nbc(&["scan", "mobius", "--range", "4..12"]));
    assert_eq!(rows.len(), 4);
}

#[test]
fn classify_order_twelve() {
    let dir = tempfile::tempdir().unwrap();
    let summary = dir.path().join("summary.json");
    let out = nbc(&["classify", "--n", "12", "--summary", summary.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let records = json_lines(&out);
    assert_eq!(records.len(), 85);
    assert_eq!(records.iter().filter(|r| r["balanced"] == "yes").count(), 17);
    let s: Value = serde_json::from_str(&std::fs::read_to_string(&summary).unwrap()).unwrap();
    assert_eq!(s["balanced"], 17);
    assert_eq!(s["unexplained"], serde_json::json!([]));
    assert_eq!(s["all_checks_passed"], true);
    let human = String::from_utf8_lossy(&out.stderr);
    assert!(human.contains("85 graphs: 17 balanced"), "{human}");
}

#[test]
fn classify_corpus_file_merges_isomorphs() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.g6");
    // The prism twice (second relabeled), K4 and K_{3,3} twice.
    let relabeled_prism = "ELzO";
    let k33 = "EFz_";
    std::fs::write(&corpus, format!(">>graph6<<\n{PRISM}\n{relabeled_prism}\n{K4}\n{k33}\n{k33}\n")).unwrap();
    let out = nbc(&["classify", "--in", corpus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let records = json_lines(&out);
    assert_eq!(records.len(), 3);
    // Stored witnesses refer to the stored labeling.
    for r in records.iter().filter(|r| r["balanced"] == "yes") {
        let dir2 = tempfile::tempdir().unwrap();
        let c = dir2.path().join("c.json");
        std::fs::write(&c, r["witness"].to_string()).unwrap();
        assert_eq!(nbc(&["verify", r["graph6"].as_str().unwrap(), c.to_str().unwrap()]).status.code(), Some(0));
    }
}

#[test]
fn classify_needs_a_source() {
    assert_eq!(nbc(&["classify"]).status.code(), Some(2));
    assert_eq!(nbc(&["classify", "--n", "7"]).status.code(), Some(2));
}

#[test]
fn cubic_analyze_balanced_and_snark() {
    let out = nbc(&["cubic", "analyze", PRISM]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["balanced"], true);
    assert_eq!(r["checks_passed"], true);
    let w = &r["witness"];
    assert_eq!(w["sum_characterization"], true);
    assert_eq!(w["dataset_round_trip"], true);
    for m in w["matchings"].as_array().unwrap() {
        assert_eq!(m.as_array().unwrap().len(), 3);
    }
    assert_eq!(w["dataset"]["classes"].as_array().unwrap().len(), 3);

    let petersen = "IheA@GUAo";
    let out = nbc(&["cubic", "analyze", petersen]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["balanced"], false);
    assert_eq!(r["tait_colorable"], false);
    assert!(r["witness"].is_null());
}

#[test]
fn circulant_verify() {
    let out = nbc(&["circulant", "verify", "--family", "petersen", "--a", "2", "--j", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["linear"]["m"], 27);
    assert_eq!(r["linear"]["nonsingular"], true);
    assert_eq!(r["linear"]["expected_entry"], "1");
    assert_eq!(r["search"]["missing"], serde_json::json!([]));
    assert!(r["search"]["solutions"].as_array().unwrap().contains(&serde_json::json!([0, 10])));

    let out = nbc(&["circulant", "verify", "--family", "pappus", "--a", "1", "--j", "3", "--m", "12", "--no-search"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["linear"]["expected_entry"], "4/3");
    assert!(r["search"].is_null());

    // j = 1 leaves M singular.
    let out = nbc(&["circulant", "verify", "--family", "petersen", "--a", "1", "--j", "1", "--no-search"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["linear"]["nonsingular"], false);

    assert_eq!(nbc(&["circulant", "verify", "--family", "pappus", "--a", "0", "--j", "1"]).status.code(), Some(2));
}
