use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use snarkkit::record::Record;

fn snarkkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snarkkit")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("snarkkit-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn records(path: &PathBuf) -> Vec<Record> {
    fs::read_to_string(path).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn generate_writes_catalogue_and_manifest() {
    let dir = scratch("generate");
    let out = dir.join("cyc4-12.g6");
    let run = snarkkit(&["generate", "--n", "12", "--class", "cyc4", "--output", out.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 18);
    for line in text.lines() {
        assert_eq!(snarkkit::decode_graph6(line).unwrap().order(), 12);
    }
    let manifest: Value = serde_json::from_str(&fs::read_to_string(dir.join("cyc4-12.g6.manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["count"], 18);
    assert_eq!(manifest["complete"], true);
}

#[test]
fn generate_to_stdout_and_shards() {
    let whole = snarkkit(&["generate", "--n", "18", "--class", "snark"]);
    assert_eq!(whole.status.code(), Some(0));
    let all: Vec<&str> = std::str::from_utf8(&whole.stdout).unwrap().lines().collect();
    assert_eq!(all.len(), 2);
    let mut parts = Vec::new();
    for shard in ["0", "1", "2"] {
        let run = snarkkit(&["generate", "--n", "14", "--class", "cyc4", "--shards", "3", "--shard", shard]);
        assert_eq!(run.status.code(), Some(0));
        parts.extend(String::from_utf8(run.stdout).unwrap().lines().map(str::to_string).collect::<Vec<_>>());
    }
    parts.sort();
    let whole14 = snarkkit(&["generate", "--n", "14", "--class", "cyc4"]);
    let mut expected: Vec<String> = String::from_utf8(whole14.stdout).unwrap().lines().map(str::to_string).collect();
    expected.sort();
    assert_eq!(parts, expected);
    assert_eq!(expected.len(), 84);
}

#[test]
fn budget_exhaustion_is_a_resource_limit() {
    let run = snarkkit(&["generate", "--n", "20", "--class", "snark", "--budget", "10"]);
    assert_eq!(run.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_3() {
    for args in [
        &["generate", "--n", "13", "--class", "cyc4"][..],
        &["generate", "--n", "12", "--class", "planar"],
        &["verify", "--conjecture", "no-such-thing", "--n-max", "10"],
        &["verify", "--conjecture", "cdcc"],
        &["fixtures", "verify", "appendix-none"],
        &["analyze", "--input", "/nonexistent/file.g6", "--props", "girth"],
        &["frobnicate"],
    ] {
        assert_eq!(snarkkit(args).status.code(), Some(3), "{args:?}");
    }
    assert_eq!(snarkkit(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_outcomes() {
    let holds = snarkkit(&["verify", "--conjecture", "cdcc", "--n-max", "20"]);
    assert_eq!(holds.status.code(), Some(0));
    let report: Value = serde_json::from_slice(holds.stderr.trim_ascii()).unwrap();
    assert_eq!(report["verdict"], "holds");
    assert_eq!(report["counts"]["holds"], 9);

    let refuted = snarkkit(&["verify", "--conjecture", "als-odd-2factors", "--fixtures", "appendix-ALS"]);
    assert_eq!(refuted.status.code(), Some(1));
    let report: Value = serde_json::from_slice(refuted.stderr.trim_ascii()).unwrap();
    assert_eq!(report["counterexamples"].as_array().unwrap().len(), 1);

    let perm = snarkkit(&["verify", "--conjecture", "zhang-perm", "--fixtures", "appendix-perm34"]);
    assert_eq!(perm.status.code(), Some(1));
    let report: Value = serde_json::from_slice(perm.stderr.trim_ascii()).unwrap();
    assert_eq!(report["counts"]["counterexample"], 12);
}

#[test]
fn fixtures_verify_exit_codes() {
    let run = snarkkit(&["fixtures", "verify", "appendix-strong34"]);
    assert_eq!(run.status.code(), Some(0));
    let lines: Vec<Value> = std::str::from_utf8(&run.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.iter().all(|c| c["failed"] == 0 && c["passed"] == 7));
    assert_eq!(snarkkit(&["fixtures", "verify", "petersen"]).status.code(), Some(0));
}

#[test]
fn analyze_resumes_without_duplicates() {
    let dir = scratch("analyze");
    let input = dir.join("snarks.g6");
    let gen = snarkkit(&["generate", "--n", "20", "--class", "snark", "--output", input.to_str().unwrap()]);
    assert_eq!(gen.status.code(), Some(0));
    let out = dir.join("records.jsonl");
    let props = "girth,oddness,automorphisms,circumference,hamiltonicity";
    let args = ["analyze", "--input", input.to_str().unwrap(), "--props", props, "--output", out.to_str().unwrap()];
    assert_eq!(snarkkit(&args).status.code(), Some(0));
    let full = fs::read(&out).unwrap();
    let complete = records(&out);
    assert_eq!(complete.len(), 6 * 5);

    // A completed run adds nothing.
    assert_eq!(snarkkit(&args).status.code(), Some(0));
    assert_eq!(fs::read(&out).unwrap(), full);

    // An interrupted run is finished by the rerun, keeping the earlier lines.
    let text = String::from_utf8(full).unwrap();
    let head: String = text.lines().take(11).map(|l| format!("{l}\n")).collect();
    fs::write(&out, &head).unwrap();
    assert_eq!(snarkkit(&args).status.code(), Some(0));
    let resumed = fs::read_to_string(&out).unwrap();
    assert!(resumed.starts_with(&head));
    let strip = |rs: Vec<Record>| -> Vec<(String, String, Value)> {
        let mut v: Vec<_> = rs.into_iter().map(|r| (r.graph, r.property, r.value)).collect();
        v.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        v
    };
    assert_eq!(strip(records(&out)), strip(complete));
}

#[test]
fn verify_resumes_from_records() {
    let dir = scratch("verify");
    let out = dir.join("records.jsonl");
    let args = ["verify", "--conjecture", "pcol-normal", "--n-max", "20", "--output", out.to_str().unwrap()];
    assert_eq!(snarkkit(&args).status.code(), Some(0));
    let first = fs::read(&out).unwrap();
    assert_eq!(records(&out).len(), 9);
    let again = snarkkit(&args);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(fs::read(&out).unwrap(), first);
    let report: Value = serde_json::from_slice(again.stderr.trim_ascii()).unwrap();
    assert_eq!(report["counts"]["holds"], 9);
}

#[test]
fn malformed_record_log_is_a_usage_error() {
    let dir = scratch("badlog");
    let out = dir.join("records.jsonl");
    fs::write(&out, "not json\n").unwrap();
    let run = snarkkit(&["verify", "--conjecture", "cdcc", "--n-max", "10", "--output", out.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&run.stderr).contains("records.jsonl:1"));
}
