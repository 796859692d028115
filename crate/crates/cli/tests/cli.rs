//! End-to-end tests of the `forcelab` binary: JSON and TSV output shapes,
//! exit codes, determinism across thread counts, and the generator/solver
//! round trip.

use std::io::Write as _;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use forcelab_core::graph::{generate, graph6};
use serde_json::Value;

fn forcelab() -> Command {
    Command::new(env!("CARGO_BIN_EXE_forcelab"))
}

fn run(args: &[&str]) -> Output {
    forcelab().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = forcelab()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("binary exits")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_file(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).expect("write input file");
    path.to_string_lossy().into_owned()
}

#[test]
fn compute_reports_the_path22_optimum_with_a_verified_witness() {
    let dir = tempfile::tempdir().expect("tempdir");
    let input = write_file(dir.path(), "p22.g6", &(graph6::encode(&generate::path(22)) + "\n"));
    let json = stdout_json(&run(&["compute", &input, "--max-n", "22"]));
    assert_eq!(json["schemaVersion"], 1);
    assert_eq!(json["command"], "compute");
    assert_eq!(json["errors"].as_array().map(Vec::len), Some(0));
    let rec = &json["records"][0];
    assert_eq!(rec["order"], 22);
    assert_eq!(rec["rule"], "psd");
    assert_eq!(rec["what"], "throttle");
    assert_eq!(rec["value"], "7");
    assert_eq!(rec["witness"], serde_json::json!([5, 16]));
    assert_eq!(rec["witnessSize"], 2);
    assert_eq!(rec["witnessPt"], "5");
    assert_eq!(rec["provenOptimal"], true);
    assert_eq!(rec["bounds"]["lower"], "7");
    assert_eq!(rec["bounds"]["ok"], true);
}

#[test]
fn compute_reads_stdin_and_scores_a_given_set() {
    let star = graph6::encode(&generate::star(3)) + "\n";
    let out = run_with_stdin(
        &["compute", "-", "--what", "pt", "--set", "0"],
        &star,
    );
    let json = stdout_json(&out);
    assert_eq!(json["records"][0]["value"], "1");
    assert_eq!(json["records"][0]["set"], serde_json::json!([0]));
}

#[test]
fn compute_tsv_has_a_fixed_header_and_one_row_per_graph() {
    let dir = tempfile::tempdir().expect("tempdir");
    let lines: String = (4..=6)
        .map(|n| graph6::encode(&generate::cycle(n)) + "\n")
        .collect();
    let input = write_file(dir.path(), "cycles.g6", &lines);
    let out = run(&["compute", &input, "--tsv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).expect("utf8");
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 4, "header plus three result rows");
    assert!(rows[0].starts_with("id\tline\tn\tm\t"));
    let header_cols = rows[0].split('\t').count();
    for row in &rows[1..] {
        assert_eq!(row.split('\t').count(), header_cols, "ragged row: {row}");
    }
}

#[test]
fn parse_failures_are_reported_per_line_and_the_run_continues() {
    let dir = tempfile::tempdir().expect("tempdir");
    let good = graph6::encode(&generate::path(4));
    let input = write_file(dir.path(), "mixed.g6", &format!("{good}\n#broken#\n{good}\n"));
    let out = run(&["compute", &input]);
    assert_eq!(out.status.code(), Some(2), "input errors exit 2");
    let json: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    assert_eq!(json["records"].as_array().map(Vec::len), Some(2));
    let errors = json["errors"].as_array().expect("errors array");
    assert_eq!(errors.len(), 1);
    assert_eq!(errors[0]["line"], 2);
}

#[test]
fn oversized_graphs_need_an_explicit_budget_raise() {
    let dir = tempfile::tempdir().expect("tempdir");
    let input = write_file(dir.path(), "p25.g6", &(graph6::encode(&generate::path(25)) + "\n"));
    let out = run(&["compute", &input]);
    assert_eq!(out.status.code(), Some(2), "over the default cap exits 2");
    let json: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    let error = json["errors"][0]["error"].as_str().expect("error message");
    assert!(error.contains("--max-n"), "message tells the user the fix: {error}");
}

#[test]
fn rejected_set_members_are_input_errors() {
    let star = graph6::encode(&generate::star(3)) + "\n";
    let out = run_with_stdin(&["compute", "-", "--what", "pt", "--set", "99"], &star);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites_pass_and_bad_corpora_fail() {
    let out = run(&["verify", "--suite", "paths"]);
    assert!(out.status.success(), "paths suite must pass");

    // A corpus that is not the connected census fails verification.
    let dir = tempfile::tempdir().expect("tempdir");
    let fake = write_file(dir.path(), "fake.g6", &(graph6::encode(&generate::path(3)) + "\n"));
    let out = run(&["verify", "--suite", "census", "--corpus", &fake]);
    assert_eq!(out.status.code(), Some(1), "verification failures exit 1");

    // The census suite refuses to run without a corpus.
    let out = run(&["verify", "--suite", "census"]);
    assert_eq!(out.status.code(), Some(2), "missing corpus is a usage error");
}

#[test]
fn generated_census_feeds_back_through_compute() {
    let out = run(&["gen", "census-connected", "5"]);
    assert!(out.status.success());
    let listing = String::from_utf8(out.stdout).expect("utf8");
    assert_eq!(listing.lines().count(), 31, "connected classes on up to 5 vertices");

    let computed = run_with_stdin(&["compute", "-"], &listing);
    let json = stdout_json(&computed);
    let records = json["records"].as_array().expect("records");
    assert_eq!(records.len(), 31);
    // Output order follows input order even under parallel solving.
    for (i, rec) in records.iter().enumerate() {
        assert_eq!(rec["line"], i as u64 + 1);
    }
}

#[test]
fn output_is_identical_across_thread_counts() {
    let dir = tempfile::tempdir().expect("tempdir");
    let lines: String = (1..=12)
        .map(|n| graph6::encode(&generate::path(n)) + "\n")
        .collect();
    let input = write_file(dir.path(), "paths.g6", &lines);
    let single = forcelab()
        .args(["compute", &input])
        .env("FORCELAB_THREADS", "1")
        .output()
        .expect("runs");
    let many = forcelab()
        .args(["compute", &input])
        .env("FORCELAB_THREADS", "4")
        .output()
        .expect("runs");
    assert!(single.status.success() && many.status.success());
    assert_eq!(single.stdout, many.stdout, "byte-for-byte determinism");
}

#[test]
fn classify_flags_the_house_obstruction() {
    let house = graph6::encode(&generate::house()) + "\n";
    let json = stdout_json(&run_with_stdin(&["classify", "-"], &house));
    let rec = &json["records"][0];
    assert!(
        rec["classes"]
            .as_array()
            .expect("classes")
            .iter()
            .any(|c| c == "thp=3"),
        "house throttles at n - 2 = 3"
    );
    assert_eq!(rec["familyG"]["verdict"], "forbidden-induced");
    assert_eq!(rec["familyG"]["pattern"], "house");
}

#[test]
fn table_cross_checks_formula_rows_against_search() {
    let out = run(&["table", "--family", "cycle", "--range", "3..14", "--check-upto", "10"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).expect("utf8");
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 13, "header plus twelve rows");
    for row in &rows[1..] {
        assert!(row.ends_with("\ttrue"), "row not verified: {row}");
    }
}
