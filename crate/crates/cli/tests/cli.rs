//! End-to-end tests of the binary: spawn it, check stdout and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn matroid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matroid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn assert_code(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout:\n{}\nstderr:\n{}",
        stdout(out),
        stderr(out)
    );
}

/// The nine-column rank-4 ternary matrix in the shape it is usually drawn:
/// identity block, then five mixed columns with -1 entries.
const N9_FILE: &str = "\
# figure-style source for the nine-element matroid
field 3
rank 4
labels e1 e2 e3 e4 a b c d e
matrix
1 0 0 0  0  1  1 -1  1
0 1 0 0  1  0  1  1 -1
0 0 1 0  1  1  0  1  1
0 0 0 1 -1  1  1  0 -1
";

#[test]
fn catalog_list_shows_all_entries() {
    let out = matroid(&["catalog", "list"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    for name in ["N9", "P8", "M_K5", "whirl3", "U_3_6"] {
        assert!(text.contains(name), "missing {name}:\n{text}");
    }
    assert_eq!(text.lines().count(), 15, "header plus 14 entries");
}

#[test]
fn analyze_figure_file_matches_the_built_in() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n9.matroid");
    std::fs::write(&path, N9_FILE).unwrap();
    let out = matroid(&["analyze", path.to_str().unwrap()]);
    assert_code(&out, 0);
    let text = stdout(&out);
    for line in [
        "elements: 9",
        "rank: 4",
        "simple: yes",
        "cocircuits by size: 1:0 2:0 3:0 4:0 5:18 6:12",
        "vertical connectivity: inf",
        "tutte connectivity: 4",
        "minimally 4-connected: yes",
        "minimally vertically 4-connected: yes",
        "small cocircuit witness: none",
    ] {
        assert!(text.contains(line), "missing '{line}' in:\n{text}");
    }
}

#[test]
fn verify_recognizes_the_exception_in_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n9.matroid");
    std::fs::write(&path, N9_FILE).unwrap();
    let out = matroid(&["verify", "minimal", "--file", path.to_str().unwrap()]);
    assert_code(&out, 0);
    let text = stdout(&out);
    assert!(
        text.contains("hypothesis failure") && text.contains("isomorphic to N9"),
        "{text}"
    );
}

#[test]
fn verify_finds_the_star_cocircuit() {
    let out = matroid(&["verify", "minimal", "--catalog", "M_K5"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("satisfied (4-cocircuit)"), "{text}");
    assert!(text.contains("{1,2,3,4}"), "{text}");
    assert!(text.contains("0 violation(s)"), "{text}");
}

#[test]
fn verify_marks_vacuous_runs_distinctly() {
    let out = matroid(&["verify", "lemma-4pt", "--catalog", "M_K4"]);
    assert_code(&out, 0);
    assert!(stdout(&out).contains("vacuous (no qualifying instances)"));
}

#[test]
fn verify_rejects_usage_errors() {
    let out = matroid(&["verify", "no-such-theorem", "--catalog", "N9"]);
    assert_code(&out, 2);

    let out = matroid(&["verify", "minimal"]);
    assert_code(&out, 2);
    assert!(stderr(&out).contains("exactly one target"));

    let out = matroid(&["verify", "binary", "--catalog", "N9"]);
    assert_code(&out, 2);
    assert!(stderr(&out).contains("binary"));

    let out = matroid(&["verify", "main", "--sample", "4,9,10"]);
    assert_code(&out, 2);
    assert!(stderr(&out).contains("--seed"));

    let out = matroid(&["analyze", "--catalog", "M_K5", "--max-size", "8"]);
    assert_code(&out, 2);
    assert!(stderr(&out).contains("over the --max-size cap"));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.matroid");
    std::fs::write(&path, "field 3\nrank 2\nmatrix\n1 0\n").unwrap();
    let out = matroid(&["analyze", path.to_str().unwrap()]);
    assert_code(&out, 2);
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn n9_suite_passes() {
    let out = matroid(&["verify", "n9-suite"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("13 checks, 0 failed"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn show_then_analyze_matches_the_catalog_route() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["N9", "P8", "M_K4", "whirl3", "U_2_4"] {
        let shown = matroid(&["catalog", "show", name]);
        assert_code(&shown, 0);
        // file stem = catalog name so the parsed matroid gets the same name
        let path = dir.path().join(format!("{name}.matroid"));
        std::fs::write(&path, stdout(&shown)).unwrap();
        let from_file = matroid(&["analyze", path.to_str().unwrap(), "--json"]);
        let from_catalog = matroid(&["analyze", "--catalog", name, "--json"]);
        assert_code(&from_file, 0);
        assert_code(&from_catalog, 0);
        assert_eq!(stdout(&from_file), stdout(&from_catalog), "{name}");
    }
}

#[test]
fn json_output_is_stable_and_sorted() {
    let a = matroid(&["analyze", "--catalog", "N9", "--json"]);
    let b = matroid(&["analyze", "--catalog", "N9", "--json"]);
    assert_code(&a, 0);
    assert_eq!(stdout(&a), stdout(&b));
    let value: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(value["elements"], 9);
    assert_eq!(value["vertical_connectivity"], "inf");
    assert_eq!(value["tutte_connectivity"], "4");
    assert_eq!(value["minimally_vertically_4_connected"], true);
    assert_eq!(value["small_cocircuit_witness"], serde_json::Value::Null);
    // keys arrive sorted from the serializer
    let text = stdout(&a);
    let keys: Vec<usize> = ["\"circuits_by_size\"", "\"elements\"", "\"field\"", "\"name\"", "\"rank\""]
        .iter()
        .map(|k| text.find(k).expect(k))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    assert_eq!(keys, sorted, "{text}");

    let w = matroid(&["verify", "minimal", "--catalog", "M_K5", "--json"]);
    assert_code(&w, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&w)).unwrap();
    assert_eq!(value["violations"], 0);
    assert_eq!(value["reports"][0]["status"], "satisfied");
    assert_eq!(
        value["reports"][0]["witnesses"][0],
        serde_json::json!(["1", "2", "3", "4"])
    );
}

#[test]
fn verify_main_and_lemmas_on_catalog_matroids() {
    for (id, name) in [
        ("main", "M_K4"),
        ("main", "whirl3"),
        ("minimal-triangle", "M_K4"),
        ("lemma-4pt", "AG23"),
        ("lemma-technical", "M_K5"),
        ("tutte-triangle", "M_K4"),
    ] {
        let out = matroid(&["verify", id, "--catalog", name]);
        assert_code(&out, 0);
        assert!(stdout(&out).contains("0 violation(s)"), "{id} {name}");
    }
}

#[test]
fn census_sample_store_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("tern.census");
    let args = [
        "census", "sample", "--rank", "4", "--n", "9", "--count", "25", "--seed", "11",
        "--out", store.to_str().unwrap(),
    ];
    let first = matroid(&args);
    assert_code(&first, 0);
    assert!(stdout(&first).contains("appended 25 record(s)"));

    let again = matroid(&args);
    assert_code(&again, 0);
    assert!(stdout(&again).contains("appended 0 record(s)"), "{}", stdout(&again));

    let text = std::fs::read_to_string(&store).unwrap();
    assert!(text.starts_with("#census v1 field=3 rank=4 mode=sample seed=11 n=9 count=25\n"));
    assert_eq!(text.lines().count(), 26);

    // a run with different parameters must refuse the same store
    let clash = matroid(&[
        "census", "sample", "--rank", "4", "--n", "9", "--count", "25", "--seed", "12",
        "--out", store.to_str().unwrap(),
    ]);
    assert_code(&clash, 2);
    assert!(stderr(&clash).contains("header mismatch"), "{}", stderr(&clash));
}

#[test]
fn census_sample_requires_explicit_seed() {
    let out = matroid(&["census", "sample", "--rank", "4", "--n", "9", "--count", "5"]);
    assert_code(&out, 2);
}

#[test]
fn sweep_through_the_cli() {
    let out = matroid(&["verify", "binary", "--sweep-rank4"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("min_v4=448"), "{text}");
    assert!(text.contains("binary: pass=448 vacuous=0 hypo=0 viol=0"), "{text}");
    assert!(text.contains("0 violation(s)"), "{text}");

    let json = matroid(&["census", "sweep-rank4", "--json"]);
    assert_code(&json, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["records"], 27704);
    assert_eq!(value["min_v4"], 448);
    assert_eq!(value["tallies"]["minimal"]["pass"], 448);
    assert_eq!(value["violations"], serde_json::json!([]));
}

#[test]
fn out_redirects_reports_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let out = matroid(&["analyze", "--catalog", "P8", "--out", path.to_str().unwrap()]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out), "");
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("name: P8"));
    assert!(Path::new(&path).exists());
}
