mod common;

use std::path::{Path, PathBuf};
use std::process::Command;

use common::{assert_schema_valid, claim, ngr};
use ngr_workbench::cli;
use ngr_workbench::format::parse_presentation;
use ngr_workbench::ngr::{ngr_presentation_with, NgrOrder};
use tempfile::TempDir;

fn gen_file(dir: &TempDir, n: usize, order: &str) -> PathBuf {
    let path = dir.path().join(format!("ngr{n}-{order}.txt"));
    let run = ngr(&["gen", "--n", &n.to_string(), "--order", order, "--out", path.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_schema_valid(&run.json());
    path
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_n3_shape_and_round_trip() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("n3.txt");
    let run = ngr(&["gen", "--n", "3", "--out", s(&path)]);
    assert_eq!(run.code, 0);
    let rep = run.json();
    assert_eq!(rep["result"]["arrows_per_residue"], serde_json::json!([3, 3, 3, 3, 3, 3]));
    assert_eq!(rep["result"]["relation_count"], 18);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(rep["result"]["output_digest"], cli::digest(&[text.as_bytes()]));
    let pres = parse_presentation(&text).unwrap();
    assert_eq!(pres, ngr_presentation_with(3, NgrOrder::Alternating).unwrap().presentation);
    let again = ngr_workbench::format::format_presentation(&pres);
    assert_eq!(cli::digest(&[again.as_bytes()]), rep["result"]["output_digest"]);
}

#[test]
fn gen_n4_lists_six_e_labels() {
    let run = ngr(&["gen", "--n", "4"]);
    assert_eq!(run.code, 0);
    let line = run.stdout.lines().find(|l| l.starts_with("arrows 3:")).unwrap();
    assert_eq!(line, "arrows 3: e12, e13, e14, e23, e24, e34");
    let line0 = run.stdout.lines().find(|l| l.starts_with("arrows 0:")).unwrap();
    assert_eq!(line0.split(", ").count(), 6);
}

#[test]
fn gen_rejects_small_n() {
    let run = ngr(&["gen", "--n", "2"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("at least 3"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ngr(&[]).code, 2);
    assert_eq!(ngr(&["frobnicate"]).code, 2);
    assert_eq!(ngr(&["gb", "--in", "/nonexistent/file", "--max-degree", "3"]).code, 2);
    assert_eq!(ngr(&["--help"]).code, 0);
}

#[test]
fn gb_uniform_is_quadratic() {
    let dir = TempDir::new().unwrap();
    let input = gen_file(&dir, 3, "uniform");
    let out = dir.path().join("basis.json");
    let run = ngr(&["gb", "--in", s(&input), "--max-degree", "4", "--out", s(&out)]);
    assert_eq!(run.code, 0);
    let rep = run.json();
    assert_schema_valid(&rep);
    assert_eq!(rep["result"]["max_rule_degree"], 2);
    assert_eq!(claim(&rep, "prop-3.2-pbw")["status"], "pass");
    let basis: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(basis["rules"].as_array().unwrap().len(), 18);
    assert!(basis["rules"][0]["tail"][0]["coeff"].as_str().unwrap().contains('/'));
}

#[test]
fn gb_alternating_reports_cubic_rules() {
    let dir = TempDir::new().unwrap();
    let input = gen_file(&dir, 3, "alternating");
    let run = ngr(&["gb", "--in", s(&input), "--max-degree", "4"]);
    assert_eq!(run.code, 1);
    let rep = run.json();
    assert_schema_valid(&rep);
    assert_eq!(rep["result"]["max_rule_degree"], 3);
    assert_eq!(rep["result"]["rule_count"], 42);
    assert_eq!(claim(&rep, "prop-3.2-pbw")["status"], "fail");
}

#[test]
fn gb_free_algebra_is_empty() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "free.txt", "period 1\narrows 0: b, a\n");
    let run = ngr(&["gb", "--in", s(&input), "--max-degree", "3"]);
    assert_eq!(run.code, 0);
    let rep = run.json();
    assert_schema_valid(&rep);
    assert_eq!(rep["result"]["rule_count"], 0);
    assert_eq!(rep["result"]["basis"]["rules"], serde_json::json!([]));
}

#[test]
fn gb_degree_below_relations() {
    let dir = TempDir::new().unwrap();
    let input = gen_file(&dir, 3, "uniform");
    let run = ngr(&["gb", "--in", s(&input), "--max-degree", "1"]);
    assert_eq!(run.code, 2);
}

#[test]
fn parse_errors_report_position() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "bad.txt", "period 1\narrows 0: a\nrelation 0: a.a + b.a\n");
    let run = ngr(&["gb", "--in", s(&input), "--max-degree", "3"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("line 3, column 19"), "{}", run.stderr);
}

#[test]
fn check_pbw_uniform_n5_both_routes() {
    let dir = TempDir::new().unwrap();
    let input = gen_file(&dir, 5, "uniform");
    let run = ngr(&["check", "--in", s(&input), "--what", "pbw"]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    let rep = run.json();
    assert_schema_valid(&rep);
    let c = claim(&rep, "prop-3.2-pbw");
    assert_eq!(c["details"]["completion"]["quadratic"], true);
    assert_eq!(c["details"]["counts"]["pass"], true);
}

#[test]
fn check_pbw_alternating_fails_on_counts() {
    let dir = TempDir::new().unwrap();
    let input = gen_file(&dir, 3, "alternating");
    let run = ngr(&["check", "--in", s(&input), "--what", "pbw"]);
    assert_eq!(run.code, 1);
    let rep = run.json();
    let rows = &claim(&rep, "prop-3.2-pbw")["details"]["counts"]["rows"];
    assert_eq!(rows[0]["counts"], serde_json::json!([1, 3, 6, 14]));
    assert_eq!(rows[0]["expected"], serde_json::json!([1, 3, 6, 10]));
}

#[test]
fn check_processing_flags_commutative_fixture() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "comm.txt", "period 1\narrows 0: b, a\nrelation 0: b.a - a.b\n");
    let run = ngr(&["check", "--in", s(&input), "--what", "processing", "--r", "3", "--degree-bound", "6"]);
    assert_eq!(run.code, 1);
    let rep = run.json();
    assert_schema_valid(&rep);
    let c = claim(&rep, "prop-3.3-processing-r3");
    assert_eq!(c["status"], "fail");
    let cx = &c["details"]["counterexample"];
    for key in ["u", "w", "s"] {
        assert!(cx[key].is_string(), "{cx}");
    }
    assert_eq!(claim(&rep, "remark-3.4-left-processing-r3")["status"], "fail");
}

#[test]
fn check_processing_passes_on_free_algebra() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "free.txt", "period 2\narrows 0: b, a\narrows 1: y, x\n");
    let run = ngr(&["check", "--in", s(&input), "--what", "processing", "--degree-bound", "6", "--side", "right"]);
    assert_eq!(run.code, 0);
    let rep = run.json();
    assert_eq!(rep["verified_claims"].as_array().unwrap().len(), 1);
}

#[test]
fn check_koszul_and_hilbert() {
    let dir = TempDir::new().unwrap();
    let input = gen_file(&dir, 3, "alternating");
    let run = ngr(&["check", "--in", s(&input), "--what", "koszul", "--trunc", "6"]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    let rep = run.json();
    assert_schema_valid(&rep);
    assert_eq!(claim(&rep, "prop-3.1-koszul-identity")["details"]["orientation"], "H(t)*D(-t)");
    assert_eq!(claim(&rep, "prop-3.1-hilbert-t3")["status"], "pass");

    let run = ngr(&["hilbert", "--in", s(&input), "--trunc", "3", "--fold"]);
    assert_eq!(run.code, 0);
    let rep = run.json();
    assert_schema_valid(&rep);
    assert_eq!(rep["result"]["matrix"]["size"], 3);
    assert_eq!(rep["result"]["matrix"]["entries"][0][1], serde_json::json!([0, 3, 0, 0]));
}

#[test]
fn koszul_needs_generated_input() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "free.txt", "period 1\narrows 0: a\n");
    assert_eq!(ngr(&["check", "--in", s(&input), "--what", "koszul"]).code, 2);
}

#[test]
fn gorenstein_and_resolve_n3() {
    let dir = TempDir::new().unwrap();
    let input = gen_file(&dir, 3, "alternating");
    let run = ngr(&["check", "--in", s(&input), "--what", "gorenstein"]);
    assert_eq!(run.code, 0);
    assert_schema_valid(&run.json());
    let run = ngr(&["resolve", "--in", s(&input), "--s", "2"]);
    assert_eq!(run.code, 0);
    let rep = run.json();
    assert_schema_valid(&rep);
    assert_eq!(rep["result"]["betti"]["totals"], serde_json::json!([1, 3, 3, 1, 0, 0]));
    assert_eq!(ngr(&["resolve", "--in", s(&input), "--s", "6"]).code, 2);
}

#[test]
fn syzygy_random_probe() {
    let dir = TempDir::new().unwrap();
    let input = gen_file(&dir, 3, "alternating");
    let args = ["syzygy", "--in", s(&input), "--random", "--d", "1", "--trials", "10", "--seed", "42"];
    let first = ngr(&args);
    assert_eq!(first.code, 0);
    let rep = first.json();
    assert_schema_valid(&rep);
    assert_eq!(claim(&rep, "remark-3.7-bound")["status"], "pass");
    assert!(rep["result"]["minimal_syzygy_histogram"].is_object());
    assert_eq!(ngr(&args).stdout, first.stdout);
}

#[test]
fn syzygy_generator_files() {
    let dir = TempDir::new().unwrap();
    let input = gen_file(&dir, 3, "alternating");
    let empty = write(&dir, "empty.txt", "# nothing\n");
    let run = ngr(&["syzygy", "--in", s(&input), "--gens", s(&empty)]);
    assert_eq!(run.code, 0);
    let rep = run.json();
    assert_schema_valid(&rep);
    assert_eq!(claim(&rep, "remark-3.7-bound")["details"]["vacuous"], true);

    let arrows = write(&dir, "arrows.txt", "generator 0: e12\ngenerator 0: e13\ngenerator 0: e23\n");
    let run = ngr(&["syzygy", "--in", s(&input), "--gens", s(&arrows), "--cutoff", "6"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let rep = run.json();
    assert_eq!(rep["result"]["minimal_syzygy_histogram"], serde_json::json!({ "2": 3 }));

    let run = ngr(&["syzygy", "--in", s(&input), "--gens", s(&arrows), "--cutoff", "6", "--max-degree", "5"]);
    assert_eq!(run.code, 2);
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let input = gen_file(&dir, 3, "alternating");
    let args = ["check", "--in", s(&input), "--what", "gorenstein"];
    assert_eq!(ngr(&args).stdout, ngr(&args).stdout);
}

#[test]
fn binary_honours_degree_cap() {
    let dir = TempDir::new().unwrap();
    let input = gen_file(&dir, 3, "uniform");
    let bin = env!("CARGO_BIN_EXE_ngr");
    let capped = Command::new(bin)
        .args(["gb", "--in", s(&input), "--max-degree", "4"])
        .env(cli::CAP_VAR, "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("degree cap"));
    let ok = Command::new(bin)
        .args(["gb", "--in", s(&input), "--max-degree", "4"])
        .env_remove(cli::CAP_VAR)
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let too_big = Command::new(bin)
        .args(["gb", "--in", s(&input), "--max-degree", "13"])
        .env_remove(cli::CAP_VAR)
        .output()
        .unwrap();
    assert_eq!(too_big.status.code(), Some(2));
}
