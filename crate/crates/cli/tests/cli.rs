use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_idemgen"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_file(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn generate_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.json");
    let gens = data("torus_generators.txt");
    let o = run(&["generate", "-i", gens.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["size"], 73);
    assert_eq!(doc["idempotents"].as_array().unwrap().len(), 37);
    assert_eq!(doc["generators"][0]["name"], "e");
    assert_eq!(doc["elements"][0], serde_json::json!([1, 6, 3, 7, 3, 6, 7, 1]));
}

#[test]
fn generate_to_stdout_marks_undefined_points() {
    let dir = tempfile::tempdir().unwrap();
    let gens = temp_file(&dir, "g.txt", "degree 2\ne: 1 .\nf: . 2\n");
    let o = run(&["generate", "-i", gens.to_str().unwrap()]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["size"], 3);
    assert_eq!(doc["elements"][0], serde_json::json!([1, null]));
    assert_eq!(doc["zero"], 3);
}

#[test]
fn parse_error_exits_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let gens = temp_file(&dir, "bad.txt", "degree 2\ne: 1 9\n");
    let o = run(&["generate", "-i", gens.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let grid = temp_file(&dir, "bad.grid", "rows 1 cols 2\n1 2\n");
    assert_eq!(run(&["rees", "-m", grid.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_with_3() {
    let gens = data("torus_generators.txt");
    let o = run(&["green", "-i", gens.to_str().unwrap(), "--cap", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn missing_file_and_bad_base_exit_with_1() {
    assert_eq!(run(&["green", "-i", "/nonexistent/gens.txt"]).status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    // element 1 is the nilpotent generator, not an idempotent
    let gens = temp_file(&dir, "g.txt", "degree 2\na: 2 .\n");
    let o = run(&["pi1", "-i", gens.to_str().unwrap(), "--base", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn green_summary() {
    let gens = data("torus_generators.txt");
    let o = run(&["green", "-i", gens.to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.contains("elements 73"));
    assert!(text.contains("idempotents 37"));
    assert!(text.contains("D 3 J 3"));
}

#[test]
fn biorder_lists_singular_squares() {
    let gens = data("torus_generators.txt");
    let o = run(&["biorder", "-i", gens.to_str().unwrap(), "--singular"]);
    let text = stdout(&o);
    assert!(text.contains("squares 16"));
    assert_eq!(text.matches("singular=true").count(), 16);
    let o = run(&["biorder", "-i", gens.to_str().unwrap(), "--squares"]);
    // 24 in the torus D-class plus one in <e,k>
    assert!(stdout(&o).contains("squares 25"));
}

#[test]
fn rees_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let grid = data("torus_incidence.txt");
    let o = run(&["rees", "-m", grid.to_str().unwrap(), "--dot", dot.to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.contains("elements 65 idempotents 33"));
    assert!(text.contains("vertices 16 edges 32 components 1 connected true"));
    let d = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(d.matches("--").count(), 32);
    assert!(d.contains("shape=box"));
}

#[test]
fn gh_reports_torus_component() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("gh.dot");
    let gens = data("torus_generators.txt");
    let o = run(&["gh", "-i", gens.to_str().unwrap(), "--dot", dot.to_str().unwrap()]);
    assert!(stdout(&o).contains("V=16 E=32 F=16 chi=0 surface={\"kind\":\"orientable\",\"genus\":1}"));
    let d = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(d.matches("// face").count(), 16);
    let o = run(&["gh", "-i", gens.to_str().unwrap(), "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["edges"].as_array().unwrap().len(), 37);
}

#[test]
fn pi1_on_both_complexes() {
    let gens = data("torus_generators.txt");
    let g = gens.to_str().unwrap();
    // element 3 is the constant f_(R1,L1)
    let o = run(&["pi1", "-i", g, "--base", "3", "--abelianize"]);
    let text = stdout(&o);
    assert!(text.starts_with("gens 17\n"));
    assert!(text.trim_end().ends_with("{\"torsion\":[],\"free_rank\":2}"));
    let o = run(&["pi1", "-i", g, "--base", "3", "--abelianize", "--complex", "k", "--simplify-budget", "200"]);
    assert!(stdout(&o).trim_end().ends_with("{\"torsion\":[],\"free_rank\":2}"));
}

#[test]
fn repro_paper_passes() {
    let o = run(&["repro-paper"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("PASS gh_gamma"));
    let o = run(&["repro-paper", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["passed"], true);
}
