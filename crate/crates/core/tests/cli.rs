use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use shiftkit::cli::parse_complex;
use shiftkit::SimplicialComplex;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_shiftkit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn strip_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn shift_of_two_edges() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "edges.txt", "# two disjoint edges\n1 2\n3 4\n");
    let o = run(&["shift", f.to_str().unwrap(), "--emit-complex"]);
    assert!(o.status.success());
    let k = parse_complex(&stdout(&o)).unwrap();
    assert_eq!(k, SimplicialComplex::from_lists(4, &[&[1, 2], &[1, 3], &[4]]));

    let v = json(&["shift", f.to_str().unwrap(), "--json"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["f_vector"], serde_json::json!([1, 4, 2]));
    assert_eq!(v["validated"]["is_shifted"], true);
    assert_eq!(v["faces"][2], serde_json::json!([[1, 2], [1, 3]]));
}

#[test]
fn json_output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "k.txt", "1 2 3\n2 4\n4 5 6\n1 6\n");
    let a = json(&["shift", f.to_str().unwrap(), "--json", "--seed", "5"]);
    let b = json(&["shift", f.to_str().unwrap(), "--json", "--seed", "5", "--sequential"]);
    assert_eq!(strip_timing(a), strip_timing(b));
    let a = json(&["verify", "near-cone", "--trials", "4", "--json"]);
    let b = json(&["verify", "near-cone", "--trials", "4", "--json"]);
    assert_eq!(strip_timing(a), strip_timing(b));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.txt", "1 2\n0 3\n");
    assert_eq!(run(&["shift", bad.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["shift", "/nonexistent/complex.txt"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "counterexample"]).status.code(), Some(0));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let o = run(&["verify", "betti", "--max-n", "40"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn octahedron_through_stdin() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "g.txt", "1 2\n1 3\n1 5\n1 6\n2 3\n2 4\n2 6\n3 4\n3 5\n4 5\n4 6\n5 6\n");
    let first = run(&["shift", g.to_str().unwrap(), "--matrix", "block:3,3", "--emit-complex"]);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    let mut child = bin()
        .args(["shift", "-", "--emit-complex"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&first.stdout).unwrap();
    let second = child.wait_with_output().unwrap();
    assert!(second.status.success());
    let after_block = parse_complex(&stdout(&second)).unwrap();
    let plain = parse_complex(&stdout(&run(&["shift", g.to_str().unwrap(), "--emit-complex"]))).unwrap();
    let e45 = shiftkit::Face::new([4, 5]).unwrap();
    assert!(after_block.contains(e45));
    assert!(!plain.contains(e45));
}

#[test]
fn betti_of_k33() {
    let dir = TempDir::new().unwrap();
    let k = write(dir.path(), "k33.txt", "1 4\n1 5\n1 6\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n");
    let v = json(&["op", "betti", k.to_str().unwrap(), "--json"]);
    assert_eq!(v["betti"], serde_json::json!([0, 0, 4]));
}

#[test]
fn shifted_union_paths_agree() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.txt", "1 2\n1 3\n4\n");
    let b = write(dir.path(), "b.txt", "1 2 3\n1 4\n");
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    let sqcup = run(&["op", "sqcup", a, b, "--emit-complex"]);
    let gap = run(&["op", "gap-union", a, b, "--emit-complex"]);
    assert!(sqcup.status.success() && gap.status.success());
    assert_eq!(parse_complex(&stdout(&sqcup)).unwrap(), parse_complex(&stdout(&gap)).unwrap());
    let not_shifted = write(dir.path(), "c.txt", "1 2\n3 4\n");
    assert_ne!(run(&["op", "sqcup", not_shifted.to_str().unwrap(), b]).status.code(), Some(0));
}

#[test]
fn cone_relabels_base() {
    let dir = TempDir::new().unwrap();
    let e = write(dir.path(), "e.txt", "1 2\n3 4\n");
    let o = run(&["op", "cone", e.to_str().unwrap(), "--emit-complex"]);
    let k = parse_complex(&stdout(&o)).unwrap();
    assert_eq!(k, SimplicialComplex::from_lists(5, &[&[1, 2, 3], &[1, 4, 5]]));
}

#[test]
fn printed_complexes_parse_back() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "k.txt", "n=7\n1 2 3\n5\n");
    let o = run(&["op", "suspension", f.to_str().unwrap(), "--emit-complex"]);
    let k = parse_complex(&stdout(&o)).unwrap();
    assert_eq!(k.n(), 9);
    assert_eq!(k.f_vector().as_slice(), &[1, 6, 11, 7, 2][..]);
}
