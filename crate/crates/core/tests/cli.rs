use std::fs;
use std::path::Path;
use std::process::Command;

use union_coloring::cli::{run, EXIT_BUDGET, EXIT_INPUT, EXIT_INVALID, EXIT_OK};

fn uvdc(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("uvdc").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn color_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c3.txt", "0 1\n1 2\n2 0\n");
    let (code, out, _) = uvdc(&["color", &g]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "k 3 mode standard\n0 1 : {1}\n0 2 : {3}\n1 2 : {2}\nk=3 valid=true\n"
    );

    let forest = dir.path().join("forest.txt");
    let col = dir.path().join("c3.col");
    let (code, out, _) = uvdc(&[
        "color",
        &g,
        "--allow-empty",
        "-o",
        col.to_str().unwrap(),
        "--dump-forest",
        forest.to_str().unwrap(),
    ]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "k=2 valid=true\n"));
    assert_eq!(fs::read_to_string(&forest).unwrap(), "n 3\n0 1\n1 2\n");
    let (code, out, _) = uvdc(&["verify", &g, col.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "valid=true colors=2\n"));
}

#[test]
fn verify_reports_collisions() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p3.txt", "0 1\n1 2\n");
    let c = write(
        dir.path(),
        "bad.col",
        "k 2 mode standard\n0 1 : {1}\n1 2 : {1}\n",
    );
    let (code, out, _) = uvdc(&["verify", &g, &c]);
    assert_eq!(code, EXIT_INVALID);
    assert_eq!(
        out,
        "valid=false colors=1\ncollision 0 1\ncollision 0 2\ncollision 1 2\n"
    );
    let c = write(
        dir.path(),
        "empty.col",
        "k 2 mode standard\n0 1 : {}\n1 2 : {2}\n",
    );
    let (code, out, _) = uvdc(&["verify", &g, &c]);
    assert_eq!(code, EXIT_INVALID);
    assert!(out.contains("empty-label 0 1"));
}

#[test]
fn partition_blocks() {
    let (code, out, _) = uvdc(&["partition", "-k", "2", "-m", "3"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "{1,2} {1} {2}\n"));
    let (code, out, _) = uvdc(&["partition", "-k", "2", "-m", "1,2"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "{2}\n{1,2} {1}\n"));
    let (code, out, _) = uvdc(&["partition", "-k", "1", "-m", "2", "--with-empty"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "{1} {}\n"));
    let (code, _, err) = uvdc(&["partition", "-k", "2", "-m", "2"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("sizes sum to 2"));
}

#[test]
fn exact_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    let (_, c7, _) = uvdc(&["gen", "cycle", "7"]);
    let g = write(dir.path(), "c7.txt", &c7);
    let (code, out, _) = uvdc(&["exact", &g]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("index 4\nk 4 mode standard\n"));
    let (code, _, err) = uvdc(&["exact", &g, "--nodes", "5"]);
    assert_eq!(code, EXIT_BUDGET);
    assert!(err.contains("budget"));
    let (code, _, _) = uvdc(&["exact", &g, "--max-k", "3"]);
    assert_eq!(code, EXIT_BUDGET);
}

#[test]
fn gen_families() {
    let (code, out, _) = uvdc(&["gen", "hypercube", "2"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "n 4\n0 1\n0 2\n1 3\n2 3\n"));
    let (_, a, _) = uvdc(&["gen", "random", "30", "--p", "0.2", "--seed", "9"]);
    let (_, b, _) = uvdc(&["gen", "random", "30", "--p", "0.2", "--seed", "9"]);
    assert_eq!(a, b);
    let (code, _, _) = uvdc(&["gen", "cycle", "2"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "0 1\n");
    let (code, _, err) = uvdc(&["color", &k2]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("not eligible"));
    let lp = write(dir.path(), "loop.txt", "0 1\n1 1\n");
    let (code, _, err) = uvdc(&["color", &lp]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("line 2"));
    let (code, _, _) = uvdc(&["color", "/nonexistent/graph"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = uvdc(&["frobnicate"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, out, _) = uvdc(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("partition"));
}

#[test]
fn binary_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_uvdc");
    let g = dir.path().join("g.txt");
    let c = dir.path().join("g.col");
    let st = Command::new(bin)
        .args(["gen", "random", "120", "--p", "0.05", "--seed", "3", "-o"])
        .arg(&g)
        .status()
        .unwrap();
    assert!(st.success());
    let out = Command::new(bin)
        .arg("color")
        .arg(&g)
        .arg("-o")
        .arg(&c)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).ends_with("valid=true\n"));
    let out = Command::new(bin)
        .arg("verify")
        .arg(&g)
        .arg(&c)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let bad = dir.path().join("bad.col");
    let text = fs::read_to_string(&c).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    for l in lines.iter_mut().skip(1) {
        let (edge, _) = l.split_once(':').unwrap();
        *l = format!("{edge}: {{1}}");
    }
    fs::write(&bad, lines.join("\n")).unwrap();
    let out = Command::new(bin)
        .arg("verify")
        .arg(&g)
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("collision"));
}
