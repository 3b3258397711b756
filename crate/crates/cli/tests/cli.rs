use std::path::Path;
use std::process::{Command, Output};

fn ideal_atoms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ideal-atoms"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = ideal_atoms(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn write_witness(dir: &Path, class: &str, n: usize) -> String {
    let path = dir.join(format!("{class}-{n}.dfa"));
    let path = path.to_str().unwrap().to_string();
    stdout(&[
        "witness",
        "--class",
        class,
        "--n",
        &n.to_string(),
        "--out",
        &path,
    ]);
    path
}

#[test]
fn compare_table_matches_golden() {
    let golden = include_str!("../../core/tests/golden/compare_n9.tsv");
    assert_eq!(stdout(&["table", "--compare", "--max-n", "9"]), golden);
    assert_eq!(
        stdout(&["table", "--compare", "--max-n", "9", "--closed-form"]),
        golden
    );
}

#[test]
fn regular_table_last_max_cell() {
    let out = stdout(&["table", "--class", "regular", "--max-n", "5"]);
    let max = out.lines().find(|l| l.starts_with("max")).unwrap();
    assert_eq!(max.rsplit('\t').next(), Some("141"));
}

#[test]
fn atom_complexity_of_one_basis() {
    let dir = tempfile::tempdir().unwrap();
    let w = write_witness(dir.path(), "two-sided", 4);
    assert_eq!(stdout(&["atoms", "--dfa", &w, "--basis", "2,3,4"]), "7\n");
    let not_atom = ideal_atoms(&["atoms", "--dfa", &w, "--basis", "1,2"]);
    assert_eq!(not_atom.status.code(), Some(1));
}

#[test]
fn atom_report_counts() {
    let dir = tempfile::tempdir().unwrap();
    let w = write_witness(dir.path(), "left", 5);
    let text = stdout(&["atoms", "--dfa", &w, "--basis", "-"]);
    assert!(
        text.ends_with("17 atoms over 5 states, max complexity 53\n"),
        "{text}"
    );
    let tsv = stdout(&["atoms", "--dfa", &w, "--report", "tsv"]);
    assert_eq!(tsv.lines().count(), 1 + 17);
    assert!(tsv.starts_with("basis\tatom\tcomplexity\n"));
}

#[test]
fn left_witness_two_states() {
    assert_eq!(
        stdout(&["witness", "--class", "left", "--n", "2"]),
        "dfa v1\nstates 2\nalphabet a b c\ninitial 1\nfinal 2\ntrans a 1 2\ntrans b 2 2\ntrans c 1 1\n"
    );
}

#[test]
fn ideal_checks_and_closure() {
    let dir = tempfile::tempdir().unwrap();
    let r = write_witness(dir.path(), "regular", 4);
    assert_eq!(
        stdout(&["check-ideal", "--dfa", &r]),
        "right\tno\nleft\tno\ntwo-sided\tno\n"
    );
    let closed = dir.path().join("closed.dfa");
    std::fs::write(
        &closed,
        stdout(&["idealize", "--dfa", &r, "--kind", "two-sided"]),
    )
    .unwrap();
    assert_eq!(
        stdout(&["check-ideal", "--dfa", closed.to_str().unwrap()]),
        "right\tyes\nleft\tyes\ntwo-sided\tyes\n"
    );
}

#[test]
fn bounds_listing() {
    let out = stdout(&["bounds", "--class", "two-sided", "--n", "4"]);
    assert_eq!(
        out,
        "size\tbound\n0\t*\n1\t5\n2\t8\n3\t7\n4\t4\nmax\t8\natoms\t5\n"
    );
}

#[test]
fn crosscheck_is_deterministic() {
    let args = [
        "crosscheck",
        "--n",
        "4",
        "--letters",
        "2",
        "--samples",
        "5",
        "--seed",
        "11",
    ];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    assert!(first.ends_with("passed 5/5\n"));
}

#[test]
fn dot_output() {
    let dir = tempfile::tempdir().unwrap();
    let w = write_witness(dir.path(), "regular", 3);
    let dot = stdout(&["dot", "--dfa", &w]);
    assert!(dot.starts_with("digraph dfa {"));
    let atom = stdout(&["dot", "--dfa", &w, "--atom", "3"]);
    assert!(atom.starts_with("digraph atom {"));
    assert!(atom.contains("q1 [label=\"({3},{1,2})\",shape=doublecircle];"));
    assert!(atom.contains("label=\"⊥\""));
}

#[test]
fn exit_codes() {
    assert_eq!(
        ideal_atoms(&["table", "--max-n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ideal_atoms(&["witness", "--class", "bogus", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ideal_atoms(&["witness", "--class", "regular", "--n", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        ideal_atoms(&["atoms", "--dfa", "/nonexistent.dfa"])
            .status
            .code(),
        Some(1)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.dfa");
    std::fs::write(
        &bad,
        "dfa v1\nstates 2\nalphabet a\ninitial 1\nfinal 2\ntrans a 1 3\n",
    )
    .unwrap();
    let out = ideal_atoms(&["check-ideal", "--dfa", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 6, column 11"));
}
