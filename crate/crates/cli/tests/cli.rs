//! End-to-end runs of the `hcontract` binary against golden outputs.
//! Set `BLESS=1` to rewrite the golden files after an intended change.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use hcontract::families::{bull, claw};
use hcontract::hfree::{splitting_graph, Family};
use hcontract::parse_graph6;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hcontract"))
        .args(args)
        .env_remove("HCONTRACT_CORPUS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn hcontract");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args, None);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected =
        std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "output differs from {name}");
}

fn core_corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/corpus")
}

fn family_of(lines: &str) -> Family {
    lines.lines().map(|l| parse_graph6(l).unwrap()).collect()
}

#[test]
fn splitting_of_claw() {
    let out = ok(&["splitting", "Cs"]);
    assert_eq!(out.lines().count(), 6);
    assert_eq!(family_of(&out), splitting_graph(&claw()).unwrap());
    golden("splitting_claw.txt", &out);
}

#[test]
fn splitting_one_vertex() {
    // "Cs" has its centre at 0; splitting a leaf gives a pendant path or a triangle
    let centre = ok(&["splitting", "Cs", "--vertex", "0"]);
    let leaf = ok(&["splitting", "Cs", "--vertex", "3"]);
    assert_eq!(centre.lines().count(), 6);
    assert_eq!(leaf.lines().count(), 2);
}

#[test]
fn fs_of_claw_is_bull() {
    let out = ok(&["fs", "Cs"]);
    assert_eq!(family_of(&out), Family::single(bull()));
    let rec: serde_json::Value =
        serde_json::from_str(ok(&["fs", "Cs", "--format", "records"]).trim()).unwrap();
    assert_eq!(rec["graph"], out.trim());
}

#[test]
fn fs_of_two_k2_is_empty() {
    assert_eq!(ok(&["fs", "--family", "2k2"]), "");
}

#[test]
fn contract_c4() {
    assert_eq!(ok(&["contract", "Cr", "0", "1"]), "Bw\n");
    let rec: serde_json::Value =
        serde_json::from_str(&ok(&["contract", "Cr", "0", "1", "--format", "records"])).unwrap();
    assert_eq!(rec["graph"], "Bw");
    assert_eq!(rec["merged"], 0);
    assert_eq!(rec["relabel"], serde_json::json!([null, null, 1, 2]));
}

#[test]
fn contract_rejects_non_edge() {
    // "Cr" is the cycle 0-1-3-2
    let out = run(&["contract", "Cr", "0", "3"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_reads_stdin_and_skips_comments() {
    let out = run(
        &["check", "--family", "claw"],
        Some("# claw then K4\nCs\n\nC~\n"),
    );
    assert_eq!(out.status.code(), Some(0));
    golden("check_claw.txt", &String::from_utf8(out.stdout).unwrap());
}

#[test]
fn check_records() {
    let out = ok(&["check", "Cs", "--family", "claw", "--format", "records"]);
    let rec: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(rec["free"], false);
    assert_eq!(rec["strongly_free"], false);
    assert_eq!(rec["critically_exist"], true);
}

#[test]
fn bad_graph6_reports_line() {
    let out = run(&["check", "--family", "claw"], Some("Cs\n!!\n"));
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("stdin line 2"), "{err}");
}

#[test]
fn unknown_names_are_usage_errors() {
    assert_eq!(
        run(&["check", "Cs", "--family", "nope"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--claim", "nope"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["corpus", "show", "nope"], None).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(2));
}

#[test]
fn critical_claw_small() {
    golden(
        "critical_claw_6.txt",
        &ok(&["critical", "--family", "claw", "--nmax", "6"]),
    );
}

#[test]
fn enumerate_counts() {
    golden(
        "counts_7.txt",
        &ok(&["enumerate", "--nmax", "7", "--counts"]),
    );
    assert_eq!(
        ok(&["enumerate", "--nmax", "3", "--exclude-isolated"])
            .lines()
            .count(),
        3
    );
}

#[test]
fn verify_text_and_records() {
    golden(
        "verify_fcc_claw.txt",
        &ok(&["verify", "--claim", "fcc_claw"]),
    );
    let out = ok(&["verify", "--claim", "fcc_claw", "--format", "records"]);
    let rec: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(rec["status"], "ok");
    assert!(rec.get("elapsed_ms").is_none());
    let timed = ok(&[
        "verify", "--claim", "fcc_claw", "--format", "records", "--timing",
    ]);
    let rec: serde_json::Value = serde_json::from_str(timed.trim()).unwrap();
    assert!(rec["elapsed_ms"].is_number());
}

#[test]
fn verify_list_names_every_claim() {
    let out = ok(&["verify", "--list"]);
    assert_eq!(out.lines().count(), hcontract::verify::claims().len());
    assert!(out.lines().all(|l| l.contains('\t')));
}

#[test]
fn output_is_byte_stable_across_worker_counts() {
    let args = |w: &'static str| ["verify", "--claim", "key", "--nmax", "6", "--workers", w];
    let one = ok(&args("1"));
    assert_eq!(one, ok(&args("4")));
    assert_eq!(one, ok(&args("1")));
    let c1 = ok(&[
        "critical",
        "--family",
        "2k2",
        "--nmax",
        "6",
        "--workers",
        "1",
    ]);
    assert_eq!(
        c1,
        ok(&[
            "critical",
            "--family",
            "2k2",
            "--nmax",
            "6",
            "--workers",
            "3"
        ])
    );
}

#[test]
fn corpus_show_matches_stored_file() {
    let stored = std::fs::read_to_string(core_corpus().join("claw_split.g6")).unwrap();
    assert_eq!(ok(&["corpus", "show", "claw_split"]), stored);
}

#[test]
fn corpus_check_and_write() {
    assert!(
        ok(&["corpus", "check", "--dir", core_corpus().to_str().unwrap()])
            .lines()
            .all(|l| l.ends_with(" ok"))
    );
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    ok(&["corpus", "write", "--dir", d]);
    ok(&["corpus", "check", "--dir", d]);
    std::fs::write(
        dir.path().join("critical_p4.g6"),
        "# family: critical_p4\nCs\n",
    )
    .unwrap();
    let out = run(&["corpus", "check", "--dir", d], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .any(|l| l.starts_with("critical_p4") && !l.ends_with(" ok")));
}
