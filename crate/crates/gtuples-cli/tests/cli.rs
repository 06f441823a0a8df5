//! End-to-end checks of the binary: exit codes, output formats, file
//! output, and byte-determinism across worker-pool sizes.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gtuples"))
}

#[test]
fn exit_codes() {
    let ok = bin().args(["verify", "--elements", "1,3,120"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));

    let fail = bin().args(["verify", "--elements", "1,3,5"]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));

    let usage = bin().arg("bogus-cmd").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));

    let bad_k = bin().args(["family", "--k", "3+4j"]).output().unwrap();
    assert_eq!(bad_k.status.code(), Some(2));
}

#[test]
fn search_reports_known_extensions() {
    let out = bin()
        .args(["search", "--k", "2", "--index-bound", "4", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let exts = &doc["reports"][0]["witnesses"]["extensions"];
    let ds: Vec<&str> = exts
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["d"].as_str().unwrap())
        .collect();
    assert_eq!(ds, vec!["8", "1680"]);
}

#[test]
fn json_deterministic_across_threads() {
    let run = |threads: &str| {
        let out = bin()
            .args([
                "sieve", "profiles", "--k", "18+5i", "--max-m", "30",
                "--format", "json", "--threads", threads,
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    assert_eq!(run("1"), run("8"));

    let thresholds = |threads: &str| {
        let out = bin()
            .args(["analytic", "thresholds", "--format", "json", "--threads", threads])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    assert_eq!(thresholds("1"), thresholds("8"));
}

#[test]
fn csv_escapes_embedded_commas() {
    let out = bin()
        .args(["verify", "--elements", "1,3,120", "--format", "csv"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "claim,verdict,statement,witnesses");
    // the witness list serializes with commas, so the cell must be quoted
    let row = lines.next().unwrap();
    assert!(row.starts_with("tuple-verification,pass,"));
    assert!(row.contains("\"{\"\"witnesses\"\""), "row: {row}");
}

#[test]
fn output_file_and_env_precision() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = bin()
        .args(["analytic", "bw", "--format", "json", "--output"])
        .arg(&path)
        .env("GTUPLES_PRECISION_BITS", "96")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(doc["overall"], "pass");
}

#[test]
fn undecided_exit_code_reachable() {
    // a real separation instance decides; the undecided path is covered by
    // unit guards, so just check the pass path end to end here
    let out = bin()
        .args(["analytic", "separation", "--k", "18+5i", "--m", "3", "--n", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
