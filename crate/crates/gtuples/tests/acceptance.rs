//! The acceptance battery as an integration test: every criterion runs at
//! its stated tolerance and prints one pass/fail line, and the serialized
//! output must be byte-identical across parallelism degrees.

use gtuples::report::{to_json, Verdict};
use gtuples::suite;

#[test]
fn acceptance_battery() {
    let pool8 = rayon::ThreadPoolBuilder::new()
        .num_threads(8)
        .build()
        .expect("pool");
    let reports = pool8.install(suite::run_all);
    for r in &reports {
        let mark = match r.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Undecided => "UNDECIDED",
        };
        println!(
            "{mark:9} {:28} {:>7} ms  {}",
            r.claim,
            r.elapsed_ms.unwrap_or(0),
            r.statement
        );
    }
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| r.verdict != Verdict::Pass)
        .map(|r| r.claim.as_str())
        .collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");

    // determinism across parallelism degrees, over the full battery
    let pool1 = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("pool");
    let again = pool1.install(suite::run_all);
    assert_eq!(
        to_json(&reports, false),
        to_json(&again, false),
        "serialized battery differs between 8 threads and 1 thread"
    );
}
