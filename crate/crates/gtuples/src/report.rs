//! Structured verdicts shared by the library, the acceptance battery, and
//! the CLI.
//!
//! Reports are keyed by stable claim ids so runs can be diffed; every fail
//! or undecided verdict must carry a witness or a reason. Serialization is
//! deterministic (sorted JSON keys, no timestamps) so identical runs are
//! byte-identical regardless of the parallelism used to produce them —
//! elapsed times are carried separately and only emitted on request.

use num_rational::BigRational;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::interval::{decimal_sci, decimal_sci_up, RealInterval};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub claim: String,
    pub statement: String,
    pub inputs: Value,
    pub verdict: Verdict,
    pub witnesses: Value,
    #[serde(skip)]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(claim: &str, statement: &str, inputs: Value, verdict: Verdict, witnesses: Value) -> Self {
        Report {
            claim: claim.to_string(),
            statement: statement.to_string(),
            inputs,
            verdict,
            witnesses,
            elapsed_ms: None,
        }
    }

    pub fn pass(claim: &str, statement: &str, inputs: Value, witnesses: Value) -> Self {
        Self::new(claim, statement, inputs, Verdict::Pass, witnesses)
    }

    pub fn from_bool(claim: &str, statement: &str, inputs: Value, ok: bool, witnesses: Value) -> Self {
        Self::new(
            claim,
            statement,
            inputs,
            if ok { Verdict::Pass } else { Verdict::Fail },
            witnesses,
        )
    }
}

/// JSON value for an interval: midpoint plus certified radius.
pub fn interval_json(iv: &RealInterval) -> Value {
    json!({
        "value": decimal_sci(&iv.midpoint(), 30),
        "error_bound": decimal_sci_up(&iv.radius(), 3),
    })
}

pub fn rational_json(q: &BigRational, sig: usize) -> Value {
    Value::String(decimal_sci(q, sig))
}

/// Serde hook for interval fields inside report payload structs.
pub fn serialize_interval<S: Serializer>(iv: &RealInterval, s: S) -> Result<S::Ok, S::Error> {
    interval_json(iv).serialize(s)
}

/// Serde hook for big integers: decimal strings, never 64-bit JSON numbers.
pub fn serialize_bigint<S: Serializer>(v: &num_bigint::BigInt, s: S) -> Result<S::Ok, S::Error> {
    v.to_string().serialize(s)
}

/// Aggregate outcome over a list of reports. Exit-code order of severity:
/// any fail beats undecided beats pass.
pub fn overall_verdict(reports: &[Report]) -> Verdict {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        Verdict::Fail
    } else if reports.iter().any(|r| r.verdict == Verdict::Undecided) {
        Verdict::Undecided
    } else {
        Verdict::Pass
    }
}

/// Canonical JSON for a report list: stable field order, no timing.
pub fn to_json(reports: &[Report], with_timing: bool) -> String {
    let items: Vec<Value> = reports
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(r).expect("report serializes");
            if with_timing {
                if let Some(ms) = r.elapsed_ms {
                    v["elapsed_ms"] = json!(ms);
                }
            }
            v
        })
        .collect();
    let doc = json!({
        "reports": items,
        "overall": overall_verdict(reports),
    });
    serde_json::to_string_pretty(&doc).expect("serializes")
}

/// RFC-4180 CSV: claim, verdict, statement, witnesses (JSON-encoded cell).
pub fn to_csv(reports: &[Report]) -> String {
    let mut out = String::from("claim,verdict,statement,witnesses\r\n");
    for r in reports {
        let verdict = serde_json::to_value(r.verdict)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default();
        for field in [
            r.claim.clone(),
            verdict,
            r.statement.clone(),
            serde_json::to_string(&r.witnesses).unwrap_or_default(),
        ] {
            out.push_str(&csv_escape(&field));
            out.push(',');
        }
        out.pop();
        out.push_str("\r\n");
    }
    out
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') || field.contains('\r') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// One line per report for terminals.
pub fn to_text(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        let mark = match r.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Undecided => "UNDECIDED",
        };
        out.push_str(&format!("{mark:9} {:40} {}\n", r.claim, r.statement));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_aggregation() {
        let p = Report::pass("a", "s", json!({}), json!({}));
        let f = Report::new("b", "s", json!({}), Verdict::Fail, json!({"why": "x"}));
        let u = Report::new("c", "s", json!({}), Verdict::Undecided, json!({"why": "y"}));
        assert_eq!(overall_verdict(&[p.clone()]), Verdict::Pass);
        assert_eq!(overall_verdict(&[p.clone(), u.clone()]), Verdict::Undecided);
        assert_eq!(overall_verdict(&[p, u, f]), Verdict::Fail);
    }

    #[test]
    fn csv_escaping() {
        assert_eq!(csv_escape("2+3i"), "2+3i");
        assert_eq!(csv_escape("a,b"), "\"a,b\"");
        assert_eq!(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn json_is_deterministic_and_timing_free() {
        let mut r = Report::pass("claim-x", "statement", json!({"k": "2"}), json!({}));
        r.elapsed_ms = Some(12);
        let a = to_json(&[r.clone()], false);
        r.elapsed_ms = Some(9001);
        let b = to_json(&[r.clone()], false);
        assert_eq!(a, b);
        let c = to_json(&[r], true);
        assert!(c.contains("elapsed_ms"));
    }
}
