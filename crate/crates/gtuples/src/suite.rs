//! The acceptance battery: twelve criteria spanning every module, each
//! yielding one pass/fail report with its inputs and witnesses. The
//! headline extension theorem is far outside desk-scale search, so the
//! battery checks every intermediate claim exactly at instances instead:
//! grids for the algebraic identities, exhaustive scans for the lemmas,
//! certified enclosures for the analytic constants.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::json;

use crate::analytic::approx::{jz_params, JzVariant};
use crate::analytic::bw::bw_threshold;
use crate::analytic::linform::{eval_linear_form, pq_bound_check};
use crate::analytic::roots::{isolate_largest_root, LargestRoot, RatPoly};
use crate::analytic::thresholds::threshold_manifest;
use crate::gint::{isqrt_u128, GaussianInt};
use crate::lemmas::{cubic_ratio_cases, cubic_ratio_scan, pair_ratio_scan};
use crate::pell::{enumerate_fundamental, family_e2, intersect_sequences};
use crate::report::{to_json, Report, Verdict};
use crate::sieve::{candidate_fundamentals, congruence_profiles, expected_candidate_set};
use crate::tuples::{extend_search, family_triple, known_extensions};

fn g(re: i64, im: i64) -> GaussianInt {
    GaussianInt::new(re, im)
}

/// 30 sample parameters with 17 < |k| ≤ 60, mixed real and complex. All
/// have Re k ≥ 2, which keeps the one-step orbit mates (±(2k−1), ·) inside
/// the fundamental disk so the six-class reproduction is exact.
pub fn thirty_samples() -> Vec<GaussianInt> {
    vec![
        g(18, 0), g(19, 0), g(20, 0), g(22, 0), g(24, 0), g(25, 0), g(28, 0), g(30, 0),
        g(33, 0), g(36, 0), g(40, 0), g(45, 0), g(50, 0), g(55, 0), g(59, 0),
        g(18, 5), g(18, 6), g(20, 9), g(17, 7), g(19, 12), g(25, 12), g(2, 18), g(3, 20),
        g(30, 17), g(35, 12), g(40, 9), g(45, 20), g(50, 11), g(55, 12), g(58, 15),
    ]
}

fn ten_complex_samples() -> Vec<GaussianInt> {
    vec![
        g(18, 5), g(18, 6), g(20, 9), g(2, 18), g(25, 12),
        g(30, 17), g(17, 7), g(3, 20), g(35, 12), g(19, 12),
    ]
}

fn finish(mut report: Report, started: Instant) -> Report {
    report.elapsed_ms = Some(started.elapsed().as_millis() as u64);
    report
}

/// Criterion 1: the family triple verifies on the whole |k| ≤ 30 grid.
pub fn c01_family_grid() -> Report {
    let started = Instant::now();
    let mut ks = Vec::new();
    for re in -30i64..=30 {
        for im in -30i64..=30 {
            let k = g(re, im);
            let n = k.norm();
            if n > BigInt::from(900) || n == BigInt::from(0) {
                continue;
            }
            if k == g(1, 0) || k == g(-1, 0) {
                continue;
            }
            ks.push(k);
        }
    }
    let total = ks.len();
    let failures: Vec<String> = ks
        .par_iter()
        .filter_map(|k| {
            // known_extensions re-verifies both quadruples internally
            family_triple(k)
                .and_then(|_| known_extensions(k))
                .err()
                .map(|e| format!("{k}: {e}"))
        })
        .collect();
    let elapsed = started.elapsed();
    let pass = failures.is_empty() && elapsed.as_secs_f64() < 10.0;
    finish(
        Report::from_bool(
            "family-grid-verification",
            "the triple {k−1, k+1, 16k³−4k} and both known extension quadruples verify \
             with witnesses on every k with |k| ≤ 30, k ∉ {0, ±1}, in under 10 s",
            json!({ "grid_points": total }),
            pass,
            json!({ "failures": failures, "within_time_budget": pass || !failures.is_empty() }),
        ),
        started,
    )
}

/// Criterion 2: extension recovery is exact over real k in [2, 50] and ten
/// complex samples.
pub fn c02_extension_recovery() -> Report {
    let started = Instant::now();
    let mut ks: Vec<GaussianInt> = (2..=50).map(|v| g(v, 0)).collect();
    ks.extend(ten_complex_samples());
    let failures: Vec<String> = ks
        .par_iter()
        .filter_map(|k| {
            let expected: Vec<GaussianInt> = known_extensions(k).ok()?;
            let found = match extend_search(k, 8) {
                Ok(f) => f,
                Err(e) => return Some(format!("{k}: search failed: {e}")),
            };
            let ds: Vec<GaussianInt> = found.iter().map(|e| e.d.clone()).collect();
            let mut want = expected;
            want.sort_by_key(GaussianInt::norm_lex_key);
            if ds != want {
                return Some(format!(
                    "{k}: got {:?}",
                    ds.iter().map(ToString::to_string).collect::<Vec<_>>()
                ));
            }
            None
        })
        .collect();
    let elapsed = started.elapsed();
    let pass = failures.is_empty() && elapsed.as_secs_f64() < 60.0;
    finish(
        Report::from_bool(
            "extension-recovery-exact",
            "extend_search with index bound 8 returns exactly {4k, 64k⁵−48k³+8k} for \
             real k in [2, 50] and ten complex samples, in under 60 s",
            json!({ "real_range": [2, 50], "complex_samples": ten_complex_samples().len() }),
            pass,
            json!({ "failures": failures, "within_time_budget": pass || !failures.is_empty() }),
        ),
        started,
    )
}

/// Criterion 3: enumeration plus sieve reproduces the six-class set.
pub fn c03_fundamental_classes() -> Report {
    let started = Instant::now();
    let failures: Vec<String> = thirty_samples()
        .par_iter()
        .filter_map(|k| {
            let eq = match family_e2(k) {
                Ok(eq) => eq,
                Err(e) => return Some(format!("{k}: {e}")),
            };
            let raw = match enumerate_fundamental(&eq, None) {
                Ok(r) => r,
                Err(e) => return Some(format!("{k}: enumeration: {e}")),
            };
            let out = match candidate_fundamentals(k, &raw) {
                Ok(o) => o,
                Err(e) => return Some(format!("{k}: sieve: {e}")),
            };
            let mut got: Vec<(GaussianInt, GaussianInt)> = out
                .survivors
                .iter()
                .map(|s| (s.x0.clone(), s.z0.clone()))
                .collect();
            got.sort_by_key(|(x, z)| (x.norm_lex_key(), z.norm_lex_key()));
            let mut want = expected_candidate_set(k).ok()?;
            want.sort_by_key(|(x, z)| (x.norm_lex_key(), z.norm_lex_key()));
            if got != want {
                return Some(format!("{k}: survivors {} of 6", got.len()));
            }
            None
        })
        .collect();
    finish(
        Report::from_bool(
            "fundamental-class-set",
            "for 30 samples with 17 < |k| ≤ 60, enumeration + residue sieve yields \
             exactly the six candidate classes, with no unexpected survivor",
            json!({ "samples": 30 }),
            failures.is_empty(),
            json!({ "failures": failures }),
        ),
        started,
    )
}

/// Criterion 4: the congruence closed forms hold to index 40.
pub fn c04_congruence_profiles() -> Report {
    let started = Instant::now();
    let failures: Vec<String> = thirty_samples()
        .par_iter()
        .filter_map(|k| match congruence_profiles(k, 40) {
            Ok((_, rep)) if rep.all_pass => None,
            Ok((_, rep)) => Some(format!(
                "{k}: {:?}",
                rep.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
            )),
            Err(e) => Some(format!("{k}: {e}")),
        })
        .collect();
    finish(
        Report::from_bool(
            "congruence-profiles",
            "the V form (by n mod 4) and all six W affine forms mod 4k(k−1) hold \
             exactly up to index 40 on the 30-sample set",
            json!({ "samples": 30, "max_index": 40 }),
            failures.is_empty(),
            json!({ "failures": failures }),
        ),
        started,
    )
}

/// Criterion 5: every intersection satisfies the index relation.
pub fn c05_index_relation() -> Report {
    let started = Instant::now();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for k in thirty_samples() {
        match intersect_sequences(&k, 8, 8) {
            Ok(matches) => {
                for mt in matches {
                    checked += 1;
                    if !(mt.m <= mt.n && mt.n <= 3 * mt.m + 2) {
                        failures.push(format!("{k}: ({}, {}, {}, {})", mt.n, mt.m, mt.j, mt.sign));
                    }
                }
            }
            Err(e) => failures.push(format!("{k}: {e}")),
        }
    }
    finish(
        Report::from_bool(
            "index-relation",
            "every V/W coincidence found in the sample sweep satisfies m ≤ n ≤ 3m+2",
            json!({ "matches_checked": checked }),
            failures.is_empty() && checked > 0,
            json!({ "failures": failures }),
        ),
        started,
    )
}

/// Criterion 6: the threshold table certifies at the stated bounds.
pub fn c06_threshold_table() -> Report {
    let started = Instant::now();
    let manifest = threshold_manifest();
    let failures: Vec<String> = manifest
        .iter()
        .filter(|e| !e.pass)
        .map(|e| e.claim.clone())
        .collect();
    // headline root value: 2.04414 ± 1e-4 double-checked here
    let p = RatPoly::from_descending_i64(&[-64, 96, 32, 72, 9, 14, 3]);
    let tol = BigRational::new(1.into(), (1i64 << 40).into());
    let root_ok = match isolate_largest_root(&p, &tol) {
        LargestRoot::Root { lo, hi } => {
            lo > BigRational::new(204404.into(), 100000.into())
                && hi < BigRational::new(204424.into(), 100000.into())
        }
        LargestRoot::NoRealRoot => false,
    };
    let elapsed = started.elapsed();
    let pass = failures.is_empty() && root_ok && elapsed.as_secs_f64() < 5.0;
    finish(
        Report::from_bool(
            "threshold-table",
            "all manifest polynomials certify at their stated bounds (2.04414 two-sided \
             at 10⁻⁴; 12.019 and 4.846 with 10⁻³ rounding slack; the rest exact), \
             in under 5 s",
            json!({ "entries": manifest.len() }),
            pass,
            json!({ "failures": failures, "within_time_budget": pass || !failures.is_empty() }),
        ),
        started,
    )
}

/// Criterion 7: the logarithmic-form constant and the 5·10³⁷ crossing.
pub fn c07_logform_constants() -> Report {
    let started = Instant::now();
    let rep = match bw_threshold(128) {
        Ok(r) => r,
        Err(e) => {
            return finish(
                Report::from_bool(
                    "logform-constants",
                    "constant and crossing certification",
                    json!({}),
                    false,
                    json!({ "error": e.to_string() }),
                ),
                started,
            )
        }
    };
    let pass = rep.k_prime_matches
        && rep.half_k_prime_matches
        && rep.log_k_matches
        && rep.crossing_below_5e37
        && rep.violated_at_5e37;
    finish(
        Report::from_bool(
            "logform-constants",
            "K′ within 0.01% of 1.3663·10³², K′/2 matches the halved constant, \
             log K ≈ −0.47325 ± 10⁻³, and the contradiction crossing is certified \
             strictly below 5·10³⁷ with the inequality violated there",
            json!({}),
            pass,
            serde_json::to_value(&rep).unwrap_or_default(),
        ),
        started,
    )
}

fn jz_grid() -> Vec<GaussianInt> {
    let mut ks: Vec<GaussianInt> = Vec::new();
    // 41 real values log-spaced over 10..10⁹
    for i in 0..41u32 {
        let exp = 1.0 + 8.0 * f64::from(i) / 40.0;
        let v = 10f64.powf(exp).round() as i64;
        ks.push(g(v.max(10), 0));
    }
    // 9 complex values on 3-4-5 rays and small mixes
    ks.extend([
        g(8, 8), g(20, 9), g(100, 50), g(300, 400), g(3000, 4000),
        g(30_000, 40_000), g(300_000, 400_000), g(3_000_000, 4_000_000),
        g(30_000_000, 40_000_000),
    ]);
    ks
}

/// Criterion 8: L < 1 on the first system and λ > 2 on the second, across
/// a 50-point log grid.
pub fn c08_approx_grid() -> Report {
    let started = Instant::now();
    let grid = jz_grid();
    let failures: Vec<String> = grid
        .par_iter()
        .filter_map(|k| {
            let p1 = match jz_params(k, JzVariant::System1, 128) {
                Ok(p) => p,
                Err(e) => return Some(format!("{k}: system1: {e}")),
            };
            if !p1.l_below_one {
                return Some(format!("{k}: L(system1) not below 1"));
            }
            let p2 = match jz_params(k, JzVariant::System2, 128) {
                Ok(p) => p,
                Err(e) => return Some(format!("{k}: system2: {e}")),
            };
            if !p2.l_above_one || p2.lambda_above_two != Some(true) {
                return Some(format!("{k}: system2 lambda/L failed"));
            }
            None
        })
        .collect();
    finish(
        Report::from_bool(
            "approx-exponent-grid",
            "on a 50-point grid with 10 ≤ |k| ≤ 10⁹: the first system has L < 1 and \
             the second has L > 1 with exponent λ > 2, all certified",
            json!({ "grid_size": grid.len() }),
            failures.is_empty(),
            json!({ "failures": failures }),
        ),
        started,
    )
}

/// Criterion 9: the linear-form majorant chain and the floor bounds at 24
/// instances.
pub fn c09_linform_instances() -> Report {
    let started = Instant::now();
    let ks = [g(20, 0), g(24, 0), g(18, 6), g(30, 17)];
    let mut failures = Vec::new();
    let mut instances = 0;
    for k in &ks {
        for class_j in [1usize, 3] {
            for mn in [3u32, 4, 5] {
                instances += 1;
                match eval_linear_form(k, class_j, mn, mn, 128) {
                    Ok(ev) if ev.chain_certified => {}
                    Ok(_) => failures.push(format!("{k} class {class_j} m=n={mn}: chain")),
                    Err(e) => failures.push(format!("{k} class {class_j} m=n={mn}: {e}")),
                }
                match pq_bound_check(k, class_j, mn, mn, 128) {
                    Ok(r) if r.p_floor_ok && r.q_floor_ok && r.unit_above_sqrt && r.q_prime_floor_ok => {}
                    Ok(_) => failures.push(format!("{k} class {class_j} m=n={mn}: pq floors")),
                    Err(e) => failures.push(format!("{k} class {class_j} m=n={mn}: pq: {e}")),
                }
            }
        }
    }
    finish(
        Report::from_bool(
            "linform-instances",
            "at 24 instances (four k, two classes, m = n = 3..5): the conditional \
             majorant chain log(24/19)/|P| < K√|ac|·|s+√ac|^(−m) certifies, and \
             |P| > 12|c/a|, |Q| > 12|c/b|, |s+√ac| ≥ √|ac| all hold",
            json!({ "instances": instances }),
            failures.is_empty(),
            json!({ "failures": failures }),
        ),
        started,
    )
}

/// Criterion 10: the irrationality lemma scans and the case split.
pub fn c10_lemma_labs() -> Report {
    let started = Instant::now();
    let pair = pair_ratio_scan(200);
    let cubic = match cubic_ratio_scan(100) {
        Ok(r) => r,
        Err(e) => {
            return finish(
                Report::from_bool(
                    "lemma-labs",
                    "scan failed",
                    json!({}),
                    false,
                    json!({ "error": e.to_string() }),
                ),
                started,
            )
        }
    };
    let cases = match cubic_ratio_cases() {
        Ok(c) => c,
        Err(e) => {
            return finish(
                Report::from_bool(
                    "lemma-labs",
                    "case split failed",
                    json!({}),
                    false,
                    json!({ "error": e.to_string() }),
                ),
                started,
            )
        }
    };
    let elapsed = started.elapsed();
    let pass = pair.clean() && cubic.clean() && cases.all_verified && elapsed.as_secs_f64() < 120.0;
    finish(
        Report::from_bool(
            "lemma-labs",
            "box scans (200 and 100) report zero perfect squares, the w = 1..32 case \
             split covers everything with verified obstructions, and the factored \
             discriminant identity holds symbolically; total under 120 s",
            json!({ "pair_box": 200, "cubic_box": 100 }),
            pass,
            json!({
                "pair_points": pair.points,
                "cubic_points": cubic.points,
                "pair_violations": pair.violations.len(),
                "cubic_violations": cubic.violations.len(),
                "cases_verified": cases.cases.iter().filter(|c| c.verified).count(),
            }),
        ),
        started,
    )
}

fn is_gsquare_i128(x: i128, y: i128) -> bool {
    let n = (x * x + y * y) as u128;
    if !crate::gint::is_square_u128(n) {
        return false;
    }
    let s = isqrt_u128(n) as i128;
    if (s + x) & 1 == 1 {
        return false;
    }
    let a2 = (s + x) / 2;
    let b2 = (s - x) / 2;
    let a = isqrt_u128(a2 as u128) as i128;
    if a * a != a2 {
        return false;
    }
    if y == 0 {
        let b = isqrt_u128(b2 as u128) as i128;
        return b * b == b2;
    }
    if a == 0 {
        return false;
    }
    if y % (2 * a) != 0 {
        return false;
    }
    let b = y / (2 * a);
    a * a - b * b == x && 2 * a * b == y
}

/// Criterion 11: the brute-force oracle finds nothing the search misses.
pub fn c11_brute_force_oracle() -> Report {
    let started = Instant::now();
    let mut ks = Vec::new();
    for re in -6i64..=6 {
        for im in -6i64..=6 {
            let k = g(re, im);
            let n = k.norm();
            if n == BigInt::from(0) || n > BigInt::from(36) {
                continue;
            }
            if k == g(1, 0) || k == g(-1, 0) {
                continue;
            }
            ks.push(k);
        }
    }
    let radius: i64 = 1000; // norm(d) ≤ 10⁶
    let failures: Vec<String> = ks
        .par_iter()
        .filter_map(|k| {
            let kr = i128::try_from(k.re()).ok()?;
            let ki = i128::try_from(k.im()).ok()?;
            // a = k−1, b = k+1, c = 16k³−4k as exact i128 pairs
            let (ar, ai) = (kr - 1, ki);
            let (br, bi) = (kr + 1, ki);
            let k2 = (kr * kr - ki * ki, 2 * kr * ki);
            let k3 = (k2.0 * kr - k2.1 * ki, k2.0 * ki + k2.1 * kr);
            let (cr, ci) = (16 * k3.0 - 4 * kr, 16 * k3.1 - 4 * ki);
            let mut brute: Vec<(i128, i128)> = Vec::new();
            for p in -radius..=radius {
                for q in -radius..=radius {
                    if p == 0 && q == 0 {
                        continue;
                    }
                    let (p, q) = (p as i128, q as i128);
                    let mul1 = |er: i128, ei: i128| (er * p - ei * q + 1, er * q + ei * p);
                    let (w1r, w1i) = mul1(ar, ai);
                    if !is_gsquare_i128(w1r, w1i) {
                        continue;
                    }
                    let (w2r, w2i) = mul1(br, bi);
                    if !is_gsquare_i128(w2r, w2i) {
                        continue;
                    }
                    let (w3r, w3i) = mul1(cr, ci);
                    if !is_gsquare_i128(w3r, w3i) {
                        continue;
                    }
                    // exclude members of the triple itself
                    if (p, q) == (ar, ai) || (p, q) == (br, bi) || (p, q) == (cr, ci) {
                        continue;
                    }
                    brute.push((p, q));
                }
            }
            let search = match extend_search(k, 8) {
                Ok(s) => s,
                Err(e) => return Some(format!("{k}: search failed: {e}")),
            };
            let found: Vec<(i128, i128)> = search
                .iter()
                .filter_map(|e| {
                    Some((i128::try_from(e.d.re()).ok()?, i128::try_from(e.d.im()).ok()?))
                })
                .collect();
            let missed: Vec<(i128, i128)> =
                brute.iter().filter(|d| !found.contains(d)).copied().collect();
            if missed.is_empty() {
                None
            } else {
                Some(format!("{k}: brute force found {missed:?} outside the search output"))
            }
        })
        .collect();
    finish(
        Report::from_bool(
            "brute-force-oracle",
            "for every |k| ≤ 6 (k ∉ {0, ±1}), an exhaustive scan of norm(d) ≤ 10⁶ \
             finds no extension missed by extend_search at index bound 8 (the bound \
             covers every |x| the scan box can produce, since orbit growth is at \
             least 2.4 per step)",
            json!({ "k_count": ks.len(), "d_norm_cap": 1_000_000u64 }),
            failures.is_empty(),
            json!({ "failures": failures }),
        ),
        started,
    )
}

/// The deterministic sub-battery used by the determinism criterion.
fn determinism_probe() -> Vec<Report> {
    let mut reports = vec![c05_index_relation(), c06_threshold_table()];
    // a slice of the profile checks exercises parallel reduction paths
    let ks = [g(20, 0), g(18, 5), g(2, 18)];
    let ok = ks
        .par_iter()
        .all(|k| congruence_profiles(k, 24).map(|(_, r)| r.all_pass).unwrap_or(false));
    reports.push(Report::from_bool(
        "determinism-probe-profiles",
        "profile spot-checks for the determinism comparison",
        json!({}),
        ok,
        json!({}),
    ));
    reports
}

/// Criterion 12: serialized output is byte-identical across thread counts.
pub fn c12_determinism() -> Report {
    let started = Instant::now();
    let render = |threads: usize| -> Result<String, String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| e.to_string())?;
        Ok(pool.install(|| to_json(&determinism_probe(), false)))
    };
    let (a, b) = match (render(1), render(8)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            return finish(
                Report::from_bool(
                    "determinism",
                    "pool construction failed",
                    json!({}),
                    false,
                    json!({ "error": e }),
                ),
                started,
            )
        }
    };
    finish(
        Report::from_bool(
            "determinism",
            "the serialized report battery is byte-identical when computed with 1 \
             thread and with 8 threads",
            json!({ "bytes": a.len() }),
            a == b,
            json!({ "identical": a == b }),
        ),
        started,
    )
}

/// Run the full battery in order.
pub fn run_all() -> Vec<Report> {
    vec![
        c01_family_grid(),
        c02_extension_recovery(),
        c03_fundamental_classes(),
        c04_congruence_profiles(),
        c05_index_relation(),
        c06_threshold_table(),
        c07_logform_constants(),
        c08_approx_grid(),
        c09_linform_instances(),
        c10_lemma_labs(),
        c11_brute_force_oracle(),
        c12_determinism(),
    ]
}

/// True when every criterion passed.
pub fn all_pass(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.verdict == Verdict::Pass)
}
