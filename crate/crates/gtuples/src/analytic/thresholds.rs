//! The threshold manifest: every "the inequality holds for |k| ≥ X" guard
//! used by the sieve and the analytic layer, certified by exact root
//! isolation.
//!
//! Each entry reduces a claim to "this polynomial has no real root above
//! the stated bound" (plus, where the quoted constant is itself the
//! headline value, a two-sided enclosure of the root). The stated bounds
//! are rounded to a few decimals in the source material; entries that sit
//! exactly at such a rounding carry an explicit documented slack, pinned
//! here and nowhere else.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::roots::{isolate_largest_root, no_roots_above, LargestRoot, RatPoly};
use crate::gint::GaussianInt;
use crate::report::{rational_json, Report, Verdict};
use serde_json::json;

#[derive(Debug, Clone, Serialize)]
pub struct ThresholdEntry {
    pub claim: String,
    pub statement: String,
    /// Quoted bound the guard relies on.
    pub stated_bound: String,
    /// Certified upper end of the largest-root enclosure ("-" if no root).
    pub certified_bound: String,
    pub pass: bool,
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn entry(
    claim: &str,
    statement: &str,
    poly: &RatPoly,
    stated: BigRational,
    slack: BigRational,
    two_sided_tol: Option<BigRational>,
) -> ThresholdEntry {
    let cutoff = &stated + &slack;
    let mut pass = no_roots_above(poly, &cutoff);
    let iso = isolate_largest_root(poly, &rat(1, 1i64 << 40));
    let certified = match &iso {
        LargestRoot::NoRealRoot => "-".to_string(),
        LargestRoot::Root { hi, .. } => crate::interval::decimal_sci_up(hi, 8),
    };
    if let Some(tol) = two_sided_tol {
        // the stated value is the root itself: demand |root − stated| ≤ tol
        pass &= match &iso {
            LargestRoot::NoRealRoot => false,
            LargestRoot::Root { lo, hi } => {
                lo >= &(&stated - &tol) && hi <= &(&stated + &tol)
            }
        };
    }
    ThresholdEntry {
        claim: claim.to_string(),
        statement: statement.to_string(),
        stated_bound: crate::interval::decimal_sci(&stated, 8),
        certified_bound: certified,
        pass,
    }
}

/// Enclosure of √5 at roughly 2^-prec, as directed rational bounds.
fn sqrt5_enclosure(prec: u32) -> (BigRational, BigRational) {
    let scaled = BigInt::from(5) << (2 * prec);
    let s = scaled.sqrt();
    let denom = BigInt::one() << prec;
    (
        BigRational::new(s.clone(), denom.clone()),
        BigRational::new(s + 1, denom),
    )
}

/// The class-size elimination polynomial for the z-residue branch carries
/// √5 coefficients; build directed rational majorant/minorant polynomials
/// valid pointwise for t ≥ 0.
fn secondary_elimination_polys() -> (RatPoly, RatPoly) {
    // coefficients a_i + b_i·√5, highest degree first
    let a: [i64; 8] = [-64, 544, -256, -488, 332, 40, -88, -20];
    let b: [i64; 8] = [0, 128, -192, -64, 144, 24, -32, -8];
    let (r_lo, r_hi) = sqrt5_enclosure(120);
    let build = |up: bool| {
        RatPoly::from_descending(
            a.iter()
                .zip(b.iter())
                .map(|(&ai, &bi)| {
                    let bq = BigRational::from_integer(bi.into());
                    let root = if (bi > 0) == up { &r_hi } else { &r_lo };
                    BigRational::from_integer(ai.into()) + bq * root
                })
                .collect(),
        )
    };
    (build(false), build(true))
}

/// The degree-18 certificate for the conjugate-quartic coefficient bound:
/// t⁸(t−1)⁴(16t³−5t−1)² − 16(16t³+4t)²(t+1)(150t⁵+65)², positive beyond
/// its largest root.
fn conjugate_q34_poly() -> RatPoly {
    let t = RatPoly::from_descending_i64(&[1, 0]);
    let t8 = t.pow_u(8);
    let lhs = t8
        .mul(&RatPoly::from_descending_i64(&[1, -1]).pow_u(4))
        .mul(&RatPoly::from_descending_i64(&[16, 0, -5, -1]).pow_u(2));
    let rhs = RatPoly::from_descending_i64(&[16])
        .mul(&RatPoly::from_descending_i64(&[16, 0, 4, 0]).pow_u(2))
        .mul(&RatPoly::from_descending_i64(&[1, 1]))
        .mul(&RatPoly::from_descending_i64(&[150, 0, 0, 0, 0, 65]).pow_u(2));
    lhs.sub(&rhs)
}

/// Max of norm(1−u²) and norm(1−(u±2)²) over Gaussian u with |u| ≤ 2,
/// exact; these cap the divisors that the z-residue branch must kill.
fn small_divisor_maxima() -> (BigInt, BigInt) {
    let one = GaussianInt::one();
    let two = GaussianInt::from_int(2);
    let mut max_plain = BigInt::from(0);
    let mut max_shift = BigInt::from(0);
    for re in -2i64..=2 {
        for im in -2i64..=2 {
            let u = GaussianInt::new(re, im);
            if u.norm() > BigInt::from(4) {
                continue;
            }
            let plain = (&one - &(&u * &u)).norm();
            max_plain = max_plain.max(plain);
            for shifted in [&u + &two, &u - &two] {
                let v = (&one - &(&shifted * &shifted)).norm();
                max_shift = max_shift.max(v);
            }
        }
    }
    (max_plain, max_shift)
}

/// Build the full manifest. Runs in well under a second.
pub fn threshold_manifest() -> Vec<ThresholdEntry> {
    let mut entries = Vec::new();

    entries.push(entry(
        "class-elim-zero-residue",
        "x₁ ≡ 0 class-size elimination polynomial −64t⁶+96t⁵+32t⁴+72t³+9t²+14t+3 \
         has its largest root at 2.04414",
        &RatPoly::from_descending_i64(&[-64, 96, 32, 72, 9, 14, 3]),
        rat(204414, 100000),
        rat(1, 10000),
        Some(rat(1, 10000)),
    ));

    {
        let (p_lo, p_hi) = secondary_elimination_polys();
        let stated = rat(12019, 1000);
        let slack = rat(1, 1000);
        let cutoff = &stated + &slack;
        // the true √5-polynomial is ≤ the majorant for t ≥ 0 and the
        // majorant opens downward, so "no majorant roots above" certifies
        // negativity beyond the cutoff
        let pass = no_roots_above(&p_hi, &cutoff);
        let hull_hi = match isolate_largest_root(&p_hi, &rat(1, 1 << 30)) {
            LargestRoot::Root { hi, .. } => hi,
            LargestRoot::NoRealRoot => unreachable!("degree-7 with sign change"),
        };
        let hull_lo = match isolate_largest_root(&p_lo, &rat(1, 1 << 30)) {
            LargestRoot::Root { lo, .. } => lo,
            LargestRoot::NoRealRoot => unreachable!(),
        };
        entries.push(ThresholdEntry {
            claim: "class-elim-z-residue".into(),
            statement: "|u| ≥ √5 class-size elimination polynomial stays negative beyond \
                        its largest root near 12.019"
                .into(),
            stated_bound: "1.2019e1".into(),
            certified_bound: format!(
                "[{}, {}]",
                crate::interval::decimal_sci(&hull_lo, 8),
                crate::interval::decimal_sci_up(&hull_hi, 8)
            ),
            pass,
        });
    }

    {
        let (max_plain, max_shift) = small_divisor_maxima();
        // norms 25 and 289 correspond to |1−u²| ≤ 5 and |1−(u±2)²| ≤ 17
        let pass = max_plain <= BigInt::from(25) && max_shift <= BigInt::from(289);
        entries.push(ThresholdEntry {
            claim: "small-divisor-cap".into(),
            statement: "dividends 1−u² and 1−(u±2)² over |u| ≤ 2 stay within modulus 17, \
                        so k | dividend forces 0 for |k| > 17"
                .into(),
            stated_bound: "1.7e1".into(),
            certified_bound: format!(
                "max moduli √{max_plain}, √{max_shift}"
            ),
            pass,
        });
    }

    entries.push(entry(
        "approx-sys1-ell-bound",
        "32M < 5|T| sufficient polynomial 80t⁵−100t³−32t−52 clears by 1.33",
        &RatPoly::from_descending_i64(&[80, 0, -100, 0, -32, -52]),
        rat(133, 100),
        rat(0, 1),
        None,
    ));

    entries.push(entry(
        "approx-sys2-lambda-above-two",
        "λ > 2 polynomial (degree 13) is positive beyond 1.82",
        &RatPoly::from_descending_i64(&[
            16384, 0, -86016, -6912, 174592, -18816, -165888, -8112, 64512, -13536, 2048,
            5712, -5632, -1536,
        ]),
        rat(182, 100),
        rat(0, 1),
        None,
    ));

    entries.push(entry(
        "approx-sys2-validity",
        "|T| > (4M)³ sufficient polynomial 16t⁵−84t³−192t²−188t−64 clears by 3.21",
        &RatPoly::from_descending_i64(&[16, 0, -84, -192, -188, -64]),
        rat(321, 100),
        rat(0, 1),
        None,
    ));

    entries.push(entry(
        "qprime-twelve-bound",
        "|Q'| ≥ 12|b/a| sufficient polynomial (t−1)⁵ − 144(t+1); the quoted 4.846 \
         is the root truncated to three decimals, hence the 10⁻³ slack",
        &RatPoly::from_descending_i64(&[1, -5, 10, -10, -139, -145]),
        rat(4846, 1000),
        rat(1, 1000),
        None,
    ));

    entries.push(entry(
        "vartheta-approx-bound",
        "ϑ approximation bound polynomial 384t⁷−1536t⁶−752t⁵−480t⁴−236t³−24t²−5t−1 \
         is positive beyond 5",
        &RatPoly::from_descending_i64(&[384, -1536, -752, -480, -236, -24, -5, -1]),
        rat(5, 1),
        rat(0, 1),
        None,
    ));

    entries.push(entry(
        "qprime-eleven-floor",
        "12(|k|−1)/(|k|+1) ≥ 11 exactly from |k| ≥ 23 (root of t−23)",
        &RatPoly::from_descending_i64(&[1, -23]),
        rat(23, 1),
        rat(0, 1),
        None,
    ));

    entries.push(entry(
        "conj-q12-x2-coeff",
        "2(16t³+4t)(2t+2) ≤ t⁵ beyond 65: polynomial t⁴−64t³−64t²−16t−16",
        &RatPoly::from_descending_i64(&[1, -64, -64, -16, -16]),
        rat(65, 1),
        rat(0, 1),
        None,
    ));

    entries.push(entry(
        "conj-free-coeff",
        "(16t³+4t)²·4(t+1) ≤ 1025t⁷ beyond 1025: polynomial t⁵−1024t⁴−512t³−512t²−64t−64",
        &RatPoly::from_descending_i64(&[1, -1024, -512, -512, -64, -64]),
        rat(1025, 1),
        rat(0, 1),
        None,
    ));

    entries.push(entry(
        "conj-q34-x2-coeff",
        "squared conjugate-coefficient inequality (degree 18) is positive well before \
         the quoted 1.45·10⁶",
        &conjugate_q34_poly(),
        rat(1_450_000, 1),
        rat(0, 1),
        None,
    ));

    entries.push(entry(
        "conj-headline-scale",
        "1028t⁷ ≤ t⁸ beyond 1028, far below the quoted 10⁷ headline guard",
        &RatPoly::from_descending_i64(&[1, -1028]),
        rat(10_000_000, 1),
        rat(0, 1),
        None,
    ));

    {
        // index-relation guard |k| > 2.5: both cases must clear
        let p1 = RatPoly::from_descending_i64(&[4, -10, 1, -2]);
        let p2 = RatPoly::from_descending_i64(&[4, -3, -2]);
        let stated = rat(5, 2);
        let pass = no_roots_above(&p1, &stated) && no_roots_above(&p2, &stated);
        let hi = match isolate_largest_root(&p1, &rat(1, 1 << 30)) {
            LargestRoot::Root { hi, .. } => hi,
            _ => unreachable!(),
        };
        entries.push(ThresholdEntry {
            claim: "index-relation-guard".into(),
            statement: "both index-relation polynomials (4t³−10t²+t−2 and 4t²−3t−2) \
                        are positive beyond 2.5"
                .into(),
            stated_bound: "2.5".into(),
            certified_bound: crate::interval::decimal_sci_up(&hi, 8),
            pass,
        });
    }

    entries
}

/// Manifest rendered as reports.
pub fn threshold_reports() -> Vec<Report> {
    threshold_manifest()
        .into_iter()
        .map(|e| {
            Report::new(
                &format!("threshold/{}", e.claim),
                &e.statement,
                json!({ "stated_bound": e.stated_bound }),
                if e.pass { Verdict::Pass } else { Verdict::Fail },
                json!({ "certified_bound": e.certified_bound }),
            )
        })
        .collect()
}

/// Re-export for callers that want a one-off isolation with reporting.
pub fn isolate_to_report(claim: &str, poly: &RatPoly, tol: &BigRational) -> Report {
    match isolate_largest_root(poly, tol) {
        LargestRoot::NoRealRoot => Report::pass(
            claim,
            "polynomial has no real root",
            json!({}),
            json!({ "root": "none" }),
        ),
        LargestRoot::Root { lo, hi } => Report::pass(
            claim,
            "largest real root isolated",
            json!({}),
            json!({ "lo": rational_json(&lo, 12), "hi": rational_json(&hi, 12) }),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_all_pass() {
        let manifest = threshold_manifest();
        assert_eq!(manifest.len(), 14);
        for e in &manifest {
            assert!(e.pass, "entry {} failed: {}", e.claim, e.statement);
        }
    }

    #[test]
    fn primary_elimination_root_value() {
        let p = RatPoly::from_descending_i64(&[-64, 96, 32, 72, 9, 14, 3]);
        let r = isolate_largest_root(&p, &rat(1, 1 << 40));
        let (lo, hi) = r.enclosure().unwrap();
        // 2.04414 ± 10⁻⁴
        assert!(lo > &rat(204404, 100000) && hi < &rat(204424, 100000));
    }

    #[test]
    fn secondary_elimination_root_value() {
        let (p_lo, p_hi) = secondary_elimination_polys();
        for p in [&p_lo, &p_hi] {
            let r = isolate_largest_root(p, &rat(1, 1 << 40));
            let (lo, hi) = r.enclosure().unwrap();
            // just below the quoted 12.019
            assert!(lo > &rat(12015, 1000), "lo = {lo}");
            assert!(hi < &rat(12020, 1000), "hi = {hi}");
        }
    }

    #[test]
    fn divisor_maxima_are_5_and_15() {
        let (plain, shift) = small_divisor_maxima();
        assert_eq!(plain, BigInt::from(25));
        assert_eq!(shift, BigInt::from(225));
    }

    #[test]
    fn q34_poly_root_magnitude() {
        // crossing sits near 3.6e5, an order of magnitude inside 1.45e6
        let p = conjugate_q34_poly();
        let r = isolate_largest_root(&p, &BigRational::from_integer(1.into()));
        let (lo, hi) = r.enclosure().unwrap();
        assert!(lo > &BigRational::from_integer(300_000.into()));
        assert!(hi < &BigRational::from_integer(400_000.into()));
    }
}
