//! Minimal polynomials and height data for the three algebraic numbers in
//! the logarithmic-form application, plus the conjugate bounds that feed
//! the final contradiction.
//!
//! α₁ and α₂ are the dominant-root magnitudes of the two recurrences;
//! their degree-8 integer minimal polynomials are reciprocal with four
//! unit-circle roots, which pins h(αᵢ) to ¼·log αᵢ. α₃'s full degree-32
//! polynomial is never constructed; only its conjugate magnitudes, read
//! off from the explicit quartic factors, are evaluated.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use super::roots::RatPoly;
use super::{dominant_root_mag, with_escalation, AnalyticError, FamilyContext};
use crate::gint::GaussianInt;
use crate::interval::{sqrt_gaussian, ComplexInterval, RealInterval};
use crate::pell::family_w_seeds;
use crate::report::serialize_interval;

#[derive(Debug, Clone, Serialize)]
pub struct HeightReport {
    #[serde(serialize_with = "serialize_interval")]
    pub alpha1: RealInterval,
    #[serde(serialize_with = "serialize_interval")]
    pub alpha2: RealInterval,
    #[serde(skip)]
    pub p1: RatPoly,
    #[serde(skip)]
    pub p2: RatPoly,
    /// p₁(α₁) and p₂(α₂): enclosures that must pin zero.
    pub minpolys_vanish: bool,
    /// Worst deviation of the four unit-circle root magnitudes from 1,
    /// across both polynomials.
    #[serde(serialize_with = "serialize_interval")]
    pub unit_root_defect: RealInterval,
    /// Certified |root·partner| = 1 pairing for the dominant roots.
    pub reciprocal_pairing_ok: bool,
    #[serde(serialize_with = "serialize_interval")]
    pub h1: RealInterval,
    #[serde(serialize_with = "serialize_interval")]
    pub h2: RealInterval,
    #[serde(serialize_with = "serialize_interval")]
    pub h1_bound: RealInterval,
    #[serde(serialize_with = "serialize_interval")]
    pub h2_bound: RealInterval,
    #[serde(serialize_with = "serialize_interval")]
    pub h3_bound: RealInterval,
    pub h1_ok: bool,
    pub h2_ok: bool,
    /// The leading constant of the h(α₃) bound agrees with ½·log 257.
    pub h3_constant_matches: bool,
    /// h'(αᵢ) ≤ 7 log|k| at this instance (certified for |k| ≥ 18).
    pub hprime_seven_log_ok: Option<bool>,
    /// Leading-coefficient instance check for the supplied class; holds
    /// for the small classes (1, ±1), not for the larger seeds.
    pub lead_coeff_ok: bool,
}

/// Integer minimal polynomial of α₁ = |k + √(k²−1)| from (μ, ν).
pub fn minpoly_alpha1(k: &GaussianInt) -> RatPoly {
    let n = k.norm();
    let mu = k.re();
    let nu = k.im();
    let mid = BigInt::from(8) * mu * mu - BigInt::from(8) * nu * nu - 2;
    RatPoly::from_descending_big(vec![
        BigInt::one(),
        BigInt::ZERO,
        -BigInt::from(4) * &n,
        BigInt::ZERO,
        mid,
        BigInt::ZERO,
        -BigInt::from(4) * &n,
        BigInt::ZERO,
        BigInt::one(),
    ])
}

/// Integer minimal polynomial of α₂ = |s + √(ac)| from (μ, ν). Both the
/// x⁶ and x² coefficients carry the same 4μ+1 tail; the polynomial is
/// reciprocal because its roots pair into inverses.
pub fn minpoly_alpha2(k: &GaussianInt) -> RatPoly {
    let n = k.norm();
    let mu = k.re().clone();
    let nu = k.im().clone();
    let mu2 = &mu * &mu;
    let nu2 = &nu * &nu;
    let a_coeff: BigInt =
        (BigInt::from(16) * &n - BigInt::from(16) * &mu - 4) * &n + BigInt::from(16) * &nu2
            + BigInt::from(4) * &mu
            + 1;
    let mid: BigInt = (BigInt::from(128) * &mu2 * &mu2 - BigInt::from(128) * &mu2 * &mu
        - BigInt::from(32) * &mu2
        + BigInt::from(32) * &mu
        + 6)
        + (BigInt::from(-768) * &mu2 + BigInt::from(384) * &mu + 32) * &nu2
        + BigInt::from(128) * &nu2 * &nu2;
    RatPoly::from_descending_big(vec![
        BigInt::one(),
        BigInt::ZERO,
        BigInt::from(-4) * &a_coeff,
        BigInt::ZERO,
        mid,
        BigInt::ZERO,
        BigInt::from(-4) * &a_coeff,
        BigInt::ZERO,
        BigInt::one(),
    ])
}

fn eval_poly_interval(p: &RatPoly, x: &RealInterval, prec: u32) -> RealInterval {
    let mut acc = RealInterval::from_int(0);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&RealInterval::singleton(c.clone())).round_out(prec);
    }
    acc
}

/// Unit-circle defect for a reciprocal octic: σ = |u|² − |product| lies in
/// [−1, 1] and the four middle roots have |x|² = σ² + (1 − σ²); the
/// returned interval bounds | |x| − 1 |.
fn unit_defect(sigma: &RealInterval, prec: u32) -> RealInterval {
    let one = RealInterval::from_int(1);
    let zero = RealInterval::from_int(0);
    let s2 = sigma.pow_i(2);
    let rest = one.sub(&s2).max(&zero);
    let m2 = s2.add(&rest).sqrt(prec);
    m2.sub(&one).abs()
}

/// Construct p₁, p₂, certify they vanish at α₁, α₂, certify the
/// unit-circle roots, and evaluate the three height bounds. The class
/// index picks the seed whose leading-coefficient instance bound is
/// checked (the bound itself belongs to the small classes).
pub fn minpoly_and_heights(
    k: &GaussianInt,
    class_j: usize,
    precision_bits: u32,
) -> Result<HeightReport, AnalyticError> {
    if !(1..=6).contains(&class_j) {
        return Err(AnalyticError::Guard("class index must be 1..6"));
    }
    let ctx = FamilyContext::new(k)?;
    let one = GaussianInt::one();
    let k2 = k * k;
    let k2m1 = &k2 - &one;
    let ac = &ctx.a * &ctx.c;
    let p1 = minpoly_alpha1(k);
    let p2 = minpoly_alpha2(k);
    let seeds = family_w_seeds(k)?;
    let (x1, z1) = seeds[class_j - 1].clone();

    with_escalation(precision_bits, |prec| {
        let alpha1 = dominant_root_mag(k, &k2m1, prec).ok()?;
        let alpha2 = dominant_root_mag(&ctx.s, &ac, prec).ok()?;

        let tiny = |p: &RatPoly, x: &RealInterval| {
            // admissible residue: 2^-100 relative to the coefficient scale
            let scale = p
                .coeffs()
                .iter()
                .map(|c| c.abs())
                .max()
                .unwrap_or_else(BigRational::one);
            x.pow_i(8)
                .scale(&scale)
                .scale(&BigRational::new(BigInt::one(), BigInt::one() << 100))
        };
        let v1 = eval_poly_interval(&p1, &alpha1, prec);
        let v2 = eval_poly_interval(&p2, &alpha2, prec);
        let vanish = v1.contains_zero()
            && v2.contains_zero()
            && v1.abs().le(&tiny(&p1, &alpha1).abs())
            && v2.abs().le(&tiny(&p2, &alpha2).abs());
        if !vanish {
            return None;
        }

        // unit-circle roots: σ₁ = |k|² − |k²−1|, σ₂ = |s|² − |ac|
        let sigma1 = RealInterval::from_bigint(k.norm()).sub(&k2m1.abs(prec));
        let sigma2 = RealInterval::from_bigint(ctx.s.norm()).sub(&ac.abs(prec));
        let defect = unit_defect(&sigma1, prec).max(&unit_defect(&sigma2, prec));
        let defect_cap = BigRational::new(BigInt::one(), BigInt::one() << 80);
        if defect.hi() > &defect_cap {
            return None;
        }

        // reciprocal pairing: |k−√(k²−1)|·α₁ and |s−√(ac)|·α₂ enclose 1
        let pair = |u: &GaussianInt, g: &GaussianInt, dom: &RealInterval| {
            let w = sqrt_gaussian(g, prec);
            let minus = ComplexInterval::from_gaussian(u).sub(&w).abs(prec);
            let plus = ComplexInterval::from_gaussian(u).add(&w).abs(prec);
            let partner = if minus.lt(&plus) { minus } else { plus };
            partner.mul(dom)
        };
        let rec1 = pair(k, &k2m1, &alpha1);
        let rec2 = pair(&ctx.s, &ac, &alpha2);
        let one_rat = BigRational::one();
        let reciprocal_pairing_ok =
            rec1.contains_rational(&one_rat) && rec2.contains_rational(&one_rat);

        let quarter = BigRational::new(1.into(), 4.into());
        let h1 = alpha1.ln(prec).scale(&quarter).round_out(prec);
        let h2 = alpha2.ln(prec).scale(&quarter).round_out(prec);
        let t = k.abs(prec);
        let two_t_plus_1 = t.scale(&BigRational::from_integer(2.into())).add(&RealInterval::from_int(1));
        let h1_bound = two_t_plus_1.ln(prec).scale(&quarter).round_out(prec);
        // |9k²| = 9·norm(k) exactly
        let nine_k2 = RealInterval::from_bigint(k.norm() * BigInt::from(9));
        let h2_bound = nine_k2.ln(prec).scale(&quarter).round_out(prec);
        // h(α₃) ≤ ½ log 257 + (193/32) log|k|
        let half_log257 = RealInterval::from_int(257)
            .ln(prec)
            .scale(&BigRational::new(1.into(), 2.into()));
        let h3_bound = half_log257
            .add(&t.ln(prec).scale(&BigRational::new(193.into(), 32.into())))
            .round_out(prec);
        let h3_constant_matches = {
            let lo = BigRational::new(2774537.into(), 1000000.into());
            let hi = BigRational::new(2774539.into(), 1000000.into());
            half_log257.lo() > &lo && half_log257.hi() < &hi
        };

        let h1_ok = alpha1.lt(&two_t_plus_1);
        let h2_ok = alpha2.lt(&nine_k2);
        if !(h1_ok || two_t_plus_1.lt(&alpha1)) || !(h2_ok || nine_k2.lt(&alpha2)) {
            return None;
        }

        // h'(αᵢ) ≤ 7 log|k|: with degree 2048, h' collapses to the height
        // bounds themselves; the α₃ case needs |k| ≥ 18
        let hprime = if k.norm() >= BigInt::from(324) {
            let seven_log = t.ln(prec).scale(&BigRational::from_integer(7.into()));
            Some(h1_bound.lt(&seven_log) && h2_bound.lt(&seven_log) && h3_bound.lt(&seven_log))
        } else {
            None
        };

        // leading-coefficient instance: (√(|k|+1)(|x₁|√(16|k|³+4|k|) +
        // |z₁|√(|k|+1)))³² < 257¹⁶|k|⁶⁵
        let t_plus_1 = t.add(&RealInterval::from_int(1));
        let c_mag_up = t
            .pow_i(3)
            .scale(&BigRational::from_integer(16.into()))
            .add(&t.scale(&BigRational::from_integer(4.into())));
        let inner = t_plus_1.sqrt(prec).mul(
            &x1.abs(prec)
                .mul(&c_mag_up.sqrt(prec))
                .add(&z1.abs(prec).mul(&t_plus_1.sqrt(prec))),
        );
        let lhs = inner.pow_i(32).round_out(prec);
        let rhs = t
            .pow_i(65)
            .scale(&BigRational::from_integer(BigInt::from(257).pow(16)))
            .round_out(prec);
        let lead_coeff_ok = lhs.lt(&rhs);

        Some(HeightReport {
            alpha1: alpha1.clone(),
            alpha2: alpha2.clone(),
            p1: p1.clone(),
            p2: p2.clone(),
            minpolys_vanish: vanish,
            unit_root_defect: defect,
            reciprocal_pairing_ok,
            h1: h1.clone(),
            h2: h2.clone(),
            h1_bound: h1_bound.clone(),
            h2_bound: h2_bound.clone(),
            h3_bound: h3_bound.clone(),
            h1_ok,
            h2_ok,
            h3_constant_matches,
            hprime_seven_log_ok: hprime,
            lead_coeff_ok,
        })
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjugateReport {
    pub class_j: usize,
    /// The four closed-form ratio magnitudes (each a ± pair of conjugates).
    pub ratio_mags: Vec<f64>,
    /// Distinct root magnitudes of the six quartic factors.
    pub quartic_mags: Vec<[f64; 2]>,
    #[serde(serialize_with = "serialize_interval")]
    pub max_magnitude: RealInterval,
    /// |k| ≥ 10⁷, where the headline |α₃'| ≤ |k|⁴ is claimed.
    pub headline_applicable: bool,
    pub headline_ok: Option<bool>,
    /// x²-coefficients of the first two quartics ≤ |k|⁵ (claimed |k| ≥ 65).
    pub q12_coeff_ok: Option<bool>,
    /// x²-coefficients of the third/fourth quartics < |k|⁴ (|k| ≥ 1.45·10⁶).
    pub q34_coeff_ok: Option<bool>,
    /// Free coefficients ≤ 1025|k|⁷ (claimed |k| ≥ 1025).
    pub free_coeff_ok: Option<bool>,
    /// Crude cap β ≤ 2|c|(|a|+|b|) on the first two quartics, any k.
    pub crude_coeff_ok: bool,
}

/// Root magnitudes of x⁴ − 2βx² + γ (two distinct values). Falls back to a
/// certified hull when the inner discriminant sign is undecided.
fn quartic_mags(beta: &RealInterval, gamma: &RealInterval, prec: u32) -> [RealInterval; 2] {
    let disc = beta.pow_i(2).sub(gamma);
    let real_case = |prec: u32| {
        let root = disc.max(&RealInterval::from_int(0)).sqrt(prec);
        [
            beta.add(&root).abs().sqrt(prec),
            beta.sub(&root).abs().sqrt(prec),
        ]
    };
    let complex_case = |prec: u32| {
        let m = gamma.max(&RealInterval::from_int(0)).sqrt(prec).sqrt(prec);
        [m.clone(), m]
    };
    if disc.is_positive() {
        real_case(prec)
    } else if disc.is_negative() {
        complex_case(prec)
    } else {
        let a = real_case(prec);
        let b = complex_case(prec);
        [a[0].hull(&b[0]), a[1].hull(&b[1])]
    }
}

/// Evaluate all 32 conjugate magnitudes of α₃ for one class and certify
/// the bounds the contradiction argument uses.
pub fn alpha3_conjugate_bound(
    k: &GaussianInt,
    class_j: usize,
    precision_bits: u32,
) -> Result<ConjugateReport, AnalyticError> {
    if !(1..=6).contains(&class_j) {
        return Err(AnalyticError::Guard("class index must be 1..6"));
    }
    let ctx = FamilyContext::new(k)?;
    let seeds = family_w_seeds(k)?;
    let (x1, z1) = seeds[class_j - 1].clone();
    let norm_k = k.norm();

    with_escalation(precision_bits, |prec| {
        let wa = sqrt_gaussian(&ctx.a, prec);
        let wb = sqrt_gaussian(&ctx.b, prec);
        let wc = sqrt_gaussian(&ctx.c, prec);
        let x1c = ComplexInterval::from_gaussian(&x1);
        let z1c = ComplexInterval::from_gaussian(&z1);

        // |√c(√b ± √a)| / |√b(x₁√c ± z₁√a)|, four sign combinations
        let num_plus = wc.mul(&wb.add(&wa)).abs(prec);
        let num_minus = wc.mul(&wb.sub(&wa)).abs(prec);
        let den_plus = wb.mul(&x1c.mul(&wc).add(&z1c.mul(&wa))).abs(prec);
        let den_minus = wb.mul(&x1c.mul(&wc).sub(&z1c.mul(&wa))).abs(prec);
        let ratios = [
            num_plus.div(&den_plus).round_out(prec),
            num_plus.div(&den_minus).round_out(prec),
            num_minus.div(&den_plus).round_out(prec),
            num_minus.div(&den_minus).round_out(prec),
        ];

        // quartic coefficients from the printed closed forms
        let c_mag = ctx.c.abs(prec);
        let b_mag = ctx.b.abs(prec);
        let a_mag = ctx.a.abs(prec);
        let b_minus_a = (&ctx.b - &ctx.a).abs(prec); // |b−a| = 2
        let c_minus_a_sq = RealInterval::from_bigint((&ctx.c - &ctx.a).norm());
        let two = BigRational::from_integer(2.into());

        let den_p2 = den_plus.pow_i(2);
        let den_m2 = den_minus.pow_i(2);
        // β is half the (negated) x² coefficient: quartics are x⁴−2βx²+γ
        let beta1 = c_mag
            .mul(&b_mag.sub(&a_mag))
            .div(&b_mag.mul(&den_p2))
            .round_out(prec);
        let gamma1 = c_mag
            .mul(&b_minus_a)
            .div(&b_mag.mul(&den_p2))
            .pow_i(2)
            .round_out(prec);
        let beta2 = c_mag
            .mul(&b_mag.sub(&a_mag))
            .div(&b_mag.mul(&den_m2))
            .round_out(prec);
        let gamma2 = c_mag
            .mul(&b_minus_a)
            .div(&b_mag.mul(&den_m2))
            .pow_i(2)
            .round_out(prec);

        let sum_sq = wb.add(&wa).abs(prec).pow_i(2);
        let diff_sq = wb.sub(&wa).abs(prec).pow_i(2);
        // |cx₁²| − |az₁²| with exact norms
        let cx2 = c_mag.scale(&BigRational::from_integer(x1.norm()));
        let az2 = a_mag.scale(&BigRational::from_integer(z1.norm()));
        let mixed = cx2.sub(&az2);
        let c_minus_a_mag = (&ctx.c - &ctx.a).abs(prec);
        let beta3 = c_mag
            .mul(&sum_sq)
            .div(&b_mag.mul(&c_minus_a_sq))
            .mul(&mixed)
            .round_out(prec);
        let gamma34 = c_mag
            .mul(&diff_sq)
            .div(&b_mag.mul(&c_minus_a_mag))
            .pow_i(2)
            .round_out(prec);
        let beta4 = c_mag
            .mul(&diff_sq)
            .div(&b_mag.mul(&c_minus_a_sq))
            .mul(&mixed)
            .round_out(prec);

        let wbc = sqrt_gaussian(&(&ctx.b * &ctx.c), prec);
        let wac = sqrt_gaussian(&(&ctx.a * &ctx.c), prec);
        let wab = sqrt_gaussian(&(&ctx.a * &ctx.b), prec);
        let za = ComplexInterval::from_gaussian(&(&z1 * &ctx.a));
        let mix5 = x1c
            .mul(&wbc)
            .add(&za)
            .abs(prec)
            .pow_i(2)
            .sub(&x1c.mul(&wac).add(&z1c.mul(&wab)).abs(prec).pow_i(2));
        let mix6 = x1c
            .mul(&wbc)
            .sub(&za)
            .abs(prec)
            .pow_i(2)
            .sub(&x1c.mul(&wac).sub(&z1c.mul(&wab)).abs(prec).pow_i(2));
        let shared56 = c_mag.div(&b_mag.mul(&c_minus_a_sq));
        let beta5 = shared56.mul(&mix5).round_out(prec);
        let beta6 = shared56.mul(&mix6).round_out(prec);
        let gamma56 = c_mag
            .mul(&b_minus_a)
            .div(&b_mag.mul(&c_minus_a_mag))
            .pow_i(2)
            .round_out(prec);

        let quartics = [
            (beta1.clone(), gamma1),
            (beta2.clone(), gamma2),
            (beta3.clone(), gamma34.clone()),
            (beta4.clone(), gamma34.clone()),
            (beta5, gamma56.clone()),
            (beta6, gamma56.clone()),
        ];
        let mut all_mags: Vec<RealInterval> = ratios.to_vec();
        let mut quartic_out = Vec::new();
        for (beta, gamma) in &quartics {
            let mags = quartic_mags(beta, gamma, prec);
            quartic_out.push([mags[0].to_f64(), mags[1].to_f64()]);
            all_mags.extend(mags);
        }
        let mut max_mag = all_mags[0].clone();
        for m in &all_mags[1..] {
            max_mag = max_mag.max(m);
        }

        let t = k.abs(prec);
        let t4 = t.pow_i(4);
        let headline_applicable = norm_k >= BigInt::from(100_000_000_000_000u64);
        let headline_ok = if headline_applicable {
            let mut ok = true;
            for m in &all_mags {
                if m.lt(&t4) {
                    continue;
                }
                if t4.lt(m) {
                    ok = false;
                } else {
                    return None;
                }
            }
            Some(ok)
        } else {
            None
        };

        // component certificates at their stated scales
        let crude_cap = c_mag
            .mul(&a_mag.add(&b_mag))
            .scale(&two)
            .round_out(prec);
        let crude_coeff_ok = beta1.lt(&crude_cap) && beta2.lt(&crude_cap);
        let q12_coeff_ok = if norm_k >= BigInt::from(4225) {
            let t5 = t.pow_i(5);
            // the printed chain: 2|16k³−4k|(2|k|+2) ≤ |k|⁵, plus the actual
            // coefficients under the same cap
            let chain = c_mag
                .scale(&two)
                .mul(&t.scale(&two).add(&RealInterval::from_int(2)));
            Some(chain.lt(&t5) && beta1.lt(&t5) && beta2.lt(&t5))
        } else {
            None
        };
        let q34_coeff_ok = if norm_k >= BigInt::from(2_102_500_000_000u64) {
            Some(beta3.lt(&t4) && beta4.lt(&t4))
        } else {
            None
        };
        let free_coeff_ok = if norm_k >= BigInt::from(1_050_625u64) {
            let cap = t
                .pow_i(7)
                .scale(&BigRational::from_integer(1025.into()));
            Some(quartics.iter().all(|(_, g)| g.lt(&cap)))
        } else {
            None
        };

        Some(ConjugateReport {
            class_j,
            ratio_mags: ratios.iter().map(RealInterval::to_f64).collect(),
            quartic_mags: quartic_out,
            max_magnitude: max_mag,
            headline_applicable,
            headline_ok,
            q12_coeff_ok,
            q34_coeff_ok,
            free_coeff_ok,
            crude_coeff_ok,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    fn gi(v: i64) -> GaussianInt {
        GaussianInt::from_int(v)
    }

    #[test]
    fn p1_example_coeffs() {
        // k = 3+4i: x⁸ − 100x⁶ − 58x⁴ − 100x² + 1
        let p = minpoly_alpha1(&g(3, 4));
        let coeffs: Vec<i64> = p
            .coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect();
        assert_eq!(coeffs, vec![1, 0, -100, 0, -58, 0, -100, 0, 1]);
    }

    #[test]
    fn heights_real_k() {
        let rep = minpoly_and_heights(&gi(20), 1, 128).unwrap();
        assert!(rep.minpolys_vanish);
        assert!(rep.reciprocal_pairing_ok);
        assert!(rep.h1_ok && rep.h2_ok);
        assert!(rep.h3_constant_matches);
        assert_eq!(rep.hprime_seven_log_ok, Some(true));
        assert!(rep.lead_coeff_ok);
        // α₁ = 20 + √399 ≈ 39.975, bounded by 2|k|+1 = 41
        let a1 = rep.alpha1.to_f64();
        assert!((a1 - 39.97499).abs() < 1e-3, "α₁ = {a1}");
    }

    #[test]
    fn heights_complex_k() {
        for k in [g(3, 4), g(18, 5), g(-7, 20)] {
            let rep = minpoly_and_heights(&k, 1, 128).unwrap();
            assert!(rep.minpolys_vanish, "p(α) ≠ 0 for k = {k}");
            assert!(rep.reciprocal_pairing_ok);
            assert!(rep.h1_ok && rep.h2_ok, "height bounds at k = {k}");
        }
    }

    #[test]
    fn degenerate_k_rejected() {
        assert!(minpoly_and_heights(&gi(0), 1, 64).is_err());
    }

    #[test]
    fn unit_defect_tiny() {
        let rep = minpoly_and_heights(&g(5, 18), 1, 160).unwrap();
        let cap = BigRational::new(BigInt::one(), BigInt::one() << 80);
        assert!(rep.unit_root_defect.hi() <= &cap);
    }

    #[test]
    fn conjugates_at_large_real_k() {
        let k = gi(10_000_000);
        let rep = alpha3_conjugate_bound(&k, 1, 192).unwrap();
        assert!(rep.headline_applicable);
        assert_eq!(rep.headline_ok, Some(true));
        assert_eq!(rep.q12_coeff_ok, Some(true));
        assert_eq!(rep.q34_coeff_ok, Some(true));
        assert_eq!(rep.free_coeff_ok, Some(true));
        assert!(rep.crude_coeff_ok);
    }

    #[test]
    fn conjugates_moderate_k_components() {
        // |k| = 100 < 10⁷: headline not claimed, components reported
        let rep = alpha3_conjugate_bound(&gi(100), 1, 160).unwrap();
        assert!(!rep.headline_applicable);
        assert!(rep.headline_ok.is_none());
        assert_eq!(rep.q12_coeff_ok, Some(true));
        assert!(rep.crude_coeff_ok);
        // the 65-instance from the coefficient chain
        let rep65 = alpha3_conjugate_bound(&gi(65), 3, 160).unwrap();
        assert_eq!(rep65.q12_coeff_ok, Some(true));
    }
}
