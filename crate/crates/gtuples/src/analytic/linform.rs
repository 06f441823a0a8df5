//! Linear forms in logarithms for the family system.
//!
//! P and Q are the dominant halves of the solved recurrences on the two
//! Pell equations sharing c; their log-ratio Λ is the linear form whose
//! smallness at a genuine coincidence drives the index bounds. The primed
//! variants P', Q' are the x-side analogues used by the final contradiction
//! argument. At arbitrary (m, n) there is no coincidence and Λ itself is
//! not small; what is certified unconditionally is the majorant chain
//!   log(24/19)·|P|⁻¹ < K·√|ac|·|s+√ac|^(−m),   K = (8/3)·log(24/19),
//! which bounds |Λ| whenever the indices do come from a solution, plus the
//! floor inequalities |P| > 12|c/a| and |Q| > 12|c/b|.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::{dominant_root_mag, with_escalation, AnalyticError, FamilyContext};
use crate::gint::GaussianInt;
use crate::interval::{sqrt_gaussian, ComplexInterval, RealInterval};
use crate::pell::family_w_seeds;
use crate::report::serialize_interval;

/// Magnitudes and certified comparisons for one (k, class, m, n) instance.
#[derive(Debug, Clone, Serialize)]
pub struct LinearFormEval {
    #[serde(serialize_with = "serialize_interval")]
    pub p_mag: RealInterval,
    #[serde(serialize_with = "serialize_interval")]
    pub q_mag: RealInterval,
    #[serde(serialize_with = "serialize_interval")]
    pub p_prime_mag: RealInterval,
    #[serde(serialize_with = "serialize_interval")]
    pub q_prime_mag: RealInterval,
    /// Λ = log(|Q|/|P|).
    #[serde(serialize_with = "serialize_interval")]
    pub lambda_log: RealInterval,
    /// Γ = log(|Q'|/|P'|).
    #[serde(serialize_with = "serialize_interval")]
    pub gamma_log: RealInterval,
    /// K = (8/3)·log(24/19).
    #[serde(serialize_with = "serialize_interval")]
    pub k_const: RealInterval,
    /// K·√|ac|·|s+√ac|^(−m).
    #[serde(serialize_with = "serialize_interval")]
    pub bound: RealInterval,
    /// Certified: log(24/19)/|P| < bound (the conditional majorant chain).
    pub chain_certified: bool,
    /// Whether |Λ| < bound holds outright at this instance (it should not,
    /// away from genuine coincidences; reported for transparency).
    pub direct_inequality_holds: bool,
}

/// The constant K = (8/3)·ln(24/19) ≈ 0.622973.
pub fn k_constant(prec: u32) -> RealInterval {
    RealInterval::from_ratio(24, 19)
        .ln(prec)
        .scale(&BigRational::new(8.into(), 3.into()))
        .round_out(prec)
}

/// |num_a·√a + num_c·√c| for exact Gaussian data.
fn mixed_mag(
    num_a: &GaussianInt,
    a: &GaussianInt,
    num_c: &GaussianInt,
    c: &GaussianInt,
    prec: u32,
) -> RealInterval {
    let wa = sqrt_gaussian(a, prec);
    let wc = sqrt_gaussian(c, prec);
    ComplexInterval::from_gaussian(num_a)
        .mul(&wa)
        .add(&ComplexInterval::from_gaussian(num_c).mul(&wc))
        .abs(prec)
}

/// The mirror seeds (y₁, z₁) of the {b, c} equation, i.e. the q-side
/// classes; the small one (1, 1) carries the known extensions.
pub fn q_side_seed(k: &GaussianInt) -> (GaussianInt, GaussianInt) {
    let _ = k;
    (GaussianInt::one(), GaussianInt::one())
}

/// Evaluate |P|, |Q|, |P'|, |Q'|, Λ, Γ, and the lemma bound at an instance.
///
/// `class_j` selects the P-side seed (1..6 in sequence order); the Q-side
/// uses its small class (1, 1), and Q' the trivial pair of the first
/// equation. Requires m, n ≥ 0 and a valid family k.
pub fn eval_linear_form(
    k: &GaussianInt,
    class_j: usize,
    m: u32,
    n: u32,
    precision_bits: u32,
) -> Result<LinearFormEval, AnalyticError> {
    if !(1..=6).contains(&class_j) {
        return Err(AnalyticError::Guard("class index must be 1..6"));
    }
    let ctx = FamilyContext::new(k)?;
    with_escalation(precision_bits, |prec| {
        eval_at(&ctx, class_j, m, n, prec).ok()
    })
}

fn eval_at(
    ctx: &FamilyContext,
    class_j: usize,
    m: u32,
    n: u32,
    prec: u32,
) -> Result<LinearFormEval, AnalyticError> {
    let seeds = family_w_seeds(&ctx.k)?;
    let (x1, z1) = &seeds[class_j - 1];
    let ac = &ctx.a * &ctx.c;
    let bc = &ctx.b * &ctx.c;
    let ab = &ctx.a * &ctx.b;

    let s_root = dominant_root_mag(&ctx.s, &ac, prec)?;
    let t_root = dominant_root_mag(&ctx.t, &bc, prec)?;
    let r_root = dominant_root_mag(&ctx.r, &ab, prec)?;

    let sqrt_a_mag = ctx.a.abs(prec).sqrt(prec);
    let sqrt_b_mag = ctx.b.abs(prec).sqrt(prec);
    let sqrt_c_mag = ctx.c.abs(prec).sqrt(prec);

    // |P| = |z₁√a + x₁√c| / √|a| · |s+√ac|^m
    let p_prefactor = mixed_mag(z1, &ctx.a, x1, &ctx.c, prec).div(&sqrt_a_mag);
    let p_mag = p_prefactor.mul(&s_root.pow_i(m)).round_out(prec);

    // |Q| from the q-side class (1, 1): |z√b + y√c| / √|b| · |t+√bc|^n
    let (qy, qz) = q_side_seed(&ctx.k);
    let q_prefactor = mixed_mag(&qz, &ctx.b, &qy, &ctx.c, prec).div(&sqrt_b_mag);
    let q_mag = q_prefactor.mul(&t_root.pow_i(n)).round_out(prec);

    // |P'| = |x₁√c + z₁√a| / √|c| · |s+√ac|^m = |P|·√(|a|/|c|)
    let p_prime_mag = p_mag
        .mul(&sqrt_a_mag)
        .div(&sqrt_c_mag)
        .round_out(prec);

    // |Q'| = |√a + √b| / √|b| · |r+√ab|^n
    let one = GaussianInt::one();
    let q_prime_prefactor = mixed_mag(&one, &ctx.a, &one, &ctx.b, prec).div(&sqrt_b_mag);
    let q_prime_mag = q_prime_prefactor.mul(&r_root.pow_i(n)).round_out(prec);

    let lambda_log = q_mag.ln(prec).sub(&p_mag.ln(prec)).round_out(prec);
    let gamma_log = q_prime_mag.ln(prec).sub(&p_prime_mag.ln(prec)).round_out(prec);

    let k_const = k_constant(prec);
    let sqrt_ac_mag = ac.abs(prec).sqrt(prec);
    let bound = k_const
        .mul(&sqrt_ac_mag)
        .mul(&s_root.pow_i(m).recip())
        .round_out(prec);

    // chain: log(24/19)·|P|⁻¹ < bound
    let log_ratio = RealInterval::from_ratio(24, 19).ln(prec);
    let chain_lhs = log_ratio.div(&p_mag);
    let chain_certified = chain_lhs.lt(&bound);
    let bound_decided = chain_certified || bound.lt(&chain_lhs);

    let lambda_abs = lambda_log.abs();
    let direct = lambda_abs.lt(&bound);
    let direct_decided = direct || bound.lt(&lambda_abs);

    if !(bound_decided && direct_decided) {
        return Err(AnalyticError::PrecisionExhausted(prec));
    }
    Ok(LinearFormEval {
        p_mag,
        q_mag,
        p_prime_mag,
        q_prime_mag,
        lambda_log,
        gamma_log,
        k_const,
        bound,
        chain_certified,
        direct_inequality_holds: direct,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PqReport {
    /// |P| > 12|c/a| certified.
    pub p_floor_ok: bool,
    /// |Q| > 12|c/b| certified.
    pub q_floor_ok: bool,
    /// |s+√ac| ≥ √|ac| certified (the dominant root).
    pub unit_above_sqrt: bool,
    /// |Q'| > 12|b/a| certified.
    pub q_prime_floor_ok: bool,
}

/// Certify the floor inequalities behind the linear-form lemma at one
/// instance. Preconditions: |c| ≥ 4|b| (exact norm check) and m, n ≥ 3.
pub fn pq_bound_check(
    k: &GaussianInt,
    class_j: usize,
    m: u32,
    n: u32,
    precision_bits: u32,
) -> Result<PqReport, AnalyticError> {
    if m < 3 || n < 3 {
        return Err(AnalyticError::Guard("requires m, n ≥ 3"));
    }
    let ctx = FamilyContext::new(k)?;
    if ctx.c.norm() < ctx.b.norm() * BigInt::from(16) {
        return Err(AnalyticError::Guard("requires |c| ≥ 4|b|"));
    }
    with_escalation(precision_bits, |prec| {
        let ev = eval_at(&ctx, class_j, m, n, prec).ok()?;
        let twelve = |num: &GaussianInt, den: &GaussianInt| {
            num.abs(prec)
                .div(&den.abs(prec))
                .scale(&BigRational::from_integer(12.into()))
        };
        let p_floor = twelve(&ctx.c, &ctx.a);
        let q_floor = twelve(&ctx.c, &ctx.b);
        let qp_floor = twelve(&ctx.b, &ctx.a);
        let ac = &ctx.a * &ctx.c;
        let s_root = dominant_root_mag(&ctx.s, &ac, prec).ok()?;
        let sqrt_ac = ac.abs(prec).sqrt(prec);
        let decide = |lhs: &RealInterval, rhs: &RealInterval| -> Option<bool> {
            if rhs.lt(lhs) {
                Some(true)
            } else if lhs.lt(rhs) {
                Some(false)
            } else {
                None
            }
        };
        Some(PqReport {
            p_floor_ok: decide(&ev.p_mag, &p_floor)?,
            q_floor_ok: decide(&ev.q_mag, &q_floor)?,
            unit_above_sqrt: decide(&s_root, &sqrt_ac)?,
            q_prime_floor_ok: decide(&ev.q_prime_mag, &qp_floor)?,
        })
    })
}

/// Whether the family precondition |c| ≥ 4|b| holds at k (exact).
pub fn family_c_4b_precondition(k: &GaussianInt) -> Result<bool, AnalyticError> {
    let ctx = FamilyContext::new(k)?;
    Ok(ctx.c.norm() >= ctx.b.norm() * BigInt::from(16))
}

#[derive(Debug, Clone, Serialize)]
pub enum SeparationOutcome {
    /// |P| ≠ |Q| certified, with the separation gap.
    Separated {
        #[serde(serialize_with = "serialize_interval")]
        gap: RealInterval,
        precision_bits: u32,
    },
    /// Budget exhausted without a decision; never asserted either way.
    Undecided { precision_bits: u32 },
}

/// Numeric witness for the non-vanishing of the linear form at an
/// instance: certify |P| ≠ |Q| by interval separation, escalating
/// precision until decided or the budget runs out.
///
/// Hypotheses of the underlying lemma require both Re k and Im k nonzero
/// (otherwise |c|/|a| or |c|/|b| can be rational and the claim fails).
pub fn lambda_nonzero_probe(
    k: &GaussianInt,
    class_j: usize,
    m: u32,
    n: u32,
    precision_bits: u32,
) -> Result<SeparationOutcome, AnalyticError> {
    use num_traits::Zero;
    if k.re().is_zero() || k.im().is_zero() {
        return Err(AnalyticError::Guard("requires Re k ≠ 0 and Im k ≠ 0"));
    }
    let ctx = FamilyContext::new(k)?;
    let mut prec = precision_bits.max(32);
    loop {
        if let Ok(ev) = eval_at(&ctx, class_j, m, n, prec) {
            let diff = ev.p_mag.sub(&ev.q_mag);
            if !diff.contains_zero() {
                return Ok(SeparationOutcome::Separated { gap: diff.abs(), precision_bits: prec });
            }
        }
        if prec >= super::MAX_PRECISION {
            return Ok(SeparationOutcome::Undecided { precision_bits: prec });
        }
        prec *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(v: i64) -> GaussianInt {
        GaussianInt::from_int(v)
    }

    #[test]
    fn k_constant_value() {
        // K = 0.622973 to the printed precision
        let k = k_constant(96);
        let lo = BigRational::new(622972.into(), 1000000.into());
        let hi = BigRational::new(622974.into(), 1000000.into());
        assert!(k.lo() > &lo && k.hi() < &hi, "{k:?}");
    }

    #[test]
    fn chain_certified_at_instance() {
        let ev = eval_linear_form(&gi(20), 1, 3, 3, 128).unwrap();
        assert!(ev.chain_certified);
        // away from a coincidence the raw Λ is far above the bound
        assert!(!ev.direct_inequality_holds);
        // sanity on the magnitudes at k=20, class (1,1), m=n=3
        let p = ev.p_mag.to_f64();
        let q = ev.q_mag.to_f64();
        assert!((p / 2.517570e12 - 1.0).abs() < 1e-4, "p={p}");
        assert!((q / 2.784296e12 - 1.0).abs() < 1e-4, "q={q}");
        assert!((ev.lambda_log.to_f64() - 0.100701).abs() < 1e-4);
    }

    #[test]
    fn pq_bounds_at_instances() {
        for class_j in [1, 3] {
            for mn in [3u32, 4, 5] {
                let rep = pq_bound_check(&gi(20), class_j, mn, mn, 128).unwrap();
                assert!(rep.p_floor_ok && rep.q_floor_ok && rep.unit_above_sqrt);
                assert!(rep.q_prime_floor_ok);
            }
        }
    }

    #[test]
    fn pq_guards() {
        assert!(matches!(
            pq_bound_check(&gi(20), 1, 2, 3, 64),
            Err(AnalyticError::Guard(_))
        ));
        // |c| ≥ 4|b| auto-holds across the family for |k| ≥ 2
        for k in [gi(2), gi(-3), GaussianInt::new(0, 2), GaussianInt::new(5, 5)] {
            assert!(family_c_4b_precondition(&k).unwrap());
        }
    }

    #[test]
    fn separation_probe() {
        let out = lambda_nonzero_probe(&GaussianInt::new(18, 5), 1, 3, 3, 64).unwrap();
        assert!(matches!(out, SeparationOutcome::Separated { .. }));
        assert!(matches!(
            lambda_nonzero_probe(&gi(20), 1, 3, 3, 64),
            Err(AnalyticError::Guard(_))
        ));
    }
}
