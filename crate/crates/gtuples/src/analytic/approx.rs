//! The simultaneous-approximation route: θ/ϑ approximation bounds for
//! solutions of the family system, and the Jadrijević–Ziegler constants
//! for the two candidate systems.
//!
//! The computation certifies exactly what makes the route fail for this
//! family: the first system has L < 1 (the theorem does not apply), the
//! second has L > 1 but exponent λ > 2 (the resulting bound on |z| is
//! vacuous).

use num_bigint::BigInt;
use num_rational::BigRational;

use serde::Serialize;

use super::{gaussian_ratio, sqrt_rational_complex, with_escalation, AnalyticError, FamilyContext};
use crate::gint::GaussianInt;
use crate::interval::{ComplexInterval, RealInterval};
use crate::report::serialize_interval;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum JzVariant {
    /// a₁ = 8k, a₂ = 4k−1, T = 4k²−4k.
    System1,
    /// a₁ = k+1, a₂ = k−1, T = (k²−1)(16k³−4k).
    System2,
}

#[derive(Debug, Clone, Serialize)]
pub struct JzParams {
    pub variant: JzVariant,
    pub a1: GaussianInt,
    pub a2: GaussianInt,
    pub big_t: GaussianInt,
    #[serde(serialize_with = "serialize_interval")]
    pub m_mag: RealInterval,
    #[serde(serialize_with = "serialize_interval")]
    pub l_value: RealInterval,
    #[serde(serialize_with = "serialize_interval")]
    pub l_small: RealInterval,
    #[serde(serialize_with = "serialize_interval")]
    pub p_small: RealInterval,
    #[serde(serialize_with = "serialize_interval")]
    pub p_big: RealInterval,
    /// λ = 1 + log P / log L, defined once L > 1 is certified.
    pub lambda: Option<RealInterval>,
    /// c = 1/(4pP), valid under 2l < 1.
    pub c_const: Option<RealInterval>,
    /// |T| > M (exact).
    pub t_exceeds_m: bool,
    /// |T| > (4M)³ (exact), the criterion guaranteeing L > 1.
    pub t_exceeds_4m_cubed: bool,
    /// 32M < 5|T| (exact), equivalent to 2l < 1.
    pub two_l_below_one: bool,
    /// L < 1 certified (the first system's obstruction).
    pub l_below_one: bool,
    /// L > 1 certified.
    pub l_above_one: bool,
    /// λ > 2 certified (the second system's obstruction).
    pub lambda_above_two: Option<bool>,
}

/// Compute every constant of the approximation theorem for the chosen
/// system at k, with certified comparisons.
pub fn jz_params(
    k: &GaussianInt,
    variant: JzVariant,
    precision_bits: u32,
) -> Result<JzParams, AnalyticError> {
    let ctx = FamilyContext::new(k)?;
    // |k| > 3 keeps |T| > M in both systems
    if k.norm() <= BigInt::from(9) {
        return Err(AnalyticError::Guard("requires |k| > 3"));
    }
    let one = GaussianInt::one();
    let (a1, a2, big_t) = match variant {
        JzVariant::System1 => {
            let a1 = k.scale(8);
            let a2 = &k.scale(4) - &one;
            let t = &k.scale(4) * &(k - &one);
            (a1, a2, t)
        }
        JzVariant::System2 => {
            let k2 = k * k;
            let t = &(&k2 - &one) * &ctx.c;
            (k + &one, k - &one, t)
        }
    };
    let diff = &a1 - &a2;
    let n1 = a1.norm();
    let n2 = a2.norm();
    let nd = diff.norm();
    let m_norm: BigInt = n1.clone().max(n2.clone());
    let nt = big_t.norm();

    // exact integer certifications
    let t_exceeds_m = nt > m_norm.clone();
    let t_exceeds_4m_cubed = nt > BigInt::from(4096) * m_norm.clone().pow(3);
    let two_l_below_one = BigInt::from(1024) * m_norm.clone() < BigInt::from(25) * nt.clone();
    if !t_exceeds_m {
        return Err(AnalyticError::Guard("requires |T| > M"));
    }

    with_escalation(precision_bits, |prec| {
        let t_mag = big_t.abs(prec);
        let m_mag = RealInterval::from_bigint(m_norm.clone()).sqrt(prec);
        let gap = t_mag.sub(&m_mag);
        if !gap.is_positive() {
            return None;
        }
        // L = 27(|T|−M)² / (16·|a₁|²|a₂|²|a₁−a₂|²), the norms exact
        let denom = BigRational::from_integer(&n1 * &n2 * &nd * BigInt::from(16));
        let l_value = gap
            .pow_i(2)
            .scale(&BigRational::from_integer(27.into()))
            .scale(&denom.recip())
            .round_out(prec);
        // l = (27/64)·|T|/(|T|−M)
        let l_small = t_mag
            .div(&gap)
            .scale(&BigRational::new(27.into(), 64.into()))
            .round_out(prec);
        // p = sqrt((2|T|+3M)/(2|T|−2M))
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        let num = t_mag.scale(&two).add(&m_mag.scale(&three));
        let den = gap.scale(&two);
        let p_small = num.div(&den).sqrt(prec).round_out(prec);
        // P = 16·|a₁|²|a₂|²|a₁−a₂|²/min³ · (2|T|+3M)
        let min_norm: BigInt = n1.clone().min(n2.clone()).min(nd.clone());
        let min_cubed = RealInterval::from_bigint(min_norm.clone().pow(3)).sqrt(prec);
        let p_big = RealInterval::from_bigint(&n1 * &n2 * &nd)
            .scale(&BigRational::from_integer(16.into()))
            .div(&min_cubed)
            .mul(&num)
            .round_out(prec);

        let onei = RealInterval::from_int(1);
        let l_below_one = l_value.lt(&onei);
        let l_above_one = onei.lt(&l_value);
        if !(l_below_one || l_above_one) {
            return None;
        }
        let (lambda, lambda_above_two, c_const) = if l_above_one {
            let lam = RealInterval::from_int(1)
                .add(&p_big.ln(prec).div(&l_value.ln(prec)))
                .round_out(prec);
            let two_iv = RealInterval::from_int(2);
            let above = if two_iv.lt(&lam) {
                true
            } else if lam.lt(&two_iv) {
                false
            } else {
                return None;
            };
            let c = if two_l_below_one {
                Some(
                    p_small
                        .mul(&p_big)
                        .scale(&BigRational::from_integer(4.into()))
                        .recip()
                        .round_out(prec),
                )
            } else {
                None
            };
            (Some(lam), Some(above), c)
        } else {
            (None, None, None)
        };
        Some(JzParams {
            variant,
            a1: a1.clone(),
            a2: a2.clone(),
            big_t: big_t.clone(),
            m_mag,
            l_value,
            l_small,
            p_small,
            p_big,
            lambda,
            c_const,
            t_exceeds_m,
            t_exceeds_4m_cubed,
            two_l_below_one,
            l_below_one,
            l_above_one,
            lambda_above_two,
        })
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ThetaReport {
    /// |θ₁ − y/x| within its bound, certified.
    pub theta1_ok: bool,
    /// |θ₂ − z/(4kx)| within its bound, certified.
    pub theta2_ok: bool,
    /// The rejected branch violates the bound (the sign convention is
    /// doing real work).
    pub branch_swap_detected: bool,
    /// max of the two ϑ distances < 40|k|²/|z|², certified; only evaluated
    /// for |k| ≥ 5.
    pub vartheta_ok: Option<bool>,
}

fn complex_from_ratio(
    num: &GaussianInt,
    den: &GaussianInt,
) -> Result<ComplexInterval, AnalyticError> {
    let (re, im) = gaussian_ratio(num, den)?;
    Ok(ComplexInterval::new(
        RealInterval::singleton(re),
        RealInterval::singleton(im),
    ))
}

/// Distance |θ − target| with θ chosen among ±root by the selection rule
/// (smaller distance wins); returns (chosen distance, other distance).
fn select_branch(
    root: &ComplexInterval,
    target: &ComplexInterval,
    prec: u32,
) -> Option<(RealInterval, RealInterval)> {
    let d_plus = root.sub(target).abs(prec);
    let d_minus = root.neg().sub(target).abs(prec);
    if d_plus.lt(&d_minus) {
        Some((d_plus, d_minus))
    } else if d_minus.lt(&d_plus) {
        Some((d_minus, d_plus))
    } else {
        None
    }
}

/// Certify the approximation bounds for a solution (x, y, z) of the family
/// system: the θ pair against y/x and z/(4kx), and for |k| ≥ 5 the ϑ pair
/// against the mixed quotients, at the stated 40|k|²|z|⁻² strength.
pub fn theta_bounds(
    k: &GaussianInt,
    x: &GaussianInt,
    y: &GaussianInt,
    z: &GaussianInt,
    precision_bits: u32,
) -> Result<ThetaReport, AnalyticError> {
    let ctx = FamilyContext::new(k)?;
    let one = GaussianInt::one();
    // system membership, exactly
    let e1_lhs = &(&ctx.b * &(x * x)) - &(&ctx.a * &(y * y));
    let e2_lhs = &(&ctx.c * &(x * x)) - &(&ctx.a * &(z * z));
    if e1_lhs != GaussianInt::from_int(2) || e2_lhs != &ctx.c - &ctx.a {
        return Err(AnalyticError::NotASolution);
    }
    if x.is_zero() || z.is_zero() {
        return Err(AnalyticError::NotASolution);
    }
    let vartheta_wanted = k.norm() >= BigInt::from(25);

    with_escalation(precision_bits, |prec| {
        // θ₁ = ±sqrt((k+1)/(k−1)) against y/x
        let (r1re, r1im) = gaussian_ratio(&ctx.b, &ctx.a).ok()?;
        let theta1 = sqrt_rational_complex(&r1re, &r1im, prec);
        let target1 = complex_from_ratio(y, x).ok()?;
        let (d1, d1_other) = select_branch(&theta1, &target1, prec)?;
        let x_mag_sq = RealInterval::from_bigint(x.norm());
        let bound1 = RealInterval::from_int(2)
            .div(&(&(k * k) - &one).abs(prec).sqrt(prec))
            .div(&x_mag_sq);
        let theta1_ok = decide(&d1, &bound1)?;
        let swap1 = decide(&bound1, &d1_other)?;

        // θ₂ = ±sqrt((4k²−1)/(4k(k−1))) against z/(4kx)
        let num2 = &(&(k * k)).scale(4) - &one;
        let den2 = &k.scale(4) * &ctx.a;
        let (r2re, r2im) = gaussian_ratio(&num2, &den2).ok()?;
        let theta2 = sqrt_rational_complex(&r2re, &r2im, prec);
        let target2 = complex_from_ratio(z, &(&k.scale(4) * x)).ok()?;
        let (d2, d2_other) = select_branch(&theta2, &target2, prec)?;
        // |16k³−5k+1| / (8·sqrt|4k⁶−4k⁵−k⁴+k³|) / |x|²
        let k2 = k * k;
        let k3 = &k2 * k;
        let k4 = &k2 * &k2;
        let k5 = &k4 * k;
        let k6 = &k3 * &k3;
        let num_b = &(&k3.scale(16) - &k.scale(5)) + &one;
        let rad = &(&k6.scale(4) - &k5.scale(4)) - &(&k4 - &k3);
        let bound2 = num_b
            .abs(prec)
            .div(&rad.abs(prec).sqrt(prec).scale(&BigRational::from_integer(8.into())))
            .div(&x_mag_sq);
        let theta2_ok = decide(&d2, &bound2)?;
        let swap2 = decide(&bound2, &d2_other)?;

        let vartheta_ok = if vartheta_wanted {
            // ϑᵢ² = 1 + 1/((k∓1)(16k³−4k)) against sx/((k−1)z), ty/((k+1)z)
            let mut distances = Vec::new();
            for (shift, unit, num, den) in [
                (&ctx.a, &ctx.s, &(&ctx.s * x), &(&ctx.a * z)),
                (&ctx.b, &ctx.t, &(&ctx.t * y), &(&ctx.b * z)),
            ] {
                let _ = unit;
                let prod = shift * &ctx.c;
                let (ire, iim) = gaussian_ratio(&one, &prod).ok()?;
                let vre = BigRational::from_integer(1.into()) + ire;
                let vartheta = sqrt_rational_complex(&vre, &iim, prec);
                let target = complex_from_ratio(num, den).ok()?;
                let (d, _) = select_branch(&vartheta, &target, prec)?;
                distances.push(d);
            }
            let z_mag_sq = RealInterval::from_bigint(z.norm());
            let vbound = RealInterval::from_bigint(k.norm())
                .scale(&BigRational::from_integer(40.into()))
                .div(&z_mag_sq);
            let worst = distances[0].max(&distances[1]);
            Some(decide(&worst, &vbound)?)
        } else {
            None
        };

        Some(ThetaReport {
            theta1_ok,
            theta2_ok,
            branch_swap_detected: swap1 && swap2,
            vartheta_ok,
        })
    })
}

fn decide(lhs: &RealInterval, rhs: &RealInterval) -> Option<bool> {
    if lhs.lt(rhs) {
        Some(true)
    } else if rhs.lt(lhs) {
        Some(false)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(v: i64) -> GaussianInt {
        GaussianInt::from_int(v)
    }

    #[test]
    fn system1_l_below_one() {
        let p = jz_params(&gi(100), JzVariant::System1, 128).unwrap();
        assert!(p.l_below_one);
        assert!(!p.l_above_one);
        assert!(p.t_exceeds_m);
        assert!(p.lambda.is_none());
    }

    #[test]
    fn system2_lambda_above_two() {
        let p = jz_params(&gi(100), JzVariant::System2, 128).unwrap();
        assert!(p.l_above_one);
        assert!(p.t_exceeds_4m_cubed);
        assert!(p.two_l_below_one);
        assert_eq!(p.lambda_above_two, Some(true));
        assert!(p.c_const.is_some());
        let lam = p.lambda.unwrap().to_f64();
        assert!(lam > 2.0 && lam < 4.0, "λ = {lam}");
    }

    #[test]
    fn system2_validity_at_4() {
        // |T| > (4M)³ already at k = 4 (the 3.21 threshold)
        let p = jz_params(&gi(4), JzVariant::System2, 128).unwrap();
        assert!(p.t_exceeds_4m_cubed);
    }

    #[test]
    fn theta_bounds_at_known_solution() {
        // k = 20, d = 4k: (x, y, z) = (39, 41, 3199)
        let rep = theta_bounds(&gi(20), &gi(39), &gi(41), &gi(3199), 128).unwrap();
        assert!(rep.theta1_ok);
        assert!(rep.theta2_ok);
        assert!(rep.branch_swap_detected);
        assert_eq!(rep.vartheta_ok, Some(true));
    }

    #[test]
    fn theta_rejects_non_solution() {
        assert!(matches!(
            theta_bounds(&gi(20), &gi(39), &gi(41), &gi(3200), 96),
            Err(AnalyticError::NotASolution)
        ));
    }

    #[test]
    fn theta_small_k_skips_vartheta() {
        // k = 3, d = 4k = 12: x² = 2·12+1 = 25, y² = 4·12+1 = 49,
        // z² = (16·27−12)·12+1 = 5041 = 71²
        let rep = theta_bounds(&gi(3), &gi(5), &gi(7), &gi(71), 96).unwrap();
        assert!(rep.theta1_ok && rep.theta2_ok);
        assert!(rep.vartheta_ok.is_none());
    }
}
