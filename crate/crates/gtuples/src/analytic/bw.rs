//! The logarithmic-form constant K′ and the contradiction threshold.
//!
//! For three logarithms over a degree-2048 field the effective constant is
//! K′ = 18·4!·3⁴·(32·2048)⁵·343·log(6·2048); combining the exponential
//! lower bound m ≥ 2|k|−1 with the resulting index cap shows that
//! |k|−1 ≤ (K′/2)·log²|k|·log(6|k|−1) must hold at any surviving solution,
//! and that inequality already fails below 5·10³⁷. Both the constant and
//! the crossing are certified here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::{with_escalation, AnalyticError};
use crate::interval::RealInterval;
use crate::report::serialize_interval;

#[derive(Debug, Clone, Serialize)]
pub struct BwReport {
    #[serde(serialize_with = "serialize_interval")]
    pub k_prime: RealInterval,
    /// K′ within 0.01% of 1.3663·10³².
    pub k_prime_matches: bool,
    /// K′/2 within 10⁻⁴ relative of 6.831506·10³¹.
    pub half_k_prime_matches: bool,
    #[serde(serialize_with = "serialize_interval")]
    pub log_k_const: RealInterval,
    /// log K within ±10⁻³ of −0.47325.
    pub log_k_matches: bool,
    /// Enclosure of the crossing of t−1 = (K′/2)·log²t·log(6t−1).
    #[serde(serialize_with = "serialize_interval")]
    pub crossing: RealInterval,
    pub crossing_below_5e37: bool,
    /// t−1 > RHS certified at t = 5·10³⁷.
    pub violated_at_5e37: bool,
}

/// The integer part of K′: 18·4!·3⁴·(32·2048)⁵·343.
fn k_prime_integer_factor() -> BigInt {
    BigInt::from(18) * BigInt::from(24) * BigInt::from(81) * BigInt::from(343)
        * (BigInt::one() << 80)
}

/// The paper-side halved constant 6.831506·10³¹ used in the crossing
/// inequality, as an exact rational.
fn half_constant() -> BigRational {
    BigRational::from_integer(BigInt::from(6_831_506) * BigInt::from(10).pow(25))
}

fn rhs_at(t: &BigRational, c: &BigRational, prec: u32) -> RealInterval {
    let t_iv = RealInterval::singleton(t.clone());
    let six_t_minus_1 = t_iv
        .scale(&BigRational::from_integer(6.into()))
        .sub(&RealInterval::from_int(1));
    t_iv.ln(prec)
        .pow_i(2)
        .mul(&six_t_minus_1.ln(prec))
        .scale(c)
        .round_out(prec)
}

/// Sign of f(t) = (t−1) − C·ln²t·ln(6t−1), certified; None if undecided.
fn f_sign(t: &BigRational, c: &BigRational, prec: u32) -> Option<bool> {
    let lhs = RealInterval::singleton(t - BigRational::one());
    let rhs = rhs_at(t, c, prec);
    if rhs.lt(&lhs) {
        Some(true)
    } else if lhs.lt(&rhs) {
        Some(false)
    } else {
        None
    }
}

pub fn bw_threshold(precision_bits: u32) -> Result<BwReport, AnalyticError> {
    with_escalation(precision_bits, |prec| {
        let factor = BigRational::from_integer(k_prime_integer_factor());
        let ln_12288 = RealInterval::from_int(12288).ln(prec);
        let k_prime = ln_12288.scale(&factor).round_out(prec);

        let within = |value: &RealInterval, center: BigRational, rel: BigRational| {
            let tol = &center * &rel;
            value.lo() > &(&center - &tol) && value.hi() < &(&center + &tol)
        };
        let k_prime_matches = within(
            &k_prime,
            BigRational::from_integer(BigInt::from(13663) * BigInt::from(10).pow(28)),
            BigRational::new(1.into(), 10000.into()),
        );
        let half = k_prime.scale(&BigRational::new(1.into(), 2.into()));
        let half_k_prime_matches = within(
            &half,
            half_constant(),
            BigRational::new(1.into(), 10000.into()),
        );

        // log K = log((8/3)·log(24/19)) ≈ −0.47325
        let k_const = super::linform::k_constant(prec);
        let log_k = k_const.ln(prec).round_out(prec);
        let log_k_matches = {
            let lo = BigRational::new((-474250).into(), 1000000.into());
            let hi = BigRational::new((-472250).into(), 1000000.into());
            log_k.lo() > &lo && log_k.hi() < &hi
        };

        // crossing of t−1 = C·ln²t·ln(6t−1) inside (2, 5·10³⁷)
        let c = half_constant();
        let five_e37 = BigRational::from_integer(BigInt::from(5) * BigInt::from(10).pow(37));
        let mut lo = BigRational::from_integer(2.into());
        let mut hi = five_e37.clone();
        if f_sign(&lo, &c, prec)? || !f_sign(&hi, &c, prec)? {
            return None;
        }
        let violated_at_5e37 = f_sign(&five_e37, &c, prec)?;
        let two = BigRational::from_integer(2.into());
        for _ in 0..140 {
            let mid = (&lo + &hi) / &two;
            match f_sign(&mid, &c, prec) {
                Some(true) => hi = mid,
                Some(false) => lo = mid,
                None => break,
            }
            // relative width 10⁻⁶ is plenty for the report
            if (&hi - &lo) * BigRational::from_integer(1_000_000.into()) < hi {
                break;
            }
        }
        let crossing = RealInterval::new(lo, hi);
        let crossing_below_5e37 = crossing.hi() < &five_e37;

        Some(BwReport {
            k_prime,
            k_prime_matches,
            half_k_prime_matches,
            log_k_const: log_k,
            log_k_matches,
            crossing,
            crossing_below_5e37,
            violated_at_5e37,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_and_crossing() {
        let rep = bw_threshold(128).unwrap();
        assert!(rep.k_prime_matches, "K' = {:?}", rep.k_prime.to_f64());
        assert!(rep.half_k_prime_matches);
        assert!(rep.log_k_matches, "log K = {:?}", rep.log_k_const.to_f64());
        assert!(rep.crossing_below_5e37);
        assert!(rep.violated_at_5e37);
        // the crossing sits in the mid-10³⁷ range
        let mid = rep.crossing.to_f64();
        assert!(mid > 4.0e37 && mid < 5.0e37, "crossing = {mid}");
    }

    #[test]
    fn k_prime_integer_part() {
        // 18·24·81·343 = 12002256
        let f = k_prime_integer_factor();
        assert_eq!(f, BigInt::from(12_002_256u64) * (BigInt::one() << 80));
    }
}
