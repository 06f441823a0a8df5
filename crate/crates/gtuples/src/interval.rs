//! Certified arbitrary-precision interval arithmetic.
//!
//! Every analytic quantity in this crate (magnitudes, logarithms, height
//! bounds, approximation constants) is carried as a rational enclosure
//! [lo, hi] that is guaranteed to contain the exact value. Comparisons are
//! decided only when the enclosures separate, so a `true` verdict from
//! [`RealInterval::lt`] is a proof at the stated precision, never a sample.
//!
//! sqrt and ln round outward through exact integer arithmetic (integer
//! square roots, fixed-point atanh series with directed division), so no
//! floating point enters any certified path.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::gint::GaussianInt;

/// A closed rational interval guaranteed to contain the exact real value.
#[derive(Debug, Clone, PartialEq)]
pub struct RealInterval {
    lo: BigRational,
    hi: BigRational,
}

impl serde::Serialize for RealInterval {
    /// Midpoint plus certified radius, both as decimal strings.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("RealInterval", 2)?;
        st.serialize_field("value", &decimal_sci(&self.midpoint(), 30))?;
        st.serialize_field("error_bound", &decimal_sci_up(&self.radius(), 3))?;
        st.end()
    }
}

impl RealInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "inverted interval");
        RealInterval { lo, hi }
    }

    pub fn singleton(v: BigRational) -> Self {
        RealInterval { lo: v.clone(), hi: v }
    }

    pub fn from_int(v: i64) -> Self {
        Self::singleton(BigRational::from_integer(v.into()))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Self::singleton(BigRational::from_integer(v))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::singleton(BigRational::new(num.into(), den.into()))
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Certified strict `self < other`: true only when the enclosures separate.
    pub fn lt(&self, other: &RealInterval) -> bool {
        self.hi < other.lo
    }

    /// Certified strict `self > other`.
    pub fn gt(&self, other: &RealInterval) -> bool {
        self.lo > other.hi
    }

    /// Certified `self ≤ other` (enclosure-wise).
    pub fn le(&self, other: &RealInterval) -> bool {
        self.hi <= other.lo
    }

    pub fn add(&self, other: &RealInterval) -> RealInterval {
        RealInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &RealInterval) -> RealInterval {
        RealInterval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn neg(&self) -> RealInterval {
        RealInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, other: &RealInterval) -> RealInterval {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RealInterval { lo, hi }
    }

    pub fn scale(&self, q: &BigRational) -> RealInterval {
        if q.is_negative() {
            RealInterval { lo: &self.hi * q, hi: &self.lo * q }
        } else {
            RealInterval { lo: &self.lo * q, hi: &self.hi * q }
        }
    }

    /// Reciprocal; panics if the interval contains zero.
    pub fn recip(&self) -> RealInterval {
        assert!(!self.contains_zero(), "reciprocal of interval containing zero");
        RealInterval { lo: self.hi.recip(), hi: self.lo.recip() }
    }

    pub fn div(&self, other: &RealInterval) -> RealInterval {
        self.mul(&other.recip())
    }

    /// Integer power, correct for intervals of any sign.
    pub fn pow_i(&self, n: u32) -> RealInterval {
        if n == 0 {
            return RealInterval::from_int(1);
        }
        let pl = pow_rat(&self.lo, n);
        let ph = pow_rat(&self.hi, n);
        if n % 2 == 1 {
            RealInterval { lo: pl, hi: ph }
        } else if !self.lo.is_negative() {
            RealInterval { lo: pl, hi: ph }
        } else if !self.hi.is_positive() {
            RealInterval { lo: ph, hi: pl }
        } else {
            RealInterval { lo: BigRational::zero(), hi: pl.max(ph) }
        }
    }

    /// |self| as an interval.
    pub fn abs(&self) -> RealInterval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            RealInterval {
                lo: BigRational::zero(),
                hi: self.lo.clone().abs().max(self.hi.clone().abs()),
            }
        }
    }

    /// Outward rounding onto the 2^-prec dyadic grid; caps denominator growth.
    pub fn round_out(&self, prec: u32) -> RealInterval {
        RealInterval { lo: dyadic_floor(&self.lo, prec), hi: dyadic_ceil(&self.hi, prec) }
    }

    /// Certified enclosure of sqrt; requires a nonnegative interval.
    pub fn sqrt(&self, prec: u32) -> RealInterval {
        assert!(!self.lo.is_negative(), "sqrt of an interval with negative part");
        RealInterval { lo: sqrt_lower(&self.lo, prec), hi: sqrt_upper(&self.hi, prec) }
    }

    /// Certified enclosure of the natural logarithm; requires lo > 0.
    pub fn ln(&self, prec: u32) -> RealInterval {
        assert!(self.lo.is_positive(), "ln of an interval reaching zero");
        RealInterval { lo: ln_directed(&self.lo, prec, false), hi: ln_directed(&self.hi, prec, true) }
    }

    /// Base-10 logarithm enclosure.
    pub fn log10(&self, prec: u32) -> RealInterval {
        let l = self.ln(prec);
        let ln10 = ln_directed(&BigRational::from_integer(10.into()), prec, false);
        let ln10_hi = ln_directed(&BigRational::from_integer(10.into()), prec, true);
        // dividing by an enclosure of ln 10 keeps the result certified
        l.div(&RealInterval { lo: ln10, hi: ln10_hi })
    }

    pub fn min(&self, other: &RealInterval) -> RealInterval {
        RealInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().min(other.hi.clone()),
        }
    }

    pub fn max(&self, other: &RealInterval) -> RealInterval {
        RealInterval {
            lo: self.lo.clone().max(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &RealInterval) -> RealInterval {
        RealInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    /// Midpoint in scientific notation plus the enclosure radius; the radius
    /// is itself rounded up, so the printed pair stays a true statement.
    pub fn to_decimal(&self, sig: usize) -> String {
        format!("{} (±{})", decimal_sci(&self.midpoint(), sig), decimal_sci_up(&self.radius(), 2))
    }

    pub fn radius(&self) -> BigRational {
        self.width() / BigRational::from_integer(2.into())
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

fn pow_rat(q: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = q.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

fn pow2(prec: u32) -> BigInt {
    BigInt::one() << prec
}

fn dyadic_floor(q: &BigRational, prec: u32) -> BigRational {
    let scaled = (q.numer() << prec).div_floor(q.denom());
    BigRational::new(scaled, pow2(prec))
}

fn dyadic_ceil(q: &BigRational, prec: u32) -> BigRational {
    let scaled = (q.numer() << prec).div_ceil(q.denom());
    BigRational::new(scaled, pow2(prec))
}

fn sqrt_lower(q: &BigRational, prec: u32) -> BigRational {
    if q.is_zero() {
        return BigRational::zero();
    }
    let n = (q.numer() << (2 * prec)).div_floor(q.denom());
    BigRational::new(n.sqrt(), pow2(prec))
}

fn sqrt_upper(q: &BigRational, prec: u32) -> BigRational {
    if q.is_zero() {
        return BigRational::zero();
    }
    let n = (q.numer() << (2 * prec)).div_ceil(q.denom());
    let s = n.sqrt();
    if &s * &s == n {
        BigRational::new(s, pow2(prec))
    } else {
        BigRational::new(s + 1, pow2(prec))
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_ceil(b)
}

/// Directed fixed-point atanh(z) for 0 ≤ z ≤ 1/2, scaled by 2^prec.
///
/// With `up = false` every operation rounds down and the positive series
/// tail is dropped, so the result underestimates. With `up = true` every
/// operation rounds up and an explicit tail majorant is added.
fn atanh_scaled(z: &BigRational, prec: u32, up: bool) -> BigInt {
    debug_assert!(!z.is_negative());
    let scale = pow2(prec);
    let znum = z.numer() << prec;
    let zs = if up { ceil_div(&znum, z.denom()) } else { znum.div_floor(z.denom()) };
    let z2 = if up {
        ceil_div(&(&zs * &zs), &scale)
    } else {
        (&zs * &zs).div_floor(&scale)
    };
    let mut acc = BigInt::zero();
    let mut t = zs;
    let mut j: u64 = 0;
    loop {
        let den = BigInt::from(2 * j + 1);
        let term = if up { ceil_div(&t, &den) } else { t.div_floor(&den) };
        acc += &term;
        if up {
            // once t is this small the whole remaining tail is < t ulps
            if t <= BigInt::from(8) {
                acc += t + 1;
                break;
            }
        } else if t.is_zero() {
            break;
        }
        t = if up {
            ceil_div(&(&t * &z2), &scale)
        } else {
            (&t * &z2).div_floor(&scale)
        };
        j += 1;
    }
    acc
}

fn ln2_enclosure(prec: u32) -> (BigRational, BigRational) {
    static CACHE: OnceLock<Mutex<HashMap<u32, (BigRational, BigRational)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&prec) {
        return v.clone();
    }
    // ln 2 = 2 atanh(1/3)
    let third = BigRational::new(1.into(), 3.into());
    let scale = pow2(prec);
    let lo = BigRational::new(atanh_scaled(&third, prec, false) * 2, scale.clone());
    let hi = BigRational::new(atanh_scaled(&third, prec, true) * 2, scale);
    cache.lock().unwrap().insert(prec, (lo.clone(), hi.clone()));
    (lo, hi)
}

/// Directed ln of an exact positive rational.
fn ln_directed(q: &BigRational, prec: u32, up: bool) -> BigRational {
    assert!(q.is_positive(), "ln of a nonpositive rational");
    // guard bits absorb the per-term directed-rounding slack of the series
    let prec = prec + 16;
    // Split q = m · 2^e with m in [1, 2).
    let mut e: i64 = q.numer().bits() as i64 - q.denom().bits() as i64;
    let mut m = if e >= 0 {
        BigRational::new(q.numer().clone(), q.denom() << e)
    } else {
        BigRational::new(q.numer() << (-e), q.denom().clone())
    };
    if m < BigRational::one() {
        e -= 1;
        m = m * BigRational::from_integer(2.into());
    } else if m >= BigRational::from_integer(2.into()) {
        e += 1;
        m = m / BigRational::from_integer(2.into());
    }
    debug_assert!(m >= BigRational::one() && m < BigRational::from_integer(2.into()));
    let z = (&m - BigRational::one()) / (&m + BigRational::one());
    let scale = pow2(prec);
    let ln_m = BigRational::new(atanh_scaled(&z, prec, up) * 2, scale);
    let (l2lo, l2hi) = ln2_enclosure(prec);
    let e_rat = BigRational::from_integer(e.into());
    // pick the ln2 bound that errs in the requested direction given sign(e)
    let ln2 = if up == (e >= 0) { l2hi } else { l2lo };
    ln_m + e_rat * ln2
}

/// Scientific-notation rendering of an exact rational, `sig` significant
/// digits, truncated toward zero.
pub fn decimal_sci(q: &BigRational, sig: usize) -> String {
    decimal_sci_impl(q, sig, false)
}

/// Same, but with magnitude rounded up (used for error radii).
pub fn decimal_sci_up(q: &BigRational, sig: usize) -> String {
    decimal_sci_impl(q, sig, true)
}

fn decimal_sci_impl(q: &BigRational, sig: usize, round_up: bool) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let sig = sig.max(1);
    let neg = q.is_negative();
    let a = q.numer().magnitude().clone();
    let b = q.denom().magnitude().clone();
    // decimal exponent estimate from bit lengths, then correct
    let mut exp: i64 = ((a.bits() as i64 - b.bits() as i64) as f64 * 0.30103) as i64;
    let ten = num_bigint::BigUint::from(10u32);
    loop {
        // digits = floor(|q| · 10^(sig-1-exp)), want it in [10^(sig-1), 10^sig)
        let shift = sig as i64 - 1 - exp;
        let (num, den) = if shift >= 0 {
            (&a * ten.pow(shift as u32), b.clone())
        } else {
            (a.clone(), &b * ten.pow((-shift) as u32))
        };
        let (mut digits, rem) = num.div_rem(&den);
        if round_up && !rem.is_zero() {
            digits += 1u32;
        }
        let lo = ten.pow(sig as u32 - 1);
        let hi = ten.pow(sig as u32);
        if digits < lo {
            exp -= 1;
            continue;
        }
        if digits >= hi {
            exp += 1;
            continue;
        }
        let ds = digits.to_string();
        let mantissa = if sig == 1 {
            ds
        } else {
            format!("{}.{}", &ds[..1], &ds[1..])
        };
        let sign = if neg { "-" } else { "" };
        return if exp == 0 {
            format!("{sign}{mantissa}")
        } else {
            format!("{sign}{mantissa}e{exp}")
        };
    }
}

/// Rectangular complex enclosure.
#[derive(Debug, Clone)]
pub struct ComplexInterval {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexInterval {
    pub fn new(re: RealInterval, im: RealInterval) -> Self {
        ComplexInterval { re, im }
    }

    pub fn from_gaussian(g: &GaussianInt) -> Self {
        ComplexInterval {
            re: RealInterval::from_bigint(g.re().clone()),
            im: RealInterval::from_bigint(g.im().clone()),
        }
    }

    pub fn add(&self, other: &ComplexInterval) -> ComplexInterval {
        ComplexInterval { re: self.re.add(&other.re), im: self.im.add(&other.im) }
    }

    pub fn sub(&self, other: &ComplexInterval) -> ComplexInterval {
        ComplexInterval { re: self.re.sub(&other.re), im: self.im.sub(&other.im) }
    }

    pub fn mul(&self, other: &ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }

    pub fn neg(&self) -> ComplexInterval {
        ComplexInterval { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn scale(&self, s: &RealInterval) -> ComplexInterval {
        ComplexInterval { re: self.re.mul(s), im: self.im.mul(s) }
    }

    pub fn abs(&self, prec: u32) -> RealInterval {
        self.re.pow_i(2).add(&self.im.pow_i(2)).sqrt(prec).round_out(prec)
    }

    pub fn conj(&self) -> ComplexInterval {
        ComplexInterval { re: self.re.clone(), im: self.im.neg() }
    }

    /// 1/z = conj(z)/|z|²; requires the squared modulus to exclude zero.
    pub fn recip(&self, prec: u32) -> ComplexInterval {
        let norm = self.re.pow_i(2).add(&self.im.pow_i(2));
        self.conj().scale(&norm.recip()).round_out(prec)
    }

    pub fn div(&self, other: &ComplexInterval, prec: u32) -> ComplexInterval {
        self.mul(&other.recip(prec)).round_out(prec)
    }

    pub fn pow_i(&self, n: u32, prec: u32) -> ComplexInterval {
        let mut acc = ComplexInterval::new(RealInterval::from_int(1), RealInterval::from_int(0));
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).round_out(prec);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).round_out(prec);
            }
        }
        acc
    }

    pub fn round_out(&self, prec: u32) -> ComplexInterval {
        ComplexInterval { re: self.re.round_out(prec), im: self.im.round_out(prec) }
    }
}

/// Principal complex square root of an exact Gaussian integer, as an
/// enclosure: Re ≥ 0, and Im ≥ 0 whenever Re is 0.
pub fn sqrt_gaussian(g: &GaussianInt, prec: u32) -> ComplexInterval {
    let x = RealInterval::from_bigint(g.re().clone());
    if g.im().is_zero() {
        return if !g.re().is_negative() {
            ComplexInterval::new(x.sqrt(prec), RealInterval::from_int(0))
        } else {
            ComplexInterval::new(RealInterval::from_int(0), x.neg().sqrt(prec))
        };
    }
    let r = RealInterval::from_bigint(g.norm()).sqrt(prec + 2);
    let half = BigRational::new(1.into(), 2.into());
    let re = r.add(&x).scale(&half).sqrt(prec);
    let im_mag = r.sub(&x).scale(&half).sqrt(prec);
    let im = if g.im().is_negative() { im_mag.neg() } else { im_mag };
    ComplexInterval::new(re, im)
}
