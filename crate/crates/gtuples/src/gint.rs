//! Exact arithmetic in the ring of Gaussian integers ℤ[i].
//!
//! Everything downstream (Pell orbits, congruence sieves, tuple
//! verification) reduces to ring operations, nearest-rounding division
//! with remainder, and an exact perfect-square test, so all of those are
//! implemented here over arbitrary-precision integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::interval::RealInterval;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GintError {
    #[error("division by zero in Z[i]")]
    DivisionByZero,
    #[error("cannot parse {0:?} as a Gaussian integer")]
    Parse(String),
}

/// An element a+bi of ℤ[i] with arbitrary-precision components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    re: BigInt,
    im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt { re: re.into(), im: im.into() }
    }

    pub fn from_int(re: impl Into<BigInt>) -> Self {
        GaussianInt { re: re.into(), im: BigInt::zero() }
    }

    pub fn zero() -> Self {
        GaussianInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussianInt::new(1, 0)
    }

    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    pub fn re(&self) -> &BigInt {
        &self.re
    }

    pub fn im(&self) -> &BigInt {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianInt { re: self.re.clone(), im: -self.im.clone() }
    }

    /// norm(a+bi) = a² + b², the squared complex modulus.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        GaussianInt { re: &self.re * &c, im: &self.im * &c }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussianInt::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder with the quotient components rounded to the
    /// nearest integer, ties away from zero. Guarantees
    /// norm(rem) ≤ norm(den)/2.
    pub fn divrem(&self, den: &GaussianInt) -> Result<(GaussianInt, GaussianInt), GintError> {
        if den.is_zero() {
            return Err(GintError::DivisionByZero);
        }
        let n = den.norm();
        let t = self * &den.conj();
        let q = GaussianInt {
            re: round_half_away(t.re, &n),
            im: round_half_away(t.im, &n),
        };
        let r = self - &(&q * den);
        Ok((q, r))
    }

    /// True iff `den` divides `self` exactly.
    pub fn is_divisible_by(&self, den: &GaussianInt) -> Result<bool, GintError> {
        Ok(self.divrem(den)?.1.is_zero())
    }

    /// Canonical residue of `self` modulo `m` (the nearest-rounding remainder).
    pub fn reduce_mod(&self, m: &GaussianInt) -> Result<GaussianInt, GintError> {
        Ok(self.divrem(m)?.1)
    }

    /// Exact square root in ℤ[i], normalized to the principal representative
    /// (re > 0, or re = 0 and im ≥ 0). `None` means "not a square".
    ///
    /// Works entirely in integers: a root a+bi of x+yi must satisfy
    /// a²+b² = isqrt(norm), a²−b² = x, 2ab = y, so both components are
    /// reconstructed from integer square roots and the candidate re-squared
    /// as a final check.
    pub fn sqrt_exact(&self) -> Option<GaussianInt> {
        if self.is_zero() {
            return Some(GaussianInt::zero());
        }
        let n = self.norm();
        let s = n.sqrt();
        if &s * &s != n {
            return None;
        }
        let two = BigInt::from(2);
        let a2_twice = &s + &self.re;
        let b2_twice = &s - &self.re;
        if a2_twice.is_odd() || b2_twice.is_odd() {
            return None;
        }
        let a2 = a2_twice / &two;
        let b2 = b2_twice / &two;
        let a = a2.sqrt();
        if &a * &a != a2 {
            return None;
        }
        let b = if self.im.is_zero() {
            let b = b2.sqrt();
            if &b * &b != b2 {
                return None;
            }
            b
        } else {
            if a.is_zero() {
                return None;
            }
            let (q, r) = self.im.div_rem(&(&two * &a));
            if !r.is_zero() {
                return None;
            }
            q
        };
        let w = GaussianInt { re: a, im: b };
        if &(&w * &w) == self {
            Some(w.principal())
        } else {
            let w = w.conj();
            if &(&w * &w) == self {
                Some(w.principal())
            } else {
                None
            }
        }
    }

    /// The representative of {z, −z} with re > 0, or re = 0 and im ≥ 0.
    pub fn principal(&self) -> GaussianInt {
        if self.re.is_positive() || (self.re.is_zero() && !self.im.is_negative()) {
            self.clone()
        } else {
            -self
        }
    }

    /// |z| = sqrt(norm z) as a certified enclosure with relative error
    /// below 2^(1−precision_bits).
    pub fn abs(&self, precision_bits: u32) -> RealInterval {
        RealInterval::from_bigint(self.norm()).sqrt(precision_bits)
    }

    /// Sort key imposing the deterministic (norm, re, im) output order.
    pub fn norm_lex_key(&self) -> (BigInt, BigInt, BigInt) {
        (self.norm(), self.re.clone(), self.im.clone())
    }
}

/// Round p/n (n > 0) to the nearest integer, ties away from zero.
fn round_half_away(p: BigInt, n: &BigInt) -> BigInt {
    let two_p_abs = BigInt::from(2) * p.abs();
    let q = (two_p_abs + n) / (BigInt::from(2) * n);
    if p.is_negative() {
        -q
    } else {
        q
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b GaussianInt> for &'a GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: &'b GaussianInt) -> GaussianInt {
                let $a = self;
                let $b = rhs;
                $body
            }
        }
        impl $trait<GaussianInt> for GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: GaussianInt) -> GaussianInt {
                $trait::$method(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a GaussianInt> for GaussianInt {
            type Output = GaussianInt;
            fn $method(self, rhs: &'a GaussianInt) -> GaussianInt {
                $trait::$method(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussianInt { re: &a.re + &b.re, im: &a.im + &b.im });
forward_binop!(Sub, sub, |a, b| GaussianInt { re: &a.re - &b.re, im: &a.im - &b.im });
forward_binop!(Mul, mul, |a, b| GaussianInt {
    re: &a.re * &b.re - &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re,
});

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        -&self
    }
}

impl fmt::Display for GaussianInt {
    /// Canonical text form: "a", "bi", "a+bi", or "a-bi" ("i"/"-i" for unit
    /// imaginary parts).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn imag(out: &mut fmt::Formatter<'_>, b: &BigInt, with_sign: bool) -> fmt::Result {
            let mag = b.magnitude();
            let sign = if b.is_negative() {
                "-"
            } else if with_sign {
                "+"
            } else {
                ""
            };
            if mag == &1u32.into() {
                write!(out, "{sign}i")
            } else {
                write!(out, "{sign}{mag}i")
            }
        }
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            imag(f, &self.im, false)
        } else {
            write!(f, "{}", self.re)?;
            imag(f, &self.im, true)
        }
    }
}

impl FromStr for GaussianInt {
    type Err = GintError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || GintError::Parse(s.to_string());
        if cleaned.is_empty() {
            return Err(bad());
        }
        let parse_int = |t: &str| BigInt::from_str(t).map_err(|_| bad());
        // Pure real part.
        if !cleaned.ends_with('i') {
            return Ok(GaussianInt { re: parse_int(&cleaned)?, im: BigInt::zero() });
        }
        let body = &cleaned[..cleaned.len() - 1];
        let parse_imag = |t: &str| -> Result<BigInt, GintError> {
            match t {
                "" | "+" => Ok(BigInt::from(1)),
                "-" => Ok(BigInt::from(-1)),
                _ => parse_int(t),
            }
        };
        // Split at the last +/- that is not the leading sign: "a+bi" / "a-bi".
        let split = body
            .char_indices()
            .rev()
            .find(|&(idx, c)| idx > 0 && (c == '+' || c == '-'))
            .map(|(idx, _)| idx);
        match split {
            Some(idx) => Ok(GaussianInt {
                re: parse_int(&body[..idx])?,
                im: parse_imag(&body[idx..])?,
            }),
            None => Ok(GaussianInt { re: BigInt::zero(), im: parse_imag(body)? }),
        }
    }
}

impl Serialize for GaussianInt {
    /// Decimal-string components so 64-bit JSON consumers never truncate.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("GaussianInt", 2)?;
        st.serialize_field("re", &self.re.to_string())?;
        st.serialize_field("im", &self.im.to_string())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for GaussianInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            re: String,
            im: String,
        }
        let raw = Raw::deserialize(deserializer)?;
        let re = BigInt::from_str(&raw.re).map_err(serde::de::Error::custom)?;
        let im = BigInt::from_str(&raw.im).map_err(serde::de::Error::custom)?;
        Ok(GaussianInt { re, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn ring_ops() {
        assert_eq!(&g(2, 1) * &g(2, 1), g(3, 4));
        let z = g(-7, 11);
        assert_eq!(&z * &GaussianInt::one(), z);
        assert_eq!(g(3, 4).conj(), g(3, -4));
        assert_eq!(g(3, 4).conj().conj(), g(3, 4));
    }

    #[test]
    fn norm_multiplicative() {
        let a = g(17, -5);
        let b = g(-3, 29);
        assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn divrem_examples() {
        // (1+i)/2 rounds to 1+i with remainder -1-i; norm 2 == norm(2)/2.
        let (q, r) = g(1, 1).divrem(&g(2, 0)).unwrap();
        assert_eq!(q, g(1, 1));
        assert_eq!(r, g(-1, -1));
        assert!(r.norm() * 2 <= g(2, 0).norm());

        let z = g(123, -456);
        let (q, r) = z.divrem(&GaussianInt::one()).unwrap();
        assert_eq!((q, r), (z, GaussianInt::zero()));

        let (q, r) = g(6, 0).divrem(&g(3, 0)).unwrap();
        assert_eq!((q, r), (g(2, 0), GaussianInt::zero()));

        assert_eq!(g(1, 0).divrem(&GaussianInt::zero()), Err(GintError::DivisionByZero));
    }

    #[test]
    fn divisibility() {
        // 2 = (1+i)(1-i)
        assert!(g(2, 0).is_divisible_by(&g(1, 1)).unwrap());
        // zero divisible by anything nonzero
        assert!(GaussianInt::zero().is_divisible_by(&g(7, 3)).unwrap());
        // norm argument: 4 does not divide 2
        assert!(!g(1, 1).is_divisible_by(&g(2, 0)).unwrap());
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(g(3, 4).sqrt_exact(), Some(g(2, 1)));
        assert_eq!(GaussianInt::zero().sqrt_exact(), Some(GaussianInt::zero()));
        // (a+bi)² = i would force a² = b² and 2ab = 1
        assert_eq!(GaussianInt::i().sqrt_exact(), None);
        // negative reals and pure-imaginary squares
        assert_eq!(g(-4, 0).sqrt_exact(), Some(g(0, 2)));
        assert_eq!(g(0, 2).sqrt_exact(), Some(g(1, 1)));
        assert_eq!(g(2, 0).sqrt_exact(), None);
        assert_eq!(g(-1, 0).sqrt_exact(), Some(g(0, 1)));
    }

    #[test]
    fn sqrt_matches_exhaustive_search() {
        // Every square of a small Gaussian integer must round-trip, and the
        // principal representative must match the search result up to sign.
        for re in -100i64..=100 {
            for im in -100i64..=100 {
                let w = g(re, im);
                let z = &w * &w;
                let got = z.sqrt_exact().expect("square must have a root");
                assert_eq!(&got * &got, z);
                assert_eq!(got, w.principal());
            }
        }
    }

    #[test]
    fn principal_branch() {
        assert_eq!(g(-2, 5).principal(), g(2, -5));
        assert_eq!(g(0, -3).principal(), g(0, 3));
        assert_eq!(g(2, -5).principal(), g(2, -5));
        assert_eq!(GaussianInt::zero().principal(), GaussianInt::zero());
    }

    #[test]
    fn abs_enclosures() {
        let five = g(3, 4).abs(64);
        assert!(five.contains_rational(&num_rational::BigRational::from_integer(5.into())));
        assert!(five.width() < num_rational::BigRational::new(1.into(), BigInt::from(2).pow(60).into()));
        let zero = GaussianInt::zero().abs(64);
        assert!(zero.lo().is_zero() && zero.hi().is_zero());
    }

    #[test]
    fn text_roundtrip() {
        for s in ["0", "5", "-5", "i", "-i", "3i", "-17i", "2+i", "2-i", "2+3i", "-12-7i"] {
            let z: GaussianInt = s.parse().unwrap();
            assert_eq!(z.to_string(), s);
        }
        let z: GaussianInt = " -3 + 4i ".parse().unwrap();
        assert_eq!(z, g(-3, 4));
        assert!("".parse::<GaussianInt>().is_err());
        assert!("3+4j".parse::<GaussianInt>().is_err());
    }

    #[test]
    fn json_decimal_strings() {
        let z = g(-3, 4);
        let js = serde_json::to_value(&z).unwrap();
        assert_eq!(js["re"], "-3");
        assert_eq!(js["im"], "4");
        let back: GaussianInt = serde_json::from_value(js).unwrap();
        assert_eq!(back, z);
    }
}

/// Integer square root of a u128 (floor), float-seeded Newton iteration
/// with an exact fixup. Used by the scan oracles where BigInt would cost.
pub fn isqrt_u128(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as u128;
    // correct the float seed exactly
    while r > 0 && r.saturating_mul(r) > n {
        r -= 1;
    }
    while (r + 1).saturating_mul(r + 1) <= n {
        r += 1;
    }
    r
}

/// Exact perfect-square test for u128.
pub fn is_square_u128(n: u128) -> bool {
    // cheap mod-16 rejection first
    if !matches!(n & 15, 0 | 1 | 4 | 9) {
        return false;
    }
    let r = isqrt_u128(n);
    r * r == n
}

#[cfg(test)]
mod isqrt_tests {
    use super::*;

    #[test]
    fn isqrt_exact_boundaries() {
        for r in [0u128, 1, 2, 255, 65535, 1 << 40, (1 << 63) - 1] {
            let n = r * r;
            assert_eq!(isqrt_u128(n), r);
            if n > 0 {
                assert_eq!(isqrt_u128(n - 1), r - 1);
                assert_eq!(isqrt_u128(n + 1), r);
            }
        }
        assert!(is_square_u128(144));
        assert!(!is_square_u128(145));
        assert!(!is_square_u128(2));
    }
}
