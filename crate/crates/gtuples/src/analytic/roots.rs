//! Exact rational polynomials and Sturm-sequence real-root isolation.
//!
//! Threshold claims of the form "the inequality holds for all |k| ≥ X" are
//! reduced to "the largest real root of this polynomial is below X", and
//! that is certified here by exact sign-variation counts plus bisection.
//! No floating point: coefficients, evaluation points, and bounds are all
//! `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial with exact rational coefficients, ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// Build from human-order (highest degree first) integer coefficients.
    pub fn from_descending_i64(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .rev()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn from_descending(coeffs: Vec<BigRational>) -> Self {
        Self::new(coeffs.into_iter().rev().collect())
    }

    pub fn from_descending_big(coeffs: Vec<BigInt>) -> Self {
        Self::from_descending(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::new(vec![]);
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.coeffs.iter().enumerate() {
            out[i] -= b;
        }
        RatPoly::new(out)
    }

    pub fn pow_u(&self, e: u32) -> RatPoly {
        let mut acc = RatPoly::new(vec![BigRational::one()]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::new(vec![]);
        }
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Scale by 1/max|coeff|; positive factor, so sign data is preserved.
    fn normalized(mut self) -> RatPoly {
        if let Some(m) = self.coeffs.iter().map(|c| c.abs()).max() {
            if !m.is_zero() {
                for c in &mut self.coeffs {
                    *c /= &m;
                }
            }
        }
        self
    }

    /// Remainder of polynomial long division.
    fn rem(&self, div: &RatPoly) -> RatPoly {
        assert!(!div.is_zero());
        let mut rem = self.coeffs.clone();
        let d = div.degree();
        let lead = &div.coeffs[d];
        while rem.len() > d && rem.len() > d {
            let k = rem.len() - 1;
            let factor = rem[k].clone() / lead;
            if !factor.is_zero() {
                for i in 0..=d {
                    let idx = k - d + i;
                    let sub = &factor * &div.coeffs[i];
                    rem[idx] -= sub;
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        RatPoly::new(rem)
    }

    /// Exact synthetic division by (x − r); panics if r is not a root.
    fn deflate_root(&self, r: &BigRational) -> RatPoly {
        let mut out = vec![BigRational::zero(); self.degree()];
        let mut carry = BigRational::zero();
        for i in (0..self.coeffs.len()).rev() {
            let v = &self.coeffs[i] + &carry;
            if i == 0 {
                assert!(v.is_zero(), "deflate_root at a non-root");
            } else {
                carry = &v * r;
                out[i - 1] = v;
            }
        }
        RatPoly::new(out)
    }

    /// Strict bound B with every real root in (−B, B).
    fn cauchy_bound(&self) -> BigRational {
        let lead = self.coeffs.last().expect("zero polynomial").abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigRational::zero);
        BigRational::one() + m / lead
    }
}

fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.clone().normalized()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.normalized());
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        let neg = RatPoly::new(r.coeffs.into_iter().map(|c| -c).collect()).normalized();
        chain.push(neg);
    }
    chain
}

fn sign_variations(chain: &[RatPoly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let s = v.is_positive();
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// Number of distinct real roots in (a, b]; requires p(a) ≠ 0 and p(b) ≠ 0.
fn roots_in(chain: &[RatPoly], a: &BigRational, b: &BigRational) -> usize {
    sign_variations(chain, a).saturating_sub(sign_variations(chain, b))
}

/// Largest-real-root isolation result.
#[derive(Debug, Clone, PartialEq)]
pub enum LargestRoot {
    NoRealRoot,
    /// Certified enclosure [lo, hi] of the largest real root, with every
    /// real root ≤ hi.
    Root { lo: BigRational, hi: BigRational },
}

impl LargestRoot {
    pub fn enclosure(&self) -> Option<(&BigRational, &BigRational)> {
        match self {
            LargestRoot::NoRealRoot => None,
            LargestRoot::Root { lo, hi } => Some((lo, hi)),
        }
    }

    /// Certified "every real root is ≤ bound".
    pub fn at_most(&self, bound: &BigRational) -> bool {
        match self {
            LargestRoot::NoRealRoot => true,
            LargestRoot::Root { hi, .. } => hi <= bound,
        }
    }
}

/// Isolate the largest real root of `p` to within `tol` using a Sturm chain
/// and bisection. Exact rational roots hit by a bisection midpoint are
/// handled by deflation, so the returned enclosure is always valid.
pub fn isolate_largest_root(p: &RatPoly, tol: &BigRational) -> LargestRoot {
    assert!(!p.is_zero(), "root isolation on the zero polynomial");
    assert!(tol.is_positive());
    if p.degree() == 0 {
        return LargestRoot::NoRealRoot;
    }
    let chain = sturm_chain(p);
    let bound = p.cauchy_bound();
    let mut lo = -bound.clone();
    let mut hi = bound;
    if roots_in(&chain, &lo, &hi) == 0 {
        return LargestRoot::NoRealRoot;
    }
    let two = BigRational::from_integer(2.into());
    loop {
        if &(&hi - &lo) <= tol {
            return LargestRoot::Root { lo, hi };
        }
        let mid = (&lo + &hi) / &two;
        if p.eval(&mid).is_zero() {
            // mid is an exact root: strip it and look strictly above
            let mut q = p.deflate_root(&mid);
            while !q.is_zero() && q.degree() > 0 && q.eval(&mid).is_zero() {
                q = q.deflate_root(&mid);
            }
            if q.degree() == 0 {
                return LargestRoot::Root { lo: mid.clone(), hi: mid };
            }
            let qchain = sturm_chain(&q);
            if roots_in(&qchain, &mid, &hi) == 0 {
                return LargestRoot::Root { lo: mid.clone(), hi: mid };
            }
            return match isolate_largest_root_in(&q, &qchain, mid, hi, tol) {
                Some((lo, hi)) => LargestRoot::Root { lo, hi },
                None => unreachable!("count said a root exists above"),
            };
        }
        if roots_in(&chain, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

fn isolate_largest_root_in(
    p: &RatPoly,
    chain: &[RatPoly],
    mut lo: BigRational,
    mut hi: BigRational,
    tol: &BigRational,
) -> Option<(BigRational, BigRational)> {
    let two = BigRational::from_integer(2.into());
    loop {
        if &(&hi - &lo) <= tol {
            return Some((lo, hi));
        }
        let mid = (&lo + &hi) / &two;
        if p.eval(&mid).is_zero() {
            let q = p.deflate_root(&mid);
            if q.degree() == 0 {
                return Some((mid.clone(), mid));
            }
            let qchain = sturm_chain(&q);
            if roots_in(&qchain, &mid, &hi) == 0 {
                return Some((mid.clone(), mid));
            }
            return isolate_largest_root_in(&q, &qchain, mid, hi, tol);
        }
        if roots_in(chain, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Certified "p has no real root strictly above x". Robust when x itself is
/// a root: such factors are deflated away before the Sturm count.
pub fn no_roots_above(p: &RatPoly, x: &BigRational) -> bool {
    assert!(!p.is_zero());
    let mut q = p.clone();
    while q.degree() > 0 && q.eval(x).is_zero() {
        q = q.deflate_root(x);
    }
    if q.degree() == 0 {
        return true;
    }
    let chain = sturm_chain(&q);
    let b = q.cauchy_bound().max(x + BigRational::one());
    roots_in(&chain, x, &b) == 0
}

/// Count all distinct real roots (diagnostic helper for tests).
pub fn count_real_roots(p: &RatPoly) -> usize {
    if p.is_zero() || p.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(p);
    let b = p.cauchy_bound();
    roots_in(&chain, &-b.clone(), &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    fn rq(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn no_real_root() {
        let p = RatPoly::from_descending_i64(&[1, 0, 1]); // t² + 1
        assert_eq!(isolate_largest_root(&p, &tol(1, 1000)), LargestRoot::NoRealRoot);
    }

    #[test]
    fn exact_rational_root() {
        let p = RatPoly::from_descending_i64(&[1, -23]); // t − 23
        match isolate_largest_root(&p, &tol(1, 1 << 20)) {
            LargestRoot::Root { lo, hi } => {
                assert!(lo <= rq(23) && rq(23) <= hi);
                assert!(&hi - &lo <= tol(1, 1 << 20));
            }
            _ => panic!(),
        }
        // boundary-exact certification
        assert!(no_roots_above(&p, &rq(23)));
        assert!(!no_roots_above(&p, &tol(22999, 1000)));
    }

    #[test]
    fn picks_largest_of_several() {
        // (t−1)(t−2)(t−3) = t³ − 6t² + 11t − 6
        let p = RatPoly::from_descending_i64(&[1, -6, 11, -6]);
        assert_eq!(count_real_roots(&p), 3);
        let r = isolate_largest_root(&p, &tol(1, 1 << 30));
        let (lo, hi) = r.enclosure().unwrap();
        assert!(lo <= &rq(3) && &rq(3) <= hi);
    }

    #[test]
    fn repeated_root() {
        // (t−1)² has one distinct root
        let p = RatPoly::from_descending_i64(&[1, -2, 1]);
        assert_eq!(count_real_roots(&p), 1);
        assert!(no_roots_above(&p, &rq(1)));
        assert!(!no_roots_above(&p, &tol(999, 1000)));
    }

    #[test]
    fn irrational_root_enclosure() {
        // t² − 2, largest root √2
        let p = RatPoly::from_descending_i64(&[1, 0, -2]);
        let r = isolate_largest_root(&p, &tol(1, 1 << 40));
        let (lo, hi) = r.enclosure().unwrap();
        // 1.41421356237 < √2 < 1.41421356238
        assert!(lo < &tol(141421356238, 100000000000));
        assert!(hi > &tol(141421356237, 100000000000));
        assert!(&(hi - lo) <= &tol(1, 1 << 40));
    }

    #[test]
    fn eval_and_deflate() {
        let p = RatPoly::from_descending_i64(&[2, -3, 1]); // 2t² − 3t + 1 = (2t−1)(t−1)
        assert!(p.eval(&tol(1, 2)).is_zero());
        let q = p.deflate_root(&rq(1));
        assert_eq!(q.degree(), 1);
        assert!(q.eval(&tol(1, 2)).is_zero());
    }
}
