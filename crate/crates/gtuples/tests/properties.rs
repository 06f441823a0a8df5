//! Property-level invariants: randomized ring laws, orbit closure, the
//! closed-form solution of the recurrences against high-precision complex
//! arithmetic, and precision soundness of the certified comparisons.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use gtuples::analytic::approx::{jz_params, JzVariant};
use gtuples::analytic::linform::{eval_linear_form, pq_bound_check};
use gtuples::gint::GaussianInt;
use gtuples::interval::{sqrt_gaussian, ComplexInterval, RealInterval};
use gtuples::pell::{
    family_e2, family_sequences, step_solution, SequenceSpec, StepDirection,
};

/// Small deterministic generator for the bulk 10⁴-pair sweeps.
struct XorShift(u64);

impl XorShift {
    fn next_i64(&mut self, span: i64) -> i64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        (x % (2 * span as u64 + 1)) as i64 - span
    }
}

#[test]
fn norm_multiplicative_bulk() {
    let mut rng = XorShift(0x9E3779B97F4A7C15);
    for _ in 0..10_000 {
        let a = GaussianInt::new(rng.next_i64(1_000_000), rng.next_i64(1_000_000));
        let b = GaussianInt::new(rng.next_i64(1_000_000), rng.next_i64(1_000_000));
        assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }
}

#[test]
fn divrem_contract_bulk() {
    let mut rng = XorShift(0xA5A5A5A55A5A5A5A);
    let mut done = 0;
    while done < 10_000 {
        let num = GaussianInt::new(rng.next_i64(1_000_000), rng.next_i64(1_000_000));
        let den = GaussianInt::new(rng.next_i64(1000), rng.next_i64(1000));
        if den.is_zero() {
            continue;
        }
        done += 1;
        let (q, r) = num.divrem(&den).unwrap();
        assert_eq!(&(&q * &den) + &r, num);
        assert!(r.norm() * BigInt::from(2) <= den.norm());
    }
}

#[test]
fn orbit_closure_bulk() {
    // 10⁴ random steps across a handful of family equations stay on the
    // equation, exactly
    let ks = [
        GaussianInt::new(7, 4),
        GaussianInt::new(-5, 2),
        GaussianInt::new(20, 0),
        GaussianInt::new(2, 18),
        GaussianInt::new(-9, -9),
    ];
    let mut rng = XorShift(0xDEADBEEFCAFEF00D);
    for k in &ks {
        let eq = family_e2(k).unwrap();
        let mut sol = (GaussianInt::one(), GaussianInt::one());
        assert!(eq.is_solution(&sol.0, &sol.1));
        let mut steps = 0;
        while steps < 2000 {
            let dir = if rng.next_i64(1) >= 0 {
                StepDirection::Forward
            } else {
                StepDirection::Backward
            };
            sol = step_solution(&eq, (&sol.0, &sol.1), dir).unwrap();
            steps += 1;
            // keep magnitudes in check: drift back when numbers get huge
            if sol.0.norm().bits() > 2000 {
                sol = (GaussianInt::one(), GaussianInt::one());
            }
        }
    }
}

proptest! {
    #[test]
    fn sqrt_roundtrip(re in -2000i64..2000, im in -2000i64..2000) {
        let w = GaussianInt::new(re, im);
        let sq = &w * &w;
        let got = sq.sqrt_exact().expect("squares have roots");
        prop_assert_eq!(&got * &got, sq);
    }

    #[test]
    fn divrem_roundtrip(a in -100_000i64..100_000, b in -100_000i64..100_000,
                        c in -500i64..500, d in -500i64..500) {
        prop_assume!(c != 0 || d != 0);
        let num = GaussianInt::new(a, b);
        let den = GaussianInt::new(c, d);
        let (q, r) = num.divrem(&den).unwrap();
        prop_assert_eq!(&(&q * &den) + &r, num);
        prop_assert!(r.norm() * BigInt::from(2) <= den.norm());
    }

    #[test]
    fn parse_display_roundtrip(re in -1_000_000i64..1_000_000, im in -1_000_000i64..1_000_000) {
        let z = GaussianInt::new(re, im);
        let back: GaussianInt = z.to_string().parse().unwrap();
        prop_assert_eq!(back, z);
    }
}

/// Closed form A·λ₊ⁿ + B·λ₋ⁿ of a recurrence with coefficient 2u, roots
/// u ± √(u²−1), coefficients solved from the initial pair.
fn closed_form_matches(spec: &SequenceSpec, u: &GaussianInt, n_max: usize) {
    let prec: u32 = 360;
    let one = GaussianInt::one();
    let disc = &(u * u) - &one;
    let w = sqrt_gaussian(&disc, prec);
    let uc = ComplexInterval::from_gaussian(u);
    let lam_plus = uc.add(&w);
    let lam_minus = uc.sub(&w);
    let w0 = ComplexInterval::from_gaussian(&spec.first);
    let w1 = ComplexInterval::from_gaussian(&spec.second);
    // A = (W₁ − λ₋W₀) / (λ₊ − λ₋), B = W₀ − A
    let a = w1
        .sub(&lam_minus.mul(&w0))
        .div(&lam_plus.sub(&lam_minus), prec);
    let b = w0.sub(&a);
    let tol = BigRational::new(BigInt::one(), BigInt::one() << 100);
    for (n, exact) in spec.terms_up_to(n_max).into_iter().enumerate() {
        let closed = a
            .mul(&lam_plus.pow_i(n as u32, prec))
            .add(&b.mul(&lam_minus.pow_i(n as u32, prec)));
        let diff_re = closed.re.sub(&RealInterval::from_bigint(exact.re().clone()));
        let diff_im = closed.im.sub(&RealInterval::from_bigint(exact.im().clone()));
        let mag = exact.abs(prec).max(&RealInterval::from_int(1));
        let cap = mag.scale(&tol);
        assert!(
            diff_re.abs().hi() <= cap.hi() && diff_im.abs().hi() <= cap.hi(),
            "closed form drifts at n = {n}"
        );
    }
}

#[test]
fn recurrences_match_closed_forms() {
    for k in [GaussianInt::new(20, 0), GaussianInt::new(18, 5), GaussianInt::new(3, -18)] {
        let (v, ws) = family_sequences(&k).unwrap();
        // V has coefficient 2k, the W family 2s
        closed_form_matches(&v, &k, 20);
        let s = family_e2(&k).unwrap().unit;
        closed_form_matches(&ws[0], &s, 12);
        closed_form_matches(&ws[3], &s, 12);
    }
}

#[test]
fn precision_soundness_verdicts_stable() {
    // re-running every certified comparison at doubled precision must not
    // flip any verdict
    let ks = [
        GaussianInt::new(20, 0),
        GaussianInt::new(24, 0),
        GaussianInt::new(18, 6),
        GaussianInt::new(30, 17),
        GaussianInt::new(100, 0),
        GaussianInt::new(300, 400),
    ];
    let mut compared = 0;
    for k in &ks {
        for variant in [JzVariant::System1, JzVariant::System2] {
            let lo = jz_params(k, variant, 128).unwrap();
            let hi = jz_params(k, variant, 256).unwrap();
            assert_eq!(lo.l_below_one, hi.l_below_one);
            assert_eq!(lo.l_above_one, hi.l_above_one);
            assert_eq!(lo.lambda_above_two, hi.lambda_above_two);
            assert_eq!(lo.two_l_below_one, hi.two_l_below_one);
            compared += 4;
        }
        for class_j in [1usize, 3] {
            for mn in [3u32, 4] {
                let lo = eval_linear_form(k, class_j, mn, mn, 128).unwrap();
                let hi = eval_linear_form(k, class_j, mn, mn, 256).unwrap();
                assert_eq!(lo.chain_certified, hi.chain_certified);
                assert_eq!(lo.direct_inequality_holds, hi.direct_inequality_holds);
                let lo_pq = pq_bound_check(k, class_j, mn, mn, 128).unwrap();
                let hi_pq = pq_bound_check(k, class_j, mn, mn, 256).unwrap();
                assert_eq!(lo_pq.p_floor_ok, hi_pq.p_floor_ok);
                assert_eq!(lo_pq.q_floor_ok, hi_pq.q_floor_ok);
                compared += 4;
            }
        }
    }
    assert!(compared >= 100, "sampled {compared} comparisons");
}

#[test]
fn six_class_set_on_fifty_samples() {
    // enumeration followed by the sieve reproduces the six-class set on 50
    // parameters with 17 < |k| ≤ 40
    use gtuples::pell::enumerate_fundamental;
    use gtuples::sieve::{candidate_fundamentals, expected_candidate_set};
    let mut ks: Vec<GaussianInt> = (18..=40).map(|v| GaussianInt::new(v, 0)).collect();
    ks.extend(
        [
            (18, 5), (18, 6), (20, 9), (17, 7), (19, 12), (25, 12), (2, 18), (3, 20),
            (30, 17), (35, 12), (5, 19), (7, 17), (9, 16), (11, 15), (13, 14), (15, 13),
            (21, 8), (23, 6), (27, 4), (29, 2), (31, 9), (33, 7), (24, 13), (26, 11),
            (28, 9), (32, 5), (34, 3),
        ]
        .map(|(re, im)| GaussianInt::new(re, im)),
    );
    assert_eq!(ks.len(), 50);
    for k in &ks {
        let n = k.norm();
        assert!(n > BigInt::from(289) && n <= BigInt::from(1600), "sample {k} out of range");
        let raw = enumerate_fundamental(&family_e2(k).unwrap(), None).unwrap();
        let out = candidate_fundamentals(k, &raw).unwrap();
        let expected = expected_candidate_set(k).unwrap();
        assert_eq!(out.survivors.len(), expected.len(), "six-class set fails at k = {k}");
    }
}

#[test]
fn unit_roots_for_twenty_random_k() {
    // the four middle roots of the second minimal polynomial stay within
    // 2⁻⁸⁰ of the unit circle across a spread of k
    use gtuples::analytic::heights::minpoly_and_heights;
    let cap = BigRational::new(BigInt::one(), BigInt::one() << 80);
    let mut rng = XorShift(0x0123456789ABCDEF);
    let mut checked = 0;
    while checked < 20 {
        let k = GaussianInt::new(rng.next_i64(60), rng.next_i64(60));
        if k.norm() <= BigInt::from(9) {
            continue;
        }
        checked += 1;
        let rep = minpoly_and_heights(&k, 1, 192).unwrap();
        assert!(
            rep.unit_root_defect.hi() <= &cap,
            "unit-root defect too large at k = {k}"
        );
        assert!(rep.minpolys_vanish, "minimal polynomial fails at k = {k}");
    }
}
