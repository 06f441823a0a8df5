//! Pell-type equations αz² − γx² = α − γ over ℤ[i].
//!
//! Fundamental solutions are the minimal orbit representatives under
//! multiplication by the unit s + √(αγ); their moduli admit explicit
//! bounds, so all of them can be found by an exhaustive disk scan. Every
//! x-component of a solution then lies in a second-order recurrence seeded
//! by a fundamental pair, which is what the intersection machinery works
//! with.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::gint::{GaussianInt, GintError};
use crate::interval::RealInterval;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PellError {
    #[error("pair does not satisfy the equation")]
    NotASolution,
    #[error("equation is degenerate: {0}")]
    InvalidEquation(&'static str),
    #[error("enumeration disk holds ~{points} lattice points, over the budget of {budget}")]
    BoundOverflow { points: u128, budget: u128 },
    #[error("|k| too small: requires {0}")]
    KTooSmall(&'static str),
    #[error("k in {{0, 1, -1}} degenerates the triple")]
    DegenerateK,
    #[error(transparent)]
    Gint(#[from] GintError),
}

/// One equation αz² − γx² = α − γ together with its unit (unit² = αγ + 1).
#[derive(Debug, Clone, Serialize)]
pub struct PellEquation {
    pub alpha: GaussianInt,
    pub gamma: GaussianInt,
    pub unit: GaussianInt,
}

impl PellEquation {
    pub fn new(alpha: GaussianInt, gamma: GaussianInt, unit: GaussianInt) -> Result<Self, PellError> {
        if alpha.is_zero() || gamma.is_zero() {
            return Err(PellError::InvalidEquation("zero coefficient"));
        }
        let prod = &alpha * &gamma;
        if &(&unit * &unit) - &prod != GaussianInt::one() {
            return Err(PellError::InvalidEquation("unit² − αγ ≠ 1"));
        }
        if prod.sqrt_exact().is_some() {
            return Err(PellError::InvalidEquation("αγ is a square in Z[i]"));
        }
        Ok(PellEquation { alpha, gamma, unit })
    }

    pub fn rhs(&self) -> GaussianInt {
        &self.alpha - &self.gamma
    }

    pub fn is_solution(&self, x: &GaussianInt, z: &GaussianInt) -> bool {
        &(&self.alpha * &(z * z)) - &(&self.gamma * &(x * x)) == self.rhs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StepDirection {
    Forward,
    Backward,
}

/// Multiply a solution by the unit (forward) or its inverse (backward):
/// forward maps (x, z) to (s·x + α·z, s·z + γ·x).
pub fn step_solution(
    eq: &PellEquation,
    sol: (&GaussianInt, &GaussianInt),
    direction: StepDirection,
) -> Result<(GaussianInt, GaussianInt), PellError> {
    let (x, z) = sol;
    if !eq.is_solution(x, z) {
        return Err(PellError::NotASolution);
    }
    let sx = &eq.unit * x;
    let sz = &eq.unit * z;
    let (nx, nz) = match direction {
        StepDirection::Forward => (&sx + &(&eq.alpha * z), &sz + &(&eq.gamma * x)),
        StepDirection::Backward => (&sx - &(&eq.alpha * z), &sz - &(&eq.gamma * x)),
    };
    debug_assert!(eq.is_solution(&nx, &nz));
    Ok((nx, nz))
}

/// A ±-normalized solution inside the fundamental disk.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FundamentalSolution {
    pub x0: GaussianInt,
    pub z0: GaussianInt,
    pub class_index: usize,
}

impl FundamentalSolution {
    /// The two global sign combinations representing the same x = ±W orbit.
    pub fn sign_pairs(&self) -> [(GaussianInt, GaussianInt); 2] {
        [(self.x0.clone(), self.z0.clone()), (-&self.x0, -&self.z0)]
    }
}

/// Normalize (x, z) under the global sign flip: x principal, or z principal
/// when x = 0.
fn normalize_class(x: GaussianInt, z: GaussianInt) -> (GaussianInt, GaussianInt) {
    if x.is_zero() {
        (x, z.principal())
    } else if x == x.principal() {
        (x, z)
    } else {
        (-&x, -&z)
    }
}

pub const DEFAULT_CANDIDATE_BUDGET: u128 = 100_000_000;

/// Exhaust the disk |x|² ≤ |α||γ−α|/(|unit|−1) and return every solution
/// class found there, ±-normalized and sorted by (norm, re, im).
///
/// The disk bound is certified from above with interval arithmetic, so the
/// scan never misses a solution that the bound admits. Extra classes that a
/// congruence sieve later eliminates may legitimately appear.
pub fn enumerate_fundamental(
    eq: &PellEquation,
    budget: Option<u128>,
) -> Result<Vec<FundamentalSolution>, PellError> {
    let budget = budget.unwrap_or(DEFAULT_CANDIDATE_BUDGET);
    if eq.unit.norm() <= BigInt::from(1) {
        return Err(PellError::InvalidEquation("requires |unit| > 1"));
    }
    let prec = 64;
    let bound = eq
        .alpha
        .abs(prec)
        .mul(&(&eq.gamma - &eq.alpha).abs(prec))
        .div(&eq.unit.abs(prec).sub(&RealInterval::from_int(1)));
    // ceil of the certified upper end; norm(x) is an integer ≤ the true bound
    let norm_max = bound.hi().ceil().to_integer();
    if norm_max.is_negative() {
        return Ok(vec![]);
    }
    let radius = norm_max.sqrt();
    let r: i64 = (&radius)
        .try_into()
        .map_err(|_| PellError::BoundOverflow { points: u128::MAX, budget })?;
    let points = (2 * r as u128 + 1).pow(2);
    if points > budget {
        return Err(PellError::BoundOverflow { points, budget });
    }

    let mut classes: Vec<(GaussianInt, GaussianInt)> = (-r..=r)
        .into_par_iter()
        .flat_map_iter(|xr| {
            let mut found = Vec::new();
            for xi in -r..=r {
                let x = GaussianInt::new(xr, xi);
                if x.norm() > norm_max {
                    continue;
                }
                let num = &(&eq.gamma * &(&x * &x)) + &eq.rhs();
                let (q, rem) = num.divrem(&eq.alpha).expect("alpha nonzero");
                if !rem.is_zero() {
                    continue;
                }
                if let Some(z) = q.sqrt_exact() {
                    found.push(normalize_class(x.clone(), z.clone()));
                    if !z.is_zero() {
                        found.push(normalize_class(x, -&z));
                    }
                }
            }
            found
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.0.norm_lex_key(), a.1.norm_lex_key()).cmp(&(b.0.norm_lex_key(), b.1.norm_lex_key()))
    });
    classes.dedup();
    Ok(classes
        .into_iter()
        .enumerate()
        .map(|(class_index, (x0, z0))| FundamentalSolution { x0, z0, class_index })
        .collect())
}

/// A second-order recurrence term(n+2) = coeff·term(n+1) − term(n).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceSpec {
    pub first: GaussianInt,
    pub second: GaussianInt,
    pub coeff: GaussianInt,
}

impl SequenceSpec {
    pub fn new(first: GaussianInt, second: GaussianInt, coeff: GaussianInt) -> Self {
        SequenceSpec { first, second, coeff }
    }

    /// Exact n-th term by iteration.
    pub fn term(&self, n: usize) -> GaussianInt {
        self.iter().nth(n).expect("iterator is infinite")
    }

    pub fn iter(&self) -> SequenceIter {
        SequenceIter {
            prev: self.first.clone(),
            cur: self.second.clone(),
            coeff: self.coeff.clone(),
            emitted: 0,
        }
    }

    pub fn terms_up_to(&self, n_max: usize) -> Vec<GaussianInt> {
        self.iter().take(n_max + 1).collect()
    }

    /// Terms reduced modulo `m` at every step (canonical residues).
    pub fn terms_mod_up_to(&self, m: &GaussianInt, n_max: usize) -> Result<Vec<GaussianInt>, GintError> {
        let mut out = Vec::with_capacity(n_max + 1);
        let mut prev = self.first.reduce_mod(m)?;
        let mut cur = self.second.reduce_mod(m)?;
        out.push(prev.clone());
        if n_max >= 1 {
            out.push(cur.clone());
        }
        for _ in 2..=n_max {
            let next = (&(&self.coeff * &cur) - &prev).reduce_mod(m)?;
            prev = cur;
            cur = next;
            out.push(cur.clone());
        }
        Ok(out)
    }
}

pub struct SequenceIter {
    prev: GaussianInt,
    cur: GaussianInt,
    coeff: GaussianInt,
    emitted: usize,
}

impl Iterator for SequenceIter {
    type Item = GaussianInt;

    fn next(&mut self) -> Option<GaussianInt> {
        self.emitted += 1;
        if self.emitted == 1 {
            return Some(self.prev.clone());
        }
        if self.emitted == 2 {
            return Some(self.cur.clone());
        }
        let next = &(&self.coeff * &self.cur) - &self.prev;
        self.prev = std::mem::replace(&mut self.cur, next);
        Some(self.cur.clone())
    }
}

/// k is valid for the family (k ∉ {0, 1, −1}).
pub fn check_family_k(k: &GaussianInt) -> Result<(), PellError> {
    let one = GaussianInt::one();
    if k.is_zero() || k == &one || k == &-&one {
        return Err(PellError::DegenerateK);
    }
    Ok(())
}

/// |k| > 17, the validity region of the six-sequence description.
pub fn check_k_above_17(k: &GaussianInt) -> Result<(), PellError> {
    if k.norm() <= BigInt::from(289) {
        return Err(PellError::KTooSmall("|k| > 17"));
    }
    Ok(())
}

/// The family instance (16k³−4k)x² − (k−1)z² = 16k³−5k+1, i.e.
/// αz² − γx² = α − γ with α = k−1, γ = 16k³−4k, unit 4k²−2k−1.
pub fn family_e2(k: &GaussianInt) -> Result<PellEquation, PellError> {
    check_family_k(k)?;
    let one = GaussianInt::one();
    let alpha = k - &one;
    let k2 = k * k;
    let gamma = &k2.scale(16) * k - &k.scale(4);
    let unit = &(&k2.scale(4) - &k.scale(2)) - &one;
    PellEquation::new(alpha, gamma, unit)
}

/// The first family equation (k+1)x² − (k−1)y² = 2 in the same shape:
/// α = k+1 (x² slot), γ = k−1 (y² slot), unit k. Solutions come back as
/// (x_slot = y, z_slot = x).
pub fn family_e1(k: &GaussianInt) -> Result<PellEquation, PellError> {
    check_family_k(k)?;
    let one = GaussianInt::one();
    PellEquation::new(k + &one, k - &one, k.clone())
}

/// The six seed pairs (x₁, z₁) generating the W-sequences, in sequence
/// order j = 1..6. Each is an exact solution of the family equation for
/// every non-degenerate k.
pub fn family_w_seeds(k: &GaussianInt) -> Result<[(GaussianInt, GaussianInt); 6], PellError> {
    check_family_k(k)?;
    let one = GaussianInt::one();
    let k2 = k * k;
    // 4k² + 2k − 1 and 8k² − 1
    let z3 = &(&k2.scale(4) + &k.scale(2)) - &one;
    let z5 = &k2.scale(8) - &one;
    let two_k_less_1 = &k.scale(2) - &one;
    Ok([
        (one.clone(), one.clone()),
        (one.clone(), -&one),
        (k.clone(), z3.clone()),
        (k.clone(), -&z3),
        (two_k_less_1.clone(), z5.clone()),
        (two_k_less_1, -&z5),
    ])
}

/// W-sequence of x-components seeded by a solution of `eq`:
/// W₀ = x₁, W₁ = unit·x₁ + α·z₁, coefficient 2·unit.
pub fn w_spec_from_seed(eq: &PellEquation, seed: &(GaussianInt, GaussianInt)) -> SequenceSpec {
    let (x1, z1) = seed;
    SequenceSpec::new(
        x1.clone(),
        &(&eq.unit * x1) + &(&eq.alpha * z1),
        eq.unit.scale(2),
    )
}

/// The V sequence (x-components of the first equation) and the six
/// W-sequences of the second; requires |k| > 17 where the list is complete.
pub fn family_sequences(k: &GaussianInt) -> Result<(SequenceSpec, [SequenceSpec; 6]), PellError> {
    check_k_above_17(k)?;
    let eq2 = family_e2(k)?;
    let seeds = family_w_seeds(k)?;
    let one = GaussianInt::one();
    let v = SequenceSpec::new(one.clone(), &k.scale(2) - &one, k.scale(2));
    let w: Vec<SequenceSpec> = seeds.iter().map(|s| w_spec_from_seed(&eq2, s)).collect();
    debug_assert!(seeds.iter().all(|(x, z)| eq2.is_solution(x, z)));
    Ok((v, w.try_into().expect("exactly six")))
}

/// A coincidence V_n = sign · W_m^(j).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Match {
    pub n: usize,
    pub m: usize,
    /// Sequence number 1..6.
    pub j: usize,
    pub sign: i8,
}

/// All matches V_n = ±W_m^(j) with n ≤ n_max, m ≤ m_max, by hashing the
/// V-terms and probing every W-term exactly.
pub fn intersect_sequences(
    k: &GaussianInt,
    n_max: usize,
    m_max: usize,
) -> Result<Vec<Match>, PellError> {
    let (v, ws) = family_sequences(k)?;
    let mut v_index: HashMap<GaussianInt, Vec<usize>> = HashMap::new();
    for (n, term) in v.terms_up_to(n_max).into_iter().enumerate() {
        v_index.entry(term).or_default().push(n);
    }
    let mut matches = Vec::new();
    for (ji, w) in ws.iter().enumerate() {
        for (m, term) in w.terms_up_to(m_max).into_iter().enumerate() {
            if let Some(ns) = v_index.get(&term) {
                for &n in ns {
                    matches.push(Match { n, m, j: ji + 1, sign: 1 });
                }
            }
            if let Some(ns) = v_index.get(&-&term) {
                for &n in ns {
                    matches.push(Match { n, m, j: ji + 1, sign: -1 });
                }
            }
        }
    }
    matches.sort_by_key(|mt| (mt.j, mt.m, mt.n, mt.sign));
    matches.dedup();
    Ok(matches)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GrowthKind {
    V,
    W,
}

#[derive(Debug, Clone, Serialize)]
pub struct GrowthEntry {
    pub index: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GrowthReport {
    pub kind: GrowthKind,
    pub all_pass: bool,
    pub entries: Vec<GrowthEntry>,
}

/// Certify the modulus growth bounds along a sequence:
/// (2|k|−1)^n ≤ |V_n| ≤ (2|k|+1)^n for V (needs |k| > 2.5), and
/// |W_m| ≥ (8|k|²−4|k|−3)^(m−1) for W (needs |k| > 17).
pub fn growth_check(
    spec: &SequenceSpec,
    kind: GrowthKind,
    k: &GaussianInt,
    max_index: usize,
) -> Result<GrowthReport, PellError> {
    let norm_k = k.norm();
    match kind {
        GrowthKind::V => {
            // |k| > 2.5 <=> norm > 6.25 <=> norm ≥ 7
            if norm_k < BigInt::from(7) {
                return Err(PellError::KTooSmall("|k| > 2.5"));
            }
        }
        GrowthKind::W => check_k_above_17(k)?,
    }
    let prec = 96;
    let t = k.abs(prec);
    let one = RealInterval::from_int(1);
    let base_lo;
    let base_hi;
    match kind {
        GrowthKind::V => {
            base_lo = t.scale(&num_rational::BigRational::from_integer(2.into())).sub(&one);
            base_hi = t.scale(&num_rational::BigRational::from_integer(2.into())).add(&one);
        }
        GrowthKind::W => {
            // 8|k|² − 4|k| − 3
            let t2 = t.pow_i(2);
            base_lo = t2
                .scale(&num_rational::BigRational::from_integer(8.into()))
                .sub(&t.scale(&num_rational::BigRational::from_integer(4.into())))
                .sub(&RealInterval::from_int(3));
            base_hi = base_lo.clone();
        }
    }
    let mut entries = Vec::with_capacity(max_index + 1);
    let mut all_pass = true;
    for (idx, term) in spec.terms_up_to(max_index).into_iter().enumerate() {
        let mag = term.abs(prec);
        let pass = match kind {
            GrowthKind::V => {
                let lo_pow = base_lo.pow_i(idx as u32).round_out(prec);
                let hi_pow = base_hi.pow_i(idx as u32).round_out(prec);
                lo_pow.hi() <= mag.lo() && mag.hi() <= hi_pow.lo()
            }
            GrowthKind::W => {
                let needed = if idx == 0 {
                    base_lo.recip().round_out(prec)
                } else {
                    base_lo.pow_i(idx as u32 - 1).round_out(prec)
                };
                needed.hi() <= mag.lo()
            }
        };
        all_pass &= pass;
        entries.push(GrowthEntry { index: idx, pass });
    }
    Ok(GrowthReport { kind, all_pass, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    fn gi(re: i64) -> GaussianInt {
        GaussianInt::from_int(re)
    }

    fn eq_1_120() -> PellEquation {
        PellEquation::new(gi(1), gi(120), gi(11)).unwrap()
    }

    #[test]
    fn step_example() {
        let eq = eq_1_120();
        let (x, z) = step_solution(&eq, (&gi(1), &gi(1)), StepDirection::Forward).unwrap();
        assert_eq!((x.clone(), z.clone()), (gi(12), gi(131)));
        assert!(eq.is_solution(&x, &z));
        // 1·131² − 120·12² = −119 = α − γ
        assert_eq!(gi(131 * 131 - 120 * 144), eq.rhs());
    }

    #[test]
    fn step_rejects_non_solution() {
        let eq = eq_1_120();
        assert_eq!(
            step_solution(&eq, (&gi(0), &gi(0)), StepDirection::Forward),
            Err(PellError::NotASolution)
        );
    }

    #[test]
    fn backward_inverts_forward() {
        let eq = family_e2(&g(7, 4)).unwrap();
        let mut sol = (gi(1), gi(1));
        assert!(eq.is_solution(&sol.0, &sol.1));
        for _ in 0..20 {
            let fwd = step_solution(&eq, (&sol.0, &sol.1), StepDirection::Forward).unwrap();
            let back = step_solution(&eq, (&fwd.0, &fwd.1), StepDirection::Backward).unwrap();
            assert_eq!(back, sol);
            sol = fwd;
        }
    }

    #[test]
    fn enumerate_small_equation() {
        // disk bound 1·119/10 = 11.9: exactly the classes (1,±1), (2,±19), (3,±31)
        let eq = eq_1_120();
        let classes = enumerate_fundamental(&eq, None).unwrap();
        let set: Vec<(GaussianInt, GaussianInt)> =
            classes.iter().map(|c| (c.x0.clone(), c.z0.clone())).collect();
        let expect = vec![
            (gi(1), gi(-1)),
            (gi(1), gi(1)),
            (gi(2), gi(-19)),
            (gi(2), gi(19)),
            (gi(3), gi(-31)),
            (gi(3), gi(31)),
        ];
        assert_eq!(set, expect);
        for c in &classes {
            assert!(eq.is_solution(&c.x0, &c.z0));
        }
    }

    #[test]
    fn enumerate_family_k20() {
        let k = gi(20);
        let eq = family_e2(&k).unwrap();
        let classes = enumerate_fundamental(&eq, None).unwrap();
        let set: Vec<(GaussianInt, GaussianInt)> =
            classes.iter().map(|c| (c.x0.clone(), c.z0.clone())).collect();
        let expect = vec![
            (gi(1), gi(-1)),
            (gi(1), gi(1)),
            (gi(20), gi(-1639)),
            (gi(20), gi(1639)),
            (gi(39), gi(-3199)),
            (gi(39), gi(3199)),
        ];
        assert_eq!(set, expect);
    }

    #[test]
    fn budget_guard() {
        let eq = eq_1_120();
        assert!(matches!(
            enumerate_fundamental(&eq, Some(4)),
            Err(PellError::BoundOverflow { .. })
        ));
    }

    #[test]
    fn seeds_solve_for_random_k() {
        // symbolic identity test: (k, 4k²+2k−1) and friends solve the family
        // equation for a spread of Gaussian k
        let ks = [
            g(2, 0), g(-5, 0), g(7, 4), g(-3, 11), g(18, 5), g(0, 9),
            g(23, -14), g(-20, -7), g(100, 1), g(3, -18), g(2, 2), g(-1, 1),
            g(6, -6), g(40, 9), g(-31, 2), g(15, 15), g(9, -40), g(1, 4),
            g(-2, -9), g(12, 35),
        ];
        for k in &ks {
            let eq = family_e2(k).unwrap();
            for (x, z) in family_w_seeds(k).unwrap() {
                assert!(eq.is_solution(&x, &z), "seed failed for k={k}");
            }
        }
    }

    #[test]
    fn v_sequence_k2() {
        let v = SequenceSpec::new(gi(1), gi(3), gi(4));
        assert_eq!(
            v.terms_up_to(4),
            vec![gi(1), gi(3), gi(11), gi(41), gi(153)]
        );
        assert_eq!(v.term(0), gi(1));
    }

    #[test]
    fn v3_closed_form_random_k() {
        // V₃ = 8k³ − 4k² − 4k + 1
        let ks = [g(2, 0), g(5, -3), g(-7, 2), g(30, 17), g(0, 21), g(-9, -9)];
        for k in &ks {
            let one = GaussianInt::one();
            let v = SequenceSpec::new(one.clone(), &k.scale(2) - &one, k.scale(2));
            let k2 = k * k;
            let expect = &(&(&k2 * k).scale(8) - &k2.scale(4)) - &(&k.scale(4) - &one);
            assert_eq!(v.term(3), expect, "k={k}");
        }
    }

    #[test]
    fn family_sequences_k20_initials() {
        let (v, w) = family_sequences(&gi(20)).unwrap();
        assert_eq!((v.first.clone(), v.second.clone()), (gi(1), gi(39)));
        assert_eq!((w[0].first.clone(), w[0].second.clone()), (gi(1), gi(1578)));
        assert_eq!((w[3].first.clone(), w[3].second.clone()), (gi(20), gi(39)));
        assert_eq!((w[5].first.clone(), w[5].second.clone()), (gi(39), gi(20)));
        assert!(matches!(family_sequences(&gi(5)), Err(PellError::KTooSmall(_))));
    }

    #[test]
    fn intersections_k20() {
        let k = gi(20);
        let matches = intersect_sequences(&k, 6, 6).unwrap();
        // every match re-verifies exactly
        let (v, ws) = family_sequences(&k).unwrap();
        for mt in &matches {
            let vn = v.term(mt.n);
            let wm = ws[mt.j - 1].term(mt.m);
            let rhs = if mt.sign == 1 { wm } else { -&wm };
            assert_eq!(vn, rhs);
            assert!(mt.m <= mt.n && mt.n <= 3 * mt.m + 2, "index relation");
        }
        // matched V-values per sequence reproduce the known intersection lists
        let value = |mt: &Match| v.term(mt.n);
        let one = gi(1);
        let x39 = gi(39);
        let big = gi(62321); // 8k³−4k²−4k+1 at k=20
        let per_j: Vec<Vec<GaussianInt>> = (1..=6)
            .map(|j| {
                let mut vals: Vec<GaussianInt> =
                    matches.iter().filter(|mt| mt.j == j).map(value).collect();
                vals.sort_by_key(|g| g.norm_lex_key());
                vals.dedup();
                vals
            })
            .collect();
        assert_eq!(per_j[0], vec![one.clone()]);
        assert_eq!(per_j[1], vec![one.clone()]);
        assert_eq!(per_j[2], vec![big.clone()]);
        assert_eq!(per_j[3], vec![x39.clone()]);
        assert_eq!(per_j[4], vec![x39.clone()]);
        assert_eq!(per_j[5], vec![x39.clone(), big.clone()]);
    }

    #[test]
    fn intersections_complex_k() {
        // oracle: a scan at doubled bounds finds nothing beyond the small indices
        let k = g(18, 5);
        let small = intersect_sequences(&k, 6, 6).unwrap();
        let doubled = intersect_sequences(&k, 12, 12).unwrap();
        assert_eq!(small, doubled);
        assert!(!small.is_empty());
    }

    #[test]
    fn growth_checks() {
        let (v, ws) = family_sequences(&gi(20)).unwrap();
        let rep = growth_check(&v, GrowthKind::V, &gi(20), 30).unwrap();
        assert!(rep.all_pass);
        let k = g(3, 18);
        let (_, ws2) = family_sequences(&k).unwrap();
        let rep = growth_check(&ws2[2], GrowthKind::W, &k, 20).unwrap();
        assert!(rep.all_pass);
        let rep = growth_check(&ws[0], GrowthKind::W, &gi(20), 25).unwrap();
        assert!(rep.all_pass);
        assert!(matches!(
            growth_check(&v, GrowthKind::V, &g(1, 1), 5),
            Err(PellError::KTooSmall(_))
        ));
    }
}
