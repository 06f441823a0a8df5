//! Diophantine m-tuples in ℤ[i]: verification with explicit square-root
//! witnesses, the parametric triple {k−1, k+1, 16k³−4k}, and the search
//! for fourth elements d.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::gint::{GaussianInt, GintError};
use crate::pell::{
    self, check_family_k, enumerate_fundamental, family_e1, family_w_seeds, step_solution,
    PellError, SequenceSpec, StepDirection,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TupleError {
    #[error("tuple contains zero")]
    ContainsZero,
    #[error("tuple contains a duplicate element")]
    DuplicateElement,
    #[error("product of elements {0} and {1} plus one is not a square")]
    NotSquare(usize, usize),
    #[error("k in {{0, 1, -1}} degenerates the triple")]
    DegenerateK,
    #[error("index bound below 2 cannot recover the small extension")]
    IndexBoundTooSmall,
    #[error(transparent)]
    Pell(#[from] PellError),
    #[error(transparent)]
    Gint(#[from] GintError),
}

/// A verified tuple: every pairwise product plus one carries its principal
/// square-root witness, keyed by the index pair.
#[derive(Debug, Clone, Serialize)]
pub struct DioTuple {
    pub elements: Vec<GaussianInt>,
    pub witnesses: BTreeMap<(usize, usize), GaussianInt>,
}

/// Check the m-tuple property, returning witnesses or the first offending
/// pair. Zero and duplicate elements are rejected before any arithmetic.
pub fn verify_tuple(elements: &[GaussianInt]) -> Result<DioTuple, TupleError> {
    if elements.iter().any(GaussianInt::is_zero) {
        return Err(TupleError::ContainsZero);
    }
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            if elements[i] == elements[j] {
                return Err(TupleError::DuplicateElement);
            }
        }
    }
    let mut witnesses = BTreeMap::new();
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            let prod = &(&elements[i] * &elements[j]) + &GaussianInt::one();
            match prod.sqrt_exact() {
                Some(w) => {
                    witnesses.insert((i, j), w);
                }
                None => return Err(TupleError::NotSquare(i, j)),
            }
        }
    }
    Ok(DioTuple { elements: elements.to_vec(), witnesses })
}

/// The triple {k−1, k+1, 16k³−4k} with its pairwise witnesses
/// r = k, s = 4k²−2k−1, t = 4k²+2k−1 (formula values, not normalized).
#[derive(Debug, Clone, Serialize)]
pub struct FamilyTriple {
    pub k: GaussianInt,
    pub a: GaussianInt,
    pub b: GaussianInt,
    pub c: GaussianInt,
    pub r: GaussianInt,
    pub s: GaussianInt,
    pub t: GaussianInt,
}

pub fn family_triple(k: &GaussianInt) -> Result<FamilyTriple, TupleError> {
    check_family_k(k).map_err(|_| TupleError::DegenerateK)?;
    let one = GaussianInt::one();
    let k2 = k * k;
    let a = k - &one;
    let b = k + &one;
    let c = &(&k2 * k).scale(16) - &k.scale(4);
    let r = k.clone();
    let s = &(&k2.scale(4) - &k.scale(2)) - &one;
    let t = &(&k2.scale(4) + &k.scale(2)) - &one;
    // identities ab+1 = r², ac+1 = s², bc+1 = t², re-verified through the
    // square-root path up to the principal branch
    debug_assert_eq!(&(&a * &b) + &one, &r * &r);
    assert_eq!((&(&a * &c) + &one).sqrt_exact(), Some(s.principal()));
    assert_eq!((&(&b * &c) + &one).sqrt_exact(), Some(t.principal()));
    verify_tuple(&[a.clone(), b.clone(), c.clone()])?;
    Ok(FamilyTriple { k: k.clone(), a, b, c, r, s, t })
}

/// The two known nonzero extensions 4k and 64k⁵ − 48k³ + 8k, each
/// re-verified to extend the triple to a quadruple.
pub fn known_extensions(k: &GaussianInt) -> Result<Vec<GaussianInt>, TupleError> {
    let triple = family_triple(k)?;
    let k2 = k * k;
    let k3 = &k2 * k;
    let k5 = &k3 * &k2;
    let d1 = k.scale(4);
    let d2 = &(&k5.scale(64) - &k3.scale(48)) + &k.scale(8);
    for d in [&d1, &d2] {
        verify_tuple(&[triple.a.clone(), triple.b.clone(), triple.c.clone(), d.clone()])?;
    }
    Ok(vec![d1, d2])
}

/// Where a candidate x came from: a named sequence, an index, and a sign.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Provenance {
    pub sequence: String,
    pub index: usize,
    pub sign: i8,
}

#[derive(Debug, Clone, Serialize)]
pub struct Extension {
    pub d: GaussianInt,
    pub provenance: Vec<Provenance>,
}

/// Search for extensions d of the family triple.
///
/// Candidate x-values are generated from the orbits of all fundamental
/// solutions of (k+1)x² − (k−1)y² = 2 (complete for every non-degenerate k,
/// not just the |k| > 3 region where those orbits collapse to ±V_n), each d
/// = (x²−1)/(k−1) is kept only when the full quadruple verifies, and the
/// result is deduplicated by d. Provenance lists every V/W term equal to
/// ±x up to the index bound.
pub fn extend_search(k: &GaussianInt, index_bound: usize) -> Result<Vec<Extension>, TupleError> {
    if index_bound < 2 {
        return Err(TupleError::IndexBoundTooSmall);
    }
    let triple = family_triple(k)?;
    let eq1 = family_e1(k)?;
    // for k = ±i the first equation's unit is a root of unity and the
    // fundamental disk degenerates; the V/W candidates below still apply
    let classes = match enumerate_fundamental(&eq1, None) {
        Ok(c) => c,
        Err(PellError::InvalidEquation(_)) => Vec::new(),
        Err(e) => return Err(e.into()),
    };

    // x lives in the z-slot of the e1 orbit; walk each class forward
    let mut candidates: Vec<GaussianInt> = Vec::new();
    for class in &classes {
        let mut sol = (class.x0.clone(), class.z0.clone());
        for _ in 0..=index_bound {
            candidates.push(sol.1.clone());
            sol = step_solution(&eq1, (&sol.0, &sol.1), StepDirection::Forward)?;
        }
    }
    // the V and W sequences reproduce the same values when |k| > 3; adding
    // them keeps the candidate set closed over both descriptions
    let one = GaussianInt::one();
    let v_spec = SequenceSpec::new(one.clone(), &k.scale(2) - &one, k.scale(2));
    candidates.extend(v_spec.terms_up_to(index_bound));
    let eq2 = pell::family_e2(k)?;
    for seed in family_w_seeds(k)? {
        candidates.extend(pell::w_spec_from_seed(&eq2, &seed).terms_up_to(index_bound));
    }
    candidates = candidates.into_iter().map(|x| x.principal()).collect();
    candidates.sort_by_key(GaussianInt::norm_lex_key);
    candidates.dedup();

    let verified: Vec<(GaussianInt, GaussianInt)> = candidates
        .into_par_iter()
        .filter_map(|x| {
            let num = &(&x * &x) - &one;
            let (d, rem) = num.divrem(&triple.a).ok()?;
            if !rem.is_zero() || d.is_zero() {
                return None;
            }
            verify_tuple(&[triple.a.clone(), triple.b.clone(), triple.c.clone(), d.clone()])
                .ok()
                .map(|_| (d, x))
        })
        .collect();

    let mut by_d: BTreeMap<(num_bigint::BigInt, num_bigint::BigInt, num_bigint::BigInt), Extension> =
        BTreeMap::new();
    let provenance_sources = provenance_table(k, index_bound)?;
    for (d, x) in verified {
        let mut prov: Vec<Provenance> = provenance_sources
            .iter()
            .flat_map(|(name, terms)| {
                terms.iter().enumerate().filter_map(|(idx, term)| {
                    if term == &x {
                        Some(Provenance { sequence: name.clone(), index: idx, sign: 1 })
                    } else if &-term == &x {
                        Some(Provenance { sequence: name.clone(), index: idx, sign: -1 })
                    } else {
                        None
                    }
                })
            })
            .collect();
        prov.sort();
        prov.dedup();
        let entry = by_d
            .entry(d.norm_lex_key())
            .or_insert_with(|| Extension { d: d.clone(), provenance: vec![] });
        entry.provenance.extend(prov);
        entry.provenance.sort();
        entry.provenance.dedup();
    }
    Ok(by_d.into_values().collect())
}

fn provenance_table(
    k: &GaussianInt,
    index_bound: usize,
) -> Result<Vec<(String, Vec<GaussianInt>)>, TupleError> {
    let one = GaussianInt::one();
    let v_spec = SequenceSpec::new(one.clone(), &k.scale(2) - &one, k.scale(2));
    let mut out = vec![("V".to_string(), v_spec.terms_up_to(index_bound))];
    let eq2 = pell::family_e2(k)?;
    for (ji, seed) in family_w_seeds(k)?.iter().enumerate() {
        out.push((
            format!("W{}", ji + 1),
            pell::w_spec_from_seed(&eq2, seed).terms_up_to(index_bound),
        ));
    }
    Ok(out)
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

    #[test]
    fn verify_classic_triple() {
        let t = verify_tuple(&[gi(1), gi(3), gi(120)]).unwrap();
        assert_eq!(t.witnesses[&(0, 1)], gi(2));
        assert_eq!(t.witnesses[&(0, 2)], gi(11));
        assert_eq!(t.witnesses[&(1, 2)], gi(19));
    }

    #[test]
    fn verify_gaussian_triple() {
        let t = verify_tuple(&[g(-1, 1), g(1, 1), g(0, -20)]).unwrap();
        // (i−1)(i+1)+1 = −1 = i², principal witness i
        assert_eq!(t.witnesses[&(0, 1)], g(0, 1));
        assert_eq!(t.witnesses[&(0, 2)], g(5, 2));
        assert_eq!(t.witnesses[&(1, 2)], g(5, -2));
    }

    #[test]
    fn verify_rejections() {
        assert!(matches!(
            verify_tuple(&[gi(1), gi(3), gi(5)]),
            Err(TupleError::NotSquare(0, 2))
        ));
        assert!(matches!(
            verify_tuple(&[gi(1), gi(0), gi(3)]),
            Err(TupleError::ContainsZero)
        ));
        assert!(matches!(
            verify_tuple(&[gi(3), gi(3)]),
            Err(TupleError::DuplicateElement)
        ));
    }

    #[test]
    fn family_k2() {
        let t = family_triple(&gi(2)).unwrap();
        assert_eq!(
            (t.a, t.b, t.c, t.r, t.s, t.t),
            (gi(1), gi(3), gi(120), gi(2), gi(11), gi(19))
        );
    }

    #[test]
    fn family_k_i() {
        let t = family_triple(&g(0, 1)).unwrap();
        assert_eq!(t.a, g(-1, 1));
        assert_eq!(t.b, g(1, 1));
        assert_eq!(t.c, g(0, -20));
        assert_eq!(t.s, g(-5, -2));
        assert_eq!(t.t, g(-5, 2));
    }

    #[test]
    fn third_witness_sign_pinned() {
        // (k+1)(16k³−4k)+1 = (4k²+2k−1)²: the −1 tail is forced, a +1 tail
        // fails; checked exactly across a spread of k
        for k in [gi(2), gi(-7), g(5, 3), g(-4, 9), g(0, 6), g(30, 17)] {
            let t = family_triple(&k).unwrap();
            let one = GaussianInt::one();
            let bc1 = &(&t.b * &t.c) + &one;
            assert_eq!(bc1, &t.t * &t.t);
            let wrong = &t.t + &GaussianInt::from_int(2); // 4k²+2k+1
            assert_ne!(bc1, &wrong * &wrong, "k={k}");
        }
    }

    #[test]
    fn family_degenerate() {
        assert!(matches!(family_triple(&gi(1)), Err(TupleError::DegenerateK)));
        assert!(matches!(family_triple(&gi(0)), Err(TupleError::DegenerateK)));
        assert!(matches!(family_triple(&gi(-1)), Err(TupleError::DegenerateK)));
    }

    #[test]
    fn known_extensions_examples() {
        assert_eq!(known_extensions(&gi(2)).unwrap(), vec![gi(8), gi(1680)]);
        // odd symmetry
        assert_eq!(known_extensions(&gi(-2)).unwrap(), vec![gi(-8), gi(-1680)]);
        // k = i: 64i⁵ − 48i³ + 8i = 120i
        assert_eq!(
            known_extensions(&g(0, 1)).unwrap(),
            vec![g(0, 4), g(0, 120)]
        );
        // the witness for 120·1680+1
        let sq = (&(&gi(120) * &gi(1680)) + &GaussianInt::one()).sqrt_exact();
        assert_eq!(sq, Some(gi(449)));
    }

    #[test]
    fn extend_search_k2() {
        let found = extend_search(&gi(2), 4).unwrap();
        let ds: Vec<GaussianInt> = found.iter().map(|e| e.d.clone()).collect();
        assert_eq!(ds, vec![gi(8), gi(1680)]);
        // d = 8 arises from V₁ and W₁ of the fourth sequence, both equal to 3
        let p8 = &found[0].provenance;
        assert!(p8.contains(&Provenance { sequence: "V".into(), index: 1, sign: 1 }));
        assert!(p8.contains(&Provenance { sequence: "W4".into(), index: 1, sign: 1 }));
        let p1680 = &found[1].provenance;
        assert!(p1680.contains(&Provenance { sequence: "V".into(), index: 3, sign: 1 }));
    }

    #[test]
    fn extend_search_k20_exact() {
        let found = extend_search(&gi(20), 4).unwrap();
        let ds: Vec<GaussianInt> = found.iter().map(|e| e.d.clone()).collect();
        assert_eq!(ds, vec![gi(80), gi(204_416_160)]);
    }

    #[test]
    fn extend_search_guards() {
        assert!(matches!(extend_search(&gi(2), 1), Err(TupleError::IndexBoundTooSmall)));
        assert!(matches!(extend_search(&gi(1), 4), Err(TupleError::DegenerateK)));
    }

    #[test]
    fn extend_search_never_returns_zero_or_invalid() {
        for k in [gi(5), g(4, 3), g(-6, 1), g(0, 5)] {
            let t = family_triple(&k).unwrap();
            for ext in extend_search(&k, 5).unwrap() {
                assert!(!ext.d.is_zero());
                verify_tuple(&[t.a.clone(), t.b.clone(), t.c.clone(), ext.d.clone()]).unwrap();
            }
        }
    }
}
