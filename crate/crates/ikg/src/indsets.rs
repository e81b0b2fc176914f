//! Enumeration of independent sets up to a cardinality bound, the
//! independence number, and the independence polynomial.
//!
//! Enumeration is a depth-first search that only ever extends a set with a
//! vertex greater than its current maximum and non-adjacent to all members,
//! so every independent set is produced exactly once. Families are stored in
//! canonical order: ascending by cardinality, then by numeric bit mask.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Default cap on the number of sets an enumeration may produce.
pub const DEFAULT_SET_CAP: usize = 1 << 22;

/// Raised when an enumeration would exceed its configured cap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("independent-set family exceeds the configured cap of {cap} sets")]
pub struct ResourceLimit {
    pub cap: usize,
}

/// All independent sets of a graph with cardinality at most `k`, in
/// canonical order, together with the inverse set-to-index map.
#[derive(Clone, Debug)]
pub struct IndSetFamily {
    sets: Vec<VertexSet>,
    index_of: HashMap<VertexSet, u32>,
    k: usize,
    includes_empty: bool,
}

impl IndSetFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn get(&self, index: usize) -> VertexSet {
        self.sets[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.sets.iter().copied()
    }

    /// Position of `set` in canonical order, if it is a member.
    pub fn index_of(&self, set: VertexSet) -> Option<u32> {
        self.index_of.get(&set).copied()
    }

    /// The cardinality bound the family was enumerated with.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn includes_empty(&self) -> bool {
        self.includes_empty
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !((1u64 << (v + 1)) - 1)
    }
}

/// Enumerates the independent sets of `g` with cardinality at most `k`.
///
/// The empty set is included iff `include_empty`. A `k` larger than the
/// independence number behaves exactly like `k` equal to it.
pub fn enumerate_independent_sets(
    g: &Graph,
    k: usize,
    include_empty: bool,
) -> Result<IndSetFamily, ResourceLimit> {
    enumerate_independent_sets_capped(g, k, include_empty, DEFAULT_SET_CAP)
}

/// [`enumerate_independent_sets`] with an explicit cap on the family size.
pub fn enumerate_independent_sets_capped(
    g: &Graph,
    k: usize,
    include_empty: bool,
    cap: usize,
) -> Result<IndSetFamily, ResourceLimit> {
    let mut sets = Vec::new();
    if include_empty {
        push_capped(&mut sets, VertexSet::EMPTY, cap)?;
    }
    if k > 0 {
        descend(g, VertexSet::EMPTY, full_mask(g.order()), k, cap, &mut sets)?;
    }
    sets.sort_unstable_by_key(|s| (s.len(), s.bits()));
    let index_of = sets
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, i as u32))
        .collect();
    Ok(IndSetFamily {
        sets,
        index_of,
        k,
        includes_empty: include_empty,
    })
}

fn push_capped(sets: &mut Vec<VertexSet>, s: VertexSet, cap: usize) -> Result<(), ResourceLimit> {
    if sets.len() >= cap {
        return Err(ResourceLimit { cap });
    }
    sets.push(s);
    Ok(())
}

fn descend(
    g: &Graph,
    current: VertexSet,
    candidates: u64,
    k: usize,
    cap: usize,
    sets: &mut Vec<VertexSet>,
) -> Result<(), ResourceLimit> {
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let extended = current.with(v);
        push_capped(sets, extended, cap)?;
        if extended.len() < k {
            let next = candidates & above(v) & !g.neighbors(v).bits();
            descend(g, extended, next, k, cap, sets)?;
        }
    }
    Ok(())
}

/// Maximum cardinality over all independent sets of `g`.
pub fn independence_number(g: &Graph) -> usize {
    fn search(g: &Graph, size: usize, candidates: u64, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        let mut rest = candidates;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return; // even taking every remaining candidate cannot improve
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            search(g, size + 1, rest & !g.neighbors(v).bits(), best);
        }
    }
    let mut best = 0;
    search(g, 0, full_mask(g.order()), &mut best);
    best
}

/// The independence polynomial: coefficient `j` counts the independent sets
/// of cardinality exactly `j`. Coefficients are exact big integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependencePolynomial {
    coeffs: Vec<BigUint>,
}

impl IndependencePolynomial {
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Degree of the polynomial, i.e. the independence number.
    pub fn alpha(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Exact value at an integer point, by Horner's rule.
    pub fn eval_at(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + BigInt::from(c.clone());
        }
        acc
    }

    /// Counts of independent sets of even and odd size, `(f0, f1)`.
    ///
    /// These satisfy `f0 - f1 = eval_at(-1)` and `f0 + f1 = eval_at(1)`.
    pub fn parity_counts(&self) -> (BigUint, BigUint) {
        let mut even = BigUint::ZERO;
        let mut odd = BigUint::ZERO;
        for (j, c) in self.coeffs.iter().enumerate() {
            if j % 2 == 0 {
                even += c;
            } else {
                odd += c;
            }
        }
        (even, odd)
    }
}

/// Computes the independence polynomial of `g`.
pub fn independence_polynomial(g: &Graph) -> Result<IndependencePolynomial, ResourceLimit> {
    independence_polynomial_capped(g, DEFAULT_SET_CAP)
}

/// [`independence_polynomial`] with an explicit cap on the number of
/// independent sets visited.
pub fn independence_polynomial_capped(
    g: &Graph,
    cap: usize,
) -> Result<IndependencePolynomial, ResourceLimit> {
    fn count(
        g: &Graph,
        size: usize,
        candidates: u64,
        counts: &mut Vec<u64>,
        visited: &mut usize,
        cap: usize,
    ) -> Result<(), ResourceLimit> {
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if *visited >= cap {
                return Err(ResourceLimit { cap });
            }
            *visited += 1;
            if counts.len() == size + 1 {
                counts.push(0);
            }
            counts[size + 1] += 1;
            count(g, size + 1, rest & !g.neighbors(v).bits(), counts, visited, cap)?;
        }
        Ok(())
    }

    let mut counts = vec![1u64]; // the empty set
    let mut visited = 1;
    if cap == 0 {
        return Err(ResourceLimit { cap });
    }
    count(g, 0, full_mask(g.order()), &mut counts, &mut visited, cap)?;
    Ok(IndependencePolynomial {
        coeffs: counts.into_iter().map(BigUint::from).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilyKind};
    use crate::verify::alternating_number_formula;

    fn family(kind: FamilyKind) -> Graph {
        make_family(&kind).unwrap()
    }

    /// Brute-force reference: filter the whole power set.
    fn subsets_by_filter(g: &Graph, k: usize, include_empty: bool) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for bits in 0..1u64 << g.order() {
            let s = VertexSet::from_bits(bits);
            if (include_empty || !s.is_empty())
                && s.len() <= k
                && g.is_independent(s).unwrap()
            {
                out.push(s);
            }
        }
        out.sort_unstable_by_key(|s| (s.len(), s.bits()));
        out
    }

    #[test]
    fn star_family_has_nine_sets() {
        let g = family(FamilyKind::Star(3));
        let fam = enumerate_independent_sets(&g, 3, true).unwrap();
        assert_eq!(fam.len(), 9);
    }

    #[test]
    fn k_zero_is_just_the_empty_set() {
        let g = family(FamilyKind::Cycle(5));
        let fam = enumerate_independent_sets(&g, 0, true).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam.get(0), VertexSet::EMPTY);
    }

    #[test]
    fn p5_without_empty_has_twelve_sets() {
        let g = family(FamilyKind::Path(5));
        let fam = enumerate_independent_sets(&g, 3, false).unwrap();
        assert_eq!(fam.len(), 12);
    }

    #[test]
    fn enumeration_matches_power_set_filter() {
        let graphs = [
            family(FamilyKind::Path(6)),
            family(FamilyKind::Cycle(6)),
            family(FamilyKind::Star(4)),
            family(FamilyKind::Wheel(6)),
            family(FamilyKind::CompleteMultipartite(vec![2, 3])),
        ];
        for g in &graphs {
            for k in 0..=g.order() {
                for include_empty in [true, false] {
                    let fam = enumerate_independent_sets(g, k, include_empty).unwrap();
                    let expect = subsets_by_filter(g, k, include_empty);
                    assert_eq!(fam.iter().collect::<Vec<_>>(), expect);
                }
            }
        }
    }

    #[test]
    fn canonical_order_and_index_map() {
        let g = family(FamilyKind::Path(6));
        let fam = enumerate_independent_sets(&g, 6, true).unwrap();
        for i in 1..fam.len() {
            let (a, b) = (fam.get(i - 1), fam.get(i));
            assert!((a.len(), a.bits()) < (b.len(), b.bits()));
        }
        for (i, s) in fam.iter().enumerate() {
            assert_eq!(fam.index_of(s), Some(i as u32));
        }
        assert_eq!(fam.index_of(VertexSet::from_iter([0, 1])), None);
    }

    #[test]
    fn downward_closure() {
        let g = family(FamilyKind::Wheel(7));
        let fam = enumerate_independent_sets(&g, g.order(), true).unwrap();
        for s in fam.iter() {
            for v in s.iter() {
                assert!(fam.index_of(s.without(v)).is_some());
            }
        }
    }

    #[test]
    fn k_beyond_alpha_is_clamped() {
        let g = family(FamilyKind::Cycle(7));
        let alpha = independence_number(&g);
        let at_alpha = enumerate_independent_sets(&g, alpha, true).unwrap();
        let beyond = enumerate_independent_sets(&g, 99, true).unwrap();
        assert_eq!(
            at_alpha.iter().collect::<Vec<_>>(),
            beyond.iter().collect::<Vec<_>>()
        );
    }

    #[test]
    fn resource_limit_is_enforced() {
        let g = family(FamilyKind::EmptyGraph(10));
        let res = enumerate_independent_sets_capped(&g, 10, true, 100);
        assert_eq!(res.err(), Some(ResourceLimit { cap: 100 }));
        assert!(independence_polynomial_capped(&g, 100).is_err());
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(independence_number(&family(FamilyKind::Complete(7))), 1);
        assert_eq!(independence_number(&family(FamilyKind::EmptyGraph(9))), 9);
        assert_eq!(independence_number(&family(FamilyKind::Path(5))), 3);
    }

    #[test]
    fn polynomial_coefficients() {
        let k5 = independence_polynomial(&family(FamilyKind::Complete(5))).unwrap();
        assert_eq!(k5.coeffs(), &[BigUint::from(1u32), BigUint::from(5u32)]);
        let c4 = independence_polynomial(&family(FamilyKind::Cycle(4))).unwrap();
        let want: Vec<BigUint> = [1u32, 4, 2].iter().map(|&c| c.into()).collect();
        assert_eq!(c4.coeffs(), &want[..]);
        let p5 = independence_polynomial(&family(FamilyKind::Path(5))).unwrap();
        let want: Vec<BigUint> = [1u32, 5, 6, 1].iter().map(|&c| c.into()).collect();
        assert_eq!(p5.coeffs(), &want[..]);
    }

    #[test]
    fn polynomial_shape_invariants() {
        for kind in [
            FamilyKind::Path(9),
            FamilyKind::Cycle(8),
            FamilyKind::Star(6),
            FamilyKind::Wheel(9),
        ] {
            let g = family(kind);
            let p = independence_polynomial(&g).unwrap();
            assert_eq!(p.coeffs()[0], BigUint::from(1u32));
            assert_eq!(p.coeffs()[1], BigUint::from(g.order()));
            assert!(*p.coeffs().last().unwrap() >= BigUint::from(1u32));
            assert_eq!(p.alpha(), independence_number(&g));
        }
    }

    #[test]
    fn polynomial_counts_match_enumeration() {
        let g = family(FamilyKind::Wheel(8));
        let p = independence_polynomial(&g).unwrap();
        let fam = enumerate_independent_sets(&g, p.alpha(), true).unwrap();
        let total: BigUint = p.coeffs().iter().sum();
        assert_eq!(total, BigUint::from(fam.len()));
        for (j, c) in p.coeffs().iter().enumerate() {
            let count = fam.iter().filter(|s| s.len() == j).count();
            assert_eq!(*c, BigUint::from(count));
        }
    }

    #[test]
    fn evaluation() {
        let kn = independence_polynomial(&family(FamilyKind::Complete(6))).unwrap();
        assert_eq!(kn.eval_at(1), BigInt::from(7));
        assert_eq!(kn.eval_at(0), BigInt::from(1));
        let c4 = independence_polynomial(&family(FamilyKind::Cycle(4))).unwrap();
        assert_eq!(c4.eval_at(-1), BigInt::from(-1));
    }

    #[test]
    fn parity_counts_and_identities() {
        let star = independence_polynomial(&family(FamilyKind::Star(3))).unwrap();
        assert_eq!(
            star.parity_counts(),
            (BigUint::from(4u32), BigUint::from(5u32))
        );
        let k5 = independence_polynomial(&family(FamilyKind::Complete(5))).unwrap();
        assert_eq!(
            k5.parity_counts(),
            (BigUint::from(1u32), BigUint::from(5u32))
        );
        let p4 = independence_polynomial(&family(FamilyKind::Path(4))).unwrap();
        assert_eq!(
            p4.parity_counts(),
            (BigUint::from(4u32), BigUint::from(4u32))
        );

        for kind in [FamilyKind::Path(8), FamilyKind::Wheel(7), FamilyKind::Cycle(9)] {
            let p = independence_polynomial(&family(kind)).unwrap();
            let (f0, f1) = p.parity_counts();
            let (f0, f1) = (BigInt::from(f0), BigInt::from(f1));
            assert_eq!(&f0 - &f1, p.eval_at(-1));
            assert_eq!(&f0 + &f1, p.eval_at(1));
        }
    }

    #[test]
    fn alternating_numbers_match_closed_forms() {
        for n in 1..=10 {
            let p = independence_polynomial(&family(FamilyKind::Path(n))).unwrap();
            let want = alternating_number_formula(&FamilyKind::Path(n)).unwrap();
            assert_eq!(p.eval_at(-1), BigInt::from(want), "path({n})");
        }
        for n in 3..=10 {
            let p = independence_polynomial(&family(FamilyKind::Cycle(n))).unwrap();
            let want = alternating_number_formula(&FamilyKind::Cycle(n)).unwrap();
            assert_eq!(p.eval_at(-1), BigInt::from(want), "cycle({n})");
        }
        for n in 4..=10 {
            let p = independence_polynomial(&family(FamilyKind::Wheel(n))).unwrap();
            let want = alternating_number_formula(&FamilyKind::Wheel(n)).unwrap();
            assert_eq!(p.eval_at(-1), BigInt::from(want), "wheel({n})");
        }
    }
}
