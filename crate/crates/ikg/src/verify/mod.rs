//! Machine-checks a catalog of sixteen structural claims about
//! reconfiguration graphs against generated families and seeded random
//! graphs, producing claim-by-claim results.
//!
//! | id  | claim |
//! |-----|-------|
//! | C1  | the 1-bounded reconfiguration graph is a star |
//! | C2  | connected for every bound k >= 1 (empty set included) |
//! | C3  | label-cardinality parity is a proper 2-coloring |
//! | C4  | not regular whenever the base graph has an edge (k >= 1) |
//! | C5  | maximum degree equals the base-graph order (k >= 1) |
//! | C6  | order is at least base order + 1, so never isomorphic to the base |
//! | C7  | girth exactly 4 when the base is not complete and k >= 2 |
//! | C8  | not a tree when the base is not complete and k >= 2 |
//! | C9  | order at the independence bound equals the polynomial at 1 |
//! | C10 | star parity classes have sizes 2^(n-1) and 2^(n-1)+1 |
//! | C11 | the full star reconfiguration graph is not Hamiltonian |
//! | C12 | minimum degree for the path family equals floor(n/2) |
//! | C13 | alternating numbers of paths/cycles/wheels match closed forms |
//! | C14 | full reconfiguration graphs of paths of order 3m-1 or 3m, cycles, and wheels are not Hamiltonian |
//! | C15 | a dominating vertex isolates its singleton once the empty set is removed |
//! | C16 | complete multipartite graphs split into one component per part (empty set removed) |
//!
//! Claims C12 and C14 are recorded exactly as cataloged even though the
//! checker itself refutes parts of them: the C12 formula fails for orders
//! 1, 6, and most orders of 8 and up (the true minimum degree is
//! ceil(n/3), attained by a smallest maximal independent set), and the
//! wheels of order 6, 8, and 12 have equal parity classes, so their
//! non-Hamiltonicity is established by exhaustive search rather than the
//! parity obstruction. A failed claim is a finding, not a checker error.

mod detect;
mod formulas;
mod rng;
mod sweep;

pub use detect::{detect_family, dominating_vertex};
pub use formulas::alternating_number_formula;
pub use rng::{random_graph, Lcg};
pub use sweep::{sweep_families, ClaimCounts, SweepSummary};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::analysis::{
    components, degree_profile, forest_status, girth, hamiltonicity, is_star_shape,
    parity_bipartition, HamStatus, DEFAULT_NODE_BUDGET,
};
use crate::graph::{FamilyKind, Graph};
use crate::indsets::{independence_number, independence_polynomial};
use crate::recon::{build_recon, ReconGraph};

/// Identifiers of the cataloged claims, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
    C13,
    C14,
    C15,
    C16,
}

impl ClaimId {
    pub const ALL: [ClaimId; 16] = [
        ClaimId::C1,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::C4,
        ClaimId::C5,
        ClaimId::C6,
        ClaimId::C7,
        ClaimId::C8,
        ClaimId::C9,
        ClaimId::C10,
        ClaimId::C11,
        ClaimId::C12,
        ClaimId::C13,
        ClaimId::C14,
        ClaimId::C15,
        ClaimId::C16,
    ];

    pub fn description(self) -> &'static str {
        match self {
            ClaimId::C1 => "bound-1 reconfiguration graph is a star",
            ClaimId::C2 => "connected with the empty set included (k >= 1)",
            ClaimId::C3 => "cardinality parity is a proper 2-coloring",
            ClaimId::C4 => "not regular when the base graph has an edge",
            ClaimId::C5 => "maximum degree equals the base order",
            ClaimId::C6 => "order exceeds the base order, never isomorphic to the base",
            ClaimId::C7 => "girth exactly 4 when the base is not complete and k >= 2",
            ClaimId::C8 => "not a tree when the base is not complete and k >= 2",
            ClaimId::C9 => "order at the independence bound equals the polynomial at 1",
            ClaimId::C10 => "star parity classes have sizes 2^(n-1) and 2^(n-1)+1",
            ClaimId::C11 => "full star reconfiguration graph is not Hamiltonian",
            ClaimId::C12 => "path family minimum degree equals floor(n/2)",
            ClaimId::C13 => "alternating numbers match the closed forms",
            ClaimId::C14 => "path (3m-1, 3m), cycle, and wheel families are not Hamiltonian",
            ClaimId::C15 => "a dominating vertex isolates its singleton without the empty set",
            ClaimId::C16 => "complete multipartite: one component per part without the empty set",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", *self as usize + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
}

impl FromStr for ClaimId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<ClaimId, VerifyError> {
        ClaimId::ALL
            .iter()
            .copied()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| VerifyError::UnknownClaim(s.to_string()))
    }
}

/// Result of checking one claim on one instance.
///
/// `holds` is meaningful only when `applicable` is true and `error` is
/// empty; inapplicable instances are vacuous. `error` records per-instance
/// failures to evaluate (resource caps, exhausted search budgets) that are
/// neither passes nor refutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim_id: ClaimId,
    pub instance: String,
    pub applicable: bool,
    pub holds: bool,
    pub details: String,
    pub error: Option<String>,
}

enum Outcome {
    Vacuous(String),
    Pass(String),
    Fail(String),
    Error(String),
}

use Outcome::{Fail, Pass, Vacuous};

/// Checks a single claim on `(g, k)`. Hypotheses are auto-detected from the
/// graph's structure; see [`detect_family`] for how family overlaps are
/// resolved.
pub fn check_claim(claim_id: ClaimId, g: &Graph, k: usize) -> ClaimResult {
    let kind = detect_family(g);
    let instance = instance_label(g, kind.as_ref(), k);
    check_claim_with(claim_id, g, k, kind.as_ref(), &instance)
}

/// Checks every cataloged claim on `(g, k)`, in order C1..C16.
pub fn check_all(g: &Graph, k: usize) -> Vec<ClaimResult> {
    let kind = detect_family(g);
    let instance = instance_label(g, kind.as_ref(), k);
    ClaimId::ALL
        .iter()
        .map(|&c| check_claim_with(c, g, k, kind.as_ref(), &instance))
        .collect()
}

fn instance_label(g: &Graph, kind: Option<&FamilyKind>, k: usize) -> String {
    match kind {
        Some(kind) => format!("{kind}, k={k}"),
        None => format!("graph(n={}, m={}), k={k}", g.order(), g.size()),
    }
}

pub(crate) fn check_claim_with(
    claim_id: ClaimId,
    g: &Graph,
    k: usize,
    kind: Option<&FamilyKind>,
    instance: &str,
) -> ClaimResult {
    let outcome = evaluate(claim_id, g, k, kind);
    let (applicable, holds, details, error) = match outcome {
        Vacuous(why) => (false, false, format!("vacuous: {why}"), None),
        Pass(details) => (true, true, details, None),
        Fail(details) => (true, false, details, None),
        Outcome::Error(why) => (true, false, String::new(), Some(why)),
    };
    ClaimResult {
        claim_id,
        instance: instance.to_string(),
        applicable,
        holds,
        details,
        error,
    }
}

fn evaluate(claim_id: ClaimId, g: &Graph, k: usize, kind: Option<&FamilyKind>) -> Outcome {
    match claim_id {
        ClaimId::C1 => match recon(g, 1, true) {
            Err(e) => e,
            Ok(r) => verdict(
                is_star_shape(&r),
                format!("order {} graph, star shape", r.order()),
            ),
        },
        ClaimId::C2 => {
            if k == 0 {
                return Vacuous("k = 0".into());
            }
            match recon(g, k, true) {
                Err(e) => e,
                Ok(r) => {
                    let count = components(&r).count;
                    verdict(count == 1, format!("components: {count}"))
                }
            }
        }
        ClaimId::C3 => match recon(g, k, true) {
            Err(e) => e,
            Ok(r) => {
                let parity = parity_bipartition(&r);
                verdict(
                    parity.is_valid,
                    format!("parts ({}, {})", parity.even, parity.odd),
                )
            }
        },
        ClaimId::C4 => {
            if g.is_edgeless() {
                return Vacuous("base graph has no edges".into());
            }
            if k == 0 {
                return Vacuous("k = 0".into());
            }
            match recon(g, k, true) {
                Err(e) => e,
                Ok(r) => {
                    let profile = degree_profile(&r).expect("non-empty: contains the empty set");
                    verdict(
                        !profile.is_regular,
                        format!("degrees in [{}, {}]", profile.min, profile.max),
                    )
                }
            }
        }
        ClaimId::C5 => {
            if k == 0 {
                return Vacuous("k = 0".into());
            }
            match recon(g, k, true) {
                Err(e) => e,
                Ok(r) => {
                    let max = degree_profile(&r)
                        .expect("non-empty: contains the empty set")
                        .max;
                    verdict(
                        max == g.order(),
                        format!("max degree {max}, base order {}", g.order()),
                    )
                }
            }
        }
        ClaimId::C6 => {
            if k == 0 {
                return Vacuous("k = 0".into());
            }
            match recon(g, k, true) {
                Err(e) => e,
                Ok(r) => verdict(
                    r.order() > g.order(),
                    format!("order {} vs base {}", r.order(), g.order()),
                ),
            }
        }
        ClaimId::C7 | ClaimId::C8 => {
            if g.is_complete() {
                return Vacuous("base graph is complete".into());
            }
            if k < 2 {
                return Vacuous("k < 2".into());
            }
            match recon(g, k, true) {
                Err(e) => e,
                Ok(r) => {
                    if claim_id == ClaimId::C7 {
                        let got = girth(&r);
                        verdict(got == Some(4), format!("girth {got:?}"))
                    } else {
                        let status = forest_status(&r);
                        verdict(!status.is_tree, format!("tree: {}", status.is_tree))
                    }
                }
            }
        }
        ClaimId::C9 => {
            let alpha = independence_number(g);
            if k < alpha {
                return Vacuous(format!("k = {k} below the independence number {alpha}"));
            }
            let p = match independence_polynomial(g) {
                Ok(p) => p,
                Err(e) => return Outcome::Error(e.to_string()),
            };
            match recon(g, alpha, true) {
                Err(e) => e,
                Ok(r) => {
                    let at_one = p.eval_at(1);
                    verdict(
                        BigInt::from(r.order()) == at_one,
                        format!("order {} vs polynomial at 1 = {at_one}", r.order()),
                    )
                }
            }
        }
        ClaimId::C10 | ClaimId::C11 => {
            let leaves = match kind {
                Some(&FamilyKind::Star(leaves)) => leaves,
                _ => return Vacuous("not a star".into()),
            };
            if k != leaves {
                return Vacuous(format!("k = {k} differs from the leaf count {leaves}"));
            }
            let r = match recon(g, leaves, true) {
                Err(e) => return e,
                Ok(r) => r,
            };
            if claim_id == ClaimId::C10 {
                let parity = parity_bipartition(&r);
                let expect_even = 1u128 << (leaves - 1);
                verdict(
                    parity.even as u128 == expect_even && parity.odd as u128 == expect_even + 1,
                    format!(
                        "parts ({}, {}), expected ({expect_even}, {})",
                        parity.even,
                        parity.odd,
                        expect_even + 1
                    ),
                )
            } else {
                hamiltonicity_refuted(&r)
            }
        }
        ClaimId::C12 => {
            let n = match kind {
                Some(&FamilyKind::Path(n)) => n,
                _ => return Vacuous("not a path".into()),
            };
            let alpha = independence_number(g);
            if k < alpha {
                return Vacuous(format!("k = {k} below the independence number {alpha}"));
            }
            match recon(g, alpha, true) {
                Err(e) => e,
                Ok(r) => {
                    let min = degree_profile(&r)
                        .expect("non-empty: contains the empty set")
                        .min;
                    verdict(
                        min == n / 2,
                        format!("min degree {min}, claimed {}", n / 2),
                    )
                }
            }
        }
        ClaimId::C13 => {
            let kind = match kind {
                Some(kind) => kind,
                None => return Vacuous("not a recognized family".into()),
            };
            let expected = match alternating_number_formula(kind) {
                Some(v) => v,
                None => return Vacuous("no closed form for this family".into()),
            };
            match independence_polynomial(g) {
                Err(e) => Outcome::Error(e.to_string()),
                Ok(p) => {
                    let got = p.eval_at(-1);
                    verdict(
                        got == BigInt::from(expected),
                        format!("alternating number {got}, closed form {expected}"),
                    )
                }
            }
        }
        ClaimId::C14 => {
            let covered = match kind {
                Some(&FamilyKind::Path(n)) => n % 3 != 1,
                Some(&FamilyKind::Cycle(_)) | Some(&FamilyKind::Wheel(_)) => true,
                _ => false,
            };
            if !covered {
                return Vacuous("family not covered by the claim".into());
            }
            let alpha = independence_number(g);
            if k < alpha {
                return Vacuous(format!("k = {k} below the independence number {alpha}"));
            }
            match recon(g, alpha, true) {
                Err(e) => e,
                Ok(r) => hamiltonicity_refuted(&r),
            }
        }
        ClaimId::C15 => {
            let dominator = match dominating_vertex(g) {
                Some(v) => v,
                None => return Vacuous("no dominating vertex".into()),
            };
            if g.order() < 2 {
                return Vacuous("order 1".into());
            }
            let alpha = independence_number(g);
            if k < alpha {
                return Vacuous(format!("k = {k} below the independence number {alpha}"));
            }
            match recon(g, alpha, false) {
                Err(e) => e,
                Ok(r) => {
                    let decomp = components(&r);
                    let isolated_singleton = (0..r.order()).any(|i| {
                        r.degree(i) == 0
                            && r.label(i).len() == 1
                            && g.degree(r.label(i).min().expect("singleton")) == g.order() - 1
                    });
                    verdict(
                        decomp.count >= 2 && isolated_singleton,
                        format!(
                            "components {}, isolated dominating singleton (vertex {dominator}): {isolated_singleton}",
                            decomp.count
                        ),
                    )
                }
            }
        }
        ClaimId::C16 => {
            let parts = match kind {
                Some(FamilyKind::CompleteMultipartite(parts)) => parts.clone(),
                _ => return Vacuous("not a complete multipartite graph".into()),
            };
            let alpha = independence_number(g);
            if k < alpha {
                return Vacuous(format!("k = {k} below the independence number {alpha}"));
            }
            match recon(g, alpha, false) {
                Err(e) => e,
                Ok(r) => {
                    let count = components(&r).count;
                    verdict(
                        count == parts.len(),
                        format!("components {count}, parts {}", parts.len()),
                    )
                }
            }
        }
    }
}

fn recon(g: &Graph, k: usize, include_empty: bool) -> Result<ReconGraph, Outcome> {
    build_recon(g, k, include_empty).map_err(|e| Outcome::Error(e.to_string()))
}

fn verdict(ok: bool, details: String) -> Outcome {
    if ok {
        Pass(details)
    } else {
        Fail(details)
    }
}

/// Pass when the graph is provably not Hamiltonian; an exhausted budget is
/// an evaluation error (the claim stays untested), not a refutation.
fn hamiltonicity_refuted(r: &ReconGraph) -> Outcome {
    let verdict = hamiltonicity(r, DEFAULT_NODE_BUDGET);
    match verdict.status {
        HamStatus::No => Pass(format!("not Hamiltonian ({:?})", verdict.method)),
        HamStatus::Yes => Fail("Hamiltonian cycle found".into()),
        HamStatus::Unknown => Outcome::Error("search budget exhausted; untested".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_family;

    fn family(kind: FamilyKind) -> Graph {
        make_family(&kind).unwrap()
    }

    #[test]
    fn claim_ids_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.to_string().parse::<ClaimId>().unwrap(), c);
        }
        assert!(matches!(
            "C17".parse::<ClaimId>(),
            Err(VerifyError::UnknownClaim(_))
        ));
    }

    #[test]
    fn multipartite_component_count() {
        let g = family(FamilyKind::CompleteMultipartite(vec![2, 3]));
        let result = check_claim(ClaimId::C16, &g, 3);
        assert!(result.applicable && result.holds, "{}", result.details);
        assert!(result.details.contains("components 2"));
    }

    #[test]
    fn complete_graphs_make_girth_claims_vacuous() {
        let g = family(FamilyKind::Complete(5));
        let result = check_claim(ClaimId::C7, &g, 2);
        assert!(!result.applicable);
    }

    #[test]
    fn path_minimum_degree_at_order_seven() {
        let g = family(FamilyKind::Path(7));
        let result = check_claim(ClaimId::C12, &g, 4);
        assert!(result.applicable && result.holds, "{}", result.details);
        assert!(result.details.contains("min degree 3"));
    }

    #[test]
    fn path_minimum_degree_claim_is_refuted_at_order_six() {
        // The smallest maximal independent set {1, 4} has exactly its two
        // deletion neighbors, so the minimum degree is 2, not 3.
        let g = family(FamilyKind::Path(6));
        let result = check_claim(ClaimId::C12, &g, 3);
        assert!(result.applicable && !result.holds);
        assert!(result.details.contains("min degree 2"));
    }

    #[test]
    fn check_all_on_the_three_leaf_star() {
        let g = family(FamilyKind::Star(3));
        let results = check_all(&g, 3);
        assert_eq!(results.len(), 16);
        let ids: Vec<ClaimId> = results.iter().map(|r| r.claim_id).collect();
        assert_eq!(ids, ClaimId::ALL);
        for r in &results {
            assert!(r.error.is_none(), "{}: {:?}", r.claim_id, r.error);
            if r.applicable {
                assert!(r.holds, "{} failed: {}", r.claim_id, r.details);
            }
        }
        // Star-specific claims are applicable here.
        assert!(results[9].applicable && results[10].applicable);
    }

    #[test]
    fn check_all_hypothesis_detection() {
        let edgeless = family(FamilyKind::EmptyGraph(4));
        let results = check_all(&edgeless, 4);
        assert!(!results[3].applicable, "C4 must be vacuous on an edgeless base");

        let c4 = family(FamilyKind::Cycle(4));
        let results = check_all(&c4, 2);
        assert!(!results[14].applicable, "C15 needs a dominating vertex");
        assert!(
            !results[15].applicable,
            "C16 only fires for the multipartite family form"
        );
    }

    #[test]
    fn dominating_vertex_disconnects() {
        for kind in [FamilyKind::Wheel(6), FamilyKind::Star(4), FamilyKind::Complete(3)] {
            let g = family(kind.clone());
            let alpha = independence_number(&g);
            let result = check_claim(ClaimId::C15, &g, alpha);
            assert!(result.applicable && result.holds, "{kind}: {}", result.details);
        }
    }

    #[test]
    fn resource_limits_become_errors() {
        let g = family(FamilyKind::EmptyGraph(30));
        let result = check_claim(ClaimId::C9, &g, 30);
        assert!(result.error.is_some());
    }
}
