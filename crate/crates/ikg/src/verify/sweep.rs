//! Claim sweeps over generated families and seeded random instances.

use crate::graph::{make_family, FamilyKind, Graph};
use crate::indsets::independence_number;

use super::rng::{random_graph, Lcg};
use super::{check_claim_with, ClaimId, ClaimResult};

/// Per-claim outcome tally across a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCounts {
    pub claim: ClaimId,
    pub pass: usize,
    pub vacuous: usize,
    pub fail: usize,
    pub error: usize,
}

/// Outcome of [`sweep_families`]: one row per claim in catalog order, plus
/// a deterministic record of every failure and evaluation error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary {
    pub instances: usize,
    pub rows: Vec<ClaimCounts>,
    pub failures: Vec<String>,
    pub errors: Vec<String>,
}

impl SweepSummary {
    pub fn row(&self, claim: ClaimId) -> &ClaimCounts {
        &self.rows[claim as usize]
    }

    pub fn total_failures(&self) -> usize {
        self.rows.iter().map(|r| r.fail).sum()
    }
}

/// Runs every claim over the named families with index up to `max_n`, plus
/// `random_count` complete multipartite graphs with random part vectors and
/// `random_count` random graphs with edge probability 1/2.
///
/// Fully deterministic given `(max_n, seed, random_count)`: one generator
/// stream seeded once feeds first the part vectors (part count `2 +
/// r % 4`, each part `1 + r % 5`) and then the random graphs (order `1 +
/// r % max_n`, then one coin per vertex pair in lexicographic order). Every
/// instance is checked at `k` equal to its independence number.
pub fn sweep_families(max_n: usize, seed: u64, random_count: usize) -> SweepSummary {
    assert!((1..=63).contains(&max_n), "max_n must be within 1..=63");

    let mut instances: Vec<(FamilyKind, Graph)> = Vec::new();
    let mut push = |kind: FamilyKind| {
        let g = make_family(&kind).expect("admissible family sizes only");
        instances.push((kind, g));
    };
    for n in 1..=max_n {
        push(FamilyKind::Path(n));
    }
    for n in 3..=max_n {
        push(FamilyKind::Cycle(n));
    }
    for n in 1..=max_n {
        push(FamilyKind::Star(n));
    }
    for n in 4..=max_n {
        push(FamilyKind::Wheel(n));
    }
    for n in 1..=max_n {
        push(FamilyKind::Complete(n));
    }
    for n in 1..=max_n {
        push(FamilyKind::EmptyGraph(n));
    }

    let mut rng = Lcg::new(seed);
    for _ in 0..random_count {
        let parts: Vec<usize> = {
            let m = 2 + rng.below(4) as usize;
            (0..m).map(|_| 1 + rng.below(5) as usize).collect()
        };
        push(FamilyKind::CompleteMultipartite(parts));
    }
    let randoms: Vec<Graph> = (0..random_count)
        .map(|_| {
            let n = 1 + rng.below(max_n as u32) as usize;
            random_graph(n, &mut rng)
        })
        .collect();

    let mut rows: Vec<ClaimCounts> = ClaimId::ALL
        .iter()
        .map(|&claim| ClaimCounts {
            claim,
            pass: 0,
            vacuous: 0,
            fail: 0,
            error: 0,
        })
        .collect();
    let mut failures = Vec::new();
    let mut errors = Vec::new();
    let mut total = 0;

    let mut run = |g: &Graph, kind: Option<&FamilyKind>, label: &str| {
        let k = independence_number(g);
        let label = format!("{label}, k={k}");
        for claim in ClaimId::ALL {
            let result = check_claim_with(claim, g, k, kind, &label);
            tally(&mut rows[claim as usize], &result, &mut failures, &mut errors);
        }
    };

    for (kind, g) in &instances {
        total += 1;
        run(g, Some(kind), &kind.to_string());
    }
    for (i, g) in randoms.iter().enumerate() {
        total += 1;
        let label = format!("random[{i}](seed={seed}, n={})", g.order());
        run(g, None, &label);
    }

    SweepSummary {
        instances: total,
        rows,
        failures,
        errors,
    }
}

fn tally(
    row: &mut ClaimCounts,
    result: &ClaimResult,
    failures: &mut Vec<String>,
    errors: &mut Vec<String>,
) {
    if let Some(why) = &result.error {
        row.error += 1;
        errors.push(format!("{} {}: {why}", result.claim_id, result.instance));
    } else if !result.applicable {
        row.vacuous += 1;
    } else if result.holds {
        row.pass += 1;
    } else {
        row.fail += 1;
        failures.push(format!(
            "{} {}: {}",
            result.claim_id, result.instance, result.details
        ));
    }
}
