//! Structural analysis of reconfiguration graphs: components, parity
//! bipartition, girth, degree profile, forest and star tests, and a
//! budgeted exact Hamiltonicity decision.

use std::collections::VecDeque;

use thiserror::Error;

use crate::recon::ReconGraph;

/// Default node-expansion budget for [`hamiltonicity`].
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("degree profile of a graph with no vertices")]
    EmptyGraphInput,
}

/// Connected components with dense ids assigned in order of the smallest
/// contained vertex index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub count: usize,
    pub membership: Vec<usize>,
    pub sizes: Vec<usize>,
}

pub fn components(r: &ReconGraph) -> ComponentDecomposition {
    const UNSEEN: usize = usize::MAX;
    let mut membership = vec![UNSEEN; r.order()];
    let mut sizes = Vec::new();
    for start in 0..r.order() {
        if membership[start] != UNSEEN {
            continue;
        }
        let id = sizes.len();
        let mut size = 0;
        let mut queue = VecDeque::from([start]);
        membership[start] = id;
        while let Some(u) = queue.pop_front() {
            size += 1;
            for &w in r.neighbors(u) {
                if membership[w as usize] == UNSEEN {
                    membership[w as usize] = id;
                    queue.push_back(w as usize);
                }
            }
        }
        sizes.push(size);
    }
    ComponentDecomposition {
        count: sizes.len(),
        membership,
        sizes,
    }
}

/// Vertex counts by label-cardinality parity, plus a checked (not assumed)
/// confirmation that no edge joins two labels of equal parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityBipartition {
    pub even: usize,
    pub odd: usize,
    pub is_valid: bool,
}

pub fn parity_bipartition(r: &ReconGraph) -> ParityBipartition {
    let even = (0..r.order()).filter(|&i| r.label(i).len().is_multiple_of(2)).count();
    let is_valid = r
        .edges()
        .iter()
        .all(|&(i, j)| r.label(i as usize).len() % 2 != r.label(j as usize).len() % 2);
    ParityBipartition {
        even,
        odd: r.order() - even,
        is_valid,
    }
}

/// Length of a shortest cycle, or `None` for acyclic graphs.
///
/// One BFS per start vertex with parent exclusion; the minimum over all
/// start vertices is exact because a BFS rooted on a shortest cycle
/// discovers that cycle's length.
pub fn girth(r: &ReconGraph) -> Option<usize> {
    const UNSEEN: u32 = u32::MAX;
    let n = r.order();
    let mut best = usize::MAX;
    let mut dist = vec![UNSEEN; n];
    let mut parent = vec![UNSEEN; n];
    for root in 0..n {
        dist.fill(UNSEEN);
        dist[root] = 0;
        parent[root] = UNSEEN;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] as usize > best {
                break;
            }
            for &w in r.neighbors(u) {
                let w = w as usize;
                if dist[w] == UNSEEN {
                    dist[w] = dist[u] + 1;
                    parent[w] = u as u32;
                    queue.push_back(w);
                } else if parent[u] != w as u32 {
                    best = best.min(dist[u] as usize + dist[w] as usize + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub is_regular: bool,
}

pub fn degree_profile(r: &ReconGraph) -> Result<DegreeProfile, AnalysisError> {
    if r.order() == 0 {
        return Err(AnalysisError::EmptyGraphInput);
    }
    let degrees = (0..r.order()).map(|i| r.degree(i));
    let min = degrees.clone().min().expect("non-empty");
    let max = degrees.max().expect("non-empty");
    Ok(DegreeProfile {
        min,
        max,
        is_regular: min == max,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestStatus {
    pub is_forest: bool,
    pub is_tree: bool,
}

pub fn forest_status(r: &ReconGraph) -> ForestStatus {
    let comps = components(r).count;
    let is_forest = r.size() == r.order() - comps;
    ForestStatus {
        is_forest,
        is_tree: is_forest && comps == 1,
    }
}

/// True iff the graph is a star `K_{1,m}` for some `m >= 0`: one center
/// adjacent to all others and every other vertex of degree one. A single
/// vertex counts as `K_{1,0}`.
pub fn is_star_shape(r: &ReconGraph) -> bool {
    let n = r.order();
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    if r.size() != n - 1 {
        return false;
    }
    let center = match (0..n).find(|&i| r.degree(i) == n - 1) {
        Some(c) => c,
        None => return false,
    };
    (0..n).all(|i| i == center || r.degree(i) == 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HamStatus {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HamMethod {
    ParityObstruction,
    TooFewVertices,
    ExhaustiveSearch,
    BudgetExhausted,
}

/// Outcome of the Hamiltonicity decision. A `Yes` carries a witness cycle
/// as a vertex-index list with first index repeated last; `Unknown` occurs
/// only when the search budget ran out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonicityVerdict {
    pub status: HamStatus,
    pub method: HamMethod,
    pub witness: Option<Vec<u32>>,
}

/// Decides Hamiltonicity. Deterministic cascade: graphs with fewer than
/// three vertices are not Hamiltonian; unequal parity classes rule out a
/// Hamiltonian cycle in these (bipartite) graphs; otherwise a backtracking
/// search from vertex 0 explores neighbors in canonical index order,
/// counting one expansion per vertex pushed onto the partial path.
///
/// The search prunes soundly: every vertex still to be visited must keep at
/// least two usable cycle-neighbors (vertices not yet on the path, plus the
/// current path endpoint and the start). The verdict depends only on the
/// graph and the budget.
pub fn hamiltonicity(r: &ReconGraph, node_budget: u64) -> HamiltonicityVerdict {
    let n = r.order();
    if n < 3 {
        return HamiltonicityVerdict {
            status: HamStatus::No,
            method: HamMethod::TooFewVertices,
            witness: None,
        };
    }
    let parity = parity_bipartition(r);
    if parity.even != parity.odd {
        return HamiltonicityVerdict {
            status: HamStatus::No,
            method: HamMethod::ParityObstruction,
            witness: None,
        };
    }

    let mut expansions: u64 = 1; // the fixed start vertex
    if expansions > node_budget {
        return budget_exhausted();
    }

    // avail[x] = number of neighbors of x that are unvisited or the current
    // path endpoint (the start vertex never leaves this set). Every future
    // cycle neighbor of an unvisited vertex lies in that set.
    let mut avail: Vec<u32> = (0..n).map(|i| r.degree(i) as u32).collect();
    if avail.iter().any(|&a| a < 2) {
        return HamiltonicityVerdict {
            status: HamStatus::No,
            method: HamMethod::ExhaustiveSearch,
            witness: None,
        };
    }

    let mut on_path = vec![false; n];
    let mut path: Vec<u32> = Vec::with_capacity(n);
    let mut cursor: Vec<usize> = Vec::with_capacity(n); // next neighbor position per depth
    on_path[0] = true;
    path.push(0);
    cursor.push(0);

    // Closing the previous endpoint `u` removes it from every neighbor's
    // available set; returns true when that strands some unvisited vertex.
    let close = |u: usize, avail: &mut [u32], on_path: &[bool]| -> bool {
        let mut stranded = false;
        for &x in r.neighbors(u) {
            let x = x as usize;
            avail[x] -= 1;
            if !on_path[x] && avail[x] < 2 {
                stranded = true;
            }
        }
        stranded
    };
    let reopen = |u: usize, avail: &mut [u32]| {
        for &x in r.neighbors(u) {
            avail[x as usize] += 1;
        }
    };

    loop {
        let depth = path.len();
        let u = *path.last().expect("path never empties") as usize;

        if depth == n {
            if r.has_edge(u, 0) {
                let mut witness = path.clone();
                witness.push(0);
                return HamiltonicityVerdict {
                    status: HamStatus::Yes,
                    method: HamMethod::ExhaustiveSearch,
                    witness: Some(witness),
                };
            }
            if backtrack(&mut path, &mut cursor, &mut on_path, &mut avail, reopen) {
                return no_by_search();
            }
            continue;
        }

        let next = r.neighbors(u)[cursor[depth - 1]..]
            .iter()
            .position(|&w| !on_path[w as usize])
            .map(|off| cursor[depth - 1] + off);
        match next {
            Some(pos) => {
                let w = r.neighbors(u)[pos] as usize;
                cursor[depth - 1] = pos + 1;
                expansions += 1;
                if expansions > node_budget {
                    return budget_exhausted();
                }
                on_path[w] = true;
                path.push(w as u32);
                cursor.push(0);
                let mut dead = if u != 0 {
                    close(u, &mut avail, &on_path)
                } else {
                    false
                };
                // The start must stay reachable for the closing edge.
                dead = dead || (path.len() < n && avail[0] == 0);
                if dead {
                    path.pop();
                    cursor.pop();
                    on_path[w] = false;
                    if u != 0 {
                        reopen(u, &mut avail);
                    }
                }
            }
            None => {
                if backtrack(&mut path, &mut cursor, &mut on_path, &mut avail, reopen) {
                    return no_by_search();
                }
            }
        }
    }

    fn budget_exhausted() -> HamiltonicityVerdict {
        HamiltonicityVerdict {
            status: HamStatus::Unknown,
            method: HamMethod::BudgetExhausted,
            witness: None,
        }
    }

    fn no_by_search() -> HamiltonicityVerdict {
        HamiltonicityVerdict {
            status: HamStatus::No,
            method: HamMethod::ExhaustiveSearch,
            witness: None,
        }
    }

    /// Pops the current endpoint; returns true when the whole search space
    /// is exhausted.
    fn backtrack(
        path: &mut Vec<u32>,
        cursor: &mut Vec<usize>,
        on_path: &mut [bool],
        avail: &mut [u32],
        reopen: impl Fn(usize, &mut [u32]),
    ) -> bool {
        let w = path.pop().expect("non-empty") as usize;
        cursor.pop();
        on_path[w] = false;
        match path.last() {
            None => true,
            Some(&u) => {
                if u != 0 {
                    reopen(u as usize, avail);
                }
                false
            }
        }
    }
}
