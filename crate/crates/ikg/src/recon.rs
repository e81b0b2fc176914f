//! Construction of the reconfiguration graph over independent sets, and
//! shortest-reconfiguration queries.
//!
//! Vertices are the independent sets of the base graph with cardinality at
//! most `k` (the empty set optionally excluded); two vertices are adjacent
//! iff one set is the other plus a single vertex. Edges are generated by
//! single-element deletion: linking every set to each of its one-smaller
//! subsets produces each edge exactly once, because adjacency forces a
//! containment relation.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::indsets::{
    enumerate_independent_sets_capped, IndSetFamily, ResourceLimit, DEFAULT_SET_CAP,
};

/// Errors from reconfiguration-graph construction and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconError {
    #[error(transparent)]
    ResourceLimit(#[from] ResourceLimit),
    #[error("{set} is not a vertex of this reconfiguration graph")]
    NotAVertex { set: VertexSet },
}

/// The reconfiguration graph. Vertex `i` is labeled by the `i`-th set of
/// the family in canonical order; adjacency lists hold sorted indices.
#[derive(Clone, Debug)]
pub struct ReconGraph {
    labels: IndSetFamily,
    adj: Vec<Vec<u32>>,
    base_n: usize,
}

impl ReconGraph {
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn label(&self, index: usize) -> VertexSet {
        self.labels.get(index)
    }

    pub fn labels(&self) -> &IndSetFamily {
        &self.labels
    }

    pub fn index_of(&self, set: VertexSet) -> Option<u32> {
        self.labels.index_of(set)
    }

    pub fn neighbors(&self, index: usize) -> &[u32] {
        &self.adj[index]
    }

    pub fn degree(&self, index: usize) -> usize {
        self.adj[index].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&(j as u32)).is_ok()
    }

    /// Edges as index pairs `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, list) in self.adj.iter().enumerate() {
            for &j in list {
                if (i as u32) < j {
                    out.push((i as u32, j));
                }
            }
        }
        out
    }

    pub fn k(&self) -> usize {
        self.labels.k()
    }

    pub fn includes_empty(&self) -> bool {
        self.labels.includes_empty()
    }

    /// Order of the base graph.
    pub fn base_n(&self) -> usize {
        self.base_n
    }
}

/// Builds the reconfiguration graph of `g` for the cardinality bound `k`.
pub fn build_recon(g: &Graph, k: usize, include_empty: bool) -> Result<ReconGraph, ReconError> {
    build_recon_capped(g, k, include_empty, DEFAULT_SET_CAP)
}

/// [`build_recon`] with an explicit cap on the number of vertices.
pub fn build_recon_capped(
    g: &Graph,
    k: usize,
    include_empty: bool,
    cap: usize,
) -> Result<ReconGraph, ReconError> {
    let labels = enumerate_independent_sets_capped(g, k, include_empty, cap)?;
    let mut adj = vec![Vec::new(); labels.len()];
    for (i, set) in labels.iter().enumerate() {
        for v in set.iter() {
            let smaller = set.without(v);
            if smaller.is_empty() && !include_empty {
                continue;
            }
            let j = labels
                .index_of(smaller)
                .expect("every subset of an independent set is independent and within the bound");
            adj[i].push(j);
            adj[j as usize].push(i as u32);
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(ReconGraph {
        labels,
        adj,
        base_n: g.order(),
    })
}

/// A walk in the reconfiguration graph; consecutive labels differ by
/// exactly one vertex. Its length is the hop count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconPath {
    vertices: Vec<VertexSet>,
}

impl ReconPath {
    pub fn vertices(&self) -> &[VertexSet] {
        &self.vertices
    }

    /// Hop count: one less than the number of labels.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// Shortest reconfiguration sequence from `s` to `t`, or `None` when they
/// lie in different components.
///
/// The witness is deterministic: among all shortest paths it is the one
/// obtained by walking back from `t` and always choosing the predecessor
/// with the smallest canonical vertex index.
pub fn recon_distance(
    r: &ReconGraph,
    s: VertexSet,
    t: VertexSet,
) -> Result<Option<ReconPath>, ReconError> {
    let si = r.index_of(s).ok_or(ReconError::NotAVertex { set: s })? as usize;
    let ti = r.index_of(t).ok_or(ReconError::NotAVertex { set: t })? as usize;

    const UNSEEN: u32 = u32::MAX;
    let mut dist = vec![UNSEEN; r.order()];
    dist[si] = 0;
    let mut queue = std::collections::VecDeque::from([si]);
    while let Some(u) = queue.pop_front() {
        if u == ti {
            break;
        }
        for &w in r.neighbors(u) {
            if dist[w as usize] == UNSEEN {
                dist[w as usize] = dist[u] + 1;
                queue.push_back(w as usize);
            }
        }
    }
    if dist[ti] == UNSEEN {
        return Ok(None);
    }

    let mut indices = vec![ti];
    let mut cur = ti;
    while dist[cur] > 0 {
        let prev = r
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| dist[w as usize] == dist[cur] - 1)
            .expect("BFS layers are contiguous") as usize;
        indices.push(prev);
        cur = prev;
    }
    indices.reverse();
    Ok(Some(ReconPath {
        vertices: indices.into_iter().map(|i| r.label(i)).collect(),
    }))
}
