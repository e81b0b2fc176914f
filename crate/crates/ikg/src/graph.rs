//! Base-graph representation, named family generators, and edge-list parsing.
//!
//! Graphs are simple and undirected, with vertices labeled `0..n-1` and
//! adjacency stored as one machine-word bit mask per vertex. The order is
//! capped at [`MAX_ORDER`] so every vertex subset fits in a [`VertexSet`].

use std::fmt;

use thiserror::Error;

/// Largest supported graph order: one `u64` mask per vertex set.
pub const MAX_ORDER: usize = 63;

/// A subset of the vertices of a graph, stored as a bit mask.
///
/// Bit `v` is set iff vertex `v` is a member. `Display` renders the set as
/// `{v0,v2}` with members ascending, and the empty set as `{}`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < 64);
        VertexSet(1 << v)
    }

    /// Reconstructs a set from its raw bit mask.
    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of members.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    /// The set with `v` added.
    pub fn with(self, v: usize) -> VertexSet {
        debug_assert!(v < 64);
        VertexSet(self.0 | 1 << v)
    }

    /// The set with `v` removed.
    pub fn without(self, v: usize) -> VertexSet {
        debug_assert!(v < 64);
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn symmetric_difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ other.0)
    }

    /// Iterates over the members in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "v{v}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the members of a [`VertexSet`], ascending.
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Errors from graph construction and membership queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{what} requires {requirement}, got {got}")]
    SizeConstraint {
        what: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
}

/// Errors from [`parse_edge_list`]; every variant names the offending line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize, column: usize },
    #[error("line {line}, column {column}: malformed edge, expected \"u v\"")]
    MalformedEdge { line: usize, column: usize },
    #[error("line {line}: vertex {vertex} out of range, order is {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("expected {expected} edges, found only {found}")]
    MissingEdges { expected: usize, found: usize },
    #[error("line {line}: unexpected content after the edge list")]
    TrailingContent { line: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

/// A simple undirected graph on `0..n-1`.
///
/// Invariants: adjacency is symmetric, loop-free, and every mask bit is
/// below `n`. Values are immutable once constructed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// An edgeless graph of the given order.
    pub fn new(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::SizeConstraint {
                what: "graph order",
                requirement: "n <= 63",
                got: n,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Out-of-range endpoints and
    /// self-loops are rejected; repeated edges are idempotent.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n;
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.adj[u] = self.adj[u].with(v);
        self.adj[v] = self.adj[v].with(u);
        Ok(())
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Neighbor set of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1) || self.n == 0
    }

    /// True iff the graph has no edges.
    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|s| s.is_empty())
    }

    /// True iff no two members of `s` are adjacent. The empty set is
    /// independent vacuously.
    pub fn is_independent(&self, s: VertexSet) -> Result<bool, GraphError> {
        if s.bits() >> self.n != 0 {
            let vertex = s
                .iter()
                .find(|&v| v >= self.n)
                .expect("some bit is out of range");
            return Err(GraphError::VertexOutOfRange { vertex, n: self.n });
        }
        Ok(self.is_independent_unchecked(s))
    }

    pub(crate) fn is_independent_unchecked(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].intersection(s).is_empty())
    }
}

/// The named graph families.
///
/// `Star(n)` has `n` leaves (order `n + 1`); `Wheel(n)` has `n` vertices in
/// total, a hub joined to a cycle on the remaining `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Wheel(usize),
    Complete(usize),
    EmptyGraph(usize),
    CompleteMultipartite(Vec<usize>),
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Path(n) => write!(f, "path({n})"),
            FamilyKind::Cycle(n) => write!(f, "cycle({n})"),
            FamilyKind::Star(n) => write!(f, "star({n})"),
            FamilyKind::Wheel(n) => write!(f, "wheel({n})"),
            FamilyKind::Complete(n) => write!(f, "complete({n})"),
            FamilyKind::EmptyGraph(n) => write!(f, "empty({n})"),
            FamilyKind::CompleteMultipartite(parts) => {
                write!(f, "multipartite(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Constructs the canonical graph of a family.
///
/// Conventions: `Path(n)` is `0-1-...-(n-1)`; `Cycle(n)` closes it with the
/// edge `(n-1, 0)`; `Star(n)` puts the center at vertex `0`; `Wheel(n)` puts
/// the hub at vertex `0`, joined to the cycle `1..n-1`; multipartite parts
/// are laid out consecutively from vertex `0`.
pub fn make_family(kind: &FamilyKind) -> Result<Graph, GraphError> {
    fn require(
        what: &'static str,
        requirement: &'static str,
        got: usize,
        min: usize,
    ) -> Result<(), GraphError> {
        if got < min {
            return Err(GraphError::SizeConstraint {
                what,
                requirement,
                got,
            });
        }
        Ok(())
    }

    match kind {
        FamilyKind::Path(n) => {
            require("path", "n >= 1", *n, 1)?;
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Graph::from_edges(*n, &edges)
        }
        FamilyKind::Cycle(n) => {
            require("cycle", "n >= 3", *n, 3)?;
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((n - 1, 0));
            Graph::from_edges(*n, &edges)
        }
        FamilyKind::Star(leaves) => {
            require("star", "n >= 1 leaves", *leaves, 1)?;
            let edges: Vec<_> = (1..=*leaves).map(|v| (0, v)).collect();
            Graph::from_edges(leaves + 1, &edges)
        }
        FamilyKind::Wheel(n) => {
            require("wheel", "n >= 4", *n, 4)?;
            let rim = n - 1;
            let mut edges: Vec<_> = (1..=rim).map(|v| (0, v)).collect();
            for i in 1..rim {
                edges.push((i, i + 1));
            }
            edges.push((rim, 1));
            Graph::from_edges(*n, &edges)
        }
        FamilyKind::Complete(n) => {
            require("complete graph", "n >= 1", *n, 1)?;
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(*n, &edges)
        }
        FamilyKind::EmptyGraph(n) => {
            require("edgeless graph", "n >= 1", *n, 1)?;
            Graph::new(*n)
        }
        FamilyKind::CompleteMultipartite(parts) => {
            require("complete multipartite graph", "at least one part", parts.len(), 1)?;
            for &p in parts {
                require("complete multipartite part", "size >= 1", p, 1)?;
            }
            let n: usize = parts.iter().sum();
            let mut edges = Vec::new();
            let mut start = 0;
            for &p in parts {
                for u in start..start + p {
                    for v in start + p..n {
                        edges.push((u, v));
                    }
                }
                start += p;
            }
            Graph::from_edges(n, &edges)
        }
    }
}

/// The graph with exactly the non-edges of `g`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let adj = (0..n)
        .map(|v| VertexSet::from_bits(full & !g.neighbors(v).bits() & !(1 << v)))
        .collect();
    Graph { n, adj }
}

/// Parses the plain edge-list format.
///
/// `#`-prefixed lines are comments. The first significant line is `n m`,
/// followed by exactly `m` lines `u v` with `0 <= u,v < n` and `u != v`.
/// Duplicate edges are rejected in either orientation.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    fn two_tokens(line: &str) -> Result<(usize, usize), usize> {
        // On failure returns the 1-based column of the offending token.
        let mut fields = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize, usize> {
            let tok = tok.ok_or(line.trim_end().len() + 1)?;
            let column = offset_of(line, tok);
            tok.parse::<usize>().map_err(|_| column)
        };
        let u = parse(fields.next())?;
        let v = parse(fields.next())?;
        if let Some(extra) = fields.next() {
            return Err(offset_of(line, extra));
        }
        Ok((u, v))
    }

    fn offset_of(line: &str, token: &str) -> usize {
        // `token` is a subslice of `line`; recover its 1-based column.
        let base = line.as_ptr() as usize;
        token.as_ptr() as usize - base + 1
    }

    let mut significant = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (header_line, header) = significant
        .next()
        .ok_or(ParseError::MalformedHeader { line: 1, column: 1 })?;
    let (n, m) = two_tokens(header).map_err(|column| ParseError::MalformedHeader {
        line: header_line,
        column,
    })?;
    let mut g = Graph::new(n).map_err(|source| ParseError::Graph {
        line: header_line,
        source,
    })?;

    let mut found = 0;
    for (line, content) in significant.by_ref() {
        if found == m {
            return Err(ParseError::TrailingContent { line });
        }
        let (u, v) =
            two_tokens(content).map_err(|column| ParseError::MalformedEdge { line, column })?;
        for w in [u, v] {
            if w >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex: w, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if g.has_edge(u, v) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
        g.add_edge(u, v).expect("endpoints already validated");
        found += 1;
    }
    if found < m {
        return Err(ParseError::MissingEdges {
            expected: m,
            found,
        });
    }
    Ok(g)
}
