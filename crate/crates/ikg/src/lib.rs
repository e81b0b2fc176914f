//! Reconfiguration graphs over independent sets under single-vertex
//! addition and removal.
//!
//! Given a simple graph `G` and a bound `k`, the reconfiguration graph has
//! one vertex per independent set of `G` with at most `k` members, and an
//! edge whenever two sets differ by adding or deleting a single vertex.
//! This crate builds these graphs exactly (optionally without the empty
//! set), computes independence polynomials with exact integer
//! coefficients, analyzes structure (components, parity bipartition,
//! girth, degrees, forests, stars, Hamiltonicity), and machine-checks a
//! catalog of sixteen structural claims across graph families and seeded
//! random instances.
//!
//! ```
//! use ikg::graph::{make_family, FamilyKind};
//! use ikg::recon::build_recon;
//! use ikg::analysis::parity_bipartition;
//!
//! let star = make_family(&FamilyKind::Star(3)).unwrap();
//! let r = build_recon(&star, 3, true).unwrap();
//! assert_eq!(r.order(), 9);
//! let parity = parity_bipartition(&r);
//! assert_eq!((parity.even, parity.odd), (4, 5));
//! ```
//!
//! Base graphs are capped at 63 vertices so every vertex subset fits in a
//! single machine word; reconfiguration graphs are capped by a configurable
//! limit on the number of independent sets (default 2^22).

pub mod analysis;
pub mod graph;
pub mod indsets;
pub mod recon;
pub mod verify;

pub use analysis::{hamiltonicity, HamMethod, HamStatus, HamiltonicityVerdict};
pub use graph::{complement, make_family, parse_edge_list, FamilyKind, Graph, VertexSet};
pub use indsets::{
    enumerate_independent_sets, independence_number, independence_polynomial,
    IndependencePolynomial, IndSetFamily,
};
pub use recon::{build_recon, recon_distance, ReconGraph, ReconPath};
pub use verify::{check_all, check_claim, sweep_families, ClaimId, ClaimResult, SweepSummary};
