//! Seeded deterministic randomness for sweeps.
//!
//! The generator is pinned bit-exactly so independent implementations
//! produce identical instance streams: a 64-bit linear congruential
//! sequence with multiplier `6364136223846793005` and increment
//! `1442695040888963407`, emitting the high 32 bits of each state.

use crate::graph::Graph;

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

/// The pinned linear congruential generator.
#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Lcg {
        Lcg { state: seed }
    }

    /// Advances the state once and returns its high 32 bits.
    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(MULTIPLIER)
            .wrapping_add(INCREMENT);
        (self.state >> 32) as u32
    }

    /// A fair coin: the low bit of the next output.
    pub fn coin(&mut self) -> bool {
        self.next_u32() & 1 == 1
    }

    /// Uniform-ish draw in `0..bound` by remainder. `bound` must be positive.
    pub fn below(&mut self, bound: u32) -> u32 {
        self.next_u32() % bound
    }
}

/// A random graph with edge probability 1/2: one coin per unordered pair,
/// pairs visited in lexicographic order `(0,1), (0,2), ..., (n-2, n-1)`.
pub fn random_graph(n: usize, rng: &mut Lcg) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.coin() {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("order and endpoints are in range")
}
