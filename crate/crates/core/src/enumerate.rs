//! Exhaustive enumeration of small labeled connected graphs, plus seeded
//! random graph generators.
//!
//! Enumeration is labeled, not isomorphism-reduced: the verification
//! suites trade redundancy for simplicity, and at `n <= 6` the roughly
//! 27k connected labeled graphs are cheap to sweep.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::flood::BitIter;
use crate::graph::{Graph, Node};
use crate::{Error, Result};

/// Largest node count the exhaustive enumeration accepts.
pub const ENUMERATION_MAX_N: usize = 7;

const RETRY_BUDGET: usize = 1000;

// Adjacency rows decoded straight from an edge bitmask, pair order
// (0,1),(0,2),...,(0,n-1),(1,2),...
fn rows_from_mask(n: usize, mask: u64) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask & (1u64 << bit) != 0 {
                rows[u] |= 1u64 << v;
                rows[v] |= 1u64 << u;
            }
            bit += 1;
        }
    }
    rows
}

fn mask_is_connected(n: usize, mask: u64) -> bool {
    if n <= 1 {
        return true;
    }
    let rows = rows_from_mask(n, mask);
    let full = (1u64 << n) - 1;
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while seen != full {
        let mut next = 0u64;
        for v in BitIter(frontier) {
            next |= rows[v];
        }
        next &= !seen;
        if next == 0 {
            return false;
        }
        seen |= next;
        frontier = next;
    }
    true
}

/// All labeled connected simple graphs on `n` nodes, each exactly once, in
/// ascending edge-bitmask order. `1 <= n <= 7`.
pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs> {
    if !(1..=ENUMERATION_MAX_N).contains(&n) {
        return Err(Error::NOutOfRange { n, min: 1, max: ENUMERATION_MAX_N });
    }
    let pairs = n * (n - 1) / 2;
    Ok(ConnectedGraphs {
        n,
        next_mask: 0,
        end: 1u64 << pairs,
    })
}

/// Iterator returned by [`enumerate_connected`].
pub struct ConnectedGraphs {
    n: usize,
    next_mask: u64,
    end: u64,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            if mask_is_connected(self.n, mask) {
                return Some(Graph::from_edge_mask(self.n, mask));
            }
        }
        None
    }
}

/// Edge bitmasks of all labeled connected graphs on `n` nodes, ascending.
pub(crate) fn connected_edge_masks(n: usize) -> Vec<u64> {
    let pairs = n * (n - 1) / 2;
    (0..1u64 << pairs)
        .filter(|&mask| mask_is_connected(n, mask))
        .collect()
}

/// G(n, p) conditioned on connectivity: sample each edge independently
/// with probability `p`, resampling until the graph is connected, with a
/// bounded retry budget. Identical `(n, p, seed)` yield identical graphs.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::NOutOfRange { n, min: 2, max: usize::MAX });
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges)?;
        if crate::graph::is_connected(&g) {
            return Ok(g);
        }
    }
    Err(Error::RetriesExhausted(RETRY_BUDGET))
}

/// Uniform random labeled tree on `n` nodes via a random Pruefer sequence.
/// Identical `(n, seed)` yield identical trees.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::NOutOfRange { n, min: 1, max: usize::MAX });
    }
    if n == 1 {
        return Graph::new(1, &[]);
    }
    if n == 2 {
        return Graph::new(2, &[(0, 1)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<Node> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let (u, v) = {
        let mut leaves = (0..n).filter(|&v| degree[v] == 1);
        (leaves.next().unwrap(), leaves.next().unwrap())
    };
    edges.push((u, v));
    Graph::new(n, &edges)
}
