//! Source-set selection: exact k-radius, non-isolated k-radius, total
//! domination number, and minimal flooding time over k-subsets, plus a
//! greedy farthest-point heuristic and a k-radius-preserving spanning
//! tree.
//!
//! The exact searches enumerate `C(n, k)` subsets as bitmasks in ascending
//! mask order (Gosper's hack), which is colexicographic subset order; ties
//! in the optimum keep the first, i.e. smallest, mask. They refuse graphs
//! with more than [`BRUTE_FORCE_NODE_LIMIT`] nodes unless forced, and are
//! hard-capped at 64 nodes by the bitmask representation.

use crate::flood::{self, BitIter};
use crate::graph::{bfs, is_connected, radius_diameter, Graph, Node};
use crate::{Error, Result};

/// Node limit for the exact subset searches without `force`.
pub const BRUTE_FORCE_NODE_LIMIT: usize = 24;

/// What a [`CenterReport`] optimized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    KRadius,
    NiKRadius,
    TotalDomination,
    FloodK,
}

impl std::fmt::Display for Objective {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Objective::KRadius => "k_radius",
            Objective::NiKRadius => "ni_k_radius",
            Objective::TotalDomination => "total_domination",
            Objective::FloodK => "flood_k",
        })
    }
}

/// An optimal (or, for the greedy heuristic, achieved) objective value
/// together with one witness subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterReport {
    pub objective: Objective,
    pub k: usize,
    pub value: usize,
    /// Witness subset, ascending.
    pub witness: Vec<Node>,
}

impl CenterReport {
    /// One-line serialization: `objective k value witness={v,...}`.
    pub fn to_line(&self) -> String {
        let nodes: Vec<String> = self.witness.iter().map(ToString::to_string).collect();
        format!(
            "{} {} {} witness={{{}}}",
            self.objective,
            self.k,
            self.value,
            nodes.join(",")
        )
    }
}

/// Ascending k-subset bitmasks of `0..n` (Gosper's hack).
pub(crate) struct KSubsets {
    next: Option<u64>,
    limit: u64,
}

pub(crate) fn k_subsets(n: usize, k: usize) -> KSubsets {
    debug_assert!(k >= 1 && k <= n && n <= 64);
    let first = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    KSubsets {
        next: Some(first),
        limit,
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        if cur > self.limit {
            self.next = None;
            return None;
        }
        self.next = cur.checked_add(cur & cur.wrapping_neg()).map(|r| {
            let c = cur & cur.wrapping_neg();
            (((r ^ cur) >> 2) / c) | r
        });
        Some(cur)
    }
}

fn mask_to_nodes(mask: u64) -> Vec<Node> {
    BitIter(mask).collect()
}

// Shared preamble for the exact searches: connectivity, k range, size
// guard, and access to the bitmask adjacency rows.
fn exact_search_rows(g: &Graph, k: usize, force: bool) -> Result<&[u64]> {
    let n = g.n();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let limit = if force { 64 } else { BRUTE_FORCE_NODE_LIMIT };
    if n > limit {
        return Err(Error::SearchTooLarge { n, limit });
    }
    g.mask_rows()
        .ok_or(Error::SearchTooLarge { n, limit: 64 })
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

// Max distance from `mask` to any node, by level-synchronous BFS over the
// bitset rows. Returns None when the search would exceed `cap` or some
// node is unreachable.
fn covering_radius(rows: &[u64], full: u64, mask: u64, cap: usize) -> Option<usize> {
    let mut seen = mask;
    let mut frontier = mask;
    let mut d = 0usize;
    while seen != full {
        let mut next = 0u64;
        for v in BitIter(frontier) {
            next |= rows[v];
        }
        next &= !seen;
        if next == 0 {
            return None;
        }
        d += 1;
        if d > cap {
            return None;
        }
        seen |= next;
        frontier = next;
    }
    Some(d)
}

fn induced_has_no_isolated(rows: &[u64], mask: u64) -> bool {
    BitIter(mask).all(|v| rows[v] & mask != 0)
}

fn totally_dominates(rows: &[u64], n: usize, mask: u64) -> bool {
    (0..n).all(|v| rows[v] & mask != 0)
}

/// Exact k-radius: the minimum over all k-subsets `U` of the maximum
/// distance from any node to `U`.
pub fn k_radius(g: &Graph, k: usize, force: bool) -> Result<CenterReport> {
    let rows = exact_search_rows(g, k, force)?;
    let n = g.n();
    let full = full_mask(n);
    let mut best = usize::MAX;
    let mut witness = 0u64;
    for mask in k_subsets(n, k) {
        if let Some(d) = covering_radius(rows, full, mask, best.min(n)) {
            if d < best {
                best = d;
                witness = mask;
                if best == 0 {
                    break;
                }
            }
        }
    }
    Ok(CenterReport {
        objective: Objective::KRadius,
        k,
        value: best,
        witness: mask_to_nodes(witness),
    })
}

/// Exact non-isolated k-radius: as [`k_radius`] but restricted to subsets
/// whose induced subgraph has no isolated node. `Ok(None)` when no such
/// subset exists — in particular always for `k = 1`.
pub fn ni_k_radius(g: &Graph, k: usize, force: bool) -> Result<Option<CenterReport>> {
    let n = g.n();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    if k == 1 {
        // A single node is always isolated in the subgraph it induces.
        return Ok(None);
    }
    let rows = exact_search_rows(g, k, force)?;
    let full = full_mask(n);
    let mut best = usize::MAX;
    let mut witness = 0u64;
    for mask in k_subsets(n, k) {
        if !induced_has_no_isolated(rows, mask) {
            continue;
        }
        if let Some(d) = covering_radius(rows, full, mask, best.min(n)) {
            if d < best {
                best = d;
                witness = mask;
                if best == 0 {
                    break;
                }
            }
        }
    }
    if best == usize::MAX {
        return Ok(None);
    }
    Ok(Some(CenterReport {
        objective: Objective::NiKRadius,
        k,
        value: best,
        witness: mask_to_nodes(witness),
    }))
}

/// Exact total domination number: the smallest `k` admitting a subset `S`
/// with every node of the graph adjacent to a node of `S`. Requires
/// `n >= 2`.
pub fn total_domination_number(g: &Graph, force: bool) -> Result<CenterReport> {
    let n = g.n();
    if n < 2 {
        return Err(Error::NOutOfRange { n, min: 2, max: 64 });
    }
    let rows = exact_search_rows(g, 1, force)?;
    for k in 2..=n {
        for mask in k_subsets(n, k) {
            if totally_dominates(rows, n, mask) {
                return Ok(CenterReport {
                    objective: Objective::TotalDomination,
                    k,
                    value: k,
                    witness: mask_to_nodes(mask),
                });
            }
        }
    }
    // A connected graph on n >= 2 nodes is totally dominated by V itself.
    unreachable!("connected graph without a total dominating set");
}

/// Exact minimal flooding time over all k-subsets.
///
/// A subset is pruned without simulation when its covering radius already
/// exceeds the incumbent: the flood needs at least `d(S, V)` rounds to
/// reach the farthest node.
pub fn flood_k(g: &Graph, k: usize, force: bool) -> Result<CenterReport> {
    let rows = exact_search_rows(g, k, force)?;
    let n = g.n();
    let full = full_mask(n);
    let (_, diam) = radius_diameter(g)?;
    let cap = 2 * n + diam + 2;
    let mut best = usize::MAX;
    let mut witness = 0u64;
    for mask in k_subsets(n, k) {
        if covering_radius(rows, full, mask, best.min(n)).is_none() {
            continue;
        }
        let (rounds, _) = flood::run_masked(rows, mask, cap, None)?;
        if rounds < best {
            best = rounds;
            witness = mask;
            if best <= 1 {
                break;
            }
        }
    }
    Ok(CenterReport {
        objective: Objective::FloodK,
        k,
        value: best,
        witness: mask_to_nodes(witness),
    })
}

/// Farthest-point heuristic for the k-center objective. The first pick is
/// the smallest-id node of minimum eccentricity; each further pick is the
/// smallest-id node farthest from the chosen set. The achieved value is
/// within a factor 2 of the exact k-radius. No size limit.
pub fn greedy_k_center(g: &Graph, k: usize) -> Result<CenterReport> {
    let n = g.n();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut first = 0;
    let mut best_ecc = usize::MAX;
    for v in 0..n {
        let e = bfs(g, &[v])?.max_reachable();
        if e < best_ecc {
            best_ecc = e;
            first = v;
        }
    }
    let mut dist: Vec<usize> = bfs(g, &[first])?
        .distances()
        .iter()
        .map(|d| d.expect("connected graph"))
        .collect();
    let mut centers = vec![first];
    while centers.len() < k {
        let far = (0..n).max_by_key(|&v| (dist[v], std::cmp::Reverse(v))).expect("n >= 1");
        centers.push(far);
        let update = bfs(g, &[far])?;
        for (v, d) in dist.iter_mut().enumerate() {
            *d = (*d).min(update.distance(v).expect("connected graph"));
        }
    }
    let value = dist.iter().copied().max().unwrap_or(0);
    centers.sort_unstable();
    Ok(CenterReport {
        objective: Objective::KRadius,
        k,
        value,
        witness: centers,
    })
}

/// A spanning tree with the same k-radius as the graph, for the `k` used
/// in the construction: pick a k-center, partition nodes by nearest
/// center (ties to the smallest witness index), take a BFS tree inside
/// each part, and reconnect the parts with `k - 1` of the original edges.
pub fn spanning_tree_preserving_k_radius(g: &Graph, k: usize) -> Result<Graph> {
    let report = k_radius(g, k, false)?;
    let centers = report.witness;
    let n = g.n();
    let fields: Vec<_> = centers
        .iter()
        .map(|&u| bfs(g, &[u]))
        .collect::<Result<_>>()?;
    let part: Vec<usize> = (0..n)
        .map(|v| {
            let mut bi = 0;
            let mut bd = fields[0].distance(v).expect("connected graph");
            for (i, f) in fields.iter().enumerate().skip(1) {
                let d = f.distance(v).expect("connected graph");
                if d < bd {
                    bd = d;
                    bi = i;
                }
            }
            bi
        })
        .collect();

    let mut tree_edges: Vec<(Node, Node)> = Vec::with_capacity(n.saturating_sub(1));
    let mut visited = vec![false; n];
    for (i, &root) in centers.iter().enumerate() {
        let mut queue = std::collections::VecDeque::from([root]);
        visited[root] = true;
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if part[w] == i && !visited[w] {
                    visited[w] = true;
                    tree_edges.push((v, w));
                    queue.push_back(w);
                }
            }
        }
    }
    assert!(
        visited.iter().all(|&b| b),
        "nearest-center parts must induce connected subgraphs"
    );

    // Union-find over the k parts; any inter-part edges work.
    let mut parent: Vec<usize> = (0..centers.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for (u, v) in g.edges() {
        let (pu, pv) = (find(&mut parent, part[u]), find(&mut parent, part[v]));
        if pu != pv {
            parent[pu] = pv;
            tree_edges.push((u, v));
        }
    }
    let t = Graph::new(n, &tree_edges)?;
    debug_assert_eq!(t.m(), n - 1);
    debug_assert!(is_connected(&t));
    Ok(t)
}
