//! Undirected simple graphs with dense node ids and the distance machinery
//! used throughout the crate: multi-root BFS, eccentricity, radius/diameter,
//! bipartiteness with witnesses, and cross/forward edge classification.
//!
//! Nodes are `0..n-1`. Graphs up to 64 nodes additionally keep one `u64`
//! adjacency row per node; the subset searches and the flooding simulator
//! use those rows on their hot paths.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::{Error, Result};

/// Dense node id.
pub type Node = usize;

/// An undirected simple graph: no self-loops, no parallel edges.
///
/// Connectivity is deliberately *not* an invariant: auxiliary graphs of
/// bipartite inputs are disconnected, and the distance queries follow the
/// per-component convention where they have to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<Node>>,
    masks: Option<Vec<u64>>,
}

impl Graph {
    /// Builds a graph on `n` nodes from an edge list. Edges may be given in
    /// either orientation; self-loops and duplicates are rejected.
    pub fn new(n: usize, edges: &[(Node, Node)]) -> Result<Self> {
        let mut norm: Vec<(Node, Node)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::NodeOutOfRange { node: u, n });
            }
            if v >= n {
                return Err(Error::NodeOutOfRange { node: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Self::from_parts(n, norm.len(), adj))
    }

    fn from_parts(n: usize, m: usize, adj: Vec<Vec<Node>>) -> Self {
        let masks = (n <= 64).then(|| {
            let mut rows = vec![0u64; n];
            for (v, nbrs) in adj.iter().enumerate() {
                for &u in nbrs {
                    rows[v] |= 1u64 << u;
                }
            }
            rows
        });
        Graph { n, m, adj, masks }
    }

    /// Number of nodes.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: Node) -> usize {
        self.adj[v].len()
    }

    /// Minimum degree, 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: Node) -> &[Node] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Node, v: Node) -> bool {
        if let Some(rows) = &self.masks {
            u < self.n && v < self.n && rows[u] & (1u64 << v) != 0
        } else {
            u < self.n && self.adj[u].binary_search(&v).is_ok()
        }
    }

    /// Adjacency row of `v` as a bitset; `None` when the graph has more
    /// than 64 nodes.
    pub fn adjacency_mask(&self, v: Node) -> Option<u64> {
        self.masks.as_ref().map(|rows| rows[v])
    }

    pub(crate) fn mask_rows(&self) -> Option<&[u64]> {
        self.masks.as_deref()
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Node, Node)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Path `0-1-...-(n-1)`; `n >= 1`.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1, "path needs at least one node");
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    /// Cycle `0-1-...-(n-1)-0`; `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three nodes");
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges).unwrap()
    }

    /// Complete graph; `n >= 1`.
    pub fn complete(n: usize) -> Self {
        assert!(n >= 1, "complete graph needs at least one node");
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    /// Star with center 0 and leaves `1..n-1`; `n >= 1`.
    pub fn star(n: usize) -> Self {
        assert!(n >= 1, "star needs at least one node");
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    /// Decodes an edge bitmask over the `n*(n-1)/2` node pairs ordered
    /// `(0,1),(0,2),...,(0,n-1),(1,2),...`; bit `i` set means the `i`-th
    /// pair is an edge. Needs `n <= 11` so all pairs fit in a `u64`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        assert!(n * n.saturating_sub(1) / 2 <= 64, "edge mask needs n <= 11");
        let mut edges = Vec::with_capacity(mask.count_ones() as usize);
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask & (1u64 << bit) != 0 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    /// Serializes to the text format: `n m` header, then one `u v` line per
    /// edge with `u < v`, pairs ascending, single spaces, LF endings.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", u, v);
        }
        out
    }

    /// Parses the text format. Lines starting with `#` are ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(Node, Node)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("expected a nonnegative integer, got `{s}`"),
                })
            };
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("expected two fields, got {}", fields.len()),
                });
            }
            let (a, b) = (parse(fields[0])?, parse(fields[1])?);
            match header {
                None => header = Some((a, b)),
                Some((n, _)) => {
                    if a >= b {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: format!("edge must satisfy u < v, got {a} {b}"),
                        });
                    }
                    if b >= n {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: format!("node {b} out of range for n={n}"),
                        });
                    }
                    edges.push((a, b));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing `n m` header".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }
}

/// Hop distances from the nearest root of a root set. Unreachable nodes
/// carry `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceField {
    roots: Vec<Node>,
    dist: Vec<Option<usize>>,
}

impl DistanceField {
    pub fn distance(&self, v: Node) -> Option<usize> {
        self.dist[v]
    }

    pub fn distances(&self) -> &[Option<usize>] {
        &self.dist
    }

    pub fn roots(&self) -> &[Node] {
        &self.roots
    }

    pub fn all_reachable(&self) -> bool {
        self.dist.iter().all(Option::is_some)
    }

    /// Largest distance among reachable nodes. This is the eccentricity of
    /// the root set within the union of the components it touches.
    pub fn max_reachable(&self) -> usize {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// Multi-root BFS. Exact hop distances from the nearest root; nodes in
/// other components are marked unreachable.
pub fn bfs(g: &Graph, roots: &[Node]) -> Result<DistanceField> {
    if roots.is_empty() {
        return Err(Error::EmptyRoots);
    }
    let n = g.n();
    let mut dist = vec![None; n];
    let mut queue = VecDeque::new();
    for &r in roots {
        if r >= n {
            return Err(Error::NodeOutOfRange { node: r, n });
        }
        if dist[r].is_none() {
            dist[r] = Some(0);
            queue.push_back(r);
        }
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &u in g.neighbors(v) {
            if dist[u].is_none() {
                dist[u] = Some(d + 1);
                queue.push_back(u);
            }
        }
    }
    let mut roots = roots.to_vec();
    roots.sort_unstable();
    roots.dedup();
    Ok(DistanceField { roots, dist })
}

/// Maximum distance from `v` within its connected component.
pub fn eccentricity(g: &Graph, v: Node) -> Result<usize> {
    Ok(bfs(g, &[v])?.max_reachable())
}

/// `(Rad(G), Diam(G))` of a connected graph.
pub fn radius_diameter(g: &Graph) -> Result<(usize, usize)> {
    if g.n() == 0 {
        return Err(Error::NoNodes);
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut rad = usize::MAX;
    let mut diam = 0;
    for v in 0..g.n() {
        let e = eccentricity(g, v)?;
        rad = rad.min(e);
        diam = diam.max(e);
    }
    Ok((rad, diam))
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n() <= 1 {
        return true;
    }
    bfs(g, &[0]).map(|f| f.all_reachable()).unwrap_or(false)
}

/// Outcome of a 2-coloring attempt, per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    /// A valid 2-coloring; `left` holds the component roots' color class.
    Bipartite { left: Vec<Node>, right: Vec<Node> },
    /// A closed walk of odd length witnessing an odd cycle: consecutive
    /// nodes are adjacent and so are the last and the first.
    OddCycle { cycle: Vec<Node> },
}

/// 2-colors every component, or returns an odd-cycle witness.
pub fn bipartition(g: &Graph) -> Bipartiteness {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent: Vec<Node> = (0..n).collect();
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for &u in g.neighbors(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!cv);
                        parent[u] = v;
                        queue.push_back(u);
                    }
                    Some(cu) if cu == cv => {
                        return Bipartiteness::OddCycle {
                            cycle: odd_cycle_through(&parent, u, v),
                        };
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let left = (0..n).filter(|&v| color[v] == Some(false)).collect();
    let right = (0..n).filter(|&v| color[v] == Some(true)).collect();
    Bipartiteness::Bipartite { left, right }
}

pub fn is_bipartite(g: &Graph) -> bool {
    matches!(bipartition(g), Bipartiteness::Bipartite { .. })
}

// Joins the BFS-tree paths of the endpoints of a conflicting edge at their
// lowest common ancestor. Equal colors mean equal depth parity, so the
// resulting closed walk has odd length.
fn odd_cycle_through(parent: &[Node], u: Node, v: Node) -> Vec<Node> {
    let path_to_root = |mut x: Node| {
        let mut p = vec![x];
        while parent[x] != x {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = path_to_root(u);
    let pv = path_to_root(v);
    // Strip the shared suffix (toward the root), keep the LCA once.
    let mut iu = pu.len();
    let mut iv = pv.len();
    while iu > 0 && iv > 0 && pu[iu - 1] == pv[iv - 1] {
        iu -= 1;
        iv -= 1;
    }
    // Adjacent same-color nodes sit at equal BFS depth, so neither path is a
    // suffix of the other and pu[iu] is the LCA.
    let mut cycle: Vec<Node> = pu[..=iu].to_vec();
    let mut tail: Vec<Node> = pv[..iv].to_vec();
    tail.reverse();
    cycle.extend(tail);
    cycle
}

/// Edge tag relative to a root set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    /// Endpoints at different distances from the root set.
    Forward,
    /// Endpoints at equal distance from the root set.
    Cross,
}

/// Per-edge cross/forward tags, aligned with [`Graph::edges`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    edges: Vec<(Node, Node)>,
    kinds: Vec<EdgeKind>,
}

impl EdgeClassification {
    pub fn edges(&self) -> &[(Node, Node)] {
        &self.edges
    }

    pub fn kinds(&self) -> &[EdgeKind] {
        &self.kinds
    }

    pub fn cross_edges(&self) -> impl Iterator<Item = (Node, Node)> + '_ {
        self.edges
            .iter()
            .zip(&self.kinds)
            .filter(|(_, k)| **k == EdgeKind::Cross)
            .map(|(e, _)| *e)
    }

    pub fn cross_count(&self) -> usize {
        self.kinds.iter().filter(|k| **k == EdgeKind::Cross).count()
    }
}

/// Tags every edge as cross or forward relative to `roots`. Every node must
/// be reachable from the root set.
pub fn classify_edges(g: &Graph, roots: &[Node]) -> Result<EdgeClassification> {
    let field = bfs(g, roots)?;
    if let Some(v) = (0..g.n()).find(|&v| field.distance(v).is_none()) {
        return Err(Error::Unreachable(v));
    }
    let edges: Vec<_> = g.edges().collect();
    let kinds = edges
        .iter()
        .map(|&(u, v)| {
            if field.distance(u) == field.distance(v) {
                EdgeKind::Cross
            } else {
                EdgeKind::Forward
            }
        })
        .collect();
    Ok(EdgeClassification { edges, kinds })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent all-pairs shortest-path oracle (Floyd-Warshall).
    fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
        let n = g.n();
        let mut d = vec![vec![None; n]; n];
        for v in 0..n {
            d[v][v] = Some(0);
        }
        for (u, v) in g.edges() {
            d[u][v] = Some(1);
            d[v][u] = Some(1);
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                        if d[i][j].is_none_or(|c| a + b < c) {
                            d[i][j] = Some(a + b);
                        }
                    }
                }
            }
        }
        d
    }

    fn two_triangles() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::NodeOutOfRange { node: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        for g in [Graph::path(6), Graph::cycle(7), Graph::complete(5), Graph::star(8)] {
            let deg_sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            assert_eq!(deg_sum, 2 * g.m());
        }
    }

    #[test]
    fn bfs_on_path_from_one_end() {
        let g = Graph::path(4);
        let f = bfs(&g, &[0]).unwrap();
        assert_eq!(f.distances(), &[Some(0), Some(1), Some(2), Some(3)]);
    }

    #[test]
    fn bfs_with_all_roots_is_zero() {
        let g = Graph::cycle(6);
        let roots: Vec<Node> = (0..6).collect();
        let f = bfs(&g, &roots).unwrap();
        assert!(f.distances().iter().all(|d| *d == Some(0)));
    }

    #[test]
    fn bfs_on_five_cycle_matches_oracle() {
        let g = Graph::cycle(5);
        let oracle = floyd_warshall(&g);
        let row: Vec<Option<usize>> = oracle[0].clone();
        assert_eq!(row, vec![Some(0), Some(1), Some(2), Some(2), Some(1)]);
        let f = bfs(&g, &[0]).unwrap();
        assert_eq!(f.distances(), row.as_slice());
    }

    #[test]
    fn bfs_errors() {
        let g = Graph::path(3);
        assert_eq!(bfs(&g, &[]), Err(Error::EmptyRoots));
        assert_eq!(bfs(&g, &[5]), Err(Error::NodeOutOfRange { node: 5, n: 3 }));
    }

    #[test]
    fn eccentricity_examples() {
        assert_eq!(eccentricity(&Graph::path(4), 1).unwrap(), 2);
        for v in 0..4 {
            assert_eq!(eccentricity(&Graph::complete(4), v).unwrap(), 1);
        }
        // Disconnected input: the maximum is taken over v's component only.
        assert_eq!(eccentricity(&two_triangles(), 0).unwrap(), 1);
    }

    #[test]
    fn radius_diameter_examples() {
        assert_eq!(radius_diameter(&Graph::cycle(5)).unwrap(), (2, 2));
        assert_eq!(radius_diameter(&Graph::path(4)).unwrap(), (2, 3));
        for n in 2..=6 {
            assert_eq!(radius_diameter(&Graph::complete(n)).unwrap(), (1, 1));
        }
        assert_eq!(radius_diameter(&two_triangles()), Err(Error::Disconnected));
    }

    #[test]
    fn connectivity_examples() {
        assert!(!is_connected(&Graph::new(2, &[]).unwrap()));
        assert!(is_connected(&Graph::path(2)));
        // C_6 with node 0's edges removed: a path on 1..5 plus isolated 0.
        let g = Graph::new(6, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert!(!is_connected(&g));
    }

    #[test]
    fn bipartition_of_even_cycle() {
        match bipartition(&Graph::cycle(4)) {
            Bipartiteness::Bipartite { left, right } => {
                assert_eq!(left.len(), 2);
                assert_eq!(right.len(), 2);
            }
            _ => panic!("C_4 is bipartite"),
        }
    }

    fn check_odd_cycle(g: &Graph, cycle: &[Node]) {
        assert!(cycle.len() >= 3);
        assert_eq!(cycle.len() % 2, 1);
        let mut sorted = cycle.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), cycle.len(), "witness repeats a node");
        for i in 0..cycle.len() {
            let j = (i + 1) % cycle.len();
            assert!(g.has_edge(cycle[i], cycle[j]), "non-edge in witness");
        }
    }

    #[test]
    fn odd_cycle_witnesses() {
        let g = Graph::cycle(5);
        match bipartition(&g) {
            Bipartiteness::OddCycle { cycle } => {
                assert_eq!(cycle.len(), 5);
                check_odd_cycle(&g, &cycle);
            }
            _ => panic!("C_5 is not bipartite"),
        }
        let k4 = Graph::complete(4);
        match bipartition(&k4) {
            Bipartiteness::OddCycle { cycle } => check_odd_cycle(&k4, &cycle),
            _ => panic!("K_4 is not bipartite"),
        }
    }

    #[test]
    fn classify_edges_on_five_cycle() {
        let g = Graph::cycle(5);
        let c = classify_edges(&g, &[0]).unwrap();
        let cross: Vec<_> = c.cross_edges().collect();
        // The unique cross edge joins the two distance-2 nodes.
        assert_eq!(cross, vec![(2, 3)]);
    }

    #[test]
    fn classify_edges_on_triangle() {
        let g = Graph::cycle(3);
        let c = classify_edges(&g, &[0]).unwrap();
        assert_eq!(c.cross_edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn bipartite_graphs_have_no_cross_edges() {
        for g in [Graph::path(5), Graph::cycle(6), Graph::star(5)] {
            for v in 0..g.n() {
                assert_eq!(classify_edges(&g, &[v]).unwrap().cross_count(), 0);
            }
        }
    }

    #[test]
    fn classify_edges_requires_reachability() {
        let g = two_triangles();
        assert_eq!(classify_edges(&g, &[0]), Err(Error::Unreachable(3)));
    }

    #[test]
    fn eccentricity_sandwich_on_families() {
        for g in [Graph::path(7), Graph::cycle(8), Graph::complete(5), Graph::star(6)] {
            let (rad, diam) = radius_diameter(&g).unwrap();
            assert!(diam <= 2 * rad);
            for v in 0..g.n() {
                let e = eccentricity(&g, v).unwrap();
                assert!(rad <= e && e <= diam);
            }
        }
    }

    #[test]
    fn text_format_round_trip() {
        let g = Graph::cycle(5);
        let text = g.to_text();
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        let parsed = Graph::from_text(&text).unwrap();
        assert_eq!(parsed, g);
        assert_eq!(parsed.to_text(), text);
    }

    #[test]
    fn text_format_ignores_comments() {
        let text = "# a comment\n3 2\n0 1\n# another\n1 2\n";
        let g = Graph::from_text(text).unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn text_format_rejects_malformed_input() {
        assert!(matches!(
            Graph::from_text("3 1\n1 0\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Graph::from_text("3 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Graph::from_text("2 1\n0 5\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(Graph::from_text(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn edge_mask_decoding() {
        // Bits: (0,1) (0,2) (1,2) for n = 3.
        assert_eq!(Graph::from_edge_mask(3, 0b101), Graph::path(3));
        assert_eq!(Graph::from_edge_mask(3, 0b111), Graph::complete(3));
    }

    #[test]
    fn bfs_matches_oracle_on_random_family() {
        // Small deterministic mix of shapes, including disconnected ones.
        let graphs = [
            two_triangles(),
            Graph::new(5, &[(0, 1), (2, 3)]).unwrap(),
            Graph::star(6),
            Graph::cycle(7),
        ];
        for g in graphs {
            let oracle = floyd_warshall(&g);
            for v in 0..g.n() {
                let f = bfs(&g, &[v]).unwrap();
                assert_eq!(f.distances(), oracle[v].as_slice());
            }
        }
    }
}
