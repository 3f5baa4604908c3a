//! Named verification suites: each sweeps every labeled connected graph up
//! to a node bound and checks one family of statements about flooding
//! times, k-centers, and the auxiliary constructions. Two suites are
//! exploratory: they report findings instead of failing.
//!
//! Suites parallelize over graphs; failure aggregation follows the
//! enumeration order, so results are independent of the worker count.

use rayon::prelude::*;

use crate::aux_graph::{build_forward_subgraph, build_g_star, flood_via_aux};
use crate::centers::{self, flood_k, k_radius, ni_k_radius, spanning_tree_preserving_k_radius};
use crate::enumerate::{connected_edge_masks, random_connected};
use crate::flood::{self, BitIter, SourceSet};
use crate::graph::{
    bfs, bipartition, eccentricity, is_bipartite, radius_diameter, Bipartiteness, Graph, Node,
};
use crate::{Error, Result};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All suite ids accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "thm1-equivalence",
    "cor1-bipartite",
    "thm6-single-source",
    "thm2-bounds",
    "thm3-nonbip",
    "thm3-monotone",
    "thm4-bipartite-gap",
    "lemma-tree-radius",
    "lemma-ni-half",
    "lemma-span-tree",
    "corr-trianglefree",
    "conjecture-scan",
    "anticenter-search",
];

/// Exploratory suites report findings and never fail a build.
pub fn is_exploratory(name: &str) -> bool {
    matches!(name, "conjecture-scan" | "anticenter-search")
}

/// One violated check: the graph, the parameters, and what was expected
/// versus observed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteFailure {
    pub n: usize,
    pub edges: Vec<(Node, Node)>,
    pub params: String,
    pub expected: String,
    pub observed: String,
}

impl std::fmt::Display for SuiteFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "n={} edges={:?} params=[{}] expected=[{}] observed=[{}]",
            self.n, self.edges, self.params, self.expected, self.observed
        )
    }
}

/// Outcome of one suite run.
#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub suite: String,
    /// Number of (graph, parameter) instances checked.
    pub checked: usize,
    pub failures: Vec<SuiteFailure>,
    /// For exploratory suites: number of reported findings.
    pub findings: usize,
    /// Report lines (exploratory suites always emit at least a summary).
    pub notes: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Machine-readable summary: `suite=NAME checked=I failures=F`.
    pub fn summary_line(&self) -> String {
        format!(
            "suite={} checked={} failures={}",
            self.suite,
            self.checked,
            self.failures.len()
        )
    }
}

#[derive(Default)]
struct Check {
    checked: usize,
    failures: Vec<SuiteFailure>,
    findings: usize,
    notes: Vec<String>,
}

impl Check {
    fn merge(&mut self, other: Check) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.findings += other.findings;
        self.notes.extend(other.notes);
    }

    fn fail(&mut self, g: &Graph, params: String, expected: String, observed: String) {
        self.failures.push(SuiteFailure {
            n: g.n(),
            edges: g.edges().collect(),
            params,
            expected,
            observed,
        });
    }
}

// Sweep all connected graphs on lo..=hi nodes, in enumeration order, with
// the per-graph work parallelized.
fn over_connected(lo: usize, hi: usize, per_graph: impl Fn(&Graph) -> Check + Sync) -> Check {
    let mut total = Check::default();
    for n in lo..=hi {
        let masks = connected_edge_masks(n);
        let partials: Vec<Check> = masks
            .par_iter()
            .map(|&mask| per_graph(&Graph::from_edge_mask(n, mask)))
            .collect();
        for p in partials {
            total.merge(p);
        }
    }
    total
}

fn mask_nodes(mask: u64) -> Vec<Node> {
    BitIter(mask).collect()
}

// (rounds, messages) of one flooding run; enumeration guarantees a
// connected graph, and termination is bounded well under 3n + 2.
fn sim(g: &Graph, sources: &[Node]) -> (usize, usize) {
    flood::run(g, sources, 3 * g.n() + 2, None).expect("flooding must terminate within the cap")
}

fn source_masks_for(n: usize) -> Vec<u64> {
    let full = (1u64 << n) - 1;
    if n <= 5 {
        (1..=full).collect()
    } else {
        // Larger sweeps cap the source-set size at 3 and add S = V.
        let mut masks: Vec<u64> = (1..full).filter(|m| m.count_ones() <= 3).collect();
        masks.push(full);
        masks
    }
}

fn flood_all_k(g: &Graph) -> Vec<usize> {
    (1..=g.n())
        .map(|k| flood_k(g, k, false).expect("suite graphs fit the search").value)
        .collect()
}

fn r_all_k(g: &Graph) -> Vec<usize> {
    (1..=g.n())
        .map(|k| k_radius(g, k, false).expect("suite graphs fit the search").value)
        .collect()
}

fn rni_all_k(g: &Graph) -> Vec<Option<usize>> {
    (1..=g.n())
        .map(|k| {
            ni_k_radius(g, k, false)
                .expect("suite graphs fit the search")
                .map(|r| r.value)
        })
        .collect()
}

// ---------------------------------------------------------------- suites

// Flooding time equals the virtual-source eccentricity in the mirrored
// graph minus one; it is bounded by d(S,V) + 1 + Diam; and the message
// count is |E| exactly when the star graph is bipartite, else 2|E|.
fn check_equivalence(g: &Graph) -> Check {
    let mut out = Check::default();
    let (_, diam) = radius_diameter(g).expect("connected");
    let m = g.m();
    for mask in source_masks_for(g.n()) {
        let nodes = mask_nodes(mask);
        let s = SourceSet::new(g, nodes.iter().copied()).expect("valid sources");
        let (rounds, messages) = sim(g, &nodes);
        out.checked += 1;
        let via = flood_via_aux(g, &s).expect("aux construction");
        if via != rounds {
            out.fail(
                g,
                format!("S={nodes:?}"),
                "aux eccentricity - 1 = simulated rounds".into(),
                format!("aux gives {via}, simulation gives {rounds}"),
            );
        }
        let ds = bfs(g, &nodes).expect("valid roots").max_reachable();
        if rounds > ds + 1 + diam {
            out.fail(
                g,
                format!("S={nodes:?}"),
                format!("rounds <= d(S,V)+1+Diam = {}", ds + 1 + diam),
                format!("rounds = {rounds}"),
            );
        }
        let star = build_g_star(g, &s).expect("star construction");
        let expected = if is_bipartite(&star.graph) { m } else { 2 * m };
        if messages != expected {
            out.fail(
                g,
                format!("S={nodes:?}"),
                format!("messages = {expected}"),
                format!("messages = {messages}"),
            );
        }
    }
    out
}

// On bipartite graphs single-source flooding finishes in exactly the
// eccentricity of the source, so the best single source is a center.
fn check_bipartite_single_source(g: &Graph) -> Check {
    let mut out = Check::default();
    if !is_bipartite(g) {
        return out;
    }
    let (rad, _) = radius_diameter(g).expect("connected");
    let mut flood1 = usize::MAX;
    for v0 in 0..g.n() {
        let (rounds, _) = sim(g, &[v0]);
        let ecc = eccentricity(g, v0).expect("valid node");
        out.checked += 1;
        if rounds != ecc {
            out.fail(
                g,
                format!("v0={v0}"),
                format!("rounds = eccentricity = {ecc}"),
                format!("rounds = {rounds}"),
            );
        }
        flood1 = flood1.min(rounds);
    }
    out.checked += 1;
    if flood1 != rad {
        out.fail(
            g,
            "best single source".into(),
            format!("min rounds = Rad = {rad}"),
            format!("min rounds = {flood1}"),
        );
    }
    out
}

// Single-source bounds: equality with eccentricity on bipartite graphs;
// Rad < rounds <= ecc + Diam + 1 otherwise; and the best single source
// matches the radius exactly when the graph is bipartite.
fn check_single_source_bounds(g: &Graph) -> Check {
    let mut out = Check::default();
    let (rad, diam) = radius_diameter(g).expect("connected");
    let bip = is_bipartite(g);
    let mut flood1 = usize::MAX;
    for v0 in 0..g.n() {
        let (rounds, _) = sim(g, &[v0]);
        let ecc = eccentricity(g, v0).expect("valid node");
        out.checked += 1;
        if bip {
            if rounds != ecc {
                out.fail(
                    g,
                    format!("v0={v0}"),
                    format!("rounds = {ecc}"),
                    format!("rounds = {rounds}"),
                );
            }
        } else if rounds <= rad || rounds > ecc + diam + 1 {
            out.fail(
                g,
                format!("v0={v0}"),
                format!("{rad} < rounds <= {}", ecc + diam + 1),
                format!("rounds = {rounds}"),
            );
        }
        flood1 = flood1.min(rounds);
    }
    out.checked += 1;
    if (flood1 == rad) != bip {
        out.fail(
            g,
            "best single source".into(),
            format!("min rounds == Rad iff bipartite (bipartite={bip})"),
            format!("min rounds = {flood1}, Rad = {rad}"),
        );
    }
    out
}

// The sandwich r_k <= Flood_k <= r^ni_k + 1 <= r_{k/2} + 1 (graphs up to
// five nodes), the exact one-round characterization, and the guarantees
// for large k.
fn check_bound_chain(g: &Graph) -> Check {
    let mut out = Check::default();
    let n = g.n();
    let floods = flood_all_k(g);
    let sides = match bipartition(g) {
        Bipartiteness::Bipartite { left, right } => Some((left.len(), right.len())),
        Bipartiteness::OddCycle { .. } => None,
    };
    let delta = g.min_degree();
    if n <= 5 {
        let rs = r_all_k(g);
        let rnis = rni_all_k(g);
        for k in 2..=n {
            if let Some(rni) = rnis[k - 1] {
                out.checked += 1;
                let r = rs[k - 1];
                let r_half = rs[k / 2 - 1];
                let f = floods[k - 1];
                if !(r <= f && f <= rni + 1 && rni <= r_half) {
                    out.fail(
                        g,
                        format!("k={k}"),
                        format!("{r} <= Flood_k <= {} <= {}", rni + 1, r_half + 1),
                        format!("Flood_k = {f}"),
                    );
                }
            }
        }
    }
    for k in 1..=n {
        let f = floods[k - 1];
        out.checked += 1;
        let expect_one = k == n || sides.is_some_and(|(l, r)| k == l || k == r);
        if (f == 1) != expect_one {
            out.fail(
                g,
                format!("k={k}"),
                format!("Flood_k == 1 iff k=n or k matches a bipartition side (expected {expect_one})"),
                format!("Flood_k = {f}"),
            );
        }
        if (3 * k >= 2 * n || (delta >= 3 && 2 * k >= n)) && f > 2 {
            out.fail(
                g,
                format!("k={k}"),
                "Flood_k <= 2 for k >= 2n/3, or delta >= 3 and k >= n/2".into(),
                format!("Flood_k = {f}"),
            );
        }
        if 2 * k >= n && f > 3 {
            out.fail(
                g,
                format!("k={k}"),
                "Flood_k <= 3 for k >= n/2".into(),
                format!("Flood_k = {f}"),
            );
        }
    }
    out
}

// Non-bipartite graphs: the extra round over the k-radius, the exact
// two-round characterization, the radius lower bound, and monotonicity of
// the optimum in k.
fn check_nonbipartite_bounds(g: &Graph) -> Check {
    let mut out = Check::default();
    if is_bipartite(g) {
        return out;
    }
    let n = g.n();
    let (rad, _) = radius_diameter(g).expect("connected");
    let floods = flood_all_k(g);
    let rs = r_all_k(g);
    let rnis = rni_all_k(g);
    for k in 1..=n {
        let f = floods[k - 1];
        out.checked += 1;
        if f < rs[k - 1] + 1 {
            out.fail(
                g,
                format!("k={k}"),
                format!("Flood_k >= r_k + 1 = {}", rs[k - 1] + 1),
                format!("Flood_k = {f}"),
            );
        }
        if k >= 2 {
            let two_iff = rnis[k - 1] == Some(1);
            if (f == 2) != two_iff {
                out.fail(
                    g,
                    format!("k={k}"),
                    format!("Flood_k == 2 iff r^ni_k == 1 (expected {two_iff})"),
                    format!("Flood_k = {f}, r^ni_k = {:?}", rnis[k - 1]),
                );
            }
        }
        // Real-valued bound Flood_k >= Rad/k + 1/2, in exact integers.
        if 2 * k * f < 2 * rad + k {
            out.fail(
                g,
                format!("k={k}"),
                format!("2k*Flood_k >= 2Rad + k = {}", 2 * rad + k),
                format!("2k*Flood_k = {}", 2 * k * f),
            );
        }
        if k < n && floods[k] > f {
            out.fail(
                g,
                format!("k={k}"),
                "Flood_(k+1) <= Flood_k on non-bipartite graphs".into(),
                format!("Flood_k = {f}, Flood_(k+1) = {}", floods[k]),
            );
        }
    }
    out
}

// Per-set monotonicity on non-bipartite graphs: adding any node to any
// source set never increases the flooding time.
fn check_per_set_monotonicity(g: &Graph) -> Check {
    let mut out = Check::default();
    if is_bipartite(g) {
        return out;
    }
    let n = g.n();
    let full = (1u64 << n) - 1;
    let rounds_of: Vec<usize> = (0..=full)
        .map(|mask| if mask == 0 { 0 } else { sim(g, &mask_nodes(mask)).0 })
        .collect();
    for mask in 1..=full {
        for v in 0..n {
            if mask & (1 << v) != 0 {
                continue;
            }
            out.checked += 1;
            let grown = mask | (1 << v);
            if rounds_of[grown as usize] > rounds_of[mask as usize] {
                out.fail(
                    g,
                    format!("S={:?} v={v}", mask_nodes(mask)),
                    format!("Flood(S+v) <= Flood(S) = {}", rounds_of[mask as usize]),
                    format!("Flood(S+v) = {}", rounds_of[grown as usize]),
                );
            }
        }
    }
    out
}

fn has_one_sided_k_center(g: &Graph, side: &[Node], k: usize, target: usize) -> bool {
    if k == 0 || side.len() < k {
        return false;
    }
    for mask in centers::k_subsets(side.len(), k) {
        let nodes: Vec<Node> = BitIter(mask).map(|i| side[i]).collect();
        if bfs(g, &nodes).expect("valid roots").max_reachable() == target {
            return true;
        }
    }
    false
}

// Bipartite graphs: equality with the k-radius holds exactly when some
// k-center fits inside one side, and the gap to the k-radius is at most 1
// while k fits in the larger side, at most 2 always.
fn check_bipartite_gap(g: &Graph) -> Check {
    let mut out = Check::default();
    let (left, right) = match bipartition(g) {
        Bipartiteness::Bipartite { left, right } => (left, right),
        Bipartiteness::OddCycle { .. } => return out,
    };
    let n = g.n();
    let floods = flood_all_k(g);
    let rs = r_all_k(g);
    for k in 1..=n {
        let f = floods[k - 1] as isize;
        let r = rs[k - 1] as isize;
        out.checked += 1;
        let one_sided = has_one_sided_k_center(g, &left, k, rs[k - 1])
            || has_one_sided_k_center(g, &right, k, rs[k - 1]);
        if (f == r) != one_sided {
            out.fail(
                g,
                format!("k={k}"),
                format!("Flood_k == r_k iff a one-sided k-center exists (expected {one_sided})"),
                format!("Flood_k = {f}, r_k = {r}"),
            );
        }
        if k <= left.len().max(right.len()) && f - r > 1 {
            out.fail(
                g,
                format!("k={k}"),
                "Flood_k - r_k <= 1 while k fits in the larger side".into(),
                format!("gap = {}", f - r),
            );
        }
        if f - r > 2 {
            out.fail(
                g,
                format!("k={k}"),
                "Flood_k - r_k <= 2".into(),
                format!("gap = {}", f - r),
            );
        }
    }
    out
}

// Trees: k * r_k >= Rad - k/2, in exact integers.
fn check_tree_radius_bound(g: &Graph) -> Check {
    let mut out = Check::default();
    if g.m() + 1 != g.n() {
        return out;
    }
    let (rad, _) = radius_diameter(g).expect("connected");
    let rs = r_all_k(g);
    for k in 1..=g.n() {
        out.checked += 1;
        if 2 * k * rs[k - 1] + k < 2 * rad {
            out.fail(
                g,
                format!("k={k}"),
                format!("2k*r_k + k >= 2Rad = {}", 2 * rad),
                format!("2k*r_k + k = {}", 2 * k * rs[k - 1] + k),
            );
        }
    }
    out
}

// r^ni_k <= 2 once k >= n/2 (k >= 2; a singleton is isolated by
// definition).
fn check_ni_half(g: &Graph) -> Check {
    let mut out = Check::default();
    let n = g.n();
    for k in 2..=n {
        if 2 * k < n {
            continue;
        }
        out.checked += 1;
        match ni_k_radius(g, k, false).expect("suite graphs fit the search") {
            Some(r) if r.value <= 2 => {}
            Some(r) => out.fail(
                g,
                format!("k={k}"),
                "r^ni_k <= 2 for k >= n/2".into(),
                format!("r^ni_k = {}", r.value),
            ),
            None => out.fail(
                g,
                format!("k={k}"),
                "a non-isolated k-subset exists for k >= 2".into(),
                "infeasible".into(),
            ),
        }
    }
    out
}

// The construction-specific spanning tree preserves the k-radius it was
// built for.
fn check_spanning_tree(g: &Graph) -> Check {
    let mut out = Check::default();
    for k in 1..=g.n() {
        out.checked += 1;
        let t = spanning_tree_preserving_k_radius(g, k).expect("suite graphs fit the search");
        let rg = k_radius(g, k, false).expect("fits").value;
        let rt = k_radius(&t, k, false).expect("fits").value;
        if rg != rt {
            out.fail(
                g,
                format!("k={k}"),
                format!("r_k(T) = r_k(G) = {rg}"),
                format!("r_k(T) = {rt}"),
            );
        }
    }
    out
}

fn is_triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| {
        match (g.adjacency_mask(u), g.adjacency_mask(v)) {
            (Some(a), Some(b)) => a & b == 0,
            _ => !g
                .neighbors(u)
                .iter()
                .any(|w| g.neighbors(v).binary_search(w).is_ok()),
        }
    })
}

// Triangle-free non-bipartite graphs: the degree-based upper bound
// Flood_k <= 2(n-1) / (delta * (k/2 + 1)) + 5, in exact integers.
fn check_trianglefree_bound(g: &Graph) -> Check {
    let mut out = Check::default();
    if is_bipartite(g) || !is_triangle_free(g) {
        return out;
    }
    let n = g.n();
    let delta = g.min_degree();
    let floods = flood_all_k(g);
    for k in 2..n {
        out.checked += 1;
        let scale = delta * (k / 2 + 1);
        if floods[k - 1] * scale > 2 * (n - 1) + 5 * scale {
            out.fail(
                g,
                format!("k={k}"),
                format!("Flood_k * d(k/2+1) <= 2(n-1) + 5d(k/2+1) = {}", 2 * (n - 1) + 5 * scale),
                format!("lhs = {}", floods[k - 1] * scale),
            );
        }
    }
    out
}

// Exploratory: does k * Flood_k >= Rad + k - 1 hold on non-bipartite
// graphs? Violations are reported, never failed. The k = n boundary is
// excluded: Flood_n = 1 unconditionally, which already contradicts the
// bound on any graph of radius 2 or more, so the interesting regime is
// k < n.
fn scan_conjecture(g: &Graph) -> Check {
    let mut out = Check::default();
    if is_bipartite(g) {
        return out;
    }
    let (rad, _) = radius_diameter(g).expect("connected");
    let floods = flood_all_k(g);
    for k in 1..g.n() {
        out.checked += 1;
        if k * floods[k - 1] + 1 < rad + k {
            out.findings += 1;
            out.notes.push(format!(
                "conjecture violated: n={} edges={:?} k={} Flood_k={} Rad={}",
                g.n(),
                g.edges().collect::<Vec<_>>(),
                k,
                floods[k - 1],
                rad
            ));
        }
    }
    out
}

// Exploratory: graphs where no central node achieves the single-source
// optimum.
fn search_anticenters(g: &Graph) -> Check {
    let mut out = Check::default();
    let (rad, _) = radius_diameter(g).expect("connected");
    let mut flood1 = usize::MAX;
    let mut central_best = usize::MAX;
    for v0 in 0..g.n() {
        let (rounds, _) = sim(g, &[v0]);
        flood1 = flood1.min(rounds);
        if eccentricity(g, v0).expect("valid node") == rad {
            central_best = central_best.min(rounds);
        }
    }
    out.checked += 1;
    if central_best > flood1 {
        out.findings += 1;
        out.notes.push(format!(
            "anticenter: n={} edges={:?} Rad={} Flood_1={} best central source={}",
            g.n(),
            g.edges().collect::<Vec<_>>(),
            rad,
            flood1,
            central_best
        ));
    }
    out
}

// ------------------------------------------------------------- dispatch

fn finish(name: &str, mut check: Check) -> SuiteResult {
    if is_exploratory(name) {
        let scope = if name == "conjecture-scan" {
            " (k < n; at k = n the bound fails whenever Rad >= 2 since Flood_n = 1)"
        } else {
            ""
        };
        check.notes.push(format!(
            "{name}: checked={} findings={}{scope}",
            check.checked, check.findings
        ));
    }
    SuiteResult {
        suite: name.to_string(),
        checked: check.checked,
        failures: check.failures,
        findings: check.findings,
        notes: check.notes,
    }
}

/// Runs the named suite exhaustively over all connected labeled graphs
/// with at most `n_max` nodes (`n_max <= 7`).
pub fn run_suite(name: &str, n_max: usize) -> Result<SuiteResult> {
    if !SUITES.contains(&name) {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    if !(1..=7).contains(&n_max) {
        return Err(Error::NOutOfRange { n: n_max, min: 1, max: 7 });
    }
    let check = match name {
        "thm1-equivalence" => over_connected(1, n_max, check_equivalence),
        "cor1-bipartite" => over_connected(1, n_max, check_bipartite_single_source),
        "thm6-single-source" => over_connected(1, n_max, check_single_source_bounds),
        // The one-round characterization starts at n = 2: an isolated
        // source never sends, so its flooding time is 0, not 1.
        "thm2-bounds" => over_connected(2, n_max, check_bound_chain),
        "thm3-nonbip" => over_connected(3, n_max, check_nonbipartite_bounds),
        "thm3-monotone" => over_connected(3, n_max, check_per_set_monotonicity),
        "thm4-bipartite-gap" => over_connected(1, n_max, check_bipartite_gap),
        "lemma-tree-radius" => over_connected(1, n_max, check_tree_radius_bound),
        "lemma-ni-half" => over_connected(2, n_max, check_ni_half),
        "lemma-span-tree" => over_connected(1, n_max, check_spanning_tree),
        "corr-trianglefree" => over_connected(3, n_max, check_trianglefree_bound),
        "conjecture-scan" => over_connected(3, n_max, scan_conjecture),
        "anticenter-search" => over_connected(1, n_max, search_anticenters),
        _ => unreachable!("suite list checked above"),
    };
    Ok(finish(name, check))
}

/// Randomized variant for the per-instance suites that need no brute-force
/// subset search: `thm1-equivalence` (one random source set of size at
/// most 3 per sample), `cor1-bipartite` (run on the bipartite forward
/// subgraph of each sample), and `thm6-single-source`. Samples are G(n,
/// 0.3) conditioned on connectivity, seeded deterministically.
pub fn run_suite_random(name: &str, n: usize, samples: usize, seed: u64) -> Result<SuiteResult> {
    if !(2..=64).contains(&n) {
        return Err(Error::NOutOfRange { n, min: 2, max: 64 });
    }
    let mut total = Check::default();
    for i in 0..samples {
        let g = random_connected(n, 0.3, seed.wrapping_add(i as u64))?;
        let partial = match name {
            "thm1-equivalence" => {
                let mut rng =
                    ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64) ^ 0x5DEECE66D);
                let size = rng.gen_range(1..=3usize.min(n));
                let picks = rand::seq::index::sample(&mut rng, n, size).into_vec();
                check_equivalence_one(&g, &picks)
            }
            "cor1-bipartite" => {
                let forward = build_forward_subgraph(&g, &[0])?;
                check_bipartite_single_source(&forward)
            }
            "thm6-single-source" => check_single_source_bounds(&g),
            other => {
                return Err(Error::UnknownSuite(format!(
                    "{other} (randomized mode supports thm1-equivalence, cor1-bipartite, thm6-single-source)"
                )))
            }
        };
        total.merge(partial);
    }
    Ok(finish(name, total))
}

// Single source-set variant of the equivalence check, for random sweeps.
fn check_equivalence_one(g: &Graph, nodes: &[Node]) -> Check {
    let mut out = Check::default();
    let (_, diam) = radius_diameter(g).expect("connected");
    let mut nodes = nodes.to_vec();
    nodes.sort_unstable();
    let s = SourceSet::new(g, nodes.iter().copied()).expect("valid sources");
    let (rounds, messages) = sim(g, &nodes);
    out.checked += 1;
    let via = flood_via_aux(g, &s).expect("aux construction");
    if via != rounds {
        out.fail(
            g,
            format!("S={nodes:?}"),
            "aux eccentricity - 1 = simulated rounds".into(),
            format!("aux gives {via}, simulation gives {rounds}"),
        );
    }
    let ds = bfs(g, &nodes).expect("valid roots").max_reachable();
    if rounds > ds + 1 + diam {
        out.fail(
            g,
            format!("S={nodes:?}"),
            format!("rounds <= {}", ds + 1 + diam),
            format!("rounds = {rounds}"),
        );
    }
    let star = build_g_star(g, &s).expect("star construction");
    let expected = if is_bipartite(&star.graph) { g.m() } else { 2 * g.m() };
    if messages != expected {
        out.fail(
            g,
            format!("S={nodes:?}"),
            format!("messages = {expected}"),
            format!("messages = {messages}"),
        );
    }
    out
}
