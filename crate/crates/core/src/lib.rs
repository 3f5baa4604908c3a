//! Synchronous amnesiac flooding on undirected graphs.
//!
//! Amnesiac flooding is a stateless broadcast: in the first round every
//! source node sends the message to all its neighbors, and in every later
//! round a node that received the message forwards it to exactly those
//! neighbors it did not receive it from in that round. No per-message
//! markers survive between rounds.
//!
//! The crate provides
//!
//! * [`graph`] — a compact undirected graph type with BFS distances,
//!   eccentricity, bipartiteness and cross/forward edge classification;
//! * [`flood`] — a deterministic round-by-round simulator producing full
//!   message traces;
//! * [`aux_graph`] — the bipartite auxiliary constructions that turn
//!   flooding time into an eccentricity computation;
//! * [`centers`] — exact (brute-force) and heuristic source-set selection:
//!   k-radius, non-isolated k-radius, total domination, minimal flooding
//!   time over k-subsets;
//! * [`reductions`] — the (k,c)-flooding decision problem and the
//!   total-domination reduction that makes it NP-complete, with an
//!   empirical validator;
//! * [`enumerate`] / [`suites`] — exhaustive small-graph enumeration and
//!   named verification suites over it.
//!
//! ```
//! use amflood::{Graph, SourceSet, simulate};
//!
//! let g = Graph::cycle(5);
//! let s = SourceSet::singleton(&g, 0).unwrap();
//! let trace = simulate(&g, &s).unwrap();
//! assert_eq!(trace.rounds_count(), 5);
//! assert_eq!(trace.total_messages(), 10); // 2|E|: odd cycles are not bipartite
//! ```

pub mod aux_graph;
pub mod centers;
pub mod enumerate;
pub mod flood;
pub mod graph;
pub mod reductions;
pub mod suites;

#[cfg(doctest)]
mod book;

mod error;

pub use aux_graph::{
    build_aux_multi, build_aux_single, build_forward_subgraph, build_g_star,
    check_round_correspondence, check_round_correspondence_single, flood_via_aux, AuxGraph,
    AuxKind, CorrespondenceReport, Divergence,
};
pub use centers::{
    flood_k, greedy_k_center, k_radius, ni_k_radius, spanning_tree_preserving_k_radius,
    total_domination_number, CenterReport, Objective, BRUTE_FORCE_NODE_LIMIT,
};
pub use enumerate::{enumerate_connected, random_connected, random_tree};
pub use error::{Error, Result};
pub use flood::{
    flood_rounds, last_receipt_rounds, message_count, simulate, FloodTrace, SourceSet,
};
pub use graph::{
    bfs, bipartition, classify_edges, eccentricity, is_bipartite, is_connected, radius_diameter,
    Bipartiteness, DistanceField, EdgeClassification, EdgeKind, Graph, Node,
};
pub use reductions::{
    attach_gadget, decide_flooding, reduce_total_domination, validate_reduction, FloodingInstance,
    GadgetAttachment, ReductionResult, ValidationReport,
};
pub use suites::{is_exploratory, run_suite, run_suite_random, SuiteFailure, SuiteResult, SUITES};
