//! The (k,c)-flooding decision problem and the reduction from total
//! domination that makes it NP-complete.
//!
//! Deciding "is there a size-k source set that floods within c rounds"
//! subsumes total domination: on a non-bipartite graph, flooding finishes
//! in exactly 2 rounds from some k-subset precisely when the graph has a
//! non-isolated k-center of radius 1, i.e. a total dominating set of size
//! at most k. Bipartite inputs are first made non-bipartite by attaching a
//! five-node gadget whose own total domination cost is exactly 2.

use crate::centers::{flood_k, total_domination_number};
use crate::graph::{is_bipartite, is_connected, Graph, Node};
use crate::{enumerate, Error, Result};

/// An instance of the (k,c)-flooding decision problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloodingInstance {
    pub graph: Graph,
    pub k: usize,
    pub c: usize,
}

impl FloodingInstance {
    pub fn new(graph: Graph, k: usize, c: usize) -> Result<Self> {
        if k < 1 || k > graph.n() {
            return Err(Error::KOutOfRange { k, n: graph.n() });
        }
        if c < 1 {
            return Err(Error::KOutOfRange { k: c, n: usize::MAX });
        }
        if !is_connected(&graph) {
            return Err(Error::Disconnected);
        }
        Ok(FloodingInstance { graph, k, c })
    }
}

/// A graph with the five-node gadget attached to `attach_node`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetAttachment {
    pub graph: Graph,
    pub attach_node: Node,
    /// The new nodes `a, b, c, d, e` in order.
    pub gadget_nodes: [Node; 5],
}

/// Output of [`reduce_total_domination`]: the flooding instance to decide,
/// plus the gadget bookkeeping when one was attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub instance: FloodingInstance,
    pub gadget: Option<GadgetAttachment>,
    /// The total-domination budget the instance answers for.
    pub source_k: usize,
}

/// Decides whether some source set of size `k` floods `g` within `c`
/// rounds; returns a witness set on yes.
pub fn decide_flooding(inst: &FloodingInstance, force: bool) -> Result<Option<Vec<Node>>> {
    let report = flood_k(&inst.graph, inst.k, force)?;
    if report.value <= inst.c {
        Ok(Some(report.witness))
    } else {
        Ok(None)
    }
}

/// Attaches the bipartiteness-breaking gadget to node `v`: a path
/// `v-a-b-c` ending in the triangle `c-d-e`. Adds 5 nodes and 6 edges;
/// the result is non-bipartite, stays connected, and its total domination
/// number is exactly two more than the input's.
pub fn attach_gadget(g: &Graph, v: Node) -> Result<GadgetAttachment> {
    let n = g.n();
    if v >= n {
        return Err(Error::NodeOutOfRange { node: v, n });
    }
    let (a, b, c, d, e) = (n, n + 1, n + 2, n + 3, n + 4);
    let mut edges: Vec<(Node, Node)> = g.edges().collect();
    edges.extend([(v, a), (a, b), (b, c), (c, d), (c, e), (d, e)]);
    Ok(GadgetAttachment {
        graph: Graph::new(n + 5, &edges)?,
        attach_node: v,
        gadget_nodes: [a, b, c, d, e],
    })
}

/// Reduces "does `g` have a total dominating set of size at most `k`" to a
/// (k,c)-flooding instance with `c = 2`. Non-bipartite graphs map to
/// themselves; bipartite graphs get the gadget at node 0 and a budget of
/// `k + 2`.
pub fn reduce_total_domination(g: &Graph, k: usize) -> Result<ReductionResult> {
    if k < 1 {
        return Err(Error::KOutOfRange { k, n: g.n() });
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if is_bipartite(g) {
        let gadget = attach_gadget(g, 0)?;
        let instance = FloodingInstance::new(gadget.graph.clone(), k + 2, 2)?;
        Ok(ReductionResult {
            instance,
            gadget: Some(gadget),
            source_k: k,
        })
    } else {
        let instance = FloodingInstance::new(g.clone(), k, 2)?;
        Ok(ReductionResult {
            instance,
            gadget: None,
            source_k: k,
        })
    }
}

/// One mismatch found by [`validate_reduction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCounterexample {
    pub edges: Vec<(Node, Node)>,
    pub k: usize,
    pub detail: String,
}

/// Outcome of the exhaustive reduction check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// (graph, k) pairs whose decision outcome was compared.
    pub instances: usize,
    /// Graphs whose gadgeted total domination number was compared.
    pub gamma_checked: usize,
    pub counterexamples: Vec<ReductionCounterexample>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks, for every connected graph with `2..=n_max` nodes, that
/// `decide_flooding(reduce_total_domination(g, k))` answers exactly
/// "gamma_t(g) <= k" for every `k` in `2..=n`, and that attaching the
/// gadget raises the total domination number by exactly 2.
pub fn validate_reduction(n_max: usize) -> Result<ValidationReport> {
    if !(2..=6).contains(&n_max) {
        return Err(Error::NOutOfRange { n: n_max, min: 2, max: 6 });
    }
    let mut report = ValidationReport {
        instances: 0,
        gamma_checked: 0,
        counterexamples: Vec::new(),
    };
    for n in 2..=n_max {
        for g in enumerate::enumerate_connected(n)? {
            let gamma = total_domination_number(&g, false)?.value;
            let gadgeted = attach_gadget(&g, 0)?;
            let gamma_prime = total_domination_number(&gadgeted.graph, false)?.value;
            report.gamma_checked += 1;
            if gamma_prime != gamma + 2 {
                report.counterexamples.push(ReductionCounterexample {
                    edges: g.edges().collect(),
                    k: 0,
                    detail: format!(
                        "gadget shifted gamma_t from {gamma} to {gamma_prime}, expected +2"
                    ),
                });
            }
            for k in 2..=n {
                let reduction = reduce_total_domination(&g, k)?;
                let decided = decide_flooding(&reduction.instance, false)?.is_some();
                let expected = gamma <= k;
                report.instances += 1;
                if decided != expected {
                    report.counterexamples.push(ReductionCounterexample {
                        edges: g.edges().collect(),
                        k,
                        detail: format!(
                            "decide_flooding answered {decided}, but gamma_t={gamma} vs k={k}"
                        ),
                    });
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bipartition;
    use crate::graph::Bipartiteness;

    #[test]
    fn gadget_shape() {
        let g = Graph::path(2);
        let out = attach_gadget(&g, 0).unwrap();
        assert_eq!(out.graph.n(), 7);
        assert_eq!(out.graph.m(), 7);
        assert!(!is_bipartite(&out.graph));
        assert!(is_connected(&out.graph));
        assert_eq!(out.gadget_nodes, [2, 3, 4, 5, 6]);
    }

    #[test]
    fn gadget_odd_cycle_is_the_triangle() {
        let g = Graph::cycle(4);
        let out = attach_gadget(&g, 0).unwrap();
        match bipartition(&out.graph) {
            Bipartiteness::OddCycle { cycle } => {
                let mut c = cycle.clone();
                c.sort_unstable();
                assert_eq!(c, vec![out.gadget_nodes[2], out.gadget_nodes[3], out.gadget_nodes[4]]);
            }
            _ => panic!("gadgeted graph must contain an odd cycle"),
        }
    }

    #[test]
    fn gadget_raises_total_domination_by_two() {
        for g in [Graph::path(4), Graph::cycle(5), Graph::complete(4), Graph::star(5)] {
            let base = total_domination_number(&g, false).unwrap().value;
            let out = attach_gadget(&g, 0).unwrap();
            let shifted = total_domination_number(&out.graph, false).unwrap().value;
            assert_eq!(shifted, base + 2);
        }
    }

    #[test]
    fn decide_flooding_on_cycles() {
        let c7 = Graph::cycle(7);
        let yes = FloodingInstance::new(c7.clone(), 2, 4).unwrap();
        let witness = decide_flooding(&yes, false).unwrap().expect("Flood_2(C_7)=4");
        assert_eq!(witness.len(), 2);
        let no = FloodingInstance::new(c7, 2, 3).unwrap();
        assert_eq!(decide_flooding(&no, false).unwrap(), None);
    }

    #[test]
    fn sourcing_everywhere_decides_yes_at_one_round() {
        for g in [Graph::path(4), Graph::cycle(5), Graph::complete(4)] {
            let inst = FloodingInstance::new(g.clone(), g.n(), 1).unwrap();
            assert!(decide_flooding(&inst, false).unwrap().is_some());
        }
    }

    #[test]
    fn reduction_on_non_bipartite_input_is_identity() {
        let g = Graph::cycle(5);
        let red = reduce_total_domination(&g, 3).unwrap();
        assert!(red.gadget.is_none());
        assert_eq!(red.instance.k, 3);
        assert_eq!(red.instance.c, 2);
        // gamma_t(C_5) = 3, so the instance decides yes.
        assert!(decide_flooding(&red.instance, false).unwrap().is_some());
    }

    #[test]
    fn reduction_on_bipartite_input_attaches_gadget() {
        let g = Graph::cycle(4);
        let red = reduce_total_domination(&g, 2).unwrap();
        assert!(red.gadget.is_some());
        assert_eq!(red.instance.k, 4);
        assert_eq!(red.instance.graph.n(), 9);
        // gamma_t(C_4) = 2 <= 2: yes.
        assert!(decide_flooding(&red.instance, false).unwrap().is_some());
    }

    #[test]
    fn reduction_answers_no_below_the_domination_number() {
        let g = Graph::path(4);
        let red = reduce_total_domination(&g, 1).unwrap();
        // gamma_t(P_4) = 2 > 1.
        assert_eq!(decide_flooding(&red.instance, false).unwrap(), None);
    }

    #[test]
    fn validation_passes_on_small_graphs() {
        let report = validate_reduction(4).unwrap();
        assert!(report.passed(), "{:?}", report.counterexamples);
        assert!(report.instances > 0);
        assert!(matches!(
            validate_reduction(7),
            Err(Error::NOutOfRange { .. })
        ));
    }
}
