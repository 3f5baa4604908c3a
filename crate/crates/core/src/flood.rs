//! Deterministic synchronous simulation of amnesiac flooding.
//!
//! Round convention: messages sent at the start of round `i` are received
//! within round `i`, and the flooding time is the index of the last
//! nonempty round. In round 1 every source sends to all of its neighbors;
//! in round `i > 1` a node that received at least one message in round
//! `i-1` sends to exactly the neighbors it did not receive from — a node
//! that heard from *all* neighbors sends nothing, including the degenerate
//! one-neighbor case.

use serde::Serialize;

use crate::graph::{is_connected, radius_diameter, Graph, Node};
use crate::{Error, Result};

/// Nonempty, duplicate-free set of nodes that initiate the flood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceSet {
    nodes: Vec<Node>,
}

impl SourceSet {
    /// Validates ids against `g` and normalizes to a sorted set.
    pub fn new(g: &Graph, nodes: impl IntoIterator<Item = Node>) -> Result<Self> {
        let mut nodes: Vec<Node> = nodes.into_iter().collect();
        for &v in &nodes {
            if v >= g.n() {
                return Err(Error::NodeOutOfRange { node: v, n: g.n() });
            }
        }
        nodes.sort_unstable();
        nodes.dedup();
        if nodes.is_empty() {
            return Err(Error::EmptySourceSet);
        }
        Ok(SourceSet { nodes })
    }

    pub fn singleton(g: &Graph, v: Node) -> Result<Self> {
        SourceSet::new(g, [v])
    }

    /// All nodes of `g`.
    pub fn all(g: &Graph) -> Result<Self> {
        SourceSet::new(g, 0..g.n())
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: Node) -> bool {
        self.nodes.binary_search(&v).is_ok()
    }
}

/// Full message trace of one flooding execution.
///
/// Rounds are indexed from 1; each round holds its directed `(sender,
/// receiver)` events sorted ascending. The final stored round is nonempty
/// (the round after it would be empty), and a flood that never sends — a
/// single-node graph — has zero rounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloodTrace {
    rounds: Vec<Vec<(Node, Node)>>,
}

#[derive(Serialize)]
struct RoundLine<'a> {
    round: usize,
    messages: &'a [(Node, Node)],
}

#[derive(Serialize)]
struct SummaryBody {
    rounds: usize,
    messages: usize,
}

#[derive(Serialize)]
struct SummaryLine {
    summary: SummaryBody,
}

impl FloodTrace {
    pub fn rounds(&self) -> &[Vec<(Node, Node)>] {
        &self.rounds
    }

    pub fn rounds_count(&self) -> usize {
        self.rounds.len()
    }

    pub fn total_messages(&self) -> usize {
        self.rounds.iter().map(Vec::len).sum()
    }

    /// Events of the 1-indexed round `i`; empty past the last round.
    pub fn events(&self, i: usize) -> &[(Node, Node)] {
        if i >= 1 && i <= self.rounds.len() {
            &self.rounds[i - 1]
        } else {
            &[]
        }
    }

    /// One JSON object per line, one line per round, then a summary line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for (idx, messages) in self.rounds.iter().enumerate() {
            let line = RoundLine { round: idx + 1, messages };
            out.push_str(&serde_json::to_string(&line).expect("trace serialization"));
            out.push('\n');
        }
        let summary = SummaryLine {
            summary: SummaryBody {
                rounds: self.rounds_count(),
                messages: self.total_messages(),
            },
        };
        out.push_str(&serde_json::to_string(&summary).expect("trace serialization"));
        out.push('\n');
        out
    }
}

/// Simulates amnesiac flooding on a connected graph from source set `s`.
///
/// The result is a pure function of `(g, s)`: identical inputs produce
/// byte-identical serialized traces.
pub fn simulate(g: &Graph, s: &SourceSet) -> Result<FloodTrace> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let cap = round_cap(g)?;
    let mut rounds = Vec::new();
    run(g, s.nodes(), cap, Some(&mut rounds))?;
    Ok(FloodTrace { rounds })
}

/// Number of rounds until no message is in transit.
pub fn flood_rounds(g: &Graph, s: &SourceSet) -> Result<usize> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let cap = round_cap(g)?;
    Ok(run(g, s.nodes(), cap, None)?.0)
}

/// Total number of messages sent before termination.
pub fn message_count(g: &Graph, s: &SourceSet) -> Result<usize> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let cap = round_cap(g)?;
    Ok(run(g, s.nodes(), cap, None)?.1)
}

/// For each node, the index of the last round in which it receives a
/// message when the flood starts at `v0` alone; 0 for a node that never
/// receives one (which can only be `v0` itself, on a bipartite graph).
pub fn last_receipt_rounds(g: &Graph, v0: Node) -> Result<Vec<usize>> {
    let s = SourceSet::singleton(g, v0)?;
    let trace = simulate(g, &s)?;
    let mut last = vec![0; g.n()];
    for (idx, events) in trace.rounds().iter().enumerate() {
        for &(_, r) in events {
            last[r] = idx + 1;
        }
    }
    Ok(last)
}

// Safety cap turning a (never expected) non-terminating run into an error
// instead of a hang: 2n + Diam + 2.
fn round_cap(g: &Graph) -> Result<usize> {
    let (_, diam) = radius_diameter(g)?;
    Ok(2 * g.n() + diam + 2)
}

/// Core stepper, shared by the public entry points and by internal callers
/// that simulate on possibly disconnected graphs (auxiliary constructions).
/// Returns `(rounds, messages)`; fills `record` with per-round events when
/// given. Events in a round are sorted by `(sender, receiver)`.
pub(crate) fn run(
    g: &Graph,
    sources: &[Node],
    cap: usize,
    record: Option<&mut Vec<Vec<(Node, Node)>>>,
) -> Result<(usize, usize)> {
    if let Some(rows) = g.mask_rows() {
        let mut src = 0u64;
        for &v in sources {
            src |= 1u64 << v;
        }
        run_masked(rows, src, cap, record)
    } else {
        run_lists(g, sources, cap, record)
    }
}

pub(crate) fn run_masked(
    rows: &[u64],
    src: u64,
    cap: usize,
    mut record: Option<&mut Vec<Vec<(Node, Node)>>>,
) -> Result<(usize, usize)> {
    let n = rows.len();
    let round1: usize = BitIter(src).map(|v| rows[v].count_ones() as usize).sum();
    if round1 == 0 {
        return Ok((0, 0));
    }
    if let Some(rec) = record.as_deref_mut() {
        let mut events = Vec::new();
        for v in BitIter(src) {
            for u in BitIter(rows[v]) {
                events.push((v, u));
            }
        }
        rec.push(events);
    }
    // incoming[v]: the nodes that sent to v in the previous round. By
    // symmetry the round-1 value is adj(v) ∩ S.
    let mut incoming: Vec<u64> = (0..n).map(|v| rows[v] & src).collect();
    let mut rounds = 1usize;
    let mut messages = round1;
    loop {
        let mut next: Vec<u64> = vec![0; n];
        let mut sent = 0usize;
        let mut events: Vec<(Node, Node)> = Vec::new();
        for v in 0..n {
            let got = incoming[v];
            if got == 0 || got == rows[v] {
                continue;
            }
            let targets = rows[v] & !got;
            sent += targets.count_ones() as usize;
            for u in BitIter(targets) {
                next[u] |= 1u64 << v;
                if record.is_some() {
                    events.push((v, u));
                }
            }
        }
        if sent == 0 {
            return Ok((rounds, messages));
        }
        rounds += 1;
        messages += sent;
        if rounds > cap {
            return Err(Error::RoundCapExceeded { cap });
        }
        if let Some(rec) = record.as_deref_mut() {
            rec.push(events);
        }
        incoming = next;
    }
}

fn run_lists(
    g: &Graph,
    sources: &[Node],
    cap: usize,
    mut record: Option<&mut Vec<Vec<(Node, Node)>>>,
) -> Result<(usize, usize)> {
    let n = g.n();
    let mut is_src = vec![false; n];
    for &v in sources {
        is_src[v] = true;
    }
    // incoming[v]: sorted senders to v in the previous round.
    let mut incoming: Vec<Vec<Node>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| is_src[u])
                .collect()
        })
        .collect();
    let round1: usize = sources.iter().map(|&v| g.degree(v)).sum();
    if round1 == 0 {
        return Ok((0, 0));
    }
    if let Some(rec) = record.as_deref_mut() {
        let mut events = Vec::new();
        for &v in sources {
            for &u in g.neighbors(v) {
                events.push((v, u));
            }
        }
        rec.push(events);
    }
    let mut rounds = 1usize;
    let mut messages = round1;
    loop {
        let mut next: Vec<Vec<Node>> = vec![Vec::new(); n];
        let mut sent = 0usize;
        let mut events: Vec<(Node, Node)> = Vec::new();
        for (v, got) in incoming.iter().enumerate() {
            if got.is_empty() || got.len() == g.degree(v) {
                continue;
            }
            // Sorted difference adj(v) \ got.
            let mut it = got.iter().copied().peekable();
            for &u in g.neighbors(v) {
                while it.peek().is_some_and(|&w| w < u) {
                    it.next();
                }
                if it.peek() == Some(&u) {
                    continue;
                }
                sent += 1;
                next[u].push(v);
                if record.is_some() {
                    events.push((v, u));
                }
            }
        }
        if sent == 0 {
            return Ok((rounds, messages));
        }
        rounds += 1;
        messages += sent;
        if rounds > cap {
            return Err(Error::RoundCapExceeded { cap });
        }
        if let Some(rec) = record.as_deref_mut() {
            rec.push(events);
        }
        incoming = next;
    }
}

/// Iterator over the set bit positions of a `u64`, ascending.
pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}
