//! Exhaustive search for linear paths, linear cycles and cycles with a
//! parallel edge, plus labeled enumeration of small 3-graphs.
//!
//! Every search here is complete: `Absent` is only returned after the whole
//! space has been explored. A node budget can cut a search short, in which
//! case the answer is `Exhausted`, never `Absent`.
//!
//! Partial paths grow one edge at a time at the right end. The last placed
//! vertex is the connector, and candidate edges are its incident edges whose
//! two other vertices are still unused. Expansion order is fixed (edges in
//! lexicographic order, smaller vertex first), so witnesses are
//! deterministic.

use std::ops::ControlFlow;

use itertools::Itertools;

use crate::error::{EnumerationError, HypergraphError};
use crate::hypergraph::Hypergraph;
use crate::linear::{CyclePlusWitness, LinearCycle, LinearPath};
use crate::vertex_set::VertexSet;
use crate::Vertex;

/// Largest order for which searches run without a node budget by default.
pub const UNLIMITED_ORDER: usize = 30;
/// Node budget applied by [`Budget::default_for`] above [`UNLIMITED_ORDER`].
pub const DEFAULT_NODE_BUDGET: u64 = 500_000_000;
/// Largest order accepted by [`enumerate_hypergraphs`].
pub const MAX_ENUMERATION_ORDER: usize = 6;

/// Result of a budgeted exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    /// The whole search space was explored without a hit.
    Absent,
    /// The node budget ran out first; nothing is known.
    Exhausted,
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_found(&self) -> Option<&T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Outcome::Absent)
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Outcome::Exhausted)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(t) => Outcome::Found(f(t)),
            Outcome::Absent => Outcome::Absent,
            Outcome::Exhausted => Outcome::Exhausted,
        }
    }
}

/// Upper bound on search nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(Option<u64>);

impl Budget {
    pub const UNLIMITED: Budget = Budget(None);

    pub fn nodes(limit: u64) -> Budget {
        Budget(Some(limit))
    }

    /// Unlimited up to [`UNLIMITED_ORDER`] vertices, [`DEFAULT_NODE_BUDGET`] above.
    pub fn default_for(n: usize) -> Budget {
        if n <= UNLIMITED_ORDER {
            Budget::UNLIMITED
        } else {
            Budget::nodes(DEFAULT_NODE_BUDGET)
        }
    }

    pub fn limit(&self) -> Option<u64> {
        self.0
    }
}

enum Flow<R> {
    Continue,
    Stop(R),
    Exhausted,
}

/// How the first edge of a walk is oriented.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Starts {
    /// `x_0 < x_1`: enough when the two free ends of the first edge are interchangeable.
    EndsUnordered,
    /// All six orientations of every edge.
    All,
}

struct Walker<'h, C, L> {
    h: &'h Hypergraph,
    target: usize,
    seq: Vec<Vertex>,
    used: VertexSet,
    nodes: u64,
    limit: Option<u64>,
    /// Edges whose every orientation has already been tried as a start; a
    /// walk may not finish on one of them because its reversal was covered.
    done: Option<Vec<bool>>,
    /// Leaf tests ignore the order of the final edge's two new vertices.
    free_far_end: bool,
    connector_ok: C,
    leaf: L,
}

impl<R, C, L> Walker<'_, C, L>
where
    C: Fn(&[Vertex], Vertex) -> bool,
    L: FnMut(&[Vertex], &VertexSet) -> Option<R>,
{
    fn descend(&mut self) -> Flow<R> {
        self.nodes += 1;
        if self.limit.is_some_and(|limit| self.nodes > limit) {
            return Flow::Exhausted;
        }
        if self.seq.len() == self.target {
            return match (self.leaf)(&self.seq, &self.used) {
                Some(r) => Flow::Stop(r),
                None => Flow::Continue,
            };
        }
        let h = self.h;
        let connector = *self.seq.last().expect("walks start from an edge");
        let last_edge = self.seq.len() + 2 == self.target;
        for &id in h.incident_edges(connector) {
            if last_edge && self.done.as_ref().is_some_and(|d| d[id as usize]) {
                continue;
            }
            let (a, b) = others(h.edge(id as usize), connector);
            if self.used.contains(a) || self.used.contains(b) {
                continue;
            }
            for (mid, next) in [(a, b), (b, a)] {
                if !(self.connector_ok)(&self.seq, next) {
                    continue;
                }
                self.seq.extend([mid, next]);
                self.used.insert(mid);
                self.used.insert(next);
                let flow = self.descend();
                self.used.remove(mid);
                self.used.remove(next);
                self.seq.truncate(self.seq.len() - 2);
                if !matches!(flow, Flow::Continue) {
                    return flow;
                }
                if last_edge && self.free_far_end {
                    break;
                }
            }
        }
        Flow::Continue
    }

    fn run(mut self, starts: Starts) -> Outcome<R> {
        let h = self.h;
        for id in 0..h.edge_count() {
            let e = h.edge(id);
            let orientations: &[[usize; 3]] = match starts {
                Starts::EndsUnordered => &[[1, 2, 0], [0, 2, 1], [0, 1, 2]],
                Starts::All => &[[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]],
            };
            for o in orientations {
                let start = [e[o[0]], e[o[1]], e[o[2]]];
                if !(self.connector_ok)(&start[..1], start[2]) {
                    continue;
                }
                self.seq.clear();
                self.seq.extend(start);
                for v in start {
                    self.used.insert(v);
                }
                let flow = self.descend();
                for v in start {
                    self.used.remove(v);
                }
                match flow {
                    Flow::Continue => {}
                    Flow::Stop(r) => return Outcome::Found(r),
                    Flow::Exhausted => return Outcome::Exhausted,
                }
            }
            if let Some(done) = self.done.as_mut() {
                done[id] = true;
            }
        }
        Outcome::Absent
    }
}

fn others(edge: &[Vertex], v: Vertex) -> (Vertex, Vertex) {
    match edge {
        [x, a, b] if *x == v => (*a, *b),
        [a, x, b] if *x == v => (*a, *b),
        [a, b, _] => (*a, *b),
        _ => unreachable!("3-uniform edge"),
    }
}

fn walker<'h, R, C, L>(
    h: &'h Hypergraph,
    edges: usize,
    budget: Budget,
    plain_path: bool,
    connector_ok: C,
    leaf: L,
) -> Walker<'h, C, L>
where
    C: Fn(&[Vertex], Vertex) -> bool,
    L: FnMut(&[Vertex], &VertexSet) -> Option<R>,
{
    Walker {
        h,
        target: 2 * edges + 1,
        seq: Vec::with_capacity(2 * edges + 2),
        used: VertexSet::new(h.n()),
        nodes: 0,
        limit: budget.limit(),
        done: (plain_path && edges >= 2).then(|| vec![false; h.edge_count()]),
        free_far_end: plain_path,
        connector_ok,
        leaf,
    }
}

fn any_connector(_: &[Vertex], _: Vertex) -> bool {
    true
}

/// A linear path of length exactly `t`, under the default budget.
pub fn find_path(h: &Hypergraph, t: usize) -> Result<Outcome<LinearPath>, HypergraphError> {
    find_path_with(h, t, Budget::default_for(h.n()))
}

pub fn find_path_with(
    h: &Hypergraph,
    t: usize,
    budget: Budget,
) -> Result<Outcome<LinearPath>, HypergraphError> {
    h.require_triples()?;
    assert!(t >= 1, "path length must be positive");
    if h.n() < 2 * t + 1 || h.edge_count() < t {
        return Ok(Outcome::Absent);
    }
    let outcome = walker(h, t, budget, true, any_connector, |seq, _| {
        Some(LinearPath::from_vec_unchecked(seq.to_vec()))
    })
    .run(Starts::EndsUnordered);
    if let Outcome::Found(p) = &outcome {
        assert_eq!(p.len(), t);
        assert!(p.validate(h).is_ok(), "oracle produced invalid path {p:?}");
    }
    Ok(outcome)
}

/// The largest `t <= cap` admitting a linear t-path, with a witness.
///
/// Relies on monotonicity: a t-path contains a (t−1)-path.
pub fn longest_path(
    h: &Hypergraph,
    cap: usize,
) -> Result<Outcome<(usize, Option<LinearPath>)>, HypergraphError> {
    h.require_triples()?;
    assert!(cap >= 1, "cap must be positive");
    let mut best: Option<LinearPath> = None;
    for t in 1..=cap {
        match find_path(h, t)? {
            Outcome::Found(p) => best = Some(p),
            Outcome::Absent => break,
            Outcome::Exhausted => return Ok(Outcome::Exhausted),
        }
    }
    Ok(Outcome::Found((best.as_ref().map_or(0, LinearPath::len), best)))
}

/// A linear cycle with `k` edges.
///
/// Cycles are normalized by rotation so that `z_0` is the smallest of the
/// k connector vertices `z_0, z_2, ..., z_{2k-2}`.
pub fn find_cycle(h: &Hypergraph, k: usize) -> Result<Outcome<LinearCycle>, HypergraphError> {
    find_cycle_with(h, k, Budget::default_for(h.n()))
}

pub fn find_cycle_with(
    h: &Hypergraph,
    k: usize,
    budget: Budget,
) -> Result<Outcome<LinearCycle>, HypergraphError> {
    h.require_triples()?;
    assert!(k >= 3, "linear cycles have at least 3 edges");
    if h.n() < 2 * k {
        return Ok(Outcome::Absent);
    }
    let outcome = walker(
        h,
        k - 1,
        budget,
        false,
        |seq: &[Vertex], next| next > seq[0],
        |seq: &[Vertex], used: &VertexSet| {
            let (first, last) = (seq[0], seq[seq.len() - 1]);
            let closing = h.pair_set(last, first)?.difference(used).first()?;
            let mut z = seq.to_vec();
            z.push(closing);
            Some(LinearCycle::from_vec_unchecked(z))
        },
    )
    .run(Starts::All);
    if let Outcome::Found(c) = &outcome {
        assert_eq!(c.len(), k);
        assert!(c.validate(h).is_ok(), "oracle produced invalid cycle {c:?}");
    }
    Ok(outcome)
}

/// A linear k-cycle with a parallel edge (C_k^+).
///
/// Any C_k^+ can be laid out with the doubled edge closing the cycle, and
/// the parallel edge then must contain the closing edge's two connectors;
/// so the search looks for a (k−1)-path whose ends have two common
/// neighbors outside it. The smaller one is the closing vertex.
pub fn find_cycle_plus(
    h: &Hypergraph,
    k: usize,
) -> Result<Outcome<CyclePlusWitness>, HypergraphError> {
    find_cycle_plus_with(h, k, Budget::default_for(h.n()))
}

pub fn find_cycle_plus_with(
    h: &Hypergraph,
    k: usize,
    budget: Budget,
) -> Result<Outcome<CyclePlusWitness>, HypergraphError> {
    h.require_triples()?;
    assert!(k >= 3, "linear cycles have at least 3 edges");
    if h.n() < 2 * k + 1 {
        return Ok(Outcome::Absent);
    }
    let outcome = walker(
        h,
        k - 1,
        budget,
        false,
        any_connector,
        |seq: &[Vertex], used: &VertexSet| {
            let (first, last) = (seq[0], seq[seq.len() - 1]);
            let outside = h.pair_set(first, last)?.difference(used);
            let mut outside = outside.iter();
            let (closing, parallel) = (outside.next()?, outside.next()?);
            Some(CyclePlusWitness::new_unchecked(
                LinearPath::from_vec_unchecked(seq.to_vec()),
                closing,
                parallel,
            ))
        },
    )
    .run(Starts::All);
    if let Outcome::Found(w) = &outcome {
        assert_eq!(w.cycle_len(), k);
        assert!(w.validate(h).is_ok(), "oracle produced invalid witness {w:?}");
    }
    Ok(outcome)
}

/// Calls `visit` on every vertex sequence that is a linear t-path of `h`, in
/// every orientation (a path and its reversal are both visited, as are the
/// two orders of each end edge's free vertices).
///
/// Returns `Found(())` if `visit` broke early, `Absent` once everything was
/// visited.
pub fn for_each_path(
    h: &Hypergraph,
    t: usize,
    budget: Budget,
    mut visit: impl FnMut(&LinearPath) -> ControlFlow<()>,
) -> Result<Outcome<()>, HypergraphError> {
    h.require_triples()?;
    assert!(t >= 1, "path length must be positive");
    if h.n() < 2 * t + 1 {
        return Ok(Outcome::Absent);
    }
    let outcome = walker(h, t, budget, false, any_connector, |seq: &[Vertex], _: &VertexSet| {
        visit(&LinearPath::from_vec_unchecked(seq.to_vec())).break_value()
    })
    .run(Starts::All);
    Ok(outcome)
}

/// Every labeled 3-graph on `n` vertices accepted by `filter`.
///
/// Graphs are produced by counting through all 2^C(n,3) subsets of the
/// lexicographically ordered triples; bit i of the counter selects triple i.
pub fn enumerate_hypergraphs<F>(
    n: usize,
    filter: F,
) -> Result<impl Iterator<Item = Hypergraph>, EnumerationError>
where
    F: FnMut(&Hypergraph) -> bool,
{
    if n > MAX_ENUMERATION_ORDER {
        return Err(EnumerationError::OrderTooLarge(n));
    }
    if n < 3 {
        return Err(EnumerationError::OrderTooSmall(n));
    }
    let triples: Vec<Vec<Vertex>> = (0..n).combinations(3).collect();
    let total: u64 = 1 << triples.len();
    Ok((0..total)
        .map(move |mask| {
            let edges = triples
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| e.clone().into_boxed_slice())
                .collect();
            Hypergraph::from_sorted_unique(3, n, edges)
        })
        .filter(filter))
}
