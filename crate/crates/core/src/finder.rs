//! Rotation-extension search for long linear paths.
//!
//! The finder keeps one linear path `P = (x_0, ..., x_{2s})` and repeatedly
//! applies the first move that works:
//!
//! 1. **extend**: an edge at `x_0`, `x_1`, `x_{2s-1}` or `x_{2s}` whose other two
//!    vertices are off the path;
//! 2. **codegree splice**: two distinct outside vertices in the right pair
//!    neighborhoods let the path be rewired into one that is one edge longer;
//! 3. **rotate**: reverse a prefix through an outside vertex so that more
//!    spine pairs `(x_{2i}, x_{2i+2})` have two or more outside common
//!    neighbors, keeping the length;
//! 4. **cycle unfold**: the path closes into a linear cycle with a parallel
//!    edge, and the parallel vertex has an edge leaving the cycle.
//!
//! Every move increases `(length, |M_P|)` lexicographically, where
//! `M_P = {i : d_P(2i, 2i+2) >= 2}` and `d_P(a, b) = |N_H({x_a, x_b}) ∖ V(P)|`.
//! Above the minimum-degree threshold for length `t` at least one move is
//! always available until the path reaches length `t`; running out of moves
//! there is reported as [`ViolationKind::LemmaStepFailed`].
//!
//! [`PathContext`] is rebuilt from scratch after every move.

use std::fmt;

use crate::constructions::{binomial, g_bound, theorem_threshold};
use crate::error::FinderError;
use crate::hypergraph::Hypergraph;
use crate::linear::{CyclePlusWitness, LinearPath};
use crate::oracle::{self, Outcome};
use crate::report::VerificationReport;
use crate::vertex_set::VertexSet;
use crate::Vertex;

/// Which end of the path plays the role of `x_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum End {
    Left,
    Right,
}

/// Codegree statistics of one path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathContext {
    path: LinearPath,
    on_path: VertexSet,
    /// `left[i] = d_P(0, i)`; `left[0]` is 0.
    left: Vec<usize>,
    /// `right[i] = d_P(2s, i)`; `right[2s]` is 0.
    right: Vec<usize>,
    /// `spine[i] = d_P(2i, 2i + 2)`.
    spine: Vec<usize>,
    m: Vec<usize>,
    rest: Vec<usize>,
    n_left: Vec<usize>,
    n_right: Vec<usize>,
}

impl PathContext {
    /// Computes every table directly from the pair neighborhoods of `h`.
    pub fn new(h: &Hypergraph, path: LinearPath) -> Result<Self, FinderError> {
        path.validate(h)?;
        let s = path.len();
        let on_path = path.vertex_set(h.n());
        let x = path.vertices();
        let d = |a: usize, b: usize| h.codegree_outside(x[a], x[b], &on_path);

        let left: Vec<usize> = (0..=2 * s).map(|i| if i == 0 { 0 } else { d(0, i) }).collect();
        let right: Vec<usize> = (0..=2 * s)
            .map(|i| if i == 2 * s { 0 } else { d(2 * s, i) })
            .collect();
        let spine: Vec<usize> = (0..s).map(|i| d(2 * i, 2 * i + 2)).collect();
        let (m, rest): (Vec<usize>, Vec<usize>) = (0..s).partition(|&i| spine[i] >= 2);
        let endpoint_set = |table: &[usize], mirror: bool| -> Vec<usize> {
            (0..s)
                .filter(|&i| {
                    if spine[i] >= 2 {
                        let j = if mirror { 2 * i } else { 2 * i + 2 };
                        table[j] >= 3
                    } else {
                        table[2 * i + 1] >= 2
                    }
                })
                .collect()
        };
        let n_left = endpoint_set(&left, false);
        let n_right = endpoint_set(&right, true);
        Ok(Self {
            path,
            on_path,
            left,
            right,
            spine,
            m,
            rest,
            n_left,
            n_right,
        })
    }

    pub fn path(&self) -> &LinearPath {
        &self.path
    }

    /// Path length s.
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn on_path(&self) -> &VertexSet {
        &self.on_path
    }

    /// d_P(0, i).
    pub fn left(&self, i: usize) -> usize {
        self.left[i]
    }

    /// d_P(2s, i).
    pub fn right(&self, i: usize) -> usize {
        self.right[i]
    }

    /// d_P(2i, 2i + 2).
    pub fn spine(&self, i: usize) -> usize {
        self.spine[i]
    }

    /// M_P, ascending.
    pub fn m(&self) -> &[usize] {
        &self.m
    }

    /// T = [0, s − 1] ∖ M_P, ascending.
    pub fn rest(&self) -> &[usize] {
        &self.rest
    }

    /// N_0 = {i ∈ M : d_P(0, 2i+2) ≥ 3} ∪ {i ∈ T : d_P(0, 2i+1) ≥ 2}.
    pub fn n_left(&self) -> &[usize] {
        &self.n_left
    }

    /// N_{2s} = {i ∈ M : d_P(2s, 2i) ≥ 3} ∪ {i ∈ T : d_P(2s, 2i+1) ≥ 2}.
    pub fn n_right(&self) -> &[usize] {
        &self.n_right
    }

    /// Whether N_0 and N_{2s} are disjoint. This follows from the codegree
    /// bounds only under the lemma hypotheses, so it is reported, not assumed.
    pub fn endpoint_sets_disjoint(&self) -> bool {
        self.n_left.iter().all(|i| !self.n_right.contains(i))
    }

    /// d_P(a, b) for arbitrary path indices.
    pub fn d(&self, h: &Hypergraph, a: usize, b: usize) -> usize {
        let x = self.path.vertices();
        h.codegree_outside(x[a], x[b], &self.on_path)
    }

    /// The context of the reversed path, recomputed.
    pub fn reversed(&self, h: &Hypergraph) -> PathContext {
        PathContext::new(h, self.path.reversed()).expect("reversal of a valid path is valid")
    }

    fn outside(&self, h: &Hypergraph, a: usize, b: usize) -> VertexSet {
        let x = self.path.vertices();
        match h.pair_set(x[a], x[b]) {
            Some(set) => set.difference(&self.on_path),
            None => VertexSet::new(h.n()),
        }
    }
}

/// `make_context`: the [`PathContext`] of `path` in `h`.
pub fn make_context(h: &Hypergraph, path: LinearPath) -> Result<PathContext, FinderError> {
    PathContext::new(h, path)
}

/// Lexicographically least `(y, z)` with `y ∈ a`, `z ∈ b`, `y ≠ z`.
fn distinct_pair(a: &VertexSet, b: &VertexSet) -> Option<(Vertex, Vertex)> {
    let y0 = a.first()?;
    if let Some(z) = b.iter().find(|&z| z != y0) {
        return Some((y0, z));
    }
    // b = {y0}
    let z = b.first()?;
    a.iter().nth(1).map(|y| (y, z))
}

fn checked_path(
    h: &Hypergraph,
    vertices: Vec<Vertex>,
    expected_len: usize,
    fail: impl Fn(String) -> FinderError,
) -> Result<LinearPath, FinderError> {
    let path = LinearPath::new(h, vertices.clone())
        .map_err(|e| fail(format!("{e} in {vertices:?}")))?;
    if path.len() != expected_len {
        return Err(fail(format!(
            "length {} instead of {expected_len} for {vertices:?}",
            path.len()
        )));
    }
    Ok(path)
}

/// Appends an edge at one of `x_{2s}`, `x_{2s-1}`, `x_0`, `x_1` (tried in that
/// order) whose other two vertices avoid the path. The lexicographically least
/// such pair is used.
pub fn extend(h: &Hypergraph, path: &LinearPath) -> Option<LinearPath> {
    let used = path.vertex_set(h.n());
    let swap_last = |p: &LinearPath| {
        let mut v = p.vertices().to_vec();
        let len = v.len();
        v.swap(len - 1, len - 2);
        LinearPath::from_vec_unchecked(v)
    };
    let reversed = path.reversed();
    let orientations = [path.clone(), swap_last(path), reversed.clone(), swap_last(&reversed)];
    for p in orientations {
        let end = p.last();
        let best = h
            .incident_edges(end)
            .iter()
            .filter_map(|&id| {
                let e = h.edge(id as usize);
                let mut pair = e.iter().copied().filter(|&v| v != end);
                let (a, b) = (pair.next()?, pair.next()?);
                (!used.contains(a) && !used.contains(b)).then_some((a, b))
            })
            .min();
        if let Some((a, b)) = best {
            let mut vertices = p.vertices().to_vec();
            vertices.extend([a, b]);
            let extended = LinearPath::from_vec_unchecked(vertices);
            assert!(extended.validate(h).is_ok(), "extension produced {extended:?}");
            return Some(extended);
        }
    }
    None
}

/// A successful rotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rotation {
    pub path: LinearPath,
    pub end: End,
    /// k', indexed along the path as seen from `end` (so for [`End::Right`]
    /// along the reversed path).
    pub pivot: usize,
    /// The outside vertex v now joining `x_0` and `x_{2k'+2}`.
    pub via: Vertex,
    /// `x_{2k'+1}`, which leaves the path.
    pub dropped: Vertex,
}

/// Rotates at `end` if some `k' ∈ T` has `d_P(0, 2k'+2) ≥ max(2|M| + 1, 3)`.
///
/// The new path is `(x_{2k'}, x_{2k'-1}, ..., x_0, v, x_{2k'+2}, ..., x_{2s})`,
/// with `v` the smallest common outside neighbor of `x_0, x_{2k'+2}` that is
/// not an outside neighbor of any spine pair with `d_P = 2`. That keeps
/// every old member of M_P in M_{P'} and adds k'.
pub fn rotate(h: &Hypergraph, ctx: &PathContext, end: End) -> Result<Option<Rotation>, FinderError> {
    match end {
        End::Left => rotate_left(h, ctx),
        End::Right => rotate_left(h, &ctx.reversed(h)).map(|r| {
            r.map(|mut r| {
                r.end = End::Right;
                r
            })
        }),
    }
}

fn rotate_left(h: &Hypergraph, ctx: &PathContext) -> Result<Option<Rotation>, FinderError> {
    let gate = (2 * ctx.m.len() + 1).max(3);
    let Some(pivot) = ctx.rest.iter().copied().find(|&k| ctx.left[2 * k + 2] >= gate) else {
        return Ok(None);
    };
    let x = ctx.path.vertices();
    let mut banned = VertexSet::new(h.n());
    for &j in ctx.m.iter().filter(|&&j| ctx.spine[j] == 2) {
        for w in &ctx.outside(h, 2 * j, 2 * j + 2) {
            banned.insert(w);
        }
    }
    let fail = FinderError::RotationPostconditionFailed;
    let via = ctx
        .outside(h, 0, 2 * pivot + 2)
        .difference(&banned)
        .first()
        .ok_or_else(|| fail(format!("no admissible vertex for k' = {pivot} on {:?}", ctx.path)))?;

    let mut vertices: Vec<Vertex> = x[..=2 * pivot].iter().rev().copied().collect();
    vertices.push(via);
    vertices.extend_from_slice(&x[2 * pivot + 2..]);
    let dropped = x[2 * pivot + 1];
    let path = checked_path(h, vertices, ctx.len(), fail)?;

    let mut expected = ctx.on_path.clone();
    expected.remove(dropped);
    expected.insert(via);
    if path.vertex_set(h.n()) != expected {
        return Err(fail(format!("vertex set of {path:?} is not V(P) - x + v")));
    }
    let after = PathContext::new(h, path.clone())?;
    if after.m.len() < ctx.m.len() + 1 {
        return Err(fail(format!(
            "|M| went from {} to {} rotating {:?} into {path:?}",
            ctx.m.len(),
            after.m.len(),
            ctx.path
        )));
    }
    Ok(Some(Rotation {
        path,
        end: End::Left,
        pivot,
        via,
        dropped,
    }))
}

/// Which codegree configuration a splice used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodegreeRule {
    /// Distinct `y ∈ N({x_0, x_{2k+1}})`, `z ∈ N({x_{2t}, x_{2k+1}})` outside P.
    SharedMiddle,
    /// Distinct `y ∈ N({x_{2k}, x_{2k+2}})`, `z ∈ N({x_0, x_{2k+1}})` outside P.
    SpineAndEnd,
}

impl fmt::Display for CodegreeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodegreeRule::SharedMiddle => "shared-middle",
            CodegreeRule::SpineAndEnd => "spine-end",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splice {
    pub path: LinearPath,
    pub rule: CodegreeRule,
    /// Index k, counted from `end`.
    pub k: usize,
    pub end: End,
    pub y: Vertex,
    pub z: Vertex,
}

/// Looks for a codegree configuration that splices directly into a path
/// one edge longer.
///
/// Shared middle, for some k: `(x_{2k+2}, ..., x_{2t}, z, x_{2k+1}, y, x_0, ..., x_{2k})`.
/// Spine and end, for some k: `(x_{2k+1}, z, x_0, ..., x_{2k}, y, x_{2k+2}, ..., x_{2t})`,
/// and the same from the right end.
pub fn improve_via_codegree(h: &Hypergraph, ctx: &PathContext) -> Result<Option<Splice>, FinderError> {
    if let Some(s) = shared_middle(h, ctx)? {
        return Ok(Some(s));
    }
    if let Some(s) = spine_and_end(h, ctx, End::Left)? {
        return Ok(Some(s));
    }
    spine_and_end(h, &ctx.reversed(h), End::Right)
}

fn shared_middle(h: &Hypergraph, ctx: &PathContext) -> Result<Option<Splice>, FinderError> {
    let t = ctx.len();
    let x = ctx.path.vertices();
    for k in 0..t {
        if ctx.left[2 * k + 1] == 0 || ctx.right[2 * k + 1] == 0 {
            continue;
        }
        let ys = ctx.outside(h, 0, 2 * k + 1);
        let zs = ctx.outside(h, 2 * t, 2 * k + 1);
        let Some((y, z)) = distinct_pair(&ys, &zs) else {
            continue;
        };
        let mut vertices = x[2 * k + 2..].to_vec();
        vertices.extend([z, x[2 * k + 1], y]);
        vertices.extend_from_slice(&x[..=2 * k]);
        let path = checked_path(h, vertices, t + 1, FinderError::SplicePostconditionFailed)?;
        return Ok(Some(Splice {
            path,
            rule: CodegreeRule::SharedMiddle,
            k,
            end: End::Left,
            y,
            z,
        }));
    }
    Ok(None)
}

fn spine_and_end(h: &Hypergraph, ctx: &PathContext, end: End) -> Result<Option<Splice>, FinderError> {
    let t = ctx.len();
    let x = ctx.path.vertices();
    for k in 0..t {
        if ctx.spine[k] == 0 || ctx.left[2 * k + 1] == 0 {
            continue;
        }
        let ys = ctx.outside(h, 2 * k, 2 * k + 2);
        let zs = ctx.outside(h, 0, 2 * k + 1);
        let Some((y, z)) = distinct_pair(&ys, &zs) else {
            continue;
        };
        let mut vertices = vec![x[2 * k + 1], z];
        vertices.extend_from_slice(&x[..=2 * k]);
        vertices.push(y);
        vertices.extend_from_slice(&x[2 * k + 2..]);
        let path = checked_path(h, vertices, t + 1, FinderError::SplicePostconditionFailed)?;
        return Ok(Some(Splice {
            path,
            rule: CodegreeRule::SpineAndEnd,
            k,
            end,
            y,
            z,
        }));
    }
    Ok(None)
}

/// How a path closes into a cycle with a parallel edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleRule {
    /// `x_0` and `x_{2t}` have two common outside neighbors.
    EndsClose,
    /// Two outside neighbors of `{x_0, x_{2k+2}}` and a third of `{x_{2t}, x_{2k}}`.
    CrossClose { k: usize, end: End },
}

impl fmt::Display for CycleRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleRule::EndsClose => f.write_str("ends-close"),
            CycleRule::CrossClose { k, end } => write!(f, "cross-close[k={k},{end:?}]"),
        }
    }
}

/// Every cycle-with-parallel-edge witness the path closes into directly.
///
/// For the cross configuration the witness path is
/// `(x_0, ..., x_{2k}, z, x_{2t}, x_{2t-1}, ..., x_{2k+2})` with closing vertex
/// `y_1` and parallel vertex `y_2`.
pub fn cycle_plus_configurations(h: &Hypergraph, ctx: &PathContext) -> Vec<(CycleRule, CyclePlusWitness)> {
    let mut found = Vec::new();
    let t = ctx.len();
    if t >= 2 {
        let ends = ctx.outside(h, 0, 2 * t);
        let mut ends = ends.iter();
        if let (Some(closing), Some(parallel)) = (ends.next(), ends.next()) {
            let w = CyclePlusWitness::new_unchecked(ctx.path.clone(), closing, parallel);
            debug_assert!(w.validate(h).is_ok());
            found.push((CycleRule::EndsClose, w));
        }
        for (c, end) in [(ctx.clone(), End::Left), (ctx.reversed(h), End::Right)] {
            found.extend(cross_close(h, &c, end));
        }
    }
    found
}

fn cross_close(h: &Hypergraph, ctx: &PathContext, end: End) -> Vec<(CycleRule, CyclePlusWitness)> {
    let t = ctx.len();
    let x = ctx.path.vertices();
    let mut found = Vec::new();
    for k in 0..t {
        if ctx.left[2 * k + 2] < 2 || ctx.right[2 * k] == 0 {
            continue;
        }
        let ys = ctx.outside(h, 0, 2 * k + 2);
        let zs = ctx.outside(h, 2 * t, 2 * k);
        let hit = zs.iter().find_map(|z| {
            let mut rest = ys.iter().filter(|&y| y != z);
            Some((z, rest.next()?, rest.next()?))
        });
        let Some((z, y1, y2)) = hit else {
            continue;
        };
        let mut vertices = x[..=2 * k].to_vec();
        vertices.push(z);
        vertices.extend(x[2 * k + 2..].iter().rev());
        let w = CyclePlusWitness::new_unchecked(LinearPath::from_vec_unchecked(vertices), y1, y2);
        debug_assert!(w.validate(h).is_ok(), "{w:?}");
        found.push((CycleRule::CrossClose { k, end }, w));
    }
    found
}

/// Which edge at the parallel vertex opened the cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnfoldCase {
    /// Both other vertices lie off the cycle.
    Disjoint,
    /// One other vertex is the cycle vertex `x_i`, i even.
    Even(usize),
    /// One other vertex is the cycle vertex `x_i`, i odd.
    Odd(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unfold {
    pub path: LinearPath,
    pub case: UnfoldCase,
    /// The edge at the parallel vertex that was used, as its other two vertices.
    pub pair: (Vertex, Vertex),
}

/// Opens a C_{t+1}^+ into a linear path of length t + 1 using an edge
/// `{v, a, b}` at the parallel vertex `v` that meets the cycle in at most one
/// vertex. Indices below are cyclic modulo 2t + 2.
///
/// - disjoint: `(b, a, v, x_{2t}, x_0, x_1, ..., x_{2t-2})`;
/// - `a = x_i`, i even: `(v, b, x_i, x_{i+1}, ..., x_{i-2})`;
/// - `a = x_i`, i odd: `(v, b, x_i, x_{i-1}, x_{i+1}, x_{i+2}, ..., x_{i-3})`.
///
/// Returns `None` when every edge at `v` has both other vertices on the
/// cycle, which forces `d_H(v) <= C(2t + 2, 2)`.
pub fn unfold_cycle_plus(h: &Hypergraph, w: &CyclePlusWitness) -> Result<Option<Unfold>, FinderError> {
    w.validate(h)?;
    let t = w.path().len();
    let xs = w.cycle_vertices();
    let len = xs.len();
    let v = w.parallel();
    let mut position = vec![usize::MAX; h.n()];
    for (i, &x) in xs.iter().enumerate() {
        position[x] = i;
    }
    let on_cycle = |u: Vertex| position[u] != usize::MAX;
    let at = |i: usize| xs[i % len];

    for &id in h.incident_edges(v) {
        let e = h.edge(id as usize);
        let mut others = e.iter().copied().filter(|&u| u != v);
        let (a, b) = (others.next().expect("3 vertices"), others.next().expect("3 vertices"));
        let (vertices, case, pair) = match (on_cycle(a), on_cycle(b)) {
            (true, true) => continue,
            (false, false) => {
                let mut seq = vec![b, a, v, xs[2 * t]];
                seq.extend_from_slice(&xs[..=2 * t - 2]);
                (seq, UnfoldCase::Disjoint, (a, b))
            }
            (in_a, _) => {
                let (inside, outside) = if in_a { (a, b) } else { (b, a) };
                let i = position[inside];
                let mut seq = vec![v, outside];
                if i % 2 == 0 {
                    seq.extend((0..=2 * t).map(|j| at(i + j)));
                    (seq, UnfoldCase::Even(i), (outside, inside))
                } else {
                    seq.extend([xs[i], xs[i - 1]]);
                    seq.extend((0..2 * t - 1).map(|j| at(i + 1 + j)));
                    (seq, UnfoldCase::Odd(i), (outside, inside))
                }
            }
        };
        let path = checked_path(h, vertices, t + 1, FinderError::UnfoldPostconditionFailed)?;
        return Ok(Some(Unfold { path, case, pair }));
    }
    assert!(
        h.degree(v) <= binomial(2 * t + 2, 2),
        "parallel vertex {v} has degree {} but no edge leaving the cycle",
        h.degree(v)
    );
    Ok(None)
}

/// Kinds of accepted moves, for traces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    Start,
    Extend,
    Splice(CodegreeRule),
    Unfold(CycleRule),
    Rotate(End),
    /// Short targets are answered by exhaustive search.
    Oracle,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveKind::Start => f.write_str("start"),
            MoveKind::Extend => f.write_str("extend"),
            MoveKind::Splice(rule) => write!(f, "splice:{rule}"),
            MoveKind::Unfold(rule) => write!(f, "unfold:{rule}"),
            MoveKind::Rotate(End::Left) => f.write_str("rotate:left"),
            MoveKind::Rotate(End::Right) => f.write_str("rotate:right"),
            MoveKind::Oracle => f.write_str("oracle"),
        }
    }
}

/// One accepted move and the state it produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub length: usize,
    pub m_size: usize,
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "move {} length {} m {}", self.kind, self.length, self.m_size)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// Stuck, but the degree hypothesis does not hold, so nothing is promised.
    HypothesisUnmet,
    /// Stuck or a move misbehaved although the hypothesis holds.
    LemmaStepFailed,
    BudgetExhausted,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::HypothesisUnmet => "hypothesis_unmet",
            ViolationKind::LemmaStepFailed => "lemma_step_failed",
            ViolationKind::BudgetExhausted => "budget_exhausted",
        })
    }
}

/// Why the finder stopped short, with the state it stopped in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationReport {
    pub reason: ViolationKind,
    pub detail: String,
    pub context: Option<PathContext>,
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.reason, self.detail)?;
        if let Some(ctx) = &self.context {
            write!(
                f,
                " [path {} | M {:?} | N_left {:?} | N_right {:?}]",
                ctx.path(),
                ctx.m(),
                ctx.n_left(),
                ctx.n_right()
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FinderOutcome {
    Path(LinearPath),
    Violation(Box<ViolationReport>),
}

impl FinderOutcome {
    pub fn path(&self) -> Option<&LinearPath> {
        match self {
            FinderOutcome::Path(p) => Some(p),
            FinderOutcome::Violation(_) => None,
        }
    }

    pub fn violation(&self) -> Option<&ViolationReport> {
        match self {
            FinderOutcome::Path(_) => None,
            FinderOutcome::Violation(v) => Some(v),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinderRun {
    pub outcome: FinderOutcome,
    pub trace: Vec<MoveRecord>,
}

impl FinderRun {
    /// Accepted moves, not counting the start.
    pub fn moves(&self) -> usize {
        self.trace.iter().filter(|m| m.kind != MoveKind::Start).count()
    }
}

/// Default move budget: 16·n².
pub fn default_move_budget(n: usize) -> usize {
    16 * n * n
}

/// Finds a linear path of length `t` by rotation-extension.
///
/// `t <= 2` is answered exactly by the oracle. Otherwise the driver starts
/// from the lexicographically first edge and applies moves until the path
/// has length `t` or no move applies. `budget` caps accepted moves and
/// defaults to [`default_move_budget`].
pub fn find_guaranteed(h: &Hypergraph, t: usize, budget: Option<usize>) -> Result<FinderRun, FinderError> {
    h.require_triples()?;
    assert!(t >= 1, "path length must be positive");
    let budget = budget.unwrap_or_else(|| default_move_budget(h.n()));
    let threshold = theorem_threshold(h.n(), t);
    let promised = threshold.is_met(h.n(), h.min_degree());
    let stuck_reason = if promised {
        ViolationKind::LemmaStepFailed
    } else {
        ViolationKind::HypothesisUnmet
    };
    let violation = |reason, detail: String, context, trace| FinderRun {
        outcome: FinderOutcome::Violation(Box::new(ViolationReport {
            reason,
            detail,
            context,
        })),
        trace,
    };

    if t <= 2 || h.edge_count() == 0 {
        return Ok(match oracle::find_path(h, t)? {
            Outcome::Found(p) => FinderRun {
                trace: vec![MoveRecord {
                    kind: MoveKind::Oracle,
                    length: p.len(),
                    m_size: 0,
                }],
                outcome: FinderOutcome::Path(p),
            },
            Outcome::Absent => violation(stuck_reason, format!("no linear path of length {t}"), None, vec![]),
            Outcome::Exhausted => violation(
                ViolationKind::BudgetExhausted,
                "oracle node budget exhausted".into(),
                None,
                vec![],
            ),
        });
    }

    let first = h.edge(0);
    let mut ctx = PathContext::new(h, LinearPath::from_vec_unchecked(first.to_vec()))?;
    let mut trace = vec![MoveRecord {
        kind: MoveKind::Start,
        length: 1,
        m_size: ctx.m().len(),
    }];

    loop {
        if ctx.len() >= t {
            return Ok(FinderRun {
                outcome: FinderOutcome::Path(ctx.path().truncated(t)),
                trace,
            });
        }
        if trace.len() > budget {
            let detail = format!("{budget} moves without reaching length {t}");
            return Ok(violation(ViolationKind::BudgetExhausted, detail, Some(ctx), trace));
        }
        let step = match next_move(h, &ctx) {
            Ok(step) => step,
            Err(e) => {
                return Ok(violation(ViolationKind::LemmaStepFailed, e.to_string(), Some(ctx), trace));
            }
        };
        let Some((kind, path)) = step else {
            let detail = format!(
                "no move applies at length {} (delta_1 = {}, threshold {} for n >= {})",
                ctx.len(),
                h.min_degree(),
                threshold.min_degree,
                threshold.min_order
            );
            return Ok(violation(stuck_reason, detail, Some(ctx), trace));
        };
        let next = PathContext::new(h, path)?;
        let before = (ctx.len(), ctx.m().len());
        let after = (next.len(), next.m().len());
        if after <= before {
            let detail = format!("{kind} did not advance (length, |M|): {before:?} -> {after:?}");
            return Ok(violation(ViolationKind::LemmaStepFailed, detail, Some(next), trace));
        }
        trace.push(MoveRecord {
            kind,
            length: after.0,
            m_size: after.1,
        });
        ctx = next;
    }
}

fn next_move(h: &Hypergraph, ctx: &PathContext) -> Result<Option<(MoveKind, LinearPath)>, FinderError> {
    if let Some(p) = extend(h, ctx.path()) {
        return Ok(Some((MoveKind::Extend, p)));
    }
    if let Some(s) = improve_via_codegree(h, ctx)? {
        return Ok(Some((MoveKind::Splice(s.rule), s.path)));
    }
    let ends = if ctx.n_left().len() <= ctx.n_right().len() {
        [End::Left, End::Right]
    } else {
        [End::Right, End::Left]
    };
    for end in ends {
        if let Some(r) = rotate(h, ctx, end)? {
            return Ok(Some((MoveKind::Rotate(end), r.path)));
        }
    }
    for (rule, w) in cycle_plus_configurations(h, ctx) {
        if let Some(u) = unfold_cycle_plus(h, &w)? {
            return Ok(Some((MoveKind::Unfold(rule), u.path)));
        }
    }
    Ok(None)
}

/// The codegree inequalities a path in a P_{t+1}-free 3-graph of large
/// minimum degree satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bound {
    /// d_P(0, 2t) ≤ 1.
    Ends,
    /// If both are positive, d_P(0, 2k+1) + d_P(2t, 2k+1) ≤ 2.
    SharedMiddle { k: usize },
    /// If both are positive, d_P(0, 2k+2) + d_P(2t, 2k) ≤ 4.
    Cross { k: usize },
    /// If both are positive, d_P(2k, 2k+2) + d_P(2ℓ, 2k+1) ≤ 2, ℓ ∈ {0, t}.
    SpineEnd { k: usize, end: End },
    /// d_P(0, 2k+1) + d_P(2t, 2k+1) ≤ n − 2t − 1.
    MiddleSum { k: usize },
    /// d_P(0, 2k+2) + d_P(2t, 2k) ≤ n − 2t − 1.
    CrossSum { k: usize },
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Ends => f.write_str("i"),
            Bound::SharedMiddle { k } => write!(f, "ii[k={k}]"),
            Bound::Cross { k } => write!(f, "iii[k={k}]"),
            Bound::SpineEnd { k, end: End::Left } => write!(f, "iv[k={k},l=0]"),
            Bound::SpineEnd { k, end: End::Right } => write!(f, "iv[k={k},l=t]"),
            Bound::MiddleSum { k } => write!(f, "a[k={k}]"),
            Bound::CrossSum { k } => write!(f, "b[k={k}]"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundCheck {
    pub bound: Bound,
    pub terms: (usize, usize),
    pub limit: usize,
    /// False when the bound is conditional and its condition fails.
    pub applicable: bool,
}

impl BoundCheck {
    pub fn lhs(&self) -> usize {
        self.terms.0 + self.terms.1
    }

    pub fn holds(&self) -> bool {
        !self.applicable || self.lhs() <= self.limit
    }
}

/// Evaluates every codegree bound on `ctx`.
pub fn lemma_bounds(h: &Hypergraph, ctx: &PathContext) -> Vec<BoundCheck> {
    let t = ctx.len();
    let outside_room = h.n() - (2 * t + 1);
    let conditional = |bound, i: usize, j: usize, limit| BoundCheck {
        bound,
        terms: (i, j),
        limit,
        applicable: i > 0 && j > 0,
    };
    let mut checks = vec![BoundCheck {
        bound: Bound::Ends,
        terms: (ctx.left(2 * t), 0),
        limit: 1,
        applicable: true,
    }];
    for k in 0..t {
        let middle = (ctx.left(2 * k + 1), ctx.right(2 * k + 1));
        let cross = (ctx.left(2 * k + 2), ctx.right(2 * k));
        checks.push(conditional(Bound::SharedMiddle { k }, middle.0, middle.1, 2));
        checks.push(conditional(Bound::Cross { k }, cross.0, cross.1, 4));
        for (end, side) in [(End::Left, middle.0), (End::Right, middle.1)] {
            checks.push(conditional(Bound::SpineEnd { k, end }, ctx.spine(k), side, 2));
        }
        for (bound, terms) in [(Bound::MiddleSum { k }, middle), (Bound::CrossSum { k }, cross)] {
            checks.push(BoundCheck {
                bound,
                terms,
                limit: outside_room,
                applicable: true,
            });
        }
    }
    checks
}

/// What the caller established about `h` before checking bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaPremise {
    /// `h` has no linear path of length t + 1.
    pub next_path_free: bool,
    /// δ_1(h) ≥ g(n, t).
    pub degree_ok: bool,
}

impl LemmaPremise {
    pub fn holds(&self) -> bool {
        self.next_path_free && self.degree_ok
    }

    /// Establishes the premise with the oracle. `degree_ok` is false for
    /// t < 3, where g(n, t) is undefined.
    pub fn establish(h: &Hypergraph, t: usize) -> Result<Outcome<LemmaPremise>, FinderError> {
        let degree_ok = t >= 3 && h.min_degree() >= g_bound(h.n(), t);
        let premise = |next_path_free| LemmaPremise {
            next_path_free,
            degree_ok,
        };
        Ok(match oracle::find_path(h, t + 1)? {
            Outcome::Found(_) => Outcome::Found(premise(false)),
            Outcome::Absent => Outcome::Found(premise(true)),
            Outcome::Exhausted => Outcome::Exhausted,
        })
    }
}

/// [`lemma_bounds`] as a report. Under a holding premise every check must
/// pass; otherwise failures are informational.
pub fn check_lemma_bounds(h: &Hypergraph, ctx: &PathContext, premise: LemmaPremise) -> VerificationReport {
    let mut report = VerificationReport::new(
        format!("codegree bounds on path {}", ctx.path()),
        format!(
            "n={} t={} next_path_free={} degree_ok={}",
            h.n(),
            ctx.len(),
            premise.next_path_free,
            premise.degree_ok
        ),
    );
    for c in lemma_bounds(h, ctx) {
        let observed = if c.applicable {
            format!("{}+{}={}", c.terms.0, c.terms.1, c.lhs())
        } else {
            format!("{}+{} (inactive)", c.terms.0, c.terms.1)
        };
        report.check(c.bound.to_string(), format!("<= {}", c.limit), observed, c.holds());
    }
    if !ctx.endpoint_sets_disjoint() {
        report.witness(format!(
            "N_left {:?} and N_right {:?} intersect",
            ctx.n_left(),
            ctx.n_right()
        ));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_complete, gen_star};

    fn graph(n: usize, edges: &[[Vertex; 3]]) -> Hypergraph {
        Hypergraph::build(3, n, edges.iter().copied()).unwrap()
    }

    fn path(h: &Hypergraph, v: &[Vertex]) -> LinearPath {
        LinearPath::new(h, v.to_vec()).unwrap()
    }

    #[test]
    fn context_of_a_bare_path_is_empty() {
        let h = graph(7, &[[0, 1, 2], [2, 3, 4], [4, 5, 6]]);
        let ctx = make_context(&h, path(&h, &[0, 1, 2, 3, 4, 5, 6])).unwrap();
        assert!((0..=6).all(|i| ctx.left(i) == 0 && ctx.right(i) == 0));
        assert!(ctx.m().is_empty());
        assert_eq!(ctx.rest(), &[0, 1, 2]);
    }

    #[test]
    fn context_on_a_star() {
        let h = gen_star(3, 20, 1).unwrap();
        let ctx = make_context(&h, path(&h, &[1, 2, 0, 3, 4])).unwrap();
        assert_eq!((ctx.left(2), ctx.spine(1), ctx.left(4)), (15, 15, 0));
        assert_eq!(ctx.spine(0), 15);
        assert_eq!(ctx.m(), &[0, 1]);
        assert!(ctx.rest().is_empty());
        assert_eq!(ctx.n_left(), &[0]);
        assert_eq!(ctx.n_right(), &[1]);
        assert_eq!(ctx.d(&h, 0, 4), 0);
    }

    #[test]
    fn context_rejects_invalid_paths() {
        let h = gen_star(3, 8, 1).unwrap();
        let bad = LinearPath::from_vec_unchecked(vec![1, 2, 3]);
        assert!(matches!(make_context(&h, bad), Err(FinderError::InvalidPath(_))));
    }

    #[test]
    fn extend_cases() {
        let k7 = gen_complete(3, 7).unwrap();
        let p = extend(&k7, &path(&k7, &[0, 1, 2])).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 3, 4]);

        let star = gen_star(3, 8, 1).unwrap();
        assert_eq!(extend(&star, &path(&star, &[1, 3, 0, 4, 5])), None);

        let single = graph(3, &[[0, 1, 2]]);
        assert_eq!(extend(&single, &path(&single, &[0, 1, 2])), None);
    }

    #[test]
    fn extend_uses_the_second_to_last_vertex() {
        // Only x_1 = 3 has a fresh edge.
        let h = graph(7, &[[0, 1, 2], [2, 3, 4], [3, 5, 6]]);
        let p = extend(&h, &path(&h, &[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 4, 3, 5, 6]);
    }

    #[test]
    fn rotate_gate_and_star() {
        let h = graph(7, &[[0, 1, 2], [2, 3, 4], [4, 5, 6]]);
        let ctx = make_context(&h, path(&h, &[0, 1, 2, 3, 4, 5, 6])).unwrap();
        assert_eq!(rotate(&h, &ctx, End::Left).unwrap(), None);
        assert_eq!(rotate(&h, &ctx, End::Right).unwrap(), None);

        let star = gen_star(3, 20, 1).unwrap();
        let ctx = make_context(&star, path(&star, &[1, 2, 0, 3, 4])).unwrap();
        assert_eq!(rotate(&star, &ctx, End::Left).unwrap(), None);
    }

    fn rotation_instance() -> Hypergraph {
        graph(
            9,
            &[
                [0, 1, 2],
                [2, 3, 4],
                [0, 2, 5],
                [0, 2, 6],
                [0, 2, 7],
                [0, 4, 5],
                [0, 4, 6],
                [0, 4, 7],
            ],
        )
    }

    #[test]
    fn rotate_planted_instance() {
        let h = rotation_instance();
        let ctx = make_context(&h, path(&h, &[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(ctx.m(), &[0]);
        assert_eq!(ctx.rest(), &[1]);
        assert_eq!(ctx.left(4), 3);
        let r = rotate(&h, &ctx, End::Left).unwrap().unwrap();
        assert_eq!((r.pivot, r.via, r.dropped), (1, 5, 3));
        assert_eq!(r.path.vertices(), &[2, 1, 0, 5, 4]);
        let after = make_context(&h, r.path).unwrap();
        assert_eq!(after.m(), &[0, 1]);
    }

    #[test]
    fn rotate_avoids_tight_spine_neighbors() {
        // Spine pair (0, 2) has exactly the outside neighbors {5, 6}, so the
        // rotation through (0, 4) must skip them and use 7.
        let h = graph(
            9,
            &[
                [0, 1, 2],
                [2, 3, 4],
                [0, 2, 5],
                [0, 2, 6],
                [0, 4, 5],
                [0, 4, 6],
                [0, 4, 7],
            ],
        );
        let ctx = make_context(&h, path(&h, &[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(ctx.m(), &[0]);
        let r = rotate(&h, &ctx, End::Left).unwrap().unwrap();
        assert_eq!(r.via, 7);
        assert_eq!(r.path.vertices(), &[2, 1, 0, 7, 4]);
    }

    #[test]
    fn rotate_right_end_uses_reflection() {
        let h = rotation_instance();
        let ctx = make_context(&h, path(&h, &[4, 3, 2, 1, 0])).unwrap();
        let r = rotate(&h, &ctx, End::Right).unwrap().unwrap();
        assert_eq!(r.end, End::Right);
        assert_eq!(r.path.vertices(), &[2, 1, 0, 5, 4]);
    }

    #[test]
    fn splice_shared_middle() {
        let h = graph(7, &[[0, 1, 2], [2, 3, 4], [0, 1, 5], [1, 4, 6]]);
        let ctx = make_context(&h, path(&h, &[0, 1, 2, 3, 4])).unwrap();
        let s = improve_via_codegree(&h, &ctx).unwrap().unwrap();
        assert_eq!(s.rule, CodegreeRule::SharedMiddle);
        assert_eq!((s.k, s.y, s.z), (0, 5, 6));
        assert_eq!(s.path.vertices(), &[2, 3, 4, 6, 1, 5, 0]);
    }

    #[test]
    fn splice_needs_distinct_vertices() {
        let h = graph(7, &[[0, 1, 2], [2, 3, 4], [0, 1, 5], [1, 4, 5]]);
        let ctx = make_context(&h, path(&h, &[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(improve_via_codegree(&h, &ctx).unwrap(), None);

        let bare = graph(7, &[[0, 1, 2], [2, 3, 4], [4, 5, 6]]);
        let ctx = make_context(&bare, path(&bare, &[0, 1, 2, 3, 4, 5, 6])).unwrap();
        assert_eq!(improve_via_codegree(&bare, &ctx).unwrap(), None);
    }

    #[test]
    fn splice_spine_and_end() {
        // y = 5 joins the spine pair (2, 4), z = 6 joins (x_0, x_3) = (0, 3).
        let h = graph(7, &[[0, 1, 2], [2, 3, 4], [2, 4, 5], [0, 3, 6]]);
        let ctx = make_context(&h, path(&h, &[0, 1, 2, 3, 4])).unwrap();
        let s = improve_via_codegree(&h, &ctx).unwrap().unwrap();
        assert_eq!(s.rule, CodegreeRule::SpineAndEnd);
        assert_eq!((s.k, s.end, s.y, s.z), (1, End::Left, 5, 6));
        assert_eq!(s.path.vertices(), &[3, 6, 0, 1, 2, 5, 4]);

        let mirrored = graph(7, &[[4, 3, 2], [2, 1, 0], [0, 2, 5], [4, 1, 6]].map(sorted));
        let ctx = make_context(&mirrored, path(&mirrored, &[0, 1, 2, 3, 4])).unwrap();
        let s = improve_via_codegree(&mirrored, &ctx).unwrap().unwrap();
        assert_eq!((s.rule, s.end), (CodegreeRule::SpineAndEnd, End::Right));
        assert!(s.path.validate(&mirrored).is_ok());
    }

    fn sorted(mut e: [Vertex; 3]) -> [Vertex; 3] {
        e.sort_unstable();
        e
    }

    #[test]
    fn cycle_configurations() {
        // x_0 = 0 and x_4 = 4 share outside neighbors 5 and 6.
        let h = graph(7, &[[0, 1, 2], [2, 3, 4], [0, 4, 5], [0, 4, 6]]);
        let ctx = make_context(&h, path(&h, &[0, 1, 2, 3, 4])).unwrap();
        let found = cycle_plus_configurations(&h, &ctx);
        assert_eq!(found.len(), 1);
        let (rule, w) = &found[0];
        assert_eq!(*rule, CycleRule::EndsClose);
        assert_eq!((w.closing(), w.parallel()), (5, 6));
        // Every edge at 6 lies on the cycle: nothing to unfold.
        assert_eq!(unfold_cycle_plus(&h, w).unwrap(), None);
    }

    #[test]
    fn cross_configuration_builds_a_witness() {
        // k = 0: y1, y2 ∈ N(x_0, x_2) = {5, 6}, z ∈ N(x_4, x_0) = {7}.
        let h = graph(8, &[[0, 1, 2], [2, 3, 4], [0, 2, 5], [0, 2, 6], [0, 4, 7]]);
        let ctx = make_context(&h, path(&h, &[0, 1, 2, 3, 4])).unwrap();
        let found = cycle_plus_configurations(&h, &ctx);
        let (_, w) = found
            .iter()
            .find(|(r, _)| *r == CycleRule::CrossClose { k: 0, end: End::Left })
            .unwrap();
        assert_eq!(w.path().vertices(), &[0, 7, 4, 3, 2]);
        assert_eq!((w.closing(), w.parallel()), (5, 6));
        assert!(w.validate(&h).is_ok());
    }

    #[test]
    fn unfold_in_a_complete_graph() {
        let h = gen_complete(3, 9).unwrap();
        let w = CyclePlusWitness::new(&h, path(&h, &[0, 1, 2, 3, 4]), 5, 6).unwrap();
        let u = unfold_cycle_plus(&h, &w).unwrap().unwrap();
        assert_eq!(u.case, UnfoldCase::Even(0));
        assert_eq!(u.path.vertices(), &[6, 7, 0, 1, 2, 3, 4]);
    }

    #[test]
    fn unfold_disjoint_case() {
        let h = graph(9, &[[0, 1, 2], [2, 3, 4], [0, 4, 5], [0, 4, 6], [6, 7, 8]]);
        let w = CyclePlusWitness::new(&h, path(&h, &[0, 1, 2, 3, 4]), 5, 6).unwrap();
        let u = unfold_cycle_plus(&h, &w).unwrap().unwrap();
        assert_eq!(u.case, UnfoldCase::Disjoint);
        assert_eq!(u.path.vertices(), &[8, 7, 6, 4, 0, 1, 2]);
    }

    #[test]
    fn unfold_even_and_odd_cases() {
        let base = [[0, 1, 2], [2, 3, 4], [0, 4, 5], [0, 4, 6]];
        for (i, expected) in [
            (0, UnfoldCase::Even(0)),
            (1, UnfoldCase::Odd(1)),
            (2, UnfoldCase::Even(2)),
            (3, UnfoldCase::Odd(3)),
            (4, UnfoldCase::Even(4)),
            (5, UnfoldCase::Odd(5)),
        ] {
            let mut edges = base.to_vec();
            edges.push(sorted([6, i, 7]));
            let h = graph(8, &edges);
            let w = CyclePlusWitness::new(&h, path(&h, &[0, 1, 2, 3, 4]), 5, 6).unwrap();
            let u = unfold_cycle_plus(&h, &w).unwrap().unwrap();
            assert_eq!(u.case, expected, "cycle vertex {i}");
            assert_eq!(u.path.len(), 3);
            assert_eq!(&u.path.vertices()[..3], &[6, 7, i]);
        }
    }

    #[test]
    fn unfold_absent_on_a_bare_cycle_plus() {
        for t in 2..5 {
            let mut edges: Vec<[Vertex; 3]> = (0..t).map(|i| [2 * i, 2 * i + 1, 2 * i + 2]).collect();
            edges.push(sorted([2 * t, 2 * t + 1, 0]));
            edges.push(sorted([2 * t, 2 * t + 2, 0]));
            let h = graph(2 * t + 3, &edges);
            let p = path(&h, &(0..=2 * t).collect::<Vec<_>>());
            let w = CyclePlusWitness::new(&h, p, 2 * t + 1, 2 * t + 2).unwrap();
            assert_eq!(unfold_cycle_plus(&h, &w).unwrap(), None);
        }
    }

    #[test]
    fn finder_short_targets_use_any_edge() {
        let h = graph(5, &[[1, 2, 4]]);
        let run = find_guaranteed(&h, 1, None).unwrap();
        assert_eq!(run.outcome.path().unwrap().vertices().len(), 3);
        assert!(run.outcome.path().unwrap().validate(&h).is_ok());
    }

    #[test]
    fn finder_below_threshold_on_a_star() {
        let h = gen_star(3, 23, 1).unwrap();
        assert_eq!(h.min_degree(), 21);
        let run = find_guaranteed(&h, 3, None).unwrap();
        let v = run.outcome.violation().unwrap();
        assert_eq!(v.reason, ViolationKind::HypothesisUnmet);
        assert!(v.context.is_some());
    }

    #[test]
    fn finder_on_complete_graphs() {
        for (n, t) in [(7, 3), (9, 4), (13, 6)] {
            let h = gen_complete(3, n).unwrap();
            let run = find_guaranteed(&h, t, None).unwrap();
            let p = run.outcome.path().expect("complete graphs are easy");
            assert_eq!(p.len(), t);
            assert!(p.validate(&h).is_ok());
            assert!(run.trace.iter().skip(1).all(|m| m.kind == MoveKind::Extend));
        }
    }

    #[test]
    fn driver_uses_splice_when_stuck() {
        let h = graph(7, &[[0, 1, 2], [2, 3, 4], [0, 1, 5], [1, 4, 6]]);
        let run = find_guaranteed(&h, 3, None).unwrap();
        let kinds: Vec<MoveKind> = run.trace.iter().map(|m| m.kind).collect();
        assert_eq!(
            kinds,
            [MoveKind::Start, MoveKind::Extend, MoveKind::Splice(CodegreeRule::SharedMiddle)]
        );
        assert!(run.outcome.path().unwrap().validate(&h).is_ok());
    }

    #[test]
    fn driver_rotates_then_unfolds() {
        let mut edges = rotation_instance().edges().map(|e| [e[0], e[1], e[2]]).collect::<Vec<_>>();
        edges.push([6, 7, 8]);
        let h = graph(9, &edges);
        let run = find_guaranteed(&h, 3, None).unwrap();
        let kinds: Vec<MoveKind> = run.trace.iter().map(|m| m.kind).collect();
        assert_eq!(&kinds[..2], &[MoveKind::Start, MoveKind::Extend]);
        assert!(matches!(kinds[2], MoveKind::Rotate(_)));
        assert!(matches!(kinds[3], MoveKind::Unfold(CycleRule::CrossClose { .. })));
        let p = run.outcome.path().unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.validate(&h).is_ok());
        let progress: Vec<(usize, usize)> = run.trace.iter().map(|m| (m.length, m.m_size)).collect();
        assert!(progress.windows(2).all(|w| w[0] < w[1]), "{progress:?}");
    }

    #[test]
    fn finder_budget() {
        let h = gen_complete(3, 9).unwrap();
        let run = find_guaranteed(&h, 4, Some(1)).unwrap();
        assert_eq!(run.outcome.violation().unwrap().reason, ViolationKind::BudgetExhausted);
        assert_eq!(run.moves(), 1);
    }

    #[test]
    fn bounds_on_a_bare_path_hold_with_zeros() {
        let h = graph(7, &[[0, 1, 2], [2, 3, 4], [4, 5, 6]]);
        let ctx = make_context(&h, path(&h, &[0, 1, 2, 3, 4, 5, 6])).unwrap();
        let checks = lemma_bounds(&h, &ctx);
        assert!(checks.iter().all(|c| c.holds() && c.lhs() == 0));
        let premise = LemmaPremise {
            next_path_free: true,
            degree_ok: false,
        };
        assert!(check_lemma_bounds(&h, &ctx, premise).passed());
    }

    #[test]
    fn violated_shared_middle_bound_pairs_with_a_splice() {
        let h = graph(8, &[[0, 1, 2], [2, 3, 4], [0, 1, 5], [0, 1, 7], [1, 4, 6]]);
        let ctx = make_context(&h, path(&h, &[0, 1, 2, 3, 4])).unwrap();
        let premise = LemmaPremise::establish(&h, 2).unwrap().found().unwrap();
        assert!(!premise.next_path_free);
        let report = check_lemma_bounds(&h, &ctx, premise);
        assert!(!report.passed());
        assert!(!report.get("ii[k=0]").unwrap().pass);
        assert!(improve_via_codegree(&h, &ctx).unwrap().is_some());
    }
}
