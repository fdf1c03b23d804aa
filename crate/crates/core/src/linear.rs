//! Linear paths, linear cycles and cycles with a parallel edge in 3-graphs.
//!
//! A linear path of length t is the vertex sequence `x_0, ..., x_{2t}` whose
//! edges are `{x_{2i}, x_{2i+1}, x_{2i+2}}`. Because all vertices are
//! distinct, consecutive edges share exactly one vertex and the rest are
//! disjoint, so distinctness plus edge membership is the whole invariant.

use std::fmt;

use crate::error::PathError;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;
use crate::Vertex;

fn check_distinct(h: &Hypergraph, vertices: &[Vertex]) -> Result<(), PathError> {
    if !h.is_pair_uniform() {
        return Err(PathError::NotPairUniform);
    }
    let mut seen = VertexSet::new(h.n());
    for &v in vertices {
        if v >= h.n() {
            return Err(PathError::VertexOutOfRange(v));
        }
        if !seen.insert(v) {
            return Err(PathError::RepeatedVertex(v));
        }
    }
    Ok(())
}

fn check_edge(h: &Hypergraph, edge: [Vertex; 3]) -> Result<(), PathError> {
    if h.contains_edge(&edge) {
        Ok(())
    } else {
        Err(PathError::MissingEdge(edge))
    }
}

fn write_one_based(f: &mut fmt::Formatter<'_>, vertices: &[Vertex]) -> fmt::Result {
    for (i, v) in vertices.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{}", v + 1)?;
    }
    Ok(())
}

/// A linear path `x_0, ..., x_{2t}` with t ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearPath {
    vertices: Vec<Vertex>,
}

impl LinearPath {
    /// Validates `vertices` against `h`.
    pub fn new(h: &Hypergraph, vertices: Vec<Vertex>) -> Result<Self, PathError> {
        let path = Self { vertices };
        path.validate(h)?;
        Ok(path)
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<Vertex>) -> Self {
        Self { vertices }
    }

    pub fn validate(&self, h: &Hypergraph) -> Result<(), PathError> {
        let len = self.vertices.len();
        if len < 3 || len.is_multiple_of(2) {
            return Err(PathError::BadLength(len));
        }
        check_distinct(h, &self.vertices)?;
        self.edges().try_for_each(|e| check_edge(h, e))
    }

    /// Number of edges t.
    pub fn len(&self) -> usize {
        (self.vertices.len() - 1) / 2
    }

    /// Always false: a path has at least one edge.
    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 3
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Vertex {
        self.vertices[i]
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn edges(&self) -> impl Iterator<Item = [Vertex; 3]> + '_ {
        self.vertices.windows(3).step_by(2).map(|w| [w[0], w[1], w[2]])
    }

    /// The same path read from the other end (index i ↦ 2t − i).
    pub fn reversed(&self) -> LinearPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        LinearPath { vertices }
    }

    /// The first `t` edges.
    pub fn truncated(&self, t: usize) -> LinearPath {
        assert!(t >= 1 && t <= self.len());
        LinearPath {
            vertices: self.vertices[..2 * t + 1].to_vec(),
        }
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.vertices.iter().copied())
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }
}

impl fmt::Display for LinearPath {
    /// 1-based labels separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_one_based(f, &self.vertices)
    }
}

/// A linear cycle `z_0, ..., z_{2k-1}` with edges `{z_{2i}, z_{2i+1}, z_{2i+2 mod 2k}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearCycle {
    vertices: Vec<Vertex>,
}

impl LinearCycle {
    pub fn new(h: &Hypergraph, vertices: Vec<Vertex>) -> Result<Self, PathError> {
        let cycle = Self { vertices };
        cycle.validate(h)?;
        Ok(cycle)
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<Vertex>) -> Self {
        Self { vertices }
    }

    pub fn validate(&self, h: &Hypergraph) -> Result<(), PathError> {
        let len = self.vertices.len();
        if len < 6 || len % 2 == 1 {
            return Err(PathError::BadLength(len));
        }
        check_distinct(h, &self.vertices)?;
        self.edges().try_for_each(|e| check_edge(h, e))
    }

    /// Number of edges k.
    pub fn len(&self) -> usize {
        self.vertices.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = [Vertex; 3]> + '_ {
        let len = self.vertices.len();
        (0..len / 2).map(move |i| {
            [
                self.vertices[2 * i],
                self.vertices[2 * i + 1],
                self.vertices[(2 * i + 2) % len],
            ]
        })
    }
}

impl fmt::Display for LinearCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_one_based(f, &self.vertices)
    }
}

/// A linear (t+1)-cycle with a parallel edge, laid out as a path
/// `x_0, ..., x_{2t}`, a closing vertex `x_{2t+1}` with `{x_{2t}, x_{2t+1}, x_0}`
/// an edge, and a parallel vertex `v` with `{x_{2t}, v, x_0}` an edge.
///
/// Swapping the closing edge for the parallel one yields another linear
/// cycle, and the two share the pair `{x_0, x_{2t}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclePlusWitness {
    path: LinearPath,
    closing: Vertex,
    parallel: Vertex,
}

impl CyclePlusWitness {
    pub fn new(
        h: &Hypergraph,
        path: LinearPath,
        closing: Vertex,
        parallel: Vertex,
    ) -> Result<Self, PathError> {
        let w = Self {
            path,
            closing,
            parallel,
        };
        w.validate(h)?;
        Ok(w)
    }

    pub(crate) fn new_unchecked(path: LinearPath, closing: Vertex, parallel: Vertex) -> Self {
        Self {
            path,
            closing,
            parallel,
        }
    }

    pub fn validate(&self, h: &Hypergraph) -> Result<(), PathError> {
        self.path.validate(h)?;
        if self.path.len() < 2 {
            return Err(PathError::BadLength(self.path.vertices.len()));
        }
        check_distinct(h, &self.cycle_vertices_with_parallel())?;
        let (a, b) = (self.path.first(), self.path.last());
        check_edge(h, [b, self.closing, a])?;
        check_edge(h, [b, self.parallel, a])
    }

    pub fn path(&self) -> &LinearPath {
        &self.path
    }

    /// `x_{2t+1}`.
    pub fn closing(&self) -> Vertex {
        self.closing
    }

    /// `v`.
    pub fn parallel(&self) -> Vertex {
        self.parallel
    }

    /// Number of edges of the cycle, t + 1.
    pub fn cycle_len(&self) -> usize {
        self.path.len() + 1
    }

    /// X = {x_0, ..., x_{2t+1}} in cyclic order.
    pub fn cycle_vertices(&self) -> Vec<Vertex> {
        let mut xs = self.path.vertices.clone();
        xs.push(self.closing);
        xs
    }

    fn cycle_vertices_with_parallel(&self) -> Vec<Vertex> {
        let mut xs = self.cycle_vertices();
        xs.push(self.parallel);
        xs
    }

    pub fn cycle(&self) -> LinearCycle {
        LinearCycle::from_vec_unchecked(self.cycle_vertices())
    }

    /// The cycle obtained by using the parallel edge instead of the closing one.
    pub fn swapped_cycle(&self) -> LinearCycle {
        let mut xs = self.path.vertices.clone();
        xs.push(self.parallel);
        LinearCycle::from_vec_unchecked(xs)
    }
}

impl fmt::Display for CyclePlusWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {}", self.path, self.closing + 1, self.parallel + 1)
    }
}
