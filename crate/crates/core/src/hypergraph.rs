//! Immutable simple r-uniform hypergraphs.
//!
//! Vertices are `0..n`. Edges are stored as sorted vertex tuples in
//! lexicographic order, and every per-vertex incidence list follows that
//! order, so all iteration over a [`Hypergraph`] is deterministic.

use std::collections::HashMap;
use std::fmt;

use crate::error::HypergraphError;
use crate::vertex_set::VertexSet;
use crate::Vertex;

/// Dense pair tables are used up to this order; above it pairs are hashed.
const DENSE_PAIR_LIMIT: usize = 256;

#[derive(Clone)]
enum PairIndex {
    None,
    Dense(Vec<VertexSet>),
    Sparse(HashMap<(Vertex, Vertex), VertexSet>),
}

/// A simple r-uniform hypergraph with a precomputed incidence index.
#[derive(Clone)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<Box<[Vertex]>>,
    incidence: Vec<Vec<u32>>,
    pairs: PairIndex,
}

impl Hypergraph {
    /// Builds a hypergraph from an explicit edge list.
    ///
    /// Each tuple may be given in any order; it is stored sorted. Repeated
    /// edges are rejected rather than merged.
    pub fn build<E, I>(r: usize, n: usize, edges: I) -> Result<Self, HypergraphError>
    where
        E: AsRef<[Vertex]>,
        I: IntoIterator<Item = E>,
    {
        if r < 2 || n < r {
            return Err(HypergraphError::InvalidUniformity { r, n });
        }
        let mut stored: Vec<Box<[Vertex]>> = Vec::new();
        for (index, edge) in edges.into_iter().enumerate() {
            let edge = edge.as_ref();
            if edge.len() != r {
                return Err(HypergraphError::EdgeArity {
                    index,
                    expected: r,
                    found: edge.len(),
                });
            }
            if let Some(&vertex) = edge.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { vertex, n });
            }
            let mut sorted: Box<[Vertex]> = edge.into();
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::RepeatedVertexInEdge {
                    index,
                    vertex: w[0],
                });
            }
            stored.push(sorted);
        }

        let mut order: Vec<usize> = (0..stored.len()).collect();
        order.sort_by(|&a, &b| stored[a].cmp(&stored[b]));
        if let Some(w) = order.windows(2).find(|w| stored[w[0]] == stored[w[1]]) {
            return Err(HypergraphError::DuplicateEdge {
                index: w[0].max(w[1]),
            });
        }
        let mut edges = Vec::with_capacity(stored.len());
        let mut slots: Vec<Option<Box<[Vertex]>>> = stored.into_iter().map(Some).collect();
        for i in order {
            edges.push(slots[i].take().expect("each slot taken once"));
        }

        Ok(Self::from_sorted_unique(r, n, edges))
    }

    /// Builds from edges that are already sorted, deduplicated and in range.
    pub(crate) fn from_sorted_unique(r: usize, n: usize, edges: Vec<Box<[Vertex]>>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut incidence = vec![Vec::new(); n];
        for (id, edge) in edges.iter().enumerate() {
            for &v in edge.iter() {
                incidence[v].push(id as u32);
            }
        }
        let pairs = if r != 3 {
            PairIndex::None
        } else if n <= DENSE_PAIR_LIMIT {
            let mut table = vec![VertexSet::new(n); n * n];
            for e in &edges {
                let (a, b, c) = (e[0], e[1], e[2]);
                for (u, v, w) in [(a, b, c), (a, c, b), (b, c, a)] {
                    table[u * n + v].insert(w);
                    table[v * n + u].insert(w);
                }
            }
            PairIndex::Dense(table)
        } else {
            let mut map: HashMap<(Vertex, Vertex), VertexSet> = HashMap::new();
            for e in &edges {
                let (a, b, c) = (e[0], e[1], e[2]);
                for (u, v, w) in [(a, b, c), (a, c, b), (b, c, a)] {
                    map.entry((u, v)).or_insert_with(|| VertexSet::new(n)).insert(w);
                }
            }
            PairIndex::Sparse(map)
        };
        Self {
            r,
            n,
            edges,
            incidence,
            pairs,
        }
    }

    /// Uniformity (edge size).
    pub fn r(&self) -> usize {
        self.r
    }

    /// Order |V|.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Size e(H).
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[Vertex]> + '_ {
        self.edges.iter().map(|e| &e[..])
    }

    pub fn edge(&self, id: usize) -> &[Vertex] {
        &self.edges[id]
    }

    /// Ids of the edges containing `v`, ascending (hence lexicographic).
    pub fn incident_edges(&self, v: Vertex) -> &[u32] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incidence[v].len()
    }

    pub fn contains_edge(&self, edge: &[Vertex]) -> bool {
        if edge.len() != self.r {
            return false;
        }
        let mut key = edge.to_vec();
        key.sort_unstable();
        self.edges.binary_search_by(|e| e[..].cmp(&key[..])).is_ok()
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), HypergraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// d_H(S): the number of edges containing every vertex of `set`.
    ///
    /// Scans the incidence list of the lowest-degree member of `set`.
    pub fn set_degree(&self, set: &[Vertex]) -> Result<usize, HypergraphError> {
        for &v in set {
            self.check_vertex(v)?;
        }
        let Some(&pivot) = set.iter().min_by_key(|&&v| self.degree(v)) else {
            return Ok(self.edge_count());
        };
        if set.len() == 2 && self.r == 3 {
            return Ok(self.codegree(set[0], set[1]));
        }
        let count = self.incidence[pivot]
            .iter()
            .filter(|&&id| {
                let e = &self.edges[id as usize];
                set.iter().all(|v| e.binary_search(v).is_ok())
            })
            .count();
        Ok(count)
    }

    /// N_H({u, v}) for a 3-graph: every `w` with `{u, v, w}` an edge.
    pub fn pair_neighborhood(&self, u: Vertex, v: Vertex) -> Result<VertexSet, HypergraphError> {
        if self.r != 3 {
            return Err(HypergraphError::NotPairUniform { r: self.r });
        }
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.pair_set(u, v).cloned().unwrap_or_else(|| VertexSet::new(self.n)))
    }

    /// Borrowed pair neighborhood; `None` means empty. Requires r = 3.
    #[inline]
    pub(crate) fn pair_set(&self, u: Vertex, v: Vertex) -> Option<&VertexSet> {
        match &self.pairs {
            PairIndex::Dense(table) => Some(&table[u * self.n + v]),
            PairIndex::Sparse(map) => map.get(&(u.min(v), u.max(v))),
            PairIndex::None => None,
        }
    }

    /// Pair codegree for a 3-graph. Callers guarantee r = 3 and valid labels.
    #[inline]
    pub(crate) fn codegree(&self, u: Vertex, v: Vertex) -> usize {
        if u == v {
            return self.degree(u);
        }
        self.pair_set(u, v).map_or(0, VertexSet::len)
    }

    /// |N_H({u, v}) ∖ exclude|.
    #[inline]
    pub(crate) fn codegree_outside(&self, u: Vertex, v: Vertex, exclude: &VertexSet) -> usize {
        self.pair_set(u, v).map_or(0, |s| s.difference_len(exclude))
    }

    /// δ_1(H); isolated vertices give 0.
    pub fn min_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn is_pair_uniform(&self) -> bool {
        self.r == 3
    }

    pub(crate) fn require_triples(&self) -> Result<(), HypergraphError> {
        if self.r == 3 {
            Ok(())
        } else {
            Err(HypergraphError::NotPairUniform { r: self.r })
        }
    }

    /// A copy with the edges rejected by `keep` removed.
    pub fn filter_edges(&self, mut keep: impl FnMut(&[Vertex]) -> bool) -> Hypergraph {
        let edges = self.edges.iter().filter(|e| keep(e)).cloned().collect();
        Self::from_sorted_unique(self.r, self.n, edges)
    }
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("r", &self.r)
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn k4() -> Hypergraph {
        Hypergraph::build(3, 4, (0..4).combinations(3)).unwrap()
    }

    #[test]
    fn complete_on_four_vertices() {
        let h = k4();
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.set_degree(&[0]).unwrap(), 3);
        assert_eq!(h.set_degree(&[0, 1, 2]).unwrap(), 1);
        assert_eq!(h.min_degree(), 3);
        assert_eq!(h.pair_neighborhood(0, 1).unwrap().to_vec(), vec![2, 3]);
    }

    #[test]
    fn single_edge() {
        let h = Hypergraph::build(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(h.edge_count(), 1);
        let h5 = Hypergraph::build(3, 5, [[0, 1, 2]]).unwrap();
        assert!(h5.pair_neighborhood(3, 4).unwrap().is_empty());
        assert_eq!(h5.min_degree(), 0);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Hypergraph::build(3, 4, [[0, 1, 2], [0, 2, 1]]),
            Err(HypergraphError::DuplicateEdge { index: 1 })
        );
        assert!(matches!(
            Hypergraph::build(3, 4, [vec![0, 1]]),
            Err(HypergraphError::EdgeArity { found: 2, .. })
        ));
        assert!(matches!(
            Hypergraph::build(3, 4, [[0, 1, 4]]),
            Err(HypergraphError::VertexOutOfRange { vertex: 4, .. })
        ));
        assert!(matches!(
            Hypergraph::build(3, 4, [[0, 1, 1]]),
            Err(HypergraphError::RepeatedVertexInEdge { vertex: 1, .. })
        ));
        assert!(matches!(
            Hypergraph::build(3, 2, Vec::<[usize; 3]>::new()),
            Err(HypergraphError::InvalidUniformity { .. })
        ));
        assert!(matches!(
            k4().set_degree(&[7]),
            Err(HypergraphError::VertexOutOfRange { vertex: 7, .. })
        ));
    }

    #[test]
    fn pair_queries_need_triples() {
        let h = Hypergraph::build(4, 5, [[0, 1, 2, 3]]).unwrap();
        assert_eq!(
            h.pair_neighborhood(0, 1),
            Err(HypergraphError::NotPairUniform { r: 4 })
        );
        assert_eq!(h.set_degree(&[0, 1]).unwrap(), 1);
        assert_eq!(h.set_degree(&[0, 4]).unwrap(), 0);
    }

    #[test]
    fn sparse_pair_index_matches_dense() {
        let n = DENSE_PAIR_LIMIT + 4;
        let edges: Vec<[usize; 3]> = (0..n - 2).map(|i| [i, i + 1, i + 2]).collect();
        let h = Hypergraph::build(3, n, &edges).unwrap();
        assert!(matches!(h.pairs, PairIndex::Sparse(_)));
        assert_eq!(h.pair_neighborhood(5, 6).unwrap().to_vec(), vec![4, 7]);
        assert_eq!(h.pair_neighborhood(6, 5).unwrap().to_vec(), vec![4, 7]);
        assert_eq!(h.set_degree(&[10, 12]).unwrap(), 1);
    }

    #[test]
    fn edges_are_lexicographic() {
        let h = Hypergraph::build(3, 5, [[4, 3, 2], [0, 4, 1], [0, 1, 2]]).unwrap();
        let edges: Vec<Vec<usize>> = h.edges().map(<[usize]>::to_vec).collect();
        assert_eq!(edges, vec![vec![0, 1, 2], vec![0, 1, 4], vec![2, 3, 4]]);
        assert!(h.contains_edge(&[4, 1, 0]));
        assert!(!h.contains_edge(&[1, 2, 3]));
    }
}
