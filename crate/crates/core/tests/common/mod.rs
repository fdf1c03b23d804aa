//! Brute-force references that share no code with the library's search.

#![allow(dead_code)]

use std::collections::HashSet;

use hyperpath::Hypergraph;
use proptest::prelude::*;

pub fn sorted(mut e: [usize; 3]) -> [usize; 3] {
    e.sort_unstable();
    e
}

pub fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

pub fn edge_set(h: &Hypergraph) -> HashSet<[usize; 3]> {
    h.edges().map(|e| sorted([e[0], e[1], e[2]])).collect()
}

fn distinct(seq: &[usize]) -> bool {
    seq.iter().collect::<HashSet<_>>().len() == seq.len()
}

pub fn is_path(edges: &HashSet<[usize; 3]>, seq: &[usize]) -> bool {
    seq.len() >= 3
        && seq.len() % 2 == 1
        && distinct(seq)
        && (0..seq.len() / 2).all(|i| edges.contains(&sorted([seq[2 * i], seq[2 * i + 1], seq[2 * i + 2]])))
}

pub fn is_cycle(edges: &HashSet<[usize; 3]>, seq: &[usize]) -> bool {
    let len = seq.len();
    len >= 6
        && len.is_multiple_of(2)
        && distinct(seq)
        && (0..len / 2).all(|i| edges.contains(&sorted([seq[2 * i], seq[2 * i + 1], seq[(2 * i + 2) % len]])))
}

/// Whether some injective sequence of `len` vertices satisfies `accept`.
pub fn any_sequence(n: usize, len: usize, accept: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(n: usize, len: usize, seq: &mut Vec<usize>, accept: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if seq.len() == len {
            return accept(seq);
        }
        for v in 0..n {
            if !seq.contains(&v) {
                seq.push(v);
                let hit = go(n, len, seq, accept);
                seq.pop();
                if hit {
                    return true;
                }
            }
        }
        false
    }
    len <= n && go(n, len, &mut Vec::with_capacity(len), accept)
}

pub fn has_path(h: &Hypergraph, t: usize) -> bool {
    let edges = edge_set(h);
    any_sequence(h.n(), 2 * t + 1, &mut |s| is_path(&edges, s))
}

pub fn has_cycle(h: &Hypergraph, k: usize) -> bool {
    let edges = edge_set(h);
    any_sequence(h.n(), 2 * k, &mut |s| is_cycle(&edges, s))
}

/// A linear k-cycle `s[..2k]` plus `v = s[2k]` with `{s[2k-2], v, s[0]}` an edge.
pub fn has_cycle_plus(h: &Hypergraph, k: usize) -> bool {
    let edges = edge_set(h);
    any_sequence(h.n(), 2 * k + 1, &mut |s| {
        is_cycle(&edges, &s[..2 * k]) && edges.contains(&sorted([s[2 * k - 2], s[2 * k], s[0]]))
    })
}

/// Outside common neighbors of `path[a]` and `path[b]`.
pub fn d(edges: &HashSet<[usize; 3]>, n: usize, path: &[usize], a: usize, b: usize) -> usize {
    (0..n)
        .filter(|w| !path.contains(w) && edges.contains(&sorted([path[a], path[b], *w])))
        .count()
}

/// A random 3-graph on 3..=max_n vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (3..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), triples(n).len())))
        .prop_map(|(n, bits)| {
            let edges: Vec<[usize; 3]> = triples(n).into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Hypergraph::build(3, n, edges).unwrap()
        })
}

/// A random 3-graph whose triples are kept with probability `density`.
pub fn arb_sparse_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (min_n..=max_n, 0.05..0.6f64, any::<u64>()).prop_map(|(n, density, seed)| {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<[usize; 3]> = triples(n).into_iter().filter(|_| rng.random_bool(density)).collect();
        Hypergraph::build(3, n, edges).unwrap()
    })
}
