//! Extremal families and the closed-form degree thresholds that go with them.
//!
//! Vertex layouts are fixed: the star's special set `A` is `0..k`, the core
//! set is `0..s`, and the 2-core embedded by [`gen_star_plus`] sits on
//! `{k, k + 1}`. Serialized constructions are therefore reproducible.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::ConstructionError;
use crate::hypergraph::Hypergraph;
use crate::Vertex;

/// The named families this crate can generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionKind {
    /// S_r(n, k): every r-set meeting `A = 0..k`.
    Star,
    /// C_r(n, s): every r-set containing `S = 0..s`.
    Core,
    /// S_r^+(n, k): the star plus a 2-core inside `B`.
    StarPlus,
    /// All r-subsets.
    Complete,
}

impl ConstructionKind {
    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::Star => "star",
            ConstructionKind::Core => "core",
            ConstructionKind::StarPlus => "star_plus",
            ConstructionKind::Complete => "complete",
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "star" => Ok(ConstructionKind::Star),
            "core" => Ok(ConstructionKind::Core),
            "star_plus" | "star-plus" | "starplus" => Ok(ConstructionKind::StarPlus),
            "complete" => Ok(ConstructionKind::Complete),
            other => Err(ConstructionError::InvalidParameter(format!(
                "unknown construction `{other}`"
            ))),
        }
    }
}

/// A fully parameterized construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub r: usize,
    pub n: usize,
    /// `k` for star and star_plus, `s` for core, ignored for complete.
    pub parameter: usize,
}

impl ConstructionSpec {
    pub fn generate(&self) -> Result<Hypergraph, ConstructionError> {
        match self.kind {
            ConstructionKind::Star => gen_star(self.r, self.n, self.parameter),
            ConstructionKind::Core => gen_core(self.r, self.n, self.parameter),
            ConstructionKind::StarPlus => gen_star_plus(self.r, self.n, self.parameter),
            ConstructionKind::Complete => gen_complete(self.r, self.n),
        }
    }
}

fn invalid(message: String) -> ConstructionError {
    ConstructionError::InvalidParameter(message)
}

fn check_uniformity(r: usize, n: usize) -> Result<(), ConstructionError> {
    if r < 2 || n < r {
        return Err(invalid(format!("need n >= r >= 2, got r = {r}, n = {n}")));
    }
    Ok(())
}

fn boxed(edges: impl Iterator<Item = Vec<Vertex>>) -> Vec<Box<[Vertex]>> {
    edges.map(Vec::into_boxed_slice).collect()
}

/// S_r(n, k). Edge count is C(n, r) − C(n − k, r).
pub fn gen_star(r: usize, n: usize, k: usize) -> Result<Hypergraph, ConstructionError> {
    check_uniformity(r, n)?;
    if k == 0 || k >= n {
        return Err(invalid(format!("star needs 1 <= k < n, got k = {k}, n = {n}")));
    }
    // combinations() yields lexicographic order, so the edges arrive sorted.
    let edges = boxed((0..n).combinations(r).filter(|e| e[0] < k));
    Ok(Hypergraph::from_sorted_unique(r, n, edges))
}

/// C_r(n, s). Edge count is C(n − s, r − s).
pub fn gen_core(r: usize, n: usize, s: usize) -> Result<Hypergraph, ConstructionError> {
    check_uniformity(r, n)?;
    if s == 0 || s > r {
        return Err(invalid(format!("core needs 1 <= s <= r, got s = {s}, r = {r}")));
    }
    let edges = boxed((s..n).combinations(r - s).map(|tail| {
        let mut e: Vec<Vertex> = (0..s).collect();
        e.extend(tail);
        e
    }));
    Ok(Hypergraph::from_sorted_unique(r, n, edges))
}

/// S_r^+(n, k): [`gen_star`] plus every r-set of `B` containing `{k, k + 1}`.
pub fn gen_star_plus(r: usize, n: usize, k: usize) -> Result<Hypergraph, ConstructionError> {
    check_uniformity(r, n)?;
    if k == 0 || n < k + r {
        return Err(invalid(format!(
            "star_plus needs k >= 1 and n - k >= r, got k = {k}, n = {n}, r = {r}"
        )));
    }
    let star = (0..n).combinations(r).filter(|e| e[0] < k);
    let core = (k + 2..n).combinations(r - 2).map(|tail| {
        let mut e = vec![k, k + 1];
        e.extend(tail);
        e
    });
    // Star edges all start below k and core edges start at k, so the
    // concatenation is already lexicographic and duplicate-free.
    let edges = boxed(star.chain(core));
    Ok(Hypergraph::from_sorted_unique(r, n, edges))
}

pub fn gen_complete(r: usize, n: usize) -> Result<Hypergraph, ConstructionError> {
    check_uniformity(r, n)?;
    Ok(Hypergraph::from_sorted_unique(r, n, boxed((0..n).combinations(r))))
}

fn half(numerator: i64, what: impl FnOnce() -> String) -> Result<usize, ConstructionError> {
    if numerator % 2 != 0 {
        return Err(ConstructionError::NonIntegral(what()));
    }
    usize::try_from(numerator / 2).map_err(|_| invalid(format!("{} is negative", what())))
}

/// δ_1(S_3(n, k)) = kn − k²/2 − 3k/2.
pub fn star_min_degree(n: usize, k: usize) -> Result<usize, ConstructionError> {
    if k == 0 || k >= n {
        return Err(invalid(format!("need 1 <= k < n, got k = {k}, n = {n}")));
    }
    let (n, k) = (n as i64, k as i64);
    half(2 * k * n - k * k - 3 * k, || format!("star_min_degree({n}, {k})"))
}

/// δ_1(S_3^+(n, k)) = kn − k²/2 − 3k/2 + 1.
pub fn star_plus_min_degree(n: usize, k: usize) -> Result<usize, ConstructionError> {
    if k == 0 || n < k + 3 {
        return Err(invalid(format!("need k >= 1 and n - k >= 3, got k = {k}, n = {n}")));
    }
    Ok(star_min_degree(n, k)? + 1)
}

/// A minimum-degree condition that forces a linear path of some length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold {
    /// Required δ_1(H).
    pub min_degree: usize,
    /// Smallest order n for which the guarantee is stated.
    pub min_order: usize,
}

impl Threshold {
    pub fn is_met(&self, n: usize, min_degree: usize) -> bool {
        n >= self.min_order && min_degree >= self.min_degree
    }
}

/// The minimum-degree bound forcing a linear path of length `t`.
///
/// Odd `t = 2k + 1`: δ_1 ≥ kn + 6k² − 3k + 3 for n ≥ 4k + 19.
/// Even `t = 2k + 2`: δ_1 ≥ kn + 6k² + 7k + 6 for n ≥ 4k + 21.
pub fn theorem_threshold(n: usize, t: usize) -> Threshold {
    assert!(t >= 1, "path length must be positive");
    if t % 2 == 1 {
        let k = (t - 1) / 2;
        Threshold {
            min_degree: k * n + 6 * k * k + 3 - 3 * k,
            min_order: 4 * k + 19,
        }
    } else {
        let k = (t - 2) / 2;
        Threshold {
            min_degree: k * n + 6 * k * k + 7 * k + 6,
            min_order: 4 * k + 21,
        }
    }
}

/// g(n, t), the degree bound under which the codegree lemmas hold, with
/// quadratic `t` terms:
///
/// - odd t: ((t − 1)/2)·n + (3/2)t² − (9/2)t + 6
/// - even t: ((t − 2)/2)·n + (3/2)t² − (5/2)t + 6
pub fn g_bound(n: usize, t: usize) -> usize {
    assert!(t >= 3, "g(n, t) is defined for t >= 3");
    if t % 2 == 1 {
        (t - 1) / 2 * n + (3 * t * t + 12 - 9 * t) / 2
    } else {
        (t - 2) / 2 * n + (3 * t * t + 12 - 5 * t) / 2
    }
}

/// g(n, t) with the t³ terms exactly as printed in the definition. Kept for
/// comparison only; nothing in the crate gates on it.
pub fn g_bound_cubic(n: usize, t: usize) -> usize {
    assert!(t >= 3, "g(n, t) is defined for t >= 3");
    if t % 2 == 1 {
        (t - 1) / 2 * n + (3 * t * t * t + 12 - 9 * t) / 2
    } else {
        (t - 2) / 2 * n + (3 * t * t * t + 12 - 5 * t) / 2
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_on_eight_vertices() {
        let h = gen_star(3, 8, 1).unwrap();
        assert_eq!(h.edge_count(), 21);
        assert_eq!(h.min_degree(), 6);
        assert_eq!(h.set_degree(&[1, 2]).unwrap(), 1);
        let nb = h.pair_neighborhood(0, 1).unwrap();
        assert_eq!(nb.to_vec(), (2..8).collect::<Vec<_>>());
    }

    #[test]
    fn degenerate_star_is_rejected() {
        assert!(matches!(gen_star(3, 4, 4), Err(ConstructionError::InvalidParameter(_))));
        assert!(gen_star(3, 4, 0).is_err());
        assert!(gen_star(3, 2, 1).is_err());
    }

    #[test]
    fn core_generators() {
        let h = gen_core(3, 9, 2).unwrap();
        assert_eq!(h.edge_count(), 7);
        assert!((2..9).all(|t| h.contains_edge(&[0, 1, t])));
        let single = gen_core(3, 3, 3).unwrap();
        assert_eq!(single.edges().collect::<Vec<_>>(), vec![&[0, 1, 2][..]]);
        assert!(gen_core(3, 5, 4).is_err());
        assert!(gen_core(3, 5, 0).is_err());
    }

    #[test]
    fn star_plus_adds_the_two_core() {
        let plus = gen_star_plus(3, 10, 1).unwrap();
        let star = gen_star(3, 10, 1).unwrap();
        assert_eq!(plus.edge_count() - star.edge_count(), 7);
        assert_eq!(plus.min_degree(), 9);
        assert!(gen_star_plus(3, 3, 1).is_err());
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(gen_complete(3, 4).unwrap().edge_count(), 4);
        assert_eq!(gen_complete(3, 3).unwrap().edge_count(), 1);
        assert_eq!(gen_complete(3, 6).unwrap().min_degree(), 10);
        assert!(gen_complete(3, 2).is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(star_min_degree(12, 1).unwrap(), 10);
        assert_eq!(star_plus_min_degree(10, 1).unwrap(), 9);
        assert!(star_min_degree(4, 4).is_err());
        assert_eq!(
            theorem_threshold(23, 3),
            Threshold { min_degree: 29, min_order: 23 }
        );
        assert_eq!(
            theorem_threshold(25, 4),
            Threshold { min_degree: 44, min_order: 25 }
        );
        for n in [1, 3, 50] {
            assert_eq!(theorem_threshold(n, 1).min_degree, 3);
        }
        assert_eq!(g_bound(23, 3), 29);
        assert_eq!(g_bound(25, 4), 45);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(20, 10), 184_756);
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("star-plus".parse::<ConstructionKind>().unwrap(), ConstructionKind::StarPlus);
        assert!("wheel".parse::<ConstructionKind>().is_err());
        let spec = ConstructionSpec { kind: ConstructionKind::Core, r: 3, n: 9, parameter: 2 };
        assert_eq!(spec.generate().unwrap(), gen_core(3, 9, 2).unwrap());
    }
}
