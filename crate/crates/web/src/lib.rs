//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export takes plain numbers and returns a JSON string. The same
//! computations are available as ordinary Rust functions so they can be
//! tested natively.

use hyperpath::constructions::{binomial, g_bound, star_min_degree, star_plus_min_degree, theorem_threshold};
use hyperpath::finder::{find_guaranteed, FinderOutcome};
use hyperpath::lab::{exhaustive_check, random_min_degree_graph};
use hyperpath::oracle::find_path;
use hyperpath::LinearPath;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest order the exhaustive check accepts in the browser.
pub const MAX_EXHAUSTIVE_ORDER: usize = 6;
/// Largest order the finder demo accepts.
pub const MAX_FINDER_ORDER: usize = 60;
/// Orders up to this size also get an exact oracle answer.
const ORACLE_CHECK_ORDER: usize = 14;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvePoint {
    pub n: usize,
    /// Degree that forces a path of length `t`; `None` below the stated order.
    pub threshold: Option<usize>,
    /// Minimum degree of the extremal family that has no such path.
    pub extremal: Option<usize>,
    pub g_bound: Option<usize>,
    /// Largest possible minimum degree, C(n − 1, 2).
    pub max_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Curves {
    pub t: usize,
    /// `star` for odd `t`, `star_plus` for even.
    pub family: &'static str,
    pub points: Vec<CurvePoint>,
}

/// Threshold and extremal degree as functions of the order.
pub fn curves(t: usize, n_min: usize, n_max: usize) -> Result<Curves, String> {
    if t < 3 {
        return Err("length must be at least 3".into());
    }
    if n_min < 3 || n_max < n_min || n_max > 400 {
        return Err("need 3 <= n_min <= n_max <= 400".into());
    }
    let k = (t - 1) / 2;
    let odd = t % 2 == 1;
    let points = (n_min..=n_max)
        .map(|n| {
            let threshold = theorem_threshold(n, t);
            let extremal = if odd { star_min_degree(n, k) } else { star_plus_min_degree(n, k) };
            CurvePoint {
                n,
                threshold: (n >= threshold.min_order).then_some(threshold.min_degree),
                extremal: extremal.ok(),
                g_bound: Some(g_bound(n, t)),
                max_degree: binomial(n - 1, 2),
            }
        })
        .collect();
    Ok(Curves {
        t,
        family: if odd { "star" } else { "star_plus" },
        points,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceStep {
    pub kind: String,
    pub length: usize,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FinderDemo {
    pub n: usize,
    pub t: usize,
    pub seed: u64,
    pub edges: usize,
    pub min_degree: usize,
    pub threshold: usize,
    pub promised: bool,
    pub trace: Vec<TraceStep>,
    /// Found path, 1-based.
    pub path: Option<Vec<usize>>,
    pub violation: Option<String>,
    /// Exact answer for small orders.
    pub oracle: Option<bool>,
}

fn one_based(p: &LinearPath) -> Vec<usize> {
    p.vertices().iter().map(|v| v + 1).collect()
}

/// Runs the finder on a seeded random graph with the requested minimum degree.
pub fn finder_demo(n: usize, min_degree: usize, t: usize, seed: u64) -> Result<FinderDemo, String> {
    if !(3..=MAX_FINDER_ORDER).contains(&n) {
        return Err(format!("order must be in 3..={MAX_FINDER_ORDER}"));
    }
    if t == 0 {
        return Err("length must be positive".into());
    }
    let h = random_min_degree_graph(n, min_degree, seed).map_err(|e| e.to_string())?;
    let run = find_guaranteed(&h, t, None).map_err(|e| e.to_string())?;
    let threshold = theorem_threshold(n, t);
    let oracle = if n <= ORACLE_CHECK_ORDER {
        Some(find_path(&h, t).map_err(|e| e.to_string())?.is_found())
    } else {
        None
    };
    let (path, violation) = match &run.outcome {
        FinderOutcome::Path(p) => (Some(one_based(p)), None),
        FinderOutcome::Violation(v) => (None, Some(v.to_string())),
    };
    Ok(FinderDemo {
        n,
        t,
        seed,
        edges: h.edge_count(),
        min_degree: h.min_degree(),
        threshold: threshold.min_degree,
        promised: threshold.is_met(n, h.min_degree()),
        trace: run
            .trace
            .iter()
            .map(|m| TraceStep {
                kind: m.kind.to_string(),
                length: m.length,
                m: m.m_size,
            })
            .collect(),
        path,
        violation,
        oracle,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExhaustiveSummary {
    pub n: usize,
    pub min_degree: usize,
    pub t: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Checks every labeled 3-graph of order `n` and minimum degree at least
/// `min_degree` for a path of length `t`.
pub fn exhaustive(n: usize, min_degree: usize, t: usize) -> Result<ExhaustiveSummary, String> {
    if !(3..=MAX_EXHAUSTIVE_ORDER).contains(&n) {
        return Err(format!("order must be in 3..={MAX_EXHAUSTIVE_ORDER}"));
    }
    if t == 0 {
        return Err("length must be positive".into());
    }
    let r = exhaustive_check(n, min_degree, t).map_err(|e| e.to_string())?;
    Ok(ExhaustiveSummary {
        n,
        min_degree,
        t,
        total: r.total,
        passed: r.passed,
        failed: r.counterexamples.len(),
    })
}

fn to_json<T: Serialize>(result: Result<T, String>) -> Result<String, JsError> {
    let value = result.map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&value).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = thresholdCurves)]
pub fn threshold_curves_js(t: usize, n_min: usize, n_max: usize) -> Result<String, JsError> {
    to_json(curves(t, n_min, n_max))
}

/// The seed arrives as a double from JavaScript and is truncated.
#[wasm_bindgen(js_name = finderTrace)]
pub fn finder_trace_js(n: usize, min_degree: usize, t: usize, seed: f64) -> Result<String, JsError> {
    to_json(finder_demo(n, min_degree, t, seed as u64))
}

#[wasm_bindgen(js_name = exhaustiveCheck)]
pub fn exhaustive_check_js(n: usize, min_degree: usize, t: usize) -> Result<String, JsError> {
    to_json(exhaustive(n, min_degree, t))
}
