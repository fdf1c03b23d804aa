mod common;

use std::ops::ControlFlow;

use common::*;
use hyperpath::constructions::{binomial, theorem_threshold};
use hyperpath::finder::{
    cycle_plus_configurations, extend, find_guaranteed, make_context, unfold_cycle_plus, FinderOutcome, MoveKind,
    ViolationKind,
};
use hyperpath::lab::random_min_degree_graph;
use hyperpath::oracle::{find_cycle_plus, find_path, for_each_path};
use hyperpath::Budget;
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, max_global_rejects: 8192, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(512))]

    #[test]
    fn finder_paths_are_valid_and_progress(h in arb_sparse_graph(7, 13), t in 1usize..=4) {
        let run = find_guaranteed(&h, t, None).unwrap();
        // Short lengths and edgeless graphs go straight to the oracle, which
        // leaves a single record on success and none on failure.
        let first = run.trace.first().map(|m| m.kind);
        if t <= 2 || h.edge_count() == 0 {
            prop_assert_eq!(first, run.outcome.path().map(|_| MoveKind::Oracle));
        } else {
            prop_assert_eq!(first, Some(MoveKind::Start));
        }
        for pair in run.trace.windows(2) {
            prop_assert!((pair[1].length, pair[1].m_size) > (pair[0].length, pair[0].m_size), "{:?}", run.trace);
        }
        match &run.outcome {
            FinderOutcome::Path(p) => {
                prop_assert_eq!(p.len(), t);
                prop_assert!(is_path(&edge_set(&h), p.vertices()));
            }
            FinderOutcome::Violation(v) => {
                // Small orders never meet the degree hypothesis, so nothing is promised.
                prop_assert!(!theorem_threshold(h.n(), t).is_met(h.n(), h.min_degree()));
                prop_assert_eq!(v.reason, ViolationKind::HypothesisUnmet, "{}", v);
            }
        }
        if t <= 2 || h.edge_count() == 0 {
            prop_assert_eq!(run.outcome.path().is_some(), find_path(&h, t).unwrap().is_found());
        }
    }

    #[test]
    fn unfolding_opens_every_cycle_plus(h in arb_sparse_graph(7, 10), k in 3usize..=4) {
        if let Some(w) = find_cycle_plus(&h, k).unwrap().found() {
            match unfold_cycle_plus(&h, &w).unwrap() {
                Some(u) => {
                    prop_assert_eq!(u.path.len(), k);
                    prop_assert!(is_path(&edge_set(&h), u.path.vertices()));
                }
                None => prop_assert!(h.degree(w.parallel()) <= binomial(2 * k, 2)),
            }
        }
    }

    #[test]
    fn stuck_paths_admit_no_forward_move(h in arb_sparse_graph(7, 10), t in 2usize..=3) {
        // Without a (t+1)-path, no t-path can be extended and every
        // cycle-plus configuration must fail to unfold.
        prop_assume!(find_path(&h, t + 1).unwrap().is_absent());
        for_each_path(&h, t, Budget::default_for(h.n()), |p| {
            assert!(extend(&h, p).is_none(), "extended {p}");
            let ctx = make_context(&h, p.clone()).unwrap();
            for (rule, w) in cycle_plus_configurations(&h, &ctx) {
                assert!(w.validate(&h).is_ok(), "{rule:?}");
                let unfolded = unfold_cycle_plus(&h, &w).unwrap();
                assert!(unfolded.is_none(), "{rule:?} unfolded");
                assert!(h.degree(w.parallel()) <= binomial(2 * t + 2, 2));
            }
            ControlFlow::Continue(())
        }).unwrap();
    }
}

proptest! {
    #![proptest_config(config(6))]

    #[test]
    fn finder_succeeds_above_the_threshold(seed in any::<u64>(), t in 3usize..=4) {
        let n = if t == 3 { 23 } else { 25 };
        let delta = theorem_threshold(n, t).min_degree;
        let h = random_min_degree_graph(n, delta, seed).unwrap();
        let run = find_guaranteed(&h, t, None).unwrap();
        let path = run.outcome.path().expect("promised instance");
        prop_assert!(path.validate(&h).is_ok());
        prop_assert_eq!(path.len(), t);
    }
}
