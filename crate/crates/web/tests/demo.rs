use hyperpath_web::{curves, exhaustive, finder_demo, MAX_EXHAUSTIVE_ORDER};

#[test]
fn curves_start_at_the_stated_order() {
    let c = curves(3, 18, 30).unwrap();
    assert_eq!(c.family, "star");
    assert_eq!(c.points.len(), 13);
    assert_eq!(c.points[0].threshold, None);
    let p = c.points.iter().find(|p| p.n == 23).unwrap();
    assert_eq!((p.threshold, p.extremal, p.max_degree), (Some(29), Some(21), 231));
    assert!(c.points.iter().all(|p| p.threshold.is_none_or(|d| d > p.extremal.unwrap())));
    assert_eq!(curves(4, 30, 30).unwrap().family, "star_plus");
    assert!(curves(2, 10, 20).is_err());
    assert!(curves(3, 20, 10).is_err());
}

#[test]
fn finder_demo_is_seeded() {
    let a = finder_demo(23, 29, 3, 11).unwrap();
    assert_eq!(a, finder_demo(23, 29, 3, 11).unwrap());
    assert!(a.promised);
    let path = a.path.as_ref().unwrap();
    assert_eq!(path.len(), 7);
    assert!(path.iter().all(|&v| (1..=23).contains(&v)));
    assert_eq!(a.trace[0].kind, "start");
    assert_eq!(a.trace.last().unwrap().length, 3);
    assert_eq!(a.oracle, None);

    let small = finder_demo(12, 10, 3, 2).unwrap();
    assert!(!small.promised);
    assert!(small.oracle.is_some());
    if small.path.is_some() {
        assert_eq!(small.oracle, Some(true));
    }
    assert!(finder_demo(100, 10, 3, 0).is_err());
    assert!(finder_demo(8, 30, 3, 0).is_err());
}

#[test]
fn exhaustive_counts() {
    let r = exhaustive(5, 4, 2).unwrap();
    assert_eq!((r.total, r.passed, r.failed), (86, 86, 0));
    let k4 = exhaustive(4, 3, 2).unwrap();
    assert_eq!((k4.total, k4.passed, k4.failed), (1, 0, 1));
    assert!(exhaustive(MAX_EXHAUSTIVE_ORDER + 1, 0, 1).is_err());
}

#[test]
fn exports_return_json() {
    let json = hyperpath_web::exhaustive_check_js(4, 3, 1).ok().unwrap();
    assert_eq!(json, r#"{"n":4,"min_degree":3,"t":1,"total":1,"passed":1,"failed":0}"#);
}
