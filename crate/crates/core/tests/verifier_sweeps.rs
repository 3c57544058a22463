use topocard::verifier::{merge_reports, planned_runs, Prediction};
use topocard::{
    verify_all, verify_theorem, verify_theorem_parallel, verify_theorem_shard, FiniteSpace,
    NatInterval, PointSet, Reading, Shard, TheoremId, VerificationReport,
};

fn run(t: TheoremId, n: usize, r: Reading) -> VerificationReport {
    verify_theorem(t, n, r, 10).unwrap()
}

/// Closure by intersecting closed supersets, independent of the library route.
fn closure_oracle(space: &FiniteSpace, a: PointSet) -> PointSet {
    space
        .opens()
        .map(PointSet::complement)
        .filter(|c| a.is_subset_of(*c))
        .fold(space.carrier(), PointSet::intersection)
}

#[test]
fn closure_counterexample_on_two_blocks() {
    let r = run(TheoremId::Closure, 4, Reading::PointwiseNonT1);
    assert!(r.cases_contained < r.cases_total);
    let space = FiniteSpace::validate(4, &[0, 3, 12, 15]).unwrap();
    let a = PointSet::from_points(4, &[0, 1]);
    let hit = r
        .counterexamples
        .iter()
        .any(|c| c.space.as_ref() == Some(&space) && c.sets == [a]);
    // the cap may cut it off; search the full list with a generous cap
    let full = verify_theorem(TheoremId::Closure, 4, Reading::PointwiseNonT1, usize::MAX).unwrap();
    let case = full
        .counterexamples
        .iter()
        .find(|c| c.space.as_ref() == Some(&space) && c.sets == [a])
        .expect("two-block space flagged");
    assert_eq!(case.exact_value, 2);
    assert_eq!(
        case.predicted,
        Prediction::Interval(NatInterval::new(4, 4).unwrap())
    );
    assert!(hit || r.counterexamples.len() == 10);
    assert_eq!(
        full.cases_total - full.cases_contained,
        full.counterexamples.len() as u64
    );
}

#[test]
fn semi_open_counterexample_on_three_points() {
    let r = verify_theorem(TheoremId::SemiOpen, 3, Reading::PointwiseNonT1, usize::MAX).unwrap();
    let space = FiniteSpace::validate(3, &[0, 1, 7]).unwrap();
    let a = PointSet::from_points(3, &[0, 1]);
    let o = PointSet::from_points(3, &[0]);
    let case = r
        .counterexamples
        .iter()
        .find(|c| c.space.as_ref() == Some(&space) && c.sets == [a, o])
        .expect("semi-open discrepancy flagged");
    assert_eq!(case.exact_value, 2);
    assert!(matches!(&case.predicted, Prediction::Error { error, .. } if error == "EmptyEstimate"));
    assert_eq!(case.hypothesis["k"], 1);
    assert!(space.is_semi_open(a).0);
}

#[test]
fn sound_theorems_fully_contained() {
    for n in 1..=6 {
        for t in [
            TheoremId::Superset,
            TheoremId::Factor,
            TheoremId::Intersection,
        ] {
            let r = run(t, n, Reading::NotApplicable);
            assert!(r.fully_contained(), "{}", r.summary_line());
        }
    }
    for n in 1..=4 {
        let r = run(
            TheoremId::HyperconnectedIntersection,
            n,
            Reading::NotApplicable,
        );
        assert!(r.cases_total > 0);
        assert!(r.fully_contained(), "{}", r.summary_line());
    }
}

#[test]
fn counterexamples_are_consistent_and_oracle_checked() {
    for t in [
        TheoremId::Closure,
        TheoremId::EdUnionClosure,
        TheoremId::Interior,
    ] {
        for reading in Reading::NON_T1 {
            let r = verify_theorem(t, 4, reading, 50).unwrap();
            assert!(r.cases_contained <= r.cases_total);
            for c in &r.counterexamples {
                assert!(!c.contained);
                assert_eq!(c.predicted.contains(c.exact_value), c.contained);
                let space = c.space.as_ref().unwrap();
                let exact = match t {
                    TheoremId::Closure => closure_oracle(space, c.sets[0]).len(),
                    TheoremId::EdUnionClosure => {
                        closure_oracle(space, c.sets[0].union(c.sets[1])).len()
                    }
                    _ => closure_oracle(space, c.sets[0].complement())
                        .complement()
                        .len(),
                };
                assert_eq!(c.exact_value, exact as u64);
            }
            let keys: Vec<_> = r.counterexamples.iter().map(|c| c.key).collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn reports_are_deterministic() {
    for (t, n, reading) in planned_runs(4, &Reading::NON_T1) {
        let a = verify_theorem(t, n, reading, 10).unwrap();
        let b = verify_theorem(t, n, reading, 10).unwrap();
        assert_eq!(a.canonical_json(), b.canonical_json());
    }
}

#[test]
fn sharding_matches_single_worker() {
    for (t, n, reading) in [
        (TheoremId::Closure, 4, Reading::PointwiseNonT1),
        (TheoremId::SemiOpen, 4, Reading::LiteralNonT1),
        (TheoremId::Interior, 4, Reading::LiteralNonT1),
        (TheoremId::Intersection, 5, Reading::NotApplicable),
        (TheoremId::Factor, 4, Reading::NotApplicable),
    ] {
        let whole = verify_theorem(t, n, reading, 3).unwrap();
        for shards in [2, 3, 4, 7] {
            let parts: Vec<_> = Shard::all(shards)
                .map(|s| verify_theorem_shard(t, n, reading, 3, s).unwrap())
                .collect();
            // merge in reverse to exercise order-insensitivity
            let merged = merge_reports(parts.into_iter().rev()).unwrap().unwrap();
            assert_eq!(
                merged.canonical_json(),
                whole.canonical_json(),
                "{t} {shards}"
            );
            let par = verify_theorem_parallel(t, n, reading, 3, shards).unwrap();
            assert_eq!(par.canonical_json(), whole.canonical_json());
        }
    }
}

#[test]
fn report_json_round_trips() {
    let r = run(TheoremId::SemiOpen, 3, Reading::LiteralNonT1);
    let text = serde_json::to_string(&r).unwrap();
    let back: VerificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["counterexamples"][0]["contained"] = serde_json::Value::Bool(true);
    assert!(serde_json::from_value::<VerificationReport>(v).is_err());
}

#[test]
fn verify_all_shape() {
    let reports = verify_all(2, &Reading::NON_T1, 10).unwrap();
    // 4 reading-free theorems + 4 theorems under two readings, each for n = 1, 2
    assert_eq!(reports.len(), (4 + 4 * 2) * 2);
    let order: Vec<_> = reports
        .iter()
        .map(|r| (r.theorem_id, r.n, r.hypothesis_reading))
        .collect();
    assert_eq!(order, planned_runs(2, &Reading::NON_T1));
    assert!(verify_all(6, &Reading::NON_T1, 10).is_err());
}

#[test]
fn verify_all_n4_sound_and_falsified() {
    let reports = verify_all(4, &Reading::NON_T1, 10).unwrap();
    for r in &reports {
        match r.theorem_id {
            TheoremId::Superset
            | TheoremId::Factor
            | TheoremId::Intersection
            | TheoremId::HyperconnectedIntersection => {
                assert!(r.fully_contained(), "{}", r.summary_line())
            }
            _ => {}
        }
    }
    for t in [TheoremId::Closure, TheoremId::SemiOpen] {
        let found: usize = reports
            .iter()
            .filter(|r| r.theorem_id == t)
            .map(|r| r.counterexamples.len())
            .sum();
        assert!(found >= 1, "{t} has no counterexample at n <= 4");
    }
}
