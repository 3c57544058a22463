use std::collections::BTreeMap;

use topocard::estimators::*;
use topocard::{EstimateError, NatInterval, PointSet};

fn iv(lo: u64, hi: u64) -> NatInterval {
    NatInterval::new(lo, hi).unwrap()
}

fn grid(max: u64) -> Vec<NatInterval> {
    (0..=max)
        .flat_map(|lo| (lo..=max).map(move |hi| iv(lo, hi)))
        .collect()
}

/// Intervals one step wider than `x`, endpoints kept within `0..=max`.
fn widenings(x: NatInterval, max: u64) -> Vec<NatInterval> {
    let mut out = Vec::new();
    if x.lo() > 0 {
        out.push(iv(x.lo() - 1, x.hi()));
    }
    if x.hi() < max {
        out.push(iv(x.lo(), x.hi() + 1));
    }
    out
}

/// Widening never narrows a result; a widened input may only fail by
/// breaking a stated precondition.
fn assert_not_narrowed(
    narrow: &Result<NatInterval, EstimateError>,
    wide: &Result<NatInterval, EstimateError>,
    what: &str,
) {
    if let Ok(n) = narrow {
        match wide {
            Ok(w) => assert!(n.is_subset_of(*w), "{what}: {n} not within {w}"),
            Err(e) => assert!(
                matches!(
                    e,
                    EstimateError::HypothesisViolated(_) | EstimateError::DivisorContainsZero(_)
                ),
                "{what}: widened input gave {e}"
            ),
        }
    }
}

const MAX: u64 = 8;

#[test]
fn union_split_estimators_are_monotone() {
    let g = grid(MAX);
    for &x in &g {
        for &a in &g {
            for &b in &g {
                let h = UnionSplitHypothesis { x, a, b };
                let base = est_intersection_card(&h);
                assert_eq!(base, est_hyperconnected_intersection_card(&h));
                let ed = est_ed_union_closure_card(&EdUnionHypothesis { x, a, b });
                for wx in widenings(x, MAX) {
                    let w = UnionSplitHypothesis { x: wx, ..h };
                    assert_not_narrowed(&base, &est_intersection_card(&w), "thm2.3 x");
                    let we = EdUnionHypothesis { x: wx, a, b };
                    assert_not_narrowed(&ed, &est_ed_union_closure_card(&we), "thm3.4 x");
                }
                for wa in widenings(a, MAX) {
                    let w = UnionSplitHypothesis { a: wa, ..h };
                    assert_not_narrowed(&base, &est_intersection_card(&w), "thm2.3 a");
                    let we = EdUnionHypothesis { x, a: wa, b };
                    assert_not_narrowed(&ed, &est_ed_union_closure_card(&we), "thm3.4 a");
                }
                for wb in widenings(b, MAX) {
                    let w = UnionSplitHypothesis { b: wb, ..h };
                    assert_not_narrowed(&base, &est_intersection_card(&w), "thm2.3 b");
                }
            }
        }
    }
}

#[test]
fn superset_and_factor_are_monotone() {
    let g = grid(MAX);
    for n in 0..=MAX {
        for &a in &g {
            let base = est_superset_card(&SupersetHypothesis { n, a });
            for wa in widenings(a, MAX) {
                let w = est_superset_card(&SupersetHypothesis { n, a: wa });
                assert_not_narrowed(&base, &w, "thm2.1");
            }
        }
    }
    for &c in &g {
        for &a in &g {
            let base = est_factor_card(&ProductHypothesis { c, a });
            for wc in widenings(c, MAX) {
                assert_not_narrowed(
                    &base,
                    &est_factor_card(&ProductHypothesis { c: wc, a }),
                    "thm2.2 c",
                );
            }
            for wa in widenings(a, MAX) {
                assert_not_narrowed(
                    &base,
                    &est_factor_card(&ProductHypothesis { c, a: wa }),
                    "thm2.2 a",
                );
            }
        }
    }
}

#[test]
fn interior_caps_are_monotone() {
    for n in 1..=MAX {
        for p in n.div_ceil(2)..=n {
            let outside = (n - p) as u32;
            if outside > 3 {
                continue;
            }
            // caps range over 2..=max(n, 2)
            let span = n.max(2) - 1;
            for idx in 0..span.pow(outside) {
                let k_bounds: BTreeMap<usize, u64> = (0..outside)
                    .map(|i| (i as usize, 2 + idx / span.pow(i) % span))
                    .collect();
                let h = InteriorHypothesis { n, p, k_bounds };
                let base = est_interior_card(&h);
                assert!(base.is_ok(), "n={n} p={p} {:?}: {base:?}", h.k_bounds);
                for i in 0..outside as usize {
                    let mut wider = h.k_bounds.clone();
                    *wider.get_mut(&i).unwrap() += 1;
                    let w = est_interior_card(&InteriorHypothesis {
                        k_bounds: wider,
                        ..h.clone()
                    });
                    assert_not_narrowed(&base, &w, "thm3.2");
                }
            }
        }
    }
}

#[test]
fn exact_inputs_collapse_to_inclusion_exclusion() {
    for n in 0..=12u64 {
        for a in 0..=n {
            for b in 0..=n {
                let h = UnionSplitHypothesis {
                    x: NatInterval::from_scalar(n),
                    a: NatInterval::from_scalar(a),
                    b: NatInterval::from_scalar(b),
                };
                match est_intersection_card(&h) {
                    Ok(r) => {
                        assert!(a + b >= n);
                        assert_eq!(r, NatInterval::from_scalar(a + b - n));
                    }
                    Err(e) => {
                        assert!(a + b < n);
                        assert_eq!(e.kind(), "EmptyAfterClamp");
                    }
                }
            }
        }
    }
}

#[test]
fn estimators_are_pure() {
    let h = Hypothesis::Interior(InteriorHypothesis {
        n: 6,
        p: 4,
        k_bounds: [(4, 3), (5, 3)].into_iter().collect(),
    });
    let first = h.estimate();
    for _ in 0..10 {
        assert_eq!(h.estimate(), first);
    }
}

/// Every cover X = A ∪ B of an n-point set with n <= 6, using input
/// intervals that contain the exact sizes with slack on both sides.
#[test]
fn intersection_sound_with_loose_inputs() {
    for n in 1..=6usize {
        let full = PointSet::full(n);
        for a in PointSet::all_subsets(n) {
            for b in PointSet::all_subsets(n).filter(|b| a.union(*b) == full) {
                let exact = a.intersection(b).len() as u64;
                for slack in 0..=2u64 {
                    let loose = |k: usize| {
                        iv(
                            (k as u64).saturating_sub(slack),
                            (k as u64 + slack).min(n as u64),
                        )
                    };
                    let h = UnionSplitHypothesis {
                        x: loose(n),
                        a: loose(a.len()),
                        b: loose(b.len()),
                    };
                    let est = est_intersection_card(&h).unwrap();
                    assert!(
                        est.contains(exact),
                        "n={n} A={a} B={b} slack={slack}: {est}"
                    );
                }
            }
        }
    }
}
