//! Interval estimates for set cardinalities.
//!
//! Each estimator is plain arithmetic on a hypothesis bundle. None of them
//! looks at a topology; pairing a space with an estimator happens in
//! [`crate::verifier`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::interval::{IntervalError, NatInterval};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "thm2.1")]
    Superset,
    #[serde(rename = "thm2.2")]
    Factor,
    #[serde(rename = "thm2.3")]
    Intersection,
    #[serde(rename = "thm3.1")]
    Closure,
    #[serde(rename = "thm3.2")]
    Interior,
    #[serde(rename = "thm3.3")]
    SemiOpen,
    #[serde(rename = "thm3.4")]
    EdUnionClosure,
    #[serde(rename = "thm3.5")]
    HyperconnectedIntersection,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::Superset,
        TheoremId::Factor,
        TheoremId::Intersection,
        TheoremId::Closure,
        TheoremId::Interior,
        TheoremId::SemiOpen,
        TheoremId::EdUnionClosure,
        TheoremId::HyperconnectedIntersection,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Superset => "thm2.1",
            TheoremId::Factor => "thm2.2",
            TheoremId::Intersection => "thm2.3",
            TheoremId::Closure => "thm3.1",
            TheoremId::Interior => "thm3.2",
            TheoremId::SemiOpen => "thm3.3",
            TheoremId::EdUnionClosure => "thm3.4",
            TheoremId::HyperconnectedIntersection => "thm3.5",
        }
    }

    /// Statements over a bare finite set rather than a topology.
    pub fn is_set_level(self) -> bool {
        matches!(
            self,
            TheoremId::Superset | TheoremId::Factor | TheoremId::Intersection
        )
    }

    /// Statements carrying a non-T1 hypothesis.
    pub fn takes_non_t1_reading(self) -> bool {
        matches!(
            self,
            TheoremId::Closure
                | TheoremId::Interior
                | TheoremId::SemiOpen
                | TheoremId::EdUnionClosure
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("UnknownTheorem: {0:?}")]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EstimateError {
    #[error("EmptyEstimate: bounds [{lo}, {hi}] contain no integer")]
    EmptyEstimate { lo: i64, hi: i64 },
    #[error("HypothesisViolated: {0}")]
    HypothesisViolated(String),
    #[error("DivisorContainsZero: {0}")]
    DivisorContainsZero(NatInterval),
    #[error("EmptyAfterClamp: [{lo}, {hi}] has no member in N0")]
    EmptyAfterClamp { lo: i64, hi: i64 },
}

impl EstimateError {
    /// Machine-readable reason tag.
    pub fn kind(&self) -> &'static str {
        match self {
            EstimateError::EmptyEstimate { .. } => "EmptyEstimate",
            EstimateError::HypothesisViolated(_) => "HypothesisViolated",
            EstimateError::DivisorContainsZero(_) => "DivisorContainsZero",
            EstimateError::EmptyAfterClamp { .. } => "EmptyAfterClamp",
        }
    }
}

fn violated(msg: impl Into<String>) -> EstimateError {
    EstimateError::HypothesisViolated(msg.into())
}

fn empty(lo: u64, hi: u64) -> EstimateError {
    EstimateError::EmptyEstimate {
        lo: lo as i64,
        hi: hi as i64,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupersetHypothesis {
    pub n: u64,
    pub a: NatInterval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductHypothesis {
    pub c: NatInterval,
    pub a: NatInterval,
}

/// `X = A ∪ B` with `card(X) ∈ x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnionSplitHypothesis {
    pub x: NatInterval,
    pub a: NatInterval,
    pub b: NatInterval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureHypothesis {
    pub n: u64,
    pub m: u64,
}

/// `k_bounds` maps each point outside `A` to its closure-size cap `k_x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InteriorHypothesis {
    pub n: u64,
    pub p: u64,
    pub k_bounds: BTreeMap<usize, u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiOpenHypothesis {
    pub n: u64,
    pub k: u64,
}

/// Disjoint nonempty opens `A`, `B` in an extremally disconnected space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdUnionHypothesis {
    pub x: NatInterval,
    pub a: NatInterval,
    pub b: NatInterval,
}

/// `card(B)` for `A ⊊ B ⊊ X`: `[a1 + 1, n - 1]`.
pub fn est_superset_card(h: &SupersetHypothesis) -> Result<NatInterval, EstimateError> {
    if h.a.hi() > h.n {
        return Err(violated(format!(
            "card(A) bound {} exceeds n = {}",
            h.a, h.n
        )));
    }
    let lo = h.a.lo() + 1;
    match h.n.checked_sub(1) {
        Some(hi) if lo <= hi => Ok(NatInterval::new(lo, hi).expect("lo <= hi")),
        hi => Err(EstimateError::EmptyEstimate {
            lo: lo as i64,
            hi: hi.map_or(-1, |h| h as i64),
        }),
    }
}

/// `card(B)` for `C = A × B`: `[⌈c1/a2⌉, ⌊c2/a1⌋]`.
pub fn est_factor_card(h: &ProductHypothesis) -> Result<NatInterval, EstimateError> {
    h.c.div_card(h.a).map_err(|e| match e {
        IntervalError::DivisorContainsZero(d) => EstimateError::DivisorContainsZero(d),
        IntervalError::EmptyAfterClamp { lo, hi } => EstimateError::EmptyEstimate { lo, hi },
        other => unreachable!("div_card does not produce {other:?}"),
    })
}

fn check_union_split(x: NatInterval, a: NatInterval, b: NatInterval) -> Result<(), EstimateError> {
    if a.hi() > x.hi() || b.hi() > x.hi() {
        return Err(violated(format!(
            "part bounds {a}, {b} exceed the carrier bound {x}"
        )));
    }
    Ok(())
}

fn inclusion_exclusion(h: &UnionSplitHypothesis) -> Result<NatInterval, EstimateError> {
    check_union_split(h.x, h.a, h.b)?;
    h.a.add(h.b).sub(h.x).clamp_nat().map_err(|e| match e {
        IntervalError::EmptyAfterClamp { lo, hi } => EstimateError::EmptyAfterClamp { lo, hi },
        other => unreachable!("clamp_nat does not produce {other:?}"),
    })
}

/// `card(A ∩ B) ∈ [a1 + b1 - n, a2 + b2 - m] ∩ N0` for `X = A ∪ B`.
pub fn est_intersection_card(h: &UnionSplitHypothesis) -> Result<NatInterval, EstimateError> {
    inclusion_exclusion(h)
}

/// `card(cl(A)) ∈ [2m, n]` for `card(A) = m ∈ [1, ⌊n/2⌋]`.
pub fn est_closure_card(h: &ClosureHypothesis) -> Result<NatInterval, EstimateError> {
    if h.m < 1 || h.m > h.n / 2 {
        return Err(violated(format!(
            "m = {} outside [1, {}] for n = {}",
            h.m,
            h.n / 2,
            h.n
        )));
    }
    Ok(NatInterval::new(2 * h.m, h.n).expect("2m <= n"))
}

/// `card(int(A))` given `card(A) = p` and caps `card(cl({x})) ≤ k_x` on the
/// points outside `A`. With `S = Σ k_x`: `[0, 2p - n]` when `n ≤ S`,
/// otherwise `[n - S, 2p - n]`.
pub fn est_interior_card(h: &InteriorHypothesis) -> Result<NatInterval, EstimateError> {
    let (n, p) = (h.n, h.p);
    if p < n.div_ceil(2) || p > n {
        return Err(violated(format!(
            "p = {p} outside [{}, {n}]",
            n.div_ceil(2)
        )));
    }
    if h.k_bounds.len() as u64 != n - p {
        return Err(violated(format!(
            "{} closure caps given for {} points outside A",
            h.k_bounds.len(),
            n - p
        )));
    }
    if let Some((&x, &k)) = h.k_bounds.iter().find(|(&x, &k)| k < 2 || x as u64 >= n) {
        return Err(violated(format!("invalid closure cap k_{x} = {k}")));
    }
    let sum = h
        .k_bounds
        .values()
        .try_fold(0u64, |acc, &k| acc.checked_add(k))
        .ok_or_else(|| violated("closure caps overflow"))?;
    let hi = 2 * p - n;
    let lo = n.saturating_sub(sum);
    // sum >= 2(n - p), so lo <= hi whenever the invariants hold
    NatInterval::new(lo, hi).map_err(|_| empty(lo, hi))
}

/// `card(A) ∈ [k + 1, 2k - 1]` where `k` is the size of a witness open.
pub fn est_semiopen_card(h: &SemiOpenHypothesis) -> Result<NatInterval, EstimateError> {
    if h.k < 1 || h.k > h.n / 2 {
        return Err(violated(format!(
            "k = {} outside [1, {}] for n = {}",
            h.k,
            h.n / 2,
            h.n
        )));
    }
    let (lo, hi) = (h.k + 1, 2 * h.k - 1);
    NatInterval::new(lo, hi).map_err(|_| empty(lo, hi))
}

/// `card(cl(A ∪ B)) ∈ [2a1 + 2b1, n] ∩ N0`.
pub fn est_ed_union_closure_card(h: &EdUnionHypothesis) -> Result<NatInterval, EstimateError> {
    check_union_split(h.x, h.a, h.b)?;
    let lo = 2 * h.a.lo() + 2 * h.b.lo();
    let hi = h.x.hi();
    NatInterval::new(lo, hi).map_err(|_| empty(lo, hi))
}

/// Same arithmetic as [`est_intersection_card`], for an open cover
/// `X = O1 ∪ O2` of a hyperconnected space.
pub fn est_hyperconnected_intersection_card(
    h: &UnionSplitHypothesis,
) -> Result<NatInterval, EstimateError> {
    inclusion_exclusion(h)
}

/// A hypothesis bundle tagged with the estimator it feeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hypothesis {
    Superset(SupersetHypothesis),
    Factor(ProductHypothesis),
    Intersection(UnionSplitHypothesis),
    Closure(ClosureHypothesis),
    Interior(InteriorHypothesis),
    SemiOpen(SemiOpenHypothesis),
    EdUnionClosure(EdUnionHypothesis),
    HyperconnectedIntersection(UnionSplitHypothesis),
}

impl Hypothesis {
    pub fn theorem(&self) -> TheoremId {
        match self {
            Hypothesis::Superset(_) => TheoremId::Superset,
            Hypothesis::Factor(_) => TheoremId::Factor,
            Hypothesis::Intersection(_) => TheoremId::Intersection,
            Hypothesis::Closure(_) => TheoremId::Closure,
            Hypothesis::Interior(_) => TheoremId::Interior,
            Hypothesis::SemiOpen(_) => TheoremId::SemiOpen,
            Hypothesis::EdUnionClosure(_) => TheoremId::EdUnionClosure,
            Hypothesis::HyperconnectedIntersection(_) => TheoremId::HyperconnectedIntersection,
        }
    }

    pub fn estimate(&self) -> Result<NatInterval, EstimateError> {
        match self {
            Hypothesis::Superset(h) => est_superset_card(h),
            Hypothesis::Factor(h) => est_factor_card(h),
            Hypothesis::Intersection(h) => est_intersection_card(h),
            Hypothesis::Closure(h) => est_closure_card(h),
            Hypothesis::Interior(h) => est_interior_card(h),
            Hypothesis::SemiOpen(h) => est_semiopen_card(h),
            Hypothesis::EdUnionClosure(h) => est_ed_union_closure_card(h),
            Hypothesis::HyperconnectedIntersection(h) => est_hyperconnected_intersection_card(h),
        }
    }
}
