//! Exhaustive check of each estimator against exact cardinalities.
//!
//! For a theorem and a carrier size the verifier walks every qualifying
//! configuration (a pair of subsets of a bare set, or a space together with
//! the sets its hypothesis names), computes the true cardinality with
//! [`FiniteSpace`] set operations only, and records whether it lies in the
//! estimator's interval.
//!
//! Work is split into *units*: relation codes of the enumerated preorders for
//! topological theorems, and masks of the first set for set-level theorems.
//! Every case carries a `(unit, seq)` key, which gives a total enumeration
//! order that survives sharding.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::enumerate::{
    enumerate_spaces_keyed, enumerate_subset_pairs, EnumError, EnumerationFilter, PairMode, Shard,
    MAX_ENUM_POINTS,
};
use crate::estimators::*;
use crate::interval::NatInterval;
use crate::topology::{FiniteSpace, PointSet};

/// Largest bare-set carrier for the set-level theorems.
pub const MAX_SET_POINTS: usize = 8;

pub const DEFAULT_COUNTEREXAMPLE_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    UnknownTheorem(#[from] UnknownTheorem),
    #[error("CarrierTooLarge: n = {n} exceeds {max} for {theorem}")]
    CarrierTooLarge {
        theorem: TheoremId,
        n: usize,
        max: usize,
    },
    #[error("carrier must have at least one point")]
    EmptyCarrier,
    #[error("{0} has a non-T1 hypothesis; choose the literal or pointwise reading")]
    ReadingRequired(TheoremId),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error("cannot merge reports for different runs: {0}")]
    MergeMismatch(String),
}

/// How a theorem's "non-T1" hypothesis is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Reading {
    /// The space is not T1.
    #[serde(rename = "literal-non-t1")]
    LiteralNonT1,
    /// No singleton is closed.
    #[serde(rename = "pointwise-non-t1")]
    PointwiseNonT1,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl Reading {
    pub const NON_T1: [Reading; 2] = [Reading::LiteralNonT1, Reading::PointwiseNonT1];

    pub fn as_str(self) -> &'static str {
        match self {
            Reading::LiteralNonT1 => "literal-non-t1",
            Reading::PointwiseNonT1 => "pointwise-non-t1",
            Reading::NotApplicable => "n/a",
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Reading::LiteralNonT1 => "literal",
            Reading::PointwiseNonT1 => "pointwise",
            Reading::NotApplicable => "n/a",
        }
    }

    fn filter(self) -> EnumerationFilter {
        EnumerationFilter {
            require_non_t1: self == Reading::LiteralNonT1,
            require_pointwise_non_t1: self == Reading::PointwiseNonT1,
            ..EnumerationFilter::ALL
        }
    }
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Estimator output for one case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Prediction {
    Interval(NatInterval),
    Error { error: String, detail: String },
}

impl Prediction {
    fn from_result(r: Result<NatInterval, EstimateError>) -> Self {
        match r {
            Ok(iv) => Prediction::Interval(iv),
            Err(e) => Prediction::Error {
                error: e.kind().to_string(),
                detail: e.to_string(),
            },
        }
    }

    pub fn contains(&self, x: u64) -> bool {
        matches!(self, Prediction::Interval(iv) if iv.contains(x))
    }

    pub fn interval(&self) -> Option<NatInterval> {
        match self {
            Prediction::Interval(iv) => Some(*iv),
            Prediction::Error { .. } => None,
        }
    }
}

/// Position of a case in the global enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CaseKey {
    pub unit: u64,
    pub seq: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CaseJson", into = "CaseJson")]
pub struct TheoremCase {
    pub theorem_id: TheoremId,
    pub n: usize,
    /// `None` for set-level theorems.
    pub space: Option<FiniteSpace>,
    pub sets: Vec<PointSet>,
    pub hypothesis: Value,
    pub exact_value: u64,
    pub predicted: Prediction,
    pub contained: bool,
    pub key: CaseKey,
}

#[derive(Serialize, Deserialize)]
struct CaseJson {
    theorem_id: TheoremId,
    n: usize,
    space: Option<FiniteSpace>,
    sets: Vec<u32>,
    hypothesis: Value,
    exact_value: u64,
    predicted: Prediction,
    contained: bool,
    key: CaseKey,
}

impl From<TheoremCase> for CaseJson {
    fn from(c: TheoremCase) -> Self {
        CaseJson {
            theorem_id: c.theorem_id,
            n: c.n,
            space: c.space,
            sets: c.sets.iter().map(|s| s.bits() as u32).collect(),
            hypothesis: c.hypothesis,
            exact_value: c.exact_value,
            predicted: c.predicted,
            contained: c.contained,
            key: c.key,
        }
    }
}

impl TryFrom<CaseJson> for TheoremCase {
    type Error = String;

    fn try_from(c: CaseJson) -> Result<Self, Self::Error> {
        let sets = c
            .sets
            .iter()
            .map(|&b| PointSet::new(c.n, b).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        if c.contained != c.predicted.contains(c.exact_value) {
            return Err("contained flag disagrees with predicted interval".into());
        }
        Ok(TheoremCase {
            theorem_id: c.theorem_id,
            n: c.n,
            space: c.space,
            sets,
            hypothesis: c.hypothesis,
            exact_value: c.exact_value,
            predicted: c.predicted,
            contained: c.contained,
            key: c.key,
        })
    }
}

/// Per-reading tallies for the semi-open theorem.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessTally {
    /// (A, O) pairs with O a witness for A.
    pub cases_total: u64,
    pub cases_contained: u64,
    /// Sets A with at least one witness.
    pub sets_total: u64,
    /// Some witness size k puts card(A) in the estimate.
    pub sets_any_contained: u64,
    /// Every witness size k does.
    pub sets_all_contained: u64,
}

impl WitnessTally {
    fn absorb(&mut self, other: &WitnessTally) {
        self.cases_total += other.cases_total;
        self.cases_contained += other.cases_contained;
        self.sets_total += other.sets_total;
        self.sets_any_contained += other.sets_any_contained;
        self.sets_all_contained += other.sets_all_contained;
    }

    fn record_set(&mut self, outcomes: &[bool]) {
        if outcomes.is_empty() {
            return;
        }
        self.cases_total += outcomes.len() as u64;
        self.cases_contained += outcomes.iter().filter(|&&b| b).count() as u64;
        self.sets_total += 1;
        self.sets_any_contained += outcomes.iter().any(|&b| b) as u64;
        self.sets_all_contained += outcomes.iter().all(|&b| b) as u64;
    }
}

/// Witness inclusions `O ⊆ A ⊆ cl(O)` versus `O ⊊ A ⊊ cl(O)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiOpenSummary {
    pub non_strict: WitnessTally,
    pub strict: WitnessTally,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: TheoremId,
    pub n: usize,
    pub hypothesis_reading: Reading,
    /// Spaces that passed the theorem's space filter; zero for set-level theorems.
    pub spaces_examined: u64,
    pub cases_total: u64,
    pub cases_contained: u64,
    pub containment_rate: Option<f64>,
    pub counterexample_cap: usize,
    pub counterexamples: Vec<TheoremCase>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semi_open: Option<SemiOpenSummary>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    fn empty(theorem_id: TheoremId, n: usize, reading: Reading, cap: usize) -> Self {
        Self {
            theorem_id,
            n,
            hypothesis_reading: reading,
            spaces_examined: 0,
            cases_total: 0,
            cases_contained: 0,
            containment_rate: None,
            counterexample_cap: cap,
            counterexamples: Vec::new(),
            semi_open: (theorem_id == TheoremId::SemiOpen).then(SemiOpenSummary::default),
            elapsed_ms: 0.0,
        }
    }

    fn refresh_rate(&mut self) {
        self.containment_rate =
            (self.cases_total > 0).then(|| self.cases_contained as f64 / self.cases_total as f64);
    }

    pub fn fully_contained(&self) -> bool {
        self.cases_contained == self.cases_total
    }

    /// Combine partial reports of the same run. Counts add; the merged
    /// counterexample list is the first `cap` by enumeration key, so the
    /// result does not depend on how the work was split or merged.
    pub fn merge(mut self, other: VerificationReport) -> Result<Self, VerifyError> {
        if (
            self.theorem_id,
            self.n,
            self.hypothesis_reading,
            self.counterexample_cap,
        ) != (
            other.theorem_id,
            other.n,
            other.hypothesis_reading,
            other.counterexample_cap,
        ) {
            return Err(VerifyError::MergeMismatch(format!(
                "{} n={} {} cap={} vs {} n={} {} cap={}",
                self.theorem_id,
                self.n,
                self.hypothesis_reading,
                self.counterexample_cap,
                other.theorem_id,
                other.n,
                other.hypothesis_reading,
                other.counterexample_cap
            )));
        }
        self.spaces_examined += other.spaces_examined;
        self.cases_total += other.cases_total;
        self.cases_contained += other.cases_contained;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort_by_key(|c| c.key);
        self.counterexamples.dedup_by_key(|c| c.key);
        self.counterexamples.truncate(self.counterexample_cap);
        self.semi_open = match (self.semi_open, other.semi_open) {
            (Some(mut a), Some(b)) => {
                a.non_strict.absorb(&b.non_strict);
                a.strict.absorb(&b.strict);
                Some(a)
            }
            (a, b) => a.or(b),
        };
        self.elapsed_ms = self.elapsed_ms.max(other.elapsed_ms);
        self.refresh_rate();
        Ok(self)
    }

    /// `thm3.1 n=4 reading=pointwise 1404/1492 contained (94.1%)`
    pub fn summary_line(&self) -> String {
        let rate = match self.containment_rate {
            Some(r) => format!("{:.1}%", r * 100.0),
            None => "no cases".to_string(),
        };
        format!(
            "{} n={} reading={} {}/{} contained ({})",
            self.theorem_id,
            self.n,
            self.hypothesis_reading.short_name(),
            self.cases_contained,
            self.cases_total,
            rate
        )
    }

    /// JSON with the timing field zeroed, for reproducibility comparisons.
    pub fn canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_ms = 0.0;
        serde_json::to_string(&copy).expect("report serializes")
    }
}

pub const CSV_COLUMNS: [&str; 7] = [
    "theorem_id",
    "n",
    "reading",
    "cases_total",
    "cases_contained",
    "containment_rate",
    "n_counterexamples",
];

/// One CSV row per report under [`CSV_COLUMNS`]. An empty rate field means
/// the report has no cases.
pub fn write_csv_summary<W: std::io::Write>(
    reports: &[VerificationReport],
    out: W,
) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in reports {
        w.write_record([
            r.theorem_id.as_str().to_string(),
            r.n.to_string(),
            r.hypothesis_reading.as_str().to_string(),
            r.cases_total.to_string(),
            r.cases_contained.to_string(),
            r.containment_rate
                .map(|x| format!("{x:?}"))
                .unwrap_or_default(),
            r.counterexamples.len().to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn csv_summary(reports: &[VerificationReport]) -> String {
    let mut buf = Vec::new();
    write_csv_summary(reports, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is UTF-8")
}

/// Accumulates cases for one shard in enumeration order.
struct Collector {
    report: VerificationReport,
}

impl Collector {
    fn record(
        &mut self,
        key: CaseKey,
        space: Option<&FiniteSpace>,
        sets: &[PointSet],
        hypothesis: &Hypothesis,
        exact_value: u64,
    ) -> bool {
        let predicted = Prediction::from_result(hypothesis.estimate());
        let contained = predicted.contains(exact_value);
        let r = &mut self.report;
        r.cases_total += 1;
        if contained {
            r.cases_contained += 1;
        } else if r.counterexamples.len() < r.counterexample_cap {
            r.counterexamples.push(TheoremCase {
                theorem_id: r.theorem_id,
                n: r.n,
                space: space.cloned(),
                sets: sets.to_vec(),
                hypothesis: hypothesis_json(hypothesis),
                exact_value,
                predicted,
                contained,
                key,
            });
        }
        contained
    }
}

fn hypothesis_json(h: &Hypothesis) -> Value {
    let v = match h {
        Hypothesis::Superset(h) => serde_json::to_value(h),
        Hypothesis::Factor(h) => serde_json::to_value(h),
        Hypothesis::Intersection(h) | Hypothesis::HyperconnectedIntersection(h) => {
            serde_json::to_value(h)
        }
        Hypothesis::Closure(h) => serde_json::to_value(h),
        Hypothesis::Interior(h) => serde_json::to_value(h),
        Hypothesis::SemiOpen(h) => serde_json::to_value(h),
        Hypothesis::EdUnionClosure(h) => serde_json::to_value(h),
    };
    v.expect("hypothesis serializes")
}

fn exact(k: usize) -> NatInterval {
    NatInterval::from_scalar(k as u64)
}

/// Resolve the reading a theorem is actually verified under.
pub fn effective_reading(theorem: TheoremId, reading: Reading) -> Result<Reading, VerifyError> {
    match (theorem.takes_non_t1_reading(), reading) {
        (false, _) => Ok(Reading::NotApplicable),
        (true, Reading::NotApplicable) => Err(VerifyError::ReadingRequired(theorem)),
        (true, r) => Ok(r),
    }
}

pub fn max_carrier(theorem: TheoremId) -> usize {
    if theorem.is_set_level() {
        MAX_SET_POINTS
    } else {
        MAX_ENUM_POINTS
    }
}

pub fn verify_theorem(
    theorem: TheoremId,
    n: usize,
    reading: Reading,
    counterexample_cap: usize,
) -> Result<VerificationReport, VerifyError> {
    verify_theorem_shard(theorem, n, reading, counterexample_cap, Shard::WHOLE)
}

/// Verify one shard of the configuration universe.
pub fn verify_theorem_shard(
    theorem: TheoremId,
    n: usize,
    reading: Reading,
    counterexample_cap: usize,
    shard: Shard,
) -> Result<VerificationReport, VerifyError> {
    if n == 0 {
        return Err(VerifyError::EmptyCarrier);
    }
    let max = max_carrier(theorem);
    if n > max {
        return Err(VerifyError::CarrierTooLarge { theorem, n, max });
    }
    let reading = effective_reading(theorem, reading)?;
    let shard = Shard::new(shard.index, shard.count)?;
    let started = Instant::now();
    let mut c = Collector {
        report: VerificationReport::empty(theorem, n, reading, counterexample_cap),
    };
    match theorem {
        TheoremId::Superset => sweep_superset(&mut c, n, shard),
        TheoremId::Factor => sweep_factor(&mut c, n, shard),
        TheoremId::Intersection => sweep_intersection(&mut c, n, shard),
        _ => sweep_spaces(&mut c, theorem, n, reading, shard)?,
    }
    c.report.refresh_rate();
    c.report.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    Ok(c.report)
}

/// Run `shards` shards on the current rayon pool and merge them.
pub fn verify_theorem_parallel(
    theorem: TheoremId,
    n: usize,
    reading: Reading,
    counterexample_cap: usize,
    shards: usize,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let parts = (0..shards.max(1))
        .into_par_iter()
        .map(|i| {
            let shard = Shard::new(i, shards.max(1))?;
            verify_theorem_shard(theorem, n, reading, counterexample_cap, shard)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut merged = merge_reports(parts)?.expect("at least one shard");
    merged.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    Ok(merged)
}

pub fn merge_reports(
    reports: impl IntoIterator<Item = VerificationReport>,
) -> Result<Option<VerificationReport>, VerifyError> {
    let mut it = reports.into_iter();
    let Some(first) = it.next() else {
        return Ok(None);
    };
    it.try_fold(first, VerificationReport::merge).map(Some)
}

/// The (theorem, n, reading) runs `verify_all` performs, in report order.
pub fn planned_runs(n_max: usize, readings: &[Reading]) -> Vec<(TheoremId, usize, Reading)> {
    let mut runs = Vec::new();
    for theorem in TheoremId::ALL {
        for n in 1..=n_max {
            if theorem.takes_non_t1_reading() {
                for &r in readings.iter().filter(|r| **r != Reading::NotApplicable) {
                    runs.push((theorem, n, r));
                }
            } else {
                runs.push((theorem, n, Reading::NotApplicable));
            }
        }
    }
    runs
}

/// Every theorem for every `n <= n_max` under each requested reading.
pub fn verify_all(
    n_max: usize,
    readings: &[Reading],
    counterexample_cap: usize,
) -> Result<Vec<VerificationReport>, VerifyError> {
    if n_max > MAX_ENUM_POINTS {
        return Err(VerifyError::Enumeration(EnumError::CarrierTooLarge(n_max)));
    }
    planned_runs(n_max, readings)
        .into_par_iter()
        .map(|(t, n, r)| verify_theorem(t, n, r, counterexample_cap))
        .collect()
}

fn mask_units(n: usize, shard: Shard) -> impl Iterator<Item = (u64, PointSet)> {
    shard
        .range(1u64 << n)
        .map(move |m| (m, PointSet::from_raw(n, m as u16)))
}

/// Nonempty subsets of `s`, ascending.
fn nonempty_subsets(s: PointSet) -> impl Iterator<Item = PointSet> {
    let (n, bits) = (s.carrier_size(), s.bits());
    (1..=bits as u32)
        .filter(move |&m| m as u16 & !bits == 0)
        .map(move |m| PointSet::from_raw(n, m as u16))
}

// A ⊊ B ⊊ X
fn sweep_superset(c: &mut Collector, n: usize, shard: Shard) {
    let full = PointSet::full(n);
    for (unit, a) in mask_units(n, shard) {
        let mut seq = 0;
        for extra in nonempty_subsets(a.complement()) {
            let b = a.union(extra);
            if b == full {
                continue;
            }
            let h = Hypothesis::Superset(SupersetHypothesis {
                n: n as u64,
                a: exact(a.len()),
            });
            c.record(CaseKey { unit, seq }, None, &[a, b], &h, b.len() as u64);
            seq += 1;
        }
    }
}

// C = A × B built as an explicit set of pairs
fn sweep_factor(c: &mut Collector, n: usize, shard: Shard) {
    for (unit, a) in mask_units(n, shard) {
        if a.is_empty() {
            continue;
        }
        for (seq, b) in PointSet::all_subsets(n).enumerate() {
            let product: Vec<(usize, usize)> = a
                .points()
                .flat_map(|x| b.points().map(move |y| (x, y)))
                .collect();
            let h = Hypothesis::Factor(ProductHypothesis {
                c: exact(product.len()),
                a: exact(a.len()),
            });
            let key = CaseKey {
                unit,
                seq: seq as u32,
            };
            c.record(key, None, &[a, b], &h, b.len() as u64);
        }
    }
}

// X = A ∪ B
fn sweep_intersection(c: &mut Collector, n: usize, shard: Shard) {
    for (unit, a) in mask_units(n, shard) {
        let rest = a.complement();
        let overlaps = std::iter::once(PointSet::empty(n)).chain(nonempty_subsets(a));
        for (seq, overlap) in overlaps.enumerate() {
            let b = rest.union(overlap);
            let h = Hypothesis::Intersection(UnionSplitHypothesis {
                x: exact(n),
                a: exact(a.len()),
                b: exact(b.len()),
            });
            let key = CaseKey {
                unit,
                seq: seq as u32,
            };
            c.record(key, None, &[a, b], &h, a.intersection(b).len() as u64);
        }
    }
}

fn space_filter(theorem: TheoremId, reading: Reading) -> EnumerationFilter {
    let mut f = match reading {
        Reading::NotApplicable => EnumerationFilter::ALL,
        r => r.filter(),
    };
    match theorem {
        TheoremId::EdUnionClosure => f.require_ed = true,
        TheoremId::HyperconnectedIntersection => f.require_hyperconnected = true,
        _ => {}
    }
    f
}

fn sweep_spaces(
    c: &mut Collector,
    theorem: TheoremId,
    n: usize,
    reading: Reading,
    shard: Shard,
) -> Result<(), VerifyError> {
    for (unit, space) in enumerate_spaces_keyed(n, space_filter(theorem, reading), shard)? {
        c.report.spaces_examined += 1;
        match theorem {
            TheoremId::Closure => check_closure(c, unit, &space),
            TheoremId::Interior => check_interior(c, unit, &space),
            TheoremId::SemiOpen => check_semi_open(c, unit, &space),
            TheoremId::EdUnionClosure => check_ed_union(c, unit, &space),
            TheoremId::HyperconnectedIntersection => check_hyper_cover(c, unit, &space),
            TheoremId::Superset | TheoremId::Factor | TheoremId::Intersection => {
                unreachable!("set-level theorems do not enumerate spaces")
            }
        }
    }
    Ok(())
}

// every nonempty A with card(A) <= n/2
fn check_closure(c: &mut Collector, unit: u64, space: &FiniteSpace) {
    let n = space.n();
    let subsets = PointSet::all_subsets(n).filter(|a| !a.is_empty() && a.len() <= n / 2);
    for (seq, a) in (0..).zip(subsets) {
        let h = Hypothesis::Closure(ClosureHypothesis {
            n: n as u64,
            m: a.len() as u64,
        });
        let exact_value = space.closure(a).len() as u64;
        c.record(CaseKey { unit, seq }, Some(space), &[a], &h, exact_value);
    }
}

// every A with card(A) >= ceil(n/2), caps k_x set to the exact closure sizes;
// configurations with an outside point whose closure is a singleton do not
// meet the hypothesis and are skipped
fn check_interior(c: &mut Collector, unit: u64, space: &FiniteSpace) {
    let n = space.n();
    let sizes = space.point_closure_sizes();
    let mut seq = 0;
    for a in PointSet::all_subsets(n).filter(|a| a.len() >= n.div_ceil(2)) {
        let outside: Vec<usize> = a.complement().points().collect();
        if outside.iter().any(|&x| sizes[x] < 2) {
            continue;
        }
        let h = Hypothesis::Interior(InteriorHypothesis {
            n: n as u64,
            p: a.len() as u64,
            k_bounds: outside.iter().map(|&x| (x, sizes[x] as u64)).collect(),
        });
        let exact_value = space.interior(a).len() as u64;
        c.record(CaseKey { unit, seq }, Some(space), &[a], &h, exact_value);
        seq += 1;
    }
}

// one case per (A, O) with O a nonempty open and O ⊆ A ⊆ cl(O); the strict
// reading O ⊊ A ⊊ cl(O) is tallied on the side
fn check_semi_open(c: &mut Collector, unit: u64, space: &FiniteSpace) {
    let n = space.n();
    let opens: Vec<(PointSet, PointSet)> = space
        .nonempty_opens()
        .map(|o| (o, space.closure(o)))
        .collect();
    let mut seq = 0;
    let mut tally = SemiOpenSummary::default();
    for a in PointSet::all_subsets(n).filter(|a| !a.is_empty()) {
        let mut non_strict = Vec::new();
        let mut strict = Vec::new();
        for &(o, cl) in opens
            .iter()
            .filter(|(o, cl)| o.is_subset_of(a) && a.is_subset_of(*cl))
        {
            let h = Hypothesis::SemiOpen(SemiOpenHypothesis {
                n: n as u64,
                k: o.len() as u64,
            });
            let ok = c.record(
                CaseKey { unit, seq },
                Some(space),
                &[a, o],
                &h,
                a.len() as u64,
            );
            seq += 1;
            non_strict.push(ok);
            if o != a && a != cl {
                strict.push(ok);
            }
        }
        tally.non_strict.record_set(&non_strict);
        tally.strict.record_set(&strict);
    }
    let summary = c
        .report
        .semi_open
        .get_or_insert_with(SemiOpenSummary::default);
    summary.non_strict.absorb(&tally.non_strict);
    summary.strict.absorb(&tally.strict);
}

// disjoint nonempty opens A, B
fn check_ed_union(c: &mut Collector, unit: u64, space: &FiniteSpace) {
    let n = space.n();
    for (seq, (a, b)) in enumerate_subset_pairs(space, PairMode::OpenPairsDisjoint).enumerate() {
        let h = Hypothesis::EdUnionClosure(EdUnionHypothesis {
            x: exact(n),
            a: exact(a.len()),
            b: exact(b.len()),
        });
        let exact_value = space.closure(a.union(b)).len() as u64;
        let key = CaseKey {
            unit,
            seq: seq as u32,
        };
        c.record(key, Some(space), &[a, b], &h, exact_value);
    }
}

// nonempty opens with O1 ∪ O2 = X
fn check_hyper_cover(c: &mut Collector, unit: u64, space: &FiniteSpace) {
    let n = space.n();
    for (seq, (a, b)) in enumerate_subset_pairs(space, PairMode::OpenCovers).enumerate() {
        let h = Hypothesis::HyperconnectedIntersection(UnionSplitHypothesis {
            x: exact(n),
            a: exact(a.len()),
            b: exact(b.len()),
        });
        let exact_value = a.intersection(b).len() as u64;
        let key = CaseKey {
            unit,
            seq: seq as u32,
        };
        c.record(key, Some(space), &[a, b], &h, exact_value);
    }
}
