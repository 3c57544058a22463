//! Finite topological spaces on at most 16 points.
//!
//! A subset of the carrier is a [`PointSet`], a 16-bit mask where bit `i`
//! stands for point `i`. A [`FiniteSpace`] stores its open sets as masks,
//! sorted ascending and free of duplicates.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const MAX_POINTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("carrier size {0} outside 1..=16")]
    CarrierSize(usize),
    #[error("mask {mask:#x} has a bit outside the {n}-point carrier")]
    OutOfCarrier { mask: u32, n: usize },
    #[error("NotATopology: {0}")]
    NotATopology(Violation),
}

/// First axiom failure found while validating an open-set family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    MissingEmpty,
    MissingCarrier,
    UnionNotOpen(PointSet, PointSet),
    IntersectionNotOpen(PointSet, PointSet),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingEmpty => write!(f, "empty set is not open"),
            Violation::MissingCarrier => write!(f, "carrier X is not open"),
            Violation::UnionNotOpen(a, b) => {
                write!(f, "union of opens {a} and {b} is not open")
            }
            Violation::IntersectionNotOpen(a, b) => {
                write!(f, "intersection of opens {a} and {b} is not open")
            }
        }
    }
}

#[inline]
const fn full_mask(n: usize) -> u16 {
    if n >= 16 {
        u16::MAX
    } else {
        (1u16 << n) - 1
    }
}

/// Subset of an `n`-point carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    bits: u16,
    n: u8,
}

impl PointSet {
    pub fn new(n: usize, bits: u32) -> Result<Self, TopologyError> {
        if n == 0 || n > MAX_POINTS {
            return Err(TopologyError::CarrierSize(n));
        }
        if bits & !(full_mask(n) as u32) != 0 {
            return Err(TopologyError::OutOfCarrier { mask: bits, n });
        }
        Ok(Self {
            bits: bits as u16,
            n: n as u8,
        })
    }

    #[inline]
    pub(crate) const fn from_raw(n: usize, bits: u16) -> Self {
        Self { bits, n: n as u8 }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_raw(n, 0)
    }

    pub fn full(n: usize) -> Self {
        Self::from_raw(n, full_mask(n))
    }

    pub fn singleton(n: usize, point: usize) -> Self {
        assert!(point < n, "point {point} outside {n}-point carrier");
        Self::from_raw(n, 1 << point)
    }

    pub fn from_points(n: usize, points: &[usize]) -> Self {
        points
            .iter()
            .fold(Self::empty(n), |acc, &p| acc.union(Self::singleton(n, p)))
    }

    #[inline]
    pub const fn bits(self) -> u16 {
        self.bits
    }

    #[inline]
    pub const fn carrier_size(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub const fn contains(self, point: usize) -> bool {
        point < 16 && self.bits & (1 << point) != 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        Self::from_raw(self.n as usize, self.bits | other.bits)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        Self::from_raw(self.n as usize, self.bits & other.bits)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        Self::from_raw(self.n as usize, self.bits & !other.bits)
    }

    #[inline]
    pub const fn complement(self) -> Self {
        Self::from_raw(self.n as usize, !self.bits & full_mask(self.n as usize))
    }

    #[inline]
    pub const fn is_subset_of(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.bits & other.bits == 0
    }

    pub fn points(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..self.n as usize).filter(move |&i| bits & (1 << i) != 0)
    }

    /// All `2^n` subsets of the carrier in ascending mask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = PointSet> {
        (0..=full_mask(n) as u32).map(move |b| Self::from_raw(n, b as u16))
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// A validated topology on the points `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpaceJson", into = "SpaceJson")]
pub struct FiniteSpace {
    n: usize,
    opens: Vec<u16>,
}

/// Wire form: `{"n": 3, "opens": [0, 1, 3, 7]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub n: usize,
    pub opens: Vec<u32>,
}

impl TryFrom<SpaceJson> for FiniteSpace {
    type Error = TopologyError;

    fn try_from(raw: SpaceJson) -> Result<Self, Self::Error> {
        FiniteSpace::validate(raw.n, &raw.opens)
    }
}

impl From<FiniteSpace> for SpaceJson {
    fn from(space: FiniteSpace) -> Self {
        SpaceJson {
            n: space.n,
            opens: space.opens.iter().map(|&o| o as u32).collect(),
        }
    }
}

impl FiniteSpace {
    /// Check the open-set axioms and build the space.
    ///
    /// Duplicate masks are merged. Pairwise closure under union and
    /// intersection suffices for a finite family.
    pub fn validate(n: usize, opens: &[u32]) -> Result<Self, TopologyError> {
        if n == 0 || n > MAX_POINTS {
            return Err(TopologyError::CarrierSize(n));
        }
        let full = full_mask(n);
        let mut masks = Vec::with_capacity(opens.len());
        for &mask in opens {
            if mask & !(full as u32) != 0 {
                return Err(TopologyError::OutOfCarrier { mask, n });
            }
            masks.push(mask as u16);
        }
        masks.sort_unstable();
        masks.dedup();

        let is_open = |m: u16| masks.binary_search(&m).is_ok();
        if !is_open(0) {
            return Err(TopologyError::NotATopology(Violation::MissingEmpty));
        }
        if !is_open(full) {
            return Err(TopologyError::NotATopology(Violation::MissingCarrier));
        }
        for (i, &a) in masks.iter().enumerate() {
            for &b in &masks[i + 1..] {
                let (pa, pb) = (PointSet::from_raw(n, a), PointSet::from_raw(n, b));
                if !is_open(a | b) {
                    return Err(TopologyError::NotATopology(Violation::UnionNotOpen(pa, pb)));
                }
                if !is_open(a & b) {
                    return Err(TopologyError::NotATopology(Violation::IntersectionNotOpen(
                        pa, pb,
                    )));
                }
            }
        }
        Ok(Self { n, opens: masks })
    }

    /// Caller guarantees `opens` is a sorted, deduplicated topology.
    pub(crate) fn from_sorted_unchecked(n: usize, opens: Vec<u16>) -> Self {
        debug_assert!(opens.windows(2).all(|w| w[0] < w[1]));
        Self { n, opens }
    }

    pub fn discrete(n: usize) -> Self {
        let opens: Vec<u32> = (0..=full_mask(n) as u32).collect();
        Self::validate(n, &opens).expect("discrete topology is valid")
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::validate(n, &[0, full_mask(n) as u32]).expect("indiscrete topology is valid")
    }

    /// Two points, opens `{}, {0}, {0,1}`.
    pub fn sierpinski() -> Self {
        Self::validate(2, &[0, 1, 3]).expect("Sierpinski space is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn carrier(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn open_masks(&self) -> &[u16] {
        &self.opens
    }

    pub fn opens(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.opens
            .iter()
            .map(move |&m| PointSet::from_raw(self.n, m))
    }

    pub fn nonempty_opens(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.opens().filter(|o| !o.is_empty())
    }

    pub fn is_open(&self, a: PointSet) -> bool {
        self.opens.binary_search(&a.bits()).is_ok()
    }

    pub fn is_closed(&self, a: PointSet) -> bool {
        self.is_open(a.complement())
    }

    /// Smallest closed superset: `X` minus every open set missing `a`.
    pub fn closure(&self, a: PointSet) -> PointSet {
        let outside = self
            .opens
            .iter()
            .filter(|&&o| o & a.bits() == 0)
            .fold(0u16, |acc, &o| acc | o);
        PointSet::from_raw(self.n, full_mask(self.n) & !outside)
    }

    /// Largest open subset: union of every open set inside `a`.
    pub fn interior(&self, a: PointSet) -> PointSet {
        let bits = self
            .opens
            .iter()
            .filter(|&&o| o & !a.bits() == 0)
            .fold(0u16, |acc, &o| acc | o);
        PointSet::from_raw(self.n, bits)
    }

    pub fn point_closure(&self, x: usize) -> PointSet {
        self.closure(PointSet::singleton(self.n, x))
    }

    /// Cardinality of `cl({x})` for each point in order.
    pub fn point_closure_sizes(&self) -> Vec<usize> {
        (0..self.n).map(|x| self.point_closure(x).len()).collect()
    }

    /// Distinct points have distinct closures.
    pub fn is_t0(&self) -> bool {
        let closures: Vec<u16> = (0..self.n).map(|x| self.point_closure(x).bits()).collect();
        closures
            .iter()
            .enumerate()
            .all(|(i, c)| closures[i + 1..].iter().all(|d| d != c))
    }

    /// Every singleton is closed.
    pub fn is_t1(&self) -> bool {
        (0..self.n).all(|x| self.point_closure(x).len() == 1)
    }

    /// No point has a singleton closure: `card(cl({x})) >= 2` for all `x`.
    pub fn is_pointwise_non_t1(&self) -> bool {
        (0..self.n).all(|x| self.point_closure(x).len() >= 2)
    }

    /// The closure of every open set is open.
    pub fn is_extremally_disconnected(&self) -> bool {
        self.opens().all(|o| self.is_open(self.closure(o)))
    }

    /// Every nonempty open set is dense.
    pub fn is_hyperconnected(&self) -> bool {
        let full = self.carrier();
        self.nonempty_opens().all(|o| self.closure(o) == full)
    }

    /// Returns `(true, Some(int(a)))` when `a` is nonempty and semi-open,
    /// i.e. `int(a) ⊆ a ⊆ cl(int(a))`.
    pub fn is_semi_open(&self, a: PointSet) -> (bool, Option<PointSet>) {
        let interior = self.interior(a);
        let semi_open = a.is_subset_of(self.closure(interior));
        let witness = (semi_open && !a.is_empty()).then_some(interior);
        (semi_open, witness)
    }

    /// `int(cl(b)) ⊆ b`.
    pub fn is_semi_closed(&self, b: PointSet) -> bool {
        self.interior(self.closure(b)).is_subset_of(b)
    }

    pub fn classify(&self) -> SpaceClassification {
        SpaceClassification {
            t0: self.is_t0(),
            t1: self.is_t1(),
            pointwise_non_t1: self.is_pointwise_non_t1(),
            extremally_disconnected: self.is_extremally_disconnected(),
            hyperconnected: self.is_hyperconnected(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("space serializes")
    }
}

impl fmt::Display for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceClassification {
    pub t0: bool,
    pub t1: bool,
    pub pointwise_non_t1: bool,
    pub extremally_disconnected: bool,
    pub hyperconnected: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, pts: &[usize]) -> PointSet {
        PointSet::from_points(n, pts)
    }

    fn two_blocks() -> FiniteSpace {
        FiniteSpace::validate(4, &[0, 0b0011, 0b1100, 0b1111]).unwrap()
    }

    #[test]
    fn point_set_basics() {
        let a = set(5, &[0, 3]);
        assert_eq!(a.bits(), 0b01001);
        assert_eq!(a.len(), 2);
        assert_eq!(a.complement(), set(5, &[1, 2, 4]));
        assert_eq!(a.to_string(), "{0,3}");
        assert!(PointSet::new(3, 0b1000).is_err());
        assert!(PointSet::new(0, 0).is_err());
        assert_eq!(PointSet::all_subsets(3).count(), 8);
        assert_eq!(PointSet::full(16).len(), 16);
    }

    #[test]
    fn validate_examples() {
        assert!(FiniteSpace::validate(2, &[0, 1, 3]).is_ok());
        assert!(FiniteSpace::validate(1, &[0, 1]).is_ok());
        assert_eq!(
            FiniteSpace::validate(2, &[0, 1, 2]),
            Err(TopologyError::NotATopology(Violation::MissingCarrier))
        );
        assert_eq!(
            FiniteSpace::validate(2, &[1, 3]),
            Err(TopologyError::NotATopology(Violation::MissingEmpty))
        );
        assert_eq!(
            FiniteSpace::validate(3, &[0, 1, 2, 7]),
            Err(TopologyError::NotATopology(Violation::UnionNotOpen(
                set(3, &[0]),
                set(3, &[1])
            )))
        );
        assert_eq!(
            FiniteSpace::validate(3, &[0, 3, 6, 7]),
            Err(TopologyError::NotATopology(Violation::IntersectionNotOpen(
                set(3, &[0, 1]),
                set(3, &[1, 2])
            )))
        );
        assert!(FiniteSpace::validate(17, &[0]).is_err());
        assert!(matches!(
            FiniteSpace::validate(2, &[0, 3, 4]),
            Err(TopologyError::OutOfCarrier { mask: 4, n: 2 })
        ));
        // duplicates collapse
        let s = FiniteSpace::validate(2, &[3, 0, 1, 1]).unwrap();
        assert_eq!(s.open_masks(), &[0, 1, 3]);
    }

    #[test]
    fn closure_examples() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(s.closure(set(2, &[0])), set(2, &[0, 1]));
        assert_eq!(s.closure(s.carrier()), s.carrier());
        assert_eq!(two_blocks().closure(set(4, &[0])), set(4, &[0, 1]));
    }

    #[test]
    fn interior_examples() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(s.interior(set(2, &[0])), set(2, &[0]));
        assert_eq!(s.interior(PointSet::empty(2)), PointSet::empty(2));
        assert_eq!(s.interior(set(2, &[1])), PointSet::empty(2));
    }

    #[test]
    fn t1_examples() {
        assert!(FiniteSpace::discrete(3).is_t1());
        assert!(!FiniteSpace::sierpinski().is_t1());
        assert!(!FiniteSpace::indiscrete(2).is_t1());
    }

    #[test]
    fn pointwise_non_t1_examples() {
        assert!(FiniteSpace::indiscrete(2).is_pointwise_non_t1());
        assert!(!FiniteSpace::sierpinski().is_pointwise_non_t1());
        assert!(two_blocks().is_pointwise_non_t1());
    }

    #[test]
    fn extremally_disconnected_examples() {
        assert!(FiniteSpace::indiscrete(2).is_extremally_disconnected());
        let s = FiniteSpace::validate(3, &[0, 1, 2, 3, 7]).unwrap();
        assert_eq!(s.closure(set(3, &[0])), set(3, &[0, 2]));
        assert!(!s.is_extremally_disconnected());
        for n in 1..=4 {
            assert!(FiniteSpace::discrete(n).is_extremally_disconnected());
        }
    }

    #[test]
    fn hyperconnected_examples() {
        assert!(FiniteSpace::validate(3, &[0, 1, 3, 7])
            .unwrap()
            .is_hyperconnected());
        assert!(!FiniteSpace::discrete(2).is_hyperconnected());
        for n in 1..=5 {
            assert!(FiniteSpace::indiscrete(n).is_hyperconnected());
        }
    }

    #[test]
    fn semi_open_examples() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(s.is_semi_open(s.carrier()), (true, Some(s.carrier())));
        assert_eq!(s.is_semi_open(set(2, &[1])), (false, None));
        // {0} also satisfies O ⊆ X ⊆ cl(O), but the interior is what is returned
        let zero = set(2, &[0]);
        assert!(zero.is_subset_of(s.carrier()) && s.closure(zero) == s.carrier());
        for o in two_blocks().opens() {
            assert!(two_blocks().is_semi_open(o).0);
        }
        // empty set is semi-open with no witness
        assert_eq!(s.is_semi_open(PointSet::empty(2)), (true, None));
    }

    #[test]
    fn semi_closed_examples() {
        let s = FiniteSpace::sierpinski();
        assert!(s.is_semi_closed(set(2, &[1])));
        assert!(s.is_semi_closed(s.carrier()));
        assert!(!s.is_semi_closed(set(2, &[0])));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let text = r#"{"n":3,"opens":[0,1,3,7]}"#;
        let s: FiniteSpace = serde_json::from_str(text).unwrap();
        assert_eq!(s.to_json(), text);
        let bad = serde_json::from_str::<FiniteSpace>(r#"{"n":2,"opens":[0,1,2]}"#);
        assert!(bad.unwrap_err().to_string().contains("NotATopology"));
    }

    #[test]
    fn classification_flags() {
        let c = FiniteSpace::sierpinski().classify();
        assert!(c.t0 && !c.t1 && !c.pointwise_non_t1 && c.hyperconnected);
        let c = FiniteSpace::discrete(2).classify();
        assert!(c.t0 && c.t1 && c.extremally_disconnected && !c.hyperconnected);
        assert!(!FiniteSpace::indiscrete(2).is_t0());
    }
}
