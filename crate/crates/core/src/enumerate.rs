//! Exhaustive enumeration of labeled topologies on small carriers.
//!
//! Topologies are generated through their specialization preorders. A
//! candidate relation is encoded by its off-diagonal entries read row-major,
//! the first entry being the most significant bit of a `u64` code, so
//! ascending codes visit relation matrices in lexicographic order. Shards are
//! contiguous code ranges; concatenating shards in index order reproduces the
//! unsharded stream.

use std::ops::Range;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::preorder::{first_transitivity_gap, Preorder};
use crate::topology::{FiniteSpace, PointSet, MAX_POINTS};

pub const MAX_ENUM_POINTS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("CarrierTooLarge: n = {0} exceeds the enumeration limit of {MAX_ENUM_POINTS}")]
    CarrierTooLarge(usize),
    #[error("carrier must have at least one point")]
    EmptyCarrier,
    #[error("invalid shard {index} of {count}")]
    InvalidShard { index: usize, count: usize },
}

/// One slice of a partitioned enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    pub fn new(index: usize, count: usize) -> Result<Self, EnumError> {
        if count == 0 || index >= count {
            return Err(EnumError::InvalidShard { index, count });
        }
        Ok(Self { index, count })
    }

    /// This shard's part of `0..total`.
    pub fn range(self, total: u64) -> Range<u64> {
        let bound = |i: usize| ((total as u128 * i as u128) / self.count as u128) as u64;
        bound(self.index)..bound(self.index + 1)
    }

    pub fn all(count: usize) -> impl Iterator<Item = Shard> {
        (0..count).map(move |index| Shard { index, count })
    }
}

impl Default for Shard {
    fn default() -> Self {
        Self::WHOLE
    }
}

/// Hypothesis classes a theorem can restrict to. All flags false admits
/// every space.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationFilter {
    pub require_non_t1: bool,
    pub require_pointwise_non_t1: bool,
    pub require_ed: bool,
    pub require_hyperconnected: bool,
    pub require_t0: bool,
}

impl EnumerationFilter {
    pub const ALL: EnumerationFilter = EnumerationFilter {
        require_non_t1: false,
        require_pointwise_non_t1: false,
        require_ed: false,
        require_hyperconnected: false,
        require_t0: false,
    };

    pub fn matches(&self, space: &FiniteSpace) -> bool {
        (!self.require_non_t1 || !space.is_t1())
            && (!self.require_pointwise_non_t1 || space.is_pointwise_non_t1())
            && (!self.require_ed || space.is_extremally_disconnected())
            && (!self.require_hyperconnected || space.is_hyperconnected())
            && (!self.require_t0 || space.is_t0())
    }
}

fn check_carrier(n: usize) -> Result<(), EnumError> {
    match n {
        0 => Err(EnumError::EmptyCarrier),
        n if n > MAX_ENUM_POINTS => Err(EnumError::CarrierTooLarge(n)),
        _ => Ok(()),
    }
}

/// Number of candidate relation codes on `n` points: `2^(n(n-1))`.
pub fn relation_code_count(n: usize) -> u64 {
    1u64 << (n * (n - 1))
}

fn off_diagonal_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect()
}

/// Preorders whose relation code falls in `shard`, ascending by code.
pub fn enumerate_preorders(
    n: usize,
    shard: Shard,
) -> Result<impl Iterator<Item = (u64, Preorder)>, EnumError> {
    check_carrier(n)?;
    let pairs = off_diagonal_pairs(n);
    let width = pairs.len();
    let codes = shard.range(relation_code_count(n));
    Ok(codes.filter_map(move |code| {
        let mut up = [0u16; MAX_POINTS];
        for (i, row) in up.iter_mut().enumerate().take(n) {
            *row = 1 << i;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if code >> (width - 1 - k) & 1 == 1 {
                up[i] |= 1 << j;
            }
        }
        if first_transitivity_gap(n, &up).is_some() {
            return None;
        }
        let p = Preorder::from_up_sets(n, up).expect("reflexive and transitive");
        Some((code, p))
    }))
}

/// Every labeled topology on `n` points passing `filter`, each paired with
/// the relation code of its specialization preorder.
pub fn enumerate_spaces_keyed(
    n: usize,
    filter: EnumerationFilter,
    shard: Shard,
) -> Result<impl Iterator<Item = (u64, FiniteSpace)>, EnumError> {
    Ok(enumerate_preorders(n, shard)?
        .map(|(code, p)| (code, p.to_space()))
        .filter(move |(_, s)| filter.matches(s)))
}

pub fn enumerate_spaces(
    n: usize,
    filter: EnumerationFilter,
) -> Result<impl Iterator<Item = FiniteSpace>, EnumError> {
    Ok(enumerate_spaces_keyed(n, filter, Shard::WHOLE)?.map(|(_, s)| s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairMode {
    /// Every ordered pair of subsets.
    AllSubsets,
    /// Nonempty opens with empty intersection.
    OpenPairsDisjoint,
    /// Nonempty opens whose union is the carrier.
    OpenCovers,
}

/// Ordered set pairs of `space` selected by `mode`, in ascending mask order.
pub fn enumerate_subset_pairs(
    space: &FiniteSpace,
    mode: PairMode,
) -> Box<dyn Iterator<Item = (PointSet, PointSet)> + '_> {
    let n = space.n();
    match mode {
        PairMode::AllSubsets => Box::new(
            PointSet::all_subsets(n)
                .flat_map(move |a| PointSet::all_subsets(n).map(move |b| (a, b))),
        ),
        PairMode::OpenPairsDisjoint => {
            Box::new(open_pairs(space).filter(|(a, b)| a.is_disjoint(*b)))
        }
        PairMode::OpenCovers => {
            let full = space.carrier();
            Box::new(open_pairs(space).filter(move |(a, b)| a.union(*b) == full))
        }
    }
}

fn open_pairs(space: &FiniteSpace) -> impl Iterator<Item = (PointSet, PointSet)> + '_ {
    space
        .nonempty_opens()
        .flat_map(move |a| space.nonempty_opens().map(move |b| (a, b)))
}
