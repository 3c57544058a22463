//! Exact integer interval arithmetic over the nonnegative integers.
//!
//! Every interval here is a cardinality estimate `[lo, hi]` with `lo <= hi`.
//! Empty intervals are never values: operations that would produce one
//! return an [`IntervalError`] instead.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("inverted interval [{lo}, {hi}]")]
    Inverted { lo: i64, hi: i64 },
    #[error("interval [{lo}, {hi}] has no member in N0")]
    EmptyAfterClamp { lo: i64, hi: i64 },
    #[error("divisor interval {0} contains zero")]
    DivisorContainsZero(NatInterval),
    #[error("estimates {0} and {1} are disjoint")]
    DisjointEstimates(NatInterval, NatInterval),
}

/// Closed interval `[lo, hi]` of nonnegative integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NatInterval {
    lo: u64,
    hi: u64,
}

/// Intermediate result of subtraction; may dip below zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedInterval {
    lo: i64,
    hi: i64,
}

// named methods rather than operator traits: add and mul can overflow and
// sub changes the output type
#[allow(clippy::should_implement_trait)]
impl NatInterval {
    pub fn new(lo: u64, hi: u64) -> Result<Self, IntervalError> {
        if lo > hi {
            return Err(IntervalError::Inverted {
                lo: lo as i64,
                hi: hi as i64,
            });
        }
        Ok(Self { lo, hi })
    }

    /// The degenerate interval `[k, k]` a scalar is identified with.
    pub const fn from_scalar(k: u64) -> Self {
        Self { lo: k, hi: k }
    }

    pub const fn lo(self) -> u64 {
        self.lo
    }

    pub const fn hi(self) -> u64 {
        self.hi
    }

    pub const fn width(self) -> u64 {
        self.hi - self.lo
    }

    pub const fn contains(self, x: u64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub const fn is_subset_of(self, other: Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn checked_add(self, other: Self) -> Option<Self> {
        Some(Self {
            lo: self.lo.checked_add(other.lo)?,
            hi: self.hi.checked_add(other.hi)?,
        })
    }

    /// `[a1 + b1, a2 + b2]`.
    ///
    /// Panics on endpoint overflow; cardinalities here never come close.
    pub fn add(self, other: Self) -> Self {
        self.checked_add(other)
            .expect("interval endpoint overflow in add")
    }

    /// `[a1 - b2, a2 - b1]`, kept signed until [`SignedInterval::clamp_nat`].
    pub fn sub(self, other: Self) -> SignedInterval {
        let lo = to_signed(self.lo) - to_signed(other.hi);
        let hi = to_signed(self.hi) - to_signed(other.lo);
        SignedInterval { lo, hi }
    }

    pub fn checked_mul(self, other: Self) -> Option<Self> {
        // Both operands are nonnegative, so min/max of the four endpoint
        // products are always lo*lo and hi*hi.
        Some(Self {
            lo: self.lo.checked_mul(other.lo)?,
            hi: self.hi.checked_mul(other.hi)?,
        })
    }

    /// `[a1 * b1, a2 * b2]`. Panics on endpoint overflow.
    pub fn mul(self, other: Self) -> Self {
        self.checked_mul(other)
            .expect("interval endpoint overflow in mul")
    }

    /// Integer quotient `[ceil(c1 / a2), floor(c2 / a1)]` of two cardinalities.
    pub fn div_card(self, divisor: Self) -> Result<Self, IntervalError> {
        if divisor.lo == 0 {
            return Err(IntervalError::DivisorContainsZero(divisor));
        }
        let lo = self.lo.div_ceil(divisor.hi);
        let hi = self.hi / divisor.lo;
        if lo > hi {
            return Err(IntervalError::EmptyAfterClamp {
                lo: lo as i64,
                hi: hi as i64,
            });
        }
        Ok(Self { lo, hi })
    }

    /// Combine two valid estimates of the same quantity into the tighter one.
    pub fn refine(self, other: Self) -> Result<Self, IntervalError> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo > hi {
            return Err(IntervalError::DisjointEstimates(self, other));
        }
        Ok(Self { lo, hi })
    }
}

fn to_signed(x: u64) -> i64 {
    i64::try_from(x).expect("interval endpoint exceeds i64 range")
}

impl SignedInterval {
    pub fn new(lo: i64, hi: i64) -> Result<Self, IntervalError> {
        if lo > hi {
            return Err(IntervalError::Inverted { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub const fn lo(self) -> i64 {
        self.lo
    }

    pub const fn hi(self) -> i64 {
        self.hi
    }

    /// Intersect with N0: `[max(lo, 0), hi]`.
    pub fn clamp_nat(self) -> Result<NatInterval, IntervalError> {
        if self.hi < 0 {
            return Err(IntervalError::EmptyAfterClamp {
                lo: self.lo,
                hi: self.hi,
            });
        }
        Ok(NatInterval {
            lo: self.lo.max(0) as u64,
            hi: self.hi as u64,
        })
    }
}

impl From<u64> for NatInterval {
    fn from(k: u64) -> Self {
        Self::from_scalar(k)
    }
}

impl fmt::Display for NatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Display for SignedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Serialize for NatInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NatInterval {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [lo, hi] = <[u64; 2]>::deserialize(deserializer)?;
        NatInterval::new(lo, hi).map_err(D::Error::custom)
    }
}
