//! Interval estimates for cardinalities of sets in finite topological
//! spaces, and an exhaustive verifier that measures how often each estimate
//! contains the true value.
//!
//! The crate is organised bottom-up:
//!
//! * [`interval`]: exact interval arithmetic over the nonnegative integers.
//! * [`topology`]: point sets, finite spaces, closure and interior.
//! * [`preorder`]: specialization preorders and Alexandrov topologies.
//! * [`enumerate`]: every labeled topology on up to five points.
//! * [`estimators`]: the cardinality estimates themselves.
//! * [`verifier`]: sweeps spaces and set configurations against the estimates.

pub mod enumerate;
pub mod estimators;
pub mod interval;
pub mod preorder;
pub mod topology;
pub mod verifier;

pub use enumerate::{
    enumerate_spaces, enumerate_spaces_keyed, enumerate_subset_pairs, EnumError, EnumerationFilter,
    PairMode, Shard,
};
pub use estimators::{EstimateError, Hypothesis, TheoremId};
pub use interval::{IntervalError, NatInterval, SignedInterval};
pub use preorder::Preorder;
pub use topology::{FiniteSpace, PointSet, SpaceClassification, TopologyError};
pub use verifier::{
    verify_all, verify_theorem, verify_theorem_parallel, verify_theorem_shard, Reading,
    TheoremCase, VerificationReport, VerifyError,
};
