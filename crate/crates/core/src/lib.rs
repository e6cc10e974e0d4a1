//! Exact counting of the even, odd and total k-th roots of a permutation,
//! given only its cycle type.
//!
//! A permutation `τ` is a k-th root of `σ` when `τ^k = σ`. The number of
//! such roots depends only on the cycle type of `σ`, and this crate computes
//! it three independent ways:
//!
//! * [`counting`] evaluates closed-form per-cycle-length sums directly;
//! * [`series`] expands the multivariate exponential generating functions
//!   and extracts labelled coefficients;
//! * [`oracle`] enumerates the symmetric group by brute force.
//!
//! [`verify`] ties the three together, and [`sequences`] specialises the
//! generating functions to single-length families such as the k-th roots
//! of the identity.

pub mod counting;
pub mod cycletype;
pub mod gset;
pub mod oracle;
pub mod sequences;
pub mod series;
pub mod verify;

mod arith;

pub use counting::{count_roots, has_kth_root, single_length_counts, RootCount, SolutionVector};
pub use cycletype::{parity_of_type, partitions_of, CycleType, ParseCycleTypeError, Sign};
pub use gset::RootDivisorSet;
pub use oracle::{oracle_count_roots, OracleError, Permutation};
pub use sequences::{Parity, SequenceError, SequenceSpec};
pub use series::{EgfSeries, ExactRational, Monomial, SeriesError};
pub use verify::{VerifyError, VerifyReport};
