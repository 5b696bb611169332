//! Set partitions of `[n]` and a bijection between the atomic splitable and
//! the unsplitable non-atomic ones.
//!
//! * [`partition`]: the canonical [`SetPartition`] value, restriction,
//!   shifting, slash product and split product, plus the `1 3|2` text form.
//! * [`structure`]: the suffix decomposition `R`, atomicity, splitability and
//!   atomic factorization.
//! * [`bijection`]: four-way classification and the maps [`phi`] and [`psi`].
//! * [`enumeration`]: streaming enumeration of `Π_n`, Bell numbers, the
//!   sharded census and the exhaustive verifier.

pub mod bijection;
pub mod enumeration;
mod error;
pub mod partition;
pub mod structure;

pub use bijection::{
    classify, phi, psi, BijectionWitness, ClassKind, Classification, Direction, PsiCase,
};
pub use enumeration::{
    bell, census, census_sharded, class_counts, iterate_partitions, verify_bijection,
    verify_bijection_sharded, Cap, CensusRow, Check, ClassCounts, Counterexample, Rgs,
    VerifyReport,
};
pub use error::PartitionError;
pub use partition::{make_partition, Block, ElementSet, Interval, SetPartition};
pub use structure::{
    atomic_factorization, atomic_oracle, is_atomic, is_unsplitable, slash_fold, split_witnesses,
    split_witnesses_all_cuts, suffix_decomposition, SplitWitness, SuffixDecomposition,
};
