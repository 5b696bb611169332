//! The bijection between atomic splitable partitions and unsplitable
//! non-atomic partitions of `[n]`.
//!
//! [`phi`] maps `A_n \ US_n` to `US_n \ A_n` and [`psi`] is its inverse. Both
//! refuse inputs outside their domain with [`PartitionError::Domain`].
//!
//! In debug builds both maps re-check the structural facts their
//! construction relies on and report a failure as
//! [`PartitionError::Invariant`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::PartitionError;
use crate::partition::{Block, SetPartition};
use crate::structure::{first_split_witness, is_atomic, is_unsplitable, suffix_decomposition};

/// Membership of a partition of `[n]` in `A_n` and `US_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Classification {
    pub atomic: bool,
    pub unsplitable: bool,
}

impl Classification {
    pub fn kind(&self) -> ClassKind {
        match (self.atomic, self.unsplitable) {
            (true, true) => ClassKind::Both,
            (true, false) => ClassKind::AtomicOnly,
            (false, true) => ClassKind::UnsplitableOnly,
            (false, false) => ClassKind::Neither,
        }
    }
}

/// The four-way label derived from a [`Classification`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClassKind {
    Both,
    AtomicOnly,
    UnsplitableOnly,
    Neither,
}

impl ClassKind {
    pub const ALL: [ClassKind; 4] = [
        ClassKind::Both,
        ClassKind::AtomicOnly,
        ClassKind::UnsplitableOnly,
        ClassKind::Neither,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ClassKind::Both => "BOTH",
            ClassKind::AtomicOnly => "ATOMIC_ONLY",
            ClassKind::UnsplitableOnly => "UNSPLITABLE_ONLY",
            ClassKind::Neither => "NEITHER",
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn classify(p: &SetPartition) -> Result<Classification, PartitionError> {
    Ok(Classification {
        atomic: is_atomic(p)?,
        unsplitable: is_unsplitable(p)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Phi,
    Psi,
}

/// Which branch of `psi` produced the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsiCase {
    /// The prefix `σ_[j-1]` is unsplitable.
    Unsplitable = 1,
    /// The prefix is splitable and blocks are merged by index.
    Merge = 2,
}

/// The indices a map chose while computing its image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BijectionWitness {
    pub direction: Direction,
    pub i: Option<u32>,
    pub j: u32,
    /// 1-based index of the first block of `R`.
    pub r: Option<usize>,
    /// 1-based index of the first block inside `[1, i-1]`.
    pub q: Option<usize>,
    pub case_taken: Option<PsiCase>,
}

/// `key=value` pairs, e.g. `i=5 j=7` or `case=2 j=7 r=4 i=5 q=2`.
impl fmt::Display for BijectionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.direction {
            Direction::Phi => {
                if let Some(i) = self.i {
                    write!(f, "i={i} ")?;
                }
                write!(f, "j={}", self.j)
            }
            Direction::Psi => {
                if let Some(case) = self.case_taken {
                    write!(f, "case={} ", case as u8)?;
                }
                write!(f, "j={}", self.j)?;
                if let Some(r) = self.r {
                    write!(f, " r={r}")?;
                }
                if let Some(i) = self.i {
                    write!(f, " i={i}")?;
                }
                if let Some(q) = self.q {
                    write!(f, " q={q}")?;
                }
                Ok(())
            }
        }
    }
}

fn require_kind(
    p: &SetPartition,
    map: &'static str,
    expected: ClassKind,
) -> Result<u32, PartitionError> {
    let n = p.require_initial()?;
    let actual = classify(p)?.kind();
    if actual != expected {
        return Err(PartitionError::Domain {
            map,
            input: p.to_string(),
            expected,
            actual,
        });
    }
    Ok(n)
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), PartitionError> {
    if cfg!(debug_assertions) && !cond {
        Err(PartitionError::Invariant(what()))
    } else {
        Ok(())
    }
}

/// `π_[1, c-1] | (π_[c, n] - c + 1)`.
fn slash_at(p: &SetPartition, n: u32, c: u32) -> Result<SetPartition, PartitionError> {
    let left = p.restrict_range(1, c - 1)?;
    let right = p.restrict_range(c, n)?.shift(1 - i64::from(c))?;
    left.slash_product(&right)
}

/// `π_[1, c-1] ∘ (π_[c, n] - c + 1)`.
fn split_at(p: &SetPartition, n: u32, c: u32) -> Result<SetPartition, PartitionError> {
    let left = p.restrict_range(1, c - 1)?;
    let right = p.restrict_range(c, n)?.shift(1 - i64::from(c))?;
    left.split_product(&right)
}

/// Maps an atomic splitable partition to an unsplitable non-atomic one.
pub fn phi(p: &SetPartition) -> Result<(SetPartition, BijectionWitness), PartitionError> {
    let n = require_kind(p, "phi", ClassKind::AtomicOnly)?;

    // Smallest i ∈ B_1 with π = π_[i-1] ∘ (π_[i,n] - i + 1).
    let i = first_split_witness(p)?
        .ok_or_else(|| PartitionError::Invariant(format!("no split cut found for `{p}`")))?
        .element();

    // j = min of the ground set of R(π_[i,n]).
    let tail = p.restrict_range(i, n)?;
    let tail_r = suffix_decomposition(&tail)?;
    let j = tail_r.suffix_min();

    check(2 <= i && i <= j && j <= n, || {
        format!("phi on `{p}`: expected 2 <= i <= j <= n, got i={i} j={j} n={n}")
    })?;
    if cfg!(debug_assertions) {
        let from_j = p.restrict_range(j, n)?;
        check(tail_r.suffix == from_j, || {
            format!(
                "phi on `{p}`: R(p_[{i},{n}]) = `{}` but p_[{j},{n}] = `{from_j}`",
                tail_r.suffix
            )
        })?;
    }

    let image = slash_at(p, n, j)?;
    Ok((
        image,
        BijectionWitness {
            direction: Direction::Phi,
            i: Some(i),
            j,
            r: None,
            q: None,
            case_taken: None,
        },
    ))
}

/// Maps an unsplitable non-atomic partition back to an atomic splitable one.
pub fn psi(s: &SetPartition) -> Result<(SetPartition, BijectionWitness), PartitionError> {
    let n = require_kind(s, "psi", ClassKind::UnsplitableOnly)?;
    let blocks = s.blocks();
    let k = blocks.len();

    let decomposition = suffix_decomposition(s)?;
    let r = decomposition.r_index;
    let j = decomposition.suffix_min();
    check(j >= 2, || format!("psi on `{s}`: j = {j} < 2"))?;

    // Since j = min B_r and everything before B_r lies below j, the prefix
    // σ_[j-1] is exactly {B_1, ..., B_{r-1}}.
    let prefix = s.restrict_range(1, j - 1)?;
    check(prefix.num_blocks() == r - 1, || {
        format!(
            "psi on `{s}`: σ_[j-1] = `{prefix}` does not have r - 1 = {} blocks",
            r - 1
        )
    })?;

    let prefix_cut = first_split_witness(&prefix)?;
    let Some(cut) = prefix_cut else {
        let image = split_at(s, n, j)?;
        return Ok((
            image,
            BijectionWitness {
                direction: Direction::Psi,
                i: None,
                j,
                r: Some(r),
                q: None,
                case_taken: Some(PsiCase::Unsplitable),
            },
        ));
    };

    let i = cut.element();
    let below_i = 1..=i - 1;
    let q = blocks
        .iter()
        .position(|b| b.is_subset_of(&below_i))
        .map(|idx| idx + 1)
        .ok_or_else(|| {
            PartitionError::Invariant(format!("psi on `{s}`: no block inside [1, {}]", i - 1))
        })?;
    if q >= r {
        return Err(PartitionError::Invariant(format!(
            "psi on `{s}`: q = {q} is not below r = {r}"
        )));
    }

    // 1-based block indices from here on, as in B_1, ..., B_k.
    let b = |idx: usize| &blocks[idx - 1];
    let mut merged: Vec<Block> = (1..q).map(|t| b(t).clone()).collect();
    if 2 * r - q - 1 <= k {
        // The prefix run B_q..B_{r-1} runs out first.
        for t in 0..r - q {
            merged.push(union(b(q + t), b(r + t)));
        }
        merged.extend((2 * r - q..=k).map(|t| b(t).clone()));
    } else {
        // The suffix run B_r..B_k runs out first.
        for t in 0..=k - r {
            merged.push(union(b(q + t), b(r + t)));
        }
        merged.extend((q + k - r + 1..r).map(|t| b(t).clone()));
    }
    let image = SetPartition::from_blocks(merged)?;

    Ok((
        image,
        BijectionWitness {
            direction: Direction::Psi,
            i: Some(i),
            j,
            r: Some(r),
            q: Some(q),
            case_taken: Some(PsiCase::Merge),
        },
    ))
}

fn union(a: &Block, b: &Block) -> Block {
    Block::new(a.elements().iter().chain(b.elements()).copied())
        .expect("blocks of a partition are disjoint and nonempty")
}
