//! Structural predicates: the suffix decomposition `R`, atomicity,
//! splitability and atomic factorization.

use crate::error::PartitionError;
use crate::partition::SetPartition;

/// The longest tail of blocks `B_r, ..., B_k` whose union is a suffix of the
/// ordered ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixDecomposition {
    /// 1-based index `r` of the first block of the tail.
    pub r_index: usize,
    /// `{B_r, ..., B_k}`.
    pub suffix: SetPartition,
    /// `{B_1, ..., B_{r-1}}`, absent when `r = 1`.
    pub prefix: Option<SetPartition>,
}

impl SuffixDecomposition {
    /// Smallest element of the suffix's ground set.
    pub fn suffix_min(&self) -> u32 {
        self.suffix.ground()[0]
    }
}

/// A cut `m` with `p = p_[1,m] ∘ (p_[m+1,n] - m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitWitness {
    pub cut: u32,
}

impl SplitWitness {
    /// The element `m + 1`, which always lies in the first block.
    pub fn element(&self) -> u32 {
        self.cut + 1
    }
}

/// Computes `R(p)` on the ordered ground set of `p`, which need not be
/// contiguous.
pub fn suffix_decomposition(p: &SetPartition) -> Result<SuffixDecomposition, PartitionError> {
    if p.is_empty() {
        return Err(PartitionError::EmptyPartition);
    }
    let blocks = p.blocks();
    // B_j ∪ ... ∪ B_k is a suffix of the ground set exactly when every element
    // of B_1, ..., B_{j-1} is below min(B_j).
    let mut prefix_max = 0u32;
    let mut r = 1;
    for (idx, b) in blocks.iter().enumerate() {
        if prefix_max < b.min_element() {
            r = idx + 1;
        }
        prefix_max = prefix_max.max(b.max_element());
    }
    let suffix = SetPartition::from_canonical_blocks(blocks[r - 1..].to_vec());
    let prefix = (r > 1).then(|| SetPartition::from_canonical_blocks(blocks[..r - 1].to_vec()));
    Ok(SuffixDecomposition {
        r_index: r,
        suffix,
        prefix,
    })
}

/// True iff `p` is not a slash product of two nonempty partitions.
pub fn is_atomic(p: &SetPartition) -> Result<bool, PartitionError> {
    p.require_initial()?;
    Ok(suffix_decomposition(p)?.r_index == 1)
}

/// Independent check of atomicity: no proper prefix `[1, m]` is a union of
/// blocks.
pub fn atomic_oracle(p: &SetPartition) -> Result<bool, PartitionError> {
    let n = p.require_initial()?;
    let is_cut = |m: u32| {
        p.blocks()
            .iter()
            .all(|b| b.max_element() <= m || b.min_element() > m)
    };
    Ok(!(1..n).any(is_cut))
}

fn is_split_at(p: &SetPartition, n: u32, m: u32) -> Result<bool, PartitionError> {
    let left = p.restrict_range(1, m)?;
    let right = p.restrict_range(m + 1, n)?.shift(-i64::from(m))?;
    Ok(left.split_product(&right)? == *p)
}

/// All split cuts of `p`, increasing.
///
/// Only `m = i - 1` for `i` in the first block (other than 1) can be a cut,
/// because the first block of a split product always contains `m + 1`.
pub fn split_witnesses(p: &SetPartition) -> Result<Vec<SplitWitness>, PartitionError> {
    let n = p.require_initial()?;
    let mut out = Vec::new();
    for &i in &p.blocks()[0].elements()[1..] {
        let cut = i - 1;
        if is_split_at(p, n, cut)? {
            out.push(SplitWitness { cut });
        }
    }
    Ok(out)
}

/// The smallest split cut, if any.
pub fn first_split_witness(p: &SetPartition) -> Result<Option<SplitWitness>, PartitionError> {
    let n = p.require_initial()?;
    for &i in &p.blocks()[0].elements()[1..] {
        if is_split_at(p, n, i - 1)? {
            return Ok(Some(SplitWitness { cut: i - 1 }));
        }
    }
    Ok(None)
}

/// Scans every cut `m ∈ [1, n-1]`; kept as a cross-check for
/// [`split_witnesses`].
pub fn split_witnesses_all_cuts(p: &SetPartition) -> Result<Vec<SplitWitness>, PartitionError> {
    let n = p.require_initial()?;
    let mut out = Vec::new();
    for cut in 1..n {
        if is_split_at(p, n, cut)? {
            out.push(SplitWitness { cut });
        }
    }
    Ok(out)
}

pub fn is_unsplitable(p: &SetPartition) -> Result<bool, PartitionError> {
    Ok(first_split_witness(p)?.is_none())
}

/// Factors `p` as `a_1 | a_2 | ... | a_s` with every `a_t` atomic.
pub fn atomic_factorization(p: &SetPartition) -> Result<Vec<SetPartition>, PartitionError> {
    let n = p.require_initial()?;
    // reach[x] = largest element sharing a block with x.
    let mut reach = vec![0u32; n as usize + 1];
    for b in p.blocks() {
        for &x in b.elements() {
            reach[x as usize] = b.max_element();
        }
    }
    let mut factors = Vec::new();
    let mut start = 1u32;
    let mut frontier = 0u32;
    for x in 1..=n {
        frontier = frontier.max(reach[x as usize]);
        if frontier == x {
            factors.push(p.restrict_range(start, x)?.normalized()?);
            start = x + 1;
        }
    }
    Ok(factors)
}

/// Slash-folds a sequence of partitions left to right.
pub fn slash_fold<'a, I>(parts: I) -> Result<SetPartition, PartitionError>
where
    I: IntoIterator<Item = &'a SetPartition>,
{
    let mut iter = parts.into_iter();
    let first = iter.next().ok_or(PartitionError::EmptyPartition)?.clone();
    iter.try_fold(first, |acc, next| acc.slash_product(next))
}
