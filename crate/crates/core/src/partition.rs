//! Canonical set partitions over finite sets of positive integers.
//!
//! A [`SetPartition`] always stores its blocks in canonical order: elements
//! inside a block increase, and blocks are ordered by their minimum element.
//! Every constructor canonicalizes, so the rest of the crate can rely on
//! structural equality.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::PartitionError;

/// A nonempty, strictly increasing run of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block(Vec<u32>);

impl Block {
    /// Builds a block from an arbitrary collection of elements.
    pub fn new<I: IntoIterator<Item = u32>>(elements: I) -> Result<Self, PartitionError> {
        let mut elements: Vec<u32> = elements.into_iter().collect();
        if elements.is_empty() {
            return Err(PartitionError::EmptyBlock);
        }
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(PartitionError::DuplicateElement(w[0]));
        }
        if elements[0] == 0 {
            return Err(PartitionError::NonPositive(0));
        }
        Ok(Block(elements))
    }

    fn from_sorted(elements: Vec<u32>) -> Self {
        debug_assert!(!elements.is_empty());
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Block(elements)
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn min_element(&self) -> u32 {
        self.0[0]
    }

    pub fn max_element(&self) -> u32 {
        self.0[self.0.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; blocks are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// True when every element lies in `set`.
    pub fn is_subset_of<S: ElementSet + ?Sized>(&self, set: &S) -> bool {
        self.0.iter().all(|&x| set.contains(x))
    }

    fn union(&self, other: &Block) -> Block {
        let mut merged = Vec::with_capacity(self.len() + other.len());
        merged.extend_from_slice(&self.0);
        merged.extend_from_slice(&other.0);
        merged.sort_unstable();
        Block::from_sorted(merged)
    }

    fn shifted(&self, offset: i64) -> Result<Block, PartitionError> {
        self.0
            .iter()
            .map(|&x| shift_element(x, offset))
            .collect::<Result<Vec<_>, _>>()
            .map(Block::from_sorted)
    }
}

fn shift_element(x: u32, offset: i64) -> Result<u32, PartitionError> {
    let y = i64::from(x) + offset;
    if y < 1 {
        Err(PartitionError::NonPositive(y))
    } else {
        u32::try_from(y).map_err(|_| PartitionError::Overflow(y))
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, x) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// The contiguous range `[lo, hi]` of positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: u32,
    hi: u32,
}

impl Interval {
    pub fn new(lo: u32, hi: u32) -> Result<Self, PartitionError> {
        if lo == 0 {
            return Err(PartitionError::NonPositive(0));
        }
        if lo > hi {
            return Err(PartitionError::EmptyInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    /// `[1, n]`.
    pub fn initial(n: u32) -> Result<Self, PartitionError> {
        Interval::new(1, n)
    }

    pub fn lo(&self) -> u32 {
        self.lo
    }

    pub fn hi(&self) -> u32 {
        self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    /// Always false; intervals hold at least one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<u32> {
        self.lo..=self.hi
    }
}

/// Membership test used by [`SetPartition::restrict`].
pub trait ElementSet {
    fn contains(&self, x: u32) -> bool;
}

impl ElementSet for Interval {
    fn contains(&self, x: u32) -> bool {
        self.lo <= x && x <= self.hi
    }
}

impl ElementSet for BTreeSet<u32> {
    fn contains(&self, x: u32) -> bool {
        BTreeSet::contains(self, &x)
    }
}

impl ElementSet for HashSet<u32> {
    fn contains(&self, x: u32) -> bool {
        HashSet::contains(self, &x)
    }
}

impl ElementSet for [u32] {
    fn contains(&self, x: u32) -> bool {
        <[u32]>::contains(self, &x)
    }
}

impl<const N: usize> ElementSet for [u32; N] {
    fn contains(&self, x: u32) -> bool {
        <[u32]>::contains(self, &x)
    }
}

impl ElementSet for std::ops::RangeInclusive<u32> {
    fn contains(&self, x: u32) -> bool {
        std::ops::RangeInclusive::contains(self, &x)
    }
}

/// A partition of a finite set of positive integers into nonempty blocks,
/// held in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Block>,
    ground: Vec<u32>,
}

impl SetPartition {
    /// Canonicalizes an arbitrary family of blocks.
    ///
    /// Rejects empty blocks, zero elements, elements that appear twice, and an
    /// empty family.
    pub fn new<B, I>(blocks: B) -> Result<Self, PartitionError>
    where
        B: IntoIterator<Item = I>,
        I: IntoIterator<Item = u32>,
    {
        let blocks = blocks
            .into_iter()
            .map(Block::new)
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_blocks(blocks)
    }

    /// Canonicalizes a family of already-validated blocks.
    pub fn from_blocks(mut blocks: Vec<Block>) -> Result<Self, PartitionError> {
        if blocks.is_empty() {
            return Err(PartitionError::EmptyPartition);
        }
        blocks.sort_unstable_by_key(Block::min_element);
        let mut ground: Vec<u32> = blocks.iter().flat_map(|b| b.0.iter().copied()).collect();
        ground.sort_unstable();
        if let Some(w) = ground.windows(2).find(|w| w[0] == w[1]) {
            return Err(PartitionError::DuplicateElement(w[0]));
        }
        Ok(SetPartition { blocks, ground })
    }

    /// Builds a partition from blocks that are already disjoint and in
    /// canonical order. The caller guarantees this; debug builds check it.
    pub(crate) fn from_canonical_blocks(blocks: Vec<Block>) -> Self {
        debug_assert!(!blocks.is_empty());
        debug_assert!(
            blocks
                .windows(2)
                .all(|w| w[0].min_element() < w[1].min_element()),
            "blocks not in canonical order: {blocks:?}"
        );
        let mut ground: Vec<u32> = blocks.iter().flat_map(|b| b.0.iter().copied()).collect();
        ground.sort_unstable();
        debug_assert!(ground.windows(2).all(|w| w[0] < w[1]));
        SetPartition { blocks, ground }
    }

    /// The partition with no blocks. Only used internally as the `n = 0` value;
    /// public operations reject it.
    #[allow(dead_code)]
    pub(crate) fn empty() -> Self {
        SetPartition {
            blocks: Vec::new(),
            ground: Vec::new(),
        }
    }

    /// Builds a partition of `[1, n]` from a restricted growth string whose
    /// letter at position `t` is the block index of `t + 1`.
    pub(crate) fn from_rgs(word: &[u8]) -> Self {
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for (pos, &label) in word.iter().enumerate() {
            let label = label as usize;
            if label == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[label].push(pos as u32 + 1);
        }
        SetPartition::from_canonical_blocks(blocks.into_iter().map(Block::from_sorted).collect())
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The union of all blocks, increasing.
    pub fn ground(&self) -> &[u32] {
        &self.ground
    }

    /// Number of elements in the ground set.
    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// True when the ground set is `[1, n]` for some `n ≥ 1`.
    pub fn is_initial(&self) -> bool {
        match self.ground.last() {
            Some(&last) => last as usize == self.ground.len(),
            None => false,
        }
    }

    /// Returns `n` when the ground set is `[1, n]`.
    pub fn require_initial(&self) -> Result<u32, PartitionError> {
        if self.is_initial() {
            Ok(self.ground.len() as u32)
        } else {
            Err(PartitionError::NotBasedAtOne(self.to_string()))
        }
    }

    /// Index of the block containing `x`, if any.
    pub fn block_of(&self, x: u32) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(x))
    }

    /// The partition induced on `set ∩ ground`.
    pub fn restrict<S: ElementSet + ?Sized>(&self, set: &S) -> Result<Self, PartitionError> {
        let blocks: Vec<Block> = self
            .blocks
            .iter()
            .filter_map(|b| {
                let kept: Vec<u32> = b.0.iter().copied().filter(|&x| set.contains(x)).collect();
                (!kept.is_empty()).then(|| Block::from_sorted(kept))
            })
            .collect();
        if blocks.is_empty() {
            return Err(PartitionError::EmptyResult);
        }
        // Dropping elements can reorder minima, so canonicalize again.
        let mut blocks = blocks;
        blocks.sort_unstable_by_key(Block::min_element);
        Ok(SetPartition::from_canonical_blocks(blocks))
    }

    /// Shorthand for restricting to `[lo, hi]`.
    pub fn restrict_range(&self, lo: u32, hi: u32) -> Result<Self, PartitionError> {
        self.restrict(&Interval::new(lo, hi)?)
    }

    /// Adds `offset` to every element.
    pub fn shift(&self, offset: i64) -> Result<Self, PartitionError> {
        self.ensure_nonempty()?;
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.shifted(offset))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SetPartition::from_canonical_blocks(blocks))
    }

    /// Relabels the ground set `[a, b]` down to `[1, b - a + 1]`.
    pub(crate) fn normalized(&self) -> Result<Self, PartitionError> {
        self.ensure_nonempty()?;
        self.shift(1 - i64::from(self.ground[0]))
    }

    /// Slash product `self | other`: the blocks of `self` followed by the
    /// blocks of `other` shifted past `self`.
    pub fn slash_product(&self, other: &SetPartition) -> Result<Self, PartitionError> {
        let m = self.require_initial()?;
        other.require_initial()?;
        let mut blocks = self.blocks.clone();
        for b in &other.blocks {
            blocks.push(b.shifted(i64::from(m))?);
        }
        Ok(SetPartition::from_canonical_blocks(blocks))
    }

    /// Split product `self ∘ other`: the `t`-th block of `other`, shifted past
    /// `self`, merges into the `t`-th block of `self`; unmatched blocks pass
    /// through.
    pub fn split_product(&self, other: &SetPartition) -> Result<Self, PartitionError> {
        let m = self.require_initial()?;
        other.require_initial()?;
        let k = self.blocks.len();
        let l = other.blocks.len();
        let mut blocks = Vec::with_capacity(k.max(l));
        for t in 0..k.max(l) {
            let block = match (self.blocks.get(t), other.blocks.get(t)) {
                (Some(b), Some(c)) => b.union(&c.shifted(i64::from(m))?),
                (Some(b), None) => b.clone(),
                (None, Some(c)) => c.shifted(i64::from(m))?,
                (None, None) => unreachable!(),
            };
            blocks.push(block);
        }
        // Merged blocks keep the minima of self's blocks, and the pass-through
        // blocks all sit above them, so the displayed order is canonical.
        Ok(SetPartition::from_canonical_blocks(blocks))
    }

    fn ensure_nonempty(&self) -> Result<(), PartitionError> {
        if self.blocks.is_empty() {
            Err(PartitionError::EmptyPartition)
        } else {
            Ok(())
        }
    }
}

/// Canonicalizes an unordered collection of blocks.
pub fn make_partition<B, I>(blocks: B) -> Result<SetPartition, PartitionError>
where
    B: IntoIterator<Item = I>,
    I: IntoIterator<Item = u32>,
{
    SetPartition::new(blocks)
}

/// Text form: blocks separated by `|`, elements by single spaces.
impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, b) in self.blocks.iter().enumerate() {
            if idx > 0 {
                f.write_str("|")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = PartitionError;

    /// Accepts any block order, element order, and surrounding whitespace.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PartitionError::EmptyPartition);
        }
        let mut blocks = Vec::new();
        for chunk in s.split('|') {
            let mut elements = Vec::new();
            for token in chunk.split_whitespace() {
                let value: i64 = token
                    .parse()
                    .map_err(|_| PartitionError::Parse(format!("not an integer: `{token}`")))?;
                if value < 1 {
                    return Err(PartitionError::NonPositive(value));
                }
                let value = u32::try_from(value).map_err(|_| PartitionError::Overflow(value))?;
                elements.push(value);
            }
            blocks.push(Block::new(elements)?);
        }
        SetPartition::from_blocks(blocks)
    }
}
