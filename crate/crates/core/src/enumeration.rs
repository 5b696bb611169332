//! Exhaustive enumeration of `Π_n`, the four-class census and the
//! end-to-end bijection verifier.
//!
//! Partitions of `[n]` are streamed in lexicographic order of their
//! restricted growth strings and never materialized as a whole. The census
//! splits that order into contiguous shards, runs them on the rayon pool and
//! merges the per-shard tallies in shard order, so every result is the same
//! for any shard count.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{classify, phi, psi, ClassKind};
use crate::error::PartitionError;
use crate::partition::SetPartition;

/// Upper bound on `n` for anything that walks `Π_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cap(usize);

impl Cap {
    pub const DEFAULT: Cap = Cap(12);
    /// RGS letters are stored as `u8`.
    pub const HARD_LIMIT: usize = 255;

    pub fn new(max_n: usize) -> Result<Self, PartitionError> {
        if max_n > Self::HARD_LIMIT {
            return Err(PartitionError::CapExceeded {
                n: max_n,
                cap: Self::HARD_LIMIT,
            });
        }
        Ok(Cap(max_n))
    }

    pub fn max_n(&self) -> usize {
        self.0
    }

    pub fn check(&self, n: usize) -> Result<(), PartitionError> {
        if n > self.0 {
            Err(PartitionError::CapExceeded { n, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Cap {
    fn default() -> Self {
        Cap::DEFAULT
    }
}

/// A restricted growth string: `a_1 = 0` and each letter is at most one more
/// than the maximum of the letters before it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rgs(Vec<u8>);

impl Rgs {
    pub fn new(word: Vec<u8>) -> Result<Self, PartitionError> {
        if !is_rgs(&word) {
            return Err(PartitionError::Parse(format!(
                "not a restricted growth string: {word:?}"
            )));
        }
        Ok(Rgs(word))
    }

    /// The RGS of a partition of `[n]`: letter `t` is the index of the block
    /// holding `t + 1`.
    pub fn from_partition(p: &SetPartition) -> Result<Self, PartitionError> {
        let n = p.require_initial()? as usize;
        if p.num_blocks() > usize::from(u8::MAX) + 1 {
            return Err(PartitionError::CapExceeded {
                n,
                cap: Cap::HARD_LIMIT,
            });
        }
        let mut word = vec![0u8; n];
        for (idx, b) in p.blocks().iter().enumerate() {
            for &x in b.elements() {
                word[x as usize - 1] = idx as u8;
            }
        }
        Ok(Rgs(word))
    }

    pub fn word(&self) -> &[u8] {
        &self.0
    }

    pub fn to_partition(&self) -> SetPartition {
        SetPartition::from_rgs(&self.0)
    }
}

fn is_rgs(word: &[u8]) -> bool {
    let mut next = 0u16;
    for &a in word {
        if u16::from(a) > next {
            return false;
        }
        next = next.max(u16::from(a) + 1);
    }
    true
}

/// Lexicographic walk over the restricted growth strings of length `n` that
/// start with a fixed prefix.
#[derive(Debug, Clone)]
pub struct RgsIter {
    word: Vec<u8>,
    /// running[t] = max(word[..=t]).
    running: Vec<u8>,
    fixed: usize,
    done: bool,
}

impl RgsIter {
    /// All RGS of length `n`, starting from `0^n`.
    pub fn new(n: usize) -> Self {
        RgsIter::with_prefix(n, &[])
    }

    /// All RGS of length `n` whose first letters are `prefix`. The prefix must
    /// itself be a restricted growth string no longer than `n`.
    pub fn with_prefix(n: usize, prefix: &[u8]) -> Self {
        assert!(
            prefix.len() <= n && is_rgs(prefix),
            "bad RGS prefix {prefix:?}"
        );
        let mut word = prefix.to_vec();
        word.resize(n, 0);
        let mut running = Vec::with_capacity(n);
        let mut max = 0u8;
        for &a in &word {
            max = max.max(a);
            running.push(max);
        }
        RgsIter {
            word,
            running,
            fixed: prefix.len().max(1),
            done: n == 0,
        }
    }

    fn advance(&mut self) {
        let n = self.word.len();
        let mut t = n;
        while t > self.fixed {
            t -= 1;
            if self.word[t] <= self.running[t - 1] {
                self.word[t] += 1;
                self.running[t] = self.running[t - 1].max(self.word[t]);
                for u in t + 1..n {
                    self.word[u] = 0;
                    self.running[u] = self.running[t];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for RgsIter {
    type Item = Rgs;

    fn next(&mut self) -> Option<Rgs> {
        if self.done {
            return None;
        }
        let out = Rgs(self.word.clone());
        self.advance();
        Some(out)
    }
}

/// Streams every partition of `[n]` in RGS order.
#[derive(Debug, Clone)]
pub struct PartitionIter {
    inner: RgsIter,
}

impl Iterator for PartitionIter {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        self.inner.next().map(|w| w.to_partition())
    }
}

pub fn iterate_partitions(n: usize, cap: Cap) -> Result<PartitionIter, PartitionError> {
    if n == 0 {
        return Err(PartitionError::EmptyPartition);
    }
    cap.check(n)?;
    Ok(PartitionIter {
        inner: RgsIter::new(n),
    })
}

/// Bell number `B(n)` from the Bell triangle.
pub fn bell(n: usize, cap: Cap) -> Result<u128, PartitionError> {
    cap.check(n)?;
    Ok(bell_unchecked(n))
}

fn bell_unchecked(n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    let mut row = vec![1u128];
    for _ in 1..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    *row.last().unwrap()
}

/// A contiguous stretch of the RGS order of `Π_n`, given as a run of
/// consecutive prefixes.
#[derive(Debug, Clone)]
pub struct Shard {
    n: usize,
    prefixes: Vec<Rgs>,
}

impl Shard {
    pub fn partitions(&self) -> impl Iterator<Item = SetPartition> + '_ {
        self.prefixes
            .iter()
            .flat_map(move |prefix| RgsIter::with_prefix(self.n, prefix.word()))
            .map(|w| w.to_partition())
    }
}

/// Splits the RGS order of `Π_n` into `count` contiguous shards (some may be
/// empty when `count` exceeds the number of prefixes).
pub fn shards(n: usize, count: usize) -> Vec<Shard> {
    let count = count.max(1);
    let depth = (1..=n)
        .find(|&d| bell_unchecked(d) >= count as u128)
        .unwrap_or(n);
    let prefixes: Vec<Rgs> = RgsIter::new(depth).collect();
    let per = prefixes.len().div_ceil(count).max(1);
    let mut out: Vec<Shard> = prefixes
        .chunks(per)
        .map(|c| Shard {
            n,
            prefixes: c.to_vec(),
        })
        .collect();
    out.resize_with(count, || Shard {
        n,
        prefixes: Vec::new(),
    });
    out
}

/// Number of partitions in each of the four classes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub both: u64,
    pub atomic_only: u64,
    pub unsplitable_only: u64,
    pub neither: u64,
}

impl ClassCounts {
    pub fn total(&self) -> u64 {
        self.both + self.atomic_only + self.unsplitable_only + self.neither
    }

    /// `|A_n|`.
    pub fn atomic(&self) -> u64 {
        self.both + self.atomic_only
    }

    /// `|US_n|`.
    pub fn unsplitable(&self) -> u64 {
        self.both + self.unsplitable_only
    }

    pub fn get(&self, kind: ClassKind) -> u64 {
        match kind {
            ClassKind::Both => self.both,
            ClassKind::AtomicOnly => self.atomic_only,
            ClassKind::UnsplitableOnly => self.unsplitable_only,
            ClassKind::Neither => self.neither,
        }
    }

    fn bump(&mut self, kind: ClassKind) {
        match kind {
            ClassKind::Both => self.both += 1,
            ClassKind::AtomicOnly => self.atomic_only += 1,
            ClassKind::UnsplitableOnly => self.unsplitable_only += 1,
            ClassKind::Neither => self.neither += 1,
        }
    }

    pub fn merge(self, other: ClassCounts) -> ClassCounts {
        ClassCounts {
            both: self.both + other.both,
            atomic_only: self.atomic_only + other.atomic_only,
            unsplitable_only: self.unsplitable_only + other.unsplitable_only,
            neither: self.neither + other.neither,
        }
    }
}

/// One census line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub bell: u128,
    pub both: u64,
    pub atomic_only: u64,
    pub unsplitable_only: u64,
    pub neither: u64,
    pub bijection_ok: bool,
}

impl CensusRow {
    pub fn counts(&self) -> ClassCounts {
        ClassCounts {
            both: self.both,
            atomic_only: self.atomic_only,
            unsplitable_only: self.unsplitable_only,
            neither: self.neither,
        }
    }

    pub fn atomic(&self) -> u64 {
        self.counts().atomic()
    }

    pub fn unsplitable(&self) -> u64 {
        self.counts().unsplitable()
    }

    /// `n  bell  both  atomic_only  unsplitable_only  neither  bijection_ok`,
    /// tab separated.
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            self.bell,
            self.both,
            self.atomic_only,
            self.unsplitable_only,
            self.neither,
            self.bijection_ok
        )
    }
}

/// The properties [`verify_bijection`] checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// `phi` accepts exactly ATOMIC_ONLY (and `psi` exactly UNSPLITABLE_ONLY)
    /// and `phi` lands in UNSPLITABLE_ONLY.
    Domain,
    Injective,
    Surjective,
    PsiAfterPhi,
    PhiAfterPsi,
    CountIdentity,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Domain,
        Check::Injective,
        Check::Surjective,
        Check::PsiAfterPhi,
        Check::PhiAfterPsi,
        Check::CountIdentity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::Domain => "domain",
            Check::Injective => "injective",
            Check::Surjective => "surjective",
            Check::PsiAfterPhi => "psi_after_phi",
            Check::PhiAfterPsi => "phi_after_psi",
            Check::CountIdentity => "count_identity",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub check: Check,
    pub partition: String,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} failed at `{}`: {}",
            self.check, self.partition, self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub counts: ClassCounts,
    /// Number of distinct images of `phi`.
    pub distinct_images: u64,
    /// Failed checks, each with its first counterexample in RGS order.
    pub failures: Vec<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn check_passed(&self, check: Check) -> bool {
        self.failures.iter().all(|c| c.check != check)
    }

    pub fn first_counterexample(&self) -> Option<&Counterexample> {
        self.failures.first()
    }
}

#[derive(Debug, Default)]
struct Tally {
    counts: ClassCounts,
    /// (image RGS, source RGS) for every ATOMIC_ONLY partition.
    images: Vec<(Rgs, Rgs)>,
    failures: Vec<Counterexample>,
}

impl Tally {
    fn fail(&mut self, check: Check, p: &SetPartition, detail: String) {
        if self.failures.iter().all(|c| c.check != check) {
            self.failures.push(Counterexample {
                check,
                partition: p.to_string(),
                detail,
            });
        }
    }

    /// Left-biased: keeps the earlier shard's counterexample per check.
    fn merge(mut self, other: Tally) -> Tally {
        self.counts = self.counts.merge(other.counts);
        self.images.extend(other.images);
        for c in other.failures {
            if self.failures.iter().all(|d| d.check != c.check) {
                self.failures.push(c);
            }
        }
        self
    }

    fn visit(&mut self, p: &SetPartition, with_maps: bool) {
        let kind = match classify(p) {
            Ok(c) => c.kind(),
            Err(e) => {
                self.fail(Check::Domain, p, format!("classification failed: {e}"));
                return;
            }
        };
        self.counts.bump(kind);
        if with_maps {
            self.check_maps(p, kind);
        }
    }

    fn check_maps(&mut self, p: &SetPartition, kind: ClassKind) {
        let phi_result = phi(p);
        match (kind, phi_result) {
            (ClassKind::AtomicOnly, Ok((image, _))) => {
                match classify(&image).map(|c| c.kind()) {
                    Ok(ClassKind::UnsplitableOnly) => {}
                    other => self.fail(
                        Check::Domain,
                        p,
                        format!("phi image `{image}` classified as {other:?}"),
                    ),
                }
                match psi(&image) {
                    Ok((back, _)) if back == *p => {}
                    Ok((back, _)) => self.fail(
                        Check::PsiAfterPhi,
                        p,
                        format!("phi gives `{image}`, psi gives back `{back}`"),
                    ),
                    Err(e) => self.fail(
                        Check::PsiAfterPhi,
                        p,
                        format!("phi gives `{image}`, psi fails: {e}"),
                    ),
                }
                match (Rgs::from_partition(&image), Rgs::from_partition(p)) {
                    (Ok(img), Ok(src)) => self.images.push((img, src)),
                    (Err(e), _) | (_, Err(e)) => {
                        self.fail(Check::Injective, p, format!("cannot encode image: {e}"))
                    }
                }
            }
            (ClassKind::AtomicOnly, Err(e)) => self.fail(
                Check::Domain,
                p,
                format!("phi rejects an ATOMIC_ONLY input: {e}"),
            ),
            (_, Ok((image, _))) => self.fail(
                Check::Domain,
                p,
                format!("phi accepts a {kind} input and returns `{image}`"),
            ),
            (_, Err(PartitionError::Domain { .. })) => {}
            (_, Err(e)) => self.fail(Check::Domain, p, format!("phi fails unexpectedly: {e}")),
        }

        let psi_result = psi(p);
        match (kind, psi_result) {
            (ClassKind::UnsplitableOnly, Ok((pre, _))) => match phi(&pre) {
                Ok((back, _)) if back == *p => {}
                Ok((back, _)) => self.fail(
                    Check::PhiAfterPsi,
                    p,
                    format!("psi gives `{pre}`, phi gives back `{back}`"),
                ),
                Err(e) => self.fail(
                    Check::PhiAfterPsi,
                    p,
                    format!("psi gives `{pre}`, phi fails: {e}"),
                ),
            },
            (ClassKind::UnsplitableOnly, Err(e)) => self.fail(
                Check::PhiAfterPsi,
                p,
                format!("psi rejects an UNSPLITABLE_ONLY input: {e}"),
            ),
            (_, Ok((image, _))) => self.fail(
                Check::Domain,
                p,
                format!("psi accepts a {kind} input and returns `{image}`"),
            ),
            (_, Err(PartitionError::Domain { .. })) => {}
            (_, Err(e)) => self.fail(Check::Domain, p, format!("psi fails unexpectedly: {e}")),
        }
    }
}

fn survey(
    n: usize,
    cap: Cap,
    shard_count: usize,
    with_maps: bool,
) -> Result<Tally, PartitionError> {
    if n == 0 {
        return Err(PartitionError::EmptyPartition);
    }
    cap.check(n)?;
    let tallies: Vec<Tally> = shards(n, shard_count)
        .par_iter()
        .map(|shard| {
            let mut tally = Tally::default();
            for p in shard.partitions() {
                tally.visit(&p, with_maps);
            }
            tally
        })
        .collect();
    Ok(tallies.into_iter().fold(Tally::default(), Tally::merge))
}

/// Default shard count: a few per rayon worker.
pub fn default_shards() -> usize {
    4 * rayon::current_num_threads()
}

/// Counts the four classes without running the maps.
pub fn class_counts(n: usize, cap: Cap, shard_count: usize) -> Result<ClassCounts, PartitionError> {
    Ok(survey(n, cap, shard_count, false)?.counts)
}

/// Runs every check over `Π_n`.
pub fn verify_bijection(n: usize, cap: Cap) -> Result<VerifyReport, PartitionError> {
    verify_bijection_sharded(n, cap, default_shards())
}

pub fn verify_bijection_sharded(
    n: usize,
    cap: Cap,
    shard_count: usize,
) -> Result<VerifyReport, PartitionError> {
    let Tally {
        counts,
        mut images,
        mut failures,
    } = survey(n, cap, shard_count, true)?;

    images.sort_unstable();
    let mut distinct = 0u64;
    let mut collision = None;
    for (idx, (img, src)) in images.iter().enumerate() {
        if idx > 0 && images[idx - 1].0 == *img {
            if collision.is_none() {
                collision = Some((images[idx - 1].1.clone(), src.clone(), img.clone()));
            }
        } else {
            distinct += 1;
        }
    }
    if let Some((a, b, img)) = collision {
        failures.push(Counterexample {
            check: Check::Injective,
            partition: b.to_partition().to_string(),
            detail: format!(
                "phi of `{}` and `{}` both give `{}`",
                a.to_partition(),
                b.to_partition(),
                img.to_partition()
            ),
        });
    }

    if distinct != counts.unsplitable_only {
        let missing = first_unreached(n, &images);
        failures.push(Counterexample {
            check: Check::Surjective,
            partition: missing.map(|p| p.to_string()).unwrap_or_default(),
            detail: format!(
                "{distinct} distinct images but {} UNSPLITABLE_ONLY partitions",
                counts.unsplitable_only
            ),
        });
    }

    if counts.atomic() != counts.unsplitable() {
        failures.push(Counterexample {
            check: Check::CountIdentity,
            partition: String::new(),
            detail: format!(
                "|A_{n}| = {} but |US_{n}| = {}",
                counts.atomic(),
                counts.unsplitable()
            ),
        });
    }

    failures.sort_by_key(|c| c.check);
    Ok(VerifyReport {
        n,
        counts,
        distinct_images: distinct,
        failures,
    })
}

/// First UNSPLITABLE_ONLY partition (in RGS order) that is not an image.
fn first_unreached(n: usize, sorted_images: &[(Rgs, Rgs)]) -> Option<SetPartition> {
    RgsIter::new(n).find_map(|w| {
        let p = w.to_partition();
        let kind = classify(&p).ok()?.kind();
        let hit = sorted_images
            .binary_search_by(|(img, _)| img.cmp(&w))
            .is_ok();
        (kind == ClassKind::UnsplitableOnly && !hit).then_some(p)
    })
}

/// Census row for `n`, including the bijection verdict.
pub fn census(n: usize, cap: Cap) -> Result<CensusRow, PartitionError> {
    census_sharded(n, cap, default_shards())
}

pub fn census_sharded(n: usize, cap: Cap, shard_count: usize) -> Result<CensusRow, PartitionError> {
    let report = verify_bijection_sharded(n, cap, shard_count)?;
    let c = report.counts;
    Ok(CensusRow {
        n,
        bell: bell(n, cap)?,
        both: c.both,
        atomic_only: c.atomic_only,
        unsplitable_only: c.unsplitable_only,
        neither: c.neither,
        bijection_ok: report.passed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_examples() {
        let cap = Cap::default();
        assert_eq!(bell(0, cap).unwrap(), 1);
        assert_eq!(bell(1, cap).unwrap(), 1);
        assert_eq!(bell(3, cap).unwrap(), 5);
        assert_eq!(bell(10, cap).unwrap(), 115_975);
        assert_eq!(bell(12, cap).unwrap(), 4_213_597);
        assert_eq!(
            bell(13, cap),
            Err(PartitionError::CapExceeded { n: 13, cap: 12 })
        );
    }

    #[test]
    fn small_enumerations() {
        let cap = Cap::default();
        let one: Vec<String> = iterate_partitions(1, cap)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(one, ["1"]);
        let three: Vec<String> = iterate_partitions(3, cap)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(three, ["1 2 3", "1 2|3", "1 3|2", "1|2 3", "1|2|3"]);
        assert!(matches!(
            iterate_partitions(13, cap),
            Err(PartitionError::CapExceeded { n: 13, cap: 12 })
        ));
        assert_eq!(
            iterate_partitions(0, cap).err(),
            Some(PartitionError::EmptyPartition)
        );
    }

    #[test]
    fn rgs_validation_and_round_trip() {
        assert!(Rgs::new(vec![0, 1, 0, 2]).is_ok());
        assert!(Rgs::new(vec![1]).is_err());
        assert!(Rgs::new(vec![0, 2]).is_err());
        let p: SetPartition = "1 3 5 6|2 7 9|4 8 10".parse().unwrap();
        let w = Rgs::from_partition(&p).unwrap();
        assert_eq!(w.word(), &[0, 1, 0, 2, 0, 0, 1, 2, 1, 2]);
        assert_eq!(w.to_partition(), p);
    }

    #[test]
    fn prefixed_iteration_covers_a_contiguous_range() {
        let all: Vec<Rgs> = RgsIter::new(5).collect();
        let under: Vec<Rgs> = RgsIter::with_prefix(5, &[0, 1]).collect();
        let start = all
            .iter()
            .position(|w| w.word().starts_with(&[0, 1]))
            .unwrap();
        assert_eq!(&all[start..start + under.len()], &under[..]);
        assert!(under.iter().all(|w| w.word().starts_with(&[0, 1])));
    }

    #[test]
    fn shards_concatenate_to_the_full_order() {
        let full: Vec<SetPartition> = iterate_partitions(6, Cap::default()).unwrap().collect();
        for count in [1, 2, 3, 7, 50, 1000] {
            let parts = shards(6, count);
            assert_eq!(parts.len(), count);
            let joined: Vec<SetPartition> = parts.iter().flat_map(|s| s.partitions()).collect();
            assert_eq!(joined, full, "shard count {count}");
        }
    }

    #[test]
    fn census_small_rows() {
        let cap = Cap::default();
        let row = census(1, cap).unwrap();
        assert_eq!(
            (
                row.bell,
                row.both,
                row.atomic_only,
                row.unsplitable_only,
                row.neither
            ),
            (1, 1, 0, 0, 0)
        );
        let row = census(2, cap).unwrap();
        assert_eq!(
            (
                row.bell,
                row.both,
                row.atomic_only,
                row.unsplitable_only,
                row.neither
            ),
            (2, 0, 1, 1, 0)
        );
        let row = census(3, cap).unwrap();
        assert_eq!(
            (
                row.bell,
                row.both,
                row.atomic_only,
                row.unsplitable_only,
                row.neither
            ),
            (5, 0, 2, 2, 1)
        );
        assert!(row.bijection_ok);
        assert_eq!(row.to_tsv(), "3\t5\t0\t2\t2\t1\ttrue");
    }

    #[test]
    fn verify_small() {
        let cap = Cap::default();
        let report = verify_bijection(1, cap).unwrap();
        assert!(report.passed());
        assert_eq!(report.distinct_images, 0);
        let report = verify_bijection(3, cap).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.counts.atomic_only, 2);
        assert_eq!(report.distinct_images, 2);
    }

    #[test]
    fn cap_limits() {
        assert!(Cap::new(300).is_err());
        assert_eq!(
            Cap::new(5).unwrap().check(6),
            Err(PartitionError::CapExceeded { n: 6, cap: 5 })
        );
    }
}
