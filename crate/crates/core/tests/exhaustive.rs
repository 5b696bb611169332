mod common;

use std::collections::HashSet;

use common::{
    all_partitions, bell_by_binomials, slash_set, splitable_set, suffix_index, to_text, Raw,
};
use setpart_core::{
    atomic_factorization, atomic_oracle, census_sharded, class_counts, classify, is_atomic,
    iterate_partitions, slash_fold, split_witnesses, split_witnesses_all_cuts,
    suffix_decomposition, Cap, ClassKind, Rgs, SetPartition,
};

fn to_raw(p: &SetPartition) -> Raw {
    p.blocks().iter().map(|b| b.elements().to_vec()).collect()
}

/// (n, bell, both, atomic_only, unsplitable_only, neither), from an
/// independent brute-force run (insertion enumeration, splitability as the
/// image of all split products).
const FROZEN_CENSUS: [(usize, u128, u64, u64, u64, u64); 9] = [
    (1, 1, 1, 0, 0, 0),
    (2, 2, 0, 1, 1, 0),
    (3, 5, 0, 2, 2, 1),
    (4, 15, 0, 6, 6, 3),
    (5, 52, 2, 20, 20, 10),
    (6, 203, 17, 75, 75, 36),
    (7, 877, 113, 313, 313, 138),
    (8, 4140, 720, 1426, 1426, 568),
    (9, 21147, 4617, 7007, 7007, 2516),
];

#[test]
fn enumeration_matches_insertion_oracle() {
    for n in 1..=8u32 {
        let ours: Vec<Raw> = iterate_partitions(n as usize, Cap::default())
            .unwrap()
            .map(|p| to_raw(&p))
            .collect();
        let distinct: HashSet<&Raw> = ours.iter().collect();
        assert_eq!(distinct.len(), ours.len(), "duplicates at n={n}");
        let expected: HashSet<Raw> = all_partitions(n).into_iter().collect();
        assert_eq!(distinct.len(), expected.len());
        assert!(ours.iter().all(|p| expected.contains(p)), "n={n}");
    }
}

#[test]
fn enumeration_is_in_rgs_order() {
    let words: Vec<Rgs> = iterate_partitions(7, Cap::default())
        .unwrap()
        .map(|p| Rgs::from_partition(&p).unwrap())
        .collect();
    assert!(words.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn stream_length_matches_bell() {
    for n in 1..=10 {
        let count = iterate_partitions(n, Cap::default()).unwrap().count() as u128;
        assert_eq!(count, bell_by_binomials(n), "n={n}");
        assert_eq!(setpart_core::bell(n, Cap::default()).unwrap(), count);
    }
}

#[test]
fn classification_matches_brute_force() {
    for n in 1..=8u32 {
        let splitable = splitable_set(n);
        let non_atomic = slash_set(n);
        for p in iterate_partitions(n as usize, Cap::default()).unwrap() {
            let raw = to_raw(&p);
            let c = classify(&p).unwrap();
            assert_eq!(
                c.atomic,
                !non_atomic.contains(&raw),
                "atomic {}",
                to_text(&raw)
            );
            assert_eq!(
                c.unsplitable,
                !splitable.contains(&raw),
                "unsplitable {}",
                to_text(&raw)
            );
        }
    }
}

#[test]
fn suffix_index_matches_definition() {
    for n in 1..=7u32 {
        for p in iterate_partitions(n as usize, Cap::default()).unwrap() {
            assert_eq!(
                suffix_decomposition(&p).unwrap().r_index,
                suffix_index(&to_raw(&p))
            );
            // Gapped ground sets: drop the even elements, and shift up.
            let odd: Vec<u32> = (1..=n).step_by(2).collect();
            let gapped = p.restrict(&odd[..]).unwrap().shift(3).unwrap();
            assert_eq!(
                suffix_decomposition(&gapped).unwrap().r_index,
                suffix_index(&to_raw(&gapped)),
                "{gapped}"
            );
        }
    }
}

#[test]
fn suffix_decomposition_pieces_reassemble() {
    for p in iterate_partitions(7, Cap::default()).unwrap() {
        let d = suffix_decomposition(&p).unwrap();
        let again = suffix_decomposition(&d.suffix).unwrap();
        assert_eq!(again.r_index, 1, "R is not stable on {p}");
        assert_eq!(again.suffix, d.suffix);
        let mut blocks: Vec<_> = d.prefix.iter().flat_map(|q| q.blocks().to_vec()).collect();
        blocks.extend(d.suffix.blocks().iter().cloned());
        assert_eq!(blocks, p.blocks());
    }
}

#[test]
fn first_block_scan_agrees_with_all_cuts() {
    for n in 1..=8 {
        for p in iterate_partitions(n, Cap::default()).unwrap() {
            let fast = split_witnesses(&p).unwrap();
            let slow = split_witnesses_all_cuts(&p).unwrap();
            assert_eq!(fast, slow, "{p}");
            for w in &slow {
                assert!(p.blocks()[0].contains(w.element()), "{p} cut {}", w.cut);
            }
        }
    }
}

#[test]
fn atomic_matches_oracle() {
    for n in 1..=8 {
        for p in iterate_partitions(n, Cap::default()).unwrap() {
            assert_eq!(is_atomic(&p).unwrap(), atomic_oracle(&p).unwrap(), "{p}");
        }
    }
}

#[test]
fn factorization_round_trips() {
    for n in 1..=8 {
        for p in iterate_partitions(n, Cap::default()).unwrap() {
            let factors = atomic_factorization(&p).unwrap();
            assert!(factors.iter().all(|f| is_atomic(f).unwrap()), "{p}");
            assert_eq!(slash_fold(&factors).unwrap(), p);
            assert_eq!(factors.len() == 1, is_atomic(&p).unwrap());
        }
    }
}

#[test]
fn census_matches_frozen_rows() {
    for &(n, bell, both, atomic_only, unsplitable_only, neither) in &FROZEN_CENSUS {
        let row = census_sharded(n, Cap::default(), 8).unwrap();
        assert_eq!(
            (
                row.bell,
                row.both,
                row.atomic_only,
                row.unsplitable_only,
                row.neither
            ),
            (bell, both, atomic_only, unsplitable_only, neither),
            "n={n}"
        );
        assert!(row.bijection_ok, "n={n}");
        assert_eq!(row.atomic(), row.unsplitable());
    }
}

#[test]
fn class_counts_ignore_shard_count() {
    let reference = class_counts(9, Cap::default(), 1).unwrap();
    for shards in [2, 5, 16, 203, 5000] {
        assert_eq!(class_counts(9, Cap::default(), shards).unwrap(), reference);
    }
    assert_eq!(reference.get(ClassKind::Both), 4617);
}
