//! Brute-force oracles that share no code with the library.
//!
//! Partitions are plain `Vec<Vec<u32>>` in canonical order. Enumeration is by
//! element insertion (not restricted growth strings), and splitability is
//! decided by generating every split product of smaller partitions.

#![allow(dead_code)]

use std::collections::HashSet;

pub type Raw = Vec<Vec<u32>>;

pub fn canon(mut p: Raw) -> Raw {
    for b in &mut p {
        b.sort_unstable();
    }
    p.sort_unstable_by_key(|b| b[0]);
    p
}

/// Every partition of `[n]`, built by inserting `n` into each block of each
/// partition of `[n-1]` or into a new block.
pub fn all_partitions(n: u32) -> Vec<Raw> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_partitions(n - 1) {
        for idx in 0..p.len() {
            let mut q = p.clone();
            q[idx].push(n);
            out.push(q);
        }
        let mut q = p;
        q.push(vec![n]);
        out.push(q);
    }
    out.into_iter().map(canon).collect()
}

/// Split product written straight from the two-case definition.
pub fn split_product(p: &Raw, q: &Raw, m: u32) -> Raw {
    let k = p.len();
    let l = q.len();
    let shifted: Raw = q
        .iter()
        .map(|c| c.iter().map(|x| x + m).collect())
        .collect();
    let mut out = Vec::new();
    if k <= l {
        for t in 0..k {
            out.push([p[t].clone(), shifted[t].clone()].concat());
        }
        out.extend(shifted[k..].iter().cloned());
    } else {
        for t in 0..l {
            out.push([p[t].clone(), shifted[t].clone()].concat());
        }
        out.extend(p[l..].iter().cloned());
    }
    canon(out)
}

pub fn slash_product(p: &Raw, q: &Raw, m: u32) -> Raw {
    let mut out = p.clone();
    out.extend(
        q.iter()
            .map(|c| c.iter().map(|x| x + m).collect::<Vec<_>>()),
    );
    canon(out)
}

/// All splitable partitions of `[n]`.
pub fn splitable_set(n: u32) -> HashSet<Raw> {
    let mut set = HashSet::new();
    for m in 1..n {
        let left = all_partitions(m);
        let right = all_partitions(n - m);
        for a in &left {
            for b in &right {
                set.insert(split_product(a, b, m));
            }
        }
    }
    set
}

/// All non-atomic partitions of `[n]`, as images of the slash product.
pub fn slash_set(n: u32) -> HashSet<Raw> {
    let mut set = HashSet::new();
    for m in 1..n {
        for a in all_partitions(m) {
            for b in all_partitions(n - m) {
                set.insert(slash_product(&a, &b, m));
            }
        }
    }
    set
}

pub fn to_text(p: &Raw) -> String {
    p.iter()
        .map(|b| {
            b.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("|")
}

/// R(p) straight from the definition: the largest j such that the union of
/// blocks j..k equals the set of ground elements >= some x_t.
pub fn suffix_index(p: &Raw) -> usize {
    let mut ground: Vec<u32> = p.iter().flatten().copied().collect();
    ground.sort_unstable();
    let mut best = 1;
    for j in 1..=p.len() {
        let mut union: Vec<u32> = p[j - 1..].iter().flatten().copied().collect();
        union.sort_unstable();
        let is_suffix = (0..ground.len()).any(|t| ground[t..] == union[..]);
        if is_suffix {
            best = j;
        }
    }
    best
}

/// Bell numbers by the recurrence B(n+1) = sum C(n, k) B(k).
pub fn bell_by_binomials(n: usize) -> u128 {
    let mut bell = vec![1u128];
    for m in 0..n {
        let mut binom = 1u128;
        let mut next = 0u128;
        for (k, b) in bell.iter().enumerate() {
            next += binom * b;
            binom = binom * (m - k) as u128 / (k + 1) as u128;
        }
        bell.push(next);
    }
    bell[n]
}
