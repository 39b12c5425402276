use std::collections::BTreeMap;

use super::{assert_sound, TwinSet};
use crate::error::{Error, Result};
use crate::matching::Matching;

/// Host-size guard of [`exact_twins`] for a given `r`.
pub fn exact_twins_limit(r: usize) -> usize {
    if r <= 2 {
        8
    } else {
        6
    }
}

/// Largest `k` such that `r` pairwise disjoint `k`-subsets of `0..n` share a
/// key, and one such family (lexicographically first within the first key).
pub(crate) fn search<K: Ord>(n: usize, r: usize, key: impl Fn(&[usize]) -> K) -> Vec<Vec<usize>> {
    assert!(n < 32);
    for k in (1..=n / r).rev() {
        let mut groups: BTreeMap<K, Vec<u32>> = BTreeMap::new();
        let mut idx = Vec::with_capacity(k);
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            idx.clear();
            idx.extend((0..n).filter(|&i| mask >> i & 1 == 1));
            groups.entry(key(&idx)).or_default().push(mask);
        }
        for masks in groups.values() {
            let mut picked = Vec::with_capacity(r);
            if pick_disjoint(masks, r, 0, 0, &mut picked) {
                return picked
                    .iter()
                    .map(|&m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
                    .collect();
            }
        }
    }
    vec![Vec::new(); r]
}

fn pick_disjoint(masks: &[u32], r: usize, from: usize, used: u32, picked: &mut Vec<u32>) -> bool {
    if picked.len() == r {
        return true;
    }
    for (i, &m) in masks.iter().enumerate().skip(from) {
        if m & used == 0 {
            picked.push(m);
            if pick_disjoint(masks, r, i + 1, used | m, picked) {
                return true;
            }
            picked.pop();
        }
    }
    false
}

/// Maximum-size r-twins by exhaustive search over edge subsets.
pub fn exact_twins(host: &Matching, r: usize) -> Result<TwinSet> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "r must be at least 2, got {r}"
        )));
    }
    let limit = exact_twins_limit(r);
    if host.len() > limit {
        return Err(Error::TooLarge {
            n: host.len(),
            max: limit,
        });
    }
    let subs = search(host.len(), r, |idx| {
        host.sub(idx)
            .expect("valid indices")
            .normalized()
            .edges()
            .to_vec()
    });
    let t = TwinSet { r, subs };
    assert_sound(host, &t);
    Ok(t)
}
