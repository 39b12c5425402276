use crate::constructions::Permutation;
use crate::error::{Error, Result};
use crate::patterns::lis::{longest_decreasing, longest_increasing};

use super::exhaustive::search;

/// `r` disjoint, pairwise similar subsequences of a permutation, as 0-based
/// position lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermTwinSet {
    pub r: usize,
    pub subs: Vec<Vec<usize>>,
}

impl PermTwinSet {
    pub fn length(&self) -> usize {
        self.subs.first().map_or(0, Vec::len)
    }
}

/// Relative order of `pi` restricted to `positions`.
fn pattern(pi: &[u32], positions: &[usize]) -> Vec<usize> {
    let vals: Vec<u32> = positions.iter().map(|&p| pi[p]).collect();
    vals.iter()
        .map(|v| vals.iter().filter(|&&u| u < *v).count())
        .collect()
}

pub fn verify_perm_twins(pi: &Permutation, t: &PermTwinSet) -> bool {
    let v = pi.values();
    let mut used = vec![false; v.len()];
    for &p in t.subs.iter().flatten() {
        if p >= v.len() || used[p] {
            return false;
        }
        used[p] = true;
    }
    if t.subs.len() != t.r {
        return false;
    }
    let sorted = t.subs.iter().all(|s| s.windows(2).all(|w| w[0] < w[1]));
    let first = t.subs.first().map(|s| pattern(v, s));
    sorted && t.subs.iter().all(|s| Some(pattern(v, s)) == first)
}

fn check_r(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "r must be at least 2, got {r}"
        )));
    }
    Ok(())
}

/// Longest r-twins in `pi` by exhaustive search.
pub fn perm_twins_exhaustive(pi: &Permutation, r: usize) -> Result<PermTwinSet> {
    check_r(r)?;
    let limit = if r == 2 { 10 } else { 8 };
    if pi.len() > limit {
        return Err(Error::TooLarge {
            n: pi.len(),
            max: limit,
        });
    }
    let subs = search(pi.len(), r, |idx| pattern(pi.values(), idx));
    Ok(PermTwinSet { r, subs })
}

/// Source of permutation twins for [`super::split_twins`].
pub trait PermTwinFinder: Sync {
    fn find(&self, pi: &Permutation, r: usize) -> Result<PermTwinSet>;

    fn name(&self) -> &'static str;
}

/// Exhaustive search; fails beyond its size guard.
pub struct ExhaustivePermFinder;

impl PermTwinFinder for ExhaustivePermFinder {
    fn find(&self, pi: &Permutation, r: usize) -> Result<PermTwinSet> {
        perm_twins_exhaustive(pi, r)
    }

    fn name(&self) -> &'static str {
        "exhaustive"
    }
}

/// Takes a longest monotone subsequence and cuts it into `r` consecutive
/// runs of equal length, giving twins of length `⌊L/r⌋ ≥ ⌊√n/r⌋`.
pub struct MonotoneSplitFinder;

impl PermTwinFinder for MonotoneSplitFinder {
    fn find(&self, pi: &Permutation, r: usize) -> Result<PermTwinSet> {
        check_r(r)?;
        let inc = longest_increasing(pi.values());
        let dec = longest_decreasing(pi.values());
        let run = if inc.len() >= dec.len() { inc } else { dec };
        let len = run.len() / r;
        let subs = (0..r)
            .map(|h| run[h * len..(h + 1) * len].to_vec())
            .collect();
        Ok(PermTwinSet { r, subs })
    }

    fn name(&self) -> &'static str {
        "monotone"
    }
}

/// Exhaustive up to a size, monotone split above it.
pub struct HybridPermFinder {
    pub exhaustive_up_to: usize,
}

impl Default for HybridPermFinder {
    fn default() -> Self {
        HybridPermFinder {
            exhaustive_up_to: 8,
        }
    }
}

impl PermTwinFinder for HybridPermFinder {
    fn find(&self, pi: &Permutation, r: usize) -> Result<PermTwinSet> {
        if pi.len() <= self.exhaustive_up_to {
            perm_twins_exhaustive(pi, r)
        } else {
            MonotoneSplitFinder.find(pi, r)
        }
    }

    fn name(&self) -> &'static str {
        "hybrid"
    }
}
