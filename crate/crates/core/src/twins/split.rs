use super::{assert_sound, exact_twins, exact_twins_limit, PermTwinFinder, TwinSet};
use crate::constructions::to_permutation;
use crate::error::{Error, Result};
use crate::matching::{Edge, Matching};

/// `⌈n/4⌉`, raised by one if needed so that `n - m` is even.
pub fn default_split_m(n: usize) -> usize {
    let m = n.div_ceil(4);
    if (n - m) % 2 == 1 {
        (m + 1).min(n)
    } else {
        m
    }
}

/// Recursive r-twins by halving.
///
/// The vertex set is cut at its midpoint. If at least `m` edges cross the
/// cut they form a permutational matching, and `finder` produces twins in the
/// corresponding permutation. Otherwise each half holds enough edges and
/// the twins of both halves are concatenated; since one half lies entirely
/// left of the other, the concatenations stay pairwise isomorphic. Parts
/// within the guard of [`exact_twins`] are solved exhaustively.
pub fn split_twins(
    host: &Matching,
    r: usize,
    m: usize,
    finder: &dyn PermTwinFinder,
) -> Result<TwinSet> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "r must be at least 2, got {r}"
        )));
    }
    let n = host.len();
    if m > n || (n - m) % 2 == 1 {
        return Err(Error::InvalidParity { n, m });
    }
    let all: Vec<usize> = (0..n).collect();
    let t = recurse(host, &all, r, m, finder)?;
    assert_sound(host, &t);
    Ok(t)
}

/// `idx` lists host edges forming a perfect matching on their own vertices.
fn recurse(
    host: &Matching,
    idx: &[usize],
    r: usize,
    m: usize,
    finder: &dyn PermTwinFinder,
) -> Result<TwinSet> {
    let n = idx.len();
    if n < r {
        return Ok(TwinSet::empty(r));
    }
    // rank-order vertices; the first n belong to half A
    let mut verts: Vec<u32> = idx
        .iter()
        .flat_map(|&i| {
            let e = host.edge(i);
            [e.left, e.right]
        })
        .collect();
    verts.sort_unstable();
    let cut = verts[n - 1];

    let (mut across, mut in_a, mut in_b) = (Vec::new(), Vec::new(), Vec::new());
    for &i in idx {
        let e = host.edge(i);
        match (e.left <= cut, e.right <= cut) {
            (true, false) => across.push(i),
            (true, true) => in_a.push(i),
            _ => in_b.push(i),
        }
    }

    if across.len() >= m.max(1) {
        let edges: Vec<Edge> = across.iter().map(|&i| host.edge(i)).collect();
        let sub = Matching::from_sorted_unchecked(edges);
        let pi = to_permutation(&sub)?;
        let pt = finder.find(&pi, r)?;
        // position p of π is across-edge number π_p
        let subs = pt
            .subs
            .iter()
            .map(|s| {
                let mut v: Vec<usize> = s
                    .iter()
                    .map(|&p| across[pi.values()[p] as usize - 1])
                    .collect();
                v.sort_unstable();
                v
            })
            .collect();
        return Ok(TwinSet { r, subs });
    }

    // small remainders are solved exactly
    if n <= exact_twins_limit(r) {
        let t = exact_twins(&host.sub(idx)?, r)?;
        let subs = t
            .subs
            .iter()
            .map(|s| s.iter().map(|&k| idx[k]).collect())
            .collect();
        return Ok(TwinSet { r, subs });
    }

    let scaled = |half: usize| {
        let base = (m * half).div_ceil(n).max(1);
        if base % 2 == half % 2 {
            base
        } else {
            base + 1
        }
    };
    let left = recurse(host, &in_a, r, scaled(in_a.len()), finder)?;
    let right = recurse(host, &in_b, r, scaled(in_b.len()), finder)?;
    // every edge of A is aligned with every edge of B
    let subs = left
        .subs
        .into_iter()
        .zip(right.subs)
        .map(|(mut a, b)| {
            a.extend(b);
            a.sort_unstable();
            a
        })
        .collect();
    Ok(TwinSet { r, subs })
}
