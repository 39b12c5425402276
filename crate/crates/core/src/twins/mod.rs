//! r-twins: `r` pairwise edge-disjoint, pairwise order-isomorphic
//! sub-matchings of one host.
//!
//! Three finders are provided:
//!
//! * [`exact_twins`]: exhaustive search, the oracle for small hosts;
//! * [`block_twins`]: cut `[2n]` into consecutive blocks, join two blocks in
//!   an auxiliary graph when at least `r` host edges run between them, and
//!   turn a matching of that graph into twins;
//! * [`split_twins`]: split the vertex set into halves; either the edges
//!   across the halves form a large permutational matching (delegate to a
//!   permutation-twin finder) or recurse into both halves and concatenate.

mod block;
mod exhaustive;
mod perm;
mod split;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::matching::{order_isomorphic, Matching};

pub use block::{auxiliary_graph, block_twins, AuxiliaryGraph, BlockTwinParams, MatchingStrategy};
pub use exhaustive::{exact_twins, exact_twins_limit};
pub use perm::{
    perm_twins_exhaustive, verify_perm_twins, ExhaustivePermFinder, HybridPermFinder,
    MonotoneSplitFinder, PermTwinFinder, PermTwinSet,
};
pub use split::{default_split_m, split_twins};

/// `r` sub-matchings given as index lists into a host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwinSet {
    pub r: usize,
    pub subs: Vec<Vec<usize>>,
}

impl TwinSet {
    pub fn empty(r: usize) -> Self {
        TwinSet {
            r,
            subs: vec![Vec::new(); r],
        }
    }

    /// Edges per sub-matching.
    pub fn size(&self) -> usize {
        self.subs.first().map_or(0, Vec::len)
    }

    pub fn to_json(&self, host: &Matching, method: &str) -> serde_json::Value {
        serde_json::json!({
            "schema": crate::SCHEMA,
            "method": method,
            "host_hash": host_hash(host),
            "host_size": host.len(),
            "r": self.r,
            "size": self.size(),
            "subs": self.subs.iter().map(|s| {
                s.iter().map(|&i| {
                    let e = host.edge(i);
                    [e.left, e.right]
                }).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "indices": self.subs,
        })
    }
}

/// SHA-256 of the host's edge list, hex encoded.
pub fn host_hash(host: &Matching) -> String {
    let mut h = Sha256::new();
    for e in host.edges() {
        h.update(e.left.to_le_bytes());
        h.update(e.right.to_le_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// True iff `t` has `r` equally sized, pairwise disjoint, pairwise
/// order-isomorphic sub-matchings of `host`.
pub fn verify_twins(host: &Matching, t: &TwinSet) -> Result<bool> {
    let mut used = vec![false; host.len()];
    for &i in t.subs.iter().flatten() {
        if i >= host.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: host.len(),
            });
        }
        if used[i] {
            return Ok(false);
        }
        used[i] = true;
    }
    if t.subs.len() != t.r || t.subs.iter().any(|s| s.len() != t.size()) {
        return Ok(false);
    }
    let mut subs = t.subs.iter().map(|s| host.sub(s));
    let Some(first) = subs.next() else {
        return Ok(true);
    };
    let first = first?;
    for s in subs {
        if !order_isomorphic(&first, &s?) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn assert_sound(host: &Matching, t: &TwinSet) {
    assert!(
        verify_twins(host, t) == Ok(true),
        "twin finder produced an invalid twin set"
    );
}
