//! Random matchings, exhaustive enumeration and the Monte Carlo harness.
//!
//! All randomness flows from a [`Seed`]. The generator is ChaCha20
//! (`rand_chacha`), keyed by `seed_from_u64(seed)`; sample `i` of an
//! experiment draws from stream `i` of that key, so results do not depend
//! on how samples are scheduled across threads.

mod experiment;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matching::{Edge, Matching, Triple, TripleMatching};

pub use experiment::{
    run_experiment, ExperimentConfig, Scheme, StatSummary, Statistic, StatsReport, TwinMethod,
};

/// Identifier of the random stream layout, recorded in every report.
pub const RNG_ID: &str = "chacha20-v1";

/// Largest `n` accepted by [`enumerate_all`].
pub const ENUMERATE_MAX: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha20Rng {
        ChaCha20Rng::seed_from_u64(self.0)
    }

    /// Independent stream number `index` under this seed.
    pub fn substream(self, index: u64) -> ChaCha20Rng {
        let mut rng = self.rng();
        rng.set_stream(index);
        rng
    }
}

/// `α_n = (2n)! / (n! 2^n) = (2n-1)!!`
pub fn count_matchings(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::from(1u32), |acc, k| acc * (2 * k - 1))
}

/// All matchings on `1..=2n` in lexicographic order of their edge lists.
pub fn enumerate_all(n: usize) -> Result<MatchingIter> {
    if n > ENUMERATE_MAX {
        return Err(Error::TooLarge {
            n,
            max: ENUMERATE_MAX,
        });
    }
    Ok(MatchingIter {
        n,
        matched: vec![false; 2 * n + 1],
        stack: Vec::with_capacity(n),
        started: false,
        done: false,
    })
}

/// Depth-first enumeration: the smallest free vertex is matched with each
/// larger free vertex in turn.
pub struct MatchingIter {
    n: usize,
    matched: Vec<bool>,
    stack: Vec<(u32, u32)>,
    started: bool,
    done: bool,
}

impl MatchingIter {
    fn next_free(&self, after: u32) -> Option<u32> {
        (after + 1..=2 * self.n as u32).find(|&v| !self.matched[v as usize])
    }

    fn push(&mut self, l: u32, r: u32) {
        self.matched[l as usize] = true;
        self.matched[r as usize] = true;
        self.stack.push((l, r));
    }

    fn complete(&mut self) {
        while self.stack.len() < self.n {
            let l = self.next_free(0).expect("free vertex");
            let r = self.next_free(l).expect("free partner");
            self.push(l, r);
        }
    }

    fn emit(&self) -> Matching {
        Matching::from_sorted_unchecked(
            self.stack
                .iter()
                .map(|&(left, right)| Edge { left, right })
                .collect(),
        )
    }
}

impl Iterator for MatchingIter {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.complete();
            return Some(self.emit());
        }
        while let Some((l, r)) = self.stack.pop() {
            self.matched[l as usize] = false;
            self.matched[r as usize] = false;
            if let Some(r2) = self.next_free(r) {
                self.push(l, r2);
                self.complete();
                return Some(self.emit());
            }
        }
        self.done = true;
        None
    }
}

/// Counts free vertices; supports "k-th free vertex" lookups.
struct FreeSet {
    tree: Vec<u32>,
    log: usize,
}

impl FreeSet {
    fn full(size: usize) -> Self {
        let mut tree = vec![0u32; size + 1];
        for i in 1..=size {
            tree[i] += 1;
            let parent = i + (i & i.wrapping_neg());
            if parent <= size {
                tree[parent] += tree[i];
            }
        }
        let log = usize::BITS as usize - size.leading_zeros() as usize;
        FreeSet { tree, log }
    }

    fn remove(&mut self, mut v: usize) {
        while v < self.tree.len() {
            self.tree[v] -= 1;
            v += v & v.wrapping_neg();
        }
    }

    /// 1-based `k`.
    fn kth(&self, mut k: u32) -> usize {
        let mut pos = 0;
        for b in (0..=self.log).rev() {
            let next = pos + (1 << b);
            if next < self.tree.len() && self.tree[next] < k {
                pos = next;
                k -= self.tree[next];
            }
        }
        pos + 1
    }
}

/// Online scheme: repeatedly match the first free vertex with a uniformly
/// chosen other free vertex. Exactly uniform over all `α_n` matchings.
pub fn sample_uniform<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matching {
    let size = 2 * n;
    let mut free = FreeSet::full(size);
    let mut edges = Vec::with_capacity(n);
    let mut remaining = size as u32;
    while remaining > 0 {
        let l = free.kth(1);
        free.remove(l);
        let pick = rng.random_range(1..remaining);
        let r = free.kth(pick);
        free.remove(r);
        remaining -= 2;
        edges.push(Edge {
            left: l as u32,
            right: r as u32,
        });
    }
    Matching::from_sorted_unchecked(edges)
}

/// Shuffles `1..=2n` and pairs consecutive entries. Each matching arises
/// from exactly `n! 2^n` permutations, so this is uniform too.
pub fn sample_via_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matching {
    let mut perm: Vec<u32> = (1..=2 * n as u32).collect();
    perm.shuffle(rng);
    let mut edges: Vec<Edge> = perm
        .chunks_exact(2)
        .map(|c| Edge {
            left: c[0].min(c[1]),
            right: c[0].max(c[1]),
        })
        .collect();
    edges.sort_unstable();
    Matching::from_sorted_unchecked(edges)
}

/// Online scheme for triples: the first free vertex joins a uniformly
/// chosen unordered pair of other free vertices.
pub fn sample_uniform_triples<R: Rng + ?Sized>(n: usize, rng: &mut R) -> TripleMatching {
    let size = 3 * n;
    let mut free = FreeSet::full(size);
    let mut triples = Vec::with_capacity(n);
    let mut remaining = size as u32;
    while remaining > 0 {
        let first = free.kth(1);
        free.remove(first);
        let others = remaining - 1;
        let i = rng.random_range(1..=others);
        let mut j = rng.random_range(1..others);
        if j >= i {
            j += 1;
        }
        let (a, b) = (free.kth(i), free.kth(j));
        free.remove(a);
        free.remove(b);
        remaining -= 3;
        let mut t = [first as u32, a as u32, b as u32];
        t.sort_unstable();
        triples.push(Triple(t));
    }
    TripleMatching::new(triples).expect("sampler produces disjoint triples")
}

/// Number of edges of length `right - left` at most `len`.
pub fn short_edge_count(m: &Matching, len: u32) -> usize {
    m.edges().iter().filter(|e| e.length() <= len).count()
}
