//! Canonical and extremal matchings.

use crate::error::{Error, Result};
use crate::matching::{Edge, Matching, Triple, TripleMatching};
use crate::patterns::EsParams;

/// A sequence of distinct positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Accepts only permutations of `1..=n`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn edges_to_matching(edges: Vec<Edge>) -> Matching {
    Matching::new(edges).expect("constructions produce disjoint edges")
}

/// `A1A1A2A2…AnAn`
pub fn make_line(n: usize) -> Matching {
    let n = n as u32;
    edges_to_matching(
        (0..n)
            .map(|i| Edge {
                left: 2 * i + 1,
                right: 2 * i + 2,
            })
            .collect(),
    )
}

/// `A1…AnAn…A1`
pub fn make_stack(n: usize) -> Matching {
    let n = n as u32;
    edges_to_matching(
        (1..=n)
            .map(|i| Edge {
                left: i,
                right: 2 * n + 1 - i,
            })
            .collect(),
    )
}

/// `A1…AnA1…An`
pub fn make_wave(n: usize) -> Matching {
    let n = n as u32;
    edges_to_matching(
        (1..=n)
            .map(|i| Edge {
                left: i,
                right: n + i,
            })
            .collect(),
    )
}

/// `ℓ` consecutive copies of a stack of `s` nested waves of size `w`.
///
/// Largest line, stack and wave are exactly `ℓ`, `s` and `w`, so the
/// `ℓ·s·w + 1` threshold of [`crate::patterns::es_witness`] is tight.
pub fn stacked_waves(p: EsParams) -> Matching {
    let (ell, s, w) = (p.ell as u32, p.s as u32, p.w as u32);
    let block = 2 * s * w;
    let mut edges = Vec::with_capacity((ell * s * w) as usize);
    for copy in 0..ell {
        let base = copy * block;
        for j in 0..s {
            for k in 0..w {
                edges.push(Edge {
                    left: base + j * w + k + 1,
                    right: base + block - (j + 1) * w + k + 1,
                });
            }
        }
    }
    edges_to_matching(edges)
}

/// `A1…An A_{π1}…A_{πn}`: edge `k` is `{k, n + position of k in π}`.
pub fn from_permutation(pi: &Permutation) -> Matching {
    let n = pi.len() as u32;
    let mut edges = vec![Edge { left: 0, right: 0 }; pi.len()];
    for (pos, &k) in pi.values().iter().enumerate() {
        edges[k as usize - 1] = Edge {
            left: k,
            right: n + pos as u32 + 1,
        };
    }
    Matching::from_sorted_unchecked(edges)
}

/// Inverse of [`from_permutation`]. Works up to rank normalization, so any
/// matching whose left ends all precede its right ends is accepted.
pub fn to_permutation(m: &Matching) -> Result<Permutation> {
    let edges = m.edges();
    let last_left = edges.last().map_or(0, |e| e.left);
    if edges.iter().any(|e| e.right < last_left) {
        return Err(Error::NotPermutational);
    }
    let mut by_right: Vec<(u32, u32)> = edges
        .iter()
        .enumerate()
        .map(|(k, e)| (e.right, k as u32 + 1))
        .collect();
    by_right.sort_unstable();
    Ok(Permutation(by_right.into_iter().map(|(_, k)| k).collect()))
}

/// Sixteen triples in which every pair is in one of `ABBAAB`, `ABBABA`,
/// `ABABBA`, `ABABAB` and no three triples are pairwise in the same one.
///
/// Built by four rounds of splitting every triple into two. Each round
/// blows every vertex up into two adjacent vertices; within each of the
/// three vertex blocks the two halves are placed in the order dictated by
/// that round's relation. Pairs first separated in round `k` keep that
/// round's relation, giving 64, 32, 16 and 8 pairs for rounds 1 to 4.
pub fn triple_optimality_16() -> TripleMatching {
    // Per round: for each block, whether the second half comes first.
    // ABABAB, ABABBA, ABBABA, ABBAAB read as AB|AB|AB, AB|AB|BA, AB|BA|BA, AB|BA|AB.
    const ROUNDS: [[u32; 3]; 4] = [[0, 0, 0], [0, 0, 1], [0, 1, 1], [0, 1, 0]];
    const SIZE: u32 = 16;
    let triples = (0..SIZE)
        .map(|id| {
            let mut t = [0u32; 3];
            for (block, slot) in t.iter_mut().enumerate() {
                let mut rank = 0;
                for (round, flips) in ROUNDS.iter().enumerate() {
                    let bit = (id >> (3 - round)) & 1;
                    rank = rank * 2 + (bit ^ flips[block]);
                }
                *slot = block as u32 * SIZE + rank + 1;
            }
            Triple(t)
        })
        .collect();
    TripleMatching::new(triples).expect("construction is disjoint")
}
