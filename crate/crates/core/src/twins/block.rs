use std::collections::BTreeMap;

use petgraph::graph::{NodeIndex, UnGraph};

use super::{assert_sound, TwinSet};
use crate::error::{Error, Result};
use crate::matching::Matching;

/// How the auxiliary graph is matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MatchingStrategy {
    /// Scan auxiliary edges in lexicographic order, keep each one whose ends
    /// are both free. At least half of a maximum matching.
    #[default]
    Greedy,
    /// Maximum matching (Edmonds–Gabow via `petgraph`).
    Exact,
}

impl std::str::FromStr for MatchingStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greedy" => Ok(MatchingStrategy::Greedy),
            "exact" => Ok(MatchingStrategy::Exact),
            _ => Err(Error::InvalidParameter(format!(
                "unknown matching strategy {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockTwinParams {
    pub r: usize,
    /// Vertices per block.
    pub a: usize,
    /// Number of blocks; vertices past `a·blocks` are ignored.
    pub blocks: usize,
    pub strategy: MatchingStrategy,
}

impl BlockTwinParams {
    /// `a = round(r!^{1/(2r-1)} (2n)^{(r-1)/(2r-1)})` (at least 2) and
    /// `⌊2n/a⌋` blocks.
    pub fn default_for(n: usize, r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParameter(format!(
                "r must be at least 2, got {r}"
            )));
        }
        let fact: f64 = (1..=r).map(|k| k as f64).product();
        let e = 1.0 / (2 * r - 1) as f64;
        let a = (fact.powf(e) * ((2 * n) as f64).powf((r - 1) as f64 * e)).round() as usize;
        let a = a.max(2);
        Ok(BlockTwinParams {
            r,
            a,
            blocks: 2 * n / a,
            strategy: MatchingStrategy::Greedy,
        })
    }

    pub fn with_strategy(mut self, strategy: MatchingStrategy) -> Self {
        self.strategy = strategy;
        self
    }
}

/// Host edges grouped by the pair of blocks they join.
#[derive(Clone, Debug)]
pub struct AuxiliaryGraph {
    pub blocks: usize,
    pub block_size: usize,
    pub threshold: usize,
    /// Host edge indices between blocks `i < j`, in host order.
    pub between: BTreeMap<(usize, usize), Vec<usize>>,
}

impl AuxiliaryGraph {
    /// Number of host edges between blocks `i` and `j`.
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        let key = (i.min(j), i.max(j));
        self.between.get(&key).map_or(0, Vec::len)
    }

    /// Block pairs joined by at least `threshold` host edges, in order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.between
            .iter()
            .filter(|(_, v)| v.len() >= self.threshold)
            .map(|(&k, _)| k)
    }
}

pub fn auxiliary_graph(host: &Matching, p: &BlockTwinParams) -> Result<AuxiliaryGraph> {
    if p.r < 2 || p.a == 0 {
        return Err(Error::InvalidParameter(format!(
            "need r >= 2 and a >= 1, got r = {}, a = {}",
            p.r, p.a
        )));
    }
    let block_of = |v: u32| {
        let b = (v as usize - 1) / p.a;
        (b < p.blocks).then_some(b)
    };
    let mut between: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (k, e) in host.edges().iter().enumerate() {
        if let (Some(i), Some(j)) = (block_of(e.left), block_of(e.right)) {
            if i != j {
                between.entry((i, j)).or_default().push(k);
            }
        }
    }
    Ok(AuxiliaryGraph {
        blocks: p.blocks,
        block_size: p.a,
        threshold: p.r,
        between,
    })
}

fn match_blocks(g: &AuxiliaryGraph, strategy: MatchingStrategy) -> Vec<(usize, usize)> {
    match strategy {
        MatchingStrategy::Greedy => {
            let mut used = vec![false; g.blocks];
            let mut out = Vec::new();
            for (i, j) in g.edges() {
                if !used[i] && !used[j] {
                    used[i] = true;
                    used[j] = true;
                    out.push((i, j));
                }
            }
            out
        }
        MatchingStrategy::Exact => {
            let graph = UnGraph::<(), ()>::from_edges(g.edges().map(|(i, j)| (i as u32, j as u32)));
            let m = petgraph::algo::maximum_matching(&graph);
            let mut out: Vec<(usize, usize)> = m
                .edges()
                .map(|(a, b): (NodeIndex, NodeIndex)| {
                    let (a, b) = (a.index(), b.index());
                    (a.min(b), a.max(b))
                })
                .collect();
            out.sort_unstable();
            out
        }
    }
}

/// r-twins from a matching of the auxiliary block graph.
///
/// Every matched block pair contributes one of its host edges to each
/// sub-matching. Blocks used by different pairs are distinct, so any two
/// contributed edges relate the same way in every sub-matching.
pub fn block_twins(host: &Matching, p: &BlockTwinParams) -> Result<TwinSet> {
    let g = auxiliary_graph(host, p)?;
    let pairs = match_blocks(&g, p.strategy);
    let mut subs = vec![Vec::with_capacity(pairs.len()); p.r];
    for pair in &pairs {
        let edges = &g.between[pair];
        for (h, sub) in subs.iter_mut().enumerate() {
            sub.push(edges[h]);
        }
    }
    for sub in &mut subs {
        sub.sort_unstable();
    }
    let t = TwinSet { r: p.r, subs };
    assert_sound(host, &t);
    Ok(t)
}
