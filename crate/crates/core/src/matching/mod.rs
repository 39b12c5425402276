//! Value types for ordered matchings and their pairwise relations.
//!
//! Vertices are positive integers. A full matching of size `n` covers
//! `1..=2n`; sub-matchings keep the labels of their host and are compared
//! through rank normalization.

mod iso;
mod relation;
mod word;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use iso::{contains_pattern, order_isomorphic};
pub use relation::{classify_pair, classify_triple_pair, Relation, Shape, TripleRelation};
pub use word::{parse_any, parse_triple_word, parse_word, to_word, AnyMatching};

/// An edge `{left, right}` with `left < right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub left: u32,
    pub right: u32,
}

impl Edge {
    /// Builds an edge from two distinct positive endpoints given in any order.
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == b || a == 0 || b == 0 {
            return Err(Error::InvalidEdge(a, b));
        }
        Ok(Edge {
            left: a.min(b),
            right: a.max(b),
        })
    }

    /// `right - left`.
    pub fn length(&self) -> u32 {
        self.right - self.left
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.left == v || self.right == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.left, self.right)
    }
}

/// An ordered matching: pairwise disjoint edges sorted by left endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "MatchingRepr", into = "MatchingRepr")]
pub struct Matching {
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct MatchingRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    schema: Option<String>,
    n: usize,
    edges: Vec<[u32; 2]>,
}

impl TryFrom<MatchingRepr> for Matching {
    type Error = Error;

    fn try_from(repr: MatchingRepr) -> Result<Self> {
        if repr.n != repr.edges.len() {
            return Err(Error::InvalidParameter(format!(
                "n = {} but {} edges given",
                repr.n,
                repr.edges.len()
            )));
        }
        let edges = repr
            .edges
            .into_iter()
            .map(|[a, b]| Edge::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Matching::new(edges)
    }
}

impl From<Matching> for MatchingRepr {
    fn from(m: Matching) -> Self {
        MatchingRepr {
            schema: None,
            n: m.len(),
            edges: m.edges.iter().map(|e| [e.left, e.right]).collect(),
        }
    }
}

impl Matching {
    /// Validates disjointness and sorts by left endpoint.
    pub fn new(mut edges: Vec<Edge>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len() * 2);
        for e in &edges {
            if e.left == 0 || e.left >= e.right {
                return Err(Error::InvalidEdge(e.left, e.right));
            }
            for v in [e.left, e.right] {
                if !seen.insert(v) {
                    return Err(Error::SharedVertex(v));
                }
            }
        }
        edges.sort_unstable();
        Ok(Matching { edges })
    }

    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|&(a, b)| Edge::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Matching::new(edges)
    }

    /// Caller guarantees the edges are disjoint, valid and sorted.
    pub(crate) fn from_sorted_unchecked(edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0].left < w[1].left));
        Matching { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    /// True when the endpoints are exactly `1..=2n`.
    pub fn is_perfect(&self) -> bool {
        let n2 = 2 * self.edges.len() as u32;
        let mut seen = vec![false; n2 as usize + 1];
        for e in &self.edges {
            if e.right > n2 {
                return false;
            }
            seen[e.left as usize] = true;
            seen[e.right as usize] = true;
        }
        seen[1..].iter().all(|&b| b)
    }

    /// Sub-matching formed by the edges at `indices`, keeping original labels.
    pub fn sub(&self, indices: &[usize]) -> Result<Matching> {
        let mut edges = Vec::with_capacity(indices.len());
        for &i in indices {
            let e = *self.edges.get(i).ok_or(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            })?;
            edges.push(e);
        }
        Matching::new(edges)
    }

    /// Relabels vertices by rank so the result is a full matching on `1..=2n`.
    pub fn normalized(&self) -> Matching {
        let mut verts: Vec<u32> = self.edges.iter().flat_map(|e| [e.left, e.right]).collect();
        verts.sort_unstable();
        let rank = |v: u32| verts.binary_search(&v).unwrap() as u32 + 1;
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                left: rank(e.left),
                right: rank(e.right),
            })
            .collect();
        Matching::from_sorted_unchecked(edges)
    }

    /// Canonical word form, see [`to_word`].
    pub fn to_word(&self) -> String {
        to_word(self)
    }

    pub fn to_json(&self) -> String {
        let mut repr = MatchingRepr::from(self.clone());
        repr.schema = Some(crate::SCHEMA.to_string());
        serde_json::to_string(&repr).expect("matching serializes")
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_word(self))
    }
}

/// A sorted 3-element vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple(pub [u32; 3]);

impl Triple {
    pub fn new(mut v: [u32; 3]) -> Result<Self> {
        v.sort_unstable();
        if v[0] == 0 || v[0] == v[1] || v[1] == v[2] {
            return Err(Error::InvalidTriple(v));
        }
        Ok(Triple(v))
    }

    pub fn first(&self) -> u32 {
        self.0[0]
    }

    /// Pair of the first two elements.
    pub fn head(&self) -> Edge {
        Edge {
            left: self.0[0],
            right: self.0[1],
        }
    }

    /// Pair of the last two elements.
    pub fn tail(&self) -> Edge {
        Edge {
            left: self.0[1],
            right: self.0[2],
        }
    }
}

/// An ordered 3-uniform matching: disjoint triples sorted by minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "TripleRepr", into = "TripleRepr")]
pub struct TripleMatching {
    triples: Vec<Triple>,
}

#[derive(Serialize, Deserialize)]
struct TripleRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    schema: Option<String>,
    n: usize,
    triples: Vec<[u32; 3]>,
}

impl TryFrom<TripleRepr> for TripleMatching {
    type Error = Error;

    fn try_from(repr: TripleRepr) -> Result<Self> {
        if repr.n != repr.triples.len() {
            return Err(Error::InvalidParameter(format!(
                "n = {} but {} triples given",
                repr.n,
                repr.triples.len()
            )));
        }
        let triples = repr
            .triples
            .into_iter()
            .map(Triple::new)
            .collect::<Result<Vec<_>>>()?;
        TripleMatching::new(triples)
    }
}

impl From<TripleMatching> for TripleRepr {
    fn from(m: TripleMatching) -> Self {
        TripleRepr {
            schema: None,
            n: m.len(),
            triples: m.triples.iter().map(|t| t.0).collect(),
        }
    }
}

impl TripleMatching {
    pub fn new(mut triples: Vec<Triple>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(triples.len() * 3);
        for t in &triples {
            for v in t.0 {
                if !seen.insert(v) {
                    return Err(Error::SharedVertex(v));
                }
            }
        }
        triples.sort_unstable();
        Ok(TripleMatching { triples })
    }

    pub fn from_arrays(arrays: &[[u32; 3]]) -> Result<Self> {
        let triples = arrays
            .iter()
            .map(|&a| Triple::new(a))
            .collect::<Result<Vec<_>>>()?;
        TripleMatching::new(triples)
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn triple(&self, i: usize) -> Triple {
        self.triples[i]
    }

    pub fn sub(&self, indices: &[usize]) -> Result<TripleMatching> {
        let mut triples = Vec::with_capacity(indices.len());
        for &i in indices {
            let t = *self.triples.get(i).ok_or(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            })?;
            triples.push(t);
        }
        TripleMatching::new(triples)
    }

    pub fn to_word(&self) -> String {
        word::triple_to_word(self)
    }

    pub fn to_json(&self) -> String {
        let mut repr = TripleRepr::from(self.clone());
        repr.schema = Some(crate::SCHEMA.to_string());
        serde_json::to_string(&repr).expect("triple matching serializes")
    }
}

impl fmt::Display for TripleMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_word())
    }
}
