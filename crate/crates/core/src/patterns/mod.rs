//! Largest homogeneous sub-structures and Erdős–Szekeres witnesses.
//!
//! Graph matchings: exact largest line, stack and wave, the landscape
//! decomposition, and [`es_witness`], which extracts a line, stack or wave
//! guaranteed by the `n > ℓ·s·w` bound. Triple matchings: exact maxima for
//! each of the ten pair relations via clique search, semi-lines, and the
//! two-stage [`es_witness_triples`].

mod clique;
mod graph;
pub mod lis;
mod triples;

use serde::Serialize;

use crate::matching::{
    classify_pair, classify_triple_pair, Matching, Shape, TripleMatching, TripleRelation,
};

pub use clique::max_clique;
pub use graph::{
    decompose_landscape, es_witness, largest_line, largest_shape, largest_stack, largest_wave,
    EsParams, Landscape,
};
pub use triples::{
    es_witness_triples, largest_homogeneous_triples, largest_semi_line, semi_line_to_line,
    semi_line_to_line_indices, TripleEsParams,
};

/// A homogeneous sub-matching together with its position in the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EsWitness {
    pub kind: Shape,
    /// Increasing indices into the host's edge list.
    pub embedding: Vec<usize>,
    pub sub: Matching,
}

impl EsWitness {
    pub(crate) fn from_host(host: &Matching, kind: Shape, mut embedding: Vec<usize>) -> Self {
        embedding.sort_unstable();
        let sub = host
            .sub(&embedding)
            .expect("embedding indices come from the host");
        EsWitness {
            kind,
            embedding,
            sub,
        }
    }

    pub fn size(&self) -> usize {
        self.embedding.len()
    }

    /// Re-checks the witness against `host` pair by pair.
    pub fn verify(&self, host: &Matching) -> bool {
        let in_range = self.embedding.iter().all(|&i| i < host.len());
        let increasing = self.embedding.windows(2).all(|w| w[0] < w[1]);
        if !in_range || !increasing {
            return false;
        }
        let edges: Vec<_> = self.embedding.iter().map(|&i| host.edge(i)).collect();
        if edges != self.sub.edges() {
            return false;
        }
        let want = self.kind.relation();
        edges.iter().enumerate().all(|(i, &e)| {
            edges[i + 1..]
                .iter()
                .all(|&f| classify_pair(e, f) == Ok(want))
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind.to_string(),
            "size": self.size(),
            "edges": self.sub.edges().iter().map(|e| [e.left, e.right]).collect::<Vec<_>>(),
            "embedding": self.embedding,
        })
    }
}

/// Kind of a 3-uniform witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TripleKind {
    /// Every pair in the given relation.
    Relation(TripleRelation),
    /// Every pair aligned or engaged.
    SemiLine,
}

impl TripleKind {
    pub fn admits(self, r: TripleRelation) -> bool {
        match self {
            TripleKind::Relation(want) => r == want,
            TripleKind::SemiLine => {
                matches!(r, TripleRelation::LineLine | TripleRelation::Engagement)
            }
        }
    }

    pub fn name(self) -> String {
        match self {
            TripleKind::Relation(r) => r.word().to_string(),
            TripleKind::SemiLine => "semi-line".to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleWitness {
    pub kind: TripleKind,
    pub embedding: Vec<usize>,
    pub sub: TripleMatching,
}

impl TripleWitness {
    pub(crate) fn from_host(
        host: &TripleMatching,
        kind: TripleKind,
        mut embedding: Vec<usize>,
    ) -> Self {
        embedding.sort_unstable();
        let sub = host
            .sub(&embedding)
            .expect("embedding indices come from the host");
        TripleWitness {
            kind,
            embedding,
            sub,
        }
    }

    pub fn size(&self) -> usize {
        self.embedding.len()
    }

    pub fn verify(&self, host: &TripleMatching) -> bool {
        let in_range = self.embedding.iter().all(|&i| i < host.len());
        let increasing = self.embedding.windows(2).all(|w| w[0] < w[1]);
        if !in_range || !increasing {
            return false;
        }
        let ts: Vec<_> = self.embedding.iter().map(|&i| host.triple(i)).collect();
        if ts != self.sub.triples() {
            return false;
        }
        ts.iter().enumerate().all(|(i, &a)| {
            ts[i + 1..]
                .iter()
                .all(|&b| classify_triple_pair(a, b).is_ok_and(|r| self.kind.admits(r)))
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind.name(),
            "size": self.size(),
            "triples": self.sub.triples().iter().map(|t| t.0).collect::<Vec<_>>(),
            "embedding": self.embedding,
        })
    }
}
