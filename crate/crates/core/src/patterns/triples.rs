use super::clique::max_clique;
use super::graph::{es_witness, EsParams};
use super::{TripleKind, TripleWitness};
use crate::error::{Error, Result};
use crate::matching::{
    classify_triple_pair, Edge, Matching, Shape, TripleMatching, TripleRelation,
};

/// Nine positive parameters `a[x][y]`, indexed by [`Shape::index`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripleEsParams {
    pub a: [[u64; 3]; 3],
}

impl TripleEsParams {
    pub fn new(a: [[u64; 3]; 3]) -> Result<Self> {
        if a.iter().flatten().any(|&v| v == 0) {
            return Err(Error::InvalidParameter(
                "all nine parameters must be positive".to_string(),
            ));
        }
        Ok(TripleEsParams { a })
    }

    pub fn uniform(v: u64) -> Result<Self> {
        Self::new([[v; 3]; 3])
    }

    pub fn get(&self, x: Shape, y: Shape) -> u64 {
        self.a[x.index()][y.index()]
    }

    /// `∏ a[x][y] + 1`.
    pub fn threshold(&self) -> u64 {
        self.a
            .iter()
            .flatten()
            .fold(1u64, |acc, &v| acc.saturating_mul(v))
            .saturating_add(1)
    }

    /// The row product `a[x][ℓ]·a[x][s]·a[x][w]`.
    fn row(&self, x: Shape) -> u64 {
        self.a[x.index()]
            .iter()
            .fold(1u64, |acc, &v| acc.saturating_mul(v))
    }

    fn row_params(&self, x: Shape) -> EsParams {
        let r = self.a[x.index()];
        EsParams {
            ell: r[0],
            s: r[1],
            w: r[2],
        }
    }
}

fn clique_where(m: &TripleMatching, keep: impl Fn(TripleRelation) -> bool) -> Vec<usize> {
    let ts = m.triples();
    max_clique(ts.len(), |i, j| {
        keep(classify_triple_pair(ts[i], ts[j]).expect("disjoint triples"))
    })
}

/// Largest set of triples pairwise in relation `rel` (exact).
pub fn largest_homogeneous_triples(m: &TripleMatching, rel: TripleRelation) -> TripleWitness {
    let idx = clique_where(m, |r| r == rel);
    TripleWitness::from_host(m, TripleKind::Relation(rel), idx)
}

/// Largest set of triples pairwise aligned or engaged (exact).
pub fn largest_semi_line(m: &TripleMatching) -> TripleWitness {
    let idx = clique_where(m, |r| TripleKind::SemiLine.admits(r));
    TripleWitness::from_host(m, TripleKind::SemiLine, idx)
}

/// Indices of a line of size at least `⌈k/2⌉` inside a semi-line of size `k`.
///
/// The engagement graph of a semi-line gives each triple at most one engaged
/// partner to its right and one to its left, so it is a union of paths;
/// every other vertex along each path is independent.
pub fn semi_line_to_line_indices(sl: &TripleMatching) -> Result<Vec<usize>> {
    let ts = sl.triples();
    let k = ts.len();
    let mut forward: Vec<Option<usize>> = vec![None; k];
    let mut backward: Vec<Option<usize>> = vec![None; k];
    for i in 0..k {
        for j in i + 1..k {
            match classify_triple_pair(ts[i], ts[j])? {
                TripleRelation::LineLine => {}
                TripleRelation::Engagement => {
                    if forward[i].is_some() || backward[j].is_some() {
                        return Err(Error::EngagementGraphNotLinearForest);
                    }
                    forward[i] = Some(j);
                    backward[j] = Some(i);
                }
                _ => return Err(Error::NotASemiLine(i, j)),
            }
        }
    }
    let mut line = Vec::with_capacity(k.div_ceil(2));
    for start in (0..k).filter(|&i| backward[i].is_none()) {
        let mut cur = Some(start);
        let mut take = true;
        while let Some(v) = cur {
            if take {
                line.push(v);
            }
            take = !take;
            cur = forward[v];
        }
    }
    line.sort_unstable();
    Ok(line)
}

pub fn semi_line_to_line(sl: &TripleMatching) -> Result<TripleMatching> {
    let idx = semi_line_to_line_indices(sl)?;
    sl.sub(&idx)
}

/// Extracts a semi-line of size `a[ℓ][ℓ]+1` or, for some `(x, y) ≠ (ℓ, ℓ)`,
/// a family of `a[x][y]+1` triples pairwise in relation `R_{x,y}`.
///
/// Two passes of [`es_witness`]: first on the pairs of the first two
/// elements of every triple with parameters given by the row products, then
/// on the pairs of the last two elements of the triples it selected, with
/// the parameters of the row that came out of the first pass.
pub fn es_witness_triples(m: &TripleMatching, p: TripleEsParams) -> Result<TripleWitness> {
    let need = p.threshold();
    if (m.len() as u64) < need {
        return Err(Error::SizeTooSmall {
            need,
            have: m.len(),
        });
    }
    let heads = Matching::from_sorted_unchecked(m.triples().iter().map(|t| t.head()).collect());
    let first = es_witness(
        &heads,
        EsParams {
            ell: p.row(Shape::Line),
            s: p.row(Shape::Stack),
            w: p.row(Shape::Wave),
        },
    )?;
    let x = first.kind;

    // heads are indexed like the triples; tails need their own left order
    let mut tails: Vec<(Edge, usize)> = first
        .embedding
        .iter()
        .map(|&i| (m.triple(i).tail(), i))
        .collect();
    tails.sort_unstable();
    let tail_matching = Matching::from_sorted_unchecked(tails.iter().map(|&(e, _)| e).collect());
    let second = es_witness(&tail_matching, p.row_params(x))?;
    let y = second.kind;

    let chosen: Vec<usize> = second.embedding.iter().map(|&k| tails[k].1).collect();
    let kind = if (x, y) == (Shape::Line, Shape::Line) {
        TripleKind::SemiLine
    } else {
        TripleKind::Relation(TripleRelation::from_indices(x, y))
    };
    let wit = TripleWitness::from_host(m, kind, chosen);
    debug_assert!(wit.verify(m));
    Ok(wit)
}
