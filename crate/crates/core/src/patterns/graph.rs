use super::lis::{longest_decreasing, longest_increasing};
use super::EsWitness;
use crate::error::{Error, Result};
use crate::matching::{Matching, Shape};

/// Parameters `(ℓ, s, w)` of the line/stack/wave guarantee.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EsParams {
    pub ell: u64,
    pub s: u64,
    pub w: u64,
}

impl EsParams {
    pub fn new(ell: u64, s: u64, w: u64) -> Result<Self> {
        if ell == 0 || s == 0 || w == 0 {
            return Err(Error::InvalidParameter(
                "ℓ, s and w must be positive".to_string(),
            ));
        }
        Ok(EsParams { ell, s, w })
    }

    /// The smallest size that forces a witness: `ℓ·s·w + 1`.
    pub fn threshold(&self) -> u64 {
        self.ell
            .saturating_mul(self.s)
            .saturating_mul(self.w)
            .saturating_add(1)
    }
}

/// Largest set of pairwise aligned edges (interval scheduling by right end).
pub fn largest_line(m: &Matching) -> EsWitness {
    let mut order: Vec<usize> = (0..m.len()).collect();
    order.sort_unstable_by_key(|&i| m.edge(i).right);
    let mut picked = Vec::new();
    let mut last_right = 0;
    for i in order {
        let e = m.edge(i);
        if e.left > last_right {
            picked.push(i);
            last_right = e.right;
        }
    }
    EsWitness::from_host(m, Shape::Line, picked)
}

/// Largest stack: a longest strictly decreasing run of right ends.
pub fn largest_stack(m: &Matching) -> EsWitness {
    let rights: Vec<u32> = m.edges().iter().map(|e| e.right).collect();
    EsWitness::from_host(m, Shape::Stack, longest_decreasing(&rights))
}

/// Largest wave.
///
/// For each candidate first edge `f`, the rest of a wave starting at `f`
/// lies among edges with left end inside `f` and right end beyond it; those
/// pairwise cross exactly when their right ends increase, so a longest
/// increasing run of right ends completes the wave.
pub fn largest_wave(m: &Matching) -> EsWitness {
    let edges = m.edges();
    let mut best: Vec<usize> = Vec::new();
    let mut rights = Vec::new();
    let mut idx = Vec::new();
    for (i, f) in edges.iter().enumerate() {
        let hi = edges.partition_point(|e| e.left < f.right);
        if hi - i <= best.len() {
            continue;
        }
        rights.clear();
        idx.clear();
        for (j, e) in edges.iter().enumerate().take(hi).skip(i + 1) {
            if e.right > f.right {
                rights.push(e.right);
                idx.push(j);
            }
        }
        if rights.len() < best.len() {
            continue;
        }
        let chain = longest_increasing(&rights);
        if chain.len() + 1 > best.len() {
            best = std::iter::once(i)
                .chain(chain.iter().map(|&k| idx[k]))
                .collect();
        }
    }
    EsWitness::from_host(m, Shape::Wave, best)
}

pub fn largest_shape(m: &Matching, shape: Shape) -> EsWitness {
    match shape {
        Shape::Line => largest_line(m),
        Shape::Stack => largest_stack(m),
        Shape::Wave => largest_wave(m),
    }
}

/// A matching with no nesting pair: right ends ascend with left ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Landscape(Matching);

impl Landscape {
    pub fn new(m: Matching) -> Result<Self> {
        if let Some(i) = m.edges().windows(2).position(|w| w[0].right > w[1].right) {
            return Err(Error::NotALandscape(i, i + 1));
        }
        Ok(Landscape(m))
    }

    pub fn matching(&self) -> &Matching {
        &self.0
    }

    /// Greedy wave decomposition as consecutive index blocks.
    ///
    /// Each block is a first edge plus every later edge whose left end lies
    /// inside it. Blocks are waves; their first edges form a line.
    pub fn decompose(&self) -> Vec<Vec<usize>> {
        let edges = self.0.edges();
        let mut blocks = Vec::new();
        let mut start = 0;
        while start < edges.len() {
            let first = edges[start];
            let mut end = start + 1;
            while end < edges.len() && edges[end].left < first.right {
                end += 1;
            }
            blocks.push((start..end).collect());
            start = end;
        }
        blocks
    }
}

pub fn decompose_landscape(m: &Matching) -> Result<Vec<Vec<usize>>> {
    Ok(Landscape::new(m.clone())?.decompose())
}

/// Prefix-maximum Fenwick tree over `(score, edge index)`.
struct MaxFenwick {
    tree: Vec<(u32, usize)>,
}

impl MaxFenwick {
    fn new(n: usize) -> Self {
        MaxFenwick {
            tree: vec![(0, usize::MAX); n + 1],
        }
    }

    fn better(a: (u32, usize), b: (u32, usize)) -> bool {
        a.0 > b.0 || (a.0 == b.0 && a.1 < b.1)
    }

    /// Positions are 1-based.
    fn update(&mut self, mut pos: usize, val: (u32, usize)) {
        while pos < self.tree.len() {
            if Self::better(val, self.tree[pos]) {
                self.tree[pos] = val;
            }
            pos += pos & pos.wrapping_neg();
        }
    }

    /// Maximum over positions `1..=pos`.
    fn query(&self, mut pos: usize) -> (u32, usize) {
        let mut best = (0, usize::MAX);
        while pos > 0 {
            if Self::better(self.tree[pos], best) {
                best = self.tree[pos];
            }
            pos -= pos & pos.wrapping_neg();
        }
        best
    }
}

fn follow(parent: &[Option<usize>], start: usize) -> Vec<usize> {
    let mut out = vec![start];
    let mut cur = start;
    while let Some(p) = parent[cur] {
        out.push(p);
        cur = p;
    }
    out
}

/// Extracts a line of size `ℓ+1`, a stack of size `s+1` or a wave of size
/// `w+1` from a matching with more than `ℓ·s·w` edges.
///
/// For every edge `e_i` it computes `s_i`, the largest stack whose leftmost
/// edge is `e_i`, and `L_i`, the largest landscape whose leftmost edge is
/// `e_i`, by a right-to-left sweep. Two edges always differ in one of the two
/// scores, so either some `s_i > s` (the stack is returned) or some
/// `L_i > ℓ·w`; in the latter case the landscape is split greedily into
/// waves and either their first edges form a line longer than `ℓ` or some
/// wave is longer than `w`.
pub fn es_witness(m: &Matching, p: EsParams) -> Result<EsWitness> {
    let n = m.len();
    let need = p.threshold();
    if (n as u64) < need {
        return Err(Error::SizeTooSmall { need, have: n });
    }
    let edges = m.edges();
    let mut by_right: Vec<u32> = edges.iter().map(|e| e.right).collect();
    by_right.sort_unstable();
    let rank = |v: u32| by_right.binary_search(&v).unwrap() + 1;

    let mut stack_tree = MaxFenwick::new(n);
    let mut land_tree = MaxFenwick::new(n);
    let mut stack_score = vec![0u32; n];
    let mut land_score = vec![0u32; n];
    let mut stack_next = vec![None; n];
    let mut land_next = vec![None; n];
    for i in (0..n).rev() {
        let r = rank(edges[i].right);
        // later edges with smaller right end nest inside e_i
        let (s, j) = stack_tree.query(r - 1);
        stack_score[i] = s + 1;
        stack_next[i] = (s > 0).then_some(j);
        // later edges with larger right end continue a landscape
        let (l, j) = land_tree.query(n - r);
        land_score[i] = l + 1;
        land_next[i] = (l > 0).then_some(j);
        stack_tree.update(r, (stack_score[i], i));
        land_tree.update(n + 1 - r, (land_score[i], i));
    }

    let top_stack = (0..n)
        .max_by_key(|&i| (stack_score[i], std::cmp::Reverse(i)))
        .unwrap();
    if u64::from(stack_score[top_stack]) > p.s {
        return Ok(EsWitness::from_host(
            m,
            Shape::Stack,
            follow(&stack_next, top_stack),
        ));
    }

    let top_land = (0..n)
        .max_by_key(|&i| (land_score[i], std::cmp::Reverse(i)))
        .unwrap();
    assert!(
        u64::from(land_score[top_land]) > p.ell.saturating_mul(p.w),
        "score pairs are distinct, so a long landscape must exist"
    );
    let land_idx = follow(&land_next, top_land);
    let landscape =
        Landscape::new(m.sub(&land_idx)?).expect("landscape recovered from the score sweep");
    let blocks = landscape.decompose();
    if blocks.len() as u64 > p.ell {
        let line = blocks.iter().map(|b| land_idx[b[0]]).collect();
        return Ok(EsWitness::from_host(m, Shape::Line, line));
    }
    let widest = blocks
        .iter()
        .max_by_key(|b| (b.len(), std::cmp::Reverse(b[0])))
        .expect("non-empty landscape");
    debug_assert!(widest.len() as u64 > p.w);
    let wave = widest.iter().map(|&k| land_idx[k]).collect();
    Ok(EsWitness::from_host(m, Shape::Wave, wave))
}
