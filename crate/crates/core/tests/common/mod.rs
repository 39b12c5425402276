//! Brute-force oracles shared by the integration tests. Deliberately naive:
//! they enumerate subsets or labelings and share no code with the library
//! beyond the value types.
#![allow(dead_code)]

use matchwork::{Edge, Matching, Relation, Shape, Triple, TripleMatching, TripleRelation};

/// Relation of two edges from the raw endpoint order.
pub fn relation(e: Edge, f: Edge) -> Relation {
    let (e, f) = if e.left < f.left { (e, f) } else { (f, e) };
    if e.right < f.left {
        Relation::Alignment
    } else if f.right < e.right {
        Relation::Nesting
    } else {
        Relation::Crossing
    }
}

pub fn shape_relation(s: Shape) -> Relation {
    match s {
        Shape::Line => Relation::Alignment,
        Shape::Stack => Relation::Nesting,
        Shape::Wave => Relation::Crossing,
    }
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

/// Largest subset of edges pairwise in the relation of `shape`.
pub fn brute_largest(m: &Matching, shape: Shape) -> usize {
    let want = shape_relation(shape);
    let e = m.edges();
    subsets(m.len())
        .filter(|s| {
            s.iter()
                .enumerate()
                .all(|(a, &i)| s[a + 1..].iter().all(|&j| relation(e[i], e[j]) == want))
        })
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Word of a pair of triples, spelled from the merged order of their points.
pub fn triple_word(t: Triple, u: Triple) -> String {
    let (t, u) = if t.0[0] < u.0[0] { (t, u) } else { (u, t) };
    let mut pts: Vec<(u32, char)> = t.0.iter().map(|&v| (v, 'A')).collect();
    pts.extend(u.0.iter().map(|&v| (v, 'B')));
    pts.sort_unstable();
    pts.into_iter().map(|(_, c)| c).collect()
}

pub fn brute_homogeneous(m: &TripleMatching, rel: TripleRelation) -> usize {
    let ts = m.triples();
    subsets(m.len())
        .filter(|s| {
            s.iter().enumerate().all(|(a, &i)| {
                s[a + 1..]
                    .iter()
                    .all(|&j| triple_word(ts[i], ts[j]) == rel.word())
            })
        })
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Canonical form of a set of edges: the word of its rank relabelling.
fn pattern_word(edges: &[Edge]) -> String {
    let mut pts: Vec<(u32, usize)> = edges
        .iter()
        .enumerate()
        .flat_map(|(k, e)| [(e.left, k), (e.right, k)])
        .collect();
    pts.sort_unstable();
    let mut name = vec![None; edges.len()];
    let mut next = 0u8;
    pts.into_iter()
        .map(|(_, k)| {
            *name[k].get_or_insert_with(|| {
                next += 1;
                (b'A' + next - 1) as char
            })
        })
        .collect()
}

/// Largest r-twins by labelling every edge with a colour in `0..=r`
/// (0 = unused) and comparing the patterns of the colour classes.
pub fn brute_twins(m: &Matching, r: usize) -> usize {
    let n = m.len();
    let total = (r + 1).pow(n as u32);
    let mut best = 0;
    for code in 0..total {
        let mut c = code;
        let mut classes = vec![Vec::new(); r];
        for i in 0..n {
            let colour = c % (r + 1);
            c /= r + 1;
            if colour > 0 {
                classes[colour - 1].push(m.edge(i));
            }
        }
        let k = classes[0].len();
        if k <= best || classes.iter().any(|s| s.len() != k) {
            continue;
        }
        let first = pattern_word(&classes[0]);
        if classes.iter().all(|s| pattern_word(s) == first) {
            best = k;
        }
    }
    best
}

/// Longest r-twins in a permutation by colour labelling.
pub fn brute_perm_twins(pi: &[u32], r: usize) -> usize {
    let n = pi.len();
    let total = (r + 1).pow(n as u32);
    let pattern = |vals: &[u32]| -> Vec<usize> {
        vals.iter()
            .map(|v| vals.iter().filter(|&&u| u < *v).count())
            .collect()
    };
    let mut best = 0;
    for code in 0..total {
        let mut c = code;
        let mut classes = vec![Vec::new(); r];
        for &v in pi {
            let colour = c % (r + 1);
            c /= r + 1;
            if colour > 0 {
                classes[colour - 1].push(v);
            }
        }
        let k = classes[0].len();
        if k <= best || classes.iter().any(|s| s.len() != k) {
            continue;
        }
        let first = pattern(&classes[0]);
        if classes.iter().all(|s| pattern(s) == first) {
            best = k;
        }
    }
    best
}

/// Smallest integer `c` with `c³ ≥ n`.
pub fn ceil_cbrt(n: usize) -> usize {
    (0..).find(|c: &usize| c * c * c >= n).unwrap()
}
