use super::{classify_pair, Matching, Relation};

/// True iff both matchings have the same size and the same rank-normalized edges.
pub fn order_isomorphic(m1: &Matching, m2: &Matching) -> bool {
    m1.len() == m2.len() && m1.normalized() == m2.normalized()
}

/// Finds an ordered copy of `pattern` in `host`.
///
/// Returns the lexicographically first embedding as increasing host edge
/// indices, or `None`. The search assigns host edges to pattern edges in
/// left-endpoint order and prunes on pairwise relations; matching every
/// pairwise relation fixes the relative order of all endpoints, so a full
/// assignment is an ordered copy.
pub fn contains_pattern(host: &Matching, pattern: &Matching) -> Option<Vec<usize>> {
    let k = pattern.len();
    if k > host.len() {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    let want: Vec<Vec<Relation>> = (0..k)
        .map(|i| {
            (0..i)
                .map(|j| classify_pair(pattern.edge(j), pattern.edge(i)).expect("disjoint"))
                .collect()
        })
        .collect();
    let mut chosen = Vec::with_capacity(k);
    if extend(host, &want, &mut chosen, 0) {
        Some(chosen)
    } else {
        None
    }
}

fn extend(host: &Matching, want: &[Vec<Relation>], chosen: &mut Vec<usize>, from: usize) -> bool {
    let depth = chosen.len();
    if depth == want.len() {
        return true;
    }
    let remaining = want.len() - depth;
    for h in from..=host.len() - remaining {
        let e = host.edge(h);
        let ok = chosen.iter().zip(&want[depth]).all(|(&c, &rel)| {
            classify_pair(host.edge(c), e).expect("host edges are disjoint") == rel
        });
        if ok {
            chosen.push(h);
            if extend(host, want, chosen, h + 1) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::parse_word;

    fn w(s: &str) -> Matching {
        parse_word(s).unwrap()
    }

    #[test]
    fn isomorphism_by_ranks() {
        let a = w("ABAB");
        let b = Matching::from_pairs(&[(10, 30), (20, 40)]).unwrap();
        assert!(order_isomorphic(&a, &b));
        assert!(!order_isomorphic(&w("AABB"), &w("ABBA")));
        assert!(!order_isomorphic(&w("AABB"), &w("AA")));
    }

    #[test]
    fn pattern_examples() {
        let host = w("ABABCC");
        // lexicographically first copy of AABB is {A, C}
        assert_eq!(contains_pattern(&host, &w("AABB")), Some(vec![0, 2]));
        assert!(order_isomorphic(&host.sub(&[1, 2]).unwrap(), &w("AABB")));
        assert_eq!(contains_pattern(&w("AABB"), &w("ABAB")), None);
        assert_eq!(contains_pattern(&host, &host), Some(vec![0, 1, 2]));
        assert_eq!(contains_pattern(&w("AA"), &w("AABB")), None);
    }

    /// Exhaustive subset search as an independent oracle.
    fn brute(host: &Matching, pattern: &Matching) -> Option<Vec<usize>> {
        let n = host.len();
        let target = pattern.normalized();
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != pattern.len() {
                continue;
            }
            let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if host.sub(&idx).unwrap().normalized() == target
                && best.as_ref().is_none_or(|b| idx < *b)
            {
                best = Some(idx);
            }
        }
        best
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for trial in 0..300 {
            let n = 1 + trial % 8;
            let k = 1 + trial % 4;
            let gen = |n: usize, rng: &mut rand_chacha::ChaCha8Rng| {
                let mut v: Vec<u32> = (1..=2 * n as u32).collect();
                v.shuffle(rng);
                let pairs: Vec<_> = v.chunks(2).map(|c| (c[0], c[1])).collect();
                Matching::from_pairs(&pairs).unwrap()
            };
            let host = gen(n, &mut rng);
            let pat = gen(k, &mut rng);
            assert_eq!(
                contains_pattern(&host, &pat),
                brute(&host, &pat),
                "{host} {pat}"
            );
        }
    }
}
