//! Double (and triple) occurrence word codec.
//!
//! Compact form: one capital letter per position (`ABABCC`), at most 26
//! letters. Extended form: whitespace-separated tokens (`A1 B1 A1 B1`), used
//! automatically when a word has more than 26 letters.

use std::collections::HashMap;

use super::{Edge, Matching, Triple, TripleMatching};
use crate::error::{Error, Result};

/// Output of [`parse_any`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMatching {
    Graph(Matching),
    Triples(TripleMatching),
}

fn tokenize(text: &str) -> Result<Vec<&str>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    if text.chars().any(char::is_whitespace) {
        return Ok(text.split_whitespace().collect());
    }
    text.char_indices()
        .enumerate()
        .map(|(pos, (offset, ch))| {
            if ch.is_ascii_uppercase() {
                Ok(&text[offset..offset + 1])
            } else {
                Err(Error::InvalidCharacter {
                    ch,
                    position: pos + 1,
                })
            }
        })
        .collect()
}

/// Groups 1-based positions by token, in order of first occurrence, and
/// checks every token occurs exactly `arity` times.
fn positions(text: &str, arity: usize) -> Result<Vec<Vec<u32>>> {
    let tokens = tokenize(text)?;
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut groups: Vec<(&str, Vec<u32>)> = Vec::new();
    for (pos, tok) in tokens.iter().enumerate() {
        let slot = *index.entry(tok).or_insert_with(|| {
            groups.push((tok, Vec::new()));
            groups.len() - 1
        });
        groups[slot].1.push(pos as u32 + 1);
    }
    for (tok, ps) in &groups {
        if ps.len() != arity {
            return Err(Error::LetterCount {
                token: tok.to_string(),
                count: ps.len(),
                expected: arity,
                position: ps[0] as usize,
            });
        }
    }
    Ok(groups.into_iter().map(|(_, ps)| ps).collect())
}

/// Parses a double-occurrence word: the two positions of each token become an edge.
pub fn parse_word(text: &str) -> Result<Matching> {
    let edges = positions(text, 2)?
        .into_iter()
        .map(|ps| Edge {
            left: ps[0],
            right: ps[1],
        })
        .collect();
    Ok(Matching::from_sorted_unchecked(edges))
}

/// Parses a triple-occurrence word.
pub fn parse_triple_word(text: &str) -> Result<TripleMatching> {
    let triples = positions(text, 3)?
        .into_iter()
        .map(|ps| Triple([ps[0], ps[1], ps[2]]))
        .collect();
    TripleMatching::new(triples)
}

/// Parses with an explicit arity (2 or 3).
pub fn parse_any(text: &str, arity: usize) -> Result<AnyMatching> {
    match arity {
        2 => parse_word(text).map(AnyMatching::Graph),
        3 => parse_triple_word(text).map(AnyMatching::Triples),
        _ => Err(Error::InvalidParameter(format!(
            "arity must be 2 or 3, got {arity}"
        ))),
    }
}

fn token(i: usize, compact: bool) -> String {
    let letter = (b'A' + (i % 26) as u8) as char;
    if compact {
        letter.to_string()
    } else {
        format!("{letter}{}", i / 26 + 1)
    }
}

/// Renders `groups[i]` (vertex labels of element `i`) as a word with letters
/// assigned in order of each element's smallest vertex.
fn render(groups: &[&[u32]]) -> String {
    let mut occ: Vec<(u32, usize)> = groups
        .iter()
        .enumerate()
        .flat_map(|(i, vs)| vs.iter().map(move |&v| (v, i)))
        .collect();
    occ.sort_unstable();
    let compact = groups.len() <= 26;
    let names: Vec<String> = (0..groups.len()).map(|i| token(i, compact)).collect();
    let parts = occ.iter().map(|&(_, i)| names[i].as_str());
    if compact {
        parts.collect()
    } else {
        parts.collect::<Vec<_>>().join(" ")
    }
}

/// Canonical word of a matching, letters assigned by left endpoint.
///
/// Sub-matchings are rendered after rank normalization.
pub fn to_word(m: &Matching) -> String {
    let pairs: Vec<[u32; 2]> = m.edges().iter().map(|e| [e.left, e.right]).collect();
    let groups: Vec<&[u32]> = pairs.iter().map(|p| &p[..]).collect();
    render(&groups)
}

pub(super) fn triple_to_word(m: &TripleMatching) -> String {
    let groups: Vec<&[u32]> = m.triples().iter().map(|t| &t.0[..]).collect();
    render(&groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_sample_words() {
        let m = parse_word("ABABCC").unwrap();
        assert_eq!(m, Matching::from_pairs(&[(1, 3), (2, 4), (5, 6)]).unwrap());
        assert_eq!(
            parse_word("AABB").unwrap(),
            Matching::from_pairs(&[(1, 2), (3, 4)]).unwrap()
        );
    }

    #[test]
    fn letter_count_errors() {
        match parse_word("ABA") {
            Err(Error::LetterCount { token, count, .. }) => {
                assert_eq!(token, "B");
                assert_eq!(count, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(parse_word(""), Err(Error::EmptyInput));
        assert_eq!(parse_word("   "), Err(Error::EmptyInput));
        assert!(matches!(
            parse_word("AaBB"),
            Err(Error::InvalidCharacter {
                ch: 'a',
                position: 2
            })
        ));
        assert!(parse_triple_word("AABB").is_err());
    }

    #[test]
    fn extended_tokens() {
        let m = parse_word("A1 B1 A1 B1").unwrap();
        assert_eq!(m.to_word(), "ABAB");
        let t = parse_triple_word("x y x y x y").unwrap();
        assert_eq!(t.to_word(), "ABABAB");
    }

    #[test]
    fn to_word_examples() {
        let n = Matching::from_pairs(&[(1, 5), (2, 3), (4, 6)]).unwrap();
        assert_eq!(to_word(&n), "ABBCAC");
        assert_eq!(to_word(&Matching::from_pairs(&[(1, 2)]).unwrap()), "AA");
    }

    #[test]
    fn large_words_use_extended_form() {
        let pairs: Vec<(u32, u32)> = (0..30).map(|i| (2 * i + 1, 2 * i + 2)).collect();
        let m = Matching::from_pairs(&pairs).unwrap();
        let w = m.to_word();
        assert!(w.starts_with("A1 A1 B1 B1"));
        assert!(w.contains("Z1 Z1 A2 A2"));
        assert_eq!(parse_word(&w).unwrap(), m);
    }

    #[test]
    fn relettering_is_canonical() {
        assert_eq!(parse_word("BABA").unwrap().to_word(), "ABAB");
        assert_eq!(parse_word("QQZZ").unwrap().to_word(), "AABB");
    }

    fn arb_perfect(max_n: usize) -> impl Strategy<Value = Matching> {
        (1..=max_n)
            .prop_flat_map(|n| Just((1..=2 * n as u32).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|p| {
                let pairs: Vec<_> = p.chunks(2).map(|c| (c[0], c[1])).collect();
                Matching::from_pairs(&pairs).unwrap()
            })
    }

    proptest! {
        #[test]
        fn parse_inverts_to_word(m in arb_perfect(40)) {
            prop_assert_eq!(parse_word(&to_word(&m)).unwrap(), m);
        }
    }
}
