//! Toolkit for ordered perfect matchings.
//!
//! An ordered matching on `[2n]` is a set of `n` vertex-disjoint edges whose
//! vertices carry a linear order. Any two edges form exactly one of three
//! configurations: an alignment (`AABB`), a nesting (`ABBA`) or a crossing
//! (`ABAB`). Matchings in which every pair is of one kind are lines, stacks
//! and waves. This crate provides
//!
//! * the value types ([`Matching`], [`TripleMatching`]) and the
//!   double-occurrence-word codec,
//! * exact largest line/stack/wave finders and constructive
//!   Erdős–Szekeres witness extraction for graph and 3-uniform matchings
//!   ([`patterns`]),
//! * extremal and canonical constructions ([`constructions`]),
//! * uniform samplers, enumeration and a seeded Monte Carlo harness
//!   ([`random`]),
//! * r-twin finders ([`twins`]).

pub mod constructions;
pub mod error;
pub mod matching;
pub mod patterns;
pub mod random;
pub mod twins;

pub use error::{Error, Result};
pub use matching::{
    classify_pair, classify_triple_pair, contains_pattern, order_isomorphic, parse_triple_word,
    parse_word, to_word, Edge, Matching, Relation, Shape, Triple, TripleMatching, TripleRelation,
};

/// Version tag written into every JSON document this crate emits.
pub const SCHEMA: &str = "matchwork/1";
