//! Pairwise relations between edges and between triples.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Edge, Triple};
use crate::error::{Error, Result};

/// How two disjoint edges sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    /// `AABB`
    Alignment,
    /// `ABBA`
    Nesting,
    /// `ABAB`
    Crossing,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::Alignment, Relation::Nesting, Relation::Crossing];

    /// The homogeneous structure built from this relation.
    pub fn shape(self) -> Shape {
        match self {
            Relation::Alignment => Shape::Line,
            Relation::Nesting => Shape::Stack,
            Relation::Crossing => Shape::Wave,
        }
    }
}

/// Line, stack or wave: the matchings in which every pair is aligned,
/// nesting or crossing, respectively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Line,
    Stack,
    Wave,
}

impl Shape {
    pub const ALL: [Shape; 3] = [Shape::Line, Shape::Stack, Shape::Wave];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn relation(self) -> Relation {
        match self {
            Shape::Line => Relation::Alignment,
            Shape::Stack => Relation::Nesting,
            Shape::Wave => Relation::Crossing,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Shape::Line => 'l',
            Shape::Stack => 's',
            Shape::Wave => 'w',
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Line => "line",
            Shape::Stack => "stack",
            Shape::Wave => "wave",
        })
    }
}

/// Classifies two disjoint edges; argument order does not matter.
pub fn classify_pair(e: Edge, f: Edge) -> Result<Relation> {
    for v in [f.left, f.right] {
        if e.contains_vertex(v) {
            return Err(Error::SharedVertex(v));
        }
    }
    let (e, f) = if e.left < f.left { (e, f) } else { (f, e) };
    Ok(if e.right < f.left {
        Relation::Alignment
    } else if f.right < e.right {
        Relation::Nesting
    } else {
        Relation::Crossing
    })
}

/// The ten ways two disjoint triples can interleave.
///
/// Every relation other than the engagement is the merge of a graph relation
/// on the first two elements (`x`) with one on the last two (`y`); see
/// [`TripleRelation::indices`]. The alignment and the engagement both merge
/// two graph alignments; the engagement is the starred variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TripleRelation {
    /// `AAABBB`
    LineLine,
    /// `AABABB`, the engagement
    Engagement,
    /// `AABBBA`
    LineStack,
    /// `AABBAB`
    LineWave,
    /// `ABBBAA`
    StackLine,
    /// `ABBAAB`
    StackStack,
    /// `ABBABA`
    StackWave,
    /// `ABAABB`
    WaveLine,
    /// `ABABBA`
    WaveStack,
    /// `ABABAB`
    WaveWave,
}

impl TripleRelation {
    pub const ALL: [TripleRelation; 10] = [
        TripleRelation::LineLine,
        TripleRelation::Engagement,
        TripleRelation::LineStack,
        TripleRelation::LineWave,
        TripleRelation::StackLine,
        TripleRelation::StackStack,
        TripleRelation::StackWave,
        TripleRelation::WaveLine,
        TripleRelation::WaveStack,
        TripleRelation::WaveWave,
    ];

    pub fn word(self) -> &'static str {
        match self {
            TripleRelation::LineLine => "AAABBB",
            TripleRelation::Engagement => "AABABB",
            TripleRelation::LineStack => "AABBBA",
            TripleRelation::LineWave => "AABBAB",
            TripleRelation::StackLine => "ABBBAA",
            TripleRelation::StackStack => "ABBAAB",
            TripleRelation::StackWave => "ABBABA",
            TripleRelation::WaveLine => "ABAABB",
            TripleRelation::WaveStack => "ABABBA",
            TripleRelation::WaveWave => "ABABAB",
        }
    }

    /// `(x, y)`: the relation of the head pairs and of the tail pairs.
    pub fn indices(self) -> (Shape, Shape) {
        use Shape::*;
        match self {
            TripleRelation::LineLine | TripleRelation::Engagement => (Line, Line),
            TripleRelation::LineStack => (Line, Stack),
            TripleRelation::LineWave => (Line, Wave),
            TripleRelation::StackLine => (Stack, Line),
            TripleRelation::StackStack => (Stack, Stack),
            TripleRelation::StackWave => (Stack, Wave),
            TripleRelation::WaveLine => (Wave, Line),
            TripleRelation::WaveStack => (Wave, Stack),
            TripleRelation::WaveWave => (Wave, Wave),
        }
    }

    pub fn is_starred(self) -> bool {
        self == TripleRelation::Engagement
    }

    /// Whether arbitrarily large families can be pairwise in this relation.
    pub fn is_collectable(self) -> bool {
        self != TripleRelation::Engagement
    }

    /// Inverse of [`indices`](Self::indices) for unstarred relations; the
    /// `(Line, Line)` pair maps to the alignment.
    pub fn from_indices(x: Shape, y: Shape) -> TripleRelation {
        TripleRelation::ALL
            .into_iter()
            .find(|r| !r.is_starred() && r.indices() == (x, y))
            .expect("every index pair has an unstarred relation")
    }

    pub fn from_word(word: &str) -> Option<TripleRelation> {
        TripleRelation::ALL.into_iter().find(|r| r.word() == word)
    }

    /// Short key such as `ww` or `ll*`.
    pub fn key(self) -> String {
        let (x, y) = self.indices();
        let mut s = format!("{}{}", x.symbol(), y.symbol());
        if self.is_starred() {
            s.push('*');
        }
        s
    }
}

impl fmt::Display for TripleRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word())
    }
}

/// Classifies two disjoint triples by the word of their merged order.
pub fn classify_triple_pair(e: Triple, f: Triple) -> Result<TripleRelation> {
    let (e, f) = if e.first() < f.first() {
        (e, f)
    } else {
        (f, e)
    };
    let mut word = [0u8; 6];
    let (mut i, mut j) = (0, 0);
    for slot in word.iter_mut() {
        if j == 3 || (i < 3 && e.0[i] < f.0[j]) {
            *slot = b'A';
            i += 1;
        } else if i == 3 || f.0[j] < e.0[i] {
            *slot = b'B';
            j += 1;
        } else {
            return Err(Error::SharedVertex(e.0[i]));
        }
    }
    let word = std::str::from_utf8(&word).expect("ascii");
    Ok(TripleRelation::from_word(word).expect("normalized merge words are all listed"))
}
