//! Bracketings of a path and the face poset of the associahedron.
//!
//! A bracketing is a laminar family of brackets: closed intervals of at least
//! two consecutive nodes, pairwise nested or disjoint. Bracketings of a path
//! with `n` nodes, ordered by reverse inclusion of bracket sets, form the face
//! poset of the associahedron `K_n` (dimension `n - 2`); the codimension of a
//! face is the number of brackets, and the empty bracketing is the whole
//! polytope. Frames with fixed endpoints model the unit interval with pinned
//! particles at `0` and `1`; a bracket may contain at most one fixed node.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde_json::json;
use thiserror::Error;

use crate::laminar;
use crate::poset::GradedPoset;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BracketError {
    #[error("bracket ({start},{end}) is not valid on this frame")]
    InvalidBracket { start: usize, end: usize },
    #[error("bracketings live on different frames")]
    FrameMismatch,
    #[error("bracketings are incompatible: superimposed brackets intersect")]
    Incompatible,
    #[error("brackets are not pairwise laminar")]
    NotLaminar,
}

/// A path of nodes, optionally with both endpoints fixed.
///
/// Node positions are 0-based over the full node sequence; with fixed ends
/// the fixed nodes sit at positions `0` and `total - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathFrame {
    free: usize,
    fixed_ends: bool,
}

impl PathFrame {
    /// Plain path with `free` nodes and no fixed nodes.
    pub fn free(free: usize) -> PathFrame {
        assert!(free >= 1, "a path frame needs at least one node");
        PathFrame { free, fixed_ends: false }
    }

    /// Path with `free` interior nodes and a fixed node at each end.
    pub fn fixed_ends(free: usize) -> PathFrame {
        assert!(free >= 1, "a fixed-end frame needs at least one free node");
        PathFrame { free, fixed_ends: true }
    }

    pub fn num_free(&self) -> usize {
        self.free
    }

    pub fn has_fixed_ends(&self) -> bool {
        self.fixed_ends
    }

    /// Total number of nodes including fixed ones.
    pub fn total_nodes(&self) -> usize {
        self.free + if self.fixed_ends { 2 } else { 0 }
    }

    pub fn is_fixed(&self, position: usize) -> bool {
        self.fixed_ends && (position == 0 || position == self.total_nodes() - 1)
    }

    /// Largest possible number of brackets in one bracketing, i.e. the
    /// codimension of the vertices of the associated polytope.
    pub fn max_codim(&self) -> usize {
        if self.fixed_ends {
            self.total_nodes() - 2
        } else {
            self.free.saturating_sub(2)
        }
    }

    fn is_valid_bracket(&self, b: Bracket) -> bool {
        let total = self.total_nodes();
        if b.end <= b.start || b.end >= total {
            return false;
        }
        if self.fixed_ends {
            // At most one fixed node: the interval may touch one end only.
            !(b.start == 0 && b.end == total - 1)
        } else {
            // Proper subinterval; the full bracket is the cone point.
            b.end - b.start + 1 < total
        }
    }

    /// All valid brackets, sorted by `(start, end)`.
    pub fn valid_brackets(&self) -> Vec<Bracket> {
        let total = self.total_nodes();
        let mut out = Vec::new();
        for start in 0..total {
            for end in start + 1..total {
                let b = Bracket { start, end };
                if self.is_valid_bracket(b) {
                    out.push(b);
                }
            }
        }
        out
    }
}

/// A bracket: the closed interval of node positions `[start, end]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bracket {
    pub start: usize,
    pub end: usize,
}

impl Bracket {
    pub fn new(start: usize, end: usize) -> Bracket {
        Bracket { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    /// Brackets span at least two nodes.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, other: &Bracket) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn is_disjoint(&self, other: &Bracket) -> bool {
        self.end < other.start || other.end < self.start
    }

    /// Nested or disjoint. Brackets sharing a node without nesting intersect.
    pub fn is_laminar_with(&self, other: &Bracket) -> bool {
        self.is_disjoint(other) || self.contains(other) || other.contains(self)
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.start, self.end)
    }
}

/// A laminar family of brackets on a frame. Codimension = number of brackets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathBracketing {
    frame: PathFrame,
    brackets: BTreeSet<Bracket>,
}

impl PathBracketing {
    pub fn new<I>(frame: PathFrame, brackets: I) -> Result<PathBracketing, BracketError>
    where
        I: IntoIterator<Item = Bracket>,
    {
        let brackets: BTreeSet<Bracket> = brackets.into_iter().collect();
        for b in &brackets {
            if !frame.is_valid_bracket(*b) {
                return Err(BracketError::InvalidBracket { start: b.start, end: b.end });
            }
        }
        let list: Vec<&Bracket> = brackets.iter().collect();
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                if !a.is_laminar_with(b) {
                    return Err(BracketError::NotLaminar);
                }
            }
        }
        Ok(PathBracketing { frame, brackets })
    }

    pub fn empty(frame: PathFrame) -> PathBracketing {
        PathBracketing { frame, brackets: BTreeSet::new() }
    }

    pub fn frame(&self) -> PathFrame {
        self.frame
    }

    pub fn brackets(&self) -> impl Iterator<Item = &Bracket> {
        self.brackets.iter()
    }

    pub fn codim(&self) -> usize {
        self.brackets.len()
    }

    pub fn contains_bracket(&self, b: &Bracket) -> bool {
        self.brackets.contains(b)
    }

    /// Sorted bracket list, the serialization used for deterministic order.
    pub fn serialized(&self) -> Vec<Bracket> {
        self.brackets.iter().copied().collect()
    }
}

impl fmt::Display for PathBracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.brackets.is_empty() {
            return write!(f, "{{}}");
        }
        for b in &self.brackets {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// All bracketings of the frame, in lexicographic order on their serialized
/// bracket lists; `codim` filters to families of exactly that many brackets.
/// A `codim` beyond `frame.max_codim()` yields an empty list.
pub fn enumerate_bracketings(frame: PathFrame, codim: Option<usize>) -> Vec<PathBracketing> {
    let candidates = frame.valid_brackets();
    let families = laminar::enumerate_families(&candidates, |a, b| a.is_laminar_with(b));
    let max = frame.max_codim();
    families
        .into_iter()
        .inspect(|family| {
            debug_assert!(family.len() <= max, "laminar family exceeds maximal codimension");
        })
        .filter(|family| codim.is_none_or(|c| family.len() == c))
        .map(|family| PathBracketing { frame, brackets: family.into_iter().collect() })
        .collect()
}

/// Two bracketings are compatible when the union of their bracket sets is
/// still laminar.
pub fn is_compatible(a: &PathBracketing, b: &PathBracketing) -> Result<bool, BracketError> {
    if a.frame != b.frame {
        return Err(BracketError::FrameMismatch);
    }
    Ok(a.brackets.iter().all(|x| {
        b.brackets.iter().all(|y| x.is_laminar_with(y))
    }))
}

/// The superimposition: union of the bracket sets, labelling the face where
/// the two faces intersect.
pub fn superimpose(a: &PathBracketing, b: &PathBracketing) -> Result<PathBracketing, BracketError> {
    if !is_compatible(a, b)? {
        return Err(BracketError::Incompatible);
    }
    let brackets: BTreeSet<Bracket> = a.brackets.union(&b.brackets).copied().collect();
    Ok(PathBracketing { frame: a.frame, brackets })
}

/// Bracket counts per codimension.
pub fn f_vector(frame: PathFrame) -> Vec<usize> {
    let mut counts = vec![0usize; frame.max_codim() + 1];
    for b in enumerate_bracketings(frame, None) {
        counts[b.codim()] += 1;
    }
    counts
}

/// A bracketing poset: elements indexed as in `elements`, with the graded
/// cover structure in `poset`. Rank = codimension; `x` is covered by `y`
/// exactly when `y`'s brackets are `x`'s plus one more.
#[derive(Debug, Clone)]
pub struct BracketingPoset {
    pub elements: Vec<PathBracketing>,
    pub poset: GradedPoset,
}

/// Builds the full face poset of the frame's associahedron.
pub fn face_poset(frame: PathFrame) -> BracketingPoset {
    let elements = enumerate_bracketings(frame, None);
    let index: HashMap<Vec<Bracket>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, b)| (b.serialized(), i))
        .collect();
    let ranks: Vec<usize> = elements.iter().map(|b| b.codim()).collect();
    let mut covers = Vec::new();
    for (upper, elem) in elements.iter().enumerate() {
        for removed in &elem.brackets {
            let mut rest: Vec<Bracket> =
                elem.brackets.iter().filter(|b| *b != removed).copied().collect();
            rest.sort_unstable();
            let lower = index[&rest];
            covers.push((lower, upper));
        }
    }
    let poset = GradedPoset::new(ranks, covers).expect("bracket deletion changes codim by one");
    BracketingPoset { elements, poset }
}

/// JSON export: elements with id, codim and bracket list, plus cover pairs
/// `[child, parent]` where the parent has one more bracket.
pub fn poset_json(bp: &BracketingPoset) -> serde_json::Value {
    let elements: Vec<_> = bp
        .elements
        .iter()
        .enumerate()
        .map(|(id, b)| {
            json!({
                "id": id,
                "codim": b.codim(),
                "brackets": b.serialized().iter().map(|x| [x.start, x.end]).collect::<Vec<_>>(),
            })
        })
        .collect();
    let covers: Vec<_> = bp.poset.covers().iter().map(|&(l, u)| [l, u]).collect();
    json!({ "elements": elements, "covers": covers })
}

/// DOT export of the Hasse diagram, nodes labelled by bracket lists.
pub fn poset_dot(bp: &BracketingPoset) -> String {
    let labels: Vec<String> = bp.elements.iter().map(|b| b.to_string()).collect();
    bp.poset.to_dot("bracketings", &labels)
}
