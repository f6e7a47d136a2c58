//! Bracketings of a circle with three fixed nodes, and the cut bijection
//! onto path bracketings.
//!
//! Free nodes are partitioned into the three regions between the fixed
//! nodes. An arc is a contiguous run of at least two nodes containing at most
//! one fixed node; families of arcs are laminar on the circle. Cutting the
//! circle at a fixed node maps each arc either to the same interval on the
//! resulting path or, when the arc contains the cut node, to the
//! complementary interval; because an arc holds at most one fixed node,
//! exactly one of the two candidates is valid, which is what makes the map a
//! bijection of posets.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde_json::json;
use thiserror::Error;

use crate::bracketings::{face_poset, Bracket, PathBracketing, PathFrame};
use crate::laminar;
use crate::poset::GradedPoset;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CircleError {
    #[error("arc (start {start}, len {len}) is not valid on this frame")]
    InvalidArc { start: usize, len: usize },
    #[error("arcs are not pairwise laminar")]
    NotLaminar,
    #[error("path bracketing has {got} nodes but the frame expects {expected}")]
    NodeCountMismatch { got: usize, expected: usize },
}

/// One of the three fixed nodes, in canonical cyclic order. `Infinity` is
/// the default cut point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedNode {
    Zero,
    One,
    Infinity,
}

impl FixedNode {
    pub const ALL: [FixedNode; 3] = [FixedNode::Zero, FixedNode::One, FixedNode::Infinity];

    fn index(self) -> usize {
        match self {
            FixedNode::Zero => 0,
            FixedNode::One => 1,
            FixedNode::Infinity => 2,
        }
    }
}

/// A circle with fixed nodes at the boundaries of three regions holding
/// `x`, `y`, `z` free nodes. Positions run clockwise from the first fixed
/// node: fixed, region one, fixed, region two, fixed, region three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CircleFrame {
    partition: (usize, usize, usize),
}

impl CircleFrame {
    pub fn new(partition: (usize, usize, usize)) -> CircleFrame {
        CircleFrame { partition }
    }

    pub fn partition(&self) -> (usize, usize, usize) {
        self.partition
    }

    pub fn free_nodes(&self) -> usize {
        self.partition.0 + self.partition.1 + self.partition.2
    }

    pub fn node_count(&self) -> usize {
        self.free_nodes() + 3
    }

    pub fn fixed_positions(&self) -> [usize; 3] {
        let (x, y, _) = self.partition;
        [0, x + 1, x + y + 2]
    }

    pub fn is_fixed(&self, position: usize) -> bool {
        self.fixed_positions().contains(&position)
    }

    fn fixed_in(&self, arc: CircleArc) -> usize {
        self.fixed_positions()
            .iter()
            .filter(|&&p| arc.covers(p, self.node_count()))
            .count()
    }

    pub fn is_valid_arc(&self, arc: CircleArc) -> bool {
        arc.len >= 2
            && arc.len < self.node_count()
            && arc.start < self.node_count()
            && self.fixed_in(arc) <= 1
    }

    /// All valid arcs sorted by `(start, len)`.
    pub fn valid_arcs(&self) -> Vec<CircleArc> {
        let n = self.node_count();
        let mut out = Vec::new();
        for start in 0..n {
            for len in 2..n {
                let arc = CircleArc { start, len };
                if self.is_valid_arc(arc) {
                    out.push(arc);
                }
            }
        }
        out
    }
}

/// A contiguous run of `len` nodes starting at `start`, wrapping cyclically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CircleArc {
    pub start: usize,
    pub len: usize,
}

impl CircleArc {
    pub fn new(start: usize, len: usize) -> CircleArc {
        CircleArc { start, len }
    }

    pub fn covers(&self, position: usize, n: usize) -> bool {
        let offset = (position + n - self.start) % n;
        offset < self.len
    }

    pub fn wraps(&self, n: usize) -> bool {
        self.start + self.len > n
    }

    fn mask(&self, n: usize) -> u32 {
        (0..self.len).fold(0u32, |m, i| m | (1 << ((self.start + i) % n)))
    }

    pub fn is_laminar_with(&self, other: &CircleArc, n: usize) -> bool {
        let a = self.mask(n);
        let b = other.mask(n);
        a & b == 0 || a & b == a || a & b == b
    }
}

impl fmt::Display for CircleArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}+{}]", self.start, self.len)
    }
}

/// A laminar family of arcs on a circle frame.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CircleBracketing {
    frame: CircleFrame,
    arcs: BTreeSet<CircleArc>,
}

impl CircleBracketing {
    pub fn new<I>(frame: CircleFrame, arcs: I) -> Result<CircleBracketing, CircleError>
    where
        I: IntoIterator<Item = CircleArc>,
    {
        let arcs: BTreeSet<CircleArc> = arcs.into_iter().collect();
        for a in &arcs {
            if !frame.is_valid_arc(*a) {
                return Err(CircleError::InvalidArc { start: a.start, len: a.len });
            }
        }
        let n = frame.node_count();
        let list: Vec<&CircleArc> = arcs.iter().collect();
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                if !a.is_laminar_with(b, n) {
                    return Err(CircleError::NotLaminar);
                }
            }
        }
        Ok(CircleBracketing { frame, arcs })
    }

    pub fn empty(frame: CircleFrame) -> CircleBracketing {
        CircleBracketing { frame, arcs: BTreeSet::new() }
    }

    pub fn frame(&self) -> CircleFrame {
        self.frame
    }

    pub fn arcs(&self) -> impl Iterator<Item = &CircleArc> {
        self.arcs.iter()
    }

    pub fn codim(&self) -> usize {
        self.arcs.len()
    }

    pub fn serialized(&self) -> Vec<CircleArc> {
        self.arcs.iter().copied().collect()
    }
}

impl fmt::Display for CircleBracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arcs.is_empty() {
            return write!(f, "{{}}");
        }
        for a in &self.arcs {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// All laminar arc families in lexicographic order on serialized arcs.
pub fn enumerate_circle_bracketings(frame: CircleFrame) -> Vec<CircleBracketing> {
    let n = frame.node_count();
    let candidates = frame.valid_arcs();
    laminar::enumerate_families(&candidates, |a, b| a.is_laminar_with(b, n))
        .into_iter()
        .map(|family| CircleBracketing { frame, arcs: family.into_iter().collect() })
        .collect()
}

/// Where the circle positions land on the path after cutting at `cut`:
/// position `p != cut_pos` maps to `(p - cut_pos - 1) mod n`.
fn path_index(p: usize, cut_pos: usize, n: usize) -> usize {
    (p + n - cut_pos - 1) % n
}

/// Cuts the circle at a fixed node. Arcs avoiding the cut keep their node
/// set; arcs containing it map to the complementary node set. The two
/// remaining fixed nodes become ordinary path nodes.
pub fn circle_to_path(cb: &CircleBracketing, cut: FixedNode) -> PathBracketing {
    let frame = cb.frame;
    let n = frame.node_count();
    let cut_pos = frame.fixed_positions()[cut.index()];
    let path_frame = PathFrame::free(n - 1);
    let brackets = cb.arcs.iter().map(|arc| {
        let positions: Vec<usize> = if arc.covers(cut_pos, n) {
            (0..n).filter(|&p| p != cut_pos && !arc.covers(p, n)).collect()
        } else {
            (0..n).filter(|&p| arc.covers(p, n)).collect()
        };
        let indices: Vec<usize> = positions.iter().map(|&p| path_index(p, cut_pos, n)).collect();
        let start = *indices.iter().min().expect("arcs have at least two nodes");
        let end = *indices.iter().max().unwrap();
        debug_assert_eq!(end - start + 1, indices.len(), "cut image is contiguous");
        Bracket::new(start, end)
    });
    PathBracketing::new(path_frame, brackets)
        .expect("cutting a laminar circle family yields a laminar path family")
}

/// Inverse of [`circle_to_path`]: an interval maps to the arc over the same
/// nodes when that arc is valid, otherwise to the complementary arc through
/// the cut node. Exactly one choice is valid for any interval.
pub fn path_to_circle(
    pb: &PathBracketing,
    frame: CircleFrame,
    cut: FixedNode,
) -> Result<CircleBracketing, CircleError> {
    let n = frame.node_count();
    if pb.frame().total_nodes() != n - 1 {
        return Err(CircleError::NodeCountMismatch {
            got: pb.frame().total_nodes(),
            expected: n - 1,
        });
    }
    let cut_pos = frame.fixed_positions()[cut.index()];
    let arcs: Vec<CircleArc> = pb
        .brackets()
        .map(|b| {
            let direct = CircleArc::new((cut_pos + 1 + b.start) % n, b.len());
            if frame.fixed_in(direct) <= 1 {
                direct
            } else {
                let complement = CircleArc::new((cut_pos + 1 + b.end + 1) % n, n - b.len());
                assert!(
                    frame.fixed_in(complement) <= 1,
                    "interval image and complement cannot both contain two fixed nodes"
                );
                complement
            }
        })
        .collect();
    CircleBracketing::new(frame, arcs)
}

/// Circle bracketing poset: rank = arc count, covers add one arc.
#[derive(Debug, Clone)]
pub struct CircleBracketingPoset {
    pub elements: Vec<CircleBracketing>,
    pub poset: GradedPoset,
}

pub fn circle_poset(frame: CircleFrame) -> CircleBracketingPoset {
    let elements = enumerate_circle_bracketings(frame);
    let index: HashMap<Vec<CircleArc>, usize> =
        elements.iter().enumerate().map(|(i, b)| (b.serialized(), i)).collect();
    let ranks: Vec<usize> = elements.iter().map(|b| b.codim()).collect();
    let mut covers = Vec::new();
    for (upper, elem) in elements.iter().enumerate() {
        for removed in &elem.arcs {
            let rest: Vec<CircleArc> =
                elem.arcs.iter().filter(|a| *a != removed).copied().collect();
            covers.push((index[&rest], upper));
        }
    }
    let poset = GradedPoset::new(ranks, covers).expect("arc deletion drops codim by one");
    CircleBracketingPoset { elements, poset }
}

/// Checks that cutting at the given fixed node is an isomorphism from the
/// circle bracketing poset onto the path bracketing poset: bijective,
/// rank-preserving, cover-preserving, and a round trip.
pub fn verify_bijection(frame: CircleFrame, cut: FixedNode) -> bool {
    let circle = circle_poset(frame);
    let path = face_poset(PathFrame::free(frame.node_count() - 1));
    if circle.elements.len() != path.elements.len() {
        return false;
    }
    let path_index: HashMap<Vec<Bracket>, usize> =
        path.elements.iter().enumerate().map(|(i, b)| (b.serialized(), i)).collect();

    let mut image = vec![usize::MAX; circle.elements.len()];
    let mut seen = vec![false; path.elements.len()];
    for (i, cb) in circle.elements.iter().enumerate() {
        let pb = circle_to_path(cb, cut);
        if pb.codim() != cb.codim() {
            return false;
        }
        match path_to_circle(&pb, frame, cut) {
            Ok(back) if back == *cb => {}
            _ => return false,
        }
        match path_index.get(&pb.serialized()) {
            Some(&j) if !seen[j] => {
                seen[j] = true;
                image[i] = j;
            }
            _ => return false,
        }
    }
    // Covers correspond one to one.
    let path_covers: BTreeSet<(usize, usize)> = path.poset.covers().iter().copied().collect();
    circle.poset.covers().len() == path_covers.len()
        && circle
            .poset
            .covers()
            .iter()
            .all(|&(l, u)| path_covers.contains(&(image[l], image[u])))
}

/// Partition census for the triple-product constructions of one
/// associahedron: the enumerated number of partitions of `n - 2` into at
/// most three parts, next to the printed closed-form value
/// `p_3(n-3) + p_2(n-2) + 1` for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductTypeCounts {
    pub enumerated: usize,
    pub formula: usize,
}

impl ProductTypeCounts {
    pub fn agrees(&self) -> bool {
        self.enumerated == self.formula
    }
}

/// All partitions of `m` into at most three positive parts, descending.
pub fn partitions_up_to_three(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in (1..=m).rev() {
        if a == m {
            out.push(vec![a]);
        }
        for b in (1..=a.min(m - a)).rev() {
            if a + b == m {
                out.push(vec![a, b]);
            }
            if a + b < m {
                let c = m - a - b;
                if c <= b {
                    out.push(vec![a, b, c]);
                }
            }
        }
    }
    out
}

/// Partitions of `m` into exactly `k` positive parts.
fn partitions_exact(m: usize, k: usize) -> usize {
    fn count(m: usize, k: usize, max: usize) -> usize {
        if k == 0 {
            return usize::from(m == 0);
        }
        (1..=max.min(m)).map(|first| count(m - first, k - 1, first)).sum()
    }
    count(m, k, m)
}

pub fn count_product_types(n: usize) -> ProductTypeCounts {
    assert!(n >= 3);
    ProductTypeCounts {
        enumerated: partitions_up_to_three(n - 2).len(),
        formula: partitions_exact(n.saturating_sub(3), 3) + partitions_exact(n - 2, 2) + 1,
    }
}

/// JSON export in the bracketing-poset schema, arcs as `[start, len, wraps]`.
pub fn poset_json(cp: &CircleBracketingPoset) -> serde_json::Value {
    let n = cp.elements.first().map(|e| e.frame.node_count()).unwrap_or(0);
    let elements: Vec<_> = cp
        .elements
        .iter()
        .enumerate()
        .map(|(id, b)| {
            let arcs: Vec<_> = b
                .serialized()
                .iter()
                .map(|a| json!([a.start, a.len, a.wraps(n)]))
                .collect();
            json!({ "id": id, "codim": b.codim(), "brackets": arcs })
        })
        .collect();
    let covers: Vec<_> = cp.poset.covers().iter().map(|&(l, u)| [l, u]).collect();
    json!({ "elements": elements, "covers": covers })
}

pub fn poset_dot(cp: &CircleBracketingPoset) -> String {
    let labels: Vec<String> = cp.elements.iter().map(|b| b.to_string()).collect();
    cp.poset.to_dot("circle_bracketings", &labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_frame_has_two_single_arc_elements() {
        let frame = CircleFrame::new((1, 0, 0));
        let all = enumerate_circle_bracketings(frame);
        let singles: Vec<_> = all.iter().filter(|b| b.codim() == 1).collect();
        assert_eq!(singles.len(), 2);
        assert_eq!(all.iter().filter(|b| b.codim() == 0).count(), 1);
    }

    #[test]
    fn partition_200_matches_pentagon_counts() {
        let cp = circle_poset(CircleFrame::new((2, 0, 0)));
        assert_eq!(cp.poset.rank_counts(), vec![1, 5, 5]);
    }

    #[test]
    fn empty_bracketing_is_always_present() {
        for partition in [(1, 0, 0), (1, 1, 0), (1, 1, 1)] {
            let frame = CircleFrame::new(partition);
            assert!(enumerate_circle_bracketings(frame)
                .iter()
                .any(|b| *b == CircleBracketing::empty(frame)));
        }
    }

    #[test]
    fn cut_maps_empty_to_empty_and_plain_arcs_to_intervals() {
        let frame = CircleFrame::new((2, 1, 0));
        let empty = CircleBracketing::empty(frame);
        assert_eq!(circle_to_path(&empty, FixedNode::Infinity).codim(), 0);

        // An arc avoiding the cut keeps its interval on the line.
        let arc = CircleArc::new(1, 2); // the two free nodes of region one
        let cb = CircleBracketing::new(frame, [arc]).unwrap();
        let pb = circle_to_path(&cb, FixedNode::Infinity);
        let brackets: Vec<_> = pb.brackets().copied().collect();
        // Cut at position 5; circle positions 1,2 land at path 1,2.
        assert_eq!(brackets, vec![Bracket::new(1, 2)]);
    }

    #[test]
    fn arc_through_the_cut_maps_to_the_complement() {
        // Partition (0,1,1): positions 0=fixed, 1=fixed, 2=free, 3=fixed, 4=free.
        let frame = CircleFrame::new((0, 1, 1));
        let arc = CircleArc::new(2, 2); // free node and the cut node
        assert!(arc.covers(3, 5));
        let cb = CircleBracketing::new(frame, [arc]).unwrap();
        let pb = circle_to_path(&cb, FixedNode::Infinity);
        let brackets: Vec<_> = pb.brackets().copied().collect();
        // Complement nodes 4,0,1 sit at path positions 0,1,2.
        assert_eq!(brackets, vec![Bracket::new(0, 2)]);
        let back = path_to_circle(&pb, frame, FixedNode::Infinity).unwrap();
        assert_eq!(back, cb);
    }

    #[test]
    fn round_trip_is_identity_for_small_partitions() {
        for partition in [(1, 0, 0), (2, 0, 0), (1, 1, 0), (1, 1, 1), (2, 1, 0)] {
            let frame = CircleFrame::new(partition);
            for cb in enumerate_circle_bracketings(frame) {
                let pb = circle_to_path(&cb, FixedNode::Infinity);
                assert_eq!(path_to_circle(&pb, frame, FixedNode::Infinity).unwrap(), cb);
            }
        }
    }

    #[test]
    fn bijection_verdicts_for_five_particles() {
        for partition in [(3, 0, 0), (2, 1, 0), (1, 1, 1)] {
            assert!(verify_bijection(CircleFrame::new(partition), FixedNode::Infinity));
        }
    }

    #[test]
    fn all_three_cuts_give_the_bijection() {
        for cut in FixedNode::ALL {
            assert!(verify_bijection(CircleFrame::new((2, 1, 0)), cut));
        }
    }

    #[test]
    fn node_count_mismatch_is_an_error() {
        let frame = CircleFrame::new((1, 1, 1));
        let pb = PathBracketing::empty(PathFrame::free(4));
        assert!(matches!(
            path_to_circle(&pb, frame, FixedNode::Infinity),
            Err(CircleError::NodeCountMismatch { got: 4, expected: 5 })
        ));
    }

    #[test]
    fn product_type_counts_and_the_printed_formula() {
        assert_eq!(count_product_types(3), ProductTypeCounts { enumerated: 1, formula: 1 });
        assert_eq!(count_product_types(4), ProductTypeCounts { enumerated: 2, formula: 2 });
        // The printed closed form undercounts here; the census is 3.
        let five = count_product_types(5);
        assert_eq!((five.enumerated, five.formula), (3, 2));
        assert!(!five.agrees());
        assert_eq!(count_product_types(6), ProductTypeCounts { enumerated: 4, formula: 4 });
    }

    #[test]
    fn partition_lists() {
        assert_eq!(partitions_up_to_three(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(
            partitions_up_to_three(4),
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1]]
        );
    }
}
