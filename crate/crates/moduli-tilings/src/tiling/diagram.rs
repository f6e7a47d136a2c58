//! Labeled diagrams and twist moves.
//!
//! A diagram is a path of `n + 2` labeled nodes (no fixed nodes, reflection
//! is a global symmetry) or a circle of `n + 3` nodes where labels `0`, `1`
//! and `2` (for the infinity puncture) are fixed and pinned in cyclic order
//! while `n` free labels sit in the three regions between them. On top of the
//! arrangement the diagram carries collision schemes: for the minimal
//! building set each scheme is one bracket (a block of at least two
//! consecutive nodes); the maximal variant also glues along normal crossings,
//! whose schemes reverse several disjoint blocks at once.
//!
//! A twist along a scheme reverses the labels inside each of its blocks and
//! mirrors any bracket nested inside them; the scheme itself and everything
//! disjoint from or containing its blocks survive unchanged. Twists are
//! involutions. Orbits under twists (plus global reflection for paths) are
//! the cells of the glued complexes.

use std::collections::BTreeSet;
use std::fmt;

use super::TilingError;

/// Fixed circle labels; free labels start at 3.
pub const LABEL_ZERO: u8 = 0;
pub const LABEL_ONE: u8 = 1;
pub const LABEL_INFINITY: u8 = 2;
pub const FIRST_FREE_LABEL: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagramKind {
    Path,
    Circle,
}

/// A run of consecutive node positions: `(start, len)`, wrapping cyclically
/// on circle diagrams.
pub type Block = (u8, u8);

fn block_mask(b: Block, n: usize) -> u32 {
    (0..b.1 as usize).fold(0u32, |m, i| m | (1 << ((b.0 as usize + i) % n)))
}

/// A collision scheme: disjoint blocks reversed together by one twist.
/// Minimal-building-set schemes have a single block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scheme {
    blocks: Vec<Block>,
}

impl Scheme {
    pub fn single(start: usize, len: usize) -> Scheme {
        Scheme { blocks: vec![(start as u8, len as u8)] }
    }

    pub fn of_blocks(mut blocks: Vec<Block>) -> Scheme {
        blocks.sort_unstable();
        Scheme { blocks }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_single(&self) -> bool {
        self.blocks.len() == 1
    }
}

/// A labeled arrangement together with its collision schemes. Codimension of
/// the cell it names = number of schemes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledDiagram {
    kind: DiagramKind,
    labels: Vec<u8>,
    schemes: Vec<Scheme>,
}

impl LabeledDiagram {
    /// Path diagram over distinct labels; brackets given as inclusive
    /// `(start, end)` position intervals.
    pub fn path(labels: &[u8], brackets: &[(usize, usize)]) -> Result<Self, TilingError> {
        let m = labels.len();
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != m || m < 2 {
            return Err(TilingError::BadLabels);
        }
        let schemes = brackets
            .iter()
            .map(|&(s, e)| {
                if e <= s || e >= m {
                    return Err(TilingError::BadBlock { start: s, len: e.saturating_sub(s) + 1 });
                }
                Ok(Scheme::single(s, e - s + 1))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::assemble(DiagramKind::Path, labels.to_vec(), schemes)
    }

    /// Circle diagram from the contents of the three regions (free labels,
    /// each at least [`FIRST_FREE_LABEL`]) and arcs as `(start, len)`.
    pub fn circle(regions: [&[u8]; 3], arcs: &[(usize, usize)]) -> Result<Self, TilingError> {
        let mut labels = Vec::new();
        for (fixed, region) in [LABEL_ZERO, LABEL_ONE, LABEL_INFINITY].iter().zip(regions) {
            labels.push(*fixed);
            labels.extend_from_slice(region);
        }
        let mut free: Vec<u8> = labels.iter().copied().filter(|&l| l >= FIRST_FREE_LABEL).collect();
        let free_count = free.len();
        free.sort_unstable();
        free.dedup();
        if free.len() != free_count || free_count + 3 != labels.len() {
            return Err(TilingError::BadLabels);
        }
        let schemes = arcs.iter().map(|&(s, l)| Scheme::single(s, l)).collect();
        Self::assemble(DiagramKind::Circle, labels, schemes)
    }

    pub(crate) fn assemble(
        kind: DiagramKind,
        labels: Vec<u8>,
        mut schemes: Vec<Scheme>,
    ) -> Result<Self, TilingError> {
        schemes.sort_unstable();
        schemes.dedup();
        let d = LabeledDiagram { kind, labels, schemes };
        d.check_blocks()?;
        Ok(d)
    }

    fn check_blocks(&self) -> Result<(), TilingError> {
        let n = self.node_count();
        for scheme in &self.schemes {
            let mut seen = 0u32;
            for &b in scheme.blocks() {
                // Full-length blocks are excluded: a path bracket must be a
                // proper subinterval (the full one is the cone point), and a
                // full circle arc would swallow all three fixed nodes.
                if b.1 < 2 || (b.1 as usize) >= n || (b.0 as usize) >= n {
                    return Err(TilingError::BadBlock { start: b.0 as usize, len: b.1 as usize });
                }
                if self.kind == DiagramKind::Circle
                    && self.fixed_in(block_mask(b, n)) > 1
                {
                    return Err(TilingError::BadBlock { start: b.0 as usize, len: b.1 as usize });
                }
                if self.kind == DiagramKind::Path && b.0 as usize + b.1 as usize > n {
                    return Err(TilingError::BadBlock { start: b.0 as usize, len: b.1 as usize });
                }
                let mask = block_mask(b, n);
                if seen & mask != 0 {
                    return Err(TilingError::BlocksOverlap);
                }
                seen |= mask;
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn schemes(&self) -> &[Scheme] {
        &self.schemes
    }

    pub fn codim(&self) -> usize {
        self.schemes.len()
    }

    fn fixed_in(&self, mask: u32) -> usize {
        debug_assert_eq!(self.kind, DiagramKind::Circle);
        self.labels
            .iter()
            .enumerate()
            .filter(|&(p, &l)| l < FIRST_FREE_LABEL && mask & (1 << p) != 0)
            .count()
    }

    /// The diagram with one scheme removed; the face one codimension up.
    pub(crate) fn without_scheme(&self, scheme: &Scheme) -> LabeledDiagram {
        let schemes = self.schemes.iter().filter(|s| *s != scheme).cloned().collect();
        LabeledDiagram { kind: self.kind, labels: self.labels.clone(), schemes }
    }

    pub(crate) fn with_schemes(&self, mut schemes: Vec<Scheme>) -> LabeledDiagram {
        schemes.sort_unstable();
        LabeledDiagram { kind: self.kind, labels: self.labels.clone(), schemes }
    }

    /// Twist along one scheme of the diagram: reverse the labels inside each
    /// block and mirror nested blocks; an involution.
    pub fn twist(&self, scheme: &Scheme) -> Result<LabeledDiagram, TilingError> {
        Ok(self.twist_with_image(scheme)?.0)
    }

    /// Like [`twist`](Self::twist), but also returns where the twisted
    /// scheme itself sits in the result. Its node set is preserved, but on a
    /// circle diagram the renormalizing rotation can move its coordinates;
    /// twisting the result along the returned image undoes the move.
    pub fn twist_with_image(
        &self,
        scheme: &Scheme,
    ) -> Result<(LabeledDiagram, Scheme), TilingError> {
        if !self.schemes.contains(scheme) {
            return Err(TilingError::SchemeAbsent);
        }
        Ok(self.twist_with_image_unchecked(scheme))
    }

    /// Twist along a single bracket given as `(start, len)`.
    pub fn twist_block(&self, start: usize, len: usize) -> Result<LabeledDiagram, TilingError> {
        self.twist(&Scheme::single(start, len))
    }

    pub(crate) fn twist_unchecked(&self, scheme: &Scheme) -> LabeledDiagram {
        self.twist_with_image_unchecked(scheme).0
    }

    fn twist_with_image_unchecked(&self, scheme: &Scheme) -> (LabeledDiagram, Scheme) {
        let n = self.node_count();
        let mut labels = self.labels.clone();
        for &b in scheme.blocks() {
            let positions: Vec<usize> = (0..b.1 as usize).map(|i| (b.0 as usize + i) % n).collect();
            let values: Vec<u8> = positions.iter().map(|&p| labels[p]).collect();
            for (&p, &v) in positions.iter().zip(values.iter().rev()) {
                labels[p] = v;
            }
        }
        let schemes: Vec<Scheme> = self
            .schemes
            .iter()
            .map(|other| {
                Scheme::of_blocks(
                    other.blocks().iter().map(|&b| map_block(b, scheme, n)).collect(),
                )
            })
            .collect();
        let mut out = LabeledDiagram { kind: self.kind, labels, schemes };
        let rotation = out.normalize();
        let image = Scheme::of_blocks(
            scheme
                .blocks()
                .iter()
                .map(|&(start, len)| (((start as usize + n - rotation) % n) as u8, len))
                .collect(),
        );
        debug_assert!(out.schemes.contains(&image), "the twisted scheme survives");
        debug_assert!(out.check_blocks().is_ok());
        (out, image)
    }

    /// Global reflection of a path diagram.
    pub fn reflect(&self) -> Result<LabeledDiagram, TilingError> {
        if self.kind != DiagramKind::Path {
            return Err(TilingError::NoReflection);
        }
        let n = self.node_count();
        let labels: Vec<u8> = self.labels.iter().rev().copied().collect();
        let schemes = self
            .schemes
            .iter()
            .map(|s| {
                Scheme::of_blocks(
                    s.blocks()
                        .iter()
                        .map(|&(start, len)| ((n - start as usize - len as usize) as u8, len))
                        .collect(),
                )
            })
            .collect();
        let mut out = LabeledDiagram { kind: self.kind, labels, schemes };
        out.normalize();
        Ok(out)
    }

    /// Rotate a circle diagram so the fixed label 0 sits at position 0, and
    /// keep scheme lists sorted. Returns the applied rotation.
    fn normalize(&mut self) -> usize {
        let mut rotation = 0;
        if self.kind == DiagramKind::Circle {
            let n = self.node_count();
            let p0 = self
                .labels
                .iter()
                .position(|&l| l == LABEL_ZERO)
                .expect("circle diagrams carry the fixed label 0");
            if p0 != 0 {
                rotation = p0;
                self.labels.rotate_left(p0);
                for scheme in &mut self.schemes {
                    *scheme = Scheme::of_blocks(
                        scheme
                            .blocks()
                            .iter()
                            .map(|&(start, len)| (((start as usize + n - p0) % n) as u8, len))
                            .collect(),
                    );
                }
            }
            debug_assert!(
                self.labels.iter().position(|&l| l == LABEL_ONE)
                    < self.labels.iter().position(|&l| l == LABEL_INFINITY),
                "fixed labels must stay in cyclic order"
            );
        }
        self.schemes.sort_unstable();
        rotation
    }

    /// The full orbit under twists along present schemes, plus global
    /// reflection for path diagrams. Sorted, so the first entry is the
    /// canonical representative.
    pub fn orbit(&self) -> Vec<LabeledDiagram> {
        let mut seen: BTreeSet<LabeledDiagram> = BTreeSet::new();
        let mut queue = vec![self.clone()];
        seen.insert(self.clone());
        while let Some(d) = queue.pop() {
            let mut neighbors: Vec<LabeledDiagram> =
                d.schemes.iter().map(|s| d.twist_unchecked(s)).collect();
            if d.kind == DiagramKind::Path {
                neighbors.push(d.reflect().expect("path diagrams reflect"));
            }
            for next in neighbors {
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        seen.into_iter().collect()
    }
}

/// Where a block lands under a twist along `scheme`: mirrored when nested in
/// one of the scheme's blocks, untouched when disjoint from or containing
/// them.
fn map_block(b: Block, scheme: &Scheme, n: usize) -> Block {
    let mb = block_mask(b, n);
    for &within in scheme.blocks() {
        let mw = block_mask(within, n);
        let common = mb & mw;
        if common == 0 {
            continue;
        }
        if common == mb {
            // Nested: mirror inside `within`.
            let (ws, wl) = (within.0 as usize, within.1 as usize);
            let end = (b.0 as usize + b.1 as usize - 1) % n;
            let offset_end = (end + n - ws) % n;
            debug_assert!(offset_end < wl);
            return (((ws + wl - 1 - offset_end) % n) as u8, b.1);
        }
        debug_assert_eq!(common, mw, "blocks must be nested or disjoint");
    }
    b
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(start, len) in &self.blocks {
            write!(f, "[{start}+{len}]")?;
        }
        Ok(())
    }
}

/// A twist orbit with its canonical (lexicographically least) representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwistClass {
    pub canonical: LabeledDiagram,
    pub orbit_size: usize,
}

pub fn twist_class(d: &LabeledDiagram) -> TwistClass {
    let orbit = d.orbit();
    TwistClass { canonical: orbit[0].clone(), orbit_size: orbit.len() }
}

impl fmt::Display for LabeledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |l: u8| match (self.kind, l) {
            (DiagramKind::Circle, LABEL_ZERO) => "0".to_string(),
            (DiagramKind::Circle, LABEL_ONE) => "1".to_string(),
            (DiagramKind::Circle, LABEL_INFINITY) => "inf".to_string(),
            (DiagramKind::Circle, l) => format!("x{}", l - FIRST_FREE_LABEL + 1),
            (DiagramKind::Path, l) => l.to_string(),
        };
        let labels: Vec<String> = self.labels.iter().map(|&l| name(l)).collect();
        write!(f, "{}", labels.join("."))?;
        for scheme in &self.schemes {
            write!(f, " ")?;
            if scheme.blocks().len() > 1 {
                write!(f, "{{")?;
            }
            for &(s, l) in scheme.blocks() {
                write!(f, "[{s}+{l}]")?;
            }
            if scheme.blocks().len() > 1 {
                write!(f, "}}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(labels: &[u8], brackets: &[(usize, usize)]) -> LabeledDiagram {
        LabeledDiagram::path(labels, brackets).unwrap()
    }

    #[test]
    fn twist_on_a_pair_swaps_its_labels() {
        let d = path(&[0, 1, 2, 3], &[(0, 1)]);
        let t = d.twist_block(0, 2).unwrap();
        assert_eq!(t.labels(), &[1, 0, 2, 3]);
        assert_eq!(t.schemes(), d.schemes());
    }

    #[test]
    fn twist_is_an_involution() {
        let d = path(&[3, 1, 0, 2], &[(0, 2), (0, 1)]);
        for scheme in d.schemes() {
            let once = d.twist(scheme).unwrap();
            assert_eq!(once.twist(scheme).unwrap(), d);
        }
    }

    #[test]
    fn outer_twist_mirrors_an_inner_bracket() {
        // Bracket (2,3) nested in (1,3): twisting the outer one sends it to (1,2).
        let d = path(&[0, 1, 2, 3], &[(1, 3), (2, 3)]);
        let t = d.twist_block(1, 3).unwrap();
        assert_eq!(t.labels(), &[0, 3, 2, 1]);
        let expected = path(&[0, 3, 2, 1], &[(1, 3), (1, 2)]);
        assert_eq!(t, expected);
    }

    #[test]
    fn absent_scheme_is_rejected() {
        let d = path(&[0, 1, 2], &[]);
        assert_eq!(d.twist_block(0, 2).unwrap_err(), TilingError::SchemeAbsent);
    }

    #[test]
    fn degenerate_blocks_are_rejected() {
        // The full bracket is the cone point, not a face.
        assert!(LabeledDiagram::path(&[0, 1, 2], &[(0, 2)]).is_err());
        // A circle arc swallowing two fixed nodes would identify them.
        assert!(LabeledDiagram::circle([&[3], &[], &[]], &[(2, 3)]).is_err());
        // Arcs of one node are not brackets.
        assert!(LabeledDiagram::path(&[0, 1, 2], &[(1, 1)]).is_err());
    }

    #[test]
    fn bracketless_path_orbit_is_reflection_only() {
        let d = path(&[2, 0, 1, 3], &[]);
        let class = twist_class(&d);
        assert_eq!(class.orbit_size, 2);
        assert_eq!(class.canonical.labels(), &[2, 0, 1, 3]); // vs reversed 3,1,0,2
    }

    #[test]
    fn circle_twist_through_a_fixed_node_renormalizes() {
        // Regions (_, x1, x2): arc over positions 2..3 covers x1 and infinity.
        let d = LabeledDiagram::circle([&[], &[3], &[4]], &[(2, 2)]).unwrap();
        assert_eq!(d.labels(), &[0, 1, 3, 2, 4]);
        let t = d.twist_block(2, 2).unwrap();
        // The free label crossed to the far side of infinity.
        assert_eq!(t.labels(), &[0, 1, 2, 3, 4]);
        assert_eq!(t.twist_block(2, 2).unwrap(), d);
    }

    #[test]
    fn twist_image_tracks_the_rotation() {
        // Arc over the fixed label 0: reversing it moves 0, so the whole
        // diagram rotates back and the arc's coordinates shift with it.
        let d = LabeledDiagram::circle([&[3], &[], &[4]], &[(4, 2)]).unwrap();
        assert_eq!(d.labels(), &[0, 3, 1, 2, 4]);
        let (t, image) = d.twist_with_image(&Scheme::single(4, 2)).unwrap();
        assert_eq!(t.labels(), &[0, 4, 3, 1, 2]);
        assert_ne!(image, Scheme::single(4, 2));
        assert_eq!(t.twist(&image).unwrap(), d);
    }

    #[test]
    fn circle_orbits_have_no_reflection() {
        let d = LabeledDiagram::circle([&[3, 4], &[], &[]], &[]).unwrap();
        assert_eq!(twist_class(&d).orbit_size, 1);
    }

    #[test]
    fn exhaustive_involution_and_validity_small_paths() {
        use crate::bracketings::{enumerate_bracketings, PathFrame};
        use itertools::Itertools;
        for m in 2..=5usize {
            let families = enumerate_bracketings(PathFrame::free(m), None);
            for perm in (0..m as u8).permutations(m) {
                for family in &families {
                    let brackets: Vec<(usize, usize)> =
                        family.brackets().map(|b| (b.start, b.end)).collect();
                    let d = path(&perm, &brackets);
                    for scheme in d.schemes() {
                        let t = d.twist(scheme).unwrap();
                        assert!(t.check_blocks().is_ok());
                        assert_eq!(t.twist(scheme).unwrap(), d);
                    }
                }
            }
        }
    }

    #[test]
    fn multi_block_twist_reverses_both_blocks() {
        let base = path(&[0, 1, 2, 3], &[]);
        let scheme = Scheme::of_blocks(vec![(0, 2), (2, 2)]);
        let d = base.with_schemes(vec![scheme.clone()]);
        let t = d.twist(&scheme).unwrap();
        assert_eq!(t.labels(), &[1, 0, 3, 2]);
        assert_eq!(t.twist(&scheme).unwrap(), d);
    }

    #[test]
    fn display_is_compact() {
        let d = path(&[1, 0, 2, 3], &[(0, 1)]);
        assert_eq!(d.to_string(), "1.0.2.3 [0+2]");
        let c = LabeledDiagram::circle([&[3], &[4], &[]], &[]).unwrap();
        assert_eq!(c.to_string(), "0.x1.1.x2.inf");
    }
}
