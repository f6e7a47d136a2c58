//! Glued cell complexes from twist classes of labeled diagrams.
//!
//! Top cells of the blown-up projective sphere are path diagrams modulo
//! reflection; top cells of the compactified moduli space are circle
//! diagrams. Cells in every codimension are twist orbits of diagrams with
//! that many collision schemes, and a cell is incident to the cells obtained
//! by dropping one scheme from any orbit representative. For two-dimensional
//! complexes the polygon boundary structure and the corner-level gluing data
//! are extracted alongside, so the quotient can be classified as a surface.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use itertools::Itertools;
use rayon::prelude::*;
use serde_json::json;

use super::diagram::{
    DiagramKind, LabeledDiagram, Scheme, TwistClass, FIRST_FREE_LABEL,
};
use super::surface::{PolygonSurface, SurfaceReport};
use super::TilingError;
use crate::bracketings::{enumerate_bracketings, PathFrame};
use crate::circle::{enumerate_circle_bracketings, CircleFrame};
use crate::poset::GradedPoset;

/// Default cap on the blow-up parameter for full complex builds.
pub const DEFAULT_COMPLEX_LIMIT: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    /// The projective sphere of the braid arrangement, blown up; tiles are
    /// path diagrams with `n + 2` labeled nodes modulo reflection.
    ProjectiveSphere,
    /// The real moduli space of `n + 3` punctured spheres, compactified;
    /// tiles are circle diagrams with `n` free labels.
    Moduli,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildingSet {
    /// Blow up only collisions of adjacent runs; tiles become associahedra.
    Minimal,
    /// Blow up all crossings (supported at `n = 2` only); tiles become
    /// hexagons and octagons.
    Maximal,
}

/// One cell of a glued complex.
#[derive(Debug, Clone)]
pub struct Cell {
    pub dim: usize,
    /// Canonical orbit representative; `None` for hand-assembled complexes.
    pub diagram: Option<LabeledDiagram>,
    pub orbit_size: usize,
    /// Number of chamber corners mapping onto this cell.
    pub corners: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct SurfaceData {
    pub surface: PolygonSurface,
    /// Per polygon, per corner slot: the vertex cell it maps to.
    pub corner_cells: Option<Vec<Vec<usize>>>,
}

/// A glued complex: cells listed by increasing dimension, with cover
/// incidences `(lower-dimensional cell, higher-dimensional cell)`.
#[derive(Debug, Clone)]
pub struct CellComplex {
    dim: usize,
    cells: Vec<Cell>,
    incidence: Vec<(usize, usize)>,
    surface: Option<SurfaceData>,
}

/// Lookup from every labeled diagram to its cell, per codimension.
#[derive(Debug, Default)]
pub(crate) struct DiagramIndex {
    pub by_codim: Vec<HashMap<LabeledDiagram, usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum FrameKey {
    Path(usize),
    Circle(usize, usize, usize),
}

fn key_of(d: &LabeledDiagram) -> FrameKey {
    match d.kind() {
        DiagramKind::Path => FrameKey::Path(d.node_count()),
        DiagramKind::Circle => {
            let labels = d.labels();
            let p1 = labels.iter().position(|&l| l == 1).unwrap();
            let p2 = labels.iter().position(|&l| l == 2).unwrap();
            FrameKey::Circle(p1 - 1, p2 - p1 - 1, labels.len() - p2 - 1)
        }
    }
}

/// All labeled codimension-0 diagrams of the space, before identification.
fn arrangements(space: Space, n: usize) -> Vec<LabeledDiagram> {
    match space {
        Space::ProjectiveSphere => {
            let m = n + 2;
            (0..m as u8)
                .permutations(m)
                .map(|perm| {
                    LabeledDiagram::assemble(DiagramKind::Path, perm, Vec::new())
                        .expect("permutations are valid label sequences")
                })
                .collect()
        }
        Space::Moduli => {
            let free: Vec<u8> = (0..n as u8).map(|i| FIRST_FREE_LABEL + i).collect();
            let mut out = Vec::new();
            for r0 in 0..=n {
                for r1 in 0..=n - r0 {
                    for perm in free.iter().copied().permutations(n) {
                        let mut labels = vec![0u8];
                        labels.extend_from_slice(&perm[..r0]);
                        labels.push(1);
                        labels.extend_from_slice(&perm[r0..r0 + r1]);
                        labels.push(2);
                        labels.extend_from_slice(&perm[r0 + r1..]);
                        out.push(
                            LabeledDiagram::assemble(DiagramKind::Circle, labels, Vec::new())
                                .expect("region placements are valid"),
                        );
                    }
                }
            }
            out
        }
    }
}

/// Scheme sets per codimension for the minimal building set: laminar
/// families of single brackets, independent of the labels on the frame.
fn minimal_families(key: FrameKey, max_codim: usize) -> Vec<Vec<Vec<Scheme>>> {
    let mut out = vec![Vec::new(); max_codim + 1];
    match key {
        FrameKey::Path(m) => {
            for family in enumerate_bracketings(PathFrame::free(m), None) {
                let schemes: Vec<Scheme> = family
                    .brackets()
                    .map(|b| Scheme::single(b.start, b.end - b.start + 1))
                    .collect();
                assert!(schemes.len() <= max_codim);
                out[schemes.len()].push(schemes);
            }
        }
        FrameKey::Circle(x, y, z) => {
            for family in enumerate_circle_bracketings(CircleFrame::new((x, y, z))) {
                let schemes: Vec<Scheme> =
                    family.arcs().map(|a| Scheme::single(a.start, a.len)).collect();
                assert!(schemes.len() <= max_codim);
                out[schemes.len()].push(schemes);
            }
        }
    }
    out
}

/// Scheme sets for the maximal building set at `n = 2`: every chamber vertex
/// is truncated, so sides are single brackets plus one scheme per normal
/// crossing (a pair of disjoint facet blocks reversed together).
fn maximal_families(key: FrameKey) -> Vec<Vec<Vec<Scheme>>> {
    let (nodes, fixed): (usize, Vec<usize>) = match key {
        FrameKey::Path(m) => (m, Vec::new()),
        FrameKey::Circle(x, y, z) => (x + y + z + 3, vec![0, x + 1, x + y + 2]),
    };
    let valid = |start: usize, len: usize| -> bool {
        if fixed.is_empty() {
            start + len <= nodes
        } else {
            (0..len).filter(|i| fixed.contains(&((start + i) % nodes))).count() <= 1
        }
    };
    let block_range = |len: usize| -> Vec<(usize, usize)> {
        let starts = if fixed.is_empty() { 0..nodes + 1 - len } else { 0..nodes };
        starts.filter(|&s| valid(s, len)).map(|s| (s, len)).collect()
    };
    let facets = block_range(2);
    let triples = block_range(3);
    let disjoint = |a: (usize, usize), b: (usize, usize)| -> bool {
        let mask = |(s, l): (usize, usize)| {
            (0..l).fold(0u32, |m, i| m | (1 << ((s + i) % nodes)))
        };
        mask(a) & mask(b) == 0
    };

    let mut sides: Vec<Scheme> = Vec::new();
    for &(s, l) in facets.iter().chain(triples.iter()) {
        sides.push(Scheme::single(s, l));
    }
    let mut crossings: Vec<Scheme> = Vec::new();
    for (i, &a) in facets.iter().enumerate() {
        for &b in &facets[i + 1..] {
            if disjoint(a, b) {
                crossings.push(Scheme::of_blocks(vec![
                    (a.0 as u8, a.1 as u8),
                    (b.0 as u8, b.1 as u8),
                ]));
            }
        }
    }
    sides.extend(crossings.iter().cloned());
    sides.sort_unstable();

    let contains = |big: (usize, usize), small: (usize, usize)| -> bool {
        let mask = |(s, l): (usize, usize)| {
            (0..l).fold(0u32, |m, i| m | (1 << ((s + i) % nodes)))
        };
        mask(big) | mask(small) == mask(big)
    };
    let mut corners: Vec<Vec<Scheme>> = Vec::new();
    for &t in &triples {
        for &f in &facets {
            if contains(t, f) {
                corners.push(vec![Scheme::single(f.0, f.1), Scheme::single(t.0, t.1)]);
            }
        }
    }
    for crossing in &crossings {
        for &block in crossing.blocks() {
            corners.push(vec![
                Scheme::single(block.0 as usize, block.1 as usize),
                crossing.clone(),
            ]);
        }
    }
    for corner in &mut corners {
        corner.sort_unstable();
    }
    corners.sort_unstable();

    vec![vec![Vec::new()], sides.into_iter().map(|s| vec![s]).collect(), corners]
}

fn families_for(
    cache: &mut HashMap<FrameKey, Vec<Vec<Vec<Scheme>>>>,
    key: FrameKey,
    building: BuildingSet,
    max_codim: usize,
) -> &Vec<Vec<Vec<Scheme>>> {
    cache.entry(key).or_insert_with(|| match building {
        BuildingSet::Minimal => minimal_families(key, max_codim),
        BuildingSet::Maximal => maximal_families(key),
    })
}

/// The top cells of the space: `(n + 2)! / 2` twist classes for both spaces.
pub fn enumerate_tiles(space: Space, n: usize) -> Vec<TwistClass> {
    assert!(n >= 1);
    let mut classes: BTreeSet<TwistClass> = BTreeSet::new();
    for arrangement in arrangements(space, n) {
        classes.insert(super::diagram::twist_class(&arrangement));
    }
    classes.into_iter().collect()
}

pub fn build_complex(
    space: Space,
    n: usize,
    building: BuildingSet,
) -> Result<CellComplex, TilingError> {
    build_complex_with_limit(space, n, building, DEFAULT_COMPLEX_LIMIT)
}

pub fn build_complex_with_limit(
    space: Space,
    n: usize,
    building: BuildingSet,
    limit: usize,
) -> Result<CellComplex, TilingError> {
    Ok(build_internal(space, n, building, limit)?.0)
}

pub(crate) fn build_internal(
    space: Space,
    n: usize,
    building: BuildingSet,
    limit: usize,
) -> Result<(CellComplex, DiagramIndex), TilingError> {
    if n < 1 {
        return Err(TilingError::EnumerationLimit { n, limit });
    }
    match building {
        BuildingSet::Minimal if n > limit => {
            return Err(TilingError::EnumerationLimit { n, limit });
        }
        BuildingSet::Maximal if n != 2 => {
            return Err(TilingError::MaximalOutOfScope { n });
        }
        _ => {}
    }
    let kind = match space {
        Space::ProjectiveSphere => DiagramKind::Path,
        Space::Moduli => DiagramKind::Circle,
    };
    let base = arrangements(space, n);
    let mut cache: HashMap<FrameKey, Vec<Vec<Vec<Scheme>>>> = HashMap::new();

    // Cells per codimension: orbit classes in canonical order.
    let mut classes_by_codim: Vec<Vec<(LabeledDiagram, Vec<LabeledDiagram>)>> = Vec::new();
    for codim in 0..=n {
        let mut diagrams: Vec<LabeledDiagram> = Vec::new();
        for arrangement in &base {
            let families = families_for(&mut cache, key_of(arrangement), building, n);
            for schemes in &families[codim] {
                diagrams.push(arrangement.with_schemes(schemes.clone()));
            }
        }
        let canonical: Vec<(LabeledDiagram, LabeledDiagram)> = if diagrams.len() > 4000 {
            diagrams
                .into_par_iter()
                .map(|d| (d.orbit().swap_remove(0), d))
                .collect()
        } else {
            diagrams.into_iter().map(|d| (d.orbit().swap_remove(0), d)).collect()
        };
        let mut groups: BTreeMap<LabeledDiagram, Vec<LabeledDiagram>> = BTreeMap::new();
        for (canon, member) in canonical {
            groups.entry(canon).or_default().push(member);
        }
        for (canon, members) in &groups {
            assert_eq!(
                members.len(),
                canon.orbit().len(),
                "every orbit member is enumerated exactly once"
            );
        }
        classes_by_codim.push(groups.into_iter().collect());
    }

    // Assign ids by increasing dimension (decreasing codimension).
    let mut cells: Vec<Cell> = Vec::new();
    let mut index = DiagramIndex { by_codim: vec![HashMap::new(); n + 1] };
    for codim in (0..=n).rev() {
        for (canon, members) in &classes_by_codim[codim] {
            let id = cells.len();
            let orbit_size = members.len();
            let corners = match kind {
                DiagramKind::Path => orbit_size / 2,
                DiagramKind::Circle => orbit_size,
            };
            cells.push(Cell {
                dim: n - codim,
                diagram: Some(canon.clone()),
                orbit_size,
                corners,
            });
            for member in members {
                index.by_codim[codim].insert(member.clone(), id);
            }
        }
    }

    // Cover incidences: drop one scheme from any representative.
    let mut incidence: BTreeSet<(usize, usize)> = BTreeSet::new();
    for codim in 1..=n {
        for (diagram, &cell) in &index.by_codim[codim] {
            for scheme in diagram.schemes() {
                let upper = index.by_codim[codim - 1][&diagram.without_scheme(scheme)];
                incidence.insert((cell, upper));
            }
        }
    }

    let surface = if n == 2 {
        Some(build_surface_data(&cells, &index, &mut cache, building, n))
    } else {
        None
    };

    let complex = CellComplex {
        dim: n,
        cells,
        incidence: incidence.into_iter().collect(),
        surface,
    };
    Ok((complex, index))
}

/// Polygon boundaries and corner-level gluing for a two-dimensional build.
///
/// Each tile's sides and corners are walked into a boundary cycle; the twist
/// along a side then identifies it with a side of the neighbouring tile, and
/// following the corners through the twist fixes the relative direction of
/// the two traversals.
fn build_surface_data(
    cells: &[Cell],
    index: &DiagramIndex,
    cache: &mut HashMap<FrameKey, Vec<Vec<Vec<Scheme>>>>,
    building: BuildingSet,
    n: usize,
) -> SurfaceData {
    let tiles: Vec<usize> = (0..cells.len()).filter(|&c| cells[c].dim == n).collect();
    let tile_slot: HashMap<usize, usize> =
        tiles.iter().enumerate().map(|(slot, &cell)| (cell, slot)).collect();

    // Tile boundary cycles.
    struct TilePolygon {
        rep: LabeledDiagram,
        sides: Vec<Scheme>,
        corners: Vec<Vec<Scheme>>, // corner i sits between side i and side i+1
    }
    let mut polygons: Vec<TilePolygon> = Vec::new();
    for &tile in &tiles {
        let rep = cells[tile].diagram.clone().expect("built cells carry diagrams");
        let families = families_for(cache, key_of(&rep), building, n).clone();
        let sides: Vec<Scheme> = families[1].iter().map(|s| s[0].clone()).collect();
        let corners: Vec<Vec<Scheme>> = families[2].clone();
        let corners_of = |side: &Scheme| -> Vec<&Vec<Scheme>> {
            corners.iter().filter(|c| c.contains(side)).collect()
        };
        for side in &sides {
            assert_eq!(corners_of(side).len(), 2, "each side of a 2-dim tile has two corners");
        }
        // Walk the boundary cycle.
        let mut side_order: Vec<Scheme> = vec![sides[0].clone()];
        let mut corner_order: Vec<Vec<Scheme>> = Vec::new();
        let mut current_corner = corners_of(&sides[0])[0].clone();
        loop {
            let current_side = side_order.last().unwrap().clone();
            corner_order.push(current_corner.clone());
            let next_side = current_corner
                .iter()
                .find(|s| **s != current_side)
                .expect("corners join two distinct sides")
                .clone();
            if next_side == side_order[0] {
                break;
            }
            let next_corner = corners
                .iter()
                .find(|c| c.contains(&next_side) && **c != current_corner)
                .expect("the other corner of the side")
                .clone();
            side_order.push(next_side);
            current_corner = next_corner;
        }
        assert_eq!(side_order.len(), sides.len(), "boundary walk closes into one cycle");
        polygons.push(TilePolygon { rep, sides: side_order, corners: corner_order });
    }

    // Gluing: for each slot, find the partner slot and the direction match.
    #[derive(Clone, Copy, PartialEq, Eq)]
    struct Slot {
        poly: usize,
        side: usize,
    }
    let slot_edge = |slot: &Slot| -> usize {
        let p = &polygons[slot.poly];
        index.by_codim[1][&p.rep.with_schemes(vec![p.sides[slot.side].clone()])]
    };
    let corner_cell = |poly: usize, corner: usize| -> usize {
        let p = &polygons[poly];
        index.by_codim[2][&p.rep.with_schemes(p.corners[corner].clone())]
    };

    let partner_of = |slot: &Slot| -> (Slot, bool) {
        let p = &polygons[slot.poly];
        let scheme = &p.sides[slot.side];
        let side_diag = p.rep.with_schemes(vec![scheme.clone()]);
        let twisted = side_diag.twist_unchecked(scheme);
        let neighbour_arrangement = twisted.with_schemes(Vec::new());
        let tile2 = index.by_codim[0][&neighbour_arrangement];
        let rep2 = cells[tile2].diagram.clone().unwrap();
        let align = |d: &LabeledDiagram| -> LabeledDiagram {
            if d.with_schemes(Vec::new()) == rep2 {
                d.clone()
            } else {
                let reflected = d.reflect().expect("only path tiles need aligning");
                assert_eq!(reflected.with_schemes(Vec::new()), rep2);
                reflected
            }
        };
        let aligned_side = align(&twisted);
        let scheme2 = aligned_side.schemes()[0].clone();
        let poly2 = tile_slot[&tile2];
        let side2 = polygons[poly2]
            .sides
            .iter()
            .position(|s| *s == scheme2)
            .expect("twisted side is a side of the neighbour");

        // Follow the tail corner (corner before the side in cycle order).
        let m = polygons[slot.poly].sides.len();
        let tail_corner = &polygons[slot.poly].corners[(slot.side + m - 1) % m];
        let corner_diag = p.rep.with_schemes(tail_corner.clone());
        let twisted_corner = align(&corner_diag.twist_unchecked(scheme));
        let image: Vec<Scheme> = twisted_corner.schemes().to_vec();
        let m2 = polygons[poly2].sides.len();
        let tail2 = &polygons[poly2].corners[(side2 + m2 - 1) % m2];
        let head2 = &polygons[poly2].corners[side2];
        let same_dir = if image == *tail2 {
            true
        } else {
            assert_eq!(image, *head2, "corner image must be an endpoint of the partner side");
            false
        };
        (Slot { poly: poly2, side: side2 }, same_dir)
    };

    // Direction bits per slot: first slot of each edge is the reference.
    let mut edge_first: HashMap<usize, (Slot, bool)> = HashMap::new();
    let mut oriented: Vec<Vec<(usize, bool)>> = Vec::new();
    for (pi, polygon) in polygons.iter().enumerate() {
        let mut boundary = Vec::new();
        for si in 0..polygon.sides.len() {
            let slot = Slot { poly: pi, side: si };
            let edge = slot_edge(&slot);
            let dir = match edge_first.get(&edge) {
                None => {
                    let partner = partner_of(&slot);
                    edge_first.insert(edge, (slot, partner.1));
                    true
                }
                Some(&(first, same_dir)) => {
                    let (back, same_back) = partner_of(&slot);
                    assert!(back == first && same_back == same_dir, "gluing is an involution");
                    same_dir
                }
            };
            boundary.push((edge, dir));
        }
        oriented.push(boundary);
    }

    let corner_cells: Vec<Vec<usize>> = polygons
        .iter()
        .enumerate()
        .map(|(pi, p)| (0..p.corners.len()).map(|ci| corner_cell(pi, ci)).collect())
        .collect();

    SurfaceData {
        surface: PolygonSurface { polygons: oriented },
        corner_cells: Some(corner_cells),
    }
}

impl CellComplex {
    /// Assembles a complex from explicit cells and cover incidences, e.g.
    /// for hand-built examples. `surface` optionally provides the polygon
    /// boundary structure of a two-dimensional complex.
    pub fn from_parts(
        dim: usize,
        cells: Vec<Cell>,
        incidence: Vec<(usize, usize)>,
        surface: Option<PolygonSurface>,
    ) -> Result<CellComplex, TilingError> {
        for &(lower, upper) in &incidence {
            if lower >= cells.len()
                || upper >= cells.len()
                || cells[upper].dim != cells[lower].dim + 1
            {
                return Err(TilingError::BadIncidence { lower, upper });
            }
        }
        let mut sorted = incidence;
        sorted.sort_unstable();
        sorted.dedup();
        Ok(CellComplex {
            dim,
            cells,
            incidence: sorted,
            surface: surface.map(|s| SurfaceData { surface: s, corner_cells: None }),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn incidence(&self) -> &[(usize, usize)] {
        &self.incidence
    }

    pub fn top_cells(&self) -> Vec<usize> {
        (0..self.cells.len()).filter(|&c| self.cells[c].dim == self.dim).collect()
    }

    /// Cell counts by dimension, index = dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.dim + 1];
        for cell in &self.cells {
            counts[cell.dim] += 1;
        }
        counts
    }

    /// Alternating sum of cell counts by dimension.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &count)| if d % 2 == 0 { count as i64 } else { -(count as i64) })
            .sum()
    }

    /// Right angledness: every codimension-`k` cell meets exactly `2^k`
    /// chamber corners.
    pub fn verify_right_angled(&self) -> bool {
        self.cells.iter().all(|cell| {
            let codim = self.dim - cell.dim;
            cell.corners == 1usize << codim
        })
    }

    /// The incidence poset, graded by cell dimension.
    pub fn to_poset(&self) -> GradedPoset {
        let ranks: Vec<usize> = self.cells.iter().map(|c| c.dim).collect();
        GradedPoset::new(ranks, self.incidence.clone())
            .expect("cover incidences raise dimension by one")
    }

    /// Surface classification of a two-dimensional complex.
    pub fn classify_surface(&self) -> Result<SurfaceReport, TilingError> {
        if self.dim != 2 {
            return Err(TilingError::NotTwoDimensional { dim: self.dim });
        }
        let data = self.surface.as_ref().ok_or(TilingError::NoSurfaceData)?;
        let expected_vertices = self.f_vector()[0];
        let mut report = data
            .surface
            .classify(data.corner_cells.as_deref());
        if data.corner_cells.is_some() && report.vertex_count != expected_vertices {
            report.closed = false;
            report.diagnostics.push(format!(
                "corner tracing found {} vertices but the complex has {} vertex cells",
                report.vertex_count, expected_vertices
            ));
        }
        Ok(report)
    }

    /// Polygon side counts of a two-dimensional complex, as size -> count.
    pub fn polygon_size_census(&self) -> Option<BTreeMap<usize, usize>> {
        let data = self.surface.as_ref()?;
        let mut census = BTreeMap::new();
        for polygon in &data.surface.polygons {
            *census.entry(polygon.len()).or_insert(0) += 1;
        }
        Some(census)
    }

    /// JSON export: cells with dimension and canonical diagram, incidences
    /// as `[lower, upper]` cover pairs.
    pub fn to_json(&self) -> serde_json::Value {
        let cells: Vec<_> = self
            .cells
            .iter()
            .enumerate()
            .map(|(id, cell)| {
                json!({
                    "id": id,
                    "dim": cell.dim,
                    "canonical_diagram": cell.diagram.as_ref().map(|d| d.to_string()),
                })
            })
            .collect();
        let incidence: Vec<_> = self.incidence.iter().map(|&(l, u)| [l, u]).collect();
        json!({ "dim": self.dim, "cells": cells, "incidence": incidence })
    }

    /// CSV of the f-vector by dimension.
    pub fn f_vector_csv(&self) -> String {
        let mut out = String::from("dim,count\n");
        for (d, count) in self.f_vector().iter().enumerate() {
            let _ = writeln!(out, "{d},{count}");
        }
        out
    }

    /// DOT graph of top-cell adjacency: one edge per codimension-1 cell.
    pub fn dual_adjacency_dot(&self) -> String {
        let mut out = String::from("graph dual {\n");
        for &t in &self.top_cells() {
            let label = self.cells[t]
                .diagram
                .as_ref()
                .map(|d| d.to_string())
                .unwrap_or_else(|| format!("cell {t}"));
            let _ = writeln!(out, "  t{t} [label=\"{label}\"];");
        }
        let mut upper_of: HashMap<usize, Vec<usize>> = HashMap::new();
        for &(lower, upper) in &self.incidence {
            if self.cells[upper].dim == self.dim {
                upper_of.entry(lower).or_default().push(upper);
            }
        }
        let mut lowers: Vec<_> = upper_of.into_iter().collect();
        lowers.sort_unstable();
        for (_, tiles) in lowers {
            match tiles.as_slice() {
                [a, b] => {
                    let _ = writeln!(out, "  t{a} -- t{b};");
                }
                [a] => {
                    let _ = writeln!(out, "  t{a} -- t{a};");
                }
                _ => {}
            }
        }
        out.push_str("}\n");
        out
    }
}
