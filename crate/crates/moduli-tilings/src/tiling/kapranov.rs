//! The cellulation comparison between the compactified moduli space and the
//! blown-up projective sphere.
//!
//! The candidate isomorphism cuts every circle diagram at the infinity label:
//! arcs avoiding the cut keep their nodes, arcs through it become the
//! complementary interval, and the two remaining fixed labels turn into
//! ordinary path labels. Checking that this map is constant on twist orbits,
//! bijective on cells and incidence-preserving verifies that the two
//! complexes are identically cellulated; a generic graded-poset isomorphism
//! search runs alongside as an independent oracle.

use std::collections::BTreeSet;

use super::complex::{build_internal, enumerate_tiles, BuildingSet, CellComplex, Space};
use super::diagram::{DiagramKind, LabeledDiagram, LABEL_INFINITY};
use super::TilingError;

/// Cuts a circle diagram at the infinity label, producing a path diagram.
/// Labels map as `0 -> 0`, `1 -> 1` and each free label drops by one.
pub fn cut_to_path(d: &LabeledDiagram) -> LabeledDiagram {
    assert_eq!(d.kind(), DiagramKind::Circle, "only circle diagrams are cut");
    let n = d.node_count();
    let p_inf = d
        .labels()
        .iter()
        .position(|&l| l == LABEL_INFINITY)
        .expect("circle diagrams carry the infinity label");
    let labels: Vec<u8> = (0..n - 1)
        .map(|i| {
            let l = d.labels()[(p_inf + 1 + i) % n];
            if l < LABEL_INFINITY {
                l
            } else {
                l - 1
            }
        })
        .collect();
    let brackets: Vec<(usize, usize)> = d
        .schemes()
        .iter()
        .map(|scheme| {
            assert!(scheme.is_single(), "the cut map is defined for single brackets");
            let (bs, bl) = scheme.blocks()[0];
            let (bs, bl) = (bs as usize, bl as usize);
            let covers = |p: usize| (p + n - bs) % n < bl;
            let positions: Vec<usize> = if covers(p_inf) {
                (0..n).filter(|&p| p != p_inf && !covers(p)).collect()
            } else {
                (0..n).filter(|&p| covers(p)).collect()
            };
            let indices: Vec<usize> =
                positions.iter().map(|&p| (p + n - p_inf - 1) % n).collect();
            let start = *indices.iter().min().unwrap();
            let end = *indices.iter().max().unwrap();
            debug_assert_eq!(end - start + 1, indices.len(), "cut image is contiguous");
            (start, end)
        })
        .collect();
    LabeledDiagram::path(&labels, &brackets).expect("cut images are valid path diagrams")
}

/// Outcome of the cellulation comparison at one blow-up parameter.
#[derive(Debug, Clone)]
pub struct KapranovReport {
    pub n: usize,
    pub building: BuildingSet,
    pub moduli_top_cells: usize,
    pub sphere_top_cells: usize,
    /// Cell counts by dimension.
    pub moduli_f_vector: Vec<usize>,
    pub sphere_f_vector: Vec<usize>,
    /// Whether the cut map sent every twist orbit to a single cell.
    pub map_well_defined: bool,
    /// Verified cell isomorphism, moduli cell id -> sphere cell id.
    pub mapping: Option<Vec<usize>>,
    /// Whether the generic graded-poset search found an isomorphism.
    pub oracle_found: bool,
}

impl KapranovReport {
    pub fn isomorphic(&self) -> bool {
        self.mapping.is_some()
    }

    /// The independent oracle and the explicit map must reach one verdict.
    pub fn oracle_agrees(&self) -> bool {
        self.oracle_found == self.mapping.is_some()
    }
}

/// Builds both complexes and compares their cellulations. For the minimal
/// building set the explicit cut map is constructed and verified cell by
/// cell; for the maximal variant (two hexagon/octagon complexes) only the
/// generic isomorphism search applies, and it is expected to fail.
pub fn verify_kapranov(
    n: usize,
    building: BuildingSet,
    limit: usize,
) -> Result<KapranovReport, TilingError> {
    let (sphere, sphere_index) = build_internal(Space::ProjectiveSphere, n, building, limit)?;
    let (moduli, moduli_index) = build_internal(Space::Moduli, n, building, limit)?;

    let mut map_well_defined = true;
    let mut candidate: Option<Vec<usize>> = None;
    if building == BuildingSet::Minimal {
        let mut map = vec![usize::MAX; moduli.cells().len()];
        'outer: for codim in 0..=n {
            for (diagram, &mcell) in &moduli_index.by_codim[codim] {
                let image = cut_to_path(diagram);
                let Some(&scell) = sphere_index.by_codim[codim].get(&image) else {
                    map_well_defined = false;
                    break 'outer;
                };
                if map[mcell] == usize::MAX {
                    map[mcell] = scell;
                } else if map[mcell] != scell {
                    // Two representatives of one orbit landed in different
                    // sphere cells: the map does not descend to cells.
                    map_well_defined = false;
                    break 'outer;
                }
            }
        }
        if map_well_defined && map.iter().all(|&c| c != usize::MAX) {
            let image: BTreeSet<usize> = map.iter().copied().collect();
            let dims_match = map
                .iter()
                .enumerate()
                .all(|(m, &s)| moduli.cells()[m].dim == sphere.cells()[s].dim);
            let mapped: BTreeSet<(usize, usize)> = moduli
                .incidence()
                .iter()
                .map(|&(l, u)| (map[l], map[u]))
                .collect();
            let target: BTreeSet<(usize, usize)> =
                sphere.incidence().iter().copied().collect();
            if image.len() == map.len() && dims_match && mapped == target {
                candidate = Some(map);
            }
        }
    }

    let oracle_found = moduli.to_poset().isomorphism(&sphere.to_poset()).is_some();
    let mapping = match building {
        BuildingSet::Minimal => candidate,
        // No explicit map is defined for the maximal variant; report the
        // oracle's verdict (expected: no isomorphism exists).
        BuildingSet::Maximal => {
            if oracle_found {
                moduli.to_poset().isomorphism(&sphere.to_poset())
            } else {
                None
            }
        }
    };

    Ok(KapranovReport {
        n,
        building,
        moduli_top_cells: moduli.top_cells().len(),
        sphere_top_cells: sphere.top_cells().len(),
        moduli_f_vector: moduli.f_vector(),
        sphere_f_vector: sphere.f_vector(),
        map_well_defined,
        mapping,
        oracle_found,
    })
}

/// Do the two spaces have the same number of top cells?
pub fn chamber_counts_equal(n: usize) -> bool {
    enumerate_tiles(Space::ProjectiveSphere, n).len() == enumerate_tiles(Space::Moduli, n).len()
}

/// Census of moduli chambers before compactification, grouped by the
/// partition shape of their region sizes (number of free nodes per region,
/// zeros dropped, descending). Shape `[k]` is a simplex chamber, `[1, 1]` a
/// square, and so on.
pub fn moduli_chamber_census(n: usize) -> Vec<(Vec<usize>, usize)> {
    let mut census: std::collections::BTreeMap<Vec<usize>, usize> = Default::default();
    for tile in enumerate_tiles(Space::Moduli, n) {
        let labels = tile.canonical.labels();
        let p1 = labels.iter().position(|&l| l == 1).unwrap();
        let p2 = labels.iter().position(|&l| l == 2).unwrap();
        let mut shape = vec![p1 - 1, p2 - p1 - 1, labels.len() - p2 - 1];
        shape.retain(|&r| r > 0);
        shape.sort_unstable_by(|a, b| b.cmp(a));
        *census.entry(shape).or_insert(0) += 1;
    }
    census.into_iter().collect()
}

/// Human-readable name of a chamber shape: the product of simplices whose
/// factors are the region sizes.
pub fn shape_name(shape: &[usize]) -> String {
    match shape {
        [2] => "triangle".to_string(),
        [1, 1] => "square".to_string(),
        _ => shape.iter().map(|k| format!("D{k}")).collect::<Vec<_>>().join(" x "),
    }
}

/// Convenience wrapper returning both complexes of one space pair.
pub fn build_pair(
    n: usize,
    building: BuildingSet,
    limit: usize,
) -> Result<(CellComplex, CellComplex), TilingError> {
    Ok((
        build_internal(Space::ProjectiveSphere, n, building, limit)?.0,
        build_internal(Space::Moduli, n, building, limit)?.0,
    ))
}
