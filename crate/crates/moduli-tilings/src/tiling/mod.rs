//! Labeled tiles, twist moves and glued cell complexes.
//!
//! The blown-up projective sphere and the compactified real moduli space are
//! both tiled by `(n + 2)! / 2` associahedra. Here each tile is a labeled
//! diagram, faces of tiles are diagrams with collision schemes, and the
//! gluing identifies faces reachable from one another by twists. The module
//! builds the resulting cell complexes, computes Euler characteristics,
//! classifies the glued surfaces at `n = 2`, checks right-angledness, and
//! compares the two cellulations.

mod complex;
mod diagram;
mod kapranov;
mod surface;

pub use complex::{
    build_complex, build_complex_with_limit, enumerate_tiles, BuildingSet, Cell, CellComplex,
    Space, DEFAULT_COMPLEX_LIMIT,
};
pub use diagram::{
    twist_class, DiagramKind, LabeledDiagram, Scheme, TwistClass, FIRST_FREE_LABEL,
    LABEL_INFINITY, LABEL_ONE, LABEL_ZERO,
};
pub use kapranov::{
    build_pair, chamber_counts_equal, cut_to_path, moduli_chamber_census, shape_name,
    verify_kapranov, KapranovReport,
};
pub use surface::{PolygonSurface, SurfaceReport};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TilingError {
    #[error("labels must be distinct and fill the frame")]
    BadLabels,
    #[error("block (start {start}, len {len}) is not valid on this frame")]
    BadBlock { start: usize, len: usize },
    #[error("scheme blocks overlap")]
    BlocksOverlap,
    #[error("the scheme is not part of this diagram")]
    SchemeAbsent,
    #[error("circle diagrams admit no global reflection")]
    NoReflection,
    #[error("n = {n} exceeds the complex enumeration limit {limit}")]
    EnumerationLimit { n: usize, limit: usize },
    #[error("the maximal building set is supported at n = 2 only, got n = {n}")]
    MaximalOutOfScope { n: usize },
    #[error("surface classification needs a 2-dimensional complex, got dimension {dim}")]
    NotTwoDimensional { dim: usize },
    #[error("complex carries no polygon boundary structure")]
    NoSurfaceData,
    #[error("incidence ({lower}, {upper}) does not raise dimension by one")]
    BadIncidence { lower: usize, upper: usize },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tile_counts_match_half_factorials() {
        let half_factorial = |n: usize| -> usize {
            (1..=n + 2).product::<usize>() / 2
        };
        for n in 1..=3 {
            assert_eq!(enumerate_tiles(Space::ProjectiveSphere, n).len(), half_factorial(n));
            assert_eq!(enumerate_tiles(Space::Moduli, n).len(), half_factorial(n));
        }
    }

    #[test]
    fn sphere_complex_at_n2() {
        let complex = build_complex(Space::ProjectiveSphere, 2, BuildingSet::Minimal).unwrap();
        assert_eq!(complex.f_vector(), vec![15, 30, 12]);
        assert_eq!(complex.euler_characteristic(), -3);
        assert!(complex.verify_right_angled());
        let report = complex.classify_surface().unwrap();
        assert!(report.closed);
        assert!(!report.orientable);
        assert_eq!(report.chi, -3);
        assert_eq!(report.surface_name().unwrap(), "connected sum of 5 projective planes");
    }

    #[test]
    fn moduli_complex_at_n2() {
        let complex = build_complex(Space::Moduli, 2, BuildingSet::Minimal).unwrap();
        assert_eq!(complex.f_vector(), vec![15, 30, 12]);
        assert_eq!(complex.euler_characteristic(), -3);
        assert!(complex.verify_right_angled());
        let report = complex.classify_surface().unwrap();
        assert!(report.closed);
        assert!(!report.orientable);
        assert_eq!(report.chi, -3);
        assert_eq!(complex.polygon_size_census().unwrap(), [(5, 12)].into_iter().collect());
    }

    #[test]
    fn edges_pair_and_vertices_quadruple_at_n2() {
        for space in [Space::ProjectiveSphere, Space::Moduli] {
            let complex = build_complex(space, 2, BuildingSet::Minimal).unwrap();
            for cell in complex.cells() {
                match cell.dim {
                    1 => assert_eq!(cell.corners, 2),
                    0 => assert_eq!(cell.corners, 4),
                    _ => assert_eq!(cell.corners, 1),
                }
            }
        }
    }

    #[test]
    fn maximal_complexes_at_n2() {
        let sphere = build_complex(Space::ProjectiveSphere, 2, BuildingSet::Maximal).unwrap();
        assert_eq!(sphere.f_vector(), vec![18, 36, 12]);
        assert_eq!(sphere.euler_characteristic(), -6);
        assert_eq!(sphere.polygon_size_census().unwrap(), [(6, 12)].into_iter().collect());
        let sphere_report = sphere.classify_surface().unwrap();
        assert!(sphere_report.closed && !sphere_report.orientable);

        let moduli = build_complex(Space::Moduli, 2, BuildingSet::Maximal).unwrap();
        assert_eq!(moduli.f_vector(), vec![21, 42, 12]);
        assert_eq!(moduli.euler_characteristic(), -9);
        assert_eq!(
            moduli.polygon_size_census().unwrap(),
            [(6, 6), (8, 6)].into_iter().collect()
        );
        let moduli_report = moduli.classify_surface().unwrap();
        assert!(moduli_report.closed && !moduli_report.orientable);

        assert!(sphere.verify_right_angled());
        assert!(moduli.verify_right_angled());
    }

    #[test]
    fn maximal_rejected_away_from_n2() {
        assert_eq!(
            build_complex(Space::Moduli, 3, BuildingSet::Maximal).unwrap_err(),
            TilingError::MaximalOutOfScope { n: 3 }
        );
    }

    #[test]
    fn enumeration_limit_is_enforced() {
        assert_eq!(
            build_complex_with_limit(Space::Moduli, 3, BuildingSet::Minimal, 2).unwrap_err(),
            TilingError::EnumerationLimit { n: 3, limit: 2 }
        );
    }

    #[test]
    fn kapranov_verdicts_at_n2() {
        let report = verify_kapranov(2, BuildingSet::Minimal, 2).unwrap();
        assert!(report.isomorphic());
        assert!(report.map_well_defined);
        assert!(report.oracle_agrees());
        assert_eq!((report.moduli_top_cells, report.sphere_top_cells), (12, 12));

        let maximal = verify_kapranov(2, BuildingSet::Maximal, 2).unwrap();
        assert!(!maximal.isomorphic());
        assert!(maximal.oracle_agrees());
    }

    #[test]
    fn moduli_census_at_n2() {
        let census = moduli_chamber_census(2);
        assert_eq!(census, vec![(vec![1, 1], 6), (vec![2], 6)]);
        assert_eq!(shape_name(&[2]), "triangle");
        assert_eq!(shape_name(&[1, 1]), "square");
    }

    #[test]
    fn chamber_counts_agree() {
        for n in 1..=3 {
            assert!(chamber_counts_equal(n));
        }
    }

    #[test]
    fn right_angled_at_n3() {
        for space in [Space::ProjectiveSphere, Space::Moduli] {
            let complex = build_complex(space, 3, BuildingSet::Minimal).unwrap();
            assert!(complex.verify_right_angled(), "{space:?} at n = 3");
        }
    }

    #[test]
    fn tiles_really_are_associahedra() {
        // The faces below every tile form the face poset of the
        // associahedron, in both complexes.
        use crate::bracketings::{face_poset, PathFrame};
        let reference = face_poset(PathFrame::free(4));
        for space in [Space::ProjectiveSphere, Space::Moduli] {
            let complex = build_complex(space, 2, BuildingSet::Minimal).unwrap();
            for tile in complex.top_cells() {
                let mut below = vec![false; complex.cells().len()];
                below[tile] = true;
                for dim in (0..2).rev() {
                    for &(l, u) in complex.incidence() {
                        if below[u] && complex.cells()[l].dim == dim {
                            below[l] = true;
                        }
                    }
                }
                let ids: Vec<usize> =
                    (0..complex.cells().len()).filter(|&c| below[c]).collect();
                let reindex: std::collections::HashMap<usize, usize> =
                    ids.iter().enumerate().map(|(i, &c)| (c, i)).collect();
                let ranks: Vec<usize> =
                    ids.iter().map(|&c| 2 - complex.cells()[c].dim).collect();
                let covers: Vec<(usize, usize)> = complex
                    .incidence()
                    .iter()
                    .filter(|(l, u)| below[*l] && below[*u])
                    .map(|&(l, u)| (reindex[&u], reindex[&l]))
                    .collect();
                let tile_poset = crate::poset::GradedPoset::new(ranks, covers).unwrap();
                assert!(
                    tile_poset.isomorphism(&reference.poset).is_some(),
                    "{space:?} tile {tile} is a pentagon"
                );
            }
        }
    }

    #[test]
    fn hand_built_pentagon_with_free_boundary() {
        let mut cells = Vec::new();
        for _ in 0..5 {
            cells.push(Cell { dim: 0, diagram: None, orbit_size: 1, corners: 1 });
        }
        for _ in 0..5 {
            cells.push(Cell { dim: 1, diagram: None, orbit_size: 1, corners: 1 });
        }
        cells.push(Cell { dim: 2, diagram: None, orbit_size: 1, corners: 1 });
        let mut incidence = Vec::new();
        for e in 0..5usize {
            incidence.push((e, 5 + e));
            incidence.push(((e + 1) % 5, 5 + e));
            incidence.push((5 + e, 10));
        }
        let surface = PolygonSurface { polygons: vec![(0..5).map(|e| (e, true)).collect()] };
        let complex = CellComplex::from_parts(2, cells, incidence, Some(surface)).unwrap();
        assert_eq!(complex.euler_characteristic(), 1);
        // The unglued boundary edges kill right-angledness and closedness.
        assert!(!complex.verify_right_angled());
        let report = complex.classify_surface().unwrap();
        assert!(!report.closed);
    }

    #[test]
    fn hand_built_torus_square() {
        let cells = vec![
            Cell { dim: 0, diagram: None, orbit_size: 1, corners: 4 },
            Cell { dim: 1, diagram: None, orbit_size: 1, corners: 2 },
            Cell { dim: 1, diagram: None, orbit_size: 1, corners: 2 },
            Cell { dim: 2, diagram: None, orbit_size: 1, corners: 1 },
        ];
        let incidence = vec![(0, 1), (0, 2), (1, 3), (2, 3)];
        let surface = PolygonSurface {
            polygons: vec![vec![(0, true), (1, true), (0, false), (1, false)]],
        };
        let complex = CellComplex::from_parts(2, cells, incidence, Some(surface)).unwrap();
        let report = complex.classify_surface().unwrap();
        assert!(report.closed);
        assert!(report.orientable);
        assert_eq!(report.chi, 0);
        assert_eq!(complex.euler_characteristic(), 0);
    }

    #[test]
    fn from_parts_rejects_dimension_skips() {
        let cells = vec![
            Cell { dim: 0, diagram: None, orbit_size: 1, corners: 1 },
            Cell { dim: 2, diagram: None, orbit_size: 1, corners: 1 },
        ];
        assert_eq!(
            CellComplex::from_parts(2, cells, vec![(0, 1)], None).unwrap_err(),
            TilingError::BadIncidence { lower: 0, upper: 1 }
        );
    }

    #[test]
    fn orbit_sizes_divide_the_twist_group_order() {
        for space in [Space::ProjectiveSphere, Space::Moduli] {
            let complex = build_complex(space, 2, BuildingSet::Minimal).unwrap();
            for cell in complex.cells() {
                let codim = complex.dim() - cell.dim;
                let group = match space {
                    Space::ProjectiveSphere => 1usize << (codim + 1),
                    Space::Moduli => 1usize << codim,
                };
                assert_eq!(group % cell.orbit_size, 0);
            }
        }
    }
}
