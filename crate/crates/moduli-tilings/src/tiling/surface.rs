//! Classification of surfaces glued from polygons.
//!
//! A surface is given by polygons whose boundary slots name directed edges:
//! two slots carrying the same edge id are glued, tail to tail when their
//! direction bits agree and tail to head otherwise. Closedness, orientability
//! and the Euler characteristic then follow from edge counts, a parity
//! propagation over polygons, and corner tracing.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

/// Polygons as cyclic lists of `(edge id, direction)` slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonSurface {
    pub polygons: Vec<Vec<(usize, bool)>>,
}

#[derive(Debug, Clone)]
pub struct SurfaceReport {
    pub closed: bool,
    pub orientable: bool,
    pub chi: i64,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    /// Polygon size -> number of polygons of that size.
    pub polygon_sides: BTreeMap<usize, usize>,
    pub diagnostics: Vec<String>,
}

impl SurfaceReport {
    /// Name of the closed surface with this orientability and Euler
    /// characteristic, by the classification of surfaces.
    pub fn surface_name(&self) -> Option<String> {
        if !self.closed {
            return None;
        }
        Some(if self.orientable {
            match self.chi {
                2 => "sphere".to_string(),
                0 => "torus".to_string(),
                chi => format!("orientable surface of genus {}", (2 - chi) / 2),
            }
        } else {
            let k = 2 - self.chi;
            format!("connected sum of {k} projective planes")
        })
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

impl PolygonSurface {
    /// Classifies the glued surface. When `corner_cells` names the vertex
    /// cell of every polygon corner, the traced corner classes are checked
    /// against that cell structure (each vertex cell must be a single link
    /// cycle); otherwise the traced classes themselves are the vertices.
    pub fn classify(&self, corner_cells: Option<&[Vec<usize>]>) -> SurfaceReport {
        let mut diagnostics = Vec::new();

        // Global slot numbering and the slots of each edge.
        let mut slots: Vec<(usize, usize)> = Vec::new();
        let mut slot_id: HashMap<(usize, usize), usize> = HashMap::new();
        let mut edge_slots: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (p, polygon) in self.polygons.iter().enumerate() {
            for (i, &(edge, _)) in polygon.iter().enumerate() {
                let id = slots.len();
                slot_id.insert((p, i), id);
                slots.push((p, i));
                edge_slots.entry(edge).or_default().push(id);
            }
        }
        let edge_count = edge_slots.len();
        let face_count = self.polygons.len();

        let mut closed = true;
        for (&edge, ids) in &edge_slots {
            if ids.len() != 2 {
                closed = false;
                diagnostics.push(format!("edge {edge} lies in {} polygon sides, not 2", ids.len()));
            }
        }

        // Orientability: propagate polygon flips so glued slots run oppositely.
        let dir_of = |slot: usize| -> bool {
            let (p, i) = slots[slot];
            self.polygons[p][i].1
        };
        let mut flip: Vec<Option<bool>> = vec![None; face_count];
        let mut orientable = true;
        for start in 0..face_count {
            if flip[start].is_some() {
                continue;
            }
            flip[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(p) = queue.pop_front() {
                let my_flip = flip[p].unwrap();
                for i in 0..self.polygons[p].len() {
                    let id = slot_id[&(p, i)];
                    let edge = self.polygons[p][i].0;
                    let ids = &edge_slots[&edge];
                    if ids.len() != 2 {
                        continue;
                    }
                    let other = if ids[0] == id { ids[1] } else { ids[0] };
                    let (q, _) = slots[other];
                    let same_dir = dir_of(id) == dir_of(other);
                    // Opposite traversal requires exactly one flip when the
                    // raw directions agree.
                    let needed = my_flip ^ same_dir;
                    match flip[q] {
                        None => {
                            flip[q] = Some(needed);
                            queue.push_back(q);
                        }
                        Some(existing) if existing != needed => {
                            orientable = false;
                        }
                        _ => {}
                    }
                }
            }
        }

        // Corner tracing: each slot has a tail end and a head end (in cycle
        // order); corners join head(i) to tail(i+1), gluings join matching
        // ends.
        let mut uf = UnionFind::new(2 * slots.len());
        let tail = |slot: usize| 2 * slot;
        let head = |slot: usize| 2 * slot + 1;
        for (p, polygon) in self.polygons.iter().enumerate() {
            let m = polygon.len();
            for i in 0..m {
                uf.union(head(slot_id[&(p, i)]), tail(slot_id[&(p, (i + 1) % m)]));
            }
        }
        for ids in edge_slots.values() {
            if let [a, b] = ids[..] {
                if dir_of(a) == dir_of(b) {
                    uf.union(tail(a), tail(b));
                    uf.union(head(a), head(b));
                } else {
                    uf.union(tail(a), head(b));
                    uf.union(head(a), tail(b));
                }
            }
        }
        let mut roots = BTreeSet::new();
        for end in 0..2 * slots.len() {
            roots.insert(uf.find(end));
        }
        let vertex_count = roots.len();

        if let Some(cells) = corner_cells {
            // Corner (p, i) lives at the class of head(slot (p, i)).
            let mut class_cells: HashMap<usize, BTreeSet<usize>> = HashMap::new();
            let mut cell_classes: HashMap<usize, BTreeSet<usize>> = HashMap::new();
            for (p, polygon) in self.polygons.iter().enumerate() {
                for i in 0..polygon.len() {
                    let class = uf.find(head(slot_id[&(p, i)]));
                    let cell = cells[p][i];
                    class_cells.entry(class).or_default().insert(cell);
                    cell_classes.entry(cell).or_default().insert(class);
                }
            }
            for (class, cells_hit) in &class_cells {
                if cells_hit.len() != 1 {
                    closed = false;
                    diagnostics.push(format!(
                        "corner trace class {class} spans {} vertex cells",
                        cells_hit.len()
                    ));
                }
            }
            for (cell, classes) in &cell_classes {
                if classes.len() != 1 {
                    closed = false;
                    diagnostics.push(format!(
                        "vertex cell {cell} has a link with {} components",
                        classes.len()
                    ));
                }
            }
        }

        let chi = vertex_count as i64 - edge_count as i64 + face_count as i64;
        let mut polygon_sides = BTreeMap::new();
        for polygon in &self.polygons {
            *polygon_sides.entry(polygon.len()).or_insert(0) += 1;
        }
        SurfaceReport {
            closed,
            orientable,
            chi,
            vertex_count,
            edge_count,
            face_count,
            polygon_sides,
            diagnostics,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_from_a_square() {
        // Standard word a b a^- b^-.
        let surface = PolygonSurface {
            polygons: vec![vec![(0, true), (1, true), (0, false), (1, false)]],
        };
        let report = surface.classify(None);
        assert!(report.closed);
        assert!(report.orientable);
        assert_eq!(report.chi, 0);
        assert_eq!(report.vertex_count, 1);
        assert_eq!(report.surface_name().unwrap(), "torus");
    }

    #[test]
    fn projective_plane_from_a_bigon() {
        let surface = PolygonSurface { polygons: vec![vec![(0, true), (0, true)]] };
        let report = surface.classify(None);
        assert!(report.closed);
        assert!(!report.orientable);
        assert_eq!(report.chi, 1);
        assert_eq!(report.surface_name().unwrap(), "connected sum of 1 projective planes");
    }

    #[test]
    fn klein_bottle_from_a_square() {
        // a b a b^-: one direction pair mismatched.
        let surface = PolygonSurface {
            polygons: vec![vec![(0, true), (1, true), (0, true), (1, false)]],
        };
        let report = surface.classify(None);
        assert!(report.closed);
        assert!(!report.orientable);
        assert_eq!(report.chi, 0);
    }

    #[test]
    fn sphere_from_two_triangles() {
        let surface = PolygonSurface {
            polygons: vec![
                vec![(0, true), (1, true), (2, true)],
                vec![(2, false), (1, false), (0, false)],
            ],
        };
        let report = surface.classify(None);
        assert!(report.closed);
        assert!(report.orientable);
        assert_eq!(report.chi, 2);
        assert_eq!(report.vertex_count, 3);
    }

    #[test]
    fn bare_pentagon_has_boundary() {
        let surface = PolygonSurface {
            polygons: vec![(0..5).map(|e| (e, true)).collect()],
        };
        let report = surface.classify(None);
        assert!(!report.closed);
        assert_eq!(report.chi, 1); // V - E + F = 5 - 5 + 1
        assert!(report.surface_name().is_none());
        assert!(!report.diagnostics.is_empty());
    }
}
