//! Abstract simple polytopes as vertex-facet incidence, with products, face
//! truncation and the iterated truncations that carve associahedra out of
//! simplices and triple products of simplices.
//!
//! Everything is purely combinatorial. A face is the set of facets containing
//! it; in a simple polytope a nonempty intersection of `k` facets is a face of
//! codimension exactly `k`, so faces are just subsets of facet indices with a
//! common vertex, stored as bitmasks. Truncating a codimension-`k` face `F`
//! replaces it with a new facet combinatorially equal to `F x simplex(k-1)`,
//! which on incidence data is a pure set manipulation.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde_json::json;
use thiserror::Error;

use crate::poset::GradedPoset;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("face {0:#x} is not a face of this polytope")]
    NotAFace(u64),
    #[error("cannot truncate a face of codimension {0}; need codimension >= 2")]
    CodimTooSmall(usize),
    #[error("polytope has no facet labels")]
    Unlabeled,
    #[error("scheduled face {0:#x} vanished before its truncation step")]
    ScheduleFaceVanished(u64),
    #[error("facet capacity exceeded (at most 64 facets supported)")]
    TooManyFacets,
}

/// Set of facet indices, one bit per facet.
pub type FaceRef = u64;

/// Set of node positions on a collision frame, one bit per node.
pub type NodeMask = u32;

/// The particle frame a labeled polytope lives on: an interval with fixed
/// endpoints, or a circle with three fixed nodes separating three regions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CollisionFrame {
    /// `free` particles strictly between two fixed endpoints; node positions
    /// `0..free + 2` with positions `0` and `free + 1` fixed.
    Interval { free: usize },
    /// Three fixed nodes with `regions.0`, `regions.1`, `regions.2` free
    /// nodes between them, in canonical cyclic order starting at a fixed node.
    Circle { regions: (usize, usize, usize) },
}

impl CollisionFrame {
    pub fn node_count(&self) -> usize {
        match self {
            CollisionFrame::Interval { free } => free + 2,
            CollisionFrame::Circle { regions: (x, y, z) } => x + y + z + 3,
        }
    }

    pub fn fixed_mask(&self) -> NodeMask {
        match self {
            CollisionFrame::Interval { free } => 1 | (1 << (free + 1)),
            CollisionFrame::Circle { regions: (x, y, _) } => {
                1 | (1 << (x + 1)) | (1 << (x + y + 2))
            }
        }
    }

    pub fn fixed_count(&self, mask: NodeMask) -> usize {
        (mask & self.fixed_mask()).count_ones() as usize
    }

    /// Whether the node set forms one contiguous run (cyclically, on circles).
    pub fn is_contiguous(&self, mask: NodeMask) -> bool {
        if mask == 0 {
            return false;
        }
        let n = self.node_count();
        match self {
            CollisionFrame::Interval { .. } => {
                let start = mask.trailing_zeros();
                let len = mask.count_ones();
                mask == (((1u64 << len) - 1) as NodeMask) << start
            }
            CollisionFrame::Circle { .. } => {
                let runs = (0..n)
                    .filter(|&p| mask & (1 << p) != 0 && mask & (1 << ((p + 1) % n)) == 0)
                    .count();
                runs <= 1
            }
        }
    }

    /// Start position and length of a contiguous run.
    pub fn run_of(&self, mask: NodeMask) -> Option<(usize, usize)> {
        if !self.is_contiguous(mask) {
            return None;
        }
        let n = self.node_count();
        let len = mask.count_ones() as usize;
        if len == n {
            return Some((0, n));
        }
        let start = (0..n)
            .find(|&p| mask & (1 << p) != 0 && mask & (1 << ((p + n - 1) % n)) == 0)
            .unwrap();
        Some((start, len))
    }

    fn label_json(&self, mask: NodeMask) -> serde_json::Value {
        let (start, len) = self.run_of(mask).expect("facet labels are contiguous runs");
        match self {
            CollisionFrame::Interval { .. } => json!([start, start + len - 1]),
            CollisionFrame::Circle { .. } => {
                json!([start, len, start + len > self.node_count()])
            }
        }
    }

    fn label_display(&self, mask: NodeMask) -> String {
        let (start, len) = self.run_of(mask).expect("facet labels are contiguous runs");
        match self {
            CollisionFrame::Interval { .. } => format!("({},{})", start, start + len - 1),
            CollisionFrame::Circle { .. } => format!("[{start}+{len}]"),
        }
    }
}

/// Facet labels over a collision frame: each facet carries the node set of
/// the particle collision it represents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    pub frame: CollisionFrame,
    pub by_facet: Vec<NodeMask>,
}

/// A simple polytope as vertex-facet incidence. Every vertex is the set of
/// the `dim` facets through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplePolytope {
    dim: usize,
    facet_count: usize,
    vertices: Vec<FaceRef>,
    labels: Option<Labeling>,
}

impl SimplePolytope {
    fn assemble(
        dim: usize,
        facet_count: usize,
        mut vertices: Vec<FaceRef>,
        labels: Option<Labeling>,
    ) -> SimplePolytope {
        vertices.sort_unstable();
        vertices.dedup();
        let p = SimplePolytope { dim, facet_count, vertices, labels };
        p.validate();
        p
    }

    /// Simplicity and coverage checks; cheap enough to run after every step.
    fn validate(&self) {
        assert!(self.facet_count <= 64, "facet capacity exceeded");
        let mut covered: FaceRef = 0;
        for &v in &self.vertices {
            assert_eq!(
                v.count_ones() as usize,
                self.dim,
                "vertex lies in {} facets, expected {}",
                v.count_ones(),
                self.dim
            );
            covered |= v;
        }
        let all = if self.facet_count == 64 { !0 } else { (1u64 << self.facet_count) - 1 };
        assert_eq!(covered, all, "some facet contains no vertex");
        if let Some(l) = &self.labels {
            assert_eq!(l.by_facet.len(), self.facet_count);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facet_count(&self) -> usize {
        self.facet_count
    }

    pub fn vertices(&self) -> &[FaceRef] {
        &self.vertices
    }

    pub fn labels(&self) -> Option<&Labeling> {
        self.labels.as_ref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Whether the facet set has a common vertex, i.e. names a face.
    pub fn is_face(&self, face: FaceRef) -> bool {
        self.vertices.iter().any(|&v| v & face == face)
    }

    /// All faces, as facet sets, including the empty set (the polytope).
    pub fn faces(&self) -> BTreeSet<FaceRef> {
        let mut faces = BTreeSet::new();
        for &v in &self.vertices {
            let mut sub = v;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & v;
            }
        }
        faces
    }

    pub fn face_vertices(&self, face: FaceRef) -> Vec<FaceRef> {
        self.vertices.iter().copied().filter(|&v| v & face == face).collect()
    }

    /// Counts of faces per codimension, codim 0 first.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.dim + 1];
        for f in self.faces() {
            counts[f.count_ones() as usize] += 1;
        }
        counts
    }
}

/// The abstract `n`-simplex: `n + 1` facets, each vertex omitting one.
/// The point (`n = 0`) has no facets and a single empty vertex.
pub fn simplex(n: usize) -> SimplePolytope {
    if n == 0 {
        return SimplePolytope { dim: 0, facet_count: 0, vertices: vec![0], labels: None };
    }
    let all = (1u64 << (n + 1)) - 1;
    let vertices = (0..=n).map(|i| all & !(1 << i)).collect();
    SimplePolytope::assemble(n, n + 1, vertices, None)
}

/// The `m`-gon as a simple 2-polytope; facet `i` joins vertices `i` and `i+1`.
pub fn polygon(m: usize) -> SimplePolytope {
    assert!(m >= 3);
    let vertices = (0..m).map(|i| (1u64 << i) | (1u64 << ((i + 1) % m))).collect();
    SimplePolytope::assemble(2, m, vertices, None)
}

/// Product of two simple polytopes: facets are the disjoint union, vertices
/// pair one vertex from each factor, dimensions add. Labels survive when the
/// factors share a frame (a zero-facet factor imposes nothing).
pub fn product(p: &SimplePolytope, q: &SimplePolytope) -> SimplePolytope {
    let facet_count = p.facet_count + q.facet_count;
    assert!(facet_count <= 64, "facet capacity exceeded");
    let mut vertices = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for &u in &p.vertices {
        for &v in &q.vertices {
            vertices.push(u | (v << p.facet_count));
        }
    }
    let labels = match (&p.labels, &q.labels) {
        (Some(a), Some(b)) if a.frame == b.frame => Some(Labeling {
            frame: a.frame,
            by_facet: a.by_facet.iter().chain(b.by_facet.iter()).copied().collect(),
        }),
        (Some(a), None) if q.facet_count == 0 => Some(a.clone()),
        (None, Some(b)) if p.facet_count == 0 => Some(b.clone()),
        _ => None,
    };
    SimplePolytope::assemble(p.dim + q.dim, facet_count, vertices, labels)
}

/// The `n`-simplex seen as `n` particles on the unit interval: facet `i` is
/// the collision of the adjacent node pair `(i, i + 1)`.
pub fn build_interval_simplex(n_free: usize) -> SimplePolytope {
    assert!(n_free >= 1);
    let mut p = simplex(n_free);
    let by_facet = (0..=n_free).map(|i| (1 << i) | (1 << (i + 1))).collect();
    p.labels = Some(Labeling { frame: CollisionFrame::Interval { free: n_free }, by_facet });
    p.validate();
    p
}

/// The triple product of simplices for a partition of free nodes into the
/// three circle regions. Empty regions contribute no factor and no facets;
/// each facet is labeled by the adjacent node pair it collides.
pub fn build_circle_product(partition: (usize, usize, usize)) -> SimplePolytope {
    let (x, y, z) = partition;
    assert!(x + y + z >= 1, "partition must place at least one free node");
    let frame = CollisionFrame::Circle { regions: partition };
    let n = frame.node_count();
    let region_starts = [0, x + 1, x + y + 2];

    let mut result = simplex(0);
    for (r, &k) in [x, y, z].iter().enumerate() {
        if k == 0 {
            continue;
        }
        let mut factor = simplex(k);
        let by_facet = (0..=k)
            .map(|j| {
                let a = region_starts[r] + j;
                let b = (a + 1) % n;
                (1 << a) | (1 << b)
            })
            .collect();
        factor.labels = Some(Labeling { frame, by_facet });
        result = product(&result, &factor);
    }
    result
}

/// Truncation order: groups of equal-codimension faces, deepest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationSchedule {
    /// Each group holds faces of one codimension; groups are ordered by
    /// increasing dimension (decreasing codimension), faces within a group
    /// lexicographically by their facet index lists.
    pub groups: Vec<Vec<FaceRef>>,
}

impl TruncationSchedule {
    pub fn face_count(&self) -> usize {
        self.groups.iter().map(|g| g.len()).sum()
    }

    pub fn flatten(&self) -> Vec<FaceRef> {
        self.groups.iter().flatten().copied().collect()
    }
}

fn facet_indices(face: FaceRef) -> Vec<usize> {
    (0..64).filter(|&i| face & (1 << i) != 0).collect()
}

/// Faces where three or more adjacent particles collide: facet sets whose
/// labels merge into one contiguous run with at most one fixed node. These
/// are exactly the faces to truncate, grouped deepest first.
pub fn collision_faces(p: &SimplePolytope) -> Result<TruncationSchedule, PolytopeError> {
    let labels = p.labels.as_ref().ok_or(PolytopeError::Unlabeled)?;
    let mut by_codim: Vec<Vec<FaceRef>> = vec![Vec::new(); p.dim + 1];
    for face in p.faces() {
        let k = face.count_ones() as usize;
        if k < 2 {
            continue;
        }
        let merged = facet_indices(face)
            .iter()
            .fold(0 as NodeMask, |m, &g| m | labels.by_facet[g]);
        let chained = merged.count_ones() as usize == k + 1;
        if chained && labels.frame.is_contiguous(merged) && labels.frame.fixed_count(merged) <= 1 {
            by_codim[k].push(face);
        }
    }
    let mut groups: Vec<Vec<FaceRef>> = Vec::new();
    for mut group in by_codim.into_iter().rev() {
        if group.is_empty() {
            continue;
        }
        group.sort_by_key(|&f| facet_indices(f));
        groups.push(group);
    }
    Ok(TruncationSchedule { groups })
}

/// Truncates one face of codimension `k >= 2`: adds a facet and replaces
/// every vertex on the face by `k` vertices, one per facet of the face.
pub fn truncate_face(p: &SimplePolytope, face: FaceRef) -> Result<SimplePolytope, PolytopeError> {
    let k = face.count_ones() as usize;
    if !p.is_face(face) {
        return Err(PolytopeError::NotAFace(face));
    }
    if k < 2 {
        return Err(PolytopeError::CodimTooSmall(k));
    }
    if p.facet_count >= 64 {
        return Err(PolytopeError::TooManyFacets);
    }
    let new_bit = 1u64 << p.facet_count;
    let mut vertices = Vec::with_capacity(p.vertices.len() + (k - 1) * p.face_vertices(face).len());
    for &v in &p.vertices {
        if v & face == face {
            for g in facet_indices(face) {
                vertices.push((v & !(1 << g)) | new_bit);
            }
        } else {
            vertices.push(v);
        }
    }
    let labels = p.labels.as_ref().map(|l| {
        let merged = facet_indices(face).iter().fold(0, |m, &g| m | l.by_facet[g]);
        let mut by_facet = l.by_facet.clone();
        by_facet.push(merged);
        Labeling { frame: l.frame, by_facet }
    });
    Ok(SimplePolytope::assemble(p.dim, p.facet_count + 1, vertices, labels))
}

/// Runs a whole schedule. Scheduled faces are identified by their original
/// facet sets, which stay meaningful because truncation only adds facets.
pub fn iterated_truncation(
    p: &SimplePolytope,
    schedule: &TruncationSchedule,
) -> Result<SimplePolytope, PolytopeError> {
    let mut current = p.clone();
    for group in &schedule.groups {
        for &face in group {
            if !current.is_face(face) {
                return Err(PolytopeError::ScheduleFaceVanished(face));
            }
            current = truncate_face(&current, face)?;
        }
    }
    Ok(current)
}

/// Face lattice with elements listed alongside the graded structure.
/// Rank = codimension; the empty facet set (the whole polytope) is rank 0.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    pub faces: Vec<FaceRef>,
    pub poset: GradedPoset,
}

pub fn face_lattice(p: &SimplePolytope) -> FaceLattice {
    let mut faces: Vec<FaceRef> = p.faces().into_iter().collect();
    faces.sort_by_key(|&f| (f.count_ones(), facet_indices(f)));
    let index: HashMap<FaceRef, usize> =
        faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let ranks: Vec<usize> = faces.iter().map(|f| f.count_ones() as usize).collect();
    let mut covers = Vec::new();
    for (upper, &f) in faces.iter().enumerate() {
        for g in facet_indices(f) {
            covers.push((index[&(f & !(1 << g))], upper));
        }
    }
    let poset = GradedPoset::new(ranks, covers).expect("face deletion drops codim by one");
    FaceLattice { faces, poset }
}

/// The face lattice of one facet, re-rooted at that facet: elements are the
/// faces containing it. Used for facet-by-facet censuses.
pub fn facet_lattice(p: &SimplePolytope, facet: usize) -> GradedPoset {
    let bit = 1u64 << facet;
    let mut faces: Vec<FaceRef> = p.faces().into_iter().filter(|&f| f & bit == bit).collect();
    faces.sort_by_key(|&f| (f.count_ones(), facet_indices(f)));
    let index: HashMap<FaceRef, usize> =
        faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let ranks: Vec<usize> = faces.iter().map(|f| f.count_ones() as usize - 1).collect();
    let mut covers = Vec::new();
    for (upper, &f) in faces.iter().enumerate() {
        for g in facet_indices(f) {
            if g != facet {
                covers.push((index[&(f & !(1 << g))], upper));
            }
        }
    }
    GradedPoset::new(ranks, covers).expect("facet lattice is graded")
}

/// JSON dump: dimension, facets with optional labels, vertices as facet ids.
pub fn polytope_json(p: &SimplePolytope) -> serde_json::Value {
    let facets: Vec<_> = (0..p.facet_count)
        .map(|id| {
            let label = match &p.labels {
                Some(l) => l.frame.label_json(l.by_facet[id]),
                None => serde_json::Value::Null,
            };
            json!({ "id": id, "label": label })
        })
        .collect();
    let vertices: Vec<Vec<usize>> = p.vertices.iter().map(|&v| facet_indices(v)).collect();
    json!({ "dim": p.dim, "facets": facets, "vertices": vertices })
}

/// DOT export of the face lattice, nodes labelled by facet sets (with their
/// collision labels when present).
pub fn lattice_dot(p: &SimplePolytope) -> String {
    let fl = face_lattice(p);
    let labels: Vec<String> = fl
        .faces
        .iter()
        .map(|&f| {
            if f == 0 {
                return "{}".to_string();
            }
            let parts: Vec<String> = facet_indices(f)
                .into_iter()
                .map(|g| match &p.labels {
                    Some(l) => l.frame.label_display(l.by_facet[g]),
                    None => format!("f{g}"),
                })
                .collect();
            parts.join(" ")
        })
        .collect();
    fl.poset.to_dot("face_lattice", &labels)
}

impl fmt::Display for SimplePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "simple {}-polytope with {} facets, {} vertices",
            self.dim,
            self.facet_count,
            self.vertices.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracketings::{face_poset, PathFrame};

    #[test]
    fn simplex_counts() {
        for (n, facets, verts) in [(1, 2, 2), (2, 3, 3), (3, 4, 4)] {
            let s = simplex(n);
            assert_eq!(s.facet_count(), facets);
            assert_eq!(s.vertex_count(), verts);
        }
        // Codim-2 faces of the tetrahedron are its 6 edges.
        assert_eq!(simplex(3).f_vector(), vec![1, 4, 6, 4]);
    }

    #[test]
    fn products() {
        let prism = product(&simplex(2), &simplex(1));
        assert_eq!((prism.facet_count(), prism.vertex_count()), (5, 6));
        let cube = product(&product(&simplex(1), &simplex(1)), &simplex(1));
        assert_eq!((cube.facet_count(), cube.vertex_count()), (6, 8));
        let p = build_interval_simplex(3);
        assert_eq!(product(&p, &simplex(0)), p);
    }

    #[test]
    fn interval_simplex_labels_are_adjacent_pairs() {
        let p = build_interval_simplex(2);
        let l = p.labels().unwrap();
        assert_eq!(l.by_facet, vec![0b011, 0b110, 0b1100]);
        assert_eq!(l.frame.fixed_mask(), 0b1001);
    }

    #[test]
    fn circle_products_match_the_three_shapes() {
        assert_eq!(build_circle_product((3, 0, 0)).facet_count(), 4);
        let prism = build_circle_product((2, 1, 0));
        assert_eq!((prism.facet_count(), prism.vertex_count()), (5, 6));
        let cube = build_circle_product((1, 1, 1));
        assert_eq!((cube.facet_count(), cube.vertex_count()), (6, 8));
    }

    #[test]
    fn interval_collision_faces() {
        let sched2 = collision_faces(&build_interval_simplex(2)).unwrap();
        assert_eq!(sched2.groups, vec![vec![0b011, 0b110]]);

        let sched3 = collision_faces(&build_interval_simplex(3)).unwrap();
        assert_eq!(sched3.groups.len(), 2);
        assert_eq!(sched3.groups[0].len(), 2); // two vertices
        assert_eq!(sched3.groups[1].len(), 3); // then three edges
    }

    #[test]
    fn prism_collision_faces() {
        let sched = collision_faces(&build_circle_product((2, 1, 0))).unwrap();
        assert_eq!(sched.groups.len(), 2);
        assert_eq!(sched.groups[0].len(), 1); // codim 3: four adjacent particles
        assert_eq!(sched.groups[1].len(), 3); // codim 2
    }

    #[test]
    fn unlabeled_polytope_is_rejected() {
        assert_eq!(collision_faces(&simplex(2)).unwrap_err(), PolytopeError::Unlabeled);
    }

    #[test]
    fn truncating_a_triangle_vertex_gives_a_quadrilateral() {
        let t = simplex(2);
        let q = truncate_face(&t, t.vertices()[0]).unwrap();
        assert_eq!((q.facet_count(), q.vertex_count()), (4, 4));
    }

    #[test]
    fn truncation_vertex_count_formula() {
        // After truncating a codim-k face with |V(F)| vertices the count is
        // old - |V(F)| + k * |V(F)|.
        let p = build_circle_product((2, 1, 0));
        let face = collision_faces(&p).unwrap().groups[0][0];
        let k = face.count_ones() as usize;
        let on_face = p.face_vertices(face).len();
        let t = truncate_face(&p, face).unwrap();
        assert_eq!(t.vertex_count(), p.vertex_count() - on_face + k * on_face);
    }

    #[test]
    fn facet_truncation_is_rejected() {
        let p = build_interval_simplex(2);
        assert_eq!(truncate_face(&p, 0b001).unwrap_err(), PolytopeError::CodimTooSmall(1));
    }

    #[test]
    fn shaving_both_corners_of_the_triangle_gives_the_pentagon() {
        let p = build_interval_simplex(2);
        let k4 = iterated_truncation(&p, &collision_faces(&p).unwrap()).unwrap();
        assert_eq!(k4.f_vector(), vec![1, 5, 5]);
        let pentagon = face_lattice(&k4);
        let reference = face_poset(PathFrame::free(4));
        assert!(pentagon.poset.isomorphism(&reference.poset).is_some());
    }

    #[test]
    fn tetrahedron_truncates_to_k5() {
        let p = build_interval_simplex(3);
        let k5 = iterated_truncation(&p, &collision_faces(&p).unwrap()).unwrap();
        assert_eq!(k5.f_vector(), vec![1, 9, 21, 14]);
    }

    #[test]
    fn single_free_node_needs_no_truncation() {
        // One free node on the circle: the segment already is K_3; every
        // merged run would swallow two fixed nodes.
        let p = build_circle_product((1, 0, 0));
        let schedule = collision_faces(&p).unwrap();
        assert_eq!(schedule.face_count(), 0);
        let reference = face_poset(PathFrame::free(3));
        assert!(face_lattice(&p).poset.isomorphism(&reference.poset).is_some());
    }

    #[test]
    fn all_products_for_five_particles_truncate_to_k5() {
        let reference = face_poset(PathFrame::free(5));
        for partition in [(3, 0, 0), (2, 1, 0), (1, 1, 1)] {
            let p = build_circle_product(partition);
            let t = iterated_truncation(&p, &collision_faces(&p).unwrap()).unwrap();
            let fl = face_lattice(&t);
            assert!(
                fl.poset.isomorphism(&reference.poset).is_some(),
                "partition {partition:?} should yield K_5"
            );
        }
    }

    #[test]
    fn lattice_f_vectors() {
        assert_eq!(face_lattice(&polygon(5)).poset.rank_counts(), vec![1, 5, 5]);
        let cube = product(&product(&simplex(1), &simplex(1)), &simplex(1));
        assert_eq!(face_lattice(&cube).poset.rank_counts(), vec![1, 6, 12, 8]);
        let prism = build_circle_product((2, 1, 0));
        let t = iterated_truncation(&prism, &collision_faces(&prism).unwrap()).unwrap();
        assert_eq!(face_lattice(&t).poset.rank_counts(), vec![1, 9, 21, 14]);
    }

    #[test]
    fn cube_lattice_vs_bracketing_posets() {
        let cube = build_circle_product((1, 1, 1));
        let reference = face_poset(PathFrame::free(5));
        // Pre-truncation the cube is not K_5; after the schedule it is.
        assert!(face_lattice(&cube).poset.isomorphism(&reference.poset).is_none());
        let t = iterated_truncation(&cube, &collision_faces(&cube).unwrap()).unwrap();
        assert!(face_lattice(&t).poset.isomorphism(&reference.poset).is_some());
    }

    #[test]
    fn same_codim_truncations_commute() {
        // Swapping any two faces inside one schedule group leaves the face
        // lattice unchanged up to isomorphism.
        let p = build_interval_simplex(3);
        let schedule = collision_faces(&p).unwrap();
        let base = face_lattice(&iterated_truncation(&p, &schedule).unwrap());
        for g in 0..schedule.groups.len() {
            for i in 0..schedule.groups[g].len() {
                for j in i + 1..schedule.groups[g].len() {
                    let mut swapped = schedule.clone();
                    swapped.groups[g].swap(i, j);
                    let alt = face_lattice(&iterated_truncation(&p, &swapped).unwrap());
                    assert!(alt.poset.isomorphism(&base.poset).is_some());
                }
            }
        }
    }

    #[test]
    fn collision_schedule_is_closed_under_meets() {
        // If two scheduled codim-k faces meet in a codim-(k+1) face, that
        // face is scheduled too.
        for partition in [(3, 0, 0), (2, 1, 0), (1, 1, 1), (2, 2, 0)] {
            let p = build_circle_product(partition);
            let schedule = collision_faces(&p).unwrap();
            let all: BTreeSet<FaceRef> = schedule.flatten().into_iter().collect();
            for group in &schedule.groups {
                for (i, &f1) in group.iter().enumerate() {
                    for &f2 in &group[i + 1..] {
                        let meet = f1 | f2;
                        if p.is_face(meet) && meet.count_ones() == f1.count_ones() + 1 {
                            assert!(all.contains(&meet), "{partition:?}: meet not scheduled");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn polytope_json_schema() {
        let p = build_interval_simplex(2);
        let v = polytope_json(&p);
        assert_eq!(v["dim"], 2);
        assert_eq!(v["facets"][0]["label"], json!([0, 1]));
        assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
        let unlabeled = polytope_json(&simplex(1));
        assert_eq!(unlabeled["facets"][0]["label"], serde_json::Value::Null);
    }
}
