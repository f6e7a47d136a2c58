//! Carving associahedra out of simplices: truncate the faces where adjacent
//! particles collide, deepest faces first.
//!
//! ```bash
//! cargo run --example simplex_truncation
//! ```

use moduli_tilings::bracketings::{face_poset, PathFrame};
use moduli_tilings::polytopes::{
    build_interval_simplex, collision_faces, face_lattice, iterated_truncation,
};

fn main() {
    for free in 1..=5usize {
        let simplex = build_interval_simplex(free);
        let schedule = collision_faces(&simplex).unwrap();
        let truncated = iterated_truncation(&simplex, &schedule).unwrap();
        let reference = face_poset(PathFrame::free(free + 2));
        let verdict = face_lattice(&truncated)
            .poset
            .isomorphism(&reference.poset)
            .is_some();

        let group_sizes: Vec<String> =
            schedule.groups.iter().map(|g| g.len().to_string()).collect();
        println!(
            "simplex with {free} free nodes: shave [{}] faces -> {} facets, {} vertices; K_{}: {}",
            group_sizes.join(", "),
            truncated.facet_count(),
            truncated.vertex_count(),
            free + 2,
            if verdict { "yes" } else { "NO" },
        );
    }
}
