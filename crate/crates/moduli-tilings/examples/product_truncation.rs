//! Every partition of the free nodes into the three circle regions gives a
//! product of simplices, and each truncates to the same associahedron. For
//! six-node associahedra the facet census splits into seven smaller
//! associahedra and seven pentagonal prisms.
//!
//! ```bash
//! cargo run --example product_truncation
//! ```

use moduli_tilings::bracketings::{face_poset, PathFrame};
use moduli_tilings::circle::partitions_up_to_three;
use moduli_tilings::polytopes::{
    build_circle_product, build_interval_simplex, collision_faces, face_lattice, facet_lattice,
    iterated_truncation, polygon, product, simplex,
};

fn main() {
    for n in 4..=6usize {
        let reference = face_poset(PathFrame::free(n));
        println!("routes to K_{n}:");
        for partition in partitions_up_to_three(n - 2) {
            let mut p = [0usize; 3];
            p[..partition.len()].copy_from_slice(&partition);
            let poly = build_circle_product((p[0], p[1], p[2]));
            let truncated =
                iterated_truncation(&poly, &collision_faces(&poly).unwrap()).unwrap();
            let verdict = face_lattice(&truncated)
                .poset
                .isomorphism(&reference.poset)
                .is_some();
            println!(
                "  partition {partition:?}: {poly} -> {truncated}; isomorphic: {}",
                if verdict { "yes" } else { "NO" }
            );
        }
    }

    // Facet census of one K_6 route.
    let k5 = {
        let p = build_interval_simplex(3);
        face_lattice(&iterated_truncation(&p, &collision_faces(&p).unwrap()).unwrap()).poset
    };
    let prism = face_lattice(&product(&polygon(5), &simplex(1))).poset;
    let poly = build_circle_product((2, 1, 1));
    let k6 = iterated_truncation(&poly, &collision_faces(&poly).unwrap()).unwrap();
    let mut census = (0, 0);
    for facet in 0..k6.facet_count() {
        let lattice = facet_lattice(&k6, facet);
        if lattice.isomorphism(&k5).is_some() {
            census.0 += 1;
        } else if lattice.isomorphism(&prism).is_some() {
            census.1 += 1;
        }
    }
    println!("\nK_6 facet census: {} K_5 facets, {} pentagonal prisms", census.0, census.1);
}
