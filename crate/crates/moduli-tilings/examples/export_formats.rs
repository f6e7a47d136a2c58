//! Machine-readable exports: poset and polytope JSON, Hasse-diagram DOT,
//! f-vector CSV, complex JSON and the dual adjacency graph of top cells.
//!
//! ```bash
//! cargo run --example export_formats
//! ```

use moduli_tilings::bracketings::{face_poset, poset_dot, poset_json, PathFrame};
use moduli_tilings::polytopes::{build_interval_simplex, polytope_json};
use moduli_tilings::tiling::{build_complex, BuildingSet, Space};

fn main() {
    let bp = face_poset(PathFrame::free(3));
    println!("bracketing poset JSON:\n{:#}\n", poset_json(&bp));
    println!("bracketing poset DOT:\n{}", poset_dot(&bp));

    let simplex = build_interval_simplex(2);
    println!("labeled polytope JSON:\n{:#}\n", polytope_json(&simplex));

    let complex = build_complex(Space::Moduli, 1, BuildingSet::Minimal).unwrap();
    println!("cell complex JSON:\n{:#}\n", complex.to_json());
    println!("f-vector CSV:\n{}", complex.f_vector_csv());
    println!("dual adjacency DOT:\n{}", complex.dual_adjacency_dot());
}
