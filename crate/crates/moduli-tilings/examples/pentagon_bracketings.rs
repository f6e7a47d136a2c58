//! Bracketings of a path and the face poset of the associahedron.
//!
//! ```bash
//! cargo run --example pentagon_bracketings
//! ```

use moduli_tilings::bracketings::{
    enumerate_bracketings, f_vector, face_poset, is_compatible, superimpose, Bracket,
    PathBracketing, PathFrame,
};

fn main() {
    // K_4 is the pentagon: one set of brackets per edge, two per vertex.
    let frame = PathFrame::free(4);
    println!("K_4 edges:");
    for b in enumerate_bracketings(frame, Some(1)) {
        println!("  {b}");
    }
    println!("K_4 vertices:");
    for b in enumerate_bracketings(frame, Some(2)) {
        println!("  {b}");
    }

    // Compatibility and superimposition label intersections of faces.
    let left = PathBracketing::new(frame, [Bracket::new(0, 1)]).unwrap();
    let right = PathBracketing::new(frame, [Bracket::new(2, 3)]).unwrap();
    let crossing = PathBracketing::new(frame, [Bracket::new(1, 3)]).unwrap();
    println!("\n{left} and {right} compatible: {}", is_compatible(&left, &right).unwrap());
    println!("{left} and {crossing} compatible: {}", is_compatible(&left, &crossing).unwrap());
    println!("superimposition: {}", superimpose(&left, &right).unwrap());

    // f-vectors by codimension for small associahedra.
    println!();
    for n in 3..=6 {
        let counts = f_vector(PathFrame::free(n));
        let pretty: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
        println!("K_{n} f-vector: {}", pretty.join(" "));
    }

    let bp = face_poset(frame);
    println!("\nK_4 face poset: {} elements, {} covers", bp.elements.len(), bp.poset.covers().len());
}
