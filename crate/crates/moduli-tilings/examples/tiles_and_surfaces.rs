//! The two glued surfaces at n = 2, for both building sets: cell counts,
//! Euler characteristics, surface classification and right-angledness.
//!
//! ```bash
//! cargo run --example tiles_and_surfaces
//! ```

use moduli_tilings::tiling::{
    build_complex, enumerate_tiles, moduli_chamber_census, shape_name, BuildingSet, Space,
};

fn main() {
    println!("tile counts, both spaces:");
    for n in 1..=4 {
        let pv = enumerate_tiles(Space::ProjectiveSphere, n).len();
        let moduli = enumerate_tiles(Space::Moduli, n).len();
        println!("  n = {n}: {pv} and {moduli}");
    }

    println!("\nmoduli chambers before compactification (n = 2):");
    for (shape, count) in moduli_chamber_census(2) {
        println!("  {count} {}s", shape_name(&shape));
    }

    for building in [BuildingSet::Minimal, BuildingSet::Maximal] {
        println!("\n{building:?} building set:");
        for space in [Space::ProjectiveSphere, Space::Moduli] {
            let complex = build_complex(space, 2, building).unwrap();
            let report = complex.classify_surface().unwrap();
            let tiles: Vec<String> = complex
                .polygon_size_census()
                .unwrap()
                .iter()
                .map(|(size, count)| format!("{count} {size}-gons"))
                .collect();
            println!(
                "  {space:?}: cells {:?}, chi = {}, {} -> {}; right-angled: {}",
                complex.f_vector(),
                complex.euler_characteristic(),
                tiles.join(" + "),
                report.surface_name().unwrap_or_else(|| "not a closed surface".into()),
                complex.verify_right_angled(),
            );
        }
    }
}
