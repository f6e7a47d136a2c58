//! Twist moves on labeled diagrams, and the orbits that become cells of the
//! glued complexes.
//!
//! ```bash
//! cargo run --example twist_moves
//! ```

use moduli_tilings::tiling::{twist_class, LabeledDiagram};

fn main() {
    // A twist reverses everything inside the bracket, nested brackets
    // included.
    let d = LabeledDiagram::path(&[0, 1, 2, 3], &[(1, 3), (2, 3)]).unwrap();
    let t = d.twist_block(1, 3).unwrap();
    println!("{d}  --twist [1+3]-->  {t}");
    assert_eq!(t.twist_block(1, 3).unwrap(), d);

    // Path orbits include the global reflection; a tile (no brackets) is a
    // reflection pair, an edge pairs two tiles, a vertex glues four corners.
    for brackets in [vec![], vec![(0usize, 1usize)], vec![(0, 1), (2, 3)]] {
        let d = LabeledDiagram::path(&[0, 1, 2, 3], &brackets).unwrap();
        let class = twist_class(&d);
        println!(
            "path diagram {d}: orbit size {}, canonical {}",
            class.orbit_size, class.canonical
        );
    }

    // Circle diagrams: a twist through a fixed node carries the free label
    // to the node's far side; the rotation pins fixed label 0 at position 0.
    let c = LabeledDiagram::circle([&[], &[3], &[4]], &[(2, 2)]).unwrap();
    let (ct, image) = c.twist_with_image(c.schemes().first().unwrap()).unwrap();
    println!("circle diagram {c}  --twist-->  {ct} (scheme now {image})");
    for arcs in [vec![], vec![(1usize, 2usize)]] {
        let d = LabeledDiagram::circle([&[3, 4], &[], &[]], &arcs).unwrap();
        println!("circle diagram {d}: orbit size {}", twist_class(&d).orbit_size);
    }
}
