//! The numeric chamber map onto the braid arrangement sphere: spanning
//! vectors, order preservation, and a seeded sampling report.
//!
//! ```bash
//! cargo run --example chamber_map
//! ```

use moduli_tilings::chambers::{
    basis_vectors_exact, chamber_of, phi, sample_chambers, sample_csv, Configuration,
};

fn main() {
    println!("spanning vectors for n = 3:");
    for (i, a) in basis_vectors_exact(3).iter().enumerate() {
        println!("  a_{} = {a:?}", i + 1);
    }

    let v = Configuration::new(vec![0.4, -1.0, 2.5]);
    let p = phi(&v).unwrap();
    println!(
        "\nphi({:?}) = {:?}\n  coordinate sum {:+.2e}, norm offset {:+.2e}, chamber {}",
        v.coords,
        p.coords(),
        p.coordinate_sum(),
        p.norm() - 1.0,
        chamber_of(&p, 1e-9),
    );

    println!("\nsampling 10000 strict configurations per n:");
    for n in 2..=7 {
        let (stats, _) = sample_chambers(n, 10_000, 2026, 1e-9, false);
        println!(
            "  n = {n}: clean = {}, distinct projective chambers = {} (expected {})",
            stats.all_clean(),
            stats.distinct_projective_chambers,
            (1..=n as u64).product::<u64>() / 2,
        );
    }

    let (_, rows) = sample_chambers(3, 3, 2026, 1e-9, true);
    println!("\nCSV report (3 rows):\n{}", sample_csv(&rows));
}
