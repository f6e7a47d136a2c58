//! Numeric chamber map onto the braid arrangement sphere.
//!
//! `n` particles on the line map to the unit sphere in the sum-zero
//! hyperplane via `v -> sum(v_i a_i)` normalized, where the spanning vectors
//! `a_i = -(e_1 + ... + e_n) + n e_i` sum to zero. The map preserves
//! coordinate order, so the chamber of the image (an ordering with tie
//! blocks) recovers the sort order of the input. This module is a numeric
//! cross-check of the combinatorial tilings, not their source of truth.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

pub const DEFAULT_EPSILON: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum ChamberError {
    #[error("configuration is constant: the image would be the cone point")]
    Degenerate,
    #[error("need at least two particles, got {0}")]
    TooFewParticles(usize),
    #[error("point is not on the sphere slice: sum {sum:e}, norm {norm}")]
    NotOnSphere { sum: f64, norm: f64 },
}

/// Positions of `n` particles on the line, with the tolerance used to call
/// two of them equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    pub coords: Vec<f64>,
    pub epsilon: f64,
}

impl Configuration {
    pub fn new(coords: Vec<f64>) -> Configuration {
        Configuration { coords, epsilon: DEFAULT_EPSILON }
    }

    pub fn with_epsilon(coords: Vec<f64>, epsilon: f64) -> Configuration {
        Configuration { coords, epsilon }
    }
}

/// A unit vector with zero coordinate sum, up to the stated tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint {
    coords: Vec<f64>,
}

impl SpherePoint {
    pub fn new(coords: Vec<f64>, epsilon: f64) -> Result<SpherePoint, ChamberError> {
        let sum: f64 = coords.iter().sum();
        let norm = coords.iter().map(|x| x * x).sum::<f64>().sqrt();
        if sum.abs() > epsilon || (norm - 1.0).abs() > epsilon {
            return Err(ChamberError::NotOnSphere { sum, norm });
        }
        Ok(SpherePoint { coords })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn coordinate_sum(&self) -> f64 {
        self.coords.iter().sum()
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// An ordering of particle indices with tie blocks, smallest coordinates
/// first; indices inside a block are ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChamberDescriptor {
    pub blocks: Vec<Vec<usize>>,
}

impl ChamberDescriptor {
    /// Index order when every block is a singleton.
    pub fn strict_order(&self) -> Option<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| if b.len() == 1 { Some(b[0]) } else { None })
            .collect()
    }

    pub fn has_ties(&self) -> bool {
        self.blocks.iter().any(|b| b.len() > 1)
    }

    pub fn reversed(&self) -> ChamberDescriptor {
        ChamberDescriptor { blocks: self.blocks.iter().rev().cloned().collect() }
    }

    /// Canonical representative of the antipodal chamber pair: the smaller
    /// of this descriptor and its reversal.
    pub fn projective_canonical(&self) -> ChamberDescriptor {
        self.clone().min(self.reversed())
    }
}

impl fmt::Display for ChamberDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " < ")?;
            }
            let parts: Vec<String> = block.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join("="))?;
        }
        Ok(())
    }
}

/// The spanning vectors `a_i = -(e_1 + ... + e_n) + n e_i` in integers:
/// entry `i` is `n - 1`, every other entry `-1`. They sum to zero and their
/// Gram matrix is `n^2 - n` on the diagonal and `-n` off it, exactly.
pub fn basis_vectors_exact(n: usize) -> Vec<Vec<i64>> {
    assert!(n >= 2);
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { n as i64 - 1 } else { -1 }).collect())
        .collect()
}

pub fn basis_vectors(n: usize) -> Vec<Vec<f64>> {
    basis_vectors_exact(n)
        .into_iter()
        .map(|v| v.into_iter().map(|x| x as f64).collect())
        .collect()
}

/// Maps a configuration to the sphere: `sum(v_i a_i)` normalized. Constant
/// configurations are rejected (the cone point is not on the sphere).
/// Order-preserving: `v_i <= v_j` exactly when the image coordinates satisfy
/// the same relation.
pub fn phi(v: &Configuration) -> Result<SpherePoint, ChamberError> {
    let n = v.coords.len();
    if n < 2 {
        return Err(ChamberError::TooFewParticles(n));
    }
    let basis = basis_vectors(n);
    let mut image = vec![0.0f64; n];
    for (vi, a) in v.coords.iter().zip(&basis) {
        for (out, aj) in image.iter_mut().zip(a) {
            *out += vi * aj;
        }
    }
    let norm = image.iter().map(|x| x * x).sum::<f64>().sqrt();
    let scale = v.coords.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    if norm <= 1e-12 * scale * n as f64 {
        return Err(ChamberError::Degenerate);
    }
    for out in &mut image {
        *out /= norm;
    }
    Ok(SpherePoint { coords: image })
}

/// The chamber containing the point: indices sorted by coordinate, with
/// consecutive coordinates within `epsilon` chained into one tie block.
pub fn chamber_of(p: &SpherePoint, epsilon: f64) -> ChamberDescriptor {
    let mut order: Vec<usize> = (0..p.coords.len()).collect();
    order.sort_by(|&i, &j| p.coords[i].total_cmp(&p.coords[j]).then(i.cmp(&j)));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for idx in order {
        match blocks.last_mut() {
            Some(block)
                if (p.coords[idx] - p.coords[*block.last().unwrap()]).abs() <= epsilon =>
            {
                block.push(idx);
            }
            _ => blocks.push(vec![idx]),
        }
    }
    for block in &mut blocks {
        block.sort_unstable();
    }
    ChamberDescriptor { blocks }
}

/// Canonical representative of the antipodal pair `{p, -p}`: the one whose
/// first coordinate larger than `epsilon` in absolute value is positive.
pub fn projective_identify(p: &SpherePoint, epsilon: f64) -> SpherePoint {
    match p.coords.iter().find(|x| x.abs() > epsilon) {
        Some(x) if *x < 0.0 => {
            SpherePoint { coords: p.coords.iter().map(|c| -c).collect() }
        }
        _ => p.clone(),
    }
}

/// One sampled configuration and what became of it.
#[derive(Debug, Clone)]
pub struct SampleRow {
    pub input: Vec<f64>,
    pub image: Vec<f64>,
    pub chamber: ChamberDescriptor,
}

/// Outcome of a sampling run.
#[derive(Debug, Clone)]
pub struct SampleStats {
    pub samples: usize,
    pub sum_violations: usize,
    pub norm_violations: usize,
    pub order_mismatches: usize,
    pub distinct_projective_chambers: usize,
}

impl SampleStats {
    pub fn all_clean(&self) -> bool {
        self.sum_violations == 0 && self.norm_violations == 0 && self.order_mismatches == 0
    }
}

/// Draws strict random configurations, pushes them through the map, and
/// tallies sphere-slice violations and order mismatches. Configurations with
/// a coordinate gap under `1e-6` are redrawn so that strictness is clear of
/// the tie tolerance. Deterministic for a fixed seed.
pub fn sample_chambers(
    n: usize,
    samples: usize,
    seed: u64,
    epsilon: f64,
    collect_rows: bool,
) -> (SampleStats, Vec<SampleRow>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 32);
    let mut rows = Vec::new();
    let mut stats = SampleStats {
        samples,
        sum_violations: 0,
        norm_violations: 0,
        order_mismatches: 0,
        distinct_projective_chambers: 0,
    };
    let mut chambers: BTreeSet<ChamberDescriptor> = BTreeSet::new();
    for _ in 0..samples {
        let coords = loop {
            let candidate: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
            let mut sorted = candidate.clone();
            sorted.sort_by(f64::total_cmp);
            let min_gap =
                sorted.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
            if min_gap > 1e-6 {
                break candidate;
            }
        };
        let config = Configuration::with_epsilon(coords.clone(), epsilon);
        let p = phi(&config).expect("strict configurations are not degenerate");
        if p.coordinate_sum().abs() > epsilon {
            stats.sum_violations += 1;
        }
        if (p.norm() - 1.0).abs() > epsilon {
            stats.norm_violations += 1;
        }
        let chamber = chamber_of(&p, epsilon);
        let mut expected: Vec<usize> = (0..n).collect();
        expected.sort_by(|&i, &j| coords[i].total_cmp(&coords[j]));
        if chamber.strict_order().as_deref() != Some(&expected[..]) {
            stats.order_mismatches += 1;
        }
        chambers.insert(chamber.projective_canonical());
        if collect_rows {
            rows.push(SampleRow { input: coords, image: p.coords.clone(), chamber });
        }
    }
    stats.distinct_projective_chambers = chambers.len();
    (stats, rows)
}

/// CSV report with columns `input`, `image`, `chamber`; vector entries are
/// space-separated inside each field.
pub fn sample_csv(rows: &[SampleRow]) -> String {
    let mut out = String::from("input,image,chamber\n");
    for row in rows {
        let fmt_vec = |v: &[f64]| {
            v.iter().map(|x| format!("{x:.12}")).collect::<Vec<_>>().join(" ")
        };
        let _ = writeln!(out, "{},{},{}", fmt_vec(&row.input), fmt_vec(&row.image), row.chamber);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basis_example_n3() {
        assert_eq!(basis_vectors_exact(3)[0], vec![2, -1, -1]);
    }

    #[test]
    fn gram_identities_exact() {
        for n in 2..=7 {
            let basis = basis_vectors_exact(n);
            let ni = n as i64;
            for i in 0..n {
                for j in 0..n {
                    let dot: i64 = (0..n).map(|k| basis[i][k] * basis[j][k]).sum();
                    assert_eq!(dot, if i == j { ni * ni - ni } else { -ni });
                }
            }
            let sums: Vec<i64> = (0..n).map(|k| basis.iter().map(|a| a[k]).sum()).collect();
            assert!(sums.iter().all(|&s| s == 0));
        }
    }

    #[test]
    fn phi_two_particles() {
        let p = phi(&Configuration::new(vec![0.0, 1.0])).unwrap();
        let expected = 1.0 / 2.0f64.sqrt();
        assert!((p.coords()[0] + expected).abs() < 1e-15);
        assert!((p.coords()[1] - expected).abs() < 1e-15);
    }

    #[test]
    fn translation_and_scaling_invariance() {
        let v = Configuration::new(vec![0.3, 1.2, -0.5]);
        let p = phi(&v).unwrap();
        let shifted = Configuration::new(v.coords.iter().map(|x| x + 7.5).collect());
        let scaled = Configuration::new(v.coords.iter().map(|x| x * 3.25).collect());
        for other in [phi(&shifted).unwrap(), phi(&scaled).unwrap()] {
            for (a, b) in p.coords().iter().zip(other.coords()) {
                assert!((a - b).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn constant_configuration_is_degenerate() {
        let v = Configuration::new(vec![2.0, 2.0, 2.0]);
        assert_eq!(phi(&v).unwrap_err(), ChamberError::Degenerate);
    }

    #[test]
    fn chamber_of_reads_off_the_order() {
        let p = phi(&Configuration::new(vec![0.0, 1.0])).unwrap();
        let chamber = chamber_of(&p, DEFAULT_EPSILON);
        assert_eq!(chamber.strict_order(), Some(vec![0, 1]));
    }

    #[test]
    fn near_equal_coordinates_form_a_tie_block() {
        let p = SpherePoint::new(
            vec![-2.0 / 6.0f64.sqrt(), 1.0 / 6.0f64.sqrt(), 1.0 / 6.0f64.sqrt()],
            1e-9,
        )
        .unwrap();
        let chamber = chamber_of(&p, 1e-6);
        assert_eq!(chamber.blocks, vec![vec![0], vec![1, 2]]);
        assert!(chamber.has_ties());
    }

    #[test]
    fn antipode_reverses_the_chamber() {
        let p = phi(&Configuration::new(vec![0.1, 0.9, 0.5, 0.3])).unwrap();
        let minus = SpherePoint { coords: p.coords().iter().map(|x| -x).collect() };
        assert_eq!(
            chamber_of(&minus, DEFAULT_EPSILON),
            chamber_of(&p, DEFAULT_EPSILON).reversed()
        );
        let canon_p = projective_identify(&p, DEFAULT_EPSILON);
        let canon_m = projective_identify(&minus, DEFAULT_EPSILON);
        assert_eq!(canon_p, canon_m);
    }

    #[test]
    fn projective_chamber_count_for_four_particles() {
        let (stats, _) = sample_chambers(4, 2000, 7, DEFAULT_EPSILON, false);
        assert!(stats.all_clean());
        assert_eq!(stats.distinct_projective_chambers, 12);
    }

    #[test]
    fn csv_report_shape() {
        let (_, rows) = sample_chambers(3, 5, 1, DEFAULT_EPSILON, true);
        let csv = sample_csv(&rows);
        assert_eq!(csv.lines().count(), 6);
        assert!(csv.starts_with("input,image,chamber\n"));
    }

    proptest! {
        #[test]
        fn order_is_preserved(coords in proptest::collection::vec(-100.0f64..100.0, 2..7)) {
            let mut sorted = coords.clone();
            sorted.sort_by(f64::total_cmp);
            let min_gap = sorted.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
            prop_assume!(min_gap > 1e-4);
            let p = phi(&Configuration::new(coords.clone())).unwrap();
            let mut expected: Vec<usize> = (0..coords.len()).collect();
            expected.sort_by(|&i, &j| coords[i].total_cmp(&coords[j]));
            prop_assert_eq!(chamber_of(&p, 1e-9).strict_order(), Some(expected));
        }
    }
}
