//! Graded posets presented by rank and covering relation.
//!
//! Face posets of polytopes, bracketing posets and cell-complex incidence
//! posets all share this shape: every element carries a rank (codimension or
//! dimension) and covers only elements one rank below. Isomorphism testing
//! works on this data alone, so the same routine verifies truncation
//! constructions and compares glued complexes.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("cover ({lower}, {upper}) must raise rank by exactly one")]
    BadCover { lower: usize, upper: usize },
    #[error("cover references element {index}, but the poset has {len} elements")]
    BadIndex { index: usize, len: usize },
}

/// A finite graded poset. `covers` lists pairs `(lower, upper)` of element
/// indices with `rank(upper) == rank(lower) + 1`; the full order is the
/// transitive closure.
#[derive(Debug, Clone)]
pub struct GradedPoset {
    ranks: Vec<usize>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl GradedPoset {
    pub fn new(ranks: Vec<usize>, mut covers: Vec<(usize, usize)>) -> Result<Self, PosetError> {
        let len = ranks.len();
        covers.sort_unstable();
        covers.dedup();
        let mut up = vec![Vec::new(); len];
        let mut down = vec![Vec::new(); len];
        for &(lower, upper) in &covers {
            for &i in [lower, upper].iter() {
                if i >= len {
                    return Err(PosetError::BadIndex { index: i, len });
                }
            }
            if ranks[upper] != ranks[lower] + 1 {
                return Err(PosetError::BadCover { lower, upper });
            }
            up[lower].push(upper);
            down[upper].push(lower);
        }
        for adj in up.iter_mut().chain(down.iter_mut()) {
            adj.sort_unstable();
        }
        Ok(GradedPoset { ranks, covers, up, down })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, element: usize) -> usize {
        self.ranks[element]
    }

    pub fn max_rank(&self) -> usize {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, element: usize) -> &[usize] {
        &self.up[element]
    }

    pub fn lower_covers(&self, element: usize) -> &[usize] {
        &self.down[element]
    }

    /// Element counts per rank, index = rank.
    pub fn rank_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.max_rank() + 1];
        for &r in &self.ranks {
            counts[r] += 1;
        }
        counts
    }

    /// Searches for a rank- and cover-preserving bijection onto `other`.
    ///
    /// Joint colour refinement (rank, then iterated up/down neighbour colour
    /// multisets) narrows the candidates; individualization with backtracking
    /// finishes the job. The returned mapping sends indices of `self` to
    /// indices of `other` and is verified against the full cover relation
    /// before being returned. Deterministic: candidates are explored in
    /// index order.
    pub fn isomorphism(&self, other: &GradedPoset) -> Option<Vec<usize>> {
        if self.len() != other.len() || self.rank_counts() != other.rank_counts() {
            return None;
        }
        let mut colors_a: Vec<u64> = self.ranks.iter().map(|&r| r as u64).collect();
        let mut colors_b: Vec<u64> = other.ranks.iter().map(|&r| r as u64).collect();
        let fresh = (self.len() + other.len() + 2) as u64;
        let mapping = search(self, other, &mut colors_a, &mut colors_b, fresh)?;
        if self.check_mapping(other, &mapping) {
            Some(mapping)
        } else {
            None
        }
    }

    fn check_mapping(&self, other: &GradedPoset, mapping: &[usize]) -> bool {
        if self.covers.len() != other.covers.len() {
            return false;
        }
        let image: HashSet<(usize, usize)> = other.covers.iter().copied().collect();
        self.covers.iter().all(|&(l, u)| {
            self.ranks[l] == other.ranks[mapping[l]] && image.contains(&(mapping[l], mapping[u]))
        })
    }

    /// Hasse diagram in DOT format, edges drawn from lower to upper rank.
    pub fn to_dot(&self, name: &str, labels: &[String]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        let _ = writeln!(out, "  rankdir=BT;");
        for (i, label) in labels.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        for &(l, u) in &self.covers {
            let _ = writeln!(out, "  n{l} -> n{u};");
        }
        out.push_str("}\n");
        out
    }
}

/// One joint refinement pass over both posets. Returns `None` if the colour
/// histograms diverge, otherwise the (possibly unchanged) number of colours.
fn refine(
    a: &GradedPoset,
    b: &GradedPoset,
    colors_a: &mut [u64],
    colors_b: &mut [u64],
) -> Option<usize> {
    loop {
        let signature = |poset: &GradedPoset, colors: &[u64], v: usize| {
            let mut up: Vec<u64> = poset.up[v].iter().map(|&w| colors[w]).collect();
            let mut down: Vec<u64> = poset.down[v].iter().map(|&w| colors[w]).collect();
            up.sort_unstable();
            down.sort_unstable();
            (colors[v], up, down)
        };
        let sigs_a: Vec<_> = (0..a.len()).map(|v| signature(a, colors_a, v)).collect();
        let sigs_b: Vec<_> = (0..b.len()).map(|v| signature(b, colors_b, v)).collect();

        let mut table: BTreeMap<&(u64, Vec<u64>, Vec<u64>), u64> = BTreeMap::new();
        for sig in sigs_a.iter().chain(sigs_b.iter()) {
            let next = table.len() as u64;
            table.entry(sig).or_insert(next);
        }
        // Re-number in sorted signature order so colour ids are canonical.
        for (i, (_, id)) in table.iter_mut().enumerate() {
            *id = i as u64;
        }

        let old = count_colors(colors_a);
        for (v, sig) in sigs_a.iter().enumerate() {
            colors_a[v] = table[sig];
        }
        for (v, sig) in sigs_b.iter().enumerate() {
            colors_b[v] = table[sig];
        }
        if histogram(colors_a) != histogram(colors_b) {
            return None;
        }
        let new = count_colors(colors_a);
        if new == old {
            return Some(new);
        }
    }
}

fn histogram(colors: &[u64]) -> BTreeMap<u64, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

fn count_colors(colors: &[u64]) -> usize {
    let mut seen: Vec<u64> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn search(
    a: &GradedPoset,
    b: &GradedPoset,
    colors_a: &mut [u64],
    colors_b: &mut [u64],
    fresh: u64,
) -> Option<Vec<usize>> {
    refine(a, b, colors_a, colors_b)?;

    // Smallest non-singleton colour class, by colour id.
    let hist = histogram(colors_a);
    let branch = hist.iter().find(|&(_, &n)| n > 1).map(|(&c, _)| c);
    let color = match branch {
        None => {
            // Discrete partition: colours define the bijection.
            let mut by_color: BTreeMap<u64, usize> = BTreeMap::new();
            for (w, &c) in colors_b.iter().enumerate() {
                by_color.insert(c, w);
            }
            let mut mapping = vec![0usize; a.len()];
            for (v, &c) in colors_a.iter().enumerate() {
                mapping[v] = *by_color.get(&c)?;
            }
            return Some(mapping);
        }
        Some(c) => c,
    };

    let v = (0..a.len()).find(|&v| colors_a[v] == color).unwrap();
    let candidates: Vec<usize> = (0..b.len()).filter(|&w| colors_b[w] == color).collect();
    for w in candidates {
        let mut ca = colors_a.to_vec();
        let mut cb = colors_b.to_vec();
        ca[v] = fresh;
        cb[w] = fresh;
        if let Some(mapping) = search(a, b, &mut ca, &mut cb, fresh + 1) {
            return Some(mapping);
        }
    }
    None
}
