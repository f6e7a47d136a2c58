//! Backtracking enumeration of laminar families over a fixed candidate list.
//!
//! Callers supply the candidates in their serialization order together with a
//! pairwise compatibility predicate; families come back in lexicographic
//! order on candidate indices, starting with the empty family. Used for path
//! brackets, circle arcs and labeled-diagram faces alike.

pub(crate) fn enumerate_families<T: Clone>(
    candidates: &[T],
    compatible: impl Fn(&T, &T) -> bool + Copy,
) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    extend(candidates, compatible, 0, &mut chosen, &mut out);
    out
}

fn extend<T: Clone>(
    candidates: &[T],
    compatible: impl Fn(&T, &T) -> bool + Copy,
    from: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<T>>,
) {
    out.push(chosen.iter().map(|&i| candidates[i].clone()).collect());
    for next in from..candidates.len() {
        if chosen.iter().all(|&i| compatible(&candidates[i], &candidates[next])) {
            chosen.push(next);
            extend(candidates, compatible, next + 1, chosen, out);
            chosen.pop();
        }
    }
}
