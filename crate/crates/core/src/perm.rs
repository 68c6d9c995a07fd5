//! Small helpers for permutations stored as image vectors (`perm[i]` is the
//! image of `i`).

use num_integer::Integer;

/// Returns true if `perm` is a bijection of `0..perm.len()`.
pub fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

/// Inverse of a permutation. The input must be a bijection.
pub fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// Disjoint cycles, each starting at its smallest point, in order of that
/// point. Fixed points are included as 1-cycles.
pub fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = perm[i];
        }
        out.push(cycle);
    }
    out
}

/// Cycle lengths sorted ascending.
pub fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut lens: Vec<usize> = cycles(perm).iter().map(Vec::len).collect();
    lens.sort_unstable();
    lens
}

/// Order of the permutation: the lcm of its cycle lengths.
pub fn order(perm: &[usize]) -> u64 {
    cycles(perm)
        .iter()
        .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
}
