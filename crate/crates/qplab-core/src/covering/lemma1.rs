//! Classification of the subgroups H < F = Z2^(m-1) of codimension 2
//! that avoid all coordinate involutions a_1, ..., a_m and are invariant
//! under the index shift a_j -> a_(j+1).
//!
//! Two independent searches: a brute-force sweep over all codimension-2
//! subspaces, and a guided search following the structure of the shift
//! action (enumerate the induced automorphism rho of Z2^2 and the image
//! of a_1, then propagate). Both must agree wherever both run.

use super::CoveringError;
use crate::algebra::gf2::{gf2_subspaces, GF2Matrix};

/// F = GF(2)^(m-1) with basis a_1..a_(m-1) and a_m = a_1 + ... + a_(m-1).
fn a_vector(m: u32, j: u32) -> u64 {
    let dim = (m - 1) as usize;
    if j < m {
        1u64 << (j - 1)
    } else {
        (1u64 << dim) - 1 // all-ones = a_m
    }
}

/// The shift T*: a_j -> a_(j+1) on the basis a_1..a_(m-1); the last basis
/// vector maps to a_m, the sum of all of them.
fn shift_map(m: u32, v: u64) -> u64 {
    let dim = (m - 1) as usize;
    let mut out = 0u64;
    for j in 0..dim {
        if v & (1 << j) != 0 {
            if j + 1 < dim {
                out ^= 1 << (j + 1);
            } else {
                out ^= (1u64 << dim) - 1;
            }
        }
    }
    out
}

fn satisfies_conditions(m: u32, h: &GF2Matrix) -> bool {
    for j in 1..=m {
        if h.contains(a_vector(m, j)) {
            return false;
        }
    }
    h.invariant_under(|v| shift_map(m, v))
}

/// Brute-force path: every codimension-2 subspace of GF(2)^(m-1) is
/// tested directly; m <= 13 keeps this in the millions.
pub fn lemma1_classify_brute(m: u32) -> Result<Vec<GF2Matrix>, CoveringError> {
    if !(3..=13).contains(&m) {
        return Err(CoveringError::DimensionTooLarge(m));
    }
    let dim = (m - 1) as usize;
    let iter = gf2_subspaces(dim, 2).map_err(|_| CoveringError::DimensionTooLarge(m))?;
    let mut out: Vec<GF2Matrix> = iter.filter(|h| satisfies_conditions(m, h)).collect();
    out.sort_by(|a, b| a.rows().cmp(b.rows()));
    Ok(out)
}

/// Guided path: a qualifying H is the kernel of a surjection
/// phi: F -> Z2^2 with rho . phi = phi . T* for an automorphism rho and
/// phi(a_j) != 0 for all j; enumerate the 6 automorphisms and 3 starting
/// values of phi(a_1), then read the kernel off the two parity checks.
pub fn lemma1_classify_guided(m: u32) -> Result<Vec<GF2Matrix>, CoveringError> {
    if !(3..=64).contains(&m) {
        return Err(CoveringError::OutOfRange(m));
    }
    let dim = (m - 1) as usize;
    // automorphisms of Z2^2 as permutations of the nonzero elements 1,2,3
    let rhos: Vec<[u32; 4]> = vec![
        [0, 1, 2, 3],
        [0, 1, 3, 2],
        [0, 2, 1, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
        [0, 3, 2, 1],
    ];
    let mut kernels: Vec<GF2Matrix> = Vec::new();
    for rho in &rhos {
        for start in 1u32..=3 {
            // phi(a_j) = rho^(j-1)(start), j = 1..m
            let mut images = Vec::with_capacity(m as usize);
            let mut cur = start;
            for _ in 0..m {
                images.push(cur);
                cur = rho[cur as usize];
            }
            if images.iter().any(|&v| v == 0) {
                continue;
            }
            // periodicity: rho(phi(a_m)) must return to phi(a_1)
            if rho[images[(m - 1) as usize] as usize] != images[0] {
                continue;
            }
            // compatibility with a_m = a_1 + ... + a_(m-1) in Z2^2
            let sum = images[..(m - 1) as usize]
                .iter()
                .fold(0u32, |acc, &v| acc ^ v);
            if sum != images[(m - 1) as usize] {
                continue;
            }
            // surjectivity: two distinct nonzero values span Z2^2
            let mut seen = [false; 4];
            for &v in &images {
                seen[v as usize] = true;
            }
            if (1..=3).filter(|&v| seen[v as usize]).count() < 2 {
                continue;
            }
            // kernel of the two parity checks on the basis a_1..a_(m-1)
            let row1: u64 = (0..dim)
                .filter(|&j| images[j] & 1 != 0)
                .fold(0, |acc, j| acc | (1 << j));
            let row2: u64 = (0..dim)
                .filter(|&j| images[j] & 2 != 0)
                .fold(0, |acc, j| acc | (1 << j));
            let checks = GF2Matrix::new(dim, vec![row1, row2])
                .map_err(|_| CoveringError::OutOfRange(m))?;
            if checks.rank() != 2 {
                continue;
            }
            let h = GF2Matrix::new(dim, checks.kernel_basis())
                .map_err(|_| CoveringError::OutOfRange(m))?;
            debug_assert_eq!(h.rank(), dim - 2);
            debug_assert!(satisfies_conditions(m, &h));
            if !kernels.contains(&h) {
                kernels.push(h);
            }
        }
    }
    kernels.sort_by(|a, b| a.rows().cmp(b.rows()));
    Ok(kernels)
}

/// Classifier: guided path for all supported m, cross-checked against the
/// brute-force sweep when m <= 13.
pub fn lemma1_classify(m: u32) -> Result<Vec<GF2Matrix>, CoveringError> {
    let guided = lemma1_classify_guided(m)?;
    if (3..=13).contains(&m) {
        let brute = lemma1_classify_brute(m)?;
        assert_eq!(
            guided, brute,
            "guided and brute-force classifications disagree at m = {m}"
        );
    }
    Ok(guided)
}

/// The spanning set {a_1 a_3, a_2 a_4, ...} (pair distance 2, wrapping) as
/// a subspace, for comparison with the classifier output.
pub fn pair_span(m: u32) -> GF2Matrix {
    let dim = (m - 1) as usize;
    let rows: Vec<u64> = (1..=m)
        .map(|j| {
            let k = if j + 2 <= m { j + 2 } else { j + 2 - m };
            a_vector(m, j) ^ a_vector(m, k)
        })
        .collect();
    GF2Matrix::new(dim, rows).unwrap()
}

/// The spanning set {a_1 a_2 a_3, a_2 a_3 a_4, ...} (triple blocks).
pub fn triple_span(m: u32) -> GF2Matrix {
    let dim = (m - 1) as usize;
    let rows: Vec<u64> = (1..=m)
        .map(|j| {
            let n = |x: u32| if x <= m { x } else { x - m };
            a_vector(m, j) ^ a_vector(m, n(j + 1)) ^ a_vector(m, n(j + 2))
        })
        .collect();
    GF2Matrix::new(dim, rows).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_divisibility() {
        // empty when m is coprime to both 3 and 4
        for m in [5u32, 7, 10, 11, 13] {
            assert!(lemma1_classify(m).unwrap().is_empty(), "m = {m}");
        }
        for m in [3u32, 4, 6, 8, 9] {
            assert_eq!(lemma1_classify(m).unwrap().len(), 1, "m = {m}");
        }
        assert_eq!(lemma1_classify(12).unwrap().len(), 2);
    }

    #[test]
    fn displayed_spanning_sets() {
        // 4 | m: the pair span; 3 | m: the triple span
        let h8 = lemma1_classify(8).unwrap();
        assert_eq!(h8[0], pair_span(8));
        let h9 = lemma1_classify(9).unwrap();
        assert_eq!(h9[0], triple_span(9));
        let h12 = lemma1_classify(12).unwrap();
        assert!(h12.contains(&pair_span(12)));
        assert!(h12.contains(&triple_span(12)));
    }

    #[test]
    fn guided_handles_larger_m() {
        assert_eq!(lemma1_classify_guided(16).unwrap().len(), 1);
        assert_eq!(lemma1_classify_guided(24).unwrap().len(), 2);
        assert!(lemma1_classify_guided(17).unwrap().is_empty());
        assert_eq!(lemma1_classify_guided(60).unwrap().len(), 2);
    }

    #[test]
    fn subspace_dimensions() {
        for h in lemma1_classify(12).unwrap() {
            assert_eq!(h.rank(), 9); // m - 3
            assert!(h.invariant_under(|v| shift_map(12, v)));
        }
    }
}
