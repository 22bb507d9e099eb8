//! GF(2) linear algebra on word-packed bit rows, plus canonical
//! enumeration of subspaces by codimension.
//!
//! Row vectors are `u64` bit masks (bit j = coordinate j). Exhaustive
//! subspace enumeration is capped at dimension 16; storage and membership
//! tests work up to the word size.

use super::AlgebraError;

/// Hard cap for the exhaustive subspace enumeration.
pub const GF2_ENUM_MAX_DIM: usize = 16;

/// Row space of `rows` inside GF(2)^ncols. Kept in reduced row echelon
/// form (pivots are lowest set bits), so equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GF2Matrix {
    ncols: usize,
    rows: Vec<u64>,
}

impl GF2Matrix {
    pub fn new(ncols: usize, rows: Vec<u64>) -> Result<Self, AlgebraError> {
        if ncols > 64 {
            return Err(AlgebraError::DimensionTooLarge(ncols));
        }
        let mut m = GF2Matrix { ncols, rows };
        m.reduce();
        Ok(m)
    }

    pub fn zero_space(ncols: usize) -> Self {
        GF2Matrix { ncols, rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// RREF basis rows, in pivot order.
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&mut self) {
        // Column sweep; pivots are lowest set bits, cleared from every
        // other row, so the result is the unique RREF of the row space.
        let mut rows: Vec<u64> = self
            .rows
            .iter()
            .map(|&r| r & mask(self.ncols))
            .filter(|&r| r != 0)
            .collect();
        let mut basis: Vec<u64> = Vec::new();
        for col in 0..self.ncols {
            let bit = 1u64 << col;
            if let Some(idx) = rows.iter().position(|&r| r & bit != 0) {
                let pivot = rows.swap_remove(idx);
                for r in rows.iter_mut() {
                    if *r & bit != 0 {
                        *r ^= pivot;
                    }
                }
                rows.retain(|&r| r != 0);
                for b in basis.iter_mut() {
                    if *b & bit != 0 {
                        *b ^= pivot;
                    }
                }
                basis.push(pivot);
            }
        }
        self.rows = basis;
    }

    pub fn contains(&self, v: u64) -> bool {
        let mut v = v & mask(self.ncols);
        for &b in &self.rows {
            if v & low_bit(b) != 0 {
                v ^= b;
            }
        }
        v == 0
    }

    /// Checks that the image of every basis row under `map` stays inside.
    pub fn invariant_under(&self, map: impl Fn(u64) -> u64) -> bool {
        self.rows.iter().all(|&r| self.contains(map(r)))
    }

    /// Basis of the null space {v : r . v = 0 for every row r}.
    pub fn kernel_basis(&self) -> Vec<u64> {
        let pivot_cols: Vec<usize> =
            self.rows.iter().map(|&r| r.trailing_zeros() as usize).collect();
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if pivot_cols.contains(&f) {
                continue;
            }
            let mut v = 1u64 << f;
            for (&p, &r) in pivot_cols.iter().zip(self.rows.iter()) {
                if r & (1u64 << f) != 0 {
                    v |= 1u64 << p;
                }
            }
            out.push(v);
        }
        out
    }

    pub fn iter_elements(&self) -> impl Iterator<Item = u64> + '_ {
        let k = self.rows.len();
        (0u64..(1 << k)).map(move |sel| {
            let mut v = 0u64;
            for (i, &r) in self.rows.iter().enumerate() {
                if sel & (1 << i) != 0 {
                    v ^= r;
                }
            }
            v
        })
    }
}

fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn low_bit(v: u64) -> u64 {
    v & v.wrapping_neg()
}

/// Gaussian binomial [n, k]_2: the number of k-dimensional subspaces of
/// GF(2)^n. Used as the counting oracle for the enumerator.
pub fn gaussian_binomial_2(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (1u128 << (n - i)) - 1;
        den *= (1u128 << (k - i)) - 1;
    }
    num / den
}

/// Enumerates every subspace of GF(2)^dim of the given codimension exactly
/// once, as canonical RREF row bases.
pub fn gf2_subspaces(
    dim: usize,
    codim: usize,
) -> Result<impl Iterator<Item = GF2Matrix>, AlgebraError> {
    if dim > GF2_ENUM_MAX_DIM {
        return Err(AlgebraError::DimensionTooLarge(dim));
    }
    assert!(codim <= dim, "codimension exceeds dimension");
    let k = dim - codim;
    Ok(SubspaceIter::new(dim, k))
}

/// Iterates RREF matrices with k pivot rows in dimension n: for every
/// pivot-column set, every assignment of the free entries.
struct SubspaceIter {
    n: usize,
    k: usize,
    pivots: Vec<usize>,
    free_positions: Vec<(usize, usize)>, // (row, col)
    free_state: u64,
    free_total: u64,
    done: bool,
}

impl SubspaceIter {
    fn new(n: usize, k: usize) -> Self {
        let mut it = SubspaceIter {
            n,
            k,
            pivots: (0..k).collect(),
            free_positions: Vec::new(),
            free_state: 0,
            free_total: 0,
            done: k > n,
        };
        if !it.done {
            it.setup_free();
        }
        it
    }

    fn setup_free(&mut self) {
        self.free_positions.clear();
        for (r, &p) in self.pivots.iter().enumerate() {
            for c in (p + 1)..self.n {
                if !self.pivots.contains(&c) {
                    self.free_positions.push((r, c));
                }
            }
        }
        self.free_state = 0;
        self.free_total = 1u64 << self.free_positions.len();
    }

    fn advance_pivots(&mut self) -> bool {
        if self.k == 0 {
            return false;
        }
        let mut i = self.k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if self.pivots[i] + 1 <= self.n - (self.k - i) {
                self.pivots[i] += 1;
                for j in i + 1..self.k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
    }
}

impl Iterator for SubspaceIter {
    type Item = GF2Matrix;

    fn next(&mut self) -> Option<GF2Matrix> {
        if self.done {
            return None;
        }
        if self.k == 0 {
            self.done = true;
            return Some(GF2Matrix::zero_space(self.n));
        }
        if self.free_state == self.free_total {
            if !self.advance_pivots() {
                self.done = true;
                return None;
            }
            self.setup_free();
        }
        let mut rows: Vec<u64> = self.pivots.iter().map(|&p| 1u64 << p).collect();
        for (bit, &(r, c)) in self.free_positions.iter().enumerate() {
            if self.free_state & (1 << bit) != 0 {
                rows[r] |= 1 << c;
            }
        }
        self.free_state += 1;
        // rows are already in RREF by construction
        Some(GF2Matrix { ncols: self.n, rows })
    }
}
