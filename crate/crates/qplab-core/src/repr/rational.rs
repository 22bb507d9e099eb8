//! Galois orbits of complex irreducible characters: the rational
//! irreducible families W_i with k_i = m_i |Gal(K_i/Q)|.
//!
//! The Schur index m_i is set to 1 throughout; every consumer flags the
//! assumption in its output and the genus cross-oracles would fail loudly
//! if it broke, since all dimension bookkeeping depends on it.

use num_integer::Integer;

use super::CharacterTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalIrrepFamily {
    /// Row indices of the complex irreducibles in this Galois orbit.
    pub orbit: Vec<usize>,
    /// |Gal(K_i/Q)| = orbit size (with Schur index 1).
    pub field_degree: usize,
    /// Assumed 1; kept explicit so reports can state the assumption.
    pub schur_index: u32,
}

impl RationalIrrepFamily {
    /// k_i = m_i * |Gal(K_i/Q)|.
    pub fn k(&self) -> usize {
        self.schur_index as usize * self.field_degree
    }
}

/// Partitions the table's rows into Galois orbits, canonically ordered by
/// smallest member.
pub fn rational_irreps(tbl: &CharacterTable) -> Vec<RationalIrrepFamily> {
    let e = tbl.exponent as i64;
    let k = tbl.num_rows();
    let mut assigned = vec![false; k];
    let mut families = Vec::new();
    for start in 0..k {
        if assigned[start] {
            continue;
        }
        let mut orbit = vec![start];
        assigned[start] = true;
        for s in 2..e {
            if s.gcd(&e) != 1 {
                continue;
            }
            let image: Vec<_> = tbl.values[start]
                .iter()
                .map(|v| v.galois(s).expect("s coprime to the exponent"))
                .collect();
            let row = (0..k)
                .find(|&r| tbl.values[r] == image)
                .expect("Galois image of a character is a character");
            if !assigned[row] {
                assigned[row] = true;
                orbit.push(row);
            }
        }
        orbit.sort_unstable();
        families.push(RationalIrrepFamily {
            field_degree: orbit.len(),
            orbit,
            schur_index: 1,
        });
    }
    families.sort_by_key(|f| f.orbit[0]);
    families
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_semidirect, cyclic, klein, SemidirectAction};
    use crate::repr::character_table;

    #[test]
    fn cyclic3_two_families() {
        let tbl = character_table(&cyclic(3)).unwrap();
        let fams = rational_irreps(&tbl);
        assert_eq!(fams.len(), 2);
        let mut sizes: Vec<usize> = fams.iter().map(|f| f.orbit.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2]);
    }

    #[test]
    fn klein_all_rational() {
        let tbl = character_table(&klein()).unwrap();
        let fams = rational_irreps(&tbl);
        assert_eq!(fams.len(), 4);
        assert!(fams.iter().all(|f| f.orbit.len() == 1));
    }

    #[test]
    fn m6_case_ii_six_families() {
        let g = build_semidirect(6, SemidirectAction::II).unwrap();
        let tbl = character_table(&g).unwrap();
        let fams = rational_irreps(&tbl);
        assert_eq!(fams.len(), 6);
        let mut sizes: Vec<usize> = fams.iter().map(|f| f.orbit.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 1, 2, 2]);
        // the two conjugate pairs are linear; the degree-3 rows are rational
        for f in &fams {
            if f.orbit.len() == 2 {
                assert_eq!(tbl.degree(f.orbit[0]), 1);
            }
        }
    }
}
