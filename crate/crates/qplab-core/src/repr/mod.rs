//! Exact character tables via the Burnside–Dixon method, Galois orbits of
//! irreducible characters, and group-algebra idempotents.
//!
//! The modular phase finds the common eigenvectors of the class-algebra
//! matrices over GF(p) for a prime p = 1 mod exponent; the lift to
//! Q(zeta_e) recovers eigenvalue multiplicities by discrete Fourier
//! inversion mod p, so every value is exact. Row and column orthogonality
//! are then verified over the cyclotomic field.

mod dixon;
mod idempotent;
mod modular;
mod rational;

pub use idempotent::{idempotents, GroupAlgebraElement, IdempotentSystem};
pub use rational::{rational_irreps, RationalIrrepFamily};

use thiserror::Error;

use crate::algebra::rational::{rational_as_i64, Rational};
use crate::algebra::Cyclotomic;
use crate::group::{FiniteGroup, SubgroupHandle};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReprError {
    #[error("group order {0} exceeds the supported bound")]
    OrderTooLarge(usize),
    #[error("character inner product was not a non-negative integer (internal bug)")]
    NonIntegral,
}

/// Exact character table over Q(zeta_exponent); rows are canonical:
/// sorted by degree, then lexicographically on values in class order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: FiniteGroup,
    pub classes: Vec<Vec<u32>>,
    pub class_of: Vec<usize>,
    pub exponent: u32,
    /// values[row][class]
    pub values: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    pub fn num_rows(&self) -> usize {
        self.values.len()
    }

    pub fn degree(&self, row: usize) -> u32 {
        let d = self.values[row][self.identity_class()].is_rational().unwrap();
        rational_as_i64(&d).unwrap() as u32
    }

    pub fn degrees(&self) -> Vec<u32> {
        (0..self.num_rows()).map(|r| self.degree(r)).collect()
    }

    pub fn identity_class(&self) -> usize {
        self.class_of[self.group.identity() as usize]
    }

    pub fn value_at_element(&self, row: usize, g: u32) -> &Cyclotomic {
        &self.values[row][self.class_of[g as usize]]
    }

    /// dim V^H = (1/|H|) sum over h of chi(h); always a non-negative
    /// integer for genuine characters.
    pub fn fixed_subspace_dim(&self, row: usize, h: &SubgroupHandle) -> Result<u32, ReprError> {
        let mut sum = Cyclotomic::zero();
        for &x in &h.elements {
            sum = sum.add(self.value_at_element(row, x));
        }
        let avg = sum.scale(&Rational::new(1.into(), (h.order() as i64).into()));
        let r = avg.is_rational().ok_or(ReprError::NonIntegral)?;
        let n = rational_as_i64(&r).ok_or(ReprError::NonIntegral)?;
        if n < 0 {
            return Err(ReprError::NonIntegral);
        }
        Ok(n as u32)
    }

    /// Frobenius–Schur indicator (1/|G|) sum chi(g^2); -1, 0 or 1.
    pub fn frobenius_schur(&self, row: usize) -> Result<i64, ReprError> {
        let mut sum = Cyclotomic::zero();
        for g in 0..self.group.order() as u32 {
            sum = sum.add(self.value_at_element(row, self.group.mul(g, g)));
        }
        let avg = sum.scale(&Rational::new(1.into(), (self.group.order() as i64).into()));
        let r = avg.is_rational().ok_or(ReprError::NonIntegral)?;
        rational_as_i64(&r).ok_or(ReprError::NonIntegral)
    }

    /// <chi_i, chi_j> = (1/|G|) sum |C| chi_i(C) conj(chi_j(C)).
    pub fn inner_product(&self, i: usize, j: usize) -> Cyclotomic {
        let mut sum = Cyclotomic::zero();
        for (l, class) in self.classes.iter().enumerate() {
            let term = self.values[i][l]
                .mul(&self.values[j][l].conj())
                .scale(&Rational::from_integer((class.len() as i64).into()));
            sum = sum.add(&term);
        }
        sum.scale(&Rational::new(1.into(), (self.group.order() as i64).into()))
    }

    /// Markdown rendering, classes as columns.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self
            .classes
            .iter()
            .map(|c| self.group.name_of(c[0]))
            .collect();
        out.push_str(&format!("| chi | {} |\n", header.join(" | ")));
        out.push_str(&format!("|---|{}|\n", "---|".repeat(self.classes.len())));
        for (r, row) in self.values.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
            out.push_str(&format!("| X{} | {} |\n", r + 1, cells.join(" | ")));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "exponent": self.exponent,
            "classes": self.classes.iter().map(|c| self.group.name_of(c[0])).collect::<Vec<_>>(),
            "class_sizes": self.classes.iter().map(Vec::len).collect::<Vec<_>>(),
            "degrees": self.degrees(),
            "values": self.values,
        })
    }
}

/// Computes the exact character table of a group of order <= 200.
pub fn character_table(group: &FiniteGroup) -> Result<CharacterTable, ReprError> {
    dixon::character_table(group)
}
