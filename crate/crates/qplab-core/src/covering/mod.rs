//! Covering calculus: signatures, Riemann–Hurwitz genus bookkeeping,
//! generating vectors and their census, fixed-point counts, quotient
//! genera, the GF(2) classification of free Z2^(m-3) subgroup actions,
//! and the branch-point Moebius data.

mod branch;
mod census;
mod genus;
mod lemma1;

pub use branch::{branch_data, BranchData};
pub use census::{enumerate_generating_vectors, exists_generating_vector, VectorCensus};
pub use genus::{fixed_point_count, genus_from_rh, quotient_genus};
pub use lemma1::{lemma1_classify, lemma1_classify_brute, lemma1_classify_guided, pair_span, triple_span};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{FiniteGroup, SubgroupHandle};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoveringError {
    #[error("Riemann-Hurwitz gives a non-integral or negative genus")]
    NonIntegralGenus,
    #[error("fixed points of the identity are not defined")]
    IdentityElement,
    #[error("dimension too large for the brute-force path (m = {0})")]
    DimensionTooLarge(u32),
    #[error("branch data verification failed: {0}")]
    VerificationFailed(String),
    #[error("invalid generating vector: {0}")]
    InvalidVector(String),
    #[error("m = {0} is out of range for this operation")]
    OutOfRange(u32),
}

/// Orbifold signature (genus; n1, ..., nr) with sorted periods.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub genus: u32,
    pub periods: Vec<u32>,
}

impl Signature {
    pub fn new(genus: u32, mut periods: Vec<u32>) -> Self {
        periods.sort_unstable();
        assert!(periods.iter().all(|&n| n >= 2), "periods must be >= 2");
        Signature { genus, periods }
    }

    /// 2 - 2*genus - sum(1 - 1/n), as a rational pair (num, den).
    fn orbifold_euler(&self) -> (i64, i64) {
        let mut num: i64 = (2 - 2 * self.genus as i64) as i64;
        let mut den: i64 = 1;
        for &n in &self.periods {
            // num/den - (n-1)/n
            num = num * n as i64 - den * (n as i64 - 1);
            den *= n as i64;
            let g = num.unsigned_abs().max(1).min(den.unsigned_abs().max(1));
            let _ = g;
        }
        (num, den)
    }

    pub fn is_hyperbolic(&self) -> bool {
        let (num, _) = self.orbifold_euler();
        num < 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.periods.iter().map(u32::to_string).collect();
        write!(f, "({};{})", self.genus, ps.join(","))
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A tuple (g1, ..., gr) with product 1, prescribed orders and generating
/// the group; the datum of an action on a surface with quotient P^1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingVector {
    pub entries: Vec<u32>,
    pub signature: Signature,
}

impl GeneratingVector {
    /// Validates orders, the product-one relation and generation. The
    /// periods are taken in entry order (position k has order periods[k]
    /// after the signature's canonical sort, so callers supply entries
    /// sorted by order).
    pub fn new(group: &FiniteGroup, entries: Vec<u32>) -> Result<Self, CoveringError> {
        if entries.is_empty() {
            return Err(CoveringError::InvalidVector("empty vector".into()));
        }
        let mut prod = group.identity();
        for &g in &entries {
            if g == group.identity() {
                return Err(CoveringError::InvalidVector(
                    "identity entry is not allowed".into(),
                ));
            }
            prod = group.mul(prod, g);
        }
        if prod != group.identity() {
            return Err(CoveringError::InvalidVector("product is not 1".into()));
        }
        if !group.generates(&entries) {
            return Err(CoveringError::InvalidVector(
                "entries do not generate the group".into(),
            ));
        }
        let periods: Vec<u32> = entries.iter().map(|&g| group.element_order(g)).collect();
        Ok(GeneratingVector {
            entries,
            signature: Signature::new(0, periods),
        })
    }

    pub fn stabilizers(&self, group: &FiniteGroup) -> Vec<SubgroupHandle> {
        self.entries
            .iter()
            .map(|&g| group.subgroup_generated(&[g]))
            .collect()
    }
}

/// Genus of the generalized Fermat curve of exponent 2 on m branch points:
/// 1 + 2^(m-3) (m-4).
pub fn fermat_genus(m: u32) -> u128 {
    assert!((5..=100).contains(&m), "m out of supported range");
    1 + (1u128 << (m - 3)) * (m as u128 - 4)
}
