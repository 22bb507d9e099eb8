//! Exact arithmetic foundation: arbitrary-precision rationals, cyclotomic
//! fields, polynomials, rational functions, GF(2) linear algebra and
//! Moebius transformations.

pub mod cyclotomic;
pub mod gf2;
pub mod mobius;
pub mod multipoly;
pub mod poly;
pub mod ratfun;
pub mod rational;

pub use cyclotomic::Cyclotomic;
pub use gf2::{gf2_subspaces, GF2Matrix};
pub use mobius::{Mobius, ProjPoint};
pub use multipoly::MultiPoly;
pub use poly::UniPoly;
pub use ratfun::RatFun;
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent {k} is not coprime to the cyclotomic order {order}")]
    NotCoprime { k: i64, order: u32 },
    #[error("GF(2) dimension {0} exceeds the supported bound 16")]
    DimensionTooLarge(usize),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("singular Moebius transformation (ad - bc = 0)")]
    SingularMobius,
}

/// Coefficient domain for polynomials and matrices.
///
/// Implemented by [`Rational`] and [`Cyclotomic`]; operations take
/// references so big values are never cloned implicitly.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv().expect("division by zero"))
    }
}
