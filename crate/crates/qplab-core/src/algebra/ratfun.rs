//! Rational functions num/den with monic denominator and gcd 1.

use std::fmt;

use super::poly::UniPoly;
use super::{AlgebraError, Field};

#[derive(Clone, PartialEq)]
pub struct RatFun<F: Field> {
    num: UniPoly<F>,
    den: UniPoly<F>,
}

impl<F: Field> RatFun<F> {
    pub fn new(num: UniPoly<F>, den: UniPoly<F>) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut rf = RatFun { num, den };
        rf.normalize();
        Ok(rf)
    }

    pub fn from_poly(p: UniPoly<F>) -> Self {
        RatFun { num: p, den: UniPoly::one() }
    }

    pub fn zero() -> Self {
        RatFun::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(UniPoly::one())
    }

    pub fn constant(c: F) -> Self {
        RatFun::from_poly(UniPoly::constant(c))
    }

    pub fn x() -> Self {
        RatFun::from_poly(UniPoly::x())
    }

    /// x^k with negative k allowed.
    pub fn x_pow(k: i64) -> Self {
        if k >= 0 {
            RatFun::from_poly(UniPoly::monomial(F::one(), k as usize))
        } else {
            RatFun {
                num: UniPoly::one(),
                den: UniPoly::monomial(F::one(), (-k) as usize),
            }
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = UniPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() > Some(0) {
            self.num = self.num.divrem(&g).0;
            self.den = self.den.divrem(&g).0;
        }
        if let Some(l) = self.den.leading() {
            if !l.is_one() {
                let inv = l.inv().expect("leading coefficient invertible");
                self.num = self.num.scale(&inv);
                self.den = self.den.scale(&inv);
            }
        }
    }

    pub fn num(&self) -> &UniPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == UniPoly::one() && self.den == UniPoly::one()
    }

    /// Constant value if the function is constant.
    pub fn as_constant(&self) -> Option<F> {
        if self.num.is_constant() && self.den == UniPoly::one() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RatFun::new(num, den).expect("denominators nonzero")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RatFun::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("nonzero")
    }

    pub fn scale(&self, c: &F) -> Self {
        RatFun::new(self.num.scale(c), self.den.clone()).expect("nonzero")
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut result = RatFun::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Substitutes another rational function for x.
    pub fn compose(&self, inner: &Self) -> Result<Self, AlgebraError> {
        let n = eval_poly_at(&self.num, inner);
        let d = eval_poly_at(&self.den, inner);
        n.div(&d)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> RatFun<G> {
        RatFun::new(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
            .expect("denominator stays nonzero under field maps")
    }
}

/// Evaluates a polynomial at a rational function (Horner).
pub fn eval_poly_at<F: Field>(p: &UniPoly<F>, x: &RatFun<F>) -> RatFun<F> {
    let mut acc = RatFun::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&RatFun::constant(c.clone()));
    }
    acc
}

impl<F: Field> fmt::Debug for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UniPoly::one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}
