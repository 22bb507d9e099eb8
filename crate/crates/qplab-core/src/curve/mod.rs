//! Exact function fields of the curves {y^2 = f(x), z^2 = g(x)} and
//! symbolic verification of rational maps between them.
//!
//! Elements live in the rank-4 module over Q(zeta)(x) with basis
//! {1, y, z, yz}; multiplication reduces via y^2 -> f and z^2 -> g, and
//! inversion goes through the norm over the biquadratic extension. The
//! construction requires f, g squarefree and f not proportional to g, so
//! the extension has no zero divisors and the module is a field.

mod fermat;
mod hyper;
mod relations;

pub use fermat::{verify_fermat_action, FermatReport};
pub use hyper::{
    check_hyper_map, derive_quotient_factors, hyperelliptic_genus, invert_hyper_map,
    scaling_isomorphism, HyperMap, QuotientCase,
};
pub use relations::{map_closure, verify_belyi, verify_group_relations, BelyiReport, MapGroup};

use thiserror::Error;

use crate::algebra::poly::UniPoly;
use crate::algebra::ratfun::RatFun;
use crate::algebra::Cyclotomic;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("division by zero in the function field")]
    DivisionByZero,
    #[error("curve data invalid: {0}")]
    InvalidCurve(String),
    #[error("elements live on different curves")]
    CurveMismatch,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("unknown generator name '{0}'")]
    UnknownGeneratorName(String),
    #[error("composition closure exceeded the cap of {0} maps")]
    ClosureTooLarge(usize),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("no solution for the linear coefficient system")]
    NoSolution,
}

type F = Cyclotomic;
type RF = RatFun<F>;

/// The curve {y^2 = f(x), z^2 = g(x)} over a cyclotomic field.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperPair {
    pub f: UniPoly<F>,
    pub g: UniPoly<F>,
}

impl HyperPair {
    pub fn new(f: UniPoly<F>, g: UniPoly<F>) -> Result<Self, CurveError> {
        if f.degree().unwrap_or(0) < 1 || g.degree().unwrap_or(0) < 1 {
            return Err(CurveError::InvalidCurve("defining polynomials must be nonconstant".into()));
        }
        if !f.is_squarefree() || !g.is_squarefree() {
            return Err(CurveError::NotSquarefree);
        }
        // f proportional to g would make y/z +- constant a zero divisor
        let (q, r) = f.mul(&UniPoly::constant(
            g.leading().unwrap().inv().expect("monic-izable"),
        ))
        .divrem(&g.clone().into_monic());
        if r.is_zero() && q.is_constant() {
            return Err(CurveError::InvalidCurve(
                "f and g must not be proportional".into(),
            ));
        }
        Ok(HyperPair { f, g })
    }
}

/// r00 + r10 y + r01 z + r11 yz with rational-function coefficients.
#[derive(Clone, PartialEq)]
pub struct FfElem {
    pub c: [RF; 4],
}

impl std::fmt::Debug for FfElem {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            fmt,
            "({:?}) + ({:?})y + ({:?})z + ({:?})yz",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

impl FfElem {
    pub fn zero() -> Self {
        FfElem { c: [RF::zero(), RF::zero(), RF::zero(), RF::zero()] }
    }

    pub fn one() -> Self {
        FfElem { c: [RF::one(), RF::zero(), RF::zero(), RF::zero()] }
    }

    pub fn from_base(r: RF) -> Self {
        FfElem { c: [r, RF::zero(), RF::zero(), RF::zero()] }
    }

    pub fn from_scalar(s: F) -> Self {
        FfElem::from_base(RF::constant(s))
    }

    pub fn x() -> Self {
        FfElem::from_base(RF::x())
    }

    pub fn y() -> Self {
        FfElem { c: [RF::zero(), RF::one(), RF::zero(), RF::zero()] }
    }

    pub fn z() -> Self {
        FfElem { c: [RF::zero(), RF::zero(), RF::one(), RF::zero()] }
    }

    pub fn yz() -> Self {
        FfElem { c: [RF::zero(), RF::zero(), RF::zero(), RF::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(RF::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    /// The base-field part, if the element has no y, z, yz components.
    pub fn as_base(&self) -> Option<&RF> {
        if self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        FfElem {
            c: [
                self.c[0].add(&rhs.c[0]),
                self.c[1].add(&rhs.c[1]),
                self.c[2].add(&rhs.c[2]),
                self.c[3].add(&rhs.c[3]),
            ],
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        FfElem {
            c: [
                self.c[0].neg(),
                self.c[1].neg(),
                self.c[2].neg(),
                self.c[3].neg(),
            ],
        }
    }

    pub fn mul(&self, rhs: &Self, curve: &HyperPair) -> Self {
        let f = RF::from_poly(curve.f.clone());
        let g = RF::from_poly(curve.g.clone());
        let a = &self.c;
        let b = &rhs.c;
        let p = |i: usize, j: usize| a[i].mul(&b[j]);
        let c0 = p(0, 0)
            .add(&p(1, 1).mul(&f))
            .add(&p(2, 2).mul(&g))
            .add(&p(3, 3).mul(&f).mul(&g));
        let c1 = p(0, 1).add(&p(1, 0)).add(&p(2, 3).add(&p(3, 2)).mul(&g));
        let c2 = p(0, 2).add(&p(2, 0)).add(&p(1, 3).add(&p(3, 1)).mul(&f));
        let c3 = p(0, 3).add(&p(3, 0)).add(&p(1, 2)).add(&p(2, 1));
        FfElem { c: [c0, c1, c2, c3] }
    }

    pub fn scale(&self, s: &F) -> Self {
        FfElem {
            c: [
                self.c[0].scale(s),
                self.c[1].scale(s),
                self.c[2].scale(s),
                self.c[3].scale(s),
            ],
        }
    }

    /// y -> -y conjugation.
    pub fn conj_y(&self) -> Self {
        FfElem {
            c: [
                self.c[0].clone(),
                self.c[1].neg(),
                self.c[2].clone(),
                self.c[3].neg(),
            ],
        }
    }

    /// z -> -z conjugation.
    pub fn conj_z(&self) -> Self {
        FfElem {
            c: [
                self.c[0].clone(),
                self.c[1].clone(),
                self.c[2].neg(),
                self.c[3].neg(),
            ],
        }
    }

    /// Inverse via the norm over the four conjugates.
    pub fn inv(&self, curve: &HyperPair) -> Result<Self, CurveError> {
        if self.is_zero() {
            return Err(CurveError::DivisionByZero);
        }
        let partial = self
            .conj_y()
            .mul(&self.conj_z(), curve)
            .mul(&self.conj_y().conj_z(), curve);
        let norm = self.mul(&partial, curve);
        let base = norm
            .as_base()
            .expect("norm lies in the base field")
            .clone();
        if base.is_zero() {
            return Err(CurveError::DivisionByZero);
        }
        let inv = base.inv().expect("nonzero");
        Ok(FfElem {
            c: [
                partial.c[0].mul(&inv),
                partial.c[1].mul(&inv),
                partial.c[2].mul(&inv),
                partial.c[3].mul(&inv),
            ],
        })
    }

    pub fn div(&self, rhs: &Self, curve: &HyperPair) -> Result<Self, CurveError> {
        Ok(self.mul(&rhs.inv(curve)?, curve))
    }

    pub fn pow(&self, e: u64, curve: &HyperPair) -> Self {
        let mut acc = FfElem::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, curve);
            }
            base = base.mul(&base, curve);
            e >>= 1;
        }
        acc
    }
}

/// A rational map into a curve of the same shape, given by the images of
/// the three coordinates as elements of the source function field.
#[derive(Clone, PartialEq, Debug)]
pub struct RationalMap {
    pub x: FfElem,
    pub y: FfElem,
    pub z: FfElem,
}

impl RationalMap {
    pub fn identity() -> Self {
        RationalMap { x: FfElem::x(), y: FfElem::y(), z: FfElem::z() }
    }

    pub fn is_identity(&self) -> bool {
        *self == RationalMap::identity()
    }

    /// Evaluates a function-field expression at this map's coordinates.
    pub fn eval(&self, expr: &FfElem, curve: &HyperPair) -> Result<FfElem, CurveError> {
        let eval_rf = |r: &RF| -> Result<FfElem, CurveError> {
            let num = eval_poly_at_ff(r.num(), &self.x, curve);
            let den = eval_poly_at_ff(r.den(), &self.x, curve)?;
            Ok(num?.mul(&den.inv(curve)?, curve))
        };
        let mut out = eval_rf(&expr.c[0])?;
        let basis = [
            self.y.clone(),
            self.z.clone(),
            self.y.mul(&self.z, curve),
        ];
        for (i, b) in basis.iter().enumerate() {
            let coeff = &expr.c[i + 1];
            if coeff.is_zero() {
                continue;
            }
            out = out.add(&eval_rf(coeff)?.mul(b, curve));
        }
        Ok(out)
    }

    /// (self . inner)(p) = self(inner(p)); inner's coordinates live on
    /// `curve`, self's expressions are read in the target coordinates.
    pub fn compose(&self, inner: &Self, curve: &HyperPair) -> Result<Self, CurveError> {
        Ok(RationalMap {
            x: inner.eval(&self.x, curve)?,
            y: inner.eval(&self.y, curve)?,
            z: inner.eval(&self.z, curve)?,
        })
    }
}

fn eval_poly_at_ff(
    p: &UniPoly<F>,
    at: &FfElem,
    curve: &HyperPair,
) -> Result<FfElem, CurveError> {
    let mut acc = FfElem::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(at, curve).add(&FfElem::from_scalar(c.clone()));
    }
    Ok(acc)
}

/// Y^2 = f_target(X) and Z^2 = g_target(X) identically in the source
/// function field.
pub fn pullback_check(
    source: &HyperPair,
    map: &RationalMap,
    target: &HyperPair,
) -> Result<bool, CurveError> {
    let y2 = map.y.mul(&map.y, source);
    let z2 = map.z.mul(&map.z, source);
    let fx = eval_poly_at_ff(&target.f, &map.x, source)?;
    let gx = eval_poly_at_ff(&target.g, &map.x, source)?;
    Ok(y2 == fx && z2 == gx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_int;

    fn poly(coeffs: &[i64]) -> UniPoly<F> {
        UniPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Cyclotomic::from_integer(c))
                .collect(),
        )
    }

    /// Case-1 curve with q = 3 over Q(zeta_12).
    fn case1_q3() -> HyperPair {
        let f = poly(&[-1, 0, 0, 1]); // x^3 - 1
        let g = poly(&[-1, 0, 0, 0, 0, 0, 1]); // x^6 - 1
        HyperPair::new(
            f.map_coeffs(|c| c.embed(12)),
            g.map_coeffs(|c| c.embed(12)),
        )
        .unwrap()
    }

    #[test]
    fn defining_relations() {
        let c = case1_q3();
        let y2 = FfElem::y().mul(&FfElem::y(), &c);
        assert_eq!(y2.as_base().unwrap(), &RF::from_poly(c.f.clone()));
        let zz = FfElem::z().div(&FfElem::z(), &c).unwrap();
        assert!(zz.is_one());
    }

    #[test]
    fn core_identity_iz_over_y() {
        // (iz/y)^2 = -g/f = -(x^3+1), which equals (zeta_6 x)^3 - 1
        let c = case1_q3();
        let i = Cyclotomic::i().embed(12);
        let e = FfElem::z()
            .scale(&i)
            .div(&FfElem::y(), &c)
            .unwrap();
        let sq = e.mul(&e, &c);
        let expect = poly(&[-1, 0, 0, -1]).map_coeffs(|c| c.embed(12)); // -(x^3+1)
        assert_eq!(sq.as_base().unwrap(), &RF::from_poly(expect));
        // and this is f evaluated at zeta_6 x
        let zeta6 = Cyclotomic::zeta(6).embed(12);
        let f_at = c.f.compose_scale(&zeta6);
        assert_eq!(sq.as_base().unwrap(), &RF::from_poly(f_at));
    }

    #[test]
    fn inverse_roundtrip() {
        let c = case1_q3();
        // a generic element with all four components
        let e = FfElem {
            c: [
                RF::from_poly(poly(&[1, 2]).map_coeffs(|c| c.embed(12))),
                RF::one(),
                RF::x(),
                RF::constant(Cyclotomic::from_integer(3).embed(12)),
            ],
        };
        let inv = e.inv(&c).unwrap();
        assert!(e.mul(&inv, &c).is_one());
        assert_eq!(
            FfElem::zero().inv(&c).unwrap_err(),
            CurveError::DivisionByZero
        );
    }

    #[test]
    fn pullback_of_identity_and_sign_maps() {
        let c = case1_q3();
        assert!(pullback_check(&c, &RationalMap::identity(), &c).unwrap());
        let a = RationalMap {
            x: FfElem::x(),
            y: FfElem::y().neg(),
            z: FfElem::z(),
        };
        assert!(pullback_check(&c, &a, &c).unwrap());
        // a . a = identity
        assert!(a.compose(&a, &c).unwrap().is_identity());
    }

    #[test]
    fn invalid_curves_rejected() {
        let sq = poly(&[1, -2, 1]); // (x-1)^2
        assert_eq!(
            HyperPair::new(sq, poly(&[-1, 0, 1])).unwrap_err(),
            CurveError::NotSquarefree
        );
        assert!(HyperPair::new(poly(&[-1, 1]), poly(&[-2, 2])).is_err());
        assert!(HyperPair::new(poly(&[-1, 1]), poly(&[1, 1])).is_ok());
    }

    #[test]
    fn rational_as_integer_scaling() {
        let c = case1_q3();
        let x6 = FfElem::x().pow(6, &c);
        let x = x6.as_base().unwrap();
        assert_eq!(x, &RF::from_poly(poly(&[0, 0, 0, 0, 0, 0, 1]).map_coeffs(|c| c.embed(12))));
    }
}

#[cfg(test)]
mod float_checks {
    use super::*;
    use crate::algebra::rational::rat;

    /// Defense in depth for the exact identities: the core case-1
    /// relation (iz/y)^2 = f(zeta_6 x) evaluated numerically at a few
    /// rational points.
    #[test]
    fn numeric_cross_check_case1_identity() {
        let q = 3u32;
        let zeta6 = Cyclotomic::zeta(6);
        for xv in [rat(2, 1), rat(-3, 2), rat(7, 5)] {
            let x = Cyclotomic::from_rational(xv);
            // y^2 = x^3 - 1, z^2 = x^6 - 1 at the sample point
            let y2 = x.pow(q as i64).sub(&Cyclotomic::one());
            let z2 = x.pow(2 * q as i64).sub(&Cyclotomic::one());
            // (iz/y)^2 = -z^2/y^2 must equal (zeta_6 x)^3 - 1
            let lhs = z2.div(&y2).unwrap().neg();
            let rhs = zeta6.mul(&x).pow(q as i64).sub(&Cyclotomic::one());
            assert_eq!(lhs, rhs);
            let (lr, li) = lhs.to_complex();
            let (rr, ri) = rhs.to_complex();
            assert!((lr - rr).abs() < 1e-9 && (li - ri).abs() < 1e-9);
        }
    }
}
