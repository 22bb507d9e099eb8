//! Moebius transformations with exact cyclotomic entries, acting on the
//! projective line.

use std::fmt;

use super::cyclotomic::Cyclotomic;
use super::AlgebraError;

/// Point of P^1 over a cyclotomic field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ProjPoint {
    Finite(Cyclotomic),
    Infinity,
}

impl ProjPoint {
    pub fn finite(z: Cyclotomic) -> Self {
        ProjPoint::Finite(z)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(z) => write!(f, "{z}"),
            ProjPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// z |-> (az + b)/(cz + d), canonicalized so the first nonzero entry of
/// (a, b, c, d) is 1; composition then matches 2x2 matrix product up to
/// that scaling.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mobius {
    pub a: Cyclotomic,
    pub b: Cyclotomic,
    pub c: Cyclotomic,
    pub d: Cyclotomic,
}

impl Mobius {
    pub fn new(
        a: Cyclotomic,
        b: Cyclotomic,
        c: Cyclotomic,
        d: Cyclotomic,
    ) -> Result<Self, AlgebraError> {
        let det = a.mul(&d).sub(&b.mul(&c));
        if det.is_zero() {
            return Err(AlgebraError::SingularMobius);
        }
        let mut m = Mobius { a, b, c, d };
        m.canonicalize();
        Ok(m)
    }

    pub fn identity() -> Self {
        Mobius {
            a: Cyclotomic::one(),
            b: Cyclotomic::zero(),
            c: Cyclotomic::zero(),
            d: Cyclotomic::one(),
        }
    }

    /// z |-> 1/z.
    pub fn inversion() -> Self {
        Mobius::new(
            Cyclotomic::zero(),
            Cyclotomic::one(),
            Cyclotomic::one(),
            Cyclotomic::zero(),
        )
        .unwrap()
    }

    /// z |-> c*z.
    pub fn scaling(c: Cyclotomic) -> Result<Self, AlgebraError> {
        Mobius::new(c, Cyclotomic::zero(), Cyclotomic::zero(), Cyclotomic::one())
    }

    fn canonicalize(&mut self) {
        let entries = [&self.a, &self.b, &self.c, &self.d];
        let lead = entries.iter().find(|e| !e.is_zero()).map(|e| (*e).clone());
        if let Some(l) = lead {
            let inv = l.inv().expect("nonzero");
            self.a = self.a.mul(&inv);
            self.b = self.b.mul(&inv);
            self.c = self.c.mul(&inv);
            self.d = self.d.mul(&inv);
        }
    }

    pub fn apply(&self, z: &ProjPoint) -> ProjPoint {
        match z {
            ProjPoint::Infinity => {
                if self.c.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(self.a.div(&self.c).expect("c nonzero"))
                }
            }
            ProjPoint::Finite(z) => {
                let den = self.c.mul(z).add(&self.d);
                if den.is_zero() {
                    ProjPoint::Infinity
                } else {
                    let num = self.a.mul(z).add(&self.b);
                    ProjPoint::Finite(num.div(&den).expect("den nonzero"))
                }
            }
        }
    }

    pub fn compose(&self, inner: &Self) -> Self {
        // matrix product self * inner
        let a = self.a.mul(&inner.a).add(&self.b.mul(&inner.c));
        let b = self.a.mul(&inner.b).add(&self.b.mul(&inner.d));
        let c = self.c.mul(&inner.a).add(&self.d.mul(&inner.c));
        let d = self.c.mul(&inner.b).add(&self.d.mul(&inner.d));
        Mobius::new(a, b, c, d).expect("composition of invertible maps")
    }

    pub fn inverse(&self) -> Self {
        Mobius::new(
            self.d.clone(),
            self.b.neg(),
            self.c.neg(),
            self.a.clone(),
        )
        .expect("invertible")
    }

    pub fn is_identity(&self) -> bool {
        *self == Mobius::identity()
    }

    /// Least k >= 1 with self^k = id, up to the given bound.
    pub fn order(&self, bound: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.compose(self);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_fixes_points() {
        let id = Mobius::identity();
        let z = ProjPoint::Finite(Cyclotomic::zeta(6));
        assert_eq!(id.apply(&z), z);
        assert_eq!(id.apply(&ProjPoint::Infinity), ProjPoint::Infinity);
    }

    #[test]
    fn compose_inverse_is_identity() {
        let t = Mobius::new(
            Cyclotomic::zeta(8),
            Cyclotomic::from_integer(3),
            Cyclotomic::one(),
            Cyclotomic::from_integer(-2),
        )
        .unwrap();
        assert!(t.compose(&t.inverse()).is_identity());
        assert!(t.inverse().compose(&t).is_identity());
    }

    #[test]
    fn group_law_matches_matrix_product() {
        let s = Mobius::inversion();
        let t = Mobius::scaling(Cyclotomic::zeta(5)).unwrap();
        let st = s.compose(&t);
        // (s*t)(z) = s(t(z))
        let z = ProjPoint::Finite(Cyclotomic::from_integer(2));
        assert_eq!(st.apply(&z), s.apply(&t.apply(&z)));
    }

    #[test]
    fn singular_rejected() {
        let e = Mobius::new(
            Cyclotomic::one(),
            Cyclotomic::one(),
            Cyclotomic::one(),
            Cyclotomic::one(),
        );
        assert_eq!(e.unwrap_err(), AlgebraError::SingularMobius);
    }
}
