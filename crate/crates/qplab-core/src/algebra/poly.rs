//! Dense univariate polynomials over a coefficient field.

use std::fmt;

use super::Field;

/// Coefficients low-degree first, no trailing zeros; the zero polynomial
/// has an empty coefficient vector.
#[derive(Clone, PartialEq)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        if c.is_zero() {
            UniPoly::zero()
        } else {
            UniPoly { coeffs: vec![c] }
        }
    }

    pub fn x() -> Self {
        UniPoly { coeffs: vec![F::zero(), F::one()] }
    }

    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut coeffs = vec![F::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].add(c);
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].add(c);
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &F) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut result = UniPoly::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Euclidean division; panics on zero divisor.
    pub fn divrem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < rhs.coeffs.len() {
            return (UniPoly::zero(), self.clone());
        }
        let dd = rhs.coeffs.len() - 1;
        let lead_inv = rhs.coeffs[dd].inv().expect("leading coefficient invertible");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![F::zero(); self.coeffs.len() - rhs.coeffs.len() + 1];
        for k in (0..quo.len()).rev() {
            let c = rem[k + dd].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            quo[k] = c.clone();
            for (i, b) in rhs.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub(&c.mul(b));
            }
        }
        (UniPoly::from_coeffs(quo), UniPoly::from_coeffs(rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.into_monic()
    }

    pub fn into_monic(self) -> Self {
        match self.leading() {
            None => self,
            Some(l) if l.is_one() => self,
            Some(l) => {
                let inv = l.inv().expect("leading coefficient invertible");
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut k = F::zero();
            for _ in 0..i {
                k = k.add(&F::one());
            }
            coeffs.push(c.mul(&k));
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// Product of the distinct irreducible factors, i.e. self / gcd(self, self').
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.into_monic()
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Substitutes x -> c*x.
    pub fn compose_scale(&self, c: &F) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        let mut power = F::one();
        for a in &self.coeffs {
            coeffs.push(a.mul(&power));
            power = power.mul(c);
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c:?})"),
                1 => format!("({c:?})*x"),
                _ => format!("({c:?})*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
