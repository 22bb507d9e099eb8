//! Sparse multivariate polynomials: exponent vector -> coefficient.

use std::collections::BTreeMap;
use std::fmt;

use super::Field;

#[derive(Clone, PartialEq)]
pub struct MultiPoly<F: Field> {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, F>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exp = vec![0u16; nvars];
        exp[i] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.terms.insert(exp, F::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, exp: Vec<u16>, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let exp: Vec<u16> = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                out.insert(exp, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x.mul(c))).collect(),
        }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut result = MultiPoly::one(self.nvars);
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

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> MultiPoly<G> {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.insert(e.clone(), f(c));
        }
        out
    }

    /// Substitutes values from any commutative algebra over F.
    ///
    /// `mul`, `add` and `pow` of the target are supplied by closures so the
    /// same polynomial can be evaluated on function-field elements,
    /// multivariate polynomials or plain field values.
    pub fn eval_generic<T: Clone>(
        &self,
        values: &[T],
        from_coeff: impl Fn(&F) -> T,
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
        one: T,
    ) -> T {
        // Cache powers of each variable up to the needed exponent.
        let mut powers: Vec<Vec<T>> = values.iter().map(|v| vec![one.clone(), v.clone()]).collect();
        for (e, _) in &self.terms {
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = mul(powers[i].last().unwrap(), &values[i]);
                    powers[i].push(next);
                }
            }
        }
        let mut acc: Option<T> = None;
        for (e, c) in &self.terms {
            let mut term = from_coeff(c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = mul(&term, &powers[i][k as usize]);
                }
            }
            acc = Some(match acc {
                None => term,
                Some(a) => add(&a, &term),
            });
        }
        acc.unwrap_or_else(|| {
            let z = from_coeff(&F::zero());
            z
        })
    }

    /// Substitutes multivariate polynomials for the variables.
    pub fn substitute(&self, values: &[MultiPoly<F>]) -> MultiPoly<F> {
        assert_eq!(values.len(), self.nvars);
        let nv = values[0].nvars;
        self.eval_generic(
            values,
            |c| MultiPoly::constant(nv, c.clone()),
            |a, b| a.add(b),
            |a, b| a.mul(b),
            MultiPoly::one(nv),
        )
    }

    /// All coefficients, in the canonical term order.
    pub fn coefficients(&self) -> Vec<&F> {
        self.terms.values().collect()
    }
}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            format!("t{}", i + 1)
                        } else {
                            format!("t{}^{}", i + 1, k)
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    format!("({c:?})")
                } else {
                    format!("({c:?})*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat_int, Rational};

    #[test]
    fn ring_ops() {
        let x = MultiPoly::<Rational>::var(2, 0);
        let y = MultiPoly::<Rational>::var(2, 1);
        // (x+y)^2 = x^2 + 2xy + y^2
        let s = x.add(&y).pow(2);
        let expect = x
            .pow(2)
            .add(&x.mul(&y).scale(&rat_int(2)))
            .add(&y.pow(2));
        assert_eq!(s, expect);
        assert!(s.sub(&expect).is_zero());
    }

    #[test]
    fn substitution() {
        let x = MultiPoly::<Rational>::var(1, 0);
        let sq = x.pow(2);
        let shifted = x.add(&MultiPoly::one(1));
        // (x+1)^2 = x^2 + 2x + 1
        let got = sq.substitute(&[shifted]);
        let expect = x.pow(2).add(&x.scale(&rat_int(2))).add(&MultiPoly::one(1));
        assert_eq!(got, expect);
    }
}
