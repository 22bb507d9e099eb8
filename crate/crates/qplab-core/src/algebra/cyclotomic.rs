//! Exact elements of the cyclotomic fields Q(zeta_n).
//!
//! An element is stored as its coordinate vector in the power basis
//! 1, zeta, ..., zeta^(phi(n)-1) of Q(zeta_n) = Q[x]/(Phi_n), so equality
//! is coefficient-wise. Arithmetic between different orders first embeds
//! both operands into Q(zeta_lcm); the stored order is only lowered on
//! demand through [`Cyclotomic::minimize_field`].

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{rational_from_string, rational_to_f64, rational_to_string, rone, rzero, Rational};
use super::{AlgebraError, Field};

pub fn phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn divisors(n: u32) -> Vec<u32> {
    let mut d: Vec<u32> = (1..=n).filter(|k| n % k == 0).collect();
    d.sort_unstable();
    d
}

/// Phi_n as a dense integer-coefficient vector (low degree first).
fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by the product of Phi_d over proper divisors d.
    let mut num = vec![BigInt::zero(); (n + 1) as usize];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        num = int_poly_div_exact(&num, &phi_d);
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

/// Exact division of integer polynomials (remainder must vanish).
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quo = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        quo[k] = c.clone();
        if c.is_zero() {
            continue;
        }
        for (i, dc) in den.iter().enumerate() {
            rem[k + i] -= &c * dc;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact division");
    quo
}

#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    /// Exactly phi(order) coordinates.
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { order: 1, coeffs: vec![rzero()] }
    }

    pub fn one() -> Self {
        Cyclotomic::from_rational(rone())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic { order: 1, coeffs: vec![r] }
    }

    pub fn from_integer(n: i64) -> Self {
        Cyclotomic::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// zeta_n, the primitive n-th root of unity exp(2*pi*i/n).
    pub fn zeta(n: u32) -> Self {
        Cyclotomic::zeta_pow(n, 1)
    }

    /// zeta_n^k.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as u32;
        let mut dense = vec![rzero(); n as usize];
        dense[k as usize] = rone();
        Cyclotomic::from_dense(n, dense)
    }

    /// i = zeta_4.
    pub fn i() -> Self {
        Cyclotomic::zeta(4)
    }

    /// omega_n in the notation of the verified statements (same as zeta_n).
    pub fn omega(n: u32) -> Self {
        Cyclotomic::zeta(n)
    }

    /// Builds an element from a dense polynomial in zeta_n of any degree,
    /// reducing modulo Phi_n.
    pub fn from_dense(order: u32, mut dense: Vec<Rational>) -> Self {
        let ph = phi(order) as usize;
        let modulus = cyclotomic_polynomial(order);
        let dd = ph; // deg Phi_n
        while dense.len() > dd {
            let k = dense.len() - 1 - dd;
            let c = dense.pop().unwrap();
            if !Zero::is_zero(&c) {
                for (i, mc) in modulus.iter().take(dd).enumerate() {
                    let delta = &c * Rational::from_integer(mc.clone());
                    dense[k + i] -= delta;
                }
            }
        }
        dense.resize(ph, rzero());
        Cyclotomic { order, coeffs: dense }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Image in Q(zeta_target); `target` must be a multiple of the order.
    pub fn embed(&self, target: u32) -> Self {
        if target == self.order {
            return self.clone();
        }
        assert!(
            target % self.order == 0,
            "cannot embed order {} into {}",
            self.order,
            target
        );
        let step = (target / self.order) as usize;
        let mut dense = vec![rzero(); phi(self.order) as usize * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[i * step] = c.clone();
        }
        Cyclotomic::from_dense(target, dense)
    }

    fn aligned(&self, rhs: &Self) -> (Self, Self) {
        let n = self.order.lcm(&rhs.order);
        (self.embed(n), rhs.embed(n))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (mut a, b) = self.aligned(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = self.aligned(rhs);
        let mut dense = vec![rzero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if Zero::is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if Zero::is_zero(y) {
                    continue;
                }
                dense[i + j] += x * y;
            }
        }
        Cyclotomic::from_dense(a.order, dense)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        // Extended Euclid in Q[x] against Phi_n, which is irreducible.
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let a = trim(self.coeffs.clone());
        let (g, u) = half_ext_gcd(&a, &modulus);
        assert_eq!(g.len(), 1, "Phi_n must be coprime to any nonzero element");
        let ginv = g[0].recip();
        let dense: Vec<Rational> = u.iter().map(|c| c * &ginv).collect();
        Ok(Cyclotomic::from_dense(self.order, dense))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut result = Cyclotomic::one();
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

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.is_rational()
            .map(|r| One::is_one(&r))
            .unwrap_or(false)
    }

    /// The rational value, when the element lies in Q.
    pub fn is_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Galois action zeta |-> zeta^k; k must be coprime to the order.
    pub fn galois(&self, k: i64) -> Result<Self, AlgebraError> {
        let n = self.order as i64;
        let kr = k.rem_euclid(n);
        if n.gcd(&kr) != 1 {
            return Err(AlgebraError::NotCoprime { k, order: self.order });
        }
        let mut dense = vec![rzero(); self.order as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let e = ((i as i64 * kr) % n) as usize;
            dense[e] += c;
        }
        Ok(Cyclotomic::from_dense(self.order, dense))
    }

    /// Complex conjugation, = galois(-1).
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always coprime to the order")
    }

    /// Rewrites the element over the smallest cyclotomic field containing it.
    pub fn minimize_field(&self) -> Self {
        'outer: for d in divisors(self.order) {
            // a lies in Q(zeta_d) iff it is fixed by Gal(Q(zeta_n)/Q(zeta_d)).
            let n = self.order;
            for k in 1..n {
                if (k as i64).gcd(&(n as i64)) == 1 && k % d == 1 % d.max(1) {
                    if self.galois(k as i64).unwrap() != *self {
                        continue 'outer;
                    }
                }
            }
            if let Some(c) = self.express_in_suborder(d) {
                return c;
            }
        }
        self.clone()
    }

    /// Solves for coordinates in the power basis of Q(zeta_d) inside
    /// Q(zeta_n); returns `None` when the element is not in the subfield.
    fn express_in_suborder(&self, d: u32) -> Option<Cyclotomic> {
        let ph_d = phi(d) as usize;
        let ph_n = phi(self.order) as usize;
        // Columns: embeddings of zeta_d^j, j < phi(d).
        let mut cols = Vec::with_capacity(ph_d);
        for j in 0..ph_d {
            cols.push(Cyclotomic::zeta_pow(d, j as i64).embed(self.order));
        }
        // Gaussian solve of a ph_n x ph_d system.
        let mut aug: Vec<Vec<Rational>> = (0..ph_n)
            .map(|r| {
                let mut row: Vec<Rational> =
                    cols.iter().map(|c| c.coeffs[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..ph_d {
            if let Some(p) = (row..ph_n).find(|&r| !Zero::is_zero(&aug[r][col])) {
                aug.swap(row, p);
                let inv = aug[row][col].recip();
                for c in col..=ph_d {
                    aug[row][c] = &aug[row][c] * &inv;
                }
                for r in 0..ph_n {
                    if r != row && !Zero::is_zero(&aug[r][col]) {
                        let f = aug[r][col].clone();
                        for c in col..=ph_d {
                            let delta = &f * &aug[row][c];
                            aug[r][c] -= delta;
                        }
                    }
                }
                pivots.push((row, col));
                row += 1;
            }
        }
        // Inconsistent system -> not in the subfield.
        for r in row..ph_n {
            if !Zero::is_zero(&aug[r][ph_d]) {
                return None;
            }
        }
        let mut coeffs = vec![rzero(); ph_d];
        for (r, c) in pivots {
            coeffs[c] = aug[r][ph_d].clone();
        }
        Some(Cyclotomic { order: d, coeffs })
    }

    /// Numeric value for the defense-in-depth float cross checks.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = rational_to_f64(c);
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (self.order as f64);
            re += v * theta.cos();
            im += v * theta.sin();
        }
        (re, im)
    }

    /// Total order used only for canonical sorting of reports and tables.
    pub fn cmp_canonical(&self, rhs: &Self) -> std::cmp::Ordering {
        let (a, b) = self.aligned(rhs);
        for (x, y) in a.coeffs.iter().zip(b.coeffs.iter()) {
            match x.cmp(y) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.len() > 1 && Zero::is_zero(v.last().unwrap()) {
        v.pop();
    }
    v
}

/// Returns (g, u) with u*a = g mod b, g the monic-free gcd representative.
fn half_ext_gcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = trim(b.to_vec());
    let mut r1 = trim(a.to_vec());
    let mut u0: Vec<Rational> = vec![rzero()];
    let mut u1: Vec<Rational> = vec![rone()];
    while !(r1.len() == 1 && Zero::is_zero(&r1[0])) {
        let (q, r) = poly_divrem(&r0, &r1);
        let u = poly_sub(&u0, &poly_mul(&q, &u1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u;
    }
    (r0, u0)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![rzero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if Zero::is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![rzero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (vec![rzero()], trim(rem));
    }
    let mut quo = vec![rzero(); a.len() - b.len() + 1];
    let lead = b[db].recip();
    for k in (0..quo.len()).rev() {
        let c = &rem[k + db] * &lead;
        quo[k] = c.clone();
        if Zero::is_zero(&c) {
            continue;
        }
        for (i, bc) in b.iter().enumerate() {
            let delta = &c * bc;
            rem[k + i] -= delta;
        }
    }
    (trim(quo), trim(rem))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let cs = rational_to_string(c);
            terms.push(match k {
                0 => cs,
                1 => format!("{cs}*z{}", self.order),
                _ => format!("{cs}*z{}^{}", self.order, k),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Cyclotomic::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Cyclotomic::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Cyclotomic::mul(self, rhs)
    }
    fn inv(&self) -> Option<Self> {
        Cyclotomic::inv(self).ok()
    }
    fn neg(&self) -> Self {
        Cyclotomic::neg(self)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            order: u32,
            coeffs: Vec<&'a str>,
        }
        let strings: Vec<String> = self.coeffs.iter().map(rational_to_string).collect();
        let repr = Repr {
            order: self.order,
            coeffs: strings.iter().map(|s| s.as_str()).collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            order: u32,
            coeffs: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.order == 0 {
            return Err(D::Error::custom("cyclotomic order must be positive"));
        }
        if repr.coeffs.len() != phi(repr.order) as usize {
            return Err(D::Error::custom("coefficient count must equal phi(order)"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| rational_from_string(s).ok_or_else(|| D::Error::custom("bad rational")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Cyclotomic { order: repr.order, coeffs })
    }
}

/// Order of k in (Z/n)*, used when picking Galois orbit representatives.
pub fn multiplicative_order(k: u64, n: u64) -> Option<u64> {
    if n == 0 || k.gcd(&n) != 1 {
        return None;
    }
    let mut acc = k % n;
    let mut ord = 1;
    while acc != 1 % n {
        acc = acc * k % n;
        ord += 1;
    }
    Some(ord)
}
