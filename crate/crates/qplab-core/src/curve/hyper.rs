//! Single hyperelliptic models w^2 = h(x): genus, explicit isomorphism
//! checks of the form (x, w) -> (phi(x), psi(x) w), the scaling search,
//! and the quotient-factor polynomials of the three involution quotients
//! and their refinements.

use super::CurveError;
use crate::algebra::poly::UniPoly;
use crate::algebra::ratfun::{eval_poly_at, RatFun};
use crate::algebra::rational::rat_int;
use crate::algebra::Cyclotomic;

type F = Cyclotomic;
type RF = RatFun<F>;

/// Genus of w^2 = h(x): floor((deg h - 1)/2).
pub fn hyperelliptic_genus(h: &UniPoly<F>) -> Result<u64, CurveError> {
    if !h.is_squarefree() {
        return Err(CurveError::NotSquarefree);
    }
    let d = h.degree().ok_or(CurveError::NotSquarefree)? as u64;
    Ok(d.saturating_sub(1) / 2)
}

/// (x, w) -> (phi(x), psi(x) w).
#[derive(Clone, Debug, PartialEq)]
pub struct HyperMap {
    pub phi: RF,
    pub psi: RF,
}

/// The map carries w^2 = h_src onto w^2 = h_tgt iff psi^2 h_src = h_tgt(phi).
pub fn check_hyper_map(
    h_src: &UniPoly<F>,
    map: &HyperMap,
    h_tgt: &UniPoly<F>,
) -> Result<bool, CurveError> {
    let lhs = map.psi.mul(&map.psi).mul(&RF::from_poly(h_src.clone()));
    let rhs = eval_poly_at(h_tgt, &map.phi);
    Ok(lhs == rhs)
}

/// Inverts a map whose phi is a degree-one (Moebius) substitution.
pub fn invert_hyper_map(map: &HyperMap) -> Option<HyperMap> {
    let n = map.phi.num();
    let d = map.phi.den();
    if n.degree().unwrap_or(0) > 1 || d.degree().unwrap_or(0) > 1 {
        return None;
    }
    // phi = (a x + b)/(c x + d); inverse: (d t - b)/(-c t + a)
    let a = n.coeff(1);
    let b = n.coeff(0);
    let c = d.coeff(1);
    let dd = d.coeff(0);
    let num = UniPoly::from_coeffs(vec![b.neg(), dd]);
    let den = UniPoly::from_coeffs(vec![a, c.neg()]);
    let phi_inv = RF::new(num, den).ok()?;
    // psi_inv(t) = 1 / psi(phi_inv(t))
    let psi_at = map.psi.compose(&phi_inv).ok()?;
    let psi_inv = psi_at.inv().ok()?;
    Some(HyperMap { phi: phi_inv, psi: psi_inv })
}

/// Searches x -> zeta x, w -> mu w over roots of unity of the given order
/// (and their negatives); returns a verified isomorphism or None.
pub fn scaling_isomorphism(
    h1: &UniPoly<F>,
    h2: &UniPoly<F>,
    root_order: u32,
) -> Option<HyperMap> {
    let candidates: Vec<F> = (0..root_order as i64)
        .flat_map(|k| {
            let z = Cyclotomic::zeta_pow(root_order, k);
            [z.clone(), z.neg()]
        })
        .collect();
    for zeta in &candidates {
        let h2_at = h2.compose_scale(zeta);
        // need mu^2 h1 = h2(zeta x)
        for mu in &candidates {
            if h1.scale(&mu.mul(mu)) == h2_at {
                let map = HyperMap {
                    phi: RF::from_poly(UniPoly::monomial(zeta.clone(), 1)),
                    psi: RF::constant(mu.clone()),
                };
                debug_assert!(check_hyper_map(h1, &map, h2).unwrap());
                return Some(map);
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientCase {
    Case1 { q: u32 },
    Case2a { l: u32 },
    Case2b { l: u32 },
}

/// x^k + c as a polynomial.
fn binomial_poly(k: u32, c: F) -> UniPoly<F> {
    let mut coeffs = vec![F::zero(); k as usize + 1];
    coeffs[0] = c;
    coeffs[k as usize] = F::one();
    UniPoly::from_coeffs(coeffs)
}

/// The quotient-model polynomials of the involution quotients S_a, S_b,
/// S_ab and the refinement factors S_a1, S_a2, labeled.
pub fn derive_quotient_factors(case: QuotientCase) -> Result<Vec<(String, UniPoly<F>)>, CurveError> {
    let one = Cyclotomic::one();
    let minus_one = Cyclotomic::from_integer(-1);
    match case {
        QuotientCase::Case1 { q } => {
            if q < 3 || q % 2 == 0 {
                return Err(CurveError::OutOfRange(format!("q = {q}")));
            }
            let m = 2 * q;
            let sa1 = binomial_poly(q, minus_one.clone());
            let sa2 = sa1.mul(&UniPoly::x());
            Ok(vec![
                ("S_a".into(), binomial_poly(m, minus_one.clone())),
                ("S_b".into(), binomial_poly(q, minus_one.clone())),
                ("S_ab".into(), binomial_poly(q, one)),
                ("S_a1".into(), sa1),
                ("S_a2".into(), sa2),
            ])
        }
        QuotientCase::Case2a { l } => {
            if l < 2 {
                return Err(CurveError::OutOfRange(format!("l = {l}")));
            }
            let w3 = Cyclotomic::zeta(3);
            let w3sq = w3.mul(&w3);
            // S_a: x^2l + x^l + 1, S_b: x^2l + w3 x^l + w3^2,
            // S_ab: (x^l - 1)(x^l - w3) = x^2l + w3^2 x^l + w3
            let trinomial = |cl: F, c0: F| {
                let mut coeffs = vec![F::zero(); 2 * l as usize + 1];
                coeffs[0] = c0;
                coeffs[l as usize] = cl;
                coeffs[2 * l as usize] = F::one();
                UniPoly::from_coeffs(coeffs)
            };
            // even model of S_a: (1 - v^2)^l + 2 sum_j C(2l, 2j) v^(2j)
            let v = UniPoly::<F>::x();
            let one_minus_v2 = UniPoly::from_coeffs(vec![
                F::one(),
                F::zero(),
                Cyclotomic::from_integer(-1),
            ]);
            let mut even_sum = UniPoly::zero();
            for j in 0..=l {
                let c = binomial(2 * l as u64, 2 * j as u64);
                even_sum = even_sum.add(&UniPoly::monomial(
                    Cyclotomic::from_rational(rat_int(2 * c)),
                    2 * j as usize,
                ));
            }
            let sa_model = one_minus_v2.pow(l as usize).add(&even_sum);
            // S_a1: substitute v^2 -> v
            let one_minus_v = UniPoly::from_coeffs(vec![F::one(), Cyclotomic::from_integer(-1)]);
            let mut odd_sum = UniPoly::zero();
            for j in 0..=l {
                let c = binomial(2 * l as u64, 2 * j as u64);
                odd_sum = odd_sum.add(&UniPoly::monomial(
                    Cyclotomic::from_rational(rat_int(2 * c)),
                    j as usize,
                ));
            }
            let sa1 = one_minus_v.pow(l as usize).add(&odd_sum);
            let sa2 = sa1.mul(&v);
            Ok(vec![
                ("S_a".into(), trinomial(one.clone(), one.clone())),
                ("S_b".into(), trinomial(w3.clone(), w3sq.clone())),
                ("S_ab".into(), trinomial(w3sq, w3)),
                ("S_a_model".into(), sa_model),
                ("S_a1".into(), sa1),
                ("S_a2".into(), sa2),
            ])
        }
        QuotientCase::Case2b { l } => {
            if l < 2 {
                return Err(CurveError::OutOfRange(format!("l = {l}")));
            }
            let sa1 = binomial_poly(2 * l, minus_one.clone());
            let sa2 = sa1.mul(&UniPoly::x());
            Ok(vec![
                ("S_a".into(), binomial_poly(4 * l, minus_one.clone())),
                ("S_b".into(), binomial_poly(2 * l, minus_one)),
                ("S_ab".into(), binomial_poly(2 * l, one)),
                ("S_a1".into(), sa1),
                ("S_a2".into(), sa2),
            ])
        }
    }
}

fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let mut acc: i64 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as i64 / (i as i64 + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ipoly(coeffs: &[i64]) -> UniPoly<F> {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| Cyclotomic::from_integer(c)).collect())
    }

    #[test]
    fn genus_values() {
        assert_eq!(hyperelliptic_genus(&ipoly(&[-1, 0, 0, 0, 0, 0, 1])).unwrap(), 2); // x^6-1
        assert_eq!(hyperelliptic_genus(&ipoly(&[-1, 0, 0, 1])).unwrap(), 1); // deg 3
        assert_eq!(hyperelliptic_genus(&ipoly(&[0, 3, 10, 3])).unwrap(), 1); // E2 = x(3x^2+10x+3)
        assert!(hyperelliptic_genus(&ipoly(&[1, 2, 1])).is_err());
    }

    #[test]
    fn scaling_iso_x3_minus_1_to_x3_plus_1() {
        let h1 = ipoly(&[-1, 0, 0, 1]).map_coeffs(|c| c.embed(12));
        let h2 = ipoly(&[1, 0, 0, 1]).map_coeffs(|c| c.embed(12));
        let map = scaling_isomorphism(&h1, &h2, 12).expect("x -> -x, w -> i w works");
        assert!(check_hyper_map(&h1, &map, &h2).unwrap());
        // both ways
        let inv = invert_hyper_map(&map).unwrap();
        assert!(check_hyper_map(&h2, &inv, &h1).unwrap());
        // identity map on equal curves
        let id = scaling_isomorphism(&h1, &h1, 12).unwrap();
        assert!(check_hyper_map(&h1, &id, &h1).unwrap());
    }

    #[test]
    fn case2a_l2_factors_expand_to_e2() {
        let factors = derive_quotient_factors(QuotientCase::Case2a { l: 2 }).unwrap();
        let get = |name: &str| {
            factors
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, p)| p.clone())
                .unwrap()
        };
        // S_a1 = 3v^2 + 10v + 3; S_a2 = v (3v^2 + 10v + 3)
        assert_eq!(get("S_a1"), ipoly(&[3, 10, 3]));
        assert_eq!(get("S_a2"), ipoly(&[0, 3, 10, 3]));
        assert_eq!(hyperelliptic_genus(&get("S_a1")).unwrap(), 0);
        assert_eq!(hyperelliptic_genus(&get("S_a2")).unwrap(), 1);
        // even model 3v^4 + 10v^2 + 3 has genus 1 = l - 1
        assert_eq!(get("S_a_model"), ipoly(&[3, 0, 10, 0, 3]));
        assert_eq!(hyperelliptic_genus(&get("S_a_model")).unwrap(), 1);
    }

    #[test]
    fn paper_substitution_2a() {
        // (x, z) -> ((x-1)/(x+1), z (2/(x+1))^l) carries z^2 = x^2l+x^l+1
        // onto the even model, for l = 2 and l = 3
        for l in [2u32, 3] {
            let factors = derive_quotient_factors(QuotientCase::Case2a { l }).unwrap();
            let sa = factors.iter().find(|(n, _)| n == "S_a").unwrap().1.clone();
            let model = factors
                .iter()
                .find(|(n, _)| n == "S_a_model")
                .unwrap()
                .1
                .clone();
            let phi = RF::new(ipoly(&[-1, 1]), ipoly(&[1, 1])).unwrap();
            let two_over = RF::new(
                UniPoly::constant(Cyclotomic::from_integer(2)),
                ipoly(&[1, 1]),
            )
            .unwrap();
            let map = HyperMap { phi, psi: two_over.pow(l as i64) };
            assert!(check_hyper_map(&sa, &map, &model).unwrap(), "l = {l}");
            let inv = invert_hyper_map(&map).unwrap();
            assert!(check_hyper_map(&model, &inv, &sa).unwrap());
        }
    }

    #[test]
    fn case1_and_2b_factor_polys() {
        let f1 = derive_quotient_factors(QuotientCase::Case1 { q: 3 }).unwrap();
        assert_eq!(f1.iter().find(|(n, _)| n == "S_b").unwrap().1, ipoly(&[-1, 0, 0, 1]));
        let f2 = derive_quotient_factors(QuotientCase::Case2b { l: 2 }).unwrap();
        let sa2 = f2.iter().find(|(n, _)| n == "S_a2").unwrap().1.clone();
        assert_eq!(sa2, ipoly(&[0, -1, 0, 0, 0, 1])); // v(v^4 - 1)
        assert_eq!(hyperelliptic_genus(&sa2).unwrap(), 2);
        assert!(derive_quotient_factors(QuotientCase::Case1 { q: 4 }).is_err());
    }
}
