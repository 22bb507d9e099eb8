//! Group-algebra elements with cyclotomic coefficients; the averaging
//! idempotent p_H, the central idempotents e_i of the rational families,
//! and the products f_H^i = p_H e_i.

use crate::algebra::rational::{rat, Rational};
use crate::algebra::Cyclotomic;
use crate::group::{FiniteGroup, SubgroupHandle};

use super::{CharacterTable, RationalIrrepFamily};

#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgebraElement {
    /// One coefficient per group element.
    pub coeffs: Vec<Cyclotomic>,
}

impl GroupAlgebraElement {
    pub fn zero(group: &FiniteGroup) -> Self {
        GroupAlgebraElement { coeffs: vec![Cyclotomic::zero(); group.order()] }
    }

    pub fn one(group: &FiniteGroup) -> Self {
        let mut e = Self::zero(group);
        e.coeffs[group.identity() as usize] = Cyclotomic::one();
        e
    }

    pub fn add(&self, rhs: &Self) -> Self {
        GroupAlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// Convolution product in the group algebra.
    pub fn mul(&self, rhs: &Self, group: &FiniteGroup) -> Self {
        let mut out = Self::zero(group);
        for (h, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let g = group.mul(h as u32, k as u32) as usize;
                out.coeffs[g] = out.coeffs[g].add(&a.mul(b));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclotomic::is_zero)
    }

    pub fn all_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_rational().is_some())
    }
}

/// p_H = (1/|H|) sum over h in H.
pub fn averaging_idempotent(group: &FiniteGroup, h: &SubgroupHandle) -> GroupAlgebraElement {
    let mut e = GroupAlgebraElement::zero(group);
    let w = Cyclotomic::from_rational(rat(1, h.order() as i64));
    for &x in &h.elements {
        e.coeffs[x as usize] = w.clone();
    }
    e
}

/// Central idempotent of a rational family: the Galois-orbit sum of the
/// complex idempotents (deg chi / |G|) sum over g of chi(g^-1) g; the
/// orbit sum has rational coefficients.
pub fn family_idempotent(
    tbl: &CharacterTable,
    family: &RationalIrrepFamily,
) -> GroupAlgebraElement {
    let group = &tbl.group;
    let n = group.order() as i64;
    let mut e = GroupAlgebraElement::zero(group);
    for &row in &family.orbit {
        let deg = tbl.degree(row) as i64;
        let w = Rational::new(deg.into(), n.into());
        for g in 0..group.order() as u32 {
            let chi_inv = tbl.value_at_element(row, group.inv(g));
            let term = chi_inv.scale(&w);
            e.coeffs[g as usize] = e.coeffs[g as usize].add(&term);
        }
    }
    e
}

#[derive(Clone, Debug)]
pub struct IdempotentSystem {
    pub p_h: GroupAlgebraElement,
    pub family_idempotents: Vec<GroupAlgebraElement>,
    pub f_h: Vec<GroupAlgebraElement>,
}

/// p_H, the family idempotents e_i, and f_H^i = p_H e_i.
pub fn idempotents(
    tbl: &CharacterTable,
    families: &[RationalIrrepFamily],
    h: &SubgroupHandle,
) -> IdempotentSystem {
    let group = &tbl.group;
    let p_h = averaging_idempotent(group, h);
    let eis: Vec<GroupAlgebraElement> = families
        .iter()
        .map(|f| family_idempotent(tbl, f))
        .collect();
    let f_h = eis.iter().map(|e| p_h.mul(e, group)).collect();
    IdempotentSystem { p_h, family_idempotents: eis, f_h }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_semidirect, SemidirectAction};
    use crate::repr::{character_table, rational_irreps};

    #[test]
    fn trivial_subgroup_gives_identity() {
        let g = build_semidirect(6, SemidirectAction::II).unwrap();
        let ph = averaging_idempotent(&g, &g.trivial_subgroup());
        assert_eq!(ph, GroupAlgebraElement::one(&g));
    }

    #[test]
    fn family_idempotents_m6() {
        let g = build_semidirect(6, SemidirectAction::II).unwrap();
        let tbl = character_table(&g).unwrap();
        let fams = rational_irreps(&tbl);
        let h = g.subgroup_generated(&[g.distinguished("a").unwrap()]);
        let sys = idempotents(&tbl, &fams, &h);
        // p_H is idempotent
        assert_eq!(sys.p_h.mul(&sys.p_h, &g), sys.p_h);
        // family idempotents: rational, orthogonal, summing to 1
        let mut total = GroupAlgebraElement::zero(&g);
        for (i, ei) in sys.family_idempotents.iter().enumerate() {
            assert!(ei.all_rational(), "family {i} idempotent not rational");
            assert_eq!(ei.mul(ei, &g), *ei, "e_{i} not idempotent");
            total = total.add(ei);
            for (j, ej) in sys.family_idempotents.iter().enumerate() {
                if i != j {
                    assert!(ei.mul(ej, &g).is_zero(), "e_{i} e_{j} != 0");
                }
            }
        }
        assert_eq!(total, GroupAlgebraElement::one(&g));
        // p_G e_trivial = p_G
        let pg = averaging_idempotent(&g, &g.full_subgroup());
        let triv = fams
            .iter()
            .position(|f| {
                f.orbit.len() == 1
                    && (0..g.order() as u32)
                        .all(|x| tbl.value_at_element(f.orbit[0], x).is_one())
            })
            .unwrap();
        assert_eq!(pg.mul(&sys.family_idempotents[triv], &g), pg);
        // f_H^i = p_H e_i is idempotent
        for f in &sys.f_h {
            assert_eq!(f.mul(f, &g), *f);
        }
    }
}
