//! Concrete finite groups as validated Cayley tables.
//!
//! Elements are dense indices into the multiplication table; every group
//! built here has order at most [`MAX_ORDER`]. Construction checks the
//! Latin-square property, associativity, identity and inverses, so the
//! rest of the crate can rely on the table blindly.

mod construct;
mod morphisms;
mod subgroups;

pub use construct::{
    build_semidirect, cyclic, dihedral, direct_product, klein, symmetric4, SemidirectAction,
};
pub use morphisms::{automorphism_group, is_isomorphic, minimal_generating_tuple};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const MAX_ORDER: usize = 200;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is not a Latin square")]
    NotLatinSquare,
    #[error("multiplication table is not associative")]
    NotAssociative,
    #[error("table has no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("action {action:?} is incompatible with m = {m}")]
    IncompatibleAction { action: SemidirectAction, m: u32 },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group order {0} exceeds the supported bound {MAX_ORDER}")]
    OrderTooLarge(usize),
}

#[derive(Clone, Serialize, Deserialize)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major: table[x * order + y] = x * y.
    table: Vec<u32>,
    identity: u32,
    inverse: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    names: Option<Vec<String>>,
    #[serde(default)]
    distinguished: BTreeMap<String, u32>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order)
    }
}

/// Subgroup of a specific parent group: a sorted element set. Identity,
/// ordering and hashing go by the element set alone; the generator list
/// is bookkeeping.
#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    pub elements: Vec<u32>,
    pub generators: Vec<u32>,
}

impl PartialEq for SubgroupHandle {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for SubgroupHandle {}

impl PartialOrd for SubgroupHandle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubgroupHandle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elements.cmp(&other.elements)
    }
}

impl std::hash::Hash for SubgroupHandle {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl SubgroupHandle {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: u32) -> bool {
        self.elements.binary_search(&g).is_ok()
    }
}

/// Homomorphism between two concrete groups, stored as the image of every
/// domain element; multiplicativity is checked exhaustively on creation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub domain_order: usize,
    pub codomain_order: usize,
    pub images: Vec<u32>,
}

impl GroupHom {
    pub fn new(domain: &FiniteGroup, codomain: &FiniteGroup, images: Vec<u32>) -> Option<Self> {
        if images.len() != domain.order() {
            return None;
        }
        for x in 0..domain.order() as u32 {
            for y in 0..domain.order() as u32 {
                let lhs = images[domain.mul(x, y) as usize];
                let rhs = codomain.mul(images[x as usize], images[y as usize]);
                if lhs != rhs {
                    return None;
                }
            }
        }
        Some(GroupHom {
            domain_order: domain.order(),
            codomain_order: codomain.order(),
            images,
        })
    }

    pub fn apply(&self, g: u32) -> u32 {
        self.images[g as usize]
    }

    pub fn is_bijective(&self) -> bool {
        if self.domain_order != self.codomain_order {
            return false;
        }
        let mut seen = vec![false; self.codomain_order];
        for &i in &self.images {
            if seen[i as usize] {
                return false;
            }
            seen[i as usize] = true;
        }
        true
    }

    pub fn kernel(&self, domain: &FiniteGroup, codomain: &FiniteGroup) -> SubgroupHandle {
        let elems: Vec<u32> = (0..self.domain_order as u32)
            .filter(|&g| self.images[g as usize] == codomain.identity())
            .collect();
        domain.subgroup_from_elements(elems)
    }
}

impl FiniteGroup {
    pub fn from_table(
        table: Vec<u32>,
        names: Option<Vec<String>>,
        distinguished: BTreeMap<String, u32>,
    ) -> Result<Self, GroupError> {
        let order = (table.len() as f64).sqrt() as usize;
        if order * order != table.len() || order == 0 {
            return Err(GroupError::NotLatinSquare);
        }
        if order > MAX_ORDER {
            return Err(GroupError::OrderTooLarge(order));
        }
        // Latin square
        for i in 0..order {
            let mut row = vec![false; order];
            let mut col = vec![false; order];
            for j in 0..order {
                let r = table[i * order + j] as usize;
                let c = table[j * order + i] as usize;
                if r >= order || c >= order || row[r] || col[c] {
                    return Err(GroupError::NotLatinSquare);
                }
                row[r] = true;
                col[c] = true;
            }
        }
        // identity
        let identity = (0..order)
            .find(|&e| {
                (0..order).all(|x| {
                    table[e * order + x] == x as u32 && table[x * order + e] == x as u32
                })
            })
            .ok_or(GroupError::NoIdentity)? as u32;
        // associativity
        for x in 0..order {
            for y in 0..order {
                let xy = table[x * order + y] as usize;
                for z in 0..order {
                    let yz = table[y * order + z] as usize;
                    if table[xy * order + z] != table[x * order + yz] {
                        return Err(GroupError::NotAssociative);
                    }
                }
            }
        }
        // inverses
        let mut inverse = vec![0u32; order];
        for x in 0..order {
            let inv = (0..order)
                .find(|&y| table[x * order + y] == identity)
                .ok_or(GroupError::NoInverse(x))?;
            inverse[x] = inv as u32;
        }
        Ok(FiniteGroup { order, table, identity, inverse, names, distinguished })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.table[x as usize * self.order + y as usize]
    }

    pub fn inv(&self, x: u32) -> u32 {
        self.inverse[x as usize]
    }

    /// by * g * by^-1.
    pub fn conj(&self, g: u32, by: u32) -> u32 {
        self.mul(self.mul(by, g), self.inv(by))
    }

    /// [x, y] = x y x^-1 y^-1.
    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    pub fn pow(&self, g: u32, e: i64) -> u32 {
        let mut base = if e < 0 { self.inv(g) } else { g };
        let mut e = e.unsigned_abs();
        let mut acc = self.identity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: u32) -> u32 {
        let mut acc = g;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u32 {
        (0..self.order as u32)
            .map(|g| self.element_order(g))
            .fold(1u32, num_integer::lcm)
    }

    pub fn elements_of_order(&self, k: u32) -> Vec<u32> {
        (0..self.order as u32)
            .filter(|&g| self.element_order(g) == k)
            .collect()
    }

    pub fn element_orders_multiset(&self) -> Vec<u32> {
        let mut v: Vec<u32> = (0..self.order as u32).map(|g| self.element_order(g)).collect();
        v.sort_unstable();
        v
    }

    pub fn distinguished(&self, name: &str) -> Option<u32> {
        self.distinguished.get(name).copied()
    }

    pub fn distinguished_map(&self) -> &BTreeMap<String, u32> {
        &self.distinguished
    }

    pub fn set_distinguished(&mut self, name: &str, g: u32) {
        self.distinguished.insert(name.to_string(), g);
    }

    pub fn name_of(&self, g: u32) -> String {
        match &self.names {
            Some(ns) => ns[g as usize].clone(),
            None => format!("g{g}"),
        }
    }

    /// Conjugacy classes in canonical order: by (element order, class
    /// size, minimal member); each class is sorted.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for g in 0..self.order as u32 {
            if seen[g as usize] {
                continue;
            }
            let mut class: Vec<u32> = (0..self.order as u32)
                .map(|x| self.conj(g, x))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &h in &class {
                seen[h as usize] = true;
            }
            classes.push(class);
        }
        classes.sort_by_key(|c| (self.element_order(c[0]), c.len(), c[0]));
        classes
    }

    /// element -> class index, for a class list from `conjugacy_classes`.
    pub fn class_index_map(&self, classes: &[Vec<u32>]) -> Vec<usize> {
        let mut map = vec![0usize; self.order];
        for (i, c) in classes.iter().enumerate() {
            for &g in c {
                map[g as usize] = i;
            }
        }
        map
    }

    pub fn center(&self) -> SubgroupHandle {
        let elems: Vec<u32> = (0..self.order as u32)
            .filter(|&z| (0..self.order as u32).all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect();
        self.subgroup_from_elements(elems)
    }

    pub fn subgroup_from_elements(&self, mut elements: Vec<u32>) -> SubgroupHandle {
        elements.sort_unstable();
        elements.dedup();
        debug_assert!(
            self.order % elements.len() == 0,
            "element set size must divide the group order"
        );
        SubgroupHandle { generators: elements.clone(), elements }
    }

    /// Closure of a generating set.
    pub fn subgroup_generated(&self, gens: &[u32]) -> SubgroupHandle {
        let mut in_set = vec![false; self.order];
        in_set[self.identity as usize] = true;
        let mut elems = vec![self.identity];
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                for y in [self.mul(x, g), self.mul(g, x)] {
                    if !in_set[y as usize] {
                        in_set[y as usize] = true;
                        elems.push(y);
                        frontier.push(y);
                    }
                }
            }
        }
        elems.sort_unstable();
        debug_assert!(self.order % elems.len() == 0);
        SubgroupHandle { elements: elems, generators: gens.to_vec() }
    }

    pub fn generates(&self, gens: &[u32]) -> bool {
        self.subgroup_generated(gens).order() == self.order
    }

    pub fn trivial_subgroup(&self) -> SubgroupHandle {
        SubgroupHandle { elements: vec![self.identity], generators: vec![] }
    }

    pub fn full_subgroup(&self) -> SubgroupHandle {
        self.subgroup_from_elements((0..self.order as u32).collect())
    }

    pub fn is_normal(&self, h: &SubgroupHandle) -> bool {
        (0..self.order as u32).all(|x| h.elements.iter().all(|&g| h.contains(self.conj(g, x))))
    }

    pub fn centralizer(&self, elems: &[u32]) -> SubgroupHandle {
        let out: Vec<u32> = (0..self.order as u32)
            .filter(|&x| elems.iter().all(|&g| self.mul(x, g) == self.mul(g, x)))
            .collect();
        self.subgroup_from_elements(out)
    }

    pub fn normalizer(&self, h: &SubgroupHandle) -> SubgroupHandle {
        let out: Vec<u32> = (0..self.order as u32)
            .filter(|&x| h.elements.iter().all(|&g| h.contains(self.conj(g, x))))
            .collect();
        self.subgroup_from_elements(out)
    }

    /// Set product H*K; a subgroup exactly when HK = KH.
    pub fn set_product(&self, h: &SubgroupHandle, k: &SubgroupHandle) -> Vec<u32> {
        let mut out: Vec<u32> = h
            .elements
            .iter()
            .flat_map(|&a| k.elements.iter().map(move |b| (a, *b)))
            .map(|(a, b)| self.mul(a, b))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Quotient by a normal subgroup, with the projection homomorphism.
    pub fn quotient_group(
        &self,
        n: &SubgroupHandle,
    ) -> Result<(FiniteGroup, GroupHom), GroupError> {
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let mut coset_min = vec![u32::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order as u32 {
            if coset_min[g as usize] != u32::MAX {
                continue;
            }
            let mut coset: Vec<u32> = n.elements.iter().map(|&h| self.mul(g, h)).collect();
            coset.sort_unstable();
            let min = coset[0];
            for &x in &coset {
                coset_min[x as usize] = min;
            }
            reps.push(min);
        }
        reps.sort_unstable();
        let index_of = |rep: u32| reps.binary_search(&rep).unwrap() as u32;
        let k = reps.len();
        let mut table = vec![0u32; k * k];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * k + j] = index_of(coset_min[self.mul(a, b) as usize]);
            }
        }
        let quotient = FiniteGroup::from_table(table, None, BTreeMap::new())?;
        let images: Vec<u32> = (0..self.order as u32)
            .map(|g| index_of(coset_min[g as usize]))
            .collect();
        let hom = GroupHom::new(self, &quotient, images).expect("projection is a homomorphism");
        Ok((quotient, hom))
    }

    /// The subgroup as a standalone group; element i is h.elements[i].
    pub fn subgroup_as_group(&self, h: &SubgroupHandle) -> FiniteGroup {
        let index_of = |x: u32| h.elements.binary_search(&x).unwrap() as u32;
        let n = h.order();
        let mut table = vec![0u32; n * n];
        for (i, &x) in h.elements.iter().enumerate() {
            for (j, &y) in h.elements.iter().enumerate() {
                table[i * n + j] = index_of(self.mul(x, y));
            }
        }
        FiniteGroup::from_table(table, None, BTreeMap::new())
            .expect("a subgroup closure is a valid group")
    }

    /// Left cosets gH, each sorted, ordered by minimal element.
    pub fn left_cosets(&self, h: &SubgroupHandle) -> Vec<Vec<u32>> {
        let mut assigned = vec![false; self.order];
        let mut cosets = Vec::new();
        for g in 0..self.order as u32 {
            if assigned[g as usize] {
                continue;
            }
            let mut coset: Vec<u32> = h.elements.iter().map(|&x| self.mul(g, x)).collect();
            coset.sort_unstable();
            for &x in &coset {
                assigned[x as usize] = true;
            }
            cosets.push(coset);
        }
        cosets.sort();
        cosets
    }

    /// Permutation induced by g on the left cosets.
    pub fn coset_action(&self, g: u32, cosets: &[Vec<u32>]) -> Vec<usize> {
        let mut coset_of = vec![0usize; self.order];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                coset_of[x as usize] = i;
            }
        }
        cosets
            .iter()
            .map(|c| coset_of[self.mul(g, c[0]) as usize])
            .collect()
    }
}

pub fn cycle_count(perm: &[usize]) -> usize {
    cycle_lengths(perm).len()
}

pub fn cycle_lengths(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    lengths
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_order_one() {
        let g = cyclic(7);
        assert_eq!(g.element_order(g.identity()), 1);
    }

    #[test]
    fn quotient_by_klein_factor_is_cyclic() {
        let g = build_semidirect(6, SemidirectAction::II).unwrap();
        let ab = g.subgroup_generated(&[
            g.distinguished("a").unwrap(),
            g.distinguished("b").unwrap(),
        ]);
        assert!(g.is_normal(&ab));
        let (q, _) = g.quotient_group(&ab).unwrap();
        assert_eq!(q.order(), 6);
        assert!(is_isomorphic(&q, &cyclic(6)).is_some());
    }

    #[test]
    fn semidirect_klein_factor_is_normal() {
        for (m, action) in [(6, SemidirectAction::II), (8, SemidirectAction::I)] {
            let g = build_semidirect(m, action).unwrap();
            let ab = g.subgroup_generated(&[
                g.distinguished("a").unwrap(),
                g.distinguished("b").unwrap(),
            ]);
            assert_eq!(ab.order(), 4);
            assert!(g.is_normal(&ab));
        }
    }

    #[test]
    fn conjugacy_classes_m6_case_ii() {
        let g = build_semidirect(6, SemidirectAction::II).unwrap();
        let classes = g.conjugacy_classes();
        assert_eq!(classes.len(), 8);
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 3, 3, 4, 4, 4, 4]);
    }

    #[test]
    fn quotient_of_nonnormal_rejected() {
        let g = symmetric4();
        let h = g.subgroup_generated(&[g.elements_of_order(2)[0]]);
        if !g.is_normal(&h) {
            assert_eq!(g.quotient_group(&h).unwrap_err(), GroupError::NotNormal);
        }
    }

    #[test]
    fn centralizer_inside_normalizer() {
        let g = symmetric4();
        let h = g.subgroup_generated(&[g.elements_of_order(4)[0]]);
        let n = g.normalizer(&h);
        let c = g.centralizer(&h.elements);
        assert!(c.elements.iter().all(|x| n.contains(*x)));
        assert_eq!(n.order() % h.order(), 0);
    }
}
