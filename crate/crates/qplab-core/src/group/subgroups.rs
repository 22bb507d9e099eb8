//! Subgroup lattice enumeration by iterated one-generator extensions.

use std::collections::HashSet;

use super::{FiniteGroup, GroupError, SubgroupHandle};

impl FiniteGroup {
    /// Every subgroup, canonically ordered by (order, element list).
    pub fn all_subgroups(&self) -> Result<Vec<SubgroupHandle>, GroupError> {
        if self.order() > super::MAX_ORDER {
            return Err(GroupError::OrderTooLarge(self.order()));
        }
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let trivial = self.trivial_subgroup();
        seen.insert(trivial.elements.clone());
        let mut queue = vec![trivial];
        let mut out = Vec::new();
        while let Some(h) = queue.pop() {
            for g in 0..self.order() as u32 {
                if h.contains(g) {
                    continue;
                }
                let mut gens = h.generators.clone();
                gens.push(g);
                let k = self.subgroup_generated(&gens);
                if seen.insert(k.elements.clone()) {
                    queue.push(k);
                }
            }
            out.push(h);
        }
        out.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        Ok(out)
    }

    /// Subgroups grouped into conjugacy classes; classes ordered by their
    /// canonical representative, members sorted.
    pub fn subgroup_conjugacy_classes(&self) -> Result<Vec<Vec<SubgroupHandle>>, GroupError> {
        let all = self.all_subgroups()?;
        let mut used: HashSet<Vec<u32>> = HashSet::new();
        let mut classes = Vec::new();
        for h in &all {
            if used.contains(&h.elements) {
                continue;
            }
            let mut orbit = Vec::new();
            for x in 0..self.order() as u32 {
                let conj: Vec<u32> = h.elements.iter().map(|&g| self.conj(g, x)).collect();
                let handle = self.subgroup_from_elements(conj);
                if used.insert(handle.elements.clone()) {
                    orbit.push(handle);
                }
            }
            orbit.sort();
            classes.push(orbit);
        }
        Ok(classes)
    }
}
