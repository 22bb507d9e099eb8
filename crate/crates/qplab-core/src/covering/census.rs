//! Enumeration of generating vectors with prescribed signature, with
//! orbit counts under Aut(G) and under Aut(G) plus the braid swap of the
//! two equal-period slots.

use std::collections::HashMap;

use super::{CoveringError, GeneratingVector, Signature};
use crate::group::{automorphism_group, FiniteGroup};

#[derive(Clone, Debug)]
pub struct VectorCensus {
    pub vectors: Vec<GeneratingVector>,
    /// Orbits under simultaneous Aut(G) application (ordered branch points).
    pub aut_orbit_count: usize,
    /// Orbits when vectors may additionally be braided at adjacent
    /// equal-period positions; reported alongside, never substituted.
    pub braid_refined_orbit_count: usize,
}

/// Existence-only check: is some generating vector of this signature
/// type present? Cheaper than the census since no orbit data is built.
pub fn exists_generating_vector(group: &FiniteGroup, sig: &Signature) -> bool {
    assert_eq!(sig.genus, 0);
    assert_eq!(sig.periods.len(), 3, "existence check covers triangles");
    let firsts = group.elements_of_order(sig.periods[0]);
    let seconds = group.elements_of_order(sig.periods[1]);
    for &g1 in &firsts {
        for &g2 in &seconds {
            let g3 = group.inv(group.mul(g1, g2));
            if group.element_order(g3) == sig.periods[2] && group.generates(&[g1, g2]) {
                return true;
            }
        }
    }
    false
}

/// All generating vectors whose entry orders match the signature periods
/// in sorted position order. Supports r up to 4 at order <= 200.
pub fn enumerate_generating_vectors(
    group: &FiniteGroup,
    sig: &Signature,
) -> Result<VectorCensus, CoveringError> {
    assert!(sig.genus == 0, "census only enumerates genus-0 signatures");
    let r = sig.periods.len();
    assert!((2..=4).contains(&r), "signature length must be 2..4");
    let by_order: Vec<Vec<u32>> = sig
        .periods
        .iter()
        .map(|&n| group.elements_of_order(n))
        .collect();
    let mut vectors = Vec::new();
    match r {
        2 => {
            for &g1 in &by_order[0] {
                let g2 = group.inv(g1);
                if group.element_order(g2) == sig.periods[1]
                    && group.generates(&[g1, g2])
                {
                    vectors.push(vec![g1, g2]);
                }
            }
        }
        3 => {
            for &g1 in &by_order[0] {
                for &g2 in &by_order[1] {
                    let g3 = group.inv(group.mul(g1, g2));
                    if group.element_order(g3) == sig.periods[2]
                        && group.generates(&[g1, g2])
                    {
                        vectors.push(vec![g1, g2, g3]);
                    }
                }
            }
        }
        4 => {
            for &g1 in &by_order[0] {
                for &g2 in &by_order[1] {
                    for &g3 in &by_order[2] {
                        let g4 = group.inv(group.mul(group.mul(g1, g2), g3));
                        if group.element_order(g4) == sig.periods[3]
                            && group.generates(&[g1, g2, g3])
                        {
                            vectors.push(vec![g1, g2, g3, g4]);
                        }
                    }
                }
            }
        }
        _ => unreachable!(),
    }

    let auts = automorphism_group(group)
        .map_err(|_| CoveringError::OutOfRange(group.order() as u32))?;

    // canonical form under Aut(G)
    let mut canon: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut orbit_id: Vec<usize> = Vec::with_capacity(vectors.len());
    let mut n_orbits = 0usize;
    for v in &vectors {
        let mut best = v.clone();
        for phi in &auts {
            let img: Vec<u32> = v.iter().map(|&g| phi.apply(g)).collect();
            if img < best {
                best = img;
            }
        }
        let id = *canon.entry(best).or_insert_with(|| {
            n_orbits += 1;
            n_orbits - 1
        });
        orbit_id.push(id);
    }

    // braid moves at adjacent equal-period positions merge orbits
    let mut parent: Vec<usize> = (0..n_orbits).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let index_of: HashMap<Vec<u32>, usize> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    for (i, v) in vectors.iter().enumerate() {
        for k in 0..r - 1 {
            if sig.periods[k] != sig.periods[k + 1] {
                continue;
            }
            // sigma_k: (.., g_k, g_k+1, ..) -> (.., g_k g_k+1 g_k^-1, g_k, ..)
            let mut w = v.clone();
            let gk = w[k];
            w[k] = group.mul(group.mul(gk, w[k + 1]), group.inv(gk));
            w[k + 1] = gk;
            if let Some(&j) = index_of.get(&w) {
                let a = find(&mut parent, orbit_id[i]);
                let b = find(&mut parent, orbit_id[j]);
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut roots: Vec<usize> = (0..n_orbits).map(|x| find(&mut parent, x)).collect();
    roots.sort_unstable();
    roots.dedup();

    let vectors = vectors
        .into_iter()
        .map(|entries| GeneratingVector {
            signature: sig.clone(),
            entries,
        })
        .collect();
    Ok(VectorCensus {
        vectors,
        aut_orbit_count: n_orbits,
        braid_refined_orbit_count: roots.len(),
    })
}
