//! Riemann–Hurwitz bookkeeping on coset actions.

use super::{CoveringError, GeneratingVector, Signature};
use crate::group::{cycle_lengths, FiniteGroup, SubgroupHandle};

/// Genus from 2g - 2 = order * (2*gamma - 2 + sum(1 - 1/n_i)).
pub fn genus_from_rh(order: u64, sig: &Signature) -> Result<u64, CoveringError> {
    // chi = 2 - 2*gamma - sum(1 - 1/n); 2 - 2g = order * chi
    let mut num: i128 = 2 - 2 * sig.genus as i128;
    let mut den: i128 = 1;
    for &n in &sig.periods {
        num = num * n as i128 - den * (n as i128 - 1);
        den *= n as i128;
    }
    let total_num = order as i128 * num; // (2 - 2g) * den
    if total_num % den != 0 {
        return Err(CoveringError::NonIntegralGenus);
    }
    let two_minus_2g = total_num / den;
    if two_minus_2g % 2 != 0 || two_minus_2g > 2 {
        return Err(CoveringError::NonIntegralGenus);
    }
    Ok(((2 - two_minus_2g) / 2) as u64)
}

/// Genus and induced signature of S/H for the action encoded by the
/// generating vector: the cover S/H -> S/G = P^1 has one point per cycle
/// of g_i on the cosets G/H, ramified with index the cycle length.
pub fn quotient_genus(
    group: &FiniteGroup,
    v: &GeneratingVector,
    h: &SubgroupHandle,
) -> (u64, Signature) {
    let cosets = group.left_cosets(h);
    let d = cosets.len() as i64;
    let mut branch_excess: i64 = 0;
    let mut periods: Vec<u32> = Vec::new();
    for &g in &v.entries {
        let n = group.element_order(g);
        let perm = group.coset_action(g, &cosets);
        let lengths = cycle_lengths(&perm);
        branch_excess += d - lengths.len() as i64;
        for len in lengths {
            let period = n / len as u32;
            if period > 1 {
                periods.push(period);
            }
        }
    }
    // 2g - 2 = -2d + sum over ramification points (e - 1)
    let two_g = 2 - 2 * d + branch_excess;
    assert!(two_g % 2 == 0 && two_g >= 0, "RH parity violated");
    ((two_g / 2) as u64, Signature::new((two_g / 2) as u32, periods))
}

/// Number of fixed points of a nontrivial automorphism h on the surface:
/// sum over branch points of #{cosets x<g_i> with x^-1 h x in <g_i>}.
pub fn fixed_point_count(
    group: &FiniteGroup,
    v: &GeneratingVector,
    h: u32,
) -> Result<u64, CoveringError> {
    if h == group.identity() {
        return Err(CoveringError::IdentityElement);
    }
    let mut total = 0u64;
    for &g in &v.entries {
        let cyc = group.subgroup_generated(&[g]);
        let n = cyc.order() as u64;
        let count = (0..group.order() as u32)
            .filter(|&x| cyc.contains(group.mul(group.mul(group.inv(x), h), x)))
            .count() as u64;
        debug_assert!(count % n == 0);
        total += count / n;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_semidirect, FiniteGroup, SemidirectAction};

    fn case2a_vector(m: u32) -> (FiniteGroup, GeneratingVector) {
        let g = build_semidirect(m, SemidirectAction::II).unwrap();
        let a = g.distinguished("a").unwrap();
        let t = g.distinguished("t").unwrap();
        let v = GeneratingVector::new(&g, vec![a, t, g.inv(g.mul(a, t))]).unwrap();
        (g, v)
    }

    fn case2b_vector(m: u32) -> (FiniteGroup, GeneratingVector) {
        let g = build_semidirect(m, SemidirectAction::I).unwrap();
        let b = g.distinguished("b").unwrap();
        let t = g.distinguished("t").unwrap();
        let v = GeneratingVector::new(&g, vec![b, t, g.inv(g.mul(b, t))]).unwrap();
        (g, v)
    }

    #[test]
    fn rh_examples() {
        assert_eq!(genus_from_rh(24, &Signature::new(0, vec![2, 6, 6])).unwrap(), 3);
        assert_eq!(genus_from_rh(24, &Signature::new(0, vec![2, 6, 12])).unwrap(), 4);
        // degree-1 cover: genus is the orbifold genus, no periods allowed
        assert_eq!(genus_from_rh(1, &Signature::new(5, vec![])).unwrap(), 5);
        // inconsistent input
        assert!(genus_from_rh(5, &Signature::new(0, vec![2, 6, 6])).is_err());
    }

    #[test]
    fn quotient_genus_examples() {
        let (g, v) = case2a_vector(6);
        let a = g.distinguished("a").unwrap();
        let (genus_a, _) = quotient_genus(&g, &v, &g.subgroup_generated(&[a]));
        assert_eq!(genus_a, 1);
        // the full group gives the base P^1
        assert_eq!(quotient_genus(&g, &v, &g.full_subgroup()).0, 0);
        // the trivial subgroup gives the surface itself: g = m - 3
        assert_eq!(quotient_genus(&g, &v, &g.trivial_subgroup()).0, 3);
        let (g, v) = case2b_vector(8);
        let a = g.distinguished("a").unwrap();
        assert_eq!(quotient_genus(&g, &v, &g.subgroup_generated(&[a])).0, 3); // 2l - 1
        assert_eq!(quotient_genus(&g, &v, &g.trivial_subgroup()).0, 5);
    }

    #[test]
    fn quotient_matches_rh_on_trivial_subgroup() {
        for (m, action) in [(6, SemidirectAction::II), (9, SemidirectAction::II), (8, SemidirectAction::I)] {
            let g = build_semidirect(m, action).unwrap();
            let (gr, v) = if action == SemidirectAction::II {
                case2a_vector(m)
            } else {
                case2b_vector(m)
            };
            drop(g);
            let direct = quotient_genus(&gr, &v, &gr.trivial_subgroup()).0;
            let rh = genus_from_rh(gr.order() as u64, &v.signature).unwrap();
            assert_eq!(direct, rh);
        }
    }

    #[test]
    fn degree_bookkeeping_over_cosets() {
        // cycle lengths over G/H sum to [G:H] at each branch point
        let (g, v) = case2a_vector(9);
        for h in [
            g.subgroup_generated(&[g.distinguished("a").unwrap()]),
            g.subgroup_generated(&[g.distinguished("t").unwrap()]),
        ] {
            let cosets = g.left_cosets(&h);
            for &e in &v.entries {
                let lens = crate::group::cycle_lengths(&g.coset_action(e, &cosets));
                assert_eq!(lens.iter().sum::<usize>(), cosets.len());
            }
        }
    }

    #[test]
    fn fixed_points_case2b() {
        // the two involutions with fixed points are b and ab (m each);
        // their product a = [t, b] is central and acts freely
        for m in [8u32, 16] {
            let (g, v) = case2b_vector(m);
            let a = g.distinguished("a").unwrap();
            let b = g.distinguished("b").unwrap();
            let ab = g.distinguished("ab").unwrap();
            assert_eq!(fixed_point_count(&g, &v, b).unwrap(), m as u64);
            assert_eq!(fixed_point_count(&g, &v, ab).unwrap(), m as u64);
            assert_eq!(fixed_point_count(&g, &v, a).unwrap(), 0);
        }
    }

    #[test]
    fn fixed_points_case2a() {
        for m in [6u32, 9, 12] {
            let (g, v) = case2a_vector(m);
            for name in ["a", "b", "ab"] {
                let h = g.distinguished(name).unwrap();
                assert_eq!(
                    fixed_point_count(&g, &v, h).unwrap(),
                    (2 * m / 3) as u64,
                    "m={m} {name}"
                );
            }
        }
    }

    #[test]
    fn rh_cross_check_via_fixed_points() {
        // 2 g_S - 2 = |H| (2 g_(S/H) - 2) + sum over h != 1 of Fix(h)
        let (g, v) = case2a_vector(6);
        for h in [
            g.subgroup_generated(&[g.distinguished("a").unwrap()]),
            g.subgroup_generated(&[
                g.distinguished("a").unwrap(),
                g.distinguished("b").unwrap(),
            ]),
        ] {
            let gs = quotient_genus(&g, &v, &g.trivial_subgroup()).0 as i64;
            let gq = quotient_genus(&g, &v, &h).0 as i64;
            let fix_sum: u64 = h
                .elements
                .iter()
                .filter(|&&x| x != g.identity())
                .map(|&x| fixed_point_count(&g, &v, x).unwrap())
                .sum();
            assert_eq!(2 * gs - 2, h.order() as i64 * (2 * gq - 2) + fix_sum as i64);
        }
    }

    #[test]
    fn identity_rejected() {
        let (g, v) = case2a_vector(6);
        assert!(matches!(
            fixed_point_count(&g, &v, g.identity()),
            Err(CoveringError::IdentityElement)
        ));
    }
}
