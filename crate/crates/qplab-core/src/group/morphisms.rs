//! Automorphism groups and isomorphism testing by generator-image
//! backtracking with invariant pruning.

use super::{FiniteGroup, GroupError, GroupHom};

/// Smallest generating tuple in lexicographic order; tries sizes 1, 2, 3.
pub fn minimal_generating_tuple(g: &FiniteGroup) -> Vec<u32> {
    let n = g.order() as u32;
    if g.order() == 1 {
        return vec![];
    }
    for x in 0..n {
        if g.generates(&[x]) {
            return vec![x];
        }
    }
    for x in 0..n {
        for y in (x + 1)..n {
            if g.generates(&[x, y]) {
                return vec![x, y];
            }
        }
    }
    for x in 0..n {
        for y in (x + 1)..n {
            for z in (y + 1)..n {
                if g.generates(&[x, y, z]) {
                    return vec![x, y, z];
                }
            }
        }
    }
    panic!("group of order {} needs more than 3 generators", g.order());
}

/// Signature used to prune candidate generator images: the image of g must
/// have the same order and lie in a class of the same size.
fn invariant(g: &FiniteGroup, classes: &[Vec<u32>], class_of: &[usize], x: u32) -> (u32, usize) {
    (g.element_order(x), classes[class_of[x as usize]].len())
}

/// Extends gen -> image to the whole group by closing products, returning
/// the image array or None if the assignment is inconsistent.
fn extend_hom(
    dom: &FiniteGroup,
    cod: &FiniteGroup,
    gens: &[u32],
    imgs: &[u32],
) -> Option<Vec<u32>> {
    let n = dom.order();
    let mut image = vec![u32::MAX; n];
    image[dom.identity() as usize] = cod.identity();
    let mut frontier = vec![dom.identity()];
    while let Some(x) = frontier.pop() {
        for (&g, &ig) in gens.iter().zip(imgs.iter()) {
            let y = dom.mul(x, g);
            let iy = cod.mul(image[x as usize], ig);
            if image[y as usize] == u32::MAX {
                image[y as usize] = iy;
                frontier.push(y);
            } else if image[y as usize] != iy {
                return None;
            }
        }
    }
    if image.iter().any(|&v| v == u32::MAX) {
        return None; // gens do not generate
    }
    // full multiplicativity check
    for x in 0..n as u32 {
        for y in 0..n as u32 {
            if image[dom.mul(x, y) as usize] != cod.mul(image[x as usize], image[y as usize]) {
                return None;
            }
        }
    }
    Some(image)
}

fn image_candidates(
    dom: &FiniteGroup,
    cod: &FiniteGroup,
    gens: &[u32],
) -> Vec<Vec<u32>> {
    let dom_classes = dom.conjugacy_classes();
    let dom_class_of = dom.class_index_map(&dom_classes);
    let cod_classes = cod.conjugacy_classes();
    let cod_class_of = cod.class_index_map(&cod_classes);
    gens.iter()
        .map(|&g| {
            let inv = invariant(dom, &dom_classes, &dom_class_of, g);
            (0..cod.order() as u32)
                .filter(|&x| invariant(cod, &cod_classes, &cod_class_of, x) == inv)
                .collect()
        })
        .collect()
}

fn search_homs(
    dom: &FiniteGroup,
    cod: &FiniteGroup,
    bijective_only: bool,
    first_only: bool,
) -> Vec<GroupHom> {
    let gens = minimal_generating_tuple(dom);
    if gens.is_empty() {
        let images = vec![cod.identity(); 1];
        return GroupHom::new(dom, cod, images).into_iter().collect();
    }
    let candidates = image_candidates(dom, cod, &gens);
    let mut found = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    search_rec(dom, cod, &gens, &candidates, &mut stack, bijective_only, first_only, &mut found);
    found
}

#[allow(clippy::too_many_arguments)]
fn search_rec(
    dom: &FiniteGroup,
    cod: &FiniteGroup,
    gens: &[u32],
    candidates: &[Vec<u32>],
    stack: &mut Vec<u32>,
    bijective_only: bool,
    first_only: bool,
    found: &mut Vec<GroupHom>,
) {
    if first_only && !found.is_empty() {
        return;
    }
    let depth = stack.len();
    if depth == gens.len() {
        if let Some(image) = extend_hom(dom, cod, gens, stack) {
            let hom = GroupHom {
                domain_order: dom.order(),
                codomain_order: cod.order(),
                images: image,
            };
            if !bijective_only || hom.is_bijective() {
                found.push(hom);
            }
        }
        return;
    }
    for &cand in &candidates[depth] {
        stack.push(cand);
        search_rec(dom, cod, gens, candidates, stack, bijective_only, first_only, found);
        stack.pop();
        if first_only && !found.is_empty() {
            return;
        }
    }
}

/// All automorphisms of g.
pub fn automorphism_group(g: &FiniteGroup) -> Result<Vec<GroupHom>, GroupError> {
    if g.order() > super::MAX_ORDER {
        return Err(GroupError::OrderTooLarge(g.order()));
    }
    Ok(search_homs(g, g, true, false))
}

/// An isomorphism g1 -> g2, or None.
pub fn is_isomorphic(g1: &FiniteGroup, g2: &FiniteGroup) -> Option<GroupHom> {
    if g1.order() != g2.order() {
        return None;
    }
    if g1.element_orders_multiset() != g2.element_orders_multiset() {
        return None;
    }
    let c1: Vec<usize> = g1.conjugacy_classes().iter().map(|c| c.len()).collect();
    let c2: Vec<usize> = g2.conjugacy_classes().iter().map(|c| c.len()).collect();
    if c1 != c2 {
        return None;
    }
    search_homs(g1, g2, true, true).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::super::construct::*;
    use super::*;

    #[test]
    fn aut_klein_is_gl2() {
        let auts = automorphism_group(&klein()).unwrap();
        assert_eq!(auts.len(), 6);
    }

    #[test]
    fn aut_cyclic() {
        assert_eq!(automorphism_group(&cyclic(12)).unwrap().len(), 4);
        assert_eq!(automorphism_group(&cyclic(7)).unwrap().len(), 6);
    }

    #[test]
    fn s4_not_isomorphic_to_semidirect_24() {
        let s4 = symmetric4();
        let g = build_semidirect(6, SemidirectAction::II).unwrap();
        assert!(is_isomorphic(&s4, &g).is_none());
        assert!(is_isomorphic(&g, &g).is_some());
    }

    #[test]
    fn semidirect_m6_ii_is_a4_x_c2() {
        // Z2^2 x| Z6 with the order-3 action = A4 x Z2; A4 here is the
        // subgroup generated by a and t^2 inside the semidirect product.
        let g = build_semidirect(6, SemidirectAction::II).unwrap();
        let a4x2 = {
            let g12 = build_semidirect(3, SemidirectAction::II).unwrap(); // A4
            direct_product(&g12, &cyclic(2))
        };
        assert!(is_isomorphic(&g, &a4x2).is_some());
    }
}
