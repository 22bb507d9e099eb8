//! Composition closure of verified automorphisms, relator checking
//! against presentations, and Belyi-map invariance.

use std::collections::BTreeMap;

use super::{pullback_check, CurveError, FfElem, HyperPair, RationalMap};
use crate::algebra::poly::UniPoly;
use crate::algebra::Cyclotomic;
use crate::fpgroup::Presentation;
use crate::group::FiniteGroup;

/// Closure of a named set of self-maps of a curve under composition,
/// together with the concrete group it forms.
#[derive(Clone, Debug)]
pub struct MapGroup {
    pub curve: HyperPair,
    pub elements: Vec<RationalMap>,
    pub group: FiniteGroup,
}

/// Computes the composition closure; every generator must pass the
/// pullback check first. Errors out if the closure exceeds `cap`.
pub fn map_closure(
    curve: &HyperPair,
    named: &[(String, RationalMap)],
    cap: usize,
) -> Result<MapGroup, CurveError> {
    for (name, map) in named {
        if !pullback_check(curve, map, curve)? {
            return Err(CurveError::InvalidCurve(format!(
                "generator '{name}' does not preserve the curve"
            )));
        }
    }
    let mut elements = vec![RationalMap::identity()];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut edges: Vec<Vec<Option<usize>>> = vec![vec![None; named.len()]];
    let mut head = 0;
    while head < elements.len() {
        for k in 0..named.len() {
            if edges[head][k].is_some() {
                continue;
            }
            // elements[head] . gen_k
            let composed = elements[head].compose(&named[k].1, &curve.clone())?;
            let found = elements.iter().position(|e| *e == composed);
            let idx = match found {
                Some(i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(CurveError::ClosureTooLarge(cap));
                    }
                    elements.push(composed);
                    let mut w = words[head].clone();
                    w.push(k);
                    words.push(w);
                    edges.push(vec![None; named.len()]);
                    elements.len() - 1
                }
            };
            edges[head][k] = Some(idx);
        }
        head += 1;
    }
    // Cayley table via the recorded generator words
    let n = elements.len();
    let mut table = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut cur = i;
            for &k in &words[j] {
                cur = edges[cur][k].expect("closure is complete");
            }
            table[i * n + j] = cur as u32;
        }
    }
    let mut distinguished = BTreeMap::new();
    for (k, (name, _)) in named.iter().enumerate() {
        distinguished.insert(name.clone(), edges[0][k].unwrap() as u32);
    }
    let group = FiniteGroup::from_table(table, None, distinguished)
        .map_err(|e| CurveError::InvalidCurve(format!("closure is not a group: {e}")))?;
    Ok(MapGroup { curve: curve.clone(), elements, group })
}

/// Per-relator verdicts for a presentation on named maps; the relators
/// are evaluated in the closure group, which was itself built from exact
/// function-field composition.
pub fn verify_group_relations(
    mg: &MapGroup,
    p: &Presentation,
) -> Result<Vec<(String, bool)>, CurveError> {
    let gens: Vec<u32> = p
        .gen_names
        .iter()
        .map(|name| {
            mg.group
                .distinguished(name)
                .ok_or_else(|| CurveError::UnknownGeneratorName(name.clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = Vec::new();
    for r in &p.relators {
        let mut acc = mg.group.identity();
        for &letter in r {
            let g = gens[(letter.unsigned_abs() - 1) as usize];
            let g = if letter > 0 { g } else { mg.group.inv(g) };
            acc = mg.group.mul(acc, g);
        }
        out.push((p.word_to_string(r), acc == mg.group.identity()));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct BelyiReport {
    /// beta . h = beta for every deck generator h.
    pub deck_invariant: Vec<(String, bool)>,
    /// Names of supplied maps with beta . h != beta (expected for u).
    pub non_deck: Vec<String>,
    /// Branch data: f and g divide x^m - 1, so the y- and z-cover
    /// ramification sits over the m-th roots of unity, which beta = x^m
    /// sends to 1; x = 0 and x = infinity are totally ramified for beta.
    pub branch_values_normalized: bool,
}

impl BelyiReport {
    pub fn pass(&self, expected_non_deck: &[&str]) -> bool {
        self.deck_invariant.iter().all(|(_, ok)| *ok)
            && self.branch_values_normalized
            && expected_non_deck
                .iter()
                .all(|n| self.non_deck.iter().any(|m| m == n))
    }
}

/// Checks beta = x^m invariance for the deck generators, flags the maps
/// that do not fix beta, and verifies the branch normalization.
pub fn verify_belyi(
    curve: &HyperPair,
    named: &[(String, RationalMap)],
    deck_names: &[&str],
    m: u32,
) -> Result<BelyiReport, CurveError> {
    let beta = FfElem::x().pow(m as u64, curve);
    let mut deck_invariant = Vec::new();
    let mut non_deck = Vec::new();
    for (name, map) in named {
        let pulled = map.eval(&beta, curve)?;
        let invariant = pulled == beta;
        if deck_names.contains(&name.as_str()) {
            deck_invariant.push((name.clone(), invariant));
        } else if !invariant {
            non_deck.push(name.clone());
        }
    }
    // x^m - 1 as a polynomial over the curve's field
    let mut xm1 = vec![Cyclotomic::from_integer(-1)];
    xm1.extend(std::iter::repeat(Cyclotomic::zero()).take(m as usize - 1));
    xm1.push(Cyclotomic::one());
    let xm1 = UniPoly::from_coeffs(xm1);
    let branch = curve.f.divides(&xm1) && curve.g.divides(&xm1);
    Ok(BelyiReport {
        deck_invariant,
        non_deck,
        branch_values_normalized: branch,
    })
}
