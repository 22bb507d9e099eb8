//! Verification pipelines behind the CLI commands. Each returns a
//! deterministic [`Report`] whose checks verify the article's claims for
//! the requested parameters; a failed check means the claim did not
//! verify, and the witness says what was actually computed.

use serde_json::json;

use crate::cases::{self, CaseId, TheoremCase};
use crate::covering::{
    enumerate_generating_vectors, exists_generating_vector, fermat_genus, genus_from_rh,
    lemma1_classify, quotient_genus, Signature,
};
use crate::curve::{
    check_hyper_map, derive_quotient_factors, hyperelliptic_genus, invert_hyper_map, map_closure,
    pullback_check, scaling_isomorphism, verify_belyi, verify_fermat_action, verify_group_relations,
    QuotientCase,
};
use crate::descent::derive_descent_system;
use crate::fpgroup::{subgroup_from_homomorphism_chain, todd_coxeter};
use crate::group::{build_semidirect, is_isomorphic, FiniteGroup, SemidirectAction};
use crate::jacobian::{
    carocca_rodriguez_genus, family_multiplicities, jimenez_subgroup_search, kani_rosen_check,
    rojas_dimensions,
};
use crate::report::Report;
use crate::repr::{character_table, rational_irreps};

/// Signatures the classification predicts for (m, action).
pub fn expected_signatures(m: u32, action: SemidirectAction) -> Vec<Signature> {
    let mut out = Vec::new();
    match action {
        SemidirectAction::I => {
            if m % 2 == 0 {
                let q = m / 2;
                if q >= 3 && q % 2 == 1 {
                    out.push(Signature::new(0, vec![2, m, 2 * m]));
                }
                if m % 4 == 0 && m >= 8 {
                    out.push(Signature::new(0, vec![2, m, m]));
                }
            }
        }
        SemidirectAction::II => {
            if m % 3 == 0 && m >= 6 {
                out.push(Signature::new(0, vec![2, m, m]));
            }
        }
    }
    out
}

/// All hyperbolic genus-0 triangle signatures with periods drawn from the
/// element orders of the group.
fn candidate_signatures(group: &FiniteGroup) -> Vec<Signature> {
    let mut orders: Vec<u32> = (2..=group.exponent())
        .filter(|&k| !group.elements_of_order(k).is_empty())
        .collect();
    orders.sort_unstable();
    let mut out = Vec::new();
    for (i, &n1) in orders.iter().enumerate() {
        for (j, &n2) in orders.iter().enumerate().skip(i) {
            for &n3 in orders.iter().skip(j) {
                let sig = Signature::new(0, vec![n1, n2, n3]);
                if sig.is_hyperbolic() {
                    out.push(sig);
                }
            }
        }
    }
    out
}

/// Realizability of the classified signature shapes, with an
/// informational sweep over every other hyperbolic triangle signature
/// (further quotient signatures exist for these groups; they are listed
/// in the witness without failing the check).
pub fn run_signature(m: u32) -> Report {
    let mut report = Report::new(json!({"command": "signature", "m": m}));
    for action in [SemidirectAction::I, SemidirectAction::II] {
        let Ok(group) = build_semidirect(m, action) else {
            continue;
        };
        let expected = expected_signatures(m, action);
        let mut shapes = vec![Signature::new(0, vec![2, m, m])];
        if m % 2 == 0 {
            shapes.push(Signature::new(0, vec![2, m, 2 * m]));
        }
        let mut listed_ok = true;
        let mut details = Vec::new();
        for sig in shapes {
            if !sig.is_hyperbolic() {
                continue;
            }
            let realizable = exists_generating_vector(&group, &sig);
            let predicted = expected.contains(&sig);
            if realizable != predicted {
                listed_ok = false;
            }
            details.push(format!("{sig}: realizable={realizable}, predicted={predicted}"));
        }
        let extras: Vec<String> = candidate_signatures(&group)
            .into_iter()
            .filter(|sig| !expected.contains(sig) && exists_generating_vector(&group, sig))
            .map(|sig| sig.to_string())
            .collect();
        report.record(
            &format!("signatures-action-{action:?}-m{m}"),
            "sec2-proposition",
            listed_ok,
            format!(
                "{}; further realizable signatures outside the stated list: {extras:?}",
                details.join("; ")
            ),
        );
    }
    report
}

/// The GF(2) classification of free rank-(m-3) subgroups.
pub fn run_classify_h(m: u32) -> Report {
    let mut report = Report::new(json!({"command": "classify-h", "m": m}));
    match lemma1_classify(m) {
        Ok(subspaces) => {
            let expected = u32::from(m % 4 == 0) + u32::from(m % 3 == 0);
            let ok = subspaces.len() as u32 == expected;
            report.record(
                &format!("classify-h-m{m}"),
                "lemma-3-1",
                ok,
                format!(
                    "{} invariant subspaces (divisibility predicts {})",
                    subspaces.len(),
                    expected
                ),
            );
        }
        Err(e) => report.record(
            &format!("classify-h-m{m}"),
            "lemma-3-1",
            false,
            format!("classification failed: {e}"),
        ),
    }
    report
}

fn load_case(case: CaseId, m: u32) -> Result<TheoremCase, String> {
    cases::theorem_case(case, m).map_err(|e| e.to_string())
}

/// Curve model, displayed automorphisms, group relations, closure orders
/// and Belyi invariance for one theorem instance.
pub fn run_verify_curve(case: CaseId, m: u32) -> Report {
    let mut report = Report::new(json!({
        "command": "verify-curve", "case": case.label(), "m": m
    }));
    let c = match load_case(case, m) {
        Ok(c) => c,
        Err(e) => {
            report.record("load-case", "thm-main", false, e);
            return report;
        }
    };
    let anchor = format!("thm-main-{}", case.label());
    for (name, map) in &c.maps {
        let ok = pullback_check(&c.curve, map, &c.curve).unwrap_or(false);
        report.record(
            &format!("pullback-{name}"),
            &anchor,
            ok,
            format!("{name} preserves the curve equations"),
        );
    }
    let deck_maps: Vec<_> = c
        .maps
        .iter()
        .filter(|(n, _)| n != "u")
        .cloned()
        .collect();
    match map_closure(&c.curve, &deck_maps, 4 * m as usize + 10) {
        Ok(mg) => {
            let ok = mg.group.order() == 4 * m as usize;
            let iso = is_isomorphic(&mg.group, &c.group).is_some();
            report.record(
                "deck-closure-order",
                &anchor,
                ok && iso,
                format!(
                    "closure of a,b,t has order {} (4m = {}), matches the abstract group: {iso}",
                    mg.group.order(),
                    4 * m
                ),
            );
            match verify_group_relations(&mg, &c.deck_presentation) {
                Ok(rels) => {
                    for (rel, ok) in rels {
                        report.record(
                            &format!("deck-relator {rel}"),
                            "sec2-presentations",
                            ok,
                            String::new(),
                        );
                    }
                }
                Err(e) => report.record("deck-relators", &anchor, false, e.to_string()),
            }
        }
        Err(e) => report.record("deck-closure-order", &anchor, false, e.to_string()),
    }
    if c.maps.iter().any(|(n, _)| n == "u") {
        match map_closure(&c.curve, &c.maps, 8 * m as usize + 10) {
            Ok(mg) => {
                report.record(
                    "full-closure-order",
                    &anchor,
                    mg.group.order() == 8 * m as usize,
                    format!(
                        "closure of a,b,t,u has order {} (8m = {})",
                        mg.group.order(),
                        8 * m
                    ),
                );
                if let Some(p) = &c.aut_presentation {
                    match verify_group_relations(&mg, p) {
                        Ok(rels) => {
                            for (rel, ok) in rels {
                                report.record(
                                    &format!("aut-relator {rel}"),
                                    &anchor,
                                    ok,
                                    String::new(),
                                );
                            }
                        }
                        Err(e) => report.record("aut-relators", &anchor, false, e.to_string()),
                    }
                }
            }
            Err(e) => report.record("full-closure-order", &anchor, false, e.to_string()),
        }
    }
    match verify_belyi(&c.curve, &c.maps, &["a", "b", "t"], m) {
        Ok(b) => {
            for (name, ok) in &b.deck_invariant {
                report.record(
                    &format!("belyi-invariant-{name}"),
                    &anchor,
                    *ok,
                    "x^m composed with the deck generator equals x^m".into(),
                );
            }
            if c.maps.iter().any(|(n, _)| n == "u") {
                report.record(
                    "belyi-not-invariant-u",
                    &anchor,
                    b.non_deck.iter().any(|n| n == "u"),
                    "u does not fix the Belyi map".into(),
                );
            }
            report.record(
                "belyi-branch-normalized",
                &anchor,
                b.branch_values_normalized,
                "f and g divide x^m - 1".into(),
            );
        }
        Err(e) => report.record("belyi", &anchor, false, e.to_string()),
    }
    report
}

pub fn action_for_m(m: u32) -> Option<SemidirectAction> {
    if m % 3 == 0 {
        Some(SemidirectAction::II)
    } else if m % 2 == 0 {
        Some(SemidirectAction::I)
    } else {
        None
    }
}

/// Exact character table with orthogonality checks and rational families.
pub fn run_chartable(m: u32, action: SemidirectAction) -> Report {
    let mut report = Report::new(json!({
        "command": "chartable", "m": m, "action": format!("{action:?}")
    }));
    let group = match build_semidirect(m, action) {
        Ok(g) => g,
        Err(e) => {
            report.record("build-group", "sec6-table", false, e.to_string());
            return report;
        }
    };
    match character_table(&group) {
        Ok(tbl) => {
            // construction validates orthogonality; record the shape
            let fams = rational_irreps(&tbl);
            report.record(
                "character-table",
                "sec6-table",
                true,
                format!(
                    "{} classes, degrees {:?}, exponent {}",
                    tbl.classes.len(),
                    tbl.degrees(),
                    tbl.exponent
                ),
            );
            report.record(
                "rational-families",
                "sec6-rational-irreps",
                true,
                format!(
                    "{} Galois families with orbit sizes {:?} (Schur indices assumed 1)",
                    fams.len(),
                    fams.iter().map(|f| f.orbit.len()).collect::<Vec<_>>()
                ),
            );
            report.record(
                "table-markdown",
                "sec6-table",
                true,
                tbl.to_markdown(),
            );
        }
        Err(e) => report.record("character-table", "sec6-table", false, e.to_string()),
    }
    report
}

/// Both decomposition routes plus the certifying subgroup search.
pub fn run_decompose(case: CaseId, m: u32) -> Report {
    let mut report = Report::new(json!({
        "command": "decompose", "case": case.label(), "m": m
    }));
    let c = match load_case(case, m) {
        Ok(c) => c,
        Err(e) => {
            report.record("load-case", "sec4-3", false, e);
            return report;
        }
    };
    let g = &c.group;
    let subgroups: Vec<(String, crate::group::SubgroupHandle)> = ["a", "b", "ab"]
        .iter()
        .map(|n| {
            (
                n.to_string(),
                g.subgroup_generated(&[g.distinguished(n).unwrap()]),
            )
        })
        .collect();
    match kani_rosen_check(g, &c.vector, &subgroups) {
        Ok(dec) => {
            let dims: Vec<u64> = dec.factors.iter().map(|f| f.dimension).collect();
            let genus = quotient_genus(g, &c.vector, &g.trivial_subgroup()).0;
            report.record(
                "kani-rosen",
                "corollary-4-1",
                dec.total == genus,
                format!("factor genera {dims:?} summing to {}", dec.total),
            );
        }
        Err(e) => report.record("kani-rosen", "corollary-4-1", false, e.to_string()),
    }
    match character_table(g) {
        Ok(tbl) => {
            let fams = rational_irreps(&tbl);
            match rojas_dimensions(g, &c.vector, &tbl, &fams) {
                Ok(dims) => {
                    let mults = family_multiplicities(&tbl, &fams);
                    let genus = quotient_genus(g, &c.vector, &g.trivial_subgroup()).0;
                    let total: u64 = dims.iter().zip(&mults).map(|(&d, &n)| d * n).sum();
                    report.record(
                        "group-algebra-dims",
                        "sec6-rojas",
                        total == genus,
                        format!("factor dims {dims:?} with multiplicities {mults:?}"),
                    );
                    // cross-oracle over the full subgroup lattice
                    let mut sweep_ok = true;
                    for h in g.all_subgroups().unwrap_or_default() {
                        let via_reps = carocca_rodriguez_genus(g, &tbl, &fams, &dims, &h);
                        let via_cover = quotient_genus(g, &c.vector, &h).0;
                        if via_reps.ok() != Some(via_cover) {
                            sweep_ok = false;
                        }
                    }
                    report.record(
                        "genus-cross-oracle",
                        "sec6-carocca-rodriguez",
                        sweep_ok,
                        "group-algebra genus equals covering genus on every subgroup".into(),
                    );
                    if let Some(target) = dims.iter().position(|&d| d > 0) {
                        match jimenez_subgroup_search(g, &tbl, &fams, &dims, target) {
                            Ok(classes) => {
                                let sizes: Vec<(usize, usize)> = classes
                                    .iter()
                                    .map(|cl| (cl[0].order(), cl.len()))
                                    .collect();
                                report.record(
                                    "certifying-subgroups",
                                    "sec6-lemma",
                                    !classes.is_empty(),
                                    format!(
                                        "classes (order, count): {sizes:?} certify the factor"
                                    ),
                                );
                            }
                            Err(e) => report.record(
                                "certifying-subgroups",
                                "sec6-lemma",
                                false,
                                e.to_string(),
                            ),
                        }
                    }
                }
                Err(e) => report.record("group-algebra-dims", "sec6-rojas", false, e.to_string()),
            }
        }
        Err(e) => report.record("character-table", "sec6-table", false, e.to_string()),
    }
    for check in quotient_factor_report(case, m).checks {
        if check.verdict == crate::report::Verdict::Fail {
            report.summary = crate::report::Verdict::Fail;
        }
        report.checks.push(check);
    }
    report
}

/// The extension tests: surface group inside the (2,3,N) triangle group.
pub fn run_maximality(case: CaseId, m: u32) -> Report {
    let mut report = Report::new(json!({
        "command": "maximality", "case": case.label(), "m": m
    }));
    let anchor = "sec4-1";
    let (label, big_n, group) = match case {
        CaseId::One => {
            let q = m / 2;
            if m % 2 != 0 || q < 3 || q % 2 == 0 {
                report.record("parameters", anchor, false, "case 1 needs m = 2q, q odd".into());
                return report;
            }
            (
                format!("case1-q{q}"),
                2 * m,
                build_semidirect(m, SemidirectAction::I).unwrap(),
            )
        }
        CaseId::TwoB => {
            // the order-8m group acts with signature (0;2,4,m); the
            // candidate overgroup is the (2,3,m)-triangle group
            let c = match load_case(case, m) {
                Ok(c) => c,
                Err(e) => {
                    report.record("load-case", anchor, false, e);
                    return report;
                }
            };
            let mg = match map_closure(&c.curve, &c.maps, 8 * m as usize + 10) {
                Ok(mg) => mg,
                Err(e) => {
                    report.record("full-closure", anchor, false, e.to_string());
                    return report;
                }
            };
            (format!("case2b-m{m}"), m, mg.group)
        }
        CaseId::TwoA => {
            report.record(
                "parameters",
                anchor,
                false,
                "the (0;2,4,m) signature is maximal for the 3l family; no extension test".into(),
            );
            return report;
        }
    };
    let Some((u, v)) = cases::triangle_pair(&group, big_n) else {
        report.record("triangle-pair", anchor, false, "no (N,2,N/2) pair".into());
        return report;
    };
    let (p, chain) = cases::surface_group_chain(big_n, &group, u, v);
    match subgroup_from_homomorphism_chain(&p, &chain) {
        Ok(words) => match todd_coxeter(&p, &words, 200 * 3 * group.order()) {
            Ok(table) => {
                let expected_index = 3 * group.order();
                report.record(
                    &format!("{label}-index"),
                    anchor,
                    table.index() == expected_index,
                    format!("surface group index {} (3|G| = {expected_index})", table.index()),
                );
                let normal = table.is_normal();
                let witness = if normal {
                    match table.quotient_group(&p) {
                        Ok(q) => format!(
                            "kernel IS normal: the surface has an automorphism group of order {}",
                            q.order()
                        ),
                        Err(_) => "kernel IS normal (quotient too large to tabulate)".into(),
                    }
                } else {
                    "kernel is not normal; no extension through this triangle group".into()
                };
                report.record(
                    &format!("{label}-not-normal"),
                    anchor,
                    !normal,
                    witness,
                );
            }
            Err(e) => report.record(&format!("{label}-index"), anchor, false, e.to_string()),
        },
        Err(e) => report.record(&format!("{label}-chain"), anchor, false, e.to_string()),
    }
    report
}

/// The rational-model construction at l = 2.
pub fn run_descent() -> Report {
    let mut report = Report::new(json!({"command": "descent", "l": 2}));
    match derive_descent_system() {
        Ok(model) => {
            report.record(
                "weil-datum",
                "sec5-datum",
                true,
                "pullback and twisted cocycle verified".into(),
            );
            report.record(
                "solved-coordinate",
                "sec5-R",
                model.x_solution_verified && model.denominator_nonzero,
                "x = R holds on the curve with nonzero denominator".into(),
            );
            report.record(
                "y-closed-form",
                "sec5-display",
                model.y_display_matches,
                "recomputed y expression matches on the curve".into(),
            );
            for r in &model.pq_reports {
                report.record(
                    &format!("pq-{}", r.variant),
                    "sec5-remark",
                    r.reduction_identity_on_curve,
                    format!(
                        "P matches display: {}, Q matches display: {}",
                        r.p_matches_display, r.q_matches_display
                    ),
                );
            }
            report.record(
                "rational-system",
                "sec5-final-display",
                model.traces_rational && model.all_vanish_on_curve,
                format!(
                    "{} polynomials with rational coefficients vanish on the curve",
                    model.polynomials.len()
                ),
            );
        }
        Err(e) => report.record("descent", "sec5", false, e.to_string()),
    }
    report
}

/// The generalized Fermat cover action at small m.
pub fn run_fermat(m: u32) -> Report {
    let mut report = Report::new(json!({"command": "fermat-action", "m": m}));
    match verify_fermat_action(m) {
        Ok(r) => {
            report.record(
                "rotation",
                "sec4-2",
                r.rotation_preserves_curve && r.rotation_covers_moebius,
                "solved coefficients map the quadrics into their span and cover the rotation".into(),
            );
            report.record(
                "shift-conjugation",
                "sec4-2",
                r.shift_conjugation,
                "T a_j = a_(j+1) T for all j".into(),
            );
            report.record(
                "involution",
                "sec4-2",
                r.involution_preserves_curve
                    && r.involution_square_in_deck
                    && r.involution_covers_moebius,
                format!("U^2 is the sign map {:?}", r.involution_square_signs),
            );
            let gc = fermat_genus(m);
            let free_quotient = 1 + (gc - 1) / (1u128 << (m - 3));
            report.record(
                "genus-consistency",
                "sec4-2-genus",
                free_quotient == (m as u128) - 3,
                format!("g_C = {gc}, free quotient genus {free_quotient} = m - 3"),
            );
        }
        Err(e) => report.record("fermat-action", "sec4-2", false, e.to_string()),
    }
    report
}

/// Orbit counts of generating vectors for the case's signature.
pub fn run_census(case: CaseId, m: u32) -> Report {
    let mut report = Report::new(json!({
        "command": "census", "case": case.label(), "m": m
    }));
    let (group, sig) = match case {
        CaseId::One => {
            let g = match build_semidirect(m, SemidirectAction::I) {
                Ok(g) => g,
                Err(e) => {
                    report.record("build-group", "thm-main", false, e.to_string());
                    return report;
                }
            };
            (g, Signature::new(0, vec![2, m, 2 * m]))
        }
        CaseId::TwoA => (
            build_semidirect(m, SemidirectAction::II).unwrap(),
            Signature::new(0, vec![2, m, m]),
        ),
        CaseId::TwoB => (
            build_semidirect(m, SemidirectAction::I).unwrap(),
            Signature::new(0, vec![2, m, m]),
        ),
    };
    match enumerate_generating_vectors(&group, &sig) {
        Ok(census) => report.record(
            &format!("census-{}-m{m}", case.label()),
            "thm-main-uniqueness",
            true,
            format!(
                "{} vectors, {} orbits under Aut(G), {} braid-refined",
                census.vectors.len(),
                census.aut_orbit_count,
                census.braid_refined_orbit_count
            ),
        ),
        Err(e) => report.record(
            &format!("census-{}-m{m}", case.label()),
            "thm-main-uniqueness",
            false,
            e.to_string(),
        ),
    }
    report
}

/// Everything applicable for one m, in a single report.
pub fn run_full(m: u32) -> Report {
    let mut report = Report::new(json!({"command": "full", "m": m}));
    let mut absorb = |sub: Report| {
        for c in sub.checks {
            if c.verdict == crate::report::Verdict::Fail {
                report.summary = crate::report::Verdict::Fail;
            }
            report.checks.push(c);
        }
    };
    absorb(run_signature(m));
    if (3..=13).contains(&m) {
        absorb(run_classify_h(m));
    }
    let mut cases_for_m: Vec<CaseId> = Vec::new();
    if m % 2 == 0 && (m / 2) >= 3 && (m / 2) % 2 == 1 {
        cases_for_m.push(CaseId::One);
    }
    if m % 3 == 0 && m >= 6 {
        cases_for_m.push(CaseId::TwoA);
    }
    if m % 4 == 0 && m >= 8 {
        cases_for_m.push(CaseId::TwoB);
    }
    for case in &cases_for_m {
        absorb(run_verify_curve(*case, m));
        absorb(run_decompose(*case, m));
        absorb(run_census(*case, m));
        match case {
            CaseId::One | CaseId::TwoB => absorb(run_maximality(*case, m)),
            CaseId::TwoA => {}
        }
    }
    if let Some(action) = action_for_m(m) {
        absorb(run_chartable(m, action));
    }
    if m == 6 {
        absorb(run_descent());
    }
    if (5..=8).contains(&m) {
        absorb(run_fermat(m));
    }
    report
}

/// Genus bookkeeping used by a few pipelines and tests.
pub fn case_genus(case: CaseId, m: u32) -> u64 {
    let order = 4 * m as u64;
    let sig = match case {
        CaseId::One => Signature::new(0, vec![2, m, 2 * m]),
        _ => Signature::new(0, vec![2, m, m]),
    };
    genus_from_rh(order, &sig).expect("theorem signatures are consistent")
}

/// Elliptic-factor checks shared by the decompose pipeline and the
/// acceptance suite: quotient models, refinements and scaling
/// isomorphisms for a case instance.
pub fn quotient_factor_report(case: CaseId, m: u32) -> Report {
    let mut report = Report::new(json!({
        "command": "factors", "case": case.label(), "m": m
    }));
    let qcase = match case {
        CaseId::One => QuotientCase::Case1 { q: m / 2 },
        CaseId::TwoA => QuotientCase::Case2a { l: m / 3 },
        CaseId::TwoB => QuotientCase::Case2b { l: m / 4 },
    };
    match derive_quotient_factors(qcase) {
        Ok(factors) => {
            for (name, poly) in &factors {
                match hyperelliptic_genus(poly) {
                    Ok(g) => report.record(
                        &format!("factor-{name}"),
                        "sec4-3",
                        true,
                        format!("genus {g}"),
                    ),
                    Err(e) => report.record(
                        &format!("factor-{name}"),
                        "sec4-3",
                        false,
                        e.to_string(),
                    ),
                }
            }
            // S_b and S_ab are isomorphic by a scaling in cases 1 and 2a
            if matches!(case, CaseId::One | CaseId::TwoA) {
                let get = |n: &str| {
                    factors
                        .iter()
                        .find(|(fname, _)| fname == n)
                        .map(|(_, p)| p.clone())
                };
                if let (Some(hb), Some(hab)) = (get("S_b"), get("S_ab")) {
                    let emb = |p: crate::algebra::UniPoly<crate::algebra::Cyclotomic>| {
                        p.map_coeffs(|c| c.embed(12 * m))
                    };
                    let found = scaling_isomorphism(&emb(hb.clone()), &emb(hab.clone()), 12 * m)
                        .and_then(|map| {
                            let fwd = check_hyper_map(&emb(hb.clone()), &map, &emb(hab.clone()))
                                .unwrap_or(false);
                            let back = invert_hyper_map(&map).map_or(false, |inv| {
                                check_hyper_map(&emb(hab.clone()), &inv, &emb(hb.clone()))
                                    .unwrap_or(false)
                            });
                            if fwd && back {
                                Some(())
                            } else {
                                None
                            }
                        })
                        .is_some();
                    report.record(
                        "sb-sab-isomorphic",
                        "sec4-3",
                        found,
                        "scaling isomorphism verified both ways".into(),
                    );
                }
            }
        }
        Err(e) => report.record("factors", "sec4-3", false, e.to_string()),
    }
    report
}
