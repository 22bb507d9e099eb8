//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (plus clause details on failure) and asserting all of
//! its clauses. Run with `cargo test -p qplab-core --test acceptance`
//! (add `-- --nocapture` to see the lines for passing criteria too).
//!
//! Three criteria assert claims that the machine refutes; they fail
//! honestly with the computed truth in the output. The analysis lives
//! with the project notes, and the summaries here state what was found.

use std::time::Instant;

use qplab_core::algebra::{Cyclotomic, UniPoly};
use qplab_core::cases::{self, CaseId};
use qplab_core::covering::{
    branch_data, enumerate_generating_vectors, fermat_genus, fixed_point_count, genus_from_rh,
    lemma1_classify, lemma1_classify_brute, lemma1_classify_guided, pair_span, quotient_genus,
    triple_span, Signature,
};
use qplab_core::curve::{
    check_hyper_map, derive_quotient_factors, hyperelliptic_genus, invert_hyper_map, map_closure,
    pullback_check, scaling_isomorphism, verify_belyi, verify_fermat_action,
    verify_group_relations, HyperMap, QuotientCase,
};
use qplab_core::descent::derive_descent_system;
use qplab_core::fpgroup::{
    cayley_from_presentation, subgroup_from_homomorphism_chain, todd_coxeter, Presentation,
};
use qplab_core::group::{
    build_semidirect, cyclic, dihedral, direct_product, is_isomorphic, symmetric4,
    SemidirectAction,
};
use qplab_core::jacobian::{
    carocca_rodriguez_genus, family_multiplicities, jimenez_subgroup_search, kani_rosen_check,
    refine_factor, rojas_dimensions,
};
use qplab_core::pipelines::expected_signatures;
use qplab_core::repr::{character_table, rational_irreps};

struct Criterion {
    number: u32,
    label: &'static str,
    clauses: Vec<(String, bool)>,
    started: Instant,
}

impl Criterion {
    fn new(number: u32, label: &'static str) -> Self {
        Criterion { number, label, clauses: Vec::new(), started: Instant::now() }
    }

    fn check(&mut self, what: impl Into<String>, ok: bool) {
        self.clauses.push((what.into(), ok));
    }

    fn finish(self) {
        let failed: Vec<&(String, bool)> = self.clauses.iter().filter(|(_, ok)| !ok).collect();
        let verdict = if failed.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "acceptance {:02} {}: {} ({:.1}s, {} clauses)",
            self.number,
            self.label,
            verdict,
            self.started.elapsed().as_secs_f64(),
            self.clauses.len()
        );
        for (what, ok) in &self.clauses {
            if !ok {
                println!("  [FAIL] {what}");
            }
        }
        assert!(
            failed.is_empty(),
            "criterion {:02} failed {} clause(s)",
            self.number,
            failed.len()
        );
    }

    fn budget(&mut self, seconds: f64) {
        let elapsed = self.started.elapsed().as_secs_f64();
        self.check(
            format!("runtime {elapsed:.1}s within the {seconds}s budget"),
            elapsed < seconds,
        );
    }
}

#[test]
fn criterion_01_signatures() {
    // Asserted: each listed (m, action, signature) combination is
    // realizable exactly under the stated divisibility, and the listed
    // signature shapes are empty in every other combination. The sweep
    // over all other hyperbolic triangle signatures is reported
    // informally: further quotient signatures do occur for these groups
    // ((0;4,6,6) at m = 6 with the order-2 action, and the 2-led
    // (0;2,9,18) at m = 18 with the order-3 action), so the stated list
    // is not exhaustive as a classification of every branched quotient.
    let mut c = Criterion::new(1, "signature classification for m in 3..24");
    let mut extras: Vec<String> = Vec::new();
    for m in 3..=24u32 {
        for action in [SemidirectAction::I, SemidirectAction::II] {
            let Ok(group) = build_semidirect(m, action) else { continue };
            let expected = expected_signatures(m, action);
            // the two listed signature shapes for this m
            let mut shapes = vec![Signature::new(0, vec![2, m, m])];
            if m % 2 == 0 {
                shapes.push(Signature::new(0, vec![2, m, 2 * m]));
            }
            for sig in shapes {
                if !sig.is_hyperbolic() {
                    continue;
                }
                let realizable =
                    qplab_core::covering::exists_generating_vector(&group, &sig);
                c.check(
                    format!(
                        "m={m} action {action:?} {sig}: realizable={realizable}, predicted={}",
                        expected.contains(&sig)
                    ),
                    realizable == expected.contains(&sig),
                );
            }
            // informational sweep over every other hyperbolic signature
            let mut orders: Vec<u32> = (2..=group.exponent())
                .filter(|&k| !group.elements_of_order(k).is_empty())
                .collect();
            orders.sort_unstable();
            for (i, &n1) in orders.iter().enumerate() {
                for (j, &n2) in orders.iter().enumerate().skip(i) {
                    for &n3 in orders.iter().skip(j) {
                        let sig = Signature::new(0, vec![n1, n2, n3]);
                        if sig.is_hyperbolic()
                            && !expected.contains(&sig)
                            && qplab_core::covering::exists_generating_vector(&group, &sig)
                        {
                            extras.push(format!("m={m} {action:?} {sig}"));
                        }
                    }
                }
            }
        }
    }
    println!(
        "  note: {} further realizable signatures outside the stated list, e.g. {:?}, {:?}",
        extras.len(),
        extras.first(),
        extras.iter().find(|s| s.contains("(0;2,"))
    );
    c.budget(60.0);
    c.finish();
}

#[test]
fn criterion_02_genus_formulas() {
    let mut c = Criterion::new(2, "genus formulas");
    for q in [3u32, 5, 7, 9] {
        let m = 2 * q;
        let g = genus_from_rh(4 * m as u64, &Signature::new(0, vec![2, m, 2 * m])).unwrap();
        c.check(format!("case 1 q={q}: g = {g} = 2(q-1)"), g == 2 * (q as u64 - 1));
    }
    for m in [6u32, 8, 9, 12, 16, 20, 24] {
        let g = genus_from_rh(4 * m as u64, &Signature::new(0, vec![2, m, m])).unwrap();
        c.check(format!("case 2 m={m}: g = {g} = m-3"), g == m as u64 - 3);
    }
    c.finish();
}

#[test]
fn criterion_03_lemma1_classification() {
    let mut c = Criterion::new(3, "free-action classification over GF(2)");
    for m in 3..=13u32 {
        let brute = lemma1_classify_brute(m).unwrap();
        let guided = lemma1_classify_guided(m).unwrap();
        c.check(format!("m={m}: brute and guided agree"), brute == guided);
        let expected = match m {
            5 | 7 | 10 | 11 | 13 => 0,
            3 | 4 | 6 | 8 | 9 => 1,
            12 => 2,
            _ => unreachable!(),
        };
        c.check(
            format!("m={m}: {} subspaces (expected {expected})", brute.len()),
            brute.len() == expected,
        );
    }
    // displayed spanning sets match as subspaces
    for m in [4u32, 8, 12] {
        c.check(
            format!("m={m}: pair span is returned"),
            lemma1_classify(m).unwrap().contains(&pair_span(m)),
        );
    }
    for m in [3u32, 6, 9, 12] {
        c.check(
            format!("m={m}: triple span is returned"),
            lemma1_classify(m).unwrap().contains(&triple_span(m)),
        );
    }
    c.budget(120.0);
    c.finish();
}

#[test]
fn criterion_04_character_table_m6() {
    let mut c = Criterion::new(4, "m = 6 character table");
    let g = build_semidirect(6, SemidirectAction::II).unwrap();
    let tbl = character_table(&g).unwrap();
    c.check("8 conjugacy classes", tbl.classes.len() == 8);
    c.check(
        "degree vector (1,1,1,1,1,1,3,3)",
        tbl.degrees() == vec![1, 1, 1, 1, 1, 1, 3, 3],
    );
    // published table values under the published class order
    let a = g.distinguished("a").unwrap();
    let t = g.distinguished("t").unwrap();
    let reps = [
        g.identity(),
        g.mul(a, g.pow(t, 3)),
        a,
        g.pow(t, 3),
        g.pow(t, 2),
        g.pow(t, 5),
        g.pow(t, 4),
        t,
    ];
    let xi = Cyclotomic::zeta(3);
    let xi2 = Cyclotomic::zeta_pow(3, 2);
    let i64c = Cyclotomic::from_integer;
    let reference: Vec<Vec<Cyclotomic>> = vec![
        vec![i64c(1); 8],
        [1, -1, 1, -1, 1, -1, 1, -1].iter().map(|&k| i64c(k)).collect(),
        vec![i64c(1), i64c(-1), i64c(1), i64c(-1), xi2.clone(), xi2.neg(), xi.clone(), xi.neg()],
        vec![i64c(1), i64c(-1), i64c(1), i64c(-1), xi.clone(), xi.neg(), xi2.clone(), xi2.neg()],
        vec![i64c(1), i64c(1), i64c(1), i64c(1), xi2.clone(), xi2.clone(), xi.clone(), xi.clone()],
        vec![i64c(1), i64c(1), i64c(1), i64c(1), xi.clone(), xi.clone(), xi2.clone(), xi2.clone()],
        [3, 1, -1, -3, 0, 0, 0, 0].iter().map(|&k| i64c(k)).collect(),
        [3, -1, -1, 3, 0, 0, 0, 0].iter().map(|&k| i64c(k)).collect(),
    ];
    let col: Vec<usize> = reps.iter().map(|&r| tbl.class_of[r as usize]).collect();
    let mut row_perm: Vec<usize> = Vec::new();
    let mut matched_all = true;
    for ref_row in &reference {
        match (0..tbl.num_rows()).find(|&r| {
            !row_perm.contains(&r) && (0..8).all(|k| tbl.values[r][col[k]] == ref_row[k])
        }) {
            Some(r) => row_perm.push(r),
            None => matched_all = false,
        }
    }
    c.check("all 8 published rows matched up to permutation", matched_all);
    if matched_all {
        let fams = rational_irreps(&tbl);
        let orbit_of = |r: usize| fams.iter().find(|f| f.orbit.contains(&r)).unwrap();
        let pair = |i: usize, j: usize| {
            let mut v = vec![row_perm[i], row_perm[j]];
            v.sort_unstable();
            v
        };
        c.check("W3 = V3 + V4", orbit_of(row_perm[2]).orbit == pair(2, 3));
        c.check("W4 = V5 + V6", orbit_of(row_perm[4]).orbit == pair(4, 5));
    }
    c.finish();
}

#[test]
fn criterion_05_group_algebra_m6() {
    let mut c = Criterion::new(5, "m = 6 group-algebra decomposition");
    let tc = cases::case2a(6).unwrap();
    let g = &tc.group;
    let tbl = character_table(g).unwrap();
    let fams = rational_irreps(&tbl);
    let dims = rojas_dimensions(g, &tc.vector, &tbl, &fams).unwrap();
    let mut sorted = dims.clone();
    sorted.sort_unstable();
    c.check(
        format!("factor dimensions {dims:?} are (0,0,0,0,1,0) up to family order"),
        sorted == vec![0, 0, 0, 0, 0, 1],
    );
    let target = dims.iter().position(|&d| d == 1).unwrap();
    let mults = family_multiplicities(&tbl, &fams);
    c.check(
        format!("nonzero factor has multiplicity {} = 3 (JS ~ B^3)", mults[target]),
        mults[target] == 3 && tbl.degree(fams[target].orbit[0]) == 3,
    );
    let classes = jimenez_subgroup_search(g, &tbl, &fams, &dims, target).unwrap();
    let a = g.distinguished("a").unwrap();
    let ha = g.subgroup_generated(&[a]);
    c.check(
        "the class of <a> is returned",
        classes.iter().any(|cl| cl.contains(&ha)),
    );
    for cl in &classes {
        c.check(
            format!(
                "returned class (order {}, {} members) certifies genus 1",
                cl[0].order(),
                cl.len()
            ),
            cl.iter().all(|h| quotient_genus(g, &tc.vector, h).0 == 1),
        );
    }
    // As stated the search must return exactly the class of <a>; the
    // computed answer has two more qualifying classes (orders 3 and 4),
    // each certified above by the independent genus oracle.
    c.check(
        format!(
            "search returns exactly the conjugacy class of <a> — computed {} classes with orders {:?}",
            classes.len(),
            classes.iter().map(|cl| cl[0].order()).collect::<Vec<_>>()
        ),
        classes.len() == 1 && classes[0].contains(&ha),
    );
    c.finish();
}

#[test]
fn criterion_06_kani_rosen() {
    let mut c = Criterion::new(6, "commuting-subgroup decompositions");
    let klein_subs = |g: &qplab_core::group::FiniteGroup| {
        ["a", "b", "ab"]
            .iter()
            .map(|n| {
                (
                    n.to_string(),
                    g.subgroup_generated(&[g.distinguished(n).unwrap()]),
                )
            })
            .collect::<Vec<_>>()
    };
    for q in [3u32, 5] {
        let tc = cases::case1(q).unwrap();
        let report = kani_rosen_check(&tc.group, &tc.vector, &klein_subs(&tc.group)).unwrap();
        let m = 2 * q as u64;
        let expect = (m - 2) / 2 + (m - 2) / 4 + (m - 2) / 4;
        c.check(
            format!("case 1 q={q}: genus sum {} = 2(q-1)", report.total),
            report.total == expect && report.total == 2 * (q as u64 - 1),
        );
    }
    for l in [2u32, 3, 5] {
        let m = 3 * l;
        let tc = cases::case2a(m).unwrap();
        let report = kani_rosen_check(&tc.group, &tc.vector, &klein_subs(&tc.group)).unwrap();
        c.check(
            format!("case 2a l={l}: genus sum {} = 3(l-1) = m-3", report.total),
            report.total == 3 * (l as u64 - 1) && report.total == m as u64 - 3,
        );
    }
    for l in [2u32, 3] {
        let m = 4 * l;
        let tc = cases::case2b(m).unwrap();
        let report = kani_rosen_check(&tc.group, &tc.vector, &klein_subs(&tc.group)).unwrap();
        c.check(
            format!("case 2b l={l}: genus sum {} = (2l-1)+2(l-1) = m-3", report.total),
            report.total == (2 * l as u64 - 1) + 2 * (l as u64 - 1)
                && report.total == m as u64 - 3,
        );
    }
    // refinements
    {
        let tc = cases::case1(3).unwrap();
        let g = &tc.group;
        let ha = g.subgroup_generated(&[g.distinguished("a").unwrap()]);
        let d = g.pow(g.distinguished("t").unwrap(), 3);
        let iota = g.distinguished("b").unwrap();
        let (g1, g2) = refine_factor(g, &tc.vector, &ha, d, iota).unwrap();
        c.check(
            format!("case 1 q=3 refinement genera ({g1},{g2}) -> four genus-1 factors"),
            (g1, g2) == (1, 1),
        );
        // the S_b factor polynomial is x^3 - 1
        let factors = derive_quotient_factors(QuotientCase::Case1 { q: 3 }).unwrap();
        let sb = factors.iter().find(|(n, _)| n == "S_b").unwrap().1.clone();
        let e1 = UniPoly::from_coeffs(
            [-1i64, 0, 0, 1].iter().map(|&k| Cyclotomic::from_integer(k)).collect(),
        );
        c.check("factor curve is w^2 = x^3 - 1", sb == e1);
        let genera: Vec<u64> = ["S_b", "S_ab", "S_a1", "S_a2"]
            .iter()
            .map(|n| {
                hyperelliptic_genus(&factors.iter().find(|(f, _)| f == n).unwrap().1).unwrap()
            })
            .collect();
        c.check(format!("four factors of genus 1: {genera:?}"), genera == vec![1, 1, 1, 1]);
    }
    {
        let tc = cases::case2b(8).unwrap();
        let g = &tc.group;
        let ha = g.subgroup_generated(&[g.distinguished("a").unwrap()]);
        let d = g.pow(g.distinguished("t").unwrap(), 4);
        let iota = g.distinguished("b").unwrap();
        let (g1, g2) = refine_factor(g, &tc.vector, &ha, d, iota).unwrap();
        let hb = g.subgroup_generated(&[g.distinguished("b").unwrap()]);
        let hab = g.subgroup_generated(&[g.distinguished("ab").unwrap()]);
        let gb = quotient_genus(g, &tc.vector, &hb).0;
        let gab = quotient_genus(g, &tc.vector, &hab).0;
        let mut all = vec![gb, gab, g1, g2];
        all.sort_unstable();
        c.check(
            format!("case 2b l=2 factor genera {all:?} = (1,1,1,2)"),
            all == vec![1, 1, 1, 2],
        );
    }
    c.finish();
}

#[test]
fn criterion_07_fixed_points() {
    let mut c = Criterion::new(7, "fixed-point counts");
    // Case 2b: the central involution a = [t,b] acts freely; b and ab
    // have m fixed points each. (The two fixed-point-rich involutions
    // and the free product element, with the labels the presentation
    // forces.)
    for m in [8u32, 16] {
        let tc = cases::case2b(m).unwrap();
        let g = &tc.group;
        let fix = |name: &str| {
            fixed_point_count(g, &tc.vector, g.distinguished(name).unwrap()).unwrap()
        };
        c.check(
            format!(
                "case 2b m={m}: Fix(b) = {}, Fix(ab) = {}, Fix(a) = {} (two with m, product free)",
                fix("b"),
                fix("ab"),
                fix("a")
            ),
            fix("b") == m as u64 && fix("ab") == m as u64 && fix("a") == 0,
        );
    }
    for m in [6u32, 9, 12] {
        let tc = cases::case2a(m).unwrap();
        let g = &tc.group;
        let ok = ["a", "b", "ab"].iter().all(|n| {
            fixed_point_count(g, &tc.vector, g.distinguished(n).unwrap()).unwrap()
                == (2 * m / 3) as u64
        });
        c.check(format!("case 2a m={m}: a, b, ab each fix 2m/3 points"), ok);
    }
    // m = 6: the central involution of the order-48 group has 8 fixed
    // points (the hyperelliptic involution of the genus-3 curve)
    {
        let tc = cases::case2a(6).unwrap();
        let mg = map_closure(&tc.curve, &tc.maps, 100).unwrap();
        let census =
            enumerate_generating_vectors(&mg.group, &Signature::new(0, vec![2, 4, 6])).unwrap();
        let v8 = census.vectors.first().expect("(0;2,4,6) vector exists").clone();
        let z = mg.group.center();
        let central_invol = z
            .elements
            .iter()
            .copied()
            .find(|&x| mg.group.element_order(x) == 2)
            .expect("central involution exists");
        let fix = fixed_point_count(&mg.group, &v8, central_invol).unwrap();
        c.check(
            format!("m=6 full group: central involution fixes {fix} = 8 points"),
            fix == 8,
        );
        c.check(
            "m=6 full group is Z2 x S4",
            is_isomorphic(&mg.group, &direct_product(&cyclic(2), &symmetric4())).is_some(),
        );
    }
    c.finish();
}

#[test]
fn criterion_08_curve_verification() {
    let mut c = Criterion::new(8, "curve models and automorphisms");
    let instances = [
        (CaseId::One, 6u32),
        (CaseId::One, 10),
        (CaseId::TwoA, 6),
        (CaseId::TwoA, 9),
        (CaseId::TwoB, 8),
        (CaseId::TwoB, 16),
    ];
    for (case, m) in instances {
        let tc = cases::theorem_case(case, m).unwrap();
        let label = format!("case {} m={m}", case.label());
        let pullbacks = tc
            .maps
            .iter()
            .all(|(_, map)| pullback_check(&tc.curve, map, &tc.curve).unwrap());
        c.check(format!("{label}: all displayed maps preserve the curve"), pullbacks);
        let deck: Vec<_> = tc.maps.iter().filter(|(n, _)| n != "u").cloned().collect();
        let mg = map_closure(&tc.curve, &deck, 4 * m as usize + 8).unwrap();
        c.check(
            format!("{label}: <a,b,t> closure order {} = 4m", mg.group.order()),
            mg.group.order() == 4 * m as usize,
        );
        c.check(
            format!("{label}: closure matches the semidirect product"),
            is_isomorphic(&mg.group, &tc.group).is_some(),
        );
        let rels = verify_group_relations(&mg, &tc.deck_presentation).unwrap();
        c.check(
            format!("{label}: deck presentation relators hold"),
            rels.iter().all(|(_, ok)| *ok),
        );
        if tc.maps.iter().any(|(n, _)| n == "u") {
            let full = map_closure(&tc.curve, &tc.maps, 8 * m as usize + 8).unwrap();
            c.check(
                format!("{label}: <a,b,t,u> closure order {} = 8m", full.group.order()),
                full.group.order() == 8 * m as usize,
            );
            let rels =
                verify_group_relations(&full, tc.aut_presentation.as_ref().unwrap()).unwrap();
            c.check(
                format!("{label}: full presentation relators hold"),
                rels.iter().all(|(_, ok)| *ok),
            );
        }
        let belyi = verify_belyi(&tc.curve, &tc.maps, &["a", "b", "t"], m).unwrap();
        let u_absent = !tc.maps.iter().any(|(n, _)| n == "u");
        c.check(
            format!("{label}: x^m invariant under deck maps, branch set normalized"),
            belyi.deck_invariant.iter().all(|(_, ok)| *ok) && belyi.branch_values_normalized,
        );
        if !u_absent {
            c.check(
                format!("{label}: x^m is not u-invariant"),
                belyi.non_deck.iter().any(|n| n == "u"),
            );
        }
    }
    c.budget(300.0);
    c.finish();
}

#[test]
fn criterion_09_presented_groups() {
    let mut c = Criterion::new(9, "presented automorphism groups");
    for (case, ms) in [(CaseId::TwoA, vec![6u32, 9, 12]), (CaseId::TwoB, vec![8, 16])] {
        for m in ms {
            let tc = cases::theorem_case(case, m).unwrap();
            let p = tc.aut_presentation.as_ref().unwrap();
            let table = todd_coxeter(p, &[], 200 * 8 * m as usize).unwrap();
            c.check(
                format!(
                    "case {} m={m}: presented group order {} = 8m",
                    case.label(),
                    table.index()
                ),
                table.index() == 8 * m as usize,
            );
            // quotient by the normal closure of u^2 (with t u^2 t^-1) is D_m
            let mut relators = p.relators.clone();
            relators.push(vec![1, 1]); // u^2 = 1 (u is generator 1)
            let quot_pres = Presentation::new(p.gen_names.clone(), relators);
            let q = cayley_from_presentation(&quot_pres, 200 * 2 * m as usize).unwrap();
            c.check(
                format!("case {} m={m}: quotient by <a,b> is dihedral of order 2m", case.label()),
                q.order() == 2 * m as usize && is_isomorphic(&q, &dihedral(m)).is_some(),
            );
        }
    }
    // m = 6: the presented full group is Z2 x S4
    let tc = cases::case2a(6).unwrap();
    let g48 = cayley_from_presentation(tc.aut_presentation.as_ref().unwrap(), 4000).unwrap();
    c.check(
        "m=6 presented group is Z2 x S4",
        is_isomorphic(&g48, &direct_product(&cyclic(2), &symmetric4())).is_some(),
    );
    c.finish();
}

#[test]
fn criterion_10_maximality() {
    let mut c = Criterion::new(10, "triangle-group extension tests");
    // Case 1, q in {3, 5}: the surface group at index 12m = 3|G|.
    for q in [3u32, 5] {
        let (p, chain) = cases::maximality_chain_case1(q);
        let words = subgroup_from_homomorphism_chain(&p, &chain).unwrap();
        let table = todd_coxeter(&p, &words, 100_000).unwrap();
        let expected_index = 12 * 2 * q as usize;
        c.check(
            format!("q={q}: surface-group index {} = {expected_index}", table.index()),
            table.index() == expected_index,
        );
        let normal = table.is_normal();
        let witness = if normal {
            "computed NORMAL: the quotient has order 72 (C3 x S4), so the genus-4 curve has 72 automorphisms"
        } else {
            "not normal, as claimed"
        };
        c.check(format!("q={q}: kernel not normal — {witness}"), !normal);
    }
    // m = 8: the index-192 surface group inside the (2,3,8) triangle group.
    {
        let tc = cases::case2b(8).unwrap();
        let mg = map_closure(&tc.curve, &tc.maps, 100).unwrap();
        let (u, v) = cases::triangle_pair(&mg.group, 8).unwrap();
        let (p, chain) = cases::surface_group_chain(8, &mg.group, u, v);
        let words = subgroup_from_homomorphism_chain(&p, &chain).unwrap();
        let table = todd_coxeter(&p, &words, 100_000).unwrap();
        c.check(
            format!("m=8: surface-group index {} = 192", table.index()),
            table.index() == 192,
        );
        let normal = table.is_normal();
        let witness = if normal {
            "computed NORMAL: the genus-5 curve has an automorphism group of order 192"
        } else {
            "not normal, as claimed"
        };
        c.check(format!("m=8: kernel not normal — {witness}"), !normal);
    }
    c.finish();
}

#[test]
fn criterion_11_descent() {
    let mut c = Criterion::new(11, "rational model at l = 2");
    let model = derive_descent_system().unwrap();
    c.check("twisting datum verified", true); // derive fails otherwise
    c.check("x = R holds on the curve", model.x_solution_verified);
    c.check("R's denominator is nonzero", model.denominator_nonzero);
    c.check("trace polynomials have rational coefficients", model.traces_rational);
    c.check("all seven polynomials vanish on the curve", model.all_vanish_on_curve);
    c.check(
        "P, Q comparison recorded with the reduction identity verified",
        model
            .pq_reports
            .iter()
            .all(|r| r.reduction_identity_on_curve),
    );
    c.budget(60.0);
    c.finish();
}

#[test]
fn criterion_12_elliptic_factors() {
    let mut c = Criterion::new(12, "elliptic factor polynomials");
    {
        let factors = derive_quotient_factors(QuotientCase::Case1 { q: 3 }).unwrap();
        let get = |n: &str| factors.iter().find(|(f, _)| f == n).unwrap().1.clone();
        let ipoly = |cs: &[i64]| {
            UniPoly::from_coeffs(cs.iter().map(|&k| Cyclotomic::from_integer(k)).collect())
        };
        c.check("q=3: S_b = x^3 - 1", get("S_b") == ipoly(&[-1, 0, 0, 1]));
        let genera: Vec<u64> = ["S_b", "S_ab", "S_a1", "S_a2"]
            .iter()
            .map(|n| hyperelliptic_genus(&get(n)).unwrap())
            .collect();
        c.check(format!("q=3: four genus-1 factors {genera:?}"), genera == vec![1; 4]);
        // S_ab ~ S_b by scaling; S_a2 ~ E1 by the inversion substitution
        let emb = |p: UniPoly<Cyclotomic>| p.map_coeffs(|c| c.embed(12));
        c.check(
            "q=3: S_ab isomorphic to S_b by scaling",
            scaling_isomorphism(&emb(get("S_b")), &emb(get("S_ab")), 12).is_some(),
        );
        let iso = HyperMap {
            phi: qplab_core::algebra::RatFun::x_pow(-1),
            psi: qplab_core::algebra::RatFun::new(
                UniPoly::constant(Cyclotomic::i().embed(12)),
                UniPoly::monomial(Cyclotomic::one().embed(12), 2),
            )
            .unwrap(),
        };
        let ok = check_hyper_map(&emb(get("S_a2")), &iso, &emb(get("S_b"))).unwrap()
            && invert_hyper_map(&iso)
                .map(|inv| check_hyper_map(&emb(get("S_b")), &inv, &emb(get("S_a2"))).unwrap())
                .unwrap_or(false);
        c.check("q=3: S_a2 isomorphic to the same elliptic curve", ok);
    }
    {
        let factors = derive_quotient_factors(QuotientCase::Case2a { l: 2 }).unwrap();
        let get = |n: &str| factors.iter().find(|(f, _)| f == n).unwrap().1.clone();
        let ipoly = |cs: &[i64]| {
            UniPoly::from_coeffs(cs.iter().map(|&k| Cyclotomic::from_integer(k)).collect())
        };
        c.check("l=2: S_a1 expands to 3v^2 + 10v + 3", get("S_a1") == ipoly(&[3, 10, 3]));
        c.check(
            "l=2: S_a2 expands to v(3v^2 + 10v + 3)",
            get("S_a2") == ipoly(&[0, 3, 10, 3]),
        );
        c.check(
            "l=2: the elliptic factor has genus 1 (S_a1 is the genus-0 companion)",
            hyperelliptic_genus(&get("S_a2")).unwrap() == 1
                && hyperelliptic_genus(&get("S_a1")).unwrap() == 0,
        );
        // three copies: multiplicity from the group-algebra route
        let tc = cases::case2a(6).unwrap();
        let tbl = character_table(&tc.group).unwrap();
        let fams = rational_irreps(&tbl);
        let dims = rojas_dimensions(&tc.group, &tc.vector, &tbl, &fams).unwrap();
        let target = dims.iter().position(|&d| d == 1).unwrap();
        c.check(
            "l=2: the genus-1 factor enters with multiplicity 3",
            family_multiplicities(&tbl, &fams)[target] == 3,
        );
    }
    c.finish();
}

#[test]
fn criterion_13_genus_cross_oracle() {
    let mut c = Criterion::new(13, "subgroup-lattice genus sweep");
    let instances: Vec<(CaseId, u32)> = vec![
        (CaseId::TwoA, 6),
        (CaseId::TwoB, 8),
        (CaseId::TwoA, 9),
        (CaseId::TwoA, 12),
        (CaseId::TwoB, 12),
    ];
    for (case, m) in instances {
        let tc = cases::theorem_case(case, m).unwrap();
        let tbl = character_table(&tc.group).unwrap();
        let fams = rational_irreps(&tbl);
        let dims = rojas_dimensions(&tc.group, &tc.vector, &tbl, &fams).unwrap();
        let subs = tc.group.all_subgroups().unwrap();
        let all_match = subs.iter().all(|h| {
            carocca_rodriguez_genus(&tc.group, &tbl, &fams, &dims, h).ok()
                == Some(quotient_genus(&tc.group, &tc.vector, h).0)
        });
        c.check(
            format!(
                "case {} m={m}: both genus routes agree on all {} subgroups",
                case.label(),
                subs.len()
            ),
            all_match,
        );
    }
    c.finish();
}

#[test]
fn criterion_14_census() {
    let mut c = Criterion::new(14, "generating-vector census");
    for q in [3u32, 5, 7] {
        let m = 2 * q;
        let g = build_semidirect(m, SemidirectAction::I).unwrap();
        let census =
            enumerate_generating_vectors(&g, &Signature::new(0, vec![2, m, 2 * m])).unwrap();
        c.check(
            format!("case 1 q={q}: unique orbit (found {})", census.aut_orbit_count),
            census.aut_orbit_count == 1,
        );
    }
    for m in [6u32, 9] {
        let g = build_semidirect(m, SemidirectAction::II).unwrap();
        let census =
            enumerate_generating_vectors(&g, &Signature::new(0, vec![2, m, m])).unwrap();
        c.check(
            format!("case 2a m={m}: unique orbit (found {})", census.aut_orbit_count),
            census.aut_orbit_count == 1,
        );
    }
    for m in [8u32, 16] {
        let g = build_semidirect(m, SemidirectAction::I).unwrap();
        let census =
            enumerate_generating_vectors(&g, &Signature::new(0, vec![2, m, m])).unwrap();
        c.check(
            format!("case 2b m={m}: unique orbit (found {})", census.aut_orbit_count),
            census.aut_orbit_count == 1,
        );
    }
    for m in [12u32, 24] {
        let sig = Signature::new(0, vec![2, m, m]);
        let c1 = enumerate_generating_vectors(
            &build_semidirect(m, SemidirectAction::I).unwrap(),
            &sig,
        )
        .unwrap();
        let c2 = enumerate_generating_vectors(
            &build_semidirect(m, SemidirectAction::II).unwrap(),
            &sig,
        )
        .unwrap();
        let total = c1.aut_orbit_count + c2.aut_orbit_count;
        // As stated the total must be 2; the computed total is 3: the
        // order-3 action contributes two orbits, distinguished by the
        // central part of the involution entry (an Aut-invariant), on
        // top of the order-2 action's single orbit.
        c.check(
            format!(
                "m={m}: total orbits across both actions = 2 — computed {} + {} = {total}",
                c1.aut_orbit_count, c2.aut_orbit_count
            ),
            total == 2,
        );
    }
    c.finish();
}

#[test]
fn criterion_15_fermat_action() {
    let mut c = Criterion::new(15, "generalized Fermat cover action");
    for m in [5u32, 6, 8] {
        let r = verify_fermat_action(m).unwrap();
        c.check(
            format!("m={m}: solved rotation covers the branch rotation"),
            r.rotation_preserves_curve && r.rotation_covers_moebius,
        );
        c.check(format!("m={m}: T a_j = a_(j+1) T"), r.shift_conjugation);
        c.check(
            format!("m={m}: U^2 is a deck sign map and U covers the branch involution"),
            r.involution_preserves_curve
                && r.involution_square_in_deck
                && r.involution_covers_moebius,
        );
        let gc = fermat_genus(m);
        c.check(
            format!("m={m}: 1 + (g_C - 1)/2^(m-3) = m - 3 with g_C = {gc}"),
            1 + (gc - 1) / (1u128 << (m - 3)) == (m as u128) - 3,
        );
    }
    // branch data at the same m values backs the lambda bookkeeping
    for m in [5u32, 6, 8] {
        c.check(format!("m={m}: branch data verifies"), branch_data(m).is_ok());
    }
    c.budget(120.0);
    c.finish();
}
