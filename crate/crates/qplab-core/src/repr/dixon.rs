//! The Burnside–Dixon computation: class-algebra eigenvectors over GF(p),
//! degree recovery and exact lifting to Q(zeta_e).

use super::modular::{self as md, add, inv, mul, pow, sub};
use super::{CharacterTable, ReprError};
use crate::algebra::rational::rat_int;
use crate::algebra::Cyclotomic;
use crate::group::FiniteGroup;

pub fn character_table(group: &FiniteGroup) -> Result<CharacterTable, ReprError> {
    if group.order() > crate::group::MAX_ORDER {
        return Err(ReprError::OrderTooLarge(group.order()));
    }
    let n = group.order() as u64;
    let classes = group.conjugacy_classes();
    let class_of = group.class_index_map(&classes);
    let k = classes.len();
    let reps: Vec<u32> = classes.iter().map(|c| c[0]).collect();
    let exponent = group.exponent() as u64;
    let p = md::find_prime(exponent, n.max(2 * (n as f64).sqrt() as u64 + 1));
    let zeta_p = md::element_of_order(exponent, p);

    // class of the inverse of each representative
    let inv_class: Vec<usize> = reps
        .iter()
        .map(|&g| class_of[group.inv(g) as usize])
        .collect();

    // class-algebra matrices: m_i[j][l] = #\{(u,v) in C_i x C_j : uv = rep_l\}
    let mut mats: Vec<Vec<Vec<u64>>> = vec![vec![vec![0u64; k]; k]; k];
    for i in 0..k {
        for (l, &z) in reps.iter().enumerate() {
            for &u in &classes[i] {
                let v = group.mul(group.inv(u), z);
                mats[i][class_of[v as usize]][l] += 1;
            }
        }
    }

    // split GF(p)^k into common eigenspaces of the class matrices
    let identity_class = class_of[group.identity() as usize];
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    for mi in &mats {
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split_space(mi, &space, p));
        }
        spaces = next;
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
    }
    assert!(
        spaces.iter().all(|s| s.len() == 1),
        "class algebra failed to split into one-dimensional eigenspaces"
    );

    // central characters, normalized at the identity class
    let mut rows_mod_p: Vec<Vec<u64>> = Vec::with_capacity(k);
    let mut degrees: Vec<u64> = Vec::with_capacity(k);
    for space in &spaces {
        let w = &space[0];
        let wid = w[identity_class];
        assert!(wid != 0, "central character vanishes at the identity");
        let scale = inv(wid, p);
        let omega: Vec<u64> = w.iter().map(|&x| mul(x, scale, p)).collect();
        // 1/d^2 = (1/n) sum_l omega_l omega_{l*} / |C_l|
        let mut s = 0u64;
        for l in 0..k {
            let term = mul(
                mul(omega[l], omega[inv_class[l]], p),
                inv(classes[l].len() as u64, p),
                p,
            );
            s = add(s, term, p);
        }
        let d2 = mul(n % p, inv(s, p), p);
        let mut deg = 0u64;
        for d in 1..=n {
            if d * d > n {
                break;
            }
            if mul(d, d, p) == d2 {
                deg = d;
                break;
            }
        }
        assert!(deg > 0, "no integer degree matches the modular value");
        // chi(C_l) = deg * omega_l / |C_l| mod p
        let chi: Vec<u64> = (0..k)
            .map(|l| mul(mul(deg, omega[l], p), inv(classes[l].len() as u64, p), p))
            .collect();
        degrees.push(deg);
        rows_mod_p.push(chi);
    }

    // power map on classes: pc[l][s] = class of rep_l^s
    let lift_row = |chi: &[u64]| -> Vec<Cyclotomic> {
        (0..k)
            .map(|l| {
                let g = reps[l];
                let ng = group.element_order(g) as u64;
                let z = pow(zeta_p, exponent / ng, p);
                let ng_inv = inv(ng, p);
                let mut value = Cyclotomic::zero();
                for t in 0..ng {
                    // multiplicity of the eigenvalue zeta_ng^t
                    let mut mt = 0u64;
                    for s in 0..ng {
                        let cls = class_of[group.pow(g, s as i64) as usize];
                        let term = mul(chi[cls], pow(inv(z, p), (t * s) % exponent.max(1), p), p);
                        mt = add(mt, term, p);
                    }
                    mt = mul(mt, ng_inv, p);
                    assert!(mt <= n, "eigenvalue multiplicity out of range");
                    if mt > 0 {
                        let root = Cyclotomic::zeta_pow(ng as u32, t as i64);
                        value = value.add(&root.scale(&rat_int(mt as i64)));
                    }
                }
                value.embed(exponent as u32)
            })
            .collect()
    };

    let mut rows: Vec<Vec<Cyclotomic>> = rows_mod_p.iter().map(|chi| lift_row(chi)).collect();

    // canonical order: by degree, then lexicographic on values
    rows.sort_by(|a, b| {
        let da = a[identity_class].cmp_canonical(&b[identity_class]);
        if da != std::cmp::Ordering::Equal {
            return da;
        }
        for (x, y) in a.iter().zip(b.iter()) {
            let c = x.cmp_canonical(y);
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    });

    let table = CharacterTable {
        group: group.clone(),
        classes,
        class_of,
        exponent: exponent as u32,
        values: rows,
    };
    validate(&table);
    Ok(table)
}

fn validate(tbl: &CharacterTable) {
    let k = tbl.classes.len();
    assert_eq!(tbl.values.len(), k, "row count equals class count");
    // sum of squared degrees
    let order: u32 = tbl.degrees().iter().map(|d| d * d).sum();
    assert_eq!(order as usize, tbl.group.order(), "sum d_i^2 = |G|");
    // row orthogonality
    for i in 0..k {
        for j in 0..k {
            let ip = tbl.inner_product(i, j);
            if i == j {
                assert!(ip.is_one(), "row {i} not unit norm");
            } else {
                assert!(ip.is_zero(), "rows {i},{j} not orthogonal");
            }
        }
    }
    // column orthogonality: sum_i chi_i(C_a) conj(chi_i(C_b)) = delta |C_G(a)|
    for a in 0..k {
        for b in 0..k {
            let mut s = Cyclotomic::zero();
            for i in 0..k {
                s = s.add(&tbl.values[i][a].mul(&tbl.values[i][b].conj()));
            }
            if a == b {
                let centralizer = tbl.group.order() / tbl.classes[a].len();
                assert_eq!(s, Cyclotomic::from_integer(centralizer as i64));
            } else {
                assert!(s.is_zero(), "columns {a},{b} not orthogonal");
            }
        }
    }
}

/// Splits a subspace (given by basis columns) into the eigenspaces of m.
fn split_space(m: &[Vec<u64>], basis: &[Vec<u64>], p: u64) -> Vec<Vec<Vec<u64>>> {
    let k = basis[0].len();
    let d = basis.len();
    // restriction r of m to the subspace: m * b_j = sum_i r[i][j] b_i
    let mut echelon: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new(); // (pivot, vec, coords)
    for (j, b) in basis.iter().enumerate() {
        let mut v = b.clone();
        let mut coords = vec![0u64; d];
        coords[j] = 1;
        reduce_against(&mut v, &mut coords, &echelon, p);
        let piv = v.iter().position(|&x| x != 0).expect("independent basis");
        let piv_inv = inv(v[piv], p);
        for x in v.iter_mut() {
            *x = mul(*x, piv_inv, p);
        }
        for x in coords.iter_mut() {
            *x = mul(*x, piv_inv, p);
        }
        echelon.push((piv, v, coords));
    }
    let express = |target: &[u64], p: u64| -> Vec<u64> {
        let mut v = target.to_vec();
        let mut coords = vec![0u64; d];
        for (piv, ev, ec) in &echelon {
            if v[*piv] != 0 {
                let f = v[*piv];
                for i in 0..k {
                    v[i] = sub(v[i], mul(f, ev[i], p), p);
                }
                for i in 0..d {
                    coords[i] = add(coords[i], mul(f, ec[i], p), p);
                }
            }
        }
        assert!(v.iter().all(|&x| x == 0), "matrix does not preserve subspace");
        coords
    };
    let mut restriction = vec![vec![0u64; d]; d];
    for (j, b) in basis.iter().enumerate() {
        let img: Vec<u64> = (0..k)
            .map(|r| (0..k).fold(0, |acc, c| add(acc, mul(m[r][c], b[c], p), p)))
            .collect();
        let coords = express(&img, p);
        for i in 0..d {
            restriction[i][j] = coords[i];
        }
    }
    // eigenvalues from the characteristic polynomial
    let cp = md::char_poly(&restriction, p);
    let mut out = Vec::new();
    for lambda in 0..p {
        if md::eval_poly(&cp, lambda, p) != 0 {
            continue;
        }
        // kernel of (restriction - lambda I)
        let mut shifted = restriction.clone();
        for i in 0..d {
            shifted[i][i] = sub(shifted[i][i], lambda, p);
        }
        let ker = md::kernel_basis(&shifted, d, p);
        if ker.is_empty() {
            continue;
        }
        let sub_basis: Vec<Vec<u64>> = ker
            .iter()
            .map(|coords| {
                (0..k)
                    .map(|r| {
                        (0..d).fold(0, |acc, j| add(acc, mul(coords[j], basis[j][r], p), p))
                    })
                    .collect()
            })
            .collect();
        out.push(sub_basis);
    }
    let total: usize = out.iter().map(Vec::len).sum();
    assert_eq!(total, d, "eigenspaces must span (class algebra is semisimple)");
    out
}

fn reduce_against(
    v: &mut [u64],
    coords: &mut [u64],
    echelon: &[(usize, Vec<u64>, Vec<u64>)],
    p: u64,
) {
    for (piv, ev, ec) in echelon {
        if v[*piv] != 0 {
            let f = v[*piv];
            for i in 0..v.len() {
                v[i] = sub(v[i], mul(f, ev[i], p), p);
            }
            for i in 0..coords.len() {
                coords[i] = sub(coords[i], mul(f, ec[i], p), p);
            }
        }
    }
}
