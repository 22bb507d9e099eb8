//! Constructors for the groups the verification pipeline needs.

use std::collections::BTreeMap;

use super::{FiniteGroup, GroupError};

/// The two conjugation actions of the cyclic factor on Z2^2 = <a, b>.
///
/// Case I:  t a t^-1 = a,  t b t^-1 = ab   (order-2 action, m must be even)
/// Case II: t a t^-1 = b,  t b t^-1 = ab   (order-3 action, 3 must divide m)
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SemidirectAction {
    I,
    II,
}

impl SemidirectAction {
    /// Action on the Klein four-group, elements encoded as 2-bit masks
    /// (bit 0 = a, bit 1 = b).
    fn apply(self, v: u32) -> u32 {
        let a = v & 1;
        let b = (v >> 1) & 1;
        match self {
            // a -> a, b -> ab
            SemidirectAction::I => (a ^ b) | (b << 1),
            // a -> b, b -> ab
            SemidirectAction::II => b | ((a ^ b) << 1),
        }
    }

    fn order(self) -> u32 {
        match self {
            SemidirectAction::I => 2,
            SemidirectAction::II => 3,
        }
    }
}

/// Z2^2 x| Zm of order 4m with distinguished generators a, b, t.
pub fn build_semidirect(m: u32, action: SemidirectAction) -> Result<FiniteGroup, GroupError> {
    if m < 3 || m % action.order() != 0 {
        return Err(GroupError::IncompatibleAction { action, m });
    }
    let order = (4 * m) as usize;
    if order > super::MAX_ORDER {
        return Err(GroupError::OrderTooLarge(order));
    }
    // element (v, k) = a^.. b^.. t^k  at index k*4 + v
    let idx = |v: u32, k: u32| (k * 4 + v) as usize;
    // powers of the action
    let mut act_pow: Vec<[u32; 4]> = Vec::with_capacity(m as usize);
    let mut cur = [0u32, 1, 2, 3];
    for _ in 0..m {
        act_pow.push(cur);
        cur = [
            action.apply(cur[0]),
            action.apply(cur[1]),
            action.apply(cur[2]),
            action.apply(cur[3]),
        ];
    }
    let mut table = vec![0u32; order * order];
    for k1 in 0..m {
        for v1 in 0..4u32 {
            for k2 in 0..m {
                for v2 in 0..4u32 {
                    // (v1, k1)(v2, k2) = (v1 + act^k1(v2), k1 + k2)
                    let v = v1 ^ act_pow[k1 as usize][v2 as usize];
                    let k = (k1 + k2) % m;
                    table[idx(v1, k1) * order + idx(v2, k2)] = idx(v, k) as u32;
                }
            }
        }
    }
    let mut names = Vec::with_capacity(order);
    for k in 0..m {
        for v in 0..4u32 {
            let mut s = String::new();
            if v & 1 != 0 {
                s.push('a');
            }
            if v & 2 != 0 {
                s.push('b');
            }
            match k {
                0 => {}
                1 => s.push('t'),
                _ => s.push_str(&format!("t^{k}")),
            }
            if s.is_empty() {
                s.push('1');
            }
            names.push(s);
        }
    }
    let mut distinguished = BTreeMap::new();
    distinguished.insert("a".to_string(), idx(1, 0) as u32);
    distinguished.insert("b".to_string(), idx(2, 0) as u32);
    distinguished.insert("ab".to_string(), idx(3, 0) as u32);
    distinguished.insert("t".to_string(), idx(0, 1) as u32);
    FiniteGroup::from_table(table, Some(names), distinguished)
}

pub fn cyclic(n: u32) -> FiniteGroup {
    let order = n as usize;
    let mut table = vec![0u32; order * order];
    for i in 0..order {
        for j in 0..order {
            table[i * order + j] = ((i + j) % order) as u32;
        }
    }
    let mut distinguished = BTreeMap::new();
    distinguished.insert("g".to_string(), 1.min(n - 1));
    FiniteGroup::from_table(table, None, distinguished).expect("cyclic group is valid")
}

pub fn klein() -> FiniteGroup {
    let mut g = direct_product(&cyclic(2), &cyclic(2));
    g.set_distinguished("a", 2); // (1, 0)
    g.set_distinguished("b", 1); // (0, 1)
    g.set_distinguished("ab", 3);
    g
}

/// Dihedral group of order 2m: (k, s) = r^k s^s.
pub fn dihedral(m: u32) -> FiniteGroup {
    let order = (2 * m) as usize;
    let idx = |k: u32, s: u32| (s * m + k) as usize;
    let mut table = vec![0u32; order * order];
    for k1 in 0..m {
        for s1 in 0..2u32 {
            for k2 in 0..m {
                for s2 in 0..2u32 {
                    // r^k1 s^s1 r^k2 s^s2 = r^(k1 +- k2) s^(s1+s2)
                    let k = if s1 == 0 { (k1 + k2) % m } else { (k1 + m - k2 % m) % m };
                    let s = (s1 + s2) % 2;
                    table[idx(k1, s1) * order + idx(k2, s2)] = idx(k, s) as u32;
                }
            }
        }
    }
    let mut distinguished = BTreeMap::new();
    distinguished.insert("r".to_string(), idx(1, 0) as u32);
    distinguished.insert("s".to_string(), idx(0, 1) as u32);
    FiniteGroup::from_table(table, None, distinguished).expect("dihedral group is valid")
}

/// Symmetric group on 4 letters, elements = permutations in lex order.
pub fn symmetric4() -> FiniteGroup {
    let perms = all_permutations(4);
    let order = perms.len();
    let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let mut table = vec![0u32; order * order];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            // composition (p then q reading right to left): (p*q)(x) = p(q(x))
            let comp: Vec<usize> = (0..4).map(|x| p[q[x]]).collect();
            table[i * order + j] = index_of(&comp) as u32;
        }
    }
    FiniteGroup::from_table(table, None, BTreeMap::new()).expect("S4 is valid")
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    permute(&mut cur, 0, &mut out);
    out.sort();
    out
}

fn permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, out);
        cur.swap(k, i);
    }
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let order = g.order() * h.order();
    assert!(order <= super::MAX_ORDER, "direct product too large");
    let nh = h.order();
    let idx = |x: u32, y: u32| (x as usize * nh + y as usize) as u32;
    let mut table = vec![0u32; order * order];
    for x1 in 0..g.order() as u32 {
        for y1 in 0..h.order() as u32 {
            for x2 in 0..g.order() as u32 {
                for y2 in 0..h.order() as u32 {
                    table[idx(x1, y1) as usize * order + idx(x2, y2) as usize] =
                        idx(g.mul(x1, x2), h.mul(y1, y2));
                }
            }
        }
    }
    FiniteGroup::from_table(table, None, BTreeMap::new()).expect("product of valid groups")
}
