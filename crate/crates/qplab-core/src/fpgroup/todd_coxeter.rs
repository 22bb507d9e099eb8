//! HLT-style Todd–Coxeter coset enumeration with lookahead.
//!
//! Cosets are right cosets of the target subgroup, acted on by right
//! multiplication. Coset numbering is deterministic (first-appearance
//! order during the enumeration, then a standardizing BFS renumbering),
//! so identical inputs always produce identical tables.

use std::collections::BTreeMap;

use super::{FpError, Presentation, Word};
use crate::group::FiniteGroup;

const UNDEF: u32 = u32::MAX;

/// Complete coset table for a finite-index subgroup.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub ngens: usize,
    pub ncosets: usize,
    /// action[col][c] = image of coset c; col 2k is generator k, col 2k+1
    /// its inverse.
    action: Vec<Vec<u32>>,
    /// The subgroup generators the table was built for.
    pub subgroup_words: Vec<Word>,
    /// BFS word reaching each coset from coset 0.
    words: Vec<Word>,
}

fn col_of(letter: i32) -> usize {
    if letter > 0 {
        ((letter - 1) as usize) * 2
    } else {
        ((-letter - 1) as usize) * 2 + 1
    }
}

fn inv_col(col: usize) -> usize {
    col ^ 1
}

impl CosetTable {
    pub fn apply_letter(&self, c: u32, letter: i32) -> u32 {
        self.action[col_of(letter)][c as usize]
    }

    pub fn apply_word(&self, mut c: u32, word: &[i32]) -> u32 {
        for &l in word {
            c = self.apply_letter(c, l);
        }
        c
    }

    /// Index of the subgroup, i.e. the number of cosets.
    pub fn index(&self) -> usize {
        self.ncosets
    }

    /// Representative word for a coset (from the BFS tree).
    pub fn coset_word(&self, c: u32) -> &Word {
        &self.words[c as usize]
    }

    /// Checks, independently of the enumeration, that every relator acts
    /// trivially everywhere and every subgroup word fixes coset 0.
    pub fn validate(&self, p: &Presentation) -> bool {
        for r in &p.relators {
            for c in 0..self.ncosets as u32 {
                if self.apply_word(c, r) != c {
                    return false;
                }
            }
        }
        self.subgroup_words
            .iter()
            .all(|w| self.apply_word(0, w) == 0)
    }

    /// True iff the subgroup is normal: every subgroup generator must act
    /// trivially on every coset (the subgroup equals the kernel of the
    /// coset action exactly in that case).
    pub fn is_normal(&self) -> bool {
        self.subgroup_words
            .iter()
            .all(|w| (0..self.ncosets as u32).all(|c| self.apply_word(c, w) == c))
    }

    /// For an enumeration over the trivial subgroup (or any normal one),
    /// the group structure carried by the coset action.
    pub fn quotient_group(&self, p: &Presentation) -> Result<FiniteGroup, FpError> {
        if self.ncosets > crate::group::MAX_ORDER {
            return Err(FpError::GroupTooLarge(self.ncosets));
        }
        let n = self.ncosets;
        let mut table = vec![0u32; n * n];
        for i in 0..n as u32 {
            for j in 0..n {
                table[i as usize * n + j] = self.apply_word(i, &self.words[j]);
            }
        }
        let mut distinguished = BTreeMap::new();
        for (k, name) in p.gen_names.iter().enumerate() {
            distinguished.insert(name.clone(), self.apply_letter(0, (k + 1) as i32));
        }
        FiniteGroup::from_table(table, None, distinguished)
            .map_err(|_| FpError::ChainInconsistent("coset action is not a group".into()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ngens": self.ngens,
            "ncosets": self.ncosets,
            "action": self.action,
        })
    }
}

struct Enumerator<'a> {
    p: &'a Presentation,
    max_cosets: usize,
    /// rows[c][col]; dead rows keep stale entries, resolved through find().
    rows: Vec<Vec<u32>>,
    rep: Vec<u32>,
    live: usize,
    merges: usize,
}

impl<'a> Enumerator<'a> {
    fn new(p: &'a Presentation, max_cosets: usize) -> Self {
        let mut e = Enumerator {
            p,
            max_cosets,
            rows: Vec::new(),
            rep: Vec::new(),
            live: 0,
            merges: 0,
        };
        e.new_coset();
        e
    }

    fn new_coset(&mut self) -> u32 {
        let c = self.rows.len() as u32;
        self.rows.push(vec![UNDEF; self.p.ngens() * 2]);
        self.rep.push(c);
        self.live += 1;
        c
    }

    fn find(&mut self, mut c: u32) -> u32 {
        while self.rep[c as usize] != c {
            let r = self.rep[self.rep[c as usize] as usize];
            self.rep[c as usize] = r;
            c = r;
        }
        c
    }

    fn is_live(&mut self, c: u32) -> bool {
        self.find(c) == c
    }

    fn get(&mut self, c: u32, col: usize) -> u32 {
        let e = self.rows[c as usize][col];
        if e == UNDEF {
            UNDEF
        } else {
            let r = self.find(e);
            self.rows[c as usize][col] = r;
            r
        }
    }

    fn set_pair(&mut self, c: u32, col: usize, d: u32) {
        self.rows[c as usize][col] = d;
        self.rows[d as usize][inv_col(col)] = c;
    }

    /// Merges the coset classes of a and b, migrating table entries.
    fn coincide(&mut self, a: u32, b: u32) {
        let mut stack = vec![(a, b)];
        while let Some((x, y)) = stack.pop() {
            let x = self.find(x);
            let y = self.find(y);
            if x == y {
                continue;
            }
            let (keep, kill) = if x < y { (x, y) } else { (y, x) };
            self.rep[kill as usize] = keep;
            self.live -= 1;
            self.merges += 1;
            for col in 0..self.p.ngens() * 2 {
                let t = self.rows[kill as usize][col];
                if t == UNDEF {
                    continue;
                }
                self.rows[kill as usize][col] = UNDEF;
                let t = self.find(t);
                let existing = self.get(keep, col);
                if existing == UNDEF {
                    self.rows[keep as usize][col] = t;
                    let back = self.get(t, inv_col(col));
                    if back == UNDEF {
                        self.rows[t as usize][inv_col(col)] = keep;
                    } else if back != keep {
                        stack.push((back, keep));
                    }
                } else if existing != t {
                    stack.push((existing, t));
                }
            }
        }
    }

    /// Scans `word` at coset c, requiring c . word = c; fills gaps with
    /// new cosets when `fill` is set.
    fn scan(&mut self, c: u32, word: &[i32], fill: bool) -> Result<(), FpError> {
        let mut c = self.find(c);
        loop {
            // forward
            let mut f = c;
            let mut i = 0;
            while i < word.len() {
                let next = self.get(f, col_of(word[i]));
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == word.len() {
                if f != c {
                    self.coincide(f, c);
                }
                return Ok(());
            }
            // backward
            let mut b = c;
            let mut j = word.len();
            while j > i {
                let prev = self.get(b, inv_col(col_of(word[j - 1])));
                if prev == UNDEF {
                    break;
                }
                b = prev;
                j -= 1;
            }
            if j == i {
                self.coincide(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set_pair(f, col_of(word[i]), b);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            if self.live >= self.max_cosets {
                return Err(FpError::CosetLimitExceeded(self.max_cosets));
            }
            let n = self.new_coset();
            self.set_pair(f, col_of(word[i]), n);
            c = self.find(c);
        }
    }

    /// Relator scan over every live coset without definitions, picking up
    /// deductions and coincidences (the HLT lookahead pass).
    fn lookahead(&mut self) {
        let relators = self.p.relators.clone();
        for c in 0..self.rows.len() as u32 {
            if !self.is_live(c) {
                continue;
            }
            for r in &relators {
                let _ = self.scan(c, r, false);
                if !self.is_live(c) {
                    break;
                }
            }
        }
    }

    fn run(&mut self, subgroup_words: &[Word]) -> Result<(), FpError> {
        let relators = self.p.relators.clone();
        for w in subgroup_words {
            self.scan(0, w, true)?;
        }
        // hard stop for runaway enumerations that keep collapsing
        let definition_budget = self.max_cosets.saturating_mul(100).max(10_000);
        loop {
            let merges_before = self.merges;
            let mut cursor: u32 = 0;
            while (cursor as usize) < self.rows.len() {
                if !self.is_live(cursor) {
                    cursor += 1;
                    continue;
                }
                for r in &relators {
                    match self.scan(cursor, r, true) {
                        Ok(()) => {}
                        Err(e) => {
                            self.lookahead();
                            if self.live >= self.max_cosets {
                                return Err(e);
                            }
                            self.scan(cursor, r, true)?;
                        }
                    }
                    if !self.is_live(cursor) {
                        break;
                    }
                }
                if self.is_live(cursor) {
                    for col in 0..self.p.ngens() * 2 {
                        if !self.is_live(cursor) {
                            break;
                        }
                        if self.get(cursor, col) == UNDEF {
                            if self.live >= self.max_cosets {
                                return Err(FpError::CosetLimitExceeded(self.max_cosets));
                            }
                            let n = self.new_coset();
                            self.set_pair(cursor, col, n);
                        }
                    }
                }
                if self.rows.len() > definition_budget {
                    return Err(FpError::CosetLimitExceeded(self.max_cosets));
                }
                cursor += 1;
            }
            // verification pass: rescan everything without definitions
            for w in subgroup_words {
                self.scan(0, w, false)?;
            }
            self.lookahead();
            if self.merges == merges_before {
                return Ok(());
            }
        }
    }

    /// Standardized table: BFS renumbering over columns in order.
    fn into_table(mut self, subgroup_words: Vec<Word>) -> CosetTable {
        let root = self.find(0);
        let ncols = self.p.ngens() * 2;
        let mut number = vec![UNDEF; self.rows.len()];
        let mut order: Vec<u32> = Vec::new();
        let mut words: Vec<Word> = Vec::new();
        number[root as usize] = 0;
        order.push(root);
        words.push(Vec::new());
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            for col in 0..ncols {
                let d = self.get(c, col);
                assert!(d != UNDEF, "table incomplete after enumeration");
                if number[d as usize] == UNDEF {
                    number[d as usize] = order.len() as u32;
                    let letter = if col % 2 == 0 {
                        (col / 2 + 1) as i32
                    } else {
                        -((col / 2 + 1) as i32)
                    };
                    let mut w = words[head].clone();
                    w.push(letter);
                    order.push(d);
                    words.push(w);
                }
            }
            head += 1;
        }
        assert_eq!(order.len(), self.live, "all live cosets reachable");
        let n = order.len();
        let mut action = vec![vec![0u32; n]; ncols];
        for (new_c, &old_c) in order.iter().enumerate() {
            for col in 0..ncols {
                let img = self.get(old_c, col);
                action[col][new_c] = number[img as usize];
            }
        }
        CosetTable {
            ngens: self.p.ngens(),
            ncosets: n,
            action,
            subgroup_words,
            words,
        }
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup_words`;
/// errors out once more than `max_cosets` cosets are alive at once.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup_words: &[Word],
    max_cosets: usize,
) -> Result<CosetTable, FpError> {
    let mut e = Enumerator::new(p, max_cosets.max(2));
    e.run(subgroup_words)?;
    let table = e.into_table(subgroup_words.to_vec());
    assert!(table.validate(p), "enumeration produced an invalid table");
    Ok(table)
}

/// Concrete group on the cosets of the trivial subgroup (regular action),
/// with the presentation's generators distinguished by name.
pub fn cayley_from_presentation(
    p: &Presentation,
    max_cosets: usize,
) -> Result<FiniteGroup, FpError> {
    let table = todd_coxeter(p, &[], max_cosets)?;
    table.quotient_group(p)
}
