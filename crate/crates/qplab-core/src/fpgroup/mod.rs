//! Finitely presented groups, handled exclusively through finite-index
//! coset tables.

mod chain;
mod todd_coxeter;

pub use chain::{subgroup_from_homomorphism_chain, ChainSpec};
pub use todd_coxeter::{cayley_from_presentation, todd_coxeter, CosetTable};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FpError {
    #[error("coset limit {0} exceeded before the table closed")]
    CosetLimitExceeded(usize),
    #[error("homomorphism chain is inconsistent: {0}")]
    ChainInconsistent(String),
    #[error("cannot parse presentation: {0}")]
    ParseError(String),
    #[error("resulting group too large: {0}")]
    GroupTooLarge(usize),
}

/// Freely reduced word in the generators: letter k > 0 is generator k-1,
/// letter -k is its inverse.
pub type Word = Vec<i32>;

pub fn free_reduce(word: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if l == 0 {
            continue;
        }
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn invert_word(word: &[i32]) -> Word {
    word.iter().rev().map(|&l| -l).collect()
}

pub fn concat_words(parts: &[&[i32]]) -> Word {
    let mut out = Vec::new();
    for p in parts {
        out.extend_from_slice(p);
    }
    free_reduce(&out)
}

pub fn word_pow(word: &[i32], e: i64) -> Word {
    let base: Word = if e < 0 { invert_word(word) } else { word.to_vec() };
    let mut out = Vec::new();
    for _ in 0..e.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    free_reduce(&out)
}

/// A presentation: generator names plus freely reduced relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub gen_names: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn new(gen_names: Vec<String>, relators: Vec<Word>) -> Self {
        Presentation {
            gen_names,
            relators: relators.iter().map(|w| free_reduce(w)).collect(),
        }
    }

    pub fn ngens(&self) -> usize {
        self.gen_names.len()
    }

    /// Parses "x^3", "(x*y)^2", "[u^2,t]^2" style relators; an "=" chain
    /// r1 = r2 = ... = rk produces the relators r1*r2^-1, ..., with "1"
    /// denoting the empty word. Single-letter generators may be juxtaposed
    /// ("ut" for u*t); the commutator [x,y] is x y x^-1 y^-1.
    pub fn parse(gens: &str, relator_lines: &[&str]) -> Result<Self, FpError> {
        let gen_names: Vec<String> = gens
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(str::to_string)
            .collect();
        if gen_names.is_empty() {
            return Err(FpError::ParseError("no generators".into()));
        }
        let mut relators = Vec::new();
        for line in relator_lines {
            let sides: Vec<&str> = line.split('=').map(str::trim).collect();
            let words = sides
                .iter()
                .map(|s| parse_word(s, &gen_names))
                .collect::<Result<Vec<_>, _>>()?;
            if words.len() == 1 {
                relators.push(free_reduce(&words[0]));
            } else {
                for pair in words.windows(2) {
                    relators.push(concat_words(&[&pair[0], &invert_word(&pair[1])]));
                }
            }
        }
        relators.retain(|w| !w.is_empty());
        Ok(Presentation::new(gen_names, relators))
    }

    pub fn word_to_string(&self, word: &[i32]) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        word.iter()
            .map(|&l| {
                let name = &self.gen_names[(l.unsigned_abs() - 1) as usize];
                if l > 0 {
                    name.clone()
                } else {
                    format!("{name}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub fn parse_word(s: &str, gen_names: &[String]) -> Result<Word, FpError> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let w = parse_seq(&chars, &mut pos, gen_names)?;
    if pos != chars.len() {
        return Err(FpError::ParseError(format!(
            "trailing input at {pos} in '{s}'"
        )));
    }
    Ok(free_reduce(&w))
}

fn parse_seq(chars: &[char], pos: &mut usize, gens: &[String]) -> Result<Word, FpError> {
    let mut out: Word = Vec::new();
    while *pos < chars.len() {
        match chars[*pos] {
            ')' | ',' | ']' => break,
            '*' => {
                *pos += 1;
            }
            _ => {
                let atom = parse_factor(chars, pos, gens)?;
                out.extend_from_slice(&atom);
            }
        }
    }
    Ok(out)
}

fn parse_factor(chars: &[char], pos: &mut usize, gens: &[String]) -> Result<Word, FpError> {
    let atom = parse_atom(chars, pos, gens)?;
    if *pos < chars.len() && chars[*pos] == '^' {
        *pos += 1;
        let mut neg = false;
        if *pos < chars.len() && chars[*pos] == '-' {
            neg = true;
            *pos += 1;
        }
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if start == *pos {
            return Err(FpError::ParseError("missing exponent".into()));
        }
        let e: i64 = chars[start..*pos].iter().collect::<String>().parse().unwrap();
        return Ok(word_pow(&atom, if neg { -e } else { e }));
    }
    Ok(atom)
}

fn parse_atom(chars: &[char], pos: &mut usize, gens: &[String]) -> Result<Word, FpError> {
    match chars.get(*pos) {
        Some('(') => {
            *pos += 1;
            let inner = parse_seq(chars, pos, gens)?;
            if chars.get(*pos) != Some(&')') {
                return Err(FpError::ParseError("unbalanced '('".into()));
            }
            *pos += 1;
            Ok(inner)
        }
        Some('[') => {
            *pos += 1;
            let left = parse_seq(chars, pos, gens)?;
            if chars.get(*pos) != Some(&',') {
                return Err(FpError::ParseError("commutator needs ','".into()));
            }
            *pos += 1;
            let right = parse_seq(chars, pos, gens)?;
            if chars.get(*pos) != Some(&']') {
                return Err(FpError::ParseError("unbalanced '['".into()));
            }
            *pos += 1;
            // [x, y] = x y x^-1 y^-1
            Ok(concat_words(&[
                &left,
                &right,
                &invert_word(&left),
                &invert_word(&right),
            ]))
        }
        Some('1') => {
            *pos += 1;
            Ok(Vec::new())
        }
        Some(&c) => {
            let name = c.to_string();
            let idx = gens
                .iter()
                .position(|g| *g == name)
                .ok_or_else(|| FpError::ParseError(format!("unknown generator '{c}'")))?;
            *pos += 1;
            Ok(vec![(idx + 1) as i32])
        }
        None => Err(FpError::ParseError("unexpected end of word".into())),
    }
}
