//! Permutations in one-line notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation, checking that `word` is a bijection on `1..=n`.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidInput(format!(
                    "{word:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.word
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.word
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    pub fn reverse(&self) -> Self {
        let mut word = self.word.clone();
        word.reverse();
        Permutation { word }
    }

    pub fn complement(&self) -> Self {
        let n = self.word.len() as u32 + 1;
        Permutation {
            word: self.word.iter().map(|&v| n - v).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut word = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word }
    }

    /// Rotation by 180 degrees, i.e. reverse followed by complement.
    pub fn rotate180(&self) -> Self {
        self.reverse().complement()
    }

    /// Number of descents, `|{i : w_i > w_{i+1}}|`.
    pub fn descents(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Advances to the lexicographic successor in place; returns `false` at the last permutation.
    pub fn next_lex(&mut self) -> bool {
        next_lex(&mut self.word)
    }

    /// Writes the permutation in the parenthesized style used for multi-digit letters,
    /// e.g. `(15)(17)(16)9(10)`.
    pub fn to_compact_string(&self) -> String {
        self.word
            .iter()
            .map(|v| {
                if *v >= 10 {
                    format!("({v})")
                } else {
                    v.to_string()
                }
            })
            .collect()
    }
}

/// Steps `word` to its lexicographic successor. Returns `false` (leaving `word`
/// untouched) if it is already the decreasing word.
pub fn next_lex(word: &mut [u32]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] > word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] < word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// The reduced form of a sequence of distinct integers: the `i`-th smallest entry becomes `i`.
pub fn reduce<T: Ord + Copy>(seq: &[T]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..seq.len()).collect();
    order.sort_by_key(|&i| seq[i]);
    let mut word = vec![0u32; seq.len()];
    for (rank, &i) in order.iter().enumerate() {
        if rank > 0 && seq[order[rank - 1]] == seq[i] {
            return Err(Error::InvalidInput(
                "cannot reduce a sequence with repeated entries".into(),
            ));
        }
        word[i] = rank as u32 + 1;
    }
    Ok(Permutation { word })
}

/// Iterator over all permutations of length `n` in lexicographic order.
pub struct LexPermutations {
    current: Option<Vec<u32>>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let word = self.current.as_mut()?;
        let out = Permutation { word: word.clone() };
        if !next_lex(word) {
            self.current = None;
        }
        Some(out)
    }
}

pub fn all_permutations(n: usize) -> LexPermutations {
    LexPermutations {
        current: Some((1..=n as u32).collect()),
    }
}

impl fmt::Display for Permutation {
    /// Space-separated one-line notation; the empty permutation prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("()");
        }
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts space/comma separated letters (`15 17 16 9`), the parenthesized
    /// notation where letters above 9 are wrapped (`(15)(17)(16)9`), or a bare
    /// digit string for n ≤ 9 (`132`). `()` and the empty string give the empty permutation.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Permutation::empty());
        }
        let word = if s.contains('(') {
            parse_parenthesized(s)?
        } else if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad letter `{t}` in `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad letter `{c}` in `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(word)
    }
}

fn parse_parenthesized(s: &str) -> Result<Vec<u32>> {
    let mut word = Vec::new();
    let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
    while let Some(c) = chars.next() {
        match c {
            '(' => {
                let mut digits = String::new();
                loop {
                    match chars.next() {
                        Some(')') => break,
                        Some(d) if d.is_ascii_digit() => digits.push(d),
                        _ => return Err(Error::Parse(format!("unbalanced group in `{s}`"))),
                    }
                }
                word.push(
                    digits
                        .parse()
                        .map_err(|_| Error::Parse(format!("empty group in `{s}`")))?,
                );
            }
            d if d.is_ascii_digit() => word.push(d.to_digit(10).unwrap()),
            other => return Err(Error::Parse(format!("unexpected `{other}` in `{s}`"))),
        }
    }
    Ok(word)
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<u32>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.word
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&[3, 7, 5]).unwrap(), p("132"));
        assert_eq!(reduce::<u32>(&[]).unwrap(), Permutation::empty());
        assert_eq!(reduce(&[15, 17, 16]).unwrap(), p("132"));
        assert!(reduce(&[2, 5, 2]).is_err());
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
    }

    #[test]
    fn parses_all_notations() {
        let long = p("15 17 16 9 10 6 12 8 13 11 14 7 4 5 3 2 1");
        assert_eq!(p("(15)(17)(16)9(10)6(12)8(13)(11)(14)745321"), long);
        assert_eq!(
            long.to_compact_string(),
            "(15)(17)(16)9(10)6(12)8(13)(11)(14)745321"
        );
        assert_eq!(p("2,3,1"), p("231"));
        assert_eq!(p("()"), Permutation::empty());
        assert!("(12".parse::<Permutation>().is_err());
        assert!("1x2".parse::<Permutation>().is_err());
    }

    #[test]
    fn lex_enumeration_counts_and_order() {
        let all: Vec<_> = all_permutations(3).map(|p| p.to_string()).collect();
        assert_eq!(all, ["1 2 3", "1 3 2", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]);
        assert_eq!(all_permutations(0).count(), 1);
        assert_eq!(all_permutations(6).count(), 720);
    }

    #[test]
    fn symmetries() {
        let x = p("2413");
        assert_eq!(x.reverse(), p("3142"));
        assert_eq!(x.complement(), p("3142"));
        assert_eq!(x.inverse(), p("3142"));
        assert_eq!(p("231").inverse(), p("312"));
        assert_eq!(p("132").descents(), 1);
        assert_eq!(p("4321").descents(), 3);
    }
}
