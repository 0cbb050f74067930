use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank whose letters fit the `a..z` / `A..Z` alphabet.
pub const MAX_RANK: usize = 26;

/// A generator or inverse generator of the free group.
///
/// Letters are ordered `a < A < b < B < ...`; canonical cyclic words use this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    gen: u8,
    inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        assert!(gen < MAX_RANK, "generator index {gen} out of range");
        Letter { gen: gen as u8, inv: inverse }
    }

    pub fn gen(self) -> usize {
        self.gen as usize
    }

    pub fn is_inverse(self) -> bool {
        self.inv
    }

    /// +1 for a generator, -1 for an inverse.
    pub fn sign(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn to_char(self) -> char {
        let base = if self.inv { b'A' } else { b'a' };
        (base + self.gen) as char
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'a'..='z' => Some(Letter::new(c as usize - 'a' as usize, false)),
            'A'..='Z' => Some(Letter::new(c as usize - 'A' as usize, true)),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

/// Freely reduce a raw list of letters.
pub fn free_reduce(letters: &[Letter]) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &x in letters {
        if out.last() == Some(&x.inverse()) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    Word(out)
}

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(gen: usize) -> Self {
        Word(vec![Letter::new(gen, false)])
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let raw: Vec<Letter> = letters.into_iter().collect();
        free_reduce(&raw)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            if c == '1' && s.len() == 1 {
                break;
            }
            letters.push(Letter::from_char(c).ok_or_else(|| Error::WordParse(s.to_string()))?);
        }
        Ok(free_reduce(&letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|x| x.inverse()).collect())
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        for &x in &other.0 {
            if out.last() == Some(&x.inverse()) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        Word(out)
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Largest generator index used, if any.
    pub fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|x| x.gen()).max()
    }

    /// Exponent-sum vector in `Z^rank`.
    pub fn abelianization(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for x in &self.0 {
            v[x.gen()] += x.sign();
        }
        v
    }

    pub(crate) fn into_letters(self) -> Vec<Letter> {
        self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

/// A nontrivial conjugacy class, up to inversion, in canonical cyclic form.
///
/// The stored letters are the lexicographically least rotation among all
/// rotations of a cyclically reduced representative and of its inverse, so
/// equality of classes is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct CyclicWord(Vec<Letter>);

/// Cyclically reduce `w` and return the canonical representative of its class.
pub fn cyclic_reduce(w: &Word) -> Result<CyclicWord> {
    let core = cyclic_core(w.letters());
    if core.is_empty() {
        return Err(Error::TrivialClass);
    }
    Ok(CyclicWord(canonical_rotation(core)))
}

/// Strip matching inverse letters from both ends of a freely reduced word.
pub(crate) fn cyclic_core(w: &[Letter]) -> &[Letter] {
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == w[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    &w[lo..hi]
}

fn least_rotation(w: &[Letter]) -> usize {
    let n = w.len();
    let mut best = 0;
    for start in 1..n {
        for k in 0..n {
            let a = w[(start + k) % n];
            let b = w[(best + k) % n];
            if a != b {
                if a < b {
                    best = start;
                }
                break;
            }
        }
    }
    best
}

fn canonical_rotation(core: &[Letter]) -> Vec<Letter> {
    let n = core.len();
    let inv: Vec<Letter> = core.iter().rev().map(|x| x.inverse()).collect();
    let i = least_rotation(core);
    let j = least_rotation(&inv);
    let a: Vec<Letter> = (0..n).map(|k| core[(i + k) % n]).collect();
    let b: Vec<Letter> = (0..n).map(|k| inv[(j + k) % n]).collect();
    a.min(b)
}

impl CyclicWord {
    pub fn parse(s: &str) -> Result<Self> {
        cyclic_reduce(&Word::parse(s)?)
    }

    pub fn generator(gen: usize) -> Self {
        CyclicWord(vec![Letter::new(gen, false)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The canonical representative as a (cyclically reduced) word.
    pub fn as_word(&self) -> Word {
        Word(self.0.clone())
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|x| x.gen()).max()
    }

    pub fn abelianization(&self, rank: usize) -> Vec<i64> {
        self.as_word().abelianization(rank)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for CyclicWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CyclicWord::parse(s)
    }
}

impl From<CyclicWord> for String {
    fn from(w: CyclicWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for CyclicWord {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        CyclicWord::parse(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w("aAb").to_string(), "b");
        assert!(w("").is_empty());
        assert_eq!(w("abBa").to_string(), "aa");
    }

    #[test]
    fn cyclic_reduce_examples() {
        assert_eq!(CyclicWord::parse("Bab").unwrap().to_string(), "a");
        assert_eq!(CyclicWord::parse("ab").unwrap().to_string(), "ab");
        assert_eq!(CyclicWord::parse("abA").unwrap().to_string(), "b");
        assert_eq!(CyclicWord::parse("aA"), Err(Error::TrivialClass));
    }

    #[test]
    fn class_identifies_rotations_and_inverses() {
        let x = CyclicWord::parse("abc").unwrap();
        assert_eq!(x, CyclicWord::parse("bca").unwrap());
        assert_eq!(x, CyclicWord::parse("CBA").unwrap());
        assert_ne!(x, CyclicWord::parse("acb").unwrap());
    }

    #[test]
    fn mul_and_inverse() {
        let x = w("abC");
        assert!(x.mul(&x.inverse()).is_empty());
        assert_eq!(w("ab").mul(&w("Bc")).to_string(), "ac");
        assert_eq!(w("ab").pow(-2).to_string(), "BABA");
    }

    #[test]
    fn rejects_bad_characters() {
        assert!(Word::parse("ab1").is_err());
        assert!(Word::parse("a b").is_err());
    }
}
