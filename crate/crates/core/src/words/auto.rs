use std::fmt;

use serde::{Deserialize, Serialize};

use super::stallings;
use super::word::{cyclic_reduce, CyclicWord, Letter, Word, MAX_RANK};
use crate::error::{Error, Result};

/// An automorphism of the free group, given by the images of the generators.
///
/// Serialized as a comma-separated list of images, e.g. `"b,c,ab"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Automorphism {
    images: Vec<Word>,
}

impl Automorphism {
    /// Build from generator images, checking that they form a basis.
    pub fn new(images: Vec<Word>) -> Result<Self> {
        let rank = images.len();
        check_rank(rank)?;
        if !stallings::is_basis(rank, &images) {
            return Err(Error::NotABasis);
        }
        Ok(Automorphism { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<Word>) -> Self {
        Automorphism { images }
    }

    pub fn identity(rank: usize) -> Self {
        Automorphism { images: (0..rank).map(Word::generator).collect() }
    }

    /// Parse `"b,c,ab"`; the number of images fixes the rank.
    pub fn parse(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|part| Word::parse(part.trim()))
            .collect::<Result<Vec<_>>>()?;
        let rank = images.len();
        for w in &images {
            if let Some(g) = w.max_gen().filter(|&g| g >= rank) {
                return Err(Error::LetterOutOfRank(Letter::new(g, false).to_char(), rank));
            }
        }
        Automorphism::new(images)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| *w == Word::generator(i))
    }

    /// Image of a word.
    pub fn apply_word(&self, w: &Word) -> Word {
        let mut raw: Vec<Letter> = Vec::new();
        for &x in w.letters() {
            let img = &self.images[x.gen()];
            if x.is_inverse() {
                raw.extend(img.letters().iter().rev().map(|y| y.inverse()));
            } else {
                raw.extend_from_slice(img.letters());
            }
        }
        Word::from_letters(raw)
    }

    /// Image of a conjugacy class.
    pub fn apply(&self, w: &CyclicWord) -> CyclicWord {
        cyclic_reduce(&self.apply_word(&w.as_word())).expect("automorphisms preserve nontrivial classes")
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { images: other.images.iter().map(|w| self.apply_word(w)).collect() }
    }

    pub fn inverse(&self) -> Automorphism {
        let images = stallings::invert(self.rank(), &self.images).expect("automorphism images form a basis");
        Automorphism { images }
    }

    pub fn pow(&self, n: i64) -> Automorphism {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Automorphism::identity(self.rank());
        for _ in 0..n.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }
}

/// Image of the class `w` under `phi`.
pub fn apply_auto(phi: &Automorphism, w: &CyclicWord) -> Result<CyclicWord> {
    if let Some(g) = w.max_gen().filter(|&g| g >= phi.rank()) {
        return Err(Error::LetterOutOfRank(Letter::new(g, false).to_char(), phi.rank()));
    }
    Ok(phi.apply(w))
}

pub(crate) fn check_rank(rank: usize) -> Result<()> {
    if rank < 3 {
        return Err(Error::RankTooSmall(rank));
    }
    if rank > MAX_RANK {
        return Err(Error::Domain(format!("rank {rank} exceeds {MAX_RANK}")));
    }
    Ok(())
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl From<Automorphism> for String {
    fn from(phi: Automorphism) -> String {
        phi.to_string()
    }
}

impl TryFrom<String> for Automorphism {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        Automorphism::parse(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap()
    }

    #[test]
    fn nielsen_move_on_a() {
        let phi = Automorphism::parse("ab,b,c").unwrap();
        assert_eq!(phi.apply(&cw("a")), cw("ab"));
    }

    #[test]
    fn inverse_law() {
        let phi = Automorphism::parse("b,c,ab").unwrap();
        let id = phi.inverse().compose(&phi);
        assert!(id.is_identity());
        for s in ["a", "abC", "aabcB", "cAb"] {
            assert_eq!(phi.inverse().apply(&phi.apply(&cw(s))), cw(s));
        }
    }

    #[test]
    fn class_invariance() {
        let phi = Automorphism::parse("ab,b,c").unwrap();
        assert_eq!(phi.apply(&cw("Bab")), phi.apply(&cw("a")));
    }

    #[test]
    fn rejects_non_bases() {
        assert_eq!(Automorphism::parse("aa,b,c"), Err(Error::NotABasis));
        assert!(Automorphism::parse("a,b").is_err());
        assert!(Automorphism::parse("a,b,d").is_err());
    }

    #[test]
    fn pow_matches_repeated_compose() {
        let phi = Automorphism::parse("b,c,ab").unwrap();
        assert_eq!(phi.pow(3), phi.compose(&phi).compose(&phi));
        assert!(phi.pow(-2).compose(&phi.pow(2)).is_identity());
    }
}
