//! Whitehead automorphisms and length reduction.
//!
//! Primitivity and joint primitivity are decided by steepest descent on cyclic
//! length. Whitehead's theorem says a tuple of cyclic words that is not of
//! minimal length in its orbit always admits a strictly length-reducing
//! multiplier move, so the descent never stalls above the minimum.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::auto::{check_rank, Automorphism};
use super::word::{cyclic_core, cyclic_reduce, free_reduce, CyclicWord, Letter, Word};
use crate::error::{Error, Result};

/// A multiplier move `(A, m)`: `A` is a set of letters containing `m` but not `m⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WhiteheadMove {
    mult: Letter,
    set: u64,
}

fn letter_bit(x: Letter) -> u64 {
    1u64 << (2 * x.gen() + x.is_inverse() as usize)
}

impl WhiteheadMove {
    pub fn multiplier(&self) -> Letter {
        self.mult
    }

    pub fn contains(&self, x: Letter) -> bool {
        self.set & letter_bit(x) != 0
    }

    fn push_image(&self, x: Letter, out: &mut Vec<Letter>) {
        if x.gen() == self.mult.gen() {
            out.push(x);
            return;
        }
        let m = self.mult;
        match (self.contains(x), self.contains(x.inverse())) {
            (true, false) => out.extend([x, m]),
            (false, true) => out.extend([m.inverse(), x]),
            (true, true) => out.extend([m.inverse(), x, m]),
            (false, false) => out.push(x),
        }
    }

    /// Image of a letter sequence, freely reduced.
    pub fn apply_letters(&self, w: &[Letter]) -> Vec<Letter> {
        let mut raw = Vec::with_capacity(w.len() * 3);
        for &x in w {
            self.push_image(x, &mut raw);
        }
        free_reduce(&raw).into_letters()
    }

    /// The inverse move `(A - m + m⁻¹, m⁻¹)`.
    pub fn inverse(&self) -> WhiteheadMove {
        let m = self.mult;
        WhiteheadMove { mult: m.inverse(), set: (self.set & !letter_bit(m)) | letter_bit(m.inverse()) }
    }

    pub fn to_automorphism(&self, rank: usize) -> Automorphism {
        let images = (0..rank)
            .map(|g| Word::from_letters(self.apply_letters(&[Letter::new(g, false)])))
            .collect();
        Automorphism::from_images_unchecked(images)
    }
}

/// All multiplier moves of the given rank whose action is not the identity.
pub fn multiplier_moves(rank: usize) -> Arc<Vec<WhiteheadMove>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<WhiteheadMove>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard.entry(rank).or_insert_with(|| Arc::new(build_multiplier_moves(rank))).clone()
}

fn build_multiplier_moves(rank: usize) -> Vec<WhiteheadMove> {
    let mut moves = Vec::new();
    for g in 0..rank {
        for inv in [false, true] {
            let m = Letter::new(g, inv);
            let others: Vec<Letter> = (0..rank)
                .filter(|&h| h != g)
                .flat_map(|h| [Letter::new(h, false), Letter::new(h, true)])
                .collect();
            for mask in 1u64..(1u64 << others.len()) {
                let mut set = letter_bit(m);
                for (i, &x) in others.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        set |= letter_bit(x);
                    }
                }
                moves.push(WhiteheadMove { mult: m, set });
            }
        }
    }
    moves
}

fn signed_permutations(rank: usize) -> Vec<Automorphism> {
    let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..rank {
        let mut next = Vec::new();
        for p in &perms {
            for g in 0..rank {
                if !p.contains(&g) {
                    let mut q = p.clone();
                    q.push(g);
                    next.push(q);
                }
            }
        }
        perms = next;
    }
    let mut out = Vec::new();
    for p in perms {
        for signs in 0u32..(1 << rank) {
            let images = (0..rank)
                .map(|i| Word::from_letters([Letter::new(p[i], signs >> i & 1 == 1)]))
                .collect();
            let phi = Automorphism::from_images_unchecked(images);
            if !phi.is_identity() {
                out.push(phi);
            }
        }
    }
    out
}

/// Every Whitehead automorphism of the given rank except the identity:
/// signed permutations first, then the multiplier moves.
pub fn whitehead_moves(rank: usize) -> Result<Vec<Automorphism>> {
    check_rank(rank)?;
    let mut out = signed_permutations(rank);
    out.extend(multiplier_moves(rank).iter().map(|m| m.to_automorphism(rank)));
    Ok(out)
}

fn cyclic_letters(w: &[Letter]) -> Vec<Letter> {
    cyclic_core(w).to_vec()
}

/// Result of reducing a tuple of cyclic words by steepest descent.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub words: Vec<Vec<Letter>>,
    /// Moves applied, in order.
    pub moves: Vec<WhiteheadMove>,
}

impl Reduction {
    pub fn total_len(&self) -> usize {
        self.words.iter().map(Vec::len).sum()
    }
}

/// Reduce the total cyclic length of a tuple of cyclically reduced words
/// in the given rank until no multiplier move shortens it.
pub fn reduce_tuple(rank: usize, words: &[&[Letter]]) -> Reduction {
    let moves = multiplier_moves(rank);
    let mut cur: Vec<Vec<Letter>> = words.iter().map(|w| cyclic_letters(w)).collect();
    let mut applied = Vec::new();
    let mut total: usize = cur.iter().map(Vec::len).sum();
    loop {
        let mut best: Option<(usize, Vec<Vec<Letter>>, WhiteheadMove)> = None;
        for mv in moves.iter() {
            let image: Vec<Vec<Letter>> =
                cur.iter().map(|w| cyclic_letters(&mv.apply_letters(w))).collect();
            let len: usize = image.iter().map(Vec::len).sum();
            if len < total && best.as_ref().is_none_or(|(b, _, _)| len < *b) {
                best = Some((len, image, *mv));
            }
        }
        match best {
            Some((len, image, mv)) => {
                total = len;
                cur = image;
                applied.push(mv);
            }
            None => break,
        }
    }
    Reduction { words: cur, moves: applied }
}

/// Number of generators actually needed to hold the given classes (at least `floor`).
fn support_rank(words: &[&CyclicWord], floor: usize) -> usize {
    words.iter().filter_map(|w| w.max_gen()).map(|g| g + 1).max().unwrap_or(0).max(floor)
}

/// Whitehead-minimal representative of a class.
pub fn minimize(w: &CyclicWord) -> CyclicWord {
    let rank = support_rank(&[w], 2);
    let red = reduce_tuple(rank, &[w.letters()]);
    cyclic_reduce(&Word::from_letters(red.words[0].clone())).expect("reduction preserves nontriviality")
}

/// True iff the class contains an element of a free basis.
///
/// A class supported on the first `k` generators is primitive in any rank
/// `r ≥ k` iff it is primitive in rank `k`, so the reduction runs in rank `k`.
pub fn is_primitive(w: &CyclicWord) -> bool {
    if w.len() == 1 {
        return true;
    }
    if w.max_gen() == Some(0) {
        return false;
    }
    let rank = support_rank(&[w], 2);
    reduce_tuple(rank, &[w.letters()]).total_len() == 1
}

/// True iff some representatives of `alpha` and `beta` extend to a common free basis.
pub fn joint_basis(alpha: &CyclicWord, beta: &CyclicWord) -> Result<bool> {
    for w in [alpha, beta] {
        if !is_primitive(w) {
            return Err(Error::NotPrimitive(w.to_string()));
        }
    }
    if alpha == beta {
        return Ok(false);
    }
    let rank = support_rank(&[alpha, beta], 2);
    Ok(reduce_tuple(rank, &[alpha.letters(), beta.letters()]).total_len() == 2)
}

/// An automorphism `psi` of the given rank with `psi(a)` in the class `alpha`,
/// with the remaining images kept short by greedy tightening.
pub fn primitive_frame(rank: usize, alpha: &CyclicWord) -> Result<Automorphism> {
    check_rank(rank)?;
    if alpha.max_gen().is_some_and(|g| g >= rank) {
        return Err(Error::RankMismatch(alpha.max_gen().unwrap() + 1, rank));
    }
    let red = reduce_tuple(rank, &[alpha.letters()]);
    if red.total_len() != 1 {
        return Err(Error::NotPrimitive(alpha.to_string()));
    }
    // theta = m_k ∘ … ∘ m_1 sends alpha to a generator class x_g.
    // psi = theta⁻¹ ∘ tau with tau swapping a and x_g.
    let g = red.words[0][0].gen();
    let mut tau_images: Vec<Word> = (0..rank).map(Word::generator).collect();
    tau_images.swap(0, g);
    let mut psi = Automorphism::from_images_unchecked(tau_images);
    for mv in red.moves.iter().rev() {
        psi = mv.inverse().to_automorphism(rank).compose(&psi);
    }
    Ok(tighten_frame(psi))
}

fn frame_weight(psi: &Automorphism) -> usize {
    psi.images().iter().map(Word::len).sum()
}

/// Precompose with moves fixing the class of `a` while the total image length drops.
fn tighten_frame(mut psi: Automorphism) -> Automorphism {
    let rank = psi.rank();
    let a = Letter::new(0, false);
    let allowed: Vec<Automorphism> = multiplier_moves(rank)
        .iter()
        .filter(|mv| mv.multiplier().gen() == 0 || mv.contains(a) == mv.contains(a.inverse()))
        .map(|mv| mv.to_automorphism(rank))
        .collect();
    let mut weight = frame_weight(&psi);
    loop {
        let mut best: Option<(usize, Automorphism)> = None;
        for sigma in &allowed {
            let cand = psi.compose(sigma);
            let w = frame_weight(&cand);
            if w < weight && best.as_ref().is_none_or(|(b, _)| w < *b) {
                best = Some((w, cand));
            }
        }
        match best {
            Some((w, cand)) => {
                weight = w;
                psi = cand;
            }
            None => return psi,
        }
    }
}
