use num_rational::BigRational;
use num_traits::{One, Signed};

use super::graph::{tighten_path, DirEdge, MarkedMetricGraph};
use super::loops::{immerse, GraphLoop};
use crate::error::{Error, Result};
use crate::words::{Automorphism, CyclicWord, Word};

/// Spell a word as a closed edge path at the base, through the marking.
pub fn substitute(g: &MarkedMetricGraph, w: &Word) -> Vec<DirEdge> {
    let mut raw = Vec::new();
    for x in w.letters() {
        let petal = &g.marking()[x.gen()];
        if x.is_inverse() {
            raw.extend(petal.iter().rev().map(|d| d.inverse()));
        } else {
            raw.extend_from_slice(petal);
        }
    }
    tighten_path(&raw)
}

/// Right action by precomposition of the marking.
///
/// The underlying metric graph is unchanged and
/// `ℓ(α | act(φ, G)) = ℓ(φ(α) | G)`.
pub fn act(phi: &Automorphism, g: &MarkedMetricGraph) -> Result<MarkedMetricGraph> {
    act_with_inverse(phi, &phi.inverse(), g)
}

/// [`act`] with a precomputed inverse of `phi`.
pub fn act_with_inverse(
    phi: &Automorphism,
    phi_inv: &Automorphism,
    g: &MarkedMetricGraph,
) -> Result<MarkedMetricGraph> {
    if phi.rank() != g.rank() {
        return Err(Error::RankMismatch(phi.rank(), g.rank()));
    }
    let mut parts = g.to_parts();
    parts.marking = phi.images().iter().map(|w| substitute(g, w)).collect();
    let transfers = g.transfers().iter().map(|t| phi_inv.apply_word(t)).collect();
    Ok(MarkedMetricGraph::from_trusted(parts, transfers))
}

/// Scale the edges of an embedded loop by `s` and every other edge by
/// `(1 − sℓ)/(1 − ℓ)`, where `ℓ` is the loop's length. Volume stays one and the
/// loop's new length is `sℓ`.
pub fn rescale_loop(g: &MarkedMetricGraph, lp: &GraphLoop, s: &BigRational) -> Result<MarkedMetricGraph> {
    if !s.is_positive() {
        return Err(Error::Domain(format!("scale factor {s} must be positive")));
    }
    if !lp.is_embedded(g) {
        return Err(Error::NotEmbedded(lp.describe(g)));
    }
    let l = lp.length(g);
    let one = BigRational::one();
    if l >= one {
        return Err(Error::Domain("loop carries the whole volume".into()));
    }
    let rest = &one - s * &l;
    if !rest.is_positive() {
        return Err(Error::Domain(format!("scaling by {s} would exhaust the volume")));
    }
    let other = rest / (&one - &l);
    let on_loop = lp.crossings(g.edges().len());
    let lengths = g
        .edges()
        .iter()
        .zip(on_loop)
        .map(|(e, c)| if c > 0 { &e.length * s } else { &e.length * &other })
        .collect();
    g.with_lengths(lengths)
}

/// The pinched graph `H_σ`: the embedded loop `alpha` scaled by `sigma ∈ (0, 1]`.
pub fn pinch_loop(g: &MarkedMetricGraph, alpha: &CyclicWord, sigma: &BigRational) -> Result<MarkedMetricGraph> {
    if !sigma.is_positive() || *sigma > BigRational::one() {
        return Err(Error::Domain(format!("sigma {sigma} outside (0, 1]")));
    }
    let lp = immerse(alpha, g)?;
    if !lp.is_embedded(g) {
        return Err(Error::NotEmbedded(alpha.to_string()));
    }
    rescale_loop(g, &lp, sigma)
}

/// Certified upper bound `log((1 − σℓ)/(1 − ℓ))` on `d(G, H_σ)` for the pinch of a loop of length `ℓ`.
pub fn pinch_distance_bound(loop_len: &BigRational, sigma: &BigRational) -> f64 {
    let one = BigRational::one();
    crate::num::ln_rational(&((&one - sigma * loop_len) / (&one - loop_len)))
}
