use num_rational::BigRational;

use super::candidates::{candidates, CandidateSet};
use crate::error::{Error, Result};
use crate::graphs::{loop_length, MarkedMetricGraph};
use crate::num::ln_rational;
use crate::words::CyclicWord;

/// Largest stretch ratio `ℓ(α|H)/ℓ(α|G)` over the candidates of `G`, exactly,
/// with the maximizing class.
pub fn max_stretch(cands: &CandidateSet, h: &MarkedMetricGraph) -> Result<(BigRational, CyclicWord)> {
    if cands.rank != h.rank() {
        return Err(Error::RankMismatch(cands.rank, h.rank()));
    }
    let mut best: Option<(BigRational, CyclicWord)> = None;
    for c in cands.iter() {
        let ratio = loop_length(&c.class, h)? / &c.length;
        if best.as_ref().is_none_or(|(b, _)| ratio > *b) {
            best = Some((ratio, c.class.clone()));
        }
    }
    best.ok_or_else(|| Error::InvalidGraph("graph has no candidates".into()))
}

/// `d(G, H)` from precomputed candidates of `G`.
pub fn lip_distance_from(cands: &CandidateSet, h: &MarkedMetricGraph) -> Result<f64> {
    Ok(ln_rational(&max_stretch(cands, h)?.0))
}

/// The Lipschitz distance `d(G, H) = max over candidates α of G of log(ℓ(α|H)/ℓ(α|G))`.
pub fn lip_distance(g: &MarkedMetricGraph, h: &MarkedMetricGraph) -> Result<f64> {
    if g.rank() != h.rank() {
        return Err(Error::RankMismatch(g.rank(), h.rank()));
    }
    lip_distance_from(&candidates(g), h)
}

/// `d(G, H) + d(H, G)`.
pub fn sym_distance(g: &MarkedMetricGraph, h: &MarkedMetricGraph) -> Result<f64> {
    Ok(lip_distance(g, h)? + lip_distance(h, g)?)
}

/// `max{d(G, H), d(H, G)}`.
pub fn diam_pair(g: &MarkedMetricGraph, h: &MarkedMetricGraph) -> Result<f64> {
    Ok(lip_distance(g, h)?.max(lip_distance(h, g)?))
}

/// Graphs bundled with their candidate sets, for repeated distance queries.
#[derive(Clone, Debug)]
pub struct Point {
    pub graph: MarkedMetricGraph,
    pub candidates: CandidateSet,
}

impl Point {
    pub fn new(graph: MarkedMetricGraph) -> Self {
        let candidates = candidates(&graph);
        Point { graph, candidates }
    }

    /// `d(self, other)`.
    pub fn dist_to(&self, other: &Point) -> Result<f64> {
        lip_distance_from(&self.candidates, &other.graph)
    }

    /// `max{d(self, other), d(other, self)}`.
    pub fn diam_with(&self, other: &Point) -> Result<f64> {
        Ok(self.dist_to(other)?.max(other.dist_to(self)?))
    }
}
