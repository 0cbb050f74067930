//! Builders for the graph shapes used throughout: roses, thetas, a rose with
//! a subdivided petal, theta-plus-loop, barbells, and the one- and two-petal
//! rose families.

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::graph::{DirEdge, Edge, GraphParts, MarkedMetricGraph};
use crate::error::{Error, Result};
use crate::num::rat;

fn build(
    rank: usize,
    vertex_count: usize,
    ends: &[(usize, usize)],
    lengths: Vec<BigRational>,
    marking: Vec<Vec<DirEdge>>,
    label: &str,
) -> Result<MarkedMetricGraph> {
    if lengths.len() != ends.len() {
        return Err(Error::Domain(format!("{label} needs {} lengths, got {}", ends.len(), lengths.len())));
    }
    let edges = ends
        .iter()
        .zip(lengths)
        .enumerate()
        .map(|(i, (&(from, to), length))| Edge { id: format!("e{}", i + 1), from, to, length })
        .collect();
    MarkedMetricGraph::new(GraphParts {
        rank,
        vertices: (0..vertex_count).map(|v| format!("v{v}")).collect(),
        edges,
        base: 0,
        marking,
        label: Some(label.to_string()),
    })
}

fn f(e: usize) -> DirEdge {
    DirEdge::forward(e)
}

fn b(e: usize) -> DirEdge {
    DirEdge::backward(e)
}

/// One vertex, petal `i` marked by generator `i`. Lengths must sum to one.
pub fn rose(lengths: Vec<BigRational>) -> Result<MarkedMetricGraph> {
    let rank = lengths.len();
    let ends = vec![(0, 0); rank];
    let marking = (0..rank).map(|i| vec![f(i)]).collect();
    build(rank, 1, &ends, lengths, marking, "rose")
}

pub fn uniform_rose(rank: usize) -> Result<MarkedMetricGraph> {
    rose(vec![rat(1, rank.max(1) as i64); rank])
}

/// `rank + 1` parallel edges `v0 → v1`; generator `i` is `e_i ē_{i+1}`.
pub fn theta(lengths: Vec<BigRational>) -> Result<MarkedMetricGraph> {
    let rank = lengths.len().saturating_sub(1);
    let ends = vec![(0, 1); rank + 1];
    let marking = (0..rank).map(|i| vec![f(i), b(i + 1)]).collect();
    build(rank, 2, &ends, lengths, marking, "theta")
}

/// A theta with `rank` parallel edges plus a loop at the base. Lengths list the
/// theta edges first, then the loop.
pub fn theta_plus_loop(lengths: Vec<BigRational>) -> Result<MarkedMetricGraph> {
    let rank = lengths.len().saturating_sub(1);
    let mut ends = vec![(0, 1); rank];
    ends.push((0, 0));
    let mut marking: Vec<Vec<DirEdge>> = (0..rank.saturating_sub(1)).map(|i| vec![f(i), b(i + 1)]).collect();
    marking.push(vec![f(rank)]);
    build(rank, 2, &ends, lengths, marking, "theta-plus-loop")
}

/// A rose whose first petal is split into two edges `v0 → v1 → v0`.
pub fn subdivided_rose(lengths: Vec<BigRational>) -> Result<MarkedMetricGraph> {
    let rank = lengths.len().saturating_sub(1);
    let mut ends = vec![(0, 1), (1, 0)];
    ends.extend(std::iter::repeat_n((0, 0), rank.saturating_sub(1)));
    let mut marking = vec![vec![f(0), f(1)]];
    marking.extend((2..rank + 1).map(|e| vec![f(e)]));
    build(rank, 2, &ends, lengths, marking, "subdivided-rose")
}

/// A loop at `v0`, a bridge `v0 → v1`, and `rank − 1` loops at `v1`.
/// Lengths: first loop, bridge, then the loops at `v1`.
pub fn barbell(lengths: Vec<BigRational>) -> Result<MarkedMetricGraph> {
    let rank = lengths.len().saturating_sub(1);
    let mut ends = vec![(0, 0), (0, 1)];
    ends.extend(std::iter::repeat_n((1, 1), rank.saturating_sub(1)));
    let mut marking = vec![vec![f(0)]];
    marking.extend((2..rank + 1).map(|e| vec![f(1), f(e), b(1)]));
    build(rank, 2, &ends, lengths, marking, "barbell")
}

fn check_open_unit(name: &str, x: &BigRational) -> Result<()> {
    if !x.is_positive() || *x >= BigRational::one() {
        return Err(Error::Domain(format!("{name} = {x} outside (0, 1)")));
    }
    Ok(())
}

/// Rose `R_σ` with petals `(σδ, (1 − σ)δ, (1 − δ)/(r − 2), …)`; the first
/// petal has length `σδ`.
pub fn two_petal_family(rank: usize, delta: &BigRational, sigma: &BigRational) -> Result<MarkedMetricGraph> {
    check_open_unit("delta", delta)?;
    check_open_unit("sigma", sigma)?;
    if rank < 3 {
        return Err(Error::RankTooSmall(rank));
    }
    let one = BigRational::one();
    let rest = (&one - delta) / rat(rank as i64 - 2, 1);
    let mut lengths = vec![sigma * delta, (&one - sigma) * delta];
    lengths.extend(std::iter::repeat_n(rest, rank - 2));
    Ok(rose(lengths)?.with_label("two-petal"))
}

/// Rose with petals `(σ, (1 − σ)/(r − 1), …)`.
pub fn one_petal_family(rank: usize, sigma: &BigRational) -> Result<MarkedMetricGraph> {
    check_open_unit("sigma", sigma)?;
    if rank < 3 {
        return Err(Error::RankTooSmall(rank));
    }
    let one = BigRational::one();
    let rest = (&one - sigma) / rat(rank as i64 - 1, 1);
    let mut lengths = vec![sigma.clone()];
    lengths.extend(std::iter::repeat_n(rest, rank - 1));
    Ok(rose(lengths)?.with_label("one-petal"))
}
