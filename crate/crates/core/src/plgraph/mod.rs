//! The primitive loop complex: the coarse projection `π_PL`, neighbor
//! generation, ball export, and breadth-first distance estimates.
//!
//! Neighbor sets are finite under-approximations of infinite sets, so every
//! distance above 1 is an upper bound found by search, never a certified value.

mod explorer;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

pub use explorer::{meet, short_classes, Ball, PlDistance, PlExplorer};

use crate::error::{Error, Result};
use crate::graphs::{DirEdge, MarkedMetricGraph};
use crate::metric::candidates;
use crate::num::rat;
use crate::words::{is_primitive, joint_basis, CyclicWord};

/// Search limits and the coarse Lipschitz constant of `π_PL`.
#[derive(Clone, Debug, Serialize)]
pub struct PLConfig {
    /// Lipschitz constant `L` consumed by every threshold formula.
    pub lipschitz: f64,
    /// Longest word considered by the word-capped neighbor search.
    pub word_cap: usize,
    /// Longest PL path searched for.
    pub radius_cap: usize,
    /// Vertex budget for a single breadth-first ball.
    pub max_ball: usize,
    /// Budget of partial paths explored by [`pl_projection`].
    pub path_cap: usize,
}

impl Default for PLConfig {
    fn default() -> Self {
        PLConfig { lipschitz: 260.0, word_cap: 2, radius_cap: 4, max_ball: 50_000, path_cap: 200_000 }
    }
}

impl PLConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.lipschitz >= 1.0) {
            return Err(Error::Domain(format!("Lipschitz constant {} must be at least 1", self.lipschitz)));
        }
        if self.word_cap == 0 {
            return Err(Error::Domain("word cap must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PlProjection {
    pub classes: Vec<CyclicWord>,
    pub paths_explored: usize,
    pub truncated: bool,
}

/// `π_PL(G)`: primitive classes with an immersed representative of length at most 2.
///
/// Every such representative is a non-backtracking cyclic edge path; each is
/// enumerated once from its least directed edge.
pub fn pl_projection(g: &MarkedMetricGraph, cap: usize) -> PlProjection {
    let out_edges = g.outgoing();
    let budget = rat(2, 1);
    let mut found = BTreeSet::new();
    let mut explored = 0usize;
    let mut truncated = false;
    let mut all: Vec<DirEdge> = out_edges.iter().flatten().copied().collect();
    all.sort();
    for &start in &all {
        let mut path = vec![start];
        let len = g.edges()[start.edge].length.clone();
        if len > budget {
            continue;
        }
        if !walk(g, &out_edges, &budget, start, &mut path, len, &mut found, &mut explored, cap) {
            truncated = true;
            break;
        }
    }
    let classes = found.into_iter().filter(is_primitive).collect();
    PlProjection { classes, paths_explored: explored, truncated }
}

#[allow(clippy::too_many_arguments)]
fn walk(
    g: &MarkedMetricGraph,
    out_edges: &[Vec<DirEdge>],
    budget: &num_rational::BigRational,
    start: DirEdge,
    path: &mut Vec<DirEdge>,
    len: num_rational::BigRational,
    found: &mut BTreeSet<CyclicWord>,
    explored: &mut usize,
    cap: usize,
) -> bool {
    *explored += 1;
    if *explored > cap {
        return false;
    }
    let last = *path.last().unwrap();
    if g.head(last) == g.tail(start) && last != start.inverse() {
        if let Ok(c) = g.class_of(path) {
            found.insert(c);
        }
    }
    for &d in &out_edges[g.head(last)] {
        if d < start || d == last.inverse() {
            continue;
        }
        let next_len = &len + &g.edges()[d.edge].length;
        if next_len > *budget {
            continue;
        }
        path.push(d);
        let ok = walk(g, out_edges, budget, start, path, next_len, found, explored, cap);
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Primitive classes of length at most `cap` jointly primitive with `alpha`.
pub fn pl_neighbors(alpha: &CyclicWord, rank: usize, cap: usize) -> Result<Vec<CyclicWord>> {
    if !is_primitive(alpha) {
        return Err(Error::NotPrimitive(alpha.to_string()));
    }
    Ok(short_classes(rank, cap)
        .into_iter()
        .filter(|b| b != alpha && is_primitive(b) && joint_basis(alpha, b).unwrap_or(false))
        .collect())
}

/// Distance estimate between two primitive classes using a shared explorer.
pub fn distance_with(explorer: &PlExplorer, alpha: &CyclicWord, beta: &CyclicWord, radius_cap: usize, max_ball: usize) -> Result<PlDistance> {
    for w in [alpha, beta] {
        if !is_primitive(w) {
            return Err(Error::NotPrimitive(w.to_string()));
        }
    }
    if alpha == beta {
        return Ok(PlDistance::Bound(0));
    }
    if joint_basis(alpha, beta)? {
        return Ok(PlDistance::Bound(1));
    }
    let h = radius_cap.div_ceil(2);
    let ba = explorer.ball(alpha, h, max_ball)?;
    let bb = explorer.ball(beta, h, max_ball)?;
    Ok(bound_from_balls(&ba, &bb, radius_cap))
}

fn bound_from_balls(ba: &Ball, bb: &Ball, radius_cap: usize) -> PlDistance {
    match meet(ba, bb) {
        Some(d) if d <= radius_cap => PlDistance::Bound(d),
        _ => PlDistance::ExceedsCap,
    }
}

/// Breadth-first upper bound on the PL distance between primitive classes.
pub fn pl_distance_ub(alpha: &CyclicWord, beta: &CyclicWord, rank: usize, radius_cap: usize, word_cap: usize) -> Result<PlDistance> {
    let explorer = PlExplorer::new(rank, word_cap);
    distance_with(&explorer, alpha, beta, radius_cap, PLConfig::default().max_ball)
}

/// `d_PL` estimate between two graphs.
#[derive(Clone, Debug, Serialize)]
pub struct DplEstimate {
    /// Largest bound over representative pairs; `None` if any pair exceeded the cap.
    pub value: Option<usize>,
    /// Largest bound among pairs that were resolved.
    pub max_resolved: usize,
    pub pairs: usize,
    pub missing: usize,
}

/// Projection representatives used for `d_PL`: the candidate classes, all of
/// which are primitive with length at most 2.
pub fn representatives(g: &MarkedMetricGraph) -> Vec<CyclicWord> {
    let set: BTreeSet<CyclicWord> = candidates(g).classes().into_iter().collect();
    set.into_iter().collect()
}

/// Max of the pairwise distance bounds between the representatives of `g` and `h`.
pub fn d_pl(g: &MarkedMetricGraph, h: &MarkedMetricGraph, cfg: &PLConfig, explorer: &PlExplorer) -> Result<DplEstimate> {
    if g.rank() != h.rank() {
        return Err(Error::RankMismatch(g.rank(), h.rank()));
    }
    d_pl_classes(&representatives(g), &representatives(h), cfg, explorer)
}

/// [`d_pl`] on explicit representative lists.
pub fn d_pl_classes(xs: &[CyclicWord], ys: &[CyclicWord], cfg: &PLConfig, explorer: &PlExplorer) -> Result<DplEstimate> {
    let h = cfg.radius_cap.div_ceil(2);
    let mut balls: BTreeMap<&CyclicWord, Ball> = BTreeMap::new();
    let mut value = Some(0);
    let mut max_resolved = 0;
    let mut missing = 0;
    let mut pairs = 0;
    for x in xs {
        for y in ys {
            pairs += 1;
            let d = if x == y {
                PlDistance::Bound(0)
            } else if joint_basis(x, y)? {
                PlDistance::Bound(1)
            } else {
                for w in [x, y] {
                    if !balls.contains_key(w) {
                        balls.insert(w, explorer.ball(w, h, cfg.max_ball)?);
                    }
                }
                bound_from_balls(&balls[x], &balls[y], cfg.radius_cap)
            };
            match d {
                PlDistance::Bound(v) => {
                    max_resolved = max_resolved.max(v);
                    value = value.map(|m: usize| m.max(v));
                }
                PlDistance::ExceedsCap => {
                    missing += 1;
                    value = None;
                }
            }
        }
    }
    Ok(DplEstimate { value, max_resolved, pairs, missing })
}

/// A breadth-first ball in PL, exportable as an edge list.
#[derive(Clone, Debug, Serialize)]
pub struct PLBall {
    pub center: CyclicWord,
    pub radius: usize,
    pub word_cap: usize,
    pub vertices: Vec<(CyclicWord, usize)>,
    pub edges: Vec<(CyclicWord, CyclicWord)>,
    pub truncated: bool,
}

impl PLBall {
    pub fn build(center: &CyclicWord, rank: usize, radius: usize, cfg: &PLConfig) -> Result<Self> {
        let explorer = PlExplorer::new(rank, cfg.word_cap);
        let ball = explorer.ball(center, radius, cfg.max_ball)?;
        let mut edges: BTreeSet<(CyclicWord, CyclicWord)> = BTreeSet::new();
        for (u, v) in ball.edges.iter() {
            let key = if u <= v { (u.clone(), v.clone()) } else { (v.clone(), u.clone()) };
            edges.insert(key);
        }
        Ok(PLBall {
            center: center.clone(),
            radius,
            word_cap: cfg.word_cap,
            truncated: ball.is_truncated(),
            vertices: ball.depths.into_iter().collect(),
            edges: edges.into_iter().collect(),
        })
    }

    /// Shortest-path distance inside the ball's edge set.
    pub fn distance(&self, a: &CyclicWord, b: &CyclicWord) -> Option<usize> {
        let mut adj: BTreeMap<&CyclicWord, Vec<&CyclicWord>> = BTreeMap::new();
        for (u, v) in &self.edges {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
        let mut dist: BTreeMap<&CyclicWord, usize> = BTreeMap::new();
        dist.insert(a, 0);
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            if u == b {
                return Some(dist[u]);
            }
            for &w in adj.get(u).map(Vec::as_slice).unwrap_or(&[]) {
                if !dist.contains_key(w) {
                    dist.insert(w, dist[u] + 1);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Tab-separated edge list with a comment header.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!(
            "# center {} radius {} word-cap {} vertices {} edges {}{}\n",
            self.center,
            self.radius,
            self.word_cap,
            self.vertices.len(),
            self.edges.len(),
            if self.truncated { " truncated" } else { "" }
        );
        for (u, v) in &self.edges {
            s.push_str(&format!("{u}\t{v}\n"));
        }
        s
    }
}

#[cfg(test)]
mod tests;
