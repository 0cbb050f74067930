use num_rational::BigRational;
use num_traits::Zero;

use super::graph::{path_length, tighten_cyclic, DirEdge, MarkedMetricGraph};
use crate::error::{Error, Result};
use crate::words::CyclicWord;

/// A cyclically tightened closed edge path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphLoop(Vec<DirEdge>);

impl GraphLoop {
    /// Tighten a closed edge path; fails if it is null-homotopic.
    pub fn from_closed_path(path: &[DirEdge]) -> Result<Self> {
        let t = tighten_cyclic(path);
        if t.is_empty() {
            return Err(Error::TrivialClass);
        }
        Ok(GraphLoop(t))
    }

    pub fn edges(&self) -> &[DirEdge] {
        &self.0
    }

    /// Combinatorial length (number of edges crossed).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn length(&self, g: &MarkedMetricGraph) -> BigRational {
        path_length(g, &self.0)
    }

    /// How many times the loop crosses each edge, in either direction.
    pub fn crossings(&self, edge_count: usize) -> Vec<usize> {
        let mut c = vec![0; edge_count];
        for d in &self.0 {
            c[d.edge] += 1;
        }
        c
    }

    /// True iff the loop visits no vertex twice.
    pub fn is_embedded(&self, g: &MarkedMetricGraph) -> bool {
        let mut seen = vec![false; g.vertices().len()];
        for &d in &self.0 {
            let v = g.tail(d);
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn class(&self, g: &MarkedMetricGraph) -> CyclicWord {
        g.class_of(&self.0).expect("tightened loops are essential")
    }

    pub fn reversed(&self) -> GraphLoop {
        GraphLoop(self.0.iter().rev().map(|d| d.inverse()).collect())
    }

    /// Representative independent of starting point and direction.
    pub fn canonical(&self) -> GraphLoop {
        let n = self.0.len();
        let rev = self.reversed();
        let mut best = self.0.clone();
        for seq in [&self.0, &rev.0] {
            for s in 0..n {
                let rot: Vec<DirEdge> = (0..n).map(|k| seq[(s + k) % n]).collect();
                if rot < best {
                    best = rot;
                }
            }
        }
        GraphLoop(best)
    }

    /// Edge ids, with `~` marking reversed traversal.
    pub fn describe(&self, g: &MarkedMetricGraph) -> String {
        self.0
            .iter()
            .map(|d| {
                let id = &g.edges()[d.edge].id;
                if d.reversed {
                    format!("~{id}")
                } else {
                    id.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn check_class_rank(alpha: &CyclicWord, g: &MarkedMetricGraph) -> Result<()> {
    if let Some(top) = alpha.max_gen() {
        if top >= g.rank() {
            return Err(Error::RankMismatch(top + 1, g.rank()));
        }
    }
    Ok(())
}

/// Immersed representative of `alpha` in `g`.
pub fn immerse(alpha: &CyclicWord, g: &MarkedMetricGraph) -> Result<GraphLoop> {
    check_class_rank(alpha, g)?;
    let mut raw = Vec::new();
    for x in alpha.letters() {
        let petal = &g.marking()[x.gen()];
        if x.is_inverse() {
            raw.extend(petal.iter().rev().map(|d| d.inverse()));
        } else {
            raw.extend_from_slice(petal);
        }
    }
    GraphLoop::from_closed_path(&raw)
}

/// Length of the immersed representative of `alpha`.
pub fn loop_length(alpha: &CyclicWord, g: &MarkedMetricGraph) -> Result<BigRational> {
    Ok(immerse(alpha, g)?.length(g))
}

/// All embedded circles, each once, in canonical form.
pub fn embedded_cycles(g: &MarkedMetricGraph) -> Vec<GraphLoop> {
    let out_edges = g.outgoing();
    let nv = g.vertices().len();
    let mut found = std::collections::BTreeSet::new();
    for start in 0..nv {
        let mut used = vec![false; g.edges().len()];
        let mut visited = vec![false; nv];
        let mut path = Vec::new();
        visited[start] = true;
        cycle_search(g, &out_edges, start, start, &mut visited, &mut used, &mut path, &mut found);
    }
    found.into_iter().collect()
}

#[allow(clippy::too_many_arguments)]
fn cycle_search(
    g: &MarkedMetricGraph,
    out_edges: &[Vec<DirEdge>],
    start: usize,
    at: usize,
    visited: &mut [bool],
    used: &mut [bool],
    path: &mut Vec<DirEdge>,
    found: &mut std::collections::BTreeSet<GraphLoop>,
) {
    for &d in &out_edges[at] {
        if used[d.edge] {
            continue;
        }
        let next = g.head(d);
        if next == start {
            path.push(d);
            found.insert(GraphLoop(path.clone()).canonical());
            path.pop();
        } else if next > start && !visited[next] {
            used[d.edge] = true;
            visited[next] = true;
            path.push(d);
            cycle_search(g, out_edges, start, next, visited, used, path, found);
            path.pop();
            visited[next] = false;
            used[d.edge] = false;
        }
    }
}

/// Length of a shortest essential loop, with a witness embedded circle.
///
/// For each edge `e = (u, v)` the shortest cycle through `e` is `e` followed by
/// a shortest `v → u` path avoiding `e`.
pub fn systole_loop(g: &MarkedMetricGraph) -> (BigRational, GraphLoop) {
    let mut best: Option<(BigRational, GraphLoop)> = None;
    for (i, e) in g.edges().iter().enumerate() {
        let candidate = if e.from == e.to {
            Some((e.length.clone(), vec![DirEdge::forward(i)]))
        } else {
            shortest_path_avoiding(g, e.to, e.from, i).map(|(len, mut p)| {
                p.insert(0, DirEdge::forward(i));
                (len + &e.length, p)
            })
        };
        if let Some((len, p)) = candidate {
            if best.as_ref().is_none_or(|(b, _)| len < *b) {
                best = Some((len, GraphLoop(p)));
            }
        }
    }
    best.expect("a core graph of positive rank has a cycle")
}

pub fn systole(g: &MarkedMetricGraph) -> BigRational {
    systole_loop(g).0
}

/// True iff every essential loop has length at least `eps`.
pub fn is_thick(g: &MarkedMetricGraph, eps: &BigRational) -> bool {
    systole(g) >= *eps
}

fn shortest_path_avoiding(
    g: &MarkedMetricGraph,
    from: usize,
    to: usize,
    banned: usize,
) -> Option<(BigRational, Vec<DirEdge>)> {
    let nv = g.vertices().len();
    let out_edges = g.outgoing();
    let mut dist: Vec<Option<BigRational>> = vec![None; nv];
    let mut prev: Vec<Option<DirEdge>> = vec![None; nv];
    let mut done = vec![false; nv];
    dist[from] = Some(BigRational::zero());
    loop {
        let mut pick: Option<usize> = None;
        for v in 0..nv {
            if done[v] {
                continue;
            }
            if let Some(dv) = &dist[v] {
                if pick.is_none_or(|p| dist[p].as_ref().is_some_and(|dp| dv < dp)) {
                    pick = Some(v);
                }
            }
        }
        let v = pick?;
        if v == to {
            break;
        }
        done[v] = true;
        let dv = dist[v].clone().unwrap();
        for &d in &out_edges[v] {
            if d.edge == banned {
                continue;
            }
            let w = g.head(d);
            let nd = &dv + &g.edges()[d.edge].length;
            if dist[w].as_ref().is_none_or(|dw| nd < *dw) {
                dist[w] = Some(nd);
                prev[w] = Some(d);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = to;
    while v != from {
        let d = prev[v].unwrap();
        path.push(d);
        v = g.tail(d);
    }
    path.reverse();
    Some((dist[to].clone().unwrap(), path))
}
