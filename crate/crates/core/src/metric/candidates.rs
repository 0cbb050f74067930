use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::Serialize;

use crate::graphs::{embedded_cycles, DirEdge, GraphLoop, MarkedMetricGraph};
use crate::words::CyclicWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CandidateShape {
    EmbeddedCircle,
    FigureEight,
    Barbell,
}

impl std::fmt::Display for CandidateShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CandidateShape::EmbeddedCircle => "embedded-circle",
            CandidateShape::FigureEight => "figure-eight",
            CandidateShape::Barbell => "barbell",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub shape: CandidateShape,
    pub graph_loop: GraphLoop,
    pub class: CyclicWord,
    pub length: BigRational,
}

/// The candidate loops of a graph, ordered by shape then by loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSet {
    pub rank: usize,
    pub candidates: Vec<Candidate>,
}

impl CandidateSet {
    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Candidate> {
        self.candidates.iter()
    }

    pub fn classes(&self) -> Vec<CyclicWord> {
        self.candidates.iter().map(|c| c.class.clone()).collect()
    }
}

fn vertices_of(g: &MarkedMetricGraph, c: &GraphLoop) -> Vec<usize> {
    c.edges().iter().map(|&d| g.tail(d)).collect()
}

/// Rotate a cycle to start at vertex `v`.
fn rotate_to(g: &MarkedMetricGraph, c: &GraphLoop, v: usize) -> Vec<DirEdge> {
    let e = c.edges();
    let s = e.iter().position(|&d| g.tail(d) == v).expect("vertex on cycle");
    e[s..].iter().chain(&e[..s]).copied().collect()
}

fn reverse(path: &[DirEdge]) -> Vec<DirEdge> {
    path.iter().rev().map(|d| d.inverse()).collect()
}

/// Embedded arcs from any vertex of `from` to any vertex of `to`, with
/// interior vertices avoiding `blocked`.
fn arcs(g: &MarkedMetricGraph, from: &[usize], to: &[usize], blocked: &[bool]) -> Vec<(usize, usize, Vec<DirEdge>)> {
    let out_edges = g.outgoing();
    let mut found = Vec::new();
    for &u in from {
        let mut visited = blocked.to_vec();
        let mut path = Vec::new();
        arc_search(g, &out_edges, u, u, to, &mut visited, &mut path, &mut found);
    }
    found
}

#[allow(clippy::too_many_arguments)]
fn arc_search(
    g: &MarkedMetricGraph,
    out_edges: &[Vec<DirEdge>],
    start: usize,
    at: usize,
    to: &[usize],
    visited: &mut [bool],
    path: &mut Vec<DirEdge>,
    found: &mut Vec<(usize, usize, Vec<DirEdge>)>,
) {
    for &d in &out_edges[at] {
        let next = g.head(d);
        if to.contains(&next) {
            path.push(d);
            found.push((start, next, path.clone()));
            path.pop();
        } else if !visited[next] {
            visited[next] = true;
            path.push(d);
            arc_search(g, out_edges, start, next, to, visited, path, found);
            path.pop();
            visited[next] = false;
        }
    }
}

/// Embedded circles, figure-eights and barbells of `g`, as loops with their classes.
pub fn candidates(g: &MarkedMetricGraph) -> CandidateSet {
    let cycles = embedded_cycles(g);
    let verts: Vec<Vec<usize>> = cycles.iter().map(|c| vertices_of(g, c)).collect();
    let mut loops: BTreeMap<(CandidateShape, GraphLoop), ()> = BTreeMap::new();
    let mut add = |shape, path: Vec<DirEdge>| {
        let lp = GraphLoop::from_closed_path(&path).expect("candidate loops are essential");
        loops.insert((shape, lp.canonical()), ());
    };
    for c in &cycles {
        add(CandidateShape::EmbeddedCircle, c.edges().to_vec());
    }
    let nv = g.vertices().len();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let common: Vec<usize> = verts[i].iter().copied().filter(|v| verts[j].contains(v)).collect();
            match common.len() {
                1 => {
                    let v = common[0];
                    let c1 = rotate_to(g, &cycles[i], v);
                    let c2 = rotate_to(g, &cycles[j], v);
                    add(CandidateShape::FigureEight, [c1.clone(), c2.clone()].concat());
                    add(CandidateShape::FigureEight, [c1, reverse(&c2)].concat());
                }
                0 => {
                    let mut blocked = vec![false; nv];
                    for &v in verts[i].iter().chain(&verts[j]) {
                        blocked[v] = true;
                    }
                    for (u, w, bar) in arcs(g, &verts[i], &verts[j], &blocked) {
                        let c1 = rotate_to(g, &cycles[i], u);
                        let c2 = rotate_to(g, &cycles[j], w);
                        let back = reverse(&bar);
                        add(CandidateShape::Barbell, [c1.clone(), bar.clone(), c2.clone(), back.clone()].concat());
                        add(CandidateShape::Barbell, [c1, bar, reverse(&c2), back].concat());
                    }
                }
                _ => {}
            }
        }
    }
    let candidates = loops
        .into_keys()
        .map(|(shape, lp)| Candidate { shape, class: lp.class(g), length: lp.length(g), graph_loop: lp })
        .collect();
    CandidateSet { rank: g.rank(), candidates }
}
