use std::collections::VecDeque;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::{check_rank, cyclic_reduce, is_basis, CyclicWord, Letter, Word};

/// An edge traversed forwards or backwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirEdge {
    pub edge: usize,
    pub reversed: bool,
}

impl DirEdge {
    pub fn forward(edge: usize) -> Self {
        DirEdge { edge, reversed: false }
    }

    pub fn backward(edge: usize) -> Self {
        DirEdge { edge, reversed: true }
    }

    pub fn inverse(self) -> Self {
        DirEdge { edge: self.edge, reversed: !self.reversed }
    }
}

/// Freely tighten an edge path (cancel `e ē`).
pub fn tighten_path(path: &[DirEdge]) -> Vec<DirEdge> {
    let mut out: Vec<DirEdge> = Vec::with_capacity(path.len());
    for &d in path {
        if out.last() == Some(&d.inverse()) {
            out.pop();
        } else {
            out.push(d);
        }
    }
    out
}

/// Tighten a closed edge path cyclically.
pub fn tighten_cyclic(path: &[DirEdge]) -> Vec<DirEdge> {
    let t = tighten_path(path);
    let mut lo = 0;
    let mut hi = t.len();
    while hi - lo >= 2 && t[lo] == t[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    t[lo..hi].to_vec()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    pub from: usize,
    pub to: usize,
    pub length: BigRational,
}

/// What part of the graph data a violation concerns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    Rank,
    Endpoint,
    Length,
    Volume,
    Core,
    Betti,
    Marking,
    Format,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.kind, self.message)
    }
}

/// A volume-one marked metric core graph.
///
/// Marking path `i` is the image of the `i`-th rose petal, a closed edge path
/// at `base`. Each edge also carries a transfer word: the class of any closed
/// edge path is the product of the transfers along it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedMetricGraph {
    rank: usize,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    base: usize,
    marking: Vec<Vec<DirEdge>>,
    label: Option<String>,
    transfers: Vec<Word>,
}

/// Unvalidated graph data.
#[derive(Clone, Debug)]
pub struct GraphParts {
    pub rank: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
    pub base: usize,
    pub marking: Vec<Vec<DirEdge>>,
    pub label: Option<String>,
}

impl GraphParts {
    fn tail(&self, d: DirEdge) -> usize {
        let e = &self.edges[d.edge];
        if d.reversed {
            e.to
        } else {
            e.from
        }
    }

    fn head(&self, d: DirEdge) -> usize {
        self.tail(d.inverse())
    }

    /// Check every invariant; returns the violations and, when the marking is
    /// a valid basis, the edge transfers.
    pub fn check(&self) -> (Vec<Violation>, Option<Vec<Word>>) {
        let mut out = Vec::new();
        let mut push = |kind, message: String| out.push(Violation { kind, message });
        if let Err(e) = check_rank(self.rank) {
            push(ViolationKind::Rank, e.to_string());
            return (out, None);
        }
        let nv = self.vertices.len();
        if nv == 0 {
            push(ViolationKind::Core, "graph has no vertices".into());
            return (out, None);
        }
        if self.base >= nv {
            push(ViolationKind::Endpoint, format!("base vertex index {} out of range", self.base));
            return (out, None);
        }
        let mut endpoints_ok = true;
        for e in &self.edges {
            if e.from >= nv || e.to >= nv {
                push(ViolationKind::Endpoint, format!("edge {} has an endpoint out of range", e.id));
                endpoints_ok = false;
            }
            if !e.length.is_positive() {
                push(ViolationKind::Length, format!("edge {} has nonpositive length {}", e.id, e.length));
            }
        }
        let volume: BigRational = self.edges.iter().map(|e| e.length.clone()).sum();
        if !volume.is_one() {
            push(ViolationKind::Volume, format!("volume is {volume}, expected 1"));
        }
        if !endpoints_ok {
            return (out, None);
        }
        let mut degree = vec![0usize; nv];
        for e in &self.edges {
            degree[e.from] += 1;
            degree[e.to] += 1;
        }
        for (v, &d) in degree.iter().enumerate() {
            if d < 2 {
                push(ViolationKind::Core, format!("vertex {} has degree {d}", self.vertices[v]));
            }
        }
        let (tree, reached) = self.spanning_tree();
        if reached < nv {
            push(ViolationKind::Core, "graph is disconnected".into());
            return (out, None);
        }
        let betti = self.edges.len() + 1 - nv;
        if betti != self.rank {
            push(ViolationKind::Betti, format!("first Betti number is {betti}, rank is {}", self.rank));
            return (out, None);
        }
        if self.marking.len() != self.rank {
            push(
                ViolationKind::Marking,
                format!("marking has {} paths, rank is {}", self.marking.len(), self.rank),
            );
            return (out, None);
        }
        let mut paths_ok = true;
        for (i, path) in self.marking.iter().enumerate() {
            if let Some(msg) = self.path_problem(path) {
                push(ViolationKind::Marking, format!("marking path {i}: {msg}"));
                paths_ok = false;
            }
        }
        if !paths_ok {
            return (out, None);
        }
        // Generators of the graph's fundamental group: the non-tree edges.
        let mut gen_of = vec![None; self.edges.len()];
        let mut next = 0;
        for (e, in_tree) in tree.iter().enumerate() {
            if !in_tree {
                gen_of[e] = Some(next);
                next += 1;
            }
        }
        let words: Vec<Word> = self
            .marking
            .iter()
            .map(|p| {
                Word::from_letters(
                    p.iter().filter_map(|d| gen_of[d.edge].map(|g| Letter::new(g, d.reversed))),
                )
            })
            .collect();
        if !is_basis(self.rank, &words) {
            push(ViolationKind::Marking, "marking loops do not form a free basis".into());
            return (out, None);
        }
        let inverse = crate::words::Automorphism::new(words)
            .expect("checked basis")
            .inverse();
        let transfers = gen_of
            .iter()
            .map(|g| match g {
                Some(g) => inverse.images()[*g].clone(),
                None => Word::identity(),
            })
            .collect();
        (out, Some(transfers))
    }

    fn path_problem(&self, path: &[DirEdge]) -> Option<String> {
        if path.is_empty() {
            return Some("empty path".into());
        }
        if let Some(d) = path.iter().find(|d| d.edge >= self.edges.len()) {
            return Some(format!("unknown edge index {}", d.edge));
        }
        if self.tail(path[0]) != self.base {
            return Some("does not start at the base vertex".into());
        }
        for w in path.windows(2) {
            if self.head(w[0]) != self.tail(w[1]) {
                return Some(format!(
                    "edges {} and {} are not consecutive",
                    self.edges[w[0].edge].id, self.edges[w[1].edge].id
                ));
            }
        }
        if self.head(*path.last().unwrap()) != self.base {
            return Some("does not end at the base vertex".into());
        }
        None
    }

    /// Breadth-first spanning tree from the base; returns tree-edge flags and
    /// the number of reached vertices.
    fn spanning_tree(&self) -> (Vec<bool>, usize) {
        let nv = self.vertices.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nv];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.from].push(i);
            if e.to != e.from {
                adj[e.to].push(i);
            }
        }
        let mut seen = vec![false; nv];
        let mut tree = vec![false; self.edges.len()];
        let mut queue = VecDeque::from([self.base]);
        seen[self.base] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &i in &adj[v] {
                let e = &self.edges[i];
                let w = if e.from == v { e.to } else { e.from };
                if !seen[w] {
                    seen[w] = true;
                    tree[i] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        (tree, reached)
    }
}

impl MarkedMetricGraph {
    /// Validate and build.
    pub fn new(parts: GraphParts) -> Result<Self> {
        let (violations, transfers) = parts.check();
        if !violations.is_empty() {
            let msg = violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ");
            return Err(Error::InvalidGraph(msg));
        }
        let GraphParts { rank, vertices, edges, base, marking, label } = parts;
        Ok(MarkedMetricGraph {
            rank,
            vertices,
            edges,
            base,
            marking,
            label,
            transfers: transfers.expect("valid graph has transfers"),
        })
    }

    pub(crate) fn from_trusted(parts: GraphParts, transfers: Vec<Word>) -> Self {
        let GraphParts { rank, vertices, edges, base, marking, label } = parts;
        MarkedMetricGraph { rank, vertices, edges, base, marking, label, transfers }
    }

    pub fn to_parts(&self) -> GraphParts {
        GraphParts {
            rank: self.rank,
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
            base: self.base,
            marking: self.marking.clone(),
            label: self.label.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn marking(&self) -> &[Vec<DirEdge>] {
        &self.marking
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub(crate) fn transfers(&self) -> &[Word] {
        &self.transfers
    }

    pub fn lengths(&self) -> Vec<BigRational> {
        self.edges.iter().map(|e| e.length.clone()).collect()
    }

    pub fn tail(&self, d: DirEdge) -> usize {
        let e = &self.edges[d.edge];
        if d.reversed {
            e.to
        } else {
            e.from
        }
    }

    pub fn head(&self, d: DirEdge) -> usize {
        self.tail(d.inverse())
    }

    /// Outgoing directed edges at each vertex (loops appear in both directions).
    pub fn outgoing(&self) -> Vec<Vec<DirEdge>> {
        let mut out = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            out[e.from].push(DirEdge::forward(i));
            out[e.to].push(DirEdge::backward(i));
        }
        out
    }

    /// Same graph with new edge lengths (must sum to one).
    pub fn with_lengths(&self, lengths: Vec<BigRational>) -> Result<Self> {
        if lengths.len() != self.edges.len() {
            return Err(Error::InvalidGraph(format!(
                "expected {} lengths, got {}",
                self.edges.len(),
                lengths.len()
            )));
        }
        if let Some(l) = lengths.iter().find(|l| !l.is_positive()) {
            return Err(Error::InvalidGraph(format!("nonpositive length {l}")));
        }
        let volume: BigRational = lengths.iter().cloned().sum();
        if !volume.is_one() {
            return Err(Error::InvalidGraph(format!("volume is {volume}, expected 1")));
        }
        let mut g = self.clone();
        for (e, l) in g.edges.iter_mut().zip(lengths) {
            e.length = l;
        }
        Ok(g)
    }

    pub fn volume(&self) -> BigRational {
        self.edges.iter().map(|e| e.length.clone()).sum()
    }

    /// The class carried by a closed edge path.
    pub fn class_of(&self, path: &[DirEdge]) -> Result<CyclicWord> {
        let mut w = Word::identity();
        for d in path {
            let t = &self.transfers[d.edge];
            w = if d.reversed { w.mul(&t.inverse()) } else { w.mul(t) };
        }
        cyclic_reduce(&w)
    }

    /// Diagnostics for this graph (empty for any constructed value).
    pub fn validate(&self) -> Vec<Violation> {
        self.to_parts().check().0
    }
}

/// Total length of an edge path.
pub fn path_length(g: &MarkedMetricGraph, path: &[DirEdge]) -> BigRational {
    let mut total = BigRational::zero();
    for d in path {
        total += &g.edges()[d.edge].length;
    }
    total
}
