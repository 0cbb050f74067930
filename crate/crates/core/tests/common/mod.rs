//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's word reduction, Whitehead, or candidate code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_rational::BigRational;
use outerspace::graphs::{DirEdge, MarkedMetricGraph};
use outerspace::words::CyclicWord;

/// Letters as nonzero integers: `g + 1` for generator `g`, negated for inverses.
pub type RawWord = Vec<i32>;

pub fn reduce(w: &[i32]) -> RawWord {
    let mut out: RawWord = Vec::new();
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn cyclic(w: &[i32]) -> RawWord {
    let mut w = reduce(w);
    while w.len() > 1 && w[0] == -w[w.len() - 1] {
        w.remove(0);
        w.pop();
    }
    w
}

pub fn invert(w: &[i32]) -> RawWord {
    w.iter().rev().map(|x| -x).collect()
}

/// Least rotation of the word or its inverse, as a dedupe key.
pub fn cyclic_key(w: &[i32]) -> RawWord {
    let c = cyclic(w);
    let inv = invert(&c);
    let mut best = c.clone();
    for v in [c, inv] {
        for k in 0..v.len() {
            let mut r = v[k..].to_vec();
            r.extend_from_slice(&v[..k]);
            if r < best {
                best = r;
            }
        }
    }
    best
}

pub fn to_string(w: &[i32]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|&x| {
            let c = (b'a' + (x.unsigned_abs() - 1) as u8) as char;
            if x < 0 {
                c.to_ascii_uppercase()
            } else {
                c
            }
        })
        .collect()
}

pub fn to_class(w: &[i32]) -> CyclicWord {
    CyclicWord::parse(&to_string(&cyclic(w))).unwrap()
}

/// Every nontrivial conjugacy class of cyclic length at most `max_len`, keyed.
pub fn all_classes(rank: usize, max_len: usize) -> BTreeSet<RawWord> {
    let mut out = BTreeSet::new();
    let mut frontier: Vec<RawWord> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 1..=rank as i32 {
                for x in [g, -g] {
                    if w.last() == Some(&-x) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(x);
                    let k = cyclic_key(&v);
                    if !k.is_empty() {
                        out.insert(k);
                    }
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    out
}

fn substitute(images: &[RawWord], w: &[i32]) -> RawWord {
    let mut out = Vec::new();
    for &x in w {
        let img = &images[(x.unsigned_abs() - 1) as usize];
        if x > 0 {
            out.extend_from_slice(img);
        } else {
            out.extend(invert(img));
        }
    }
    cyclic(&out)
}

/// Elementary Nielsen automorphisms of the given rank as image lists.
pub fn nielsen_moves(rank: usize) -> Vec<Vec<RawWord>> {
    let id: Vec<RawWord> = (1..=rank as i32).map(|g| vec![g]).collect();
    let mut moves = Vec::new();
    for i in 0..rank {
        let mut m = id.clone();
        m[i] = vec![-(i as i32 + 1)];
        moves.push(m);
        for j in 0..rank {
            if i == j {
                continue;
            }
            let (xi, xj) = (i as i32 + 1, j as i32 + 1);
            for y in [xj, -xj] {
                let mut right = id.clone();
                right[i] = vec![xi, y];
                moves.push(right);
                let mut left = id.clone();
                left[i] = vec![y, xi];
                moves.push(left);
            }
            let mut swap = id.clone();
            swap.swap(i, j);
            moves.push(swap);
        }
    }
    moves
}

/// Primitive classes of length at most `max_len`: the orbit of `a` under
/// Nielsen moves, explored through classes of length at most `budget`.
pub fn primitive_closure(rank: usize, max_len: usize, budget: usize) -> BTreeSet<RawWord> {
    let moves = nielsen_moves(rank);
    let start = vec![1];
    let mut seen: HashSet<RawWord> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for m in &moves {
            let v = cyclic_key(&substitute(m, &w));
            if v.len() <= budget && seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().filter(|w| w.len() <= max_len).collect()
}

/// Image tuples of all nonidentity Whitehead automorphisms by direct
/// enumeration: signed permutations, and for each multiplier letter `m` and
/// nonempty choice among the other generators of `x ↦ xm`, `x ↦ m⁻¹x`, or
/// `x ↦ m⁻¹xm`.
pub fn whitehead_images(rank: usize) -> BTreeSet<Vec<RawWord>> {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for k in 0..=p.len() {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }
    let identity: Vec<RawWord> = (1..=rank as i32).map(|g| vec![g]).collect();
    let mut out = BTreeSet::new();
    for p in perms(rank) {
        for signs in 0..(1u32 << rank) {
            let images: Vec<RawWord> = (0..rank)
                .map(|i| {
                    let x = p[i] as i32 + 1;
                    vec![if signs >> i & 1 == 1 { -x } else { x }]
                })
                .collect();
            out.insert(images);
        }
    }
    for m in 1..=rank as i32 {
        for mm in [m, -m] {
            for choice in 1..4usize.pow(rank as u32 - 1) {
                let mut c = choice;
                let mut images = identity.clone();
                for x in 1..=rank as i32 {
                    if x == m {
                        continue;
                    }
                    let digit = c % 4;
                    c /= 4;
                    images[(x - 1) as usize] = match digit {
                        0 => vec![x],
                        1 => vec![x, mm],
                        2 => vec![-mm, x],
                        _ => vec![-mm, x, mm],
                    };
                }
                out.insert(images);
            }
        }
    }
    out.remove(&identity);
    out
}

/// Naive length of a class: concatenate the marking paths, cancel
/// backtracking with a stack, then cancel cyclically.
pub fn naive_length(g: &MarkedMetricGraph, w: &[i32]) -> BigRational {
    let mut stack: Vec<DirEdge> = Vec::new();
    for &x in w {
        let path = &g.marking()[(x.unsigned_abs() - 1) as usize];
        let steps: Vec<DirEdge> = if x > 0 { path.clone() } else { path.iter().rev().map(|d| d.inverse()).collect() };
        for d in steps {
            if stack.last() == Some(&d.inverse()) {
                stack.pop();
            } else {
                stack.push(d);
            }
        }
    }
    let mut lo = 0;
    let mut hi = stack.len();
    while hi - lo > 1 && stack[lo] == stack[hi - 1].inverse() {
        lo += 1;
        hi -= 1;
    }
    stack[lo..hi].iter().map(|d| g.edges()[d.edge].length.clone()).sum()
}

/// Shape of a cyclic edge path, judged from its image subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OracleShape {
    Circle,
    FigureEight,
    Barbell,
}

fn shape(g: &MarkedMetricGraph, path: &[DirEdge]) -> Option<OracleShape> {
    let mut cross = vec![0usize; g.edges().len()];
    for d in path {
        cross[d.edge] += 1;
    }
    let mut degree = vec![0usize; g.vertices().len()];
    let mut image_edges = 0;
    for (e, &c) in cross.iter().enumerate() {
        if c > 0 {
            image_edges += 1;
            degree[g.edges()[e].from] += 1;
            degree[g.edges()[e].to] += 1;
        }
    }
    let image_vertices = degree.iter().filter(|&&d| d > 0).count();
    let twice = cross.iter().filter(|&&c| c == 2).count();
    let deg3 = degree.iter().filter(|&&d| d == 3).count();
    let deg4 = degree.iter().filter(|&&d| d == 4).count();
    let other = degree.iter().filter(|&&d| d != 0 && d != 2 && d != 3 && d != 4).count();
    if other > 0 {
        return None;
    }
    if twice == 0 && deg3 == 0 && deg4 == 0 && image_edges == image_vertices {
        Some(OracleShape::Circle)
    } else if twice == 0 && deg3 == 0 && deg4 == 1 && image_edges == image_vertices + 1 {
        Some(OracleShape::FigureEight)
    } else if twice > 0 && deg3 == 2 && deg4 == 0 && image_edges == image_vertices + 1 && is_barbell(g, &cross) {
        Some(OracleShape::Barbell)
    } else {
        None
    }
}

fn find(parent: &mut Vec<usize>, x: usize) -> usize {
    if parent[x] != x {
        let r = find(parent, parent[x]);
        parent[x] = r;
    }
    parent[x]
}

/// Once-crossed edges form two disjoint circles, each touched by the arc of
/// twice-crossed edges at one end.
fn is_barbell(g: &MarkedMetricGraph, cross: &[usize]) -> bool {
    let n = g.vertices().len();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut once_degree = vec![0usize; n];
    for (e, &c) in cross.iter().enumerate() {
        if c == 1 {
            let (a, b) = (g.edges()[e].from, g.edges()[e].to);
            once_degree[a] += 1;
            once_degree[b] += 1;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    if once_degree.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    let roots: BTreeSet<usize> = (0..n).filter(|&v| once_degree[v] > 0).map(|v| find(&mut parent, v)).collect();
    roots.len() == 2
}

fn canonical_path(path: &[DirEdge]) -> Vec<DirEdge> {
    let rev: Vec<DirEdge> = path.iter().rev().map(|d| d.inverse()).collect();
    let mut best = path.to_vec();
    for v in [path.to_vec(), rev] {
        for k in 0..v.len() {
            let mut r = v[k..].to_vec();
            r.extend_from_slice(&v[..k]);
            if r < best {
                best = r;
            }
        }
    }
    best
}

/// Every non-backtracking cyclic edge path crossing each edge at most twice
/// whose image is a circle, figure-eight, or barbell, up to rotation and
/// reversal, as `(shape, class, length)`.
pub fn brute_candidates(g: &MarkedMetricGraph) -> BTreeSet<(OracleShape, CyclicWord, BigRational)> {
    let out_edges = g.outgoing();
    let all: Vec<DirEdge> = out_edges.iter().flatten().copied().collect();
    let mut found: BTreeSet<Vec<DirEdge>> = BTreeSet::new();
    fn walk(
        g: &MarkedMetricGraph,
        out_edges: &[Vec<DirEdge>],
        path: &mut Vec<DirEdge>,
        cross: &mut Vec<usize>,
        found: &mut BTreeSet<Vec<DirEdge>>,
    ) {
        let first = path[0];
        let last = *path.last().unwrap();
        if g.head(last) == g.tail(first) && last != first.inverse() {
            found.insert(canonical_path(path));
        }
        for &d in &out_edges[g.head(last)] {
            if d == last.inverse() || cross[d.edge] >= 2 {
                continue;
            }
            cross[d.edge] += 1;
            path.push(d);
            walk(g, out_edges, path, cross, found);
            path.pop();
            cross[d.edge] -= 1;
        }
    }
    for &start in &all {
        let mut cross = vec![0; g.edges().len()];
        cross[start.edge] = 1;
        walk(g, &out_edges, &mut vec![start], &mut cross, &mut found);
    }
    found
        .into_iter()
        .filter_map(|p| {
            let s = shape(g, &p)?;
            let len: BigRational = p.iter().map(|d| g.edges()[d.edge].length.clone()).sum();
            Some((s, g.class_of(&p).unwrap(), len))
        })
        .collect()
}

/// Shortest cyclic edge path crossing each edge at most once.
pub fn brute_systole(g: &MarkedMetricGraph) -> BigRational {
    brute_candidates(g)
        .into_iter()
        .filter(|c| c.0 == OracleShape::Circle)
        .map(|c| c.2)
        .min()
        .unwrap()
}

/// Real root of `x³ = x + 1` by bisection.
pub fn plastic_root() -> f64 {
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    for _ in 0..200 {
        let mid = (lo + hi) / 2.0;
        if mid * mid * mid - mid - 1.0 > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    lo
}
