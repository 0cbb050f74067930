use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{
    cyclic_reduce, is_primitive, joint_basis, primitive_frame, Automorphism, CyclicWord, Letter, Word,
};

/// All classes of cyclic length at most `cap` in the given rank, sorted.
pub fn short_classes(rank: usize, cap: usize) -> Vec<CyclicWord> {
    let mut out = BTreeSet::new();
    let mut frontier: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..cap {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 0..rank {
                for inv in [false, true] {
                    let x = Letter::new(g, inv);
                    if w.last() == Some(&x.inverse()) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(x);
                    if let Ok(c) = cyclic_reduce(&Word::from_letters(v.clone())) {
                        out.insert(c);
                    }
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    out.into_iter().collect()
}

/// Generates primitive neighbors of PL vertices and caches them.
///
/// The neighbors of `α` are the word-capped neighbors (every primitive `β` of
/// length at most `word_cap` jointly primitive with `α`) together with the
/// frame neighbors `ψ_α(x)`, where `ψ_α(a) = α` and `x` ranges over the
/// word-capped neighbors of `a`. Every generated edge is a genuine PL edge.
pub struct PlExplorer {
    rank: usize,
    word_cap: usize,
    short_primitive: Vec<CyclicWord>,
    star: Vec<CyclicWord>,
    cache: Mutex<HashMap<CyclicWord, Arc<Vec<CyclicWord>>>>,
}

impl PlExplorer {
    pub fn new(rank: usize, word_cap: usize) -> Self {
        let short_primitive: Vec<CyclicWord> =
            short_classes(rank, word_cap).into_iter().filter(is_primitive).collect();
        let a = CyclicWord::generator(0);
        let star = short_primitive
            .iter()
            .filter(|x| joint_basis(&a, x).unwrap_or(false))
            .cloned()
            .collect();
        PlExplorer { rank, word_cap, short_primitive, star, cache: Mutex::new(HashMap::new()) }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn word_cap(&self) -> usize {
        self.word_cap
    }

    /// Primitive classes of length at most the word cap that are joint with `alpha`.
    pub fn word_capped_neighbors(&self, alpha: &CyclicWord) -> Vec<CyclicWord> {
        self.short_primitive
            .iter()
            .filter(|b| joint_basis(alpha, b).unwrap_or(false))
            .cloned()
            .collect()
    }

    /// All generated neighbors of a primitive class, sorted.
    pub fn neighbors(&self, alpha: &CyclicWord) -> Result<Arc<Vec<CyclicWord>>> {
        if let Some(n) = self.cache.lock().unwrap().get(alpha) {
            return Ok(n.clone());
        }
        if !is_primitive(alpha) {
            return Err(Error::NotPrimitive(alpha.to_string()));
        }
        let mut set: BTreeSet<CyclicWord> = self.word_capped_neighbors(alpha).into_iter().collect();
        let psi: Automorphism = primitive_frame(self.rank, alpha)?;
        for x in &self.star {
            set.insert(psi.apply(x));
        }
        set.remove(alpha);
        let list = Arc::new(set.into_iter().collect::<Vec<_>>());
        self.cache.lock().unwrap().insert(alpha.clone(), list.clone());
        Ok(list)
    }

    /// Breadth-first depths from `center` up to `depth`. Stops early, with
    /// every completed layer kept, once more than `max_vertices` are reached.
    pub fn ball(&self, center: &CyclicWord, depth: usize, max_vertices: usize) -> Result<Ball> {
        let mut depths = BTreeMap::new();
        depths.insert(center.clone(), 0);
        let mut edges = Vec::new();
        let mut frontier = vec![center.clone()];
        let mut reached = 0;
        for d in 1..=depth {
            if depths.len() > max_vertices {
                break;
            }
            let lists: Vec<Arc<Vec<CyclicWord>>> =
                frontier.par_iter().map(|v| self.neighbors(v)).collect::<Result<_>>()?;
            let mut next = BTreeSet::new();
            for (v, list) in frontier.iter().zip(lists) {
                for w in list.iter() {
                    edges.push((v.clone(), w.clone()));
                    if !depths.contains_key(w) {
                        next.insert(w.clone());
                    }
                }
            }
            for w in &next {
                depths.insert(w.clone(), d);
            }
            reached = d;
            frontier = next.into_iter().collect();
        }
        Ok(Ball { depths, edges, depth: reached, requested: depth })
    }
}

/// Vertices reached by breadth-first search with their depths, and the
/// generated edges out of every expanded vertex.
#[derive(Clone, Debug)]
pub struct Ball {
    pub depths: BTreeMap<CyclicWord, usize>,
    pub edges: Vec<(CyclicWord, CyclicWord)>,
    /// Last completed layer.
    pub depth: usize,
    pub requested: usize,
}

impl Ball {
    pub fn is_truncated(&self) -> bool {
        self.depth < self.requested
    }
}

/// Outcome of a PL distance estimate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum PlDistance {
    /// Length of a path found in PL: exact for 0 and 1, an upper bound otherwise.
    Bound(usize),
    /// No path found within the radius cap.
    ExceedsCap,
}

impl PlDistance {
    pub fn value(self) -> Option<usize> {
        match self {
            PlDistance::Bound(d) => Some(d),
            PlDistance::ExceedsCap => None,
        }
    }
}

impl std::fmt::Display for PlDistance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlDistance::Bound(d) => write!(f, "{d}"),
            PlDistance::ExceedsCap => write!(f, "exceeds-cap"),
        }
    }
}

/// Upper bound from two balls: the least `d_α(m) + d_β(m)` over common vertices `m`.
pub fn meet(ball_a: &Ball, ball_b: &Ball) -> Option<usize> {
    let (small, large) = if ball_a.depths.len() <= ball_b.depths.len() {
        (&ball_a.depths, &ball_b.depths)
    } else {
        (&ball_b.depths, &ball_a.depths)
    };
    small.iter().filter_map(|(v, d)| large.get(v).map(|e| d + e)).min()
}
