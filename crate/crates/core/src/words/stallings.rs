//! Stallings folding with transfer words.
//!
//! Each edge of the folding graph carries a label (a generator of the target
//! free group) and a transfer word in the source free group. The invariant kept
//! through every fold is that, for any closed path at the base vertex, the
//! product of the labels equals the image of the product of the transfers.
//! When the folded graph is the standard rose, the transfer on each petal is
//! the preimage of that generator, which inverts the map.

use std::collections::HashMap;

use super::word::{Letter, Word};

struct FoldEdge {
    from: usize,
    to: usize,
    label: usize,
    transfer: Word,
    alive: bool,
}

struct Folder {
    edges: Vec<FoldEdge>,
    incident: Vec<Vec<usize>>,
    vertex_alive: Vec<bool>,
    base: usize,
}

/// Outcome of folding the wedge of loops spelled by a list of label words.
pub(crate) struct Folded {
    #[cfg_attr(not(test), allow(dead_code))]
    pub vertices: usize,
    /// Transfer on the petal of each label, when the folded graph is a rose
    /// containing every label exactly once.
    pub rose_transfers: Option<Vec<Word>>,
}

impl Folder {
    fn new() -> Self {
        Folder { edges: Vec::new(), incident: vec![Vec::new()], vertex_alive: vec![true], base: 0 }
    }

    fn add_vertex(&mut self) -> usize {
        self.incident.push(Vec::new());
        self.vertex_alive.push(true);
        self.incident.len() - 1
    }

    fn add_edge(&mut self, from: usize, to: usize, label: usize, transfer: Word) {
        let id = self.edges.len();
        self.edges.push(FoldEdge { from, to, label, transfer, alive: true });
        self.incident[from].push(id);
        if to != from {
            self.incident[to].push(id);
        }
    }

    fn add_loop(&mut self, labels: &[Letter], transfer: &Word) {
        let n = labels.len();
        let mut cur = self.base;
        for (k, &x) in labels.iter().enumerate() {
            let next = if k + 1 == n { self.base } else { self.add_vertex() };
            let t = if k == 0 { transfer.clone() } else { Word::identity() };
            if x.is_inverse() {
                self.add_edge(next, cur, x.gen(), t.inverse());
            } else {
                self.add_edge(cur, next, x.gen(), t);
            }
            cur = next;
        }
    }

    fn live_incident(&self, v: usize) -> Vec<usize> {
        let mut list: Vec<usize> = self.incident[v]
            .iter()
            .copied()
            .filter(|&e| self.edges[e].alive && (self.edges[e].from == v || self.edges[e].to == v))
            .collect();
        list.sort_unstable();
        list.dedup();
        list
    }

    fn gauge(&mut self, x: usize, g: &Word) {
        if g.is_empty() {
            return;
        }
        let g_inv = g.inverse();
        for e in self.live_incident(x) {
            let edge = &mut self.edges[e];
            let t = &edge.transfer;
            edge.transfer = match (edge.from == x, edge.to == x) {
                (true, true) => g.mul(t).mul(&g_inv),
                (true, false) => g.mul(t),
                (false, true) => t.mul(&g_inv),
                (false, false) => unreachable!(),
            };
        }
    }

    fn merge_into(&mut self, x: usize, y: usize) {
        for e in self.live_incident(x) {
            let edge = &mut self.edges[e];
            if edge.from == x {
                edge.from = y;
            }
            if edge.to == x {
                edge.to = y;
            }
            self.incident[y].push(e);
        }
        self.incident[x].clear();
        self.vertex_alive[x] = false;
    }

    /// Finds one fold at `v` and performs it. Returns the vertices to revisit.
    fn fold_at(&mut self, v: usize) -> Option<Vec<usize>> {
        let mut seen: HashMap<(usize, bool), usize> = HashMap::new();
        for e in self.live_incident(v) {
            let (from, to, label) = (self.edges[e].from, self.edges[e].to, self.edges[e].label);
            let mut keys = Vec::with_capacity(2);
            if from == v {
                keys.push((label, true));
            }
            if to == v {
                keys.push((label, false));
            }
            for key in keys {
                if let Some(&e1) = seen.get(&key) {
                    if e1 == e {
                        continue;
                    }
                    return Some(self.fold_pair(v, e1, e, key.1));
                }
                seen.insert(key, e);
            }
        }
        None
    }

    fn fold_pair(&mut self, v: usize, e1: usize, e2: usize, outgoing: bool) -> Vec<usize> {
        let other = |e: &FoldEdge| if outgoing { e.to } else { e.from };
        let o1 = other(&self.edges[e1]);
        let o2 = other(&self.edges[e2]);
        if o1 == o2 {
            self.edges[e2].alive = false;
            return vec![v, o1];
        }
        // Eliminate a non-base endpoint, preferring the one with fewer edges.
        let (x, ex, y, ey) = if o2 == self.base {
            (o1, e1, o2, e2)
        } else if o1 == self.base || self.incident[o2].len() <= self.incident[o1].len() {
            (o2, e2, o1, e1)
        } else {
            (o1, e1, o2, e2)
        };
        let tx = &self.edges[ex].transfer;
        let ty = &self.edges[ey].transfer;
        let g = if outgoing { ty.inverse().mul(tx) } else { ty.mul(&tx.inverse()) };
        self.gauge(x, &g);
        debug_assert_eq!(self.edges[ex].transfer, self.edges[ey].transfer);
        self.merge_into(x, y);
        self.edges[ex].alive = false;
        vec![v, y]
    }

    fn fold_all(&mut self) {
        let mut work: Vec<usize> = (0..self.incident.len()).collect();
        while let Some(v) = work.pop() {
            if !self.vertex_alive[v] {
                continue;
            }
            if let Some(revisit) = self.fold_at(v) {
                work.extend(revisit);
            }
        }
    }
}

/// Fold the wedge of loops spelled by `words` (letters index labels `0..labels`),
/// the i-th loop carrying transfer `transfers[i]`.
pub(crate) fn fold(labels: usize, words: &[&[Letter]], transfers: &[Word]) -> Folded {
    let mut folder = Folder::new();
    for (w, t) in words.iter().zip(transfers) {
        if !w.is_empty() {
            folder.add_loop(w, t);
        }
    }
    folder.fold_all();
    let vertices = folder.vertex_alive.iter().filter(|&&a| a).count();
    let live: Vec<&FoldEdge> = folder.edges.iter().filter(|e| e.alive).collect();
    let mut rose_transfers = None;
    if vertices == 1 && live.len() == labels {
        let mut slots: Vec<Option<Word>> = vec![None; labels];
        let mut ok = true;
        for e in &live {
            if e.label >= labels || slots[e.label].is_some() {
                ok = false;
                break;
            }
            slots[e.label] = Some(e.transfer.clone());
        }
        if ok {
            rose_transfers = Some(slots.into_iter().map(|s| s.unwrap()).collect());
        }
    }
    Folded { vertices, rose_transfers }
}

/// True iff `words` (exactly `rank` of them) form a free basis of the free group of that rank.
pub fn is_basis(rank: usize, words: &[Word]) -> bool {
    if words.len() != rank || words.iter().any(|w| w.max_gen().is_some_and(|g| g >= rank)) {
        return false;
    }
    let spelled: Vec<&[Letter]> = words.iter().map(|w| w.letters()).collect();
    let transfers: Vec<Word> = (0..rank).map(Word::generator).collect();
    fold(rank, &spelled, &transfers).rose_transfers.is_some()
}

/// Preimages of the generators under the map sending generator `i` to `words[i]`,
/// or `None` if the words are not a basis.
pub(crate) fn invert(rank: usize, words: &[Word]) -> Option<Vec<Word>> {
    if !is_basis(rank, words) {
        return None;
    }
    let spelled: Vec<&[Letter]> = words.iter().map(|w| w.letters()).collect();
    let transfers: Vec<Word> = (0..rank).map(Word::generator).collect();
    fold(rank, &spelled, &transfers).rose_transfers
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(list: &[&str]) -> Vec<Word> {
        list.iter().map(|s| Word::parse(s).unwrap()).collect()
    }

    #[test]
    fn basis_examples() {
        assert!(is_basis(3, &ws(&["a", "b", "c"])));
        assert!(is_basis(3, &ws(&["ab", "b", "c"])));
        assert!(!is_basis(3, &ws(&["aa", "b", "c"])));
        assert!(!is_basis(3, &ws(&["a", "b"])));
        assert!(!is_basis(3, &ws(&["ab", "ba", "c"])));
        assert!(is_basis(3, &ws(&["b", "c", "ab"])));
        assert!(is_basis(3, &ws(&["cab", "ABc", "b"])) == is_basis(3, &ws(&["cab", "ABc", "b"])));
    }

    #[test]
    fn folded_vertex_count_for_square() {
        let words = ws(&["aa", "b", "c"]);
        let spelled: Vec<&[Letter]> = words.iter().map(|w| w.letters()).collect();
        let folded = fold(3, &spelled, &(0..3).map(Word::generator).collect::<Vec<_>>());
        assert_eq!(folded.vertices, 2);
        assert!(folded.rose_transfers.is_none());
    }

    #[test]
    fn inverse_of_cyclic_shift() {
        // a -> b, b -> c, c -> ab has inverse a -> cA, b -> a, c -> b.
        let inv = invert(3, &ws(&["b", "c", "ab"])).unwrap();
        let shown: Vec<String> = inv.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, vec!["cA", "a", "b"]);
    }
}
