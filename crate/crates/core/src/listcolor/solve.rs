//! Backtracking list-colouring solver.

use super::{ColorSet, ColoringWitness, ListAssignment};
use crate::graph::{Graph, MAX_ORDER};

const NONE: u8 = u8::MAX;
const MAX_CLIQUES: usize = 256;

/// Solver state fixed per graph, reused across many list assignments.
#[derive(Debug, Clone)]
pub(crate) struct Colorer {
    n: usize,
    adj: [u32; MAX_ORDER],
    /// Maximal cliques with at least three vertices, for the Hall test.
    cliques: Vec<u32>,
}

struct Run<'a> {
    c: &'a Colorer,
    color: [u8; MAX_ORDER],
    peeled: [(u8, u64); MAX_ORDER],
    npeeled: usize,
}

impl Colorer {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = [0u32; MAX_ORDER];
        for (v, row) in adj.iter_mut().enumerate().take(n) {
            *row = g.neighbors(v).0;
        }
        let mut cliques: Vec<u32> =
            crate::graph::maximal_cliques(g).into_iter().filter(|q| q.len() >= 3).map(|q| q.0).collect();
        cliques.sort_by_key(|q| std::cmp::Reverse(q.count_ones()));
        cliques.truncate(MAX_CLIQUES);
        Colorer { n, adj, cliques }
    }

    pub fn colorable(&self, lists: &[u64]) -> bool {
        self.run(lists).is_some()
    }

    pub fn coloring(&self, lists: &[u64]) -> Option<Vec<u32>> {
        self.run(lists).map(|c| c[..self.n].iter().map(|&x| x as u32).collect())
    }

    fn run(&self, lists: &[u64]) -> Option<[u8; MAX_ORDER]> {
        debug_assert_eq!(lists.len(), self.n);
        let mut avail = [0u64; MAX_ORDER];
        for (v, &l) in lists.iter().enumerate() {
            if l == 0 {
                return None;
            }
            avail[v] = l;
        }
        let left = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        let mut run = Run { c: self, color: [NONE; MAX_ORDER], peeled: [(0, 0); MAX_ORDER], npeeled: 0 };
        if run.search(avail, left) {
            Some(run.color)
        } else {
            None
        }
    }
}

impl Run<'_> {
    fn search(&mut self, avail: [u64; MAX_ORDER], mut left: u32) -> bool {
        let base = self.npeeled;
        // vertices with more colours than uncoloured neighbours can wait
        loop {
            let mut changed = false;
            let mut it = left;
            while it != 0 {
                let v = it.trailing_zeros() as usize;
                it &= it - 1;
                if avail[v].count_ones() > (self.c.adj[v] & left).count_ones() {
                    left &= !(1 << v);
                    self.peeled[self.npeeled] = (v as u8, avail[v]);
                    self.npeeled += 1;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if left == 0 {
            self.finish();
            return true;
        }
        for &q in &self.c.cliques {
            let u = q & left;
            if u.count_ones() < 3 {
                continue;
            }
            let mut pot = 0u64;
            let mut it = u;
            while it != 0 {
                pot |= avail[it.trailing_zeros() as usize];
                it &= it - 1;
            }
            if pot.count_ones() < u.count_ones() {
                self.npeeled = base;
                return false;
            }
        }
        let mut best = usize::MAX;
        let mut bv = 0;
        let mut it = left;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let k = avail[v].count_ones() as usize;
            if k < best {
                best = k;
                bv = v;
                if k == 0 {
                    break;
                }
            }
        }
        if best == 0 {
            self.npeeled = base;
            return false;
        }
        let v = bv;
        let rest = left & !(1 << v);
        let nb = self.c.adj[v] & rest;
        let mut cs = avail[v];
        while cs != 0 {
            let c = cs.trailing_zeros();
            cs &= cs - 1;
            let mut next = avail;
            let mut it = nb;
            while it != 0 {
                next[it.trailing_zeros() as usize] &= !(1u64 << c);
                it &= it - 1;
            }
            self.color[v] = c as u8;
            if self.search(next, rest) {
                return true;
            }
        }
        self.color[v] = NONE;
        self.npeeled = base;
        false
    }

    fn finish(&mut self) {
        for i in (0..self.npeeled).rev() {
            let (v, l) = self.peeled[i];
            let v = v as usize;
            let mut used = 0u64;
            let mut it = self.c.adj[v];
            while it != 0 {
                let u = it.trailing_zeros() as usize;
                it &= it - 1;
                if self.color[u] != NONE {
                    used |= 1 << self.color[u];
                }
            }
            let free = l & !used;
            debug_assert!(free != 0);
            self.color[v] = free.trailing_zeros() as u8;
        }
    }
}

/// A proper colouring with every vertex coloured from its list, or `None`.
///
/// Deterministic. Panics if `l` does not have one list per vertex.
pub fn color_from_lists(g: &Graph, l: &ListAssignment) -> Option<ColoringWitness> {
    assert_eq!(g.order(), l.len(), "one list per vertex");
    let lists: Vec<u64> = l.lists().iter().map(|s: &ColorSet| s.0).collect();
    Colorer::new(g).coloring(&lists).map(|colors| ColoringWitness { colors })
}
