//! Shared fixtures and slow reference implementations.
#![allow(dead_code)]

use std::collections::BTreeSet;

use mulecheck_core::graph::{automorphisms, Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edge_list(10, &edges).unwrap()
}

/// Plain backtracking with no pruning beyond adjacency.
pub fn naive_list_colorable(g: &Graph, lists: &[u64]) -> bool {
    fn go(g: &Graph, lists: &[u64], v: usize, color: &mut Vec<u32>) -> bool {
        if v == lists.len() {
            return true;
        }
        for c in 0..64u32 {
            if lists[v] >> c & 1 == 0 {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) && color[u] == c) {
                continue;
            }
            color[v] = c;
            if go(g, lists, v + 1, color) {
                return true;
            }
        }
        false
    }
    go(g, lists, 0, &mut vec![0; lists.len()])
}

pub fn naive_chromatic(g: &Graph) -> usize {
    (0..=g.order()).find(|&k| naive_list_colorable(g, &vec![(1u64 << k) - 1; g.order()])).unwrap()
}

pub fn naive_clique_number(g: &Graph) -> usize {
    (0u32..1 << g.order())
        .filter(|&m| g.is_clique(VertexSet(m)))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// All `k`-subsets of `{1, ..., p}` as bitmasks, increasing as sorted sequences.
pub fn subsets(p: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn go(from: u32, p: u32, k: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for c in from..=p {
            go(c + 1, p, k - 1, cur | 1 << c, out);
        }
    }
    go(1, p as u32, k, 0, &mut out);
    out
}

/// Every assignment with `|L(v)| = sizes[v]` drawn from `{1, ..., p}`.
pub fn all_assignments(sizes: &[usize], p: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &k in sizes {
        let choices = subsets(p, k);
        let mut next = Vec::new();
        for a in &out {
            for &c in &choices {
                let mut b = a.clone();
                b.push(c);
                next.push(b);
            }
        }
        out = next;
    }
    out
}

pub fn pot(lists: &[u64]) -> u64 {
    lists.iter().fold(0, |a, &l| a | l)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Sort key that orders colour sets as sorted sequences.
pub fn seq_key(lists: &[u64]) -> Vec<Vec<u32>> {
    lists.iter().map(|&l| (0..64).filter(|c| l >> c & 1 == 1).collect()).collect()
}

/// Least member of the orbit of `lists` under relabelling the colours
/// `1..=p` and, optionally, under the given vertex permutations.
pub fn orbit_min(lists: &[u64], p: usize, vertex_perms: &[Vec<usize>]) -> Vec<u64> {
    let mut best: Option<Vec<u64>> = None;
    for sigma in vertex_perms {
        for pi in permutations(p) {
            let relabel = |l: u64| {
                let mut o = 0u64;
                for c in 1..=p {
                    if l >> c & 1 == 1 {
                        o |= 1 << (pi[c - 1] + 1);
                    }
                }
                o
            };
            // vertex sigma[v] gets the list of v
            let mut img = vec![0u64; lists.len()];
            for (v, &l) in lists.iter().enumerate() {
                img[sigma[v]] = relabel(l);
            }
            if best.as_ref().is_none_or(|b| seq_key(&img) < seq_key(b)) {
                best = Some(img);
            }
        }
    }
    best.unwrap()
}

pub fn identity_only(n: usize) -> Vec<Vec<usize>> {
    vec![(0..n).collect()]
}

pub fn size_preserving_automorphisms(g: &Graph, sizes: &[usize]) -> Vec<Vec<usize>> {
    automorphisms(g, sizes, 100_000).0
}

/// Orbit minima among assignments with pot exactly `{1, ..., p}`.
pub fn orbit_minima(g: &Graph, sizes: &[usize], p: usize, use_auts: bool) -> BTreeSet<Vec<Vec<u32>>> {
    let perms = if use_auts { size_preserving_automorphisms(g, sizes) } else { identity_only(g.order()) };
    let full = (1u64 << (p + 1)) - 2;
    all_assignments(sizes, p)
        .into_iter()
        .filter(|l| pot(l) == full)
        .map(|l| seq_key(&orbit_min(&l, p, &perms)))
        .collect()
}
