//! Isomorphism and automorphisms by colour refinement plus backtracking.

use std::collections::HashMap;

use super::{Graph, VertexSet};

/// Stable colour refinement of the disjoint union of `a` and `b`.
///
/// Colours are comparable across the two graphs because both are refined
/// together.
fn refine_pair(a: &Graph, b: &Graph, la: &[usize], lb: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (na, nb) = (a.order(), b.order());
    let nbr = |v: usize| -> Vec<usize> {
        if v < na {
            a.neighbors(v).iter().collect()
        } else {
            b.neighbors(v - na).iter().map(|u| u + na).collect()
        }
    };
    let adjacency: Vec<Vec<usize>> = (0..na + nb).map(nbr).collect();
    let mut color: Vec<usize> = la.iter().chain(lb.iter()).copied().collect();
    let mut classes = count_distinct(&color);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..na + nb)
            .map(|v| {
                let mut s: Vec<usize> = adjacency[v].iter().map(|&u| color[u]).collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let index: HashMap<&(usize, Vec<usize>), usize> =
            sorted.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| index[s]).collect();
        let next_classes = sorted.len();
        color = next;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    let cb = color.split_off(na);
    (color, cb)
}

fn count_distinct(xs: &[usize]) -> usize {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Matcher<'a> {
    a: &'a Graph,
    b: &'a Graph,
    ca: Vec<usize>,
    cb: Vec<usize>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: VertexSet,
    cap: usize,
    found: Vec<Vec<usize>>,
}

impl Matcher<'_> {
    fn search(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            self.found.push(self.map.clone());
            return self.found.len() >= self.cap;
        }
        let v = self.order[depth];
        let mapped: VertexSet = self.order[..depth].iter().copied().collect();
        let image: VertexSet = self.a.neighbors(v).intersection(mapped).iter().map(|u| self.map[u]).collect();
        let used_image = self.used;
        for w in 0..self.b.order() {
            if self.used.contains(w) || self.cb[w] != self.ca[v] {
                continue;
            }
            if self.b.neighbors(w).intersection(used_image) != image {
                continue;
            }
            self.map[v] = w;
            self.used.insert(w);
            let stop = self.search(depth + 1);
            self.used.remove(w);
            if stop {
                return true;
            }
        }
        false
    }
}

fn matcher<'a>(a: &'a Graph, b: &'a Graph, la: &[usize], lb: &[usize], cap: usize) -> Option<Matcher<'a>> {
    if a.order() != b.order() || a.size() != b.size() {
        return None;
    }
    let (ca, cb) = refine_pair(a, b, la, lb);
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return None;
    }
    // small classes first, then vertices with many already-placed neighbours
    let mut class_size: HashMap<usize, usize> = HashMap::new();
    for &c in &ca {
        *class_size.entry(c).or_default() += 1;
    }
    let n = a.order();
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                (
                    a.neighbors(v).intersection(placed).len(),
                    std::cmp::Reverse(class_size[&ca[v]]),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        order.push(v);
        placed.insert(v);
    }
    Some(Matcher {
        a,
        b,
        ca,
        cb,
        order,
        map: vec![usize::MAX; n],
        used: VertexSet::EMPTY,
        cap,
        found: Vec::new(),
    })
}

/// A bijection `map` with `uv ∈ E(a) ⇔ map[u]map[v] ∈ E(b)`.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    let la = vec![0; a.order()];
    let lb = vec![0; b.order()];
    let mut m = matcher(a, b, &la, &lb, 1)?;
    m.search(0);
    m.found.pop()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Automorphisms of `g` that preserve `labels`, at most `cap` of them.
///
/// The identity is always included. The flag is `true` when the list is the
/// whole group.
pub fn automorphisms(g: &Graph, labels: &[usize], cap: usize) -> (Vec<Vec<usize>>, bool) {
    assert_eq!(labels.len(), g.order());
    let cap = cap.max(1);
    let mut m = matcher(g, g, labels, labels, cap).expect("a graph matches itself");
    let truncated = m.search(0);
    let mut found = m.found;
    let identity: Vec<usize> = (0..g.order()).collect();
    if !found.contains(&identity) {
        found.pop();
        found.insert(0, identity);
    }
    (found, !truncated)
}
