//! Exact clique, independence and chromatic computations.

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, VertexSet, MAX_ORDER};

/// Largest order for which exact chromatic computations are attempted.
pub const EXACT_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInvariants {
    pub order: usize,
    pub size: usize,
    pub max_degree: usize,
    pub clique_number: usize,
    pub chromatic_number: usize,
    pub independence_number: usize,
}

pub fn invariants(g: &Graph) -> Result<GraphInvariants, GraphError> {
    Ok(GraphInvariants {
        order: g.order(),
        size: g.size(),
        max_degree: g.max_degree(),
        clique_number: clique_number(g),
        chromatic_number: chromatic_number(g)?,
        independence_number: independence_number(g),
    })
}

pub fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    max_clique_rec(g, 0, g.vertices(), &mut best);
    best
}

fn max_clique_rec(g: &Graph, size: usize, mut cand: VertexSet, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    while let Some(v) = cand.first() {
        if size + cand.len() <= *best {
            return;
        }
        cand.remove(v);
        max_clique_rec(g, size + 1, cand.intersection(g.neighbors(v)), best);
    }
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// All maximal cliques, via Bron–Kerbosch with pivoting.
pub(crate) fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    out
}

fn bron_kerbosch(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p.union(x).iter().max_by_key(|&u| p.intersection(g.neighbors(u)).len()).unwrap();
    let (mut p, mut x) = (p, x);
    for v in p.difference(g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}

/// Every clique of size `ω(G)`, sorted.
pub fn maximum_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut all = maximal_cliques(g);
    let w = all.iter().map(|c| c.len()).max().unwrap_or(0);
    all.retain(|c| c.len() == w);
    all.sort();
    all
}

/// Every maximal independent set, sorted.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut all = maximal_cliques(&g.complement());
    all.sort();
    all
}

/// DSATUR greedy coloring; colors are `0..`.
pub fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut color = vec![usize::MAX; n];
    let mut seen = vec![0u64; n];
    let mut left = g.vertices();
    while !left.is_empty() {
        let v = left
            .iter()
            .max_by_key(|&v| (seen[v].count_ones(), g.neighbors(v).intersection(left).len()))
            .unwrap();
        let c = (!seen[v]).trailing_zeros() as usize;
        color[v] = c;
        left.remove(v);
        for u in g.neighbors(v) {
            seen[u] |= 1 << c;
        }
    }
    color
}

fn check_limit(g: &Graph) -> Result<(), GraphError> {
    if g.order() > EXACT_LIMIT {
        Err(GraphError::ExactLimit(g.order()))
    } else {
        Ok(())
    }
}

/// A proper coloring with colors `0..k`, if one exists.
pub fn k_coloring(g: &Graph, k: usize) -> Result<Option<Vec<usize>>, GraphError> {
    check_limit(g)?;
    let n = g.order();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    if k >= n {
        return Ok(Some((0..n).collect()));
    }
    let mut color = [u8::MAX; MAX_ORDER];
    let forbidden = [0u32; MAX_ORDER];
    let full = if k >= 32 { u32::MAX } else { (1u32 << k) - 1 };
    if dsatur(g, full, &mut color, forbidden, g.vertices(), 0) {
        Ok(Some(color[..n].iter().map(|&c| c as usize).collect()))
    } else {
        Ok(None)
    }
}

pub fn is_k_colorable(g: &Graph, k: usize) -> Result<bool, GraphError> {
    Ok(k_coloring(g, k)?.is_some())
}

fn dsatur(
    g: &Graph,
    full: u32,
    color: &mut [u8; MAX_ORDER],
    forbidden: [u32; MAX_ORDER],
    left: VertexSet,
    used: usize,
) -> bool {
    if left.is_empty() {
        return true;
    }
    let mut pick = usize::MAX;
    let mut key = (0u32, 0usize);
    for v in left {
        let sat = forbidden[v].count_ones();
        if forbidden[v] & full == full {
            return false;
        }
        let k = (sat, g.neighbors(v).intersection(left).len());
        if pick == usize::MAX || k > key {
            pick = v;
            key = k;
        }
    }
    let v = pick;
    // a fresh color is interchangeable with every other fresh color
    let limit = (used + 1).min(full.count_ones() as usize);
    let mut options = !forbidden[v] & full & ((1u64 << limit) - 1) as u32;
    while options != 0 {
        let c = options.trailing_zeros();
        options &= options - 1;
        let mut next = forbidden;
        for u in g.neighbors(v).intersection(left) {
            next[u] |= 1 << c;
        }
        color[v] = c as u8;
        if dsatur(g, full, color, next, left.without(v), used.max(c as usize + 1)) {
            return true;
        }
    }
    color[v] = u8::MAX;
    false
}

pub fn chromatic_number(g: &Graph) -> Result<usize, GraphError> {
    check_limit(g)?;
    if g.order() == 0 {
        return Ok(0);
    }
    let upper = greedy_coloring(g).into_iter().max().unwrap() + 1;
    let mut k = clique_number(g);
    while k < upper {
        if is_k_colorable(g, k)? {
            return Ok(k);
        }
        k += 1;
    }
    Ok(upper)
}

/// `χ(G) = k` and `χ(G - v) = k - 1` for every vertex `v`.
pub fn is_vertex_critical(g: &Graph, k: usize) -> Result<bool, GraphError> {
    if chromatic_number(g)? != k {
        return Ok(false);
    }
    for v in 0..g.order() {
        let h = g.delete_vertex(v)?.graph;
        if !is_k_colorable(&h, k.saturating_sub(1))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A copy of `K_s ∨ E_t` in `G` (not necessarily induced).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueJoinWitness {
    pub clique: VertexSet,
    pub common: VertexSet,
}

/// Finds an `s`-clique `Q` with at least `t` common neighbours outside `Q`.
///
/// Returns the lexicographically first such clique together with its `t`
/// smallest common neighbours.
pub fn contains_clique_join(g: &Graph, s: usize, t: usize) -> Option<CliqueJoinWitness> {
    if s == 0 {
        return (g.order() >= t)
            .then(|| CliqueJoinWitness { clique: VertexSet::EMPTY, common: VertexSet::full(t) });
    }
    let mut found = None;
    clique_join_rec(g, s, t, VertexSet::EMPTY, g.vertices(), g.vertices(), &mut found);
    found
}

fn clique_join_rec(
    g: &Graph,
    s: usize,
    t: usize,
    clique: VertexSet,
    cand: VertexSet,
    common: VertexSet,
    found: &mut Option<CliqueJoinWitness>,
) -> bool {
    let need = s - clique.len();
    if need == 0 {
        if common.len() >= t {
            let picked = common.iter().take(t).collect();
            *found = Some(CliqueJoinWitness { clique, common: picked });
            return true;
        }
        return false;
    }
    if common.len() < t + need {
        return false;
    }
    for v in cand {
        let nv = g.neighbors(v);
        let next_cand = VertexSet(cand.0 & nv.0 & !((2u64 << v) - 1) as u32);
        let next_common = if clique.is_empty() { nv } else { common.intersection(nv) };
        if clique_join_rec(g, s, t, clique.with(v), next_cand, next_common, found) {
            return true;
        }
    }
    false
}
