//! Exhaustive generation of small graphs up to isomorphism.

use std::collections::HashMap;

use super::{is_isomorphic, Graph, VertexSet};

type Key = Vec<(usize, Vec<usize>, usize)>;

fn invariant_key(g: &Graph) -> Key {
    let mut key: Key = (0..g.order())
        .map(|v| {
            let nv = g.neighbors(v);
            let mut nd: Vec<usize> = nv.iter().map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            let tri = nv.iter().map(|u| g.neighbors(u).intersection(nv).len()).sum::<usize>() / 2;
            (nv.len(), nd, tri)
        })
        .collect();
    key.sort();
    key
}

/// One representative of every isomorphism class of graphs on `n` vertices.
///
/// Built by extending each class on `n - 1` vertices with a new vertex in
/// every possible way and discarding repeats. Practical up to `n = 7`
/// (1044 classes); `n = 8` takes noticeably longer.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut layer = vec![Graph::empty(0).unwrap()];
    for k in 1..=n {
        layer = extend(&layer, k);
    }
    layer
}

/// All graphs on `1..=n` vertices, smallest first.
pub fn all_graphs_up_to(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut layer = vec![Graph::empty(0).unwrap()];
    for k in 1..=n {
        layer = extend(&layer, k);
        out.extend(layer.iter().cloned());
    }
    out
}

fn extend(smaller: &[Graph], n: usize) -> Vec<Graph> {
    if n == 1 {
        return vec![Graph::empty(1).unwrap()];
    }
    let mut buckets: HashMap<Key, Vec<usize>> = HashMap::new();
    let mut out: Vec<Graph> = Vec::new();
    for base in smaller {
        for mask in 0u32..(1 << (n - 1)) {
            let mut rows: Vec<VertexSet> = base.rows().to_vec();
            let nbrs = VertexSet(mask);
            for u in nbrs {
                rows[u].insert(n - 1);
            }
            rows.push(nbrs);
            let g = Graph::from_rows(rows);
            let bucket = buckets.entry(invariant_key(&g)).or_default();
            if bucket.iter().any(|&i| is_isomorphic(&out[i], &g)) {
                continue;
            }
            bucket.push(out.len());
            out.push(g);
        }
    }
    out
}

pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    all_graphs_up_to(n).into_iter().filter(Graph::is_connected).collect()
}
