//! Blocks, Gallai trees and short-chorded even cycles.

use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::graph::{Graph, GraphError, VertexSet};

/// Largest order accepted by [`has_even_cycle_with_at_most_one_chord`].
pub const CYCLE_SEARCH_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Maximal 2-connected pieces, bridges, and isolated vertices, sorted.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

struct Dfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cuts: VertexSet,
}

impl Dfs<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        let mut children = 0;
        for w in self.g.neighbors(u) {
            if self.disc[w] == 0 {
                children += 1;
                self.stack.push((u, w));
                self.visit(w, Some(u));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.cuts.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// Block decomposition by depth-first search (Hopcroft and Tarjan).
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            if g.degree(v) == 0 {
                dfs.blocks.push(VertexSet::singleton(v));
                dfs.time += 1;
                dfs.disc[v] = dfs.time;
            } else {
                dfs.visit(v, None);
            }
        }
    }
    let mut blocks = dfs.blocks;
    blocks.sort();
    BlockDecomposition { blocks, cut_vertices: dfs.cuts }
}

fn is_odd_cycle(g: &Graph, b: VertexSet) -> bool {
    b.len() >= 3 && b.len() % 2 == 1 && b.iter().all(|v| g.neighbors(v).intersection(b).len() == 2)
}

/// Every block is a complete graph or an odd cycle.
pub fn is_gallai_tree(g: &Graph) -> Result<bool, ClassifyError> {
    if !g.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    Ok(block_decomposition(g).blocks.iter().all(|&b| g.is_clique(b) || is_odd_cycle(g, b)))
}

fn is_cycle(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).intersection(s).len() == 2) && {
        let start = s.first().unwrap();
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next.union(g.neighbors(u).intersection(s));
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen == s
    }
}

/// An induced subgraph that is an even cycle, possibly plus one chord.
///
/// Exhaustive over vertex subsets; refused above [`CYCLE_SEARCH_LIMIT`] vertices.
pub fn find_even_cycle_with_at_most_one_chord(g: &Graph) -> Result<Option<VertexSet>, GraphError> {
    let n = g.order();
    if n > CYCLE_SEARCH_LIMIT {
        return Err(GraphError::ExactLimit(n));
    }
    let rows: Vec<u32> = g.rows().iter().map(|r| r.0).collect();
    for mask in 1u32..(1u32 << n) {
        let k = mask.count_ones() as usize;
        if k < 4 || k % 2 == 1 {
            continue;
        }
        let mut degs = [0u32; 32];
        let mut twice = 0;
        let mut bad = false;
        let mut it = mask;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let d = (rows[v] & mask).count_ones();
            if !(2..=3).contains(&d) {
                bad = true;
                break;
            }
            degs[v] = d;
            twice += d as usize;
        }
        if bad {
            continue;
        }
        let s = VertexSet(mask);
        if twice == 2 * k {
            if is_cycle(g, s) {
                return Ok(Some(s));
            }
        } else if twice == 2 * k + 2 {
            let heavy: Vec<usize> = s.iter().filter(|&v| degs[v] == 3).collect();
            let (a, b) = (heavy[0], heavy[1]);
            if g.has_edge(a, b) {
                let trimmed = g.remove_edge(a, b)?;
                if is_cycle(&trimmed, s) {
                    return Ok(Some(s));
                }
            }
        }
    }
    Ok(None)
}

pub fn has_even_cycle_with_at_most_one_chord(g: &Graph) -> Result<bool, GraphError> {
    Ok(find_even_cycle_with_at_most_one_chord(g)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn g(s: &str) -> Graph {
        named(s).unwrap()
    }

    #[test]
    fn blocks_of_small_graphs() {
        let p4 = block_decomposition(&g("P4"));
        assert_eq!(p4.blocks.len(), 3);
        assert_eq!(p4.cut_vertices.len(), 2);
        let k4 = block_decomposition(&g("K4"));
        assert_eq!(k4.blocks, vec![VertexSet::full(4)]);
        assert!(k4.cut_vertices.is_empty());
        let bowtie = Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let bt = block_decomposition(&bowtie);
        assert_eq!(bt.blocks.len(), 2);
        assert_eq!(bt.cut_vertices, VertexSet::singleton(2));
        let iso = block_decomposition(&g("E2"));
        assert_eq!(iso.blocks.len(), 2);
    }

    #[test]
    fn gallai_trees() {
        assert!(is_gallai_tree(&g("K4")).unwrap());
        assert!(!is_gallai_tree(&g("C6")).unwrap());
        assert!(is_gallai_tree(&g("C5")).unwrap());
        assert!(is_gallai_tree(&g("K1")).unwrap());
        assert!(is_gallai_tree(&g("E2")).is_err());
    }

    #[test]
    fn chorded_even_cycles() {
        assert!(has_even_cycle_with_at_most_one_chord(&g("C4")).unwrap());
        assert!(!has_even_cycle_with_at_most_one_chord(&g("C5")).unwrap());
        assert!(!has_even_cycle_with_at_most_one_chord(&g("K4")).unwrap());
        let diamond = g("K4").remove_edge(0, 1).unwrap();
        assert!(has_even_cycle_with_at_most_one_chord(&diamond).unwrap());
        assert!(has_even_cycle_with_at_most_one_chord(&g("C6")).unwrap());
    }
}
