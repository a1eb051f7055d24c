//! Small simple graphs stored as per-vertex adjacency bitsets.

mod coloring;
mod generate;
mod io;
mod iso;
mod named;
mod ops;
mod vertex_set;

pub(crate) use coloring::maximal_cliques;
pub use coloring::{
    chromatic_number, clique_number, contains_clique_join, greedy_coloring, independence_number, invariants,
    is_k_colorable, is_vertex_critical, k_coloring, maximal_independent_sets, maximum_cliques,
    CliqueJoinWitness, GraphInvariants, EXACT_LIMIT,
};
pub use generate::{all_graphs, all_graphs_up_to, connected_graphs_up_to};
pub use io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6, ParseError};
pub use iso::{automorphisms, find_isomorphism, is_isomorphic};
pub use named::{blown_cycle, named};
pub use vertex_set::{VertexIter, VertexSet};

use std::fmt;

use thiserror::Error;

/// Largest supported order; one adjacency row fits in a `u32`.
pub const MAX_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} is not in the graph")]
    InvalidVertex(usize),
    #[error("vertex set {0:?} is not independent")]
    NotIndependent(VertexSet),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("exact computation refused: order {0} exceeds the limit of {EXACT_LIMIT}")]
    ExactLimit(usize),
}

/// An immutable simple graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph { adj: vec![VertexSet::EMPTY; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from rows that are already symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(adj.len() <= MAX_ORDER);
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, row)| !row.contains(v) && row.iter().all(|u| u < adj.len() && adj[u].contains(v))));
        Graph { adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.len()).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].intersection(s).is_empty())
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    /// Number of edges with at least one endpoint in `s`.
    pub fn edges_touching(&self, s: VertexSet) -> usize {
        let inside: usize = s.iter().map(|v| self.adj[v].intersection(s).len()).sum::<usize>() / 2;
        let outgoing: usize = s.iter().map(|v| self.adj[v].difference(s).len()).sum();
        inside + outgoing
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        self.component_of(0).len() == n
    }

    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next.union(self.adj[u]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.component_of(v);
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex(v))
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        match s.difference(self.vertices()).first() {
            Some(v) => Err(GraphError::InvalidVertex(v)),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// Result of an operation that re-packs vertex indices.
///
/// `old_to_new[v]` is `Some(w)` when old vertex `v` survives as new vertex `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Repacked {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
}

impl Repacked {
    /// The new-to-old direction of the map.
    pub fn new_to_old(&self) -> Vec<usize> {
        let mut out = vec![0; self.graph.order()];
        for (old, new) in self.old_to_new.iter().enumerate() {
            if let Some(w) = new {
                out[*w] = old;
            }
        }
        out
    }
}
