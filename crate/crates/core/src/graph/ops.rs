use super::{Graph, GraphError, Repacked, VertexSet, MAX_ORDER};

/// Output of [`Graph::collapse_independent_set`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collapsed {
    pub graph: Graph,
    /// Total map from old vertices to new ones; this is the canonical epimorphism.
    pub map: Vec<usize>,
    /// Index of the vertex that the independent set became.
    pub merged: usize,
}

impl Graph {
    /// `A ∨ B`: vertices of `self` come first, then those of `other`.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.combine(other, true)
    }

    /// `A + B`: vertices of `self` come first, then those of `other`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.combine(other, false)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Result<Graph, GraphError> {
        let (a, b) = (self.order(), other.order());
        if a + b > MAX_ORDER {
            return Err(GraphError::TooLarge(a + b));
        }
        let left = VertexSet::full(a);
        let right = VertexSet(VertexSet::full(b).0 << a);
        let mut rows = Vec::with_capacity(a + b);
        for v in 0..a {
            let r = self.neighbors(v);
            rows.push(if cross { r.union(right) } else { r });
        }
        for v in 0..b {
            let r = VertexSet(other.neighbors(v).0 << a);
            rows.push(if cross { r.union(left) } else { r });
        }
        Ok(Graph::from_rows(rows))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let rows = (0..self.order()).map(|v| all.difference(self.neighbors(v)).without(v)).collect();
        Graph::from_rows(rows)
    }

    /// `G[S]`, with the members of `S` renumbered in increasing order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Repacked, GraphError> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(GraphError::InvalidArgument("induced subgraph of an empty set".into()));
        }
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: VertexSet) -> Repacked {
        let mut old_to_new = vec![None; self.order()];
        for (new, old) in s.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let rows = s
            .iter()
            .map(|old| self.neighbors(old).intersection(s).iter().map(|u| old_to_new[u].unwrap()).collect())
            .collect();
        Repacked { graph: Graph::from_rows(rows), old_to_new }
    }

    /// Just the graph of `G[S]`; `S` must be valid.
    pub fn subgraph(&self, s: VertexSet) -> Graph {
        self.induced_unchecked(s).graph
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Repacked, GraphError> {
        self.check_vertex(v)?;
        Ok(self.induced_unchecked(self.vertices().without(v)))
    }

    pub fn delete_vertices(&self, s: VertexSet) -> Result<Repacked, GraphError> {
        self.check_set(s)?;
        Ok(self.induced_unchecked(self.vertices().difference(s)))
    }

    /// `G + uv`. Adding an edge that is already present is a no-op.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut rows = self.rows().to_vec();
        rows[u].insert(v);
        rows[v].insert(u);
        Ok(Graph::from_rows(rows))
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut rows = self.rows().to_vec();
        rows[u].remove(v);
        rows[v].remove(u);
        Ok(Graph::from_rows(rows))
    }

    /// `G/[I]`: merges the independent set `I` into one vertex adjacent to `N(I)`.
    ///
    /// The merged vertex takes the place of the smallest member of `I`; the
    /// remaining vertices keep their relative order.
    pub fn collapse_independent_set(&self, set: VertexSet) -> Result<Collapsed, GraphError> {
        self.check_set(set)?;
        if set.len() < 2 {
            return Err(GraphError::InvalidArgument("collapsing needs at least two vertices".into()));
        }
        if !self.is_independent(set) {
            return Err(GraphError::NotIndependent(set));
        }
        let rep = set.first().unwrap();
        let mut map = vec![0; self.order()];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if set.contains(v) && v != rep {
                continue;
            }
            *slot = next;
            next += 1;
        }
        for v in set {
            map[v] = map[rep];
        }
        let mut rows = vec![VertexSet::EMPTY; next];
        for (u, v) in self.edges() {
            let (a, b) = (map[u], map[v]);
            rows[a].insert(b);
            rows[b].insert(a);
        }
        let merged = map[rep];
        Ok(Collapsed { graph: Graph::from_rows(rows), map, merged })
    }
}
