use super::{Graph, GraphError, VertexSet};

impl Graph {
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let g = Graph::empty(n)?;
        let all = g.vertices();
        Ok(Graph::from_rows((0..n).map(|v| all.without(v)).collect()))
    }

    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        Graph::empty(n)
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edge_list(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidArgument(format!("C_{n} needs at least 3 vertices")));
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// `K_{a,b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
        Graph::edgeless(a)?.join(&Graph::edgeless(b)?)
    }
}

/// Looks up a small named graph.
///
/// Accepts `K<n>`, `E<n>`, `P<n>`, `C<n>` (an underscore after the letter is
/// allowed, e.g. `K_5`), `K<a>,<b>`, and the names `claw`, `paw`, `antipaw`,
/// `chair`, `antichair`. The four-vertex and five-vertex names use the vertex
/// labelling y1..y5 of their usual drawings, shifted to 0-based indices.
pub fn named(name: &str) -> Result<Graph, GraphError> {
    let unknown = || GraphError::InvalidArgument(format!("unknown graph name `{name}`"));
    match name {
        "claw" => return Graph::complete_bipartite(1, 3),
        // triangle 0-1-2 with a pendant at 2
        "paw" => return Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]),
        // y1y2, y1y3; y4 isolated
        "antipaw" => return Graph::from_edge_list(4, &[(0, 1), (0, 2)]),
        // y1y2, y2y3, y2y4, y3y5
        "chair" => return Graph::from_edge_list(5, &[(0, 1), (1, 2), (1, 3), (2, 4)]),
        // y1y2, y2y3, y2y4, y3y4, y3y5, y4y5
        "antichair" => return Graph::from_edge_list(5, &[(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]),
        _ => {}
    }
    let mut chars = name.chars();
    let kind = chars.next().ok_or_else(unknown)?;
    let rest = chars.as_str();
    let rest = rest.strip_prefix('_').unwrap_or(rest);
    let rest = rest.trim_start_matches('{').trim_end_matches('}');
    if kind == 'K' {
        if let Some((a, b)) = rest.split_once(',') {
            let a: usize = a.trim().parse().map_err(|_| unknown())?;
            let b: usize = b.trim().parse().map_err(|_| unknown())?;
            return Graph::complete_bipartite(a, b);
        }
    }
    let n: usize = rest.parse().map_err(|_| unknown())?;
    if n == 0 {
        return Err(GraphError::InvalidArgument(format!("`{name}`: parameter must be at least 1")));
    }
    match kind {
        'K' => Graph::complete(n),
        'E' => Graph::edgeless(n),
        'P' => Graph::path(n),
        'C' => Graph::cycle(n),
        _ => Err(unknown()),
    }
}

/// A 5-cycle whose i-th vertex is blown up into a clique of `sizes[i]` vertices.
///
/// Clique `B_i` is fully joined to `B_{i+1 mod 5}`; vertices are numbered
/// clique by clique.
pub fn blown_cycle(sizes: &[usize]) -> Result<Graph, GraphError> {
    if sizes.len() != 5 {
        return Err(GraphError::InvalidArgument(format!(
            "blown-up 5-cycle needs 5 clique sizes, got {}",
            sizes.len()
        )));
    }
    if sizes.contains(&0) {
        return Err(GraphError::InvalidArgument("clique sizes must be positive".into()));
    }
    let total: usize = sizes.iter().sum();
    let g = Graph::empty(total)?;
    let mut blocks = Vec::with_capacity(5);
    let mut start = 0;
    for &s in sizes {
        blocks.push(VertexSet((VertexSet::full(s).0) << start));
        start += s;
    }
    let mut rows = vec![VertexSet::EMPTY; g.order()];
    for i in 0..5 {
        let near = blocks[i].union(blocks[(i + 1) % 5]).union(blocks[(i + 4) % 5]);
        for v in blocks[i] {
            rows[v] = near.without(v);
        }
    }
    Ok(Graph::from_rows(rows))
}
