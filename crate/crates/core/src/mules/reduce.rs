//! Critical cores and the step from `C(k, j)` to `C(k-1, j)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::hitting::visit_hitting;
use super::{verify_mule, MuleReport};
use crate::budget::{Budget, BudgetExceeded, Meter};
use crate::graph::{chromatic_number, clique_number, is_k_colorable, Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("chromatic number {chi} is below {k}")]
    ChromaticTooSmall { chi: usize, k: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no maximal independent set M has ω(G - M) < {bound}")]
    NoIndependentSet { bound: usize },
    #[error("result is not in C({k}, {j}): {report:?}")]
    NotInClass { k: usize, j: usize, report: Box<MuleReport> },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A `k`-critical induced subgraph together with where it sits in the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extracted {
    pub vertices: VertexSet,
    pub graph: Graph,
}

/// Greedy deletion: repeatedly drop the lowest-degree vertex (ties by index)
/// whose removal keeps `χ ≥ k`, starting over after each deletion.
pub fn extract_critical_subgraph(g: &Graph, k: usize) -> Result<Extracted, ReduceError> {
    let chi = chromatic_number(g)?;
    if chi < k {
        return Err(ReduceError::ChromaticTooSmall { chi, k });
    }
    let mut keep = g.vertices();
    'outer: loop {
        let mut order: Vec<usize> = keep.to_vec();
        order.sort_by_key(|&v| (g.neighbors(v).intersection(keep).len(), v));
        for v in order {
            let rest = keep.without(v);
            if !is_k_colorable(&g.subgraph(rest), k - 1)? {
                keep = rest;
                continue 'outer;
            }
        }
        break;
    }
    Ok(Extracted { vertices: keep, graph: g.subgraph(keep) })
}

fn in_class(r: &MuleReport, k: usize, j: usize) -> bool {
    r.in_class(k, j)
}

/// Output of [`reduce_delta`]; vertex sets index the input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub k: usize,
    pub j: usize,
    /// The hitting set `M` was grown from; empty if `ω` was already small.
    pub hitting: VertexSet,
    pub removed: VertexSet,
    pub critical: VertexSet,
    pub graph: Graph,
    pub report: MuleReport,
}

fn grow_maximal(g: &Graph, mut s: VertexSet) -> VertexSet {
    for v in 0..g.order() {
        if !s.contains(v) && g.neighbors(v).intersection(s).is_empty() {
            s.insert(v);
        }
    }
    s
}

/// From `G ∈ C(k, j)` with `k ≥ 3j + 6`, finds a maximal independent set `M`
/// with `ω(G - M) < k - j - 1` and returns a `(k-1)`-critical induced
/// subgraph of `G - M`, checked to lie in `C(k-1, j)`.
pub fn reduce_delta(g: &Graph, k: usize, j: usize, budget: Budget) -> Result<Reduction, ReduceError> {
    if k < 3 * j + 6 {
        return Err(ReduceError::Precondition(format!("k = {k} is below 3j + 6 = {}", 3 * j + 6)));
    }
    let input = verify_mule(g, k)?;
    if !in_class(&input, k, j) {
        return Err(ReduceError::Precondition(format!(
            "input is not in C({k}, {j}): χ = {}, Δ = {}, ω = {}, vertex critical = {}",
            input.chi, input.delta, input.omega, input.vertex_critical
        )));
    }
    let bound = k - j - 1;
    let (hitting, removed) = if input.omega < bound {
        (VertexSet::EMPTY, grow_maximal(g, VertexSet::EMPTY))
    } else {
        let meter = Meter::new(budget);
        let mut found = None;
        for size in 1..=g.order() {
            visit_hitting(g, size, &meter, &mut |s| {
                let m = grow_maximal(g, s);
                if clique_number(&g.subgraph(g.vertices().difference(m))) < bound {
                    found = Some((s, m));
                    return false;
                }
                true
            })?;
            if found.is_some() {
                break;
            }
        }
        found.ok_or(ReduceError::NoIndependentSet { bound })?
    };
    let rest = g.vertices().difference(removed);
    let core = extract_critical_subgraph(&g.subgraph(rest), k - 1)?;
    let back = rest.to_vec();
    let critical: VertexSet = core.vertices.iter().map(|i| back[i]).collect();
    let report = verify_mule(&core.graph, k - 1)?;
    if !in_class(&report, k - 1, j) {
        return Err(ReduceError::NotInClass { k: k - 1, j, report: Box::new(report) });
    }
    Ok(Reduction { k: k - 1, j, hitting, removed, critical, graph: core.graph, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, named};

    #[test]
    fn extraction_examples() {
        let c5 = named("C5").unwrap();
        let g = c5.disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        let e = extract_critical_subgraph(&g, 3).unwrap();
        assert_eq!(e.vertices, VertexSet(0b1_1111));
        let k5 = Graph::complete(5).unwrap();
        let g = k5.disjoint_union(&Graph::empty(1).unwrap()).unwrap().add_edge(0, 5).unwrap();
        assert!(is_isomorphic(&extract_critical_subgraph(&g, 5).unwrap().graph, &k5));
        assert!(matches!(
            extract_critical_subgraph(&c5, 4),
            Err(ReduceError::ChromaticTooSmall { chi: 3, k: 4 })
        ));
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = Graph::complete(5).unwrap().join(&named("C5").unwrap()).unwrap();
        assert!(matches!(reduce_delta(&g, 8, 0, Budget::DEFAULT), Err(ReduceError::Precondition(_))));
        assert!(matches!(reduce_delta(&g, 8, 1, Budget::DEFAULT), Err(ReduceError::Precondition(_))));
    }
}
