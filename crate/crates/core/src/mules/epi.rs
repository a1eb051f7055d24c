//! Epimorphisms (vertex-surjective homomorphisms) and the child relation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded, Meter};
use crate::graph::{is_isomorphic, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EpimorphismError {
    #[error("map has {got} entries, the source has {expected} vertices")]
    Length { expected: usize, got: usize },
    #[error("vertex {0} maps outside the target")]
    OutOfRange(usize),
    #[error("edge ({0}, {1}) is not mapped onto an edge")]
    NotHomomorphic(usize, usize),
    #[error("target vertex {0} is not hit")]
    NotSurjective(usize),
}

/// A map `V(H) → V(A)` sending edges to edges and hitting every vertex of `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Epimorphism {
    map: Vec<usize>,
}

impl Epimorphism {
    pub fn new(h: &Graph, a: &Graph, map: Vec<usize>) -> Result<Self, EpimorphismError> {
        let e = Epimorphism { map };
        e.validate(h, a)?;
        Ok(e)
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn validate(&self, h: &Graph, a: &Graph) -> Result<(), EpimorphismError> {
        if self.map.len() != h.order() {
            return Err(EpimorphismError::Length { expected: h.order(), got: self.map.len() });
        }
        if let Some(v) = self.map.iter().position(|&x| x >= a.order()) {
            return Err(EpimorphismError::OutOfRange(v));
        }
        for (u, v) in h.edges() {
            if !a.has_edge(self.map[u], self.map[v]) {
                return Err(EpimorphismError::NotHomomorphic(u, v));
            }
        }
        let hit: VertexSet = self.map.iter().copied().collect();
        if let Some(x) = a.vertices().difference(hit).first() {
            return Err(EpimorphismError::NotSurjective(x));
        }
        Ok(())
    }
}

struct Search<'a> {
    h: &'a Graph,
    a: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
}

impl Search<'_> {
    fn run(
        &mut self,
        depth: usize,
        hit: VertexSet,
        meter: &mut crate::budget::LocalMeter<'_>,
    ) -> Option<bool> {
        if !meter.tick() {
            return None;
        }
        let n = self.order.len();
        let missing = self.a.vertices().difference(hit);
        if missing.len() > n - depth {
            return Some(false);
        }
        if depth == n {
            return Some(true);
        }
        let v = self.order[depth];
        let mut dom = self.a.vertices();
        for u in self.h.neighbors(v) {
            if self.map[u] != usize::MAX {
                dom = dom.intersection(self.a.neighbors(self.map[u]));
            }
        }
        if missing.len() == n - depth {
            dom = dom.intersection(missing);
        }
        for x in dom {
            self.map[v] = x;
            match self.run(depth + 1, hit.with(x), meter) {
                Some(false) => {}
                other => return other,
            }
        }
        self.map[v] = usize::MAX;
        Some(false)
    }
}

/// An epimorphism `H ↠ A`, searching images in increasing order.
pub fn exists_epimorphism(
    h: &Graph,
    a: &Graph,
    budget: Budget,
) -> Result<Option<Epimorphism>, BudgetExceeded> {
    let meter = Meter::new(budget);
    exists_epimorphism_metered(h, a, &meter)
}

fn exists_epimorphism_metered(
    h: &Graph,
    a: &Graph,
    meter: &Meter,
) -> Result<Option<Epimorphism>, BudgetExceeded> {
    if h.order() < a.order() {
        return Ok(None);
    }
    let n = h.order();
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    while order.len() < n {
        let v = h
            .vertices()
            .difference(placed)
            .iter()
            .max_by_key(|&v| (h.neighbors(v).intersection(placed).len(), h.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        order.push(v);
        placed.insert(v);
    }
    let mut s = Search { h, a, order, map: vec![usize::MAX; n] };
    let mut local = meter.local();
    match s.run(0, VertexSet::EMPTY, &mut local) {
        None => Err(meter.exceeded()),
        Some(false) => Ok(None),
        Some(true) => Ok(Some(Epimorphism { map: s.map })),
    }
}

/// `H ⊴ G` (as a vertex set of `G`) with an epimorphism from `G[H]` onto `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChildWitness {
    pub subgraph: VertexSet,
    /// Indexed by the vertices of `subgraph` in increasing order.
    pub epimorphism: Epimorphism,
}

/// The first induced subgraph, by vertex-set bitmask, that maps onto `a`.
///
/// `None` also when `a ≅ g`, since a graph is not its own child.
pub fn find_child(a: &Graph, g: &Graph, budget: Budget) -> Result<Option<ChildWitness>, BudgetExceeded> {
    if is_isomorphic(a, g) || a.order() > g.order() {
        return Ok(None);
    }
    let meter = Meter::new(budget);
    let omega_a = crate::graph::clique_number(a);
    let n = g.order();
    for mask in 1u64..(1u64 << n) {
        let s = VertexSet(mask as u32);
        if s.len() < a.order() {
            continue;
        }
        let h = g.subgraph(s);
        if crate::graph::clique_number(&h) > omega_a {
            continue;
        }
        if let Some(e) = exists_epimorphism_metered(&h, a, &meter)? {
            return Ok(Some(ChildWitness { subgraph: s, epimorphism: e }));
        }
        if meter.is_tripped() {
            return Err(meter.exceeded());
        }
    }
    Ok(None)
}

pub fn is_child(a: &Graph, g: &Graph, budget: Budget) -> Result<bool, BudgetExceeded> {
    Ok(find_child(a, g, budget)?.is_some())
}
