//! The four catalogued mules and the machinery around them: membership in
//! `C(k, j)`, epimorphisms and children, clique-hitting independent sets and
//! the reduction from `C(k, j)` to `C(k-1, j)`.

mod epi;
mod hitting;
mod reduce;

pub use epi::{exists_epimorphism, find_child, is_child, ChildWitness, Epimorphism, EpimorphismError};
pub use hitting::{find_hitting_independent_set, hits_all_maximum_cliques, hitting_independent_sets};
pub use reduce::{extract_critical_subgraph, reduce_delta, Extracted, ReduceError, Reduction};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    chromatic_number, clique_number, contains_clique_join, is_vertex_critical, parse_edge_list, Graph,
    GraphError,
};

/// A catalogued mule: name, advertised `k`, edge-list text.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub k: usize,
    pub file: &'static str,
    pub text: &'static str,
}

pub const CATALOG: [CatalogEntry; 4] = [
    CatalogEntry { name: "M61", k: 6, file: "M61.edges", text: include_str!("../../data/mules/M61.edges") },
    CatalogEntry { name: "M71", k: 7, file: "M71.edges", text: include_str!("../../data/mules/M71.edges") },
    CatalogEntry { name: "M72", k: 7, file: "M72.edges", text: include_str!("../../data/mules/M72.edges") },
    CatalogEntry { name: "M8", k: 8, file: "M8.edges", text: include_str!("../../data/mules/M8.edges") },
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MuleError {
    #[error("unknown mule `{0}` (expected one of M61, M71, M72, M8)")]
    Unknown(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn normalize(name: &str) -> String {
    name.chars().filter(|c| !matches!(c, '_' | '{' | '}' | ',' | ' ')).collect::<String>().to_uppercase()
}

pub fn catalog_entry(name: &str) -> Result<&'static CatalogEntry, MuleError> {
    let key = normalize(name);
    CATALOG.iter().find(|e| e.name == key).ok_or_else(|| MuleError::Unknown(name.to_string()))
}

/// The catalogued graph. Accepts `M61` as well as `M_{6,1}`.
pub fn mule(name: &str) -> Result<Graph, MuleError> {
    let e = catalog_entry(name)?;
    Ok(parse_edge_list(e.text).expect("catalogue files parse"))
}

/// Whether `K_s ∨ E_t` sits in the graph, with `t = k - s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgraphFact {
    pub s: usize,
    pub t: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuleReport {
    pub name: String,
    pub k: usize,
    pub order: usize,
    pub size: usize,
    pub delta: usize,
    pub min_degree: usize,
    pub omega: usize,
    pub chi: usize,
    pub vertex_critical: bool,
    /// Every `(k, j)` with `G ∈ C(k, j)`.
    pub in_c_kj: Vec<(usize, usize)>,
    pub subgraph_facts: Vec<SubgraphFact>,
}

impl MuleReport {
    pub fn in_class(&self, k: usize, j: usize) -> bool {
        self.in_c_kj.contains(&(k, j))
    }
}

/// Report for a catalogue entry at its advertised `k`.
pub fn verify_catalog_mule(name: &str) -> Result<MuleReport, MuleError> {
    let e = catalog_entry(name)?;
    let mut r = verify_mule(&mule(e.name)?, e.k)?;
    r.name = e.name.to_string();
    Ok(r)
}

/// Computes the invariants that decide membership of `G` in `C(k, j)`.
///
/// Says nothing about minimality in the child order. `name` is left empty.
pub fn verify_mule(g: &Graph, k: usize) -> Result<MuleReport, GraphError> {
    let chi = chromatic_number(g)?;
    let omega = clique_number(g);
    let delta = g.max_degree();
    let vertex_critical = is_vertex_critical(g, chi)?;
    let in_c_kj = if chi == k && delta == k && vertex_critical && omega < k {
        (0..k - omega).map(|j| (k, j)).collect()
    } else {
        Vec::new()
    };
    let subgraph_facts = (2..=4.min(k))
        .map(|s| SubgraphFact { s, t: k - s, holds: contains_clique_join(g, s, k - s).is_some() })
        .collect();
    Ok(MuleReport {
        name: String::new(),
        k,
        order: g.order(),
        size: g.size(),
        delta,
        min_degree: g.min_degree(),
        omega,
        chi,
        vertex_critical,
        in_c_kj,
        subgraph_facts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_sizes() {
        let sizes: Vec<(usize, usize)> = CATALOG
            .iter()
            .map(|e| {
                let g = mule(e.name).unwrap();
                (g.order(), g.size())
            })
            .collect();
        assert_eq!(sizes, vec![(12, 34), (14, 46), (13, 44), (15, 60)]);
        assert_eq!(mule("M_{6,1}").unwrap(), mule("M61").unwrap());
        assert!(mule("M9").is_err());
    }

    #[test]
    fn complete_graph_is_not_in_the_class() {
        let r = verify_mule(&Graph::complete(7).unwrap(), 7).unwrap();
        assert_eq!(r.omega, 7);
        assert!(r.in_c_kj.is_empty());
    }

    #[test]
    fn m61_report() {
        let r = verify_catalog_mule("M61").unwrap();
        assert_eq!((r.chi, r.delta, r.omega), (6, 6, 5));
        assert!(r.vertex_critical);
        assert_eq!(r.in_c_kj, vec![(6, 0)]);
    }
}
