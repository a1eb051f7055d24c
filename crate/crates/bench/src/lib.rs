//! Shared inputs for the benchmarks.

use mulecheck_core::graph::{named, Graph};
use mulecheck_core::listcolor::ChoosabilityOptions;
use mulecheck_core::Budget;

/// `A ∨ B` with the clique side last, as the sweeps build it.
pub fn join(a: &Graph, b: &str) -> Graph {
    named(b).unwrap().join(a).unwrap()
}

pub fn clique(t: usize) -> Graph {
    Graph::complete(t).unwrap()
}

pub fn exact(symmetry: bool) -> ChoosabilityOptions {
    let mut o = ChoosabilityOptions::with_budget(Budget::unlimited()).threads(1);
    o.symmetry = symmetry;
    o
}
