//! Exact list-colouring experiments on small graphs: choosability checks,
//! join classifications and the mule catalogue.

pub mod budget;
pub mod classify;
pub mod graph;
pub mod listcolor;
pub mod mules;

pub use budget::{Budget, BudgetExceeded};
pub use graph::{Graph, GraphError, VertexSet};
pub use listcolor::{ChoosabilityOptions, ChoosabilityVerdict, ColorSet, ListAssignment};
