//! Predictions checked against the exhaustive search over a graph inventory.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{predict_e2_join, predict_k3_join, predict_kt_join, ClassificationVerdict, ClassifyError};
use crate::graph::{to_graph6, Graph};
use crate::listcolor::{is_d_r_choosable, Choosability, ChoosabilityOptions};

/// The fixed side `A` of the joins `A ∨ B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JoinFamily {
    /// `K_t` for `t ≥ 3`.
    Clique(usize),
    E2,
}

impl JoinFamily {
    pub fn left(&self) -> Graph {
        match *self {
            JoinFamily::Clique(t) => Graph::complete(t).expect("small clique"),
            JoinFamily::E2 => Graph::edgeless(2).unwrap(),
        }
    }

    pub fn predict(&self, b: &Graph) -> Result<ClassificationVerdict, ClassifyError> {
        match *self {
            JoinFamily::Clique(3) => predict_k3_join(b),
            JoinFamily::Clique(t) => predict_kt_join(b, t),
            JoinFamily::E2 => predict_e2_join(b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    /// graph6 of `B`.
    pub b: String,
    pub predicted: ClassificationVerdict,
    pub checker: Choosability,
    /// Pot size of the least bad assignment, when there is one.
    pub witness_pot: Option<usize>,
    /// `None` when the search ran out of budget. For `E_2` only choosable
    /// predictions can be contradicted.
    pub consistent: Option<bool>,
    pub assignments: u64,
    pub elapsed_ms: u64,
}

/// Runs prediction and search for `A ∨ B` over every `B` in `graphs`.
///
/// Rows come back in input order. Each search is single-threaded; the rows
/// are spread over the rayon pool.
pub fn sweep(
    family: JoinFamily,
    graphs: &[Graph],
    opts: &ChoosabilityOptions,
) -> Result<Vec<SweepRow>, ClassifyError> {
    let a = family.left();
    let opts = ChoosabilityOptions { threads: Some(1), ..opts.clone() };
    graphs
        .par_iter()
        .map(|b| {
            let predicted = family.predict(b)?;
            let g = b.join(&a).expect("join fits");
            let v = is_d_r_choosable(&g, 1, &opts).expect("sizes match");
            let consistent = v.choosable().map(|c| match family {
                JoinFamily::E2 => !predicted.predicted_choosable || c,
                JoinFamily::Clique(_) => predicted.predicted_choosable == c,
            });
            Ok(SweepRow {
                b: to_graph6(b),
                witness_pot: v.witness.as_ref().map(|w| w.pot_size()),
                predicted,
                checker: v.status,
                consistent,
                assignments: v.stats.assignments,
                elapsed_ms: v.stats.elapsed_ms,
            })
        })
        .collect()
}
