//! Predicted `d_1`-choosability of `K_t ∨ B`, `K_3 ∨ B` and `E_2 ∨ B`.

use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::graph::{clique_number, is_isomorphic, Graph};

/// How far a prediction can be trusted without running the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Choosable by the closed-form statement.
    Guaranteed,
    /// One of the listed exceptions matched.
    ListedException,
    /// The statement says nothing either way; only the search can decide.
    CheckerNeeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationVerdict {
    pub predicted_choosable: bool,
    /// First matching exception clause; set exactly when not predicted choosable.
    pub exception_case: Option<String>,
    /// Every clause that matched, in the order they are listed.
    pub matched_clauses: Vec<String>,
    pub provenance: Provenance,
}

impl ClassificationVerdict {
    fn from_clauses(matched: Vec<String>, when_matched: Provenance) -> Self {
        let provenance = if matched.is_empty() { Provenance::Guaranteed } else { when_matched };
        ClassificationVerdict {
            predicted_choosable: matched.is_empty(),
            exception_case: matched.first().cloned(),
            matched_clauses: matched,
            provenance,
        }
    }
}

/// `ω(G) ≥ |G| - 1`.
pub fn is_almost_complete(b: &Graph) -> bool {
    clique_number(b) + 1 >= b.order()
}

fn k(n: usize) -> Graph {
    Graph::complete(n).expect("small clique")
}

fn union(parts: &[Graph]) -> Graph {
    parts.iter().fold(Graph::empty(0).unwrap(), |acc, p| acc.disjoint_union(p).expect("small union"))
}

fn iso_any(b: &Graph, templates: impl IntoIterator<Item = Graph>) -> bool {
    templates.into_iter().any(|t| is_isomorphic(b, &t))
}

/// Clause matching for `K_t ∨ B` with `t ≥ 4`.
pub fn predict_kt_join(b: &Graph, t: usize) -> Result<ClassificationVerdict, ClassifyError> {
    if t < 4 {
        return Err(ClassifyError::CliqueTooSmall(t));
    }
    if b.order() == 0 {
        return Err(ClassifyError::TooFewVertices(1));
    }
    let e3 = Graph::edgeless(3).unwrap();
    let claw = Graph::complete_bipartite(1, 3).unwrap();
    let mut matched = Vec::new();
    if is_almost_complete(b) {
        matched.push("almost-complete".to_string());
    }
    if t == 4 && is_isomorphic(b, &e3) {
        matched.push("t=4,B=E3".to_string());
    }
    if t == 4 && is_isomorphic(b, &claw) {
        matched.push("t=4,B=K13".to_string());
    }
    if t == 5 && is_isomorphic(b, &e3) {
        matched.push("t=5,B=E3".to_string());
    }
    Ok(ClassificationVerdict::from_clauses(matched, Provenance::ListedException))
}

/// Clause matching for `K_3 ∨ B`.
///
/// Clauses, each up to isomorphism, with `a, b ≥ 1` and `c ≥ 0`:
/// `almost-complete`; `disjoint two cliques` (`K_a + K_b`);
/// `K1 plus two cliques` (`K_1 + K_a + K_b`); `E3 plus clique` (`E_3 + K_c`);
/// `E3 join clique` (`E_3 ∨ K_c` with `|B| ≤ 5`).
pub fn predict_k3_join(b: &Graph) -> Result<ClassificationVerdict, ClassifyError> {
    let n = b.order();
    if n < 2 {
        return Err(ClassifyError::TooFewVertices(2));
    }
    let e3 = Graph::edgeless(3).unwrap();
    let mut matched = Vec::new();
    if is_almost_complete(b) {
        matched.push("almost-complete".to_string());
    }
    if iso_any(b, (1..=n / 2).map(|a| union(&[k(a), k(n - a)]))) {
        matched.push("disjoint two cliques".to_string());
    }
    if n >= 3 && iso_any(b, (1..=(n - 1) / 2).map(|a| union(&[k(1), k(a), k(n - 1 - a)]))) {
        matched.push("K1 plus two cliques".to_string());
    }
    if n >= 3 && is_isomorphic(b, &union(&[e3.clone(), k(n - 3)])) {
        matched.push("E3 plus clique".to_string());
    }
    if (3..=5).contains(&n) && is_isomorphic(b, &e3.join(&k(n - 3)).unwrap()) {
        matched.push("E3 join clique".to_string());
    }
    Ok(ClassificationVerdict::from_clauses(matched, Provenance::ListedException))
}

/// Components that are all complete, except at most one induced `P_3`.
fn cliques_and_one_p3(b: &Graph) -> bool {
    let p3 = Graph::path(3).unwrap();
    let mut p3s = 0;
    for c in b.components() {
        if b.is_clique(c) {
            continue;
        }
        if c.len() == 3 && is_isomorphic(&b.subgraph(c), &p3) {
            p3s += 1;
        } else {
            return false;
        }
    }
    p3s <= 1
}

/// Prediction for `E_2 ∨ B`.
///
/// Only one direction is known: outside the family "disjoint union of cliques
/// and at most one `P_3`" the join is choosable. Inside it the verdict is
/// reported as not predicted choosable with [`Provenance::CheckerNeeded`].
pub fn predict_e2_join(b: &Graph) -> Result<ClassificationVerdict, ClassifyError> {
    if b.order() == 0 {
        return Err(ClassifyError::TooFewVertices(1));
    }
    let matched = if cliques_and_one_p3(b) { vec!["disjoint-cliques+P3".to_string()] } else { Vec::new() };
    Ok(ClassificationVerdict::from_clauses(matched, Provenance::CheckerNeeded))
}
