//! Independent sets meeting every maximum clique.

use crate::budget::{Budget, BudgetExceeded, LocalMeter, Meter};
use crate::graph::{maximum_cliques, Graph, VertexSet};

pub fn hits_all_maximum_cliques(g: &Graph, set: VertexSet) -> bool {
    maximum_cliques(g).iter().all(|q| !q.intersection(set).is_empty())
}

/// Walks independent `size`-subsets of the vertices lying in a maximum clique,
/// in lexicographic order, calling `visit` on each one that meets every
/// maximum clique. Stops early when `visit` returns `false`.
pub(crate) fn visit_hitting(
    g: &Graph,
    size: usize,
    meter: &Meter,
    visit: &mut dyn FnMut(VertexSet) -> bool,
) -> Result<bool, BudgetExceeded> {
    let cliques = maximum_cliques(g);
    let pool = cliques.iter().fold(VertexSet::EMPTY, |a, &q| a.union(q));
    let pool: Vec<usize> = pool.to_vec();
    let mut local = meter.local();
    let r = combos(g, &cliques, &pool, 0, size, VertexSet::EMPTY, &mut local, visit);
    drop(local);
    match r {
        None => Err(meter.exceeded()),
        Some(go_on) => Ok(go_on),
    }
}

#[allow(clippy::too_many_arguments)]
fn combos(
    g: &Graph,
    cliques: &[VertexSet],
    pool: &[usize],
    from: usize,
    size: usize,
    chosen: VertexSet,
    meter: &mut LocalMeter<'_>,
    visit: &mut dyn FnMut(VertexSet) -> bool,
) -> Option<bool> {
    if !meter.tick() {
        return None;
    }
    if chosen.len() == size {
        if cliques.iter().all(|q| !q.intersection(chosen).is_empty()) {
            return Some(visit(chosen));
        }
        return Some(true);
    }
    let need = size - chosen.len();
    for i in from..pool.len() {
        if pool.len() - i < need {
            break;
        }
        let v = pool[i];
        if !g.neighbors(v).intersection(chosen).is_empty() {
            continue;
        }
        if !combos(g, cliques, pool, i + 1, size, chosen.with(v), meter, visit)? {
            return Some(false);
        }
    }
    Some(true)
}

/// Smallest independent set `I` with `ω(G - I) < ω(G)`, lexicographically
/// least among those of that size. `None` if there is none.
pub fn find_hitting_independent_set(g: &Graph, budget: Budget) -> Result<Option<VertexSet>, BudgetExceeded> {
    let cliques = maximum_cliques(g);
    if g.order() == 0 {
        return Ok(None);
    }
    let meter = Meter::new(budget);
    for size in 1..=cliques.len() {
        let mut found = None;
        visit_hitting(g, size, &meter, &mut |s| {
            found = Some(s);
            false
        })?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// All minimum-size hitting independent sets, in lexicographic order.
pub fn hitting_independent_sets(g: &Graph, budget: Budget) -> Result<Vec<VertexSet>, BudgetExceeded> {
    let Some(first) = find_hitting_independent_set(g, budget)? else {
        return Ok(Vec::new());
    };
    let meter = Meter::new(budget);
    let mut all = Vec::new();
    visit_hitting(g, first.len(), &meter, &mut |s| {
        all.push(s);
        true
    })?;
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{clique_number, named};

    #[test]
    fn two_disjoint_k4() {
        let k4 = Graph::complete(4).unwrap();
        let g = k4.disjoint_union(&k4).unwrap();
        let i = find_hitting_independent_set(&g, Budget::unlimited()).unwrap().unwrap();
        assert_eq!(i, VertexSet(0b1_0001));
        assert_eq!(hitting_independent_sets(&g, Budget::unlimited()).unwrap().len(), 16);
    }

    #[test]
    fn triangle_free_cases() {
        // an independent set meeting every edge of C5 would be a vertex cover
        assert_eq!(find_hitting_independent_set(&named("C5").unwrap(), Budget::unlimited()).unwrap(), None);
        let c4 = named("C4").unwrap();
        let i = find_hitting_independent_set(&c4, Budget::unlimited()).unwrap().unwrap();
        assert_eq!(i, VertexSet(0b0101));
        assert!(clique_number(&c4.delete_vertices(i).unwrap().graph) < 2);
    }

    #[test]
    fn tiny_budget() {
        let g = Graph::complete(3).unwrap().join(&named("C5").unwrap()).unwrap();
        assert!(find_hitting_independent_set(&g, Budget::new(1, 1000)).is_err());
    }
}
