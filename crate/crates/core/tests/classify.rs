mod common;

use std::collections::BTreeMap;
use std::path::PathBuf;

use mulecheck_core::classify::*;
use mulecheck_core::graph::*;
use mulecheck_core::listcolor::*;
use mulecheck_core::Budget;
use proptest::prelude::*;
use rayon::prelude::*;
use serde_json::{json, Value};

fn exact() -> ChoosabilityOptions {
    let mut o = ChoosabilityOptions::with_budget(Budget::unlimited()).threads(1);
    o.symmetry = true;
    o
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

/// Compares against a stored JSON file; `MULECHECK_BLESS=1` rewrites it.
fn check_fixture(name: &str, value: &Value) {
    let path = fixture(name);
    if std::env::var("MULECHECK_BLESS").is_ok_and(|v| v == "1") {
        std::fs::write(&path, serde_json::to_string_pretty(value).unwrap() + "\n").unwrap();
        return;
    }
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}; rerun with MULECHECK_BLESS=1", path.display()));
    let stored: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(&stored, value, "{name} changed");
}

fn b_graphs(lo: usize) -> Vec<Graph> {
    all_graphs_up_to(5).into_iter().filter(|g| g.order() >= lo).collect()
}

#[test]
fn d0_classification_up_to_7_vertices() {
    let graphs = connected_graphs_up_to(7);
    assert_eq!(graphs.len(), 996);
    let opts = exact();
    let rows: Vec<(String, bool, bool, bool)> = graphs
        .par_iter()
        .map(|g| {
            let gallai = is_gallai_tree(g).unwrap();
            let d0 = is_d_r_choosable(g, 0, &opts).unwrap();
            let cycle = has_even_cycle_with_at_most_one_chord(g).unwrap();
            if let Some(w) = &d0.witness {
                assert!(color_from_lists(g, w).is_none());
            }
            (to_graph6(g), gallai, d0.choosable().expect("unlimited budget"), cycle)
        })
        .collect();
    let bad: Vec<_> = rows.iter().filter(|r| !(r.1 != r.2 && r.2 == r.3)).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn named_block_examples() {
    let p4 = Graph::path(4).unwrap();
    let d = block_decomposition(&p4);
    assert_eq!((d.blocks.len(), d.cut_vertices.len()), (3, 2));
    let d = block_decomposition(&Graph::complete(4).unwrap());
    assert_eq!((d.blocks.len(), d.cut_vertices.len()), (1, 0));
    let bowtie = Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
    let d = block_decomposition(&bowtie);
    assert_eq!((d.blocks.len(), d.cut_vertices.len()), (2, 1));
    assert!(is_gallai_tree(&Graph::cycle(5).unwrap()).unwrap());
    assert!(!is_gallai_tree(&Graph::cycle(6).unwrap()).unwrap());
    assert!(is_gallai_tree(&p4.disjoint_union(&p4).unwrap()).is_err());
    assert!(!has_even_cycle_with_at_most_one_chord(&Graph::complete(4).unwrap()).unwrap());
    assert!(has_even_cycle_with_at_most_one_chord(&Graph::cycle(4).unwrap()).unwrap());
    assert!(has_even_cycle_with_at_most_one_chord(&Graph::empty(21).unwrap()).is_err());
}

fn components_without(g: &Graph, v: usize) -> usize {
    g.subgraph(g.vertices().without(v)).components().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn blocks_partition_edges(n in 1usize..=11, p in 0.1f64..0.6, seed in any::<u64>()) {
        let g = common::random_graph(&mut common::rng(seed), n, p);
        let d = block_decomposition(&g);
        for (u, v) in g.edges() {
            let holders = d.blocks.iter().filter(|b| b.contains(u) && b.contains(v)).count();
            prop_assert_eq!(holders, 1);
        }
        for (i, a) in d.blocks.iter().enumerate() {
            let h = g.subgraph(*a);
            prop_assert!(h.is_connected());
            if a.len() >= 3 {
                prop_assert!((0..h.order()).all(|v| components_without(&h, v) == 1));
            }
            for b in &d.blocks[i + 1..] {
                let shared = a.intersection(*b);
                prop_assert!(shared.len() <= 1);
                prop_assert!(shared.difference(d.cut_vertices).is_empty());
            }
        }
        let covered = d.blocks.iter().fold(VertexSet::EMPTY, |acc, b| acc.union(*b));
        prop_assert_eq!(covered, g.vertices());
        let base = g.components().len();
        for v in 0..n {
            let cut = components_without(&g, v) > base;
            prop_assert_eq!(cut, d.cut_vertices.contains(v));
            let blocks = d.blocks.iter().filter(|b| b.contains(v)).count();
            prop_assert_eq!(cut, blocks >= 2);
        }
    }

    #[test]
    fn exception_named_iff_not_predicted(n in 1usize..=7, p in 0.0f64..1.0, seed in any::<u64>(), t in 3usize..=8) {
        let b = common::random_graph(&mut common::rng(seed), n, p);
        let verdicts = [
            predict_kt_join(&b, t.max(4)).ok(),
            predict_k3_join(&b).ok(),
            predict_e2_join(&b).ok(),
        ];
        for v in verdicts.into_iter().flatten() {
            prop_assert_eq!(v.exception_case.is_some(), !v.predicted_choosable);
            prop_assert_eq!(v.exception_case.as_ref(), v.matched_clauses.first());
        }
        let relabelled = {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.rotate_left(seed as usize % n);
            let edges: Vec<_> = b.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        };
        prop_assert_eq!(predict_k3_join(&b).ok(), predict_k3_join(&relabelled).ok());
        prop_assert_eq!(predict_kt_join(&b, 4).ok(), predict_kt_join(&relabelled, 4).ok());
        prop_assert_eq!(predict_e2_join(&b).ok(), predict_e2_join(&relabelled).ok());
    }
}

#[test]
fn named_predictions() {
    let g = |s: &str| named(s).unwrap();
    let e3 = g("E3");
    assert_eq!(predict_kt_join(&e3, 4).unwrap().exception_case.as_deref(), Some("t=4,B=E3"));
    assert!(predict_kt_join(&e3, 6).unwrap().predicted_choosable);
    assert!(predict_kt_join(&g("C4"), 4).unwrap().predicted_choosable);
    assert!(matches!(predict_kt_join(&e3, 3), Err(ClassifyError::CliqueTooSmall(3))));
    assert!(predict_k3_join(&g("P4")).unwrap().predicted_choosable);
    assert!(predict_k3_join(&g("antipaw")).unwrap().predicted_choosable);
    let k2k3 = g("K2").disjoint_union(&g("K3")).unwrap();
    assert_eq!(predict_k3_join(&k2k3).unwrap().exception_case.as_deref(), Some("disjoint two cliques"));
    let v = predict_e2_join(&g("P3").disjoint_union(&g("P3")).unwrap()).unwrap();
    assert!(v.predicted_choosable && v.provenance == Provenance::Guaranteed);
    for b in connected_graphs_up_to(6).iter().filter(|b| b.order() >= 4) {
        let complete = b.size() == b.order() * (b.order() - 1) / 2;
        assert_eq!(predict_e2_join(b).unwrap().predicted_choosable, !complete);
    }
    let k3p3 = g("K3").disjoint_union(&g("P3")).unwrap();
    let v = predict_e2_join(&k3p3).unwrap();
    assert_eq!(v.provenance, Provenance::CheckerNeeded);
    let checked = is_d_r_choosable(&Graph::edgeless(2).unwrap().join(&k3p3).unwrap(), 1, &exact()).unwrap();
    assert_eq!(checked.status, Choosability::NotChoosable);
}

#[test]
fn k6_sweep_agrees() {
    let rows = sweep(JoinFamily::Clique(6), &b_graphs(1), &exact()).unwrap();
    assert_eq!(rows.len(), 52);
    let bad: Vec<_> = rows.iter().filter(|r| r.consistent != Some(true)).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn e2_sweep_boundary() {
    let rows = sweep(JoinFamily::E2, &b_graphs(1), &exact()).unwrap();
    assert!(rows.iter().all(|r| r.consistent == Some(true)));
    assert!(rows
        .iter()
        .filter(|r| r.predicted.predicted_choosable)
        .all(|r| r.checker == Choosability::Choosable));
    let table: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "b": r.b,
                "predicted_choosable": r.predicted.predicted_choosable,
                "provenance": r.predicted.provenance,
                "checker": r.checker,
                "witness_pot": r.witness_pot,
            })
        })
        .collect();
    let not_choosable: Vec<&str> =
        rows.iter().filter(|r| r.checker == Choosability::NotChoosable).map(|r| r.b.as_str()).collect();
    let family_but_choosable: Vec<&str> = rows
        .iter()
        .filter(|r| !r.predicted.predicted_choosable && r.checker == Choosability::Choosable)
        .map(|r| r.b.as_str())
        .collect();
    check_fixture(
        "e2_sweep.json",
        &json!({
            "family": "e2",
            "max_order": 5,
            "not_choosable": not_choosable,
            "in_family_but_choosable": family_but_choosable,
            "rows": table,
        }),
    );
}

#[test]
fn clause_overlaps() {
    let mut out = BTreeMap::new();
    let families =
        [JoinFamily::Clique(3), JoinFamily::Clique(4), JoinFamily::Clique(5), JoinFamily::Clique(6)];
    for fam in families {
        let mut overlaps = BTreeMap::new();
        for b in b_graphs(2) {
            let v = fam.predict(&b).unwrap();
            if v.matched_clauses.len() > 1 {
                overlaps.insert(to_graph6(&b), v.matched_clauses);
            }
        }
        let key = match fam {
            JoinFamily::Clique(t) => format!("k{t}"),
            JoinFamily::E2 => "e2".to_string(),
        };
        out.insert(key, overlaps);
    }
    let e3 = to_graph6(&Graph::edgeless(3).unwrap());
    assert_eq!(out["k3"][&e3], ["K1 plus two cliques", "E3 plus clique", "E3 join clique"]);
    assert!(out["k6"].is_empty());
    check_fixture("clause_overlaps.json", &serde_json::to_value(out).unwrap());
}
