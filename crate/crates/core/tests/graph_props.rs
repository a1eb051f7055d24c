mod common;

use common::*;
use mulecheck_core::graph::*;
use mulecheck_core::mules::{exists_epimorphism, Epimorphism};
use mulecheck_core::Budget;
use proptest::prelude::*;

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs)).prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

#[test]
fn omega_chi_delta_sandwich_on_all_graphs_up_to_7() {
    let graphs = all_graphs_up_to(7);
    assert_eq!(graphs.len(), 1 + 2 + 4 + 11 + 34 + 156 + 1044);
    for g in &graphs {
        let chi = chromatic_number(g).unwrap();
        assert!(clique_number(g) <= chi && chi <= g.max_degree() + 1, "{}", to_graph6(g));
        assert_eq!(to_graph6(&parse_graph6(&to_graph6(g)).unwrap()), to_graph6(g));
    }
}

#[test]
fn brooks_on_connected_graphs_up_to_8_sampled() {
    let mut r = rng(8);
    let mut checked = 0;
    for g in connected_graphs_up_to(7) {
        let d = g.max_degree();
        if (3..=5).contains(&d) {
            assert!(chromatic_number(&g).unwrap() <= clique_number(&g).max(d));
            checked += 1;
        }
    }
    while checked < 2500 {
        let g = random_graph(&mut r, 8, 0.45);
        let d = g.max_degree();
        if g.is_connected() && (3..=5).contains(&d) {
            assert!(chromatic_number(&g).unwrap() <= clique_number(&g).max(d), "{}", to_graph6(&g));
            checked += 1;
        }
    }
}

fn disjoint_cliques(g: &Graph, count: usize) -> bool {
    let comps = g.components();
    comps.len() == count && comps.iter().all(|&c| g.is_clique(c))
}

#[test]
fn maximal_independent_sets_touch_enough_edges() {
    let mut tight_but_not_cliques = Vec::new();
    for g in all_graphs_up_to(7) {
        let alpha = independence_number(&g);
        let mut tight = Vec::new();
        for i in maximal_independent_sets(&g) {
            let touched = g.edges_touching(i);
            assert!(touched >= g.order() - i.len(), "{}", to_graph6(&g));
            if i.len() == alpha {
                tight.push(touched == g.order() - i.len());
            }
        }
        if tight.iter().all(|&t| t) {
            assert!(disjoint_cliques(&g, alpha), "{}", to_graph6(&g));
        }
        if tight.iter().any(|&t| t) && !disjoint_cliques(&g, alpha) {
            tight_but_not_cliques.push(to_graph6(&g));
        }
    }
    // one tight maximum independent set is not enough: in P4 the two ends are tight
    assert_eq!(tight_but_not_cliques.len(), 61);
    assert!(is_isomorphic(&parse_graph6(&tight_but_not_cliques[0]).unwrap(), &named("P4").unwrap()));
    let p4 = named("P4").unwrap();
    assert_eq!(p4.edges_touching(VertexSet(0b1001)), 2);
    assert!(!disjoint_cliques(&p4, 2));
}

#[test]
fn petersen_invariants() {
    let p = petersen();
    assert_eq!((clique_number(&p), chromatic_number(&p).unwrap(), independence_number(&p)), (2, 3, 4));
    assert_eq!(automorphisms(&p, &[0; 10], 1000).0.len(), 120);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn join_identities(a in small_graph(5), b in small_graph(5)) {
        let j = a.join(&b).unwrap();
        prop_assert_eq!(j.size(), a.size() + b.size() + a.order() * b.order());
        prop_assert_eq!(chromatic_number(&j).unwrap(), chromatic_number(&a).unwrap() + chromatic_number(&b).unwrap());
        prop_assert_eq!(clique_number(&j), clique_number(&a) + clique_number(&b));
    }

    #[test]
    fn exact_invariants_match_brute_force(g in small_graph(7)) {
        prop_assert_eq!(clique_number(&g), naive_clique_number(&g));
        prop_assert_eq!(chromatic_number(&g).unwrap(), naive_chromatic(&g));
        prop_assert_eq!(independence_number(&g), naive_clique_number(&g.complement()));
    }

    #[test]
    fn graph6_round_trip(g in small_graph(12)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn collapse_gives_an_epimorphism(g in small_graph(7), seed in any::<u32>()) {
        let mut i = VertexSet::EMPTY;
        for v in 0..g.order() {
            if seed >> v & 1 == 1 && g.neighbors(v).intersection(i).is_empty() {
                i.insert(v);
            }
        }
        prop_assume!(i.len() >= 2);
        let c = g.collapse_independent_set(i).unwrap();
        prop_assert_eq!(c.graph.order(), g.order() - i.len() + 1);
        prop_assert!(Epimorphism::new(&g, &c.graph, c.map.clone()).is_ok());
        prop_assert!(exists_epimorphism(&g, &c.graph, Budget::unlimited()).unwrap().is_some());
        prop_assert!(i.iter().all(|v| c.map[v] == c.merged));
    }

    #[test]
    fn isomorphism_survives_relabelling(g in small_graph(8), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            perm.swap(i, (s % (i as u64 + 1)) as usize);
            s = s.rotate_left(7) ^ 0x9e37_79b9;
        }
        let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edge_list(n, &edges).unwrap();
        prop_assert!(is_isomorphic(&g, &h));
        let iso = find_isomorphism(&g, &h).unwrap();
        for (u, v) in g.edges() {
            prop_assert!(h.has_edge(iso[u], iso[v]));
        }
    }
}
