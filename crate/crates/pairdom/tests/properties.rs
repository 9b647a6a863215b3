//! Property-based tests: encoding round-trips, the coloring definition,
//! and solver guarantees on randomly generated minimum-degree-4 graphs.

use proptest::prelude::*;

use pairdom::{
    color, emit_edge_list, emit_graph6, exact_gamma_pr, generate, is_pd_set, parse_edge_list,
    parse_graph6, preprocess, prune_pairs, solve, Color, Graph, GraphKind, VertexSet, WeightTable,
};

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = vertex_pairs(n);
        let m = pairs.len();
        prop::collection::vec(any::<bool>(), m).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A graph together with a matching selected from its edges, i.e. an
/// arbitrary valid dominating-set-with-pairing state.
fn arb_colored(max_n: usize) -> impl Strategy<Value = (Graph, Vec<(usize, usize)>)> {
    arb_graph(max_n)
        .prop_flat_map(|g| {
            let m = g.m();
            (Just(g), prop::collection::vec(any::<bool>(), m))
        })
        .prop_map(|(g, mask)| {
            let mut used = vec![false; g.n()];
            let mut pairing = Vec::new();
            for ((u, v), keep) in g.edges().into_iter().zip(mask) {
                if keep && !used[u] && !used[v] {
                    used[u] = true;
                    used[v] = true;
                    pairing.push((u, v));
                }
            }
            (g, pairing)
        })
}

fn min_degree_four(n: usize, seed: u64, regular: bool) -> Graph {
    let kind = if regular {
        GraphKind::RandomRegular { n, degree: 4 }
    } else {
        GraphKind::RandomMinDegree {
            n,
            min_degree: 4,
            edge_prob: 0.15,
        }
    };
    generate(&kind, seed).unwrap()
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        let text = emit_graph6(&g);
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(40)) {
        let text = emit_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn graph6_parser_is_total(s in "\\PC*") {
        let _ = parse_graph6(&s);
    }

    #[test]
    fn edge_list_parser_is_total(s in "\\PC*") {
        let _ = parse_edge_list(&s);
    }

    #[test]
    fn coloring_matches_its_definition((g, pairing) in arb_colored(24)) {
        let dom: VertexSet = pairing.iter().flat_map(|&(u, v)| [u, v]).collect();
        let state = color(&g, dom.clone(), &pairing).unwrap();
        let table = WeightTable::STANDARD;
        let dominated = |v: usize| {
            dom.contains(v) || g.neighbors(v).iter().any(|&u| dom.contains(u))
        };
        let mut weight = 0;
        for v in 0..g.n() {
            let ambers = g.neighbors(v).iter().filter(|&&u| !dominated(u)).count();
            let expected = if !dominated(v) {
                Color::Amber
            } else if ambers > 0 {
                Color::Beige(ambers)
            } else {
                Color::Cyan
            };
            prop_assert_eq!(state.color(v), expected, "vertex {}", v);
            if dom.contains(v) {
                prop_assert_eq!(state.color(v), Color::Cyan, "member {}", v);
            }
            weight += table.of(state.color(v));
        }
        prop_assert_eq!(state.weight(), weight);
        let all_dominated = (0..g.n()).all(dominated);
        prop_assert_eq!(state.weight() == 0, all_dominated);
    }

    #[test]
    fn solver_output_is_a_paired_dominating_set(
        seed in any::<u64>(),
        n in 10..=40usize,
        regular in any::<bool>(),
    ) {
        let g = min_degree_four(n, seed, regular);
        let sol = solve(&g).unwrap();
        prop_assert!(is_pd_set(&g, &sol.pd_set));
        prop_assert_eq!(sol.size() % 2, 0);
        prop_assert!(17 * sol.size() <= 10 * n, "size {} on {} vertices", sol.size(), n);
        prop_assert!(sol.bound_ok);
    }

    #[test]
    fn every_step_pays_for_itself(
        seed in any::<u64>(),
        n in 10..=40usize,
        regular in any::<bool>(),
    ) {
        let g = min_degree_four(n, seed, regular);
        let sol = solve(&g).unwrap();
        let threshold = WeightTable::STANDARD.threshold;
        let mut remaining = 90 * n as u64;
        for entry in &sol.trace {
            prop_assert!(entry.xi >= threshold * entry.members.len() as u64);
            prop_assert!(entry.weight_after < remaining);
            prop_assert_eq!(remaining - entry.weight_after, entry.xi);
            remaining = entry.weight_after;
        }
        prop_assert_eq!(remaining, 0);
    }

    #[test]
    fn exact_size_never_exceeds_the_constructed_one(
        seed in any::<u64>(),
        n in 8..=12usize,
    ) {
        let g = min_degree_four(n, seed, false);
        let sol = solve(&g).unwrap();
        let exact = exact_gamma_pr(&g).unwrap();
        prop_assert!(is_pd_set(&g, &exact.witness));
        prop_assert_eq!(exact.gamma_pr % 2, 0);
        prop_assert!(exact.gamma_pr <= sol.size());
        prop_assert!(17 * exact.gamma_pr <= 10 * n);
    }

    #[test]
    fn pruning_keeps_a_valid_pairing(
        seed in any::<u64>(),
        n in 10..=30usize,
        regular in any::<bool>(),
    ) {
        let g = min_degree_four(n, seed, regular);
        let sol = solve(&g).unwrap();
        let pruned = prune_pairs(&g, &sol);
        prop_assert!(is_pd_set(&g, &pruned.pd_set));
        prop_assert_eq!(pruned.size() % 2, 0);
        prop_assert!(pruned.size() <= sol.size());
    }

    #[test]
    fn preprocessing_keeps_degrees_and_separates_heavy_vertices(
        seed in any::<u64>(),
        n in 10..=40usize,
    ) {
        let g = generate(
            &GraphKind::RandomMinDegree { n, min_degree: 4, edge_prob: 0.3 },
            seed,
        )
        .unwrap();
        let h = preprocess(&g).unwrap();
        prop_assert_eq!(h.n(), g.n());
        prop_assert!(h.min_degree().unwrap() >= 4);
        for (u, v) in h.edges() {
            prop_assert!(g.has_edge(u, v));
            prop_assert!(h.degree(u) < 5 || h.degree(v) < 5, "edge {}-{}", u, v);
        }
    }
}
