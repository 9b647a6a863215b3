//! Acceptance suite: seven end-to-end checks, one test per criterion, each
//! printing a single pass/fail line (visible with `--nocapture`).

use std::panic;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pairdom::{
    color, exact_gamma_pr, generate, is_pd_set, preprocess, solve, Color, Error, Graph, GraphKind,
    VertexSet, WeightTable,
};

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn criterion(number: usize, label: &str, body: impl FnOnce() + panic::UnwindSafe) {
    match panic::catch_unwind(body) {
        Ok(()) => println!("criterion {number} ({label}): pass"),
        Err(cause) => {
            println!("criterion {number} ({label}): FAIL");
            panic::resume_unwind(cause);
        }
    }
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

fn connected_min_degree_four(n: usize, seed: u64, regular: bool) -> Graph {
    for attempt in 0..100 {
        let g = min_degree_four(n, seed.wrapping_add(attempt), regular);
        if g.is_connected() {
            return g;
        }
    }
    panic!("no connected instance near seed {seed}");
}

#[test]
fn criterion_1_antiprism_anchor() {
    criterion(1, "antiprism anchor", || {
        let start = Instant::now();
        let g = generate(&GraphKind::H8, 0).unwrap();
        let exact = exact_gamma_pr(&g).unwrap();
        assert_eq!(exact.gamma_pr, 4);
        let sol = solve(&g).unwrap();
        assert!(is_pd_set(&g, &sol.pd_set));
        assert_eq!(sol.size(), 4);
        assert_eq!(sol.trace.last().unwrap().weight_after, 0);
        assert_eq!(sol.ratio(), (1, 2));
        assert!(start.elapsed() < Duration::from_secs(1));
    });
}

#[test]
fn criterion_2_petersen_oracle() {
    criterion(2, "Petersen oracle", || {
        let start = Instant::now();
        let g = generate(&GraphKind::Petersen, 0).unwrap();
        let exact = exact_gamma_pr(&g).unwrap();
        assert_eq!(exact.gamma_pr, 6);
        match solve(&g) {
            Err(Error::MinDegreeViolation {
                vertex: 0,
                degree: 3,
            }) => {}
            other => panic!("expected a minimum-degree rejection, got {other:?}"),
        }
        assert!(start.elapsed() < Duration::from_secs(1));
    });
}

#[test]
fn criterion_3_bound_on_random_connected_graphs() {
    criterion(3, "size bound on 500 random connected graphs", || {
        let start = Instant::now();
        for i in 0..500u64 {
            let n = 10 + (i as usize * 7) % 51;
            let g = connected_min_degree_four(
                n,
                301_u64.wrapping_add(i.wrapping_mul(GOLDEN)),
                i % 2 == 0,
            );
            let sol = solve(&g).unwrap();
            assert!(is_pd_set(&g, &sol.pd_set), "instance {i}");
            assert_eq!(sol.size() % 2, 0, "instance {i}");
            assert!(
                17 * sol.size() <= 10 * n,
                "instance {i}: {} of {n}",
                sol.size()
            );
        }
        assert!(start.elapsed() < Duration::from_secs(60));
    });
}

#[test]
fn criterion_4_rules_always_fire_and_pay() {
    criterion(4, "10^4 rule firings, none below threshold", || {
        let threshold = WeightTable::STANDARD.threshold;
        let mut firings = 0usize;
        for i in 0..900u64 {
            let n = 40 + (i as usize * 83) % 101;
            let g = min_degree_four(n, 404_u64.wrapping_add(i.wrapping_mul(GOLDEN)), i % 3 != 2);
            let sol = solve(&g).unwrap();
            for entry in &sol.trace {
                assert!(
                    entry.xi >= threshold * entry.members.len() as u64,
                    "instance {i}: {} pays {} for {} vertices",
                    entry.rule,
                    entry.xi,
                    entry.members.len()
                );
            }
            firings += sol.trace.len();
        }
        assert!(firings >= 10_000, "only {firings} rule firings");
    });
}

#[test]
fn criterion_5_oracle_cross_check() {
    criterion(5, "oracle cross-check on 100 small graphs", || {
        let start = Instant::now();
        for i in 0..100u64 {
            let n = 8 + (i as usize) % 5;
            let g = min_degree_four(n, 505_u64.wrapping_add(i.wrapping_mul(GOLDEN)), false);
            let sol = solve(&g).unwrap();
            let exact = exact_gamma_pr(&g).unwrap();
            assert!(is_pd_set(&g, &exact.witness), "instance {i}");
            assert_eq!(exact.gamma_pr % 2, 0, "instance {i}");
            assert!(exact.gamma_pr <= sol.size(), "instance {i}");
            assert!(17 * exact.gamma_pr <= 10 * n, "instance {i}");
        }
        assert!(start.elapsed() < Duration::from_secs(120));
    });
}

#[test]
fn criterion_6_weight_accounting() {
    criterion(6, "coloring definition and per-vertex weight drops", || {
        let table = WeightTable::STANDARD;
        // drop of an amber vertex ending dominated with i amber neighbors,
        // indexed 1..=4 with 4 standing for "4 or more"
        let newly_dominated = |i: usize| 90 - table.of(Color::Beige(i.min(4)));
        let mut amber_hits = [0usize; 5];
        let mut beige_hits = [0usize; 5];
        for i in 0..1000u64 {
            let seed = 606_u64.wrapping_add(i.wrapping_mul(GOLDEN));
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = 10 + (i as usize) % 15;
            let g = generate(
                &GraphKind::RandomMinDegree {
                    n,
                    min_degree: 4,
                    edge_prob: 0.3,
                },
                seed,
            )
            .unwrap();

            let (dom, pairing) = if i % 50 == 0 {
                // a known complete solution: weight must vanish
                let sol = solve(&g).unwrap();
                (sol.pd_set.clone(), sol.pairing.clone())
            } else {
                let mut edges = g.edges();
                edges.shuffle(&mut rng);
                let target = rng.gen_range(0..=n / 4);
                let mut used = vec![false; n];
                let mut pairing = Vec::new();
                for (u, v) in edges {
                    if pairing.len() == target {
                        break;
                    }
                    if !used[u] && !used[v] {
                        used[u] = true;
                        used[v] = true;
                        pairing.push((u, v));
                    }
                }
                (pairing.iter().flat_map(|&(u, v)| [u, v]).collect(), pairing)
            };

            let state = color(&g, dom.clone(), &pairing).unwrap();
            let dominated =
                |v: usize| dom.contains(v) || g.neighbors(v).iter().any(|&u| dom.contains(u));
            for v in 0..n {
                let ambers = g.neighbors(v).iter().filter(|&&u| !dominated(u)).count();
                let expected = if !dominated(v) {
                    Color::Amber
                } else if ambers > 0 {
                    Color::Beige(ambers)
                } else {
                    Color::Cyan
                };
                assert_eq!(state.color(v), expected, "instance {i} vertex {v}");
            }
            assert_eq!(state.weight() == 0, is_pd_set(&g, &dom), "instance {i}");
            if i % 50 == 0 {
                assert_eq!(state.weight(), 0, "instance {i}");
                continue;
            }

            // extend by one free edge and audit every per-vertex weight drop
            let free: Vec<(usize, usize)> = g
                .edges()
                .into_iter()
                .filter(|&(u, v)| !dom.contains(u) && !dom.contains(v))
                .collect();
            let amber_side: Vec<(usize, usize)> = free
                .iter()
                .copied()
                .filter(|&(u, v)| state.is_amber(u) || state.is_amber(v))
                .collect();
            let Some(&(x, y)) = amber_side
                .choose(&mut rng)
                .or_else(|| free.choose(&mut rng))
            else {
                continue;
            };
            let bigger: VertexSet = dom.iter().chain([x, y]).collect();
            let mut extended = pairing.clone();
            extended.push((x, y));
            let after = color(&g, bigger, &extended).unwrap();
            for v in 0..n {
                if v == x || v == y {
                    continue;
                }
                let (wb, wa) = (table.of(state.color(v)), table.of(after.color(v)));
                assert!(wb >= wa, "instance {i} vertex {v} got heavier");
                let drop = wb - wa;
                match (state.color(v), after.color(v)) {
                    (Color::Amber, Color::Beige(j)) => {
                        assert_eq!(drop, newly_dominated(j), "instance {i} vertex {v}");
                        amber_hits[j.min(4)] += 1;
                    }
                    (Color::Amber, Color::Cyan) => assert_eq!(drop, 90, "instance {i} vertex {v}"),
                    (Color::Beige(b), Color::Beige(j)) if j + 1 == b => {
                        // exactly one amber neighbor was dominated
                        let expect = if b >= 5 { 0 } else { 4 };
                        assert_eq!(drop, expect, "instance {i} vertex {v}");
                        beige_hits[b.min(4)] += 1;
                    }
                    (Color::Beige(1), Color::Cyan) => {
                        assert_eq!(drop, 54, "instance {i} vertex {v}");
                        beige_hits[1] += 1;
                    }
                    _ => {}
                }
            }
        }
        for j in 1..=4 {
            assert!(
                amber_hits[j] > 0,
                "no newly dominated amber vertex of class {j}"
            );
            assert!(
                beige_hits[j] > 0,
                "no single-step drop from beige class {j}"
            );
        }
    });
}

#[test]
fn criterion_7_preprocessing_contract() {
    criterion(7, "preprocessing keeps the guarantees", || {
        for i in 0..200u64 {
            let n = if i < 60 {
                8 + (i as usize) % 5
            } else {
                13 + (i as usize) % 18
            };
            let mut seed = 707_u64.wrapping_add(i.wrapping_mul(GOLDEN));
            let g = loop {
                let g = generate(
                    &GraphKind::RandomMinDegree {
                        n,
                        min_degree: 4,
                        edge_prob: 0.45,
                    },
                    seed,
                )
                .unwrap();
                if g.max_degree().unwrap() >= 6 {
                    break g;
                }
                seed = seed.wrapping_add(1);
            };
            let h = preprocess(&g).unwrap();
            assert!(h.min_degree().unwrap() >= 4, "instance {i}");
            for (u, v) in h.edges() {
                assert!(g.has_edge(u, v), "instance {i}");
                assert!(
                    h.degree(u) < 5 || h.degree(v) < 5,
                    "instance {i}: edge {u}-{v}"
                );
            }
            if n <= 12 {
                let before = exact_gamma_pr(&g).unwrap().gamma_pr;
                let after = exact_gamma_pr(&h).unwrap().gamma_pr;
                assert!(after >= before, "instance {i}: {after} < {before}");
            }
        }
    });
}
