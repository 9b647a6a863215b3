//! Instance generators. All randomized kinds are deterministic functions of
//! the 64-bit seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Families the generator knows how to build.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphKind {
    /// The 4-regular antiprism on 8 vertices: outer cycle `0..4`, inner cycle
    /// `4..8`, vertex `4 + i` adjacent to `i` and `i + 1 (mod 4)`. Smallest
    /// tight anchor for the solver: it needs 4 of 8 vertices.
    H8,
    /// The Petersen graph (3-regular, 10 vertices); below the solver's
    /// minimum-degree requirement, used to exercise rejection paths.
    Petersen,
    /// Complete graph on `n` vertices.
    Complete { n: usize },
    /// Random `degree`-regular graph via the stub-pairing model, rejecting
    /// pairings with loops or duplicate edges.
    RandomRegular { n: usize, degree: usize },
    /// Random graph with each edge present at rate `edge_prob`, then
    /// augmented so every vertex reaches degree `min_degree`: deficient
    /// vertices (in id order) connect to their lowest-id non-neighbor.
    RandomMinDegree {
        n: usize,
        min_degree: usize,
        edge_prob: f64,
    },
}

/// Builds an instance of the requested family. `seed` is ignored by the
/// deterministic kinds.
pub fn generate(kind: &GraphKind, seed: u64) -> Result<Graph> {
    match *kind {
        GraphKind::H8 => {
            let mut edges = Vec::with_capacity(16);
            for i in 0..4 {
                edges.push((i, (i + 1) % 4));
                edges.push((4 + i, 4 + (i + 1) % 4));
                edges.push((i, 4 + i));
                edges.push(((i + 1) % 4, 4 + i));
            }
            Graph::from_edges(8, edges)
        }
        GraphKind::Petersen => {
            let mut edges = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
                edges.push((i, 5 + i));
            }
            Graph::from_edges(10, edges)
        }
        GraphKind::Complete { n } => {
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, edges)
        }
        GraphKind::RandomRegular { n, degree } => random_regular(n, degree, seed),
        GraphKind::RandomMinDegree {
            n,
            min_degree,
            edge_prob,
        } => random_min_degree(n, min_degree, edge_prob, seed),
    }
}

fn random_regular(n: usize, degree: usize, seed: u64) -> Result<Graph> {
    if degree >= n && !(n == 0 && degree == 0) {
        return Err(Error::InfeasibleParams(format!(
            "degree {degree} impossible on {n} vertices"
        )));
    }
    if !(n * degree).is_multiple_of(2) {
        return Err(Error::InfeasibleParams(format!(
            "n*degree = {} is odd",
            n * degree
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Stub pairing: each vertex contributes `degree` stubs; a uniform
    // shuffle paired off consecutively proposes a multigraph, which we
    // reject and redraw until it is simple.
    let mut stubs: Vec<usize> = (0..n * degree).map(|s| s / degree.max(1)).collect();
    'redraw: loop {
        stubs.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(n * degree / 2);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v {
                continue 'redraw;
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue 'redraw;
        }
        return Graph::from_edges(n, edges);
    }
}

fn random_min_degree(n: usize, min_degree: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InfeasibleParams(format!(
            "edge probability {edge_prob} outside [0, 1]"
        )));
    }
    if min_degree >= n && !(n == 0 && min_degree == 0) {
        return Err(Error::InfeasibleParams(format!(
            "minimum degree {min_degree} impossible on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![vec![false; n]; n];
    #[allow(clippy::needless_range_loop)]
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    let mut deg: Vec<usize> = (0..n)
        .map(|u| adj[u].iter().filter(|&&e| e).count())
        .collect();
    for u in 0..n {
        while deg[u] < min_degree {
            let v = (0..n)
                .find(|&v| v != u && !adj[u][v])
                .expect("a non-neighbor exists while deg < min_degree < n");
            adj[u][v] = true;
            adj[v][u] = true;
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    let mut edges = Vec::new();
    #[allow(clippy::needless_range_loop)]
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}
