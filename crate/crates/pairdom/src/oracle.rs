//! Exact reference algorithms: perfect matchings, paired-domination checks
//! and exhaustive search for the optimum. Exponential, meant for small
//! instances and for cross-checking the solver.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest vertex count `exact_gamma_pr` accepts by default.
pub const DEFAULT_EXACT_LIMIT: usize = 16;

/// Coverage masks only hold this many vertices.
const MASK_LIMIT: usize = 64;

/// Whether `g` contains a perfect matching, by backtracking over the
/// lowest-id unmatched vertex.
pub fn has_perfect_matching(g: &Graph) -> bool {
    matching_backtrack(&local_adjacency(g)).is_some()
}

fn local_adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect()
}

fn matching_backtrack(adj: &[Vec<usize>]) -> Option<Vec<(usize, usize)>> {
    let n = adj.len();
    if !n.is_multiple_of(2) {
        return None;
    }
    let mut partner = vec![usize::MAX; n];
    if !match_rest(adj, &mut partner) {
        return None;
    }
    Some(
        (0..n)
            .filter(|&v| v < partner[v])
            .map(|v| (v, partner[v]))
            .collect(),
    )
}

fn match_rest(adj: &[Vec<usize>], partner: &mut [usize]) -> bool {
    let Some(v) = partner.iter().position(|&p| p == usize::MAX) else {
        return true;
    };
    for &u in &adj[v] {
        if partner[u] == usize::MAX {
            partner[v] = u;
            partner[u] = v;
            if match_rest(adj, partner) {
                return true;
            }
            partner[v] = usize::MAX;
            partner[u] = usize::MAX;
        }
    }
    false
}

/// Perfect matching of the subgraph induced on `verts` (ascending global
/// ids), reported as global-id pairs.
fn induced_matching(g: &Graph, verts: &[usize]) -> Option<Vec<(usize, usize)>> {
    let local: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter_map(|u| local.get(u).copied())
                .collect()
        })
        .collect();
    matching_backtrack(&adj).map(|pairs| {
        pairs
            .into_iter()
            .map(|(a, b)| (verts[a], verts[b]))
            .collect()
    })
}

/// Whether `set` dominates `g` and its induced subgraph has a perfect
/// matching.
pub fn is_pd_set(g: &Graph, set: &VertexSet) -> bool {
    let dominated = |v: usize| set.contains(v) || g.neighbors(v).iter().any(|&u| set.contains(u));
    (0..g.n()).all(dominated) && induced_matching(g, set.as_slice()).is_some()
}

/// Outcome of the exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    /// Minimum size of a paired dominating set; always even, zero only for
    /// the empty graph.
    pub gamma_pr: usize,
    /// Lexicographically first optimal set.
    pub witness: VertexSet,
    /// A perfect matching of the witness's induced subgraph.
    pub witness_pairing: Vec<(usize, usize)>,
    /// Search-tree nodes visited.
    pub nodes_explored: u64,
}

/// Exhaustive minimum paired dominating set, refusing graphs larger than
/// [`DEFAULT_EXACT_LIMIT`].
pub fn exact_gamma_pr(g: &Graph) -> Result<ExactResult> {
    exact_gamma_pr_with_limit(g, DEFAULT_EXACT_LIMIT)
}

/// Exhaustive search with a caller-chosen size cutoff (capped at 64, the
/// coverage mask width). Subsets of each even size are scanned in
/// lexicographic order, so the witness is the overall lexicographic minimum
/// among optimal sets. Branches that cannot cover the graph even if every
/// remaining pick dominated a full closed neighborhood are cut.
pub fn exact_gamma_pr_with_limit(g: &Graph, limit: usize) -> Result<ExactResult> {
    let n = g.n();
    let limit = limit.min(MASK_LIMIT);
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if n == 0 {
        return Ok(ExactResult {
            gamma_pr: 0,
            witness: VertexSet::new(),
            witness_pairing: Vec::new(),
            nodes_explored: 0,
        });
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(Error::NoPdSet(v));
    }

    let nbhd: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u64 << v, |m, &u| m | (1u64 << u))
        })
        .collect();
    let full = if n == MASK_LIMIT {
        u64::MAX
    } else {
        (1u64 << n) - 1
    };
    let cap = g.max_degree().unwrap() + 1;
    let mut search = Search {
        g,
        nbhd,
        full,
        cap,
        k: 0,
        nodes: 0,
        chosen: Vec::new(),
    };
    for k in (2..=n).step_by(2) {
        search.k = k;
        if let Some(witness) = search.run(0, 0) {
            let witness_pairing =
                induced_matching(g, &witness).expect("search only returns matchable sets");
            return Ok(ExactResult {
                gamma_pr: k,
                witness: VertexSet::from_unsorted(witness),
                witness_pairing,
                nodes_explored: search.nodes,
            });
        }
    }
    // a maximal matching's endpoints always form a paired dominating set in
    // a graph of minimum degree one, so some even size must have succeeded
    unreachable!("no paired dominating set found in a graph without isolated vertices")
}

struct Search<'a> {
    g: &'a Graph,
    nbhd: Vec<u64>,
    full: u64,
    cap: usize,
    k: usize,
    nodes: u64,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, start: usize, covered: u64) -> Option<Vec<usize>> {
        self.nodes += 1;
        let remaining = self.k - self.chosen.len();
        if remaining == 0 {
            if covered == self.full && induced_matching(self.g, &self.chosen).is_some() {
                return Some(self.chosen.clone());
            }
            return None;
        }
        if covered.count_ones() as usize + remaining * self.cap < self.g.n() {
            return None;
        }
        for c in start..=(self.g.n() - remaining) {
            self.chosen.push(c);
            if let Some(w) = self.run(c + 1, covered | self.nbhd[c]) {
                return Some(w);
            }
            self.chosen.pop();
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphKind};

    fn h8() -> Graph {
        generate(&GraphKind::H8, 0).unwrap()
    }

    #[test]
    fn perfect_matching_basics() {
        let p4 = Graph::from_edges(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(has_perfect_matching(&p4));
        let p3 = Graph::from_edges(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(!has_perfect_matching(&p3));
        let c6: Graph =
            Graph::from_edges(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        assert!(has_perfect_matching(&c6));
        let petersen = generate(&GraphKind::Petersen, 0).unwrap();
        assert!(has_perfect_matching(&petersen));
        // even order but no perfect matching: a star
        let star = Graph::from_edges(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!has_perfect_matching(&star));
        assert!(has_perfect_matching(&Graph::from_edges(0, vec![]).unwrap()));
    }

    #[test]
    fn pd_set_checks() {
        let g = h8();
        assert!(is_pd_set(&g, &[1, 3, 5, 7].into_iter().collect()));
        assert!(is_pd_set(&g, &[0, 1, 2, 6].into_iter().collect()));
        // leaves vertex 6 undominated
        assert!(!is_pd_set(&g, &[0, 1].into_iter().collect()));
        // dominating but odd
        assert!(!is_pd_set(&g, &[0, 1, 2].into_iter().collect()));
        // dominating, even, but 6 is isolated in the induced subgraph
        assert!(!is_pd_set(&g, &[0, 1, 4, 6].into_iter().collect()));
    }

    #[test]
    fn exact_on_small_fixtures() {
        let k5 = generate(&GraphKind::Complete { n: 5 }, 0).unwrap();
        let r = exact_gamma_pr(&k5).unwrap();
        assert_eq!(r.gamma_pr, 2);
        assert_eq!(r.witness.as_slice(), &[0, 1]);
        assert_eq!(r.witness_pairing, vec![(0, 1)]);
        assert!(r.nodes_explored > 0);

        let r = exact_gamma_pr(&h8()).unwrap();
        assert_eq!(r.gamma_pr, 4);
        assert_eq!(r.witness.as_slice(), &[0, 1, 2, 3]);
        assert_eq!(r.witness_pairing, vec![(0, 1), (2, 3)]);

        let k6 = generate(&GraphKind::Complete { n: 6 }, 0).unwrap();
        assert_eq!(exact_gamma_pr(&k6).unwrap().gamma_pr, 2);

        let petersen = generate(&GraphKind::Petersen, 0).unwrap();
        assert_eq!(exact_gamma_pr(&petersen).unwrap().gamma_pr, 6);
    }

    #[test]
    fn exact_on_octahedron() {
        // complete graph minus a perfect matching
        let edges: Vec<(usize, usize)> = (0..6)
            .flat_map(|u| ((u + 1)..6).map(move |v| (u, v)))
            .filter(|&(u, v)| !(v == u + 1 && u % 2 == 0))
            .collect();
        let g = Graph::from_edges(6, edges).unwrap();
        let r = exact_gamma_pr(&g).unwrap();
        assert_eq!(r.gamma_pr, 2);
        assert_eq!(r.witness.as_slice(), &[0, 2]);
    }

    #[test]
    fn exact_rejects_large_graphs() {
        let g = generate(&GraphKind::RandomRegular { n: 20, degree: 4 }, 7).unwrap();
        match exact_gamma_pr(&g) {
            Err(Error::TooLarge { n: 20, limit: 16 }) => {}
            other => panic!("expected TooLarge, got {other:?}"),
        }
        assert_eq!(exact_gamma_pr_with_limit(&g, 20).unwrap().gamma_pr % 2, 0);
    }

    #[test]
    fn exact_rejects_isolated_vertices() {
        let g = Graph::from_edges(3, vec![(0, 1)]).unwrap();
        match exact_gamma_pr(&g) {
            Err(Error::NoPdSet(2)) => {}
            other => panic!("expected NoPdSet(2), got {other:?}"),
        }
    }

    #[test]
    fn exact_on_empty_graph() {
        let g = Graph::from_edges(0, vec![]).unwrap();
        let r = exact_gamma_pr(&g).unwrap();
        assert_eq!(r.gamma_pr, 0);
        assert!(r.witness.is_empty());
    }

    #[test]
    fn witnesses_verify() {
        for seed in 0..10u64 {
            let g = generate(
                &GraphKind::RandomMinDegree {
                    n: 11,
                    min_degree: 4,
                    edge_prob: 0.25,
                },
                seed,
            )
            .unwrap();
            let r = exact_gamma_pr(&g).unwrap();
            assert_eq!(r.gamma_pr % 2, 0);
            assert!(is_pd_set(&g, &r.witness));
            assert_eq!(r.witness.len(), r.gamma_pr);
            // one size smaller never works
            assert!(r.gamma_pr >= 2);
        }
    }
}
