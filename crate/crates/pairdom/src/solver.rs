//! Preprocessing and the growth loop that turns rule proposals into a
//! paired dominating set of size at most `10n/17` on graphs of minimum
//! degree four.

use crate::coloring::{apply_extension, color};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rules::{find_desirable, Rule};

/// One committed extension, in original vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub rule: Rule,
    /// Vertices added, ascending.
    pub members: Vec<usize>,
    /// Weight drop the extension achieved.
    pub xi: u64,
    /// Total weight over all components still outstanding afterwards.
    pub weight_after: u64,
}

/// A paired dominating set together with how it was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PDSolution {
    pub pd_set: VertexSet,
    /// Partner assignment, pairs as `(min, max)` in lexicographic order.
    pub pairing: Vec<(usize, usize)>,
    pub trace: Vec<TraceEntry>,
    /// Vertex count of the input graph.
    pub n: usize,
    /// Whether `17 * |pd_set| <= 10 * n` held.
    pub bound_ok: bool,
}

impl PDSolution {
    pub fn size(&self) -> usize {
        self.pd_set.len()
    }

    /// `|pd_set| / n` as a reduced fraction; `0/1` for the empty graph.
    pub fn ratio(&self) -> (u64, u64) {
        if self.n == 0 {
            return (0, 1);
        }
        let (p, q) = (self.size() as u64, self.n as u64);
        let g = gcd(p, q);
        (p / g, q / g)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_min_degree(g: &Graph) -> Result<()> {
    for v in 0..g.n() {
        if g.degree(v) < 4 {
            return Err(Error::MinDegreeViolation {
                vertex: v,
                degree: g.degree(v),
            });
        }
    }
    Ok(())
}

/// Deletes edges whose endpoints both currently have degree five or more,
/// scanning in lexicographic order until a full pass deletes nothing.
/// Requires minimum degree four and preserves it; afterwards the vertices of
/// degree five or more form an independent set, and any paired dominating
/// set of the result also works in the input graph.
pub fn preprocess(g: &Graph) -> Result<Graph> {
    check_min_degree(g)?;
    let n = g.n();
    let mut present: Vec<Vec<bool>> = vec![vec![false; n]; n];
    let mut deg = vec![0usize; n];
    for (u, v) in g.edges() {
        present[u][v] = true;
        present[v][u] = true;
        deg[u] += 1;
        deg[v] += 1;
    }
    loop {
        let mut changed = false;
        for u in 0..n {
            for v in (u + 1)..n {
                if present[u][v] && deg[u] >= 5 && deg[v] >= 5 {
                    present[u][v] = false;
                    present[v][u] = false;
                    deg[u] -= 1;
                    deg[v] -= 1;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut edges = Vec::new();
    #[allow(clippy::needless_range_loop)]
    for u in 0..n {
        for v in (u + 1)..n {
            if present[u][v] {
                edges.push((u, v));
            }
        }
    }
    let out = Graph::from_edges(n, edges).expect("edge deletion cannot invalidate a graph");
    debug_assert!(out.min_degree().is_none_or(|d| d >= 4));
    debug_assert!(out
        .edges()
        .iter()
        .all(|&(u, v)| out.degree(u) < 5 || out.degree(v) < 5));
    Ok(out)
}

/// Builds a paired dominating set by repeatedly committing the
/// highest-priority rule proposal, per connected component, on the
/// preprocessed graph. The result is validated against the input graph;
/// `bound_ok` records whether the `10n/17` size bound held.
pub fn solve(g: &Graph) -> Result<PDSolution> {
    check_min_degree(g)?;
    let mut dom: Vec<usize> = Vec::new();
    let mut pairing: Vec<(usize, usize)> = Vec::new();
    let mut trace: Vec<TraceEntry> = Vec::new();
    let mut remaining: u64 = 90 * g.n() as u64;
    for (comp, ids) in g.components() {
        let reduced = preprocess(&comp)?;
        let mut state = color(&reduced, VertexSet::new(), &[])?;
        while state.weight() > 0 {
            let ds = find_desirable(&state)?.expect("positive weight always admits a proposal");
            state = apply_extension(&state, &ds)?;
            remaining -= ds.xi;
            for v in ds.members.iter() {
                dom.push(ids[v]);
            }
            pairing.extend(ds.pairing.iter().map(|&(a, b)| (ids[a], ids[b])));
            trace.push(TraceEntry {
                rule: ds.rule,
                members: ds.members.iter().map(|v| ids[v]).collect(),
                xi: ds.xi,
                weight_after: remaining,
            });
        }
    }
    assert_eq!(remaining, 0, "component weights must telescope to zero");
    let pd_set = VertexSet::from_unsorted(dom);
    pairing.sort_unstable();
    validate(g, &pd_set, &pairing);
    let bound_ok = 17 * pd_set.len() <= 10 * g.n();
    Ok(PDSolution {
        pd_set,
        pairing,
        trace,
        n: g.n(),
        bound_ok,
    })
}

/// Panics unless `pd_set` with `pairing` is a paired dominating set of `g`:
/// these hold by construction, independent of the size bound.
fn validate(g: &Graph, pd_set: &VertexSet, pairing: &[(usize, usize)]) {
    assert_eq!(pd_set.len() % 2, 0, "paired dominating sets have even size");
    assert_eq!(
        pairing.len() * 2,
        pd_set.len(),
        "every member must be paired"
    );
    let mut seen = vec![false; g.n()];
    for &(a, b) in pairing {
        assert!(g.has_edge(a, b), "pair {a}-{b} is not an edge of the input");
        for v in [a, b] {
            assert!(
                pd_set.contains(v) && !seen[v],
                "vertex {v} must be paired exactly once"
            );
            seen[v] = true;
        }
    }
    for v in 0..g.n() {
        assert!(
            pd_set.contains(v) || g.neighbors(v).iter().any(|&u| pd_set.contains(u)),
            "vertex {v} is not dominated"
        );
    }
}

/// Drops pairs whose removal keeps the set dominating, scanning pairs in
/// lexicographic order once. The result is still a valid paired dominating
/// set; the construction trace is kept unchanged.
pub fn prune_pairs(g: &Graph, sol: &PDSolution) -> PDSolution {
    let mut kept: Vec<(usize, usize)> = sol.pairing.clone();
    let mut active: Vec<bool> = vec![true; kept.len()];
    let dominated_without = |kept: &[(usize, usize)], active: &[bool], skip: usize| {
        let mut in_dom = vec![false; g.n()];
        for (i, &(a, b)) in kept.iter().enumerate() {
            if active[i] && i != skip {
                in_dom[a] = true;
                in_dom[b] = true;
            }
        }
        (0..g.n()).all(|v| in_dom[v] || g.neighbors(v).iter().any(|&u| in_dom[u]))
    };
    for i in 0..kept.len() {
        if dominated_without(&kept, &active, i) {
            active[i] = false;
        }
    }
    let pairing: Vec<(usize, usize)> = kept
        .drain(..)
        .zip(&active)
        .filter_map(|(p, &a)| a.then_some(p))
        .collect();
    let pd_set: VertexSet = pairing.iter().flat_map(|&(a, b)| [a, b]).collect();
    validate(g, &pd_set, &pairing);
    let bound_ok = 17 * pd_set.len() <= 10 * g.n();
    PDSolution {
        pd_set,
        pairing,
        trace: sol.trace.clone(),
        n: sol.n,
        bound_ok,
    }
}
