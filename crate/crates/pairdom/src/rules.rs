//! The extraction rules: given a colored state with positive weight, find a
//! small vertex set whose addition to the dominating set pays for itself.
//!
//! Twelve rules are tried in a fixed priority order; the first one whose
//! condition holds proposes the set. On inputs that went through
//! [`crate::solver::preprocess`] (minimum degree 4, vertices of degree 5 or
//! more pairwise non-adjacent) at least one rule always applies while the
//! weight is positive, and every proposed set `S` drops the weight by at
//! least `153 * |S|`. A state where no rule fires is reported as
//! [`Error::ProofGap`].
//!
//! All vertex choices break ties by smallest id, so identical states yield
//! identical proposals.

use std::fmt;

use crate::coloring::{xi, ColoredState, DesirableSet};
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Identifier of the rule that proposed a set; `R1` has the highest
/// priority, `R12` the lowest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    R12,
}

impl Rule {
    pub const ALL: [Rule; 12] = [
        Rule::R1,
        Rule::R2,
        Rule::R3,
        Rule::R4,
        Rule::R5,
        Rule::R6,
        Rule::R7,
        Rule::R8,
        Rule::R9,
        Rule::R10,
        Rule::R11,
        Rule::R12,
    ];

    /// Position in the priority order, starting at 0.
    pub fn index(self) -> usize {
        Rule::ALL.iter().position(|&r| r == self).unwrap()
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", self.index() + 1)
    }
}

/// Shape of a connected component of the graph induced on the amber
/// vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmberKind {
    /// Single amber vertex with no amber neighbor.
    Isolated,
    /// Two amber vertices joined by an edge.
    Pair,
    /// Path on three or more vertices.
    Path,
    /// Cycle on three or more vertices.
    Cycle,
    /// Anything with a vertex of amber-degree three or more.
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmberComponent {
    pub kind: AmberKind,
    /// Members in traversal order: path order for `Path` (starting at the
    /// smaller endpoint), cyclic order for `Cycle` (starting at the smallest
    /// id, towards its smaller neighbor), increasing id otherwise.
    pub vertices: Vec<usize>,
}

/// Classification of a component of the residual graph: the subgraph on
/// amber and beige vertices keeping only edges with an amber endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualKind {
    /// Every amber vertex in the component has amber-degree 0.
    Type1,
    /// Every amber vertex in the component has amber-degree 1.
    Type2,
    /// Amber-degrees 0 and 1 both occur (cannot survive past the rule that
    /// splits such components; reaching the final rules with one is a bug).
    Mixed,
    /// Some amber vertex has amber-degree 2 or more.
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualComponent {
    pub kind: ResidualKind,
    /// Members in increasing id order.
    pub vertices: Vec<usize>,
}

/// Both component views of a state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmberComponents {
    pub amber: Vec<AmberComponent>,
    pub residual: Vec<ResidualComponent>,
}

/// Amber vertices outside `t` with a neighbor in `t`, where `t` contains
/// only amber vertices: the boundary of `t` in the amber-induced subgraph.
pub fn boundary(state: &ColoredState, t: &VertexSet) -> VertexSet {
    debug_assert!(
        t.iter().all(|v| state.is_amber(v)),
        "boundary input must be amber"
    );
    let mut out = Vec::new();
    for v in state.amber_vertices() {
        if !t.contains(v) && state.graph().neighbors(v).iter().any(|&u| t.contains(u)) {
            out.push(v);
        }
    }
    VertexSet::from_unsorted(out)
}

/// Components of the amber-induced subgraph and of the residual graph.
pub fn amber_components(state: &ColoredState) -> AmberComponents {
    AmberComponents {
        amber: amber_comps(state),
        residual: residual_comps(state),
    }
}

fn amber_neighbors<'a>(state: &'a ColoredState, v: usize) -> impl Iterator<Item = usize> + 'a {
    state
        .graph()
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&u| state.is_amber(u))
}

fn beige_neighbors<'a>(state: &'a ColoredState, v: usize) -> impl Iterator<Item = usize> + 'a {
    state
        .graph()
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&u| state.is_beige(u))
}

fn amber_comps(state: &ColoredState) -> Vec<AmberComponent> {
    let n = state.graph().n();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for root in 0..n {
        if seen[root] || !state.is_amber(root) {
            continue;
        }
        let mut members = vec![root];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            for u in amber_neighbors(state, v) {
                if !seen[u] {
                    seen[u] = true;
                    members.push(u);
                    stack.push(u);
                }
            }
        }
        members.sort_unstable();
        comps.push(classify_amber(state, members));
    }
    comps
}

fn classify_amber(state: &ColoredState, members: Vec<usize>) -> AmberComponent {
    match members.len() {
        1 => AmberComponent {
            kind: AmberKind::Isolated,
            vertices: members,
        },
        2 => AmberComponent {
            kind: AmberKind::Pair,
            vertices: members,
        },
        _ => {
            if members.iter().any(|&v| state.amber_deg(v) > 2) {
                return AmberComponent {
                    kind: AmberKind::Other,
                    vertices: members,
                };
            }
            let endpoints: Vec<usize> = members
                .iter()
                .copied()
                .filter(|&v| state.amber_deg(v) == 1)
                .collect();
            if endpoints.is_empty() {
                // cycle: walk from the smallest id towards its smaller neighbor
                let start = members[0];
                let order = walk_from(state, start, None, members.len());
                AmberComponent {
                    kind: AmberKind::Cycle,
                    vertices: order,
                }
            } else {
                // path: walk from the smaller endpoint
                let start = endpoints[0];
                let order = walk_from(state, start, None, members.len());
                AmberComponent {
                    kind: AmberKind::Path,
                    vertices: order,
                }
            }
        }
    }
}

/// Walks a degree-<=2 amber structure collecting `len` vertices in order.
fn walk_from(
    state: &ColoredState,
    start: usize,
    mut prev: Option<usize>,
    len: usize,
) -> Vec<usize> {
    let mut order = vec![start];
    let mut cur = start;
    while order.len() < len {
        let next = amber_neighbors(state, cur)
            .find(|&u| Some(u) != prev && !(order.len() > 1 && u == start))
            .expect("walk cannot get stuck inside a path or cycle component");
        order.push(next);
        prev = Some(cur);
        cur = next;
    }
    order
}

fn residual_comps(state: &ColoredState) -> Vec<ResidualComponent> {
    let n = state.graph().n();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for root in 0..n {
        if seen[root] || !(state.is_amber(root) || state.is_beige(root)) {
            continue;
        }
        let mut members = vec![root];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            // residual edges keep an amber endpoint: beige-beige edges vanish
            let from_beige = state.is_beige(v);
            for &u in state.graph().neighbors(v) {
                let keep = if from_beige {
                    state.is_amber(u)
                } else {
                    state.is_amber(u) || state.is_beige(u)
                };
                if keep && !seen[u] {
                    seen[u] = true;
                    members.push(u);
                    stack.push(u);
                }
            }
        }
        members.sort_unstable();
        let mut has0 = false;
        let mut has1 = false;
        let mut has_more = false;
        for &v in &members {
            if state.is_amber(v) {
                match state.amber_deg(v) {
                    0 => has0 = true,
                    1 => has1 = true,
                    _ => has_more = true,
                }
            }
        }
        let kind = match (has0, has1, has_more) {
            (_, _, true) => ResidualKind::Other,
            (true, true, false) => ResidualKind::Mixed,
            (true, false, false) => ResidualKind::Type1,
            (false, true, false) => ResidualKind::Type2,
            (false, false, false) => ResidualKind::Other,
        };
        comps.push(ResidualComponent {
            kind,
            vertices: members,
        });
    }
    comps
}

/// A rule's raw proposal before the weight drop is measured.
struct Pick {
    rule: Rule,
    members: Vec<usize>,
    pairs: Vec<(usize, usize)>,
}

impl Pick {
    fn pair(rule: Rule, a: usize, b: usize) -> Pick {
        Pick {
            rule,
            members: vec![a, b],
            pairs: vec![(a, b)],
        }
    }
}

fn gap(state: &ColoredState, detail: String) -> Error {
    Error::ProofGap(Box::new(state.dump(detail)))
}

/// Finds the highest-priority applicable rule and measures its weight drop.
/// Returns `None` exactly on zero-weight states (the dominating set is
/// complete). `Err(ProofGap)` means no rule fired on a positive-weight state.
pub fn find_desirable(state: &ColoredState) -> Result<Option<DesirableSet>> {
    if state.weight() == 0 {
        return Ok(None);
    }
    let pick = select(state)?;
    let members = VertexSet::from_unsorted(pick.members);
    debug_assert_eq!(
        members.len(),
        pick.pairs.len() * 2,
        "rule {} proposal is not paired",
        pick.rule
    );
    let xi = xi(state, &members, &pick.pairs)?;
    Ok(Some(DesirableSet {
        members,
        pairing: pick
            .pairs
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect(),
        rule: pick.rule,
        xi,
    }))
}

fn select(state: &ColoredState) -> Result<Pick> {
    // smallest-id amber vertex of maximum amber-degree, and its beige analog
    let peak_amber = peak(state, state.amber_vertices());
    let peak_beige = peak(state, state.beige_vertices());

    if let Some((v, d)) = peak_amber {
        if d >= 5 {
            return high_amber(state, v);
        }
    }
    if let Some((v, 4)) = peak_amber {
        return Ok(amber_peak_pair(state, v, Rule::R2));
    }
    if let Some((w, d)) = peak_beige {
        if d >= 5 {
            return Ok(beige_peak_pair(state, w, Rule::R3));
        }
    }
    if let Some((v, 3)) = peak_amber {
        return Ok(amber_peak_pair(state, v, Rule::R4));
    }
    if let Some((w, 4)) = peak_beige {
        return Ok(beige_peak_pair(state, w, Rule::R5));
    }

    let comps = amber_comps(state);
    if let Some(comp) = comps.iter().find(|c| c.kind == AmberKind::Path) {
        return amber_path(state, &comp.vertices);
    }
    if let Some(comp) = comps.iter().find(|c| c.kind == AmberKind::Cycle) {
        return amber_cycle(state, &comp.vertices);
    }

    if let Some((w, 3)) = peak_beige {
        return Ok(beige_peak_pair(state, w, Rule::R8));
    }

    if let Some(pick) = bridging_beige(state, &comps) {
        return Ok(pick);
    }
    if let Some(pick) = single_amber_neighbor(state, &comps)? {
        return Ok(pick);
    }

    let residual = residual_comps(state);
    if let Some(comp) = residual.iter().find(|c| c.kind == ResidualKind::Type1) {
        return alternating_cycle(state, &comp.vertices);
    }
    if let Some(comp) = residual.iter().find(|c| c.kind == ResidualKind::Type2) {
        return matched_amber(state, &comp.vertices);
    }

    let mixed = residual
        .iter()
        .filter(|c| c.kind == ResidualKind::Mixed)
        .count();
    let other = residual
        .iter()
        .filter(|c| c.kind == ResidualKind::Other)
        .count();
    Err(gap(
        state,
        format!(
            "no rule fired on a positive-weight state ({} mixed, {} other residual components)",
            mixed, other
        ),
    ))
}

/// Smallest-id vertex attaining the maximum amber-degree over `vertices`.
fn peak(state: &ColoredState, vertices: impl Iterator<Item = usize>) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for v in vertices {
        let d = state.amber_deg(v);
        if best.is_none_or(|(_, bd)| d > bd) {
            best = Some((v, d));
        }
    }
    best
}

/// Smallest-id amber neighbor of `v` with the most neighbors inside `target`.
fn richest_amber_neighbor(state: &ColoredState, v: usize, target: &VertexSet) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for u in amber_neighbors(state, v) {
        let d = state
            .graph()
            .neighbors(u)
            .iter()
            .filter(|&&x| target.contains(x))
            .count();
        if best.is_none_or(|(_, bd)| d > bd) {
            best = Some((u, d));
        }
    }
    best.map(|(u, _)| u)
}

fn deg_in(state: &ColoredState, v: usize, set: &VertexSet) -> usize {
    state
        .graph()
        .neighbors(v)
        .iter()
        .filter(|&&u| set.contains(u))
        .count()
}

fn closed_amber_nbhd(state: &ColoredState, v: usize) -> VertexSet {
    let mut ids: Vec<usize> = amber_neighbors(state, v).collect();
    ids.push(v);
    VertexSet::from_unsorted(ids)
}

/// R1: an amber vertex `v` of amber-degree 5 or more. Partner with the amber
/// neighbor `z` richest towards the boundary of `N[v]` in the amber graph;
/// if even `z` sees no boundary vertex, `N[z]` nests inside `N[v]` and any
/// amber neighbor outside `N[z]` works instead.
fn high_amber(state: &ColoredState, v: usize) -> Result<Pick> {
    let closed = closed_amber_nbhd(state, v);
    let x = boundary(state, &closed);
    let z = richest_amber_neighbor(state, v, &x).expect("amber-degree >= 5");
    if deg_in(state, z, &x) >= 1 {
        return Ok(Pick::pair(Rule::R1, v, z));
    }
    let nested = closed_amber_nbhd(state, z);
    let partner = amber_neighbors(state, v)
        .find(|&u| !nested.contains(u))
        .ok_or_else(|| gap(state, format!("no amber neighbor of {v} escapes N[{z}]")))?;
    Ok(Pick::pair(Rule::R1, v, partner))
}

/// R2 / R4: the peak amber vertex pairs with its amber neighbor richest
/// towards the boundary of its closed amber neighborhood.
fn amber_peak_pair(state: &ColoredState, v: usize, rule: Rule) -> Pick {
    let closed = closed_amber_nbhd(state, v);
    let x = boundary(state, &closed);
    let partner = richest_amber_neighbor(state, v, &x).expect("amber-degree >= 3");
    Pick::pair(rule, v, partner)
}

/// R3 / R5 / R8: the peak beige vertex pairs with its amber neighbor richest
/// towards the boundary of its amber neighborhood.
fn beige_peak_pair(state: &ColoredState, w: usize, rule: Rule) -> Pick {
    let open: VertexSet = amber_neighbors(state, w).collect();
    let y = boundary(state, &open);
    let partner = richest_amber_neighbor(state, w, &y).expect("beige amber-degree >= 3");
    Pick::pair(rule, w, partner)
}

/// R6: an amber path on `k >= 3` vertices. A 3-path is covered from its
/// midpoint paired with a beige neighbor; longer paths take the second and
/// third vertices.
fn amber_path(state: &ColoredState, path: &[usize]) -> Result<Pick> {
    if path.len() == 3 {
        let mid = path[1];
        let u = beige_neighbors(state, mid)
            .next()
            .ok_or_else(|| gap(state, format!("path midpoint {mid} has no beige neighbor")))?;
        Ok(Pick::pair(Rule::R6, mid, u))
    } else {
        Ok(Pick::pair(Rule::R6, path[1], path[2]))
    }
}

/// Smallest-id beige vertex adjacent to the cycle with an amber neighbor off
/// the cycle, with its attachment point and escape vertex.
fn cycle_escape(state: &ColoredState, cycle: &[usize]) -> Option<(usize, usize, usize)> {
    let on_cycle: VertexSet = cycle.iter().copied().collect();
    for z in state.beige_vertices() {
        let mut on = Vec::new();
        let mut off = Vec::new();
        for u in amber_neighbors(state, z) {
            if on_cycle.contains(u) {
                on.push(u);
            } else {
                off.push(u);
            }
        }
        if !on.is_empty() && !off.is_empty() {
            return Some((z, on[0], off[0]));
        }
    }
    None
}

fn rotate_to_front(cycle: &[usize], front: usize) -> Vec<usize> {
    let t = cycle
        .iter()
        .position(|&v| v == front)
        .expect("rotation target on cycle");
    let mut out = Vec::with_capacity(cycle.len());
    out.extend_from_slice(&cycle[t..]);
    out.extend_from_slice(&cycle[..t]);
    out
}

/// R7: an amber cycle on `k >= 3` vertices. Short cycles lean on adjacent
/// beige vertices; from `k = 5` up, two vertex pairs chosen around the cycle
/// suffice, preferring a beige escape towards another amber component when
/// one exists.
fn amber_cycle(state: &ColoredState, cycle: &[usize]) -> Result<Pick> {
    let k = cycle.len();
    match k {
        3 => {
            let v1 = cycle[0];
            let z = beige_neighbors(state, v1)
                .next()
                .ok_or_else(|| gap(state, format!("cycle vertex {v1} has no beige neighbor")))?;
            Ok(Pick::pair(Rule::R7, v1, z))
        }
        4 => Ok(Pick::pair(Rule::R7, cycle[0], cycle[1])),
        5 => {
            if let Some((z, attach, escape)) = cycle_escape(state, cycle) {
                let rot = rotate_to_front(cycle, attach);
                Ok(Pick {
                    rule: Rule::R7,
                    members: vec![z, escape, rot[2], rot[3]],
                    pairs: vec![(z, escape), (rot[2], rot[3])],
                })
            } else {
                Ok(Pick {
                    rule: Rule::R7,
                    members: vec![cycle[0], cycle[1], cycle[3], cycle[4]],
                    pairs: vec![(cycle[0], cycle[1]), (cycle[3], cycle[4])],
                })
            }
        }
        6 => {
            if let Some((z, attach, _)) = cycle_escape(state, cycle) {
                let rot = rotate_to_front(cycle, attach);
                Ok(Pick {
                    rule: Rule::R7,
                    members: vec![z, rot[0], rot[3], rot[4]],
                    pairs: vec![(z, rot[0]), (rot[3], rot[4])],
                })
            } else {
                Ok(Pick {
                    rule: Rule::R7,
                    members: vec![cycle[0], cycle[1], cycle[3], cycle[4]],
                    pairs: vec![(cycle[0], cycle[1]), (cycle[3], cycle[4])],
                })
            }
        }
        _ => Ok(Pick {
            rule: Rule::R7,
            members: vec![cycle[1], cycle[2], cycle[5], cycle[6]],
            pairs: vec![(cycle[1], cycle[2]), (cycle[5], cycle[6])],
        }),
    }
}

fn comp_kind_of(comps: &[AmberComponent], v: usize) -> Option<(usize, AmberKind)> {
    comps
        .iter()
        .enumerate()
        .find(|(_, c)| c.vertices.contains(&v))
        .map(|(i, c)| (i, c.kind))
}

/// R9: a beige vertex with exactly two amber neighbors, one an isolated
/// amber vertex, the other in an amber pair. Pairing it with the pair-side
/// neighbor collapses both structures.
fn bridging_beige(state: &ColoredState, comps: &[AmberComponent]) -> Option<Pick> {
    for w in state.beige_vertices() {
        if state.amber_deg(w) != 2 {
            continue;
        }
        let nbrs: Vec<usize> = amber_neighbors(state, w).collect();
        let kinds: Vec<AmberKind> = nbrs
            .iter()
            .map(|&u| {
                comp_kind_of(comps, u)
                    .expect("amber vertex in some component")
                    .1
            })
            .collect();
        for (i, j) in [(0, 1), (1, 0)] {
            if kinds[i] == AmberKind::Isolated && kinds[j] == AmberKind::Pair {
                return Some(Pick::pair(Rule::R9, w, nbrs[j]));
            }
        }
    }
    None
}

/// R10: some beige vertex has exactly one amber neighbor. Two shapes:
/// the neighbor is an isolated amber vertex (cover it directly, or through a
/// two-amber beige when one is available), or the neighbor is half of an
/// amber pair (escape through a beige seeing a third amber vertex, or take
/// the pair itself).
fn single_amber_neighbor(state: &ColoredState, comps: &[AmberComponent]) -> Result<Option<Pick>> {
    let lonely: Vec<usize> = state
        .beige_vertices()
        .filter(|&w| state.amber_deg(w) == 1)
        .collect();
    if lonely.is_empty() {
        return Ok(None);
    }
    for &z in &lonely {
        let anchor = amber_neighbors(state, z).next().expect("amber-degree 1");
        let (_, kind) = comp_kind_of(comps, anchor).expect("amber vertex in some component");
        if kind != AmberKind::Isolated {
            continue;
        }
        if beige_neighbors(state, anchor).all(|u| state.amber_deg(u) == 1) {
            return Ok(Some(Pick::pair(Rule::R10, z, anchor)));
        }
        let two = beige_neighbors(state, anchor)
            .find(|&u| state.amber_deg(u) == 2)
            .ok_or_else(|| {
                gap(
                    state,
                    format!("isolated amber {anchor} has a beige neighbor above class 2"),
                )
            })?;
        return Ok(Some(Pick::pair(Rule::R10, anchor, two)));
    }
    // every single-neighbor beige points into an amber pair
    let z = lonely[0];
    let anchor = amber_neighbors(state, z).next().expect("amber-degree 1");
    let (idx, kind) = comp_kind_of(comps, anchor).expect("amber vertex in some component");
    if kind != AmberKind::Pair {
        return Err(gap(
            state,
            format!("single-neighbor beige {z} anchored in a non-pair amber component"),
        ));
    }
    let pair = comps[idx].vertices.clone();
    for &zi in &pair {
        for u in beige_neighbors(state, zi) {
            if amber_neighbors(state, u).any(|a| !pair.contains(&a)) {
                return Ok(Some(Pick::pair(Rule::R10, u, zi)));
            }
        }
    }
    Ok(Some(Pick::pair(Rule::R10, pair[0], pair[1])))
}

/// R11: a residual component whose amber vertices are all isolated in the
/// amber graph (its beige vertices each see exactly two of them). The
/// component contains a cycle alternating amber and beige; taking every
/// other edge of it as a pair clears the cycle, with an extra escape pair
/// when the cycle has odd amber length and a way out.
fn alternating_cycle(state: &ColoredState, members: &[usize]) -> Result<Pick> {
    let start = members
        .iter()
        .copied()
        .find(|&v| state.is_amber(v))
        .ok_or_else(|| gap(state, "residual component without amber vertices".into()))?;
    let n = state.graph().n();
    let mut pos = vec![None; n];
    let mut ambers = vec![start];
    let mut beiges = Vec::new();
    pos[start] = Some(0);
    let mut prev_beige = None;
    let (vs, us) = loop {
        let a = *ambers.last().unwrap();
        let u = beige_neighbors(state, a)
            .find(|&u| Some(u) != prev_beige)
            .ok_or_else(|| {
                gap(
                    state,
                    format!("amber vertex {a} lacks a fresh beige neighbor"),
                )
            })?;
        let next_nbrs: Vec<usize> = amber_neighbors(state, u).collect();
        if next_nbrs.len() != 2 {
            return Err(gap(
                state,
                format!(
                    "beige vertex {u} has {} amber neighbors, expected 2",
                    next_nbrs.len()
                ),
            ));
        }
        let next = if next_nbrs[0] == a {
            next_nbrs[1]
        } else {
            next_nbrs[0]
        };
        if let Some(j) = pos[next] {
            let vs = ambers[j..].to_vec();
            let mut us = beiges[j..].to_vec();
            us.push(u);
            break (vs, us);
        }
        pos[next] = Some(ambers.len());
        ambers.push(next);
        beiges.push(u);
        prev_beige = Some(u);
    };
    let k = vs.len();
    debug_assert!(
        k >= 2,
        "alternating cycle visits at least two amber vertices"
    );
    let take = |vs: &[usize], us: &[usize], upto: usize| {
        let mut members = Vec::new();
        let mut pairs = Vec::new();
        for i in (0..upto).step_by(2) {
            members.push(vs[i]);
            members.push(us[i]);
            pairs.push((vs[i], us[i]));
        }
        (members, pairs)
    };
    if k % 2 == 0 {
        let (members, pairs) = take(&vs, &us, k - 1);
        return Ok(Pick {
            rule: Rule::R11,
            members,
            pairs,
        });
    }
    // odd cycle: prefer escaping through a beige vertex with an amber
    // neighbor off the cycle, rotated to sit at the cycle's end
    if let Some((z, attach, escape)) = cycle_escape(state, &vs) {
        let t = vs.iter().position(|&v| v == attach).unwrap();
        let rot =
            |list: &[usize]| -> Vec<usize> { (0..k).map(|i| list[(t + 1 + i) % k]).collect() };
        let (rvs, rus) = (rot(&vs), rot(&us));
        let (mut members, mut pairs) = take(&rvs, &rus, k - 2);
        members.push(z);
        members.push(escape);
        pairs.push((z, escape));
        Ok(Pick {
            rule: Rule::R11,
            members,
            pairs,
        })
    } else {
        let (members, pairs) = take(&vs, &us, k);
        Ok(Pick {
            rule: Rule::R11,
            members,
            pairs,
        })
    }
}

/// R12: a residual component whose amber vertices all have exactly one
/// amber neighbor: they decompose into pairs, and taking all of them paired
/// with each other clears the component.
fn matched_amber(state: &ColoredState, members: &[usize]) -> Result<Pick> {
    let ambers: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&v| state.is_amber(v))
        .collect();
    let mut pairs = Vec::new();
    for &a in &ambers {
        let partner = amber_neighbors(state, a)
            .next()
            .ok_or_else(|| gap(state, format!("amber vertex {a} has no amber partner")))?;
        if a < partner {
            pairs.push((a, partner));
        }
    }
    if pairs.len() * 2 != ambers.len() {
        return Err(gap(
            state,
            "amber vertices do not decompose into pairs".into(),
        ));
    }
    Ok(Pick {
        rule: Rule::R12,
        members: ambers,
        pairs,
    })
}
