//! Paired domination with a guaranteed size ratio.
//!
//! A paired dominating set of a graph is a dominating set whose induced
//! subgraph contains a perfect matching: the chosen vertices patrol in
//! pairs, each pair joined by an edge. This crate builds such a set for any
//! graph of minimum degree four, never using more than `10n/17` of the `n`
//! vertices, in polynomial time.
//!
//! The construction keeps a vertex coloring (amber for undominated, beige
//! for dominated-but-near-amber, cyan for settled) with integer weights,
//! and repeatedly applies the highest-priority of twelve extraction rules,
//! each guaranteed to pay for the vertices it adds by a fixed weight drop.
//! See [`solver::solve`] for the entry point, [`coloring`] for the weight
//! accounting, [`rules`] for the rule cascade and [`oracle`] for exact
//! reference algorithms on small graphs.

#![forbid(unsafe_code)]

pub mod coloring;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod rules;
pub mod solver;

pub use coloring::{apply_extension, color, xi, Color, ColoredState, DesirableSet, WeightTable};
pub use error::{Error, Result, StateDump};
pub use generate::{generate, GraphKind};
pub use graph::{Graph, VertexSet};
pub use io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
pub use oracle::{
    exact_gamma_pr, exact_gamma_pr_with_limit, has_perfect_matching, is_pd_set, ExactResult,
    DEFAULT_EXACT_LIMIT,
};
pub use rules::{amber_components, boundary, find_desirable, Rule};
pub use solver::{preprocess, prune_pairs, solve, PDSolution, TraceEntry};
