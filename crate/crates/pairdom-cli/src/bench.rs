//! Corpus benchmark: generate a batch of minimum-degree-4 instances, solve
//! them on a worker pool, cross-check small ones against the exact oracle,
//! and aggregate ratios, rule firings, and failure counts.

use std::collections::BTreeMap;
use std::time::Instant;

use pairdom::{exact_gamma_pr, generate, Error, GraphKind, Rule};
use rayon::prelude::*;

use crate::report::{BenchSummary, RunReport, SCHEMA_VERSION};

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

pub struct BenchConfig {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
    pub oracle_max: usize,
    pub timing: bool,
}

struct InstanceOutcome {
    report: RunReport,
    ratio: Option<(u64, u64)>,
    rules: Vec<Rule>,
    checked: bool,
    mismatch: bool,
    gap: bool,
    bound_failed: bool,
}

fn run_instance(cfg: &BenchConfig, i: usize) -> InstanceOutcome {
    let span = cfg.n_max - cfg.n_min + 1;
    let n = cfg.n_min + (i * 7) % span;
    let seed = cfg.seed.wrapping_add((i as u64).wrapping_mul(GOLDEN));
    let kind = if i.is_multiple_of(2) {
        GraphKind::RandomRegular { n, degree: 4 }
    } else {
        GraphKind::RandomMinDegree {
            n,
            min_degree: 4,
            edge_prob: 0.15,
        }
    };
    let g = generate(&kind, seed).expect("bench sizes are validated up front");
    let mut report = RunReport::new("bench", &format!("bench-{i}"), g.n(), g.m());
    report.seed = Some(seed);

    let start = Instant::now();
    let mut outcome = InstanceOutcome {
        report: RunReport::new("bench", "", 0, 0),
        ratio: None,
        rules: Vec::new(),
        checked: false,
        mismatch: false,
        gap: false,
        bound_failed: false,
    };
    match pairdom::solve(&g) {
        Ok(sol) => {
            report.fill_solution(&sol, false);
            outcome.ratio = Some(sol.ratio());
            outcome.rules = sol.trace.iter().map(|e| e.rule).collect();
            outcome.bound_failed = !sol.bound_ok;
            if n <= cfg.oracle_max {
                let exact = exact_gamma_pr(&g).expect("oracle runs below its size limit");
                outcome.checked = true;
                outcome.mismatch = exact.gamma_pr > sol.size() || !exact.gamma_pr.is_multiple_of(2);
                report.oracle = Some(if outcome.mismatch {
                    format!("mismatch: exact {} vs {}", exact.gamma_pr, sol.size())
                } else {
                    format!("ok: exact {}", exact.gamma_pr)
                });
            } else {
                report.oracle = Some("skipped".to_string());
            }
        }
        Err(err) => {
            outcome.gap = matches!(err, Error::ProofGap(_) | Error::ThresholdViolation(_));
            report.error = Some(err.to_string());
        }
    }
    if cfg.timing {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    outcome.report = report;
    outcome
}

/// Runs the whole batch and reduces it to per-instance reports plus a
/// summary. Reports come back in instance order regardless of scheduling.
pub fn run(cfg: &BenchConfig) -> (Vec<RunReport>, BenchSummary) {
    let outcomes: Vec<InstanceOutcome> = (0..cfg.count)
        .into_par_iter()
        .map(|i| run_instance(cfg, i))
        .collect();

    let mut histogram: BTreeMap<String, usize> =
        Rule::ALL.iter().map(|r| (r.to_string(), 0)).collect();
    let mut max_ratio = (0u64, 1u64);
    let mut ratio_sum = 0.0;
    let mut solved = 0usize;
    let mut summary = BenchSummary {
        schema_version: SCHEMA_VERSION,
        mode: "bench-summary",
        count: cfg.count,
        seed: cfg.seed,
        max_ratio: String::new(),
        max_ratio_decimal: 0.0,
        mean_ratio_decimal: 0.0,
        rule_histogram: BTreeMap::new(),
        oracle_checked: 0,
        mismatches: 0,
        gaps: 0,
        bound_failures: 0,
    };
    for outcome in &outcomes {
        if let Some((p, q)) = outcome.ratio {
            // exact fraction comparison, no rounding
            if p * max_ratio.1 > max_ratio.0 * q {
                max_ratio = (p, q);
            }
            ratio_sum += p as f64 / q as f64;
            solved += 1;
        }
        for rule in &outcome.rules {
            *histogram.get_mut(&rule.to_string()).unwrap() += 1;
        }
        summary.oracle_checked += outcome.checked as usize;
        summary.mismatches += outcome.mismatch as usize;
        summary.gaps += outcome.gap as usize;
        summary.bound_failures += outcome.bound_failed as usize;
    }
    summary.max_ratio = format!("{}/{}", max_ratio.0, max_ratio.1);
    summary.max_ratio_decimal = max_ratio.0 as f64 / max_ratio.1 as f64;
    summary.mean_ratio_decimal = if solved == 0 {
        0.0
    } else {
        ratio_sum / solved as f64
    };
    summary.rule_histogram = histogram;
    (outcomes.into_iter().map(|o| o.report).collect(), summary)
}
