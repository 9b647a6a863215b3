//! Report records emitted by every subcommand, as human-readable text or
//! line-delimited JSON. Reports are byte-identical across runs for the same
//! input, flags, and seed; wall times are only attached on request.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use pairdom::PDSolution;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct TraceItem {
    pub rule: String,
    pub members: Vec<usize>,
    pub xi: u64,
    pub weight_after: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub mode: &'static str,
    pub name: String,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_pr: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes_explored: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio_decimal: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd_set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairing: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceItem>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl RunReport {
    pub fn new(mode: &'static str, name: &str, n: usize, m: usize) -> RunReport {
        RunReport {
            schema_version: SCHEMA_VERSION,
            mode,
            name: name.to_string(),
            n,
            m,
            seed: None,
            size: None,
            gamma_pr: None,
            nodes_explored: None,
            ratio: None,
            ratio_decimal: None,
            bound_ok: None,
            valid: None,
            pd_set: None,
            pairing: None,
            trace: None,
            oracle: None,
            error: None,
            wall_time_ms: None,
        }
    }

    pub fn fill_solution(&mut self, sol: &PDSolution, with_trace: bool) {
        let (p, q) = sol.ratio();
        self.size = Some(sol.size());
        self.ratio = Some(format!("{p}/{q}"));
        self.ratio_decimal = Some(p as f64 / q as f64);
        self.bound_ok = Some(sol.bound_ok);
        self.pd_set = Some(sol.pd_set.iter().collect());
        self.pairing = Some(
            sol.pairing
                .iter()
                .map(|&(a, b)| format!("{a}-{b}"))
                .collect(),
        );
        if with_trace {
            self.trace = Some(
                sol.trace
                    .iter()
                    .map(|e| TraceItem {
                        rule: e.rule.to_string(),
                        members: e.members.clone(),
                        xi: e.xi,
                        weight_after: e.weight_after,
                    })
                    .collect(),
            );
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: n={} m={}", self.name, self.n, self.m);
        if let Some(seed) = self.seed {
            write!(out, " seed={seed}").unwrap();
        }
        if let Some(g) = self.gamma_pr {
            write!(out, " gamma_pr={g}").unwrap();
        }
        if let Some(nodes) = self.nodes_explored {
            write!(out, " nodes={nodes}").unwrap();
        }
        if let Some(size) = self.size {
            write!(out, " size={size}").unwrap();
        }
        if let (Some(r), Some(d)) = (&self.ratio, self.ratio_decimal) {
            write!(out, " ratio={r} ({d})").unwrap();
        }
        if let Some(b) = self.bound_ok {
            write!(out, " bound_ok={b}").unwrap();
        }
        if let Some(v) = self.valid {
            write!(out, " valid={v}").unwrap();
        }
        if let Some(set) = &self.pd_set {
            let ids: Vec<String> = set.iter().map(|v| v.to_string()).collect();
            write!(out, " set={}", ids.join(",")).unwrap();
        }
        if let Some(pairs) = &self.pairing {
            write!(out, " pairs={}", pairs.join(",")).unwrap();
        }
        if let Some(oracle) = &self.oracle {
            write!(out, " oracle={oracle}").unwrap();
        }
        if let Some(err) = &self.error {
            write!(out, " error={err:?}").unwrap();
        }
        if let Some(ms) = self.wall_time_ms {
            write!(out, " wall_time_ms={ms}").unwrap();
        }
        if let Some(trace) = &self.trace {
            for item in trace {
                let ids: Vec<String> = item.members.iter().map(|v| v.to_string()).collect();
                write!(
                    out,
                    "\n  {} {{{}}} xi={} weight_after={}",
                    item.rule,
                    ids.join(" "),
                    item.xi,
                    item.weight_after
                )
                .unwrap();
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchSummary {
    pub schema_version: u32,
    pub mode: &'static str,
    pub count: usize,
    pub seed: u64,
    pub max_ratio: String,
    pub max_ratio_decimal: f64,
    pub mean_ratio_decimal: f64,
    pub rule_histogram: BTreeMap<String, usize>,
    pub oracle_checked: usize,
    pub mismatches: usize,
    pub gaps: usize,
    pub bound_failures: usize,
}

impl BenchSummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "bench: count={} seed={} max_ratio={} ({}) mean_ratio={}",
            self.count, self.seed, self.max_ratio, self.max_ratio_decimal, self.mean_ratio_decimal
        );
        write!(
            out,
            " oracle_checked={} mismatches={} gaps={} bound_failures={}",
            self.oracle_checked, self.mismatches, self.gaps, self.bound_failures
        )
        .unwrap();
        let rules: Vec<String> = pairdom::Rule::ALL
            .iter()
            .filter_map(|r| {
                let count = *self.rule_histogram.get(&r.to_string()).unwrap_or(&0);
                (count > 0).then(|| format!("{r}:{count}"))
            })
            .collect();
        write!(out, "\n  rules: {}", rules.join(" ")).unwrap();
        out
    }
}
