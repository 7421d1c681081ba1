//! Deterministic instance generation and the law-suite runner.
//!
//! A law is a check over a workspace together with a generator for its
//! instance workspaces. The runner checks every instance, reports per-law
//! instance counts and failures (each failure carrying the instance
//! serialized in the text format, ready to become a regression fixture),
//! and renders byte-identical reports for identical configurations.
//!
//! Instances are independent, so the runner fans them out with rayon when
//! the `parallel` feature is enabled; the sequential path is always
//! available and produces the same report because results are reassembled
//! in generation order.

pub mod gen;
pub mod laws;

use serde::Serialize;

use crate::dsl::Workspace;

pub use laws::{phi_box_failures, registry};

/// Configuration of a suite run. Identical configurations produce
/// byte-identical reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenConfig {
    pub seed: u64,
    /// Exhaustive enumeration covers all partitions/relations up to this
    /// many atoms (= space points).
    pub max_atoms_exhaustive: usize,
    /// Seeded sampling covers sizes up to this many atoms.
    pub max_atoms_sampled: usize,
    /// Samples drawn per size stratum; strata smaller than this are
    /// enumerated completely instead.
    pub samples_per_size: usize,
    /// Law-id prefixes to run; empty means all.
    pub law_filter: Vec<String>,
}

impl Default for GenConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            max_atoms_exhaustive: 3,
            max_atoms_sampled: 5,
            samples_per_size: 200,
            law_filter: Vec::new(),
        }
    }
}

impl GenConfig {
    fn selects(&self, law_id: &str) -> bool {
        self.law_filter.is_empty()
            || self
                .law_filter
                .iter()
                .any(|p| law_id.starts_with(p.as_str()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub workspace_dsl: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct LawResult {
    pub instances: u64,
    pub failures: Vec<Failure>,
}

pub struct Law {
    pub id: &'static str,
    pub anchor: &'static str,
    pub gen: fn(&GenConfig) -> Vec<Workspace>,
    pub check: fn(&Workspace) -> LawResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law_id: String,
    pub paper_anchor: String,
    pub instances: u64,
    pub passed: bool,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub config: GenConfig,
    pub laws: Vec<LawReport>,
}

pub const REPORT_SCHEMA_VERSION: u32 = 1;

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.laws.iter().all(|l| l.passed)
    }

    /// Stable plain-text rendering: one line per law plus failure blocks.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for law in &self.laws {
            let status = if law.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {} instances={} failures={}\n",
                law.law_id,
                law.instances,
                law.failures.len()
            ));
            for f in &law.failures {
                out.push_str(&format!("  detail: {}\n", f.detail));
                for line in f.workspace_dsl.lines() {
                    out.push_str(&format!("  | {line}\n"));
                }
            }
        }
        let status = if self.all_passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{status} suite: {}/{} laws\n",
            self.laws.iter().filter(|l| l.passed).count(),
            self.laws.len()
        ));
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn merge(results: Vec<LawResult>) -> LawResult {
    let mut acc = LawResult::default();
    for r in results {
        acc.instances += r.instances;
        acc.failures.extend(r.failures);
    }
    acc
}

#[cfg(feature = "parallel")]
fn run_instances(check: fn(&Workspace) -> LawResult, instances: &[Workspace]) -> LawResult {
    use rayon::prelude::*;
    merge(instances.par_iter().map(check).collect::<Vec<_>>())
}

#[cfg(not(feature = "parallel"))]
fn run_instances(check: fn(&Workspace) -> LawResult, instances: &[Workspace]) -> LawResult {
    merge(instances.iter().map(check).collect::<Vec<_>>())
}

/// Sequential fallback, always available; report-identical to the parallel
/// path because aggregation is in generation order either way.
pub fn run_instances_sequential(
    check: fn(&Workspace) -> LawResult,
    instances: &[Workspace],
) -> LawResult {
    merge(instances.iter().map(check).collect::<Vec<_>>())
}

type InstanceRunner = fn(fn(&Workspace) -> LawResult, &[Workspace]) -> LawResult;

fn run_suite_with(cfg: &GenConfig, runner: InstanceRunner) -> SuiteReport {
    let mut reports = Vec::new();
    for law in registry() {
        if !cfg.selects(law.id) {
            continue;
        }
        let instances = (law.gen)(cfg);
        let result = runner(law.check, &instances);
        reports.push(LawReport {
            law_id: law.id.to_string(),
            paper_anchor: law.anchor.to_string(),
            instances: result.instances,
            passed: result.failures.is_empty(),
            failures: result.failures,
        });
    }
    SuiteReport {
        schema_version: REPORT_SCHEMA_VERSION,
        config: cfg.clone(),
        laws: reports,
    }
}

/// Run every selected law over its generated instances.
pub fn run_suite(cfg: &GenConfig) -> SuiteReport {
    run_suite_with(cfg, run_instances)
}

/// The same suite on the sequential path, for comparison and benchmarks.
pub fn run_suite_sequential(cfg: &GenConfig) -> SuiteReport {
    run_suite_with(cfg, run_instances_sequential)
}

/// Run one law by id against a user workspace.
pub fn run_law_on_workspace(law_id: &str, ws: &Workspace) -> Option<LawReport> {
    registry().into_iter().find(|l| l.id == law_id).map(|law| {
        let result = (law.check)(ws);
        LawReport {
            law_id: law.id.to_string(),
            paper_anchor: law.anchor.to_string(),
            instances: result.instances,
            passed: result.failures.is_empty(),
            failures: result.failures,
        }
    })
}
