//! Seeded batch experiment over `G(n, 1/2)` graphs.
//!
//! Graph `i` is drawn from its own stream `(master_seed, i)`, analysed on a
//! worker pool, and the results are folded in index order, so the report
//! depends only on the configuration and never on scheduling.

use std::fmt::Write as _;

use anyhow::{ensure, Context, Result};
use dgs_core::criteria::{analyze_full, Mode, Status};
use dgs_core::graphio::{random_gnp_half, GraphStream};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report::SCHEMA_VERSION;

/// Environment variable overriding the default worker count.
pub const WORKERS_ENV: &str = "DGS_WORKERS";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub n: usize,
    pub samples: u64,
    pub master_seed: u64,
    pub modes: Vec<Mode>,
    pub workers: usize,
    /// Keep one record per graph in the report.
    pub verbose: bool,
}

impl ExperimentConfig {
    pub fn new(n: usize, samples: u64, master_seed: u64) -> Self {
        ExperimentConfig {
            n,
            samples,
            master_seed,
            modes: Mode::ALL.to_vec(),
            workers: default_workers(),
            verbose: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        ensure!(self.n >= 1, "graph order must be at least 1");
        ensure!(self.workers >= 1, "need at least one worker");
        ensure!(!self.modes.is_empty(), "no modes selected");
        Ok(())
    }
}

/// `DGS_WORKERS` if set and valid, else the available parallelism.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&w| w >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Outcome for one sampled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphRecord {
    pub index: u64,
    pub graph6: String,
    pub controllable: bool,
    pub theta_odd: bool,
    /// One status per configured mode, in configuration order.
    pub statuses: Vec<Status>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentReport {
    pub n: usize,
    pub samples: u64,
    pub master_seed: u64,
    pub modes: Vec<Mode>,
    pub total: u64,
    pub controllable: u64,
    pub theta_odd: u64,
    /// Certified count per mode, aligned with `modes`.
    pub certified: Vec<u64>,
    /// Graphs certified by OLD_ONLY but not by MAIN_ONLY; must stay zero.
    pub old_without_main: u64,
    pub records: Option<Vec<GraphRecord>>,
}

impl ExperimentReport {
    pub fn certified_in(&self, mode: Mode) -> Option<u64> {
        self.modes
            .iter()
            .position(|&m| m == mode)
            .map(|i| self.certified[i])
    }

    /// `certified <= theta_odd <= controllable <= total` for every mode.
    pub fn counters_consistent(&self) -> bool {
        self.certified.iter().all(|&c| c <= self.theta_odd)
            && self.theta_odd <= self.controllable
            && self.controllable <= self.total
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,samples,seed,theta_odd");
        for m in &self.modes {
            let _ = write!(out, ",{m}");
        }
        let _ = write!(
            out,
            "\n{},{},{},{}",
            self.n, self.samples, self.master_seed, self.theta_odd
        );
        for c in &self.certified {
            let _ = write!(out, ",{c}");
        }
        out.push('\n');
        out
    }

    pub fn to_json(&self) -> Value {
        let certified: serde_json::Map<String, Value> = self
            .modes
            .iter()
            .zip(&self.certified)
            .map(|(m, c)| (m.as_str().to_string(), json!(c)))
            .collect();
        let mut v = json!({
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "samples": self.samples,
            "seed": self.master_seed,
            "total": self.total,
            "controllable": self.controllable,
            "theta_odd": self.theta_odd,
            "certified": certified,
            "old_without_main": self.old_without_main,
        });
        if let Some(records) = &self.records {
            v["records"] = records
                .iter()
                .map(|r| {
                    json!({
                        "index": r.index,
                        "graph6": r.graph6,
                        "controllable": r.controllable,
                        "theta_odd": r.theta_odd,
                        "status": self.modes.iter().zip(&r.statuses)
                            .map(|(m, s)| (m.as_str().to_string(), json!(s.as_str())))
                            .collect::<serde_json::Map<_, _>>(),
                    })
                })
                .collect();
        }
        v
    }

    /// Aligned text with each count also given as a fraction.
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let frac = |k: u64, of: u64| if of == 0 { 0.0 } else { k as f64 / of as f64 };
        let _ = writeln!(out, "n = {}, samples = {}, seed = {}", self.n, self.samples, self.master_seed);
        let _ = writeln!(out, "controllable   {:>7}", self.controllable);
        let _ = writeln!(
            out,
            "theta odd      {:>7}  ({:.4} of samples)",
            self.theta_odd,
            frac(self.theta_odd, self.total)
        );
        for (m, c) in self.modes.iter().zip(&self.certified) {
            let _ = writeln!(
                out,
                "{:<14} {:>7}  ({:.4} of theta odd)",
                m.as_str(),
                c,
                frac(*c, self.theta_odd)
            );
        }
        if self.old_without_main > 0 {
            let _ = writeln!(out, "WARNING: {} graphs certified by OLD_ONLY but not MAIN_ONLY", self.old_without_main);
        }
        out
    }
}

fn sample(config: &ExperimentConfig, index: u64) -> Result<(GraphRecord, bool, bool)> {
    let g = random_gnp_half(config.n, &mut GraphStream::new(config.master_seed, index));
    let analysis = analyze_full(&g).with_context(|| format!("graph {index} ({})", g.to_graph6()))?;
    let inv = analysis.invariants();
    let statuses = config.modes.iter().map(|&m| analysis.verdict(m).status).collect();
    let old = analysis.verdict(Mode::OldOnly).is_certified();
    let main = analysis.verdict(Mode::MainOnly).is_certified();
    Ok((
        GraphRecord {
            index,
            graph6: g.to_graph6(),
            controllable: inv.controllable,
            theta_odd: inv.controllable && inv.theta_is_odd(),
            statuses,
        },
        old,
        main,
    ))
}

pub fn run(config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .context("building worker pool")?;
    // `collect` on an indexed parallel iterator preserves index order.
    let outcomes: Vec<(GraphRecord, bool, bool)> = pool.install(|| {
        (0..config.samples)
            .into_par_iter()
            .map(|i| sample(config, i))
            .collect::<Result<_>>()
    })?;

    let mut report = ExperimentReport {
        n: config.n,
        samples: config.samples,
        master_seed: config.master_seed,
        modes: config.modes.clone(),
        total: 0,
        controllable: 0,
        theta_odd: 0,
        certified: vec![0; config.modes.len()],
        old_without_main: 0,
        records: config.verbose.then(Vec::new),
    };
    for (record, old, main) in outcomes {
        report.total += 1;
        report.controllable += u64::from(record.controllable);
        report.theta_odd += u64::from(record.theta_odd);
        for (count, status) in report.certified.iter_mut().zip(&record.statuses) {
            *count += u64::from(*status == Status::DgsCertified);
        }
        report.old_without_main += u64::from(old && !main);
        if let Some(records) = &mut report.records {
            records.push(record);
        }
    }
    Ok(report)
}
