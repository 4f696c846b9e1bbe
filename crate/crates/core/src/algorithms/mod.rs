//! Algorithm drivers. Every driver evaluates relaxation predicates only
//! through [`LabelState`], so the aux/main tallies are comparable across
//! algorithms.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::graph::{Graph, VertexId};
use crate::labeling::{default_budget, CheckCounters, LabelState, RunOutcome};

mod bfm;
mod gor;
mod pallottino;
mod pape;
mod zdo;
mod zdo_bits;

pub use bfm::Detector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgoId {
    Bfm,
    Pape,
    Pallottino,
    Tarjan,
    Gor,
    Zdo,
    ZdoBits,
}

impl AlgoId {
    pub const ALL: [AlgoId; 7] = [
        AlgoId::Bfm,
        AlgoId::Pape,
        AlgoId::Pallottino,
        AlgoId::Tarjan,
        AlgoId::Gor,
        AlgoId::Zdo,
        AlgoId::ZdoBits,
    ];

    /// Short name used on the command line and in CSV output.
    pub fn as_str(self) -> &'static str {
        match self {
            AlgoId::Bfm => "bfm",
            AlgoId::Pape => "pape",
            AlgoId::Pallottino => "pal",
            AlgoId::Tarjan => "tar",
            AlgoId::Gor => "gor",
            AlgoId::Zdo => "zdo",
            AlgoId::ZdoBits => "zdo-bits",
        }
    }
}

impl fmt::Display for AlgoId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown algorithm `{0}` (expected bfm, pape, pal, tar, gor, zdo or zdo-bits)")]
pub struct UnknownAlgo(pub String);

impl FromStr for AlgoId {
    type Err = UnknownAlgo;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "bfm" => AlgoId::Bfm,
            "pape" => AlgoId::Pape,
            "pal" | "pallottino" => AlgoId::Pallottino,
            "tar" | "tarjan" => AlgoId::Tarjan,
            "gor" | "goldberg-radzik" | "goldberg_radzik" => AlgoId::Gor,
            "zdo" => AlgoId::Zdo,
            "zdo-bits" | "zdo_bits" | "zdobits" => AlgoId::ZdoBits,
            _ => return Err(UnknownAlgo(s.to_string())),
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Labeling-operation budget; `None` means `(n + 1) * m + n`.
    pub budget: Option<u64>,
    pub deadline: Option<Instant>,
    /// Record every scan in [`RunReport::trace`].
    pub trace: bool,
    /// Rebuild-and-compare the parent tree (and candidacy bits) at every
    /// quiescent point. Slow; for tests.
    pub audit: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanEvent {
    pub vertex: VertexId,
    /// Pass / round number, for algorithms that have one; 0 otherwise.
    pub round: u32,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub algo: AlgoId,
    pub outcome: RunOutcome,
    pub counters: CheckCounters,
    pub scans: u64,
    pub elapsed_ns: u64,
    pub trace: Vec<ScanEvent>,
    pub audit_failures: Vec<String>,
}

/// Per-run instrumentation shared by the drivers.
pub(crate) struct Recorder {
    pub scans: u64,
    trace: Option<Vec<ScanEvent>>,
    pub audit: bool,
    pub failures: Vec<String>,
}

impl Recorder {
    fn new(opts: &RunOptions) -> Self {
        Self {
            scans: 0,
            trace: opts.trace.then(Vec::new),
            audit: opts.audit,
            failures: Vec::new(),
        }
    }

    #[inline]
    pub fn scan(&mut self, vertex: VertexId, round: u32) {
        self.scans += 1;
        if let Some(t) = &mut self.trace {
            t.push(ScanEvent { vertex, round });
        }
    }

    pub fn check(&mut self, what: &str, r: Result<(), String>) {
        if let Err(e) = r {
            if self.failures.len() < 32 {
                self.failures.push(format!("{what}: {e}"));
            }
        }
    }
}

pub fn run(graph: &Graph, algo: AlgoId, opts: &RunOptions) -> RunReport {
    let budget = opts.budget.unwrap_or_else(|| default_budget(graph));
    let mut state = LabelState::new(graph.n(), graph.source(), budget, opts.deadline);
    let mut rec = Recorder::new(opts);
    let start = Instant::now();
    let result = match algo {
        AlgoId::Bfm => bfm::run(graph, &mut state, &mut rec, Detector::None),
        AlgoId::Tarjan => bfm::run(graph, &mut state, &mut rec, Detector::Subtree),
        AlgoId::Pape => pape::run(graph, &mut state, &mut rec),
        AlgoId::Pallottino => pallottino::run(graph, &mut state, &mut rec),
        AlgoId::Gor => gor::run(graph, &mut state, &mut rec),
        AlgoId::Zdo => zdo::run(graph, &mut state, &mut rec),
        AlgoId::ZdoBits => zdo_bits::run(graph, &mut state, &mut rec),
    };
    let elapsed_ns = start.elapsed().as_nanos() as u64;
    let outcome = result.unwrap_or_else(|abort| state.abort_outcome(abort));
    RunReport {
        algo,
        outcome,
        counters: state.counters,
        scans: rec.scans,
        elapsed_ns,
        trace: rec.trace.unwrap_or_default(),
        audit_failures: rec.failures,
    }
}

/// Bellman-Ford-Moore with an explicit choice of cycle detector.
pub fn run_bfm(graph: &Graph, detector: Detector, opts: &RunOptions) -> RunReport {
    let budget = opts.budget.unwrap_or_else(|| default_budget(graph));
    let mut state = LabelState::new(graph.n(), graph.source(), budget, opts.deadline);
    let mut rec = Recorder::new(opts);
    let start = Instant::now();
    let result = bfm::run(graph, &mut state, &mut rec, detector);
    let elapsed_ns = start.elapsed().as_nanos() as u64;
    let outcome = result.unwrap_or_else(|abort| state.abort_outcome(abort));
    RunReport {
        algo: if detector == Detector::Subtree {
            AlgoId::Tarjan
        } else {
            AlgoId::Bfm
        },
        outcome,
        counters: state.counters,
        scans: rec.scans,
        elapsed_ns,
        trace: rec.trace.unwrap_or_default(),
        audit_failures: rec.failures,
    }
}
