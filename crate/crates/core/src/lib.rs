//! Instrumented label-correcting single-source shortest-path algorithms.
//!
//! Every driver counts evaluations of the relaxation predicate
//! `d(u) + l(u, v) < d(v)`, split into *auxiliary* checks (deciding what to
//! scan) and *main* checks (made while scanning). Counts divided by the arc
//! count give the per-arc figures used to compare algorithms independently
//! of hardware.
//!
//! ```
//! use sssp_core::{generators, run, AlgoId, RunOptions};
//!
//! let g = generators::gen_star(100).unwrap();
//! let report = run(&g, AlgoId::ZdoBits, &RunOptions::default());
//! assert!(report.outcome.tree().is_some());
//! assert_eq!(report.counters.main, g.m() as u64);
//! ```

pub mod algorithms;
pub mod bitvec;
pub mod dimacs;
pub mod generators;
pub mod graph;
pub mod labeling;
pub mod prng;
pub mod verifier;

pub use algorithms::{run, run_bfm, AlgoId, Detector, RunOptions, RunReport, ScanEvent};
pub use bitvec::BitVec;
pub use dimacs::{parse_dimacs, write_dimacs, DimacsError};
pub use generators::{Family, GenError, GenSpec, Params};
pub use graph::{Arc, Distance, Graph, GraphError, Length, VertexId, UNREACHED_BOUND, VERY_FAR};
pub use labeling::{default_budget, Abort, CheckCounters, CheckKind, RunOutcome, ShortestPathTree};
pub use prng::SplitMix64;
pub use verifier::{oracle_bellman_ford, verify_cycle, verify_outcome, verify_tree};
