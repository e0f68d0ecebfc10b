//! Auditing the pipeline against ground truth: generators, per-instance
//! comparison, fuzz campaigns, shrinking and scaling measurements.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decider::{DecideOptions, Verdict};
use crate::graph::{Digraph, GraphError};
use crate::matching::DEFAULT_ENUMERATION_LIMIT;
use crate::oracle::{OracleError, DEFAULT_NODE_BUDGET, HELD_KARP_MAX_N};

mod bench;
mod campaign;
mod compare;
mod gen;
mod shrink;

pub use bench::{bench_scaling, loglog_slope, BenchRow, BenchTable};
pub use campaign::{
    fuzz_campaign, trial_seed, ArchivedDiscrepancy, CampaignConfig, CampaignReport, Totals,
    WallTime,
};
pub use compare::{compare_one, is_discrepant, run_oracle, ComparisonRecord, RecordTimings};
pub use gen::{generate, prism, Family, GenSpec, PRISM_N};
pub use shrink::{shrink, ShrinkResult};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("edge probability must lie in [0, 1], got {0}")]
    InvalidProbability(f64),
    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("instance is not a discrepancy (pipeline and oracle do not disagree)")]
    NotADiscrepancy,
    /// The pipeline rejected a digraph the oracle proved Hamiltonian.
    #[error("soundness violated: pipeline said {:?} on Hamiltonian {instance}", verdict.kind)]
    SoundnessViolation { instance: Digraph, verdict: Verdict },
    /// The enumeration decider contradicts the oracle.
    #[error("exact decider said {:?} but oracle said hamiltonian={oracle} on {instance}", verdict.kind)]
    ExactDisagreement {
        instance: Digraph,
        verdict: Verdict,
        oracle: bool,
    },
}

/// Resource limits for one comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Limits {
    /// Perfect matchings examined by the exact decider before `Unknown`.
    pub enumeration_limit: usize,
    /// Held–Karp handles `n` up to this; larger instances use backtracking.
    pub held_karp_max_n: usize,
    /// Node budget for backtracking; exhausting it skips the oracle.
    pub node_budget: u64,
    /// Also run the enumeration decider.
    pub run_exact: bool,
    pub strong_connectivity_prefilter: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_limit: DEFAULT_ENUMERATION_LIMIT,
            held_karp_max_n: HELD_KARP_MAX_N,
            node_budget: DEFAULT_NODE_BUDGET,
            run_exact: true,
            strong_connectivity_prefilter: false,
        }
    }
}

impl Limits {
    pub fn decide_options(&self) -> DecideOptions {
        DecideOptions {
            strong_connectivity_prefilter: self.strong_connectivity_prefilter,
        }
    }
}
