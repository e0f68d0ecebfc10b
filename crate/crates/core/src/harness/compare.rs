use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{HarnessError, Limits};
use crate::decider::{decide_exact_via_matchings, decide_paper_with, Verdict, VerdictKind};
use crate::graph::{classify_arcset, CycleClass, Digraph};
use crate::oracle::{
    backtrack_hc, held_karp, validate_witness, OracleError, OracleMethod, OracleResult,
};

/// Seconds spent in each decision procedure.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct RecordTimings {
    pub paper_s: f64,
    pub exact_s: f64,
    pub oracle_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRecord {
    pub instance: Digraph,
    pub paper_verdict: Verdict,
    /// `None` when the exact decider was not requested.
    pub exact_verdict: Option<Verdict>,
    /// `None` when the oracle was skipped (backtracking budget exhausted).
    pub oracle: Option<OracleResult>,
    /// Pipeline claims Hamiltonian while the oracle refutes it. `None` iff
    /// the oracle was skipped.
    pub discrepancy: Option<bool>,
    pub timings: RecordTimings,
}

impl ComparisonRecord {
    /// Equality ignoring timings.
    pub fn same_outcome(&self, other: &ComparisonRecord) -> bool {
        self.instance == other.instance
            && self.paper_verdict == other.paper_verdict
            && self.exact_verdict == other.exact_verdict
            && self.oracle == other.oracle
            && self.discrepancy == other.discrepancy
    }
}

/// Ground truth: Held–Karp up to `limits.held_karp_max_n`, budgeted
/// backtracking beyond. `None` when the budget runs out.
pub fn run_oracle(d: &Digraph, limits: &Limits) -> Result<Option<OracleResult>, HarnessError> {
    if d.n() < 2 {
        return Ok(Some(OracleResult {
            hamiltonian: false,
            witness: None,
            method: OracleMethod::HeldKarp,
        }));
    }
    let result = if d.n() <= limits.held_karp_max_n.min(crate::oracle::HELD_KARP_MAX_N) {
        held_karp(d)
    } else {
        backtrack_hc(d, limits.node_budget)
    };
    match result {
        Ok(r) => Ok(Some(r)),
        Err(OracleError::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Runs the pipeline, the exact decider (if enabled) and the oracle.
///
/// Fails with [`HarnessError::SoundnessViolation`] if the pipeline rejects a
/// Hamiltonian digraph and with [`HarnessError::ExactDisagreement`] if the
/// exact decider contradicts the oracle; both are bugs, not findings.
pub fn compare_one(d: &Digraph, limits: &Limits) -> Result<ComparisonRecord, HarnessError> {
    let mut timings = RecordTimings::default();

    let start = Instant::now();
    let paper_verdict = decide_paper_with(d, limits.decide_options());
    timings.paper_s = start.elapsed().as_secs_f64();

    let start = Instant::now();
    let exact_verdict = limits
        .run_exact
        .then(|| decide_exact_via_matchings(d, limits.enumeration_limit));
    timings.exact_s = start.elapsed().as_secs_f64();

    let start = Instant::now();
    let oracle = run_oracle(d, limits)?;
    timings.oracle_s = start.elapsed().as_secs_f64();

    if let Some(o) = &oracle {
        debug_assert!(o.witness.as_ref().is_none_or(|w| validate_witness(d, w)));
        if o.hamiltonian && paper_verdict.kind.is_negative() {
            return Err(HarnessError::SoundnessViolation {
                instance: d.clone(),
                verdict: paper_verdict,
            });
        }
        if let Some(ev) = &exact_verdict {
            let contradicts = match ev.kind {
                VerdictKind::Hamiltonian => !o.hamiltonian,
                VerdictKind::NotHamiltonian => o.hamiltonian,
                _ => false,
            };
            if contradicts {
                return Err(HarnessError::ExactDisagreement {
                    instance: d.clone(),
                    verdict: ev.clone(),
                    oracle: o.hamiltonian,
                });
            }
        }
    }
    if let Some(w) = exact_verdict.as_ref().and_then(|v| v.witness.as_ref()) {
        debug_assert_eq!(classify_arcset(d, w), CycleClass::HamiltonianCycle);
    }

    let discrepancy = oracle
        .as_ref()
        .map(|o| paper_verdict.kind == VerdictKind::ClaimedHamiltonian && !o.hamiltonian);
    Ok(ComparisonRecord {
        instance: d.clone(),
        paper_verdict,
        exact_verdict,
        oracle,
        discrepancy,
        timings,
    })
}

/// Pipeline claims Hamiltonian and the oracle (not skipped) says no. Skips
/// the exact decider.
pub fn is_discrepant(d: &Digraph, limits: &Limits) -> Result<bool, HarnessError> {
    if decide_paper_with(d, limits.decide_options()).kind != VerdictKind::ClaimedHamiltonian {
        return Ok(false);
    }
    Ok(matches!(run_oracle(d, limits)?, Some(o) if !o.hamiltonian))
}
