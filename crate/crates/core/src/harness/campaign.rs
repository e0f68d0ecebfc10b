use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{compare_one, generate, shrink, Family, GenSpec, HarnessError, Limits};
use crate::decider::{Verdict, VerdictKind};
use crate::graph::Digraph;
use crate::oracle::OracleResult;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    #[serde(flatten)]
    pub family: Family,
    pub n_min: usize,
    pub n_max: usize,
    pub trials: usize,
    pub master_seed: u64,
    pub limits: Limits,
}

/// Confusion counts. `true_pos + true_neg + claimed_pos_oracle_neg +
/// oracle_skipped == trials`; `no_pm` and `rank_deficient` break down the
/// pipeline's negative answers, which are all counted in `true_neg`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub trials: usize,
    pub true_pos: usize,
    pub true_neg: usize,
    pub claimed_pos_oracle_neg: usize,
    pub no_pm: usize,
    pub rank_deficient: usize,
    pub oracle_skipped: usize,
    /// Trials where the enumeration decider hit its limit.
    pub exact_unknown: usize,
}

impl Totals {
    pub fn is_partition(&self) -> bool {
        self.true_pos + self.true_neg + self.claimed_pos_oracle_neg + self.oracle_skipped
            == self.trials
            && self.no_pm + self.rank_deficient <= self.true_neg
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArchivedDiscrepancy {
    pub trial: usize,
    pub seed: u64,
    pub instance: Digraph,
    pub pre_compaction: Digraph,
    pub minimized: Digraph,
    pub vertex_labels: Vec<usize>,
    pub paper_verdict: Verdict,
    pub oracle: OracleResult,
}

impl ArchivedDiscrepancy {
    /// Re-runs the comparison on both the original and the minimized
    /// instance; true iff both are still discrepancies.
    pub fn revalidate(&self, limits: &Limits) -> Result<bool, HarnessError> {
        for d in [&self.instance, &self.minimized] {
            if compare_one(d, limits)?.discrepancy != Some(true) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WallTime {
    pub total_s: f64,
    pub mean_trial_s: f64,
    pub max_trial_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub totals: Totals,
    pub discrepancies: Vec<ArchivedDiscrepancy>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time: Option<WallTime>,
}

impl CampaignReport {
    /// Drops wall-clock data so the report depends only on the config.
    pub fn without_timing(mut self) -> Self {
        self.wall_time = None;
        self
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `index`: `splitmix64(master_seed ^ splitmix64(index))`.
pub fn trial_seed(master_seed: u64, index: u64) -> u64 {
    splitmix64(master_seed ^ splitmix64(index))
}

fn trial_n(config: &CampaignConfig, seed: u64) -> usize {
    if let Some(n) = config.family.fixed_n() {
        return n;
    }
    let span = (config.n_max - config.n_min + 1) as u64;
    config.n_min + (splitmix64(seed) % span) as usize
}

enum Outcome {
    Skipped,
    TruePos,
    Neg(VerdictKind),
    Discrepancy(Box<ArchivedDiscrepancy>),
}

struct TrialResult {
    outcome: Outcome,
    exact_unknown: bool,
    secs: f64,
}

fn run_trial(config: &CampaignConfig, index: usize) -> Result<TrialResult, HarnessError> {
    let start = Instant::now();
    let seed = trial_seed(config.master_seed, index as u64);
    let spec = GenSpec::new(config.family.clone(), trial_n(config, seed), seed);
    let d = generate(&spec)?;
    let rec = compare_one(&d, &config.limits)?;
    let exact_unknown = rec
        .exact_verdict
        .as_ref()
        .is_some_and(|v| v.kind == VerdictKind::Unknown);
    let outcome = match (&rec.oracle, rec.paper_verdict.kind) {
        (None, _) => Outcome::Skipped,
        (Some(o), VerdictKind::ClaimedHamiltonian) if o.hamiltonian => Outcome::TruePos,
        (Some(o), VerdictKind::ClaimedHamiltonian) => {
            let s = shrink(&d, &config.limits)?;
            Outcome::Discrepancy(Box::new(ArchivedDiscrepancy {
                trial: index,
                seed,
                instance: d,
                pre_compaction: s.pre_compaction,
                minimized: s.minimized,
                vertex_labels: s.vertex_labels,
                paper_verdict: rec.paper_verdict,
                oracle: o.clone(),
            }))
        }
        (Some(_), kind) => Outcome::Neg(kind),
    };
    Ok(TrialResult {
        outcome,
        exact_unknown,
        secs: start.elapsed().as_secs_f64(),
    })
}

/// Runs `config.trials` independent comparisons in parallel.
///
/// Trial `i` draws its instance from `trial_seed(master_seed, i)`, and
/// results are merged by trial index, so the report (minus `wall_time`) is
/// identical for any thread count. Discrepancies are shrunk before
/// archiving. A soundness violation aborts the campaign.
pub fn fuzz_campaign(config: &CampaignConfig) -> Result<CampaignReport, HarnessError> {
    if config.trials == 0 {
        return Err(HarnessError::InfeasibleSpec("trials must be >= 1".into()));
    }
    if config.family.fixed_n().is_none() && config.n_min > config.n_max {
        return Err(HarnessError::InfeasibleSpec(format!(
            "empty vertex-count range {}..={}",
            config.n_min, config.n_max
        )));
    }
    let start = Instant::now();
    let results: Vec<Result<TrialResult, HarnessError>> = (0..config.trials)
        .into_par_iter()
        .map(|i| run_trial(config, i))
        .collect();

    let mut totals = Totals {
        trials: config.trials,
        ..Totals::default()
    };
    let mut discrepancies = Vec::new();
    let mut max_trial_s: f64 = 0.0;
    let mut sum_s = 0.0;
    for r in results {
        let r = r?;
        max_trial_s = max_trial_s.max(r.secs);
        sum_s += r.secs;
        totals.exact_unknown += usize::from(r.exact_unknown);
        match r.outcome {
            Outcome::Skipped => totals.oracle_skipped += 1,
            Outcome::TruePos => totals.true_pos += 1,
            Outcome::Neg(kind) => {
                totals.true_neg += 1;
                match kind {
                    VerdictKind::NoPerfectMatching => totals.no_pm += 1,
                    VerdictKind::RankDeficient => totals.rank_deficient += 1,
                    _ => {}
                }
            }
            Outcome::Discrepancy(a) => {
                totals.claimed_pos_oracle_neg += 1;
                discrepancies.push(*a);
            }
        }
    }
    debug_assert!(totals.is_partition());
    Ok(CampaignReport {
        config: config.clone(),
        totals,
        discrepancies,
        wall_time: Some(WallTime {
            total_s: start.elapsed().as_secs_f64(),
            mean_trial_s: sum_s / config.trials as f64,
            max_trial_s,
        }),
    })
}
