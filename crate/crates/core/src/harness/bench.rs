use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{generate, trial_seed, Family, GenSpec, HarnessError};
use crate::decider::{decide_paper_timed, DecideOptions, VerdictKind};

/// Mean per-stage seconds over the repeats at one `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub mean_arcs: f64,
    pub mean_total_s: f64,
    pub mean_zmap_s: f64,
    pub mean_matching_s: f64,
    pub mean_allowed_s: f64,
    pub mean_rank_s: f64,
    /// Repeats answered `ClaimedHamiltonian`.
    pub claimed: usize,
    pub repeats: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchTable {
    pub p: f64,
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of `ln(mean_total_s)` against `ln(n)`; absent
    /// with fewer than two rows.
    pub slope: Option<f64>,
}

impl BenchTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "n,mean_arcs,mean_total_s,mean_zmap_s,mean_matching_s,mean_allowed_s,mean_rank_s,claimed,repeats\n",
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{:.1},{:.6e},{:.6e},{:.6e},{:.6e},{:.6e},{},{}",
                r.n,
                r.mean_arcs,
                r.mean_total_s,
                r.mean_zmap_s,
                r.mean_matching_s,
                r.mean_allowed_s,
                r.mean_rank_s,
                r.claimed,
                r.repeats
            );
        }
        out
    }
}

/// Ordinary least-squares slope of `ys` on `xs`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Times the pipeline on `repeats` fresh `Gnp(n, p)` digraphs per `n`.
/// Generation is not timed.
pub fn bench_scaling(
    n_list: &[usize],
    p: f64,
    seed: u64,
    repeats: usize,
) -> Result<BenchTable, HarnessError> {
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(HarnessError::InfeasibleSpec(format!(
            "n list must be strictly ascending, got {n_list:?}"
        )));
    }
    if repeats == 0 {
        return Err(HarnessError::InfeasibleSpec("repeats must be >= 1".into()));
    }
    let mut rows = Vec::with_capacity(n_list.len());
    let mut index = 0u64;
    for &n in n_list {
        let mut row = BenchRow {
            n,
            mean_arcs: 0.0,
            mean_total_s: 0.0,
            mean_zmap_s: 0.0,
            mean_matching_s: 0.0,
            mean_allowed_s: 0.0,
            mean_rank_s: 0.0,
            claimed: 0,
            repeats,
        };
        for _ in 0..repeats {
            let spec = GenSpec::new(Family::Gnp { p }, n, trial_seed(seed, index));
            index += 1;
            let d = generate(&spec)?;
            let start = Instant::now();
            let (v, t) = decide_paper_timed(&d, DecideOptions::default());
            let total = start.elapsed();
            row.mean_arcs += d.m() as f64;
            row.mean_total_s += total.as_secs_f64();
            row.mean_zmap_s += t.zmap.as_secs_f64();
            row.mean_matching_s += t.matching.as_secs_f64();
            row.mean_allowed_s += t.allowed_edges.as_secs_f64();
            row.mean_rank_s += t.rank.as_secs_f64();
            row.claimed += usize::from(v.kind == VerdictKind::ClaimedHamiltonian);
        }
        let r = repeats as f64;
        for x in [
            &mut row.mean_arcs,
            &mut row.mean_total_s,
            &mut row.mean_zmap_s,
            &mut row.mean_matching_s,
            &mut row.mean_allowed_s,
            &mut row.mean_rank_s,
        ] {
            *x /= r;
        }
        rows.push(row);
    }
    let slope = loglog_slope(
        &rows
            .iter()
            .map(|r| (r.n as f64, r.mean_total_s.max(1e-9)))
            .collect::<Vec<_>>(),
    );
    Ok(BenchTable { p, rows, slope })
}
