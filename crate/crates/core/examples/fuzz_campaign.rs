// Runs a small Gnp fuzz campaign and revalidates every archived
// discrepancy.

use hamaudit::harness::{fuzz_campaign, CampaignConfig, Family, Limits};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = CampaignConfig {
        family: Family::Gnp { p: 0.35 },
        n_min: 5,
        n_max: 8,
        trials: 500,
        master_seed: 7,
        limits: Limits::default(),
    };
    let report = fuzz_campaign(&config)?;
    let t = &report.totals;
    println!(
        "{} trials: {} true positive, {} true negative ({} no matching, {} rank deficient), {} false positive",
        t.trials, t.true_pos, t.true_neg, t.no_pm, t.rank_deficient, t.claimed_pos_oracle_neg
    );
    for a in &report.discrepancies {
        println!(
            "trial {} (seed {:#x}): {} arcs, shrunk to {}; still discrepant: {}",
            a.trial,
            a.seed,
            a.instance.m(),
            a.minimized.m(),
            a.revalidate(&config.limits)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
