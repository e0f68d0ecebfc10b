// Audits the prism: the pipeline claims a Hamiltonian cycle, the exact
// oracle disagrees, and shrinking confirms nothing smaller is needed.

use hamaudit::harness::{compare_one, prism, shrink, Limits};
use hamaudit::{build_zmap, classify_arcset, enumerate_perfect_matchings, preimage, EdgeSet};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d = prism();
    let limits = Limits::default();
    print!("{}", d.to_arclist());

    let z = build_zmap(&d);
    let pms = enumerate_perfect_matchings(z.graph(), 100);
    for pm in &pms.matchings {
        let e = EdgeSet::from_indices(&z, pm.edges().iter().copied())?;
        let arcs = preimage(&z, &e);
        println!(
            "cycle cover {:?}: {:?}",
            arcs.as_slice(),
            classify_arcset(&d, &arcs)
        );
    }

    let record = compare_one(&d, &limits)?;
    println!("{}", serde_json::to_string(&record)?);
    if record.discrepancy == Some(true) {
        let r = shrink(&d, &limits)?;
        println!(
            "shrunk to {} vertices, {} arcs ({} discrepancy checks)",
            r.minimized.n(),
            r.minimized.m(),
            r.checks
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
