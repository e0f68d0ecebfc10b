// Bipartite matching tools on their own: Hopcroft-Karp, Hall violators,
// allowed edges and perfect-matching enumeration.

use hamaudit::{
    allowed_edges, enumerate_perfect_matchings, hall_violator, max_matching, BipartiteGraph,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // x0 and x1 both only reach y0
    let starved = BipartiteGraph::new(3, 3, vec![(0, 0), (1, 0), (2, 1), (2, 2)])?;
    println!("maximum matching size: {}", max_matching(&starved).len());
    if let Some(s) = hall_violator(&starved) {
        println!(
            "hall violator {:?} with neighbourhood {:?}",
            s,
            starved.neighborhood(&s)
        );
    }

    // y2 has only x2 and x0 as neighbours, but x2 has nowhere else to go,
    // so no perfect matching uses (x0, y2)
    let g = BipartiteGraph::new(3, 3, vec![(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (0, 2)])?;
    let allowed = allowed_edges(&g)?;
    println!(
        "allowed edges: {:?} of {}",
        allowed.members,
        g.edges().len()
    );
    let all = enumerate_perfect_matchings(&g, 10);
    for m in &all.matchings {
        println!("perfect matching: {:?}", m.edges());
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
