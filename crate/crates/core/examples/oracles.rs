// Exact Hamiltonicity oracles, including the undirected conversion.

use hamaudit::{backtrack_hc, held_karp, undirected_to_digraph, Digraph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Petersen graph: cubic, not Hamiltonian
    let outer: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let spokes: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 5)).collect();
    let inner: Vec<(usize, usize)> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
    let edges: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
    let petersen = undirected_to_digraph(&edges, 10)?;
    println!("petersen: {:?}", held_karp(&petersen)?);

    let k5 = Digraph::complete(5);
    let r = held_karp(&k5)?;
    println!(
        "complete digraph on 5: order {:?}, arcs {:?}",
        r.witness,
        r.witness_arcs(&k5)
    );

    // beyond the Held-Karp limit the backtracking search takes over
    let order: Vec<usize> = (0..60).rev().collect();
    let big = Digraph::cycle(60, &order)?;
    let r = backtrack_hc(&big, 1_000_000)?;
    println!(
        "60-cycle: hamiltonian = {}, method = {:?}",
        r.hamiltonian, r.method
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
