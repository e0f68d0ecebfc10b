// Walks one digraph through every stage of the matching-cover pipeline:
// incidence matrix, Z-map, perfect matching, allowed edges, preimage rank.

use hamaudit::{
    allowed_edges, build_zmap, decide_paper, incidence_matrix, max_matching, parse_arclist,
    preimage, rank_of_arcset, EdgeSet,
};

const INPUT: &str = "\
# a 4-cycle with one chord; the chord fits in no cycle cover
4 5
1 2
2 3
3 4
4 1
1 3
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_arclist(INPUT)?;
    println!("digraph: n = {}, m = {}", d.n(), d.m());

    let c = incidence_matrix(&d);
    for row in c.to_dense() {
        println!("  {row:?}");
    }

    let z = build_zmap(&d);
    println!("z-map edges (x_tail, y_head): {:?}", z.edges());

    let m = max_matching(z.graph());
    println!(
        "maximum matching: {:?} (perfect: {})",
        m.edges(),
        m.is_perfect()
    );

    let allowed = allowed_edges(z.graph())?;
    println!("allowed edges: {:?}", allowed.members);

    let cover = EdgeSet::from_indices(&z, allowed.members)?;
    let arcs = preimage(&z, &cover);
    let (rank, k) = rank_of_arcset(&d, &arcs);
    println!(
        "preimage arcs {:?}: rank {rank}, {k} component(s)",
        arcs.as_slice()
    );

    let v = decide_paper(&d);
    println!("verdict: {}", serde_json::to_string(&v)?);
    assert_eq!(v.rank, Some(rank));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
