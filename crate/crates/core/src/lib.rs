//! Hamiltonian-cycle decision through the Z-mapping bipartite graph.
//!
//! A digraph `D` maps to a balanced bipartite graph `Z(D)` whose perfect
//! matchings are exactly the cycle covers of `D`. This crate implements:
//!
//! - [`graph`]: simple digraphs, the signed incidence matrix, rank by
//!   counting weak components, and cycle classification of arc sets;
//! - [`zmap`]: the Z-mapping and its inverse on edge sets;
//! - [`matching`]: Hopcroft–Karp, Hall violators, the allowed-edge subgraph
//!   `C(G)` and perfect-matching enumeration;
//! - [`decider`]: the matching-cover rank pipeline and the exact
//!   enumeration-based decision;
//! - [`oracle`]: Held–Karp and budgeted backtracking ground truth;
//! - [`harness`]: generators, decider-vs-oracle comparison, fuzz campaigns,
//!   counterexample shrinking and a scaling benchmark.
//!
//! The pipeline's negative answers are always correct. Its positive answer
//! is labelled [`decider::VerdictKind::ClaimedHamiltonian`]; the harness
//! checks it against the oracle. The built-in prism digraph
//! ([`harness::prism`]) is a standing counterexample.

pub mod decider;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod oracle;
pub mod scc;
pub mod zmap;

pub use decider::{
    decide_exact_via_matchings, decide_paper, decide_paper_timed, decide_paper_with, DecideOptions,
    StageTimings, Verdict, VerdictKind,
};
pub use graph::{
    bowtie, classify_arcset, incidence_matrix, parse_arclist, parse_dimacs, parse_graph,
    rank_of_arcset, ArcSet, CycleClass, Digraph, GraphError, IncidenceMatrix,
};
pub use matching::{
    allowed_edges, enumerate_perfect_matchings, hall_violator, max_matching, AllowedEdgeSet,
    BipartiteGraph, Matching, MatchingError, PerfectMatchings,
};
pub use oracle::{
    backtrack_hc, held_karp, undirected_to_digraph, OracleError, OracleMethod, OracleResult,
};
pub use zmap::{build_zmap, preimage, push_forward, BipartiteZMap, EdgeSet};
