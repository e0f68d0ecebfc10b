//! Decision procedures over the Z-mapping.
//!
//! [`decide_paper`] runs the matching-cover pipeline: Z-map, perfect
//! matching, allowed-edge subgraph `C(G)`, then the rank of its preimage.
//! Its positive answer is reported as [`VerdictKind::ClaimedHamiltonian`]
//! because a full-rank `C(G)` is not known to imply a Hamiltonian cycle.
//!
//! [`decide_exact_via_matchings`] is the exact characterisation: the digraph
//! is Hamiltonian iff some perfect matching of the Z-map pulls back to a
//! connected arc set (rank `n - 1`).

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::graph::{rank_of_arcset, ArcSet, Digraph};
use crate::matching::{allowed_edges_from, for_each_perfect_matching, max_matching};
use crate::scc::is_strongly_connected;
use crate::zmap::{build_zmap, preimage, EdgeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictKind {
    NoPerfectMatching,
    RankDeficient,
    ClaimedHamiltonian,
    Hamiltonian,
    NotHamiltonian,
    Unknown,
}

impl VerdictKind {
    /// Verdicts asserting that no Hamiltonian cycle exists.
    pub fn is_negative(self) -> bool {
        matches!(
            self,
            VerdictKind::NoPerfectMatching
                | VerdictKind::RankDeficient
                | VerdictKind::NotHamiltonian
        )
    }

    pub fn is_positive(self) -> bool {
        matches!(
            self,
            VerdictKind::ClaimedHamiltonian | VerdictKind::Hamiltonian
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub rank: Option<usize>,
    pub components: Option<usize>,
    /// Arc indices of a Hamiltonian cycle; present iff `kind == Hamiltonian`.
    pub witness: Option<ArcSet>,
    pub matchings_examined: Option<u64>,
}

impl Verdict {
    fn bare(kind: VerdictKind) -> Self {
        Verdict {
            kind,
            rank: None,
            components: None,
            witness: None,
            matchings_examined: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecideOptions {
    /// Answer `NotHamiltonian` immediately when the digraph is not strongly
    /// connected. Off by default so the pipeline runs unmodified.
    pub strong_connectivity_prefilter: bool,
}

/// Wall-clock time per pipeline stage.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageTimings {
    pub zmap: Duration,
    pub matching: Duration,
    pub allowed_edges: Duration,
    pub rank: Duration,
}

impl StageTimings {
    pub fn total(&self) -> Duration {
        self.zmap + self.matching + self.allowed_edges + self.rank
    }
}

pub fn decide_paper(d: &Digraph) -> Verdict {
    decide_paper_timed(d, DecideOptions::default()).0
}

pub fn decide_paper_with(d: &Digraph, opts: DecideOptions) -> Verdict {
    decide_paper_timed(d, opts).0
}

pub fn decide_paper_timed(d: &Digraph, opts: DecideOptions) -> (Verdict, StageTimings) {
    let mut t = StageTimings::default();
    let n = d.n();
    if n < 2 {
        return (Verdict::bare(VerdictKind::NotHamiltonian), t);
    }
    if opts.strong_connectivity_prefilter && !is_strongly_connected(&d.out_neighbors()) {
        return (Verdict::bare(VerdictKind::NotHamiltonian), t);
    }

    let start = Instant::now();
    let z = build_zmap(d);
    t.zmap = start.elapsed();

    let start = Instant::now();
    let m = max_matching(z.graph());
    t.matching = start.elapsed();
    if !m.is_perfect() {
        return (Verdict::bare(VerdictKind::NoPerfectMatching), t);
    }

    let start = Instant::now();
    let allowed = allowed_edges_from(z.graph(), &m);
    t.allowed_edges = start.elapsed();

    let start = Instant::now();
    let cover = EdgeSet::from_indices(&z, allowed.members).expect("allowed edges are edges of z");
    let (rank, components) = rank_of_arcset(d, &preimage(&z, &cover));
    t.rank = start.elapsed();

    let kind = if rank == n - 1 {
        VerdictKind::ClaimedHamiltonian
    } else {
        VerdictKind::RankDeficient
    };
    let verdict = Verdict {
        kind,
        rank: Some(rank),
        components: Some(components),
        witness: None,
        matchings_examined: None,
    };
    (verdict, t)
}

/// Enumerates perfect matchings of the Z-map (at most `limit`) looking for
/// one whose preimage is connected.
pub fn decide_exact_via_matchings(d: &Digraph, limit: usize) -> Verdict {
    let n = d.n();
    if n < 2 {
        return Verdict::bare(VerdictKind::NotHamiltonian);
    }
    let z = build_zmap(d);
    let mut examined: u64 = 0;
    let mut witness: Option<ArcSet> = None;
    let mut truncated = false;
    for_each_perfect_matching(z.graph(), |edges| {
        if examined as usize == limit {
            truncated = true;
            return ControlFlow::Break(());
        }
        examined += 1;
        let cover = EdgeSet::from_indices(&z, edges.iter().copied()).expect("matching edges");
        let arcs = preimage(&z, &cover);
        if rank_of_arcset(d, &arcs).0 == n - 1 {
            witness = Some(arcs);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });

    let mut v = Verdict {
        kind: VerdictKind::NotHamiltonian,
        rank: None,
        components: None,
        witness: None,
        matchings_examined: Some(examined),
    };
    if let Some(w) = witness {
        v.kind = VerdictKind::Hamiltonian;
        v.rank = Some(n - 1);
        v.components = Some(1);
        v.witness = Some(w);
    } else if truncated {
        v.kind = VerdictKind::Unknown;
    }
    v
}
