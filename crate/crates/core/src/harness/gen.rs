use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::graph::{parse_graph, Digraph};

/// Instance families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum Family {
    /// Each ordered pair `u != v` independently with probability `p`.
    Gnp {
        p: f64,
    },
    /// Two sampled out-neighbours per vertex, in-degree capped at two.
    DegreeBoundTwo,
    /// A random directed `n`-cycle.
    SingleCycle,
    /// Vertex-disjoint directed cycles of the given lengths, randomly placed.
    DisjointCycles {
        lengths: Vec<usize>,
    },
    /// The fixed 6-vertex, 12-arc prism.
    Prism,
    FromFile {
        path: PathBuf,
    },
}

impl Family {
    /// Vertex count forced by the family, if any.
    pub fn fixed_n(&self) -> Option<usize> {
        match self {
            Family::DisjointCycles { lengths } => Some(lengths.iter().sum()),
            Family::Prism => Some(PRISM_N),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    #[serde(flatten)]
    pub family: Family,
    pub n: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, n: usize, seed: u64) -> Self {
        GenSpec { family, n, seed }
    }

    pub fn prism() -> Self {
        GenSpec::new(Family::Prism, PRISM_N, 0)
    }
}

pub const PRISM_N: usize = 6;

/// Two directed triangles `0→1→2→0` and `3→4→5→3` joined by the symmetric
/// rungs `0↔3`, `1↔4`, `2↔5`.
///
/// Its only cycle covers are the two triangles and the three rung 2-cycles.
/// Together they use every arc, so the allowed-edge subgraph is connected,
/// yet the digraph has no Hamiltonian cycle.
pub fn prism() -> Digraph {
    Digraph::new(
        PRISM_N,
        vec![
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (3, 0),
            (1, 4),
            (4, 1),
            (2, 5),
            (5, 2),
        ],
    )
    .expect("prism is simple")
}

/// Deterministic: the same spec always yields the same digraph.
pub fn generate(spec: &GenSpec) -> Result<Digraph, HarnessError> {
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match &spec.family {
        Family::Gnp { p } => {
            if !(0.0..=1.0).contains(p) {
                return Err(HarnessError::InvalidProbability(*p));
            }
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(*p) {
                        arcs.push((u, v));
                    }
                }
            }
            Ok(Digraph::new(n, arcs)?)
        }
        Family::DegreeBoundTwo => {
            let mut indeg = vec![0u8; n];
            let mut arcs = Vec::with_capacity(2 * n);
            for u in 0..n {
                let open: Vec<usize> = (0..n).filter(|&v| v != u && indeg[v] < 2).collect();
                let mut picked: Vec<usize> = open.choose_multiple(&mut rng, 2).copied().collect();
                picked.sort_unstable();
                for v in picked {
                    indeg[v] += 1;
                    arcs.push((u, v));
                }
            }
            Ok(Digraph::new(n, arcs)?)
        }
        Family::SingleCycle => {
            if n < 2 {
                return Err(HarnessError::InfeasibleSpec(format!(
                    "a directed cycle needs n >= 2, got {n}"
                )));
            }
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            Ok(Digraph::cycle(n, &order)?)
        }
        Family::DisjointCycles { lengths } => {
            let total: usize = lengths.iter().sum();
            if lengths.is_empty() || lengths.iter().any(|&l| l < 2) || total != n {
                return Err(HarnessError::InfeasibleSpec(format!(
                    "cycle lengths {lengths:?} must each be >= 2 and sum to n = {n}"
                )));
            }
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let mut arcs = Vec::with_capacity(n);
            let mut start = 0;
            for &len in lengths {
                let chunk = &order[start..start + len];
                for i in 0..len {
                    arcs.push((chunk[i], chunk[(i + 1) % len]));
                }
                start += len;
            }
            Ok(Digraph::new(n, arcs)?)
        }
        Family::Prism => {
            if n != PRISM_N {
                return Err(HarnessError::InfeasibleSpec(format!(
                    "the prism has {PRISM_N} vertices, got n = {n}"
                )));
            }
            Ok(prism())
        }
        Family::FromFile { path } => {
            let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(parse_graph(&text)?)
        }
    }
}
