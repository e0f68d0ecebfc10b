//! The Z-mapping of a digraph: a balanced bipartite graph with an out-copy
//! `x_v` and an in-copy `y_v` of every vertex, where arc `j = (u, v)` becomes
//! edge `j = (x_u, y_v)`.
//!
//! Its incidence matrix is the plus part of the digraph's incidence matrix
//! stacked over the negated minus part. The arc/edge bijection is the identity
//! on indices, so the inverse map is total and order-preserving.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{ArcSet, Digraph};
use crate::matching::BipartiteGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("edge index {index} out of range for a Z-map with {m} edges")]
pub struct EdgeOutOfRange {
    pub index: usize,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteZMap {
    source: Digraph,
    graph: BipartiteGraph,
}

impl BipartiteZMap {
    pub fn source(&self) -> &Digraph {
        &self.source
    }

    /// The bipartite graph with `|X| = |Y| = n` and `|E| = m`.
    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn x_size(&self) -> usize {
        self.graph.x_size()
    }

    pub fn y_size(&self) -> usize {
        self.graph.y_size()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        self.graph.edges()
    }

    pub fn into_graph(self) -> BipartiteGraph {
        self.graph
    }
}

pub fn build_zmap(d: &Digraph) -> BipartiteZMap {
    // a simple digraph has no repeated (tail, head), so no repeated edge
    let graph = BipartiteGraph::from_valid(d.n(), d.n(), d.arcs().to_vec());
    BipartiteZMap {
        source: d.clone(),
        graph,
    }
}

/// A set of edge indices of a Z-map, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<usize>);

impl EdgeSet {
    pub fn empty() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn all(z: &BipartiteZMap) -> Self {
        EdgeSet((0..z.edges().len()).collect())
    }

    pub fn from_indices(
        z: &BipartiteZMap,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Self, EdgeOutOfRange> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        let m = z.edges().len();
        if let Some(&index) = v.iter().find(|&&e| e >= m) {
            return Err(EdgeOutOfRange { index, m });
        }
        Ok(EdgeSet(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// `F⁻¹`: the arcs whose images are the edges in `e`.
pub fn preimage(z: &BipartiteZMap, e: &EdgeSet) -> ArcSet {
    debug_assert!(e.iter().all(|j| j < z.source.m()));
    ArcSet::from_sorted_unchecked(e.0.clone())
}

/// `F`: the edges that are images of the arcs in `s`.
pub fn push_forward(z: &BipartiteZMap, s: &ArcSet) -> EdgeSet {
    debug_assert!(s.iter().all(|j| j < z.source.m()));
    EdgeSet(s.as_slice().to_vec())
}
