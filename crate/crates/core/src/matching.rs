//! Bipartite matching: Hopcroft–Karp, Hall violators, the set of edges lying
//! in some perfect matching, and perfect-matching enumeration.
//!
//! Every routine scans X in index order and each adjacency list in edge-index
//! order, so results are deterministic given the edge order.

use std::collections::{HashSet, VecDeque};
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scc::tarjan_scc;

pub const DEFAULT_ENUMERATION_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("edge {index} = ({x}, {y}) out of range for sides {x_size} x {y_size}")]
    EdgeOutOfRange {
        index: usize,
        x: usize,
        y: usize,
        x_size: usize,
        y_size: usize,
    },
    #[error("duplicate edge ({x}, {y}) at index {index}")]
    DuplicateEdge { index: usize, x: usize, y: usize },
    #[error("graph is not balanced: |X| = {x_size}, |Y| = {y_size}")]
    NotBalanced { x_size: usize, y_size: usize },
}

/// A bipartite graph `G(X, Y; E)` with an ordered edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    x_size: usize,
    y_size: usize,
    edges: Vec<(usize, usize)>,
    /// `adj[x]` = `(y, edge index)` in edge-index order.
    adj: Vec<Vec<(usize, usize)>>,
}

impl BipartiteGraph {
    pub fn new(
        x_size: usize,
        y_size: usize,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self, MatchingError> {
        let mut seen = HashSet::with_capacity(edges.len());
        for (index, &(x, y)) in edges.iter().enumerate() {
            if x >= x_size || y >= y_size {
                return Err(MatchingError::EdgeOutOfRange {
                    index,
                    x,
                    y,
                    x_size,
                    y_size,
                });
            }
            if !seen.insert((x, y)) {
                return Err(MatchingError::DuplicateEdge { index, x, y });
            }
        }
        Ok(Self::from_valid(x_size, y_size, edges))
    }

    pub(crate) fn from_valid(x_size: usize, y_size: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); x_size];
        for (e, &(x, y)) in edges.iter().enumerate() {
            adj[x].push((y, e));
        }
        BipartiteGraph {
            x_size,
            y_size,
            edges,
            adj,
        }
    }

    /// Complete bipartite graph `K(a, b)`, edges row-major.
    pub fn complete(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|x| (0..b).map(move |y| (x, y))).collect();
        Self::from_valid(a, b, edges)
    }

    pub fn x_size(&self) -> usize {
        self.x_size
    }

    pub fn y_size(&self) -> usize {
        self.y_size
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn is_balanced(&self) -> bool {
        self.x_size == self.y_size
    }

    /// `(y, edge index)` pairs incident to `x`.
    pub fn neighbors(&self, x: usize) -> &[(usize, usize)] {
        &self.adj[x]
    }

    /// `N(S)`, sorted.
    pub fn neighborhood(&self, s: &[usize]) -> Vec<usize> {
        let mut ys: Vec<usize> = s
            .iter()
            .flat_map(|&x| self.adj[x].iter().map(|p| p.0))
            .collect();
        ys.sort_unstable();
        ys.dedup();
        ys
    }
}

/// A set of pairwise disjoint edges of some [`BipartiteGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    x_size: usize,
    y_size: usize,
    /// Edge indices, sorted.
    edges: Vec<usize>,
    mate_x: Vec<Option<usize>>,
    mate_y: Vec<Option<usize>>,
}

impl Matching {
    fn from_mates(
        g: &BipartiteGraph,
        mate_x: Vec<Option<usize>>,
        mate_y: Vec<Option<usize>>,
    ) -> Self {
        let mut edges: Vec<usize> = mate_x.iter().flatten().copied().collect();
        edges.sort_unstable();
        Matching {
            x_size: g.x_size,
            y_size: g.y_size,
            edges,
            mate_x,
            mate_y,
        }
    }

    /// Builds a matching from edge indices, or `None` if two share an endpoint.
    pub fn from_edges(g: &BipartiteGraph, edges: &[usize]) -> Option<Self> {
        let mut mate_x = vec![None; g.x_size];
        let mut mate_y = vec![None; g.y_size];
        for &e in edges {
            let (x, y) = *g.edges.get(e)?;
            if mate_x[x].is_some() || mate_y[y].is_some() {
                return None;
            }
            mate_x[x] = Some(e);
            mate_y[y] = Some(e);
        }
        Some(Self::from_mates(g, mate_x, mate_y))
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_perfect(&self) -> bool {
        self.x_size == self.y_size && self.edges.len() == self.x_size
    }

    /// Edge indices in increasing order.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// Matched edge at `x`, if any.
    pub fn edge_at_x(&self, x: usize) -> Option<usize> {
        self.mate_x[x]
    }

    /// Matched edge at `y`, if any.
    pub fn edge_at_y(&self, y: usize) -> Option<usize> {
        self.mate_y[y]
    }
}

/// Maximum-cardinality matching by Hopcroft–Karp.
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    const INF: usize = usize::MAX;
    let nx = g.x_size;
    let mut mate_x: Vec<Option<usize>> = vec![None; nx];
    let mut mate_y: Vec<Option<usize>> = vec![None; g.y_size];
    let mut dist = vec![INF; nx];
    let mut queue = VecDeque::new();
    let mut it = vec![0usize; nx];
    let mut stack: Vec<usize> = Vec::new();
    let mut via: Vec<usize> = Vec::new();

    loop {
        // BFS layering from free X vertices; `shortest` is the layer at which
        // a free Y vertex is first seen.
        queue.clear();
        for x in 0..nx {
            if mate_x[x].is_none() {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = INF;
            }
        }
        let mut shortest = INF;
        while let Some(x) = queue.pop_front() {
            if dist[x] >= shortest {
                continue;
            }
            for &(y, _) in &g.adj[x] {
                match mate_y[y] {
                    None => shortest = shortest.min(dist[x]),
                    Some(e) => {
                        let x2 = g.edges[e].0;
                        if dist[x2] == INF {
                            dist[x2] = dist[x] + 1;
                            queue.push_back(x2);
                        }
                    }
                }
            }
        }
        if shortest == INF {
            break;
        }

        // Vertex-disjoint shortest augmenting paths by layered DFS.
        it.iter_mut().for_each(|p| *p = 0);
        for x0 in 0..nx {
            if mate_x[x0].is_some() || dist[x0] != 0 {
                continue;
            }
            stack.clear();
            via.clear();
            stack.push(x0);
            while let Some(&x) = stack.last() {
                let Some(&(y, e)) = g.adj[x].get(it[x]) else {
                    dist[x] = INF;
                    stack.pop();
                    via.pop();
                    continue;
                };
                it[x] += 1;
                match mate_y[y] {
                    None if dist[x] == shortest => {
                        via.push(e);
                        for &f in &via {
                            let (fx, fy) = g.edges[f];
                            mate_x[fx] = Some(f);
                            mate_y[fy] = Some(f);
                        }
                        // spent vertices drop out of this phase
                        for &sx in &stack {
                            dist[sx] = INF;
                        }
                        break;
                    }
                    None => {}
                    Some(m) => {
                        let x2 = g.edges[m].0;
                        if dist[x] != INF && dist[x2] == dist[x] + 1 {
                            via.push(e);
                            stack.push(x2);
                        }
                    }
                }
            }
        }
    }
    Matching::from_mates(g, mate_x, mate_y)
}

/// Alternating-reachability closure from the unmatched X vertices of `m`.
fn alternating_reach(g: &BipartiteGraph, m: &Matching) -> Vec<usize> {
    let mut seen = vec![false; g.x_size];
    let mut queue: VecDeque<usize> = (0..g.x_size).filter(|&x| m.mate_x[x].is_none()).collect();
    for &x in &queue {
        seen[x] = true;
    }
    while let Some(x) = queue.pop_front() {
        for &(y, _) in &g.adj[x] {
            if let Some(e) = m.mate_y[y] {
                let x2 = g.edges[e].0;
                if !seen[x2] {
                    seen[x2] = true;
                    queue.push_back(x2);
                }
            }
        }
    }
    (0..g.x_size).filter(|&x| seen[x]).collect()
}

/// `None` when some matching saturates X; otherwise `S ⊆ X` (sorted) with
/// `|N(S)| < |S|`.
///
/// `S` is everything alternating-reachable from the free X vertices of a
/// maximum matching. Each vertex of `N(S)` is matched back into `S`, so
/// `|N(S)| = |S| - #free`.
pub fn hall_violator(g: &BipartiteGraph) -> Option<Vec<usize>> {
    let m = max_matching(g);
    hall_violator_from(g, &m)
}

/// Same as [`hall_violator`] but reuses a maximum matching.
pub fn hall_violator_from(g: &BipartiteGraph, maximum: &Matching) -> Option<Vec<usize>> {
    if maximum.len() == g.x_size {
        return None;
    }
    Some(alternating_reach(g, maximum))
}

/// `C(G)`: the edges contained in at least one perfect matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AllowedEdgeSet {
    /// Edge indices, sorted.
    pub members: Vec<usize>,
    /// Set when the graph has no perfect matching (and `members` is empty).
    pub is_empty_because_no_pm: bool,
}

impl AllowedEdgeSet {
    pub fn contains(&self, e: usize) -> bool {
        self.members.binary_search(&e).is_ok()
    }
}

pub fn allowed_edges(g: &BipartiteGraph) -> Result<AllowedEdgeSet, MatchingError> {
    if !g.is_balanced() {
        return Err(MatchingError::NotBalanced {
            x_size: g.x_size,
            y_size: g.y_size,
        });
    }
    let m = max_matching(g);
    Ok(allowed_edges_from(g, &m))
}

/// Allowed edges given a maximum matching of a balanced graph.
///
/// With a perfect matching `M`, orient unmatched edges `x -> y` and matched
/// edges `y -> x`. An unmatched edge lies in some perfect matching iff it
/// closes an `M`-alternating cycle, i.e. iff both endpoints share a strongly
/// connected component.
pub fn allowed_edges_from(g: &BipartiteGraph, maximum: &Matching) -> AllowedEdgeSet {
    debug_assert!(g.is_balanced());
    if !maximum.is_perfect() {
        return AllowedEdgeSet {
            members: Vec::new(),
            is_empty_because_no_pm: true,
        };
    }
    let n = g.x_size;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    for (e, &(x, y)) in g.edges.iter().enumerate() {
        if maximum.mate_x[x] == Some(e) {
            adj[n + y].push(x);
        } else {
            adj[x].push(n + y);
        }
    }
    let comp = tarjan_scc(&adj);
    let members = g
        .edges
        .iter()
        .enumerate()
        .filter(|&(e, &(x, y))| maximum.mate_x[x] == Some(e) || comp[x] == comp[n + y])
        .map(|(e, _)| e)
        .collect();
    AllowedEdgeSet {
        members,
        is_empty_because_no_pm: false,
    }
}

/// Visits every perfect matching (as edge indices listed by X vertex) in
/// canonical order: X in index order, each vertex's edges in index order.
/// Returns the number of matchings visited.
///
/// Branches are restricted to allowed edges, which removes only dead
/// branches and leaves the visiting order unchanged.
pub fn for_each_perfect_matching<F>(g: &BipartiteGraph, mut visit: F) -> usize
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if !g.is_balanced() {
        return 0;
    }
    let n = g.x_size;
    if n == 0 {
        let _ = visit(&[]);
        return 1;
    }
    let allowed = allowed_edges_from(g, &max_matching(g));
    if allowed.is_empty_because_no_pm {
        return 0;
    }
    let cand: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|x| {
            g.adj[x]
                .iter()
                .copied()
                .filter(|&(_, e)| allowed.contains(e))
                .collect()
        })
        .collect();

    let mut used_y = vec![false; n];
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut pos = vec![0usize; n];
    let mut visited = 0usize;
    let mut x = 0usize;
    // Explicit-stack backtracking: `x` is the depth, `pos[x]` the next
    // candidate to try at that depth.
    loop {
        if x == n {
            visited += 1;
            if visit(&chosen).is_break() {
                return visited;
            }
            x -= 1;
            let e = chosen.pop().expect("nonempty at full depth");
            used_y[g.edges[e].1] = false;
            continue;
        }
        let mut advanced = false;
        while pos[x] < cand[x].len() {
            let (y, e) = cand[x][pos[x]];
            pos[x] += 1;
            if !used_y[y] {
                used_y[y] = true;
                chosen.push(e);
                x += 1;
                if x < n {
                    pos[x] = 0;
                }
                advanced = true;
                break;
            }
        }
        if advanced {
            continue;
        }
        if x == 0 {
            return visited;
        }
        x -= 1;
        let e = chosen.pop().expect("nonempty above depth 0");
        used_y[g.edges[e].1] = false;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectMatchings {
    pub matchings: Vec<Matching>,
    /// True iff more than `limit` perfect matchings exist.
    pub truncated: bool,
}

/// Collects up to `limit` perfect matchings in canonical order.
pub fn enumerate_perfect_matchings(g: &BipartiteGraph, limit: usize) -> PerfectMatchings {
    let mut matchings = Vec::new();
    let mut truncated = false;
    for_each_perfect_matching(g, |edges| {
        if matchings.len() == limit {
            truncated = true;
            return ControlFlow::Break(());
        }
        matchings.push(Matching::from_edges(g, edges).expect("enumerated edges are disjoint"));
        ControlFlow::Continue(())
    });
    PerfectMatchings {
        matchings,
        truncated,
    }
}
