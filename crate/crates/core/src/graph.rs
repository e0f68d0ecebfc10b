//! Simple digraphs, their signed incidence matrix, and rank by component
//! counting.
//!
//! Vertices are `0..n` internally. The on-disk arc-list format is 1-indexed;
//! conversion happens only in [`parse_arclist`], [`parse_dimacs`] and
//! [`Digraph::to_arclist`].

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while building or parsing a [`Digraph`].
///
/// Line numbers are 1-based and refer to the input text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: malformed arc line: {reason}")]
    MalformedArc { line: usize, reason: String },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate arc {tail} -> {head}")]
    DuplicateArc {
        line: usize,
        tail: usize,
        head: usize,
    },
    #[error("header declares {declared} arcs but {found} were read")]
    ArcCountMismatch { declared: usize, found: usize },
    #[error("arc index {index} out of range for a digraph with {m} arcs")]
    ArcOutOfRange { index: usize, m: usize },
}

/// A finite simple digraph: `n` vertices and an ordered arc list.
///
/// Arc `j` is `arcs[j]`; its index never changes after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDigraph", into = "RawDigraph")]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawDigraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<RawDigraph> for Digraph {
    type Error = GraphError;

    fn try_from(raw: RawDigraph) -> Result<Self, Self::Error> {
        Digraph::new(raw.n, raw.arcs)
    }
}

impl From<Digraph> for RawDigraph {
    fn from(d: Digraph) -> Self {
        RawDigraph {
            n: d.n,
            arcs: d.arcs,
        }
    }
}

impl Digraph {
    /// Builds a digraph, rejecting self-loops, duplicates and out-of-range
    /// endpoints. Reported "line" numbers are 1-based arc positions.
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(arcs.len());
        for (j, &(u, v)) in arcs.iter().enumerate() {
            let line = j + 1;
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { line, vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { line, vertex: u });
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateArc {
                    line,
                    tail: u,
                    head: v,
                });
            }
        }
        Ok(Digraph { n, arcs })
    }

    /// Digraph with `n` vertices and no arcs.
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            arcs: Vec::new(),
        }
    }

    /// Complete digraph: every ordered pair `u != v`, row-major.
    pub fn complete(n: usize) -> Self {
        let arcs = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        Digraph { n, arcs }
    }

    /// Directed cycle `order[0] -> order[1] -> ... -> order[0]` on `n` vertices.
    pub fn cycle(n: usize, order: &[usize]) -> Result<Self, GraphError> {
        let k = order.len();
        let arcs = (0..k).map(|i| (order[i], order[(i + 1) % k])).collect();
        Digraph::new(n, arcs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc(&self, j: usize) -> (usize, usize) {
        self.arcs[j]
    }

    pub fn tail(&self, j: usize) -> usize {
        self.arcs[j].0
    }

    pub fn head(&self, j: usize) -> usize {
        self.arcs[j].1
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// Out-degree `d⁺(v)`.
    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.0 == v).count()
    }

    /// In-degree `d⁻(v)`.
    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.1 == v).count()
    }

    /// Out-neighbour lists `N⁺(v)`, each in arc-index order.
    pub fn out_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            adj[u].push(v);
        }
        adj
    }

    /// In-neighbour lists `N⁻(v)`, each in arc-index order.
    pub fn in_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            adj[v].push(u);
        }
        adj
    }

    /// Sub-digraph on the same vertex set keeping only the arcs in `s`,
    /// in index order.
    pub fn restrict(&self, s: &ArcSet) -> Digraph {
        Digraph {
            n: self.n,
            arcs: s.iter().map(|j| self.arcs[j]).collect(),
        }
    }

    /// Same vertex set with arc `j` removed; later arcs shift down by one.
    pub fn without_arc(&self, j: usize) -> Digraph {
        let mut arcs = self.arcs.clone();
        arcs.remove(j);
        Digraph { n: self.n, arcs }
    }

    /// Deletes vertex `v` and its arcs, relabelling `w > v` to `w - 1`.
    pub fn without_vertex(&self, v: usize) -> Digraph {
        let relabel = |w: usize| if w > v { w - 1 } else { w };
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        Digraph {
            n: self.n.saturating_sub(1),
            arcs,
        }
    }

    /// Emits the 1-indexed arc-list format: header `n m`, one `u v` line per
    /// arc, LF endings, single spaces.
    pub fn to_arclist(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.arcs.len());
        for &(u, v) in &self.arcs {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs=[", self.n)?;
        for (i, (u, v)) in self.arcs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({u},{v})")?;
        }
        write!(f, "])")
    }
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_two(line: usize, s: &str) -> Result<(usize, usize), String> {
    let mut it = s.split_whitespace();
    let (a, b) = match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => (a, b),
        _ => return Err(format!("expected two integers on line {line}, got {s:?}")),
    };
    let a = a.parse::<usize>().map_err(|e| format!("{a:?}: {e}"))?;
    let b = b.parse::<usize>().map_err(|e| format!("{b:?}: {e}"))?;
    Ok((a, b))
}

struct ArcCollector {
    n: usize,
    arcs: Vec<(usize, usize)>,
    seen: HashSet<(usize, usize)>,
}

impl ArcCollector {
    fn new(n: usize) -> Self {
        ArcCollector {
            n,
            arcs: Vec::new(),
            seen: HashSet::new(),
        }
    }

    /// Takes 1-indexed endpoints.
    fn push(&mut self, line: usize, u1: usize, v1: usize) -> Result<(), GraphError> {
        for w in [u1, v1] {
            if w == 0 || w > self.n {
                return Err(GraphError::VertexOutOfRange {
                    line,
                    vertex: w,
                    n: self.n,
                });
            }
        }
        let (u, v) = (u1 - 1, v1 - 1);
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u1 });
        }
        if !self.seen.insert((u, v)) {
            return Err(GraphError::DuplicateArc {
                line,
                tail: u1,
                head: v1,
            });
        }
        self.arcs.push((u, v));
        Ok(())
    }

    fn finish(self, declared: usize) -> Result<Digraph, GraphError> {
        if self.arcs.len() != declared {
            return Err(GraphError::ArcCountMismatch {
                declared,
                found: self.arcs.len(),
            });
        }
        Ok(Digraph {
            n: self.n,
            arcs: self.arcs,
        })
    }
}

/// Parses the arc-list format: header `n m`, then `m` lines `u v`
/// (1-indexed), `#` lines ignored. Arc order equals line order.
pub fn parse_arclist(text: &str) -> Result<Digraph, GraphError> {
    let mut lines = significant_lines(text);
    let (hline, header) = lines.next().ok_or(GraphError::MalformedHeader {
        line: 1,
        reason: "empty input".into(),
    })?;
    let (n, m) = parse_two(hline, header).map_err(|reason| GraphError::MalformedHeader {
        line: hline,
        reason,
    })?;
    let mut acc = ArcCollector::new(n);
    for (line, l) in lines {
        let (u, v) =
            parse_two(line, l).map_err(|reason| GraphError::MalformedArc { line, reason })?;
        acc.push(line, u, v)?;
    }
    acc.finish(m)
}

/// Parses the DIMACS-like dialect: `c` comments, one `p <word> n m` line,
/// then `a u v` lines (1-indexed).
pub fn parse_dimacs(text: &str) -> Result<Digraph, GraphError> {
    let mut acc: Option<(ArcCollector, usize)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') || l.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if acc.is_some() {
                    return Err(GraphError::MalformedHeader {
                        line,
                        reason: "second problem line".into(),
                    });
                }
                let nums: Vec<usize> = toks[1..].iter().filter_map(|t| t.parse().ok()).collect();
                if nums.len() != 2 {
                    return Err(GraphError::MalformedHeader {
                        line,
                        reason: format!("expected `p <kind> n m`, got {l:?}"),
                    });
                }
                acc = Some((ArcCollector::new(nums[0]), nums[1]));
            }
            "a" | "e" => {
                let (collector, _) = acc.as_mut().ok_or(GraphError::MalformedHeader {
                    line,
                    reason: "arc before problem line".into(),
                })?;
                let (u, v) = parse_two(line, &toks[1..].join(" "))
                    .map_err(|reason| GraphError::MalformedArc { line, reason })?;
                collector.push(line, u, v)?;
            }
            other => {
                return Err(GraphError::MalformedArc {
                    line,
                    reason: format!("unknown line type {other:?}"),
                })
            }
        }
    }
    let (collector, m) = acc.ok_or(GraphError::MalformedHeader {
        line: 1,
        reason: "missing problem line".into(),
    })?;
    collector.finish(m)
}

/// Picks the dialect from the first significant line.
pub fn parse_graph(text: &str) -> Result<Digraph, GraphError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with('c'));
    match first {
        Some(l) if l.starts_with('p') => parse_dimacs(text),
        _ => parse_arclist(text),
    }
}

/// A set of arc indices of some digraph, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArcSet(Vec<usize>);

impl ArcSet {
    pub fn empty() -> Self {
        ArcSet(Vec::new())
    }

    pub fn all(d: &Digraph) -> Self {
        ArcSet((0..d.m()).collect())
    }

    pub fn from_indices(
        d: &Digraph,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Self, GraphError> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&bad) = v.iter().find(|&&j| j >= d.m()) {
            return Err(GraphError::ArcOutOfRange {
                index: bad,
                m: d.m(),
            });
        }
        Ok(ArcSet(v))
    }

    /// Caller guarantees sorted, deduplicated, in-range indices.
    pub(crate) fn from_sorted_unchecked(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        ArcSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.binary_search(&j).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// The `n x m` signed incidence matrix: `+1` at the tail row of each arc,
/// `-1` at its head row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), i8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn nonzeros(&self) -> usize {
        self.entries.len()
    }

    /// `C⁺`: the nonnegative entries, zero elsewhere.
    pub fn plus_part(&self) -> BTreeMap<(usize, usize), i8> {
        self.entries
            .iter()
            .filter(|(_, &v)| v > 0)
            .map(|(&k, &v)| (k, v))
            .collect()
    }

    /// `C⁻`: the nonpositive entries, zero elsewhere.
    pub fn minus_part(&self) -> BTreeMap<(usize, usize), i8> {
        self.entries
            .iter()
            .filter(|(_, &v)| v < 0)
            .map(|(&k, &v)| (k, v))
            .collect()
    }

    /// Dense row-major copy.
    pub fn to_dense(&self) -> Vec<Vec<i8>> {
        let mut out = vec![vec![0; self.cols]; self.rows];
        for (&(i, j), &v) in &self.entries {
            out[i][j] = v;
        }
        out
    }
}

pub fn incidence_matrix(d: &Digraph) -> IncidenceMatrix {
    let mut entries = BTreeMap::new();
    for (j, &(u, v)) in d.arcs().iter().enumerate() {
        entries.insert((u, j), 1);
        entries.insert((v, j), -1);
    }
    IncidenceMatrix {
        rows: d.n(),
        cols: d.m(),
        entries,
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.sets
    }
}

/// Rank of the incidence submatrix on the columns in `s`, together with the
/// number of weak components of `(V, s)`. Isolated vertices count as
/// components, so `rank = n - components`.
pub fn rank_of_arcset(d: &Digraph, s: &ArcSet) -> (usize, usize) {
    let mut dsu = DisjointSets::new(d.n());
    for j in s.iter() {
        let (u, v) = d.arc(j);
        dsu.union(u, v);
    }
    let k = dsu.count();
    (d.n() - k, k)
}

/// The forward relation: `Some(v)` iff arc `i` ends where arc `j` starts.
/// Always `None` for `i == j`.
pub fn bowtie(d: &Digraph, i: usize, j: usize) -> Option<usize> {
    if i == j {
        return None;
    }
    let (_, hi) = d.arc(i);
    let (tj, _) = d.arc(j);
    (hi == tj).then_some(hi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CycleClass {
    NotCycle,
    /// A disjoint union of at least two directed cycles.
    Cycle,
    SimpleCycle,
    HamiltonianCycle,
}

pub fn classify_arcset(d: &Digraph, s: &ArcSet) -> CycleClass {
    if s.is_empty() {
        return CycleClass::NotCycle;
    }
    let mut outd = vec![0usize; d.n()];
    let mut ind = vec![0usize; d.n()];
    for j in s.iter() {
        let (u, v) = d.arc(j);
        outd[u] += 1;
        ind[v] += 1;
    }
    let touched: Vec<usize> = (0..d.n()).filter(|&v| outd[v] + ind[v] > 0).collect();
    if touched.iter().any(|&v| outd[v] != 1 || ind[v] != 1) {
        return CycleClass::NotCycle;
    }
    // Every touched vertex has in = out = 1: a union of vertex-disjoint cycles,
    // one per weak component among the touched vertices.
    let (_, k) = rank_of_arcset(d, s);
    let cycles = k - (d.n() - touched.len());
    match cycles {
        1 if s.len() == d.n() && d.n() >= 2 => CycleClass::HamiltonianCycle,
        1 => CycleClass::SimpleCycle,
        _ => CycleClass::Cycle,
    }
}
