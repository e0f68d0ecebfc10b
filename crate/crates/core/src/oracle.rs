//! Exact Hamiltonicity: Held–Karp subset DP, budgeted backtracking, and the
//! undirected-to-directed conversion.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{ArcSet, Digraph};
use crate::scc::is_strongly_connected;

/// Largest `n` accepted by [`held_karp`]; the table has `2^(n-1)` words.
pub const HELD_KARP_MAX_N: usize = 24;
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("held-karp supports n <= {HELD_KARP_MAX_N}, got n = {0}")]
    TooLarge(usize),
    #[error("a Hamiltonian cycle needs n >= 2, got n = {0}")]
    TooSmall(usize),
    #[error("backtracking budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("edge {index}: self-loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("edge {index}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { index: usize, u: usize, v: usize },
    #[error("edge {index}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OracleMethod {
    HeldKarp,
    Backtracking,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub hamiltonian: bool,
    /// Vertex order of a Hamiltonian cycle starting at vertex 0.
    pub witness: Option<Vec<usize>>,
    pub method: OracleMethod,
}

impl OracleResult {
    /// Arc indices of the witness cycle, if any.
    pub fn witness_arcs(&self, d: &Digraph) -> Option<ArcSet> {
        let w = self.witness.as_ref()?;
        let idx = (0..w.len())
            .map(|i| {
                let arc = (w[i], w[(i + 1) % w.len()]);
                d.arcs().iter().position(|&a| a == arc)
            })
            .collect::<Option<Vec<_>>>()?;
        ArcSet::from_indices(d, idx).ok()
    }
}

/// True when `order` visits every vertex once and all consecutive pairs,
/// including the wrap-around, are arcs of `d`.
pub fn validate_witness(d: &Digraph, order: &[usize]) -> bool {
    let n = d.n();
    if n < 2 || order.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    let arcs: HashSet<(usize, usize)> = d.arcs().iter().copied().collect();
    (0..n).all(|i| arcs.contains(&(order[i], order[(i + 1) % n])))
}

/// Held–Karp anchored at vertex 0.
///
/// `reach[S]` is the bitset of vertices `v ∈ S` such that some path starts at
/// 0, visits exactly `S`, and ends at `v`. Vertex `v ≥ 1` is bit `v - 1`.
pub fn held_karp(d: &Digraph) -> Result<OracleResult, OracleError> {
    let n = d.n();
    if n < 2 {
        return Err(OracleError::TooSmall(n));
    }
    if n > HELD_KARP_MAX_N {
        return Err(OracleError::TooLarge(n));
    }
    let k = n - 1;
    let full: u32 = (1u32 << k) - 1;
    // pred[b]: predecessors of vertex b+1 among 1..n, as bits
    let mut pred = vec![0u32; k];
    let mut from_start = 0u32;
    let mut into_start = 0u32;
    for &(u, v) in d.arcs() {
        match (u, v) {
            (0, v) => from_start |= 1 << (v - 1),
            (u, 0) => into_start |= 1 << (u - 1),
            (u, v) => pred[v - 1] |= 1 << (u - 1),
        }
    }

    let mut reach = vec![0u32; 1usize << k];
    for b in 0..k {
        if from_start >> b & 1 == 1 {
            reach[1 << b] = 1 << b;
        }
    }
    for mask in 1..=full {
        let ends = reach[mask as usize];
        if ends == 0 {
            continue;
        }
        let mut free = !mask & full;
        while free != 0 {
            let b = free.trailing_zeros();
            free &= free - 1;
            if pred[b as usize] & ends != 0 {
                reach[(mask | 1 << b) as usize] |= 1 << b;
            }
        }
    }

    let closing = reach[full as usize] & into_start;
    if closing == 0 {
        return Ok(OracleResult {
            hamiltonian: false,
            witness: None,
            method: OracleMethod::HeldKarp,
        });
    }

    let mut rev = Vec::with_capacity(n);
    let mut mask = full;
    let mut cur = closing.trailing_zeros();
    loop {
        rev.push(cur as usize + 1);
        let prev_mask = mask & !(1 << cur);
        if prev_mask == 0 {
            break;
        }
        let options = reach[prev_mask as usize] & pred[cur as usize];
        debug_assert!(options != 0);
        cur = options.trailing_zeros();
        mask = prev_mask;
    }
    rev.push(0);
    rev.reverse();
    Ok(OracleResult {
        hamiltonian: true,
        witness: Some(rev),
        method: OracleMethod::HeldKarp,
    })
}

struct Search<'a> {
    n: usize,
    succ: &'a [Vec<usize>],
    pred: &'a [Vec<usize>],
    budget: u64,
    nodes: u64,
    visited: Vec<bool>,
    path: Vec<usize>,
    // scratch for the reachability check
    mark: Vec<bool>,
    queue: Vec<usize>,
}

impl Search<'_> {
    /// Extends `path` (ending at `v`). `Ok(true)` once a cycle is closed.
    fn extend(&mut self, v: usize) -> Result<bool, OracleError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OracleError::BudgetExceeded {
                nodes: self.nodes - 1,
            });
        }
        if self.path.len() == self.n {
            return Ok(self.succ[v].contains(&0));
        }

        // Degree checks on the unvisited remainder: each needs a usable
        // predecessor (unvisited or `v`) and successor (unvisited or 0).
        let mut forced: Option<usize> = None;
        for w in 0..self.n {
            if self.visited[w] {
                continue;
            }
            let mut preds = self.pred[w].iter().filter(|&&p| p == v || !self.visited[p]);
            let first = preds.next();
            match (first, preds.next()) {
                (None, _) => return Ok(false),
                (Some(&p), None) if p == v => {
                    if forced.is_some_and(|f| f != w) {
                        return Ok(false);
                    }
                    forced = Some(w);
                }
                _ => {}
            }
            if !self.succ[w].iter().any(|&s| s == 0 || !self.visited[s]) {
                return Ok(false);
            }
        }

        if !self.remainder_reachable(v) {
            return Ok(false);
        }

        let candidates: Vec<usize> = match forced {
            Some(w) => vec![w],
            None => self.succ[v]
                .iter()
                .copied()
                .filter(|&w| !self.visited[w])
                .collect(),
        };
        for w in candidates {
            self.visited[w] = true;
            self.path.push(w);
            if self.extend(w)? {
                return Ok(true);
            }
            self.path.pop();
            self.visited[w] = false;
        }
        Ok(false)
    }

    /// Every unvisited vertex is reachable from `v` through unvisited
    /// vertices, and vertex 0 is reachable back from that set.
    fn remainder_reachable(&mut self, v: usize) -> bool {
        self.mark.iter_mut().for_each(|m| *m = false);
        self.queue.clear();
        self.queue.push(v);
        self.mark[v] = true;
        let mut reached = 0;
        let mut closes = false;
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            for &w in &self.succ[u] {
                if w == 0 && u != v {
                    closes = true;
                }
                if !self.visited[w] && !self.mark[w] {
                    self.mark[w] = true;
                    reached += 1;
                    self.queue.push(w);
                }
            }
        }
        let remaining = self.n - self.path.len();
        reached == remaining && closes
    }
}

/// Depth-first search from vertex 0, successors lowest index first.
///
/// Prunes on strong connectivity, dead vertices in the remainder, forced
/// moves when an unvisited vertex has the current endpoint as its only
/// usable predecessor, and reachability of the remainder.
pub fn backtrack_hc(d: &Digraph, node_budget: u64) -> Result<OracleResult, OracleError> {
    let n = d.n();
    if n < 2 {
        return Err(OracleError::TooSmall(n));
    }
    let no = OracleResult {
        hamiltonian: false,
        witness: None,
        method: OracleMethod::Backtracking,
    };
    let mut succ = d.out_neighbors();
    let mut pred = d.in_neighbors();
    succ.iter_mut().for_each(|s| s.sort_unstable());
    pred.iter_mut().for_each(|p| p.sort_unstable());
    if !is_strongly_connected(&succ) {
        return Ok(no);
    }

    let mut search = Search {
        n,
        succ: &succ,
        pred: &pred,
        budget: node_budget,
        nodes: 0,
        visited: vec![false; n],
        path: vec![0],
        mark: vec![false; n],
        queue: Vec::with_capacity(n),
    };
    search.visited[0] = true;
    if search.extend(0)? {
        Ok(OracleResult {
            hamiltonian: true,
            witness: Some(search.path),
            method: OracleMethod::Backtracking,
        })
    } else {
        Ok(no)
    }
}

/// Replaces each undirected edge `{u, v}` by the arcs `(u, v), (v, u)`, in
/// edge order.
pub fn undirected_to_digraph(edges: &[(usize, usize)], n: usize) -> Result<Digraph, OracleError> {
    let mut seen = HashSet::with_capacity(edges.len());
    let mut arcs = Vec::with_capacity(2 * edges.len());
    for (index, &(u, v)) in edges.iter().enumerate() {
        if let Some(&vertex) = [u, v].iter().find(|&&w| w >= n) {
            return Err(OracleError::VertexOutOfRange { index, vertex, n });
        }
        if u == v {
            return Err(OracleError::SelfLoop { index, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(OracleError::DuplicateEdge { index, u, v });
        }
        arcs.push((u, v));
        arcs.push((v, u));
    }
    Ok(Digraph::new(n, arcs).expect("symmetric arcs of a simple graph form a simple digraph"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify_arcset, CycleClass};

    fn tri() -> Digraph {
        Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn two_two_cycles() -> Digraph {
        Digraph::new(4, vec![(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap()
    }

    #[test]
    fn held_karp_examples() {
        let k4 = held_karp(&Digraph::complete(4)).unwrap();
        assert!(k4.hamiltonian);
        assert!(validate_witness(
            &Digraph::complete(4),
            k4.witness.as_ref().unwrap()
        ));
        let path = Digraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(!held_karp(&path).unwrap().hamiltonian);
        assert!(!held_karp(&two_two_cycles()).unwrap().hamiltonian);
        assert_eq!(held_karp(&tri()).unwrap().witness, Some(vec![0, 1, 2]));
    }

    #[test]
    fn held_karp_bounds() {
        assert_eq!(held_karp(&Digraph::empty(1)), Err(OracleError::TooSmall(1)));
        assert_eq!(
            held_karp(&Digraph::empty(25)),
            Err(OracleError::TooLarge(25))
        );
        let pair = Digraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(held_karp(&pair).unwrap().witness, Some(vec![0, 1]));
        assert!(
            !held_karp(&Digraph::new(2, vec![(0, 1)]).unwrap())
                .unwrap()
                .hamiltonian
        );
    }

    #[test]
    fn held_karp_at_max_n() {
        let order: Vec<usize> = (0..24).rev().collect();
        let d = Digraph::cycle(24, &order).unwrap();
        let r = held_karp(&d).unwrap();
        assert!(r.hamiltonian);
        assert!(validate_witness(&d, r.witness.as_ref().unwrap()));
    }

    #[test]
    fn backtrack_examples() {
        let r = backtrack_hc(&tri(), 1000).unwrap();
        assert!(r.hamiltonian);
        assert_eq!(r.witness, Some(vec![0, 1, 2]));
        let chord = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0), (0, 2)]).unwrap();
        assert!(backtrack_hc(&chord, 1000).unwrap().hamiltonian);
        assert!(!backtrack_hc(&two_two_cycles(), 1000).unwrap().hamiltonian);
        assert_eq!(
            backtrack_hc(&Digraph::empty(0), 10),
            Err(OracleError::TooSmall(0))
        );
    }

    #[test]
    fn backtrack_budget() {
        let d = Digraph::complete(8);
        assert_eq!(
            backtrack_hc(&d, 3),
            Err(OracleError::BudgetExceeded { nodes: 3 })
        );
        assert!(backtrack_hc(&d, 100).unwrap().hamiltonian);
    }

    #[test]
    fn witness_arcs_classify() {
        let d = Digraph::complete(5);
        let r = held_karp(&d).unwrap();
        let s = r.witness_arcs(&d).unwrap();
        assert_eq!(classify_arcset(&d, &s), CycleClass::HamiltonianCycle);
    }

    #[test]
    fn undirected_examples() {
        let t = undirected_to_digraph(&[(0, 1), (1, 2), (2, 0)], 3).unwrap();
        assert_eq!(t.m(), 6);
        let e = undirected_to_digraph(&[(0, 1)], 2).unwrap();
        assert_eq!(e.arcs(), &[(0, 1), (1, 0)]);
        assert_eq!(undirected_to_digraph(&[], 3).unwrap().m(), 0);
        assert!(matches!(
            undirected_to_digraph(&[(1, 1)], 2),
            Err(OracleError::SelfLoop {
                index: 0,
                vertex: 1
            })
        ));
        assert!(matches!(
            undirected_to_digraph(&[(0, 1), (1, 0)], 2),
            Err(OracleError::DuplicateEdge { index: 1, .. })
        ));
        assert!(matches!(
            undirected_to_digraph(&[(0, 3)], 3),
            Err(OracleError::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn validate_rejects_bad_orders() {
        let d = tri();
        assert!(validate_witness(&d, &[1, 2, 0]));
        assert!(!validate_witness(&d, &[0, 2, 1]));
        assert!(!validate_witness(&d, &[0, 1]));
        assert!(!validate_witness(&d, &[0, 1, 1]));
    }
}
