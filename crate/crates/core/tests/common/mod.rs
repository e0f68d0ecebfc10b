//! Independent reference implementations used only by the test suite.
#![allow(dead_code)]

use hamaudit::{BipartiteGraph, Digraph};
use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    arcs.shuffle(rng);
    Digraph::new(n, arcs).unwrap()
}

pub fn random_bipartite(rng: &mut ChaCha8Rng, a: usize, b: usize, p: f64) -> BipartiteGraph {
    let mut edges = Vec::new();
    for x in 0..a {
        for y in 0..b {
            if rng.gen_bool(p) {
                edges.push((x, y));
            }
        }
    }
    edges.shuffle(rng);
    BipartiteGraph::new(a, b, edges).unwrap()
}

pub fn random_permutation_digraph(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    // derangement by rejection so there are no self-loops
    loop {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        if perm.iter().enumerate().all(|(i, &p)| i != p) {
            let mut arcs: Vec<(usize, usize)> =
                perm.iter().enumerate().map(|(i, &p)| (i, p)).collect();
            arcs.shuffle(rng);
            return Digraph::new(n, arcs).unwrap();
        }
    }
}

/// All `2^(n(n-1))` labelled digraphs on `n` vertices, arcs row-major.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let arcs = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &a)| a)
            .collect();
        Digraph::new(n, arcs).unwrap()
    })
}

/// Rank over the rationals by Gaussian elimination of the dense signed
/// incidence submatrix restricted to `cols`.
pub fn gaussian_rank(d: &Digraph, cols: &[usize]) -> usize {
    let n = d.n();
    let mut a: Vec<Vec<Rational64>> = vec![vec![Rational64::from_integer(0); cols.len()]; n];
    for (c, &j) in cols.iter().enumerate() {
        let (u, v) = d.arc(j);
        a[u][c] = Rational64::from_integer(1);
        a[v][c] = Rational64::from_integer(-1);
    }
    let mut rank = 0;
    for c in 0..cols.len() {
        let Some(p) = (rank..n).find(|&r| a[r][c] != Rational64::from_integer(0)) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c];
        for r in 0..n {
            if r != rank && a[r][c] != Rational64::from_integer(0) {
                let f = a[r][c] / pivot;
                for k in c..cols.len() {
                    let sub = f * a[rank][k];
                    a[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Maximum matching size by exhaustive search over X.
pub fn brute_max_matching(g: &BipartiteGraph) -> usize {
    fn go(g: &BipartiteGraph, x: usize, used: &mut Vec<bool>) -> usize {
        if x == g.x_size() {
            return 0;
        }
        let mut best = go(g, x + 1, used);
        for &(y, _) in g.neighbors(x) {
            if !used[y] {
                used[y] = true;
                best = best.max(1 + go(g, x + 1, used));
                used[y] = false;
            }
        }
        best
    }
    go(g, 0, &mut vec![false; g.y_size()])
}

/// Every perfect matching as a sorted edge-index list, by trying all
/// permutations of Y.
pub fn brute_perfect_matchings(g: &BipartiteGraph) -> Vec<Vec<usize>> {
    let n = g.x_size();
    if n != g.y_size() {
        return Vec::new();
    }
    let lookup = |x: usize, y: usize| g.edges().iter().position(|&e| e == (x, y));
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let es: Option<Vec<usize>> = (0..n).map(|x| lookup(x, p[x])).collect();
        if let Some(mut es) = es {
            es.sort_unstable();
            out.push(es);
        }
    });
    out.sort();
    out
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Hamiltonicity by trying every vertex order that starts at 0.
pub fn brute_hamiltonian(d: &Digraph) -> bool {
    let n = d.n();
    if n < 2 {
        return false;
    }
    let mut rest: Vec<usize> = (1..n).collect();
    let mut found = false;
    permutations(&mut rest, 0, &mut |p| {
        if found {
            return;
        }
        let mut prev = 0;
        for &v in p {
            if !d.has_arc(prev, v) {
                return;
            }
            prev = v;
        }
        found = d.has_arc(prev, 0);
    });
    found
}

/// Undirected Hamiltonicity by backtracking directly on edges.
pub fn undirected_hamiltonian(n: usize, edges: &[(usize, usize)]) -> bool {
    if n < 2 {
        return false;
    }
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    if n == 2 {
        // the two antiparallel arcs of a single edge form a 2-cycle
        return adj[0][1];
    }
    fn go(adj: &[Vec<bool>], path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let n = adj.len();
        let last = *path.last().unwrap();
        if path.len() == n {
            return adj[last][0];
        }
        for w in 0..n {
            if !used[w] && adj[last][w] {
                used[w] = true;
                path.push(w);
                if go(adj, path, used) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    let mut used = vec![false; n];
    used[0] = true;
    go(&adj, &mut vec![0], &mut used)
}
