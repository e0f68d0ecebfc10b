mod common;

use std::collections::BTreeSet;

use common::{brute_max_matching, brute_perfect_matchings, random_bipartite, random_digraph, rng};
use hamaudit::matching::for_each_perfect_matching;
use hamaudit::{
    allowed_edges, build_zmap, enumerate_perfect_matchings, hall_violator, incidence_matrix,
    max_matching, BipartiteGraph, Matching,
};
use rand::seq::SliceRandom;
use rand::Rng;

#[test]
fn max_matching_equals_exhaustive() {
    let mut r = rng(21);
    for _ in 0..500 {
        let (a, b) = (r.gen_range(0..=6), r.gen_range(0..=6));
        let p = r.gen_range(0.05..0.7);
        let g = random_bipartite(&mut r, a, b, p);
        let m = max_matching(&g);
        assert_eq!(m.len(), brute_max_matching(&g), "{g:?}");
        assert!(Matching::from_edges(&g, m.edges()).is_some());
        match hall_violator(&g) {
            Some(s) => {
                assert!(m.len() < a);
                assert!(g.neighborhood(&s).len() < s.len());
            }
            None => assert_eq!(m.len(), a),
        }
    }
}

#[test]
fn max_matching_on_larger_graphs_is_deterministic() {
    let mut r = rng(22);
    let g = random_bipartite(&mut r, 300, 300, 0.01);
    let a = max_matching(&g);
    let b = max_matching(&g);
    assert_eq!(a, b);
    // maximality: no augmenting path means the Hall set exists iff imperfect
    assert_eq!(hall_violator(&g).is_none(), a.len() == 300);
}

fn union_of(ms: &[Vec<usize>]) -> Vec<usize> {
    ms.iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

#[test]
fn allowed_edges_equal_union_of_perfect_matchings() {
    let mut r = rng(23);
    for _ in 0..300 {
        let n = r.gen_range(1..=7);
        let p = r.gen_range(0.2..0.8);
        let g = random_bipartite(&mut r, n, n, p);
        let brute = brute_perfect_matchings(&g);
        let allowed = allowed_edges(&g).unwrap();
        assert_eq!(allowed.members, union_of(&brute), "{g:?}");
        assert_eq!(allowed.is_empty_because_no_pm, brute.is_empty());

        let listed = enumerate_perfect_matchings(&g, 100_000);
        assert!(!listed.truncated);
        let mut got: Vec<Vec<usize>> = listed
            .matchings
            .iter()
            .map(|m| m.edges().to_vec())
            .collect();
        got.sort();
        assert_eq!(got, brute);
    }
}

#[test]
fn enumeration_order_is_canonical() {
    // complete 3x3: X in order, then edge index; the permutations of Y in
    // lexicographic order
    let g = BipartiteGraph::complete(3, 3);
    let mut ys = Vec::new();
    for_each_perfect_matching(&g, |edges| {
        ys.push(edges.iter().map(|&e| g.edge(e).1).collect::<Vec<_>>());
        std::ops::ControlFlow::Continue(())
    });
    assert_eq!(
        ys,
        vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0]
        ]
    );
}

#[test]
fn enumeration_truncation_boundary() {
    let g = BipartiteGraph::complete(4, 4); // 24 perfect matchings
    for (limit, len, truncated) in [
        (1, 1, true),
        (23, 23, true),
        (24, 24, false),
        (100, 24, false),
    ] {
        let e = enumerate_perfect_matchings(&g, limit);
        assert_eq!(
            (e.matchings.len(), e.truncated),
            (len, truncated),
            "limit {limit}"
        );
    }
}

/// An even cycle `x0 y0 x1 y1 ...` of length 2k splits into the two
/// alternating perfect matchings, and those are its only ones.
#[test]
fn even_cycle_is_two_disjoint_perfect_matchings() {
    let mut r = rng(24);
    for len in (4..=16).step_by(2) {
        let k = len / 2;
        let mut xs: Vec<usize> = (0..k).collect();
        let mut ys: Vec<usize> = (0..k).collect();
        xs.shuffle(&mut r);
        ys.shuffle(&mut r);
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((xs[i], ys[i]));
            edges.push((xs[(i + 1) % k], ys[i]));
        }
        let g = BipartiteGraph::new(k, k, edges).unwrap();
        let pms = enumerate_perfect_matchings(&g, 10);
        assert_eq!(pms.matchings.len(), 2, "length {len}");
        let a: BTreeSet<usize> = pms.matchings[0].edges().iter().copied().collect();
        let b: BTreeSet<usize> = pms.matchings[1].edges().iter().copied().collect();
        assert!(a.is_disjoint(&b));
        assert_eq!(a.len() + b.len(), len);
        let evens: BTreeSet<usize> = (0..len).step_by(2).collect();
        assert!(a == evens || b == evens);
    }
}

/// The Z-map's incidence matrix is the plus part stacked over the negated
/// minus part of the digraph's incidence matrix.
#[test]
fn zmap_incidence_is_stacked_split() {
    let mut r = rng(25);
    for _ in 0..200 {
        let n = r.gen_range(0..=8);
        let d = random_digraph(&mut r, n, 0.4);
        let z = build_zmap(&d);
        let c = incidence_matrix(&d);
        let mut f = vec![vec![0i8; d.m()]; 2 * n];
        for (j, &(x, y)) in z.edges().iter().enumerate() {
            f[x][j] = 1;
            f[n + y][j] = 1;
        }
        let plus = c.plus_part();
        let minus = c.minus_part();
        for i in 0..n {
            for j in 0..d.m() {
                assert_eq!(f[i][j], plus.get(&(i, j)).copied().unwrap_or(0));
                assert_eq!(f[n + i][j], -minus.get(&(i, j)).copied().unwrap_or(0));
            }
        }
    }
}
