mod common;

use common::{gaussian_rank, random_digraph, rng};
use hamaudit::{
    classify_arcset, incidence_matrix, parse_arclist, parse_graph, rank_of_arcset, ArcSet,
    CycleClass, Digraph,
};
use proptest::prelude::*;
use rand::Rng;

fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_shuffle()
            .prop_map(move |arcs| Digraph::new(n, arcs).unwrap())
    })
}

proptest! {
    #[test]
    fn emit_then_parse_is_identity(d in arb_digraph(7)) {
        let text = d.to_arclist();
        prop_assert_eq!(parse_arclist(&text).unwrap(), d.clone());
        prop_assert_eq!(parse_graph(&text).unwrap(), d);
    }

    #[test]
    fn incidence_columns_balance(d in arb_digraph(8)) {
        let c = incidence_matrix(&d);
        prop_assert_eq!(c.nonzeros(), 2 * d.m());
        for j in 0..d.m() {
            let col: i32 = (0..d.n()).map(|i| c.get(i, j) as i32).sum();
            prop_assert_eq!(col, 0);
        }
        let plus = c.plus_part();
        let minus = c.minus_part();
        prop_assert!(plus.values().all(|&v| v == 1));
        prop_assert!(minus.values().all(|&v| v == -1));
        for i in 0..d.n() {
            for j in 0..d.m() {
                let sum = plus.get(&(i, j)).copied().unwrap_or(0)
                    + minus.get(&(i, j)).copied().unwrap_or(0);
                prop_assert_eq!(sum, c.get(i, j));
            }
        }
    }

    #[test]
    fn rank_matches_elimination(d in arb_digraph(8), picks in proptest::collection::vec(any::<bool>(), 56)) {
        let s: Vec<usize> = (0..d.m()).filter(|&j| picks[j]).collect();
        let (rank, k) = rank_of_arcset(&d, &ArcSet::from_indices(&d, s.clone()).unwrap());
        prop_assert_eq!(rank, gaussian_rank(&d, &s));
        prop_assert_eq!(rank + k, d.n());
    }
}

#[test]
fn rank_on_200_random_subsets() {
    let mut r = rng(11);
    for _ in 0..200 {
        let n = r.gen_range(1..=10);
        let p = r.gen_range(0.1..0.6);
        let d = random_digraph(&mut r, n, p);
        let s: Vec<usize> = (0..d.m()).filter(|_| r.gen_bool(0.5)).collect();
        let set = ArcSet::from_indices(&d, s.clone()).unwrap();
        assert_eq!(rank_of_arcset(&d, &set).0, gaussian_rank(&d, &s), "{d}");
    }
}

/// Independent check: follow successor arcs from each arc; a simple cycle
/// returns to its start after exactly |s| steps, touching every arc once.
fn walks_as_single_cycle(d: &Digraph, s: &[usize]) -> bool {
    if s.is_empty() {
        return false;
    }
    let succ = |j: usize| -> Vec<usize> {
        s.iter()
            .copied()
            .filter(|&k| k != j && d.tail(k) == d.head(j))
            .collect()
    };
    let mut seen = vec![s[0]];
    let mut cur = s[0];
    loop {
        let next = succ(cur);
        if next.len() != 1 {
            return false;
        }
        cur = next[0];
        if cur == s[0] {
            break;
        }
        if seen.contains(&cur) {
            return false;
        }
        seen.push(cur);
    }
    if seen.len() != s.len() {
        return false;
    }
    // no vertex repeated
    let mut tails: Vec<usize> = s.iter().map(|&j| d.tail(j)).collect();
    tails.sort_unstable();
    tails.dedup();
    tails.len() == s.len()
}

#[test]
fn classification_agrees_with_walking() {
    let mut r = rng(12);
    for _ in 0..3000 {
        let n = r.gen_range(2..=6);
        let d = random_digraph(&mut r, n, 0.5);
        let s: Vec<usize> = (0..d.m()).filter(|_| r.gen_bool(0.35)).collect();
        let set = ArcSet::from_indices(&d, s.clone()).unwrap();
        let class = classify_arcset(&d, &set);
        let simple = walks_as_single_cycle(&d, &s);
        assert_eq!(
            matches!(
                class,
                CycleClass::SimpleCycle | CycleClass::HamiltonianCycle
            ),
            simple,
            "{d} {s:?}"
        );
        if class == CycleClass::HamiltonianCycle {
            assert_eq!(s.len(), n);
            assert_eq!(rank_of_arcset(&d, &set).0, n - 1);
        }
        if class == CycleClass::Cycle {
            // a union of >= 2 disjoint cycles: every touched vertex in = out = 1
            for v in 0..n {
                let o = s.iter().filter(|&&j| d.tail(j) == v).count();
                let i = s.iter().filter(|&&j| d.head(j) == v).count();
                assert_eq!(o, i);
                assert!(o <= 1);
            }
        }
    }
}
