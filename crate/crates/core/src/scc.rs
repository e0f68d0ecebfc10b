//! Iterative Tarjan strongly connected components over adjacency lists.

/// Returns `comp[v]`, the component id of each vertex. Ids are assigned in
/// the order Tarjan completes components (reverse topological order).
pub fn tarjan_scc(adj: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    // (vertex, next child position)
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&w) = adj[v].get(*pos) {
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

/// True when every vertex reaches every other. Empty and single-vertex
/// graphs count as strongly connected.
pub fn is_strongly_connected(adj: &[Vec<usize>]) -> bool {
    let comp = tarjan_scc(adj);
    comp.iter()
        .all(|&c| c == comp.first().copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycles_joined_one_way() {
        // 0 <-> 1, 2 <-> 3, 1 -> 2
        let adj = vec![vec![1], vec![0, 2], vec![3], vec![2]];
        let c = tarjan_scc(&adj);
        assert_eq!(c[0], c[1]);
        assert_eq!(c[2], c[3]);
        assert_ne!(c[0], c[2]);
        // sink component finishes first
        assert!(c[2] < c[0]);
        assert!(!is_strongly_connected(&adj));
    }

    #[test]
    fn long_path_does_not_overflow() {
        let n = 200_000;
        let mut adj: Vec<Vec<usize>> = (0..n).map(|v| vec![v + 1]).collect();
        adj[n - 1] = vec![0];
        assert!(is_strongly_connected(&adj));
    }

    #[test]
    fn trivial_graphs() {
        assert!(is_strongly_connected(&[]));
        assert!(is_strongly_connected(&[vec![]]));
        assert!(!is_strongly_connected(&[vec![], vec![]]));
    }
}
