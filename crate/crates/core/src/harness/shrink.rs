use serde::{Deserialize, Serialize};

use super::{is_discrepant, HarnessError, Limits};
use crate::graph::Digraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShrinkResult {
    /// Arc-minimal instance with the original vertex labels.
    pub pre_compaction: Digraph,
    /// Final instance after vertex deletion and relabelling.
    pub minimized: Digraph,
    /// `vertex_labels[v]` is the original label of vertex `v` of `minimized`.
    pub vertex_labels: Vec<usize>,
    /// Number of discrepancy checks performed.
    pub checks: usize,
}

struct Shrinker<'a> {
    limits: &'a Limits,
    checks: usize,
}

impl Shrinker<'_> {
    fn holds(&mut self, d: &Digraph) -> Result<bool, HarnessError> {
        self.checks += 1;
        is_discrepant(d, self.limits)
    }

    /// Removes arcs in index order while the discrepancy persists, repeating
    /// until no single removal keeps it.
    fn drop_arcs(&mut self, mut cur: Digraph) -> Result<Digraph, HarnessError> {
        loop {
            let mut changed = false;
            let mut j = 0;
            while j < cur.m() {
                let cand = cur.without_arc(j);
                if self.holds(&cand)? {
                    cur = cand;
                    changed = true;
                } else {
                    j += 1;
                }
            }
            if !changed {
                return Ok(cur);
            }
        }
    }
}

/// Greedy 1-minimal shrinking of a discrepancy instance.
///
/// Arcs are removed first with labels untouched (`pre_compaction`). Then
/// vertices are deleted, highest label first, each deletion followed by
/// another arc pass, until neither an arc nor a vertex can go.
pub fn shrink(d: &Digraph, limits: &Limits) -> Result<ShrinkResult, HarnessError> {
    let mut s = Shrinker { limits, checks: 0 };
    if !s.holds(d)? {
        return Err(HarnessError::NotADiscrepancy);
    }
    let pre_compaction = s.drop_arcs(d.clone())?;

    let mut cur = pre_compaction.clone();
    let mut labels: Vec<usize> = (0..cur.n()).collect();
    'outer: loop {
        for v in (0..cur.n()).rev() {
            let cand = cur.without_vertex(v);
            if s.holds(&cand)? {
                cur = s.drop_arcs(cand)?;
                labels.remove(v);
                continue 'outer;
            }
        }
        break;
    }

    Ok(ShrinkResult {
        pre_compaction,
        minimized: cur,
        vertex_labels: labels,
        checks: s.checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::prism;

    #[test]
    fn prism_is_already_minimal() {
        let r = shrink(&prism(), &Limits::default()).unwrap();
        assert_eq!(r.minimized, prism());
        assert_eq!(r.pre_compaction, prism());
        assert_eq!(r.vertex_labels, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn non_discrepancy_is_rejected() {
        let tri = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            shrink(&tri, &Limits::default()),
            Err(HarnessError::NotADiscrepancy)
        ));
    }
}
