use std::collections::VecDeque;

use crate::graph::Graph;
use crate::labeling::{Abort, CheckKind, Disassembly, LabelState, ParentPreorderList, RunOutcome};

use super::Recorder;

/// Negative-cycle detection strategy attached to the FIFO driver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Detector {
    /// Rely on the labeling budget alone.
    None,
    WalkToRoot,
    Subtree,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Unreached,
    Labeled,
    Scanned,
}

pub(super) fn run(
    graph: &Graph,
    st: &mut LabelState,
    rec: &mut Recorder,
    detector: Detector,
) -> Result<RunOutcome, Abort> {
    let n = graph.n();
    let s = graph.source();
    let mut status = vec![Status::Unreached; n];
    let mut in_queue = vec![false; n];
    let mut queue = VecDeque::with_capacity(n);
    let mut tree = (detector == Detector::Subtree).then(|| ParentPreorderList::new(n, s));

    status[s] = Status::Labeled;
    in_queue[s] = true;
    queue.push_back(s);
    // Pass boundaries: the current pass ends after `left` more dequeues.
    let (mut pass, mut left, mut next) = (0u32, 1usize, 0usize);

    while let Some(u) = queue.pop_front() {
        if left == 0 {
            pass += 1;
            left = next;
            next = 0;
        }
        left -= 1;
        in_queue[u] = false;
        // Vertices dropped by disassembly stay queued but are skipped.
        if status[u] != Status::Labeled {
            continue;
        }
        status[u] = Status::Scanned;
        rec.scan(u, pass);
        for a in graph.out_arcs(u) {
            let v = a.head as usize;
            if !st.relax_check(u, v, a.len, CheckKind::Main)? {
                continue;
            }
            match (&mut tree, detector) {
                (Some(tree), _) => {
                    let dropped = &mut status;
                    let r = tree.relabel(st, u, v, a.len, |x| dropped[x] = Status::Unreached);
                    if let Disassembly::NegativeCycle(c) = r {
                        return Ok(RunOutcome::NegativeCycle(c));
                    }
                }
                (None, Detector::WalkToRoot) => {
                    if st.walk_to_root(u, v) {
                        let cycle = st.tree_path(v, u).expect("v is an ancestor of u");
                        return Ok(RunOutcome::NegativeCycle(cycle));
                    }
                    st.apply_relax(u, v, a.len);
                }
                (None, _) => st.apply_relax(u, v, a.len),
            }
            status[v] = Status::Labeled;
            if !in_queue[v] {
                in_queue[v] = true;
                queue.push_back(v);
                next += 1;
            }
        }
        if rec.audit {
            if let Some(tree) = &tree {
                rec.check("parent preorder", tree.audit(&st.parent));
            }
        }
    }
    Ok(RunOutcome::Tree(st.to_tree()))
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::super::{run, AlgoId, RunOptions};

    #[test]
    fn g1_counts() {
        // Scans 1, 2, 3 (twice-labeled 3 is queued once), 4.
        let r = run(&g1(), AlgoId::Bfm, &RunOptions::default());
        assert_eq!(r.outcome.tree().unwrap().dist, vec![0, 1, -1, 0]);
        assert_eq!(r.counters.aux, 0);
        assert_eq!(r.counters.main, 5);
    }

    #[test]
    fn tar_reports_g2_cycle_with_total_minus_two() {
        let g = g2();
        let r = run(&g, AlgoId::Tarjan, &RunOptions::default());
        let c = r.outcome.cycle().unwrap();
        let total: i64 = (0..c.len())
            .map(|i| g.min_arc_len(c[i], c[(i + 1) % c.len()]).unwrap())
            .sum();
        assert_eq!(total, -2);
    }
}
