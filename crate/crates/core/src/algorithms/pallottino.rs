use std::collections::VecDeque;

use crate::graph::Graph;
use crate::labeling::{Abort, CheckKind, Disassembly, LabelState, ParentPreorderList, RunOutcome};

use super::Recorder;

/// Two-queue driver with subtree disassembly. Vertices that were scanned
/// before go to the high-priority queue `q1`, first-time labels to `q2`.
pub(super) fn run(graph: &Graph, st: &mut LabelState, rec: &mut Recorder) -> Result<RunOutcome, Abort> {
    let n = graph.n();
    let s = graph.source();
    let mut labeled = vec![false; n];
    let mut in_queue = vec![false; n];
    let mut ever_scanned = vec![false; n];
    let mut q1: VecDeque<usize> = VecDeque::new();
    let mut q2: VecDeque<usize> = VecDeque::with_capacity(n);
    let mut tree = ParentPreorderList::new(n, s);

    labeled[s] = true;
    in_queue[s] = true;
    q2.push_back(s);

    while let Some(u) = q1.pop_front().or_else(|| q2.pop_front()) {
        in_queue[u] = false;
        if !labeled[u] {
            continue;
        }
        labeled[u] = false;
        ever_scanned[u] = true;
        rec.scan(u, 0);
        for a in graph.out_arcs(u) {
            let v = a.head as usize;
            if !st.relax_check(u, v, a.len, CheckKind::Main)? {
                continue;
            }
            let dropped = &mut labeled;
            if let Disassembly::NegativeCycle(c) =
                tree.relabel(st, u, v, a.len, |x| dropped[x] = false)
            {
                return Ok(RunOutcome::NegativeCycle(c));
            }
            labeled[v] = true;
            if !in_queue[v] {
                in_queue[v] = true;
                if ever_scanned[v] {
                    q1.push_back(v);
                } else {
                    q2.push_back(v);
                }
            }
        }
        if rec.audit {
            rec.check("parent preorder", tree.audit(&st.parent));
        }
    }
    Ok(RunOutcome::Tree(st.to_tree()))
}

#[cfg(test)]
mod tests {
    use super::super::{run, AlgoId, RunOptions};
    use crate::graph::Graph;

    #[test]
    fn chain_never_uses_high_priority_queue() {
        let g = Graph::from_one_based(3, &[(1, 2, 1), (2, 3, 1)], 1).unwrap();
        let opts = RunOptions {
            trace: true,
            ..Default::default()
        };
        let r = run(&g, AlgoId::Pallottino, &opts);
        let order: Vec<_> = r.trace.iter().map(|e| e.vertex).collect();
        assert_eq!(order, vec![0, 1, 2]);
        assert_eq!(r.counters.main, 2);
    }

    #[test]
    fn rescanned_vertex_goes_first() {
        // 1 labels 2, 3, 4 into the low queue. Scanning 3 improves the
        // already-scanned 2, which jumps ahead of 4.
        let g = Graph::from_one_based(
            4,
            &[(1, 2, 5), (1, 3, 1), (1, 4, 1), (3, 2, -10)],
            1,
        )
        .unwrap();
        let opts = RunOptions {
            trace: true,
            ..Default::default()
        };
        let r = run(&g, AlgoId::Pallottino, &opts);
        let order: Vec<_> = r.trace.iter().map(|e| e.vertex + 1).collect();
        assert_eq!(order, vec![1, 2, 3, 2, 4]);
    }
}
