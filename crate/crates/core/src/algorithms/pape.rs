use std::collections::VecDeque;

use crate::graph::Graph;
use crate::labeling::{Abort, CheckKind, LabelState, RunOutcome};

use super::Recorder;

pub(super) fn run(graph: &Graph, st: &mut LabelState, rec: &mut Recorder) -> Result<RunOutcome, Abort> {
    let n = graph.n();
    let s = graph.source();
    let mut in_queue = vec![false; n];
    let mut ever_labeled = vec![false; n];
    let mut deque = VecDeque::with_capacity(n);
    in_queue[s] = true;
    ever_labeled[s] = true;
    deque.push_back(s);

    while let Some(u) = deque.pop_front() {
        in_queue[u] = false;
        rec.scan(u, 0);
        for a in graph.out_arcs(u) {
            let v = a.head as usize;
            if !st.relax_check(u, v, a.len, CheckKind::Main)? {
                continue;
            }
            st.apply_relax(u, v, a.len);
            if !in_queue[v] {
                in_queue[v] = true;
                if ever_labeled[v] {
                    deque.push_front(v);
                } else {
                    deque.push_back(v);
                }
            }
            ever_labeled[v] = true;
        }
    }
    Ok(RunOutcome::Tree(st.to_tree()))
}
