//! Goldberg-Radzik: rounds of (1) pruning the touched set `B`, (2) a
//! depth-first search over admissible arcs from the survivors, and (3)
//! scanning the reached set `A` in topological order.

use crate::graph::{Graph, Length};
use crate::labeling::{Abort, CheckKind, LabelState, RunOutcome};

use super::Recorder;

const NEW: u8 = 0;
const ON_STACK: u8 = 1;
const DONE: u8 = 2;

struct Frame {
    v: usize,
    /// Out-arcs still to examine; they are taken from the back.
    remaining: usize,
    /// Length of the tree path from the DFS root to `v`.
    depth_len: Length,
}

pub(super) fn run(graph: &Graph, st: &mut LabelState, rec: &mut Recorder) -> Result<RunOutcome, Abort> {
    let n = graph.n();
    let mut in_b = vec![false; n];
    let mut b = vec![graph.source()];
    in_b[graph.source()] = true;

    let mut mark = vec![NEW; n];
    let mut stack_pos = vec![0usize; n];
    let mut stack: Vec<Frame> = Vec::new();
    let mut roots = Vec::new();
    let mut postorder = Vec::new();
    let mut round = 0u32;

    while !b.is_empty() {
        // Step 1: keep only vertices with at least one relaxable out-arc.
        roots.clear();
        for &v in &b {
            in_b[v] = false;
            for a in graph.out_arcs(v) {
                if st.relax_check(v, a.head as usize, a.len, CheckKind::Aux)? {
                    roots.push(v);
                    break;
                }
            }
        }

        // Step 2: DFS over admissible arcs, children in reverse adjacency
        // order; postorder gives the topological order, a back arc closes
        // a cycle of the admissible graph.
        postorder.clear();
        for &r in &roots {
            if mark[r] != NEW {
                continue;
            }
            mark[r] = ON_STACK;
            stack_pos[r] = 0;
            stack.push(Frame {
                v: r,
                remaining: graph.out_degree(r),
                depth_len: 0,
            });
            while let Some(top) = stack.last_mut() {
                let x = top.v;
                if top.remaining == 0 {
                    mark[x] = DONE;
                    postorder.push(x);
                    stack.pop();
                    continue;
                }
                top.remaining -= 1;
                let a = graph.out_arcs(x)[top.remaining];
                let here = top.depth_len;
                let y = a.head as usize;
                if !st.admissible_check(x, y, a.len)? {
                    continue;
                }
                match mark[y] {
                    NEW => {
                        mark[y] = ON_STACK;
                        stack_pos[y] = stack.len();
                        stack.push(Frame {
                            v: y,
                            remaining: graph.out_degree(y),
                            depth_len: here + a.len,
                        });
                    }
                    ON_STACK => {
                        let total = here + a.len - stack[stack_pos[y]].depth_len;
                        if total < 0 {
                            let cycle = stack[stack_pos[y]..].iter().map(|f| f.v).collect();
                            return Ok(RunOutcome::NegativeCycle(cycle));
                        }
                    }
                    _ => {}
                }
            }
        }

        // Step 3: scan in reverse postorder; everything relaxed forms the
        // next B.
        b.clear();
        for &u in postorder.iter().rev() {
            mark[u] = NEW;
            rec.scan(u, round);
            for a in graph.out_arcs(u) {
                let v = a.head as usize;
                if st.relax_check(u, v, a.len, CheckKind::Main)? {
                    st.apply_relax(u, v, a.len);
                    if !in_b[v] {
                        in_b[v] = true;
                        b.push(v);
                    }
                }
            }
        }
        round += 1;
    }
    Ok(RunOutcome::Tree(st.to_tree()))
}
