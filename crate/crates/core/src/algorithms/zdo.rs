//! Zero-in-degree-only scanning: a dequeued active vertex is scanned only
//! when none of its in-arcs is relaxable.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::labeling::{Abort, CheckKind, Disassembly, LabelState, ParentPreorderList, RunOutcome};

use super::Recorder;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(super) enum Status {
    Inactive,
    Active,
    Out,
}

/// FIFO queue with round bookkeeping: round `r + 1` holds the vertices
/// enqueued while round `r` was being processed.
pub(super) struct RoundQueue {
    q: VecDeque<usize>,
    pub round: u32,
    left: usize,
    next: usize,
}

impl RoundQueue {
    pub fn new(n: usize, s: usize) -> Self {
        let mut q = VecDeque::with_capacity(n);
        q.push_back(s);
        Self {
            q,
            round: 0,
            left: 1,
            next: 0,
        }
    }

    pub fn push(&mut self, v: usize) {
        self.q.push_back(v);
        self.next += 1;
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    pub fn pop(&mut self) -> Option<usize> {
        let v = self.q.pop_front()?;
        if self.left == 0 {
            self.round += 1;
            self.left = self.next;
            self.next = 0;
        }
        self.left -= 1;
        Some(v)
    }
}

/// Vertices that were dequeued active but not scanned since their last
/// decrease.
pub(super) struct Deferred {
    flag: Vec<bool>,
    list: Vec<usize>,
}

impl Deferred {
    pub fn new(n: usize) -> Self {
        Self {
            flag: vec![false; n],
            list: Vec::new(),
        }
    }

    pub fn add(&mut self, v: usize) {
        if !self.flag[v] {
            self.flag[v] = true;
            self.list.push(v);
        }
    }

    #[inline]
    pub fn clear(&mut self, v: usize) {
        self.flag[v] = false;
    }

    /// Drains the vertices still flagged.
    pub fn take(&mut self) -> Vec<usize> {
        let flag = &mut self.flag;
        let out = self.list.drain(..).filter(|&v| std::mem::take(&mut flag[v])).collect();
        out
    }
}

/// Called when the queue runs dry. Every deferred vertex still owes a
/// scan, so follow relaxable in-arcs backwards from it: either the walk
/// repeats a vertex (a negative cycle) or it stops at a vertex with no
/// relaxable in-arc, which is activated and queued. `first_relaxable_in`
/// returns the tail of the first relaxable in-arc of its argument.
pub(super) fn certify(
    n: usize,
    deferred: &mut Deferred,
    status: &mut [Status],
    queue: &mut RoundQueue,
    visit: &mut [u32],
    pass: &mut u32,
    mut first_relaxable_in: impl FnMut(usize) -> Result<Option<usize>, Abort>,
) -> Result<Option<Vec<usize>>, Abort> {
    let starts = deferred.take();
    // Stamps above `base` belong to this call, `walk` to the current walk.
    let base = *pass;
    for v in starts {
        *pass += 1;
        let walk = *pass;
        let mut path = Vec::new();
        let mut x = v;
        loop {
            if visit[x] == walk {
                let at = path.iter().position(|&y| y == x).expect("x on the walk");
                let mut cycle: Vec<usize> = path[at..].to_vec();
                cycle.reverse();
                return Ok(Some(cycle));
            }
            if visit[x] > base {
                // An earlier walk of this call went on from here.
                break;
            }
            visit[x] = walk;
            path.push(x);
            if path.len() > n {
                unreachable!("walk longer than n without repeating");
            }
            match first_relaxable_in(x)? {
                Some(t) => x = t,
                None => {
                    if status[x] == Status::Out {
                        queue.push(x);
                    }
                    status[x] = Status::Active;
                    break;
                }
            }
        }
    }
    Ok(None)
}

pub(super) fn run(graph: &Graph, st: &mut LabelState, rec: &mut Recorder) -> Result<RunOutcome, Abort> {
    let n = graph.n();
    let s = graph.source();
    let mut status = vec![Status::Out; n];
    let mut tree = ParentPreorderList::new(n, s);
    let mut queue = RoundQueue::new(n, s);
    let mut deferred = Deferred::new(n);
    let mut visit = vec![0u32; n];
    let mut pass = 0u32;
    status[s] = Status::Active;

    loop {
        while let Some(v) = queue.pop() {
            if status[v] == Status::Active {
                if is_zero_indegree(graph, st, v)? {
                    deferred.clear(v);
                    if let Some(c) = scan(graph, st, rec, &mut tree, &mut status, &mut queue, &mut deferred, v)? {
                        return Ok(RunOutcome::NegativeCycle(c));
                    }
                } else {
                    deferred.add(v);
                }
            }
            status[v] = Status::Out;
            if rec.audit {
                rec.check("parent preorder", tree.audit(&st.parent));
            }
        }
        let found = certify(n, &mut deferred, &mut status, &mut queue, &mut visit, &mut pass, |x| {
            for a in graph.in_arcs(x) {
                if st.relax_check(a.tail as usize, x, a.len, CheckKind::Aux)? {
                    return Ok(Some(a.tail as usize));
                }
            }
            Ok(None)
        })?;
        if let Some(c) = found {
            return Ok(RunOutcome::NegativeCycle(c));
        }
        if queue.is_empty() {
            break;
        }
    }
    Ok(RunOutcome::Tree(st.to_tree()))
}

/// True iff no in-arc of `v` is relaxable; stops at the first that is.
fn is_zero_indegree(graph: &Graph, st: &mut LabelState, v: usize) -> Result<bool, Abort> {
    for a in graph.in_arcs(v) {
        if st.relax_check(a.tail as usize, v, a.len, CheckKind::Aux)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
fn scan(
    graph: &Graph,
    st: &mut LabelState,
    rec: &mut Recorder,
    tree: &mut ParentPreorderList,
    status: &mut [Status],
    queue: &mut RoundQueue,
    deferred: &mut Deferred,
    u: usize,
) -> Result<Option<Vec<usize>>, Abort> {
    rec.scan(u, queue.round);
    for a in graph.out_arcs(u) {
        let v = a.head as usize;
        if !st.relax_check(u, v, a.len, CheckKind::Main)? {
            continue;
        }
        let r = tree.relabel(st, u, v, a.len, |x| {
            if status[x] != Status::Out {
                status[x] = Status::Inactive;
            }
        });
        if let Disassembly::NegativeCycle(c) = r {
            return Ok(Some(c));
        }
        deferred.clear(v);
        if status[v] == Status::Out {
            queue.push(v);
        }
        status[v] = Status::Active;
    }
    Ok(None)
}
