//! Shared label-correcting machinery.
//!
//! [`LabelState`] owns the potentials and parent pointers of one run and is
//! the single place where relaxation predicates are evaluated and counted.
//! [`ParentPreorderList`] keeps the parent tree in preorder so a relabeled
//! vertex's subtree can be disassembled in time proportional to its size.

use std::time::Instant;

use crate::graph::{is_reached, Distance, Graph, Length, VertexId, VERY_FAR};

pub const NO_VERTEX: VertexId = usize::MAX;

/// Which tally a predicate evaluation is charged to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// Checks that decide what to scan (in-degree tests, bit updates,
    /// admissibility search).
    Aux,
    /// Checks made while scanning a vertex.
    Main,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CheckCounters {
    pub aux: u64,
    pub main: u64,
}

impl CheckCounters {
    pub fn total(&self) -> u64 {
        self.aux + self.main
    }
}

/// Why a run stopped before reaching a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Abort {
    /// The labeling-operation budget ran out: a negative cycle is suspected.
    Budget,
    Timeout,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortestPathTree {
    pub dist: Vec<Distance>,
    pub parent: Vec<Option<VertexId>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunOutcome {
    Tree(ShortestPathTree),
    /// Vertex sequence `v0 -> v1 -> ... -> v0` of a negative cycle.
    NegativeCycle(Vec<VertexId>),
    BudgetExhausted,
    TimedOut,
}

impl RunOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            RunOutcome::Tree(_) => "tree",
            RunOutcome::NegativeCycle(_) => "negcycle",
            RunOutcome::BudgetExhausted => "budget_abort",
            RunOutcome::TimedOut => "timeout",
        }
    }

    pub fn tree(&self) -> Option<&ShortestPathTree> {
        match self {
            RunOutcome::Tree(t) => Some(t),
            _ => None,
        }
    }

    pub fn cycle(&self) -> Option<&[VertexId]> {
        match self {
            RunOutcome::NegativeCycle(c) => Some(c),
            _ => None,
        }
    }
}

/// Default time-out guard: `(n + 1) * m + n` labeling operations.
pub fn default_budget(graph: &Graph) -> u64 {
    let n = graph.n() as u64;
    let m = graph.m() as u64;
    (n + 1).saturating_mul(m).saturating_add(n)
}

/// How many predicate evaluations pass between deadline polls.
const DEADLINE_POLL: u64 = 1 << 16;

#[derive(Clone, Debug)]
pub struct LabelState {
    pub dist: Vec<Distance>,
    pub parent: Vec<VertexId>,
    pub counters: CheckCounters,
    budget: u64,
    deadline: Option<Instant>,
    until_poll: u64,
}

impl LabelState {
    pub fn new(n: usize, source: VertexId, budget: u64, deadline: Option<Instant>) -> Self {
        let mut dist = vec![VERY_FAR; n];
        dist[source] = 0;
        Self {
            dist,
            parent: vec![NO_VERTEX; n],
            counters: CheckCounters::default(),
            budget,
            deadline,
            until_poll: DEADLINE_POLL,
        }
    }

    pub fn remaining_budget(&self) -> u64 {
        self.budget
    }

    #[inline]
    fn tick(&mut self, kind: CheckKind) -> Result<(), Abort> {
        if self.budget == 0 {
            return Err(Abort::Budget);
        }
        self.budget -= 1;
        self.until_poll -= 1;
        if self.until_poll == 0 {
            self.until_poll = DEADLINE_POLL;
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                return Err(Abort::Timeout);
            }
        }
        match kind {
            CheckKind::Aux => self.counters.aux += 1,
            CheckKind::Main => self.counters.main += 1,
        }
        Ok(())
    }

    /// Counted test of `d(u) + len < d(v)`, i.e. negative reduced cost.
    #[inline]
    pub fn relax_check(
        &mut self,
        u: VertexId,
        v: VertexId,
        len: Length,
        kind: CheckKind,
    ) -> Result<bool, Abort> {
        self.tick(kind)?;
        Ok(self.dist[u] + len < self.dist[v])
    }

    /// Counted (auxiliary) test of `d(u) + len <= d(v)`, i.e. the arc is
    /// admissible.
    #[inline]
    pub fn admissible_check(&mut self, u: VertexId, v: VertexId, len: Length) -> Result<bool, Abort> {
        self.tick(CheckKind::Aux)?;
        Ok(self.dist[u] + len <= self.dist[v])
    }

    #[inline]
    pub fn apply_relax(&mut self, u: VertexId, v: VertexId, len: Length) {
        self.dist[v] = self.dist[u] + len;
        self.parent[v] = u;
    }

    /// Follows parent pointers from `u` towards the root. Returns true iff
    /// `v` is met, i.e. relaxing `(u, v)` would close a parent cycle.
    pub fn walk_to_root(&self, u: VertexId, v: VertexId) -> bool {
        let mut x = u;
        for _ in 0..=self.dist.len() {
            if x == v {
                return true;
            }
            if x == NO_VERTEX {
                return false;
            }
            x = self.parent[x];
        }
        false
    }

    /// Tree path `v -> ... -> u`, found by walking parents up from `u`.
    /// Together with the arc `(u, v)` it forms a cycle.
    pub fn tree_path(&self, v: VertexId, u: VertexId) -> Option<Vec<VertexId>> {
        let mut path = Vec::new();
        let mut x = u;
        for _ in 0..self.dist.len() {
            path.push(x);
            if x == v {
                path.reverse();
                return Some(path);
            }
            x = self.parent[x];
            if x == NO_VERTEX {
                return None;
            }
        }
        None
    }

    /// Cycle through `v` in the parent links, in forward-arc order starting
    /// at `v`.
    pub fn extract_cycle(&self, v: VertexId) -> Option<Vec<VertexId>> {
        let mut back = vec![v];
        let mut x = self.parent[v];
        for _ in 0..self.dist.len() {
            if x == NO_VERTEX {
                return None;
            }
            if x == v {
                // `back` runs against the arcs; flip all but the start.
                back[1..].reverse();
                return Some(back);
            }
            back.push(x);
            x = self.parent[x];
        }
        None
    }

    /// Any cycle in the parent graph, found by colouring parent chains.
    pub fn find_parent_cycle(&self) -> Option<Vec<VertexId>> {
        let n = self.dist.len();
        // 0 = unvisited, otherwise the id (+1) of the walk that first saw it.
        let mut mark = vec![0usize; n];
        for start in 0..n {
            if mark[start] != 0 {
                continue;
            }
            let walk = start + 1;
            let mut x = start;
            while x != NO_VERTEX && mark[x] == 0 {
                mark[x] = walk;
                x = self.parent[x];
            }
            if x != NO_VERTEX && mark[x] == walk {
                return self.extract_cycle(x);
            }
        }
        None
    }

    /// Snapshot as a tree outcome. Unreached vertices keep `VERY_FAR` and
    /// get no parent.
    pub fn to_tree(&self) -> ShortestPathTree {
        let parent = self
            .parent
            .iter()
            .zip(&self.dist)
            .map(|(&p, &d)| (p != NO_VERTEX && is_reached(d)).then_some(p))
            .collect();
        ShortestPathTree {
            dist: self.dist.clone(),
            parent,
        }
    }

    /// Outcome for an aborted run: a parent-graph cycle is taken as the
    /// negative-cycle witness when one exists.
    pub fn abort_outcome(&self, abort: Abort) -> RunOutcome {
        match abort {
            Abort::Timeout => RunOutcome::TimedOut,
            Abort::Budget => match self.find_parent_cycle() {
                Some(c) => RunOutcome::NegativeCycle(c),
                None => RunOutcome::BudgetExhausted,
            },
        }
    }
}

/// Result of disassembling the subtree of a relabeled vertex.
#[derive(Debug, PartialEq, Eq)]
pub enum Disassembly {
    Ok,
    /// The tail of the relaxed arc was found in the subtree; carries the
    /// cycle `v -> ... -> u`.
    NegativeCycle(Vec<VertexId>),
}

const NIL: u32 = u32::MAX;

/// Parent tree kept as a doubly linked list in preorder, with a per-vertex
/// counter equal to (number of children) - 1.
#[derive(Clone, Debug)]
pub struct ParentPreorderList {
    next: Vec<u32>,
    prev: Vec<u32>,
    degree: Vec<i32>,
    in_tree: Vec<bool>,
    root: VertexId,
}

impl ParentPreorderList {
    pub fn new(n: usize, root: VertexId) -> Self {
        let mut in_tree = vec![false; n];
        in_tree[root] = true;
        Self {
            next: vec![NIL; n],
            prev: vec![NIL; n],
            degree: vec![-1; n],
            in_tree,
            root,
        }
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.in_tree[v]
    }

    pub fn degree(&self, v: VertexId) -> i32 {
        self.degree[v]
    }

    /// List contents from the root.
    pub fn order(&self) -> Vec<VertexId> {
        let mut out = vec![self.root];
        let mut x = self.next[self.root];
        while x != NIL {
            out.push(x as usize);
            x = self.next[x as usize];
        }
        out
    }

    #[inline]
    fn unlink(&mut self, x: VertexId) {
        let (p, nx) = (self.prev[x], self.next[x]);
        if p != NIL {
            self.next[p as usize] = nx;
        }
        if nx != NIL {
            self.prev[nx as usize] = p;
        }
        self.prev[x] = NIL;
        self.next[x] = NIL;
    }

    /// Inserts `child` right after `parent`, making it the first child.
    #[inline]
    pub fn attach_first_child(&mut self, parent: VertexId, child: VertexId) {
        debug_assert!(self.in_tree[parent] && !self.in_tree[child]);
        let after = self.next[parent];
        self.next[parent] = child as u32;
        self.prev[child] = parent as u32;
        self.next[child] = after;
        if after != NIL {
            self.prev[after as usize] = child as u32;
        }
        self.degree[parent] += 1;
        self.degree[child] = -1;
        self.in_tree[child] = true;
    }

    /// Walks the preorder block after `v` and removes every descendant of
    /// `v`, calling `on_drop` for each. Stops early with the cycle if
    /// `tail` is among them. `v` itself stays in the list.
    pub fn disassemble(
        &mut self,
        state: &LabelState,
        v: VertexId,
        tail: VertexId,
        mut on_drop: impl FnMut(VertexId),
    ) -> Disassembly {
        let mut sum = self.degree[v];
        while sum != -1 {
            let x = self.next[v] as usize;
            if x == tail {
                let cycle = state
                    .tree_path(v, tail)
                    .expect("tail lies in v's subtree");
                return Disassembly::NegativeCycle(cycle);
            }
            sum += self.degree[x];
            self.unlink(x);
            self.in_tree[x] = false;
            self.degree[x] = -1;
            on_drop(x);
        }
        self.degree[v] = -1;
        Disassembly::Ok
    }

    /// Full relabel step for a relaxable arc `(u, v)`: update the label,
    /// disassemble `v`'s old subtree, and re-attach `v` as `u`'s first child.
    pub fn relabel(
        &mut self,
        state: &mut LabelState,
        u: VertexId,
        v: VertexId,
        len: Length,
        on_drop: impl FnMut(VertexId),
    ) -> Disassembly {
        if u == v {
            return Disassembly::NegativeCycle(vec![v]);
        }
        let old_parent = self.in_tree[v].then(|| state.parent[v]);
        state.apply_relax(u, v, len);
        if let Some(old_parent) = old_parent {
            if let Disassembly::NegativeCycle(c) = self.disassemble(state, v, u, on_drop) {
                return Disassembly::NegativeCycle(c);
            }
            if old_parent == NO_VERTEX {
                // Only the root has no parent; relaxing it means its subtree
                // (everything) contained `u`, which was reported above.
                unreachable!("root relabeled without closing a cycle");
            }
            self.unlink(v);
            self.in_tree[v] = false;
            self.degree[old_parent] -= 1;
        }
        self.attach_first_child(u, v);
        Disassembly::Ok
    }

    /// Rebuild-and-compare check: the list is a preorder of the live parent
    /// links, counters equal children - 1, and membership matches the list.
    pub fn audit(&self, parent: &[VertexId]) -> Result<(), String> {
        let n = self.in_tree.len();
        let order = self.order();
        let mut listed = vec![false; n];
        let mut children = vec![0i32; n];
        let mut stack: Vec<VertexId> = Vec::new();
        for (i, &x) in order.iter().enumerate() {
            if listed[x] {
                return Err(format!("vertex {x} listed twice"));
            }
            listed[x] = true;
            if !self.in_tree[x] {
                return Err(format!("vertex {x} listed but not marked in tree"));
            }
            if i > 0 {
                let expect = self.prev[x];
                if expect as usize != order[i - 1] {
                    return Err(format!("prev link of {x} broken"));
                }
                let p = parent[x];
                if p == NO_VERTEX {
                    return Err(format!("non-root {x} has no parent"));
                }
                while stack.last().is_some_and(|&top| top != p) {
                    stack.pop();
                }
                if stack.is_empty() {
                    return Err(format!("vertex {x} does not follow its parent's block"));
                }
                children[p] += 1;
            }
            stack.push(x);
        }
        for v in 0..n {
            if self.in_tree[v] && !listed[v] {
                return Err(format!("vertex {v} marked in tree but not listed"));
            }
            if listed[v] && self.degree[v] != children[v] - 1 {
                return Err(format!(
                    "degree counter of {v} is {} but it has {} children",
                    self.degree[v], children[v]
                ));
            }
        }
        Ok(())
    }
}
