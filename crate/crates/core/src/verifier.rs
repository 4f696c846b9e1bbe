//! Textbook Bellman-Ford oracle and outcome checkers. Nothing here touches
//! the queues, parent lists or counters used by the drivers.

use crate::graph::{is_reached, Graph, VertexId, VERY_FAR};
use crate::labeling::{RunOutcome, ShortestPathTree};

/// `n - 1` full passes over the arc list, then one detection pass.
pub fn oracle_bellman_ford(graph: &Graph) -> RunOutcome {
    let n = graph.n();
    // `None` is a true infinity here, independent of the drivers' sentinel.
    let mut dist: Vec<Option<i64>> = vec![None; n];
    let mut parent: Vec<Option<VertexId>> = vec![None; n];
    dist[graph.source()] = Some(0);
    for _ in 1..n {
        let mut changed = false;
        for a in graph.arcs() {
            if let Some(du) = dist[a.tail] {
                let cand = du + a.len;
                if dist[a.head].map_or(true, |dv| cand < dv) {
                    dist[a.head] = Some(cand);
                    parent[a.head] = Some(a.tail);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    for a in graph.arcs() {
        if let (Some(du), Some(dv)) = (dist[a.tail], dist[a.head]) {
            if du + a.len < dv {
                parent[a.head] = Some(a.tail);
                // Walking n steps back lands on the cycle.
                let mut x = a.head;
                for _ in 0..n {
                    x = parent[x].expect("relaxed vertices have parents");
                }
                let mut back = vec![x];
                let mut y = parent[x].expect("on cycle");
                while y != x {
                    back.push(y);
                    y = parent[y].expect("on cycle");
                }
                back[1..].reverse();
                return RunOutcome::NegativeCycle(back);
            }
        }
    }
    let mut tree_parent = parent;
    tree_parent[graph.source()] = None;
    RunOutcome::Tree(ShortestPathTree {
        dist: dist.into_iter().map(|d| d.unwrap_or(VERY_FAR)).collect(),
        parent: tree_parent,
    })
}

/// One failed clause of [`verify_tree`], with 0-indexed witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeViolation {
    SourceNotZero(i64),
    /// An arc that can still be relaxed.
    Relaxable { tail: VertexId, head: VertexId },
    /// `d(v) != d(p(v)) + l(p(v), v)` for every parallel arc.
    ParentMismatch { vertex: VertexId, parent: VertexId },
    /// Parent chain that loops or ends anywhere but the source.
    BadParentChain(VertexId),
    /// Reached vertex without a parent, or unreached vertex with one.
    Reachability(VertexId),
    WrongLength,
}

pub fn verify_tree(graph: &Graph, tree: &ShortestPathTree) -> Result<(), Vec<TreeViolation>> {
    let n = graph.n();
    let s = graph.source();
    if tree.dist.len() != n || tree.parent.len() != n {
        return Err(vec![TreeViolation::WrongLength]);
    }
    let d = &tree.dist;
    let mut out = Vec::new();
    if d[s] != 0 {
        out.push(TreeViolation::SourceNotZero(d[s]));
    }
    for a in graph.arcs() {
        if is_reached(d[a.tail]) && d[a.tail] + a.len < d[a.head] {
            out.push(TreeViolation::Relaxable {
                tail: a.tail,
                head: a.head,
            });
        }
    }
    for v in 0..n {
        match tree.parent[v] {
            Some(p) => {
                if v == s || !is_reached(d[v]) || p >= n {
                    out.push(TreeViolation::Reachability(v));
                    continue;
                }
                let fits = graph
                    .out_arcs(p)
                    .iter()
                    .any(|a| a.head as usize == v && d[p] + a.len == d[v]);
                if !fits {
                    out.push(TreeViolation::ParentMismatch { vertex: v, parent: p });
                }
            }
            None => {
                if v != s && is_reached(d[v]) {
                    out.push(TreeViolation::Reachability(v));
                }
            }
        }
    }
    // Every chain must reach the source within n steps.
    for v in 0..n {
        let mut x = v;
        let mut ok = false;
        for _ in 0..=n {
            if x == s {
                ok = true;
                break;
            }
            match tree.parent[x] {
                Some(p) if p < n => x = p,
                _ => {
                    ok = !is_reached(d[v]);
                    break;
                }
            }
        }
        if !ok {
            out.push(TreeViolation::BadParentChain(v));
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleViolation {
    Empty,
    MissingArc { tail: VertexId, head: VertexId },
    NotNegative(i64),
}

/// Checks that consecutive vertices (wrapping around) are joined by arcs
/// and that the cycle, using the shortest parallel arcs, is negative.
/// Returns the total length.
pub fn verify_cycle(graph: &Graph, cycle: &[VertexId]) -> Result<i64, CycleViolation> {
    if cycle.is_empty() {
        return Err(CycleViolation::Empty);
    }
    let mut total = 0i64;
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        if u >= graph.n() || v >= graph.n() {
            return Err(CycleViolation::MissingArc { tail: u, head: v });
        }
        let len = graph
            .min_arc_len(u, v)
            .ok_or(CycleViolation::MissingArc { tail: u, head: v })?;
        total += len;
    }
    if total < 0 {
        Ok(total)
    } else {
        Err(CycleViolation::NotNegative(total))
    }
}

/// Checks any outcome: trees are verified, cycles are verified, aborts fail.
pub fn verify_outcome(graph: &Graph, outcome: &RunOutcome) -> Result<(), String> {
    match outcome {
        RunOutcome::Tree(t) => verify_tree(graph, t).map_err(|v| format!("{v:?}")),
        RunOutcome::NegativeCycle(c) => verify_cycle(graph, c).map(|_| ()).map_err(|v| format!("{v:?}")),
        RunOutcome::BudgetExhausted => Err("budget exhausted without a witness".into()),
        RunOutcome::TimedOut => Err("timed out".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1() -> Graph {
        Graph::from_one_based(
            4,
            &[(1, 2, 1), (1, 3, 4), (2, 3, -2), (3, 4, 1), (2, 4, 5)],
            1,
        )
        .unwrap()
    }

    fn g2() -> Graph {
        Graph::from_one_based(3, &[(1, 2, 1), (2, 3, -1), (3, 2, -1)], 1).unwrap()
    }

    /// Enumerates simple paths from vertex 1 to `t` on a tiny graph.
    fn brute_force(g: &Graph, t: usize) -> Option<i64> {
        fn go(g: &Graph, v: usize, t: usize, seen: &mut Vec<bool>, acc: i64, best: &mut Option<i64>) {
            if v == t {
                *best = Some(best.map_or(acc, |b| b.min(acc)));
                return;
            }
            for a in g.out_arcs(v) {
                let w = a.head as usize;
                if !seen[w] {
                    seen[w] = true;
                    go(g, w, t, seen, acc + a.len, best);
                    seen[w] = false;
                }
            }
        }
        let mut seen = vec![false; g.n()];
        seen[g.source()] = true;
        let mut best = None;
        go(g, g.source(), t, &mut seen, 0, &mut best);
        best
    }

    #[test]
    fn oracle_g1_matches_path_enumeration() {
        let g = g1();
        let t = oracle_bellman_ford(&g);
        let t = t.tree().unwrap();
        assert_eq!(t.dist, vec![0, 1, -1, 0]);
        for v in 0..4 {
            assert_eq!(Some(t.dist[v]), brute_force(&g, v));
        }
        verify_tree(&g, t).unwrap();
    }

    #[test]
    fn oracle_g2_cycle() {
        let g = g2();
        let c = oracle_bellman_ford(&g);
        let c = c.cycle().unwrap();
        assert_eq!(verify_cycle(&g, c), Ok(-2));
        let mut sorted = c.to_vec();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2]);
    }

    #[test]
    fn unreachable_vertex() {
        let g = Graph::from_one_based(3, &[(1, 2, 3), (3, 2, -1)], 1).unwrap();
        let t = oracle_bellman_ford(&g);
        let t = t.tree().unwrap();
        assert_eq!(t.dist[2], VERY_FAR);
        assert!(!is_reached(t.dist[2]));
        verify_tree(&g, t).unwrap();
    }

    #[test]
    fn tampered_tree_is_rejected() {
        let g = g1();
        let mut t = oracle_bellman_ford(&g).tree().unwrap().clone();
        t.dist[2] += 1;
        let errs = verify_tree(&g, &t).unwrap_err();
        assert!(errs.contains(&TreeViolation::Relaxable { tail: 1, head: 2 }));
    }

    #[test]
    fn single_vertex_tree() {
        let g = Graph::from_one_based(1, &[], 1).unwrap();
        let t = ShortestPathTree {
            dist: vec![0],
            parent: vec![None],
        };
        verify_tree(&g, &t).unwrap();
    }

    #[test]
    fn cycle_checks() {
        assert_eq!(verify_cycle(&g2(), &[1, 2]), Ok(-2));
        assert_eq!(
            verify_cycle(&g1(), &[0, 1]),
            Err(CycleViolation::MissingArc { tail: 1, head: 0 })
        );
        let g = Graph::from_one_based(1, &[(1, 1, -5)], 1).unwrap();
        assert_eq!(verify_cycle(&g, &[0]), Ok(-5));
        let g = Graph::from_one_based(2, &[(1, 2, 1), (2, 1, -1)], 1).unwrap();
        assert_eq!(verify_cycle(&g, &[0, 1]), Err(CycleViolation::NotNegative(0)));
        assert_eq!(verify_cycle(&g, &[]), Err(CycleViolation::Empty));
    }

    #[test]
    fn parent_cycle_is_rejected() {
        let g = Graph::from_one_based(3, &[(1, 2, 0), (2, 3, 0), (3, 2, 0)], 1).unwrap();
        let t = ShortestPathTree {
            dist: vec![0, 0, 0],
            parent: vec![None, Some(2), Some(1)],
        };
        let errs = verify_tree(&g, &t).unwrap_err();
        assert!(errs.contains(&TreeViolation::BadParentChain(1)));
    }
}
