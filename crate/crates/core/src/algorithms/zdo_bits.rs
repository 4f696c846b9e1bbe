//! ZDO with per-arc candidacy bits. Each arc has one bit in its tail's
//! `out_bits` and one in its head's `in_bits`; a zero bit guarantees the
//! arc is not relaxable, so only set bits are ever checked.

use crate::bitvec::BitVec;
use crate::graph::{is_reached, Graph};
use crate::labeling::{Abort, CheckKind, Disassembly, LabelState, ParentPreorderList, RunOutcome};

use super::zdo::{certify, Deferred, RoundQueue, Status};
use super::Recorder;

struct Bits {
    out_bits: Vec<BitVec>,
    in_bits: Vec<BitVec>,
}

impl Bits {
    fn new(graph: &Graph) -> Self {
        let n = graph.n();
        let mut out_bits: Vec<BitVec> = (0..n).map(|v| BitVec::zeros(graph.out_degree(v))).collect();
        let in_bits = (0..n).map(|v| BitVec::zeros(graph.in_degree(v))).collect();
        let s = graph.source();
        out_bits[s] = BitVec::ones(graph.out_degree(s));
        Self { out_bits, in_bits }
    }

    /// Zero-bit soundness: no reached tail hides a relaxable arc behind a
    /// zero bit on either side.
    fn audit(&self, graph: &Graph, st: &LabelState) -> Result<(), String> {
        for u in 0..graph.n() {
            if !is_reached(st.dist[u]) {
                continue;
            }
            for (j, a) in graph.out_arcs(u).iter().enumerate() {
                let v = a.head as usize;
                if st.dist[u] + a.len < st.dist[v]
                    && !(self.out_bits[u].get(j) && self.in_bits[v].get(a.rev_pos as usize))
                {
                    return Err(format!("relaxable arc ({u}, {v}) has a zero candidacy bit"));
                }
            }
        }
        Ok(())
    }
}

pub(super) fn run(graph: &Graph, st: &mut LabelState, rec: &mut Recorder) -> Result<RunOutcome, Abort> {
    let n = graph.n();
    let s = graph.source();
    let mut status = vec![Status::Out; n];
    let mut tree = ParentPreorderList::new(n, s);
    let mut queue = RoundQueue::new(n, s);
    let mut deferred = Deferred::new(n);
    let mut bits = Bits::new(graph);
    let mut visit = vec![0u32; n];
    let mut pass = 0u32;
    status[s] = Status::Active;

    loop {
        while let Some(v) = queue.pop() {
            if status[v] == Status::Active {
                if is_zero_indegree_bits(graph, st, &mut bits, v)? {
                    deferred.clear(v);
                    let cycle = scan_bits(
                        graph,
                        st,
                        rec,
                        &mut tree,
                        &mut bits,
                        &mut status,
                        &mut queue,
                        &mut deferred,
                        v,
                    )?;
                    if let Some(c) = cycle {
                        return Ok(RunOutcome::NegativeCycle(c));
                    }
                } else {
                    deferred.add(v);
                }
            }
            status[v] = Status::Out;
            if rec.audit {
                rec.check("parent preorder", tree.audit(&st.parent));
                // The source's initial out-bits have no partner in-bits
                // until its first scan.
                if rec.scans > 0 {
                    rec.check("candidacy bits", bits.audit(graph, st));
                }
            }
        }
        let found = certify(n, &mut deferred, &mut status, &mut queue, &mut visit, &mut pass, |x| {
            let ins = graph.in_arcs(x);
            let mut j = bits.in_bits[x].ffs();
            while let Some(pos) = j {
                let a = ins[pos];
                if st.relax_check(a.tail as usize, x, a.len, CheckKind::Aux)? {
                    return Ok(Some(a.tail as usize));
                }
                j = next_set(&bits.in_bits[x], pos + 1);
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

/// Smallest set position `>= from`.
fn next_set(v: &BitVec, from: usize) -> Option<usize> {
    if from >= v.len() {
        return None;
    }
    let w = from / 64;
    let first = v.words()[w] & (u64::MAX << (from % 64));
    if first != 0 {
        return Some(w * 64 + first.trailing_zeros() as usize);
    }
    v.ffs_from_word(w + 1)
}

/// Checks the set in-bits of `v` in position order. A non-relaxable arc
/// loses its bits on both sides; the first relaxable one ends the test.
fn is_zero_indegree_bits(
    graph: &Graph,
    st: &mut LabelState,
    bits: &mut Bits,
    v: usize,
) -> Result<bool, Abort> {
    let ins = graph.in_arcs(v);
    let mut cursor = 0;
    while let Some(pos) = bits.in_bits[v].ffs_from_word(cursor) {
        cursor = pos / 64;
        let a = ins[pos];
        let u = a.tail as usize;
        if st.relax_check(u, v, a.len, CheckKind::Aux)? {
            return Ok(false);
        }
        bits.in_bits[v].clear_unchecked(pos);
        bits.out_bits[u].clear_unchecked(a.fwd_pos as usize);
    }
    Ok(true)
}

/// Re-examines the arcs of `u` whose bits are zero after `d(u)` dropped and
/// raises the bits of those that became relaxable.
fn update_bit_vectors(
    graph: &Graph,
    st: &mut LabelState,
    bits: &mut Bits,
    status: &mut [Status],
    u: usize,
) -> Result<(), Abort> {
    let outs = graph.out_arcs(u);
    for w in 0..bits.out_bits[u].words().len() {
        let mut zeros = bits.out_bits[u].complement_word(w);
        while zeros != 0 {
            let j = w * 64 + zeros.trailing_zeros() as usize;
            zeros &= zeros - 1;
            let a = outs[j];
            let v = a.head as usize;
            if st.relax_check(u, v, a.len, CheckKind::Aux)? {
                bits.out_bits[u].set_unchecked(j);
                bits.in_bits[v].set_unchecked(a.rev_pos as usize);
                // A negative self-loop must not switch off its own vertex.
                if status[v] != Status::Out && v != u {
                    status[v] = Status::Inactive;
                }
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn scan_bits(
    graph: &Graph,
    st: &mut LabelState,
    rec: &mut Recorder,
    tree: &mut ParentPreorderList,
    bits: &mut Bits,
    status: &mut [Status],
    queue: &mut RoundQueue,
    deferred: &mut Deferred,
    u: usize,
) -> Result<Option<Vec<usize>>, Abort> {
    rec.scan(u, queue.round);
    let outs = graph.out_arcs(u);
    let mut cursor = 0;
    while let Some(j) = bits.out_bits[u].ffs_from_word(cursor) {
        cursor = j / 64;
        let a = outs[j];
        let v = a.head as usize;
        bits.out_bits[u].clear_unchecked(j);
        bits.in_bits[v].clear_unchecked(a.rev_pos as usize);
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
        update_bit_vectors(graph, st, bits, status, v)?;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::super::{run, AlgoId, RunOptions};
    use super::*;

    fn state(n: usize) -> LabelState {
        LabelState::new(n, 0, u64::MAX, None)
    }

    #[test]
    fn empty_in_bits_cost_nothing() {
        let g = g1();
        let mut st = state(4);
        let mut bits = Bits::new(&g);
        assert!(is_zero_indegree_bits(&g, &mut st, &mut bits, 2).unwrap());
        assert_eq!(st.counters.aux, 0);
    }

    #[test]
    fn non_relaxable_in_arc_loses_both_bits() {
        let g = g1();
        let mut st = state(4);
        st.dist[1] = 1;
        st.dist[2] = -1;
        let mut bits = Bits::new(&g);
        // arc (2,3) is in-arc 1 of vertex 3 and out-arc 0 of vertex 2.
        bits.in_bits[2].set(1).unwrap();
        bits.out_bits[1].set(0).unwrap();
        assert!(is_zero_indegree_bits(&g, &mut st, &mut bits, 2).unwrap());
        assert_eq!(st.counters.aux, 1);
        assert!(bits.in_bits[2].is_zero() && !bits.out_bits[1].get(0));
    }

    #[test]
    fn relaxable_in_arc_keeps_its_bits() {
        let g = g1();
        let mut st = state(4);
        st.dist[1] = 1;
        st.dist[2] = 4;
        let mut bits = Bits::new(&g);
        // in-arc 0 of 3 is (1,3,4): tie, not relaxable. in-arc 1 is (2,3,-2): relaxable.
        bits.in_bits[2].fill_ones(2).unwrap();
        bits.out_bits[0].set(1).unwrap();
        bits.out_bits[1].set(0).unwrap();
        assert!(!is_zero_indegree_bits(&g, &mut st, &mut bits, 2).unwrap());
        assert_eq!(st.counters.aux, 2);
        assert!(!bits.in_bits[2].get(0) && !bits.out_bits[0].get(1));
        assert!(bits.in_bits[2].get(1) && bits.out_bits[1].get(0));
    }

    #[test]
    fn update_checks_only_zero_bits() {
        let g = g1();
        let mut st = state(4);
        let mut bits = Bits::new(&g);
        let mut status = vec![Status::Out; 4];
        update_bit_vectors(&g, &mut st, &mut bits, &mut status, 0).unwrap();
        assert_eq!(st.counters.aux, 0);

        // Vertex 2 (index 1): out-arcs (2,3,-2), (2,4,5).
        st.dist = vec![0, 1, 4, 100];
        status[2] = crate::algorithms::zdo::Status::Active;
        update_bit_vectors(&g, &mut st, &mut bits, &mut status, 1).unwrap();
        assert_eq!(st.counters.aux, 2);
        assert!(bits.out_bits[1].get(0) && bits.in_bits[2].get(1));
        assert!(bits.out_bits[1].get(1) && bits.in_bits[3].get(1));
        assert_eq!(status[2], Status::Inactive);
        assert_eq!(status[3], Status::Out);

        st.dist = vec![0, 1, -1, 100];
        bits.out_bits[1].clear(0).unwrap();
        bits.in_bits[2].clear(1).unwrap();
        update_bit_vectors(&g, &mut st, &mut bits, &mut status, 1).unwrap();
        assert_eq!(st.counters.aux, 3);
        assert!(!bits.out_bits[1].get(0));
    }

    #[test]
    fn main_checks_never_exceed_zdo() {
        let r = run(&g1(), AlgoId::ZdoBits, &RunOptions::default());
        let z = run(&g1(), AlgoId::Zdo, &RunOptions::default());
        assert_eq!(r.outcome, z.outcome);
        assert!(r.counters.main <= z.counters.main);
    }
}
