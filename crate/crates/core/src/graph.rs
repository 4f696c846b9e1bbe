//! Immutable directed graph with forward and reverse adjacency.
//!
//! Both adjacency arrays are laid out CSR-style. Every arc appears once in
//! its tail's forward list and once in its head's reverse list, and each
//! entry records the arc's slot in the other list, so code walking in-arcs
//! can reach the matching out-arc slot in O(1) and vice versa.

use thiserror::Error;

/// Internal, 0-indexed vertex id. DIMACS files and CLI output are 1-indexed.
pub type VertexId = usize;
pub type Length = i64;
pub type Distance = i64;

/// Finite "infinity" for unreached vertices. Any real distance satisfies
/// `|d| < VERY_FAR / 2`, and `VERY_FAR + l` cannot overflow for a valid graph.
pub const VERY_FAR: Distance = 1 << 60;

/// Distances at or above this bound mean "unreached".
pub const UNREACHED_BOUND: Distance = VERY_FAR / 2;

#[inline]
pub fn is_reached(d: Distance) -> bool {
    d < UNREACHED_BOUND
}

/// An arc as given by the caller, in insertion order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
    pub len: Length,
}

impl Arc {
    pub fn new(tail: VertexId, head: VertexId, len: Length) -> Self {
        Self { tail, head, len }
    }
}

/// Entry of a forward (outgoing) adjacency list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OutArc {
    pub head: u32,
    /// Position of this arc inside `in_arcs(head)`.
    pub rev_pos: u32,
    pub len: Length,
}

/// Entry of a reverse (incoming) adjacency list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InArc {
    pub tail: u32,
    /// Position of this arc inside `out_arcs(tail)`.
    pub fwd_pos: u32,
    pub len: Length,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph needs at least one vertex")]
    NoVertices,
    #[error("vertex count {0} exceeds the supported maximum")]
    TooManyVertices(usize),
    #[error("source {vertex} out of range for {n} vertices")]
    SourceOutOfRange { vertex: VertexId, n: usize },
    #[error("arc #{index} ({tail} -> {head}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange {
        index: usize,
        tail: VertexId,
        head: VertexId,
        n: usize,
    },
    #[error("n * (max |length| + 1) = {n} * {bound} does not fit below VERY_FAR / 2")]
    LengthOverflow { n: usize, bound: u128 },
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    source: VertexId,
    arcs: Vec<Arc>,
    fwd_start: Vec<usize>,
    fwd: Vec<OutArc>,
    rev_start: Vec<usize>,
    rev: Vec<InArc>,
    max_abs_len: u64,
}

impl Graph {
    /// Builds a graph from 0-indexed arcs. Forward and reverse lists keep
    /// the relative insertion order of the arcs.
    pub fn new(n: usize, arcs: Vec<Arc>, source: VertexId) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n >= u32::MAX as usize {
            return Err(GraphError::TooManyVertices(n));
        }
        if source >= n {
            return Err(GraphError::SourceOutOfRange { vertex: source, n });
        }
        let mut max_abs_len = 0u64;
        for (index, a) in arcs.iter().enumerate() {
            if a.tail >= n || a.head >= n {
                return Err(GraphError::EndpointOutOfRange {
                    index,
                    tail: a.tail,
                    head: a.head,
                    n,
                });
            }
            max_abs_len = max_abs_len.max(a.len.unsigned_abs());
        }
        let bound = max_abs_len as u128 + 1;
        if (n as u128) * bound >= UNREACHED_BOUND as u128 {
            return Err(GraphError::LengthOverflow { n, bound });
        }

        let mut fwd_start = vec![0usize; n + 1];
        let mut rev_start = vec![0usize; n + 1];
        for a in &arcs {
            fwd_start[a.tail + 1] += 1;
            rev_start[a.head + 1] += 1;
        }
        for v in 0..n {
            fwd_start[v + 1] += fwd_start[v];
            rev_start[v + 1] += rev_start[v];
        }
        let m = arcs.len();
        let placeholder_out = OutArc {
            head: 0,
            rev_pos: 0,
            len: 0,
        };
        let placeholder_in = InArc {
            tail: 0,
            fwd_pos: 0,
            len: 0,
        };
        let mut fwd = vec![placeholder_out; m];
        let mut rev = vec![placeholder_in; m];
        let mut fwd_fill = vec![0u32; n];
        let mut rev_fill = vec![0u32; n];
        for a in &arcs {
            let fpos = fwd_fill[a.tail];
            let rpos = rev_fill[a.head];
            fwd_fill[a.tail] += 1;
            rev_fill[a.head] += 1;
            fwd[fwd_start[a.tail] + fpos as usize] = OutArc {
                head: a.head as u32,
                rev_pos: rpos,
                len: a.len,
            };
            rev[rev_start[a.head] + rpos as usize] = InArc {
                tail: a.tail as u32,
                fwd_pos: fpos,
                len: a.len,
            };
        }

        Ok(Self {
            n,
            source,
            arcs,
            fwd_start,
            fwd,
            rev_start,
            rev,
            max_abs_len,
        })
    }

    /// Builds a graph from 1-indexed `(tail, head, length)` triples, the
    /// convention used by DIMACS files.
    pub fn from_one_based(
        n: usize,
        arcs: &[(usize, usize, Length)],
        source: usize,
    ) -> Result<Self, GraphError> {
        let converted = arcs
            .iter()
            .map(|&(u, v, l)| Arc::new(u.wrapping_sub(1), v.wrapping_sub(1), l))
            .collect();
        Self::new(n, converted, source.wrapping_sub(1))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    #[inline]
    pub fn source(&self) -> VertexId {
        self.source
    }

    /// All arcs in insertion order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn max_abs_len(&self) -> u64 {
        self.max_abs_len
    }

    #[inline]
    pub fn out_arcs(&self, v: VertexId) -> &[OutArc] {
        &self.fwd[self.fwd_start[v]..self.fwd_start[v + 1]]
    }

    #[inline]
    pub fn in_arcs(&self, v: VertexId) -> &[InArc] {
        &self.rev[self.rev_start[v]..self.rev_start[v + 1]]
    }

    #[inline]
    pub fn out_degree(&self, v: VertexId) -> usize {
        self.fwd_start[v + 1] - self.fwd_start[v]
    }

    #[inline]
    pub fn in_degree(&self, v: VertexId) -> usize {
        self.rev_start[v + 1] - self.rev_start[v]
    }

    /// Shortest parallel arc `tail -> head`, if any.
    pub fn min_arc_len(&self, tail: VertexId, head: VertexId) -> Option<Length> {
        self.out_arcs(tail)
            .iter()
            .filter(|a| a.head as usize == head)
            .map(|a| a.len)
            .min()
    }

    /// Same topology with every length replaced by `l + p(tail) - p(head)`.
    pub fn reweighted(&self, potential: &[i64]) -> Result<Self, GraphError> {
        assert_eq!(potential.len(), self.n, "one potential per vertex");
        let arcs = self
            .arcs
            .iter()
            .map(|a| Arc::new(a.tail, a.head, a.len + potential[a.tail] - potential[a.head]))
            .collect();
        Self::new(self.n, arcs, self.source)
    }

    /// Vertices reachable from the source, by plain graph search.
    pub fn reachable_from_source(&self) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![self.source];
        seen[self.source] = true;
        while let Some(u) = stack.pop() {
            for a in self.out_arcs(u) {
                let v = a.head as usize;
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}
