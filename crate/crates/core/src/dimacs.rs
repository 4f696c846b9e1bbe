//! DIMACS-style shortest-path text format.
//!
//! ```text
//! c <comment>
//! p sp <n> <m>
//! n <source>
//! a <u> <v> <len>
//! ```
//!
//! Vertices are 1-indexed in the file. The problem line must be the first
//! non-comment line; the source line appears exactly once; exactly `m` arc
//! lines follow in any interleaving with comments. Blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Arc, Graph, GraphError};

pub const DEFAULT_HEADER: &str = "sssp-lab shortest-path instance";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimacsError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("missing `p sp <n> <m>` problem line")]
    MissingProblemLine,
    #[error("missing `n <source>` line")]
    MissingSource,
    #[error("header announces {expected} arcs but {found} were listed")]
    ArcCountMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn malformed(line: usize, reason: impl Into<String>) -> DimacsError {
    DimacsError::Malformed {
        line,
        reason: reason.into(),
    }
}

fn field<T: std::str::FromStr>(
    tok: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T, DimacsError> {
    let tok = tok.ok_or_else(|| malformed(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| malformed(line, format!("invalid {what} `{tok}`")))
}

fn vertex(tok: Option<&str>, line: usize, what: &str, n: usize) -> Result<usize, DimacsError> {
    let v: usize = field(tok, line, what)?;
    if v == 0 || v > n {
        return Err(malformed(line, format!("{what} {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_dimacs(text: &str) -> Result<Graph, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut source: Option<usize> = None;
    let mut arcs: Vec<Arc> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(malformed(line, "duplicate problem line"));
                }
                let kind: String = field(toks.next(), line, "problem kind")?;
                if kind != "sp" {
                    return Err(malformed(line, format!("unsupported problem kind `{kind}`")));
                }
                let n: usize = field(toks.next(), line, "vertex count")?;
                let m: usize = field(toks.next(), line, "arc count")?;
                header = Some((n, m));
                arcs.reserve(m);
            }
            "n" | "a" => {
                let Some((n, _)) = header else {
                    return Err(malformed(line, "directive before problem line"));
                };
                if tag == "n" {
                    if source.is_some() {
                        return Err(malformed(line, "duplicate source line"));
                    }
                    source = Some(vertex(toks.next(), line, "source", n)?);
                } else {
                    let u = vertex(toks.next(), line, "arc tail", n)?;
                    let v = vertex(toks.next(), line, "arc head", n)?;
                    let len: i64 = field(toks.next(), line, "arc length")?;
                    arcs.push(Arc::new(u, v, len));
                }
            }
            other => return Err(malformed(line, format!("unknown directive `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(malformed(line, "trailing tokens"));
        }
    }

    let (n, m) = header.ok_or(DimacsError::MissingProblemLine)?;
    let source = source.ok_or(DimacsError::MissingSource)?;
    if arcs.len() != m {
        return Err(DimacsError::ArcCountMismatch {
            expected: m,
            found: arcs.len(),
        });
    }
    Ok(Graph::new(n, arcs, source)?)
}

/// Canonical text: one comment line, problem line, source line, arcs in
/// insertion order.
pub fn write_dimacs(graph: &Graph) -> String {
    write_dimacs_with_comment(graph, DEFAULT_HEADER)
}

pub fn write_dimacs_with_comment(graph: &Graph, comment: &str) -> String {
    let mut out = String::with_capacity(32 + graph.m() * 24);
    let _ = writeln!(out, "c {comment}");
    let _ = writeln!(out, "p sp {} {}", graph.n(), graph.m());
    let _ = writeln!(out, "n {}", graph.source() + 1);
    for a in graph.arcs() {
        let _ = writeln!(out, "a {} {} {}", a.tail + 1, a.head + 1, a.len);
    }
    out
}
