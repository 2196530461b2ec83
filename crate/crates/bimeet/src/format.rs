//! Line-oriented graph files.
//!
//! ```text
//! c any comment
//! p sp <n> <m>
//! e <u> <v> <w>
//! a <u> <v> <w>
//! ```
//!
//! Vertex ids are 1-based and weights are non-negative integers. `a` arcs
//! from DIMACS shortest-path files are read as undirected edges. Self-loops
//! are dropped and parallel edges keep their smallest weight.

use std::fmt::Write as _;
use std::io::BufRead;

use bimeet_core::{BuildStats, Graph, GraphBuilder, GraphError, MAX_EDGE_WEIGHT};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("missing `p sp <n> <m>` header")]
    MissingHeader,
    #[error("second problem line")]
    DuplicateHeader,
    #[error("malformed problem line (expected `p sp <n> <m>`)")]
    MalformedHeader,
    #[error("malformed edge line (expected `e <u> <v> <w>`)")]
    MalformedEdge,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: u64, n: usize },
    #[error("negative weight {0}")]
    NegativeWeight(i64),
    #[error("weight {0} exceeds {MAX_EDGE_WEIGHT}")]
    WeightTooLarge(u64),
    #[error("unknown line type `{0}`")]
    UnknownLine(String),
    #[error("read failed: {0}")]
    Io(String),
}

/// A parsed file and what normalization removed from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// Edge count announced on the problem line.
    pub declared_edges: usize,
    pub stats: BuildStats,
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph, ParseError> {
    read_graph(text.as_bytes())
}

pub fn read_graph<R: BufRead>(reader: R) -> Result<ParsedGraph, ParseError> {
    let mut builder: Option<(GraphBuilder, usize)> = None;
    let mut line_no = 0;
    for line in reader.lines() {
        line_no += 1;
        let err = |kind| ParseError { line: line_no, kind };
        let line = line.map_err(|e| err(ParseErrorKind::Io(e.to_string())))?;
        let mut fields = line.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        match tag {
            "c" => {}
            "p" => {
                if builder.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                let rest: Vec<&str> = fields.collect();
                let [kind, n, m] = rest[..] else {
                    return Err(err(ParseErrorKind::MalformedHeader));
                };
                let (Ok(n), Ok(m)) = (n.parse::<usize>(), m.parse::<usize>()) else {
                    return Err(err(ParseErrorKind::MalformedHeader));
                };
                if kind != "sp" {
                    return Err(err(ParseErrorKind::MalformedHeader));
                }
                builder = Some((GraphBuilder::new(n), m));
            }
            "e" | "a" => {
                let Some((b, _)) = builder.as_mut() else {
                    return Err(err(ParseErrorKind::MissingHeader));
                };
                let rest: Vec<&str> = fields.collect();
                let [u, v, w] = rest[..] else {
                    return Err(err(ParseErrorKind::MalformedEdge));
                };
                let (Ok(u), Ok(v), Ok(w)) = (u.parse::<u64>(), v.parse::<u64>(), w.parse::<i64>())
                else {
                    return Err(err(ParseErrorKind::MalformedEdge));
                };
                if w < 0 {
                    return Err(err(ParseErrorKind::NegativeWeight(w)));
                }
                let n = b.vertex_count();
                for x in [u, v] {
                    if x == 0 || x > n as u64 {
                        return Err(err(ParseErrorKind::VertexOutOfRange { vertex: x, n }));
                    }
                }
                b.add_edge(u as usize - 1, v as usize - 1, w as u64).map_err(|e| match e {
                    GraphError::WeightTooLarge { weight } => err(ParseErrorKind::WeightTooLarge(weight)),
                    GraphError::VertexOutOfRange { vertex, n } => {
                        err(ParseErrorKind::VertexOutOfRange { vertex: vertex as u64 + 1, n })
                    }
                })?;
            }
            other => return Err(err(ParseErrorKind::UnknownLine(other.to_string()))),
        }
    }
    let Some((b, declared_edges)) = builder else {
        return Err(ParseError { line: line_no.max(1), kind: ParseErrorKind::MissingHeader });
    };
    let stats = b.stats();
    Ok(ParsedGraph { graph: b.build(), declared_edges, stats })
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 24 * g.edge_count());
    writeln!(out, "p sp {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v, w) in g.edges() {
        writeln!(out, "e {} {} {}", u + 1, v + 1, w).unwrap();
    }
    out
}
