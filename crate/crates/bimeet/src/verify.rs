//! Cross-check of the two-front search against Dijkstra on one query.

use bimeet_core::oracles::{check_constraint, dijkstra, ConstraintReport, Verdict};
use bimeet_core::{solve, Graph, Query, SearchResult, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diff {
    Match,
    /// OK or UNREACHABLE with a different answer than Dijkstra.
    Mismatch,
    /// WRONG_GRAPH on an instance the checker marks VIOLATED.
    WrongGraphDetected,
    /// WRONG_GRAPH on an instance the checker marks SATISFIED.
    WrongGraphOnAdmissible,
}

impl Diff {
    pub fn as_str(self) -> &'static str {
        match self {
            Diff::Match => "match",
            Diff::Mismatch => "mismatch",
            Diff::WrongGraphDetected => "wrong_graph_detected",
            Diff::WrongGraphOnAdmissible => "wrong_graph_on_admissible",
        }
    }

    pub fn is_acceptable(self) -> bool {
        matches!(self, Diff::Match | Diff::WrongGraphDetected)
    }
}

#[derive(Debug, Clone)]
pub struct Verification {
    pub diff: Diff,
    pub ours: SearchResult,
    pub reference: SearchResult,
    pub constraint: ConstraintReport,
}

pub fn verify(g: &Graph, q: Query) -> Verification {
    let ours = solve(g, q);
    let reference = dijkstra(g, q);
    let constraint = check_constraint(g, q);
    let diff = match ours.status {
        Status::WrongGraph if constraint.verdict == Verdict::Violated => Diff::WrongGraphDetected,
        Status::WrongGraph => Diff::WrongGraphOnAdmissible,
        s if s == reference.status && ours.cost == reference.cost => Diff::Match,
        _ => Diff::Mismatch,
    };
    Verification { diff, ours, reference, constraint }
}
