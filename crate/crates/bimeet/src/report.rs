//! JSON shapes written by the command-line tool. Vertex ids are 1-based.

use bimeet_core::generators::GenParams;
use bimeet_core::oracles::{ConstraintReport, Verdict};
use bimeet_core::{OpCounters, Query, SearchResult, Weight};
use serde::Serialize;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CountersJson {
    pub edge_scans: u64,
    pub relaxations: u64,
    pub enqueues: u64,
    pub dequeues: u64,
    pub levels_a: u64,
    pub levels_b: u64,
}

impl From<&OpCounters> for CountersJson {
    fn from(c: &OpCounters) -> Self {
        CountersJson {
            edge_scans: c.edge_scans,
            relaxations: c.relaxations,
            enqueues: c.enqueues,
            dequeues: c.dequeues,
            levels_a: c.levels_a,
            levels_b: c.levels_b,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SearchResultJson {
    pub status: &'static str,
    pub cost: Option<Weight>,
    pub path: Option<Vec<usize>>,
    pub counters: CountersJson,
}

impl From<&SearchResult> for SearchResultJson {
    fn from(r: &SearchResult) -> Self {
        SearchResultJson {
            status: r.status.as_str(),
            cost: r.cost,
            path: r.path.as_ref().map(|p| p.iter().map(|v| v + 1).collect()),
            counters: (&r.counters).into(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WitnessJson {
    pub w: usize,
    pub cheap_cost: Weight,
    pub kmin: u32,
    pub k: u32,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConstraintReportJson {
    pub verdict: &'static str,
    pub witness: Option<WitnessJson>,
}

impl From<&ConstraintReport> for ConstraintReportJson {
    fn from(r: &ConstraintReport) -> Self {
        ConstraintReportJson {
            verdict: r.verdict.as_str(),
            witness: r.witness.map(|w| WitnessJson {
                w: w.w + 1,
                cheap_cost: w.cheap_cost,
                kmin: w.kmin,
                k: w.k,
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct QueryJson {
    pub s: usize,
    pub t: usize,
}

impl From<Query> for QueryJson {
    fn from(q: Query) -> Self {
        QueryJson { s: q.source + 1, t: q.target + 1 }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ParamsJson {
    pub kind: &'static str,
    pub n: usize,
    pub density: f64,
    pub wmin: Weight,
    pub wmax: Weight,
    pub seed: u64,
}

impl From<&GenParams> for ParamsJson {
    fn from(p: &GenParams) -> Self {
        ParamsJson {
            kind: p.kind.as_str(),
            n: p.n,
            density: p.density,
            wmin: p.weight_lo,
            wmax: p.weight_hi,
            seed: p.seed,
        }
    }
}

/// Sidecar written next to a generated graph file.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Sidecar {
    pub params: ParamsJson,
    pub query: QueryJson,
    pub expected_verdict: &'static str,
}

impl Sidecar {
    pub fn new(params: &GenParams, query: Query, verdict: Verdict) -> Self {
        Sidecar { params: params.into(), query: query.into(), expected_verdict: verdict.as_str() }
    }
}
