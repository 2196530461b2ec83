//! Edge-scan and wall-time benchmarks across generator families.
//!
//! Counters come from one untimed run per (instance, algorithm); wall time
//! is the median of separate timed runs, so timing never touches the
//! counters. Instances run on the rayon pool; output order is instance
//! order, then algorithm order.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use bimeet_core::generators::{generate, GenError, GenKind, GenParams};
use bimeet_core::oracles::{bfs, check_constraint, dijkstra, Verdict};
use bimeet_core::{solve, solve_unweighted, Graph, Query, SearchResult, Status, Weight};
use rayon::prelude::*;
use thiserror::Error;

use crate::format::write_graph;

pub const CSV_HEADER: &str =
    "instance,kind,n,m,algo,status,cost,edge_scans,relaxations,wall_us,scan_ratio";

/// Edge scans per edge claimed for the two-front search.
pub const CLAIMED_SCAN_RATIO: f64 = 2.0;
/// Hard ceiling on edge scans per edge.
pub const SCAN_RATIO_LIMIT: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algo {
    Bimeet,
    Dijkstra,
    Bfs,
    Unweighted,
}

impl Algo {
    pub const ALL: [Algo; 4] = [Algo::Bimeet, Algo::Dijkstra, Algo::Bfs, Algo::Unweighted];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Bimeet => "bimeet",
            Algo::Dijkstra => "dijkstra",
            Algo::Bfs => "bfs",
            Algo::Unweighted => "unweighted",
        }
    }

    pub fn run(self, g: &Graph, q: Query) -> SearchResult {
        match self {
            Algo::Bimeet => solve(g, q),
            Algo::Dijkstra => dijkstra(g, q),
            Algo::Bfs => bfs(g, q),
            Algo::Unweighted => solve_unweighted(g, q),
        }
    }

    /// Hop-count algorithms answer a different question than weighted ones.
    pub fn counts_hops(self) -> bool {
        matches!(self, Algo::Bfs | Algo::Unweighted)
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown algorithm `{s}` (expected bimeet, dijkstra, bfs or unweighted)"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub instance: String,
    pub kind: GenKind,
    pub n: usize,
    pub m: usize,
    pub algo: Algo,
    pub status: Status,
    pub cost: Option<Weight>,
    pub edge_scans: u64,
    pub relaxations: u64,
    pub wall_us: f64,
    pub scan_ratio: f64,
    /// Instance verdict from the admissibility checker.
    pub verdict: Verdict,
    /// Reference answer for the same question (Dijkstra cost, or BFS hops
    /// for hop-count algorithms).
    pub reference_cost: Option<Weight>,
}

impl BenchRecord {
    pub fn deviates(&self) -> bool {
        self.status == Status::Ok && self.cost != self.reference_cost
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{:.3},{:.6}",
            self.instance,
            self.kind,
            self.n,
            self.m,
            self.algo,
            self.status.as_str(),
            self.cost.map(|c| c.to_string()).unwrap_or_default(),
            self.edge_scans,
            self.relaxations,
            self.wall_us,
            self.scan_ratio,
        )
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("repetitions must be at least 1")]
    NoRepetitions,
    #[error("generator: {0}")]
    Generate(GenError),
    #[error("{algo} on admissible instance {instance}: cost {got:?}, expected {expected:?}")]
    Mismatch {
        instance: String,
        algo: Algo,
        expected: Option<Weight>,
        got: Option<Weight>,
        /// Graph file text with the query in a comment line.
        replay: String,
    },
}

pub fn instance_id(p: &GenParams) -> String {
    format!("{}-n{}-s{}", p.kind, p.n, p.seed)
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len().is_multiple_of(2) {
        (xs[mid - 1] + xs[mid]) / 2.0
    } else {
        xs[mid]
    }
}

fn bench_instance(
    p: &GenParams,
    algos: &[Algo],
    repetitions: usize,
) -> Result<Vec<BenchRecord>, BenchError> {
    let (g, q) = generate(p).map_err(BenchError::Generate)?;
    let id = instance_id(p);
    let verdict = check_constraint(&g, q).verdict;
    let weighted_ref = dijkstra(&g, q).cost;
    let hop_ref = bfs(&g, q).cost;
    let m = g.edge_count();

    let mut out = Vec::with_capacity(algos.len());
    for &algo in algos {
        let r = algo.run(&g, q);
        let reference_cost = if algo.counts_hops() { hop_ref } else { weighted_ref };
        let must_match = algo.counts_hops() || verdict == Verdict::Satisfied;
        if must_match && (r.status != Status::Ok || r.cost != reference_cost) && reference_cost.is_some() {
            return Err(BenchError::Mismatch {
                instance: id,
                algo,
                expected: reference_cost,
                got: r.cost,
                replay: format!("c query {} {}\n{}", q.source + 1, q.target + 1, write_graph(&g)),
            });
        }
        let times: Vec<f64> = (0..repetitions)
            .map(|_| {
                let start = Instant::now();
                std::hint::black_box(algo.run(&g, q));
                start.elapsed().as_secs_f64() * 1e6
            })
            .collect();
        let scan_ratio = if m == 0 { 0.0 } else { r.counters.edge_scans as f64 / m as f64 };
        out.push(BenchRecord {
            instance: id.clone(),
            kind: p.kind,
            n: g.vertex_count(),
            m,
            algo,
            status: r.status,
            cost: r.cost,
            edge_scans: r.counters.edge_scans,
            relaxations: r.counters.relaxations,
            wall_us: median(times),
            scan_ratio,
            verdict,
            reference_cost,
        });
    }
    Ok(out)
}

/// One record per (instance, algorithm). Any cost disagreement with the
/// reference on an admissible instance aborts with the instance attached.
pub fn run_benchmark(
    families: &[GenParams],
    algos: &[Algo],
    repetitions: usize,
) -> Result<Vec<BenchRecord>, BenchError> {
    if repetitions == 0 {
        return Err(BenchError::NoRepetitions);
    }
    let per_instance: Vec<Vec<BenchRecord>> = families
        .par_iter()
        .map(|p| bench_instance(p, algos, repetitions))
        .collect::<Result<_, _>>()?;
    Ok(per_instance.into_iter().flatten().collect())
}

pub fn write_csv<W: Write>(records: &[BenchRecord], mut w: W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        writeln!(w, "{}", r.csv_row())?;
    }
    Ok(())
}

/// Per (family, algorithm) aggregate.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Summary {
    pub kind: &'static str,
    pub algo: &'static str,
    pub instances: usize,
    pub median_scan_ratio: f64,
    pub max_scan_ratio: f64,
    /// Instances with edge_scans <= 2m.
    pub within_claim: usize,
    /// Instances with edge_scans <= 4m.
    pub within_limit: usize,
    pub wrong_graph: usize,
    /// OK results whose cost differs from the reference.
    pub cost_deviations: usize,
    pub median_wall_us: f64,
}

impl Summary {
    pub fn claim_held(&self) -> bool {
        self.within_claim == self.instances
    }
}

pub fn summarize(records: &[BenchRecord]) -> Vec<Summary> {
    let mut keys: Vec<(GenKind, Algo)> = records.iter().map(|r| (r.kind, r.algo)).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .map(|(kind, algo)| {
            let rs: Vec<&BenchRecord> =
                records.iter().filter(|r| r.kind == kind && r.algo == algo).collect();
            let ratios: Vec<f64> = rs.iter().map(|r| r.scan_ratio).collect();
            Summary {
                kind: kind.as_str(),
                algo: algo.name(),
                instances: rs.len(),
                median_scan_ratio: median(ratios.clone()),
                max_scan_ratio: ratios.iter().copied().fold(0.0, f64::max),
                within_claim: rs.iter().filter(|r| r.edge_scans <= 2 * r.m as u64).count(),
                within_limit: rs.iter().filter(|r| r.edge_scans <= 4 * r.m as u64).count(),
                wrong_graph: rs.iter().filter(|r| r.status == Status::WrongGraph).count(),
                cost_deviations: rs.iter().filter(|r| r.deviates()).count(),
                median_wall_us: median(rs.iter().map(|r| r.wall_us).collect()),
            }
        })
        .collect()
}
