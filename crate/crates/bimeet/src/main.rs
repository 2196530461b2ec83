use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bimeet::bench::{self, Algo, BenchError, SCAN_RATIO_LIMIT};
use bimeet::report::{ConstraintReportJson, SearchResultJson, Sidecar};
use bimeet::verify::verify;
use bimeet::{read_graph, write_graph, ParseError, ParsedGraph};
use bimeet_core::generators::{generate, GenError, GenKind, GenParams};
use bimeet_core::oracles::{check_constraint, Verdict};
use bimeet_core::{Graph, Query, Status};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const UNREACHABLE: u8 = 2;
    pub const WRONG_GRAPH: u8 = 3;
    pub const MISMATCH: u8 = 4;
    pub const VIOLATED: u8 = 5;
    pub const IO: u8 = 6;
}

#[derive(Parser)]
#[command(name = "bimeet", version, about = "Two-front level-synchronous shortest paths")]
struct Cli {
    /// Emit compact single-line JSON instead of pretty-printed JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Log progress and warnings to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one query and print the result.
    Solve {
        #[command(flatten)]
        query: QueryArgs,
        #[arg(long, default_value = "bimeet")]
        algo: Algo,
    },
    /// Compare the two-front search against Dijkstra.
    Verify {
        #[command(flatten)]
        query: QueryArgs,
    },
    /// Check whether the graph is admissible for the query.
    Check {
        #[command(flatten)]
        query: QueryArgs,
    },
    /// Generate an instance file and its JSON sidecar.
    Gen {
        #[command(flatten)]
        params: GenArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Benchmark algorithms over generated families and write a CSV.
    Bench {
        #[command(flatten)]
        params: GenArgs,
        /// Instances per family; seeds are consecutive from --seed.
        #[arg(long, default_value_t = 10)]
        count: u64,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        /// Comma-separated algorithms.
        #[arg(long, value_delimiter = ',', default_value = "bimeet,dijkstra,bfs,unweighted")]
        algo: Vec<Algo>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct QueryArgs {
    #[arg(long)]
    graph: PathBuf,
    /// 1-based source vertex.
    #[arg(long)]
    source: usize,
    /// 1-based destination vertex.
    #[arg(long)]
    target: usize,
}

#[derive(Args)]
struct GenArgs {
    /// layered, adversarial, random, grid (bench also accepts `all`).
    #[arg(long, default_value = "layered")]
    kind: String,
    #[arg(long, default_value_t = 1000)]
    n: usize,
    #[arg(long, default_value_t = 2.0)]
    density: f64,
    #[arg(long, default_value_t = 1)]
    wmin: u64,
    #[arg(long, default_value_t = 100)]
    wmax: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl GenArgs {
    fn params(&self, kind: GenKind, seed: u64) -> GenParams {
        GenParams::new(kind, self.n, seed)
            .with_density(self.density)
            .with_weights(self.wmin, self.wmax)
    }

    fn kinds(&self, allow_all: bool) -> Result<Vec<GenKind>, CliError> {
        if allow_all && self.kind.eq_ignore_ascii_case("all") {
            return Ok(GenKind::ALL.to_vec());
        }
        let kind = self.kind.parse().map_err(|e: GenError| CliError::Usage(e.to_string()))?;
        Ok(vec![kind])
    }
}

enum CliError {
    Usage(String),
    Parse(PathBuf, ParseError),
    Io(PathBuf, io::Error),
    Bench(BenchError),
    Stdout(io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(..) => exit::USAGE,
            CliError::Io(..) | CliError::Stdout(_) => exit::IO,
            CliError::Bench(BenchError::Mismatch { .. }) => exit::MISMATCH,
            CliError::Bench(_) => exit::USAGE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Parse(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Bench(e) => write!(f, "{e}"),
            CliError::Stdout(e) => write!(f, "stdout: {e}"),
        }
    }
}

struct Ctx {
    compact: bool,
    verbose: bool,
}

impl Ctx {
    fn emit<T: Serialize>(&self, value: &T) -> Result<(), CliError> {
        let text = if self.compact {
            serde_json::to_string(value)
        } else {
            serde_json::to_string_pretty(value)
        }
        .expect("report types serialize");
        let mut out = io::stdout().lock();
        writeln!(out, "{text}").map_err(CliError::Stdout)
    }

    fn log(&self, msg: impl AsRef<str>) {
        if self.verbose {
            eprintln!("{}", msg.as_ref());
        }
    }
}

fn load(path: &Path, ctx: &Ctx) -> Result<Graph, CliError> {
    let file = File::open(path).map_err(|e| CliError::Io(path.to_owned(), e))?;
    let ParsedGraph { graph, declared_edges, stats } =
        read_graph(BufReader::new(file)).map_err(|e| CliError::Parse(path.to_owned(), e))?;
    if stats.self_loops_dropped > 0 {
        eprintln!("warning: dropped {} self-loop(s)", stats.self_loops_dropped);
    }
    if stats.parallel_collapsed > 0 {
        ctx.log(format!("collapsed {} parallel edge(s)", stats.parallel_collapsed));
    }
    ctx.log(format!(
        "{}: n={} m={} (declared {declared_edges})",
        path.display(),
        graph.vertex_count(),
        graph.edge_count()
    ));
    Ok(graph)
}

fn load_query(args: &QueryArgs, ctx: &Ctx) -> Result<(Graph, Query), CliError> {
    let g = load(&args.graph, ctx)?;
    let n = g.vertex_count();
    for (flag, v) in [("--source", args.source), ("--target", args.target)] {
        if v == 0 || v > n {
            return Err(CliError::Usage(format!("{flag} {v} is outside 1..={n}")));
        }
    }
    Ok((g, Query::new(args.source - 1, args.target - 1)))
}

fn status_code(s: Status) -> u8 {
    match s {
        Status::Ok => exit::OK,
        Status::Unreachable => exit::UNREACHABLE,
        Status::WrongGraph => exit::WRONG_GRAPH,
    }
}

fn cmd_solve(ctx: &Ctx, args: &QueryArgs, algo: Algo) -> Result<u8, CliError> {
    let (g, q) = load_query(args, ctx)?;
    let r = algo.run(&g, q);
    ctx.emit(&SearchResultJson::from(&r))?;
    Ok(status_code(r.status))
}

#[derive(Serialize)]
struct VerifyReport {
    diff: &'static str,
    bimeet_cost: Option<u64>,
    dijkstra_cost: Option<u64>,
    constraint: ConstraintReportJson,
    bimeet: SearchResultJson,
    dijkstra: SearchResultJson,
}

fn cmd_verify(ctx: &Ctx, args: &QueryArgs) -> Result<u8, CliError> {
    let (g, q) = load_query(args, ctx)?;
    let v = verify(&g, q);
    let code = if v.diff.is_acceptable() { exit::OK } else { exit::MISMATCH };
    if code != exit::OK {
        eprintln!("verify: bimeet cost {:?} vs dijkstra cost {:?}", v.ours.cost, v.reference.cost);
    }
    ctx.emit(&VerifyReport {
        diff: v.diff.as_str(),
        bimeet_cost: v.ours.cost,
        dijkstra_cost: v.reference.cost,
        constraint: (&v.constraint).into(),
        bimeet: (&v.ours).into(),
        dijkstra: (&v.reference).into(),
    })?;
    Ok(code)
}

fn cmd_check(ctx: &Ctx, args: &QueryArgs) -> Result<u8, CliError> {
    let (g, q) = load_query(args, ctx)?;
    let report = check_constraint(&g, q);
    ctx.emit(&ConstraintReportJson::from(&report))?;
    Ok(match report.verdict {
        Verdict::Satisfied => exit::OK,
        Verdict::Violated => exit::VIOLATED,
    })
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Io(path.to_owned(), e))
}

fn cmd_gen(ctx: &Ctx, args: &GenArgs, out: &Path) -> Result<u8, CliError> {
    let kind = args.kinds(false)?[0];
    let params = args.params(kind, args.seed);
    let (g, q) = generate(&params).map_err(|e| CliError::Usage(e.to_string()))?;
    let verdict = check_constraint(&g, q).verdict;
    let sidecar = Sidecar::new(&params, q, verdict);
    write_file(out, &write_graph(&g))?;
    let meta = serde_json::to_string_pretty(&sidecar).expect("sidecar serializes") + "\n";
    write_file(&sidecar_path(out), &meta)?;
    ctx.log(format!("wrote {} (n={} m={})", out.display(), g.vertex_count(), g.edge_count()));
    ctx.emit(&sidecar)?;
    Ok(exit::OK)
}

#[derive(Serialize)]
struct ClaimCheck {
    kind: &'static str,
    median_scan_ratio: f64,
    max_scan_ratio: f64,
    claimed: f64,
    held: bool,
}

#[derive(Serialize)]
struct BenchReport {
    csv: String,
    records: usize,
    edge_scan_limit_ok: bool,
    scan_claim: Vec<ClaimCheck>,
    summaries: Vec<bench::Summary>,
}

fn cmd_bench(
    ctx: &Ctx,
    args: &GenArgs,
    count: u64,
    reps: usize,
    algos: &[Algo],
    out: &Path,
) -> Result<u8, CliError> {
    if count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let families: Vec<GenParams> = args
        .kinds(true)?
        .into_iter()
        .flat_map(|kind| (0..count).map(move |i| (kind, i)))
        .map(|(kind, i)| args.params(kind, args.seed.wrapping_add(i)))
        .collect();
    ctx.log(format!("benchmarking {} instance(s) x {} algorithm(s)", families.len(), algos.len()));
    let records = match bench::run_benchmark(&families, algos, reps) {
        Ok(r) => r,
        Err(e @ BenchError::Mismatch { .. }) => {
            if let BenchError::Mismatch { replay, .. } = &e {
                let mut path = out.as_os_str().to_owned();
                path.push(".replay.gr");
                let path = PathBuf::from(path);
                write_file(&path, replay)?;
                eprintln!("offending instance written to {}", path.display());
            }
            return Err(CliError::Bench(e));
        }
        Err(e) => return Err(CliError::Bench(e)),
    };
    let file = File::create(out).map_err(|e| CliError::Io(out.to_owned(), e))?;
    bench::write_csv(&records, BufWriter::new(file)).map_err(|e| CliError::Io(out.to_owned(), e))?;

    let summaries = bench::summarize(&records);
    let limit_ok = records
        .iter()
        .filter(|r| r.algo == Algo::Bimeet)
        .all(|r| r.scan_ratio <= SCAN_RATIO_LIMIT);
    let scan_claim = summaries
        .iter()
        .filter(|s| s.algo == Algo::Bimeet.name())
        .map(|s| ClaimCheck {
            kind: s.kind,
            median_scan_ratio: s.median_scan_ratio,
            max_scan_ratio: s.max_scan_ratio,
            claimed: bench::CLAIMED_SCAN_RATIO,
            held: s.claim_held(),
        })
        .collect();
    ctx.emit(&BenchReport {
        csv: out.display().to_string(),
        records: records.len(),
        edge_scan_limit_ok: limit_ok,
        scan_claim,
        summaries,
    })?;
    Ok(if limit_ok { exit::OK } else { exit::MISMATCH })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::OK });
        }
    };
    let ctx = Ctx { compact: cli.json, verbose: cli.verbose };
    let result = match &cli.command {
        Command::Solve { query, algo } => cmd_solve(&ctx, query, *algo),
        Command::Verify { query } => cmd_verify(&ctx, query),
        Command::Check { query } => cmd_check(&ctx, query),
        Command::Gen { params, out } => cmd_gen(&ctx, params, out),
        Command::Bench { params, count, reps, algo, out } => {
            cmd_bench(&ctx, params, *count, *reps, algo, out)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
