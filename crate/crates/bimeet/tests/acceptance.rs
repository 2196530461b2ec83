//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//!     cargo test -p bimeet --test acceptance

use std::process::ExitCode;
use std::time::Instant;

use bimeet::bench::{run_benchmark, summarize, Algo, CLAIMED_SCAN_RATIO};
use bimeet::verify::{verify, Diff};
use bimeet::{parse_graph, write_graph};
use bimeet_core::audit::audit;
use bimeet_core::generators::{generate, GenKind, GenParams};
use bimeet_core::oracles::{
    bfs_hops, check_constraint, dijkstra, enumerate_paths, min_cost_by_hops, Verdict,
    ENUMERATION_CAP,
};
use bimeet_core::rng::SplitMix64;
use bimeet_core::{solve, solve_unweighted, Query, SearchMode, Status, UNREACHED};
use rayon::prelude::*;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new(failures: Vec<String>, summary: String) -> Self {
        Outcome { failures, summary }
    }
}

/// `count` parameter sets with n drawn uniformly from `lo..=hi`.
fn params(kind: GenKind, count: u64, lo: usize, hi: usize, salt: u64) -> Vec<GenParams> {
    let mut rng = SplitMix64::new(salt);
    (0..count)
        .map(|seed| {
            let n = rng.range_inclusive(lo as u64, hi as u64) as usize;
            GenParams::new(kind, n, seed)
        })
        .collect()
}

fn failures<T: Sync>(items: Vec<T>, check: impl Fn(&T) -> Result<(), String> + Sync) -> Vec<String> {
    items.par_iter().filter_map(|x| check(x).err()).collect()
}

fn oracle_equivalence() -> Outcome {
    let layered = params(GenKind::Layered, 1000, 2, 2000, 1);
    let weight_bands = [(1, 1), (7, 7), (10, 11), (50, 60), (1, 3), (1, 100)];
    let grid: Vec<GenParams> = params(GenKind::Grid, 300, 4, 2500, 2)
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            let (lo, hi) = weight_bands[i % weight_bands.len()];
            p.with_weights(lo, hi)
        })
        .collect();

    let run = |set: &[GenParams]| {
        let rows: Vec<Result<bool, String>> = set
            .par_iter()
            .map(|p| {
                let (g, q) = generate(p).map_err(|e| e.to_string())?;
                if check_constraint(&g, q).verdict != Verdict::Satisfied {
                    return Ok(false);
                }
                let r = solve(&g, q);
                let d = dijkstra(&g, q);
                if r.status != Status::Ok || r.cost != d.cost {
                    return Err(format!(
                        "{} n={} seed={}: {} cost {:?}, dijkstra {:?}",
                        p.kind, p.n, p.seed, r.status.as_str(), r.cost, d.cost
                    ));
                }
                Ok(true)
            })
            .collect();
        let satisfied = rows.iter().filter(|r| matches!(r, Ok(true))).count();
        let errs: Vec<String> = rows.into_iter().filter_map(Result::err).collect();
        (satisfied, errs)
    };
    let (sat_layered, mut errs) = run(&layered);
    let (sat_grid, grid_errs) = run(&grid);
    errs.extend(grid_errs);
    if sat_grid == 0 {
        errs.push("no admissible grid instance was exercised".into());
    }
    Outcome::new(
        errs,
        format!(
            "{} layered ({sat_layered} admissible), {} grid ({sat_grid} admissible) match dijkstra exactly",
            layered.len(),
            grid.len()
        ),
    )
}

fn brute_force_grounding() -> Outcome {
    let mut rng = SplitMix64::new(3);
    let set: Vec<GenParams> = (0..600)
        .map(|seed| {
            let n = rng.range_inclusive(2, ENUMERATION_CAP as u64) as usize;
            let density = 0.5 + rng.below(30) as f64 / 10.0;
            let hi = 1 + rng.below(40);
            GenParams::new(GenKind::Random, n, seed).with_density(density).with_weights(1, hi)
        })
        .collect();
    let errs = failures(set.clone(), |p| {
        let (g, q) = generate(p).map_err(|e| e.to_string())?;
        let paths = enumerate_paths(&g, q, ENUMERATION_CAP).map_err(|e| e.to_string())?;
        let brute = paths.iter().map(|(_, c)| *c).min();
        let d = dijkstra(&g, q).cost;
        if brute != d {
            return Err(format!("seed {}: enumeration {brute:?} vs dijkstra {d:?}", p.seed));
        }
        for root in [q.source, q.target] {
            let table = min_cost_by_hops(&g, root);
            for w in 0..g.vertex_count() {
                let dw = dijkstra(&g, Query::new(root, w)).cost.unwrap_or(UNREACHED);
                if table.min_over_hops(w) != dw {
                    return Err(format!(
                        "seed {}: hop table {} vs dijkstra {dw} for {root}->{w}",
                        p.seed,
                        table.min_over_hops(w)
                    ));
                }
            }
        }
        Ok(())
    });
    Outcome::new(errs, format!("{} graphs with n <= {ENUMERATION_CAP}", set.len()))
}

fn unweighted_matches_bfs() -> Outcome {
    let mut rng = SplitMix64::new(4);
    let set: Vec<GenParams> = (0..1200)
        .map(|seed| {
            let n = rng.range_inclusive(2, 600) as usize;
            let density = 0.5 + rng.below(40) as f64 / 10.0;
            GenParams::new(GenKind::Random, n, seed).with_density(density)
        })
        .collect();
    let errs = failures(set.clone(), |p| {
        let (g, q) = generate(p).map_err(|e| e.to_string())?;
        let hops = bfs_hops(&g, q.source)[q.target]
            .ok_or_else(|| format!("seed {}: generator returned a disconnected query", p.seed))?;
        let r = solve_unweighted(&g, q);
        if r.status != Status::Ok || r.cost != Some(u64::from(hops)) {
            return Err(format!("seed {}: unweighted {:?} vs bfs {hops}", p.seed, r.cost));
        }
        Ok(())
    });
    Outcome::new(errs, format!("{} connected random graphs match bfs hop counts", set.len()))
}

fn edge_scan_claim() -> Outcome {
    let set = params(GenKind::Layered, 300, 2, 2000, 5);
    let records = match run_benchmark(&set, &[Algo::Bimeet], 1) {
        Ok(r) => r,
        Err(e) => return Outcome::new(vec![e.to_string()], "benchmark aborted".into()),
    };
    let errs: Vec<String> = records
        .iter()
        .filter(|r| r.edge_scans > 4 * r.m as u64)
        .map(|r| format!("{}: {} scans for m = {}", r.instance, r.edge_scans, r.m))
        .collect();
    let s = &summarize(&records)[0];
    Outcome::new(
        errs,
        format!(
            "{} instances within 4m; median scan_ratio {:.3} (max {:.3}) vs claimed {CLAIMED_SCAN_RATIO:.1}: claim {}",
            s.instances,
            s.median_scan_ratio,
            s.max_scan_ratio,
            if s.claim_held() { "held" } else { "did not hold" }
        ),
    )
}

fn violation_behavior() -> Outcome {
    let adversarial = params(GenKind::Adversarial, 600, 3, 600, 6);
    let rows: Vec<Result<Diff, String>> = adversarial
        .par_iter()
        .map(|p| {
            let (g, q) = generate(p).map_err(|e| e.to_string())?;
            let v = verify(&g, q);
            match v.diff {
                Diff::WrongGraphOnAdmissible => Err(format!("seed {}: WRONG_GRAPH on admissible", p.seed)),
                d => Ok(d),
            }
        })
        .collect();
    let count = |d| rows.iter().filter(|r| matches!(r, Ok(x) if *x == d)).count();
    let (detected, recorded, exact) =
        (count(Diff::WrongGraphDetected), count(Diff::Mismatch), count(Diff::Match));
    let mut errs: Vec<String> = rows.iter().filter_map(|r| r.clone().err()).collect();

    // no false alarm on admissible instances from any family
    let mut rng = SplitMix64::new(7);
    let mixed: Vec<GenParams> = (0..2000)
        .map(|seed| {
            let kind = GenKind::ALL[rng.index(4)];
            let n = rng.range_inclusive(3, 300) as usize;
            let lo = 1 + rng.below(20);
            GenParams::new(kind, n, seed).with_weights(lo, lo + rng.below(4))
        })
        .collect();
    errs.extend(failures(mixed.clone(), |p| {
        let (g, q) = generate(p).map_err(|e| e.to_string())?;
        if verify(&g, q).diff == Diff::WrongGraphOnAdmissible {
            return Err(format!("{} n={} seed={}: WRONG_GRAPH on admissible", p.kind, p.n, p.seed));
        }
        Ok(())
    }));
    Outcome::new(
        errs,
        format!(
            "{} adversarial: {detected} WRONG_GRAPH, {recorded} cost discrepancies recorded, {exact} exact; \
             {} mixed instances without a false WRONG_GRAPH",
            adversarial.len(),
            mixed.len()
        ),
    )
}

fn state_machine_invariants() -> Outcome {
    let mut rng = SplitMix64::new(8);
    let set: Vec<(GenParams, Option<(u64, u64)>)> = (0..10_000)
        .map(|seed| {
            let kind = GenKind::ALL[rng.index(4)];
            let lo_n = if kind == GenKind::Adversarial { 3 } else { 2 };
            let n = rng.range_inclusive(lo_n, 300) as usize;
            let density = 0.3 + rng.below(40) as f64 / 10.0;
            let lo = 1 + rng.below(10);
            let hi = lo + rng.below(100);
            let q = rng.coin().then(|| (rng.next_u64(), rng.next_u64()));
            (GenParams::new(kind, n, seed).with_density(density).with_weights(lo, hi), q)
        })
        .collect();
    let errs = failures(set.clone(), |(p, random_q)| {
        let (g, q) = generate(p).map_err(|e| e.to_string())?;
        let nv = g.vertex_count() as u64;
        let q = random_q.map_or(q, |(a, b)| Query::new((a % nv) as usize, (b % nv) as usize));
        for mode in [SearchMode::WEIGHTED, SearchMode::UNWEIGHTED] {
            audit(&g, q, mode)
                .map_err(|e| format!("{} n={} seed={} {q:?} {mode:?}: {e}", p.kind, p.n, p.seed))?;
        }
        Ok(())
    });
    Outcome::new(errs, format!("{} mixed instances audited in both modes", set.len()))
}

fn determinism_round_trip() -> Outcome {
    let mut set = Vec::new();
    for (i, kind) in GenKind::ALL.into_iter().enumerate() {
        set.extend(params(kind, 150, 3, 1500, 9 + i as u64));
    }
    let errs = failures(set.clone(), |p| {
        let id = format!("{} n={} seed={}", p.kind, p.n, p.seed);
        let (g1, q1) = generate(p).map_err(|e| e.to_string())?;
        let (g2, q2) = generate(p).map_err(|e| e.to_string())?;
        let text = write_graph(&g1);
        if text.as_bytes() != write_graph(&g2).as_bytes() || q1 != q2 {
            return Err(format!("{id}: regenerated file differs"));
        }
        let parsed = parse_graph(&text).map_err(|e| format!("{id}: {e}"))?;
        if parsed.graph != g1 || write_graph(&parsed.graph) != text {
            return Err(format!("{id}: parse(write(g)) != g"));
        }
        for run in [solve, solve_unweighted, dijkstra] {
            let (a, b) = (run(&g1, q1), run(&parsed.graph, q1));
            if a.counters != b.counters || a.cost != b.cost || a.path != b.path {
                return Err(format!("{id}: repeated runs differ"));
            }
        }
        Ok(())
    });
    Outcome::new(errs, format!("{} instances regenerated, round-tripped and re-solved", set.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("oracle equivalence on admissible graphs", oracle_equivalence),
        ("brute-force grounding of the oracles", brute_force_grounding),
        ("unweighted variant matches BFS", unweighted_matches_bfs),
        ("edge scans within 4m", edge_scan_claim),
        ("behavior on violating graphs", violation_behavior),
        ("search state-machine invariants", state_machine_invariants),
        ("determinism and round-trip", determinism_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        let verdict = if out.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{verdict} [{}] {name}: {} ({secs:.1}s)", i + 1, out.summary);
        for f in out.failures.iter().take(5) {
            println!("    {f}");
        }
        if out.failures.len() > 5 {
            println!("    ... {} more", out.failures.len() - 5);
        }
        failed += usize::from(!out.failures.is_empty());
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
