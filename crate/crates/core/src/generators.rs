//! Seeded instance generators.
//!
//! Every generator is a pure function of its [`GenParams`]; all randomness
//! comes from [`SplitMix64`] seeded with `params.seed`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graph::{validate_connected, Graph, GraphBuilder, GraphError, Query, VertexId, Weight};
use crate::graph::MAX_EDGE_WEIGHT;
use crate::rng::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    /// Hop-dominant weights on a leveled graph; always admissible.
    Layered,
    /// A heavy shortcut next to a light chain; never admissible.
    Adversarial,
    Random,
    Grid,
}

impl GenKind {
    pub const ALL: [GenKind; 4] = [GenKind::Layered, GenKind::Adversarial, GenKind::Random, GenKind::Grid];

    pub fn as_str(self) -> &'static str {
        match self {
            GenKind::Layered => "layered",
            GenKind::Adversarial => "adversarial",
            GenKind::Random => "random",
            GenKind::Grid => "grid",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GenKind {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GenKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .ok_or(GenError::UnknownKind)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    pub kind: GenKind,
    pub n: usize,
    /// Target edges per vertex.
    pub density: f64,
    pub weight_lo: Weight,
    pub weight_hi: Weight,
    pub seed: u64,
}

impl GenParams {
    pub fn new(kind: GenKind, n: usize, seed: u64) -> Self {
        GenParams { kind, n, density: 2.0, weight_lo: 1, weight_hi: 100, seed }
    }

    pub fn with_density(self, density: f64) -> Self {
        GenParams { density, ..self }
    }

    pub fn with_weights(self, lo: Weight, hi: Weight) -> Self {
        GenParams { weight_lo: lo, weight_hi: hi, ..self }
    }

    fn validate(&self, min_n: usize) -> Result<(), GenError> {
        if self.n < min_n {
            return Err(GenError::TooFewVertices { n: self.n, min: min_n });
        }
        if self.weight_lo > self.weight_hi {
            return Err(GenError::EmptyWeightRange);
        }
        if self.weight_hi > MAX_EDGE_WEIGHT {
            return Err(GenError::WeightOverflow);
        }
        if !self.density.is_finite() || self.density < 0.0 {
            return Err(GenError::BadDensity);
        }
        Ok(())
    }

    fn target_edges(&self) -> usize {
        (self.density * self.n as f64 + 0.5) as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    TooFewVertices { n: usize, min: usize },
    EmptyWeightRange,
    /// Layered graphs need strictly positive weights.
    ZeroWeightLayered,
    WeightOverflow,
    BadDensity,
    UnknownKind,
    Graph(GraphError),
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::TooFewVertices { n, min } => write!(f, "n = {n}, need at least {min}"),
            GenError::EmptyWeightRange => f.write_str("weight range is empty"),
            GenError::ZeroWeightLayered => f.write_str("layered graphs need wmin >= 1"),
            GenError::WeightOverflow => f.write_str("generated weights would exceed the edge weight cap"),
            GenError::BadDensity => f.write_str("density must be finite and non-negative"),
            GenError::UnknownKind => {
                f.write_str("unknown kind (expected layered, adversarial, random or grid)")
            }
            GenError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl From<GraphError> for GenError {
    fn from(e: GraphError) -> Self {
        GenError::Graph(e)
    }
}

/// Dispatches on `p.kind`.
pub fn generate(p: &GenParams) -> Result<(Graph, Query), GenError> {
    match p.kind {
        GenKind::Layered => gen_layered(p),
        GenKind::Adversarial => gen_adversarial(p),
        GenKind::Random => gen_random(p),
        GenKind::Grid => gen_grid(p),
    }
}

/// Leveled graph with edges only inside a level or between adjacent
/// levels. Every weight is offset by `hi * n`, so any walk with more hops
/// costs more than any walk with fewer hops and the instance is admissible
/// from every root. Source is vertex 0 (level 0), destination `n - 1`
/// (last level).
pub fn gen_layered(p: &GenParams) -> Result<(Graph, Query), GenError> {
    p.validate(2)?;
    if p.weight_lo == 0 {
        return Err(GenError::ZeroWeightLayered);
    }
    let n = p.n;
    let offset = p.weight_hi.checked_mul(n as u64).ok_or(GenError::WeightOverflow)?;
    if offset.checked_add(p.weight_hi).is_none_or(|w| w > MAX_EDGE_WEIGHT) {
        return Err(GenError::WeightOverflow);
    }
    let mut rng = SplitMix64::new(p.seed);
    let weight = |rng: &mut SplitMix64| rng.range_inclusive(p.weight_lo, p.weight_hi) + offset;

    let levels = if n == 2 { 2 } else { (n.isqrt() + 1).clamp(3, n) };
    let mut level_of = alloc::vec![0usize; n];
    let mut members: Vec<Vec<VertexId>> = alloc::vec![Vec::new(); levels];
    members[0].push(0);
    for (v, slot) in level_of.iter_mut().enumerate().take(n - 1).skip(1) {
        let level = if v < levels - 1 { v } else { 1 + rng.index(levels - 2) };
        *slot = level;
        members[level].push(v);
    }
    level_of[n - 1] = levels - 1;
    members[levels - 1].push(n - 1);

    let mut b = GraphBuilder::new(n);
    for v in 1..n {
        let below = &members[level_of[v] - 1];
        let u = below[rng.index(below.len())];
        b.add_edge(u, v, weight(&mut rng))?;
    }

    let target = p.target_edges().max(n - 1);
    let mut attempts = 4 * target + 16;
    while b.edge_count() < target && attempts > 0 {
        attempts -= 1;
        let v = rng.index(n);
        let l = level_of[v];
        let partner_level = match rng.index(3) {
            0 => l,
            1 if l + 1 < levels => l + 1,
            2 if l > 0 => l - 1,
            _ => l,
        };
        let pool = &members[partner_level];
        let u = pool[rng.index(pool.len())];
        if u != v {
            b.add_edge(u, v, weight(&mut rng))?;
        }
    }
    Ok((b.build(), Query::new(0, n - 1)))
}

/// Embeds a heavy edge `s - w` beside a light chain `s - a1 - ... - w`,
/// then a light corridor from `w` to the destination and random extras.
/// The heavy weight exceeds the sum of all other weights, so `w` is one hop
/// from the source but strictly cheaper to reach over the chain. Half of
/// the seeds swap the query endpoints so the gadget sits at the
/// destination instead.
pub fn gen_adversarial(p: &GenParams) -> Result<(Graph, Query), GenError> {
    p.validate(3)?;
    let n = p.n;
    let mut rng = SplitMix64::new(p.seed);
    let light = |rng: &mut SplitMix64| rng.range_inclusive(p.weight_lo, p.weight_hi);

    let chain = 1 + rng.index(((n - 2) / 3).max(1));
    let w = chain + 1;
    let rest = n - chain - 2;
    let corridor = if rest == 0 { 0 } else { rng.index(rest + 1) };
    let t = w + corridor;

    let mut b = GraphBuilder::new(n);
    for v in 1..=t {
        b.add_edge(v - 1, v, light(&mut rng))?;
    }
    for x in t + 1..n {
        let u = rng.index(x);
        b.add_edge(u, x, light(&mut rng))?;
    }
    let target = p.target_edges().max(n - 1);
    let mut attempts = 4 * target + 16;
    while b.edge_count() < target && attempts > 0 {
        attempts -= 1;
        let u = rng.index(n);
        let v = rng.index(n);
        if u == v || (u.min(v) == 0 && u.max(v) == w) {
            continue;
        }
        b.add_edge(u, v, light(&mut rng))?;
    }
    let light_total: Weight = b.clone().build().total_weight();
    let heavy = light_total + 1;
    if heavy > MAX_EDGE_WEIGHT {
        return Err(GenError::WeightOverflow);
    }
    b.add_edge(0, w, heavy)?;
    let q = if rng.coin() { Query::new(t, 0) } else { Query::new(0, t) };
    Ok((b.build(), q))
}

/// Uniform random edges (G(n, m) style). The edge set is resampled until
/// source and destination are connected; after 100 failed draws a random
/// spanning tree is added instead.
pub fn gen_random(p: &GenParams) -> Result<(Graph, Query), GenError> {
    p.validate(2)?;
    let n = p.n;
    let mut rng = SplitMix64::new(p.seed);
    let s = rng.index(n);
    let t = (s + 1 + rng.index(n - 1)) % n;
    let q = Query::new(s, t);
    let target = p.target_edges().clamp(1, n * (n - 1) / 2);

    let mut last = GraphBuilder::new(n);
    for _ in 0..100 {
        let mut b = GraphBuilder::new(n);
        let mut attempts = 20 * target + 16;
        while b.edge_count() < target && attempts > 0 {
            attempts -= 1;
            let u = rng.index(n);
            let v = rng.index(n);
            if u != v {
                b.add_edge(u, v, rng.range_inclusive(p.weight_lo, p.weight_hi))?;
            }
        }
        let g = b.clone().build();
        if validate_connected(&g, q) {
            return Ok((g, q));
        }
        last = b;
    }
    let mut order: Vec<VertexId> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.index(i + 1));
    }
    for i in 1..n {
        let u = order[rng.index(i)];
        last.add_edge(u, order[i], rng.range_inclusive(p.weight_lo, p.weight_hi))?;
    }
    Ok((last.build(), q))
}

/// Grid of `rows x cols` vertices, `cols = floor(sqrt(n))` and
/// `rows = n / cols`, with uniform random weights. Source and destination
/// are opposite corners. Density is ignored.
pub fn gen_grid(p: &GenParams) -> Result<(Graph, Query), GenError> {
    p.validate(2)?;
    let cols = p.n.isqrt();
    let rows = p.n / cols;
    let n = rows * cols;
    let mut rng = SplitMix64::new(p.seed);
    let mut b = GraphBuilder::new(n);
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                b.add_edge(v, v + 1, rng.range_inclusive(p.weight_lo, p.weight_hi))?;
            }
            if r + 1 < rows {
                b.add_edge(v, v + cols, rng.range_inclusive(p.weight_lo, p.weight_hi))?;
            }
        }
    }
    Ok((b.build(), Query::new(0, n - 1)))
}
