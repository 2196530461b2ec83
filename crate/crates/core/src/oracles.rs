//! Reference algorithms used to check the two-front search, and the
//! admissibility check for its input.
//!
//! A graph is admissible for a root when no vertex can be reached more
//! cheaply by a walk with more hops than the fewest-hop walks to it. The
//! level-synchronous search settles vertices in hop order, so on admissible
//! graphs (for both roots) it is exact.

use alloc::collections::{BinaryHeap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::graph::{Graph, Query, VertexId, Weight, UNREACHED};
use crate::search::{OpCounters, SearchResult, Status};

/// Default vertex limit for [`enumerate_paths`].
pub const ENUMERATION_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { n: usize, cap: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { n, cap } => {
                write!(f, "graph has {n} vertices, path enumeration is limited to {cap}")
            }
        }
    }
}

fn follow_parents(parent: &[Option<VertexId>], target: VertexId) -> Vec<VertexId> {
    let mut path = vec![target];
    let mut v = target;
    while let Some(p) = parent[v] {
        path.push(p);
        v = p;
    }
    path.reverse();
    path
}

/// Binary-heap Dijkstra, stopping when the target is settled.
pub fn dijkstra(g: &Graph, q: Query) -> SearchResult {
    let n = g.vertex_count();
    let mut counters = OpCounters::default();
    let mut dist = vec![UNREACHED; n];
    let mut parent: Vec<Option<VertexId>> = vec![None; n];
    let mut heap = BinaryHeap::new();
    dist[q.source] = 0;
    heap.push(Reverse((0, q.source)));
    counters.enqueues += 1;

    while let Some(Reverse((d, u))) = heap.pop() {
        counters.dequeues += 1;
        if d > dist[u] {
            continue;
        }
        if u == q.target {
            return SearchResult {
                path: Some(follow_parents(&parent, u)),
                cost: Some(d),
                status: Status::Ok,
                counters,
            };
        }
        for &(v, w) in g.neighbors(u) {
            counters.edge_scans += 1;
            let nd = d + w;
            if nd < dist[v] {
                dist[v] = nd;
                parent[v] = Some(u);
                heap.push(Reverse((nd, v)));
                counters.enqueues += 1;
                counters.relaxations += 1;
            }
        }
    }
    SearchResult::unreachable(counters)
}

/// Exact distance from `root` to every vertex together with the fewest
/// hops among cheapest walks. Unreached vertices get `(UNREACHED, u32::MAX)`.
pub fn distances_with_hops(g: &Graph, root: VertexId) -> Vec<(Weight, u32)> {
    let mut best = vec![(UNREACHED, u32::MAX); g.vertex_count()];
    let mut heap = BinaryHeap::new();
    best[root] = (0, 0);
    heap.push(Reverse((0, 0u32, root)));
    while let Some(Reverse((d, k, u))) = heap.pop() {
        if (d, k) > best[u] {
            continue;
        }
        for &(v, w) in g.neighbors(u) {
            let cand = (d + w, k + 1);
            if cand < best[v] {
                best[v] = cand;
                heap.push(Reverse((cand.0, cand.1, v)));
            }
        }
    }
    best
}

/// Minimum edge count from `s` to every vertex; `None` if unreachable.
pub fn bfs_hops(g: &Graph, s: VertexId) -> Vec<Option<u32>> {
    let mut hops = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    hops[s] = Some(0);
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        let next = hops[u].map(|h| h + 1);
        for &(v, _) in g.neighbors(u) {
            if hops[v].is_none() {
                hops[v] = next;
                queue.push_back(v);
            }
        }
    }
    hops
}

/// One-directional BFS from the source, stopping as soon as the target is
/// discovered. Cost is the hop count.
pub fn bfs(g: &Graph, q: Query) -> SearchResult {
    let mut counters = OpCounters::default();
    if q.is_trivial() {
        return SearchResult {
            path: Some(vec![q.source]),
            cost: Some(0),
            status: Status::Ok,
            counters,
        };
    }
    let n = g.vertex_count();
    let mut hops: Vec<Option<u64>> = vec![None; n];
    let mut parent = vec![None; n];
    let mut queue = VecDeque::new();
    hops[q.source] = Some(0);
    queue.push_back(q.source);
    counters.enqueues += 1;
    while let Some(u) = queue.pop_front() {
        counters.dequeues += 1;
        let h = hops[u].unwrap_or(0);
        for &(v, _) in g.neighbors(u) {
            counters.edge_scans += 1;
            if hops[v].is_some() {
                continue;
            }
            hops[v] = Some(h + 1);
            parent[v] = Some(u);
            counters.relaxations += 1;
            if v == q.target {
                return SearchResult {
                    path: Some(follow_parents(&parent, v)),
                    cost: Some(h + 1),
                    status: Status::Ok,
                    counters,
                };
            }
            queue.push_back(v);
            counters.enqueues += 1;
        }
    }
    SearchResult::unreachable(counters)
}

/// Every simple path from source to target with its cost, in depth-first
/// adjacency order.
pub fn enumerate_paths(
    g: &Graph,
    q: Query,
    cap: usize,
) -> Result<Vec<(Vec<VertexId>, Weight)>, OracleError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut path = vec![q.source];
    on_path[q.source] = true;
    extend_paths(g, q.target, &mut path, &mut on_path, 0, &mut out);
    Ok(out)
}

fn extend_paths(
    g: &Graph,
    target: VertexId,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    cost: Weight,
    out: &mut Vec<(Vec<VertexId>, Weight)>,
) {
    let u = *path.last().expect("path is never empty");
    if u == target {
        out.push((path.clone(), cost));
        return;
    }
    for &(v, w) in g.neighbors(u) {
        if on_path[v] {
            continue;
        }
        on_path[v] = true;
        path.push(v);
        extend_paths(g, target, path, on_path, cost + w, out);
        path.pop();
        on_path[v] = false;
    }
}

/// Minimum walk cost from a root using exactly `k` edges, for
/// `k` in `0..n` (at least one row).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopCostTable {
    rows: Vec<Vec<Weight>>,
}

impl HopCostTable {
    pub fn get(&self, k: usize, w: VertexId) -> Weight {
        self.rows[k][w]
    }

    pub fn row(&self, k: usize) -> &[Weight] {
        &self.rows[k]
    }

    pub fn hop_classes(&self) -> usize {
        self.rows.len()
    }

    /// Smallest `k` with a finite entry for `w`.
    pub fn kmin(&self, w: VertexId) -> Option<usize> {
        self.rows.iter().position(|r| r[w] != UNREACHED)
    }

    pub fn min_over_hops(&self, w: VertexId) -> Weight {
        self.rows.iter().map(|r| r[w]).min().unwrap_or(UNREACHED)
    }
}

/// Hop-layered relaxation: row `k + 1` is every row-`k` cost pushed across
/// one edge. Quadratic in memory; meant for small graphs.
pub fn min_cost_by_hops(g: &Graph, root: VertexId) -> HopCostTable {
    let n = g.vertex_count();
    let mut rows = Vec::with_capacity(n.max(1));
    let mut row = vec![UNREACHED; n];
    row[root] = 0;
    rows.push(row);
    for k in 1..n {
        let prev = &rows[k - 1];
        let mut next = vec![UNREACHED; n];
        for (u, &cu) in prev.iter().enumerate() {
            if cu == UNREACHED {
                continue;
            }
            for &(v, w) in g.neighbors(u) {
                let c = cu + w;
                if c < next[v] {
                    next[v] = c;
                }
            }
        }
        rows.push(next);
    }
    HopCostTable { rows }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Satisfied,
    Violated,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Satisfied => "SATISFIED",
            Verdict::Violated => "VIOLATED",
        }
    }
}

/// A vertex `w` reachable from `root` with `k > kmin` hops at cost
/// `cheap_cost`, strictly below the best `kmin`-hop cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub root: VertexId,
    pub w: VertexId,
    pub cheap_cost: Weight,
    pub kmin: u32,
    pub k: u32,
    /// Best cost over walks with exactly `kmin` hops.
    pub kmin_cost: Weight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstraintReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

/// Checks admissibility from both query endpoints.
///
/// For each root the cheapest fewest-hop cost of every vertex comes from a
/// DP over the BFS layering, and the true distance from Dijkstra. The two
/// differ exactly when some longer-hop walk is strictly cheaper, which is
/// the same verdict a full [`HopCostTable`] scan gives but in
/// `O(m log n)`.
pub fn check_constraint(g: &Graph, q: Query) -> ConstraintReport {
    let roots: &[VertexId] =
        if q.is_trivial() { &[q.source] } else { &[q.source, q.target] };
    for &root in roots {
        if let Some(witness) = violation_from(g, root) {
            return ConstraintReport { verdict: Verdict::Violated, witness: Some(witness) };
        }
    }
    ConstraintReport { verdict: Verdict::Satisfied, witness: None }
}

fn violation_from(g: &Graph, root: VertexId) -> Option<Witness> {
    let n = g.vertex_count();
    let mut hops = vec![u32::MAX; n];
    let mut layer_cost = vec![UNREACHED; n];
    let mut order = Vec::with_capacity(n);
    hops[root] = 0;
    layer_cost[root] = 0;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &(v, _) in g.neighbors(u) {
            if hops[v] == u32::MAX {
                hops[v] = hops[u] + 1;
                order.push(v);
            }
        }
    }
    // BFS order visits every layer before the next one
    for &u in &order {
        for &(v, w) in g.neighbors(u) {
            if hops[v] == hops[u] + 1 && layer_cost[u] + w < layer_cost[v] {
                layer_cost[v] = layer_cost[u] + w;
            }
        }
    }
    let exact = distances_with_hops(g, root);
    (0..n).find(|&w| hops[w] != u32::MAX && exact[w].0 < layer_cost[w]).map(|w| Witness {
        root,
        w,
        cheap_cost: exact[w].0,
        kmin: hops[w],
        k: exact[w].1,
        kmin_cost: layer_cost[w],
    })
}
