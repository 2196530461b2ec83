//! Undirected graph with non-negative integer edge weights.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Dense 0-based vertex index.
pub type VertexId = usize;

/// Edge weight and path cost.
///
/// Edge weights are capped at [`MAX_EDGE_WEIGHT`] so that any simple path
/// on fewer than 2^21 vertices sums to less than 2^53.
pub type Weight = u64;

/// Largest edge weight accepted by [`GraphBuilder`].
pub const MAX_EDGE_WEIGHT: Weight = u32::MAX as Weight;

/// Cost of a vertex that has not been reached. Compares greater than every
/// finite cost and is never stored on an edge.
pub const UNREACHED: Weight = Weight::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: VertexId, n: usize },
    WeightTooLarge { weight: Weight },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph with {n} vertices")
            }
            GraphError::WeightTooLarge { weight } => {
                write!(f, "edge weight {weight} exceeds maximum {MAX_EDGE_WEIGHT}")
            }
        }
    }
}

/// What the builder discarded while normalizing its input.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub self_loops_dropped: usize,
    pub parallel_collapsed: usize,
}

/// Accumulates edges, dropping self-loops and collapsing parallel edges to
/// their minimum weight. Edge order is the order of first appearance.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<(VertexId, VertexId, Weight)>,
    index: BTreeMap<(VertexId, VertexId), usize>,
    stats: BuildStats,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { n, edges: Vec::new(), index: BTreeMap::new(), stats: BuildStats::default() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, w: Weight) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if w > MAX_EDGE_WEIGHT {
            return Err(GraphError::WeightTooLarge { weight: w });
        }
        if u == v {
            self.stats.self_loops_dropped += 1;
            return Ok(());
        }
        let key = if u < v { (u, v) } else { (v, u) };
        match self.index.get(&key) {
            Some(&i) => {
                self.stats.parallel_collapsed += 1;
                if w < self.edges[i].2 {
                    self.edges[i].2 = w;
                }
            }
            None => {
                self.index.insert(key, self.edges.len());
                self.edges.push((key.0, key.1, w));
            }
        }
        Ok(())
    }

    pub fn stats(&self) -> BuildStats {
        self.stats
    }

    pub fn build(self) -> Graph {
        Graph::from_normalized(self.n, self.edges)
    }
}

/// Immutable undirected graph in compressed adjacency form.
///
/// Every edge `(u, v, w)` is stored once with `u < v` and appears in the
/// adjacency of both endpoints. Adjacency lists follow edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId, Weight)>,
    first_out: Vec<usize>,
    adjacency: Vec<(VertexId, Weight)>,
}

impl Graph {
    fn from_normalized(n: usize, edges: Vec<(VertexId, VertexId, Weight)>) -> Graph {
        let mut first_out = vec![0usize; n + 1];
        for &(u, v, _) in &edges {
            first_out[u + 1] += 1;
            first_out[v + 1] += 1;
        }
        for i in 0..n {
            first_out[i + 1] += first_out[i];
        }
        let mut fill = first_out.clone();
        let mut adjacency = vec![(0, 0); 2 * edges.len()];
        for &(u, v, w) in &edges {
            adjacency[fill[u]] = (v, w);
            fill[u] += 1;
            adjacency[fill[v]] = (u, w);
            fill[v] += 1;
        }
        Graph { n, edges, first_out, adjacency }
    }

    /// Builds a graph from an edge list, normalizing as [`GraphBuilder`] does.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Weight)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v, w) in edges {
            b.add_edge(u, v, w)?;
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId, Weight)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, Weight)] {
        &self.adjacency[self.first_out[v]..self.first_out[v + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.first_out[v + 1] - self.first_out[v]
    }

    pub fn edge_weight(&self, u: VertexId, v: VertexId) -> Option<Weight> {
        self.neighbors(u).iter().find(|&&(x, _)| x == v).map(|&(_, w)| w)
    }

    pub fn total_weight(&self) -> Weight {
        self.edges.iter().map(|e| e.2).sum()
    }

    /// Copy of this graph with every edge weight replaced by `w`.
    pub fn with_uniform_weight(&self, w: Weight) -> Graph {
        let edges = self.edges.iter().map(|&(u, v, _)| (u, v, w)).collect();
        Graph::from_normalized(self.n, edges)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v < self.n
    }
}

/// A source/destination pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Query {
    pub source: VertexId,
    pub target: VertexId,
}

impl Query {
    pub fn new(source: VertexId, target: VertexId) -> Self {
        Query { source, target }
    }

    /// Checks both endpoints against `g`.
    pub fn checked(g: &Graph, source: VertexId, target: VertexId) -> Result<Query, GraphError> {
        for x in [source, target] {
            if !g.contains(x) {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: g.vertex_count() });
            }
        }
        Ok(Query { source, target })
    }

    pub fn is_trivial(&self) -> bool {
        self.source == self.target
    }
}

/// Whether `q.target` is reachable from `q.source`.
pub fn validate_connected(g: &Graph, q: Query) -> bool {
    if q.is_trivial() {
        return true;
    }
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![q.source];
    seen[q.source] = true;
    while let Some(u) = stack.pop() {
        for &(v, _) in g.neighbors(u) {
            if v == q.target {
                return true;
            }
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    false
}
