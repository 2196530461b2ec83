//! Level-synchronous two-front shortest paths for non-negative weighted
//! undirected graphs.
//!
//! Two breadth-ordered searches start from the source and the destination,
//! alternate one full level at a time, and record every edge on which the
//! fronts touch. The cheapest touching edge yields the path. The search is
//! exact on graphs where no longer-hop route is ever cheaper than the best
//! fewest-hop route (see [`oracles::check_constraint`]); on other graphs it
//! either detects the problem at runtime ([`SearchStatus::WrongGraph`]) or
//! returns a valid but possibly suboptimal path.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, benchmarks
//! and the command-line front end live in the `bimeet` companion crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod audit;
pub mod generators;
pub mod graph;
pub mod oracles;
pub mod rng;
pub mod search;
pub mod unweighted;

pub use graph::{
    BuildStats, Graph, GraphBuilder, GraphError, Query, VertexId, Weight, MAX_EDGE_WEIGHT,
    UNREACHED,
};
pub use search::{
    solve, solve_observed, Color, LevelOutcome, MeetRecord, NodeState, Observer, OpCounters,
    RelaxOutcome, SearchMode, SearchResult, SearchState, SearchStatus, Side, Status,
};
pub use unweighted::solve_unweighted;
