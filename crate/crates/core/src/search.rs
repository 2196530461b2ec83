//! Two-front level-synchronous search.
//!
//! Side A grows a tree from the source and side B from the destination.
//! The sides alternate, each processing one complete hop level per turn
//! (A first). Every vertex is owned by the side that reached it first.
//! Scanning an edge into the other side's territory records a meet; the
//! cheapest meet is the answer once both fronts are exhausted.
//!
//! A settled (red) vertex that later receives a cheaper offer from its own
//! side means a longer-hop route beat a shorter one, and the search stops
//! with [`SearchStatus::WrongGraph`].

use alloc::vec;
use alloc::vec::Vec;
use core::mem;

use crate::graph::{Graph, Query, VertexId, Weight, UNREACHED};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    /// Not yet reached by either side.
    Green,
    /// Reached, waiting in a level queue.
    Yellow,
    /// Moved to the next level after a cheaper offer from a vertex on its
    /// own level. Its stale entry in the current level is skipped.
    YellowPromoted,
    /// Scanned; all neighbours examined.
    Red,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Rooted at the source.
    A,
    /// Rooted at the destination.
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }

    #[inline]
    fn idx(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeState {
    pub color: Color,
    pub owner: Option<Side>,
    /// Cost from the owner's root, [`UNREACHED`] while green.
    pub cst: Weight,
    pub parent: Option<VertexId>,
    /// Hop depth in the owner's tree.
    pub dst: Option<u32>,
}

impl NodeState {
    pub const GREEN: NodeState =
        NodeState { color: Color::Green, owner: None, cst: UNREACHED, parent: None, dst: None };

    fn root(side: Side) -> NodeState {
        NodeState { color: Color::Yellow, owner: Some(side), cst: 0, parent: None, dst: Some(0) }
    }
}

/// An edge `(p, h)` joining the two trees. `p` belongs to the side that was
/// scanning when the edge was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeetRecord {
    pub p: VertexId,
    pub h: VertexId,
    pub total: Weight,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounters {
    /// Adjacency entries examined.
    pub edge_scans: u64,
    /// Cost improvements, including first claims.
    pub relaxations: u64,
    pub enqueues: u64,
    pub dequeues: u64,
    pub levels_a: u64,
    pub levels_b: u64,
}

impl OpCounters {
    fn level(&self, side: Side) -> u64 {
        match side {
            Side::A => self.levels_a,
            Side::B => self.levels_b,
        }
    }

    fn level_mut(&mut self, side: Side) -> &mut u64 {
        match side {
            Side::A => &mut self.levels_a,
            Side::B => &mut self.levels_b,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Running,
    Done,
    WrongGraph,
    Unreachable,
}

/// Final status of a query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Ok,
    Unreachable,
    WrongGraph,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::Unreachable => "UNREACHABLE",
            Status::WrongGraph => "WRONG_GRAPH",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub path: Option<Vec<VertexId>>,
    pub cost: Option<Weight>,
    pub status: Status,
    pub counters: OpCounters,
}

impl SearchResult {
    pub fn unreachable(counters: OpCounters) -> Self {
        SearchResult { path: None, cost: None, status: Status::Unreachable, counters }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelaxOutcome {
    /// Green vertex taken by the scanning side.
    Claimed,
    /// Cheaper offer to an unscanned vertex on the scanning vertex's own
    /// level; the vertex moves to the next level.
    ImprovedSameLevel,
    /// Cheaper offer to a vertex already queued for the next level.
    Improved,
    /// Edge into the other side's tree.
    Meet,
    /// Cheaper offer to a red vertex of the same side.
    Violation,
    NoChange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelOutcome {
    Advanced,
    Exhausted,
    WrongGraph,
    /// First meet in a search that stops on contact.
    Contact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchMode {
    /// Treat every edge as weight 1.
    pub unit_weights: bool,
    /// Finish at the first meet instead of draining both fronts.
    pub stop_at_first_contact: bool,
}

impl SearchMode {
    pub const WEIGHTED: SearchMode = SearchMode { unit_weights: false, stop_at_first_contact: false };
    pub const UNWEIGHTED: SearchMode = SearchMode { unit_weights: true, stop_at_first_contact: true };
}

/// Hooks for watching a search. Both default to no-ops.
pub trait Observer {
    fn on_update(&mut self, _v: VertexId, _before: &NodeState, _after: &NodeState) {}
    fn on_meet(&mut self, _meet: &MeetRecord, _spcst: Weight) {}
}

impl Observer for () {}

#[derive(Debug, Clone)]
pub struct SearchState<'g> {
    graph: &'g Graph,
    query: Query,
    mode: SearchMode,
    nodes: Vec<NodeState>,
    current: [Vec<VertexId>; 2],
    next: [Vec<VertexId>; 2],
    spcst: Weight,
    best_meet: Option<MeetRecord>,
    meets: Vec<MeetRecord>,
    counters: OpCounters,
    status: SearchStatus,
}

impl<'g> SearchState<'g> {
    pub fn new(graph: &'g Graph, query: Query) -> Self {
        Self::with_mode(graph, query, SearchMode::default())
    }

    pub fn with_mode(graph: &'g Graph, query: Query, mode: SearchMode) -> Self {
        let n = graph.vertex_count();
        assert!(query.source < n && query.target < n, "query outside graph");
        let mut st = SearchState {
            graph,
            query,
            mode,
            nodes: vec![NodeState::GREEN; n],
            current: [Vec::new(), Vec::new()],
            next: [Vec::new(), Vec::new()],
            spcst: UNREACHED,
            best_meet: None,
            meets: Vec::new(),
            counters: OpCounters::default(),
            status: SearchStatus::Running,
        };
        st.nodes[query.source] = NodeState::root(Side::A);
        if query.is_trivial() {
            st.spcst = 0;
            st.status = SearchStatus::Done;
            return st;
        }
        st.nodes[query.target] = NodeState::root(Side::B);
        st.current[Side::A.idx()].push(query.source);
        st.current[Side::B.idx()].push(query.target);
        st.counters.enqueues = 2;
        st
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn query(&self) -> Query {
        self.query
    }

    pub fn node(&self, v: VertexId) -> &NodeState {
        &self.nodes[v]
    }

    pub fn nodes(&self) -> &[NodeState] {
        &self.nodes
    }

    pub fn status(&self) -> SearchStatus {
        self.status
    }

    /// Best meet cost so far, [`UNREACHED`] if none.
    pub fn spcst(&self) -> Weight {
        self.spcst
    }

    pub fn best_meet(&self) -> Option<&MeetRecord> {
        self.best_meet.as_ref()
    }

    /// Every meet recorded, in discovery order.
    pub fn meets(&self) -> &[MeetRecord] {
        &self.meets
    }

    pub fn counters(&self) -> &OpCounters {
        &self.counters
    }

    /// Vertices waiting in `side`'s current level.
    pub fn frontier(&self, side: Side) -> &[VertexId] {
        &self.current[side.idx()]
    }

    fn set_node<O: Observer>(&mut self, v: VertexId, new: NodeState, obs: &mut O) {
        let before = mem::replace(&mut self.nodes[v], new);
        obs.on_update(v, &before, &new);
    }

    fn enqueue_next(&mut self, side: Side, v: VertexId) {
        self.next[side.idx()].push(v);
        self.counters.enqueues += 1;
    }

    /// Examines the edge `(p, h)` from `p`, which must belong to `side` and
    /// be on the level that side is processing.
    pub fn relax_edge(&mut self, side: Side, p: VertexId, h: VertexId) -> RelaxOutcome {
        let w = self.graph.edge_weight(p, h).expect("relax_edge on a non-edge");
        let w = if self.mode.unit_weights { 1 } else { w };
        self.relax(side, p, h, w, &mut ())
    }

    fn relax<O: Observer>(
        &mut self,
        side: Side,
        p: VertexId,
        h: VertexId,
        w: Weight,
        obs: &mut O,
    ) -> RelaxOutcome {
        self.counters.edge_scans += 1;
        let ps = self.nodes[p];
        let hs = self.nodes[h];
        debug_assert_eq!(ps.owner, Some(side));
        let p_dst = ps.dst.expect("scanning vertex has a depth");
        let offer = ps.cst + w;

        match hs.owner {
            None => {
                let claimed = NodeState {
                    color: Color::Yellow,
                    owner: Some(side),
                    cst: offer,
                    parent: Some(p),
                    dst: Some(p_dst + 1),
                };
                self.set_node(h, claimed, obs);
                self.enqueue_next(side, h);
                self.counters.relaxations += 1;
                RelaxOutcome::Claimed
            }
            Some(owner) if owner != side => {
                let meet = MeetRecord { p, h, total: ps.cst + hs.cst + w };
                self.meets.push(meet);
                if meet.total < self.spcst {
                    self.spcst = meet.total;
                    self.best_meet = Some(meet);
                }
                obs.on_meet(&meet, self.spcst);
                RelaxOutcome::Meet
            }
            Some(_) => match hs.color {
                Color::Yellow | Color::YellowPromoted if hs.cst > offer => {
                    let h_dst = hs.dst.expect("owned vertex has a depth");
                    let updated = NodeState { cst: offer, parent: Some(p), ..hs };
                    if h_dst == p_dst {
                        let promoted = NodeState {
                            color: Color::YellowPromoted,
                            dst: Some(p_dst + 1),
                            ..updated
                        };
                        self.set_node(h, promoted, obs);
                        self.enqueue_next(side, h);
                        self.counters.relaxations += 1;
                        RelaxOutcome::ImprovedSameLevel
                    } else {
                        debug_assert_eq!(h_dst, p_dst + 1);
                        self.set_node(h, updated, obs);
                        self.counters.relaxations += 1;
                        RelaxOutcome::Improved
                    }
                }
                Color::Red if hs.cst > offer => RelaxOutcome::Violation,
                _ => RelaxOutcome::NoChange,
            },
        }
    }

    /// Processes every vertex on `side`'s current level, then makes the
    /// next level current.
    pub fn run_level<O: Observer>(&mut self, side: Side, obs: &mut O) -> LevelOutcome {
        match self.status {
            SearchStatus::Running => {}
            SearchStatus::WrongGraph => return LevelOutcome::WrongGraph,
            _ => return LevelOutcome::Exhausted,
        }
        let queue = mem::take(&mut self.current[side.idx()]);
        if queue.is_empty() {
            return LevelOutcome::Exhausted;
        }
        let level = self.counters.level(side) as u32;
        let graph = self.graph;

        for u in queue {
            self.counters.dequeues += 1;
            let us = self.nodes[u];
            // stale entry of a vertex promoted to a later level
            if us.color == Color::Red || us.dst != Some(level) {
                continue;
            }
            for &(v, w) in graph.neighbors(u) {
                let w = if self.mode.unit_weights { 1 } else { w };
                match self.relax(side, u, v, w, obs) {
                    RelaxOutcome::Violation => {
                        self.status = SearchStatus::WrongGraph;
                        return LevelOutcome::WrongGraph;
                    }
                    RelaxOutcome::Meet if self.mode.stop_at_first_contact => {
                        self.status = SearchStatus::Done;
                        return LevelOutcome::Contact;
                    }
                    _ => {}
                }
            }
            let red = NodeState { color: Color::Red, ..self.nodes[u] };
            self.set_node(u, red, obs);
        }

        self.current[side.idx()] = mem::take(&mut self.next[side.idx()]);
        *self.counters.level_mut(side) += 1;
        LevelOutcome::Advanced
    }

    /// Alternates levels, A first, until both fronts are exhausted or the
    /// search stops early.
    pub fn run<O: Observer>(&mut self, obs: &mut O) -> SearchStatus {
        while self.status == SearchStatus::Running {
            let a = self.run_level(Side::A, obs);
            if self.status != SearchStatus::Running {
                break;
            }
            let b = self.run_level(Side::B, obs);
            if self.status != SearchStatus::Running {
                break;
            }
            if a == LevelOutcome::Exhausted && b == LevelOutcome::Exhausted {
                self.status = if self.best_meet.is_some() {
                    SearchStatus::Done
                } else {
                    SearchStatus::Unreachable
                };
            }
        }
        self.status
    }

    fn walk_to_root(&self, from: VertexId) -> Vec<VertexId> {
        let mut out = vec![from];
        let mut v = from;
        while let Some(p) = self.nodes[v].parent {
            assert!(out.len() <= self.nodes.len(), "parent cycle at vertex {v}");
            out.push(p);
            v = p;
        }
        out
    }

    /// Source-to-destination path through the meet edge `m`.
    pub fn reconstruct_path(&self, m: &MeetRecord) -> Vec<VertexId> {
        let (a_end, b_end) = match self.nodes[m.p].owner {
            Some(Side::A) => (m.p, m.h),
            _ => (m.h, m.p),
        };
        let mut path = self.walk_to_root(a_end);
        path.reverse();
        path.extend(self.walk_to_root(b_end));
        path
    }

    pub fn result(&self) -> SearchResult {
        let counters = self.counters;
        match self.status {
            SearchStatus::Done if self.query.is_trivial() => SearchResult {
                path: Some(vec![self.query.source]),
                cost: Some(0),
                status: Status::Ok,
                counters,
            },
            SearchStatus::Done => {
                let m = self.best_meet.expect("finished search has a meet");
                SearchResult {
                    path: Some(self.reconstruct_path(&m)),
                    cost: Some(self.spcst),
                    status: Status::Ok,
                    counters,
                }
            }
            SearchStatus::WrongGraph => {
                SearchResult { path: None, cost: None, status: Status::WrongGraph, counters }
            }
            SearchStatus::Unreachable | SearchStatus::Running => SearchResult::unreachable(counters),
        }
    }
}

/// Runs the two-front search to completion.
pub fn solve(g: &Graph, q: Query) -> SearchResult {
    solve_observed(g, q, &mut ())
}

pub fn solve_observed<O: Observer>(g: &Graph, q: Query, obs: &mut O) -> SearchResult {
    let mut st = SearchState::new(g, q);
    st.run(obs);
    st.result()
}
