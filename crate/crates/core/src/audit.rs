//! Runtime invariant checking for the two-front search.
//!
//! [`audit`] drives a search level by level under an [`Auditor`] and
//! reports the first broken invariant:
//!
//! - colors only move forward (green, yellow, promoted, red)
//! - owners never change, costs never rise
//! - every vertex queued by a level sits exactly one hop below it
//! - parent links stay on one side, reach that side's root, and strictly
//!   decrease in depth
//! - the best meet cost never rises and equals a linear scan of the meet log
//! - the returned path is an s-t walk whose edge weights sum to the cost
//! - `edge_scans <= 4m` and `relaxations <= edge_scans`

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{Graph, Query, VertexId, Weight, UNREACHED};
use crate::search::{
    Color, LevelOutcome, MeetRecord, NodeState, Observer, SearchMode, SearchResult, SearchState,
    SearchStatus, Side, Status,
};

/// Observer that collects rule breaks as they happen.
#[derive(Debug, Default)]
pub struct Auditor {
    pub violations: Vec<String>,
    last_spcst: Option<Weight>,
    owners: BTreeMap<VertexId, Side>,
    meets: Vec<MeetRecord>,
}

impl Observer for Auditor {
    fn on_update(&mut self, v: VertexId, before: &NodeState, after: &NodeState) {
        if after.color < before.color {
            self.violations.push(format!("{v}: color {:?} -> {:?}", before.color, after.color));
        }
        match (after.owner, self.owners.get(&v)) {
            (None, _) => self.violations.push(format!("{v}: lost its owner")),
            (Some(o), Some(&prev)) if o != prev => {
                self.violations.push(format!("{v}: owner {prev:?} -> {o:?}"))
            }
            (Some(o), _) => {
                self.owners.insert(v, o);
            }
        }
        if before.owner.is_some() && after.cst > before.cst {
            self.violations.push(format!("{v}: cost rose {} -> {}", before.cst, after.cst));
        }
        if after.cst == UNREACHED || after.dst.is_none() {
            self.violations.push(format!("{v}: colored without cost or depth"));
        }
    }

    fn on_meet(&mut self, meet: &MeetRecord, spcst: Weight) {
        if let Some(prev) = self.last_spcst {
            if spcst > prev {
                self.violations.push(format!("best meet cost rose {prev} -> {spcst}"));
            }
        }
        self.last_spcst = Some(spcst);
        self.meets.push(*meet);
    }
}

fn check_forest(st: &SearchState<'_>) -> Result<(), String> {
    let q = st.query();
    let n = st.nodes().len();
    for (v, node) in st.nodes().iter().enumerate() {
        let green = node.color == Color::Green;
        if green != node.owner.is_none()
            || green != (node.cst == UNREACHED)
            || green != node.dst.is_none()
        {
            return Err(format!("{v}: inconsistent state {node:?}"));
        }
        if green {
            continue;
        }
        let root = if node.owner == Some(Side::A) { q.source } else { q.target };
        let mut cur = v;
        let mut steps = 0;
        while let Some(p) = st.node(cur).parent {
            let (c, pn) = (st.node(cur), st.node(p));
            if pn.owner != c.owner {
                return Err(format!("{cur}: parent {p} belongs to the other side"));
            }
            if pn.dst >= c.dst {
                return Err(format!("{cur}: depth does not decrease towards {p}"));
            }
            steps += 1;
            if steps > n {
                return Err(format!("{v}: parent cycle"));
            }
            cur = p;
        }
        if cur != root {
            return Err(format!("{v}: tree ends at {cur}, not at root {root}"));
        }
    }
    Ok(())
}

/// Checks that `path` runs from source to target over edges of `g` and
/// sums to `cost`.
pub fn check_path(g: &Graph, q: Query, path: &[VertexId], cost: Weight) -> Result<(), String> {
    if path.first() != Some(&q.source) || path.last() != Some(&q.target) {
        return Err(format!("path {path:?} does not join {} and {}", q.source, q.target));
    }
    let mut sum: Weight = 0;
    for pair in path.windows(2) {
        sum += g.edge_weight(pair[0], pair[1]).ok_or_else(|| format!("{pair:?} is not an edge"))?;
    }
    if sum != cost {
        return Err(format!("path sums to {sum}, reported cost {cost}"));
    }
    Ok(())
}

/// Runs one search with every invariant checked and returns its result.
pub fn audit(g: &Graph, q: Query, mode: SearchMode) -> Result<SearchResult, String> {
    let mut st = SearchState::with_mode(g, q, mode);
    let mut obs = Auditor::default();
    let mut side = Side::A;
    let mut idle_turns = 0;
    while st.status() == SearchStatus::Running {
        let level = match side {
            Side::A => st.counters().levels_a,
            Side::B => st.counters().levels_b,
        } as u32;
        let before: Vec<NodeState> = st.nodes().to_vec();
        let outcome = st.run_level(side, &mut obs);
        if outcome == LevelOutcome::Advanced {
            for (v, (old, new)) in before.iter().zip(st.nodes()).enumerate() {
                let queued = new.color != old.color
                    && matches!(new.color, Color::Yellow | Color::YellowPromoted);
                if queued && new.dst != Some(level + 1) {
                    return Err(format!("{v}: queued at depth {:?} by level {level}", new.dst));
                }
            }
            if let Some(&v) = st.frontier(side).iter().find(|&&v| st.node(v).owner != Some(side)) {
                return Err(format!("{v}: queued for {side:?} but not owned by it"));
            }
        }
        idle_turns = if outcome == LevelOutcome::Exhausted { idle_turns + 1 } else { 0 };
        if idle_turns >= 2 {
            // both fronts empty: let the driver apply its finishing rule
            st.run(&mut obs);
            break;
        }
        side = side.other();
    }
    if !obs.violations.is_empty() {
        return Err(obs.violations.join("; "));
    }
    check_forest(&st)?;

    if obs.meets.as_slice() != st.meets() {
        return Err("meet log differs from the observed meets".into());
    }
    if !q.is_trivial() {
        let scanned = st.meets().iter().map(|m| m.total).min().unwrap_or(UNREACHED);
        if scanned != st.spcst() {
            return Err(format!("running minimum {} != linear scan {scanned}", st.spcst()));
        }
        if let Some(best) = st.best_meet() {
            if st.meets().iter().find(|m| m.total == scanned) != Some(best) {
                return Err("equal-cost tie not resolved to the first meet".into());
            }
        }
    }

    let c = st.counters();
    if c.relaxations > c.edge_scans || c.edge_scans > 4 * g.edge_count() as u64 {
        return Err(format!("counter bounds broken: {c:?} with m = {}", g.edge_count()));
    }
    let r = st.result();
    if r.status == Status::Ok {
        let path = r.path.as_deref().unwrap_or(&[]);
        let cost = r.cost.unwrap_or(UNREACHED);
        if mode.unit_weights {
            check_path(&g.with_uniform_weight(1), q, path, cost)?;
        } else {
            check_path(g, q, path, cost)?;
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_run_passes() {
        let g = Graph::from_edges(4, [(0, 2, 1), (2, 3, 1), (3, 1, 1), (0, 3, 5)]).unwrap();
        let r = audit(&g, Query::new(0, 1), SearchMode::default()).unwrap();
        assert_eq!(r.cost, Some(3));
    }

    #[test]
    fn auditor_flags_backward_color() {
        let mut a = Auditor::default();
        let yellow = NodeState { color: Color::Yellow, owner: Some(Side::A), cst: 1, parent: None, dst: Some(1) };
        let red = NodeState { color: Color::Red, ..yellow };
        a.on_update(3, &red, &yellow);
        assert_eq!(a.violations.len(), 1);
    }

    #[test]
    fn auditor_flags_owner_change_and_rising_spcst() {
        let mut a = Auditor::default();
        let s = NodeState { color: Color::Yellow, owner: Some(Side::A), cst: 1, parent: None, dst: Some(1) };
        a.on_update(3, &NodeState::GREEN, &s);
        a.on_update(3, &s, &NodeState { owner: Some(Side::B), ..s });
        a.on_meet(&MeetRecord { p: 0, h: 1, total: 4 }, 4);
        a.on_meet(&MeetRecord { p: 0, h: 1, total: 9 }, 9);
        assert_eq!(a.violations.len(), 2);
    }

    #[test]
    fn bad_paths_rejected() {
        let g = Graph::from_edges(3, [(0, 1, 2), (1, 2, 2)]).unwrap();
        let q = Query::new(0, 2);
        assert!(check_path(&g, q, &[0, 1, 2], 4).is_ok());
        assert!(check_path(&g, q, &[0, 1, 2], 5).is_err());
        assert!(check_path(&g, q, &[0, 2], 4).is_err());
        assert!(check_path(&g, q, &[1, 2], 2).is_err());
    }
}
