//! Unit-weight variant: the same two-front expansion, finished at the first
//! contact between the fronts.

use crate::graph::{Graph, Query};
use crate::search::{SearchMode, SearchResult, SearchState};

/// Fewest-hop path from `q.source` to `q.target`. Edge weights are ignored;
/// the returned cost is the hop count.
pub fn solve_unweighted(g: &Graph, q: Query) -> SearchResult {
    let mut st = unweighted_state(g, q);
    st.run(&mut ());
    st.result()
}

pub fn unweighted_state(g: &Graph, q: Query) -> SearchState<'_> {
    SearchState::with_mode(g, q, SearchMode::UNWEIGHTED)
}
