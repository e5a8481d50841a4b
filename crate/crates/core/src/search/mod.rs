//! Maximum induced subgraphs of bounded degree.
//!
//! Given a graph and a cap `k`, find a largest vertex set whose induced
//! subgraph has maximum degree at most `k` (`k = 0` is maximum independent
//! set). [`max_bounded_degree_subset`] is an exact branch-and-bound,
//! [`brute_force_oracle`] enumerates all subsets and exists to check it.

mod census;
mod exact;
mod heuristic;
mod oracle;

use std::fmt;
use std::sync::Arc;

use crate::graph::{Graph, VertexSubset};
use crate::limits::MAX_EXACT_VERTICES;
use crate::{Error, Result};

pub use census::{canonical_dihedral_set, census_dihedral, dihedral_connection_sets, CensusHit};
pub use oracle::brute_force_oracle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub best_size: usize,
    pub witness: VertexSubset,
    pub nodes_explored: u64,
    /// False when the heuristic ran or the exact search hit its node limit.
    pub proven_optimal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// Exact below [`MAX_EXACT_VERTICES`], heuristic above.
    #[default]
    Auto,
    Exact,
    Heuristic,
}

/// Snapshot handed to a [`ProgressHook`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progress {
    pub nodes_explored: u64,
    pub incumbent: usize,
}

pub type ProgressHook = Arc<dyn Fn(Progress) + Send + Sync>;

#[derive(Clone, Default)]
pub struct SearchOptions {
    pub mode: SearchMode,
    /// Worker threads for the exact search; 0 and 1 both mean a single
    /// deterministic thread.
    pub threads: usize,
    /// Stop the exact search after this many nodes, giving up the
    /// optimality proof.
    pub node_limit: Option<u64>,
    pub progress: Option<ProgressHook>,
}

impl fmt::Debug for SearchOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SearchOptions")
            .field("mode", &self.mode)
            .field("threads", &self.threads)
            .field("node_limit", &self.node_limit)
            .field("progress", &self.progress.is_some())
            .finish()
    }
}

/// Single-threaded search with default options.
pub fn max_bounded_degree_subset(graph: &Graph, k: usize) -> SearchResult {
    search(graph, k, &SearchOptions::default()).expect("auto mode never exceeds a cap")
}

/// Runs the search selected by `options`.
///
/// Fails only when exact mode is forced on a graph above the exact cap.
pub fn search(graph: &Graph, k: usize, options: &SearchOptions) -> Result<SearchResult> {
    let exact = match options.mode {
        SearchMode::Exact => {
            if graph.n() > MAX_EXACT_VERTICES {
                return Err(Error::ResourceLimit(format!(
                    "exact search supports at most {MAX_EXACT_VERTICES} vertices, graph has {}; \
                     use heuristic mode",
                    graph.n()
                )));
            }
            true
        }
        SearchMode::Heuristic => false,
        SearchMode::Auto => graph.n() <= MAX_EXACT_VERTICES,
    };
    Ok(if exact {
        exact::run(graph, k, options)
    } else {
        heuristic::run(graph, k)
    })
}

/// Vertices by descending degree, ties by index.
pub(crate) fn branch_order(graph: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..graph.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(graph.degree(v)));
    order
}
