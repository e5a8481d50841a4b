//! Simple undirected graphs, vertex subsets and the structural checks used
//! to certify induced-subgraph claims.

mod builders;
mod structure;

use fixedbitset::FixedBitSet;

use crate::{Error, Result};

pub use builders::{
    cayley_graph, colex_rank, complete_graph, cycle_graph, empty_graph, hypercube, odd_graph,
    odd_graph_vertex_sets,
};
pub use structure::{
    bipartition, check_covering_map, induced_degrees, is_covering_map, lift_subset,
    max_degree_within, Bipartiteness, Bipartition, CoverViolation, InducedDegrees, Side,
};

/// Simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Precondition(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, row) in adj.iter_mut().enumerate() {
            row.sort_unstable();
            if let Some(w) = row.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Precondition(format!(
                    "repeated edge ({u}, {})",
                    w[0]
                )));
            }
        }
        Ok(Graph { adj, labels: None })
    }

    /// Builds a graph from adjacency lists, checking symmetry and simplicity.
    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        for (u, row) in adj.iter_mut().enumerate() {
            row.sort_unstable();
            if row.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Precondition(format!(
                    "vertex {u} has a repeated neighbour"
                )));
            }
            if row.iter().any(|&v| v == u || v >= n) {
                return Err(Error::Precondition(format!(
                    "vertex {u} has a loop or out-of-range neighbour"
                )));
            }
        }
        for u in 0..n {
            for &v in &adj[u] {
                if adj[v].binary_search(&u).is_err() {
                    return Err(Error::Precondition(format!(
                        "edge ({u}, {v}) is not symmetric"
                    )));
                }
            }
        }
        Ok(Graph { adj, labels: None })
    }

    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj.iter().all(|r| r.windows(2).all(|w| w[0] < w[1])));
        Graph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::Precondition(format!(
                "{} labels supplied for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The vertex label, or the index when the graph is unlabelled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// `Some(d)` when every vertex has degree `d`. The empty graph is
    /// 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|r| r.len() == d).then_some(d)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n()
    }

    /// True if the vertex permutation `perm` maps edges onto edges.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.n() {
            return false;
        }
        let mut hit = vec![false; self.n()];
        for &p in perm {
            if p >= self.n() || hit[p] {
                return false;
            }
            hit[p] = true;
        }
        self.adj.iter().enumerate().all(|(u, row)| {
            row.len() == self.degree(perm[u])
                && row.iter().all(|&v| self.has_edge(perm[u], perm[v]))
        })
    }
}

/// A set of vertices of a graph with `graph_n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    members: FixedBitSet,
}

impl VertexSubset {
    pub fn empty(graph_n: usize) -> Self {
        VertexSubset {
            members: FixedBitSet::with_capacity(graph_n),
        }
    }

    pub fn full(graph_n: usize) -> Self {
        let mut members = FixedBitSet::with_capacity(graph_n);
        members.insert_range(..);
        VertexSubset { members }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(graph_n: usize, indices: I) -> Result<Self> {
        let mut s = Self::empty(graph_n);
        for v in indices {
            if v >= graph_n {
                return Err(Error::Precondition(format!(
                    "subset member {v} is outside a graph with {graph_n} vertices"
                )));
            }
            s.members.insert(v);
        }
        Ok(s)
    }

    pub fn from_predicate(graph_n: usize, mut keep: impl FnMut(usize) -> bool) -> Self {
        let mut s = Self::empty(graph_n);
        for v in 0..graph_n {
            if keep(v) {
                s.members.insert(v);
            }
        }
        s
    }

    pub fn graph_n(&self) -> usize {
        self.members.len()
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.members.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.members.set(v, false);
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSubset) -> bool {
        self.members.is_subset(&other.members)
    }

    /// True if more than half of the host graph's vertices are members.
    pub fn is_majority(&self) -> bool {
        2 * self.len() > self.graph_n()
    }
}
