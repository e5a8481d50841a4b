use std::collections::VecDeque;
use std::fmt;

use super::{Graph, VertexSubset};
use crate::{Error, Result};

/// Degrees of the subgraph induced by a vertex subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedDegrees {
    /// Maximum induced degree; 0 for the empty subset.
    pub max: usize,
    /// `(vertex, induced degree)` for every member, ascending by vertex.
    pub per_vertex: Vec<(usize, usize)>,
}

impl InducedDegrees {
    pub fn min(&self) -> usize {
        self.per_vertex.iter().map(|&(_, d)| d).min().unwrap_or(0)
    }

    /// Every member has induced degree exactly `k`.
    pub fn is_regular_of(&self, k: usize) -> bool {
        self.per_vertex.iter().all(|&(_, d)| d == k)
    }
}

fn check_host(graph: &Graph, subset: &VertexSubset) -> Result<()> {
    if subset.graph_n() != graph.n() {
        return Err(Error::Precondition(format!(
            "subset is over {} vertices but the graph has {}",
            subset.graph_n(),
            graph.n()
        )));
    }
    Ok(())
}

pub fn induced_degrees(graph: &Graph, subset: &VertexSubset) -> Result<InducedDegrees> {
    check_host(graph, subset)?;
    let per_vertex: Vec<(usize, usize)> = subset
        .iter()
        .map(|v| {
            (
                v,
                graph
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| subset.contains(u))
                    .count(),
            )
        })
        .collect();
    let max = per_vertex.iter().map(|&(_, d)| d).max().unwrap_or(0);
    Ok(InducedDegrees { max, per_vertex })
}

/// Maximum degree of the subgraph induced by `subset`.
pub fn max_degree_within(graph: &Graph, subset: &VertexSubset) -> Result<usize> {
    induced_degrees(graph, subset).map(|d| d.max)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Even,
    Odd,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::Even => Side::Odd,
            Side::Odd => Side::Even,
        }
    }
}

/// A proper 2-colouring. The lowest-numbered vertex of each component is
/// even, so the identity of a Cayley graph is even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn is_even(&self, v: usize) -> bool {
        self.side[v] == Side::Even
    }

    pub fn even_count(&self) -> usize {
        self.side.iter().filter(|&&s| s == Side::Even).count()
    }

    pub fn odd_count(&self) -> usize {
        self.side.len() - self.even_count()
    }

    pub fn even_vertices(&self) -> VertexSubset {
        VertexSubset::from_predicate(self.side.len(), |v| self.side[v] == Side::Even)
    }

    pub fn odd_vertices(&self) -> VertexSubset {
        VertexSubset::from_predicate(self.side.len(), |v| self.side[v] == Side::Odd)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite(Bipartition),
    /// Vertices of an odd closed walk that is a cycle, in order.
    NotBipartite {
        odd_cycle: Vec<usize>,
    },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }

    pub fn partition(&self) -> Option<&Bipartition> {
        match self {
            Bipartiteness::Bipartite(b) => Some(b),
            Bipartiteness::NotBipartite { .. } => None,
        }
    }
}

/// BFS 2-colouring, or an odd cycle when none exists.
pub fn bipartition(graph: &Graph) -> Bipartiteness {
    let n = graph.n();
    let mut side: Vec<Option<Side>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(Side::Even);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued vertices are coloured");
            for &v in graph.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(su.flip());
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(sv) if sv == su => {
                        return Bipartiteness::NotBipartite {
                            odd_cycle: tree_cycle(&parent, &depth, u, v),
                        };
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Bipartiteness::Bipartite(Bipartition {
        side: side.into_iter().map(|s| s.unwrap()).collect(),
    })
}

/// Closes the BFS-tree paths from `u` and `v` to their common ancestor.
fn tree_cycle(parent: &[usize], depth: &[usize], mut u: usize, mut v: usize) -> Vec<usize> {
    let mut left = vec![u];
    let mut right = vec![v];
    while depth[u] > depth[v] {
        u = parent[u];
        left.push(u);
    }
    while depth[v] > depth[u] {
        v = parent[v];
        right.push(v);
    }
    while u != v {
        u = parent[u];
        v = parent[v];
        left.push(u);
        right.push(v);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// First reason a vertex map fails to be a covering map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverViolation {
    WrongLength {
        expected: usize,
        got: usize,
    },
    OutOfRange {
        vertex: usize,
        image: usize,
    },
    NotSurjective {
        missed: usize,
    },
    /// `f` restricted to `N(vertex)` is not a bijection onto `N(f(vertex))`.
    NotLocallyBijective {
        vertex: usize,
    },
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverViolation::WrongLength { expected, got } => {
                write!(f, "vertex map has {got} entries, expected {expected}")
            }
            CoverViolation::OutOfRange { vertex, image } => {
                write!(f, "vertex {vertex} maps to {image}, outside the base graph")
            }
            CoverViolation::NotSurjective { missed } => {
                write!(f, "base vertex {missed} has an empty fibre")
            }
            CoverViolation::NotLocallyBijective { vertex } => {
                write!(
                    f,
                    "map is not a bijection from the neighbourhood of vertex {vertex}"
                )
            }
        }
    }
}

/// Checks that `f: cover -> base` is surjective and a local isomorphism.
pub fn check_covering_map(
    cover: &Graph,
    base: &Graph,
    f: &[usize],
) -> std::result::Result<(), CoverViolation> {
    if f.len() != cover.n() {
        return Err(CoverViolation::WrongLength {
            expected: cover.n(),
            got: f.len(),
        });
    }
    let mut hit = vec![false; base.n()];
    for (vertex, &image) in f.iter().enumerate() {
        if image >= base.n() {
            return Err(CoverViolation::OutOfRange { vertex, image });
        }
        hit[image] = true;
    }
    if let Some(missed) = hit.iter().position(|&h| !h) {
        return Err(CoverViolation::NotSurjective { missed });
    }
    let mut images = Vec::new();
    for v in 0..cover.n() {
        images.clear();
        images.extend(cover.neighbors(v).iter().map(|&u| f[u]));
        images.sort_unstable();
        if images.as_slice() != base.neighbors(f[v]) {
            return Err(CoverViolation::NotLocallyBijective { vertex: v });
        }
    }
    Ok(())
}

pub fn is_covering_map(cover: &Graph, base: &Graph, f: &[usize]) -> bool {
    check_covering_map(cover, base, f).is_ok()
}

/// Preimage `f^-1(subset)` under a covering map, which is checked first.
pub fn lift_subset(
    cover: &Graph,
    base: &Graph,
    f: &[usize],
    subset: &VertexSubset,
) -> Result<VertexSubset> {
    check_host(base, subset)?;
    check_covering_map(cover, base, f)
        .map_err(|v| Error::Precondition(format!("not a covering map: {v}")))?;
    Ok(VertexSubset::from_predicate(cover.n(), |v| {
        subset.contains(f[v])
    }))
}
