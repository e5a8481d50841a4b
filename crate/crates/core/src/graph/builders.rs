use super::Graph;
use crate::group::{Element, FiniteGroup};
use crate::limits::{check_graph_size, MAX_HYPERCUBE_DIMENSION};
use crate::{Error, Result};

/// `Cay(G, S)`: vertices are group elements, `g ~ h` iff `g^-1 h` is in `S`.
///
/// Vertex `v` is group element `v`, and vertex labels are element labels.
/// `S` need not generate `G`; the result is then disconnected.
pub fn cayley_graph(group: &FiniteGroup, s: &[Element]) -> Result<Graph> {
    let s = group.connection_set(s)?;
    let n = group.order();
    check_graph_size(n, n.saturating_mul(s.len()), "Cayley graph")?;
    let adj = group
        .elements()
        .map(|g| {
            let mut row: Vec<usize> = s.iter().map(|&x| group.multiply(g, x)).collect();
            row.sort_unstable();
            row
        })
        .collect();
    Graph::from_sorted_adjacency(adj).with_labels(group.labels())
}

/// All `k`-subsets of `0..ground` as bit masks, in colexicographic order
/// (which is ascending numeric order of the masks).
fn colex_subsets(ground: u32, k: u32) -> Vec<u64> {
    let mut out = Vec::new();
    if k > ground {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    let limit = 1u64 << ground;
    let mut x: u64 = (1u64 << k) - 1;
    while x < limit {
        out.push(x);
        // Gosper's hack: next mask with the same popcount
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    num_integer::binomial(n as u128, k.min(n - k) as u128)
}

/// Position of a subset in colexicographic order among subsets of its size.
pub fn colex_rank(mask: u64) -> usize {
    let mut rank = 0u128;
    let mut rest = mask;
    let mut i = 1;
    while rest != 0 {
        let c = rest.trailing_zeros() as u64;
        rank += binomial(c, i);
        rest &= rest - 1;
        i += 1;
    }
    rank as usize
}

/// Vertex sets of the odd graph `O_n`: the `n`-subsets of `{0, ..., 2n}` as
/// bit masks in colexicographic order.
pub fn odd_graph_vertex_sets(n: u32) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "odd graph parameter n must be at least 1".into(),
        ));
    }
    let count = if n <= 31 {
        binomial(2 * n as u64 + 1, n as u64)
    } else {
        u128::MAX
    };
    let count = usize::try_from(count).unwrap_or(usize::MAX);
    check_graph_size(
        count,
        count.saturating_mul(n as usize + 1),
        &format!("odd graph O_{n}"),
    )?;
    Ok(colex_subsets(2 * n + 1, n))
}

/// The odd graph `O_n`: `n`-subsets of a `(2n+1)`-set, adjacent when disjoint.
pub fn odd_graph(n: u32) -> Result<Graph> {
    let sets = odd_graph_vertex_sets(n)?;
    let ground_mask = (1u64 << (2 * n + 1)) - 1;
    let adj = sets
        .iter()
        .map(|&a| {
            // neighbours are the complement of `a` minus one point
            let comp = ground_mask & !a;
            let mut row: Vec<usize> = (0..2 * n + 1)
                .filter(|&p| (comp >> p) & 1 == 1)
                .map(|p| colex_rank(comp & !(1u64 << p)))
                .collect();
            row.sort_unstable();
            row
        })
        .collect();
    let labels = sets.iter().map(|&a| set_label(a)).collect();
    Graph::from_sorted_adjacency(adj).with_labels(labels)
}

fn set_label(mask: u64) -> String {
    let pts: Vec<String> = (0..64)
        .filter(|&p| (mask >> p) & 1 == 1)
        .map(|p: u32| p.to_string())
        .collect();
    format!("{{{}}}", pts.join(","))
}

/// The `d`-dimensional hypercube on bit strings of length `d`.
pub fn hypercube(d: u32) -> Result<Graph> {
    if d > MAX_HYPERCUBE_DIMENSION {
        return Err(Error::ResourceLimit(format!(
            "hypercube dimension {d} exceeds the cap of {MAX_HYPERCUBE_DIMENSION}"
        )));
    }
    let n = 1usize << d;
    check_graph_size(n, n * d as usize, "hypercube")?;
    let adj = (0..n)
        .map(|v| {
            let mut row: Vec<usize> = (0..d).map(|i| v ^ (1 << i)).collect();
            row.sort_unstable();
            row
        })
        .collect();
    let labels = (0..n)
        .map(|v| {
            (0..d)
                .rev()
                .map(|i| if (v >> i) & 1 == 1 { '1' } else { '0' })
                .collect()
        })
        .collect();
    Graph::from_sorted_adjacency(adj).with_labels(labels)
}

/// The cycle `C_n` for `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete_graph(n: usize) -> Graph {
    let adj = (0..n)
        .map(|u| (0..n).filter(|&v| v != u).collect())
        .collect();
    Graph::from_sorted_adjacency(adj)
}

pub fn empty_graph(n: usize) -> Graph {
    Graph::from_sorted_adjacency(vec![Vec::new(); n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition, Bipartiteness};
    use crate::group::{dihedral_element, make_cyclic, make_dihedral};

    /// Length of a shortest cycle by BFS from every vertex.
    fn girth(g: &Graph) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..g.n() {
            let mut dist = vec![usize::MAX; g.n()];
            let mut parent = vec![usize::MAX; g.n()];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in g.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn gamma18() {
        let d18 = make_dihedral(9).unwrap();
        let s = [
            dihedral_element(9, 0, 1),
            dihedral_element(9, 1, 1),
            dihedral_element(9, 3, 1),
        ];
        let g = cayley_graph(&d18, &s).unwrap();
        assert_eq!(g.n(), 18);
        assert_eq!(g.regular_degree(), Some(3));
        assert!(g.is_connected());
        assert_eq!(g.label(12), "a^3 b");
        // left translations are automorphisms
        for x in d18.elements() {
            let perm: Vec<_> = d18.elements().map(|y| d18.multiply(x, y)).collect();
            assert!(g.is_automorphism(&perm));
        }
    }

    #[test]
    fn small_cayley_graphs() {
        let z2 = make_cyclic(2).unwrap();
        let k2 = cayley_graph(&z2, &[1]).unwrap();
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(0, 1)]);

        let z5 = make_cyclic(5).unwrap();
        let c5 = cayley_graph(&z5, &[1, 4]).unwrap();
        assert_eq!(
            c5,
            cycle_graph(5).unwrap().with_labels(z5.labels()).unwrap()
        );

        assert!(cayley_graph(&z5, &[1]).is_err());
        assert!(cayley_graph(&z5, &[0]).is_err());
        let disconnected = cayley_graph(&make_cyclic(6).unwrap(), &[2, 4]).unwrap();
        assert!(!disconnected.is_connected());
    }

    #[test]
    fn colex_order_and_rank() {
        let sets = colex_subsets(5, 2);
        assert_eq!(sets.len(), 10);
        assert_eq!(sets[..4], [0b00011, 0b00101, 0b00110, 0b01001]);
        for (i, &m) in sets.iter().enumerate() {
            assert_eq!(colex_rank(m), i);
        }
        assert_eq!(colex_subsets(3, 0), vec![0]);
        assert!(colex_subsets(2, 3).is_empty());
    }

    #[test]
    fn odd_graphs() {
        assert!(odd_graph(0).is_err());
        let k3 = odd_graph(1).unwrap();
        assert_eq!(k3.adj, complete_graph(3).adj);

        let petersen = odd_graph(2).unwrap();
        assert_eq!(petersen.n(), 10);
        assert_eq!(petersen.regular_degree(), Some(3));
        assert_eq!(girth(&petersen), Some(5));
        assert_eq!(petersen.label(0), "{0,1}");

        let o3 = odd_graph(3).unwrap();
        assert_eq!(o3.n(), 35);
        assert_eq!(o3.regular_degree(), Some(4));
        for n in 1..=6u32 {
            let g = odd_graph(n).unwrap();
            let sets = odd_graph_vertex_sets(n).unwrap();
            assert_eq!(g.regular_degree(), Some(n as usize + 1));
            for (u, v) in g.edges() {
                assert_eq!(sets[u] & sets[v], 0);
            }
        }
    }

    #[test]
    fn odd_graph_cap() {
        assert!(matches!(odd_graph(40), Err(Error::ResourceLimit(_))));
        assert!(matches!(odd_graph(12), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn hypercubes() {
        assert_eq!(hypercube(0).unwrap().n(), 1);
        let q3 = hypercube(3).unwrap();
        assert_eq!(q3.n(), 8);
        assert_eq!(q3.regular_degree(), Some(3));
        let q4 = hypercube(4).unwrap();
        match bipartition(&q4) {
            Bipartiteness::Bipartite(b) => assert_eq!(b.even_count(), 8),
            other => panic!("{other:?}"),
        }
        assert!(hypercube(21).is_err());
    }
}
