use super::SearchResult;
use crate::graph::{Graph, VertexSubset};
use crate::limits::MAX_ORACLE_VERTICES;
use crate::{Error, Result};

/// Checks all `2^n` subsets with no pruning. The witness is the numerically
/// smallest mask among the largest valid subsets.
pub fn brute_force_oracle(graph: &Graph, k: usize) -> Result<SearchResult> {
    let n = graph.n();
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "brute-force oracle supports at most {MAX_ORACLE_VERTICES} vertices, graph has {n}"
        )));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| graph.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect();
    let mut best_mask = 0u32;
    let mut best_size = 0u32;
    let total: u64 = 1 << n;
    for mask in 0..total {
        let mask = mask as u32;
        let ok = (0..n).all(|v| (mask >> v) & 1 == 0 || (adj[v] & mask).count_ones() as usize <= k);
        let size = mask.count_ones();
        if ok && size > best_size {
            best_size = size;
            best_mask = mask;
        }
    }
    let witness = VertexSubset::from_indices(n, (0..n).filter(|&v| (best_mask >> v) & 1 == 1))?;
    Ok(SearchResult {
        best_size: best_size as usize,
        witness,
        nodes_explored: total,
        proven_optimal: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::dihedral_counterexample;
    use crate::graph::{empty_graph, odd_graph};

    #[test]
    fn oracle_examples() {
        let g18 = dihedral_counterexample().unwrap();
        assert_eq!(brute_force_oracle(g18.graph(), 1).unwrap().best_size, 10);
        assert_eq!(brute_force_oracle(&empty_graph(5), 0).unwrap().best_size, 5);
        let petersen = odd_graph(2).unwrap();
        assert_eq!(brute_force_oracle(&petersen, 0).unwrap().best_size, 4);
        assert_eq!(brute_force_oracle(&petersen, 1).unwrap().best_size, 6);
        assert!(brute_force_oracle(&empty_graph(25), 0).is_err());
    }
}
