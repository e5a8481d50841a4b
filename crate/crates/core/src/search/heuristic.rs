//! Greedy construction followed by (1, 2)-swaps: drop one member and refill
//! from its distance-2 ball whenever that adds at least two vertices.

use super::{branch_order, SearchResult};
use crate::graph::{Graph, VertexSubset};

const MAX_PASSES: usize = 100;

struct Local<'a> {
    graph: &'a Graph,
    k: u32,
    member: Vec<bool>,
    inc: Vec<u32>,
    evaluations: u64,
}

impl Local<'_> {
    fn feasible(&mut self, v: usize) -> bool {
        self.evaluations += 1;
        !self.member[v]
            && self.inc[v] <= self.k
            && self
                .graph
                .neighbors(v)
                .iter()
                .all(|&w| !self.member[w] || self.inc[w] < self.k)
    }

    fn add(&mut self, v: usize) {
        self.member[v] = true;
        for &u in self.graph.neighbors(v) {
            self.inc[u] += 1;
        }
    }

    fn remove(&mut self, v: usize) {
        self.member[v] = false;
        for &u in self.graph.neighbors(v) {
            self.inc[u] -= 1;
        }
    }

    fn ball2(&self, x: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.graph.neighbors(x).to_vec();
        for &u in self.graph.neighbors(x) {
            out.extend_from_slice(self.graph.neighbors(u));
        }
        out.sort_unstable();
        out.dedup();
        out.retain(|&v| v != x);
        out
    }
}

pub(super) fn run(graph: &Graph, k: usize) -> SearchResult {
    let n = graph.n();
    let order = branch_order(graph);
    let mut st = Local {
        graph,
        k: k.min(u32::MAX as usize) as u32,
        member: vec![false; n],
        inc: vec![0; n],
        evaluations: 0,
    };
    for &v in &order {
        if st.feasible(v) {
            st.add(v);
        }
    }
    for _ in 0..MAX_PASSES {
        let mut improved = false;
        for x in 0..n {
            if !st.member[x] {
                continue;
            }
            st.remove(x);
            let mut added = Vec::new();
            for c in st.ball2(x) {
                if st.feasible(c) {
                    st.add(c);
                    added.push(c);
                }
            }
            if added.len() >= 2 {
                improved = true;
            } else {
                for c in added {
                    st.remove(c);
                }
                st.add(x);
            }
        }
        if !improved {
            break;
        }
    }
    let witness = VertexSubset::from_predicate(n, |v| st.member[v]);
    SearchResult {
        best_size: witness.len(),
        witness,
        nodes_explored: st.evaluations,
        proven_optimal: false,
    }
}
