//! Exact certificates for (graph, subset) pairs.
//!
//! All comparisons against square-root thresholds are made on squares in
//! integer arithmetic: `a < sqrt(x + x'/2)` is checked as `2a^2 < 2x + x'`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::constructions::{CayleyContext, CounterexampleInstance};
use crate::graph::{bipartition, cayley_graph, max_degree_within, Graph, VertexSubset};
use crate::group::{Element, FiniteGroup};
use crate::{Error, Result};

/// Counts `(x, x')`: involutions and non-involutions in a connection set.
pub fn potechin_tsang_threshold(group: &FiniteGroup, s: &[Element]) -> Result<(usize, usize)> {
    let s = group.connection_set(s)?;
    let x = s.iter().filter(|&&e| group.is_involution(e)).count();
    Ok((x, s.len() - x))
}

/// `floor(d n / (2d - 1))`: no set inducing maximum degree at most 1 in a
/// `d`-regular graph on `n` vertices is larger.
///
/// # Panics
/// If `d == 0`.
pub fn degree_one_bound(d: u64, n: u64) -> u64 {
    assert!(d >= 1, "degree_one_bound needs d >= 1");
    d * n / (2 * d - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeOneBound {
    pub cap: u64,
    pub attained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    /// Valency, or `None` when the graph is not regular.
    pub d: Option<usize>,
    pub subset_size: usize,
    /// `|X| / n` in lowest terms, serialized as `[num, den]`.
    pub ratio: Ratio<u64>,
    pub induced_max_degree: usize,
    pub bipartite: bool,
    /// Involutions in the connection set; Cayley instances only.
    pub x: Option<usize>,
    /// Non-involutions in the connection set; Cayley instances only.
    pub x_prime: Option<usize>,
    pub is_pt_counterexample: bool,
    /// Only for regular graphs of positive valency.
    pub bound_d_2d1: Option<DegreeOneBound>,
}

impl Certificate {
    pub fn is_majority(&self) -> bool {
        self.ratio > Ratio::new(1, 2)
    }

    /// `induced_max_degree < sqrt(d)`, for regular graphs.
    pub fn below_huang_threshold(&self) -> Option<bool> {
        self.d
            .map(|d| self.induced_max_degree * self.induced_max_degree < d)
    }

    /// `2x + x'`, twice the square of the conjectured threshold.
    pub fn pt_threshold_twice_squared(&self) -> Option<usize> {
        Some(2 * self.x? + self.x_prime?)
    }
}

/// Computes every certificate field for `subset` in `graph`.
///
/// When a Cayley context is supplied the graph is rebuilt from it and must
/// match exactly.
pub fn verify_certificate(
    graph: &Graph,
    subset: &VertexSubset,
    cayley: Option<&CayleyContext>,
) -> Result<Certificate> {
    let induced_max_degree = max_degree_within(graph, subset)?;
    let n = graph.n();
    let subset_size = subset.len();
    let ratio = if n == 0 {
        Ratio::from_integer(0)
    } else {
        Ratio::new(subset_size as u64, n as u64)
    };
    let d = graph.regular_degree();
    let bipartite = bipartition(graph).is_bipartite();

    let (x, x_prime) = match cayley {
        Some(ctx) => {
            let rebuilt = cayley_graph(&ctx.group, &ctx.connection_set)?;
            if !same_edges(&rebuilt, graph) {
                return Err(Error::Precondition(
                    "graph is not the Cayley graph of the supplied group and connection set".into(),
                ));
            }
            let (x, xp) = potechin_tsang_threshold(&ctx.group, &ctx.connection_set)?;
            (Some(x), Some(xp))
        }
        None => (None, None),
    };

    let is_pt_counterexample = match (x, x_prime) {
        (Some(x), Some(xp)) => {
            ratio > Ratio::new(1, 2) && 2 * induced_max_degree * induced_max_degree < 2 * x + xp
        }
        _ => false,
    };

    let bound_d_2d1 = d.filter(|&d| d >= 1 && n >= 1).map(|d| {
        let cap = degree_one_bound(d as u64, n as u64);
        DegreeOneBound {
            cap,
            attained: subset_size as u64 == cap,
        }
    });

    Ok(Certificate {
        n,
        d,
        subset_size,
        ratio,
        induced_max_degree,
        bipartite,
        x,
        x_prime,
        is_pt_counterexample,
        bound_d_2d1,
    })
}

fn same_edges(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && (0..a.n()).all(|v| a.neighbors(v) == b.neighbors(v))
}

pub fn certify_instance(instance: &CounterexampleInstance) -> Result<Certificate> {
    verify_certificate(instance.graph(), instance.subset(), instance.cayley())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dihedral_counterexample, iterate_wreath, odd_counterexample};
    use crate::graph::{cayley_graph, odd_graph};
    use crate::group::{make_cyclic, make_dihedral, make_elementary_abelian};

    #[test]
    fn odd_graph_certificate() {
        let inst = odd_counterexample(2).unwrap();
        let c = certify_instance(&inst).unwrap();
        assert_eq!((c.n, c.d, c.subset_size), (10, Some(3), 6));
        assert_eq!(c.ratio, Ratio::new(3, 5));
        assert_eq!(c.induced_max_degree, 1);
        assert_eq!(c.x, None);
        assert!(!c.is_pt_counterexample);
        assert_eq!(
            c.bound_d_2d1,
            Some(DegreeOneBound {
                cap: 6,
                attained: true
            })
        );
        assert_eq!(c.below_huang_threshold(), Some(true));
    }

    #[test]
    fn k2_certificate() {
        let inst = &iterate_wreath(0).unwrap()[0];
        let c = certify_instance(inst).unwrap();
        assert_eq!(c.ratio, Ratio::from_integer(1));
        assert_eq!(c.induced_max_degree, 1);
        assert!(c.bipartite);
        // threshold sqrt(1) = 1 is not strictly exceeded
        assert_eq!((c.x, c.x_prime), (Some(1), Some(0)));
        assert!(!c.is_pt_counterexample);
    }

    #[test]
    fn gamma18_is_counterexample() {
        let inst = dihedral_counterexample().unwrap();
        let c = certify_instance(&inst).unwrap();
        assert_eq!((c.x, c.x_prime), (Some(3), Some(0)));
        assert_eq!(c.pt_threshold_twice_squared(), Some(6));
        assert!(c.is_pt_counterexample);
        assert!(c.bipartite);
        assert_eq!(
            c.bound_d_2d1,
            Some(DegreeOneBound {
                cap: 10,
                attained: true
            })
        );
    }

    #[test]
    fn threshold_counts() {
        let d18 = make_dihedral(9).unwrap();
        assert_eq!(
            potechin_tsang_threshold(&d18, &[9, 10, 12]).unwrap(),
            (3, 0)
        );
        let z5 = make_cyclic(5).unwrap();
        assert_eq!(potechin_tsang_threshold(&z5, &[1, 4]).unwrap(), (0, 2));
        let e3 = make_elementary_abelian(3).unwrap();
        assert_eq!(
            potechin_tsang_threshold(&e3, &[1, 2, 4, 7]).unwrap(),
            (4, 0)
        );
        assert!(potechin_tsang_threshold(&z5, &[1]).is_err());
        // x' is always even
        let z12 = make_cyclic(12).unwrap();
        let (_, xp) = potechin_tsang_threshold(&z12, &[1, 11, 6, 4, 8]).unwrap();
        assert_eq!(xp % 2, 0);
    }

    #[test]
    fn bound_values() {
        assert_eq!(degree_one_bound(3, 10), 6);
        assert_eq!(degree_one_bound(1, 2), 2);
        assert_eq!(degree_one_bound(3, 18), 10);
        assert_eq!(degree_one_bound(3, 36), 21);
    }

    #[test]
    fn mismatched_context_is_rejected() {
        let inst = dihedral_counterexample().unwrap();
        let mut ctx = inst.cayley().unwrap().clone();
        ctx.connection_set = vec![9, 10, 11];
        assert!(verify_certificate(inst.graph(), inst.subset(), Some(&ctx)).is_err());
    }

    #[test]
    fn non_regular_and_non_cayley() {
        let g = crate::graph::Graph::from_edges(3, &[(0, 1)]).unwrap();
        let c = verify_certificate(&g, &VertexSubset::full(3), None).unwrap();
        assert_eq!(c.d, None);
        assert_eq!(c.bound_d_2d1, None);
        assert_eq!(c.below_huang_threshold(), None);
        let petersen = odd_graph(2).unwrap();
        let c = verify_certificate(&petersen, &VertexSubset::full(10), None).unwrap();
        assert_eq!(c.induced_max_degree, 3);
        assert!(!c.is_pt_counterexample);
    }

    #[test]
    fn ratio_exactly_half_is_not_majority() {
        let z4 = make_cyclic(4).unwrap();
        let g = cayley_graph(&z4, &[1, 3]).unwrap();
        let x = VertexSubset::from_indices(4, [0, 2]).unwrap();
        let ctx = CayleyContext {
            group: z4,
            connection_set: vec![1, 3],
        };
        let c = verify_certificate(&g, &x, Some(&ctx)).unwrap();
        assert_eq!(c.induced_max_degree, 0);
        assert!(!c.is_majority());
        assert!(!c.is_pt_counterexample);
    }

    #[test]
    fn serializes_ratio_as_pair() {
        let inst = odd_counterexample(2).unwrap();
        let c = certify_instance(&inst).unwrap();
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["ratio"], serde_json::json!([3, 5]));
        let back: Certificate = serde_json::from_value(json).unwrap();
        assert_eq!(back, c);
    }
}
