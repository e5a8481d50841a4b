//! The three majority-subset families: odd graphs, cubic dihedral Cayley
//! graphs with their cyclic covers, and iterated `Z_2` wreath products.
//!
//! Every constructor re-checks its claims before returning, so an
//! `Ok(instance)` always carries a majority subset inducing maximum degree
//! at most 1.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{
    bipartition, cayley_graph, induced_degrees, lift_subset, max_degree_within, odd_graph,
    odd_graph_vertex_sets, Bipartiteness, Graph, VertexSubset,
};
use crate::group::{
    canonical_generating_set, dihedral_element, make_cyclic, make_dihedral, quotient,
    subgroup_generated, wreath_z2, Element, FiniteGroup, GroupHom, WreathElement,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Odd,
    Dihedral,
    DihedralCover,
    Wreath,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Odd => "odd",
            Family::Dihedral => "dihedral",
            Family::DihedralCover => "dihedral_cover",
            Family::Wreath => "wreath",
        }
    }
}

/// The group and connection set behind a Cayley graph.
#[derive(Clone, Debug)]
pub struct CayleyContext {
    pub group: FiniteGroup,
    pub connection_set: Vec<Element>,
}

/// A graph together with a majority subset inducing maximum degree <= 1.
#[derive(Clone, Debug)]
pub struct CounterexampleInstance {
    graph: Graph,
    subset: VertexSubset,
    family: Family,
    params: BTreeMap<String, u64>,
    cayley: Option<CayleyContext>,
}

impl CounterexampleInstance {
    pub fn new(
        graph: Graph,
        subset: VertexSubset,
        family: Family,
        params: BTreeMap<String, u64>,
        cayley: Option<CayleyContext>,
    ) -> Result<Self> {
        if let Some(ctx) = &cayley {
            if ctx.group.order() != graph.n() {
                return Err(Error::Precondition(
                    "Cayley context does not match the graph order".into(),
                ));
            }
        }
        if !subset.is_majority() {
            return Err(Error::Precondition(format!(
                "subset has {} of {} vertices, not more than half",
                subset.len(),
                graph.n()
            )));
        }
        let maxdeg = max_degree_within(&graph, &subset)?;
        if maxdeg > 1 {
            return Err(Error::Precondition(format!(
                "subset induces maximum degree {maxdeg}, above 1"
            )));
        }
        Ok(CounterexampleInstance {
            graph,
            subset,
            family,
            params,
            cayley,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn subset(&self) -> &VertexSubset {
        &self.subset
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &BTreeMap<String, u64> {
        &self.params
    }

    pub fn cayley(&self) -> Option<&CayleyContext> {
        self.cayley.as_ref()
    }
}

fn params(pairs: &[(&str, u64)]) -> BTreeMap<String, u64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// `O_n` with the `n`-subsets avoiding the last ground point `2n`.
///
/// Each such set `A` has exactly one neighbour inside the subset, namely the
/// complement of `A ∪ {2n}`.
pub fn odd_counterexample(n: u32) -> Result<CounterexampleInstance> {
    let graph = odd_graph(n)?;
    let sets = odd_graph_vertex_sets(n)?;
    let omega = 2 * n;
    let subset = VertexSubset::from_predicate(graph.n(), |v| (sets[v] >> omega) & 1 == 0);
    CounterexampleInstance::new(graph, subset, Family::Odd, params(&[("n", n as u64)]), None)
}

/// `(i, j)` exponents of `a^i b^j` for the ten shaded vertices of `Γ_18`.
pub const U18_EXPONENTS: [(usize, usize); 10] = [
    (0, 0),
    (2, 0),
    (3, 0),
    (5, 0),
    (6, 0),
    (1, 1),
    (2, 1),
    (4, 1),
    (7, 1),
    (8, 1),
];

/// `{b, ab, a^3 b}` in `D_2n`.
pub fn dihedral_connection_set(n: usize) -> Vec<Element> {
    vec![
        dihedral_element(n, 0, 1),
        dihedral_element(n, 1, 1),
        dihedral_element(n, 3, 1),
    ]
}

/// `Γ_18 = Cay(D_18, {b, ab, a^3 b})` with its 10-vertex 1-regular subset.
pub fn dihedral_counterexample() -> Result<CounterexampleInstance> {
    let group = make_dihedral(9)?;
    let s = dihedral_connection_set(9);
    let graph = cayley_graph(&group, &s)?;
    let subset = VertexSubset::from_indices(
        18,
        U18_EXPONENTS
            .iter()
            .map(|&(i, j)| dihedral_element(9, i, j)),
    )?;
    let ctx = CayleyContext {
        group,
        connection_set: s,
    };
    CounterexampleInstance::new(
        graph,
        subset,
        Family::Dihedral,
        params(&[("m", 1)]),
        Some(ctx),
    )
}

/// The projection `D_18m -> D_18 = D_18m / <a^9>`, `a^i b^j -> a^(i mod 9) b^j`.
pub fn dihedral_projection(m: usize) -> Result<GroupHom> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "cover multiplicity m must be at least 1".into(),
        ));
    }
    let big = make_dihedral(9 * m)?;
    let small = make_dihedral(9)?;
    let n = subgroup_generated(&big, &[dihedral_element(9 * m, 9, 0)]);
    debug_assert_eq!(n.len(), m);
    let (_q, proj) = quotient(&big, &n)?;
    // Cosets are numbered by least representative, which puts a^i b^j at
    // i + 9j, the same encoding as D_18.
    GroupHom::new(big, small, proj.map().to_vec())
}

/// Lifts an instance through a covering map `f: cover -> instance.graph`.
pub fn lift_through_cover(
    base: &CounterexampleInstance,
    cover: Graph,
    f: &[usize],
    family: Family,
    params: BTreeMap<String, u64>,
    cayley: Option<CayleyContext>,
) -> Result<CounterexampleInstance> {
    let subset = lift_subset(&cover, base.graph(), f, base.subset())?;
    CounterexampleInstance::new(cover, subset, family, params, cayley)
}

/// `Γ_18m = Cay(D_18m, {b, ab, a^3 b})` with the preimage of `U_18`.
///
/// `m = 1` returns [`dihedral_counterexample`] unchanged.
pub fn dihedral_cover(m: usize) -> Result<CounterexampleInstance> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "cover multiplicity m must be at least 1".into(),
        ));
    }
    let base = dihedral_counterexample()?;
    if m == 1 {
        return Ok(base);
    }
    let half = m
        .checked_mul(9)
        .ok_or_else(|| Error::ResourceLimit(format!("dihedral cover with m = {m} overflows")))?;
    crate::limits::check_graph_size(2 * half, 6 * half, "dihedral cover")?;
    let phi = dihedral_projection(m)?;
    let group = phi.source().clone();
    let s = dihedral_connection_set(half);
    let cover = cayley_graph(&group, &s)?;
    let ctx = CayleyContext {
        group,
        connection_set: s,
    };
    lift_through_cover(
        &base,
        cover,
        phi.map(),
        Family::DihedralCover,
        params(&[("m", m as u64)]),
        Some(ctx),
    )
}

/// Output of one application of the wreath lifting step.
#[derive(Clone, Debug)]
pub struct WreathLift {
    pub group: FiniteGroup,
    pub connection_set: Vec<Element>,
    pub graph: Graph,
    pub subset: VertexSubset,
}

impl WreathLift {
    pub fn into_instance(self, level: u64) -> Result<CounterexampleInstance> {
        let ctx = CayleyContext {
            group: self.group,
            connection_set: self.connection_set,
        };
        CounterexampleInstance::new(
            self.graph,
            self.subset,
            Family::Wreath,
            params(&[("level", level)]),
            Some(ctx),
        )
    }
}

/// Parity of `(a, g)` in `Z_2 wr G`: even iff `a` has even weight and `g` is
/// even, or both are odd.
pub fn wreath_parity_is_even(bits: u64, top_is_even: bool) -> bool {
    bits.count_ones().is_multiple_of(2) == top_is_even
}

/// Lifts `(Cay(G, S), H)` to `(Cay(Z_2 wr G, Ŝ), Ĥ)` with `Ŝ` the canonical
/// generating set and `Ĥ = {(a, h) : h in H_a}`, where `H_e = H`,
/// `H_{a_g}` is the odd part for `g` even and the even part for `g` odd, and
/// every other `H_a` is the even part of `G`.
///
/// All conclusions (bipartition by parity, size count, induced degree) are
/// checked before returning.
pub fn wreath_lift(base: &FiniteGroup, s: &[Element], h: &VertexSubset) -> Result<WreathLift> {
    let hyp = |what: &str| Error::Precondition(format!("wreath lift hypothesis failed: {what}"));
    let s = base.connection_set(s)?;
    let n = base.order();
    if n < 2 {
        return Err(hyp("the base group must be nontrivial"));
    }
    let base_graph = cayley_graph(base, &s)?;
    if !base_graph.is_connected() {
        return Err(hyp("S does not generate G (Cay(G, S) is disconnected)"));
    }
    let parts = match bipartition(&base_graph) {
        Bipartiteness::Bipartite(p) => p,
        Bipartiteness::NotBipartite { .. } => return Err(hyp("Cay(G, S) is not bipartite")),
    };
    if h.graph_n() != n {
        return Err(hyp("H is not a subset of G"));
    }
    if !h.is_majority() {
        return Err(hyp("|H| is not more than |G|/2"));
    }
    if max_degree_within(&base_graph, h)? > 1 {
        return Err(hyp("H induces maximum degree above 1"));
    }

    let group = wreath_z2(base)?;
    let connection_set = canonical_generating_set(base, &s)?;
    let graph = cayley_graph(&group, &connection_set)?;

    let blocks = 1u64 << n;
    let mut subset = VertexSubset::empty(group.order());
    for bits in 0..blocks {
        let member = |g: Element| -> bool {
            if bits == 0 {
                h.contains(g)
            } else if bits.count_ones() == 1 {
                let pos = bits.trailing_zeros() as usize;
                // H_{a_g}: opposite side to g
                parts.is_even(g) != parts.is_even(pos)
            } else {
                parts.is_even(g)
            }
        };
        for g in base.elements().filter(|&g| member(g)) {
            subset.insert(WreathElement::new(bits, g).index(n));
        }
    }

    // parity classification is a proper 2-colouring
    let even = |x: Element| {
        let w = WreathElement::from_index(x, n);
        wreath_parity_is_even(w.bits, parts.is_even(w.top))
    };
    if let Some((u, v)) = graph.edges().find(|&(u, v)| even(u) == even(v)) {
        return Err(Error::Precondition(format!(
            "parity classification is not a bipartition: edge ({u}, {v}) joins equal parities"
        )));
    }
    let expected2 = 2 * h.len() as u64 + (blocks - 1) * n as u64;
    if 2 * subset.len() as u64 != expected2 {
        return Err(Error::Precondition(format!(
            "lifted subset has {} elements, expected {}",
            subset.len(),
            expected2 / 2
        )));
    }
    let degrees = induced_degrees(&graph, &subset)?;
    if degrees.max != 1 {
        return Err(Error::Precondition(format!(
            "lifted subset induces maximum degree {}, expected exactly 1",
            degrees.max
        )));
    }
    Ok(WreathLift {
        group,
        connection_set,
        graph,
        subset,
    })
}

/// Maximum number of wreath iterations; a third would need a base of order
/// 2048 and a group of order `2^2048 * 2048`.
pub const MAX_WREATH_LEVELS: u32 = 2;

/// Starts from `(Z_2, {1}, H = Z_2)` and applies [`wreath_lift`] `levels`
/// times, returning every level.
pub fn iterate_wreath(levels: u32) -> Result<Vec<CounterexampleInstance>> {
    if levels > MAX_WREATH_LEVELS {
        return Err(Error::ResourceLimit(format!(
            "{levels} wreath levels requested; level 3 would need Z_2 wr G with |G| = 2048, \
             a group of order 2^2048 * 2048. At most {MAX_WREATH_LEVELS} levels are supported"
        )));
    }
    let group = make_cyclic(2)?;
    let s = vec![1];
    let graph = cayley_graph(&group, &s)?;
    let subset = VertexSubset::full(2);
    let ctx = CayleyContext {
        group,
        connection_set: s,
    };
    let mut out = vec![CounterexampleInstance::new(
        graph,
        subset,
        Family::Wreath,
        params(&[("level", 0)]),
        Some(ctx),
    )?];
    for level in 1..=levels {
        let prev = out.last().expect("level 0 exists");
        let ctx = prev.cayley().expect("wreath instances are Cayley");
        let lift = wreath_lift(&ctx.group, &ctx.connection_set, prev.subset())?;
        out.push(lift.into_instance(level as u64)?);
    }
    Ok(out)
}
