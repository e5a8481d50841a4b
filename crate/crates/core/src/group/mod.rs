//! Concrete finite groups on dense element indices.
//!
//! Every group enumerates its elements as `0..order` with index 0 the
//! identity. Cyclic, dihedral, elementary abelian and wreath groups compute
//! products on demand from their structured encoding; only quotients carry a
//! materialised multiplication table.

mod hom;
mod wreath;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use hom::{quotient, subgroup_generated, GroupHom};
pub use wreath::{canonical_generating_set, wreath_z2, WreathElement};

/// Index of an element in its group's enumeration.
pub type Element = usize;

/// The identity is always element 0.
pub const IDENTITY: Element = 0;

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    repr: Repr,
}

#[derive(Clone)]
enum Repr {
    Cyclic,
    /// `a^i b^j` is stored at `i + n * j`.
    Dihedral {
        n: usize,
    },
    /// Elements are bit masks, the product is XOR.
    ElementaryAbelian {
        rank: u32,
    },
    Wreath(Arc<wreath::WreathData>),
    Table(Arc<TableData>),
}

struct TableData {
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
}

/// Serializable description of a group from one of the built-in families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GroupSpec {
    Cyclic { n: usize },
    Dihedral { n: usize },
    ElementaryAbelian { rank: u32 },
    Wreath { base: Box<GroupSpec> },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic { n } => make_cyclic(*n),
            GroupSpec::Dihedral { n } => make_dihedral(*n),
            GroupSpec::ElementaryAbelian { rank } => make_elementary_abelian(*rank),
            GroupSpec::Wreath { base } => wreath_z2(&base.build()?),
        }
    }
}

/// The cyclic group `Z_n`, written additively: `i * j = i + j mod n`.
pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "cyclic group order must be at least 1".into(),
        ));
    }
    Ok(FiniteGroup {
        order: n,
        repr: Repr::Cyclic,
    })
}

/// The dihedral group `<a, b | a^n = b^2 = (ab)^2 = 1>` of order `2n`.
pub fn make_dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "dihedral parameter n must be at least 1".into(),
        ));
    }
    let order = n.checked_mul(2).ok_or_else(|| {
        Error::ResourceLimit(format!("dihedral group D_2n with n = {n} overflows"))
    })?;
    Ok(FiniteGroup {
        order,
        repr: Repr::Dihedral { n },
    })
}

/// `(Z_2)^rank` with elements encoded as bit masks.
pub fn make_elementary_abelian(rank: u32) -> Result<FiniteGroup> {
    if rank > 20 {
        return Err(Error::ResourceLimit(format!(
            "elementary abelian group of rank {rank} is too large"
        )));
    }
    Ok(FiniteGroup {
        order: 1 << rank,
        repr: Repr::ElementaryAbelian { rank },
    })
}

impl FiniteGroup {
    pub(crate) fn from_table(mul: Vec<u32>, inv: Vec<u32>, labels: Vec<String>) -> Self {
        debug_assert_eq!(mul.len(), inv.len() * inv.len());
        FiniteGroup {
            order: inv.len(),
            repr: Repr::Table(Arc::new(TableData { mul, inv, labels })),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        IDENTITY
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    pub fn contains(&self, g: Element) -> bool {
        g < self.order
    }

    pub fn multiply(&self, g: Element, h: Element) -> Element {
        debug_assert!(g < self.order && h < self.order);
        match &self.repr {
            Repr::Cyclic => (g + h) % self.order,
            Repr::Dihedral { n } => {
                let n = *n;
                let (i, j) = (g % n, g / n);
                let (k, l) = (h % n, h / n);
                let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
                rot + n * ((j + l) % 2)
            }
            Repr::ElementaryAbelian { .. } => g ^ h,
            Repr::Wreath(w) => w.multiply(g, h),
            Repr::Table(t) => t.mul[g * self.order + h] as Element,
        }
    }

    pub fn inverse(&self, g: Element) -> Element {
        debug_assert!(g < self.order);
        match &self.repr {
            Repr::Cyclic => (self.order - g) % self.order,
            Repr::Dihedral { n } => {
                let n = *n;
                if g < n {
                    (n - g) % n
                } else {
                    g
                }
            }
            Repr::ElementaryAbelian { .. } => g,
            Repr::Wreath(w) => w.inverse(g),
            Repr::Table(t) => t.inv[g] as Element,
        }
    }

    /// `g^k` by repeated squaring.
    pub fn power(&self, g: Element, mut k: u64) -> Element {
        let mut acc = IDENTITY;
        let mut base = g;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.multiply(acc, base);
            }
            base = self.multiply(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn is_involution(&self, g: Element) -> bool {
        g != IDENTITY && self.multiply(g, g) == IDENTITY
    }

    pub fn element_order(&self, g: Element) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != IDENTITY {
            x = self.multiply(x, g);
            k += 1;
        }
        k
    }

    /// Human-readable name of an element, e.g. `a^3 b` in a dihedral group.
    pub fn label(&self, g: Element) -> String {
        match &self.repr {
            Repr::Cyclic => g.to_string(),
            Repr::Dihedral { n } => dihedral_label(g % n, g / n),
            Repr::ElementaryAbelian { rank } => {
                let bits: Vec<String> = (0..*rank).map(|i| ((g >> i) & 1).to_string()).collect();
                format!("({})", bits.join(","))
            }
            Repr::Wreath(w) => w.label(g),
            Repr::Table(t) => t.labels[g].clone(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements().map(|g| self.label(g)).collect()
    }

    /// Family description, when the group is one of the built-in families.
    pub fn spec(&self) -> Option<GroupSpec> {
        match &self.repr {
            Repr::Cyclic => Some(GroupSpec::Cyclic { n: self.order }),
            Repr::Dihedral { n } => Some(GroupSpec::Dihedral { n: *n }),
            Repr::ElementaryAbelian { rank } => Some(GroupSpec::ElementaryAbelian { rank: *rank }),
            Repr::Wreath(w) => Some(GroupSpec::Wreath {
                base: Box::new(w.base.spec()?),
            }),
            Repr::Table(_) => None,
        }
    }

    /// The base group `G` when `self` is `Z_2 wr G`.
    pub fn wreath_base(&self) -> Option<&FiniteGroup> {
        match &self.repr {
            Repr::Wreath(w) => Some(&w.base),
            _ => None,
        }
    }

    /// Dihedral parameter `n` when `self` is `D_2n`.
    pub fn dihedral_n(&self) -> Option<usize> {
        match &self.repr {
            Repr::Dihedral { n } => Some(*n),
            _ => None,
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|g| {
            self.elements()
                .all(|h| self.multiply(g, h) == self.multiply(h, g))
        })
    }

    /// Checks identity, inverse and associativity laws.
    ///
    /// Associativity is exhaustive up to order 64 and sampled on a fixed
    /// pseudo-random set of triples above that.
    pub fn check_axioms(&self) -> Result<()> {
        let fail = |what: String| Err(Error::Precondition(what));
        for g in self.elements() {
            if self.multiply(IDENTITY, g) != g || self.multiply(g, IDENTITY) != g {
                return fail(format!("identity law fails at {}", self.label(g)));
            }
            let gi = self.inverse(g);
            if gi >= self.order
                || self.multiply(g, gi) != IDENTITY
                || self.multiply(gi, g) != IDENTITY
            {
                return fail(format!("inverse law fails at {}", self.label(g)));
            }
        }
        let assoc = |a: Element, b: Element, c: Element| {
            self.multiply(self.multiply(a, b), c) == self.multiply(a, self.multiply(b, c))
        };
        if self.order <= 64 {
            for a in self.elements() {
                for b in self.elements() {
                    for c in self.elements() {
                        if !assoc(a, b, c) {
                            return fail(format!("associativity fails at ({a}, {b}, {c})"));
                        }
                    }
                }
            }
        } else {
            let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % self.order as u64) as Element
            };
            for _ in 0..20_000 {
                let (a, b, c) = (next(), next(), next());
                if !assoc(a, b, c) {
                    return fail(format!("associativity fails at ({a}, {b}, {c})"));
                }
            }
        }
        Ok(())
    }

    /// Sorts, deduplicates and validates a Cayley connection set: indices in
    /// range, identity-free and closed under inverses.
    pub fn connection_set(&self, s: &[Element]) -> Result<Vec<Element>> {
        let mut set: Vec<Element> = s.to_vec();
        set.sort_unstable();
        set.dedup();
        for &x in &set {
            if x >= self.order {
                return Err(Error::Precondition(format!(
                    "connection set element {x} is out of range for a group of order {}",
                    self.order
                )));
            }
            if x == IDENTITY {
                return Err(Error::Precondition(
                    "connection set contains the identity".into(),
                ));
            }
            if set.binary_search(&self.inverse(x)).is_err() {
                return Err(Error::Precondition(format!(
                    "connection set is not inverse-closed: {} is present but its inverse {} is not",
                    self.label(x),
                    self.label(self.inverse(x))
                )));
            }
        }
        Ok(set)
    }

    /// True if `gens` generates the whole group.
    pub fn is_generated_by(&self, gens: &[Element]) -> bool {
        subgroup_generated(self, gens).len() == self.order
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.spec() {
            Some(spec) => write!(f, "FiniteGroup({spec:?}, order {})", self.order),
            None => write!(f, "FiniteGroup(table, order {})", self.order),
        }
    }
}

fn dihedral_label(i: usize, j: usize) -> String {
    let rot = match i {
        0 => String::new(),
        1 => "a".to_string(),
        _ => format!("a^{i}"),
    };
    match (rot.is_empty(), j) {
        (true, 0) => "1".to_string(),
        (true, _) => "b".to_string(),
        (false, 0) => rot,
        (false, _) => format!("{rot} b"),
    }
}

/// Index of `a^i b^j` in [`make_dihedral`]`(n)`.
pub fn dihedral_element(n: usize, i: usize, j: usize) -> Element {
    (i % n) + n * (j % 2)
}
