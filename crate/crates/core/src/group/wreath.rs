//! The wreath product `Z_2 wr G`.
//!
//! An element `(a, g)` pairs a function `a: G -> Z_2`, stored as a bit mask
//! over the base group's element order, with a base element `g`. It is stored
//! at index `bits * |G| + g`, so index 0 is `(e, 1_G)`.

use super::{Element, FiniteGroup, Repr, IDENTITY};
use crate::limits::MAX_WREATH_BASE_ORDER;
use crate::{Error, Result};
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    /// Bit `x` holds `a(x)` for base element `x`.
    pub bits: u64,
    pub top: Element,
}

impl WreathElement {
    pub fn new(bits: u64, top: Element) -> Self {
        WreathElement { bits, top }
    }

    /// `a_g`: the function that is 1 exactly at `g`.
    pub fn delta(g: Element) -> u64 {
        1u64 << g
    }

    pub fn index(&self, base_order: usize) -> Element {
        self.bits as usize * base_order + self.top
    }

    pub fn from_index(index: Element, base_order: usize) -> Self {
        WreathElement {
            bits: (index / base_order) as u64,
            top: index % base_order,
        }
    }

    /// Number of base elements mapped to 1.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }
}

pub(super) struct WreathData {
    pub(super) base: FiniteGroup,
    /// `left_mul[g * |G| + x] = g x`
    left_mul: Vec<u16>,
}

impl WreathData {
    fn base_order(&self) -> usize {
        self.base.order()
    }

    /// `b^g`, where `b^g(x) = b(g^-1 x)`: bit `y` of `b` moves to bit `g y`.
    pub(super) fn act(&self, bits: u64, g: Element) -> u64 {
        let n = self.base_order();
        let row = &self.left_mul[g * n..(g + 1) * n];
        let mut out = 0u64;
        let mut rest = bits;
        while rest != 0 {
            let y = rest.trailing_zeros() as usize;
            out |= 1u64 << row[y];
            rest &= rest - 1;
        }
        out
    }

    pub(super) fn multiply(&self, x: Element, y: Element) -> Element {
        let n = self.base_order();
        let (a, g) = ((x / n) as u64, x % n);
        let (b, h) = ((y / n) as u64, y % n);
        let bits = a ^ self.act(b, g);
        bits as usize * n + self.base.multiply(g, h)
    }

    /// `(a, g)^-1 = (a^(g^-1), g^-1)`.
    pub(super) fn inverse(&self, x: Element) -> Element {
        let n = self.base_order();
        let (a, g) = ((x / n) as u64, x % n);
        let gi = self.base.inverse(g);
        self.act(a, gi) as usize * n + gi
    }

    pub(super) fn label(&self, x: Element) -> String {
        let n = self.base_order();
        let (bits, g) = (x / n, x % n);
        let top = self.base.label(g);
        if bits == 0 {
            return format!("(e, {top})");
        }
        let support: Vec<String> = (0..n)
            .filter(|&y| (bits >> y) & 1 == 1)
            .map(|y| self.base.label(y))
            .collect();
        format!("({{{}}}, {top})", support.join(", "))
    }
}

/// Builds `Z_2 wr base` of order `2^|base| * |base|`.
pub fn wreath_z2(base: &FiniteGroup) -> Result<FiniteGroup> {
    let n = base.order();
    if n > MAX_WREATH_BASE_ORDER {
        return Err(Error::ResourceLimit(format!(
            "wreath product over a base of order {n} would have order 2^{n} * {n}; \
             the base order cap is {MAX_WREATH_BASE_ORDER}"
        )));
    }
    let mut left_mul = Vec::with_capacity(n * n);
    for g in base.elements() {
        for x in base.elements() {
            left_mul.push(base.multiply(g, x) as u16);
        }
    }
    let data = WreathData {
        base: base.clone(),
        left_mul,
    };
    Ok(FiniteGroup {
        order: (1usize << n) * n,
        repr: Repr::Wreath(Arc::new(data)),
    })
}

/// `{(a_1, 1_G)} ∪ {(e, s) : s in S}` as element indices of `Z_2 wr base`,
/// sorted ascending.
///
/// `s` must be an identity-free, inverse-closed generating set of `base`.
pub fn canonical_generating_set(base: &FiniteGroup, s: &[Element]) -> Result<Vec<Element>> {
    let s = base.connection_set(s)?;
    if !base.is_generated_by(&s) {
        return Err(Error::Precondition(format!(
            "the set {{{}}} does not generate the base group",
            s.iter()
                .map(|&x| base.label(x))
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    let n = base.order();
    let mut out: Vec<Element> = s
        .iter()
        .map(|&x| WreathElement::new(0, x).index(n))
        .collect();
    out.push(WreathElement::new(WreathElement::delta(IDENTITY), IDENTITY).index(n));
    out.sort_unstable();
    Ok(out)
}
