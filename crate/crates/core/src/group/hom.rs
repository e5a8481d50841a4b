use super::{Element, FiniteGroup, IDENTITY};
use crate::limits::MAX_TABLE_ORDER;
use crate::{Error, Result};

/// A homomorphism between two finite groups, stored as an element map.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<Element>,
}

impl GroupHom {
    /// Builds a homomorphism after checking `map(gh) = map(g) map(h)`.
    ///
    /// The check is exhaustive while `|source| <= 4096`; above that every
    /// element is checked against a stride of partners.
    pub fn new(source: FiniteGroup, target: FiniteGroup, map: Vec<Element>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::Precondition(format!(
                "homomorphism map has {} entries for a source of order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&x| x >= target.order()) {
            return Err(Error::Precondition(format!(
                "homomorphism image {bad} is out of range"
            )));
        }
        if map[IDENTITY] != IDENTITY {
            return Err(Error::Precondition(
                "homomorphism does not fix the identity".into(),
            ));
        }
        let n = source.order();
        let stride = if n <= MAX_TABLE_ORDER { 1 } else { n / 512 + 1 };
        for g in source.elements() {
            for h in source.elements().step_by(stride) {
                if map[source.multiply(g, h)] != target.multiply(map[g], map[h]) {
                    return Err(Error::Precondition(format!(
                        "map is not a homomorphism at ({}, {})",
                        source.label(g),
                        source.label(h)
                    )));
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn apply(&self, g: Element) -> Element {
        self.map[g]
    }

    pub fn map(&self) -> &[Element] {
        &self.map
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &x in &self.map {
            hit[x] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().len() == 1
    }

    pub fn kernel(&self) -> Vec<Element> {
        self.source
            .elements()
            .filter(|&g| self.map[g] == IDENTITY)
            .collect()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        let map = self.map.iter().map(|&x| other.apply(x)).collect();
        GroupHom::new(self.source.clone(), other.target.clone(), map)
    }
}

/// Closure of `gens ∪ {1}` under multiplication, sorted ascending.
///
/// In a finite group closure under multiplication already gives inverses.
pub fn subgroup_generated(group: &FiniteGroup, gens: &[Element]) -> Vec<Element> {
    let mut seen = vec![false; group.order()];
    seen[IDENTITY] = true;
    let mut queue = vec![IDENTITY];
    while let Some(x) = queue.pop() {
        for &s in gens {
            let y = group.multiply(x, s);
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
    }
    seen.iter()
        .enumerate()
        .filter(|(_, &s)| s)
        .map(|(g, _)| g)
        .collect()
}

/// The quotient `G / N` together with the natural projection.
///
/// Cosets are numbered by their smallest representative, so coset 0 is `N`.
pub fn quotient(group: &FiniteGroup, normal: &[Element]) -> Result<(FiniteGroup, GroupHom)> {
    let mut in_n = vec![false; group.order()];
    for &x in normal {
        if x >= group.order() {
            return Err(Error::Precondition(format!(
                "subgroup element {x} is out of range"
            )));
        }
        in_n[x] = true;
    }
    if !in_n[IDENTITY] {
        return Err(Error::Precondition(
            "subgroup does not contain the identity".into(),
        ));
    }
    let members: Vec<Element> = group.elements().filter(|&x| in_n[x]).collect();
    for &a in &members {
        for &b in &members {
            if !in_n[group.multiply(a, b)] {
                return Err(Error::NotClosed { a, b });
            }
        }
    }
    for g in group.elements() {
        let gi = group.inverse(g);
        for &n in &members {
            if !in_n[group.multiply(group.multiply(g, n), gi)] {
                return Err(Error::NotNormal { g, n });
            }
        }
    }

    let q_order = group.order() / members.len();
    if q_order > MAX_TABLE_ORDER {
        return Err(Error::ResourceLimit(format!(
            "quotient of order {q_order} exceeds the table cap of {MAX_TABLE_ORDER}"
        )));
    }
    const UNSET: usize = usize::MAX;
    let mut coset = vec![UNSET; group.order()];
    let mut reps = Vec::with_capacity(q_order);
    for g in group.elements() {
        if coset[g] == UNSET {
            let id = reps.len();
            reps.push(g);
            for &n in &members {
                coset[group.multiply(g, n)] = id;
            }
        }
    }
    debug_assert_eq!(reps.len(), q_order);

    let mut mul = Vec::with_capacity(q_order * q_order);
    for &r in &reps {
        for &s in &reps {
            mul.push(coset[group.multiply(r, s)] as u32);
        }
    }
    let inv = reps
        .iter()
        .map(|&r| coset[group.inverse(r)] as u32)
        .collect();
    let labels = reps
        .iter()
        .map(|&r| format!("[{}]", group.label(r)))
        .collect();
    let q = FiniteGroup::from_table(mul, inv, labels);
    let proj = GroupHom::new(group.clone(), q.clone(), coset)?;
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{dihedral_element, make_cyclic, make_dihedral};

    #[test]
    fn generated_subgroups() {
        let d36 = make_dihedral(18).unwrap();
        let a9 = dihedral_element(18, 9, 0);
        assert_eq!(subgroup_generated(&d36, &[a9]), vec![0, 9]);
        assert_eq!(subgroup_generated(&d36, &[]), vec![IDENTITY]);

        let d18 = make_dihedral(9).unwrap();
        let b = dihedral_element(9, 0, 1);
        let ab = dihedral_element(9, 1, 1);
        assert_eq!(subgroup_generated(&d18, &[b, ab]).len(), 18);
        assert_eq!(subgroup_generated(&d18, &[b]).len(), 2);
    }

    #[test]
    fn dihedral_quotient_matches_smaller_dihedral() {
        for m in 1..=5 {
            let big = make_dihedral(9 * m).unwrap();
            let n = subgroup_generated(&big, &[dihedral_element(9 * m, 9, 0)]);
            assert_eq!(n.len(), m);
            let (q, proj) = quotient(&big, &n).unwrap();
            assert_eq!(q.order(), 18);
            assert!(proj.is_surjective());
            assert_eq!(proj.kernel(), n);
            let d18 = make_dihedral(9).unwrap();
            for g in q.elements() {
                for h in q.elements() {
                    assert_eq!(q.multiply(g, h), d18.multiply(g, h));
                }
            }
            q.check_axioms().unwrap();
        }
    }

    #[test]
    fn trivial_and_cyclic_quotients() {
        let d10 = make_dihedral(5).unwrap();
        let (q, proj) = quotient(&d10, &[IDENTITY]).unwrap();
        assert_eq!(q.order(), 10);
        assert!(proj.is_injective() && proj.is_surjective());

        let z6 = make_cyclic(6).unwrap();
        let n = subgroup_generated(&z6, &[3]);
        let (q, proj) = quotient(&z6, &n).unwrap();
        assert_eq!(q.order(), 3);
        assert_eq!(proj.map(), &[0, 1, 2, 0, 1, 2]);
    }

    #[test]
    fn quotient_rejects_bad_subgroups() {
        let d6 = make_dihedral(3).unwrap();
        // {1, b} is a subgroup but not normal.
        let err = quotient(&d6, &[0, 3]).unwrap_err();
        assert!(matches!(err, Error::NotNormal { .. }), "{err:?}");
        // {1, a} is not closed.
        let err = quotient(&d6, &[0, 1]).unwrap_err();
        assert_eq!(err, Error::NotClosed { a: 1, b: 1 });
        assert!(quotient(&d6, &[1, 2]).is_err());
    }

    #[test]
    fn hom_rejects_non_homomorphisms() {
        let z4 = make_cyclic(4).unwrap();
        let z2 = make_cyclic(2).unwrap();
        assert!(GroupHom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).is_ok());
        assert!(GroupHom::new(z4.clone(), z2.clone(), vec![0, 1, 1, 0]).is_err());
        assert!(GroupHom::new(z4, z2, vec![0, 1]).is_err());
    }
}
