//! Exhaustive hunt for dihedral Cayley graphs with a majority subset whose
//! induced maximum degree is strictly below `sqrt(x + x'/2)`.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_integer::Integer;

use super::{search, SearchMode, SearchOptions, SearchResult};
use crate::graph::cayley_graph;
use crate::group::{dihedral_element, make_dihedral, Element};
use crate::verify::potechin_tsang_threshold;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct CensusHit {
    /// Half the group order: the group is `D_2n`.
    pub n: usize,
    /// Canonical representative of the connection set's orbit.
    pub connection_set: Vec<Element>,
    pub labels: Vec<String>,
    pub x: usize,
    pub x_prime: usize,
    /// Largest induced degree still strictly below the threshold.
    pub degree_cap: usize,
    pub result: SearchResult,
}

/// Image of a connection set under `a -> a^u`, `b -> a^v b`, sorted.
fn apply_automorphism(n: usize, s: &[Element], u: usize, v: usize) -> Vec<Element> {
    let mut out: Vec<Element> = s
        .iter()
        .map(|&e| {
            let (i, j) = (e % n, e / n);
            let i2 = if j == 0 { (u * i) % n } else { (u * i + v) % n };
            dihedral_element(n, i2, j)
        })
        .collect();
    out.sort_unstable();
    out
}

/// Lexicographically least image of `s` under the automorphisms
/// `a -> a^u` (`gcd(u, n) = 1`) and `b -> a^v b` of `D_2n`.
pub fn canonical_dihedral_set(n: usize, s: &[Element]) -> Vec<Element> {
    let mut best = apply_automorphism(n, s, 1 % n.max(1), 0);
    for u in 0..n.max(1) {
        if u.gcd(&n) != 1 {
            continue;
        }
        for v in 0..n {
            let img = apply_automorphism(n, s, u, v);
            if img < best {
                best = img;
            }
        }
    }
    best
}

/// All identity-free, inverse-closed subsets of `D_2n` of the given size,
/// sorted ascending, in lexicographic order.
pub fn dihedral_connection_sets(n: usize, size: usize) -> Vec<Vec<Element>> {
    // atoms: each reflection, the central involution a^(n/2), and each pair
    // {a^i, a^-i}
    let mut atoms: Vec<Vec<Element>> = Vec::new();
    for i in 1..n {
        let inv = n - i;
        if i < inv {
            atoms.push(vec![i, inv]);
        } else if i == inv {
            atoms.push(vec![i]);
        }
    }
    atoms.extend((0..n).map(|i| vec![dihedral_element(n, i, 1)]));

    fn rec(
        atoms: &[Vec<Element>],
        start: usize,
        left: usize,
        cur: &mut Vec<Element>,
        out: &mut Vec<Vec<Element>>,
    ) {
        if left == 0 {
            let mut s = cur.clone();
            s.sort_unstable();
            out.push(s);
            return;
        }
        for a in start..atoms.len() {
            if atoms[a].len() <= left {
                cur.extend_from_slice(&atoms[a]);
                rec(atoms, a + 1, left - atoms[a].len(), cur, out);
                cur.truncate(cur.len() - atoms[a].len());
            }
        }
    }
    let mut out = Vec::new();
    rec(&atoms, 0, size, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Largest `a` with `2a^2 < 2x + x'`.
fn degree_cap(x: usize, x_prime: usize) -> usize {
    let twice = 2 * x + x_prime;
    let mut a = 0;
    while 2 * (a + 1) * (a + 1) < twice {
        a += 1;
    }
    a
}

/// Searches every `D_2n` with `n <= max_half_order` and every connection
/// set of size `connection_size` (one per automorphism orbit), reporting
/// those with a majority subset below the threshold. Hits are sorted by
/// `(n, connection_set)`.
pub fn census_dihedral(
    max_half_order: usize,
    connection_size: usize,
    options: &SearchOptions,
) -> Result<Vec<CensusHit>> {
    if connection_size == 0 {
        return Err(Error::InvalidParameter(
            "connection set size must be at least 1".into(),
        ));
    }
    if 2 * max_half_order > crate::limits::MAX_EXACT_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "census up to D_{} exceeds the exact search cap",
            2 * max_half_order
        )));
    }
    let mut tasks = Vec::new();
    for n in 1..=max_half_order {
        for s in dihedral_connection_sets(n, connection_size) {
            if canonical_dihedral_set(n, &s) == s {
                tasks.push((n, s));
            }
        }
    }

    let per_search = SearchOptions {
        mode: SearchMode::Exact,
        threads: 1,
        node_limit: None,
        progress: None,
    };
    let next = AtomicUsize::new(0);
    let hits = Mutex::new(Vec::new());
    let failure = Mutex::new(None);
    let threads = options.threads.max(1);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some((n, s)) = tasks.get(i) else { break };
                match census_one(*n, s, &per_search) {
                    Ok(Some(hit)) => hits.lock().expect("hits lock").push(hit),
                    Ok(None) => {}
                    Err(e) => {
                        failure.lock().expect("failure lock").get_or_insert(e);
                    }
                }
            });
        }
    });
    if let Some(e) = failure.into_inner().expect("failure lock") {
        return Err(e);
    }
    let mut hits = hits.into_inner().expect("hits lock");
    hits.sort_by(|a, b| (a.n, &a.connection_set).cmp(&(b.n, &b.connection_set)));
    Ok(hits)
}

fn census_one(n: usize, s: &[Element], options: &SearchOptions) -> Result<Option<CensusHit>> {
    let group = make_dihedral(n)?;
    let (x, x_prime) = potechin_tsang_threshold(&group, s)?;
    let cap = degree_cap(x, x_prime);
    let graph = cayley_graph(&group, s)?;
    let result = search(&graph, cap, options)?;
    if result.best_size > n {
        let labels = s.iter().map(|&e| group.label(e)).collect();
        Ok(Some(CensusHit {
            n,
            connection_set: s.to_vec(),
            labels,
            x,
            x_prime,
            degree_cap: cap,
            result,
        }))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::dihedral_connection_set;

    #[test]
    fn caps() {
        assert_eq!(degree_cap(1, 0), 0);
        assert_eq!(degree_cap(0, 2), 0);
        assert_eq!(degree_cap(3, 0), 1);
        assert_eq!(degree_cap(2, 0), 1);
        assert_eq!(degree_cap(4, 0), 1);
        assert_eq!(degree_cap(5, 0), 2);
    }

    #[test]
    fn enumerates_inverse_closed_sets() {
        for n in 1..=8 {
            let group = make_dihedral(n).unwrap();
            for size in 1..=4 {
                let sets = dihedral_connection_sets(n, size);
                // brute-force count over all subsets of non-identity elements
                let others: Vec<_> = (1..2 * n).collect();
                let mut count = 0;
                for mask in 0u32..(1 << others.len()) {
                    if mask.count_ones() as usize != size {
                        continue;
                    }
                    let s: Vec<_> = others
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| (mask >> i) & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    if group.connection_set(&s).is_ok() {
                        count += 1;
                        assert!(sets.contains(&s));
                    }
                }
                assert_eq!(sets.len(), count, "n={n} size={size}");
            }
        }
    }

    #[test]
    fn canonical_form_is_orbit_invariant() {
        let s = dihedral_connection_set(9);
        let c = canonical_dihedral_set(9, &s);
        for v in 0..9 {
            for u in [1, 2, 4, 5, 7, 8] {
                let img = apply_automorphism(9, &s, u, v);
                assert_eq!(canonical_dihedral_set(9, &img), c);
            }
        }
    }

    #[test]
    fn finds_gamma18_orbit() {
        let hits = census_dihedral(9, 3, &SearchOptions::default()).unwrap();
        let target = canonical_dihedral_set(9, &dihedral_connection_set(9));
        let hit = hits
            .iter()
            .find(|h| h.n == 9 && h.connection_set == target)
            .expect("Γ18 orbit reported");
        assert_eq!(hit.result.best_size, 10);
        assert_eq!(hit.degree_cap, 1);
        assert!(hits.iter().all(|h| h.result.best_size > h.n));
    }

    #[test]
    fn abelian_d4_and_size_one_report_nothing() {
        for size in 1..=3 {
            let hits = census_dihedral(2, size, &SearchOptions::default()).unwrap();
            assert!(hits.is_empty(), "size {size}: {hits:?}");
        }
        let hits = census_dihedral(8, 1, &SearchOptions::default()).unwrap();
        assert!(hits.is_empty());
    }
}
