//! Affine quandles `x*y = f(x) + y − f(y)` and their classification up to
//! isomorphism, plus Galkin quandles on `Z_3 × A`.

use std::collections::HashMap;

use super::abelian::{automorphisms, AbelianGroup, AutMap};
use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};
use crate::quandle::Quandle;

pub fn affine_quandle(a: &AbelianGroup, f: &AutMap) -> Quandle {
    let n = a.order();
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            table[x * n + y] = a.add(f.apply(x), a.sub(y, f.apply(y))) as u32;
        }
    }
    Quandle::from_flat_unchecked(n, table)
}

/// Connected exactly when `1 − f` is onto.
pub fn is_connected_affine(a: &AbelianGroup, f: &AutMap) -> bool {
    f.one_minus_is_bijective(a)
}

/// `|Im(1 − f)|`.
pub fn image_of_one_minus(a: &AbelianGroup, f: &AutMap) -> usize {
    let mut img = f.one_minus(a);
    img.sort_unstable();
    img.dedup();
    img.len()
}

/// For connected affine quandles: isomorphic iff `f` and `g` are conjugate in `Aut(A)`.
pub fn affine_isomorphic(a: &AbelianGroup, f: &AutMap, g: &AutMap) -> Result<bool> {
    if !is_connected_affine(a, f) || !is_connected_affine(a, g) {
        return Err(Error::NotConnected);
    }
    let (pf, pg) = (f.to_perm(), g.to_perm());
    Ok(automorphisms(a)?
        .iter()
        .any(|h| pf.conjugate(&h.to_perm()) == pg))
}

/// One connected affine quandle up to isomorphism.
#[derive(Clone, Debug)]
pub struct AffineRep {
    pub group: AbelianGroup,
    pub auto: AutMap,
}

impl AffineRep {
    pub fn quandle(&self) -> Quandle {
        affine_quandle(&self.group, &self.auto)
    }
}

/// Every connected affine quandle of order `n`: for each abelian group `A`,
/// the automorphisms `f` with `1 − f` bijective, up to conjugacy in `Aut(A)`.
/// Ordered by group shape, then by the least map in each class.
pub fn enumerate_connected_affine(n: usize) -> Result<Vec<AffineRep>> {
    let mut out = Vec::new();
    for group in AbelianGroup::all_of_order(n) {
        let auts = automorphisms(&group)?;
        let connected: Vec<Perm> = auts
            .iter()
            .filter(|f| f.one_minus_is_bijective(&group))
            .map(AutMap::to_perm)
            .collect();
        if connected.is_empty() {
            continue;
        }
        let perms: Vec<Perm> = auts.iter().map(AutMap::to_perm).collect();
        let aut_group = PermGroup::from_element_set(group.order(), &perms);
        for rep in conjugacy_class_minima(&connected, &aut_group.nontrivial_generators()) {
            out.push(AffineRep {
                group: group.clone(),
                auto: AutMap::from_perm(&rep),
            });
        }
    }
    Ok(out)
}

/// Least element of each class of `set` under conjugation by `gens`, sorted.
fn conjugacy_class_minima(set: &[Perm], gens: &[Perm]) -> Vec<Perm> {
    let index: HashMap<&Perm, usize> = set.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut seen = vec![false; set.len()];
    let mut reps = Vec::new();
    for start in 0..set.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = vec![start];
        let mut min = start;
        let mut k = 0;
        while k < queue.len() {
            let p = &set[queue[k]];
            k += 1;
            for h in gens {
                let c = p.conjugate(h);
                let j = index[&c];
                if !seen[j] {
                    seen[j] = true;
                    if set[j] < set[min] {
                        min = j;
                    }
                    queue.push(j);
                }
            }
        }
        reps.push(set[min].clone());
    }
    reps.sort();
    reps
}

/// The Galkin quandle on `Z_3 × A`, indexed with the `Z_3` coordinate most
/// significant: `(x,a)∘(y,b) = (−x−y, −a + μ(x−y)b + τ(x−y))`.
pub fn galkin(a: &AbelianGroup, u: usize) -> Result<Quandle> {
    let m = a.order();
    if u >= m {
        return Err(Error::PointOutOfRange {
            point: u,
            degree: m,
        });
    }
    let mu = |d: usize| if d == 0 { 2 } else { -1 };
    let tau = |d: usize| if d == 2 { u } else { 0 };
    let n = 3 * m;
    let mut table = vec![0u32; n * n];
    for x in 0..3 {
        for y in 0..3 {
            let z = (6 - x - y) % 3;
            let d = (3 + x - y) % 3;
            for ea in 0..m {
                for eb in 0..m {
                    let c = a.add(a.add(a.neg(ea), a.scale(mu(d), eb)), tau(d));
                    table[(x * m + ea) * n + (y * m + eb)] = (z * m + c) as u32;
                }
            }
        }
    }
    Quandle::from_flat(n, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_affine_examples() {
        let z3 = AbelianGroup::cyclic(3);
        let neg = AutMap::scalar(&z3, -1).unwrap();
        let q = affine_quandle(&z3, &neg);
        assert_eq!(q, Quandle::from_fn(3, |x, y| (2 * y + 3 - x) % 3).unwrap());
        assert!(is_connected_affine(&z3, &neg));

        let z5 = AbelianGroup::cyclic(5);
        let two = AutMap::scalar(&z5, 2).unwrap();
        let q5 = affine_quandle(&z5, &two);
        assert!(q5.is_connected() && q5.is_latin());

        let id = AutMap::identity(&z5);
        let proj = affine_quandle(&z5, &id);
        assert_eq!(proj.orbits().len(), 5);

        let z4 = AbelianGroup::cyclic(4);
        assert!(!is_connected_affine(&z4, &AutMap::scalar(&z4, 3).unwrap()));
    }

    #[test]
    fn affine_isomorphism() {
        let z5 = AbelianGroup::cyclic(5);
        let two = AutMap::scalar(&z5, 2).unwrap();
        let three = AutMap::scalar(&z5, 3).unwrap();
        assert!(!affine_isomorphic(&z5, &two, &three).unwrap());
        assert!(affine_isomorphic(&z5, &two, &two).unwrap());
        let id = AutMap::identity(&z5);
        assert_eq!(affine_isomorphic(&z5, &id, &two), Err(Error::NotConnected));
    }

    #[test]
    fn counts_at_prime_orders() {
        for p in [3usize, 5, 7] {
            assert_eq!(enumerate_connected_affine(p).unwrap().len(), p - 2);
        }
        assert_eq!(enumerate_connected_affine(1).unwrap().len(), 1);
        assert_eq!(enumerate_connected_affine(2).unwrap().len(), 0);
    }

    #[test]
    fn galkin_small() {
        let z2 = AbelianGroup::cyclic(2);
        let g0 = galkin(&z2, 0).unwrap();
        let g1 = galkin(&z2, 1).unwrap();
        assert_eq!(g0.order(), 6);
        assert!(g0.is_connected() && g1.is_connected());
        assert!(!g0.is_latin());
        assert!(g0.are_isomorphic(&g1).is_none());
        let z3 = AbelianGroup::cyclic(3);
        assert!(galkin(&z3, 0).unwrap().is_medial());
    }
}
