//! Finite abelian groups in invariant-factor form and their automorphisms.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Cap on the number of candidate generator-image tuples tried when
/// enumerating `Aut(A)`.
pub const AUT_CANDIDATE_BOUND: u128 = 20_000_000;

/// `Z_{d_1} × … × Z_{d_k}` with `d_1 | d_2 | … | d_k`, each `d_i ≥ 2`.
/// Elements are indexed lexicographically with the first component most
/// significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AbelianGroup {
    factors: Vec<usize>,
    order: usize,
}

impl AbelianGroup {
    pub fn new(factors: Vec<usize>) -> Result<AbelianGroup> {
        if factors.iter().any(|&d| d < 2) {
            return Err(Error::Unsupported(
                "invariant factors must be at least 2".into(),
            ));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::Unsupported(format!(
                "factors {factors:?} do not form a divisibility chain"
            )));
        }
        let order = factors.iter().product();
        Ok(AbelianGroup { factors, order })
    }

    pub fn cyclic(n: usize) -> AbelianGroup {
        if n <= 1 {
            AbelianGroup::new(vec![]).unwrap()
        } else {
            AbelianGroup::new(vec![n]).unwrap()
        }
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn tuple(&self, mut x: usize) -> Vec<usize> {
        let mut t = vec![0; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            t[i] = x % self.factors[i];
            x /= self.factors[i];
        }
        t
    }

    pub fn index(&self, t: &[usize]) -> usize {
        t.iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, &d)| acc * d + c % d)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ta, tb) = (self.tuple(a), self.tuple(b));
        let s: Vec<usize> = ta
            .iter()
            .zip(&tb)
            .zip(&self.factors)
            .map(|((x, y), d)| (x + y) % d)
            .collect();
        self.index(&s)
    }

    pub fn neg(&self, a: usize) -> usize {
        let t: Vec<usize> = self
            .tuple(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &d)| (d - x) % d)
            .collect();
        self.index(&t)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `k·a` for an integer `k`.
    pub fn scale(&self, k: i64, a: usize) -> usize {
        let t: Vec<usize> = self
            .tuple(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &d)| ((k.rem_euclid(d as i64) as usize) * x) % d)
            .collect();
        self.index(&t)
    }

    /// Additive order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        self.tuple(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &d)| d / gcd(x, d))
            .fold(1, lcm)
    }

    /// The element with a 1 in component `i`.
    pub fn basis(&self, i: usize) -> usize {
        let mut t = vec![0; self.rank()];
        t[i] = 1;
        self.index(&t)
    }

    /// Every abelian group of order `n`, cyclic first, then by increasing
    /// rank and lexicographic factor list.
    pub fn all_of_order(n: usize) -> Vec<AbelianGroup> {
        let mut out = Vec::new();
        if n == 1 {
            out.push(AbelianGroup::cyclic(1));
            return out;
        }
        let mut chains = Vec::new();
        divisor_chains(n, 1, &mut Vec::new(), &mut chains);
        chains.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        for c in chains {
            out.push(AbelianGroup::new(c).expect("valid chain"));
        }
        out
    }

    /// Parses `2x2x4`, or `1` for the trivial group.
    pub fn parse(s: &str) -> Result<AbelianGroup> {
        let s = s.trim();
        if s == "1" {
            return Ok(AbelianGroup::cyclic(1));
        }
        let factors = s
            .split('x')
            .map(|w| {
                w.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Unsupported(format!("bad factor `{w}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        AbelianGroup::new(factors)
    }

    /// Parses an element written `1x0x3` (one component per factor).
    pub fn parse_element(&self, s: &str) -> Result<usize> {
        let comps = s
            .split('x')
            .map(|w| {
                w.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Unsupported(format!("bad component `{w}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let expected = self.rank().max(1);
        if comps.len() != expected {
            return Err(Error::Unsupported(format!(
                "element needs {expected} components, got {}",
                comps.len()
            )));
        }
        if self.rank() == 0 {
            return Ok(0);
        }
        Ok(self.index(&comps))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "Z1");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z{d}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// Chains `d_1 | d_2 | …` with product `n`, each factor a multiple of `prev`.
fn divisor_chains(n: usize, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 1 {
        out.push(cur.clone());
        return;
    }
    for d in (prev.max(2)..=n).filter(|d| n.is_multiple_of(*d) && d % prev == 0) {
        let rest = n / d;
        if rest == 1 || rest.is_multiple_of(d) {
            cur.push(d);
            divisor_chains(rest, d, cur, out);
            cur.pop();
        }
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// An automorphism of an abelian group, stored as a bijection on element indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct AutMap {
    map: Vec<usize>,
}

impl AutMap {
    /// Checks additivity and bijectivity.
    pub fn new(host: &AbelianGroup, map: Vec<usize>) -> Result<AutMap> {
        let n = host.order();
        if map.len() != n || map.iter().any(|&v| v >= n) {
            return Err(Error::NotAnAutomorphism);
        }
        let mut seen = vec![false; n];
        for &v in &map {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAnAutomorphism);
            }
        }
        for a in 0..n {
            for b in 0..n {
                if map[host.add(a, b)] != host.add(map[a], map[b]) {
                    return Err(Error::NotAnAutomorphism);
                }
            }
        }
        Ok(AutMap { map })
    }

    pub fn identity(host: &AbelianGroup) -> AutMap {
        AutMap {
            map: (0..host.order()).collect(),
        }
    }

    /// Multiplication by an integer `k` (an automorphism when `k` is a unit
    /// modulo the exponent).
    pub fn scalar(host: &AbelianGroup, k: i64) -> Result<AutMap> {
        AutMap::new(host, (0..host.order()).map(|a| host.scale(k, a)).collect())
    }

    /// The additive extension of basis images; `None` unless it is bijective.
    pub fn from_basis_images(host: &AbelianGroup, images: &[usize]) -> Option<AutMap> {
        let map = extend_linearly(host, images)?;
        let mut seen = vec![false; host.order()];
        for &v in &map {
            if std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(AutMap { map })
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn to_perm(&self) -> Perm {
        Perm::from_images_unchecked(self.map.iter().map(|&v| v as u32).collect())
    }

    pub fn from_perm(p: &Perm) -> AutMap {
        AutMap {
            map: p.images().collect(),
        }
    }

    /// `x ↦ x − f(x)`, not necessarily bijective.
    pub fn one_minus(&self, host: &AbelianGroup) -> Vec<usize> {
        (0..host.order())
            .map(|x| host.sub(x, self.map[x]))
            .collect()
    }

    /// Whether `1 − f` is a bijection.
    pub fn one_minus_is_bijective(&self, host: &AbelianGroup) -> bool {
        let mut seen = vec![false; host.order()];
        self.one_minus(host)
            .into_iter()
            .all(|v| !std::mem::replace(&mut seen[v], true))
    }
}

/// `x = Σ x_i e_i ↦ Σ x_i images[i]`; `None` if some image has the wrong order.
fn extend_linearly(host: &AbelianGroup, images: &[usize]) -> Option<Vec<usize>> {
    for (i, &img) in images.iter().enumerate() {
        if !host.factors()[i].is_multiple_of(host.element_order(img)) {
            return None;
        }
    }
    let map = (0..host.order())
        .map(|x| {
            host.tuple(x).iter().zip(images).fold(0, |acc, (&c, &img)| {
                host.add(acc, host.scale(c as i64, img))
            })
        })
        .collect();
    Some(map)
}

/// All automorphisms, in lexicographic order of their basis images.
pub fn automorphisms(host: &AbelianGroup) -> Result<Vec<AutMap>> {
    let n = host.order();
    let k = host.rank();
    let candidates: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            (0..n)
                .filter(|&a| host.factors()[i].is_multiple_of(host.element_order(a)))
                .collect()
        })
        .collect();
    let total: u128 = candidates.iter().map(|c| c.len() as u128).product();
    if total > AUT_CANDIDATE_BOUND {
        return Err(Error::TooLarge {
            what: "automorphism search",
            size: total,
            bound: AUT_CANDIDATE_BOUND,
        });
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    loop {
        let images: Vec<usize> = (0..k).map(|i| candidates[i][idx[i]]).collect();
        if let Some(f) = AutMap::from_basis_images(host, &images) {
            out.push(f);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < candidates[i].len() {
                break;
            }
            idx[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_of_given_order() {
        let shapes = |n| {
            AbelianGroup::all_of_order(n)
                .into_iter()
                .map(|g| g.factors().to_vec())
                .collect::<Vec<_>>()
        };
        assert_eq!(shapes(1), vec![Vec::<usize>::new()]);
        assert_eq!(shapes(9), vec![vec![9], vec![3, 3]]);
        assert_eq!(
            shapes(16),
            vec![
                vec![16],
                vec![2, 8],
                vec![4, 4],
                vec![2, 2, 4],
                vec![2, 2, 2, 2]
            ]
        );
        assert_eq!(shapes(12), vec![vec![12], vec![2, 6]]);
        assert_eq!(shapes(7), vec![vec![7]]);
    }

    #[test]
    fn arithmetic() {
        let a = AbelianGroup::new(vec![2, 4]).unwrap();
        assert_eq!(a.order(), 8);
        assert_eq!(a.tuple(7), vec![1, 3]);
        assert_eq!(a.index(&[1, 3]), 7);
        assert_eq!(a.add(7, 7), a.index(&[0, 2]));
        assert_eq!(a.element_order(a.index(&[1, 2])), 2);
        assert_eq!(a.element_order(a.index(&[1, 1])), 4);
        assert!(AbelianGroup::new(vec![4, 2]).is_err());
    }

    #[test]
    fn automorphism_counts() {
        let count = |f: Vec<usize>| automorphisms(&AbelianGroup::new(f).unwrap()).unwrap().len();
        assert_eq!(count(vec![5]), 4);
        assert_eq!(count(vec![8]), 4);
        assert_eq!(count(vec![3, 3]), 48);
        assert_eq!(count(vec![2, 2, 2]), 168);
        assert_eq!(count(vec![2, 4]), 8);
        assert_eq!(count(vec![2, 2, 2, 2]), 20160);
    }

    #[test]
    fn aut_validation() {
        let z4 = AbelianGroup::cyclic(4);
        assert!(AutMap::scalar(&z4, 3).is_ok());
        assert_eq!(
            AutMap::scalar(&z4, 2).unwrap_err(),
            Error::NotAnAutomorphism
        );
        assert!(!AutMap::scalar(&z4, 3).unwrap().one_minus_is_bijective(&z4));
        let z3 = AbelianGroup::cyclic(3);
        assert!(AutMap::scalar(&z3, -1).unwrap().one_minus_is_bijective(&z3));
    }

    #[test]
    fn parsing() {
        let a = AbelianGroup::parse("2x2").unwrap();
        assert_eq!(a.factors(), &[2, 2]);
        assert_eq!(a.parse_element("1x1").unwrap(), 3);
        assert_eq!(AbelianGroup::parse("1").unwrap().order(), 1);
        assert!(a.parse_element("1").is_err());
    }
}
