//! Permutations and permutation groups.
//!
//! Maps act on the right: `x^p` is `p.apply(x)` and `x^(pq) = (x^p)^q`, so
//! `p.compose(&q)` applies `p` first. Conjugation is `p^g = g⁻¹pg` and the
//! commutator is `[x, y] = x⁻¹ x^y`.
//!
//! Points are 0-based in the API. The text forms (image lists and cycle
//! notation) are 1-based.

mod group;

pub use group::{group_from_generators, groups_equal, Orbit, PermGroup, DEFAULT_ELEMENT_BOUND};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation(n));
            }
            seen[i] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Perm {
        debug_assert!(Perm::from_images(images.iter().map(|&i| i as usize).collect()).is_ok());
        Perm { images }
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if touched[p] {
                    return Err(Error::NotAPermutation(degree));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `x^p`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn try_compose(&self, other: &Perm) -> Result<Perm> {
        check_degrees(self, other)?;
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// `g⁻¹ self g`.
    pub fn conjugate(&self, g: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), g.degree());
        // x^(g⁻¹ p g) = ((x^g⁻¹)^p)^g, so (y^g) ↦ (y^p)^g.
        let mut images = vec![0u32; self.images.len()];
        for (y, &py) in self.images.iter().enumerate() {
            images[g.images[y] as usize] = g.images[py as usize];
        }
        Perm { images }
    }

    pub fn try_conjugate(&self, g: &Perm) -> Result<Perm> {
        check_degrees(self, g)?;
        Ok(self.conjugate(g))
    }

    /// `[self, other] = self⁻¹ other⁻¹ self other`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse().compose(&self.conjugate(other))
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Cycle lengths, including fixed points, sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles_with_fixed().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, l| lcm(acc, l as u64))
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &v)| *i as u32 != v)
            .map(|(i, _)| i)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i as u32 == v)
            .count()
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_with_fixed()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect()
    }

    fn cycles_with_fixed(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// 1-based cycle notation, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect()
    }

    /// Parses a 1-based cycle string such as `(1,2)(3,4)` or `(1 2 3)`.
    pub fn parse_cycles(degree: usize, s: &str) -> Result<Perm> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            msg: format!("{msg} in cycle notation {s:?}"),
        };
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let inner = &body[..close];
            let mut cycle = Vec::new();
            for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let p: usize = tok.parse().map_err(|_| bad("bad point"))?;
                if p == 0 {
                    return Err(bad("points are 1-based"));
                }
                cycle.push(p - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Perm::from_cycles(degree, &refs)
    }

    /// Parses a 1-based space-separated image list.
    pub fn parse_images(s: &str) -> Result<Perm> {
        let mut images = Vec::new();
        for tok in s.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("bad image {tok:?}"),
            })?;
            if v == 0 {
                return Err(Error::Parse {
                    line: 1,
                    msg: "images are 1-based".into(),
                });
            }
            images.push(v - 1);
        }
        if images.is_empty() {
            return Err(Error::Parse {
                line: 1,
                msg: "empty image list".into(),
            });
        }
        Perm::from_images(images)
    }
}

/// Composition `p ∘ q`, applying `p` first.
pub fn compose(p: &Perm, q: &Perm) -> Result<Perm> {
    p.try_compose(q)
}

/// `g⁻¹ p g`.
pub fn conjugate(p: &Perm, g: &Perm) -> Result<Perm> {
    p.try_conjugate(g)
}

fn check_degrees(a: &Perm, b: &Perm) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Canonical text form: 1-based image list.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.to_cycle_string())
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Accepts an image list; cycle notation needs a degree, see [`Perm::parse_cycles`].
    fn from_str(s: &str) -> Result<Perm> {
        Perm::parse_images(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize, cycles: &[&[usize]]) -> Perm {
        Perm::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        // 1 -(12)-> 2 -(23)-> 3; 2 -> 1 -> 1; 3 -> 3 -> 2.
        let p = c(3, &[&[0, 1]]);
        let q = c(3, &[&[1, 2]]);
        let pq = compose(&p, &q).unwrap();
        assert_eq!(pq.images().collect::<Vec<_>>(), vec![2, 0, 1]);
        let id = Perm::identity(3);
        assert_eq!(p.compose(&id), p);
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn conjugation_examples() {
        let t12 = c(3, &[&[0, 1]]);
        let t13 = c(3, &[&[0, 2]]);
        assert_eq!(conjugate(&t12, &t13).unwrap(), c(3, &[&[1, 2]]));
        assert_eq!(t12.conjugate(&Perm::identity(3)), t12);
        assert!(Perm::identity(3).conjugate(&t13).is_identity());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Perm::identity(3);
        let b = Perm::identity(4);
        assert!(matches!(compose(&a, &b), Err(Error::DegreeMismatch { .. })));
        assert!(matches!(
            conjugate(&a, &b),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn text_forms() {
        let p: Perm = "2 1 3".parse().unwrap();
        assert_eq!(p, c(3, &[&[0, 1]]));
        assert_eq!(p.to_string(), "2 1 3");
        assert_eq!(Perm::parse_cycles(3, "(1,2)").unwrap(), p);
        assert_eq!(
            Perm::parse_cycles(4, "(1 2 3)(4)").unwrap().to_string(),
            "2 3 1 4"
        );
        assert_eq!(p.to_cycle_string(), "(1,2)");
        assert!("1 1 2".parse::<Perm>().is_err());
        assert!("0 1".parse::<Perm>().is_err());
    }

    #[test]
    fn cycle_type_and_order() {
        let p = c(6, &[&[0, 1, 2], &[3, 4]]);
        assert_eq!(p.cycle_type(), vec![3, 2, 1]);
        assert_eq!(p.order(), 6);
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
    }

    #[test]
    fn commutator_matches_definition() {
        let a = c(4, &[&[0, 1, 2]]);
        let b = c(4, &[&[1, 3]]);
        let expected = a.inverse().compose(&b.inverse()).compose(&a).compose(&b);
        assert_eq!(a.commutator(&b), expected);
        assert_eq!(a.commutes_with(&b), a.commutator(&b).is_identity());
    }
}
